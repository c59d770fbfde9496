#include <doctest.h>

#include <random>

#include "mdskit/matrix.hpp"
#include "mdskit/twist.hpp"
#include "oracles.hpp"

using namespace mdskit;

namespace {

Field gf16() { return make_field(4, 0x13); }

// All (k, beta) pairs over GF(16) with a commuting nonzero derivation, plus
// delta = 0 for each k.
std::vector<ThetaDerivation> commuting_rings(const Field& f) {
    std::vector<ThetaDerivation> out;
    for (unsigned k = 0; k < f->degree(); ++k) {
        for (Word beta = 0; beta < f->size(); ++beta) {
            ThetaDerivation d(Automorphism(f, k), beta);
            if (d.commutes()) out.push_back(d);
        }
    }
    return out;
}

FMatrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::vector<Word> e(r * c);
    for (Word& w : e) w = rng() & f->mask();
    return FMatrix(f, r, c, e);
}

}  // namespace

TEST_CASE("delta examples") {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x2});  // beta = a, theta = a^4
    CHECK(d.delta(1) == 0);
    CHECK(d.delta(0x2) == 0x2);  // a (a^4 + a) = a
    CHECK(delta_eval(d, FieldElement(f, 0x2)).bits() == 0x2);
    for (Word c : {0x0, 0x1, 0x6, 0x7}) CHECK(d.delta(c) == 0);  // fixed field of a^4
    CHECK(d.delta(1) == 0);
}

TEST_CASE("iterated delta") {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 1), Word{1});
    const FieldElement a(f, 0x2);
    CHECK(delta_iter(d, a, 0) == a);
    CHECK(delta_iter(d, a, 1) == delta_eval(d, a));
    CHECK(d.delta(0x2) == 0x6);  // a^2 + a
    CHECK(delta_iter(d, a, 2).bits() == 1);
}

TEST_CASE("commutation test") {
    Field f = gf16();
    CHECK(commutes(ThetaDerivation(Automorphism(f, 1), Word{1})).commutes);
    const auto r = commutes(ThetaDerivation(Automorphism(f, 1), Word{0x2}));
    REQUIRE_FALSE(r.commutes);
    REQUIRE(r.witness.has_value());
    const ThetaDerivation d(Automorphism(f, 1), Word{0x2});
    const Word w = r.witness->bits();
    CHECK(d.delta(d.theta().apply(w)) != d.theta().apply(d.delta(w)));
    CHECK(commutes(ThetaDerivation::zero(Automorphism(f, 3))).commutes);
}

TEST_CASE("delta commutes with theta exactly when theta fixes beta") {
    for (auto [m, mod] : {std::pair{4U, Word{0x13}}, {6U, Word{0x43}}}) {
        Field f = make_field(m, mod);
        for (unsigned k = 0; k < m; ++k) {
            const Automorphism theta(f, k);
            for (Word beta = 0; beta < f->size(); ++beta) {
                const ThetaDerivation d(theta, beta);
                bool scan = true;
                for (Word a = 0; a < f->size() && scan; ++a) {
                    scan = d.delta(theta.apply(a)) == theta.apply(d.delta(a));
                }
                REQUIRE(d.commutes() == scan);
                REQUIRE(d.commutes() == (k == 0 || theta.apply(beta) == beta));
            }
        }
    }
}

TEST_CASE("every inner derivation satisfies the Leibniz rule") {
    Field f = gf16();
    for (unsigned k = 0; k < 4; ++k) {
        for (Word beta = 0; beta < 16; ++beta) {
            const ThetaDerivation d(Automorphism(f, k), beta);
            REQUIRE(satisfies_leibniz(d));
            // independent spot check with the oracle field
            for (Word a = 0; a < 16; ++a) {
                for (Word b = 0; b < 16; ++b) {
                    const Word lhs = d.delta(oracle::mul(a, b, 0x13));
                    const Word rhs = oracle::mul(d.delta(a), b, 0x13) ^
                                     oracle::mul(oracle::frob(a, k, 0x13), d.delta(b), 0x13);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("binomial parity") {
    std::vector<std::vector<int>> pascal(64);
    for (std::size_t n = 0; n < 64; ++n) {
        pascal[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] ^ pascal[n - 1][k];
        for (std::size_t k = 0; k <= n; ++k) REQUIRE(binomial_is_odd(n, k) == (pascal[n][k] == 1));
    }
    CHECK_FALSE(binomial_is_odd(3, 4));
}

TEST_CASE("hat operator basics") {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x6});
    for (Word a = 0; a < 16; ++a) {
        CHECK(hat(d, a, 0) == a);
        CHECK(hat(d, a, 1) == (d.delta(a) ^ d.theta().apply(a)));
    }
    const ThetaDerivation zero = ThetaDerivation::zero(Automorphism(f, 1));
    for (Word a = 0; a < 16; ++a) {
        for (unsigned i = 0; i < 9; ++i) CHECK(hat(zero, a, i) == zero.theta().apply_power(a, i));
    }
}

TEST_CASE("both hat paths agree for commuting pairs and can differ otherwise") {
    Field f = gf16();
    for (const auto& d : commuting_rings(f)) {
        for (Word a = 0; a < 16; ++a) {
            for (unsigned i = 0; i <= 8; ++i) REQUIRE(hat_binomial(d, a, i) == hat_recurrence(d, a, i));
        }
    }
    bool differs = false;
    const ThetaDerivation nc(Automorphism(f, 1), Word{0x2});
    REQUIRE_FALSE(nc.commutes());
    for (Word a = 0; a < 16 && !differs; ++a) {
        for (unsigned i = 2; i <= 4 && !differs; ++i) differs = hat_binomial(nc, a, i) != hat_recurrence(nc, a, i);
    }
    CHECK(differs);
    // hat() takes the binomial sum for non-commuting pairs
    for (Word a = 0; a < 16; ++a) CHECK(hat(nc, a, 3) == hat_binomial(nc, a, 3));
}

TEST_CASE("hat composition law") {
    Field f = gf16();
    for (const auto& d : commuting_rings(f)) {
        const unsigned bound = 2 * d.theta().order();
        for (Word a = 0; a < 16; ++a) {
            for (unsigned i = 0; i <= bound; ++i) {
                for (unsigned j = 0; j <= bound; ++j) REQUIRE(hat(d, hat(d, a, i), j) == hat(d, a, i + j));
            }
        }
    }
}

TEST_CASE("fixed-field scalars pull out of hat") {
    Field f = gf16();
    for (const auto& d : commuting_rings(f)) {
        for (const auto& c : fixed_field(d.theta())) {
            for (Word b = 0; b < 16; ++b) {
                for (unsigned i = 0; i <= 6; ++i) {
                    REQUIRE(hat(d, f->mul(c.bits(), b), i) == f->mul(c.bits(), hat(d, b, i)));
                }
            }
        }
    }
}

TEST_CASE("twist_matrix identities") {
    Field f = gf16();
    std::mt19937_64 rng(3);
    const ThetaDerivation d(Automorphism(f, 1), Word{1});
    const FMatrix a = random_matrix(f, 3, 3, rng);
    CHECK(twist_matrix(d, a, TwistKind::bracket(0)) == a);
    CHECK(twist_matrix(d, a, TwistKind::angle(0)) == a);
    CHECK(twist_matrix(d, a, TwistKind::bracket(d.theta().order())) == a);
    const ThetaDerivation zero = ThetaDerivation::zero(Automorphism(f, 1));
    for (unsigned i = 0; i < 6; ++i) {
        CHECK(twist_matrix(zero, a, TwistKind::angle(i)) == twist_matrix(zero, a, TwistKind::bracket(i)));
    }
}

TEST_CASE("angle twist is not multiplicative in general") {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x6});  // beta = a^2 + a
    const FMatrix a(f, {{0x1, 0x0}, {0x2, 0x2}});
    const FMatrix b(f, {{0x0, 0x1}, {0x2, 0x2}});
    const auto t = TwistKind::angle(1);
    CHECK_FALSE(twist_matrix(d, a * b, t) == twist_matrix(d, a, t) * twist_matrix(d, b, t));
}

TEST_CASE("bracket twist is multiplicative") {
    Field f = gf16();
    std::mt19937_64 rng(11);
    for (int n = 0; n < 1000; ++n) {
        const ThetaDerivation d(Automorphism(f, rng() % 4), static_cast<Word>(rng() & 15));
        const std::size_t r = 1 + rng() % 4, k = 1 + rng() % 4, c = 1 + rng() % 4;
        const FMatrix a = random_matrix(f, r, k, rng), b = random_matrix(f, k, c, rng);
        const auto t = TwistKind::bracket(static_cast<unsigned>(rng() % 8));
        REQUIRE(twist_matrix(d, a * b, t) == twist_matrix(d, a, t) * twist_matrix(d, b, t));
    }
}

TEST_CASE("diagonal fixed-field matrices distribute over angle twists") {
    Field f = gf16();
    const auto rings = commuting_rings(f);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 1000; ++n) {
        const ThetaDerivation& d = rings[rng() % rings.size()];
        const auto fixed = fixed_field(d.theta());
        const std::size_t m = 1 + rng() % 4;
        std::vector<Word> diag(m);
        for (Word& w : diag) w = fixed[rng() % fixed.size()].bits();
        const FMatrix dm = FMatrix::diagonal(f, diag);
        const FMatrix a = random_matrix(f, m, m, rng);
        const auto t = TwistKind::angle(static_cast<unsigned>(rng() % 6));
        REQUIRE(twist_matrix(d, dm * a, t) == twist_matrix(d, dm, t) * twist_matrix(d, a, t));
        REQUIRE(twist_matrix(d, a * dm, t) == twist_matrix(d, a, t) * twist_matrix(d, dm, t));
    }
}

TEST_CASE("permutation matrices distribute over every twist") {
    Field f = gf16();
    std::mt19937_64 rng(9);
    for (int n = 0; n < 1000; ++n) {
        const ThetaDerivation d(Automorphism(f, rng() % 4), static_cast<Word>(rng() & 15));
        const std::size_t m = 1 + rng() % 5;
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const FMatrix p = FMatrix::permutation(f, perm);
        const FMatrix a = random_matrix(f, m, m, rng);
        const unsigned i = static_cast<unsigned>(rng() % 6);
        for (auto t : {TwistKind::angle(i), TwistKind::bracket(i)}) {
            REQUIRE(twist_matrix(d, p * a, t) == twist_matrix(d, p, t) * twist_matrix(d, a, t));
            REQUIRE(twist_matrix(d, a * p, t) == twist_matrix(d, a, t) * twist_matrix(d, p, t));
        }
    }
}

TEST_CASE("apply_twist dispatch") {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x7});
    for (Word a = 0; a < 16; ++a) {
        CHECK(apply_twist(d, a, TwistKind::bracket(1)) == d.theta().apply(a));
        CHECK(apply_twist(d, a, TwistKind::angle(3)) == hat(d, a, 3));
    }
    CHECK(hat(d, FieldElement(f, 0x9), 2).bits() == hat(d, Word{0x9}, 2));
}
