// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance               run all twelve
//   acceptance --criterion N run one
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdskit/cli.hpp"
#include "mdskit/mds.hpp"
#include "mdskit/structured.hpp"
#include "oracles.hpp"

using namespace mdskit;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;  // 0 = no time bound
    std::function<Outcome()> run;
};

std::string cat(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

std::string minor_text(const Minor& m) {
    auto list = [](const std::vector<std::size_t>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    return "rows" + list(m.rows) + " cols" + list(m.cols);
}

Field gf16() { return make_field(4, 0x13); }
Field gf256() { return make_field(8, 0x11D, Word{0x2}); }

FMatrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng) {
    FMatrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<Word>(rng() & f->mask());
    }
    return a;
}

// ---- 1 ---------------------------------------------------------------------

Outcome example3() {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x2});
    const Word a = 0x2, a3 = 0x8, a2a1 = 0x7;
    const FMatrix b = delta_theta_circulant(std::vector<Word>{1, a3, a, a2a1}, d);
    // printed B
    const oracle::Matrix printed{{0x1, 0x8, 0x2, 0x7}, {0x7, 0xF, 0xD, 0x3}, {0x2, 0x9, 0x4, 0x9}, {0xC, 0xD, 0xC, 0xB}};
    int equal = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) equal += b(i, j) == printed[i][j];
    }
    const MdsReport r = is_mds(b);
    std::string detail = str(equal) + "/16 entries equal; is_mds(B) = " + (r.is_mds ? "true" : "false");
    if (!r.is_mds) detail += " (first singular minor " + minor_text(*r.failing_minor) + ")";
    return {equal == 16 && r.is_mds, detail};
}

// ---- 2 ---------------------------------------------------------------------

Outcome example6() {
    Field f = gf16();
    const auto d = ThetaDerivation::zero(Automorphism(f, 2));
    const SkewPoly left(d, {0xA, 0x2, 0x1});  // X^2 + aX + a^3 + a
    const SkewPoly g(d, {0xC, 0x2, 0x1});     // X^2 + aX + a^3 + a^2
    const bool factor = skew_mul(left, g) == SkewPoly(d, {1, 0, 0, 0, 1});
    const FMatrix ng = quasi_recursive_product(g, 2, TwistFamily::Bracket);
    const bool printed = ng == FMatrix(f, {{0xC, 0x2}, {0x7, 0xC}});
    const bool inv = is_involutory(ng);
    const bool mds = is_mds(ng).is_mds;
    return {factor && printed && inv && mds,
            cat({"factorization ", factor ? "ok" : "WRONG", ", N_g ", printed ? "matches" : "differs", ", involutory ",
                 inv ? "yes" : "no", ", mds ", mds ? "yes" : "no"})};
}

// ---- 3 ---------------------------------------------------------------------

Outcome example7() {
    Field f = gf256();
    const auto d = ThetaDerivation::zero(Automorphism::identity(f));
    auto pw = [&](unsigned e) { return f->exp(e); };
    const SkewPoly g(d, {pw(10), pw(81), pw(251), pw(76), 1});
    // printed exponents of (g0, g1, g2, g3) for g_1..g_7
    const unsigned printed[7][4] = {{20, 162, 247, 152}, {40, 69, 239, 49},  {80, 138, 223, 98}, {160, 138, 191, 196},
                                    {65, 21, 127, 137},  {130, 42, 254, 19}, {5, 84, 253, 38}};
    std::string mismatches;
    int exact = 0;
    std::vector<SkewPoly> family{g};
    for (unsigned t = 1; t <= 7; ++t) {
        const SkewPoly gt = hadamard_power(g, std::uint64_t{1} << t);
        family.push_back(gt);
        bool ok = true;
        for (std::size_t j = 0; j < 4; ++j) {
            const Word c = gt.coeff(j);
            const unsigned e = static_cast<unsigned>(f->log(c));
            if (e != printed[t - 1][j]) {
                ok = false;
                mismatches += cat({mismatches.empty() ? "" : ", ", "g_", str(t), " coeff X^", str(j), ": printed a^",
                                   str(printed[t - 1][j]), ", computed a^", str(e)});
            }
        }
        exact += ok;
    }
    int mds = 0;
    for (const auto& h : family) {
        const FMatrix c = companion(h);
        const FMatrix c4 = c * c * c * c;
        mds += is_mds(c4).is_mds;
    }
    std::string detail = str(exact) + "/7 coefficient tuples exact; " + str(mds) + "/8 C^4 MDS";
    if (!mismatches.empty()) detail += " [" + mismatches + "]";
    return {exact == 7 && mds == 8, detail};
}

// ---- 4 ---------------------------------------------------------------------

Outcome example4() {
    const Word moduli[] = {0xB, 0x13, 0x25, 0x43, 0x89, 0x11D};
    bool all = true;
    std::string detail;
    for (unsigned n = 3; n <= 8; ++n) {
        Field f = make_field(n, moduli[n - 3]);
        const ThetaDerivation d(Automorphism(f, 1), Word{1});
        const bool mds = is_mds(delta_theta_circulant(std::vector<Word>{0x2, 0x1, 0x1}, d)).is_mds;
        if (n >= 5) all = all && mds;
        detail += cat({detail.empty() ? "" : ", ", "n=", str(n), ":", mds ? "MDS" : "not MDS", n < 5 ? " (info)" : ""});
    }
    return {all, detail};
}

// ---- 5 ---------------------------------------------------------------------

Outcome weight_oracle() {
    Field f = gf16();
    const ThetaDerivation d(Automorphism(f, 2), Word{0x6});  // a^4 fixes 0x6: commuting
    if (!d.commutes()) return {false, "ring setup: delta does not commute"};
    int agree2 = 0;
    for (Word a = 0; a < 16; ++a) {
        for (Word b = 0; b < 16; ++b) {
            const std::vector<Word> h{a, b};
            agree2 += weight_criterion_mds(SkewPoly(d, h), 2).holds == is_mds(delta_theta_circulant(h, d)).is_mds;
        }
    }
    std::mt19937_64 rng(5);
    int agree4 = 0, mds4 = 0;
    const int samples = 500;
    for (int i = 0; i < samples; ++i) {
        std::vector<Word> h(4);
        for (Word& w : h) w = rng() & 15;
        const bool mds = is_mds(delta_theta_circulant(h, d)).is_mds;
        mds4 += mds;
        agree4 += weight_criterion_mds(SkewPoly(d, h), 4).holds == mds;
    }
    return {agree2 == 256 && agree4 == samples,
            cat({"m=2: ", str(agree2), "/256 agree; m=4: ", str(agree4), "/", str(samples), " agree (", str(mds4),
                 " MDS)"})};
}

// ---- 6 ---------------------------------------------------------------------

Outcome inverse_both_ways() {
    Field f = gf16();
    std::mt19937_64 rng(6);
    int forward = 0, backward = 0, tried = 0, failures = 0;
    for (const ThetaDerivation& d : {ThetaDerivation::zero(Automorphism(f, 2)), ThetaDerivation(Automorphism(f, 2), Word{0x7}),
                                     ThetaDerivation(Automorphism(f, 0), Word{0})}) {
        for (std::size_t m : {2U, 4U}) {
            int invertible = 0;
            while (invertible < 20) {
                std::vector<Word> h(m);
                for (Word& w : h) w = rng() & 15;
                const FMatrix ch = delta_theta_circulant(h, d);
                const bool matrix_invertible = oracle::det(ch.to_rows(), 0x13) != 0;
                const auto g = inverse_mod_xm_minus_1(SkewPoly(d, h), m);
                ++tried;
                if (matrix_invertible != g.has_value()) {
                    ++failures;
                    continue;
                }
                if (!g) continue;
                ++invertible;
                std::vector<Word> gc(m);
                for (std::size_t j = 0; j < m; ++j) gc[j] = g->coeff(j);
                // polynomial inverse -> matrix inverse
                forward += (delta_theta_circulant(gc, d) * ch).is_identity();
                // matrix inverse -> polynomial inverse
                const FMatrix inv = mat_inv(ch);
                const std::vector<Word> row(inv.row(0).begin(), inv.row(0).end());
                const bool is_circ = delta_theta_circulant(row, d) == inv;
                backward += is_circ && mod_xm_minus_1(skew_mul(SkewPoly(d, row), SkewPoly(d, h)), m) == SkewPoly::one(d);
            }
        }
    }
    const int total = 3 * 2 * 20;
    return {forward == total && backward == total && failures == 0,
            cat({str(forward), "/", str(total), " C_g C_h = I; ", str(backward), "/", str(total),
                 " inverse circulants give g*h = 1; ", str(failures), " invertibility disagreements in ", str(tried),
                 " draws"})};
}

// ---- 7 and 11 --------------------------------------------------------------

std::vector<SkewPoly> divisors_x4_minus_1(const ThetaDerivation& d) {
    std::vector<SkewPoly> out;
    const SkewPoly x4 = SkewPoly::x_pow_minus_one(d, 4);
    for (Word a = 0; a < 16; ++a) {
        for (Word b = 0; b < 16; ++b) {
            const SkewPoly g(d, {a, b, 1});
            if (right_rem(x4, g).is_zero()) out.push_back(g);
        }
    }
    return out;
}

Outcome involution_sweep() {
    const auto d = ThetaDerivation::zero(Automorphism(gf16(), 2));
    const auto divs = divisors_x4_minus_1(d);
    int inv = 0, mds = 0;
    for (const auto& g : divs) {
        const FMatrix ng = quasi_recursive_product(g, 2, TwistFamily::Bracket);
        inv += oracle::matmul(ng.to_rows(), ng.to_rows(), 0x13) == FMatrix::identity(ng.field(), 2).to_rows();
        mds += oracle::is_mds(ng.to_rows(), 0x13);
    }
    return {!divs.empty() && inv == static_cast<int>(divs.size()),
            cat({str(divs.size()), " monic degree-2 right divisors; ", str(inv), " involutory; ", str(mds), " also MDS"})};
}

Outcome reciprocal_preservation() {
    const auto d = ThetaDerivation::zero(Automorphism(gf16(), 2));
    int found = 0, kept = 0;
    for (const auto& g : divisors_x4_minus_1(d)) {
        const FMatrix ng = quasi_recursive_product(g, 2, TwistFamily::Bracket);
        if (!is_involutory(ng) || !is_mds(ng).is_mds) continue;
        ++found;
        const FMatrix nr = quasi_recursive_product(reciprocal(g), 2, TwistFamily::Bracket);
        kept += is_involutory(nr) && oracle::is_mds(nr.to_rows(), 0x13);
    }
    return {found > 0 && kept == found, cat({str(kept), "/", str(found), " involutory MDS N_g keep both properties under g -> g*"})};
}

// ---- 8 ---------------------------------------------------------------------

Outcome recursion_identity() {
    std::mt19937_64 rng(8);
    std::vector<SkewPoly> polys;
    polys.emplace_back(ThetaDerivation::zero(Automorphism(gf16(), 2)), std::vector<Word>{0xC, 0x2, 0x1});
    Field f16 = gf16(), f256 = gf256();
    for (int i = 0; i < 24; ++i) {
        const Field& f = i % 2 ? f256 : f16;
        const auto d = ThetaDerivation::zero(Automorphism(f, static_cast<unsigned>(rng() % f->degree())));
        std::vector<Word> c(2 + rng() % 3 + 1);
        for (Word& w : c) w = rng() & f->mask();
        c.back() = 1;
        polys.emplace_back(d, c);
    }
    int ok = 0, identities = 0;
    for (const auto& g : polys) {
        const auto m = static_cast<unsigned>(g.degree());
        bool all = true;
        for (unsigned i = 1; i <= 2 * m; ++i) {
            ++identities;
            all = all && quasi_recursive_product(g, i, TwistFamily::Bracket) == stacked_remainders(g, i);
        }
        ok += all;
    }
    return {ok == static_cast<int>(polys.size()),
            cat({str(ok), "/", str(polys.size()), " polynomials (", str(identities), " identities, i <= 2m)"})};
}

// ---- 9 ---------------------------------------------------------------------

Outcome twist_laws() {
    Field f = gf16();
    std::vector<ThetaDerivation> commuting;
    for (unsigned k = 0; k < 4; ++k) {
        for (Word b = 0; b < 16; ++b) {
            ThetaDerivation d(Automorphism(f, k), b);
            if (d.commutes()) commuting.push_back(d);
        }
    }
    std::uint64_t composition = 0, composition_bad = 0;
    for (const auto& d : commuting) {
        for (Word a = 0; a < 16; ++a) {
            for (unsigned i = 0; i <= 4; ++i) {
                for (unsigned j = 0; j <= 4; ++j) {
                    ++composition;
                    composition_bad += hat(d, hat(d, a, i), j) != hat(d, a, i + j);
                }
            }
        }
    }
    std::uint64_t scalar = 0, scalar_bad = 0;
    for (const auto& d : commuting) {
        for (const auto& c : fixed_field(d.theta())) {
            for (Word b = 0; b < 16; ++b) {
                for (unsigned i = 0; i <= 4; ++i) {
                    ++scalar;
                    scalar_bad += hat(d, f->mul(c.bits(), b), i) != f->mul(c.bits(), hat(d, b, i));
                }
            }
        }
    }
    std::mt19937_64 rng(9);
    int diag_bad = 0, perm_bad = 0, bracket_bad = 0;
    const int n = 1000;
    for (int it = 0; it < n; ++it) {
        const ThetaDerivation& d = commuting[rng() % commuting.size()];
        const auto fixed = fixed_field(d.theta());
        const std::size_t m = 2 + rng() % 3;
        std::vector<Word> dg(m);
        for (Word& w : dg) w = fixed[rng() % fixed.size()].bits();
        const FMatrix dm = FMatrix::diagonal(f, dg);
        const FMatrix a = random_matrix(f, m, rng), b = random_matrix(f, m, rng);
        const auto t = TwistKind::angle(static_cast<unsigned>(rng() % 6));
        diag_bad += !(twist_matrix(d, dm * a, t) == twist_matrix(d, dm, t) * twist_matrix(d, a, t));

        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const FMatrix p = FMatrix::permutation(f, perm);
        perm_bad += !(twist_matrix(d, p * a, t) == twist_matrix(d, p, t) * twist_matrix(d, a, t));

        const ThetaDerivation any(Automorphism(f, rng() % 4), static_cast<Word>(rng() & 15));
        const auto br = TwistKind::bracket(static_cast<unsigned>(rng() % 8));
        bracket_bad += !(twist_matrix(any, a * b, br) == twist_matrix(any, a, br) * twist_matrix(any, b, br));
    }
    const ThetaDerivation d5(Automorphism(f, 2), Word{0x6});
    const FMatrix a5(f, {{0x1, 0x0}, {0x2, 0x2}}), b5(f, {{0x0, 0x1}, {0x2, 0x2}});
    const bool counterexample =
        !(twist_matrix(d5, a5 * b5, TwistKind::angle(1)) ==
          twist_matrix(d5, a5, TwistKind::angle(1)) * twist_matrix(d5, b5, TwistKind::angle(1)));
    const bool pass = composition_bad == 0 && scalar_bad == 0 && diag_bad == 0 && perm_bad == 0 && bracket_bad == 0 &&
                      counterexample;
    return {pass, cat({"composition ", str(composition - composition_bad), "/", str(composition), ", scalar ",
                       str(scalar - scalar_bad), "/", str(scalar), ", diagonal ", str(n - diag_bad), "/", str(n),
                       ", permutation ", str(n - perm_bad), "/", str(n), ", bracket ", str(n - bracket_bad), "/", str(n),
                       ", counterexample ", counterexample ? "holds" : "MISSING"})};
}

// ---- 10 --------------------------------------------------------------------

Outcome similarity() {
    Field f = gf16();
    std::mt19937_64 rng(10);
    const std::vector<ThetaDerivation> rings{ThetaDerivation(Automorphism(f, 2), Word{0x6}),
                                             ThetaDerivation::zero(Automorphism(f, 1)),
                                             ThetaDerivation(Automorphism(f, 2), Word{1})};
    int diag_same = 0, perm_same = 0, mds_before = 0;
    const int n = 120;
    for (int it = 0; it < n; ++it) {
        const ThetaDerivation& d = rings[it % rings.size()];
        const std::size_t m = 2 + rng() % 2;
        // an MDS circulant half of the time, so both verdicts occur
        FMatrix a = random_matrix(f, m, rng);
        if (it % 2 == 0) {
            std::vector<Word> row(m);
            for (Word& w : row) w = 1 + rng() % 15;
            a = delta_theta_circulant(row, d);
        }
        const auto fixed = fixed_field(d.theta());
        std::vector<Word> dg(m);
        for (Word& w : dg) {
            do {
                w = fixed[rng() % fixed.size()].bits();
            } while (w == 0);
        }
        const unsigned r = 2 + static_cast<unsigned>(rng() % 2);
        const auto [b1, a1] = similarity_preserves_quasi_mds(a, d, r, FMatrix::diagonal(f, dg));
        diag_same += b1 == a1;
        mds_before += b1;
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto [b2, a2] = similarity_preserves_quasi_mds(a, d, r, FMatrix::permutation(f, perm));
        perm_same += b2 == a2;
    }
    return {diag_same == n && perm_same == n,
            cat({"(M,D): ", str(diag_same), "/", str(n), " equal; (M,P): ", str(perm_same), "/", str(n),
                 " equal; quasi-MDS before conjugation in ", str(mds_before)})};
}

// ---- 12 --------------------------------------------------------------------

Outcome classical_nonexistence() {
    cli::SearchConfig c;
    c.field = gf16();
    c.m = 4;
    c.mode = cli::SearchMode::Circulant;
    c.require_mds = true;
    c.require_involutory = true;
    const auto res = cli::run_search(c);
    return {res.exhaustive && res.examined == 65536 && res.records.empty(),
            cat({res.exhaustive ? "exhaustive" : "sampled", ", examined ", str(res.examined), ", found ",
                 str(res.records.size())})};
}

std::vector<Criterion> criteria() {
    return {
        {1, "Example 3 reproduction", 1, example3},
        {2, "Example 6 reproduction", 1, example6},
        {3, "Example 7 reproduction", 10, example7},
        {4, "Example 4 reproduction", 1, example4},
        {5, "weight criterion equals minor test", 30, weight_oracle},
        {6, "polynomial and matrix inverses agree", 30, inverse_both_ways},
        {7, "involution sweep over divisors of X^4 - 1", 10, involution_sweep},
        {8, "partial products equal stacked remainders", 0, recursion_identity},
        {9, "twist-calculus laws", 0, twist_laws},
        {10, "similarity invariance of quasi-MDS", 0, similarity},
        {11, "reciprocal preserves involutory MDS", 0, reciprocal_preservation},
        {12, "no involutory MDS classical circulant, m = 4", 60, classical_nonexistence},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::optional<int> only;
    app.add_option("--criterion", only, "run a single criterion (1-12)")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true;
    for (const auto& c : criteria()) {
        if (only && *only != c.id) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s) {
            o.pass = false;
            o.detail += " [over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget]";
        }
        all_pass = all_pass && o.pass;
        char head[64];
        std::snprintf(head, sizeof head, "C%02d %s  %.3f s  ", c.id, o.pass ? "PASS" : "FAIL", secs);
        std::cout << head << c.title << ": " << o.detail << std::endl;
    }
    return all_pass ? 0 : 1;
}
