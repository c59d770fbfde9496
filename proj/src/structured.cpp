#include "mdskit/structured.hpp"

#include <bit>

namespace mdskit {

namespace {

void require_monic(const SkewPoly& g, const char* who) {
    if (!g.is_monic() || g.degree() < 1) {
        throw Error(ErrorCode::NotMonic, std::string(who) + " needs a monic polynomial of degree >= 1");
    }
}

}  // namespace

FMatrix delta_theta_circulant(std::span<const Word> first_row, const ThetaDerivation& d,
                              Diagnostics* diag) {
    const std::size_t m = first_row.size();
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty first row");
    FMatrix out(d.field(), m, m);
    for (std::size_t t = 0; t < m; ++t) out.set(0, t, first_row[t]);
    for (std::size_t j = 0; j + 1 < m; ++j) {
        for (std::size_t t = 0; t < m; ++t) {
            out(j + 1, t) = d.delta(out(j, t)) ^ d.theta().apply(out(j, (t + m - 1) % m));
        }
    }
    if (diag != nullptr) {
        if (auto why = xm_minus_1_obstruction(d, m)) {
            diag->warnings.push_back("no quotient-ring semantics for this matrix: " + *why);
        }
    }
    return out;
}

FMatrix delta_theta_circulant_closed_form(std::span<const Word> h, const ThetaDerivation& d) {
    if (!d.commutes()) {
        throw Error(ErrorCode::NonCommutingDerivation,
                    "closed form needs delta o theta = theta o delta");
    }
    const std::size_t m = h.size();
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty first row");
    for (Word w : h) {
        if (!d.field()->contains(w)) throw Error(ErrorCode::InvalidArgument, "entry outside field");
    }
    FMatrix out(d.field(), m, m);
    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t u = 0; u < m; ++u) {
            Word sum = 0;
            for (std::size_t i = 0; i <= s; ++i) {
                if (!binomial_is_odd(s, i)) continue;
                const Word shifted = h[(u + m * (i / m + 1) - i) % m];  // sigma^i(h_u) = h_{u-i}
                sum ^= d.theta().apply_power(d.delta_power(shifted, s - i), i);
            }
            out(s, u) = sum;
        }
    }
    return out;
}

FMatrix right_multiplication_matrix(const SkewPoly& h, std::size_t m) {
    FMatrix out(h.field(), m, m);
    SkewPoly row = fold_xm_minus_1(h, m);
    for (std::size_t k = 0; k < m; ++k) {
        if (k > 0) row = fold_xm_minus_1(x_times(row), m);
        for (std::size_t j = 0; j < m; ++j) out(k, j) = row.coeff(j);
    }
    return out;
}

FMatrix companion(const SkewPoly& g) {
    require_monic(g, "companion");
    const auto m = static_cast<std::size_t>(g.degree());
    FMatrix out(g.field(), m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) out(i, i + 1) = 1;
    for (std::size_t j = 0; j < m; ++j) out(m - 1, j) = g.coeff(j);
    return out;
}

FMatrix companion_inverse(const SkewPoly& g, unsigned i) {
    require_monic(g, "companion_inverse");
    if (g.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "g(0) = 0, companion is singular");
    const auto m = static_cast<std::size_t>(g.degree());
    const GaloisField& f = *g.field();
    const Automorphism& theta = g.ring().theta();
    const Word inv_g0 = f.inv(theta.apply_power(g.coeff(0), i));
    FMatrix out(g.field(), m, m);
    for (std::size_t j = 1; j < m; ++j) out(0, j - 1) = f.mul(theta.apply_power(g.coeff(j), i), inv_g0);
    out(0, m - 1) = inv_g0;
    for (std::size_t r = 1; r < m; ++r) out(r, r - 1) = 1;
    return out;
}

FMatrix quasi_recursive_product(const FMatrix& m, const ThetaDerivation& d, unsigned r,
                                TwistFamily family) {
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
    if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "quasi-recursive product of non-square matrix");
    if (family == TwistFamily::Angle && !d.commutes()) {
        throw Error(ErrorCode::NonCommutingDerivation, "angle twists need delta o theta = theta o delta");
    }
    // Highest twist leftmost: M^(r-1) * ... * M^(1) * M.
    FMatrix product = m;
    for (unsigned i = 1; i < r; ++i) {
        const TwistKind t = family == TwistFamily::Bracket ? TwistKind::bracket(i) : TwistKind::angle(i);
        product = twist_matrix(d, m, t) * product;
    }
    return product;
}

FMatrix quasi_recursive_product(const SkewPoly& g, unsigned r, TwistFamily family) {
    return quasi_recursive_product(companion(g), g.ring(), r, family);
}

FMatrix involutory_quasi_recursive(const SkewPoly& g) {
    require_monic(g, "involutory_quasi_recursive");
    const ThetaDerivation& d = g.ring();
    if (!d.is_zero()) throw Error(ErrorCode::InvalidArgument, "involutory construction needs delta = 0");
    const auto m = static_cast<std::size_t>(g.degree());
    const unsigned order = d.theta().order();
    if (m % order != 0) {
        throw Error(ErrorCode::InvalidArgument,
                    "theta^m != id: order " + std::to_string(order) + " does not divide m = " + std::to_string(m));
    }
    if ((2 * m) % order != 0) {
        throw Error(ErrorCode::NonCentralModulus, "order of theta does not divide 2m");
    }
    if (!is_right_divisor(g, SkewPoly::x_pow_minus_one(d, 2 * m))) {
        throw Error(ErrorCode::NotDivisor, "g does not right-divide X^(2m) - 1");
    }
    return quasi_recursive_product(g, static_cast<unsigned>(m), TwistFamily::Bracket);
}

FMatrix stacked_remainders(const SkewPoly& g, std::size_t i) {
    require_monic(g, "stacked_remainders");
    const auto m = static_cast<std::size_t>(g.degree());
    FMatrix out(g.field(), m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const SkewPoly r = right_rem(SkewPoly::monomial(g.ring(), i + k), g);
        for (std::size_t j = 0; j < m; ++j) out(k, j) = r.coeff(j);
    }
    return out;
}

ThetaCyclicCode theta_cyclic_generator(const SkewPoly& g, std::size_t n) {
    require_monic(g, "theta_cyclic_generator");
    const ThetaDerivation& d = g.ring();
    const auto m = static_cast<std::size_t>(g.degree());
    if (n < m) throw Error(ErrorCode::InvalidArgument, "code length below deg g");
    if (n % d.theta().order() != 0) {
        throw Error(ErrorCode::NonCentralModulus, "order of theta does not divide n");
    }
    if (!is_right_divisor(g, SkewPoly::x_pow_minus_one(d, n))) {
        throw Error(ErrorCode::NotDivisor, "g does not right-divide X^n - 1");
    }
    const std::size_t k = n - m;
    FMatrix gen(g.field(), k, n);
    FMatrix sys(g.field(), k, n);
    SkewPoly row = g;
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) row = x_times(row);
        for (std::size_t j = 0; j < n; ++j) gen(i, j) = row.coeff(j);
        const SkewPoly red = right_rem(SkewPoly::monomial(d, m + i), g);
        for (std::size_t j = 0; j < m; ++j) sys(i, j) = red.coeff(j);
        sys(i, m + i) = 1;
    }
    std::optional<FMatrix> redundant;
    if (n == 2 * m) {
        FMatrix block(g.field(), m, m);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) block(i, j) = sys(i, j);
        }
        redundant = std::move(block);
    }
    return {std::move(gen), std::move(sys), std::move(redundant)};
}

bool entries_fixed_by(const FMatrix& a, const Automorphism& theta) {
    for (Word w : a.entries()) {
        if (theta.apply(w) != w) return false;
    }
    return true;
}

FMatrix diag_similar(const FMatrix& m, const FMatrix& d, const Automorphism* theta, Diagnostics* diag) {
    if (!d.is_diagonal()) throw Error(ErrorCode::NotDiagonal, "conjugator is not diagonal");
    if (theta != nullptr && diag != nullptr && !entries_fixed_by(d, *theta)) {
        diag->warnings.push_back("diagonal entries outside the fixed field of theta");
    }
    return d * m * mat_inv(d);
}

FMatrix perm_similar(const FMatrix& m, const FMatrix& p) {
    if (!p.is_permutation()) throw Error(ErrorCode::NotPermutation, "conjugator is not a permutation matrix");
    return p * m * mat_inv(p);
}

FMatrix reversal_matrix(Field field, std::size_t n) {
    FMatrix out(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1 - i) = 1;
    return out;
}

FMatrix cyclic_shift_matrix(Field field, std::size_t n) {
    FMatrix out(std::move(field), n, n);
    // Row 0 is (0, ..., 0, 1); each later row is the previous shifted right.
    for (std::size_t i = 0; i < n; ++i) out(i, (n - 1 + i) % n) = 1;
    return out;
}

}  // namespace mdskit
