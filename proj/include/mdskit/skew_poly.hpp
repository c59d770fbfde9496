#pragma once

// The skew polynomial ring F_q[X; theta, delta]: X * a = theta(a) X + delta(a),
// a * X = aX. Right Euclidean, so only right division is offered.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdskit/twist.hpp"

namespace mdskit {

class SkewPoly {
public:
    /// Coefficients low-to-high; trailing zeros are stripped.
    SkewPoly(ThetaDerivation ring, std::vector<Word> coeffs);
    explicit SkewPoly(ThetaDerivation ring) : ring_(std::move(ring)) {}

    static SkewPoly zero(const ThetaDerivation& ring) { return SkewPoly(ring); }
    static SkewPoly one(const ThetaDerivation& ring) { return SkewPoly(ring, {1}); }
    static SkewPoly constant(const ThetaDerivation& ring, Word c) { return SkewPoly(ring, {c}); }
    /// c X^n
    static SkewPoly monomial(const ThetaDerivation& ring, std::size_t n, Word c = 1);
    /// X^n - 1
    static SkewPoly x_pow_minus_one(const ThetaDerivation& ring, std::size_t n);

    const ThetaDerivation& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_.field(); }
    const std::vector<Word>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Word coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Word leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + b; }
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);

private:
    void normalize();

    ThetaDerivation ring_;
    std::vector<Word> c_;
};

void require_same_ring(const SkewPoly& a, const SkewPoly& b);

/// X * f
SkewPoly x_times(const SkewPoly& f);
/// Scalar on the left: c * f (no twist; a * X = aX).
SkewPoly scale_left(Word c, const SkewPoly& f);

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

struct DivMod {
    SkewPoly quotient;
    SkewPoly remainder;
};

/// f = q * g + r with deg r < deg g.
DivMod right_divmod(const SkewPoly& f, const SkewPoly& g);
SkewPoly right_rem(const SkewPoly& f, const SkewPoly& g);

/// Why X^m - 1 does not generate a two-sided ideal in this ring, or nullopt
/// when it does. Requires |theta| | m and delta commuting with theta; for
/// delta != 0 additionally m a power of two.
std::optional<std::string> xm_minus_1_obstruction(const ThetaDerivation& ring, std::size_t m);

/// Remainder of right division by X^m - 1. Throws NonCentralModulus when the
/// quotient is not a ring.
SkewPoly mod_xm_minus_1(const SkewPoly& f, std::size_t m);
/// Same remainder without the ideal check. The remainder of a left multiple
/// stays well defined for any ring since R*(X^m - 1) is a left ideal.
SkewPoly fold_xm_minus_1(const SkewPoly& f, std::size_t m);

/// Left inverse of h modulo X^m - 1 by extended right division:
/// g with g * h = 1 mod (X^m - 1), deg g < m. nullopt when the right gcd of
/// h and X^m - 1 is not a unit. Throws NonCentralModulus like mod_xm_minus_1.
std::optional<SkewPoly> inverse_mod_xm_minus_1(const SkewPoly& h, std::size_t m);

/// Number of nonzero coefficients.
std::size_t weight(const SkewPoly& f);

/// Reciprocal of a monic degree-m polynomial with g(0) != 0 (delta = 0):
/// X^m + sum_j theta^m(g_j)/theta^m(g_0) X^(m-j) + 1/theta^m(g_0).
SkewPoly reciprocal(const SkewPoly& g);

/// Coefficientwise s-th power.
SkewPoly hadamard_power(const SkewPoly& g, std::uint64_t s);
/// Coefficientwise product up to the smaller degree.
SkewPoly hadamard_product(const SkewPoly& p, const SkewPoly& q);

bool is_right_divisor(const SkewPoly& g, const SkewPoly& f);

/// X^n mod *g, computed incrementally.
SkewPoly x_power_mod(std::uint64_t n, const SkewPoly& g);

/// Least n <= n_max, a multiple of |theta|, with g a right divisor of X^n - 1.
std::optional<std::uint64_t> poly_order(const SkewPoly& g, std::uint64_t n_max);
/// Default search bound for poly_order: |theta| * q^deg(g).
std::uint64_t default_order_bound(const SkewPoly& g);

}  // namespace mdskit
