#include "mdskit/skew_poly.hpp"

#include <algorithm>
#include <bit>

namespace mdskit {

SkewPoly::SkewPoly(ThetaDerivation ring, std::vector<Word> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
    for (Word w : c_) {
        if (!field()->contains(w)) throw Error(ErrorCode::InvalidArgument, "coefficient outside field");
    }
    normalize();
}

void SkewPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SkewPoly SkewPoly::monomial(const ThetaDerivation& ring, std::size_t n, Word c) {
    std::vector<Word> coeffs(n + 1, 0);
    coeffs[n] = c;
    return SkewPoly(ring, std::move(coeffs));
}

SkewPoly SkewPoly::x_pow_minus_one(const ThetaDerivation& ring, std::size_t n) {
    std::vector<Word> coeffs(n + 1, 0);
    coeffs[n] ^= 1;
    coeffs[0] ^= 1;
    return SkewPoly(ring, std::move(coeffs));
}

void require_same_ring(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.ring() == b.ring())) {
        throw Error(ErrorCode::ContextMismatch, "polynomials belong to different skew rings");
    }
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    std::vector<Word> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] ^= a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] ^= b.c_[i];
    return SkewPoly(a.ring_, std::move(out));
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return skew_mul(a, b); }

SkewPoly x_times(const SkewPoly& f) {
    const ThetaDerivation& d = f.ring();
    const auto& c = f.coeffs();
    std::vector<Word> out(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        out[j + 1] ^= d.theta().apply(c[j]);
        out[j] ^= d.delta(c[j]);
    }
    return SkewPoly(d, std::move(out));
}

SkewPoly scale_left(Word c, const SkewPoly& f) {
    const GaloisField& fld = *f.field();
    std::vector<Word> out(f.coeffs());
    for (Word& w : out) w = fld.mul(c, w);
    return SkewPoly(f.ring(), std::move(out));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(f.ring());
    const GaloisField& fld = *f.field();
    std::vector<Word> out(f.coeffs().size() + g.coeffs().size() - 1, 0);
    SkewPoly x_i_g = g;  // X^i * g
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) x_i_g = x_times(x_i_g);
        const Word fi = f.coeffs()[i];
        if (fi == 0) continue;
        const auto& t = x_i_g.coeffs();
        for (std::size_t j = 0; j < t.size(); ++j) out[j] ^= fld.mul(fi, t[j]);
    }
    return SkewPoly(f.ring(), std::move(out));
}

DivMod right_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "right division by the zero polynomial");
    const ThetaDerivation& d = f.ring();
    const GaloisField& fld = *f.field();
    const int dg = g.degree();
    if (f.degree() < dg) return {SkewPoly::zero(d), f};

    std::vector<Word> quotient(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    SkewPoly rem = f;
    // X^s * g for the current shift; rebuilt as s decreases, so cache by s.
    std::vector<SkewPoly> shifted{g};
    shifted.reserve(quotient.size());
    for (std::size_t s = 1; s < quotient.size(); ++s) shifted.push_back(x_times(shifted.back()));

    while (!rem.is_zero() && rem.degree() >= dg) {
        const auto s = static_cast<std::size_t>(rem.degree() - dg);
        const SkewPoly& xs_g = shifted[s];
        const Word c = fld.div(rem.leading(), xs_g.leading());
        quotient[s] ^= c;
        rem = rem + scale_left(c, xs_g);
    }
    return {SkewPoly(d, std::move(quotient)), std::move(rem)};
}

SkewPoly right_rem(const SkewPoly& f, const SkewPoly& g) { return right_divmod(f, g).remainder; }

std::optional<std::string> xm_minus_1_obstruction(const ThetaDerivation& ring, std::size_t m) {
    if (m == 0) return "modulus X^0 - 1 is zero";
    if (m % ring.theta().order() != 0) {
        return "order of theta (" + std::to_string(ring.theta().order()) + ") does not divide m = " +
               std::to_string(m);
    }
    if (!ring.commutes()) return "delta does not commute with theta (theta(beta) != beta)";
    if (!ring.is_zero() && !std::has_single_bit(m)) {
        return "delta != 0 requires m to be a power of two, got m = " + std::to_string(m);
    }
    return std::nullopt;
}

SkewPoly fold_xm_minus_1(const SkewPoly& f, std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
    // c X^d = c X^(d-m) * (X^m - 1) + c X^(d-m): right division folds indices mod m.
    std::vector<Word> out(m, 0);
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out[i % m] ^= c[i];
    return SkewPoly(f.ring(), std::move(out));
}

SkewPoly mod_xm_minus_1(const SkewPoly& f, std::size_t m) {
    if (auto why = xm_minus_1_obstruction(f.ring(), m)) {
        throw Error(ErrorCode::NonCentralModulus, *why);
    }
    return fold_xm_minus_1(f, m);
}

std::optional<SkewPoly> inverse_mod_xm_minus_1(const SkewPoly& h, std::size_t m) {
    if (auto why = xm_minus_1_obstruction(h.ring(), m)) {
        throw Error(ErrorCode::NonCentralModulus, *why);
    }
    const ThetaDerivation& d = h.ring();
    // Invariant: r_i = s_i * h + (something) * (X^m - 1).
    SkewPoly r_prev = SkewPoly::x_pow_minus_one(d, m);
    SkewPoly r = fold_xm_minus_1(h, m);
    SkewPoly s_prev = SkewPoly::zero(d);
    SkewPoly s = SkewPoly::one(d);
    if (r.is_zero()) return std::nullopt;
    while (true) {
        DivMod qr = right_divmod(r_prev, r);
        if (qr.remainder.is_zero()) break;
        SkewPoly s_next = s_prev - skew_mul(qr.quotient, s);
        r_prev = std::move(r);
        r = std::move(qr.remainder);
        s_prev = std::move(s);
        s = std::move(s_next);
    }
    if (r.degree() != 0) return std::nullopt;
    return mod_xm_minus_1(scale_left(h.field()->inv(r.coeff(0)), s), m);
}

std::size_t weight(const SkewPoly& f) {
    return static_cast<std::size_t>(
        std::count_if(f.coeffs().begin(), f.coeffs().end(), [](Word w) { return w != 0; }));
}

SkewPoly reciprocal(const SkewPoly& g) {
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "reciprocal needs a monic polynomial");
    if (!g.ring().is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "reciprocal is defined for delta = 0 only");
    }
    if (g.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "g(0) = 0");
    const auto m = static_cast<std::size_t>(g.degree());
    const GaloisField& f = *g.field();
    const Automorphism& theta = g.ring().theta();
    const Word inv_g0 = f.inv(theta.apply_power(g.coeff(0), m));
    std::vector<Word> out(m + 1, 0);
    out[m] = 1;
    out[0] = inv_g0;
    for (std::size_t j = 1; j < m; ++j) out[m - j] = f.mul(theta.apply_power(g.coeff(j), m), inv_g0);
    return SkewPoly(g.ring(), std::move(out));
}

SkewPoly hadamard_power(const SkewPoly& g, std::uint64_t s) {
    const GaloisField& f = *g.field();
    std::vector<Word> out(g.coeffs());
    for (Word& w : out) w = f.pow(w, s);
    return SkewPoly(g.ring(), std::move(out));
}

SkewPoly hadamard_product(const SkewPoly& p, const SkewPoly& q) {
    require_same_ring(p, q);
    const GaloisField& f = *p.field();
    const std::size_t n = std::min(p.coeffs().size(), q.coeffs().size());
    std::vector<Word> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = f.mul(p.coeffs()[i], q.coeffs()[i]);
    return SkewPoly(p.ring(), std::move(out));
}

bool is_right_divisor(const SkewPoly& g, const SkewPoly& f) {
    return right_divmod(f, g).remainder.is_zero();
}

SkewPoly x_power_mod(std::uint64_t n, const SkewPoly& g) {
    SkewPoly r = right_rem(SkewPoly::one(g.ring()), g);
    for (std::uint64_t i = 0; i < n; ++i) r = right_rem(x_times(r), g);
    return r;
}

std::uint64_t default_order_bound(const SkewPoly& g) {
    constexpr std::uint64_t kCap = std::uint64_t{1} << 22;
    std::uint64_t bound = g.ring().theta().order();
    for (int i = 0; i < std::max(g.degree(), 1); ++i) {
        bound *= g.field()->size();
        if (bound >= kCap) return kCap;
    }
    return bound;
}

std::optional<std::uint64_t> poly_order(const SkewPoly& g, std::uint64_t n_max) {
    if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "poly_order needs a monic polynomial");
    if (g.coeff(0) == 0) throw Error(ErrorCode::ZeroConstantTerm, "g(0) = 0 has no order");
    if (!g.ring().is_zero()) {
        throw Error(ErrorCode::InvalidArgument, "poly_order is defined for delta = 0 only");
    }
    const std::uint64_t step = g.ring().theta().order();
    const SkewPoly one = right_rem(SkewPoly::one(g.ring()), g);
    SkewPoly r = one;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        r = right_rem(x_times(r), g);
        // X^n - 1 = q*g  <=>  X^n mod *g = 1
        if (n % step == 0 && r == one) return n;
    }
    return std::nullopt;
}

}  // namespace mdskit
