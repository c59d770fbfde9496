#include "mdskit/twist.hpp"

#include <cassert>

namespace mdskit {

ThetaDerivation::ThetaDerivation(Automorphism theta, Word beta)
    : theta_(std::move(theta)), beta_(beta) {
    const GaloisField& f = *field();
    if (!f.contains(beta_)) throw Error(ErrorCode::InvalidArgument, "beta outside field");
    if (!is_zero()) {
        for (Word r = 0; r < f.size(); ++r) {
            if (delta(theta_.apply(r)) != theta_.apply(delta(r))) {
                noncommuting_witness_ = r;
                break;
            }
        }
    }
#ifndef NDEBUG
    if (f.degree() <= 8) assert(satisfies_leibniz(*this));
#endif
}

ThetaDerivation::ThetaDerivation(Automorphism theta, const FieldElement& beta)
    : ThetaDerivation((require_same_field(*theta.field(), *beta.field()), std::move(theta)),
                      beta.bits()) {}

Word ThetaDerivation::delta_power(Word a, std::uint64_t k) const noexcept {
    for (std::uint64_t i = 0; i < k && a != 0; ++i) a = delta(a);
    return a;
}

FieldElement delta_eval(const ThetaDerivation& d, const FieldElement& a) {
    require_same_field(*d.field(), *a.field());
    return FieldElement(d.field(), d.delta(a.bits()));
}

FieldElement delta_iter(const ThetaDerivation& d, const FieldElement& a, std::uint64_t k) {
    require_same_field(*d.field(), *a.field());
    return FieldElement(d.field(), d.delta_power(a.bits(), k));
}

CommuteResult commutes(const ThetaDerivation& d) {
    if (auto w = d.noncommuting_witness()) return {false, FieldElement(d.field(), *w)};
    return {true, std::nullopt};
}

bool satisfies_leibniz(const ThetaDerivation& d) {
    const GaloisField& f = *d.field();
    for (Word a = 0; a < f.size(); ++a) {
        const Word da = d.delta(a);
        const Word ta = d.theta().apply(a);
        for (Word b = 0; b < f.size(); ++b) {
            if (d.delta(a ^ b) != (da ^ d.delta(b))) return false;
            if (d.delta(f.mul(a, b)) != (f.mul(da, b) ^ f.mul(ta, d.delta(b)))) return false;
        }
    }
    return true;
}

Word hat_binomial(const ThetaDerivation& d, Word a, unsigned i) {
    Word sum = 0;
    for (unsigned k = 0; k <= i; ++k) {
        if (!binomial_is_odd(i, k)) continue;
        sum ^= d.delta_power(d.theta().apply_power(a, k), i - k);
    }
    return sum;
}

Word hat_recurrence(const ThetaDerivation& d, Word a, unsigned i) {
    for (unsigned s = 0; s < i; ++s) a = d.delta(a) ^ d.theta().apply(a);
    return a;
}

Word hat(const ThetaDerivation& d, Word a, unsigned i) {
    return d.commutes() ? hat_recurrence(d, a, i) : hat_binomial(d, a, i);
}

FieldElement hat(const ThetaDerivation& d, const FieldElement& a, unsigned i) {
    require_same_field(*d.field(), *a.field());
    return FieldElement(d.field(), hat(d, a.bits(), i));
}

Word apply_twist(const ThetaDerivation& d, Word a, TwistKind t) {
    if (t.variant == TwistKind::Variant::Bracket) return d.theta().apply_power(a, t.index);
    return hat(d, a, t.index);
}

FMatrix twist_matrix(const ThetaDerivation& d, const FMatrix& a, TwistKind t) {
    require_same_field(*d.field(), *a.field());
    std::vector<Word> out(a.entries());
    for (Word& w : out) w = apply_twist(d, w, t);
    return FMatrix(a.field(), a.rows(), a.cols(), std::move(out));
}

}  // namespace mdskit
