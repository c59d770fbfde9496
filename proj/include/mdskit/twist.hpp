#pragma once

// theta-derivations of GF(2^m) and the entrywise twists built from them.
//
// Every theta-derivation of a finite field is inner: delta(a) = beta*(theta(a) - a).
// Only that form is represented.

#include <cstdint>
#include <optional>

#include "mdskit/finite_field.hpp"
#include "mdskit/matrix.hpp"

namespace mdskit {

class ThetaDerivation {
public:
    ThetaDerivation(Automorphism theta, Word beta);
    ThetaDerivation(Automorphism theta, const FieldElement& beta);

    /// delta = 0 paired with theta.
    static ThetaDerivation zero(Automorphism theta) { return ThetaDerivation(std::move(theta), Word{0}); }

    const Field& field() const noexcept { return theta_.field(); }
    const Automorphism& theta() const noexcept { return theta_; }
    Word beta() const noexcept { return beta_; }
    /// delta is the zero map: beta = 0 or theta = id.
    bool is_zero() const noexcept { return beta_ == 0 || theta_.is_identity(); }

    /// delta(theta(a)) == theta(delta(a)) for every a.
    bool commutes() const noexcept { return !noncommuting_witness_; }
    /// Some r with delta(theta(r)) != theta(delta(r)), when one exists.
    std::optional<Word> noncommuting_witness() const noexcept { return noncommuting_witness_; }

    Word delta(Word a) const noexcept {
        const GaloisField& f = *field();
        return f.mul(beta_, theta_.apply(a) ^ a);
    }
    Word delta_power(Word a, std::uint64_t k) const noexcept;

    friend bool operator==(const ThetaDerivation& a, const ThetaDerivation& b) {
        return a.theta_ == b.theta_ && a.beta_ == b.beta_;
    }

private:
    Automorphism theta_;
    Word beta_;
    std::optional<Word> noncommuting_witness_;
};

struct CommuteResult {
    bool commutes;
    std::optional<FieldElement> witness;
};

FieldElement delta_eval(const ThetaDerivation& d, const FieldElement& a);
FieldElement delta_iter(const ThetaDerivation& d, const FieldElement& a, std::uint64_t k);
CommuteResult commutes(const ThetaDerivation& d);

/// Exhaustive check of additivity and delta(ab) = delta(a)b + theta(a)delta(b).
bool satisfies_leibniz(const ThetaDerivation& d);

/// Which entrywise twist to apply: Bracket(i) = theta^i, Angle(i) = the
/// binomial mix sum_k C(i,k) delta^(i-k) theta^k.
struct TwistKind {
    enum class Variant { Bracket, Angle };
    Variant variant;
    unsigned index;

    static TwistKind bracket(unsigned i) { return {Variant::Bracket, i}; }
    static TwistKind angle(unsigned i) { return {Variant::Angle, i}; }

    friend bool operator==(const TwistKind&, const TwistKind&) = default;
};

enum class TwistFamily { Bracket, Angle };

/// a^<i> by the explicit binomial sum (coefficients mod 2).
Word hat_binomial(const ThetaDerivation& d, Word a, unsigned i);
/// a^<i> by iterating a -> delta(a) + theta(a). Equal to hat_binomial only
/// when delta and theta commute.
Word hat_recurrence(const ThetaDerivation& d, Word a, unsigned i);
/// Recurrence when d commutes, binomial sum otherwise.
Word hat(const ThetaDerivation& d, Word a, unsigned i);
FieldElement hat(const ThetaDerivation& d, const FieldElement& a, unsigned i);

Word apply_twist(const ThetaDerivation& d, Word a, TwistKind t);
FMatrix twist_matrix(const ThetaDerivation& d, const FMatrix& a, TwistKind t);

/// C(n, k) mod 2 via Lucas: odd iff k's bits are a subset of n's.
constexpr bool binomial_is_odd(std::uint64_t n, std::uint64_t k) noexcept {
    return k <= n && (k & ~n) == 0;
}

}  // namespace mdskit
