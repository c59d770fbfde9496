#pragma once

// Exact arithmetic in GF(2^m), 2 <= m <= 16.
//
// Elements are bit-packed F_2 polynomials: bit i is the coefficient of X^i.
// Multiplication is a carry-less product reduced by shift-XOR against the
// modulus. Subtraction is addition (characteristic 2).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdskit/error.hpp"

namespace mdskit {

using Word = std::uint32_t;

class GaloisField;
using Field = std::shared_ptr<const GaloisField>;

/// Validated description of GF(2^m). Immutable once built; share it through
/// the `Field` handle returned by make_field().
class GaloisField {
public:
    static constexpr unsigned kMinDegree = 2;
    static constexpr unsigned kMaxDegree = 16;

    unsigned degree() const noexcept { return m_; }
    Word modulus() const noexcept { return modulus_; }
    Word generator() const noexcept { return generator_; }
    Word size() const noexcept { return Word{1} << m_; }
    Word mask() const noexcept { return size() - 1; }
    Word multiplicative_order() const noexcept { return size() - 1; }

    bool contains(Word a) const noexcept { return a < size(); }

    Word add(Word a, Word b) const noexcept { return a ^ b; }
    Word mul(Word a, Word b) const noexcept {
        Word r = 0;
        const Word top = size();
        while (b != 0) {
            if (b & 1U) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & top) a ^= modulus_;
        }
        return r;
    }
    Word square(Word a) const noexcept { return mul(a, a); }
    Word pow(Word a, std::uint64_t e) const noexcept;
    /// a^(2^m - 2); throws DivisionByZero for a == 0.
    Word inv(Word a) const;
    Word div(Word a, Word b) const { return mul(a, inv(b)); }
    /// a^(2^k), i.e. k repeated squarings.
    Word frobenius(Word a, unsigned k) const noexcept;

    /// Multiplicative order of a nonzero element.
    Word element_order(Word a) const;

    /// Discrete log base the configured generator. Throws DivisionByZero for 0.
    Word log(Word a) const;
    /// generator^e
    Word exp(std::uint64_t e) const noexcept;

    bool same_as(const GaloisField& other) const noexcept {
        return m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    friend Field make_field(unsigned m, Word modulus, std::optional<Word> generator);
    GaloisField(unsigned m, Word modulus) : m_(m), modulus_(modulus) {}

    unsigned m_;
    Word modulus_;
    Word generator_ = 0;
    std::vector<Word> exp_table_;  // generator^i, i < 2^m - 1
    std::vector<Word> log_table_;  // inverse of exp_table_; log_table_[0] unused
};

/// Builds GF(2^m) from a bitmask modulus. When no generator is given the
/// smallest primitive element (by bitmask value) is chosen.
Field make_field(unsigned m, Word modulus, std::optional<Word> generator = std::nullopt);

/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible_f2(Word poly);

/// Degree of a nonzero F_2 polynomial bitmask; -1 for zero.
int f2_degree(Word poly) noexcept;

/// Element of a specific field. Value type; arithmetic across different
/// fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Word bits);

    static FieldElement zero(const Field& f) { return FieldElement(f, 0); }
    static FieldElement one(const Field& f) { return FieldElement(f, 1); }

    const Field& field() const noexcept { return field_; }
    Word bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Word bits_;
};

void require_same_field(const GaloisField& a, const GaloisField& b);

inline FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement inv(const FieldElement& a) { return a.inverse(); }

/// Frobenius automorphism a -> a^(2^k) of a fixed field.
class Automorphism {
public:
    Automorphism(Field field, unsigned k);

    static Automorphism identity(Field field) { return Automorphism(std::move(field), 0); }

    const Field& field() const noexcept { return field_; }
    unsigned exponent() const noexcept { return k_; }
    /// Smallest n >= 1 with theta^n = id, i.e. m / gcd(m, k).
    unsigned order() const noexcept { return order_; }
    bool is_identity() const noexcept { return k_ == 0; }

    Word apply(Word a) const noexcept { return field_->frobenius(a, k_); }
    /// theta^i(a)
    Word apply_power(Word a, std::uint64_t i) const noexcept;
    FieldElement operator()(const FieldElement& a) const;

    /// theta^i as an automorphism in its own right.
    Automorphism power(std::uint64_t i) const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.k_ == b.k_ && a.field_->same_as(*b.field_);
    }

private:
    Field field_;
    unsigned k_;
    unsigned order_;
};

FieldElement frobenius(const Automorphism& theta, const FieldElement& a);

/// All elements fixed by theta, ascending by bitmask.
std::vector<FieldElement> fixed_field(const Automorphism& theta);

}  // namespace mdskit
