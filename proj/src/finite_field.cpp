#include "mdskit/finite_field.hpp"

#include <numeric>
#include <sstream>

namespace mdskit {

namespace {

std::string hex(Word w) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << w;
    return os.str();
}

// Remainder of a by b over F_2.
Word f2_mod(Word a, Word b) {
    const int db = f2_degree(b);
    for (int da = f2_degree(a); da >= db; da = f2_degree(a)) a ^= b << (da - db);
    return a;
}

}  // namespace

int f2_degree(Word poly) noexcept {
    int d = -1;
    while (poly != 0) {
        ++d;
        poly >>= 1;
    }
    return d;
}

bool is_irreducible_f2(Word poly) {
    const int deg = f2_degree(poly);
    if (deg < 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        for (Word divisor = Word{1} << d; divisor < (Word{2} << d); ++divisor) {
            if (f2_mod(poly, divisor) == 0) return false;
        }
    }
    return true;
}

Word GaloisField::pow(Word a, std::uint64_t e) const noexcept {
    Word result = 1;
    while (e != 0) {
        if (e & 1U) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Word GaloisField::inv(Word a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(a, size() - 2);
}

Word GaloisField::frobenius(Word a, unsigned k) const noexcept {
    k %= m_;
    for (unsigned i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

Word GaloisField::element_order(Word a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "order of zero");
    Word n = 1;
    for (Word x = a; x != 1; x = mul(x, a)) ++n;
    return n;
}

Word GaloisField::log(Word a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
    return log_table_[a];
}

Word GaloisField::exp(std::uint64_t e) const noexcept {
    return exp_table_[e % multiplicative_order()];
}

Field make_field(unsigned m, Word modulus, std::optional<Word> generator) {
    if (m < GaloisField::kMinDegree || m > GaloisField::kMaxDegree) {
        throw Error(ErrorCode::InvalidArgument,
                    "extension degree " + std::to_string(m) + " outside 2..16");
    }
    if (f2_degree(modulus) != static_cast<int>(m)) {
        throw Error(ErrorCode::InvalidArgument,
                    "modulus " + hex(modulus) + " does not have degree " + std::to_string(m));
    }
    if (!is_irreducible_f2(modulus)) {
        throw Error(ErrorCode::ReducibleModulus, hex(modulus) + " factors over F_2");
    }

    // make_shared cannot reach the private constructor.
    std::shared_ptr<GaloisField> field(new GaloisField(m, modulus));
    const Word order = field->multiplicative_order();
    if (generator) {
        if (*generator == 0 || !field->contains(*generator) ||
            field->element_order(*generator) != order) {
            throw Error(ErrorCode::NotPrimitive,
                        hex(*generator) + " does not generate the multiplicative group");
        }
        field->generator_ = *generator;
    } else {
        for (Word a = 2; a < field->size(); ++a) {
            if (field->element_order(a) == order) {
                field->generator_ = a;
                break;
            }
        }
    }

    field->exp_table_.resize(order);
    field->log_table_.assign(field->size(), 0);
    Word x = 1;
    for (Word i = 0; i < order; ++i) {
        field->exp_table_[i] = x;
        field->log_table_[x] = i;
        x = field->mul(x, field->generator_);
    }
    return field;
}

void require_same_field(const GaloisField& a, const GaloisField& b) {
    if (!a.same_as(b)) {
        throw Error(ErrorCode::FieldMismatch,
                    "GF(2^" + std::to_string(a.degree()) + ") mod " + hex(a.modulus()) +
                        " vs GF(2^" + std::to_string(b.degree()) + ") mod " + hex(b.modulus()));
    }
}

FieldElement::FieldElement(Field field, Word bits) : field_(std::move(field)), bits_(bits) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    if (!field_->contains(bits_)) {
        throw Error(ErrorCode::InvalidArgument,
                    hex(bits_) + " is not an element of GF(2^" +
                        std::to_string(field_->degree()) + ")");
    }
}

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(bits_)); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    return FieldElement(field_, field_->pow(bits_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return FieldElement(a.field_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return FieldElement(a.field_, a.field_->mul(a.bits_, b.bits_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(*a.field_, *b.field_);
    return FieldElement(a.field_, a.field_->div(a.bits_, b.bits_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && a.field_->same_as(*b.field_);
}

Automorphism::Automorphism(Field field, unsigned k) : field_(std::move(field)), k_(k) {
    if (!field_) throw Error(ErrorCode::InvalidArgument, "null field");
    const unsigned m = field_->degree();
    if (k_ >= m) {
        throw Error(ErrorCode::InvalidArgument, "Frobenius exponent " + std::to_string(k_) +
                                                    " must be below " + std::to_string(m));
    }
    order_ = k_ == 0 ? 1 : m / std::gcd(m, k_);
}

Word Automorphism::apply_power(Word a, std::uint64_t i) const noexcept {
    const unsigned m = field_->degree();
    const auto total = static_cast<unsigned>((static_cast<std::uint64_t>(k_) * (i % order_)) % m);
    return field_->frobenius(a, total);
}

FieldElement Automorphism::operator()(const FieldElement& a) const {
    require_same_field(*field_, *a.field());
    return FieldElement(field_, apply(a.bits()));
}

Automorphism Automorphism::power(std::uint64_t i) const {
    const unsigned m = field_->degree();
    return Automorphism(field_, static_cast<unsigned>((k_ * (i % order_)) % m));
}

FieldElement frobenius(const Automorphism& theta, const FieldElement& a) { return theta(a); }

std::vector<FieldElement> fixed_field(const Automorphism& theta) {
    std::vector<FieldElement> out;
    const Field& f = theta.field();
    for (Word a = 0; a < f->size(); ++a) {
        if (theta.apply(a) == a) out.emplace_back(f, a);
    }
    return out;
}

}  // namespace mdskit
