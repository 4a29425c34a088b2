#ifndef MSR_FIELD_HPP
#define MSR_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "msr/errors.hpp"

namespace msr {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * A finite field GF(p^m) with p prime and p^m <= 256, backed by full
 * precomputed add/mul/neg/inv tables.
 *
 * Elements are canonical integers in [0, q).  For m > 1 the integer's
 * base-p digits are the coefficients of the residue polynomial, constant
 * term in the least significant digit.  The modulus is a monic irreducible
 * polynomial of degree m over GF(p), stored low-to-high.
 *
 * Immutable after construction; all operations are pure table lookups and
 * safe for unrestricted concurrent use.
 */
class Field {
  public:
    /// Builds GF(p^m).  When `modulus` is empty and m > 1, the default
    /// modulus is the monic irreducible of degree m whose non-leading
    /// coefficient vector encodes to the smallest integer (base-p digits,
    /// constant term least significant).
    static FieldPtr make(int p, int m = 1, std::vector<int> modulus = {});

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int order() const { return q_; }

    /// Monic modulus, coefficients low-to-high, size m+1.  For m == 1 this
    /// is {0, 1} (the polynomial x), kept only for completeness.
    const std::vector<int>& modulus() const { return modulus_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, b)]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[idx(a, b)]; }

    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }

    std::uint8_t div(std::uint8_t a, std::uint8_t b) const { return mul(a, inv(b)); }

    std::uint8_t pow(std::uint8_t a, unsigned long long e) const;

    /// Reduces an arbitrary signed integer into the field: for prime fields
    /// the value mod p; for extension fields only values already in [0, q)
    /// plus small negatives (interpreted as -1 -> neg(1), etc.) make sense,
    /// so negatives map through neg() of the reduced magnitude mod p.
    std::uint8_t from_int(long long v) const;

    /// Base-p digits of an element, length m, constant term first.
    std::vector<int> decode(std::uint8_t v) const;
    /// Inverse of decode; accepts up to m digits.
    std::uint8_t encode(const std::vector<int>& digits) const;

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// "GF(q)" display name.
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    static bool is_prime(int p);
    /// Irreducibility over GF(p) by trial division against all monic
    /// polynomials of degree 1..deg/2.  Coefficients low-to-high, monic.
    static bool is_irreducible(int p, const std::vector<int>& poly);
    static std::vector<int> default_modulus(int p, int m);

  private:
    Field(int p, int m, std::vector<int> modulus);
    std::size_t idx(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }
    void build_tables();

    int p_, m_, q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Field identity is structural: two instances of GF(q) with the same
/// modulus interoperate.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw FieldMismatchError("operands belong to different fields");
}

/**
 * A single field element bound to its field, for API-level scalar work.
 * Matrix internals use raw table indices instead; this wrapper exists so
 * scalar results (determinants, rebuild coefficients) carry their field.
 */
class FieldElement {
  public:
    FieldElement(FieldPtr field, long long value)
        : field_(std::move(field)), value_(field_->from_int(value)) {}

    int value() const { return value_; }
    const FieldPtr& field() const { return field_; }

    FieldElement inv() const { return FieldElement(field_, field_->inv(value_), 0); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->add(a.value_, b.value_), 0);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->sub(a.value_, b.value_), 0);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same_field(a.field_, b.field_);
        return FieldElement(a.field_, a.field_->mul(a.value_, b.value_), 0);
    }
    FieldElement operator-() const { return FieldElement(field_, field_->neg(value_), 0); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return same_field(a.field_, b.field_) && a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    bool is_zero() const { return value_ == 0; }

  private:
    FieldElement(FieldPtr field, std::uint8_t raw, int) : field_(std::move(field)), value_(raw) {}

    FieldPtr field_;
    std::uint8_t value_;
};

}  // namespace msr

#endif
