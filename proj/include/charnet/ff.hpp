#pragma once

#include <cstdint>
#include <stdexcept>

namespace charnet {

/// Thrown when the multiplicative inverse of zero is requested.
struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("zero has no multiplicative inverse") {}
};

/// Prime field F_p. The modulus is verified prime at construction and kept
/// below 2^16 so that multiply-then-reduce on 64-bit intermediates can never
/// overflow. Residues are plain uint32_t values in [0, p).
class PrimeField {
  public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    /// Multiplicative inverse by extended Euclid. Throws ZeroInverse on 0.
    std::uint32_t inv(std::uint32_t a) const;

    /// Embeds an arbitrary signed integer as a residue in [0, p).
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

    /// True iff the characteristic divides q, i.e. q maps to zero in F_p.
    bool divides(std::uint64_t q) const { return q % p_ == 0; }

    bool operator==(const PrimeField&) const = default;

  private:
    std::uint32_t p_;
};

/// Immutable element of a prime field; `value` is always a reduced residue.
class Fp {
  public:
    Fp(const PrimeField& field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

    std::uint32_t value() const { return value_; }
    const PrimeField& field() const { return field_; }

    Fp operator+(const Fp& o) const { return raw(field_, field_.add(value_, o.value_)); }
    Fp operator-(const Fp& o) const { return raw(field_, field_.sub(value_, o.value_)); }
    Fp operator*(const Fp& o) const { return raw(field_, field_.mul(value_, o.value_)); }
    Fp operator-() const { return raw(field_, field_.neg(value_)); }
    Fp inv() const { return raw(field_, field_.inv(value_)); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    bool is_zero() const { return value_ == 0; }
    bool operator==(const Fp&) const = default;

  private:
    static Fp raw(const PrimeField& f, std::uint32_t v) {
        Fp e(f, 0);
        e.value_ = v;
        return e;
    }

    PrimeField field_;
    std::uint32_t value_;
};

inline Fp inv(const Fp& x) { return x.inv(); }

/// True iff q == 0 (mod p): the image of q in F_p is the zero element.
inline bool char_divides(const PrimeField& field, std::uint64_t q) { return field.divides(q); }

}  // namespace charnet
