#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "adjhopf/errors.hpp"

namespace adjhopf {

/// Returns true iff n is prime (deterministic trial division; moduli are small).
bool is_prime(unsigned long n);

// Coefficient field: the rationals or a prime field F_p.
//
// Complex-coefficient results from the literature are computed over Q: every
// linear system in scope has rational coefficients, so kernel dimensions over
// Q and over C coincide.  F_2 is representable here; modules that need an
// invertible 2 reject it themselves.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    unsigned long p = 0; // modulus when kind == PrimeField

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime_field(unsigned long p); // error NotPrime if p is not prime
    /// Parses "Q" or "Fp:<n>" (errors ParseError / NotPrime).
    static FieldSpec parse(const std::string& descriptor);

    bool is_rationals() const { return kind == Kind::Rationals; }
    bool is_prime_field() const { return kind == Kind::PrimeField; }
    unsigned long characteristic() const { return is_prime_field() ? p : 0; }

    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

// Exact element of the field named by a FieldSpec.  Rationals are kept in
// lowest terms with positive denominator (GMP canonicalizes); prime-field
// elements are residues in 0..p-1.  Values are immutable in spirit: all
// operations return fresh scalars, so they are freely shareable.
class Scalar {
public:
    Scalar() : spec_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of(const FieldSpec& f, long value);
    static Scalar rational(const mpq_class& q);
    static Scalar rational(long num, long den);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // error DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const; // error DivisionByZero on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rational_value() const; // requires Rationals
    unsigned long residue() const;           // requires PrimeField

    /// Serialized form: "num/den" over Q ("/1" omitted), bare residue over F_p.
    std::string to_string() const;
    static Scalar parse(const FieldSpec& f, const std::string& text);

private:
    Scalar(FieldSpec spec, mpq_class q, unsigned long r)
        : spec_(spec), q_(std::move(q)), r_(r) {}

    void check_field(const Scalar& o) const;

    FieldSpec spec_;
    mpq_class q_;          // used when Rationals
    unsigned long r_ = 0;  // used when PrimeField
};

// Element of k[t]/(t^2) over a base field: a0 + a1*t with t^2 = 0.
// Carrier of first-order deformation data.
class DualScalar {
public:
    DualScalar() = default;
    DualScalar(Scalar a0, Scalar a1);

    /// Embeds the base field (a1 = 0); a ring homomorphism.
    static DualScalar embed(const Scalar& a0);
    static DualScalar zero(const FieldSpec& f);
    static DualScalar one(const FieldSpec& f);

    const Scalar& degree0() const { return a0_; }
    const Scalar& t_coeff() const { return a1_; }
    const FieldSpec& field() const { return a0_.field(); }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }

    DualScalar operator+(const DualScalar& o) const;
    DualScalar operator-(const DualScalar& o) const;
    // (a0 + a1 t)(b0 + b1 t) = a0 b0 + (a0 b1 + a1 b0) t; the t^2 term is dropped.
    DualScalar operator*(const DualScalar& o) const;
    DualScalar operator-() const;

    bool operator==(const DualScalar& o) const { return a0_ == o.a0_ && a1_ == o.a1_; }
    bool operator!=(const DualScalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Scalar a0_, a1_;
};

/// Multiplies two dual scalars (same rule as operator*; error FieldMismatch).
DualScalar dual_mul(const DualScalar& x, const DualScalar& y);

} // namespace adjhopf
