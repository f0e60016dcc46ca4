#include "adjhopf/scalar.hpp"

#include <charconv>

namespace adjhopf {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (unsigned long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
    if (!is_prime(p)) {
        fail("NotPrime", std::to_string(p) + " is not prime");
    }
    // Residue products must fit in an unsigned long.
    if (p >= (1ul << 31)) {
        fail("Unsupported", "prime modulus must be < 2^31");
    }
    return FieldSpec{Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& descriptor) {
    if (descriptor == "Q") return rationals();
    if (descriptor.rfind("Fp:", 0) == 0) {
        const std::string tail = descriptor.substr(3);
        unsigned long p = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), p);
        if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty()) {
            fail("ParseError", "malformed field descriptor '" + descriptor + "'");
        }
        return prime_field(p);
    }
    fail("ParseError", "unknown field descriptor '" + descriptor + "' (expected \"Q\" or \"Fp:<p>\")");
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, mpq_class(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
    if (f.is_rationals()) return Scalar(f, mpq_class(1), 0);
    return Scalar(f, mpq_class(0), f.p == 1 ? 0 : 1);
}

Scalar Scalar::of(const FieldSpec& f, long value) {
    if (f.is_rationals()) return Scalar(f, mpq_class(value), 0);
    long r = value % static_cast<long>(f.p);
    if (r < 0) r += static_cast<long>(f.p);
    return Scalar(f, mpq_class(0), static_cast<unsigned long>(r));
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(FieldSpec::rationals(), c, 0);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) fail("DivisionByZero", "rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(FieldSpec::rationals(), q, 0);
}

bool Scalar::is_zero() const {
    return spec_.is_rationals() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return spec_.is_rationals() ? q_ == 1 : r_ == 1 % spec_.p;
}

void Scalar::check_field(const Scalar& o) const {
    if (!(spec_ == o.spec_)) {
        fail("FieldMismatch", "operands over " + spec_.to_string() + " and " + o.spec_.to_string());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    if (spec_.is_rationals()) return Scalar(spec_, q_ + o.q_, 0);
    unsigned long s = r_ + o.r_;
    if (s >= spec_.p) s -= spec_.p;
    return Scalar(spec_, mpq_class(0), s);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    if (spec_.is_rationals()) return Scalar(spec_, q_ - o.q_, 0);
    unsigned long s = r_ + spec_.p - o.r_;
    if (s >= spec_.p) s -= spec_.p;
    return Scalar(spec_, mpq_class(0), s);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    if (spec_.is_rationals()) return Scalar(spec_, q_ * o.q_, 0);
    return Scalar(spec_, mpq_class(0), (r_ * o.r_) % spec_.p);
}

Scalar Scalar::operator-() const {
    if (spec_.is_rationals()) return Scalar(spec_, -q_, 0);
    return Scalar(spec_, mpq_class(0), r_ == 0 ? 0 : spec_.p - r_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    if (spec_.is_rationals()) return Scalar(spec_, 1 / q_, 0);
    // Extended Euclid on (r, p).
    long t = 0, new_t = 1;
    long r = static_cast<long>(spec_.p), new_r = static_cast<long>(r_);
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<long>(spec_.p);
    return Scalar(spec_, mpq_class(0), static_cast<unsigned long>(t));
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(spec_ == o.spec_)) return false;
    return spec_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational_value() const {
    if (!spec_.is_rationals()) fail("FieldMismatch", "not a rational scalar");
    return q_;
}

unsigned long Scalar::residue() const {
    if (!spec_.is_prime_field()) fail("FieldMismatch", "not a prime-field scalar");
    return r_;
}

std::string Scalar::to_string() const {
    if (spec_.is_prime_field()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) fail("ParseError", "empty scalar");
    try {
        if (f.is_prime_field()) {
            mpz_class z(text, 10);
            mpz_class r = z % static_cast<long>(f.p);
            if (r < 0) r += static_cast<long>(f.p);
            return Scalar(f, mpq_class(0), r.get_ui());
        }
        mpq_class q(text, 10);
        if (q.get_den() == 0) fail("ParseError", "zero denominator in '" + text + "'");
        q.canonicalize();
        return Scalar(f, q, 0);
    } catch (const std::invalid_argument&) {
        fail("ParseError", "malformed scalar '" + text + "'");
    }
}

DualScalar::DualScalar(Scalar a0, Scalar a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
    if (!(a0_.field() == a1_.field())) {
        fail("FieldMismatch", "dual-scalar parts over different base fields");
    }
}

DualScalar DualScalar::embed(const Scalar& a0) {
    return DualScalar(a0, Scalar::zero(a0.field()));
}

DualScalar DualScalar::zero(const FieldSpec& f) {
    return DualScalar(Scalar::zero(f), Scalar::zero(f));
}

DualScalar DualScalar::one(const FieldSpec& f) {
    return DualScalar(Scalar::one(f), Scalar::zero(f));
}

DualScalar DualScalar::operator+(const DualScalar& o) const {
    return DualScalar(a0_ + o.a0_, a1_ + o.a1_);
}

DualScalar DualScalar::operator-(const DualScalar& o) const {
    return DualScalar(a0_ - o.a0_, a1_ - o.a1_);
}

DualScalar DualScalar::operator*(const DualScalar& o) const {
    return DualScalar(a0_ * o.a0_, a0_ * o.a1_ + a1_ * o.a0_);
}

DualScalar DualScalar::operator-() const { return DualScalar(-a0_, -a1_); }

std::string DualScalar::to_string() const {
    return a0_.to_string() + " + (" + a1_.to_string() + ")t";
}

DualScalar dual_mul(const DualScalar& x, const DualScalar& y) { return x * y; }

} // namespace adjhopf
