#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidinv {

/// Exact rational number. Always in lowest terms with positive denominator
/// (canonical form is maintained by the underlying GMP rational).
class Scalar {
public:
    Scalar() : value_(0) {}
    Scalar(long num) : value_(num) {}
    Scalar(long num, long den) : value_(num, den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        value_.canonicalize();
    }
    explicit Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "7", "-7", "3/4", "-3/4". Accepts U+2212 as a minus sign.
    static Scalar parse(const std::string& text);

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    std::string str() const { return value_.get_str(); }

    Scalar operator-() const { return Scalar(mpq_class(-value_)); }
    Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
    Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
    Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.value_ != b.value_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.value_ < b.value_; }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_;
};

}  // namespace braidinv
