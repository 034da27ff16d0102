#pragma once

#include <gmpxx.h>

#include <string>

#include "gammal/errors.hpp"

namespace gammal {

/// Exact rational number. Always in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero stored as 0/1. Arithmetic is exact; equality is decidable.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n, const mpz_class& d = 1) {
        if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
        v_ = mpq_class(n) / mpq_class(d);
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// "p" or "p/q"; stable canonical text, also valid scalar-expression syntax.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

} // namespace gammal
