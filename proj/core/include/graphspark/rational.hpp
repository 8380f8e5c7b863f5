#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "graphspark/errors.hpp"

namespace graphspark {

/// Exact rational scalar. Wraps GMP's mpq_class and keeps every value in
/// canonical form (denominator > 0, gcd(|num|, den) = 1); mpq_class alone
/// does not canonicalize values built from a numerator/denominator pair.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(static_cast<long int>(v)) {}
    Rational(long long v) { q_ = from_ll(v); }

    Rational(long long num, long long den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        q_ = mpq_class(from_ll(num), from_ll(den));
        q_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses "p", "-p", or "p/q". Throws ParseError on anything else.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return wrap(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.q_ = std::move(q); // arithmetic on canonical operands stays canonical
        return r;
    }
    static mpz_class from_ll(long long v) {
        // mpz_class has no long long constructor on LP64 systems where
        // long == long long this is redundant but harmless.
        mpz_class z;
        if (v >= 0) {
            z = static_cast<unsigned long>(v);
        } else {
            z = static_cast<unsigned long>(-(v + 1));
            z += 1;
            z = -z;
        }
        return z;
    }

    mpq_class q_;
};

} // namespace graphspark
