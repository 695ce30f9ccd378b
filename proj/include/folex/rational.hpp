#ifndef FOLEX_RATIONAL_HPP
#define FOLEX_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "folex/errors.hpp"

namespace folex {

/// Arbitrary-precision rational, always kept canonical:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
    Rational(std::int64_t n, std::int64_t d) : v_(static_cast<long>(n), static_cast<long>(d)) {
        if (d == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "n", "-n", "n/d".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw domain_error("malformed rational '" + s + "'");
        q.canonicalize();
        if (q.get_den() == 0) throw domain_error("rational with zero denominator '" + s + "'");
        return Rational(q);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw domain_error("division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational operator*(std::int64_t a, const Rational& b) { return Rational(a) * b; }

}  // namespace folex

#endif
