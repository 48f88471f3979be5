#ifndef PARTFUN_RATIONAL_HPP
#define PARTFUN_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "partfun/errors.hpp"

namespace partfun {

// Arbitrary-precision integer. All counting results are exact.
using Integer = mpz_class;

Integer pow_integer(const Integer& base, std::uint64_t exp);

// Exact rational, always in lowest terms with positive denominator.
// The canonical zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(Integer(std::to_string(n))) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    // Parses "p/q" or "p"; rejects zero denominators and garbage.
    static Rational parse(std::string_view text);

    Integer numerator() const { return Integer(v_.get_num()); }
    Integer denominator() const { return Integer(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    // Exact conversion; throws AuditError when the value is not an integer.
    Integer to_integer() const;

    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

} // namespace partfun

#endif
