#ifndef PARTFUN_INT_POLYNOMIAL_HPP
#define PARTFUN_INT_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "partfun/rational.hpp"

namespace partfun {

// Dense polynomial over Z, index = degree. No trailing zero coefficient
// except for the zero polynomial (empty coefficient vector).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const Integer& c);
    // coeff * x^deg
    static IntPolynomial monomial(std::size_t deg, const Integer& coeff = 1);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer eval(const Integer& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Exact division; throws AuditError when the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

private:
    void normalize();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

} // namespace partfun

#endif
