#ifndef PARTFUN_CYCLOTOMIC_HPP
#define PARTFUN_CYCLOTOMIC_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "partfun/int_polynomial.hpp"
#include "partfun/rational.hpp"

namespace partfun {

// Degree cap for the ambient cyclotomic field (bounds deg Phi_D).
std::int64_t max_cyclotomic_level();
void set_max_cyclotomic_level(std::int64_t level);

// The j-th cyclotomic polynomial Phi_j, computed by exact division of
// x^j - 1 by the product of Phi_d over proper divisors d. Cached; safe
// for concurrent callers.
IntPolynomial cyclotomic_polynomial(std::int64_t j);

// deg Phi_j (Euler's totient of j).
std::int64_t cyclotomic_degree(std::int64_t j);

// An element of Q(zeta_D) in canonical form: the unique residue mod Phi_D
// in the generator zeta_D. Equality is coefficient-wise at equal level;
// mixed-level arithmetic requires an explicit lift.
class CyclotomicNumber {
public:
    static CyclotomicNumber zero(std::int64_t level);
    static CyclotomicNumber one(std::int64_t level);
    static CyclotomicNumber from_rational(std::int64_t level, const Rational& value);
    // Reduces an arbitrary coefficient vector (index = power of zeta_D).
    static CyclotomicNumber from_coeffs(std::int64_t level, std::vector<Rational> coeffs);

    std::int64_t level() const { return level_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    // The rational value of a constant element; throws NotRationalError
    // otherwise (this is the audit hook for values proved rational).
    Rational as_rational() const;

    // Maps zeta_j to zeta_L^{L/j}; requires level() | L.
    CyclotomicNumber lifted_to(std::int64_t new_level) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& s);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
    friend CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) { return a *= s; }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a);

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

private:
    CyclotomicNumber(std::int64_t level, std::vector<Rational> canonical);
    std::int64_t level_ = 1;
    std::vector<Rational> c_;
};

// zeta_D^t with t reduced mod D (negative t allowed).
CyclotomicNumber root_power(std::int64_t level, std::int64_t t);

// All powers zeta_D^0 .. zeta_D^{D-1}, built incrementally (one shift and
// one reduction step each, instead of a full multiplication).
std::vector<CyclotomicNumber> root_power_table(std::int64_t level);

CyclotomicNumber pow(const CyclotomicNumber& base, std::uint64_t exp);

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

} // namespace partfun

#endif
