#include "partfun/int_polynomial.hpp"

#include <ostream>

namespace partfun {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) {
    IntPolynomial p;
    if (sgn(c) != 0) p.c_.push_back(c);
    return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t deg, const Integer& coeff) {
    IntPolynomial p;
    if (sgn(coeff) != 0) {
        p.c_.assign(deg + 1, Integer(0));
        p.c_[deg] = coeff;
    }
    return p;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Integer> out(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    *this = *this * o;
    return *this;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<Integer> rem = c_;
    const std::int64_t dd = divisor.degree();
    std::vector<Integer> quot;
    if (degree() >= dd) quot.assign(static_cast<std::size_t>(degree() - dd) + 1, Integer(0));
    std::int64_t rd = static_cast<std::int64_t>(rem.size()) - 1;
    while (rd >= 0 && sgn(rem[static_cast<std::size_t>(rd)]) == 0) --rd;
    while (rd >= dd) {
        const Integer& lead = rem[static_cast<std::size_t>(rd)];
        Integer q;
        Integer r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    divisor.c_.back().get_mpz_t());
        if (sgn(r) != 0)
            throw AuditError("polynomial division is not exact");
        const std::size_t shift = static_cast<std::size_t>(rd - dd);
        quot[shift] = q;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem[shift + i] -= q * divisor.c_[i];
        while (rd >= 0 && sgn(rem[static_cast<std::size_t>(rd)]) == 0) --rd;
    }
    if (rd >= 0) throw AuditError("polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Integer& c = p.coeffs()[i];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Integer mag = abs(c);
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os;
}

} // namespace partfun
