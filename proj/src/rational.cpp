#include "partfun/rational.hpp"

#include <ostream>

namespace partfun {

Integer pow_integer(const Integer& base, std::uint64_t exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (sgn(den) == 0) throw UsageError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string num_part(text.substr(0, slash));
    if (num_part.empty()) throw UsageError("empty rational literal");
    try {
        Integer num(num_part);
        if (slash == std::string_view::npos) return Rational(num);
        const std::string den_part(text.substr(slash + 1));
        Integer den(den_part);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational literal: " + std::string(text));
    }
}

Integer Rational::to_integer() const {
    if (!is_integer())
        throw AuditError("expected an integer value, got " + str());
    return numerator();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace partfun
