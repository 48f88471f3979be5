#include "partfun/cyclotomic.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <ostream>

namespace partfun {

namespace {

std::atomic<std::int64_t> g_max_level{10080};

std::mutex g_phi_mutex;

std::map<std::int64_t, IntPolynomial>& phi_cache() {
    static std::map<std::int64_t, IntPolynomial> cache;
    return cache;
}

// Fills the cache for every divisor of j, smallest first.
const IntPolynomial& phi_locked(std::int64_t j) {
    std::map<std::int64_t, IntPolynomial>& cache = phi_cache();
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    for (std::int64_t d = 1; d <= j; ++d) {
        if (j % d != 0 || cache.count(d)) continue;
        // x^d - 1
        std::vector<Integer> cs(static_cast<std::size_t>(d) + 1, Integer(0));
        cs[0] = -1;
        cs[static_cast<std::size_t>(d)] = 1;
        IntPolynomial num{std::move(cs)};
        for (std::int64_t e = 1; e < d; ++e)
            if (d % e == 0) num = num.divide_exact(cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(j);
}

} // namespace

std::int64_t max_cyclotomic_level() { return g_max_level.load(); }

void set_max_cyclotomic_level(std::int64_t level) {
    if (level < 1) throw UsageError("cyclotomic level cap must be positive");
    g_max_level.store(level);
}

IntPolynomial cyclotomic_polynomial(std::int64_t j) {
    if (j < 1) throw UsageError("cyclotomic polynomial index must be positive");
    if (j > max_cyclotomic_level())
        throw UsageError("cyclotomic level " + std::to_string(j) + " exceeds cap " +
                         std::to_string(max_cyclotomic_level()));
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_locked(j);
}

std::int64_t cyclotomic_degree(std::int64_t j) {
    return cyclotomic_polynomial(j).degree();
}

namespace {

// Canonical residue mod Phi_level of an arbitrary coefficient vector.
std::vector<Rational> reduce_mod_phi(std::int64_t level, std::vector<Rational> v) {
    const IntPolynomial phi = cyclotomic_polynomial(level);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i].is_zero()) continue;
        const Rational lead = v[i];
        v[i] = Rational();
        // x^deg == -(phi_0 + phi_1 x + ... + phi_{deg-1} x^{deg-1})
        for (std::size_t k = 0; k < deg; ++k) {
            const Integer pk = phi.coeff(k);
            if (sgn(pk) != 0) v[i - deg + k] -= lead * Rational(pk);
        }
    }
    v.resize(deg, Rational());
    return v;
}

} // namespace

CyclotomicNumber::CyclotomicNumber(std::int64_t level, std::vector<Rational> canonical)
    : level_(level), c_(std::move(canonical)) {}

CyclotomicNumber CyclotomicNumber::zero(std::int64_t level) {
    return CyclotomicNumber(level, std::vector<Rational>(
        static_cast<std::size_t>(cyclotomic_degree(level))));
}

CyclotomicNumber CyclotomicNumber::one(std::int64_t level) {
    return from_rational(level, Rational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(std::int64_t level, const Rational& value) {
    CyclotomicNumber x = zero(level);
    x.c_[0] = value;
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coeffs(std::int64_t level, std::vector<Rational> coeffs) {
    return CyclotomicNumber(level, reduce_mod_phi(level, std::move(coeffs)));
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    return is_rational() && c_[0] == Rational(1);
}

Rational CyclotomicNumber::as_rational() const {
    if (!is_rational())
        throw NotRationalError("cyclotomic value at level " + std::to_string(level_) +
                               " is not rational");
    return c_[0];
}

CyclotomicNumber CyclotomicNumber::lifted_to(std::int64_t new_level) const {
    if (new_level == level_) return *this;
    if (new_level < 1 || new_level % level_ != 0)
        throw LevelMismatchError("cannot lift level " + std::to_string(level_) +
                                 " to level " + std::to_string(new_level));
    const std::int64_t stride = new_level / level_;
    std::vector<Rational> raw(static_cast<std::size_t>((c_.size() - 1) * stride + 1));
    for (std::size_t k = 0; k < c_.size(); ++k) raw[k * static_cast<std::size_t>(stride)] = c_[k];
    return from_coeffs(new_level, std::move(raw));
}

namespace {

void require_same_level(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.level() != b.level())
        throw LevelMismatchError("cyclotomic levels differ: " + std::to_string(a.level()) +
                                 " vs " + std::to_string(b.level()));
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    require_same_level(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    require_same_level(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    require_same_level(*this, o);
    std::vector<Rational> conv(2 * c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = reduce_mod_phi(level_, std::move(conv));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
    for (Rational& q : c_) q *= s;
    return *this;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber r = a;
    return r *= Rational(-1);
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    require_same_level(a, b);
    return a.c_ == b.c_;
}

CyclotomicNumber root_power(std::int64_t level, std::int64_t t) {
    if (level < 1) throw UsageError("root level must be positive");
    std::int64_t e = t % level;
    if (e < 0) e += level;
    std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
    raw[static_cast<std::size_t>(e)] = Rational(1);
    return CyclotomicNumber::from_coeffs(level, std::move(raw));
}

std::vector<CyclotomicNumber> root_power_table(std::int64_t level) {
    std::vector<CyclotomicNumber> powers;
    powers.reserve(static_cast<std::size_t>(level));
    powers.push_back(CyclotomicNumber::one(level));
    for (std::int64_t u = 1; u < level; ++u) {
        const std::vector<Rational>& prev = powers.back().coeffs();
        std::vector<Rational> shifted(prev.size() + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) shifted[i + 1] = prev[i];
        powers.push_back(CyclotomicNumber::from_coeffs(level, std::move(shifted)));
    }
    return powers;
}

CyclotomicNumber pow(const CyclotomicNumber& base, std::uint64_t exp) {
    CyclotomicNumber acc = CyclotomicNumber::one(base.level());
    CyclotomicNumber sq = base;
    while (exp > 0) {
        if (exp & 1) acc *= sq;
        exp >>= 1;
        if (exp > 0) sq *= sq;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
    os << "[zeta_" << x.level() << "]";
    bool first = true;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const Rational& q = x.coeffs()[i];
        if (q.is_zero()) continue;
        os << (first ? " " : " + ") << q.str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << " 0";
    return os;
}

} // namespace partfun
