#include "partfun/partial_fractions.hpp"

#include <numeric>

#include "partfun/sequences.hpp"

namespace partfun {

const CyclotomicNumber& PfdTable::coefficient(std::int64_t root_power, std::int64_t order) const {
    for (const PfdEntry& e : entries)
        if (e.root_power == root_power && e.order == order) return e.coefficient;
    throw IndexOutOfRangeError("no partial-fraction entry at root power " +
                               std::to_string(root_power) + ", order " + std::to_string(order));
}

namespace {

// c_{gamma,m} = gamma^m (m-1)! sum_{l=m}^{mult} (-1)^{l-m} S(l,m) R_{gamma,l}
std::vector<CyclotomicNumber> invert_polynomial_part(
    std::int64_t D, std::int64_t t, const std::vector<CyclotomicNumber>& parts) {
    const std::int64_t mult = static_cast<std::int64_t>(parts.size());
    std::vector<CyclotomicNumber> cs;
    cs.reserve(parts.size());
    for (std::int64_t m = 1; m <= mult; ++m) {
        CyclotomicNumber acc = CyclotomicNumber::zero(D);
        for (std::int64_t l = m; l <= mult; ++l) {
            CyclotomicNumber term = parts[static_cast<std::size_t>(l - 1)] *
                                    Rational(stirling_partition(l, m));
            if ((l - m) % 2 == 0) acc += term; else acc -= term;
        }
        cs.push_back(acc * Rational(factorial(static_cast<std::uint64_t>(m - 1))) *
                     root_power(D, t * m));
    }
    return cs;
}

} // namespace

PfdTable pfd_table(const QuasiPolynomial& qp) {
    return pfd_table(wave_table(qp));
}

PfdTable pfd_table(const WaveTable& wt) {
    PfdTable table;
    table.spec = wt.spec;
    for (const auto& [t, parts] : wt.roots) {
        std::vector<CyclotomicNumber> cs = invert_polynomial_part(wt.spec.D, t, parts);
        for (std::size_t i = 0; i < cs.size(); ++i)
            table.entries.push_back(PfdEntry{t, static_cast<std::int64_t>(i) + 1,
                                             std::move(cs[i])});
    }
    return table;
}

Rational reexpand(const PfdTable& table, std::int64_t n) {
    if (n < 0) throw UsageError("re-expansion requires n >= 0");
    const std::int64_t D = table.spec.D;
    CyclotomicNumber acc = CyclotomicNumber::zero(D);
    for (const PfdEntry& e : table.entries) {
        // gamma^{-n} * c / gamma^l * C(n+l-1, l-1)
        CyclotomicNumber term = e.coefficient * Rational(binomial(n + e.order - 1, e.order - 1));
        term *= root_power(D, -e.root_power * ((n + e.order) % D));
        acc += term;
    }
    return acc.as_rational();
}

CyclotomicNumber pfd_coefficient_from_f(const FVector& fv, std::int64_t j, std::int64_t m) {
    const TupleSpec& spec = fv.spec;
    if (j < 1) throw UsageError("root index must be positive");
    const std::int64_t mult = multiplicity(spec, j);
    if (m < 1 || m > mult)
        throw IndexOutOfRangeError("order " + std::to_string(m) + " outside 1.." +
                                   std::to_string(mult) + " at index " + std::to_string(j));
    const std::vector<CyclotomicNumber> parts = wave_polynomial_from_f(fv, j);
    CyclotomicNumber acc = CyclotomicNumber::zero(spec.D);
    for (std::int64_t l = m; l <= mult; ++l) {
        CyclotomicNumber term = parts[static_cast<std::size_t>(l - 1)] *
                                Rational(stirling_partition(l, m));
        if ((l - m) % 2 == 0) acc += term; else acc -= term;
    }
    return acc * Rational(factorial(static_cast<std::uint64_t>(m - 1))) *
           root_power(spec.D, (spec.D / j) * m);
}

Rational unit_root_coefficient(const TupleSpec& spec, std::int64_t m) {
    if (m < 1 || m > spec.r)
        throw IndexOutOfRangeError("order " + std::to_string(m) + " outside 1.." +
                                   std::to_string(spec.r));
    Integer prod_a(1);
    for (std::int64_t ai : spec.a) prod_a *= Integer(static_cast<long>(ai));

    Rational sum;
    for (std::int64_t l = m; l <= spec.r; ++l)
        sum += Rational(stirling_partition(l, m), factorial(static_cast<std::uint64_t>(l - 1))) *
               bernoulli_composition_sum(spec.a, spec.r - l);
    Rational out = Rational(factorial(static_cast<std::uint64_t>(m - 1)), prod_a) * sum;
    if ((spec.r - m) % 2 != 0) out = -out;
    return out;
}

namespace {

TupleSpec ladder_spec(std::int64_t r) {
    if (r < 1) throw BadIndexError("r must be >= 1");
    std::vector<std::int64_t> a(static_cast<std::size_t>(r));
    std::iota(a.begin(), a.end(), std::int64_t{1});
    return make_spec(std::move(a));
}

} // namespace

CyclotomicNumber rademacher_coefficient(std::int64_t r, std::int64_t h, std::int64_t k,
                                        std::int64_t ell) {
    if (r < 1 || k < 1 || k > r || h < 0 || h >= k || std::gcd(h, k) != 1)
        throw BadIndexError("need 0 <= h < k <= r with gcd(h,k) = 1");
    if (ell < 1 || ell > r / k)
        throw BadIndexError("order outside 1..floor(r/k)");
    const TupleSpec spec = ladder_spec(r);
    const PfdTable table = pfd_table(quasipolynomial(spec));
    // omega_{hk} = zeta_k^h; the (z-omega)^{-l} convention flips the sign by (-1)^l
    const std::int64_t t = (spec.D / k) * h;
    CyclotomicNumber c = table.coefficient(t, ell);
    if (ell % 2 != 0) c *= Rational(-1);
    return c;
}

Rational rademacher_unit_closed_form(std::int64_t r, std::int64_t m) {
    if (r < 1) throw BadIndexError("r must be >= 1");
    if (m < 1 || m > r) throw IndexOutOfRangeError("order outside 1..r");
    std::vector<std::int64_t> ladder(static_cast<std::size_t>(r));
    std::iota(ladder.begin(), ladder.end(), std::int64_t{1});

    Rational sum;
    for (std::int64_t l = m; l <= r; ++l)
        sum += Rational(stirling_partition(l, m), factorial(static_cast<std::uint64_t>(l - 1))) *
               bernoulli_composition_sum(ladder, r - l);
    Rational out = Rational(factorial(static_cast<std::uint64_t>(m - 1)), factorial(static_cast<std::uint64_t>(r))) * sum;
    if (r % 2 != 0) out = -out;
    return out;
}

} // namespace partfun
