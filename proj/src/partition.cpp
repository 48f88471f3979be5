#include "partfun/partition.hpp"

#include <numeric>

#include "partfun/errors.hpp"
#include "partfun/int_polynomial.hpp"
#include "partfun/sequences.hpp"

namespace partfun {

TupleSpec make_spec(std::vector<std::int64_t> a,
                    std::optional<std::int64_t> period_override) {
    if (a.empty()) throw EmptyTupleError();
    for (std::int64_t ai : a)
        if (ai < 1)
            throw EmptyTupleError("tuple entries must be positive, got " + std::to_string(ai));

    Integer lcm(1);
    for (std::int64_t ai : a) {
        Integer v(static_cast<long>(ai));
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_mpz_t());
    }
    if (!lcm.fits_slong_p())
        throw UsageError("lcm of the tuple does not fit a machine word");

    TupleSpec spec;
    spec.a = std::move(a);
    spec.r = static_cast<std::int64_t>(spec.a.size());
    spec.D = lcm.get_si();
    if (period_override) {
        const std::int64_t P = *period_override;
        if (P < 1 || P % spec.D != 0)
            throw NotCommonMultipleError("period " + std::to_string(P) +
                                         " is not a common multiple of the tuple");
        spec.D = P;
    }
    spec.sigma = std::accumulate(spec.a.begin(), spec.a.end(), std::int64_t{0});
    spec.d = spec.r * spec.D - spec.sigma;
    return spec;
}

std::vector<Integer> oracle_table(const TupleSpec& spec, std::int64_t nmax) {
    if (nmax < 0) throw UsageError("oracle table needs nmax >= 0");
    std::vector<Integer> ways(static_cast<std::size_t>(nmax) + 1, Integer(0));
    ways[0] = 1;
    for (std::int64_t coin : spec.a)
        for (std::int64_t s = coin; s <= nmax; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - coin)];
    return ways;
}

Integer oracle_count(const TupleSpec& spec, std::int64_t n) {
    if (n < 0) return Integer(0);
    return oracle_table(spec, n).back();
}

FVector f_vector(const TupleSpec& spec) {
    IntPolynomial acc = IntPolynomial::constant(1);
    for (std::int64_t ai : spec.a) {
        const std::int64_t terms = spec.D / ai;
        std::vector<Integer> geo(static_cast<std::size_t>(ai * (terms - 1)) + 1, Integer(0));
        for (std::int64_t k = 0; k < terms; ++k)
            geo[static_cast<std::size_t>(ai * k)] = 1;
        acc = IntPolynomial(std::move(geo)) * acc;
    }
    FVector fv;
    fv.spec = spec;
    fv.f = acc.coeffs();
    fv.f.resize(static_cast<std::size_t>(spec.d) + 1, Integer(0));
    return fv;
}

Integer f_by_inclusion_exclusion(const TupleSpec& spec, std::int64_t n) {
    if (n < 0) return Integer(0);
    Integer acc(0);
    for (std::int64_t j = 0; j <= n / spec.D; ++j) {
        const Integer term = binomial(spec.r, j) * oracle_count(spec, n - j * spec.D);
        if (j % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

Integer count_from_f(const FVector& fv, std::int64_t n) {
    if (n < 0) return Integer(0);
    const TupleSpec& spec = fv.spec;
    Integer acc(0);
    for (std::int64_t j = 0; j <= n / spec.D; ++j)
        acc += binomial(spec.r + j - 1, j) * fv.at(n - j * spec.D);
    return acc;
}

Integer count_residue_product(const FVector& fv, std::int64_t n) {
    if (n < 0) return Integer(0);
    const TupleSpec& spec = fv.spec;
    Integer acc(0);
    for (std::int64_t s = n % spec.D; s <= spec.d; s += spec.D) {
        const Integer& fs = fv.f[static_cast<std::size_t>(s)];
        if (sgn(fs) == 0) continue;
        const std::int64_t q = (n - s) / spec.D;
        Integer prod(1);
        for (std::int64_t l = 1; l <= spec.r - 1; ++l)
            prod *= Integer(static_cast<long>(q + l));
        acc += fs * prod;
    }
    const Integer fac = factorial(static_cast<std::uint64_t>(spec.r - 1));
    if (!mpz_divisible_p(acc.get_mpz_t(), fac.get_mpz_t()))
        throw AuditError("residue product sum is not divisible by (r-1)!");
    Integer out;
    mpz_divexact(out.get_mpz_t(), acc.get_mpz_t(), fac.get_mpz_t());
    return out;
}

QuasiPolynomial quasipolynomial(const FVector& fv) {
    const TupleSpec& spec = fv.spec;
    const std::size_t r = static_cast<std::size_t>(spec.r);
    const std::size_t D = static_cast<std::size_t>(spec.D);

    // coefficient of x^k in prod_{l=1}^{r-1}(x+l)
    std::vector<Integer> stir(r);
    for (std::size_t k = 0; k < r; ++k)
        stir[k] = stirling_cycle(spec.r, static_cast<std::int64_t>(k) + 1);
    std::vector<Rational> inv_dpow(r);
    for (std::size_t k = 0; k < r; ++k)
        inv_dpow[k] = Rational(Integer(1), pow_integer(Integer(static_cast<long>(spec.D)), k));

    QuasiPolynomial qp;
    qp.spec = spec;
    qp.coeff.assign(r, std::vector<Rational>(D));

    std::vector<Integer> spow(r);
    for (std::int64_t s = 0; s <= spec.d; ++s) {
        const Integer& fs = fv.f[static_cast<std::size_t>(s)];
        if (sgn(fs) == 0) continue;
        spow[0] = 1;
        for (std::size_t e = 1; e < r; ++e) spow[e] = spow[e - 1] * Integer(static_cast<long>(s));
        const std::size_t v = static_cast<std::size_t>(s % spec.D);
        const Rational fsq{fs};
        for (std::size_t m = 0; m < r; ++m) {
            Rational inner;
            for (std::size_t k = m; k < r; ++k) {
                Rational term = Rational(stir[k] * binomial(static_cast<std::int64_t>(k),
                                                            static_cast<std::int64_t>(m)) *
                                         spow[k - m]) * inv_dpow[k];
                if ((k - m) % 2 == 0) inner += term; else inner -= term;
            }
            qp.coeff[m][v] += fsq * inner;
        }
    }

    const Rational inv_fac = Rational(Integer(1), factorial(static_cast<std::uint64_t>(spec.r - 1)));
    for (std::size_t m = 0; m < r; ++m)
        for (std::size_t v = 0; v < D; ++v)
            qp.coeff[m][v] *= inv_fac;
    return qp;
}

QuasiPolynomial quasipolynomial(const TupleSpec& spec) {
    return quasipolynomial(f_vector(spec));
}

Rational QuasiPolynomial::eval_rational(std::int64_t n) const {
    if (n < 0) throw UsageError("quasi-polynomial evaluation requires n >= 0");
    const std::size_t v = static_cast<std::size_t>(n % spec.D);
    Rational acc;
    for (std::size_t m = coeff.size(); m-- > 0;) {
        acc *= Rational(static_cast<long>(n));
        acc += coeff[m][v];
    }
    return acc;
}

Integer QuasiPolynomial::eval(std::int64_t n) const {
    return eval_rational(n).to_integer();
}

std::vector<Rational> polynomial_part(const TupleSpec& spec) {
    const std::size_t r = static_cast<std::size_t>(spec.r);
    Integer prod_a(1);
    for (std::int64_t ai : spec.a) prod_a *= Integer(static_cast<long>(ai));

    std::vector<Rational> coeffs(r);
    for (std::size_t u = 0; u < r; ++u) {
        Rational c = bernoulli_composition_sum(spec.a, static_cast<std::int64_t>(u)) /
                     Rational(prod_a * factorial(static_cast<std::uint64_t>(r - 1 - u)));
        if (u % 2 == 1) c = -c;
        coeffs[r - 1 - u] = c;
    }
    return coeffs;
}

Rational eval_polynomial(const std::vector<Rational>& coeffs, std::int64_t n) {
    Rational acc;
    for (std::size_t m = coeffs.size(); m-- > 0;) {
        acc *= Rational(static_cast<long>(n));
        acc += coeffs[m];
    }
    return acc;
}

bool vanishes(const FVector& fv, std::int64_t n) {
    if (n < 0) throw UsageError("vanishing test requires n >= 0");
    const TupleSpec& spec = fv.spec;
    for (std::int64_t s = n % spec.D; s <= spec.d && s <= n; s += spec.D)
        if (sgn(fv.f[static_cast<std::size_t>(s)]) > 0) return false;
    return true;
}

CongruenceData congruence_data(const FVector& fv, std::int64_t n) {
    if (n < 0) throw UsageError("congruence data requires n >= 0");
    const TupleSpec& spec = fv.spec;
    const std::int64_t lo = n / spec.D;                                  // floor
    const std::int64_t hi = (n + spec.sigma + spec.D - 1) / spec.D;      // ceil
    CongruenceData out;
    out.k = lo - hi + spec.r;
    out.modulus = 1;
    for (std::int64_t t = lo + 1; t <= hi - 1; ++t)
        out.modulus *= Integer(static_cast<long>(t));
    out.value = factorial(static_cast<std::uint64_t>(spec.r - 1)) * count_from_f(fv, n);
    return out;
}

} // namespace partfun
