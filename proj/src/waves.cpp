#include "partfun/waves.hpp"

#include <algorithm>
#include <numeric>

#include "partfun/sequences.hpp"

namespace partfun {

std::int64_t multiplicity(const TupleSpec& spec, std::int64_t j) {
    if (j < 1) throw UsageError("wave index must be positive");
    std::int64_t m = 0;
    for (std::int64_t ai : spec.a)
        if (ai % j == 0) ++m;
    return m;
}

std::int64_t root_multiplicity(const TupleSpec& spec, const CyclotomicNumber& root) {
    std::int64_t m = 0;
    for (std::int64_t ai : spec.a)
        if (pow(root, static_cast<std::uint64_t>(ai)).is_one()) ++m;
    return m;
}

std::vector<std::int64_t> wave_indices(const TupleSpec& spec) {
    std::vector<std::int64_t> js;
    const std::int64_t amax = *std::max_element(spec.a.begin(), spec.a.end());
    for (std::int64_t j = 1; j <= amax; ++j)
        if (multiplicity(spec, j) > 0) js.push_back(j);
    return js;
}

std::vector<CyclotomicNumber> root_polynomial_part(const QuasiPolynomial& qp,
                                                   const CyclotomicNumber& root) {
    const TupleSpec& spec = qp.spec;
    CyclotomicNumber gamma = root.lifted_to(spec.D);
    if (!pow(gamma, static_cast<std::uint64_t>(spec.D)).is_one())
        throw NotARootError("value is not a D-th root of unity");

    const std::int64_t mult = root_multiplicity(spec, gamma);
    const Rational inv_d(Integer(1), Integer(static_cast<long>(spec.D)));

    std::vector<CyclotomicNumber> parts(static_cast<std::size_t>(spec.r),
                                        CyclotomicNumber::zero(spec.D));
    CyclotomicNumber gpow = CyclotomicNumber::one(spec.D);
    for (std::int64_t v = 0; v < spec.D; ++v) {
        for (std::size_t m = 0; m < parts.size(); ++m) {
            const Rational& dm = qp.coeff[m][static_cast<std::size_t>(v)];
            if (!dm.is_zero()) parts[m] += gpow * dm;
        }
        if (v + 1 < spec.D) gpow *= gamma;
    }
    for (CyclotomicNumber& p : parts) p *= inv_d;

    // degree bound: coefficients above the pole order vanish identically
    for (std::size_t m = static_cast<std::size_t>(mult); m < parts.size(); ++m)
        if (!parts[m].is_zero())
            throw AuditError("polynomial part exceeds the pole order at this root");
    parts.resize(static_cast<std::size_t>(mult), CyclotomicNumber::zero(spec.D));
    return parts;
}

WaveTable wave_table(const QuasiPolynomial& qp) {
    const TupleSpec& spec = qp.spec;
    WaveTable wt;
    wt.spec = spec;
    wt.indices = wave_indices(spec);
    const std::vector<CyclotomicNumber> powers = root_power_table(spec.D);
    const Rational inv_d(Integer(1), Integer(static_cast<long>(spec.D)));
    for (std::int64_t t = 0; t < spec.D; ++t) {
        std::int64_t mult = 0;
        for (std::int64_t ai : spec.a)
            if ((t * ai) % spec.D == 0) ++mult;
        if (mult == 0) continue;

        std::vector<CyclotomicNumber> parts(static_cast<std::size_t>(spec.r),
                                            CyclotomicNumber::zero(spec.D));
        for (std::int64_t v = 0; v < spec.D; ++v) {
            const CyclotomicNumber& gpow = powers[static_cast<std::size_t>((t * v) % spec.D)];
            for (std::size_t m = 0; m < parts.size(); ++m) {
                const Rational& dm = qp.coeff[m][static_cast<std::size_t>(v)];
                if (!dm.is_zero()) parts[m] += gpow * dm;
            }
        }
        for (CyclotomicNumber& p : parts) p *= inv_d;
        for (std::size_t m = static_cast<std::size_t>(mult); m < parts.size(); ++m)
            if (!parts[m].is_zero())
                throw AuditError("polynomial part exceeds the pole order at this root");
        parts.resize(static_cast<std::size_t>(mult), CyclotomicNumber::zero(spec.D));
        wt.roots.emplace(t, std::move(parts));
    }
    return wt;
}

namespace {

// P_{zeta^t}(n) * zeta^{-tn} from stored coefficients.
CyclotomicNumber eval_root_wave(const WaveTable& wt, std::int64_t t, std::int64_t n) {
    const std::int64_t D = wt.spec.D;
    const std::vector<CyclotomicNumber>& parts = wt.roots.at(t);
    CyclotomicNumber poly = CyclotomicNumber::zero(D);
    Integer npow(1);
    for (const CyclotomicNumber& coeff : parts) {
        poly += coeff * Rational(npow);
        npow *= Integer(static_cast<long>(n));
    }
    return poly * root_power(D, -(t % D) * (n % D));
}

} // namespace

CyclotomicNumber wave_eval(const WaveTable& wt, std::int64_t j, std::int64_t n, WaveMode mode) {
    const TupleSpec& spec = wt.spec;
    if (n < 0) throw UsageError("wave evaluation requires n >= 0");
    if (j < 1 || multiplicity(spec, j) == 0)
        throw NotAWaveIndexError("index " + std::to_string(j) + " divides no tuple entry");
    const std::int64_t stride = spec.D / j;
    if (mode == WaveMode::kSingleRoot)
        return eval_root_wave(wt, stride % spec.D, n);

    CyclotomicNumber sum = CyclotomicNumber::zero(spec.D);
    for (std::int64_t u = 0; u < j; ++u) {
        if (std::gcd(u, j) != 1) continue;
        sum += eval_root_wave(wt, (stride * u) % spec.D, n);
    }
    // conjugate roots pair off; the aggregate is rational
    sum.as_rational();
    return sum;
}

std::vector<CyclotomicNumber> wave_polynomial_from_f(const FVector& fv, std::int64_t j) {
    const TupleSpec& spec = fv.spec;
    const std::int64_t mult = multiplicity(spec, j);
    if (j < 1 || mult == 0)
        throw NotAWaveIndexError("index " + std::to_string(j) + " divides no tuple entry");

    const std::size_t r = static_cast<std::size_t>(spec.r);
    // power sums of the f-vector per residue class mod j
    std::vector<std::vector<Integer>> ps(static_cast<std::size_t>(j),
                                         std::vector<Integer>(r, Integer(0)));
    for (std::int64_t s = 0; s <= spec.d; ++s) {
        const Integer& fs = fv.f[static_cast<std::size_t>(s)];
        if (sgn(fs) == 0) continue;
        std::vector<Integer>& row = ps[static_cast<std::size_t>(s % j)];
        Integer spow = fs;
        for (std::size_t e = 0; e < r; ++e) {
            row[e] += spow;
            spow *= Integer(static_cast<long>(s));
        }
    }

    std::vector<Integer> stir(r);
    for (std::size_t k = 0; k < r; ++k)
        stir[k] = stirling_cycle(spec.r, static_cast<std::int64_t>(k) + 1);
    std::vector<Rational> inv_dpow(r);
    for (std::size_t k = 0; k < r; ++k)
        inv_dpow[k] = Rational(Integer(1), pow_integer(Integer(static_cast<long>(spec.D)), k));
    const Rational prefactor = Rational(Integer(1),
        Integer(static_cast<long>(spec.D)) * factorial(static_cast<std::uint64_t>(spec.r - 1)));

    std::vector<CyclotomicNumber> coeffs(r, CyclotomicNumber::zero(spec.D));
    const std::int64_t stride = spec.D / j;
    for (std::int64_t l = 1; l <= j; ++l) {
        const std::vector<Integer>& row = ps[static_cast<std::size_t>(l % j)];
        const CyclotomicNumber rho_l = root_power(spec.D, stride * l);
        for (std::size_t m = 1; m <= r; ++m) {
            Rational inner;
            for (std::size_t k = m - 1; k < r; ++k) {
                Rational term = Rational(stir[k] * binomial(static_cast<std::int64_t>(k),
                                                            static_cast<std::int64_t>(m) - 1) *
                                         row[k - m + 1]) * inv_dpow[k];
                if ((k - m + 1) % 2 == 0) inner += term; else inner -= term;
            }
            if (!inner.is_zero()) coeffs[m - 1] += rho_l * (inner * prefactor);
        }
    }

    for (std::size_t m = static_cast<std::size_t>(mult); m < r; ++m)
        if (!coeffs[m].is_zero())
            throw AuditError("wave polynomial exceeds its degree bound");
    coeffs.resize(static_cast<std::size_t>(mult), CyclotomicNumber::zero(spec.D));
    return coeffs;
}

bool pairwise_coprime(const TupleSpec& spec) {
    for (std::size_t i = 0; i < spec.a.size(); ++i)
        for (std::size_t j = i + 1; j < spec.a.size(); ++j)
            if (std::gcd(spec.a[i], spec.a[j]) != 1) return false;
    return true;
}

Integer count_pairwise_coprime(const WaveTable& wt, std::int64_t n) {
    const TupleSpec& spec = wt.spec;
    if (!pairwise_coprime(spec))
        throw NotPairwiseCoprimeError("tuple entries are not pairwise coprime");
    Rational total = eval_polynomial(polynomial_part(spec), n);
    for (std::int64_t j : wt.indices) {
        if (j == 1) continue;
        total += wave_eval(wt, j, n, WaveMode::kSylvester).as_rational();
    }
    return total.to_integer();
}

Integer count_pairwise_coprime(const TupleSpec& spec, std::int64_t n) {
    return count_pairwise_coprime(wave_table(quasipolynomial(spec)), n);
}

} // namespace partfun
