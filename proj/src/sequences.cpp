#include "partfun/sequences.hpp"

#include <algorithm>
#include <mutex>

namespace partfun {

Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw UsageError("binomial requires n >= 0");
    if (k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

// Triangular tables grown on demand. A single mutex per table keeps
// concurrent readers and writers consistent; all results are returned
// by value.
std::mutex g_bernoulli_mutex;
std::mutex g_cycle_mutex;
std::mutex g_partition_mutex;

std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1)};
    return cache;
}

void grow_triangle(std::vector<std::vector<Integer>>& rows, std::size_t n, bool cycle_kind) {
    while (rows.size() <= n) {
        const std::size_t m = rows.size();           // building row m
        std::vector<Integer> row(m + 1, Integer(0));
        const std::vector<Integer>& prev = rows[m - 1];
        for (std::size_t k = 1; k <= m; ++k) {
            Integer up = (k <= m - 1) ? prev[k] : Integer(0);
            if (cycle_kind)
                row[k] = prev[k - 1] + Integer(static_cast<long>(m - 1)) * up;
            else
                row[k] = prev[k - 1] + Integer(static_cast<long>(k)) * up;
        }
        rows.push_back(std::move(row));
    }
}

Integer triangle_value(std::vector<std::vector<Integer>>& rows, std::mutex& mu,
                       std::int64_t n, std::int64_t k, bool cycle_kind) {
    if (n < 0) throw UsageError("Stirling numbers require n >= 0");
    if (k < 0 || k > n) return Integer(0);
    std::lock_guard<std::mutex> lock(mu);
    grow_triangle(rows, static_cast<std::size_t>(n), cycle_kind);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

} // namespace

Rational bernoulli(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    std::vector<Rational>& cache = bernoulli_cache();
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    while (cache.size() <= n) {
        const std::uint64_t m = cache.size();
        Rational acc;
        for (std::uint64_t k = 0; k < m; ++k)
            acc += Rational(binomial(static_cast<std::int64_t>(m) + 1,
                                     static_cast<std::int64_t>(k))) * cache[k];
        cache.push_back(-acc / Rational(Integer(static_cast<unsigned long>(m + 1))));
    }
    return cache[n];
}

Integer stirling_cycle(std::int64_t n, std::int64_t k) {
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    return triangle_value(rows, g_cycle_mutex, n, k, /*cycle_kind=*/true);
}

Integer stirling_partition(std::int64_t n, std::int64_t k) {
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    return triangle_value(rows, g_partition_mutex, n, k, /*cycle_kind=*/false);
}

std::vector<Integer> shifted_factorial_coeffs(std::int64_t r) {
    if (r < 1) throw UsageError("shifted_factorial_coeffs requires r >= 1");
    std::vector<Integer> coeffs{Integer(1)};       // empty product
    for (std::int64_t l = 1; l <= r - 1; ++l) {
        std::vector<Integer> next(coeffs.size() + 1, Integer(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * Integer(static_cast<long>(l));
            next[i + 1] += coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

Rational bernoulli_composition_sum(const std::vector<std::int64_t>& weights,
                                   std::int64_t total) {
    if (total < 0) throw UsageError("composition total must be >= 0");
    const std::size_t cap = static_cast<std::size_t>(total);
    std::vector<Rational> prod(cap + 1);
    prod[0] = Rational(1);
    std::vector<Rational> next(cap + 1);
    for (std::int64_t w : weights) {
        // truncated series sum_i B_i (w x)^i / i!
        std::vector<Rational> factor(cap + 1);
        for (std::size_t i = 0; i <= cap; ++i)
            factor[i] = bernoulli(i) *
                        Rational(pow_integer(Integer(static_cast<long>(w)), i), factorial(i));
        std::fill(next.begin(), next.end(), Rational());
        for (std::size_t i = 0; i <= cap; ++i) {
            if (prod[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= cap; ++j)
                next[i + j] += prod[i] * factor[j];
        }
        prod.swap(next);
    }
    return prod[cap];
}

} // namespace partfun
