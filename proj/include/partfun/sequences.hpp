#ifndef PARTFUN_SEQUENCES_HPP
#define PARTFUN_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "partfun/rational.hpp"

namespace partfun {

Integer factorial(std::uint64_t n);

// C(n, k); zero for k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

// Bernoulli number B_n with the convention t/(e^t - 1) = sum_n B_n t^n / n!,
// so B_1 = -1/2. Memoized; safe for concurrent callers.
Rational bernoulli(std::uint64_t n);

// Unsigned Stirling numbers of the first kind: permutations of n elements
// with k cycles. Zero outside 0 <= k <= n.
Integer stirling_cycle(std::int64_t n, std::int64_t k);

// Stirling numbers of the second kind: partitions of an n-set into k blocks.
Integer stirling_partition(std::int64_t n, std::int64_t k);

// Coefficients of prod_{l=1}^{r-1} (x + l), index = power of x.
// Entry k equals stirling_cycle(r, k + 1).
std::vector<Integer> shifted_factorial_coeffs(std::int64_t r);

// sum over (i_1,...,i_r) with i_1+...+i_r = total of
// prod_t B_{i_t} w_t^{i_t} / i_t!, i.e. the x^total coefficient of
// prod_t sum_i B_i (w_t x)^i / i!.
Rational bernoulli_composition_sum(const std::vector<std::int64_t>& weights,
                                   std::int64_t total);

} // namespace partfun

#endif
