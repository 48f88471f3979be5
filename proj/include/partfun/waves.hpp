#ifndef PARTFUN_WAVES_HPP
#define PARTFUN_WAVES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "partfun/cyclotomic.hpp"
#include "partfun/partition.hpp"

namespace partfun {

// Number of a_i divisible by j; the pole order of the generating function
// at a primitive j-th root of unity.
std::int64_t multiplicity(const TupleSpec& spec, std::int64_t j);

// Number of a_i with root^{a_i} = 1.
std::int64_t root_multiplicity(const TupleSpec& spec, const CyclotomicNumber& root);

// The j >= 1 dividing some a_i, ascending. These index the waves.
std::vector<std::int64_t> wave_indices(const TupleSpec& spec);

// Polynomial-part coefficients of gamma^n p_a(n) for a D-th root of unity
// gamma: entry m-1 holds (1/D) sum_v gamma^v coeff[m-1][v], for
// m = 1..m(gamma). Coefficients beyond m(gamma) are checked to vanish.
std::vector<CyclotomicNumber> root_polynomial_part(const QuasiPolynomial& qp,
                                                   const CyclotomicNumber& root);

enum class WaveMode {
    kSingleRoot,   // P_{zeta_j}(n) zeta_j^{-n} only
    kSylvester,    // summed over all primitive j-th roots; rational
};

struct WaveTable {
    TupleSpec spec;
    std::vector<std::int64_t> indices;                             // wave indices j
    std::map<std::int64_t, std::vector<CyclotomicNumber>> roots;   // t -> R_{zeta_D^t, m}
};

WaveTable wave_table(const QuasiPolynomial& qp);

// W_j(n). Sylvester mode aggregates the full primitive-root orbit, which is
// the mode whose sum over j reconstructs p_a(n); the value is then rational.
CyclotomicNumber wave_eval(const WaveTable& wt, std::int64_t j, std::int64_t n, WaveMode mode);

// Same coefficients as root_polynomial_part at zeta_j, but computed straight
// from the f-vector by grouping tuple sums into residue classes mod j.
std::vector<CyclotomicNumber> wave_polynomial_from_f(const FVector& fv, std::int64_t j);

bool pairwise_coprime(const TupleSpec& spec);

// p_a(n) for pairwise coprime tuples: Bernoulli polynomial part plus the
// degree-0 contributions of the waves with j != 1.
Integer count_pairwise_coprime(const WaveTable& wt, std::int64_t n);
Integer count_pairwise_coprime(const TupleSpec& spec, std::int64_t n);

} // namespace partfun

#endif
