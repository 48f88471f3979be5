#ifndef PARTFUN_PARTITION_HPP
#define PARTFUN_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "partfun/rational.hpp"

namespace partfun {

// The input sequence a together with its derived constants. p_a(n) counts
// solutions of a_1 x_1 + ... + a_r x_r = n in non-negative integers; its
// quasi-polynomial period is D, a common multiple of the a_i.
struct TupleSpec {
    std::vector<std::int64_t> a;
    std::int64_t r = 0;       // number of parts
    std::int64_t D = 1;       // common multiple of the a_i (lcm by default)
    std::int64_t sigma = 0;   // a_1 + ... + a_r
    std::int64_t d = 0;       // r*D - sigma
};

TupleSpec make_spec(std::vector<std::int64_t> a,
                    std::optional<std::int64_t> period_override = std::nullopt);

// Independent coin-counting dynamic program; the ground truth every
// closed form is checked against. Returns 0 for n < 0.
Integer oracle_count(const TupleSpec& spec, std::int64_t n);

// The same dynamic program, tabulated: entry n holds p_a(n) for 0 <= n <= nmax.
std::vector<Integer> oracle_table(const TupleSpec& spec, std::int64_t nmax);

// Coefficients of (1 - z^D)^r / prod_i (1 - z^{a_i}), a reciprocal
// polynomial of degree d. f[n] counts box-constrained representations
// a_1 j_1 + ... + a_r j_r = n with 0 <= j_i <= D/a_i - 1.
struct FVector {
    TupleSpec spec;
    std::vector<Integer> f;   // index 0..d

    Integer at(std::int64_t n) const {
        if (n < 0 || n > spec.d) return Integer(0);
        return f[static_cast<std::size_t>(n)];
    }
};

// Expands prod_i (1 + z^{a_i} + ... + z^{a_i (D/a_i - 1)}) by iterated
// dense multiplication.
FVector f_vector(const TupleSpec& spec);

// f(n) as the alternating sum over p_a(n - jD) with C(r, j) weights.
Integer f_by_inclusion_exclusion(const TupleSpec& spec, std::int64_t n);

// p_a(n) reconstructed from the f-vector with C(r+j-1, j) weights.
Integer count_from_f(const FVector& fv, std::int64_t n);

// p_a(n) = 1/(r-1)! * sum over s = n (mod D) of f(s) * prod_{l=1}^{r-1}
// ((n-s)/D + l). Terms with s > n vanish through the product.
Integer count_residue_product(const FVector& fv, std::int64_t n);

// Period-D table of exact coefficients: p_a(n) = sum_m coeff[m][n mod D] n^m.
struct QuasiPolynomial {
    TupleSpec spec;
    std::vector<std::vector<Rational>> coeff;   // coeff[m][v], m < r, v < D

    Rational eval_rational(std::int64_t n) const;
    // Evaluation is integral for all n >= 0; AuditError otherwise.
    Integer eval(std::int64_t n) const;
};

QuasiPolynomial quasipolynomial(const FVector& fv);
QuasiPolynomial quasipolynomial(const TupleSpec& spec);

// Coefficients of the polynomial part (the degree r-1 average behavior),
// index = power of n, computed from Bernoulli numbers.
std::vector<Rational> polynomial_part(const TupleSpec& spec);

Rational eval_polynomial(const std::vector<Rational>& coeffs, std::int64_t n);

// True iff p_a(n) = 0, decided from the f-vector residue class alone.
bool vanishes(const FVector& fv, std::int64_t n);

// (r-1)! p_a(n) together with the product of the consecutive integers
// floor(n/D)+1 .. ceil((n+sigma)/D)-1, which always divides it.
struct CongruenceData {
    std::int64_t k = 0;
    Integer modulus;
    Integer value;
};

CongruenceData congruence_data(const FVector& fv, std::int64_t n);

} // namespace partfun

#endif
