#ifndef PARTFUN_PARTIAL_FRACTIONS_HPP
#define PARTFUN_PARTIAL_FRACTIONS_HPP

#include <cstdint>
#include <vector>

#include "partfun/cyclotomic.hpp"
#include "partfun/partition.hpp"
#include "partfun/waves.hpp"

namespace partfun {

// One term c / (lambda - z)^order of the decomposition of
// 1 / prod_i (1 - z^{a_i}), with lambda = zeta_D^root_power.
struct PfdEntry {
    std::int64_t root_power = 0;
    std::int64_t order = 1;
    CyclotomicNumber coefficient;
};

struct PfdTable {
    TupleSpec spec;
    std::vector<PfdEntry> entries;   // sorted by (root_power, order)

    const CyclotomicNumber& coefficient(std::int64_t root_power, std::int64_t order) const;
};

// c_{lambda,l} for every relevant root, by Stirling inversion of the
// per-root polynomial parts.
PfdTable pfd_table(const QuasiPolynomial& qp);
PfdTable pfd_table(const WaveTable& wt);

// Sums the decomposition back into p_a(n); must be rational (audit).
Rational reexpand(const PfdTable& table, std::int64_t n);

// c_{zeta_j, m} computed from the f-vector route rather than the
// quasi-polynomial table; cross-check for pfd_table.
CyclotomicNumber pfd_coefficient_from_f(const FVector& fv, std::int64_t j, std::int64_t m);

// Closed form for c_{1,m} via Bernoulli numbers. The leading sign is
// (-1)^(r-m); see docs/conventions.md.
Rational unit_root_coefficient(const TupleSpec& spec, std::int64_t m);

// Partial-fraction coefficient c_{hkl}(r) of 1/((1-z)...(1-z^r)) in the
// (z - omega)^{-l} convention, omega = e^{2 pi i h/k}.
CyclotomicNumber rademacher_coefficient(std::int64_t r, std::int64_t h, std::int64_t k,
                                        std::int64_t ell);

// Closed form for c_{01m}(r); equals rademacher_coefficient(r, 0, 1, m).
Rational rademacher_unit_closed_form(std::int64_t r, std::int64_t m);

} // namespace partfun

#endif
