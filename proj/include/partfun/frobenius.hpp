#ifndef PARTFUN_FROBENIUS_HPP
#define PARTFUN_FROBENIUS_HPP

#include <cstdint>
#include <vector>

#include "partfun/partition.hpp"

namespace partfun {

// Upper bound D(r-1) - sigma for the Frobenius number; requires gcd(a) = 1.
std::int64_t frobenius_bound(const TupleSpec& spec);

// Largest n with p_a(n) = 0, or -1 when p_a(n) > 0 for every n >= 0.
// Scans downward from the bound on the f-vector residue classes, then
// confirms the hit against the dynamic-programming oracle.
std::int64_t frobenius_number(const TupleSpec& spec);

struct FrobeniusDual {
    TupleSpec dual;        // (D/a_1, ..., D/a_r) with D = a_1...a_r
    std::int64_t value;    // D(r-1) - sum_i D/a_i, the exact Frobenius number
};

// Closed form for the dual of a pairwise coprime tuple.
FrobeniusDual frobenius_dual(const std::vector<std::int64_t>& a);

} // namespace partfun

#endif
