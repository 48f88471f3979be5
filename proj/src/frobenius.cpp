#include "partfun/frobenius.hpp"

#include <numeric>

#include "partfun/errors.hpp"
#include "partfun/waves.hpp"

namespace partfun {

namespace {

void require_gcd_one(const TupleSpec& spec) {
    std::int64_t g = 0;
    for (std::int64_t ai : spec.a) g = std::gcd(g, ai);
    if (g != 1)
        throw GcdNotOneError("Frobenius number needs gcd(a) = 1, got gcd " + std::to_string(g));
}

} // namespace

std::int64_t frobenius_bound(const TupleSpec& spec) {
    require_gcd_one(spec);
    // Uses the least common multiple, so the bound does not move under a
    // period override on the spec.
    std::int64_t l = 1;
    for (std::int64_t ai : spec.a) l = std::lcm(l, ai);
    return l * (spec.r - 1) - spec.sigma;
}

std::int64_t frobenius_number(const TupleSpec& spec) {
    const std::int64_t bound = frobenius_bound(spec);
    const FVector fv = f_vector(spec);
    for (std::int64_t n = bound; n >= 0; --n) {
        if (!vanishes(fv, n)) continue;
        if (sgn(oracle_count(spec, n)) != 0)
            throw AuditError("vanishing test disagrees with the oracle at n = " +
                             std::to_string(n));
        return n;
    }
    return -1;   // every n >= 0 is representable
}

FrobeniusDual frobenius_dual(const std::vector<std::int64_t>& a) {
    const TupleSpec base = make_spec(a);
    if (!pairwise_coprime(base))
        throw NotPairwiseCoprimeError("dual closed form needs pairwise coprime entries");

    Integer prod(1);
    for (std::int64_t ai : base.a) prod *= Integer(static_cast<long>(ai));
    if (!prod.fits_slong_p())
        throw UsageError("product of the tuple does not fit a machine word");
    const std::int64_t D = prod.get_si();

    std::vector<std::int64_t> dual(base.a.size());
    std::int64_t dual_sum = 0;
    for (std::size_t i = 0; i < base.a.size(); ++i) {
        dual[i] = D / base.a[i];
        dual_sum += dual[i];
    }
    FrobeniusDual out{make_spec(std::move(dual)), D * (base.r - 1) - dual_sum};
    return out;
}

} // namespace partfun
