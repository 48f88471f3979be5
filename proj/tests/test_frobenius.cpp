#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "partfun/frobenius.hpp"
#include "partfun/waves.hpp"

using namespace partfun;

namespace {

// Brute-force Frobenius number: scan p_a(n) with the dynamic program.
std::int64_t brute_frobenius(const TupleSpec& spec, std::int64_t limit) {
    const std::vector<Integer> table = oracle_table(spec, limit);
    std::int64_t best = -1;
    for (std::int64_t n = 0; n <= limit; ++n)
        if (sgn(table[static_cast<std::size_t>(n)]) == 0) best = n;
    return best;
}

} // namespace

TEST_CASE("bound") {
    CHECK(frobenius_bound(make_spec({2, 3})) == 1);
    CHECK(frobenius_bound(make_spec({3, 5})) == 7);
    CHECK(frobenius_bound(make_spec({1})) == -1);
    CHECK_THROWS_AS(frobenius_bound(make_spec({4, 6, 10})), GcdNotOneError);
    // lcm-based: a period override does not move the bound
    CHECK(frobenius_bound(make_spec({3, 5}, 30)) == 7);
}

TEST_CASE("frobenius number against brute force") {
    CHECK(frobenius_number(make_spec({2, 3})) == 1);
    CHECK(frobenius_number(make_spec({3, 5})) == 7);
    CHECK(frobenius_number(make_spec({3, 5, 7})) == 4);
    CHECK(frobenius_number(make_spec({1})) == -1);
    CHECK(frobenius_number(make_spec({1, 2, 3})) == -1);

    for (const auto& a : {std::vector<std::int64_t>{2, 3}, {3, 5}, {3, 5, 7}, {2, 3, 5},
                          {6, 10, 15}, {1, 2, 3, 4}, {3, 4, 5}, {5, 7, 9, 11}}) {
        const TupleSpec spec = make_spec(a);
        const std::int64_t bound = frobenius_bound(spec);
        CHECK(frobenius_number(spec) == brute_frobenius(spec, std::max<std::int64_t>(bound, 0)));
        CHECK(frobenius_number(spec) <= bound);
    }

    CHECK_THROWS_AS(frobenius_number(make_spec({4, 6})), GcdNotOneError);
}

TEST_CASE("no vanishing beyond the bound") {
    for (const auto& a : {std::vector<std::int64_t>{2, 3}, {3, 5}, {3, 5, 7},
                          {6, 10, 15}, {1, 2, 3, 4, 5, 6}}) {
        const TupleSpec spec = make_spec(a);
        const std::int64_t bound = frobenius_bound(spec);
        const FVector fv = f_vector(spec);
        for (std::int64_t n = std::max<std::int64_t>(bound + 1, 0);
             n <= bound + 2 * spec.D; ++n)
            CHECK_FALSE(vanishes(fv, n));
    }
}

TEST_CASE("appending an entry never raises the frobenius number") {
    const std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> pairs{
        {{1}, {1, 1}}, {{1, 2}, {1, 2, 3}}, {{1, 2, 3}, {1, 2, 3, 4}},
        {{2, 3}, {2, 3, 5}}, {{3, 5}, {3, 5, 7}}};
    for (const auto& [base, extended] : pairs)
        CHECK(frobenius_number(make_spec(extended)) <= frobenius_number(make_spec(base)));
}

TEST_CASE("dual closed form") {
    {
        const FrobeniusDual dual = frobenius_dual({2, 3});
        CHECK(dual.dual.a == std::vector<std::int64_t>{3, 2});
        CHECK(dual.value == 1);
        CHECK(frobenius_number(dual.dual) == dual.value);
    }
    {
        const FrobeniusDual dual = frobenius_dual({2, 3, 5});
        CHECK(dual.dual.a == std::vector<std::int64_t>{15, 10, 6});
        CHECK(dual.value == 29);
        CHECK(frobenius_number(dual.dual) == dual.value);
    }
    {
        const FrobeniusDual dual = frobenius_dual({7});
        CHECK(dual.dual.a == std::vector<std::int64_t>{1});
        CHECK(dual.value == -1);
        CHECK(frobenius_number(dual.dual) == -1);
    }
    {
        // D = 60 here; still a desk-scale brute force
        const FrobeniusDual dual = frobenius_dual({3, 4, 5});
        CHECK(dual.dual.a == std::vector<std::int64_t>{20, 15, 12});
        CHECK(dual.value == 73);
        CHECK(frobenius_number(dual.dual) == dual.value);
        CHECK(brute_frobenius(dual.dual, frobenius_bound(dual.dual)) == 73);
    }

    // every pairwise coprime corpus tuple whose dual is scannable
    for (const auto& a : {std::vector<std::int64_t>{1}, {1, 1}, {1, 2}, {2, 3}, {3, 5},
                          {1, 2, 3}, {2, 3, 5}, {3, 5, 7}}) {
        const FrobeniusDual dual = frobenius_dual(a);
        REQUIRE(dual.dual.D <= 1000);
        CHECK(frobenius_number(dual.dual) == dual.value);
        CHECK(brute_frobenius(dual.dual,
                              std::max<std::int64_t>(frobenius_bound(dual.dual), 0)) ==
              dual.value);
    }

    CHECK_THROWS_AS(frobenius_dual({2, 4}), NotPairwiseCoprimeError);
    CHECK_THROWS_AS(frobenius_dual({6, 10, 15}), NotPairwiseCoprimeError);
}
