#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "partfun/partition.hpp"
#include "partfun/sequences.hpp"

using namespace partfun;

namespace {

const std::vector<std::vector<std::int64_t>> kCorpus{
    {1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {1, 2, 3}, {2, 3, 5}, {3, 5, 7},
    {1, 2, 3, 4}, {4, 6, 10}, {6, 10, 15}, {1, 2, 3, 4, 5, 6}};

// Counts solutions of sum a_i x_i = n, x_i >= 0, by plain nested search.
Integer enumerate_solutions(const std::vector<std::int64_t>& a, std::int64_t n) {
    if (n < 0) return Integer(0);
    Integer count(0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t rem) -> void {
        if (i + 1 == a.size()) {
            if (rem % a[i] == 0) count += 1;
            return;
        }
        for (std::int64_t x = 0; x * a[i] <= rem; ++x)
            self(self, i + 1, rem - x * a[i]);
    };
    rec(rec, 0, n);
    return count;
}

// Tallies box-constrained tuple sums (0 <= j_i < D/a_i) by enumeration.
std::vector<Integer> enumerate_boxes(const TupleSpec& spec) {
    std::vector<Integer> tally(static_cast<std::size_t>(spec.d) + 1, Integer(0));
    auto rec = [&](auto&& self, std::size_t i, std::int64_t sum) -> void {
        if (i == spec.a.size()) {
            tally[static_cast<std::size_t>(sum)] += 1;
            return;
        }
        for (std::int64_t j = 0; j < spec.D / spec.a[i]; ++j)
            self(self, i + 1, sum + j * spec.a[i]);
    };
    rec(rec, 0, 0);
    return tally;
}

Integer box_volume(const TupleSpec& spec) {
    Integer vol(1);
    for (std::int64_t ai : spec.a) vol *= Integer(static_cast<long>(spec.D / ai));
    return vol;
}

} // namespace

TEST_CASE("make_spec derives the constants") {
    const TupleSpec s1 = make_spec({1, 2});
    CHECK(s1.r == 2);
    CHECK(s1.D == 2);
    CHECK(s1.sigma == 3);
    CHECK(s1.d == 1);

    const TupleSpec s2 = make_spec({2, 3});
    CHECK(s2.D == 6);
    CHECK(s2.sigma == 5);
    CHECK(s2.d == 7);

    const TupleSpec s3 = make_spec({2, 3}, 12);
    CHECK(s3.D == 12);
    CHECK(s3.d == 19);

    CHECK_THROWS_AS(make_spec({}), EmptyTupleError);
    CHECK_THROWS_AS(make_spec({0, 2}), EmptyTupleError);
    CHECK_THROWS_AS(make_spec({2, -3}), EmptyTupleError);
    CHECK_THROWS_AS(make_spec({2, 3}, 7), NotCommonMultipleError);
    CHECK_THROWS_AS(make_spec({2, 3}, 0), NotCommonMultipleError);
}

TEST_CASE("oracle against direct enumeration") {
    CHECK(oracle_count(make_spec({1}), 123) == 1);
    CHECK(oracle_count(make_spec({1, 2}), 4) == enumerate_solutions({1, 2}, 4));
    CHECK(oracle_count(make_spec({1, 2}), 4) == 3);
    CHECK(oracle_count(make_spec({3, 5}), 7) == 0);
    CHECK(oracle_count(make_spec({2, 3, 5}), -3) == 0);

    for (const auto& a : kCorpus) {
        if (a.size() > 4) continue;
        const TupleSpec spec = make_spec(a);
        for (std::int64_t n = 0; n <= 40; ++n)
            CHECK(oracle_count(spec, n) == enumerate_solutions(a, n));
    }
}

TEST_CASE("f-vector values and laws") {
    CHECK(f_vector(make_spec({1, 1})).f == std::vector<Integer>{Integer(1)});
    CHECK(f_vector(make_spec({1, 2})).f == std::vector<Integer>{Integer(1), Integer(1)});
    CHECK(f_vector(make_spec({2, 3})).f ==
          std::vector<Integer>{Integer(1), Integer(0), Integer(1), Integer(1),
                               Integer(1), Integer(1), Integer(0), Integer(1)});

    for (const auto& a : kCorpus) {
        const TupleSpec spec = make_spec(a);
        const FVector fv = f_vector(spec);
        REQUIRE(fv.f.size() == static_cast<std::size_t>(spec.d) + 1);
        CHECK(fv.f[0] == 1);

        Integer mass(0);
        for (const Integer& v : fv.f) mass += v;
        CHECK(mass == box_volume(spec));

        for (std::int64_t n = 0; n <= spec.d; ++n)
            CHECK(fv.at(n) == fv.at(spec.d - n));

        if (box_volume(spec) <= 200000) {
            const std::vector<Integer> tally = enumerate_boxes(spec);
            CHECK(fv.f == tally);
        }
    }
}

TEST_CASE("alternating sum recovers the f-vector") {
    const TupleSpec s12 = make_spec({1, 2});
    CHECK(f_by_inclusion_exclusion(s12, 4) == 0);    // p(4) - 2 p(2) + p(0) = 3 - 4 + 1
    CHECK(f_by_inclusion_exclusion(s12, 0) == 1);
    CHECK(f_by_inclusion_exclusion(make_spec({2, 3}), 7) == 1);

    for (const auto& a : kCorpus) {
        if (a.size() > 4) continue;   // keep the n^2 oracle sweep cheap
        const TupleSpec spec = make_spec(a);
        const FVector fv = f_vector(spec);
        for (std::int64_t n = 0; n <= spec.d + 3 * spec.D; ++n)
            CHECK(f_by_inclusion_exclusion(spec, n) == fv.at(n));
    }
}

TEST_CASE("reconstruction from the f-vector") {
    const FVector fv12 = f_vector(make_spec({1, 2}));
    CHECK(count_from_f(fv12, 0) == 1);
    CHECK(count_from_f(fv12, 4) == 3);    // 1*f(4) + 2*f(2) + 3*f(0)
    CHECK(count_from_f(f_vector(make_spec({2, 3})), 7) == 1);
}

TEST_CASE("residue product route") {
    const FVector fv12 = f_vector(make_spec({1, 2}));
    CHECK(count_residue_product(fv12, 4) == 3);
    CHECK(count_residue_product(f_vector(make_spec({1, 1})), 7) == 8);
    CHECK(count_residue_product(f_vector(make_spec({3, 5})), 7) == 0);
}

TEST_CASE("all closed routes agree with the oracle") {
    for (const auto& a : kCorpus) {
        const TupleSpec spec = make_spec(a);
        const FVector fv = f_vector(spec);
        const QuasiPolynomial qp = quasipolynomial(fv);
        const std::vector<Integer> oracle = oracle_table(spec, 200);
        for (std::int64_t n = 0; n <= 200; ++n) {
            const Integer& want = oracle[static_cast<std::size_t>(n)];
            CHECK(count_from_f(fv, n) == want);
            CHECK(count_residue_product(fv, n) == want);
            CHECK(qp.eval(n) == want);
        }
    }
}

TEST_CASE("quasi-polynomial coefficients") {
    const QuasiPolynomial qp12 = quasipolynomial(make_spec({1, 2}));
    const Rational half(Integer(1), Integer(2));
    CHECK(qp12.coeff[1][0] == half);
    CHECK(qp12.coeff[1][1] == half);
    CHECK(qp12.coeff[0][0] == Rational(1));
    CHECK(qp12.coeff[0][1] == half);

    // independent fit from oracle values: p(v) = d_1(v) v + d_0(v) and
    // p(v + D) = d_1(v)(v + D) + d_0(v)
    {
        const TupleSpec spec = make_spec({1, 2});
        for (std::int64_t v = 0; v < spec.D; ++v) {
            const Rational pv{oracle_count(spec, v)};
            const Rational pvD{oracle_count(spec, v + spec.D)};
            const Rational d1 = (pvD - pv) / Rational(Integer(static_cast<long>(spec.D)));
            const Rational d0 = pv - d1 * Rational(Integer(static_cast<long>(v)));
            CHECK(qp12.coeff[1][static_cast<std::size_t>(v)] == d1);
            CHECK(qp12.coeff[0][static_cast<std::size_t>(v)] == d0);
        }
    }

    const QuasiPolynomial qp1 = quasipolynomial(make_spec({1}));
    CHECK(qp1.coeff.size() == 1);
    CHECK(qp1.coeff[0][0] == Rational(1));

    const QuasiPolynomial qp11 = quasipolynomial(make_spec({1, 1}));
    CHECK(qp11.coeff[1][0] == Rational(1));
    CHECK(qp11.coeff[0][0] == Rational(1));

    // the leading row is never identically zero
    for (const auto& a : kCorpus) {
        const QuasiPolynomial qp = quasipolynomial(make_spec(a));
        bool live = false;
        for (const Rational& q : qp.coeff.back())
            if (!q.is_zero()) live = true;
        CHECK(live);
    }

    CHECK_THROWS_AS(qp12.eval_rational(-1), UsageError);
}

TEST_CASE("polynomial part") {
    CHECK(polynomial_part(make_spec({1})) == std::vector<Rational>{Rational(1)});
    CHECK(polynomial_part(make_spec({1, 1})) ==
          std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(polynomial_part(make_spec({1, 2})) ==
          std::vector<Rational>{Rational(Integer(3), Integer(4)),
                                Rational(Integer(1), Integer(2))});

    // coefficient m is the average of d_m over the period
    for (const auto& a : kCorpus) {
        const TupleSpec spec = make_spec(a);
        const QuasiPolynomial qp = quasipolynomial(spec);
        const std::vector<Rational> poly = polynomial_part(spec);
        for (std::size_t m = 0; m < poly.size(); ++m) {
            Rational avg;
            for (const Rational& q : qp.coeff[m]) avg += q;
            avg /= Rational(Integer(static_cast<long>(spec.D)));
            CHECK(avg == poly[m]);
        }
    }
}

TEST_CASE("vanishing test") {
    const FVector fv35 = f_vector(make_spec({3, 5}));
    CHECK(vanishes(fv35, 7));
    CHECK_FALSE(vanishes(fv35, 8));
    CHECK_FALSE(vanishes(f_vector(make_spec({1, 2})), 0));

    for (const auto& a : kCorpus) {
        const TupleSpec spec = make_spec(a);
        const FVector fv = f_vector(spec);
        const std::vector<Integer> oracle = oracle_table(spec, 120);
        for (std::int64_t n = 0; n <= 120; ++n)
            CHECK(vanishes(fv, n) == (sgn(oracle[static_cast<std::size_t>(n)]) == 0));
    }
}

TEST_CASE("congruence data") {
    {
        const FVector fv = f_vector(make_spec({1, 1}));
        const CongruenceData c = congruence_data(fv, 5);
        CHECK(c.k == 0);
        CHECK(c.modulus == 6);
        CHECK(c.value == 6);
    }
    {
        const FVector fv = f_vector(make_spec({1, 1, 1}));
        const CongruenceData c = congruence_data(fv, 4);
        CHECK(c.modulus == 30);
        CHECK(c.value == 30);
    }
    {
        const FVector fv = f_vector(make_spec({1, 2}));
        const CongruenceData c = congruence_data(fv, 4);
        CHECK(c.modulus == 3);
        CHECK(c.value == 3);
    }

    for (const auto& a : kCorpus) {
        const FVector fv = f_vector(make_spec(a));
        for (std::int64_t n = 0; n <= 200; ++n) {
            const CongruenceData c = congruence_data(fv, n);
            CHECK(mpz_divisible_p(c.value.get_mpz_t(), c.modulus.get_mpz_t()));
        }
    }
}

TEST_CASE("composite alternating product identity") {
    // f(n) = 1/(r-1)! sum_j C(r,j)(-1)^j sum_{s = n mod D} f(s)
    //        prod_{l=1}^{r-1} ((n-s)/D + l - j)
    for (const auto& a : kCorpus) {
        const TupleSpec spec = make_spec(a);
        const FVector fv = f_vector(spec);
        const Integer fac = factorial(static_cast<std::uint64_t>(spec.r - 1));
        for (std::int64_t n = 0; n <= spec.d; ++n) {
            Integer acc(0);
            for (std::int64_t j = 0; j <= n / spec.D; ++j) {
                Integer inner(0);
                for (std::int64_t s = n % spec.D; s <= spec.d; s += spec.D) {
                    Integer prod(1);
                    for (std::int64_t l = 1; l <= spec.r - 1; ++l)
                        prod *= Integer(static_cast<long>((n - s) / spec.D + l - j));
                    inner += fv.f[static_cast<std::size_t>(s)] * prod;
                }
                inner *= binomial(spec.r, j);
                if (j % 2 == 0) acc += inner; else acc -= inner;
            }
            REQUIRE(mpz_divisible_p(acc.get_mpz_t(), fac.get_mpz_t()));
            Integer got;
            mpz_divexact(got.get_mpz_t(), acc.get_mpz_t(), fac.get_mpz_t());
            CHECK(got == fv.at(n));
        }
    }
}

TEST_CASE("period override changes nothing observable") {
    for (const auto& a : {std::vector<std::int64_t>{1, 2}, {2, 3}, {2, 3, 5}}) {
        const TupleSpec base = make_spec(a);
        const TupleSpec wide = make_spec(a, 2 * base.D);
        CHECK(wide.D == 2 * base.D);

        const FVector fb = f_vector(base);
        const FVector fw = f_vector(wide);
        const QuasiPolynomial qb = quasipolynomial(fb);
        const QuasiPolynomial qw = quasipolynomial(fw);

        for (std::int64_t n = 0; n <= 150; ++n) {
            const Integer want = oracle_count(base, n);
            CHECK(count_from_f(fw, n) == want);
            CHECK(count_residue_product(fw, n) == want);
            CHECK(qw.eval(n) == want);
        }

        CHECK(polynomial_part(base) == polynomial_part(wide));

        // the doubled-period table refolds onto the base table
        for (std::size_t m = 0; m < qb.coeff.size(); ++m)
            for (std::int64_t v = 0; v < wide.D; ++v)
                CHECK(qw.coeff[m][static_cast<std::size_t>(v)] ==
                      qb.coeff[m][static_cast<std::size_t>(v % base.D)]);
    }
}
