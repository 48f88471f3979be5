// Command-line surface for the exact restricted-partition toolkit:
// compute p_a(n) by several independent routes, emit quasi-polynomial /
// wave / partial-fraction tables as JSON, and cross-audit every formula.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partfun/errors.hpp"
#include "partfun/frobenius.hpp"
#include "partfun/partial_fractions.hpp"
#include "partfun/partition.hpp"
#include "partfun/sequences.hpp"
#include "partfun/serialize.hpp"
#include "partfun/waves.hpp"

namespace {

using namespace partfun;

struct TupleOpts {
    std::vector<std::int64_t> a;
    std::int64_t period = 0;   // 0 = default lcm
    bool json = false;

    TupleSpec spec() const {
        if (period > 0) return make_spec(a, period);
        return make_spec(a);
    }
};

void add_tuple_options(CLI::App* cmd, TupleOpts& opts) {
    cmd->add_option("-a,--tuple", opts.a, "comma-separated positive integers")
        ->delimiter(',')
        ->required();
    cmd->add_option("--period", opts.period, "override the period D (a common multiple)");
    cmd->add_flag("--json", opts.json, "emit JSON");
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json tuple_json(const TupleSpec& spec) {
    ordered_json a = ordered_json::array();
    for (std::int64_t ai : spec.a) a.push_back(ai);
    return a;
}

// ---------------------------------------------------------------- count --

int cmd_count(const TupleOpts& opts, std::int64_t n, const std::string& method,
              bool all_methods) {
    const TupleSpec spec = opts.spec();
    if (n < 0) throw UsageError("n must be >= 0");

    auto compute = [&](const std::string& name, const DerivedTables& tables) -> Integer {
        if (name == "oracle") return oracle_count(spec, n);
        if (name == "cor12") return count_residue_product(tables.fv, n);
        if (name == "from-f") return count_from_f(tables.fv, n);
        if (name == "quasipoly") return tables.qp.eval(n);
        throw UsageError("unknown method: " + name);
    };

    const DerivedTables tables = derived_tables(spec);
    if (!all_methods) {
        const Integer value = compute(method, tables);
        if (opts.json) {
            emit(ordered_json{{"a", tuple_json(spec)}, {"D", spec.D}, {"n", n},
                              {"method", method}, {"value", value.get_str()}});
        } else {
            std::cout << value.get_str() << "\n";
        }
        return 0;
    }

    const std::vector<std::string> names{"oracle", "cor12", "from-f", "quasipoly"};
    std::vector<Integer> values;
    for (const std::string& name : names) values.push_back(compute(name, tables));
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] != values[0])
            throw AuditError("method " + names[i] + " gives " + values[i].get_str() +
                             ", oracle gives " + values[0].get_str());

    if (opts.json) {
        ordered_json methods;
        for (std::size_t i = 0; i < names.size(); ++i) methods[names[i]] = values[i].get_str();
        emit(ordered_json{{"a", tuple_json(spec)}, {"D", spec.D}, {"n", n},
                          {"methods", std::move(methods)}, {"value", values[0].get_str()}});
    } else {
        for (std::size_t i = 0; i < names.size(); ++i)
            std::cout << names[i] << "\t" << values[i].get_str() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ quasipoly --

int cmd_quasipoly(const TupleOpts& opts) {
    const TupleSpec spec = opts.spec();
    const DerivedTables tables = derived_tables(spec);
    const std::vector<Rational> poly = polynomial_part(spec);

    if (opts.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : tables.qp.coeff) {
            ordered_json r = ordered_json::array();
            for (const Rational& q : row) r.push_back(q.str());
            rows.push_back(std::move(r));
        }
        ordered_json pp = ordered_json::array();
        for (const Rational& q : poly) pp.push_back(q.str());
        emit(ordered_json{{"a", tuple_json(spec)}, {"r", spec.r}, {"D", spec.D},
                          {"d", std::move(rows)}, {"polynomial_part", std::move(pp)}});
        return 0;
    }

    std::cout << "r=" << spec.r << " D=" << spec.D << "\n";
    for (std::size_t m = 0; m < tables.qp.coeff.size(); ++m) {
        std::cout << "d_" << m << ":";
        for (const Rational& q : tables.qp.coeff[m]) std::cout << " " << q.str();
        std::cout << "\n";
    }
    std::cout << "polynomial_part:";
    for (const Rational& q : poly) std::cout << " " << q.str();
    std::cout << "\n";
    return 0;
}

// ---------------------------------------------------------------- waves --

int cmd_waves(const TupleOpts& opts, const std::string& mode_name,
              std::optional<std::int64_t> eval_at) {
    const TupleSpec spec = opts.spec();
    const WaveMode mode = mode_name == "single-root" ? WaveMode::kSingleRoot
                                                     : WaveMode::kSylvester;
    const DerivedTables tables = derived_tables(spec);
    const WaveTable wt = wave_table(tables.qp);

    ordered_json out = ordered_json::array();
    Rational total;
    for (std::int64_t j : wt.indices) {
        const std::int64_t t = (spec.D / j) % spec.D;
        const std::vector<CyclotomicNumber>& coeffs = wt.roots.at(t);
        ordered_json item{{"j", j}, {"multiplicity", multiplicity(spec, j)}};
        ordered_json cj = ordered_json::array();
        for (const CyclotomicNumber& c : coeffs) cj.push_back(cyclotomic_to_json(c));
        item["coefficients"] = std::move(cj);
        if (eval_at) {
            const CyclotomicNumber value = wave_eval(wt, j, *eval_at, mode);
            if (mode == WaveMode::kSylvester) {
                const Rational q = value.as_rational();
                item["value"] = q.str();
                total += q;
            } else {
                item["value"] = cyclotomic_to_json(value);
            }
        }
        out.push_back(std::move(item));
    }

    ordered_json doc{{"a", tuple_json(spec)}, {"D", spec.D}, {"mode", mode_name},
                     {"waves", std::move(out)}};
    if (eval_at) {
        doc["n"] = *eval_at;
        if (mode == WaveMode::kSylvester) {
            const Integer expect = oracle_count(spec, *eval_at);
            if (total != Rational(expect))
                throw AuditError("wave sum " + total.str() + " differs from p(n) = " +
                                 expect.get_str());
            doc["sum"] = total.str();
        }
    }

    if (opts.json) {
        emit(doc);
        return 0;
    }
    for (const auto& item : doc.at("waves")) {
        std::cout << "W_" << item.at("j").get<std::int64_t>()
                  << " multiplicity " << item.at("multiplicity").get<std::int64_t>();
        if (item.contains("value")) {
            std::cout << " value ";
            if (item.at("value").is_string())
                std::cout << item.at("value").get<std::string>();
            else
                std::cout << item.at("value").dump();
        }
        std::cout << "\n";
    }
    if (doc.contains("sum"))
        std::cout << "sum " << doc.at("sum").get<std::string>() << "\n";
    return 0;
}

// ------------------------------------------------------------------ pfd --

int cmd_pfd(const TupleOpts& opts) {
    const TupleSpec spec = opts.spec();
    const DerivedTables tables = derived_tables(spec);
    const PfdTable table = pfd_table(tables.qp);
    const ordered_json doc = pfd_to_json(table);
    if (opts.json) {
        emit(doc);
        return 0;
    }
    for (const PfdEntry& e : table.entries) {
        std::cout << "root zeta^" << e.root_power << " order " << e.order << ": ";
        if (e.coefficient.is_rational())
            std::cout << e.coefficient.as_rational().str();
        else
            std::cout << cyclotomic_to_json(e.coefficient).dump();
        std::cout << "\n";
    }
    return 0;
}

// ------------------------------------------------------------ rademacher --

int cmd_rademacher(std::int64_t r, bool json) {
    if (r < 1) throw UsageError("r must be >= 1");
    std::vector<std::int64_t> ladder(static_cast<std::size_t>(r));
    std::iota(ladder.begin(), ladder.end(), std::int64_t{1});
    const TupleSpec spec = make_spec(std::move(ladder));
    const PfdTable table = pfd_table(quasipolynomial(spec));

    ordered_json out = ordered_json::array();
    for (std::int64_t k = 1; k <= r; ++k) {
        for (std::int64_t h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            for (std::int64_t ell = 1; ell <= r / k; ++ell) {
                CyclotomicNumber c = table.coefficient((spec.D / k) * h, ell);
                if (ell % 2 != 0) c *= Rational(-1);
                ordered_json item{{"h", h}, {"k", k}, {"ell", ell}};
                if (c.is_rational())
                    item["value"] = c.as_rational().str();
                else
                    item["value"] = cyclotomic_to_json(c);
                item["convention"] = "z-minus-omega";
                out.push_back(std::move(item));
            }
        }
    }

    if (json) {
        emit(out);
        return 0;
    }
    for (const auto& item : out) {
        std::cout << "c[h=" << item.at("h").get<std::int64_t>()
                  << ",k=" << item.at("k").get<std::int64_t>()
                  << ",l=" << item.at("ell").get<std::int64_t>() << "] = ";
        if (item.at("value").is_string())
            std::cout << item.at("value").get<std::string>();
        else
            std::cout << item.at("value").dump();
        std::cout << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- frobenius --

int cmd_frobenius(const TupleOpts& opts, bool with_dual) {
    const TupleSpec spec = opts.spec();
    const std::int64_t bound = frobenius_bound(spec);
    const std::int64_t frob = frobenius_number(spec);

    ordered_json doc{{"bound", bound}, {"frobenius", frob}};
    if (with_dual) {
        const FrobeniusDual dual = frobenius_dual(spec.a);
        doc["dual"] = tuple_json(dual.dual);
        doc["dual_value"] = dual.value;
    }
    if (opts.json) {
        emit(doc);
    } else {
        std::cout << "{\"bound\": " << bound << ", \"frobenius\": " << frob << "}";
        if (with_dual)
            std::cout << " dual_value " << doc.at("dual_value").get<std::int64_t>();
        std::cout << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

struct CheckResult {
    std::string name;
    std::string status;   // "ok" | "FAIL" | "skipped"
    std::string detail;
};

void run_check(std::vector<CheckResult>& results, const std::string& name,
               const std::function<std::optional<std::string>()>& body) {
    CheckResult r{name, "ok", ""};
    try {
        if (std::optional<std::string> failure = body()) {
            r.status = "FAIL";
            r.detail = *failure;
        }
    } catch (const Error& e) {
        r.status = "FAIL";
        r.detail = e.what();
    }
    results.push_back(std::move(r));
}

int cmd_verify(const TupleOpts& opts, std::int64_t nmax) {
    const TupleSpec spec = opts.spec();
    if (nmax < 0) throw UsageError("nmax must be >= 0");

    const DerivedTables tables = derived_tables(spec);
    const FVector& fv = tables.fv;
    const QuasiPolynomial& qp = tables.qp;
    const std::vector<Integer> oracle = oracle_table(spec, std::max(nmax, spec.d + 3 * spec.D));
    const WaveTable wt = wave_table(qp);
    const PfdTable pfd = pfd_table(qp);

    std::vector<CheckResult> results;

    run_check(results, "four-way-equivalence", [&]() -> std::optional<std::string> {
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const Integer& want = oracle[static_cast<std::size_t>(n)];
            if (count_residue_product(fv, n) != want)
                return "residue product disagrees at n=" + std::to_string(n);
            if (count_from_f(fv, n) != want)
                return "f-vector reconstruction disagrees at n=" + std::to_string(n);
            if (qp.eval(n) != want)
                return "quasi-polynomial disagrees at n=" + std::to_string(n);
        }
        return std::nullopt;
    });

    run_check(results, "f-vector-laws", [&]() -> std::optional<std::string> {
        if (fv.f[0] != 1) return "f(0) != 1";
        for (std::int64_t n = 0; n <= spec.d; ++n)
            if (fv.at(n) != fv.at(spec.d - n))
                return "reciprocity fails at n=" + std::to_string(n);
        Integer mass(0);
        for (const Integer& v : fv.f) mass += v;
        Integer expect(1);
        for (std::int64_t ai : spec.a) expect *= Integer(static_cast<long>(spec.D / ai));
        if (mass != expect) return "total mass " + mass.get_str() + " != " + expect.get_str();
        return std::nullopt;
    });

    run_check(results, "f-alternating-roundtrip", [&]() -> std::optional<std::string> {
        for (std::int64_t n = 0; n <= spec.d + 3 * spec.D; ++n)
            if (f_by_inclusion_exclusion(spec, n) != fv.at(n))
                return "mismatch at n=" + std::to_string(n);
        return std::nullopt;
    });

    run_check(results, "wave-reconstruction", [&]() -> std::optional<std::string> {
        for (std::int64_t n = 0; n <= nmax; ++n) {
            Rational sum;
            for (std::int64_t j : wt.indices)
                sum += wave_eval(wt, j, n, WaveMode::kSylvester).as_rational();
            if (sum != Rational(oracle[static_cast<std::size_t>(n)]))
                return "wave sum " + sum.str() + " != p(n) at n=" + std::to_string(n);
        }
        return std::nullopt;
    });

    run_check(results, "pfd-reexpansion", [&]() -> std::optional<std::string> {
        for (std::int64_t n = 0; n <= nmax; ++n)
            if (reexpand(pfd, n) != Rational(oracle[static_cast<std::size_t>(n)]))
                return "mismatch at n=" + std::to_string(n);
        return std::nullopt;
    });

    run_check(results, "wave-polynomial-routes", [&]() -> std::optional<std::string> {
        for (std::int64_t j : wt.indices) {
            const std::vector<CyclotomicNumber> direct = wave_polynomial_from_f(fv, j);
            const std::vector<CyclotomicNumber>& tabulated = wt.roots.at((spec.D / j) % spec.D);
            if (direct.size() != tabulated.size())
                return "coefficient count differs at j=" + std::to_string(j);
            for (std::size_t i = 0; i < direct.size(); ++i)
                if (direct[i] != tabulated[i])
                    return "coefficient " + std::to_string(i + 1) + " differs at j=" +
                           std::to_string(j);
        }
        return std::nullopt;
    });

    run_check(results, "pfd-coefficient-routes", [&]() -> std::optional<std::string> {
        for (std::int64_t j : wt.indices) {
            const std::int64_t mult = multiplicity(spec, j);
            for (std::int64_t m = 1; m <= mult; ++m)
                if (pfd_coefficient_from_f(fv, j, m) !=
                    pfd.coefficient((spec.D / j) % spec.D, m))
                    return "mismatch at j=" + std::to_string(j) + ", m=" + std::to_string(m);
        }
        return std::nullopt;
    });

    run_check(results, "unit-root-closed-form", [&]() -> std::optional<std::string> {
        for (std::int64_t m = 1; m <= spec.r; ++m) {
            const Rational closed = unit_root_coefficient(spec, m);
            const Rational from_table = pfd.coefficient(0, m).as_rational();
            if (closed != from_table)
                return "closed form " + closed.str() + " != table " + from_table.str() +
                       " at m=" + std::to_string(m);
        }
        return std::nullopt;
    });

    {
        bool is_ladder = true;
        for (std::size_t i = 0; i < spec.a.size(); ++i)
            if (spec.a[i] != static_cast<std::int64_t>(i) + 1) is_ladder = false;
        if (is_ladder) {
            run_check(results, "ladder-closed-form", [&]() -> std::optional<std::string> {
                for (std::int64_t m = 1; m <= spec.r; ++m) {
                    Rational expect = unit_root_coefficient(spec, m);
                    if (m % 2 != 0) expect = -expect;
                    if (rademacher_unit_closed_form(spec.r, m) != expect)
                        return "mismatch at m=" + std::to_string(m);
                    const CyclotomicNumber via_table =
                        rademacher_coefficient(spec.r, 0, 1, m);
                    if (via_table.as_rational() != expect)
                        return "table route mismatch at m=" + std::to_string(m);
                }
                return std::nullopt;
            });
        } else {
            results.push_back({"ladder-closed-form", "skipped", "tuple is not (1,2,...,r)"});
        }
    }

    run_check(results, "congruence-divisibility", [&]() -> std::optional<std::string> {
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const CongruenceData c = congruence_data(fv, n);
            if (!mpz_divisible_p(c.value.get_mpz_t(), c.modulus.get_mpz_t()))
                return c.modulus.get_str() + " does not divide " + c.value.get_str() +
                       " at n=" + std::to_string(n);
        }
        return std::nullopt;
    });

    {
        std::int64_t g = 0;
        for (std::int64_t ai : spec.a) g = std::gcd(g, ai);
        if (g == 1) {
            run_check(results, "frobenius-bound", [&]() -> std::optional<std::string> {
                const std::int64_t bound = frobenius_bound(spec);
                const std::int64_t frob = frobenius_number(spec);
                if (frob > bound) return "frobenius number exceeds the bound";
                if (frob >= 0 && sgn(oracle_count(spec, frob)) != 0)
                    return "p(F) != 0";
                for (std::int64_t n = std::max<std::int64_t>(bound + 1, 0);
                     n <= bound + 2 * spec.D; ++n)
                    if (vanishes(fv, n))
                        return "vanishing beyond the bound at n=" + std::to_string(n);
                return std::nullopt;
            });
        } else {
            results.push_back({"frobenius-bound", "skipped", "gcd of the tuple is not 1"});
        }
    }

    run_check(results, "polynomial-part-average", [&]() -> std::optional<std::string> {
        const std::vector<Rational> poly = polynomial_part(spec);
        const Rational inv_d(Integer(1), Integer(static_cast<long>(spec.D)));
        for (std::int64_t m = 0; m < spec.r; ++m) {
            Rational avg;
            for (const Rational& q : qp.coeff[static_cast<std::size_t>(m)]) avg += q;
            avg *= inv_d;
            if (avg != poly[static_cast<std::size_t>(m)])
                return "average of d_" + std::to_string(m) + " differs from the polynomial part";
        }
        const std::vector<CyclotomicNumber>& first_wave = wt.roots.at(0);
        for (std::size_t m = 0; m < first_wave.size(); ++m)
            if (first_wave[m].as_rational() != poly[m])
                return "first wave differs from the polynomial part at power " + std::to_string(m);
        return std::nullopt;
    });

    bool all_ok = true;
    for (const CheckResult& r : results)
        if (r.status == "FAIL") all_ok = false;

    if (opts.json) {
        ordered_json checks = ordered_json::array();
        for (const CheckResult& r : results) {
            ordered_json item{{"name", r.name}, {"status", r.status}};
            if (!r.detail.empty()) item["detail"] = r.detail;
            checks.push_back(std::move(item));
        }
        emit(ordered_json{{"a", tuple_json(spec)}, {"D", spec.D}, {"nmax", nmax},
                          {"checks", std::move(checks)}, {"pass", all_ok}});
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.status == "ok" ? "ok      " :
                          r.status == "skipped" ? "skipped " : "FAIL    ")
                      << r.name;
            if (!r.detail.empty()) std::cout << ": " << r.detail;
            std::cout << "\n";
        }
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact restricted partition functions, waves and partial fractions"};
    app.require_subcommand(1);

    TupleOpts count_opts;
    std::int64_t count_n = 0;
    std::string count_method = "oracle";
    bool count_all = false;
    CLI::App* count = app.add_subcommand("count", "compute p_a(n)");
    add_tuple_options(count, count_opts);
    count->add_option("-n", count_n, "target value")->required();
    count->add_option("--method", count_method, "oracle | cor12 | from-f | quasipoly")
        ->check(CLI::IsMember({"oracle", "cor12", "from-f", "quasipoly"}));
    count->add_flag("--all-methods", count_all, "compute by every route and compare");

    TupleOpts quasi_opts;
    CLI::App* quasi = app.add_subcommand("quasipoly", "quasi-polynomial coefficient table");
    add_tuple_options(quasi, quasi_opts);

    TupleOpts waves_opts;
    std::string waves_mode = "sylvester";
    std::int64_t waves_eval = -1;
    CLI::App* waves = app.add_subcommand("waves", "wave decomposition");
    add_tuple_options(waves, waves_opts);
    waves->add_option("--mode", waves_mode, "single-root | sylvester")
        ->check(CLI::IsMember({"single-root", "sylvester"}));
    waves->add_option("--eval-at", waves_eval, "evaluate each wave at n");

    TupleOpts pfd_opts;
    CLI::App* pfd = app.add_subcommand("pfd", "partial-fraction decomposition");
    add_tuple_options(pfd, pfd_opts);

    std::int64_t rad_r = 1;
    bool rad_json = false;
    CLI::App* rad = app.add_subcommand("rademacher", "partial fractions of 1/((1-z)...(1-z^r))");
    rad->add_option("-r", rad_r, "number of parts")->required();
    rad->add_flag("--json", rad_json, "emit JSON");

    TupleOpts frob_opts;
    bool frob_dual = false;
    CLI::App* frob = app.add_subcommand("frobenius", "Frobenius number and bound");
    add_tuple_options(frob, frob_opts);
    frob->add_flag("--dual", frob_dual, "also emit the dual tuple closed form");

    TupleOpts verify_opts;
    std::int64_t verify_nmax = 200;
    CLI::App* verify = app.add_subcommand("verify", "cross-audit every formula on one tuple");
    add_tuple_options(verify, verify_opts);
    verify->add_option("--nmax", verify_nmax, "largest n checked (default 200)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (count->parsed()) return cmd_count(count_opts, count_n, count_method, count_all);
        if (quasi->parsed()) return cmd_quasipoly(quasi_opts);
        if (waves->parsed()) {
            std::optional<std::int64_t> at;
            if (waves->count("--eval-at") > 0) at = waves_eval;
            return cmd_waves(waves_opts, waves_mode, at);
        }
        if (pfd->parsed()) return cmd_pfd(pfd_opts);
        if (rad->parsed()) return cmd_rademacher(rad_r, rad_json);
        if (frob->parsed()) return cmd_frobenius(frob_opts, frob_dual);
        if (verify->parsed()) return cmd_verify(verify_opts, verify_nmax);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AuditError& e) {
        std::cerr << "audit failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
