#include "partfun/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace partfun {

ordered_json cyclotomic_to_json(const CyclotomicNumber& x) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& q : x.coeffs()) coeffs.push_back(q.str());
    return ordered_json{{"level", x.level()}, {"coeffs", std::move(coeffs)}};
}

CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j) {
    const std::int64_t level = j.at("level").get<std::int64_t>();
    std::vector<Rational> coeffs;
    for (const auto& item : j.at("coeffs"))
        coeffs.push_back(Rational::parse(item.get<std::string>()));
    CyclotomicNumber x = CyclotomicNumber::from_coeffs(level, coeffs);
    if (x.coeffs() != coeffs)
        throw UsageError("cyclotomic coefficients are not in canonical form");
    return x;
}

ordered_json pfd_to_json(const PfdTable& table) {
    ordered_json out = ordered_json::array();
    for (const PfdEntry& e : table.entries) {
        out.push_back(ordered_json{
            {"root", ordered_json{{"level", table.spec.D}, {"power", e.root_power}}},
            {"order", e.order},
            {"coefficient", cyclotomic_to_json(e.coefficient)},
            {"convention", "lambda-minus-z"},
        });
    }
    return out;
}

ordered_json tables_to_json(const DerivedTables& tables) {
    const TupleSpec& spec = tables.fv.spec;
    ordered_json a = ordered_json::array();
    for (std::int64_t ai : spec.a) a.push_back(ai);
    ordered_json f = ordered_json::array();
    for (const Integer& v : tables.fv.f) f.push_back(v.get_str());
    ordered_json rows = ordered_json::array();
    for (const auto& row : tables.qp.coeff) {
        ordered_json r = ordered_json::array();
        for (const Rational& q : row) r.push_back(q.str());
        rows.push_back(std::move(r));
    }
    return ordered_json{{"a", std::move(a)}, {"D", spec.D},
                        {"f", std::move(f)}, {"quasi", std::move(rows)}};
}

std::optional<DerivedTables> tables_from_json(const TupleSpec& spec, const nlohmann::json& j) {
    try {
        if (j.at("D").get<std::int64_t>() != spec.D) return std::nullopt;
        std::vector<std::int64_t> a = j.at("a").get<std::vector<std::int64_t>>();
        if (a != spec.a) return std::nullopt;

        DerivedTables out;
        out.fv.spec = spec;
        for (const auto& item : j.at("f")) out.fv.f.emplace_back(item.get<std::string>());
        if (out.fv.f.size() != static_cast<std::size_t>(spec.d) + 1) return std::nullopt;

        out.qp.spec = spec;
        for (const auto& row : j.at("quasi")) {
            std::vector<Rational> qrow;
            for (const auto& item : row) qrow.push_back(Rational::parse(item.get<std::string>()));
            if (qrow.size() != static_cast<std::size_t>(spec.D)) return std::nullopt;
            out.qp.coeff.push_back(std::move(qrow));
        }
        if (out.qp.coeff.size() != static_cast<std::size_t>(spec.r)) return std::nullopt;
        return out;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    } catch (const std::invalid_argument&) {   // malformed integer literal
        return std::nullopt;
    }
}

namespace {

std::string cache_key(const TupleSpec& spec) {
    std::string key = "a";
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        if (i > 0) key += "_";
        key += std::to_string(spec.a[i]);
    }
    key += "-D" + std::to_string(spec.D) + ".json";
    return key;
}

} // namespace

DerivedTables derived_tables(const TupleSpec& spec) {
    const char* dir = std::getenv("PARTITION_CACHE_DIR");
    std::filesystem::path path;
    if (dir != nullptr && *dir != '\0') {
        path = std::filesystem::path(dir) / cache_key(spec);
        std::ifstream in(path);
        if (in) {
            try {
                nlohmann::json j = nlohmann::json::parse(in);
                if (std::optional<DerivedTables> cached = tables_from_json(spec, j))
                    return *std::move(cached);
            } catch (const nlohmann::json::exception&) {
                // stale or corrupt cache entry; fall through and recompute
            }
        }
    }

    DerivedTables out;
    out.fv = f_vector(spec);
    out.qp = quasipolynomial(out.fv);

    if (!path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        std::ofstream outfile(path);
        if (outfile) outfile << tables_to_json(out).dump(2) << "\n";
    }
    return out;
}

} // namespace partfun
