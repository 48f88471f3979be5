#ifndef PARTFUN_SERIALIZE_HPP
#define PARTFUN_SERIALIZE_HPP

#include <json.hpp>

#include "partfun/cyclotomic.hpp"
#include "partfun/partial_fractions.hpp"
#include "partfun/partition.hpp"

namespace partfun {

using ordered_json = nlohmann::ordered_json;

// {"level": D, "coeffs": ["p/q", ...]} with the canonical residue mod Phi_D.
ordered_json cyclotomic_to_json(const CyclotomicNumber& x);
CyclotomicNumber cyclotomic_from_json(const nlohmann::json& j);

// List of {"root": {"level": D, "power": t}, "order": l,
//          "coefficient": <cyclotomic>, "convention": "lambda-minus-z"}.
ordered_json pfd_to_json(const PfdTable& table);

struct DerivedTables {
    FVector fv;
    QuasiPolynomial qp;
};

ordered_json tables_to_json(const DerivedTables& tables);

// Returns nothing when the payload does not match the spec's dimensions.
std::optional<DerivedTables> tables_from_json(const TupleSpec& spec, const nlohmann::json& j);

// Computes the f-vector and quasi-polynomial for the spec. When the
// PARTITION_CACHE_DIR environment variable is set, results are persisted
// there keyed by (tuple, D) and reused on later runs.
DerivedTables derived_tables(const TupleSpec& spec);

} // namespace partfun

#endif
