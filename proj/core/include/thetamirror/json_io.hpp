#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "thetamirror/broken_lines.hpp"
#include "thetamirror/invariant_table.hpp"
#include "thetamirror/scattering2d.hpp"
#include "thetamirror/snc_pair.hpp"
#include "thetamirror/theta_algebra.hpp"
#include "thetamirror/trop_types.hpp"

namespace thetamirror::io {

using nlohmann::json;

inline constexpr int schema_version = 1;

// Throws Error("malformed-json") on unreadable or unparsable input.
json read_json(const std::filesystem::path& path);
json parse_json(std::string_view text);
// Checks schema_version and kind; Error("schema-version") on mismatch.
void check_header(const json& j, std::string_view kind);
json header(std::string_view kind);

json rational_to_json(const Rational& x);
Rational rational_from_json(const json& j);
json class_to_json(const ClassVector& beta, const std::vector<std::string>& names);
ClassVector class_from_json(const json& j, const std::vector<std::string>& names);
LatticeVector lattice_from_json(const json& j, std::size_t rank);

PairDescriptor pair_from_json(const json& j);
json to_json(const PairDescriptor& pair);

InvariantTable table_from_json(const json& j, const PairDescriptor& pair);
json table_to_json(const InvariantTable& table, const PairDescriptor& pair);

// Laurent element as a list of {coeff, class, exponent}.
json laurent_to_json(const LaurentElement& x, const std::vector<std::string>& names);
LaurentElement laurent_from_json(const json& j, const std::vector<std::string>& names,
                                 const TruncationIdeal& ideal, std::size_t lattice_rank);

// Looijenga files need the pair. `ideal` overrides weights and bound.
WallStructure walls_from_json(const json& j, const PairDescriptor* pair = nullptr,
                              const std::optional<TruncationIdeal>& ideal = std::nullopt);
json walls_to_json(const WallStructure& s);

std::vector<CanonicalWallEntry> canonical_from_json(const json& j, const PairDescriptor& pair);

TropicalType trop_type_from_json(const json& j);
json trop_type_to_json(const TropicalType& t);
std::optional<TropAssignment> assignment_from_json(const json& j);

// Reports.
json candidates_to_json(const CandidateSet& set, const PairDescriptor& pair);
json product_to_json(const std::vector<ProductTerm>& terms, const PairDescriptor* pair,
                     const std::vector<std::string>& class_names);
json presentation_to_json(const Presentation& pres, const PairDescriptor& pair);
json consistency_to_json(const ConsistencyReport& r, const std::vector<std::string>& names);
json broken_lines_to_json(const std::vector<BrokenLine>& lines,
                          const std::vector<std::string>& names);
json missing_to_json(const MissingInvariantError& e, const PairDescriptor& pair);
json moduli_cone_to_json(const ModuliCone& c);

}  // namespace thetamirror::io
