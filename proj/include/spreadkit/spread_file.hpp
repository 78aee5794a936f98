#pragma once

// JSON interchange format for subspace codes:
//
//   {
//     "format_version": 1,
//     "field": {"p": 2, "e": 1, "modulus": [0, 1]},
//     "n": 10, "k": 4,
//     "codewords": [[[1,0,...], ...], ...],     // k x n RREF bases, packed elements
//     "metadata": {"method": "multi-component", "declared_distance": 8}
//   }
//
// "modulus" lists the coefficients of the monic modulus, lowest degree first.

#include "spreadkit/codes.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace spreadkit {

inline constexpr int kSpreadFormatVersion = 1;

struct SpreadMetadata {
  std::optional<std::string> method;
  std::optional<int> declared_distance;
};

nlohmann::json spread_to_json(const SubspaceCode& code, const SpreadMetadata& metadata = {});

/// Strict mode rejects stored bases that are not already in RREF; lenient
/// mode re-canonicalizes them. Throws Error(FormatError) on schema problems.
SubspaceCode spread_from_json(const nlohmann::json& doc, bool strict, SpreadMetadata* metadata = nullptr);

void write_spread_file(const std::string& path, const SubspaceCode& code, const SpreadMetadata& metadata = {});
SubspaceCode read_spread_file(const std::string& path, bool strict, SpreadMetadata* metadata = nullptr);

}  // namespace spreadkit
