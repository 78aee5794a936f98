#include "spreadkit/spread_file.hpp"

#include "spreadkit/error.hpp"

#include <fstream>

namespace spreadkit {

nlohmann::json spread_to_json(const SubspaceCode& code, const SpreadMetadata& metadata) {
  nlohmann::json doc;
  doc["format_version"] = kSpreadFormatVersion;
  doc["field"] = {{"p", code.field().p()}, {"e", code.field().e()}, {"modulus", code.field().modulus()}};
  doc["n"] = code.ambient_dim();
  doc["k"] = code.dim();
  nlohmann::json words = nlohmann::json::array();
  for (const auto& U : code.codewords()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < U.basis().rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < U.basis().cols(); ++j) row.push_back(U.basis()(i, j));
      rows.push_back(std::move(row));
    }
    words.push_back(std::move(rows));
  }
  doc["codewords"] = std::move(words);
  nlohmann::json meta = nlohmann::json::object();
  if (metadata.method) meta["method"] = *metadata.method;
  const auto declared = metadata.declared_distance ? metadata.declared_distance : code.declared_min_distance();
  if (declared) meta["declared_distance"] = *declared;
  doc["metadata"] = std::move(meta);
  return doc;
}

SubspaceCode spread_from_json(const nlohmann::json& doc, bool strict, SpreadMetadata* metadata) {
  try {
    const int version = doc.at("format_version").get<int>();
    if (version != kSpreadFormatVersion)
      throw Error(Errc::FormatError, "unsupported format_version " + std::to_string(version));
    const auto& fd = doc.at("field");
    const FieldPtr field = make_field(fd.at("p").get<std::int64_t>(), fd.at("e").get<int>());
    if (fd.contains("modulus") && fd.at("modulus").get<std::vector<Element>>() != field->modulus())
      throw Error(Errc::FormatError, "field modulus differs from the canonical choice");
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    if (k < 1 || n < k) throw Error(Errc::FormatError, "invalid dimensions n=" + std::to_string(n) + " k=" + std::to_string(k));

    std::vector<Subspace> codewords;
    std::size_t index = 0;
    for (const auto& word : doc.at("codewords")) {
      if (word.size() != static_cast<std::size_t>(k))
        throw Error(Errc::FormatError, "codeword " + std::to_string(index) + " does not have k rows");
      FqMatrix M(k, n);
      for (int i = 0; i < k; ++i) {
        const auto& row = word.at(static_cast<std::size_t>(i));
        if (row.size() != static_cast<std::size_t>(n))
          throw Error(Errc::FormatError, "codeword " + std::to_string(index) + " has a row of wrong length");
        for (int j = 0; j < n; ++j) {
          const auto value = row.at(static_cast<std::size_t>(j)).get<std::int64_t>();
          if (value < 0 || value >= field->q())
            throw Error(Errc::FormatError, "codeword " + std::to_string(index) + " has an invalid field element");
          M(i, j) = static_cast<Element>(value);
        }
      }
      if (strict) {
        if (!is_rref(*field, M))
          throw Error(Errc::FormatError, "codeword " + std::to_string(index) + " is not in canonical RREF");
        codewords.push_back(Subspace::from_rref(field, std::move(M)));
      } else {
        codewords.push_back(Subspace::from_generators(field, M));
      }
      ++index;
    }

    SpreadMetadata meta;
    if (doc.contains("metadata")) {
      const auto& m = doc.at("metadata");
      if (m.contains("method")) meta.method = m.at("method").get<std::string>();
      if (m.contains("declared_distance")) meta.declared_distance = m.at("declared_distance").get<int>();
    }
    if (metadata) *metadata = meta;
    return SubspaceCode(field, n, k, std::move(codewords), meta.declared_distance);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::FormatError, e.what());
  }
}

void write_spread_file(const std::string& path, const SubspaceCode& code, const SpreadMetadata& metadata) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::FormatError, "cannot open " + path + " for writing");
  out << spread_to_json(code, metadata).dump() << '\n';
  if (!out) throw Error(Errc::FormatError, "failed writing " + path);
}

SubspaceCode read_spread_file(const std::string& path, bool strict, SpreadMetadata* metadata) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FormatError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::FormatError, path + ": " + e.what());
  }
  return spread_from_json(doc, strict, metadata);
}

}  // namespace spreadkit
