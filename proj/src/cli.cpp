#include "spreadkit/cli.hpp"

#include "spreadkit/bounds.hpp"
#include "spreadkit/codes.hpp"
#include "spreadkit/error.hpp"
#include "spreadkit/search.hpp"
#include "spreadkit/spread_file.hpp"
#include "spreadkit/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace spreadkit {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("invalid range '" + text + "' (expected A or A..B)");
  }
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> qs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      qs.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw UsageError("invalid field size '" + item + "'");
    }
  }
  if (qs.empty()) throw UsageError("empty --q list");
  return qs;
}

std::string point_string(const Point& pt) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < pt.coords.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(pt.coords[i]);
  }
  return s + ")";
}

std::string optional_distance(const std::optional<int>& d) { return d ? std::to_string(*d) : "inf"; }

void print_report(std::ostream& out, const SubspaceCode& code, const VerificationReport& report) {
  out << "q: " << code.field().q() << "\n";
  out << "n: " << code.ambient_dim() << "\n";
  out << "k: " << code.dim() << "\n";
  out << "codewords: " << report.codeword_count << "\n";
  out << "valid: " << (report.valid ? "yes" : "no") << "\n";
  out << "min subspace distance: " << optional_distance(report.min_subspace_distance) << "\n";
  if (report.witness_pair)
    out << "witness: " << report.witness_pair->first << " " << report.witness_pair->second << "\n";
  out << "holes: " << report.hole_count << "\n";
}

void print_spectrum(std::ostream& out, const SubspaceCode& code) {
  const HyperplaneSpectrum spectrum = hyperplane_spectrum(code);
  out << "hyperplane spectrum:\n";
  for (const auto& [type, count] : spectrum.counts) out << "  " << type.to_string() << ": " << count << "\n";
  for (const auto& id : incidence_identities(code, spectrum))
    out << "identity " << id.name << ": " << id.lhs << " = " << id.rhs << (id.holds() ? " ok" : " FAILED") << "\n";
}

std::string vector_string(const std::vector<BigInt>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].str();
  return s + ")";
}

void print_standard_equations(std::ostream& out, std::int64_t q, int n, int k, const BigInt& size,
                              const std::optional<std::vector<BigInt>>& observed) {
  const auto profiles = hyperplane_profiles(q, n, k, size);
  const BigInt holes = point_count(q, n) - size * point_count(q, k);
  const auto res = solve_standard_equations(n, k, q, size, profiles, SpanConstraint{holes});
  out << "standard equations for q=" << q << " n=" << n << " k=" << k << " size=" << size << "\n";
  out << "profiles (codewords in H, holes on H):";
  for (const auto& p : profiles) out << " (" << p.contained << "," << p.holes << ")";
  out << "\n";
  out << "right-hand sides: " << vector_string(res.rhs) << "\n";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (std::find(res.free_indices.begin(), res.free_indices.end(), static_cast<int>(i)) != res.free_indices.end())
      continue;
    out << "a_" << profiles[i].contained << " = " << to_string(res.particular[i]);
    for (std::size_t f = 0; f < res.free_indices.size(); ++f) {
      const Rational& c = res.directions[f][i];
      if (c == 0) continue;
      const Rational magnitude = c > 0 ? c : Rational(-c);
      out << (c > 0 ? " + " : " - ") << (magnitude == 1 ? std::string() : to_string(magnitude) + "*") << "a_"
          << profiles[static_cast<std::size_t>(res.free_indices[f])].contained;
    }
    out << "\n";
  }
  if (res.free_range)
    out << "free variable range: " << res.free_range->first << " .. " << res.free_range->second << "\n";
  if (!res.enumerated) {
    out << "nonnegative solutions: not enumerated (" << res.free_indices.size() << " free variables)\n";
    return;
  }
  out << "nonnegative solutions: " << res.nonnegative_solutions.size() << "\n";
  if (res.span_allowed_counts) {
    out << "span constraint on a_" << profiles[static_cast<std::size_t>(*res.span_profile)].contained << ": "
        << vector_string(*res.span_allowed_counts) << (res.span_constraint_validated ? "" : " (unvalidated for q != 2)")
        << "\n";
  }
  out << "spectra:\n";
  for (const auto& s : res.spectra) out << "  " << vector_string(s) << "\n";
  if (observed) {
    const bool listed = std::find(res.spectra.begin(), res.spectra.end(), *observed) != res.spectra.end();
    out << "observed spectrum: " << vector_string(*observed) << (listed ? " (listed)" : " (NOT listed)") << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial spreads and constant-dimension subspace codes", "spreadkit"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds and exact values of A_q(n,2k;k)");
  std::string q_text, k_text, n_text, format = "text";
  bounds->add_option("--q", q_text, "Field sizes, comma separated")->required();
  bounds->add_option("--k", k_text, "Dimension k or range A..B")->required();
  bounds->add_option("--n", n_text, "Ambient dimension n or range A..B")->required();
  bounds->add_option("--format", format, "text, csv, json or jsonl")
      ->check(CLI::IsMember({"text", "csv", "json", "jsonl"}));

  // construct
  auto* construct = app.add_subcommand("construct", "Build, verify and write a subspace code");
  std::int64_t cq = 0;
  int cn = 0, ck = 0, cd = 0;
  std::string method, out_path;
  construct->add_option("--q", cq)->required();
  construct->add_option("--n", cn)->required();
  construct->add_option("--k", ck)->required();
  construct->add_option("--method", method)->required()->check(CLI::IsMember({"multi-component", "lifted-mrd", "spread"}));
  construct->add_option("--d", cd, "Subspace distance for lifted-mrd (default 2k)");
  construct->add_option("--out", out_path)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a spread file");
  std::string verify_path;
  bool show_holes = false, show_spectrum = false, strict = false;
  verify->add_option("file", verify_path)->required();
  verify->add_flag("--holes", show_holes, "List the holes");
  verify->add_flag("--spectrum", show_spectrum, "Hyperplane spectrum and incidence identities");
  verify->add_flag("--strict", strict, "Reject bases that are not already in RREF");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Counting analyses of a spread file or hypothetical size");
  std::string analyze_path;
  bool standard = false, ptype = false;
  std::int64_t aq = 0;
  int an = 0, ak = 0;
  std::string size_text;
  analyze->add_option("file", analyze_path);
  analyze->add_flag("--standard-equations", standard);
  analyze->add_flag("--partition-type", ptype);
  analyze->add_option("--size", size_text, "Hypothetical code size (overrides the file)");
  analyze->add_option("--q", aq);
  analyze->add_option("--n", an);
  analyze->add_option("--k", ak);

  // search
  auto* search = app.add_subcommand("search", "Exhaustive maximum partial spread search");
  std::int64_t sq = 0;
  int sn = 0, sk = 0;
  double time_limit = std::numeric_limits<double>::infinity();
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  bool no_symmetry = false;
  std::string search_out;
  search->add_option("--q", sq)->required();
  search->add_option("--n", sn)->required();
  search->add_option("--k", sk)->required();
  search->add_option("--time-limit", time_limit, "Seconds");
  search->add_option("--node-budget", node_budget);
  search->add_flag("--no-symmetry", no_symmetry);
  search->add_option("--out", search_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      const auto [k_lo, k_hi] = parse_range(k_text);
      const auto [n_lo, n_hi] = parse_range(n_text);
      const auto records = bounds_table(parse_q_list(q_text), k_lo, k_hi, n_lo, n_hi);
      const TableFormat fmt = format == "csv"    ? TableFormat::Csv
                              : format == "json" ? TableFormat::Json
                              : format == "jsonl" ? TableFormat::JsonLines
                                                  : TableFormat::Text;
      write_table(out, records, fmt);
      return kExitOk;
    }

    if (construct->parsed()) {
      std::optional<SubspaceCode> code;
      if (method == "multi-component")
        code = multi_component(cq, cn, ck);
      else if (method == "spread")
        code = block_spread(cq, cn, ck);
      else
        code = lifted_mrd(cq, cn, ck, cd > 0 ? cd : 2 * ck);
      const VerificationReport report = verify_spread(*code);
      const bool meets = !code->declared_min_distance() || !report.min_subspace_distance ||
                         *report.min_subspace_distance >= *code->declared_min_distance();
      write_spread_file(out_path, *code, SpreadMetadata{method, code->declared_min_distance()});
      out << "method: " << method << "\n";
      print_report(out, *code, report);
      out << "written: " << out_path << "\n";
      return meets ? kExitOk : kExitInvalid;
    }

    if (verify->parsed()) {
      std::optional<SubspaceCode> code;
      try {
        code = read_spread_file(verify_path, strict);
      } catch (const Error& e) {
        if (e.code() == Errc::FormatError && std::string(e.what()).find("cannot open") != std::string::npos) throw;
        out << "valid: no\nreason: " << e.what() << "\n";
        return kExitInvalid;
      }
      const VerificationReport report = verify_spread(*code);
      print_report(out, *code, report);
      if (!report.valid) return kExitInvalid;
      if (show_holes) {
        out << "hole list:\n";
        for (const auto& pt : compute_holes(*code)) out << "  " << point_string(pt) << "\n";
      }
      if (show_spectrum) print_spectrum(out, *code);
      return kExitOk;
    }

    if (analyze->parsed()) {
      if (!standard && !ptype) throw UsageError("analyze needs --standard-equations or --partition-type");
      std::optional<SubspaceCode> code;
      if (!analyze_path.empty()) code = read_spread_file(analyze_path, false);
      if (!code && (aq == 0 || an == 0 || ak == 0 || size_text.empty()))
        throw UsageError("analyze without a file needs --q, --n, --k and --size");
      const std::int64_t q = code ? static_cast<std::int64_t>(code->field().q()) : aq;
      const int n = code ? code->ambient_dim() : an;
      const int k = code ? code->dim() : ak;
      const BigInt size = size_text.empty() ? BigInt(code->size()) : BigInt(size_text);
      if (ptype) {
        if (code && size_text.empty()) {
          out << "partition type: " << partition_type(*code, true).to_string() << "\n";
        } else {
          PartitionType type;
          type.add(k, size);
          type.add(1, point_count(q, n) - size * point_count(q, k));
          out << "partition type: " << type.to_string() << "\n";
        }
      }
      if (standard) {
        std::optional<std::vector<BigInt>> observed;
        if (code && size_text.empty()) {
          const auto profiles = hyperplane_profiles(q, n, k, size);
          const auto spectrum = hyperplane_spectrum(*code);
          std::vector<BigInt> counts(profiles.size(), 0);
          bool all_matched = true;
          for (const auto& rec : spectrum.records) {
            auto it = std::find_if(profiles.begin(), profiles.end(),
                                   [&](const HyperplaneProfile& p) { return p.contained == rec.contained; });
            if (it == profiles.end())
              all_matched = false;
            else
              ++counts[static_cast<std::size_t>(it - profiles.begin())];
          }
          if (all_matched) observed = counts;
        }
        print_standard_equations(out, q, n, k, size, observed);
      }
      return kExitOk;
    }

    if (search->parsed()) {
      SearchLimits limits;
      limits.time_limit_seconds = time_limit;
      limits.node_budget = node_budget;
      limits.symmetry_fixing = !no_symmetry;
      const SearchResult result = max_partial_spread(sq, sn, sk, limits);
      if (result.proved_optimal)
        out << "maximum = " << result.best_size << " (proved)\n";
      else
        out << "best found = " << result.best_size << " (not proved)\n";
      out << "nodes: " << result.nodes_explored << "\n";
      if (!search_out.empty()) {
        write_spread_file(search_out, result.witness, SpreadMetadata{"search", 2 * sk});
        out << "written: " << search_out << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spreadkit
