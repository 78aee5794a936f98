// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "spreadkit/bounds.hpp"
#include "spreadkit/cli.hpp"
#include "spreadkit/codes.hpp"
#include "spreadkit/search.hpp"
#include "spreadkit/verification.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace spreadkit;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
};

BigInt P(std::int64_t q, int e) { return ipow(BigInt(q), e); }

std::optional<BigInt> rule_value(const std::vector<RuleValue>& rules, const std::string& name) {
  for (const auto& r : rules)
    if (r.rule == name) return r.value;
  return std::nullopt;
}

bool has_rule(const std::optional<RuleValue>& v, const BigInt& value, const std::string& rule) {
  return v && v->value == value && v->rule == rule;
}

void construction_optimality(Check& c) {
  const auto path = (std::filesystem::temp_directory_path() / "spreadkit_acceptance_2_10_4.json").string();
  std::ostringstream out, err;
  const int code = run_cli({"construct", "--q", "2", "--n", "10", "--k", "4", "--method", "multi-component", "--out", path},
                           out, err);
  c.expect(code == 0, "construct exited with " + std::to_string(code));
  c.expect(out.str().find("codewords: 65") != std::string::npos, "construct did not report 65 codewords");
  const auto C = multi_component(2, 10, 4);
  const auto report = verify_spread(C);
  c.expect(C.size() == 65, "size " + std::to_string(C.size()));
  c.expect(report.valid && report.min_subspace_distance == 8, "(2,10,4) not a partial spread with d_S 8");
  c.expect(compute_holes(C).size() == 48, "hole count differs from 48");
  c.expect(exact_value(2, 10, 4) && exact_value(2, 10, 4)->value == 65, "exact(2,10,4) != 65");
  c.expect(BigInt(C.size()) == P(2, 6) + 1, "65 != 2^{k+2}+1");

  const auto D = multi_component(2, 12, 5);
  const auto report5 = verify_spread(D);
  c.expect(D.size() == 129 && report5.valid && report5.min_subspace_distance == 10, "(2,12,5) construction");
  c.expect(exact_value(2, 12, 5) && exact_value(2, 12, 5)->value == 129, "exact(2,12,5) != 129");
  std::filesystem::remove(path);
}

void binary_k3_family(Check& c) {
  const auto table = bounds_table({2}, 3, 3, 6, 12);
  c.expect(table.size() == 7, "table size");
  for (const auto& rec : table) {
    const int m = rec.n / 3;
    BigInt expected;
    switch (rec.n % 3) {
      case 0: expected = (P(2, 3 * m) - 1) / 7; break;
      case 1: expected = (P(2, 3 * m + 1) - 9) / 7; break;
      default: expected = (P(2, 3 * m + 2) - 18) / 7; break;
    }
    c.expect(rec.exact && *rec.exact == expected, "n=" + std::to_string(rec.n) + " exact differs");
  }
  c.expect(has_rule(exact_value(2, 8, 3), 34, "binary-k3"), "A_2(8,6;3) not 34 via binary-k3");
  const auto C = multi_component(2, 8, 3);
  c.expect(C.size() == 33 && verify_spread(C).valid, "multi_component(2,8,3) not a valid 33-code");
  c.expect(rule_value(lower_bound_candidates(2, 8, 3), "multi-component") == BigInt(33),
           "multi-component lower bound is not 33");
}

void theta_reproduction(Check& c) {
  c.expect(rule_value(upper_bound_candidates(2, 10, 4), "theta") == BigInt(66), "theta(2,10,4) != 66");
  const auto up = upper_bound(2, 10, 4);
  c.expect(up.value == 65 && up.rule == "binary-r2", "upper(2,10,4) != 65 via binary-r2");
  c.expect(upper_bound(2, 11, 4).value == 133, "upper(2,11,4) != 133");
  c.expect(lower_bound(2, 11, 4).value == 129, "lower(2,11,4) != 129");
}

void theta_closed_form(Check& c) {
  int mismatches = 0;
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (int r = 1; r <= 4; ++r)
      for (int k = 2 * r; k <= 2 * r + 8; ++k)
        if (theta_floor(q, k, r) != floor_div(P(q, r) - 2, BigInt(2))) ++mismatches;
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
}

void ternary_improvement(Check& c) {
  const auto up = upper_bound(3, 10, 4);
  c.expect(up.value == 733 && up.rule == "ternary-r2", "upper(3,10,4) != 733 via ternary-r2");
  c.expect(lower_bound(3, 10, 4).value == 730, "lower(3,10,4) != 730");
  c.expect(rule_value(upper_bound_candidates(3, 10, 4), "theta") == BigInt(734), "theta(3,10,4) != 734");
}

void standard_equations(Check& c) {
  std::vector<HyperplaneProfile> profiles;
  for (int i = 2; i <= 5; ++i) profiles.push_back({i, BigInt(25 - 4 * i)});
  const auto res = solve_standard_equations(8, 3, 2, 34, profiles, std::nullopt);
  c.expect(res.free_indices == std::vector<int>{3}, "a_5 is not the free variable");
  c.expect(res.particular == std::vector<Rational>{51, -136, 340, 0}, "particular solution");
  c.expect(res.directions.size() == 1 && res.directions[0] == std::vector<Rational>{-1, 3, -3, 1}, "direction");
  c.expect(res.free_range && res.free_range->first == 46 && res.free_range->second == 51, "range 46..51");
  const auto spans = solve_standard_equations(8, 3, 2, 34, profiles, SpanConstraint{BigInt(17)});
  const std::vector<std::vector<BigInt>> expected{
      {0, 17, 187, 51}, {1, 14, 190, 50}, {3, 8, 196, 48}};
  c.expect(spans.spectra == expected, "spectra differ");
}

void forbidden_certificates(Check& c) {
  auto ordered = [](const ContradictionCertificate& cert) {
    return cert.certified && cert.type_fills_space && cert.hole_residue == cert.expected_residue &&
           cert.total_holes_lower_bound >= Rational(cert.intermediate_bound) &&
           cert.intermediate_bound > cert.available_holes;
  };
  for (int k = 4; k <= 10; ++k)
    for (int t = 1; t <= 3; ++t)
      c.expect(ordered(forbidden_partition_check(2, k, t, ForbiddenVariant::Binary)),
               "q=2 k=" + std::to_string(k) + " t=" + std::to_string(t));
  for (std::int64_t q : {3, 5})
    for (int k = 4; k <= 8; ++k)
      for (int t = 1; t <= 3; ++t)
        c.expect(ordered(forbidden_partition_check(q, k, t, ForbiddenVariant::OddQ)),
                 "q=" + std::to_string(q) + " k=" + std::to_string(k) + " t=" + std::to_string(t));
}

void oracle_agreement(Check& c) {
  for (auto [n, k, expected] : {std::tuple{4, 2, 5}, {5, 2, 9}, {6, 3, 9}, {6, 2, 21}}) {
    const auto res = max_partial_spread(2, n, k);
    const auto exact = exact_value(2, n, k);
    const std::string tag = "(2," + std::to_string(n) + "," + std::to_string(k) + ")";
    c.expect(res.proved_optimal, tag + " not proved");
    c.expect(res.best_size == static_cast<std::size_t>(expected), tag + " found " + std::to_string(res.best_size));
    c.expect(exact && exact->value == expected, tag + " exact value differs");
    c.expect(verify_spread(res.witness).valid, tag + " witness invalid");
  }
}

void mrd_properties(Check& c) {
  for (auto [q, k, m] : {std::tuple{2, 2, 3}, {2, 3, 4}, {2, 4, 6}, {3, 2, 3}}) {
    const auto C = mrd_full_rank_code(q, k, m);
    const std::string tag = "(" + std::to_string(q) + "," + std::to_string(k) + "," + std::to_string(m) + ")";
    c.expect(BigInt(C.codewords.size()) == mrd_size(q, k, m, k), tag + " size");
    c.expect(min_rank_distance(C) == k, tag + " distance");
  }
}

void incidence(Check& c) {
  for (auto [n, k] : {std::pair{8, 3}, {10, 4}}) {
    const auto C = multi_component(2, n, k);
    for (const auto& id : incidence_identities(C, hyperplane_spectrum(C)))
      c.expect(id.holds(), "(2," + std::to_string(n) + "," + std::to_string(k) + ") " + id.name);
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*body)(Check&);
    double limit_seconds;  // 0 = untimed
  };
  const Criterion criteria[] = {
      {"construction optimality at r=2", construction_optimality, 10},
      {"binary k=3 family", binary_k3_family, 0},
      {"theta bound and its tightening", theta_reproduction, 0},
      {"theta floor closed form", theta_closed_form, 1},
      {"ternary r=2 improvement", ternary_improvement, 0},
      {"standard equations for (8,3,2,34)", standard_equations, 0},
      {"forbidden partition certificates", forbidden_certificates, 0},
      {"search oracle agreement", oracle_agreement, 300},
      {"MRD properties", mrd_properties, 60},
      {"incidence identities", incidence, 0},
  };

  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds)
      check.expect(false, "took " + std::to_string(seconds) + " s");
    std::ostringstream line;
    line << (check.ok ? "PASS" : "FAIL") << "  [" << index << "] " << criterion.name << " (" << seconds << " s)";
    for (const auto& note : check.notes) line << "\n        " << note;
    std::cout << line.str() << std::endl;
    if (!check.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
