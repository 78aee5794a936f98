#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spreadkit/bounds.hpp"
#include "spreadkit/codes.hpp"
#include "spreadkit/error.hpp"

#include <cmath>
#include <sstream>

using namespace spreadkit;

namespace {

BigInt P(std::int64_t q, int e) { return ipow(BigInt(q), e); }

std::optional<BigInt> rule_value(const std::vector<RuleValue>& rules, const std::string& name) {
  for (const auto& r : rules)
    if (r.rule == name) return r.value;
  return std::nullopt;
}

}  // namespace

TEST_CASE("parameterization") {
  CHECK(parameterize(10, 4).r == 2);
  CHECK(parameterize(10, 4).t == 1);
  CHECK(parameterize(5, 4).t == 0);
  CHECK(parameterize(8, 4).r == 0);
  CHECK_THROWS_AS(parameterize(3, 4), Error);
}

TEST_CASE("theta floor examples") {
  CHECK(theta_floor(2, 4, 2) == 1);
  CHECK(theta_floor(2, 3, 2) == 1);
  CHECK(theta_floor(3, 4, 2) == 3);
}

TEST_CASE("theta floor against floating point away from integers") {
  for (std::int64_t q : {2, 3, 4, 5})
    for (int r = 1; r <= 3; ++r)
      for (int k = r + 1; k <= r + 5; ++k) {
        const double qk = std::pow(double(q), k), qr = std::pow(double(q), r);
        const double theta = (std::sqrt(1 + 4 * qk * (qk - qr)) - (2 * qk - 2 * qr + 1)) / 2;
        if (std::abs(theta - std::round(theta)) < 1e-6) continue;
        CHECK(theta_floor(q, k, r) == static_cast<long>(std::floor(theta)));
      }
}

TEST_CASE("theta floor closed form") {
  int mismatches = 0;
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (int r = 1; r <= 4; ++r) {
      for (int k = 2 * r; k <= 2 * r + 8; ++k)
        if (theta_floor(q, k, r) != floor_div(P(q, r) - 2, BigInt(2))) ++mismatches;
      if ((q == 2 || q == 3) && r >= 2 && theta_floor(q, 2 * r - 1, r) != floor_div(P(q, r) - 2, BigInt(2)))
        ++mismatches;
    }
  CHECK(mismatches == 0);
}

TEST_CASE("upper bounds") {
  CHECK(upper_bound(2, 10, 4).value == 65);
  CHECK(rule_value(upper_bound_candidates(2, 10, 4), "theta") == BigInt(66));
  CHECK(upper_bound(2, 11, 4).value == 133);
  CHECK(upper_bound(2, 11, 4).rule == "theta");
  CHECK(upper_bound(3, 10, 4).value == 733);
  CHECK(upper_bound(3, 10, 4).rule == "ternary-r2");
  CHECK(rule_value(upper_bound_candidates(3, 10, 4), "theta") == BigInt(734));
  CHECK(upper_bound(2, 8, 3).value == 34);
  CHECK(upper_bound(2, 8, 3).rule == "binary-k3");
}

TEST_CASE("lower bounds") {
  CHECK(lower_bound(2, 10, 4).value == 65);
  CHECK(lower_bound(2, 10, 4).rule == "multi-component");
  CHECK(lower_bound(2, 8, 3).value == 34);
  CHECK(lower_bound(2, 8, 3).rule == "binary-k3");
  CHECK(rule_value(lower_bound_candidates(2, 8, 3), "multi-component") == BigInt(33));
  CHECK(lower_bound(2, 11, 4).value == 129);
  CHECK(lower_bound(2, 11, 4).rule == "multi-component");
  CHECK(lower_bound(3, 10, 4).value == 730);
}

TEST_CASE("exact values") {
  CHECK(exact_value(2, 9, 4)->value == 33);
  CHECK(exact_value(2, 9, 4)->rule == "almost-spread");
  CHECK(exact_value(2, 12, 4)->value == 273);
  CHECK(exact_value(2, 12, 4)->rule == "spread");
  CHECK(exact_value(2, 10, 4)->value == 65);
  CHECK_FALSE(exact_value(2, 11, 4).has_value());
  CHECK(exact_value(2, 12, 5)->value == 129);
  CHECK(exact_value(2, 5, 3)->value == 1);
  CHECK(exact_value(3, 7, 1)->value == 1093);
}

TEST_CASE("binary k = 3 family") {
  for (int m = 2; m <= 4; ++m) {
    CHECK(exact_value(2, 3 * m, 3)->value == (P(2, 3 * m) - 1) / 7);
    CHECK(exact_value(2, 3 * m + 1, 3)->value == (P(2, 3 * m + 1) - 9) / 7);
    CHECK(exact_value(2, 3 * m + 2, 3)->value == (P(2, 3 * m + 2) - 18) / 7);
  }
}

TEST_CASE("closed forms agree") {
  for (std::int64_t q : {2, 3, 4, 5})
    for (int k = 2; k <= 6; ++k)
      for (int n = k + 1; n <= 20; ++n) {
        const auto [r, t] = parameterize(n, k);
        if (r == 1) {
          const BigInt a = (P(q, n) - q) / (P(q, k) - 1) - q + 1;
          const BigInt b = q * ((P(q, n - 1) - 1) / (P(q, k) - 1)) - q + 1;
          const BigInt c = (P(q, n) - P(q, k + 1) + P(q, k) - 1) / (P(q, k) - 1);
          CHECK(a == b);
          CHECK(b == c);
          CHECK(exact_value(q, n, k)->value == a);
        }
        if (n % k != 0) {
          // Multi-component closed form versus its expanded quotient.
          BigInt sum = 1;
          for (int i = 1; i <= n / k - 1; ++i) sum += P(q, n - i * k);
          CHECK(multi_component_size(q, n, k) == sum);
          CHECK(multi_component_size(q, n, k) == (P(q, n) - P(q, k + r) + P(q, k) - 1) / (P(q, k) - 1));
        }
      }
}

TEST_CASE("r = 2 binary value equals the construction for k >= 4 and exceeds it by one at k = 3") {
  for (int k = 4; k <= 10; ++k)
    for (int t = 1; t <= 3; ++t) {
      const int n = k * (t + 1) + 2;
      CHECK(exact_value(2, n, k)->value == multi_component_size(2, n, k));
    }
  for (int t = 1; t <= 3; ++t) {
    const int n = 3 * (t + 1) + 2;
    CHECK(exact_value(2, n, 3)->value == multi_component_size(2, n, 3) + 1);
  }
}

TEST_CASE("bound grid is consistent") {
  for (std::int64_t q : {2, 3, 4, 5})
    for (int k = 1; k <= 6; ++k)
      for (int n = k; n <= 20; ++n) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(k);
        const auto lo = lower_bound(q, n, k).value;
        const auto hi = upper_bound(q, n, k).value;
        CHECK(lo <= hi);
        CHECK(hi <= (P(q, n) - 1) / (P(q, k) - 1));
        if (auto ex = exact_value(q, n, k)) {
          CHECK(lo == ex->value);
          CHECK(hi == ex->value);
        }
      }
}

TEST_CASE("deficiency") {
  CHECK(deficiency(2, 10, 4, 65) == 3);
  CHECK(deficiency(2, 9, 4, 33) == 1);
  CHECK(deficiency(2, 10, 4, multi_component_size(2, 10, 4)) == 3);
  for (std::int64_t q : {2, 3, 4})
    for (int k = 3; k <= 6; ++k)
      for (int r = 1; r < k; ++r) {
        const int n = 2 * k + r;
        CHECK(deficiency(q, n, k, multi_component_size(q, n, k)) == P(q, r) - 1);
        CHECK(deficiency_lower_bound(q, k, r) >= q - 1);
      }
  CHECK(deficiency_lower_bound(2, 4, 2) == 2);
  CHECK_THROWS_AS(deficiency(2, 8, 4, 17), Error);
}

TEST_CASE("bounds table") {
  const auto table = bounds_table({2}, 4, 4, 8, 13);
  REQUIRE(table.size() == 6);
  CHECK(table[2].n == 10);
  CHECK(table[2].exact == BigInt(65));
  CHECK(table[3].gap() == 4);
  const auto t5 = bounds_table({2}, 5, 5, 12, 12);
  CHECK(t5.at(0).exact == BigInt(129));

  std::ostringstream csv;
  write_table(csv, table, TableFormat::Csv);
  CHECK(csv.str().rfind("q,n,k,lower,upper,exact,lower_rule,upper_rule,gap\n", 0) == 0);
  CHECK(csv.str().find("\n2,10,4,65,65,65,") != std::string::npos);
  std::ostringstream again;
  write_table(again, bounds_table({2}, 4, 4, 8, 13), TableFormat::Csv);
  CHECK(again.str() == csv.str());

  std::ostringstream jsonl;
  write_table(jsonl, table, TableFormat::JsonLines);
  int lines = 0;
  for (char c : jsonl.str()) lines += c == '\n';
  CHECK(lines == 6);
}
