#include "spreadkit/bounds.hpp"

#include "spreadkit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>

namespace spreadkit {

namespace {

void validate(std::int64_t q, int n, int k) {
  if (!is_prime_power(q)) throw Error(Errc::ParameterError, std::to_string(q) + " is not a prime power");
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "bounds require 1 <= k <= n");
}

struct Rule {
  const char* name;
  std::function<std::optional<BigInt>(std::int64_t q, int n, int k)> value;
};

// Families where A_q(n,2k;k) is known exactly, in priority order.
const std::vector<Rule>& exact_rules() {
  static const std::vector<Rule> rules = {
      {"one-dimensional",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (k != 1) return std::nullopt;
         return point_count(q, n);
       }},
      {"single-codeword",
       [](std::int64_t, int n, int k) -> std::optional<BigInt> {
         if (n >= 2 * k) return std::nullopt;
         return BigInt(1);
       }},
      {"spread",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (n % k != 0) return std::nullopt;
         return (ipow(q, n) - 1) / (ipow(q, k) - 1);
       }},
      {"almost-spread",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (k < 2 || n % k != 1) return std::nullopt;
         return (ipow(q, n) - q) / (ipow(q, k) - 1) - q + 1;
       }},
      {"binary-k3",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (q != 2 || k != 3 || n < 6) return std::nullopt;
         static const int offset[] = {1, 9, 18};
         return (ipow(2, n) - offset[n % 3]) / 7;
       }},
      {"binary-r2",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (q != 2 || k < 4 || n % k != 2 || n < 2 * k + 2) return std::nullopt;
         return (ipow(2, n) - 3 * ipow(2, k) - 1) / (ipow(2, k) - 1);
       }},
  };
  return rules;
}

// Upper bounds that hold without an exact value.
const std::vector<Rule>& bound_rules() {
  static const std::vector<Rule> rules = {
      {"ternary-r2",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (q != 3 || k < 4 || n % k != 2 || n < 2 * k + 2) return std::nullopt;
         return (ipow(3, n) - 9) / (ipow(3, k) - 1) - 5;
       }},
      {"theta",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         const int r = n % k;
         if (r == 0) return std::nullopt;
         return deficiency_base(q, n, k) - theta_floor(q, k, r) - 1;
       }},
      {"deficiency-s",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         const int r = n % k;
         if (r == 0) return std::nullopt;
         return deficiency_base(q, n, k) - deficiency_lower_bound(q, k, r);
       }},
      {"counting",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> { return (ipow(q, n) - 1) / (ipow(q, k) - 1); }},
  };
  return rules;
}

// Constructions, then exact families.
const std::vector<Rule>& construction_rules() {
  static const std::vector<Rule> rules = {
      {"spread",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         if (n % k != 0) return std::nullopt;
         return (ipow(q, n) - 1) / (ipow(q, k) - 1);
       }},
      {"multi-component",
       [](std::int64_t q, int n, int k) -> std::optional<BigInt> {
         const int r = n % k;
         if (r == 0) return std::nullopt;
         return (ipow(q, n) - ipow(q, k + r) + ipow(q, k) - 1) / (ipow(q, k) - 1);
       }},
  };
  return rules;
}

template <typename Better>
RuleValue pick(const std::vector<RuleValue>& candidates, Better better) {
  RuleValue best = candidates.front();
  for (const auto& c : candidates)
    if (better(c.value, best.value)) best = c;
  return best;
}

}  // namespace

Parameterization parameterize(int n, int k) {
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "parameterization requires 1 <= k <= n");
  Parameterization p;
  p.r = n % k;
  p.t = (n - p.r) / k - 1;
  return p;
}

BigInt theta_floor(std::int64_t q, int k, int r) {
  if (q < 2 || r <= 0 || r >= k) throw Error(Errc::ParameterError, "theta_floor requires 0 < r < k");
  const BigInt qk = ipow(q, k);
  const BigInt qr = ipow(q, r);
  const BigInt radicand = 1 + 4 * qk * (qk - qr);
  const BigInt offset = 2 * qk - 2 * qr + 1;
  // floor((sqrt(D) - B)/2) = floor((floor(sqrt(D)) - B)/2) for integer B.
  return floor_div(isqrt(radicand) - offset, 2);
}

BigInt deficiency_base(std::int64_t q, int n, int k) {
  const Parameterization p = parameterize(n, k);
  return ipow(q, p.r) * (ipow(q, k * (p.t + 1)) - 1) / (ipow(q, k) - 1);
}

BigInt deficiency(std::int64_t q, int n, int k, const BigInt& size) {
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "deficiency requires 1 <= k <= n");
  if (n % k == 0) throw Error(Errc::ParameterError, "deficiency is defined only when k does not divide n");
  return deficiency_base(q, n, k) - size;
}

BigInt deficiency_lower_bound(std::int64_t q, int k, int r) {
  if (r <= 0 || r >= k) throw Error(Errc::ParameterError, "deficiency_lower_bound requires 0 < r < k");
  const int e = 2 * r - k;
  const Rational power = e >= 0 ? Rational(ipow(q, e)) : Rational(BigInt(1), ipow(q, -e));
  const Rational threshold = Rational(ipow(q, r) - 1, 2) - power / 5;
  return std::max(BigInt(q - 1), floor_strictly_above(threshold));
}

std::optional<RuleValue> exact_value(std::int64_t q, int n, int k) {
  validate(q, n, k);
  for (const auto& rule : exact_rules())
    if (auto v = rule.value(q, n, k)) return RuleValue{*v, rule.name};
  return std::nullopt;
}

std::vector<RuleValue> upper_bound_candidates(std::int64_t q, int n, int k) {
  validate(q, n, k);
  std::vector<RuleValue> out;
  for (const auto& rule : exact_rules())
    if (auto v = rule.value(q, n, k)) out.push_back({*v, rule.name});
  for (const auto& rule : bound_rules())
    if (auto v = rule.value(q, n, k)) out.push_back({*v, rule.name});
  return out;
}

std::vector<RuleValue> lower_bound_candidates(std::int64_t q, int n, int k) {
  validate(q, n, k);
  std::vector<RuleValue> out;
  for (const auto& rule : construction_rules())
    if (auto v = rule.value(q, n, k)) out.push_back({*v, rule.name});
  for (const auto& rule : exact_rules())
    if (auto v = rule.value(q, n, k)) out.push_back({*v, rule.name});
  out.push_back({BigInt(1), "single-codeword"});
  return out;
}

RuleValue upper_bound(std::int64_t q, int n, int k) {
  return pick(upper_bound_candidates(q, n, k), [](const BigInt& a, const BigInt& b) { return a < b; });
}

RuleValue lower_bound(std::int64_t q, int n, int k) {
  return pick(lower_bound_candidates(q, n, k), [](const BigInt& a, const BigInt& b) { return a > b; });
}

BoundsRecord bounds_record(std::int64_t q, int n, int k) {
  BoundsRecord rec;
  rec.q = q;
  rec.n = n;
  rec.k = k;
  const RuleValue lo = lower_bound(q, n, k);
  const RuleValue hi = upper_bound(q, n, k);
  rec.lower = lo.value;
  rec.lower_rule = lo.rule;
  rec.upper = hi.value;
  rec.upper_rule = hi.rule;
  if (auto ex = exact_value(q, n, k)) {
    rec.exact = ex->value;
    rec.exact_rule = ex->rule;
  }
  const Parameterization p = parameterize(n, k);
  rec.r = p.r;
  rec.t = p.t;
  if (p.r > 0) {
    rec.s_lower = deficiency_base(q, n, k) - rec.upper;
    rec.s_construction = ipow(q, p.r) - 1;
  }
  return rec;
}

std::vector<BoundsRecord> bounds_table(const std::vector<std::int64_t>& q_list, int k_min, int k_max, int n_min,
                                       int n_max) {
  if (q_list.empty() || k_min > k_max || n_min > n_max) throw Error(Errc::ParameterError, "empty parameter range");
  std::vector<std::int64_t> qs = q_list;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<BoundsRecord> records;
  for (auto q : qs)
    for (int k = std::max(1, k_min); k <= k_max; ++k)
      for (int n = std::max(k, n_min); n <= n_max; ++n) records.push_back(bounds_record(q, n, k));
  return records;
}

void write_table(std::ostream& out, const std::vector<BoundsRecord>& records, TableFormat format) {
  const auto exact_str = [](const BoundsRecord& r) { return r.exact ? r.exact->str() : std::string(); };
  switch (format) {
    case TableFormat::Csv:
      out << "q,n,k,lower,upper,exact,lower_rule,upper_rule,gap\n";
      for (const auto& r : records)
        out << r.q << ',' << r.n << ',' << r.k << ',' << r.lower << ',' << r.upper << ',' << exact_str(r) << ','
            << r.lower_rule << ',' << r.upper_rule << ',' << r.gap() << '\n';
      return;
    case TableFormat::Json:
    case TableFormat::JsonLines: {
      // Big values are emitted as decimal strings once they leave 64-bit range.
      const auto num = [](const BigInt& v) -> nlohmann::json {
        if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
        return v.str();
      };
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : records) {
        nlohmann::json j;
        j["q"] = r.q;
        j["n"] = r.n;
        j["k"] = r.k;
        j["lower"] = num(r.lower);
        j["upper"] = num(r.upper);
        j["exact"] = r.exact ? num(*r.exact) : nlohmann::json(nullptr);
        j["lower_rule"] = r.lower_rule;
        j["upper_rule"] = r.upper_rule;
        j["gap"] = num(r.gap());
        if (format == TableFormat::JsonLines)
          out << j.dump() << '\n';
        else
          all.push_back(std::move(j));
      }
      if (format == TableFormat::Json) out << all.dump(2) << '\n';
      return;
    }
    case TableFormat::Text: {
      const char* headers[] = {"q", "n", "k", "lower", "upper", "exact", "lower_rule", "upper_rule", "gap"};
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : records)
        rows.push_back({std::to_string(r.q), std::to_string(r.n), std::to_string(r.k), r.lower.str(), r.upper.str(),
                        exact_str(r), r.lower_rule, r.upper_rule, r.gap().str()});
      std::vector<std::size_t> width(9);
      for (std::size_t c = 0; c < 9; ++c) {
        width[c] = std::string(headers[c]).size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
      }
      const auto line = [&](const auto& cells) {
        for (std::size_t c = 0; c < 9; ++c) {
          if (c > 0) out << "  ";
          out << std::setw(static_cast<int>(width[c])) << (c >= 6 && c <= 7 ? std::left : std::right) << cells[c];
        }
        out << std::right << '\n';
      };
      line(std::vector<std::string>(std::begin(headers), std::end(headers)));
      for (const auto& row : rows) line(row);
      return;
    }
  }
}

}  // namespace spreadkit
