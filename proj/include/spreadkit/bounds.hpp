#pragma once

// Lower bounds, upper bounds and exact values of A_q(n, 2k; k), the maximum
// size of a partial k-spread in F_q^n. Every rule is registered with an
// applicability predicate; upper bounds are combined by minimum and lower
// bounds by maximum, ties broken by registration order.

#include "spreadkit/integer.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace spreadkit {

struct RuleValue {
  BigInt value;
  std::string rule;
};

/// n = k(t+1) + r with 0 <= r < k; requires 1 <= k <= n.
struct Parameterization {
  int r = 0;
  int t = 0;
};
Parameterization parameterize(int n, int k);

/// Exact floor of theta where 2 theta = sqrt(1 + 4q^k(q^k - q^r)) - (2q^k - 2q^r + 1).
BigInt theta_floor(std::int64_t q, int k, int r);

/// q^r (q^{k(t+1)} - 1)/(q^k - 1), the size a partial spread would have with deficiency 0.
BigInt deficiency_base(std::int64_t q, int n, int k);

/// s = q^r (q^{k(t+1)} - 1)/(q^k - 1) - size; throws ParameterError when k | n.
BigInt deficiency(std::int64_t q, int n, int k, const BigInt& size);

/// Smallest integer s with s >= q-1 and s > (q^r-1)/2 - q^{2r-k}/5.
BigInt deficiency_lower_bound(std::int64_t q, int k, int r);

/// Every applicable upper-bound rule, in priority order.
std::vector<RuleValue> upper_bound_candidates(std::int64_t q, int n, int k);
/// Every applicable lower-bound rule, in priority order.
std::vector<RuleValue> lower_bound_candidates(std::int64_t q, int n, int k);

RuleValue upper_bound(std::int64_t q, int n, int k);
RuleValue lower_bound(std::int64_t q, int n, int k);
std::optional<RuleValue> exact_value(std::int64_t q, int n, int k);

struct BoundsRecord {
  std::int64_t q = 0;
  int n = 0;
  int k = 0;
  BigInt lower;
  BigInt upper;
  std::optional<BigInt> exact;
  std::string lower_rule;
  std::string upper_rule;
  std::string exact_rule;
  int r = 0;
  int t = 0;
  std::optional<BigInt> s_lower;         // deficiency implied by the upper bound (r > 0)
  std::optional<BigInt> s_construction;  // q^r - 1 (r > 0)

  BigInt gap() const { return upper - lower; }
};

BoundsRecord bounds_record(std::int64_t q, int n, int k);

/// One record per (q, k, n) with k <= n, sorted by q, then k, then n.
std::vector<BoundsRecord> bounds_table(const std::vector<std::int64_t>& q_list, int k_min, int k_max, int n_min,
                                       int n_max);

enum class TableFormat { Text, Csv, Json, JsonLines };

void write_table(std::ostream& out, const std::vector<BoundsRecord>& records, TableFormat format);

}  // namespace spreadkit
