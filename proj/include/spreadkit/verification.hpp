#pragma once

// Partial-spread checks and the counting arguments built on hyperplane
// sections: holes, vector space partition types, hyperplane spectra, the
// tail-length conditions, forbidden-type certificates and the standard
// equations.

#include "spreadkit/codes.hpp"
#include "spreadkit/integer.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spreadkit {

struct VerificationReport {
  bool valid = false;
  /// nullopt when the code has fewer than two codewords.
  std::optional<int> min_subspace_distance;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::size_t codeword_count = 0;
  BigInt hole_count = 0;
};

VerificationReport verify_spread(const SubspaceCode& C);

/// Minimum pairwise subspace distance, by exhaustive rank computation.
std::optional<int> min_subspace_distance(const SubspaceCode& C);

/// Uncovered points in lexicographic order; throws NotASpread.
std::vector<Point> compute_holes(const SubspaceCode& C);

/// Multiplicities m_d of a vector space partition, written k^{m_k} ... 1^{m_1}.
struct PartitionType {
  std::map<int, BigInt, std::greater<int>> multiplicity;

  void add(int dim, const BigInt& count);
  BigInt count(int dim) const;
  /// sum m_d (q^d - 1)/(q - 1)
  BigInt point_total(std::int64_t q) const;
  int tail_dim() const;
  BigInt tail_length() const;
  /// Second smallest dimension present, nullopt when only one dimension occurs.
  std::optional<int> second_dim() const;
  std::string to_string() const;

  bool operator==(const PartitionType& other) const { return multiplicity == other.multiplicity; }
  bool operator<(const PartitionType& other) const { return multiplicity < other.multiplicity; }
};

/// m_k = |C| and, when requested, m_1 = number of holes. Throws NotASpread.
PartitionType partition_type(const SubspaceCode& C, bool count_holes_as_points);

struct HyperplaneRecord {
  FqVector normal;
  int contained = 0;          // codewords inside H
  int cut = 0;                // codewords meeting H in dimension k-1
  std::uint64_t holes = 0;    // holes of C lying on H
};

struct HyperplaneSpectrum {
  std::vector<HyperplaneRecord> records;
  /// Section type of P_H (holes as points) -> number of hyperplanes.
  std::map<PartitionType, std::uint64_t> counts;
};

/// Throws NotASpread.
HyperplaneSpectrum hyperplane_spectrum(const SubspaceCode& C);

struct IncidenceIdentity {
  std::string name;
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

/// Hyperplane count, codeword/hyperplane flags, hole/hyperplane flags and
/// codeword-pair/hyperplane flags, each computed from the spectrum and from
/// the closed formula.
std::vector<IncidenceIdentity> incidence_identities(const SubspaceCode& C, const HyperplaneSpectrum& spectrum);

struct TailVerdict {
  bool admissible = false;
  int clause = 0;  // 1..4 for (i)..(iv)
  std::string requirement;
};

/// Tail-length condition for a vector space partition whose tail has n1
/// members of dimension d1 and whose next dimension is d2.
TailVerdict tail_admissible(std::int64_t q, int d1, int d2, const BigInt& n1);

enum class ForbiddenVariant { Binary, OddQ };

struct ContradictionCertificate {
  ForbiddenVariant variant{};
  std::int64_t q = 0;
  int k = 0;
  int t = 0;
  int ambient_dim = 0;               // k(t+1)+1
  PartitionType forbidden_type;
  bool type_fills_space = false;     // point count equals [ambient_dim]_q
  BigInt non_hole_members;           // members of dimension > 1
  BigInt residue_modulus;            // q^{k-2}
  BigInt hole_residue;               // forced residue of L_H
  BigInt expected_residue;           // 1, resp. (q+1)/2
  std::vector<BigInt> feasible_hole_counts;  // residue class within [0, available]
  std::vector<BigInt> tail_excluded;         // removed by the tail condition
  BigInt min_hole_count;             // smallest remaining L_H
  BigInt hyperplanes;                // [ambient_dim]_q
  BigInt hyperplanes_per_hole;       // [ambient_dim - 1]_q
  Rational total_holes_lower_bound;  // min_hole_count * hyperplanes / hyperplanes_per_hole
  BigInt intermediate_bound;         // 2(1+2^{k-2}), resp. ((q+1)/2 + q^{k-2}) q
  BigInt available_holes;            // 1+2^{k-1}, resp. (q+1)/2 + q^{k-1}
  bool certified = false;
};

/// Recomputes the counting contradiction excluding the partition types
/// k^{n_k} (k-1)^{n_{k-1}} 1^{1+2^{k-1}} (q = 2) and
/// k^{p-1} (k-1)^{m-p+1} 1^{(q+1)/2+q^{k-1}} (odd q) in F_q^{k(t+1)+1}.
ContradictionCertificate forbidden_partition_check(std::int64_t q, int k, int t, ForbiddenVariant variant);

struct HyperplaneProfile {
  int contained = 0;  // codewords inside the hyperplane
  BigInt holes;       // holes on the hyperplane
};

/// (i, L_H) pairs compatible with a partial spread of the given size: L_H
/// between 0 and the hole count, and not ruled out by the tail condition.
std::vector<HyperplaneProfile> hyperplane_profiles(std::int64_t q, int n, int k, const BigInt& code_size);

struct SpanConstraint {
  /// Total holes of the code; the profile with this many holes counts the
  /// hyperplanes through the span of all holes.
  BigInt total_holes;
};

struct StandardEquationsResult {
  std::vector<HyperplaneProfile> profiles;
  std::vector<BigInt> rhs;  // hyperplanes, codeword flags, pair flags
  /// a = particular + sum_j free_j * directions[j], free variables indexed by free_indices.
  std::vector<int> free_indices;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> directions;
  /// Range of the free variable allowed by nonnegativity (single free variable only).
  std::optional<std::pair<BigInt, BigInt>> free_range;
  /// False when there are more than two free variables; only the general
  /// solution is filled in then.
  bool enumerated = true;
  std::vector<std::vector<BigInt>> nonnegative_solutions;
  std::vector<std::vector<BigInt>> spectra;  // after the span constraint, if any
  std::optional<std::vector<BigInt>> span_allowed_counts;
  std::optional<int> span_profile;  // index of the profile constrained by the span
  bool span_constraint_validated = true;  // false for q != 2
};

/// Nonnegative integer solutions (a_i) of
///   sum a_i = [n]_q,  sum i a_i = size [n-k]_q,  sum C(i,2) a_i = C(size,2) [n-2k]_q.
/// Throws InconsistentSystem when there is none among the enumerated ones.
StandardEquationsResult solve_standard_equations(int n, int k, std::int64_t q, const BigInt& code_size,
                                                 const std::vector<HyperplaneProfile>& profiles,
                                                 const std::optional<SpanConstraint>& span_constraint);

}  // namespace spreadkit
