#pragma once

// Brute-force oracle for A_q(n, 2k; k): enumerate G_q(n, k) and search for a
// maximum set of pairwise trivially intersecting subspaces.

#include "spreadkit/codes.hpp"
#include "spreadkit/subspace.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace spreadkit {

inline constexpr std::uint64_t kDefaultEnumerationCap = 200000;

/// All k-subspaces of F_q^n in RREF-pattern order: pivot sets in
/// lexicographic order, then free cells counted in base q. Throws TooLarge
/// when the Gaussian binomial exceeds `cap`.
std::vector<Subspace> enumerate_k_subspaces(std::int64_t q, int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

/// Vertices are the k-subspaces; edges join pairs meeting only in 0.
class CompatibilityGraph {
 public:
  CompatibilityGraph(std::int64_t q, int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Subspace>& vertices() const noexcept { return vertices_; }
  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;

  /// Points of F_q^n in lexicographic order and, per vertex, the indices of its points.
  std::size_t point_count() const noexcept { return point_total_; }
  const std::vector<std::uint32_t>& points_of(std::size_t v) const { return vertex_points_[v]; }

 private:
  std::vector<Subspace> vertices_;
  std::size_t point_total_ = 0;
  std::vector<std::vector<std::uint32_t>> vertex_points_;
  std::vector<std::vector<std::uint64_t>> point_bits_;
  // Dense adjacency rows, kept only for graphs of at most kDenseLimit vertices.
  static constexpr std::size_t kDenseLimit = 20000;
  std::vector<std::vector<std::uint64_t>> adjacency_;
};

struct SearchLimits {
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
  /// Fix the lexicographically least subspace as a member. Sound because
  /// GL(n, q) acts transitively on G_q(n, k).
  bool symmetry_fixing = true;
};

struct SearchResult {
  std::size_t best_size = 0;
  SubspaceCode witness;
  bool proved_optimal = false;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

SearchResult max_partial_spread(std::int64_t q, int n, int k, const SearchLimits& limits = {});
SearchResult max_partial_spread(const CompatibilityGraph& graph, std::int64_t q, int n, int k,
                                const SearchLimits& limits = {});

}  // namespace spreadkit
