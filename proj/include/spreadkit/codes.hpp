#pragma once

// Rank-metric codes and the subspace codes built from them: lifted MRD
// codes, the block-diagonal multi-component partial spread and
// echelon-Ferrers assembly over rectangular free regions.

#include "spreadkit/integer.hpp"
#include "spreadkit/matrix.hpp"
#include "spreadkit/subspace.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spreadkit {

struct MatrixCode {
  FieldPtr field;
  int rows = 0;
  int cols = 0;
  std::vector<FqMatrix> codewords;
  std::optional<int> declared_min_rank_distance;
};

/// Set of equal-dimension subspaces of F_q^n. Construction rejects
/// duplicates and mixed dimensions.
class SubspaceCode {
 public:
  SubspaceCode(FieldPtr field, int n, int k, std::vector<Subspace> codewords,
               std::optional<int> declared_min_distance = std::nullopt);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int ambient_dim() const noexcept { return n_; }
  int dim() const noexcept { return k_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  const std::vector<Subspace>& codewords() const noexcept { return codewords_; }
  std::optional<int> declared_min_distance() const noexcept { return declared_; }

  /// Same codewords as a set, independent of order.
  bool same_set(const SubspaceCode& other) const;

 private:
  FieldPtr field_;
  int n_;
  int k_;
  std::vector<Subspace> codewords_;
  std::optional<int> declared_;
};

/// Binary vector of length n and weight k marking pivot columns.
class PivotVector {
 public:
  explicit PivotVector(std::vector<bool> bits);
  /// Parses a string of '0'/'1' characters.
  static PivotVector parse(std::string_view bits);

  int length() const noexcept { return static_cast<int>(bits_.size()); }
  int weight() const noexcept { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const noexcept { return positions_; }
  bool operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<bool> bits_;
  std::vector<int> positions_;
};

int hamming_distance(const PivotVector& a, const PivotVector& b);

/// Maximum size q^{max(m,n)(min(m,n)-d+1)} of an m x n rank-metric code
/// with minimum distance d; 1 when d > min(m, n).
BigInt mrd_size(std::int64_t q, int m, int n, int d);

/// k x m Gabidulin code with rank distance k (m >= k): codeword for
/// a in GF(q^m) has rows a, a·x, ..., a·x^{k-1} expanded over GF(q).
MatrixCode mrd_full_rank_code(std::int64_t q, int k, int m);

/// Minimum pairwise rank distance; nullopt (infinity) when |C| <= 1.
std::optional<int> min_rank_distance(const MatrixCode& C);

/// Row spaces of [I_k | A] for A in an MRD code of rank distance d/2.
/// Supports d/2 = 1, d/2 = min(k, n-k) and d > 2 min(k, n-k).
SubspaceCode lifted_mrd(std::int64_t q, int n, int k, int d);

/// Size q^{max(k,n-k)(min(k,n-k)-d/2+1)}, or 1 when d > 2 min(k, n-k).
BigInt lifted_mrd_size(std::int64_t q, int n, int k, int d);

/// Block-diagonal partial spread of size 1 + sum_{i=1}^{floor(n/k)-1} q^{n-ik}.
/// Requires n >= k and k not dividing n.
SubspaceCode multi_component(std::int64_t q, int n, int k);

/// The same block construction when k divides n, which yields a full spread.
SubspaceCode block_spread(std::int64_t q, int n, int k);

/// Closed form 1 + sum_{i=1}^{floor(n/k)-1} q^{n-ik}.
BigInt multi_component_size(std::int64_t q, int n, int k);

/// Union of lifted components, one per pivot vector. Each component's
/// k x c matrices fill the c columns right of the last pivot; the other
/// free cells stay zero. Pivot vectors must be pairwise at Hamming
/// distance >= 2d and components must have rank distance >= d.
SubspaceCode echelon_ferrers_assemble(const std::vector<PivotVector>& skeleton,
                                      const std::vector<MatrixCode>& components, int d);

/// Pivot vectors of the block construction: ones in positions (i-1)k .. ik-1.
std::vector<PivotVector> block_skeleton(int n, int k);

}  // namespace spreadkit
