#pragma once

#include "spreadkit/integer.hpp"
#include "spreadkit/matrix.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace spreadkit {

/// Number of k-dimensional subspaces of F_q^n; 0 when k < 0 or k > n.
BigInt gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q);

/// A subspace of F_q^n stored as its RREF basis. Two subspaces are equal
/// iff their bases are entrywise equal.
class Subspace {
 public:
  /// Canonical span of the rows of `generators`; throws ZeroSpace when
  /// every generator is zero.
  static Subspace from_generators(FieldPtr field, const FqMatrix& generators);

  /// Wraps a basis that must already be in RREF with no zero rows.
  static Subspace from_rref(FieldPtr field, FqMatrix basis);

  const FieldCtx& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int ambient_dim() const noexcept { return static_cast<int>(basis_.cols()); }
  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  const FqMatrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(const FqVector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const;
  /// Lexicographic on (dimension, basis entries); a total order on canonical forms.
  std::strong_ordering operator<=>(const Subspace& other) const;

 private:
  Subspace(FieldPtr field, FqMatrix basis, std::vector<int> pivots)
      : field_(std::move(field)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  FieldPtr field_;
  FqMatrix basis_;
  std::vector<int> pivots_;
};

/// A projective point: nonzero vector whose first nonzero coordinate is 1.
struct Point {
  FqVector coords;

  bool operator==(const Point& other) const { return coords == other.coords; }
};

/// Lexicographic rank of a vector among all vectors of F_q^n (base-q
/// number with the first coordinate most significant).
std::uint64_t vector_key(const FieldCtx& F, const FqVector& v);

struct Distances {
  int dim_sum = 0;
  int dim_meet = 0;
  int subspace_distance = 0;
  int injection_distance = 0;
};

/// Throws AmbientMismatch when U and V live in different spaces.
Distances distances(const Subspace& U, const Subspace& V);

Subspace intersect(const Subspace& U, const Subspace& V);

/// Dimension of U ∩ V without building it.
int meet_dimension(const Subspace& U, const Subspace& V);

/// All normalized points of U in lexicographic order.
std::vector<Point> enumerate_points(const Subspace& U);

/// Points of F_q^n in lexicographic order.
std::vector<Point> enumerate_points(const FieldPtr& field, int n);

/// Normalized normal vectors of all hyperplanes of F_q^n, lexicographic.
std::vector<FqVector> hyperplane_normals(const FieldPtr& field, int n);

/// All hyperplanes of F_q^n, in the order of hyperplane_normals.
std::vector<Subspace> enumerate_hyperplanes(const FieldPtr& field, int n);

/// Kernel of the functional x -> normal·x.
Subspace hyperplane_from_normal(const FieldPtr& field, const FqVector& normal);

/// Normalized normal vector of a hyperplane.
FqVector hyperplane_normal(const Subspace& H);

/// U ∩ H for a hyperplane H.
Subspace hyperplane_section(const Subspace& U, const Subspace& H);

/// True when every basis vector of U is annihilated by `normal`.
bool lies_in_hyperplane(const Subspace& U, const FqVector& normal);

}  // namespace spreadkit
