#include "spreadkit/subspace.hpp"

#include "spreadkit/error.hpp"

#include <algorithm>

namespace spreadkit {

BigInt gaussian_binomial(std::int64_t n, std::int64_t k, std::int64_t q) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (q < 2) throw Error(Errc::ParameterError, "gaussian_binomial requires q >= 2");
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each partial product is itself a Gaussian binomial, so every division is exact.
  for (std::int64_t i = 0; i < k; ++i) {
    result *= ipow(q, n - i) - 1;
    result /= ipow(q, i + 1) - 1;
  }
  return result;
}

Subspace Subspace::from_generators(FieldPtr field, const FqMatrix& generators) {
  RrefResult r = rref(*field, generators);
  if (r.rank == 0) throw Error(Errc::ZeroSpace, "all generators are zero");
  return Subspace(std::move(field), std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::from_rref(FieldPtr field, FqMatrix basis) {
  if (basis.rows() == 0) return Subspace(std::move(field), std::move(basis), {});
  RrefResult r = rref(*field, basis);
  if (r.rank != basis.rows() || r.reduced != basis)
    throw Error(Errc::FormatError, "basis is not in reduced row echelon form");
  return Subspace(std::move(field), std::move(basis), std::move(r.pivots));
}

bool Subspace::contains(const FqVector& v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::AmbientMismatch, "vector length differs");
  // Subtract the pivot combination; v lies in the span iff nothing remains.
  FqVector rest = v;
  for (int i = 0; i < dim(); ++i) {
    const Element c = rest[pivots_[static_cast<std::size_t>(i)]];
    if (c == 0) continue;
    for (Eigen::Index j = 0; j < rest.size(); ++j) rest[j] = field_->sub(rest[j], field_->mul(c, basis_(i, j)));
  }
  return (rest.array() == 0).all();
}

bool Subspace::contains(const Subspace& other) const {
  for (Eigen::Index i = 0; i < other.basis_.rows(); ++i)
    if (!contains(FqVector(other.basis_.row(i)))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return *field_ == *other.field_ && basis_.rows() == other.basis_.rows() &&
         basis_.cols() == other.basis_.cols() && basis_ == other.basis_;
}

std::strong_ordering Subspace::operator<=>(const Subspace& other) const {
  if (auto c = ambient_dim() <=> other.ambient_dim(); c != 0) return c;
  if (auto c = dim() <=> other.dim(); c != 0) return c;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i)
    for (Eigen::Index j = 0; j < basis_.cols(); ++j)
      if (auto c = basis_(i, j) <=> other.basis_(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

std::uint64_t vector_key(const FieldCtx& F, const FqVector& v) {
  std::uint64_t key = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) key = key * F.q() + v[i];
  return key;
}

namespace {

void require_same_space(const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != V.ambient_dim() || !(U.field() == V.field()))
    throw Error(Errc::AmbientMismatch, "subspaces live in different ambient spaces");
}

}  // namespace

Distances distances(const Subspace& U, const Subspace& V) {
  require_same_space(U, V);
  Distances d;
  d.dim_sum = rank(U.field(), stack(U.basis(), V.basis()));
  d.dim_meet = U.dim() + V.dim() - d.dim_sum;
  d.subspace_distance = 2 * d.dim_sum - U.dim() - V.dim();
  d.injection_distance = std::max(U.dim(), V.dim()) - d.dim_meet;
  return d;
}

int meet_dimension(const Subspace& U, const Subspace& V) { return distances(U, V).dim_meet; }

Subspace intersect(const Subspace& U, const Subspace& V) {
  require_same_space(U, V);
  const FieldCtx& F = U.field();
  const int n = U.ambient_dim();
  // U ∩ V is the annihilator of (U^⊥ + V^⊥).
  const FqMatrix dual = stack(null_space(F, U.basis()), null_space(F, V.basis()));
  if (dual.rows() == 0) return U;
  FqMatrix meet = null_space(F, dual);
  if (meet.rows() == 0) return Subspace::from_rref(U.field_ptr(), FqMatrix(0, n));
  return Subspace::from_rref(U.field_ptr(), std::move(meet));
}

std::vector<Point> enumerate_points(const Subspace& U) {
  const FieldCtx& F = U.field();
  const int k = U.dim();
  const int n = U.ambient_dim();
  std::vector<Point> points;
  // Coefficient vectors whose first nonzero entry is 1 give normalized points
  // because the basis is in RREF.
  std::vector<Element> coeff(static_cast<std::size_t>(k), 0);
  for (int lead = 0; lead < k; ++lead) {
    const int tail = k - lead - 1;
    std::uint64_t combos = 1;
    for (int i = 0; i < tail; ++i) combos *= F.q();
    for (std::uint64_t c = 0; c < combos; ++c) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[static_cast<std::size_t>(lead)] = 1;
      std::uint64_t rest = c;
      for (int i = k - 1; i > lead; --i) {
        coeff[static_cast<std::size_t>(i)] = static_cast<Element>(rest % F.q());
        rest /= F.q();
      }
      FqVector v = FqVector::Zero(n);
      for (int i = lead; i < k; ++i) {
        const Element a = coeff[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (int j = 0; j < n; ++j) v[j] = F.add(v[j], F.mul(a, U.basis()(i, j)));
      }
      points.push_back(Point{std::move(v)});
    }
  }
  std::sort(points.begin(), points.end(), [&F](const Point& a, const Point& b) {
    return vector_key(F, a.coords) < vector_key(F, b.coords);
  });
  return points;
}

std::vector<Point> enumerate_points(const FieldPtr& field, int n) {
  FqMatrix identity = FqMatrix::Identity(n, n);
  return enumerate_points(Subspace::from_rref(field, identity));
}

std::vector<FqVector> hyperplane_normals(const FieldPtr& field, int n) {
  std::vector<FqVector> normals;
  for (auto& p : enumerate_points(field, n)) normals.push_back(std::move(p.coords));
  return normals;
}

Subspace hyperplane_from_normal(const FieldPtr& field, const FqVector& normal) {
  FqMatrix row = normal;
  return Subspace::from_rref(field, null_space(*field, row));
}

std::vector<Subspace> enumerate_hyperplanes(const FieldPtr& field, int n) {
  if (n < 1) throw Error(Errc::ParameterError, "ambient dimension must be >= 1");
  std::vector<Subspace> hyperplanes;
  for (const auto& h : hyperplane_normals(field, n)) hyperplanes.push_back(hyperplane_from_normal(field, h));
  return hyperplanes;
}

FqVector hyperplane_normal(const Subspace& H) {
  if (H.dim() != H.ambient_dim() - 1) throw Error(Errc::ParameterError, "not a hyperplane");
  const FqMatrix dual = null_space(H.field(), H.basis());
  return normalize(H.field(), FqVector(dual.row(0)));
}

bool lies_in_hyperplane(const Subspace& U, const FqVector& normal) {
  for (Eigen::Index i = 0; i < U.basis().rows(); ++i)
    if (dot(U.field(), FqVector(U.basis().row(i)), normal) != 0) return false;
  return true;
}

Subspace hyperplane_section(const Subspace& U, const Subspace& H) {
  require_same_space(U, H);
  if (H.dim() != H.ambient_dim() - 1) throw Error(Errc::ParameterError, "second argument is not a hyperplane");
  return intersect(U, H);
}

}  // namespace spreadkit
