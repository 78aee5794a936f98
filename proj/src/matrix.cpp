#include "spreadkit/matrix.hpp"

#include "spreadkit/error.hpp"

#include <utility>

namespace spreadkit {

RrefResult rref(const FieldCtx& F, FqMatrix M) {
  RrefResult result;
  const Eigen::Index rows = M.rows();
  const Eigen::Index cols = M.cols();
  Eigen::Index lead_row = 0;
  for (Eigen::Index col = 0; col < cols && lead_row < rows; ++col) {
    Eigen::Index pivot = lead_row;
    while (pivot < rows && M(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row) M.row(pivot).swap(M.row(lead_row));

    const Element scale = F.inv(M(lead_row, col));
    for (Eigen::Index j = col; j < cols; ++j) M(lead_row, j) = F.mul(M(lead_row, j), scale);

    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == lead_row || M(i, col) == 0) continue;
      const Element factor = M(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        M(i, j) = F.sub(M(i, j), F.mul(factor, M(lead_row, j)));
    }
    result.pivots.push_back(static_cast<int>(col));
    ++lead_row;
  }
  result.rank = static_cast<int>(lead_row);
  result.reduced = M.topRows(lead_row);
  return result;
}

int rank(const FieldCtx& F, const FqMatrix& M) { return rref(F, M).rank; }

bool is_rref(const FieldCtx& F, const FqMatrix& M) {
  const RrefResult r = rref(F, M);
  return r.rank == M.rows() && r.reduced == M;
}

FqMatrix null_space(const FieldCtx& F, const FqMatrix& M) {
  const auto cols = static_cast<int>(M.cols());
  const RrefResult r = rref(F, M);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  FqMatrix basis(cols - r.rank, cols);
  basis.setZero();
  Eigen::Index row = 0;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(row, free) = 1;
    for (int i = 0; i < r.rank; ++i)
      basis(row, r.pivots[static_cast<std::size_t>(i)]) = F.neg(r.reduced(i, free));
    ++row;
  }
  if (basis.rows() == 0) return basis;
  return rref(F, basis).reduced;
}

FqMatrix subtract(const FieldCtx& F, const FqMatrix& A, const FqMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw Error(Errc::ShapeError, "subtract: shape mismatch");
  FqMatrix D(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) D(i, j) = F.sub(A(i, j), B(i, j));
  return D;
}

FqMatrix multiply(const FieldCtx& F, const FqMatrix& A, const FqMatrix& B) {
  if (A.cols() != B.rows()) throw Error(Errc::ShapeError, "multiply: shape mismatch");
  FqMatrix C = FqMatrix::Zero(A.rows(), B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index l = 0; l < A.cols(); ++l) {
      const Element a = A(i, l);
      if (a == 0) continue;
      for (Eigen::Index j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
    }
  return C;
}

FqMatrix stack(const FqMatrix& top, const FqMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  FqMatrix out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

Element dot(const FieldCtx& F, const FqVector& a, const FqVector& b) {
  Element sum = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) sum = F.add(sum, F.mul(a[i], b[i]));
  return sum;
}

FqVector normalize(const FieldCtx& F, FqVector v) {
  Eigen::Index first = 0;
  while (first < v.size() && v[first] == 0) ++first;
  if (first == v.size()) throw Error(Errc::ZeroSpace, "cannot normalize the zero vector");
  const Element scale = F.inv(v[first]);
  for (Eigen::Index i = first; i < v.size(); ++i) v[i] = F.mul(v[i], scale);
  return v;
}

bool is_zero(const FqMatrix& M) { return (M.array() == 0).all(); }

}  // namespace spreadkit
