#pragma once

// Dense matrices over GF(q). Storage is an Eigen matrix of encoded field
// elements; all arithmetic goes through the FieldCtx.

#include "spreadkit/field.hpp"

#include <Eigen/Core>

#include <vector>

namespace spreadkit {

using FqMatrix = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FqVector = Eigen::Matrix<Element, 1, Eigen::Dynamic>;

struct RrefResult {
  FqMatrix reduced;  // zero rows removed
  int rank = 0;
  std::vector<int> pivots;
};

/// Unique reduced row echelon form of M.
RrefResult rref(const FieldCtx& F, FqMatrix M);

template <typename Derived>
RrefResult rref(const FieldCtx& F, const Eigen::MatrixBase<Derived>& M) {
  return rref(F, FqMatrix(M));
}

int rank(const FieldCtx& F, const FqMatrix& M);

/// True when M has no zero rows and is in reduced row echelon form.
bool is_rref(const FieldCtx& F, const FqMatrix& M);

/// Basis (in RREF) of {x : M x^T = 0}; has cols(M) columns.
FqMatrix null_space(const FieldCtx& F, const FqMatrix& M);

FqMatrix subtract(const FieldCtx& F, const FqMatrix& A, const FqMatrix& B);
FqMatrix multiply(const FieldCtx& F, const FqMatrix& A, const FqMatrix& B);

/// Vertical concatenation.
FqMatrix stack(const FqMatrix& top, const FqMatrix& bottom);

Element dot(const FieldCtx& F, const FqVector& a, const FqVector& b);

/// Scales v so that its first nonzero entry is 1; v must be nonzero.
FqVector normalize(const FieldCtx& F, FqVector v);

bool is_zero(const FqMatrix& M);

}  // namespace spreadkit
