#pragma once

#include "spreadkit/matrix.hpp"

#include <initializer_list>

namespace testing {

inline spreadkit::FqMatrix mat(std::initializer_list<std::initializer_list<spreadkit::Element>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  spreadkit::FqMatrix M(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) M(i, j++) = v;
    ++i;
  }
  return M;
}

inline spreadkit::FqVector vec(std::initializer_list<spreadkit::Element> entries) {
  spreadkit::FqVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index j = 0;
  for (auto x : entries) v(j++) = x;
  return v;
}

}  // namespace testing
