#include "spreadkit/codes.hpp"

#include "spreadkit/error.hpp"

#include <algorithm>
#include <string>

namespace spreadkit {

namespace {

constexpr std::uint64_t kMaxCodewords = 1u << 20;

std::uint64_t checked_count(std::int64_t q, int exponent) {
  const BigInt count = ipow(q, exponent);
  if (count > kMaxCodewords) throw Error(Errc::TooLarge, "code would have " + count.str() + " codewords");
  return static_cast<std::uint64_t>(count);
}

std::vector<Element> digits_of(std::uint64_t value, std::uint32_t q, int length) {
  std::vector<Element> digits(static_cast<std::size_t>(length));
  for (auto& d : digits) {
    d = static_cast<Element>(value % q);
    value /= q;
  }
  return digits;
}

// v·x modulo the monic polynomial f over GF(q).
void times_x(const FieldCtx& F, const std::vector<Element>& f, std::vector<Element>& v) {
  const Element top = v.back();
  for (std::size_t i = v.size() - 1; i > 0; --i) v[i] = v[i - 1];
  v[0] = 0;
  if (top == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(v[i], F.mul(top, f[i]));
}

Subspace lift(const FieldPtr& field, int prefix_zero, int k, const FqMatrix& tail, int n) {
  FqMatrix basis = FqMatrix::Zero(k, n);
  basis.block(0, prefix_zero, k, k) = FqMatrix::Identity(k, k);
  if (tail.cols() > 0) basis.rightCols(tail.cols()) = tail;
  return Subspace::from_rref(field, std::move(basis));
}

std::vector<Subspace> block_codewords(std::int64_t q, int n, int k) {
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "block construction requires 1 <= k <= n");
  const FieldPtr field = make_field_of_order(q);
  const int blocks = n / k;
  std::vector<Subspace> codewords;
  for (int i = 1; i <= blocks; ++i) {
    const int rest = n - i * k;
    if (i < blocks) {
      for (const auto& A : mrd_full_rank_code(q, k, rest).codewords)
        codewords.push_back(lift(field, (i - 1) * k, k, A, n));
    } else {
      codewords.push_back(lift(field, (i - 1) * k, k, FqMatrix::Zero(k, rest), n));
    }
  }
  return codewords;
}

}  // namespace

SubspaceCode::SubspaceCode(FieldPtr field, int n, int k, std::vector<Subspace> codewords,
                           std::optional<int> declared_min_distance)
    : field_(std::move(field)), n_(n), k_(k), codewords_(std::move(codewords)), declared_(declared_min_distance) {
  for (const auto& U : codewords_) {
    if (U.ambient_dim() != n_ || !(U.field() == *field_))
      throw Error(Errc::AmbientMismatch, "codeword lives in a different ambient space");
    if (U.dim() != k_) throw Error(Errc::MixedDimensions, "codeword of dimension " + std::to_string(U.dim()));
  }
  std::vector<const Subspace*> sorted;
  for (const auto& U : codewords_) sorted.push_back(&U);
  std::sort(sorted.begin(), sorted.end(), [](const Subspace* a, const Subspace* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i - 1] == *sorted[i]) throw Error(Errc::ParameterError, "duplicate codeword");
}

bool SubspaceCode::same_set(const SubspaceCode& other) const {
  if (size() != other.size() || n_ != other.n_ || k_ != other.k_) return false;
  std::vector<Subspace> a = codewords_;
  std::vector<Subspace> b = other.codewords_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

PivotVector::PivotVector(std::vector<bool> bits) : bits_(std::move(bits)) {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) positions_.push_back(static_cast<int>(i));
}

PivotVector PivotVector::parse(std::string_view bits) {
  std::vector<bool> out;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(Errc::ParameterError, "pivot vector must contain only 0 and 1");
    out.push_back(c == '1');
  }
  return PivotVector(std::move(out));
}

int hamming_distance(const PivotVector& a, const PivotVector& b) {
  if (a.length() != b.length()) throw Error(Errc::ParameterError, "pivot vectors differ in length");
  int dist = 0;
  for (int i = 0; i < a.length(); ++i) dist += a[i] != b[i];
  return dist;
}

BigInt mrd_size(std::int64_t q, int m, int n, int d) {
  if (q < 2 || m < 1 || n < 1 || d < 1) throw Error(Errc::ParameterError, "mrd_size: invalid parameters");
  if (d > std::min(m, n)) return 1;
  return ipow(q, static_cast<std::int64_t>(std::max(m, n)) * (std::min(m, n) - d + 1));
}

MatrixCode mrd_full_rank_code(std::int64_t q, int k, int m) {
  if (k < 1 || m < k) throw Error(Errc::ParameterError, "mrd_full_rank_code requires m >= k >= 1");
  const FieldPtr base = make_field_of_order(q);
  const std::uint64_t count = checked_count(q, m);

  MatrixCode code{base, k, m, {}, k};
  code.codewords.reserve(count);
  if (base->e() == 1) {
    const FieldPtr ext = make_field(static_cast<std::int64_t>(base->p()), m);
    const Element x = ext->generator_x();
    std::vector<Element> g;
    for (int i = 0; i < k; ++i) g.push_back(ext->pow(x, static_cast<std::uint64_t>(i)));
    for (Element a = 0; a < count; ++a) {
      FqMatrix word(k, m);
      for (int i = 0; i < k; ++i) {
        const auto row = ext->expand_to_base(ext->mul(a, g[static_cast<std::size_t>(i)]));
        for (int j = 0; j < m; ++j) word(i, j) = row[static_cast<std::size_t>(j)];
      }
      code.codewords.push_back(std::move(word));
    }
  } else {
    // GF(q^m) as GF(q)[x]/(f) with f the smallest irreducible over GF(q).
    const auto f = smallest_irreducible(*base, m);
    for (std::uint64_t a = 0; a < count; ++a) {
      auto row = digits_of(a, base->q(), m);
      FqMatrix word(k, m);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j) word(i, j) = row[static_cast<std::size_t>(j)];
        times_x(*base, f, row);
      }
      code.codewords.push_back(std::move(word));
    }
  }
  return code;
}

std::optional<int> min_rank_distance(const MatrixCode& C) {
  if (C.codewords.size() <= 1) return std::nullopt;
  int best = std::min(C.rows, C.cols);
  for (std::size_t i = 0; i < C.codewords.size(); ++i)
    for (std::size_t j = i + 1; j < C.codewords.size(); ++j) {
      best = std::min(best, rank(*C.field, subtract(*C.field, C.codewords[i], C.codewords[j])));
      if (best == 0) return 0;
    }
  return best;
}

BigInt lifted_mrd_size(std::int64_t q, int n, int k, int d) {
  if (d % 2 != 0 || d < 2) throw Error(Errc::ParameterError, "subspace distance must be even and >= 2");
  if (k < 1 || k > n) throw Error(Errc::ParameterError, "lifted_mrd requires 1 <= k <= n");
  const int lo = std::min(k, n - k);
  const int hi = std::max(k, n - k);
  if (d > 2 * lo) return 1;
  return ipow(q, static_cast<std::int64_t>(hi) * (lo - d / 2 + 1));
}

SubspaceCode lifted_mrd(std::int64_t q, int n, int k, int d) {
  lifted_mrd_size(q, n, k, d);  // validates parameters
  const FieldPtr field = make_field_of_order(q);
  const int cols = n - k;
  const int lo = std::min(k, cols);
  const int rank_distance = d / 2;

  std::vector<FqMatrix> parts;
  if (d > 2 * lo) {
    parts.push_back(FqMatrix::Zero(k, cols));
  } else if (rank_distance == lo) {
    if (cols >= k) {
      parts = mrd_full_rank_code(q, k, cols).codewords;
    } else {
      for (const auto& A : mrd_full_rank_code(q, cols, k).codewords) parts.push_back(A.transpose());
    }
  } else if (rank_distance == 1) {
    const std::uint64_t count = checked_count(q, k * cols);
    for (std::uint64_t c = 0; c < count; ++c) {
      const auto digits = digits_of(c, field->q(), k * cols);
      FqMatrix A(k, cols);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < cols; ++j) A(i, j) = digits[static_cast<std::size_t>(i * cols + j)];
      parts.push_back(std::move(A));
    }
  } else {
    throw Error(Errc::ParameterError, "rank distance " + std::to_string(rank_distance) +
                                          " strictly between 1 and min(k, n-k) is not supported");
  }

  std::vector<Subspace> codewords;
  codewords.reserve(parts.size());
  for (const auto& A : parts) codewords.push_back(lift(field, 0, k, A, n));
  return SubspaceCode(field, n, k, std::move(codewords), d);
}

BigInt multi_component_size(std::int64_t q, int n, int k) {
  BigInt size = 1;
  for (int i = 1; i <= n / k - 1; ++i) size += ipow(q, n - i * k);
  return size;
}

SubspaceCode multi_component(std::int64_t q, int n, int k) {
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "multi_component requires 1 <= k <= n");
  if (n % k == 0) throw Error(Errc::ParameterError, "k divides n; use the spread construction");
  return SubspaceCode(make_field_of_order(q), n, k, block_codewords(q, n, k), 2 * k);
}

SubspaceCode block_spread(std::int64_t q, int n, int k) {
  if (k < 1 || n < k || n % k != 0) throw Error(Errc::ParameterError, "a spread requires k | n");
  return SubspaceCode(make_field_of_order(q), n, k, block_codewords(q, n, k), 2 * k);
}

std::vector<PivotVector> block_skeleton(int n, int k) {
  std::vector<PivotVector> skeleton;
  for (int i = 1; i <= n / k; ++i) {
    std::vector<bool> bits(static_cast<std::size_t>(n), false);
    for (int j = (i - 1) * k; j < i * k; ++j) bits[static_cast<std::size_t>(j)] = true;
    skeleton.emplace_back(std::move(bits));
  }
  return skeleton;
}

SubspaceCode echelon_ferrers_assemble(const std::vector<PivotVector>& skeleton,
                                      const std::vector<MatrixCode>& components, int d) {
  if (skeleton.empty()) throw Error(Errc::ParameterError, "empty skeleton");
  if (skeleton.size() != components.size())
    throw Error(Errc::ParameterError, "one component per pivot vector is required");
  if (d < 1) throw Error(Errc::ParameterError, "rank distance must be >= 1");
  const int n = skeleton.front().length();
  const int k = skeleton.front().weight();
  const FieldPtr field = components.front().field;

  for (const auto& v : skeleton)
    if (v.length() != n || v.weight() != k) throw Error(Errc::ParameterError, "pivot vectors must share length and weight");
  for (std::size_t i = 0; i < skeleton.size(); ++i)
    for (std::size_t j = i + 1; j < skeleton.size(); ++j)
      if (hamming_distance(skeleton[i], skeleton[j]) < 2 * d)
        throw Error(Errc::SkeletonDistanceError, "pivot vectors " + std::to_string(i) + " and " + std::to_string(j) +
                                                     " are closer than 2d");

  std::vector<Subspace> codewords;
  for (std::size_t b = 0; b < skeleton.size(); ++b) {
    const auto& pivots = skeleton[b].positions();
    const auto& comp = components[b];
    const int free_cols = n - 1 - pivots.back();
    if (!(*comp.field == *field)) throw Error(Errc::ParameterError, "components use different fields");
    if (comp.rows != k || comp.cols != free_cols)
      throw Error(Errc::ShapeError, "component " + std::to_string(b) + " is " + std::to_string(comp.rows) + "x" +
                                        std::to_string(comp.cols) + ", free region is " + std::to_string(k) + "x" +
                                        std::to_string(free_cols));
    if (auto dist = min_rank_distance(comp); dist && *dist < d)
      throw Error(Errc::ParameterError, "component " + std::to_string(b) + " has rank distance below d");
    for (const auto& A : comp.codewords) {
      FqMatrix basis = FqMatrix::Zero(k, n);
      for (int i = 0; i < k; ++i) basis(i, pivots[static_cast<std::size_t>(i)]) = 1;
      if (free_cols > 0) basis.rightCols(free_cols) = A;
      codewords.push_back(Subspace::from_rref(field, std::move(basis)));
    }
  }
  return SubspaceCode(field, n, k, std::move(codewords), 2 * d);
}

}  // namespace spreadkit
