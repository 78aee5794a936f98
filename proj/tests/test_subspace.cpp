#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spreadkit/error.hpp"
#include "spreadkit/subspace.hpp"

#include <random>
#include <set>

using namespace spreadkit;
using testing::mat;
using testing::vec;

TEST_CASE("gaussian binomial values") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(8, 7, 2) == 255);
  CHECK(gaussian_binomial(3, 5, 2) == 0);
  CHECK(gaussian_binomial(5, 1, 2) == 31);
  CHECK(gaussian_binomial(5, 0, 3) == 1);
  CHECK(gaussian_binomial(3, -1, 2) == 0);
}

TEST_CASE("gaussian binomial agrees with brute-force subspace counts") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= std::min(n, 3); ++k)
      CHECK_MESSAGE(gaussian_binomial(n, k, 2) == oracle::count_subspaces_gf2(n, k), "n=" << n << " k=" << k);
}

TEST_CASE("gaussian binomial symmetry and Pascal recurrence") {
  for (std::int64_t q : {2, 3, 4, 5})
    for (int n = 1; n <= 10; ++n)
      for (int k = 1; k < n; ++k) {
        CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
        CHECK(gaussian_binomial(n, k, q) ==
              gaussian_binomial(n - 1, k - 1, q) + ipow(BigInt(q), k) * gaussian_binomial(n - 1, k, q));
      }
}

TEST_CASE("rref examples") {
  const auto F = make_field(2, 1);
  auto I = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rref(*F, I);
  CHECK(r.rank == 3);
  CHECK(r.reduced == I);
  r = rref(*F, mat({{1, 1}, {0, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.reduced == mat({{1, 0}, {0, 1}}));
  r = rref(*F, mat({{1, 1, 0}, {1, 1, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.reduced == mat({{1, 1, 0}}));
}

TEST_CASE("rref rank matches the xor-basis oracle on random binary matrices") {
  const auto F = make_field(2, 1);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 9);
    FqMatrix M(rows, cols);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        M(i, j) = rng() % 2;
        if (M(i, j)) masks[static_cast<std::size_t>(i)] |= std::uint64_t{1} << (cols - 1 - j);
      }
    const auto r = rref(*F, M);
    CHECK(r.rank == oracle::rank2(masks));
    if (r.rank > 0) CHECK(is_rref(*F, r.reduced));
    // Idempotent.
    if (r.rank > 0) CHECK(rref(*F, r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("null space is annihilated and has complementary dimension") {
  const auto F = make_field(3, 2);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    FqMatrix M(3, 6);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) M(i, j) = rng() % 9;
    const auto N = null_space(*F, M);
    CHECK(N.rows() + rank(*F, M) == 6);
    for (Eigen::Index a = 0; a < N.rows(); ++a)
      for (Eigen::Index b = 0; b < M.rows(); ++b) CHECK(dot(*F, N.row(a), M.row(b)) == 0);
  }
}

TEST_CASE("subspaces are canonical") {
  const auto F = make_field(2, 1);
  const auto U = Subspace::from_generators(F, mat({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  const auto V = Subspace::from_generators(F, mat({{0, 1, 0, 0}, {1, 1, 0, 0}}));
  CHECK(U == V);
  const auto full = Subspace::from_generators(F, mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(full.basis() == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto W = Subspace::from_generators(F, mat({{1, 1, 0}, {0, 1, 1}}));
  CHECK(W.basis() == mat({{1, 0, 1}, {0, 1, 1}}));
  CHECK(W.pivots() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(Subspace::from_generators(F, mat({{0, 0, 0}})), Error);
  CHECK_THROWS_AS(Subspace::from_rref(F, mat({{1, 1, 0}, {0, 1, 1}})), Error);
}

TEST_CASE("containment") {
  const auto F = make_field(2, 1);
  const auto W = Subspace::from_generators(F, mat({{1, 1, 0}, {0, 1, 1}}));
  CHECK(W.contains(vec({1, 0, 1})));
  CHECK_FALSE(W.contains(vec({1, 0, 0})));
  CHECK(W.contains(Subspace::from_generators(F, mat({{1, 0, 1}}))));
}

TEST_CASE("distances") {
  const auto F = make_field(2, 1);
  const auto U = Subspace::from_generators(F, mat({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  auto d = distances(U, U);
  CHECK(d.subspace_distance == 0);
  CHECK(d.injection_distance == 0);
  FqMatrix A = FqMatrix::Zero(4, 10), B = FqMatrix::Zero(4, 10);
  for (int i = 0; i < 4; ++i) {
    A(i, i) = 1;
    B(i, i + 4) = 1;
  }
  d = distances(Subspace::from_generators(F, A), Subspace::from_generators(F, B));
  CHECK(d.dim_meet == 0);
  CHECK(d.subspace_distance == 8);
  CHECK(d.injection_distance == 4);
  const auto V = Subspace::from_generators(F, mat({{0, 1, 0, 0}, {0, 0, 1, 0}}));
  d = distances(U, V);
  CHECK(d.dim_meet == 1);
  CHECK(d.dim_sum == 3);
  CHECK(d.subspace_distance == 2);
  CHECK(intersect(U, V) == Subspace::from_generators(F, mat({{0, 1, 0, 0}})));
  const auto G = make_field(3, 1);
  const auto X = Subspace::from_generators(G, mat({{1, 0, 0, 0}}));
  CHECK_THROWS_AS(distances(U, Subspace::from_generators(F, mat({{1, 0, 0}}))), Error);
  (void)X;
}

TEST_CASE("distance identities on random subspaces of F_3^6") {
  const auto F = make_field(3, 1);
  std::mt19937 rng(3);
  auto random_subspace = [&](int k) {
    for (;;) {
      FqMatrix M(k, 6);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < 6; ++j) M(i, j) = rng() % 3;
      if (rank(*F, M) == k) return Subspace::from_generators(F, M);
    }
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto U = random_subspace(1 + static_cast<int>(rng() % 4));
    const auto V = random_subspace(1 + static_cast<int>(rng() % 4));
    const auto d = distances(U, V);
    CHECK(d.dim_sum + d.dim_meet == U.dim() + V.dim());
    CHECK(d.subspace_distance == d.dim_sum - d.dim_meet);
    CHECK(d.injection_distance == std::max(U.dim(), V.dim()) - d.dim_meet);
    CHECK(meet_dimension(U, V) == d.dim_meet);
    const auto meet = d.dim_meet > 0 ? std::optional(intersect(U, V)) : std::nullopt;
    if (meet) {
      CHECK(U.contains(*meet));
      CHECK(V.contains(*meet));
      CHECK(meet->dim() == d.dim_meet);
    }
  }
}

TEST_CASE("point enumeration") {
  const auto F = make_field(2, 1);
  CHECK(enumerate_points(Subspace::from_generators(F, mat({{0, 1, 1}}))).size() == 1);
  CHECK(enumerate_points(Subspace::from_generators(F, mat({{1, 0, 0, 0}, {0, 1, 0, 0}}))).size() == 3);
  const auto all = enumerate_points(F, 4);
  CHECK(all.size() == 15);
  std::set<std::uint64_t> keys;
  for (std::size_t i = 0; i < all.size(); ++i) {
    keys.insert(vector_key(*F, all[i].coords));
    if (i > 0) CHECK(vector_key(*F, all[i - 1].coords) < vector_key(*F, all[i].coords));
  }
  CHECK(keys.size() == 15);
  const auto F4 = make_field(2, 2);
  for (const auto& p : enumerate_points(F4, 3)) CHECK(normalize(*F4, p.coords) == p.coords);
  CHECK(enumerate_points(F4, 3).size() == 21);
}

TEST_CASE("hyperplanes") {
  const auto F2 = make_field(2, 1);
  CHECK(enumerate_hyperplanes(F2, 4).size() == 15);
  CHECK(enumerate_hyperplanes(make_field(3, 1), 2).size() == 4);
  CHECK(hyperplane_normals(F2, 8).size() == 255);
  for (const auto& normal : hyperplane_normals(make_field(3, 1), 4)) {
    const auto H = hyperplane_from_normal(make_field(3, 1), normal);
    CHECK(H.dim() == 3);
    CHECK(hyperplane_normal(H) == normal);
  }
}

TEST_CASE("hyperplane sections") {
  const auto F = make_field(2, 1);
  const auto U = Subspace::from_generators(F, mat({{1, 0, 0}, {0, 1, 0}}));
  const auto H = hyperplane_from_normal(F, vec({1, 0, 0}));
  CHECK(hyperplane_section(U, H) == Subspace::from_generators(F, mat({{0, 1, 0}})));
  const auto K = hyperplane_from_normal(F, vec({0, 0, 1}));
  CHECK(hyperplane_section(U, K) == U);
  CHECK(lies_in_hyperplane(U, vec({0, 0, 1})));
  CHECK_FALSE(lies_in_hyperplane(U, vec({1, 0, 0})));
  // dim k - 1 whenever U is not contained.
  const auto F3 = make_field(3, 1);
  const auto W = Subspace::from_generators(F3, mat({{1, 0, 2, 0, 1}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 2}}));
  for (const auto& Hp : enumerate_hyperplanes(F3, 5)) {
    const auto S = hyperplane_section(W, Hp);
    CHECK(S.dim() == (Hp.contains(W) ? 3 : 2));
  }
}
