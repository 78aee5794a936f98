#include "spreadkit/search.hpp"

#include "spreadkit/error.hpp"

#include <bit>
#include <chrono>
#include <unordered_map>

namespace spreadkit {

std::vector<Subspace> enumerate_k_subspaces(std::int64_t q, int n, int k, std::uint64_t cap) {
  if (k < 1 || n < k) throw Error(Errc::ParameterError, "enumeration requires 1 <= k <= n");
  const BigInt total = gaussian_binomial(n, k, q);
  if (total > cap) throw Error(Errc::TooLarge, "G_q(n,k) has " + total.str() + " members, cap is " + std::to_string(cap));
  const FieldPtr field = make_field_of_order(q);

  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> pivots(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pivots[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) cells.emplace_back(i, j);

    std::uint64_t combos = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) combos *= field->q();
    for (std::uint64_t c = 0; c < combos; ++c) {
      FqMatrix basis = FqMatrix::Zero(k, n);
      for (int i = 0; i < k; ++i) basis(i, pivots[static_cast<std::size_t>(i)]) = 1;
      std::uint64_t rest = c;
      for (std::size_t cell = cells.size(); cell-- > 0;) {
        basis(cells[cell].first, cells[cell].second) = static_cast<Element>(rest % field->q());
        rest /= field->q();
      }
      out.push_back(Subspace::from_rref(field, std::move(basis)));
    }

    // Next pivot set in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

CompatibilityGraph::CompatibilityGraph(std::int64_t q, int n, int k, std::uint64_t cap)
    : vertices_(enumerate_k_subspaces(q, n, k, cap)) {
  const FieldPtr field = make_field_of_order(q);
  const auto points = enumerate_points(field, n);
  point_total_ = points.size();
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(vector_key(*field, points[i].coords), static_cast<std::uint32_t>(i));

  const std::size_t words = (point_total_ + 63) / 64;
  vertex_points_.reserve(vertices_.size());
  point_bits_.reserve(vertices_.size());
  for (const auto& U : vertices_) {
    std::vector<std::uint32_t> pts;
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& pt : enumerate_points(U)) {
      const std::uint32_t p = index.at(vector_key(*field, pt.coords));
      pts.push_back(p);
      bits[p / 64] |= std::uint64_t{1} << (p % 64);
    }
    vertex_points_.push_back(std::move(pts));
    point_bits_.push_back(std::move(bits));
  }
  if (vertices_.size() > kDenseLimit) return;
  adjacency_.assign(vertices_.size(), std::vector<std::uint64_t>((vertices_.size() + 63) / 64, 0));
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      bool disjoint = true;
      for (std::size_t w = 0; w < words && disjoint; ++w) disjoint = (point_bits_[a][w] & point_bits_[b][w]) == 0;
      if (disjoint) {
        adjacency_[a][b / 64] |= std::uint64_t{1} << (b % 64);
        adjacency_[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
}

bool CompatibilityGraph::adjacent(std::size_t a, std::size_t b) const {
  if (!adjacency_.empty()) return (adjacency_[a][b / 64] >> (b % 64)) & 1u;
  if (a == b) return false;
  for (std::size_t w = 0; w < point_bits_[a].size(); ++w)
    if (point_bits_[a][w] & point_bits_[b][w]) return false;
  return true;
}

std::size_t CompatibilityGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  if (!adjacency_.empty()) {
    for (auto w : adjacency_[v]) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }
  for (std::size_t u = 0; u < vertices_.size(); ++u) d += adjacent(v, u);
  return d;
}

namespace {

class Searcher {
 public:
  Searcher(const CompatibilityGraph& g, std::size_t points_per_member, const SearchLimits& limits)
      : g_(g),
        P_(g.point_count()),
        pps_(points_per_member),
        words_((P_ + 63) / 64),
        limits_(limits),
        blocked_(words_, 0),
        point_vertices_(P_),
        vertex_bits_(g.vertex_count() * words_, 0),
        start_(std::chrono::steady_clock::now()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      for (auto p : g.points_of(v)) {
        point_vertices_[p].push_back(static_cast<std::uint32_t>(v));
        vertex_bits_[v * words_ + p / 64] |= std::uint64_t{1} << (p % 64);
      }
    free_points_ = P_;
  }

  void run() {
    for (std::size_t v = 0; v < g_.vertex_count(); ++v)
      if (is_free(v)) choose(v);
    best_ = chosen_;
    while (!chosen_.empty()) unchoose();

    if (limits_.symmetry_fixing && g_.vertex_count() > 0) choose(0);
    dfs();
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool is_free(std::size_t v) const {
    const std::uint64_t* bits = &vertex_bits_[v * words_];
    for (std::size_t w = 0; w < words_; ++w)
      if (bits[w] & blocked_[w]) return false;
    return true;
  }
  bool point_blocked(std::size_t p) const { return (blocked_[p / 64] >> (p % 64)) & 1u; }

  void choose(std::size_t v) {
    const std::uint64_t* bits = &vertex_bits_[v * words_];
    for (std::size_t w = 0; w < words_; ++w) blocked_[w] |= bits[w];
    free_points_ -= pps_;
    chosen_.push_back(v);
  }
  void unchoose() {
    const std::size_t v = chosen_.back();
    chosen_.pop_back();
    const std::uint64_t* bits = &vertex_bits_[v * words_];
    for (std::size_t w = 0; w < words_; ++w) blocked_[w] &= ~bits[w];
    free_points_ += pps_;
  }
  void mark_hole(std::size_t p) {
    blocked_[p / 64] |= std::uint64_t{1} << (p % 64);
    --free_points_;
  }
  void unmark_hole(std::size_t p) {
    blocked_[p / 64] &= ~(std::uint64_t{1} << (p % 64));
    ++free_points_;
  }

  bool out_of_limits() {
    if (nodes_ >= limits_.node_budget) return true;
    if ((nodes_ & 255) == 0 && elapsed() > limits_.time_limit_seconds) return true;
    return false;
  }

  void dfs() {
    ++nodes_;
    if (aborted_ || out_of_limits()) {
      aborted_ = true;
      return;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (chosen_.size() + free_points_ / pps_ <= best_.size()) return;

    // Branch on the uncovered point with the fewest placeable subspaces.
    std::size_t pick = P_, pick_count = SIZE_MAX;
    for (std::size_t p = 0; p < P_ && pick_count > 0; ++p) {
      if (point_blocked(p)) continue;
      std::size_t count = 0;
      for (auto v : point_vertices_[p])
        if (is_free(v) && ++count >= pick_count) break;
      if (count < pick_count) {
        pick = p;
        pick_count = count;
      }
    }
    if (pick == P_) return;

    if (pick_count > 0) {
      for (auto v : point_vertices_[pick]) {
        if (!is_free(v)) continue;
        choose(v);
        dfs();
        unchoose();
        if (aborted_) return;
      }
    }
    // The point stays a hole.
    if (chosen_.size() + (free_points_ - 1) / pps_ > best_.size()) {
      mark_hole(pick);
      dfs();
      unmark_hole(pick);
    }
  }

  const CompatibilityGraph& g_;
  std::size_t P_;
  std::size_t pps_;
  std::size_t words_;
  SearchLimits limits_;
  std::vector<std::uint64_t> blocked_;  // covered points and designated holes
  std::vector<std::vector<std::uint32_t>> point_vertices_;
  std::vector<std::uint64_t> vertex_bits_;
  std::size_t free_points_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SearchResult max_partial_spread(const CompatibilityGraph& graph, std::int64_t q, int n, int k,
                                const SearchLimits& limits) {
  const std::size_t pps = static_cast<std::size_t>(point_count(q, k));
  Searcher searcher(graph, pps, limits);
  searcher.run();

  std::vector<Subspace> members;
  for (auto v : searcher.best()) members.push_back(graph.vertices()[v]);
  SearchResult result{searcher.best().size(), SubspaceCode(make_field_of_order(q), n, k, std::move(members), 2 * k),
                      !searcher.aborted(), searcher.nodes(), searcher.elapsed()};
  return result;
}

SearchResult max_partial_spread(std::int64_t q, int n, int k, const SearchLimits& limits) {
  const CompatibilityGraph graph(q, n, k);
  return max_partial_spread(graph, q, n, k, limits);
}

}  // namespace spreadkit
