#include "spreadkit/verification.hpp"

#include "spreadkit/error.hpp"
#include "spreadkit/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace spreadkit {

namespace {

struct Coverage {
  std::unordered_map<std::uint64_t, std::size_t> owner;  // point key -> codeword index
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

Coverage cover_points(const SubspaceCode& C) {
  Coverage cov;
  const FieldCtx& F = C.field();
  for (std::size_t i = 0; i < C.size(); ++i) {
    for (const auto& pt : enumerate_points(C.codewords()[i])) {
      auto [it, inserted] = cov.owner.emplace(vector_key(F, pt.coords), i);
      if (!inserted && !cov.witness) cov.witness = std::make_pair(it->second, i);
    }
  }
  return cov;
}

void require_spread(const Coverage& cov) {
  if (cov.witness)
    throw Error(Errc::NotASpread, "codewords " + std::to_string(cov.witness->first) + " and " +
                                      std::to_string(cov.witness->second) + " share a point");
}

}  // namespace

std::optional<int> min_subspace_distance(const SubspaceCode& C) {
  const std::size_t count = C.size();
  if (count <= 1) return std::nullopt;
  int best = 2 * C.dim();
  std::mutex guard;
  parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
    int local = 2 * C.dim();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        local = std::min(local, distances(C.codewords()[i], C.codewords()[j]).subspace_distance);
    std::lock_guard lock(guard);
    best = std::min(best, local);
  });
  return best;
}

VerificationReport verify_spread(const SubspaceCode& C) {
  VerificationReport report;
  report.codeword_count = C.size();
  const Coverage cov = cover_points(C);
  report.valid = !cov.witness;
  report.witness_pair = cov.witness;
  report.min_subspace_distance = min_subspace_distance(C);
  report.hole_count = point_count(C.field().q(), C.ambient_dim()) - BigInt(cov.owner.size());
  return report;
}

std::vector<Point> compute_holes(const SubspaceCode& C) {
  const Coverage cov = cover_points(C);
  require_spread(cov);
  std::vector<Point> holes;
  for (auto& pt : enumerate_points(C.field_ptr(), C.ambient_dim()))
    if (!cov.owner.contains(vector_key(C.field(), pt.coords))) holes.push_back(std::move(pt));
  return holes;
}

void PartitionType::add(int dim, const BigInt& count) {
  if (count == 0) return;
  multiplicity[dim] += count;
}

BigInt PartitionType::count(int dim) const {
  auto it = multiplicity.find(dim);
  return it == multiplicity.end() ? BigInt(0) : it->second;
}

BigInt PartitionType::point_total(std::int64_t q) const {
  BigInt total = 0;
  for (const auto& [dim, m] : multiplicity) total += m * point_count(q, dim);
  return total;
}

int PartitionType::tail_dim() const {
  if (multiplicity.empty()) throw Error(Errc::ParameterError, "empty partition type");
  return multiplicity.rbegin()->first;
}

BigInt PartitionType::tail_length() const { return count(tail_dim()); }

std::optional<int> PartitionType::second_dim() const {
  if (multiplicity.size() < 2) return std::nullopt;
  return std::next(multiplicity.rbegin())->first;
}

std::string PartitionType::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [dim, m] : multiplicity) {
    if (!first) out << ' ';
    out << dim << '^' << m;
    first = false;
  }
  return out.str();
}

PartitionType partition_type(const SubspaceCode& C, bool count_holes_as_points) {
  const Coverage cov = cover_points(C);
  require_spread(cov);
  PartitionType type;
  type.add(C.dim(), C.size());
  if (count_holes_as_points) type.add(1, point_count(C.field().q(), C.ambient_dim()) - BigInt(cov.owner.size()));
  return type;
}

HyperplaneSpectrum hyperplane_spectrum(const SubspaceCode& C) {
  const std::vector<Point> holes = compute_holes(C);
  const FieldCtx& F = C.field();
  const int k = C.dim();

  HyperplaneSpectrum spectrum;
  for (auto& h : hyperplane_normals(C.field_ptr(), C.ambient_dim()))
    spectrum.records.push_back(HyperplaneRecord{std::move(h), 0, 0, 0});

  parallel_chunks(spectrum.records.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto& rec = spectrum.records[r];
      for (const auto& U : C.codewords()) {
        if (lies_in_hyperplane(U, rec.normal))
          ++rec.contained;
        else
          ++rec.cut;
      }
      for (const auto& pt : holes)
        if (dot(F, pt.coords, rec.normal) == 0) ++rec.holes;
    }
  });

  for (const auto& rec : spectrum.records) {
    PartitionType type;
    type.add(k, rec.contained);
    if (k - 1 >= 1) type.add(k - 1, rec.cut);
    type.add(1, rec.holes);
    ++spectrum.counts[type];
  }
  return spectrum;
}

std::vector<IncidenceIdentity> incidence_identities(const SubspaceCode& C, const HyperplaneSpectrum& spectrum) {
  const std::int64_t q = C.field().q();
  const int n = C.ambient_dim();
  const int k = C.dim();
  const BigInt size = C.size();
  const BigInt holes = point_count(q, n) - size * point_count(q, k);

  BigInt hyperplanes = 0, flags = 0, hole_flags = 0, pair_flags = 0;
  for (const auto& rec : spectrum.records) {
    hyperplanes += 1;
    flags += rec.contained;
    hole_flags += rec.holes;
    pair_flags += choose2(BigInt(rec.contained));
  }
  return {
      {"hyperplanes", hyperplanes, point_count(q, n)},
      {"codeword-hyperplane flags", flags, size * point_count(q, n - k)},
      {"hole-hyperplane flags", hole_flags, holes * point_count(q, n - 1)},
      {"codeword-pair-hyperplane flags", pair_flags, choose2(size) * point_count(q, n - 2 * k)},
  };
}

TailVerdict tail_admissible(std::int64_t q, int d1, int d2, const BigInt& n1) {
  if (q < 2 || d1 < 1 || d2 <= d1 || n1 < 1)
    throw Error(Errc::ParameterError, "tail_admissible requires q >= 2, 1 <= d1 < d2, n1 >= 1");
  const BigInt step = ipow(q, d2 - d1);
  const bool divides = n1 % step == 0;
  const bool wide = d2 >= 2 * d1;
  TailVerdict v;
  if (!divides && !wide) {
    v.clause = 1;
    const BigInt need = ipow(q, d1) + 1;
    v.admissible = n1 >= need;
    v.requirement = "n1 >= " + need.str();
  } else if (!divides && wide) {
    v.clause = 2;
    const bool exact_divisible = d2 % d1 == 0;
    const BigInt special = (ipow(q, d2) - 1) / (ipow(q, d1) - 1);
    const BigInt above = 2 * step;
    v.admissible = (exact_divisible && n1 == special) || n1 > above;
    v.requirement = (exact_divisible ? "n1 = " + special.str() + " or " : std::string()) + "n1 > " + above.str();
  } else if (divides && !wide) {
    v.clause = 3;
    const BigInt need = ipow(q, d2) - ipow(q, d1) + step;
    v.admissible = n1 >= need;
    v.requirement = "n1 >= " + need.str();
  } else {
    v.clause = 4;
    const BigInt need = ipow(q, d2);
    v.admissible = n1 >= need;
    v.requirement = "n1 >= " + need.str();
  }
  return v;
}

ContradictionCertificate forbidden_partition_check(std::int64_t q, int k, int t, ForbiddenVariant variant) {
  if (t < 1 || k < 4) throw Error(Errc::ParameterError, "forbidden_partition_check requires t >= 1 and k >= 4");
  if (variant == ForbiddenVariant::Binary && q != 2)
    throw Error(Errc::ParameterError, "the binary variant requires q = 2");
  if (variant == ForbiddenVariant::OddQ && (q < 3 || q % 2 == 0 || !is_prime_power(q)))
    throw Error(Errc::ParameterError, "the odd variant requires an odd prime power q");

  ContradictionCertificate cert;
  cert.variant = variant;
  cert.q = q;
  cert.k = k;
  cert.t = t;
  const int K = k * (t + 1);  // dimension of a hyperplane of the ambient space
  cert.ambient_dim = K + 1;

  const BigInt qk = ipow(q, k);
  BigInt top, next;
  if (variant == ForbiddenVariant::Binary) {
    top = (ipow(2, k * t + 2) + ipow(2, k) - 5) / (qk - 1);
    next = ipow(2, k * t + 2) - 3;
    cert.available_holes = 1 + ipow(2, k - 1);
    cert.expected_residue = 1;
  } else {
    const BigInt half = (q + 1) / 2;
    const BigInt p = (ipow(q, k * t + 2) - q * q) / (qk - 1) + half;
    const BigInt m = (ipow(q, K + 2) - q * q) / (qk - 1) - (q * q - 1) / 2;
    top = p - 1;
    next = m - p + 1;
    cert.available_holes = half + ipow(q, k - 1);
    cert.expected_residue = half;
  }
  cert.forbidden_type.add(k, top);
  cert.forbidden_type.add(k - 1, next);
  cert.forbidden_type.add(1, cert.available_holes);
  cert.type_fills_space = cert.forbidden_type.point_total(q) == point_count(q, K + 1);
  cert.non_hole_members = top + next;

  // In P_H every non-hole has dimension k, k-1 or k-2, and each such member
  // has 1 + q + ... + q^{d-1} ≡ [k-2]_q points modulo q^{k-2}.
  cert.residue_modulus = ipow(q, k - 2);
  const BigInt per_member = point_count(q, k - 2) % cert.residue_modulus;
  BigInt residue = (point_count(q, K) - cert.non_hole_members * per_member) % cert.residue_modulus;
  if (residue < 0) residue += cert.residue_modulus;
  cert.hole_residue = residue;

  for (BigInt L = residue; L <= cert.available_holes; L += cert.residue_modulus) cert.feasible_hole_counts.push_back(L);

  std::vector<BigInt> remaining;
  for (const auto& L : cert.feasible_hole_counts) {
    bool excluded = L >= 1;
    for (int d2 = k - 2; d2 <= k && excluded && L >= 1; ++d2)
      if (tail_admissible(q, 1, d2, L).admissible) excluded = false;
    if (excluded)
      cert.tail_excluded.push_back(L);
    else
      remaining.push_back(L);
  }
  if (remaining.empty()) {
    cert.certified = residue == cert.expected_residue && cert.type_fills_space;
    return cert;
  }
  cert.min_hole_count = *std::min_element(remaining.begin(), remaining.end());

  cert.hyperplanes = point_count(q, K + 1);
  cert.hyperplanes_per_hole = point_count(q, K);
  cert.total_holes_lower_bound = Rational(cert.min_hole_count * cert.hyperplanes, cert.hyperplanes_per_hole);
  cert.intermediate_bound = variant == ForbiddenVariant::Binary ? 2 * cert.min_hole_count
                                                                       : cert.min_hole_count * q;

  cert.certified = cert.type_fills_space && residue == cert.expected_residue &&
                   cert.total_holes_lower_bound >= Rational(cert.intermediate_bound) &&
                   cert.intermediate_bound > cert.available_holes &&
                   cert.total_holes_lower_bound > Rational(cert.available_holes);
  return cert;
}

std::vector<HyperplaneProfile> hyperplane_profiles(std::int64_t q, int n, int k, const BigInt& code_size) {
  if (k < 1 || n < 2 * k) throw Error(Errc::ParameterError, "hyperplane_profiles requires n >= 2k");
  const BigInt holes = point_count(q, n) - code_size * point_count(q, k);
  if (holes < 0) throw Error(Errc::ParameterError, "code size exceeds the counting bound");
  std::vector<HyperplaneProfile> profiles;
  for (BigInt i = 0; i <= code_size; ++i) {
    const BigInt L = point_count(q, n - 1) - i * point_count(q, k) - (code_size - i) * point_count(q, k - 1);
    if (L < 0 || L > holes) continue;
    if (L > 0 && k - 1 > 1) {
      const int d2 = code_size - i > 0 ? k - 1 : k;
      if (!tail_admissible(q, 1, d2, L).admissible) continue;
    }
    profiles.push_back({static_cast<int>(i), L});
  }
  return profiles;
}

namespace {

// Integer solutions of a = particular + sum f_j directions[j] with a >= 0.
void enumerate_solutions(const StandardEquationsResult& sys, const BigInt& bound, std::size_t depth,
                         std::vector<BigInt>& free_values, std::vector<std::vector<BigInt>>& out) {
  const std::size_t unknowns = sys.particular.size();
  if (depth == sys.free_indices.size()) {
    std::vector<BigInt> a(unknowns);
    for (std::size_t i = 0; i < unknowns; ++i) {
      Rational value = sys.particular[i];
      for (std::size_t j = 0; j < free_values.size(); ++j) value += sys.directions[j][i] * Rational(free_values[j]);
      if (value < 0 || boost::multiprecision::denominator(value) != 1) return;
      a[i] = boost::multiprecision::numerator(value);
    }
    out.push_back(std::move(a));
    return;
  }
  BigInt lo = 0, hi = bound;
  if (sys.free_indices.size() == 1 && sys.free_range) std::tie(lo, hi) = *sys.free_range;
  for (BigInt f = lo; f <= hi; ++f) {
    free_values.push_back(f);
    enumerate_solutions(sys, bound, depth + 1, free_values, out);
    free_values.pop_back();
  }
}

}  // namespace

StandardEquationsResult solve_standard_equations(int n, int k, std::int64_t q, const BigInt& code_size,
                                                 const std::vector<HyperplaneProfile>& profiles,
                                                 const std::optional<SpanConstraint>& span_constraint) {
  if (profiles.empty()) throw Error(Errc::ParameterError, "no hyperplane profiles given");
  if (code_size < 1) throw Error(Errc::ParameterError, "code size must be >= 1");

  StandardEquationsResult res;
  res.profiles = profiles;
  res.rhs = {point_count(q, n), code_size * point_count(q, n - k), choose2(code_size) * point_count(q, n - 2 * k)};
  res.span_constraint_validated = q == 2;

  const std::size_t u = profiles.size();
  std::vector<std::vector<Rational>> aug(3, std::vector<Rational>(u + 1));
  for (std::size_t j = 0; j < u; ++j) {
    const BigInt i = profiles[j].contained;
    aug[0][j] = 1;
    aug[1][j] = Rational(i);
    aug[2][j] = Rational(choose2(i));
  }
  for (std::size_t r = 0; r < 3; ++r) aug[r][u] = Rational(res.rhs[r]);

  // Gauss-Jordan over the rationals.
  std::vector<int> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < u && row < 3; ++col) {
    std::size_t piv = row;
    while (piv < 3 && aug[piv][col] == 0) ++piv;
    if (piv == 3) continue;
    std::swap(aug[piv], aug[row]);
    const Rational scale = aug[row][col];
    for (auto& x : aug[row]) x /= scale;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = 0; c <= u; ++c) aug[r][c] -= factor * aug[row][c];
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t r = row; r < 3; ++r)
    if (aug[r][u] != 0) throw Error(Errc::InconsistentSystem, "standard equations have no solution");

  std::vector<bool> is_pivot(u, false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t j = 0; j < u; ++j)
    if (!is_pivot[j]) res.free_indices.push_back(static_cast<int>(j));

  res.particular.assign(u, Rational(0));
  res.directions.assign(res.free_indices.size(), std::vector<Rational>(u, Rational(0)));
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    const auto pc = static_cast<std::size_t>(pivot_cols[r]);
    res.particular[pc] = aug[r][u];
    for (std::size_t f = 0; f < res.free_indices.size(); ++f)
      res.directions[f][pc] = -aug[r][static_cast<std::size_t>(res.free_indices[f])];
  }
  for (std::size_t f = 0; f < res.free_indices.size(); ++f)
    res.directions[f][static_cast<std::size_t>(res.free_indices[f])] = 1;

  const BigInt bound = res.rhs[0];
  if (res.free_indices.size() == 1) {
    // Nonnegativity of each coordinate bounds the free variable.
    Rational lo = 0, hi = Rational(bound);
    for (std::size_t i = 0; i < u; ++i) {
      const Rational& a0 = res.particular[i];
      const Rational& d = res.directions[0][i];
      if (d > 0) lo = std::max(lo, -a0 / d);
      if (d < 0) hi = std::min(hi, -a0 / d);
    }
    const BigInt lo_int = -floor_div(-boost::multiprecision::numerator(lo), boost::multiprecision::denominator(lo));
    const BigInt hi_int = floor_div(boost::multiprecision::numerator(hi), boost::multiprecision::denominator(hi));
    res.free_range = std::make_pair(lo_int, hi_int);
  } else if (res.free_indices.size() > 2) {
    res.enumerated = false;
    return res;
  }

  std::vector<BigInt> free_values;
  enumerate_solutions(res, bound, 0, free_values, res.nonnegative_solutions);
  if (res.nonnegative_solutions.empty())
    throw Error(Errc::InconsistentSystem, "no nonnegative integer solution of the standard equations");

  std::sort(res.nonnegative_solutions.begin(), res.nonnegative_solutions.end());
  res.spectra = res.nonnegative_solutions;
  if (span_constraint && span_constraint->total_holes > 0) {
    for (std::size_t j = 0; j < u; ++j)
      if (profiles[j].holes == span_constraint->total_holes) res.span_profile = static_cast<int>(j);
    if (res.span_profile) {
      // Smallest dimension that can hold that many points.
      int min_dim = 0;
      while (point_count(q, min_dim) < span_constraint->total_holes) ++min_dim;
      std::vector<BigInt> allowed;
      for (int j = 0; j <= n - min_dim; ++j) allowed.push_back(point_count(q, j));
      res.span_allowed_counts = allowed;
      std::vector<std::vector<BigInt>> kept;
      for (auto& a : res.spectra)
        if (std::find(allowed.begin(), allowed.end(), a[static_cast<std::size_t>(*res.span_profile)]) != allowed.end())
          kept.push_back(std::move(a));
      res.spectra = std::move(kept);
      if (res.spectra.empty()) throw Error(Errc::InconsistentSystem, "no spectrum satisfies the span constraint");
    }
  }
  return res;
}

}  // namespace spreadkit
