#include "spreadkit/field.hpp"

#include "spreadkit/error.hpp"
#include "spreadkit/integer.hpp"

#include <string>

namespace spreadkit {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroSpace: return "ZeroSpace";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::MixedDimensions: return "MixedDimensions";
    case Errc::NotASpread: return "NotASpread";
    case Errc::ParameterError: return "ParameterError";
    case Errc::SkeletonDistanceError: return "SkeletonDistanceError";
    case Errc::ShapeError: return "ShapeError";
    case Errc::InconsistentSystem: return "InconsistentSystem";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

std::pair<std::int64_t, int> prime_power_decomposition(std::int64_t q) {
  if (q < 2) return {0, 0};
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int e = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return {0, 0};
  return {p, e};
}

namespace {

using Poly = std::vector<Element>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g.
Poly poly_rem(const FieldCtx& F, Poly f, const Poly& g) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const Element lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = F.sub(f[shift + i], F.mul(lead, g[i]));
    trim(f);
  }
  return f;
}

// Digits of an encoded GF(p^e) element.
Poly decode(Element a, std::uint32_t p, int e) {
  Poly digits(static_cast<std::size_t>(e), 0);
  for (int i = 0; i < e; ++i) {
    digits[static_cast<std::size_t>(i)] = a % p;
    a /= p;
  }
  return digits;
}

Element encode(const Poly& digits, std::uint32_t p) {
  Element value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
  return value;
}

// Multiplication in GF(p)[x]/(modulus) without tables; used to build them.
Element slow_mul(Element a, Element b, std::uint32_t p, const Poly& modulus) {
  const int e = static_cast<int>(modulus.size()) - 1;
  const Poly da = decode(a, p, e);
  const Poly db = decode(b, p, e);
  std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * e - 1), 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[static_cast<std::size_t>(i + j)] += std::uint64_t{da[i]} * db[j];
  for (auto& c : prod) c %= p;
  for (int deg = 2 * e - 2; deg >= e; --deg) {
    const std::uint64_t lead = prod[static_cast<std::size_t>(deg)];
    if (lead == 0) continue;
    for (int i = 0; i <= e; ++i) {
      auto& slot = prod[static_cast<std::size_t>(deg - e + i)];
      slot = (slot + (p - lead) * modulus[static_cast<std::size_t>(i)]) % p;
    }
  }
  Poly low(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) low[static_cast<std::size_t>(i)] = static_cast<Element>(prod[static_cast<std::size_t>(i)]);
  return encode(low, p);
}

}  // namespace

FieldPtr make_field(std::int64_t p, int e, std::uint32_t max_order) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(Errc::DegreeOutOfRange, "extension degree must be >= 1");
  std::uint64_t order = 1;
  for (int i = 0; i < e; ++i) {
    order *= static_cast<std::uint64_t>(p);
    if (order > max_order)
      throw Error(Errc::DegreeOutOfRange, "field order exceeds limit " + std::to_string(max_order));
  }

  std::shared_ptr<FieldCtx> F(new FieldCtx());
  F->p_ = static_cast<std::uint32_t>(p);
  F->e_ = e;
  F->q_ = static_cast<std::uint32_t>(order);
  if (e == 1) {
    F->modulus_ = {0, 1};
  } else {
    F->modulus_ = smallest_irreducible(*make_field(p, 1, max_order), e);
  }

  const std::uint32_t q = F->q_;
  F->neg_.resize(q);
  for (Element a = 0; a < q; ++a) {
    Poly digits = decode(a, F->p_, e);
    for (auto& d : digits) d = (F->p_ - d) % F->p_;
    F->neg_[a] = encode(digits, F->p_);
  }

  F->exp_.assign(2 * static_cast<std::size_t>(q - 1), 0);
  F->log_.assign(q, 0);
  if (q == 2) {
    F->exp_ = {1, 1};
    return F;
  }
  for (Element g = 2; g < q; ++g) {
    Element x = 1;
    std::uint32_t steps = 0;
    do {
      F->exp_[steps] = x;
      x = slow_mul(x, g, F->p_, F->modulus_);
      ++steps;
    } while (x != 1 && steps < q - 1);
    if (x == 1 && steps == q - 1) {
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        F->log_[F->exp_[i]] = i;
        F->exp_[i + q - 1] = F->exp_[i];
      }
      return F;
    }
  }
  throw std::logic_error("no primitive element found");
}

FieldPtr make_field_of_order(std::int64_t q, std::uint32_t max_order) {
  const auto [p, e] = prime_power_decomposition(q);
  if (p == 0) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(p, e, max_order);
}

Element FieldCtx::add(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % p_;
  Element result = 0;
  Element scale = 1;
  for (int i = 0; i < e_; ++i) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Element FieldCtx::neg(Element a) const noexcept { return neg_[a]; }

Element FieldCtx::sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }

Element FieldCtx::inv(Element a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Element FieldCtx::pow(Element a, std::uint64_t exponent) const noexcept {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (exponent % (q_ - 1))) % (q_ - 1)];
}

std::vector<Element> FieldCtx::expand_to_base(Element a) const { return decode(a, p_, e_); }

Element FieldCtx::from_base(std::span<const Element> coords) const {
  Element value = 0;
  for (std::size_t i = coords.size(); i-- > 0;) value = value * p_ + coords[i];
  return value;
}

bool is_irreducible(const FieldCtx& base, std::span<const Element> monic_poly) {
  const int degree = static_cast<int>(monic_poly.size()) - 1;
  if (degree < 1) return false;
  const Poly f(monic_poly.begin(), monic_poly.end());
  const std::uint32_t qb = base.q();
  for (int d = 1; 2 * d <= degree; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= qb;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t rest = c;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<Element>(rest % qb);
        rest /= qb;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_rem(base, f, g).empty()) return false;
    }
  }
  return true;
}

std::vector<Element> smallest_irreducible(const FieldCtx& base, int degree) {
  if (degree < 1) throw Error(Errc::DegreeOutOfRange, "degree must be >= 1");
  const std::uint32_t qb = base.q();
  for (std::uint64_t c = 0;; ++c) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t rest = c;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<Element>(rest % qb);
      rest /= qb;
    }
    if (rest != 0) break;
    f[static_cast<std::size_t>(degree)] = 1;
    if (is_irreducible(base, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace spreadkit
