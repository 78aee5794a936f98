#pragma once

// Finite fields GF(p^e) with table-driven arithmetic.
//
// Elements are encoded as integers in [0, q) whose base-p digits are the
// coefficients of the residue polynomial, lowest degree first. For e = 1
// the encoding is the residue itself.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace spreadkit {

using Element = std::uint32_t;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 1u << 16;

/// GF(p^e) with the lexicographically smallest monic irreducible modulus
/// (coefficients compared from the highest degree down).
FieldPtr make_field(std::int64_t p, int e, std::uint32_t max_order = kDefaultMaxFieldOrder);

/// GF(q) for a prime power q.
FieldPtr make_field_of_order(std::int64_t q, std::uint32_t max_order = kDefaultMaxFieldOrder);

class FieldCtx {
 public:
  std::uint32_t p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus over GF(p), lowest degree first (length e + 1).
  const std::vector<Element>& modulus() const noexcept { return modulus_; }

  bool contains(Element a) const noexcept { return a < q_; }

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws Error(DivisionByZero) for a = 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t exponent) const noexcept;

  /// Coordinates with respect to (1, x, ..., x^{e-1}).
  std::vector<Element> expand_to_base(Element a) const;
  Element from_base(std::span<const Element> coords) const;

  /// The class x of the polynomial basis (equals p for e > 1).
  Element generator_x() const noexcept { return e_ == 1 ? 0 : p_; }

  bool operator==(const FieldCtx& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  friend FieldPtr make_field(std::int64_t, int, std::uint32_t);
  FieldCtx() = default;

  std::uint32_t p_ = 0;
  int e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<Element> modulus_;
  // exp_ has length 2(q-1) so that log sums index it without reduction.
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> neg_;
};

// Polynomials over a FieldCtx, coefficient vectors lowest degree first.

/// True when the monic polynomial has no monic factor of degree in [1, deg/2].
bool is_irreducible(const FieldCtx& base, std::span<const Element> monic_poly);

/// Lexicographically smallest monic irreducible of the given degree over base.
std::vector<Element> smallest_irreducible(const FieldCtx& base, int degree);

}  // namespace spreadkit
