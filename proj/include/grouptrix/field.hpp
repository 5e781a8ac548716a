#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grouptrix {

/// GF(p^k) with elements encoded as integers 0..q-1: the base-p digits of an
/// element are its polynomial coefficients (constant term first). Operations
/// go through precomputed q x q tables, so this is meant for small q.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Uses the lexicographically smallest monic irreducible modulus of degree k.
  FiniteField(std::uint32_t p, std::uint32_t k);

  /// Builds GF(q) for a prime power q.
  static FiniteField of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Modulus coefficients, constant term first, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }
  Element neg(Element a) const { return neg_[a]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  /// Multiplicative inverse; a must be nonzero.
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, std::uint64_t e) const;

  /// A generator of the multiplicative group.
  Element primitive() const { return primitive_; }

  std::string describe(Element a) const;

 private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Element> add_, mul_, neg_, inv_;
  Element primitive_ = 1;
};

}  // namespace grouptrix
