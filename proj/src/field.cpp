#include "grouptrix/field.hpp"

#include <sstream>

#include "grouptrix/arith.hpp"
#include "grouptrix/errors.hpp"

namespace grouptrix {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

Poly digits(std::uint64_t x, std::uint32_t p, std::uint32_t k) {
  Poly d(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = static_cast<std::uint32_t>(x % p);
    x /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * b[i]) % p);
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (auto x : r) zero &= (x == 0);
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!arith::is_prime(p) || k < 1 || k > 12) throw SpecError("FiniteField: need prime p and 1 <= k <= 12");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > 4096) throw SizeGuardError("FiniteField: order above 4096 is not supported");
  q_ = static_cast<std::uint32_t>(q);

  // Lower coefficients are scanned in increasing base-p encoding (constant term least significant).
  bool found = false;
  for (std::uint64_t c = 0; c < q && !found; ++c) {
    Poly f = digits(c, p, k);
    f.push_back(1);
    if (k == 1 || is_irreducible(f, p)) {
      modulus_ = f;
      found = true;
    }
  }
  if (!found) throw Error("FiniteField: no irreducible modulus found");

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  std::vector<Poly> el(q);
  for (std::uint32_t a = 0; a < q_; ++a) el[a] = digits(a, p, k);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(k);
    for (std::uint32_t i = 0; i < k; ++i) n[i] = (p - el[a][i]) % p;
    neg_[a] = encode(n, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(k);
      for (std::uint32_t i = 0; i < k; ++i) s[i] = (el[a][i] + el[b][i]) % p;
      add_[a * q_ + b] = encode(s, p);
      Poly prod(2 * k - 1, 0);
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{el[a][i]} * el[b][j]) % p);
      Poly r = poly_mod(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = encode(r, p);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }

  // Smallest element of multiplicative order q-1.
  auto primes = arith::prime_divisors(q_ - 1);
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto r : primes)
      if (pow(g, (q_ - 1) / r) == 1) ok = false;
    if (ok) {
      primitive_ = g;
      break;
    }
  }
}

FiniteField FiniteField::of_order(std::uint64_t q) {
  auto [p, k] = arith::prime_power(q);
  if (p == 0) throw SpecError("FiniteField: " + std::to_string(q) + " is not a prime power");
  return FiniteField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::describe(Element a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  Poly d = digits(a, p_, k_);
  for (std::uint32_t i = 0; i < k_; ++i) os << (i ? " " : "") << d[i];
  os << ']';
  return os.str();
}

}  // namespace grouptrix
