#include "grouptrix/arith.hpp"

#include <algorithm>
#include <numeric>

#include "grouptrix/errors.hpp"

namespace grouptrix::arith {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite odd n.
u64 rho(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set deterministic for all n < 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 am = a % n;
    if (am == 0) continue;
    if (miller_rabin_witness(n, am, d, s)) return false;
  }
  return true;
}

std::vector<u64> factor(u64 n) {
  if (n == 0) throw SpecError("factor: n must be positive");
  std::vector<u64> out;
  for (u64 p = 2; p <= 10000 && p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<u64, int>> factor_exponents(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 p : factor(n)) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto& [p, e] : factor_exponents(n)) out.push_back(p);
  return out;
}

FactorClass factor_classify(u64 n) {
  FactorClass fc;
  fc.value = n;
  fc.factorization = factor(n);
  auto fe = factor_exponents(n);
  if (fe.empty())
    fc.kind = FactorKind::Unit;
  else if (fe.size() == 1)
    fc.kind = FactorKind::PrimePower;
  else if (fe.size() == 2 && fe[0].second == 1 && fe[1].second == 1)
    fc.kind = FactorKind::TwoDistinctPrimes;
  else
    fc.kind = FactorKind::Other;
  return fc;
}

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Unit: return "UNIT";
    case FactorKind::PrimePower: return "PRIME_POWER";
    case FactorKind::TwoDistinctPrimes: return "TWO_DISTINCT_PRIMES";
    case FactorKind::Other: return "OTHER";
  }
  return "?";
}

std::pair<u64, int> prime_power(u64 n) {
  if (n < 2) return {0, 0};
  auto fe = factor_exponents(n);
  if (fe.size() != 1) return {0, 0};
  return fe[0];
}

bool cograph_admissible(u64 n) { return factor_classify(n).kind != FactorKind::Other; }

bool psl2_condition_raw(u64 q) {
  if (q % 2 == 0) return cograph_admissible(q - 1) && cograph_admissible(q + 1);
  return cograph_admissible((q - 1) / 2) && cograph_admissible((q + 1) / 2);
}

bool psl2_cograph_condition(u64 q) {
  if (q < 4) throw SpecError("psl2_cograph_condition: q must be >= 4");
  if (prime_power(q).first == 0)
    throw SpecError("psl2_cograph_condition: " + std::to_string(q) + " is not a prime power");
  return psl2_condition_raw(q);
}

std::vector<u64> enumerate_even_d(u64 max_d) {
  if (max_d > 63) throw SizeGuardError("enumerate_even_d: d is limited to 63 (64-bit arithmetic)");
  std::vector<u64> out;
  for (u64 d = 1; d <= max_d; ++d)
    if (psl2_condition_raw(u64{1} << d)) out.push_back(d);
  return out;
}

std::vector<u64> enumerate_odd_q(u64 max_q) {
  if (max_q > 1000000) throw SizeGuardError("enumerate_odd_q: bound is limited to 10^6");
  std::vector<u64> out;
  for (u64 q = 3; q <= max_q; q += 2) {
    auto [p, k] = prime_power(q);
    if (p != 0 && psl2_condition_raw(q)) out.push_back(q);
  }
  return out;
}

u64 euler_phi(u64 m) {
  if (m == 0) throw SpecError("euler_phi: m must be positive");
  u64 r = m;
  for (auto& [p, e] : factor_exponents(m)) r = r / p * (p - 1);
  return r;
}

u64 lcm_upto(u64 m) {
  if (m == 0) throw SpecError("lcm_upto: m must be positive");
  u128 acc = 1;
  for (u64 i = 2; i <= m; ++i) {
    u128 g = std::gcd(static_cast<u64>(acc), i);
    acc = acc / g * i;
    if (acc > static_cast<u128>(~u64{0}))
      throw SizeGuardError("lcm(1.." + std::to_string(m) + ") does not fit in 64 bits");
  }
  return static_cast<u64>(acc);
}

std::pair<u64, u64> phi_and_lcm(u64 m) { return {euler_phi(m), lcm_upto(m)}; }

u64 PrimeSupply::next() {
  while (true) {
    u64 p = next_++;
    if (!is_prime(p)) continue;
    bool clash = std::any_of(avoid_.begin(), avoid_.end(), [&](u64 v) { return v % p == 0; });
    if (clash) continue;
    avoid_.push_back(p);
    return p;
  }
}

}  // namespace grouptrix::arith
