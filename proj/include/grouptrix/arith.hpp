#pragma once

// Deterministic 64-bit number theory: primality, factoring, the PSL(2,q)
// power-graph cograph condition, Euler phi and lcm(1..m).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grouptrix::arith {

using u64 = std::uint64_t;

bool is_prime(u64 n);

/// Prime factorization with multiplicity, ascending.
std::vector<u64> factor(u64 n);

/// Distinct primes with exponents, ascending.
std::vector<std::pair<u64, int>> factor_exponents(u64 n);

std::vector<u64> prime_divisors(u64 n);

enum class FactorKind { Unit, PrimePower, TwoDistinctPrimes, Other };

struct FactorClass {
  u64 value = 1;
  std::vector<u64> factorization;
  FactorKind kind = FactorKind::Unit;
};

FactorClass factor_classify(u64 n);
std::string to_string(FactorKind k);

/// If n = p^k with p prime and k >= 1 returns {p, k}, else {0, 0}.
std::pair<u64, int> prime_power(u64 n);

/// True when n is 1, a prime power, or a product of two distinct primes.
bool cograph_admissible(u64 n);

/// Whether Pow(PSL(2,q)) is a cograph, per the parity-dependent factor condition.
/// Requires q >= 4 a prime power; throws SpecError otherwise.
bool psl2_cograph_condition(u64 q);

/// The factor condition without the q >= 4 restriction (used by the list enumerators).
bool psl2_condition_raw(u64 q);

/// Exponents d (1 <= d <= max_d <= 63) for which q = 2^d satisfies the condition.
std::vector<u64> enumerate_even_d(u64 max_d);

/// Odd prime powers q <= max_q (max_q <= 10^6) satisfying the condition.
std::vector<u64> enumerate_odd_q(u64 max_q);

u64 euler_phi(u64 m);

/// lcm(1..m); throws SizeGuardError when the value does not fit in 64 bits.
u64 lcm_upto(u64 m);

std::pair<u64, u64> phi_and_lcm(u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

/// Primes p >= from in ascending order, skipping any that divide a value in `avoid`.
class PrimeSupply {
 public:
  explicit PrimeSupply(u64 from = 3) : next_(from) {}
  u64 next();
  void avoid(u64 value) { avoid_.push_back(value); }

 private:
  u64 next_;
  std::vector<u64> avoid_;
};

}  // namespace grouptrix::arith
