#include <doctest.h>

#include <numeric>

#include "grouptrix/arith.hpp"
#include "grouptrix/errors.hpp"
#include "oracles.hpp"

using namespace grouptrix;
using namespace grouptrix::arith;

namespace {

FactorKind classify_by_trial(std::uint64_t n) {
  if (n == 1) return FactorKind::Unit;
  auto f = oracle::trial_factor(n);
  if (f.front() == f.back()) return FactorKind::PrimePower;
  if (f.size() == 2) return FactorKind::TwoDistinctPrimes;
  return FactorKind::Other;
}

}  // namespace

TEST_CASE("factor_classify examples") {
  auto twelve = factor_classify(12);
  CHECK(twelve.factorization == std::vector<u64>{2, 2, 3});
  CHECK(twelve.kind == FactorKind::Other);
  auto nine = factor_classify(9);
  CHECK(nine.factorization == std::vector<u64>{3, 3});
  CHECK(nine.kind == FactorKind::PrimePower);
  const u64 mersenne = (u64{1} << 61) - 1;
  CHECK(is_prime(mersenne));
  CHECK(factor_classify(mersenne).kind == FactorKind::PrimePower);
  CHECK(factor_classify(1).kind == FactorKind::Unit);
  CHECK(factor_classify(1).factorization.empty());
}

TEST_CASE("factor_classify agrees with trial division up to 10^6") {
  for (u64 n = 1; n <= 1000000; ++n) {
    auto fc = factor_classify(n);
    const auto expect = n == 1 ? std::vector<u64>{} : oracle::trial_factor(n);
    if (fc.factorization != expect || fc.kind != classify_by_trial(n)) {
      FAIL("mismatch at n = " << n);
    }
  }
}

TEST_CASE("large semiprimes and prime powers factor completely") {
  const u64 p = 4294967291ull, q = 4294967279ull;  // largest primes below 2^32
  CHECK(factor(p * q) == std::vector<u64>{q, p});
  CHECK(factor_classify(p * q).kind == FactorKind::TwoDistinctPrimes);
  CHECK(prime_power(u64{3486784401}) == std::pair<u64, int>{3, 20});
  CHECK(prime_power(12) == std::pair<u64, int>{0, 0});
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  u64 product = 1;
  for (auto f : factor(0xFFFFFFFFFFFFFFFFull)) product *= f;
  CHECK(product == 0xFFFFFFFFFFFFFFFFull);
}

TEST_CASE("psl2 cograph condition") {
  CHECK(psl2_cograph_condition(8));
  CHECK_FALSE(psl2_cograph_condition(23));
  CHECK(psl2_cograph_condition(13));
  CHECK_FALSE(psl2_cograph_condition(25));
  CHECK_THROWS_AS(psl2_cograph_condition(6), SpecError);
  CHECK_THROWS_AS(psl2_cograph_condition(3), SpecError);
  for (u64 q : {5, 7, 9, 11, 17, 19, 27, 29}) {
    const u64 a = (q - 1) / 2, b = (q + 1) / 2;
    auto ok = [](u64 n) { return classify_by_trial(n) != FactorKind::Other; };
    CHECK(psl2_cograph_condition(q) == (ok(a) && ok(b)));
  }
}

TEST_CASE("condition lists") {
  CHECK(enumerate_even_d(63) == std::vector<u64>{1, 2, 3, 4, 5, 7, 11, 13, 17, 19, 23, 31, 61});
  CHECK(enumerate_odd_q(500) == std::vector<u64>{3,  5,  7,  9,  11,  13,  17,  19,  27,  29,
                                                 31, 43, 53, 67, 163, 173, 243, 257, 283, 317});
  CHECK(enumerate_odd_q(10) == std::vector<u64>{3, 5, 7, 9});
  CHECK_THROWS_AS(enumerate_even_d(64), SizeGuardError);
  CHECK_THROWS(enumerate_odd_q(1000001));
}

TEST_CASE("phi and lcm") {
  CHECK(phi_and_lcm(6) == std::pair<u64, u64>{2, 60});
  CHECK(euler_phi(1) == 1);
  CHECK(lcm_upto(1) == 1);
  for (u64 m = 1; m <= 200; ++m) {
    u64 count = 0;
    for (u64 k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
    CHECK(euler_phi(m) == count);
  }
  // The guard is exact overflow: every m whose lcm fits is accepted.
  unsigned __int128 l = 1;
  u64 m = 1;
  for (;; ++m) {
    const unsigned __int128 next = l / std::gcd(static_cast<u64>(l % m), m) * m;
    if (next > 0xFFFFFFFFFFFFFFFFull) break;
    l = next;
    CHECK(lcm_upto(m) == static_cast<u64>(l));
  }
  CHECK(m > 42);
  CHECK_THROWS_AS(lcm_upto(m), SizeGuardError);
}

TEST_CASE("prime supply skips primes dividing avoided values") {
  PrimeSupply s(3);
  s.avoid(15);
  CHECK(s.next() == 7);
  CHECK(s.next() == 11);
  PrimeSupply t(2);
  CHECK(t.next() == 2);
  CHECK(t.next() == 3);
}
