#include <numeric>

#include "doctest.h"
#include "zdg/number_theory.hpp"

using namespace zdg;

TEST_CASE("euler_phi agrees with counting coprime residues") {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= n; ++a) count += std::gcd(a, n) == 1 ? 1 : 0;
    CHECK(nt::euler_phi(n) == count);
  }
}

TEST_CASE("divisors are ascending and complete") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::vector<std::uint64_t> expect;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) expect.push_back(d);
    CHECK(nt::divisors(n) == expect);
  }
}

TEST_CASE("factorize reconstructs n with prime bases") {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    std::uint64_t prod = 1;
    for (auto [p, k] : nt::factorize(n)) {
      CHECK(nt::is_prime(p));
      for (unsigned i = 0; i < k; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  CHECK(nt::factorize(1).empty());
}

TEST_CASE("prime powers and squarefree detection") {
  CHECK(nt::as_prime_power(8)->prime == 2);
  CHECK(nt::as_prime_power(8)->exponent == 3);
  CHECK(nt::as_prime_power(9)->exponent == 2);
  CHECK_FALSE(nt::as_prime_power(6));
  CHECK_FALSE(nt::as_prime_power(1));
  CHECK(nt::is_squarefree(30));
  CHECK_FALSE(nt::is_squarefree(18));
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK(nt::checked_pow(2, 63).value() == (std::uint64_t{1} << 63));
  CHECK_FALSE(nt::checked_pow(2, 64));
  CHECK_FALSE(nt::checked_mul(std::uint64_t{1} << 40, std::uint64_t{1} << 30));
  CHECK(nt::divides_product(18, 3, 6));
  CHECK_FALSE(nt::divides_product(18, 2, 3));
}
