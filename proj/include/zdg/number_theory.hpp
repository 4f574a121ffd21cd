#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Integer helpers over 64-bit values. Everything here is trial division; the
// inputs that reach it are divisors of ring orders, so that is plenty.
namespace zdg::nt {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

bool is_prime(std::uint64_t n);

// Prime factorisation in ascending prime order. n = 1 gives an empty list.
std::vector<PrimePower> factorize(std::uint64_t n);

std::optional<PrimePower> as_prime_power(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);

// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

// Returns nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

// (a * b) mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// True iff n divides a * b (no overflow).
inline bool divides_product(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  return static_cast<unsigned __int128>(a) * b % n == 0;
}

}  // namespace zdg::nt
