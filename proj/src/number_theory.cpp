#include "zdg/number_theory.hpp"

#include <algorithm>
#include <limits>

namespace zdg::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, k] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto& pk : factorize(n)) {
    if (pk.exponent > 1) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

}  // namespace zdg::nt
