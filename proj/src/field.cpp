#include "zdg/field.hpp"

#include <algorithm>

#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {
namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - nt::mul_mod(lead, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

// Enumerates monic polynomials of the given degree, coefficient vectors in
// lexicographic order with the constant term most significant.
template <typename Visit>
bool for_each_monic(std::uint64_t p, unsigned degree, Visit&& visit) {
  Poly f(degree + 1, 0);
  f[degree] = 1;
  while (true) {
    if (visit(f)) return true;
    // Increment with the last free coefficient (degree-1) as least significant.
    int i = static_cast<int>(degree) - 1;
    while (i >= 0) {
      if (++f[i] < p) break;
      f[i] = 0;
      --i;
    }
    if (i < 0) return false;
  }
}

}  // namespace

bool is_irreducible(std::span<const std::uint64_t> f, std::uint64_t p) {
  Poly g(f.begin(), f.end());
  trim(g);
  if (g.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(g.size() - 1);
  for (unsigned d = 1; d <= deg / 2; ++d) {
    const bool has_factor = for_each_monic(p, d, [&](const Poly& h) {
      return poly_mod(g, h, p).empty();
    });
    if (has_factor) return false;
  }
  return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
  Poly found;
  for_each_monic(p, k, [&](const Poly& f) {
    if (is_irreducible(f, p)) {
      found = f;
      return true;
    }
    return false;
  });
  if (found.empty()) throw InvalidArgument("no irreducible polynomial found");
  return found;
}

FieldTable::FieldTable(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!nt::is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("field degree must be at least 1");
  auto q = nt::checked_pow(p, k);
  if (!q || *q > kMaxOrder) throw InvalidArgument("field order too large");
  q_ = *q;
  modulus_ = smallest_irreducible(p, k);

  if (q_ <= kTableThreshold) {
    add_table_.resize(q_ * q_);
    mul_table_.resize(q_ * q_);
    inv_table_.assign(q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a) {
      for (std::uint64_t b = 0; b < q_; ++b) {
        std::vector<std::uint64_t> ca = coefficients(a), cb = coefficients(b);
        for (unsigned i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
        add_table_[a * q_ + b] = static_cast<std::uint32_t>(from_coefficients(ca));
        mul_table_[a * q_ + b] = static_cast<std::uint32_t>(mul_slow(a, b));
      }
    }
    for (std::uint64_t a = 1; a < q_; ++a) {
      for (std::uint64_t b = 1; b < q_; ++b) {
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = static_cast<std::uint32_t>(b);
          break;
        }
      }
    }
  }
}

std::vector<std::uint64_t> FieldTable::coefficients(std::uint64_t a) const {
  std::vector<std::uint64_t> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint64_t FieldTable::from_coefficients(std::span<const std::uint64_t> c) const {
  std::uint64_t a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i] % p_;
  return a;
}

std::uint64_t FieldTable::add(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return (a + b) % p_;
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t FieldTable::neg(std::uint64_t a) const {
  if (k_ == 1) return (p_ - a) % p_;
  std::uint64_t out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

std::uint64_t FieldTable::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t FieldTable::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (k_ == 1) return nt::mul_mod(a, b, p_);
  const auto ca = coefficients(a), cb = coefficients(b);
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i + j] = (prod[i + j] + nt::mul_mod(ca[i], cb[j], p_)) % p_;
    }
  }
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  return from_coefficients(r);
}

std::uint64_t FieldTable::mul(std::uint64_t a, std::uint64_t b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

std::uint64_t FieldTable::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FieldTable::inv(std::uint64_t a) const {
  if (a == 0) throw InvalidArgument("zero has no inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::string FieldTable::label(std::uint64_t a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto c = coefficients(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace zdg
