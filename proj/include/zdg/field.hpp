#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zdg {

// Arithmetic in GF(p^k). An element is labelled by the integer
// sum_i c_i p^i of its coefficient vector (c_0 = constant term), so the
// labels 0..q-1 enumerate the field and label 1 is the multiplicative unit.
//
// The defining modulus is the lexicographically smallest monic irreducible of
// degree k, comparing coefficients from the constant term upwards.
class FieldTable {
 public:
  // Multiplication/inverse tables are built when q is at most this.
  static constexpr std::uint64_t kTableThreshold = 256;
  // Field orders above this are rejected; labels must fit in 32 bits.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  FieldTable(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }

  // Modulus coefficients, constant term first, leading 1 included.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  // Throws InvalidArgument for a = 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  std::vector<std::uint64_t> coefficients(std::uint64_t a) const;
  std::uint64_t from_coefficients(std::span<const std::uint64_t> c) const;

  // "0", "2", "x^2+2x+1", ...
  std::string label(std::uint64_t a) const;

 private:
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> inv_table_;
};

// Smallest monic irreducible polynomial of degree k over F_p in the order
// described above. Coefficients constant term first.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k);

// True iff the monic polynomial f (constant term first) has no monic factor
// of degree 1..deg/2.
bool is_irreducible(std::span<const std::uint64_t> f, std::uint64_t p);

}  // namespace zdg
