#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdg/field.hpp"

namespace zdg {

inline constexpr std::uint64_t kDefaultElementCap = 20000;

struct ZnSpec {
  std::uint64_t n;
};

struct GaloisSpec {
  std::uint64_t p;
  unsigned k;
  std::uint64_t order() const;
};

struct MatrixSpec {
  unsigned n;
  GaloisSpec field;
};

class RingDescriptor;

struct ProductSpec {
  std::vector<RingDescriptor> factors;
};

// Which finite ring we are talking about: Z_n, GF(p^k), M_n(GF(p^k)) or a
// finite direct product of those. Products are kept flat.
class RingDescriptor {
 public:
  using Kind = std::variant<ZnSpec, GaloisSpec, MatrixSpec, ProductSpec>;

  static RingDescriptor zn(std::uint64_t n);
  static RingDescriptor galois(std::uint64_t p, unsigned k);
  // q must be a prime power.
  static RingDescriptor galois_order(std::uint64_t q);
  static RingDescriptor matrix(unsigned n, GaloisSpec field);
  static RingDescriptor product(std::vector<RingDescriptor> factors);

  const Kind& kind() const noexcept { return kind_; }
  std::uint64_t cardinality() const noexcept { return cardinality_; }

  bool is_zn() const noexcept { return std::holds_alternative<ZnSpec>(kind_); }
  bool is_galois() const noexcept { return std::holds_alternative<GaloisSpec>(kind_); }
  bool is_matrix() const noexcept { return std::holds_alternative<MatrixSpec>(kind_); }
  bool is_product() const noexcept { return std::holds_alternative<ProductSpec>(kind_); }

  bool is_commutative() const;
  // Finite product of matrix rings over fields (Z_n counts when squarefree).
  bool is_semisimple() const;

  // Canonical ring-spec string, e.g. "M(2,GF(2))xZn(3)".
  std::string to_string() const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  RingDescriptor(Kind kind, std::uint64_t cardinality);

  Kind kind_;
  std::uint64_t cardinality_;
};

// Parses `ring := Zn(int) | GF(int) | M(int, ring) | ring x ring`.
// Whitespace is ignored; products flatten left to right.
RingDescriptor parse_ring_spec(std::string_view text);

// An element of a Ring, carried as its canonical label: the index of the
// element in the lexicographic element order. Label 0 is always zero.
struct RingElement {
  std::uint64_t code = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// Structured view of an element, for reporting.
struct ElementPayload {
  enum class Tag { residue, field, matrix, tuple };
  Tag tag = Tag::residue;
  std::uint64_t residue = 0;                // residue
  std::vector<std::uint64_t> coefficients;  // field: constant term first
  unsigned order = 0;                       // matrix: n
  std::vector<std::uint64_t> entries;       // matrix: row-major field labels
  std::vector<ElementPayload> components;   // tuple
};

namespace detail {
class RingImpl;
}

// Immutable handle to a finite ring with exact element arithmetic. Cheap to
// copy; copies share the (immutable) implementation.
class Ring {
 public:
  explicit Ring(RingDescriptor descriptor);

  const RingDescriptor& descriptor() const noexcept;
  std::uint64_t cardinality() const noexcept { return descriptor().cardinality(); }
  bool is_commutative() const { return descriptor().is_commutative(); }

  RingElement zero() const noexcept { return {0}; }
  RingElement one() const;

  // Throws InvalidArgument when an operand's label is not < cardinality().
  RingElement add(RingElement a, RingElement b) const;
  RingElement sub(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement mul(RingElement a, RingElement b) const;

  bool is_unit(RingElement a) const;

  std::string label(RingElement a) const;
  ElementPayload payload(RingElement a) const;
  RingElement from_payload(const ElementPayload& payload) const;

  // Enumeration in canonical order. Throws CapExceeded when |R| > cap.
  std::vector<RingElement> elements(std::uint64_t cap = kDefaultElementCap) const;
  std::vector<RingElement> units(std::uint64_t cap = kDefaultElementCap) const;
  // Nonzero non-units; in a finite ring these are exactly the nonzero
  // zero-divisors.
  std::vector<RingElement> zero_divisors(std::uint64_t cap = kDefaultElementCap) const;

  // Product structure. A non-product ring is its own single factor.
  std::size_t factor_count() const;
  Ring factor(std::size_t i) const;
  RingElement component(RingElement a, std::size_t i) const;
  RingElement compose(std::span<const RingElement> components) const;

  // Matrix structure. GF(p^k) is treated as 1x1 matrices. Throws
  // InvalidArgument for Z_n and products.
  const FieldTable& field() const;
  unsigned matrix_order() const;
  std::vector<std::uint64_t> matrix_entries(RingElement a) const;
  RingElement from_matrix_entries(std::span<const std::uint64_t> entries) const;
  unsigned rank(RingElement a) const;

 private:
  void check(RingElement a) const;

  std::shared_ptr<const detail::RingImpl> impl_;
};

// Constructs the field table used for GF(p^k) (cached per (p, k)).
std::shared_ptr<const FieldTable> construct_field(std::uint64_t p, unsigned k);

}  // namespace zdg
