#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdg/bigint.hpp"
#include "zdg/bit_matrix.hpp"
#include "zdg/ring.hpp"

namespace zdg {

inline constexpr std::size_t kDefaultGraphCap = 5000;

// Γ(R): vertices are the nonzero zero-divisors in canonical order, and
// a–b is an edge when ab = 0 or ba = 0. The diagonal is always clear.
struct ZeroDivisorGraph {
  Ring ring;
  std::vector<RingElement> vertices;
  BitMatrix adjacency;

  std::size_t order() const noexcept { return vertices.size(); }
  std::size_t edge_count() const;
  bool adjacent(std::size_t i, std::size_t j) const noexcept { return adjacency.get(i, j); }
  std::optional<std::size_t> index_of(RingElement a) const;
  // Like index_of but throws InvalidArgument for a non-vertex.
  std::size_t vertex_index(RingElement a) const;
};

ZeroDivisorGraph build_zdg(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap,
                           std::size_t graph_cap = kDefaultGraphCap);

// {x in Z(R) : ax = 0 or xa = 0}, in canonical order. Throws for 0 or a unit.
std::vector<RingElement> annihilator_set(const Ring& ring, RingElement a,
                                         std::uint64_t element_cap = kDefaultElementCap);

std::vector<RingElement> neighborhood(const ZeroDivisorGraph& g, RingElement a);
std::size_t degree(const ZeroDivisorGraph& g, RingElement a);

// Degree of any a with gcd(a, n) = d in Γ(Z_n); d must be a divisor with 1 < d < n.
std::uint64_t degree_zn(std::uint64_t n, std::uint64_t d);

// The sum over exponent vectors k_i - α_i <= β_i <= k_i of
// Π (p_i^{k_i-β_i} - p_i^{k_i-β_i-1}), the factor for β_i = k_i taken as 1.
// It overcounts degree_zn by 1 + [n | d²].
std::uint64_t degree_zn_sum_form(std::uint64_t n, std::uint64_t d);

// Degree of a rank-r matrix in Γ(M_n(F_q)): 2q^{n(n-r)} - q^{(n-r)²} - 1,
// one less when the matrix squares to zero. Needs 1 <= r <= n-1.
BigInt degree_matring(unsigned n, std::uint64_t q, unsigned r, bool squares_to_zero);

// Vertex indices of each connected component, components ordered by their
// smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const ZeroDivisorGraph& g);

// One "u v" line per edge (u before v in vertex order), using element labels.
std::string edge_list_text(const ZeroDivisorGraph& g);

}  // namespace zdg
