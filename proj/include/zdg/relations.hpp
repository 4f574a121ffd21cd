#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/ring.hpp"

namespace zdg {

enum class Relation { associate, neighborhood, annihilator };
enum class CellKind { complete, null, unset };

const char* to_string(Relation r) noexcept;
const char* to_string(CellKind k) noexcept;
Relation parse_relation(std::string_view text);

// One class of a partition of Z(R). Members are vertex indices (positions in
// Ring::zero_divisors order), sorted; the representative is the first.
struct EquivalenceClass {
  std::vector<std::size_t> members;
  CellKind kind = CellKind::unset;

  std::size_t representative() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }
  // Degree of every vertex inside the induced cell.
  std::size_t regularity() const noexcept { return kind == CellKind::complete ? members.size() - 1 : 0; }
};

// Classes are ordered by representative.
struct ClassPartition {
  Relation relation = Relation::associate;
  std::size_t vertex_count = 0;
  std::vector<EquivalenceClass> classes;

  // class_index()[v] is the index of the class containing vertex v.
  std::vector<std::size_t> class_index() const;
  // Same member sets, ignoring relation and kinds.
  bool same_blocks(const ClassPartition& other) const;
  // Every class of *this lies inside a class of coarser.
  bool refines(const ClassPartition& coarser) const;
};

// a ~ b iff a = ub = bv for units u, v; each class is Ua ∩ aU.
ClassPartition classes_associate(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap);

// The gcd classes A_d = {x : gcd(x, n) = d}.
ClassPartition classes_associate_zn(std::uint64_t n, std::uint64_t element_cap = kDefaultElementCap);

// Matrices over a field keyed by (row space, column space). GF(q) is taken as
// 1x1 matrices and has no classes.
ClassPartition classes_associate_matrix(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap);

// Product ring: classes are products of per-factor classes drawn from {0},
// the unit group and the factor's zero-divisor classes. factor_partitions[i]
// is an associate partition of factor i.
ClassPartition classes_product(const Ring& ring, std::span<const ClassPartition> factor_partitions,
                               std::uint64_t element_cap = kDefaultElementCap);
ClassPartition classes_product(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap);

// Picks the structural route for the ring's kind.
ClassPartition classes_associate_fast(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap);

// a ≈ b iff N(a) = N(b) (exact equality of adjacency rows).
ClassPartition classes_neighborhood(const ZeroDivisorGraph& g);

// Variant that ignores the two positions a and b when comparing rows. It is
// not transitive in general; classes are grown greedily from the smallest
// unassigned vertex.
ClassPartition classes_neighborhood_masked(const ZeroDivisorGraph& g);

// a ~_m b iff ann(a) = ann(b).
ClassPartition classes_annihilator(const ZeroDivisorGraph& g);

ClassPartition compute_partition(const ZeroDivisorGraph& g, Relation relation);

struct AgreementCheck {
  std::string name;
  bool applicable = false;
  bool passed = true;
  std::string detail;
};

struct AgreementReport {
  std::string ring;
  std::vector<AgreementCheck> checks;
  bool all_passed() const;
};

AgreementReport check_relation_agreements(const Ring& ring, std::uint64_t element_cap = kDefaultElementCap);

}  // namespace zdg
