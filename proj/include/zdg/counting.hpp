#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "zdg/bigint.hpp"
#include "zdg/relations.hpp"
#include "zdg/ring.hpp"

namespace zdg {

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

// Memoised Gaussian binomials for one q. Safe to share between threads.
class QBinomTable {
 public:
  explicit QBinomTable(std::uint64_t q);

  std::uint64_t q() const noexcept { return q_; }
  // Zero when r < 0 or r > n.
  BigInt operator()(long n, long r) const;

 private:
  std::uint64_t q_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<long, long>, BigInt> memo_;
};

// (n choose r)_q = Π_{i<r} (q^n - q^i) / Π_{i<r} (q^r - q^i); q >= 2.
BigInt q_binomial(long n, long r, std::uint64_t q);

// Number of n x m matrices of rank r over F_q.
BigInt rank_count(unsigned n, unsigned m, unsigned r, std::uint64_t q);

// Size of an associate class of rank-r matrices: |GL_r(F_q)|.
BigInt class_size_matrix(unsigned r, std::uint64_t q);

// Number of associate classes in Z(M_n(F_q)).
BigInt class_count_matrix(unsigned n, std::uint64_t q);

// Nontrivial idempotents (neither 0 nor I) in M_n(F_q).
BigInt idempotent_count(unsigned n, std::uint64_t q);

// Nonzero A in M_n(F_q) with A² = 0.
BigInt nilpotent2_count(unsigned n, std::uint64_t q);

// 2 Σ_{i=1}^{n-r} C(n-r,i)_q C(n,i)_q - Σ_{i=1}^{n-r} C(n-r,i)_q². This counts
// the class itself when A² = 0; the loop-free compressed degree is one less then.
BigInt compressed_degree_matrix(unsigned n, std::uint64_t q, unsigned r);

struct ZnClassData {
  std::uint64_t d = 0;             // the class is {x : gcd(x, n) = d}
  std::uint64_t size = 0;          // φ(n/d)
  CellKind kind = CellKind::null;  // complete iff n | d²
  std::uint64_t neighbor_sum = 0;  // Σ sizes of adjacent classes
  std::vector<std::size_t> adjacent;
};

struct ZnProfile {
  std::uint64_t n = 0;
  std::vector<ZnClassData> classes;  // ascending d
  std::size_t complete_count = 0;
};

// Works from the factorisation alone; no elements are enumerated.
ZnProfile zn_profile(std::uint64_t n);

// One matrix factor M_n(F_q); a field is n = 1 and Z_p is (1, p).
struct MatrixFactor {
  unsigned n = 1;
  std::uint64_t q = 2;
  friend bool operator==(const MatrixFactor&, const MatrixFactor&) = default;
};

// Factors of a semisimple ring in product order. Throws for anything else.
std::vector<MatrixFactor> semisimple_factors(const RingDescriptor& d);

// A class of Z(R) for semisimple R, described by its component ranks plus
// whether its elements square to zero.
struct SemisimpleProfile {
  std::vector<MatrixFactor> factors;
  std::vector<unsigned> ranks;
  bool squares_to_zero = false;

  void validate() const;
};

// Π_{r_k = n_k} |GL_{n_k}(q_k)| · Π_{0 < r_k < n_k} |GL_{r_k}(q_k)|.
BigInt semisimple_class_size(const SemisimpleProfile& p);

// Exact vertex degree by inclusion-exclusion over xy = 0 and yx = 0,
// dropping y = 0 and (when x² = 0) y = x.
BigInt semisimple_vertex_degree(const SemisimpleProfile& p);
// Π_{r_k=0} q_k^{n_k²} · Π_{r_k≠0} (2 q_k^{n_k(n_k-r_k)} - q_k^{(n_k-r_k)²}) - 1.
BigInt semisimple_vertex_degree_product_form(const SemisimpleProfile& p);

// Exact loop-free degree of the class in the compressed graph.
BigInt semisimple_class_degree(const SemisimpleProfile& p);
// Π_{r_k=0} Σ_{i=1}^{n_k-1} C(n_k,i)² · Π_{r_k≠0} Σ_{i=1}^{n_k-r_k} (2 C(n_k-r_k,i) C(n_k,i) - C(n_k-r_k,i)²) - 1.
BigInt semisimple_class_degree_product_form(const SemisimpleProfile& p);

// Compressed graph of F_{q_1} x ... x F_{q_t}. Classes are the nonempty proper
// subsets S of coordinates (the nonzero positions), as bit masks, in
// increasing mask order.
struct BooleanSkeleton {
  unsigned t = 0;
  std::vector<std::uint64_t> q;
  std::vector<std::uint32_t> supports;
  std::vector<BigInt> class_sizes;     // Π_{i∈S} (q_i - 1)
  std::vector<std::uint64_t> class_degrees;  // 2^{t-|S|} - 1
  std::vector<BigInt> vertex_degrees;  // Π_{i∉S} q_i - 1
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // disjoint supports
};

BooleanSkeleton boolean_skeleton(const std::vector<std::uint64_t>& q);

}  // namespace zdg
