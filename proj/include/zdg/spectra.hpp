#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/bit_matrix.hpp"
#include "zdg/graph.hpp"
#include "zdg/linalg.hpp"
#include "zdg/relations.hpp"

namespace zdg {

enum class Flavor { adjacency, laplacian };
const char* to_string(Flavor f) noexcept;

// Origin of an eigenvalue. Join assembly mixes cell values with quotient
// values; brute force marks everything direct.
enum class ValueSource { cell, quotient, direct };
const char* to_string(ValueSource s) noexcept;

struct EigenCluster {
  double value;
  std::size_t multiplicity;
};

struct SpectrumMultiset {
  std::vector<double> values;  // ascending
  std::vector<ValueSource> provenance;

  std::size_t size() const noexcept { return values.size(); }
  // Groups sorted values, starting a new cluster when the gap exceeds `gap`.
  // Each cluster reports the mean of its members.
  std::vector<EigenCluster> clusters(double gap = 1e-6) const;
};

struct JoinCell {
  std::uint64_t size = 0;
  CellKind kind = CellKind::null;
  std::uint64_t neighbor_sum = 0;  // Σ sizes of H-neighbours
  std::uint64_t regularity() const noexcept { return kind == CellKind::complete ? size - 1 : 0; }
};

// Γ(R) as an H-join of complete or edgeless cells.
struct JoinDecomposition {
  std::vector<JoinCell> cells;
  BitMatrix h;
  // Vertex indices per cell; empty when the decomposition came from a closed form.
  std::vector<std::vector<std::size_t>> members;

  std::size_t cell_count() const noexcept { return cells.size(); }
  std::uint64_t vertex_count() const;
};

// Verifies that every cell is complete or edgeless and that adjacency between
// cells is all-or-nothing; throws VerificationError otherwise. When the graph
// has at most reconstruct_limit vertices the blow-up is also compared bit for bit.
JoinDecomposition decompose(const ZeroDivisorGraph& g, const ClassPartition& p, std::size_t reconstruct_limit = 2000);

// Rebuilds the full adjacency from a decomposition with members.
BitMatrix blow_up(const JoinDecomposition& d);

// Gcd-class decomposition of Γ(Z_n) from the factorisation of n alone.
JoinDecomposition decompose_zn(std::uint64_t n);

// Associate-class decomposition of Γ(R) for a semisimple R built from
// subspace pairs per factor, without enumerating ring elements. Throws
// CapExceeded when the graph would have more than vertex_cap vertices or the
// compressed graph more than class_cap classes.
JoinDecomposition decompose_semisimple(const RingDescriptor& d, std::uint64_t vertex_cap = 2'000'000,
                                       std::size_t class_cap = 4000);

DenseMatrix quotient_adjacency(const JoinDecomposition& d);
DenseMatrix quotient_laplacian(const JoinDecomposition& d);

SpectrumMultiset assemble_adjacency_spectrum(const JoinDecomposition& d);
SpectrumMultiset assemble_laplacian_spectrum(const JoinDecomposition& d);
SpectrumMultiset assemble_spectrum(const JoinDecomposition& d, Flavor f);

DenseMatrix adjacency_matrix(const ZeroDivisorGraph& g);
DenseMatrix laplacian_matrix(const ZeroDivisorGraph& g);
SpectrumMultiset brute_spectrum(const ZeroDivisorGraph& g, Flavor f, std::size_t cap = kDefaultGraphCap);

struct SpectrumComparison {
  bool matched = false;
  bool length_mismatch = false;
  double max_deviation = 0.0;
};

// Sorts both sides and compares entrywise.
SpectrumComparison multiset_equal(std::vector<double> a, std::vector<double> b, double tol = 1e-7);

// σ(A) \ {α_1} ∪ σ(B) \ {β_1} ∪ σ([[α_1, ρ], [ρ, β_1]]), ascending. u and v
// must be unit vectors (within 1e-10) of lengths |alpha| and |beta|.
std::vector<double> fiedler_combine(const std::vector<double>& alpha, const std::vector<double>& u,
                                    const std::vector<double>& beta, const std::vector<double>& v, double rho);

struct FiedlerCheck {
  std::vector<double> combined;
  std::vector<double> direct;
  double max_deviation = 0.0;
  bool passed = false;
};

// Uses eigenpair i of A and j of B, builds [[A, ρuvᵀ], [ρvuᵀ, B]] and compares.
FiedlerCheck check_fiedler(const DenseMatrix& a, std::size_t i, const DenseMatrix& b, std::size_t j, double rho,
                           double tol = 1e-8);

struct ShiftLemmaReport {
  std::vector<double> direct;        // σ(B + DAD)
  std::vector<double> paired_sums;   // b_k + λ_k over a common eigenbasis
  double max_deviation = 0.0;
  double max_residual = 0.0;         // ‖(B + DAD) w - (b + λ) w‖ over the basis
  bool passed = false;
};

// B and D are diagonals. Throws InvalidArgument when A B != B A.
ShiftLemmaReport check_shift_lemma(const std::vector<double>& b, const DenseMatrix& a, const std::vector<double>& d,
                                   double tol = 1e-8);

enum class LiftStatus { ok, formula_inapplicable, verification_failed };
const char* to_string(LiftStatus s) noexcept;

struct LiftResult {
  LiftStatus status = LiftStatus::ok;
  double mu = 0.0;          // formula value
  double rayleigh = 0.0;    // wᵀAw / wᵀw
  double residual = 0.0;    // ‖Aw - μw‖
  std::vector<double> w;
  DenseMatrix duplicated;
  std::string message;
};

// Row and column j (0-based) of B repeated so they occur m times, and the
// eigenpair (λ, v) of B lifted by the single-duplication formula
// μ = λ + (Σ_i B_ij)/(Σ_i v_i)·(m-1)·v_j. Throws InvalidArgument when B is not
// square, j is out of range, m = 0 or B v != λ v.
LiftResult duplicate_lift(const DenseMatrix& b, std::size_t j, std::size_t m, double lambda,
                          const std::vector<double>& v, double tol = 1e-8);

struct SpectrumPair {
  SpectrumMultiset adjacency;
  SpectrumMultiset laplacian;
};

SpectrumPair spectrum_zn(std::uint64_t n);

// Uses the enumerated graph when the ring fits the caps, the closed-form
// decomposition otherwise.
SpectrumPair spectrum_semisimple(const RingDescriptor& d, std::uint64_t element_cap = kDefaultElementCap,
                                 std::size_t graph_cap = kDefaultGraphCap);

struct PairingReport {
  std::size_t zero_count = 0;
  std::vector<std::pair<double, double>> pairs;
  std::vector<double> unmatched;
  bool perfect = false;
};

// Matches nonzero eigenvalues λ with partners near -1/λ.
PairingReport boolean_pairing(const SpectrumMultiset& s, double tol = 1e-6);

}  // namespace zdg
