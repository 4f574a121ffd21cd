#pragma once

#include <cstdint>
#include <vector>

#include "zdg/field.hpp"

namespace zdg {

// Row-major dense matrix over a FieldTable, entries are field labels.
struct FieldMatrix {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<std::uint64_t> data;

  FieldMatrix() = default;
  FieldMatrix(unsigned r, unsigned c) : rows(r), cols(c), data(std::size_t{r} * c, 0) {}

  std::uint64_t& operator()(unsigned i, unsigned j) { return data[std::size_t{i} * cols + j]; }
  std::uint64_t operator()(unsigned i, unsigned j) const { return data[std::size_t{i} * cols + j]; }

  FieldMatrix transpose() const;
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
};

// Reduced row-echelon form; zero rows are dropped, so the result is the
// canonical basis of the row space.
FieldMatrix reduced_row_echelon(const FieldTable& f, FieldMatrix m);

unsigned rank(const FieldTable& f, const FieldMatrix& m);

FieldMatrix multiply(const FieldTable& f, const FieldMatrix& a, const FieldMatrix& b);

// A subspace of F_q^n held by its canonical (RREF) basis.
struct Subspace {
  unsigned ambient = 0;
  FieldMatrix basis;  // dim() x ambient, RREF

  unsigned dim() const { return basis.rows; }
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.basis.rows != b.basis.rows) return a.basis.rows < b.basis.rows;
    return a.basis.data < b.basis.data;
  }
};

Subspace row_space(const FieldTable& f, const FieldMatrix& m);
Subspace column_space(const FieldTable& f, const FieldMatrix& m);
// Null space {x : m x = 0} as a subspace of F^cols.
Subspace kernel(const FieldTable& f, const FieldMatrix& m);

bool contains(const FieldTable& f, const Subspace& outer, const Subspace& inner);

// Every subspace of F_q^n of the given dimension, in a fixed order.
std::vector<Subspace> all_subspaces(const FieldTable& f, unsigned n, unsigned dim);

}  // namespace zdg
