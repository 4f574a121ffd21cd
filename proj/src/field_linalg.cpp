#include "zdg/field_linalg.hpp"

#include <algorithm>

#include "zdg/error.hpp"

namespace zdg {

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(cols, rows);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

FieldMatrix reduced_row_echelon(const FieldTable& f, FieldMatrix m) {
  unsigned pivot_row = 0;
  for (unsigned col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    unsigned sel = pivot_row;
    while (sel < m.rows && m(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (unsigned j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(pivot_row, j));
    const std::uint64_t inv = f.inv(m(pivot_row, col));
    for (unsigned j = 0; j < m.cols; ++j) m(pivot_row, j) = f.mul(m(pivot_row, j), inv);
    for (unsigned i = 0; i < m.rows; ++i) {
      if (i == pivot_row || m(i, col) == 0) continue;
      const std::uint64_t factor = m(i, col);
      for (unsigned j = 0; j < m.cols; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(pivot_row, j)));
      }
    }
    ++pivot_row;
  }
  FieldMatrix out(pivot_row, m.cols);
  std::copy_n(m.data.begin(), std::size_t{pivot_row} * m.cols, out.data.begin());
  return out;
}

unsigned rank(const FieldTable& f, const FieldMatrix& m) { return reduced_row_echelon(f, m).rows; }

FieldMatrix multiply(const FieldTable& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix shape mismatch");
  FieldMatrix c(a.rows, b.cols);
  for (unsigned i = 0; i < a.rows; ++i) {
    for (unsigned k = 0; k < a.cols; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < b.cols; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  }
  return c;
}

Subspace row_space(const FieldTable& f, const FieldMatrix& m) {
  return Subspace{m.cols, reduced_row_echelon(f, m)};
}

Subspace column_space(const FieldTable& f, const FieldMatrix& m) { return row_space(f, m.transpose()); }

Subspace kernel(const FieldTable& f, const FieldMatrix& m) {
  const FieldMatrix r = reduced_row_echelon(f, m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (unsigned i = 0; i < r.rows; ++i) {
    for (unsigned j = 0; j < r.cols; ++j) {
      if (r(i, j) != 0) {
        pivot_of_col[j] = static_cast<int>(i);
        break;
      }
    }
  }
  FieldMatrix basis(0, m.cols);
  for (unsigned free = 0; free < m.cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<std::uint64_t> v(m.cols, 0);
    v[free] = 1;
    for (unsigned j = 0; j < m.cols; ++j) {
      if (pivot_of_col[j] >= 0) v[j] = f.neg(r(static_cast<unsigned>(pivot_of_col[j]), free));
    }
    basis.data.insert(basis.data.end(), v.begin(), v.end());
    ++basis.rows;
  }
  return row_space(f, basis);
}

bool contains(const FieldTable& f, const Subspace& outer, const Subspace& inner) {
  if (inner.dim() == 0) return true;
  if (inner.dim() > outer.dim()) return false;
  FieldMatrix stacked(outer.dim() + inner.dim(), outer.ambient);
  std::copy(outer.basis.data.begin(), outer.basis.data.end(), stacked.data.begin());
  std::copy(inner.basis.data.begin(), inner.basis.data.end(),
            stacked.data.begin() + static_cast<std::ptrdiff_t>(outer.basis.data.size()));
  return rank(f, stacked) == outer.dim();
}

std::vector<Subspace> all_subspaces(const FieldTable& f, unsigned n, unsigned dim) {
  std::vector<Subspace> out;
  if (dim > n) return out;
  if (dim == 0) {
    out.push_back(Subspace{n, FieldMatrix(0, n)});
    return out;
  }
  const std::uint64_t q = f.order();
  // Choose pivot columns, then fill the free positions of an RREF matrix.
  std::vector<unsigned> pivots(dim);
  for (unsigned i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<unsigned, unsigned>> free_slots;
    for (unsigned i = 0; i < dim; ++i) {
      for (unsigned j = pivots[i] + 1; j < n; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_slots.emplace_back(i, j);
      }
    }
    std::vector<std::uint64_t> digits(free_slots.size(), 0);
    while (true) {
      FieldMatrix b(dim, n);
      for (unsigned i = 0; i < dim; ++i) b(i, pivots[i]) = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) b(free_slots[s].first, free_slots[s].second) = digits[s];
      out.push_back(Subspace{n, std::move(b)});
      std::size_t s = 0;
      while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
      if (s == digits.size()) break;
    }
    int i = static_cast<int>(dim) - 1;
    while (i >= 0 && pivots[i] == n - dim + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++pivots[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

}  // namespace zdg
