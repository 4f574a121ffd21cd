#pragma once

#include <cstddef>
#include <vector>

namespace zdg {

// Row-major dense real matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  static DenseMatrix identity(std::size_t n);

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  double frobenius_norm() const;
  std::vector<double> apply(const std::vector<double>& x) const;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);

struct JacobiOptions {
  double symmetry_tolerance = 1e-12;
  double relative_tolerance = 1e-10;
  int max_sweeps = 100;
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
  int sweeps = 0;
};

// Cyclic (row-order) Jacobi. Converged once the off-diagonal Frobenius norm
// is at most relative_tolerance * (1 + ||M||_F). Throws InvalidArgument for a
// non-square or asymmetric input and ConvergenceError after max_sweeps.
std::vector<double> jacobi_eigen(const DenseMatrix& m, const JacobiOptions& options = {});
EigenSystem jacobi_eigen_system(const DenseMatrix& m, const JacobiOptions& options = {});

}  // namespace zdg
