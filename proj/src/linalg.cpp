#include "zdg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "zdg/error.hpp"

namespace zdg {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data) s += x * x;
  return std::sqrt(s);
}

std::vector<double> DenseMatrix::apply(const std::vector<double>& x) const {
  if (x.size() != cols) throw InvalidArgument("vector length does not match matrix");
  std::vector<double> y(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols != b.rows) throw InvalidArgument("matrix shape mismatch");
  DenseMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InvalidArgument("matrix shape mismatch");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
  return c;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

EigenSystem run_jacobi(const DenseMatrix& m, const JacobiOptions& opt, bool want_vectors) {
  if (m.rows != m.cols) throw InvalidArgument("eigenvalues need a square matrix");
  const std::size_t n = m.rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!std::isfinite(m(i, j)) || std::abs(m(i, j) - m(j, i)) > opt.symmetry_tolerance) {
        std::ostringstream os;
        os << "matrix is not symmetric at (" << i << "," << j << ")";
        throw InvalidArgument(os.str());
      }
    }
    if (!std::isfinite(m(i, i))) throw InvalidArgument("matrix has a non-finite diagonal entry");
  }

  DenseMatrix a = m;
  // Symmetrise exactly so rotations preserve symmetry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  DenseMatrix v = want_vectors ? DenseMatrix::identity(n) : DenseMatrix();
  const double threshold = opt.relative_tolerance * (1.0 + m.frobenius_norm());

  EigenSystem out;
  double off = off_diagonal_norm(a);
  while (off > threshold) {
    if (out.sweeps == opt.max_sweeps) {
      std::ostringstream os;
      os << "Jacobi did not converge after " << opt.max_sweeps << " sweeps (off-diagonal norm " << off << ")";
      throw ConvergenceError(os.str(), off);
    }
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]);
  if (want_vectors) {
    out.vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace

std::vector<double> jacobi_eigen(const DenseMatrix& m, const JacobiOptions& options) {
  return run_jacobi(m, options, false).values;
}

EigenSystem jacobi_eigen_system(const DenseMatrix& m, const JacobiOptions& options) {
  return run_jacobi(m, options, true);
}

}  // namespace zdg
