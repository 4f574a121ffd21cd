#include "zdg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "zdg/counting.hpp"
#include "zdg/error.hpp"
#include "zdg/field_linalg.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

const char* to_string(Flavor f) noexcept { return f == Flavor::adjacency ? "adjacency" : "laplacian"; }

const char* to_string(ValueSource s) noexcept {
  switch (s) {
    case ValueSource::cell: return "cell";
    case ValueSource::quotient: return "quotient";
    case ValueSource::direct: return "direct";
  }
  return "?";
}

const char* to_string(LiftStatus s) noexcept {
  switch (s) {
    case LiftStatus::ok: return "ok";
    case LiftStatus::formula_inapplicable: return "formula_inapplicable";
    case LiftStatus::verification_failed: return "verification_failed";
  }
  return "?";
}

std::vector<EigenCluster> SpectrumMultiset::clusters(double gap) const {
  std::vector<EigenCluster> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > gap) {
      double sum = 0.0;
      for (std::size_t k = start; k < i; ++k) sum += values[k];
      out.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
  return out;
}

std::uint64_t JoinDecomposition::vertex_count() const {
  std::uint64_t total = 0;
  for (const auto& c : cells) total += c.size;
  return total;
}

// ---------------------------------------------------------------------------
// Decompositions

JoinDecomposition decompose(const ZeroDivisorGraph& g, const ClassPartition& p, std::size_t reconstruct_limit) {
  if (p.vertex_count != g.order()) throw InvalidArgument("partition does not match the graph");
  const std::size_t k = p.classes.size();
  const auto idx = p.class_index();
  JoinDecomposition d;
  d.h = BitMatrix(k);
  d.cells.resize(k);
  d.members.resize(k);

  for (std::size_t c = 0; c < k; ++c) {
    const auto& cls = p.classes[c];
    d.members[c] = cls.members;
    std::size_t inner = 0;
    for (auto a : cls.members)
      for (auto b : cls.members)
        if (a < b && g.adjacent(a, b)) ++inner;
    const std::size_t pairs = cls.size() * (cls.size() - 1) / 2;
    CellKind kind;
    if (cls.size() == 1) {
      kind = cls.kind == CellKind::complete ? CellKind::complete : CellKind::null;
    } else if (inner == pairs) {
      kind = CellKind::complete;
    } else if (inner == 0) {
      kind = CellKind::null;
    } else {
      throw VerificationError("class of " + g.ring.label(g.vertices[cls.representative()]) +
                              " induces neither a complete nor an edgeless graph");
    }
    if (cls.kind != CellKind::unset && cls.kind != kind && cls.size() > 1) {
      throw VerificationError("class of " + g.ring.label(g.vertices[cls.representative()]) +
                              " is labelled " + to_string(cls.kind) + " but induces a " + to_string(kind) + " graph");
    }
    d.cells[c] = {cls.size(), kind, 0};
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(p.classes[i].representative(), p.classes[j].representative())) {
        d.h.set(i, j);
        d.h.set(j, i);
      }

  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (idx[a] == idx[b]) continue;
      if (g.adjacent(a, b) != d.h.get(idx[a], idx[b])) {
        throw VerificationError("adjacency between the classes of " + g.ring.label(g.vertices[a]) + " and " +
                                g.ring.label(g.vertices[b]) + " is not all-or-nothing");
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) d.h.for_each_in_row(i, [&](std::size_t j) { d.cells[i].neighbor_sum += d.cells[j].size; });

  if (g.order() <= reconstruct_limit && !(blow_up(d) == g.adjacency)) {
    throw VerificationError("blow-up of the decomposition differs from the graph");
  }
  return d;
}

BitMatrix blow_up(const JoinDecomposition& d) {
  if (d.members.size() != d.cells.size()) throw InvalidArgument("decomposition carries no members");
  std::size_t n = 0;
  for (const auto& m : d.members) n += m.size();
  BitMatrix out(n);
  for (std::size_t i = 0; i < d.cells.size(); ++i) {
    if (d.cells[i].kind == CellKind::complete)
      for (auto a : d.members[i])
        for (auto b : d.members[i])
          if (a != b) out.set(a, b);
    d.h.for_each_in_row(i, [&](std::size_t j) {
      for (auto a : d.members[i])
        for (auto b : d.members[j]) out.set(a, b);
    });
  }
  return out;
}

JoinDecomposition decompose_zn(std::uint64_t n) {
  const auto prof = zn_profile(n);
  JoinDecomposition d;
  d.h = BitMatrix(prof.classes.size());
  for (std::size_t i = 0; i < prof.classes.size(); ++i) {
    const auto& c = prof.classes[i];
    d.cells.push_back({c.size, c.kind, c.neighbor_sum});
    for (auto j : c.adjacent) d.h.set(i, j);
  }
  return d;
}

namespace {

// Associate class of one matrix factor. Proper classes are keyed by a row
// space and a column space of equal dimension.
struct FactorClass {
  enum class Type { zero, unit, proper } type = Type::zero;
  Subspace rows;
  Subspace cols;
  std::uint64_t size = 1;
};

bool orthogonal(const FieldTable& f, const Subspace& a, const Subspace& b) {
  for (unsigned i = 0; i < a.dim(); ++i)
    for (unsigned j = 0; j < b.dim(); ++j) {
      std::uint64_t dot = 0;
      for (unsigned k = 0; k < a.ambient; ++k) dot = f.add(dot, f.mul(a.basis(i, k), b.basis(j, k)));
      if (dot != 0) return false;
    }
  return true;
}

std::uint64_t to_u64(const BigInt& x, const char* what) {
  if (x > std::numeric_limits<std::uint64_t>::max()) throw CapExceeded(std::string(what) + " does not fit in 64 bits");
  return x.convert_to<std::uint64_t>();
}

}  // namespace

JoinDecomposition decompose_semisimple(const RingDescriptor& desc, std::uint64_t vertex_cap, std::size_t class_cap) {
  const auto factors = semisimple_factors(desc);
  const std::size_t t = factors.size();

  // Per factor: class list and the table "x y = 0" between classes.
  std::vector<std::vector<FactorClass>> fclasses(t);
  std::vector<std::vector<std::vector<bool>>> kills(t);
  BigInt class_total = 1;
  for (std::size_t k = 0; k < t; ++k) {
    const unsigned n = factors[k].n;
    const auto pk = nt::as_prime_power(factors[k].q);
    const auto field = construct_field(pk->prime, pk->exponent);
    BigInt count = 2;
    for (unsigned r = 1; r < n; ++r) count += q_binomial(n, r, factors[k].q) * q_binomial(n, r, factors[k].q);
    class_total *= count;
    if (class_total > class_cap + 2) {
      throw CapExceeded(desc.to_string() + " has more than " + std::to_string(class_cap) + " associate classes");
    }
    auto& list = fclasses[k];
    list.push_back({FactorClass::Type::zero, {}, {}, 1});
    for (unsigned r = 1; r < n; ++r) {
      const auto subs = all_subspaces(*field, n, r);
      const std::uint64_t size = to_u64(class_size_matrix(r, factors[k].q), "class size");
      for (const auto& row : subs)
        for (const auto& col : subs) list.push_back({FactorClass::Type::proper, row, col, size});
    }
    list.push_back({FactorClass::Type::unit, {}, {}, to_u64(class_size_matrix(n, factors[k].q), "class size")});

    auto& kill = kills[k];
    kill.assign(list.size(), std::vector<bool>(list.size(), false));
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = 0; b < list.size(); ++b) {
        const auto& x = list[a];
        const auto& y = list[b];
        if (x.type == FactorClass::Type::zero || y.type == FactorClass::Type::zero) {
          kill[a][b] = true;
        } else if (x.type == FactorClass::Type::unit || y.type == FactorClass::Type::unit) {
          kill[a][b] = false;
        } else {
          kill[a][b] = orthogonal(*field, x.rows, y.cols);
        }
      }
  }

  // Odometer over class tuples, component 0 most significant.
  std::vector<std::vector<std::size_t>> tuples;
  std::vector<std::size_t> digit(t, 0);
  BigInt vertices = 0;
  while (true) {
    bool all_zero = true, all_unit = true;
    for (std::size_t k = 0; k < t; ++k) {
      all_zero = all_zero && digit[k] == 0;
      all_unit = all_unit && digit[k] == fclasses[k].size() - 1;
    }
    if (!all_zero && !all_unit) tuples.push_back(digit);
    std::size_t k = t;
    while (k > 0 && ++digit[k - 1] == fclasses[k - 1].size()) digit[--k] = 0;
    if (k == 0) break;
  }

  JoinDecomposition d;
  d.h = BitMatrix(tuples.size());
  for (const auto& tup : tuples) {
    BigInt size = 1;
    bool square_zero = true;
    for (std::size_t k = 0; k < t; ++k) {
      size *= fclasses[k][tup[k]].size;
      square_zero = square_zero && kills[k][tup[k]][tup[k]];
    }
    vertices += size;
    if (vertices > vertex_cap) {
      throw CapExceeded(desc.to_string() + " has more than " + std::to_string(vertex_cap) + " zero-divisors");
    }
    d.cells.push_back({size.convert_to<std::uint64_t>(), square_zero ? CellKind::complete : CellKind::null, 0});
  }
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = i + 1; j < tuples.size(); ++j) {
      bool xy = true, yx = true;
      for (std::size_t k = 0; k < t && (xy || yx); ++k) {
        xy = xy && kills[k][tuples[i][k]][tuples[j][k]];
        yx = yx && kills[k][tuples[j][k]][tuples[i][k]];
      }
      if (xy || yx) {
        d.h.set(i, j);
        d.h.set(j, i);
        d.cells[i].neighbor_sum += d.cells[j].size;
        d.cells[j].neighbor_sum += d.cells[i].size;
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Quotients and assembly

DenseMatrix quotient_adjacency(const JoinDecomposition& d) {
  const std::size_t k = d.cell_count();
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = static_cast<double>(d.cells[i].regularity());
    d.h.for_each_in_row(i, [&](std::size_t j) {
      m(i, j) = std::sqrt(static_cast<double>(d.cells[i].size) * static_cast<double>(d.cells[j].size));
    });
  }
  return m;
}

DenseMatrix quotient_laplacian(const JoinDecomposition& d) {
  const std::size_t k = d.cell_count();
  DenseMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = static_cast<double>(d.cells[i].neighbor_sum);
    d.h.for_each_in_row(i, [&](std::size_t j) {
      m(i, j) = -std::sqrt(static_cast<double>(d.cells[i].size) * static_cast<double>(d.cells[j].size));
    });
  }
  return m;
}

namespace {

SpectrumMultiset finish(std::vector<std::pair<double, ValueSource>> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SpectrumMultiset s;
  for (const auto& [v, src] : entries) {
    s.values.push_back(v);
    s.provenance.push_back(src);
  }
  return s;
}

}  // namespace

SpectrumMultiset assemble_adjacency_spectrum(const JoinDecomposition& d) {
  std::vector<std::pair<double, ValueSource>> entries;
  for (const auto& c : d.cells) {
    const double v = c.kind == CellKind::complete ? -1.0 : 0.0;
    for (std::uint64_t k = 1; k < c.size; ++k) entries.emplace_back(v, ValueSource::cell);
  }
  for (double v : jacobi_eigen(quotient_adjacency(d))) entries.emplace_back(v, ValueSource::quotient);
  return finish(std::move(entries));
}

SpectrumMultiset assemble_laplacian_spectrum(const JoinDecomposition& d) {
  std::vector<std::pair<double, ValueSource>> entries;
  for (const auto& c : d.cells) {
    const double v = static_cast<double>(c.neighbor_sum) + (c.kind == CellKind::complete ? static_cast<double>(c.size) : 0.0);
    for (std::uint64_t k = 1; k < c.size; ++k) entries.emplace_back(v, ValueSource::cell);
  }
  for (double v : jacobi_eigen(quotient_laplacian(d))) entries.emplace_back(v, ValueSource::quotient);
  return finish(std::move(entries));
}

SpectrumMultiset assemble_spectrum(const JoinDecomposition& d, Flavor f) {
  return f == Flavor::adjacency ? assemble_adjacency_spectrum(d) : assemble_laplacian_spectrum(d);
}

DenseMatrix adjacency_matrix(const ZeroDivisorGraph& g) {
  const std::size_t n = g.order();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) g.adjacency.for_each_in_row(i, [&](std::size_t j) { m(i, j) = 1.0; });
  return m;
}

DenseMatrix laplacian_matrix(const ZeroDivisorGraph& g) {
  const std::size_t n = g.order();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = static_cast<double>(g.adjacency.row_count(i));
    g.adjacency.for_each_in_row(i, [&](std::size_t j) { m(i, j) = -1.0; });
  }
  return m;
}

SpectrumMultiset brute_spectrum(const ZeroDivisorGraph& g, Flavor f, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.order()) + " vertices, above the eigensolver cap " +
                      std::to_string(cap));
  }
  SpectrumMultiset s;
  s.values = jacobi_eigen(f == Flavor::adjacency ? adjacency_matrix(g) : laplacian_matrix(g));
  s.provenance.assign(s.values.size(), ValueSource::direct);
  return s;
}

SpectrumComparison multiset_equal(std::vector<double> a, std::vector<double> b, double tol) {
  SpectrumComparison c;
  if (a.size() != b.size()) {
    c.length_mismatch = true;
    c.max_deviation = std::numeric_limits<double>::infinity();
    return c;
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) c.max_deviation = std::max(c.max_deviation, std::abs(a[i] - b[i]));
  c.matched = c.max_deviation <= tol;
  return c;
}

// ---------------------------------------------------------------------------
// Fiedler combination and the shift lemma

namespace {

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void require_unit(const std::vector<double>& x, const char* name) {
  if (std::abs(norm(x) - 1.0) > 1e-10) throw InvalidArgument(std::string(name) + " is not a unit vector");
}

std::vector<double> column(const DenseMatrix& m, std::size_t j) {
  std::vector<double> out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) out[i] = m(i, j);
  return out;
}

}  // namespace

std::vector<double> fiedler_combine(const std::vector<double>& alpha, const std::vector<double>& u,
                                    const std::vector<double>& beta, const std::vector<double>& v, double rho) {
  if (alpha.empty() || beta.empty()) throw InvalidArgument("both spectra must be nonempty");
  if (u.size() != alpha.size() || v.size() != beta.size()) throw InvalidArgument("eigenvector length mismatch");
  require_unit(u, "u");
  require_unit(v, "v");
  std::vector<double> out(alpha.begin() + 1, alpha.end());
  out.insert(out.end(), beta.begin() + 1, beta.end());
  const double mid = 0.5 * (alpha[0] + beta[0]);
  const double half = 0.5 * (alpha[0] - beta[0]);
  const double rad = std::sqrt(half * half + rho * rho);
  out.push_back(mid - rad);
  out.push_back(mid + rad);
  std::sort(out.begin(), out.end());
  return out;
}

FiedlerCheck check_fiedler(const DenseMatrix& a, std::size_t i, const DenseMatrix& b, std::size_t j, double rho,
                           double tol) {
  const auto ea = jacobi_eigen_system(a);
  const auto eb = jacobi_eigen_system(b);
  if (i >= ea.values.size() || j >= eb.values.size()) throw InvalidArgument("eigenpair index out of range");
  const auto u = column(ea.vectors, i);
  const auto v = column(eb.vectors, j);
  std::vector<double> alpha{ea.values[i]}, beta{eb.values[j]};
  for (std::size_t k = 0; k < ea.values.size(); ++k)
    if (k != i) alpha.push_back(ea.values[k]);
  for (std::size_t k = 0; k < eb.values.size(); ++k)
    if (k != j) beta.push_back(eb.values[k]);

  const std::size_t m = a.rows, n = b.rows;
  DenseMatrix c(m + n, m + n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) c(r, s) = a(r, s);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) c(m + r, m + s) = b(r, s);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < n; ++s) c(r, m + s) = c(m + s, r) = rho * u[r] * v[s];

  FiedlerCheck out;
  out.combined = fiedler_combine(alpha, u, beta, v, rho);
  out.direct = jacobi_eigen(c);
  const auto cmp = multiset_equal(out.combined, out.direct, tol);
  out.max_deviation = cmp.max_deviation;
  out.passed = cmp.matched;
  return out;
}

ShiftLemmaReport check_shift_lemma(const std::vector<double>& b, const DenseMatrix& a, const std::vector<double>& d,
                                   double tol) {
  const std::size_t n = b.size();
  if (a.rows != n || a.cols != n || d.size() != n) throw InvalidArgument("shape mismatch in shift-lemma inputs");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a(i, j) * (b[j] - b[i])) > 1e-12) throw InvalidArgument("A and B do not commute");

  DenseMatrix dad(n, n), total(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dad(i, j) = d[i] * a(i, j) * d[j];
      total(i, j) = dad(i, j) + (i == j ? b[i] : 0.0);
    }
  const auto es = jacobi_eigen_system(dad);
  const double gap = 1e-7 * (1.0 + dad.frobenius_norm());

  ShiftLemmaReport rep;
  std::size_t start = 0;
  for (std::size_t e = 1; e <= n; ++e) {
    if (e < n && es.values[e] - es.values[e - 1] <= gap) continue;
    // Within one eigenspace of DAD, diagonalise B to get a common eigenbasis.
    const std::size_t k = e - start;
    DenseMatrix restricted(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += es.vectors(i, start + r) * b[i] * es.vectors(i, start + s);
        restricted(r, s) = acc;
      }
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = r + 1; s < k; ++s) restricted(r, s) = restricted(s, r) = 0.5 * (restricted(r, s) + restricted(s, r));
    const auto inner = jacobi_eigen_system(restricted);
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<double> w(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < k; ++r) w[i] += es.vectors(i, start + r) * inner.vectors(r, s);
      const double lambda = es.values[start + s];
      const double sum = lambda + inner.values[s];
      rep.paired_sums.push_back(sum);
      const auto tw = total.apply(w);
      double res = 0.0;
      for (std::size_t i = 0; i < n; ++i) res += (tw[i] - sum * w[i]) * (tw[i] - sum * w[i]);
      rep.max_residual = std::max(rep.max_residual, std::sqrt(res));
    }
    start = e;
  }
  std::sort(rep.paired_sums.begin(), rep.paired_sums.end());
  rep.direct = jacobi_eigen(total);
  const auto cmp = multiset_equal(rep.direct, rep.paired_sums, tol);
  rep.max_deviation = cmp.max_deviation;
  rep.passed = cmp.matched && rep.max_residual <= tol;
  return rep;
}

// ---------------------------------------------------------------------------
// Duplication lift

LiftResult duplicate_lift(const DenseMatrix& b, std::size_t j, std::size_t m, double lambda,
                          const std::vector<double>& v, double tol) {
  const std::size_t n = b.rows;
  if (n == 0 || b.cols != n) throw InvalidArgument("duplicate_lift needs a nonempty square matrix");
  if (j >= n) throw InvalidArgument("row index out of range");
  if (m == 0) throw InvalidArgument("multiplicity must be at least 1");
  if (v.size() != n) throw InvalidArgument("eigenvector length does not match the matrix");
  const double vnorm = norm(v);
  if (vnorm == 0.0) throw InvalidArgument("eigenvector is zero");
  {
    const auto bv = b.apply(v);
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (bv[i] - lambda * v[i]) * (bv[i] - lambda * v[i]);
    if (std::sqrt(res) > tol * (1.0 + b.frobenius_norm()) * (1.0 + vnorm)) {
      std::ostringstream os;
      os.precision(17);
      os << "v is not an eigenvector of B for lambda = " << lambda << " (residual " << std::sqrt(res) << ")";
      throw InvalidArgument(os.str());
    }
  }

  const std::size_t size = n + m - 1;
  auto source = [&](std::size_t t) { return t <= j ? t : (t < j + m ? j : t - m + 1); };
  LiftResult out;
  out.duplicated = DenseMatrix(size, size);
  out.w.resize(size);
  for (std::size_t s = 0; s < size; ++s) {
    out.w[s] = v[source(s)];
    for (std::size_t t = 0; t < size; ++t) out.duplicated(s, t) = b(source(s), source(t));
  }

  const double xj = v[j];
  if (m == 1 || xj == 0.0) {
    out.mu = lambda;
  } else {
    double colsum = 0.0, vsum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      colsum += b(i, j);
      vsum += v[i];
    }
    if (std::abs(vsum) <= 1e-14 * vnorm) {
      out.status = LiftStatus::formula_inapplicable;
      out.mu = std::numeric_limits<double>::quiet_NaN();
      out.message = "formula inapplicable: the entries of v sum to zero";
    } else {
      out.mu = lambda + colsum / vsum * static_cast<double>(m - 1) * xj;
    }
  }

  const auto aw = out.duplicated.apply(out.w);
  double wtaw = 0.0, wtw = 0.0;
  for (std::size_t s = 0; s < size; ++s) {
    wtaw += out.w[s] * aw[s];
    wtw += out.w[s] * out.w[s];
  }
  out.rayleigh = wtaw / wtw;
  if (out.status == LiftStatus::formula_inapplicable) return out;

  double res = 0.0;
  for (std::size_t s = 0; s < size; ++s) res += (aw[s] - out.mu * out.w[s]) * (aw[s] - out.mu * out.w[s]);
  out.residual = std::sqrt(res);
  if (out.residual > tol * std::max(1.0, std::sqrt(wtw))) {
    out.status = LiftStatus::verification_failed;
    std::ostringstream os;
    os.precision(17);
    os << "lifted vector is not an eigenvector: formula mu = " << out.mu << ", Rayleigh quotient = " << out.rayleigh
       << ", residual = " << out.residual;
    out.message = os.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole-ring spectra

SpectrumPair spectrum_zn(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("Z_n needs n >= 2");
  if (nt::is_prime(n)) return {};
  const auto d = decompose_zn(n);
  return {assemble_adjacency_spectrum(d), assemble_laplacian_spectrum(d)};
}

SpectrumPair spectrum_semisimple(const RingDescriptor& desc, std::uint64_t element_cap, std::size_t graph_cap) {
  if (!desc.is_semisimple()) throw InvalidArgument(desc.to_string() + " is not semisimple");
  if (desc.cardinality() <= element_cap) {
    const Ring r(desc);
    if (r.cardinality() - r.units(element_cap).size() - 1 <= graph_cap) {
      const auto g = build_zdg(r, element_cap, graph_cap);
      const auto d = decompose(g, classes_associate_fast(r, element_cap));
      return {assemble_adjacency_spectrum(d), assemble_laplacian_spectrum(d)};
    }
  }
  const auto d = decompose_semisimple(desc);
  return {assemble_adjacency_spectrum(d), assemble_laplacian_spectrum(d)};
}

PairingReport boolean_pairing(const SpectrumMultiset& s, double tol) {
  PairingReport rep;
  std::vector<double> nonzero;
  for (double v : s.values) {
    if (std::abs(v) < tol) {
      ++rep.zero_count;
    } else {
      nonzero.push_back(v);
    }
  }
  std::vector<bool> used(nonzero.size(), false);
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    if (used[i]) continue;
    const double target = -1.0 / nonzero[i];
    std::size_t best = nonzero.size();
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
      if (k == i || used[k] || std::abs(nonzero[k] - target) > tol) continue;
      if (best == nonzero.size() || std::abs(nonzero[k] - target) < std::abs(nonzero[best] - target)) best = k;
    }
    used[i] = true;
    if (best == nonzero.size()) {
      rep.unmatched.push_back(nonzero[i]);
    } else {
      used[best] = true;
      rep.pairs.emplace_back(nonzero[i], nonzero[best]);
    }
  }
  rep.perfect = rep.unmatched.empty();
  return rep;
}

}  // namespace zdg
