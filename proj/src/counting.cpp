#include "zdg/counting.hpp"

#include <bit>
#include <memory>

#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  if (exp > std::numeric_limits<unsigned>::max()) throw InvalidArgument("exponent too large");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(num, den, quotient, remainder);
  if (remainder != 0) throw Error("inexact division in a q-product");
  return quotient;
}

void require_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
}

BigInt gl_order(unsigned r, std::uint64_t q) {
  const BigInt qr = big_pow(q, r);
  BigInt out = 1;
  for (unsigned i = 0; i < r; ++i) out *= qr - big_pow(q, i);
  return out;
}

const QBinomTable& table_for(std::uint64_t q) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::unique_ptr<QBinomTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[q];
  if (!slot) slot = std::make_unique<QBinomTable>(q);
  return *slot;
}

}  // namespace

QBinomTable::QBinomTable(std::uint64_t q) : q_(q) { require_q(q); }

BigInt QBinomTable::operator()(long n, long r) const {
  if (r < 0 || n < 0 || r > n) return 0;
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find({n, r}); it != memo_.end()) return it->second;
  }
  const BigInt qn = big_pow(q_, static_cast<std::uint64_t>(n));
  const BigInt qr = big_pow(q_, static_cast<std::uint64_t>(r));
  BigInt num = 1, den = 1;
  for (long i = 0; i < r; ++i) {
    const BigInt qi = big_pow(q_, static_cast<std::uint64_t>(i));
    num *= qn - qi;
    den *= qr - qi;
  }
  BigInt value = exact_div(num, den);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace({n, r}, std::move(value)).first->second;
}

BigInt q_binomial(long n, long r, std::uint64_t q) {
  require_q(q);
  return table_for(q)(n, r);
}

BigInt rank_count(unsigned n, unsigned m, unsigned r, std::uint64_t q) {
  require_q(q);
  if (r > std::min(n, m)) throw InvalidArgument("rank exceeds matrix dimensions");
  const BigInt qn = big_pow(q, n), qm = big_pow(q, m), qr = big_pow(q, r);
  BigInt num = 1, den = 1;
  for (unsigned j = 0; j < r; ++j) {
    const BigInt qj = big_pow(q, j);
    num *= (qn - qj) * (qm - qj);
    den *= qr - qj;
  }
  return exact_div(num, den);
}

BigInt class_size_matrix(unsigned r, std::uint64_t q) {
  require_q(q);
  if (r < 1) throw InvalidArgument("class size needs r >= 1");
  return gl_order(r, q);
}

BigInt class_count_matrix(unsigned n, std::uint64_t q) {
  require_q(q);
  if (n < 2) throw InvalidArgument("class count needs n >= 2");
  BigInt total = 0;
  for (unsigned r = 1; r < n; ++r) {
    const BigInt c = q_binomial(n, r, q);
    total += c * c;
  }
  return total;
}

BigInt idempotent_count(unsigned n, std::uint64_t q) {
  require_q(q);
  if (n < 1) throw InvalidArgument("idempotent count needs n >= 1");
  BigInt total = 0;
  for (unsigned r = 0; r <= n; ++r) total += big_pow(q, std::uint64_t{r} * (n - r)) * q_binomial(n, r, q);
  return total - 2;
}

BigInt nilpotent2_count(unsigned n, std::uint64_t q) {
  require_q(q);
  if (n < 1) throw InvalidArgument("nilpotent count needs n >= 1");
  BigInt total = 0;
  for (unsigned r = 1; r <= n / 2; ++r) total += q_binomial(n, r, q) * q_binomial(n - r, r, q);
  return total;
}

BigInt compressed_degree_matrix(unsigned n, std::uint64_t q, unsigned r) {
  require_q(q);
  if (r < 1 || r >= n) throw InvalidArgument("compressed degree needs 1 <= r <= n-1");
  BigInt cross = 0, square = 0;
  for (unsigned i = 1; i <= n - r; ++i) {
    const BigInt a = q_binomial(n - r, i, q);
    cross += a * q_binomial(n, i, q);
    square += a * a;
  }
  return 2 * cross - square;
}

ZnProfile zn_profile(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("Z_n needs n >= 2");
  ZnProfile p;
  p.n = n;
  for (auto d : nt::divisors(n)) {
    if (d == 1 || d == n) continue;
    ZnClassData c;
    c.d = d;
    c.size = nt::euler_phi(n / d);
    c.kind = nt::divides_product(n, d, d) ? CellKind::complete : CellKind::null;
    if (c.kind == CellKind::complete) ++p.complete_count;
    p.classes.push_back(c);
  }
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (std::size_t j = 0; j < p.classes.size(); ++j) {
      if (i != j && nt::divides_product(n, p.classes[i].d, p.classes[j].d)) {
        p.classes[i].adjacent.push_back(j);
        p.classes[i].neighbor_sum += p.classes[j].size;
      }
    }
  }
  return p;
}

std::vector<MatrixFactor> semisimple_factors(const RingDescriptor& d) {
  std::vector<MatrixFactor> out;
  if (const auto* zn = std::get_if<ZnSpec>(&d.kind())) {
    if (!nt::is_squarefree(zn->n)) throw InvalidArgument(d.to_string() + " is not semisimple");
    for (auto [p, k] : nt::factorize(zn->n)) out.push_back({1, p});
  } else if (const auto* g = std::get_if<GaloisSpec>(&d.kind())) {
    out.push_back({1, g->order()});
  } else if (const auto* m = std::get_if<MatrixSpec>(&d.kind())) {
    out.push_back({m->n, m->field.order()});
  } else {
    for (const auto& f : std::get<ProductSpec>(d.kind()).factors) {
      auto sub = semisimple_factors(f);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

void SemisimpleProfile::validate() const {
  if (factors.empty() || ranks.size() != factors.size()) throw InvalidArgument("one rank per factor is required");
  bool all_unit = true, all_zero = true;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    require_q(factors[k].q);
    if (ranks[k] > factors[k].n) throw InvalidArgument("rank exceeds matrix order");
    all_unit = all_unit && ranks[k] == factors[k].n;
    all_zero = all_zero && ranks[k] == 0;
    if (squares_to_zero && 2 * ranks[k] > factors[k].n) {
      throw InvalidArgument("a component of rank above n/2 cannot square to zero");
    }
  }
  if (all_unit) throw InvalidArgument("rank vector describes a unit");
  if (all_zero) throw InvalidArgument("rank vector describes zero");
}

BigInt semisimple_class_size(const SemisimpleProfile& p) {
  p.validate();
  BigInt out = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k)
    if (p.ranks[k] > 0) out *= gl_order(p.ranks[k], p.factors[k].q);
  return out;
}

BigInt semisimple_vertex_degree(const SemisimpleProfile& p) {
  p.validate();
  BigInt one_side = 1, both = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k) {
    const std::uint64_t n = p.factors[k].n, q = p.factors[k].q, rest = n - p.ranks[k];
    one_side *= big_pow(q, n * rest);
    both *= big_pow(q, rest * rest);
  }
  return 2 * one_side - both - 1 - (p.squares_to_zero ? 1 : 0);
}

BigInt semisimple_vertex_degree_product_form(const SemisimpleProfile& p) {
  p.validate();
  BigInt out = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k) {
    const std::uint64_t n = p.factors[k].n, q = p.factors[k].q, rest = n - p.ranks[k];
    if (p.ranks[k] == 0) {
      out *= big_pow(q, n * n);
    } else {
      out *= 2 * big_pow(q, n * rest) - big_pow(q, rest * rest);
    }
  }
  return out - 1;
}

BigInt semisimple_class_degree(const SemisimpleProfile& p) {
  p.validate();
  BigInt one_side = 1, both = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k) {
    const long n = p.factors[k].n, rest = n - static_cast<long>(p.ranks[k]);
    const std::uint64_t q = p.factors[k].q;
    BigInt cross = 0, square = 0;
    for (long i = 0; i <= rest; ++i) {
      const BigInt a = q_binomial(rest, i, q);
      cross += a * q_binomial(n, i, q);
      square += a * a;
    }
    one_side *= cross;
    both *= square;
  }
  return 2 * one_side - both - 1 - (p.squares_to_zero ? 1 : 0);
}

BigInt semisimple_class_degree_product_form(const SemisimpleProfile& p) {
  p.validate();
  BigInt out = 1;
  for (std::size_t k = 0; k < p.factors.size(); ++k) {
    const long n = p.factors[k].n, rest = n - static_cast<long>(p.ranks[k]);
    const std::uint64_t q = p.factors[k].q;
    BigInt term = 0;
    if (p.ranks[k] == 0) {
      for (long i = 1; i <= n - 1; ++i) {
        const BigInt c = q_binomial(n, i, q);
        term += c * c;
      }
    } else {
      for (long i = 1; i <= rest; ++i) {
        const BigInt a = q_binomial(rest, i, q);
        term += 2 * a * q_binomial(n, i, q) - a * a;
      }
    }
    out *= term;
  }
  return out - 1;
}

BooleanSkeleton boolean_skeleton(const std::vector<std::uint64_t>& q) {
  const unsigned t = static_cast<unsigned>(q.size());
  if (t < 2) throw InvalidArgument("a Boolean skeleton needs at least two fields");
  if (t > 20) throw InvalidArgument("too many factors for an explicit skeleton");
  for (auto qi : q) require_q(qi);
  BooleanSkeleton s;
  s.t = t;
  s.q = q;
  const std::uint32_t full = (std::uint32_t{1} << t) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    BigInt size = 1, vdeg = 1;
    for (unsigned i = 0; i < t; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        size *= q[i] - 1;
      } else {
        vdeg *= q[i];
      }
    }
    s.supports.push_back(mask);
    s.class_sizes.push_back(size);
    s.vertex_degrees.push_back(vdeg - 1);
    s.class_degrees.push_back((std::uint64_t{1} << (t - static_cast<unsigned>(std::popcount(mask)))) - 1);
  }
  for (std::size_t i = 0; i < s.supports.size(); ++i)
    for (std::size_t j = i + 1; j < s.supports.size(); ++j)
      if ((s.supports[i] & s.supports[j]) == 0) s.edges.emplace_back(i, j);
  return s;
}

}  // namespace zdg
