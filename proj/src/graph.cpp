#include "zdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

std::size_t ZeroDivisorGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::size_t i = 0; i < order(); ++i) twice += adjacency.row_count(i);
  return twice / 2;
}

std::optional<std::size_t> ZeroDivisorGraph::index_of(RingElement a) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), a);
  if (it == vertices.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t ZeroDivisorGraph::vertex_index(RingElement a) const {
  if (auto i = index_of(a)) return *i;
  throw InvalidArgument("element " + std::to_string(a.code) + " is not a vertex of the zero-divisor graph of " +
                        ring.descriptor().to_string());
}

ZeroDivisorGraph build_zdg(const Ring& ring, std::uint64_t element_cap, std::size_t graph_cap) {
  ZeroDivisorGraph g{ring, ring.zero_divisors(element_cap), {}};
  const std::size_t n = g.order();
  if (n > graph_cap) {
    throw CapExceeded(ring.descriptor().to_string() + " has " + std::to_string(n) +
                      " zero-divisors, above the graph cap " + std::to_string(graph_cap));
  }
  g.adjacency = BitMatrix(n);
  const bool commutative = ring.is_commutative();
  const auto& vs = g.vertices;

  if (const auto* zn = std::get_if<ZnSpec>(&ring.descriptor().kind())) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (nt::divides_product(zn->n, vs[i].code, vs[j].code)) {
          g.adjacency.set(i, j);
          g.adjacency.set(j, i);
        }
    return g;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = ring.mul(vs[i], vs[j]) == ring.zero();
      if (!edge && !commutative) edge = ring.mul(vs[j], vs[i]) == ring.zero();
      if (edge) {
        g.adjacency.set(i, j);
        g.adjacency.set(j, i);
      }
    }
  }
  return g;
}

std::vector<RingElement> annihilator_set(const Ring& ring, RingElement a, std::uint64_t element_cap) {
  if (a == ring.zero() || ring.is_unit(a)) {
    throw InvalidArgument("annihilator_set needs a nonzero zero-divisor, got " + ring.label(a));
  }
  std::vector<RingElement> out;
  for (auto x : ring.zero_divisors(element_cap)) {
    if (ring.mul(a, x) == ring.zero() || ring.mul(x, a) == ring.zero()) out.push_back(x);
  }
  return out;
}

std::vector<RingElement> neighborhood(const ZeroDivisorGraph& g, RingElement a) {
  const std::size_t i = g.vertex_index(a);
  std::vector<RingElement> out;
  g.adjacency.for_each_in_row(i, [&](std::size_t j) { out.push_back(g.vertices[j]); });
  return out;
}

std::size_t degree(const ZeroDivisorGraph& g, RingElement a) { return g.adjacency.row_count(g.vertex_index(a)); }

namespace {

void check_nontrivial_divisor(std::uint64_t n, std::uint64_t d) {
  if (n < 2 || d <= 1 || d >= n || n % d != 0) {
    throw InvalidArgument(std::to_string(d) + " is not a nontrivial divisor of " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t degree_zn(std::uint64_t n, std::uint64_t d) {
  check_nontrivial_divisor(n, d);
  std::uint64_t total = 0;
  for (auto e : nt::divisors(n)) {
    if (e == 1 || e == n) continue;
    if (nt::divides_product(n, d, e)) total += nt::euler_phi(n / e);
  }
  if (nt::divides_product(n, d, d)) --total;
  return total;
}

std::uint64_t degree_zn_sum_form(std::uint64_t n, std::uint64_t d) {
  check_nontrivial_divisor(n, d);
  const auto fac = nt::factorize(n);
  std::vector<unsigned> alpha(fac.size(), 0);
  for (std::size_t i = 0; i < fac.size(); ++i) {
    std::uint64_t m = d;
    while (m % fac[i].prime == 0) {
      m /= fac[i].prime;
      ++alpha[i];
    }
  }
  // Odometer over beta_i in [k_i - alpha_i, k_i].
  std::vector<unsigned> beta(fac.size());
  for (std::size_t i = 0; i < fac.size(); ++i) beta[i] = fac[i].exponent - alpha[i];
  std::uint64_t total = 0;
  while (true) {
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < fac.size(); ++i) {
      const unsigned top = fac[i].exponent - beta[i];
      if (top > 0) term *= *nt::checked_pow(fac[i].prime, top) - *nt::checked_pow(fac[i].prime, top - 1);
    }
    total += term;
    std::size_t i = 0;
    while (i < fac.size() && beta[i] == fac[i].exponent) {
      beta[i] = fac[i].exponent - alpha[i];
      ++i;
    }
    if (i == fac.size()) break;
    ++beta[i];
  }
  return total;
}

BigInt degree_matring(unsigned n, std::uint64_t q, unsigned r, bool squares_to_zero) {
  if (n < 2 || r < 1 || r >= n) {
    throw InvalidArgument("degree_matring needs 1 <= r <= n-1 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  if (q < 2) throw InvalidArgument("q must be at least 2");
  const BigInt bq = q;
  BigInt value = 2 * boost::multiprecision::pow(bq, n * (n - r)) - boost::multiprecision::pow(bq, (n - r) * (n - r)) - 1;
  if (squares_to_zero) value -= 1;
  return value;
}

std::vector<std::vector<std::size_t>> connected_components(const ZeroDivisorGraph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      g.adjacency.for_each_in_row(comp[head], [&](std::size_t j) {
        if (!seen[j]) {
          seen[j] = true;
          comp.push_back(j);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string edge_list_text(const ZeroDivisorGraph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.order(); ++i) {
    g.adjacency.for_each_in_row(i, [&](std::size_t j) {
      if (j > i) os << g.ring.label(g.vertices[i]) << ' ' << g.ring.label(g.vertices[j]) << '\n';
    });
  }
  return os.str();
}

}  // namespace zdg
