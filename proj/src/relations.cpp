#include "zdg/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zdg/error.hpp"
#include "zdg/field_linalg.hpp"
#include "zdg/number_theory.hpp"

namespace zdg {

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::associate: return "associate";
    case Relation::neighborhood: return "neighborhood";
    case Relation::annihilator: return "annihilator";
  }
  return "?";
}

const char* to_string(CellKind k) noexcept {
  switch (k) {
    case CellKind::complete: return "complete";
    case CellKind::null: return "null";
    case CellKind::unset: return "unset";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "associate") return Relation::associate;
  if (text == "neighborhood") return Relation::neighborhood;
  if (text == "annihilator") return Relation::annihilator;
  throw InvalidArgument("unknown relation '" + std::string(text) + "'");
}

std::vector<std::size_t> ClassPartition::class_index() const {
  std::vector<std::size_t> out(vertex_count, 0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto v : classes[c].members) out[v] = c;
  return out;
}

bool ClassPartition::same_blocks(const ClassPartition& other) const {
  if (vertex_count != other.vertex_count || classes.size() != other.classes.size()) return false;
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].members != other.classes[c].members) return false;
  return true;
}

bool ClassPartition::refines(const ClassPartition& coarser) const {
  if (vertex_count != coarser.vertex_count) return false;
  const auto idx = coarser.class_index();
  for (const auto& c : classes)
    for (auto v : c.members)
      if (idx[v] != idx[c.representative()]) return false;
  return true;
}

namespace {

// Groups vertices by key; classes come out in order of their smallest member.
template <typename Key>
ClassPartition group_by_key(const std::vector<Key>& keys, Relation relation) {
  ClassPartition p;
  p.relation = relation;
  p.vertex_count = keys.size();
  std::map<Key, std::size_t> seen;
  for (std::size_t v = 0; v < keys.size(); ++v) {
    auto [it, fresh] = seen.try_emplace(keys[v], p.classes.size());
    if (fresh) p.classes.emplace_back();
    p.classes[it->second].members.push_back(v);
  }
  return p;
}

void assign_square_kinds(ClassPartition& p, const Ring& ring, const std::vector<RingElement>& vertices) {
  for (auto& c : p.classes) {
    const auto x = vertices[c.representative()];
    c.kind = ring.mul(x, x) == ring.zero() ? CellKind::complete : CellKind::null;
  }
}

std::size_t position_in(const std::vector<RingElement>& sorted, RingElement a) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), a) - sorted.begin());
}

}  // namespace

ClassPartition classes_associate(const Ring& ring, std::uint64_t element_cap) {
  const auto zds = ring.zero_divisors(element_cap);
  const auto units = ring.units(element_cap);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(zds.size(), kNone);
  ClassPartition p;
  p.relation = Relation::associate;
  p.vertex_count = zds.size();
  std::vector<RingElement> left;
  for (std::size_t i = 0; i < zds.size(); ++i) {
    if (owner[i] != kNone) continue;
    const auto a = zds[i];
    left.clear();
    for (auto u : units) left.push_back(ring.mul(u, a));
    std::sort(left.begin(), left.end());
    std::set<std::size_t> members;
    for (auto v : units) {
      const auto b = ring.mul(a, v);
      if (std::binary_search(left.begin(), left.end(), b)) members.insert(position_in(zds, b));
    }
    EquivalenceClass cls;
    for (auto m : members) {
      if (owner[m] != kNone) throw Error("associate classes overlap at " + ring.label(zds[m]));
      owner[m] = p.classes.size();
      cls.members.push_back(m);
    }
    p.classes.push_back(std::move(cls));
  }
  assign_square_kinds(p, ring, zds);
  return p;
}

ClassPartition classes_associate_zn(std::uint64_t n, std::uint64_t element_cap) {
  const Ring ring(RingDescriptor::zn(n));
  const auto zds = ring.zero_divisors(element_cap);
  std::vector<std::uint64_t> keys;
  keys.reserve(zds.size());
  for (auto a : zds) keys.push_back(std::gcd(a.code, n));
  // The smallest member of A_d is d, so key order and first-occurrence order agree.
  auto p = group_by_key(keys, Relation::associate);
  for (auto& c : p.classes) {
    const std::uint64_t d = zds[c.representative()].code;
    c.kind = nt::divides_product(n, d, d) ? CellKind::complete : CellKind::null;
  }
  return p;
}

ClassPartition classes_associate_matrix(const Ring& ring, std::uint64_t element_cap) {
  const auto& f = ring.field();
  const unsigned n = ring.matrix_order();
  const auto zds = ring.zero_divisors(element_cap);
  std::vector<std::pair<Subspace, Subspace>> keys;
  keys.reserve(zds.size());
  for (auto a : zds) {
    FieldMatrix m(n, n);
    m.data = ring.matrix_entries(a);
    keys.emplace_back(row_space(f, m), column_space(f, m));
  }
  auto p = group_by_key(keys, Relation::associate);
  assign_square_kinds(p, ring, zds);
  return p;
}

ClassPartition classes_product(const Ring& ring, std::span<const ClassPartition> factor_partitions,
                               std::uint64_t element_cap) {
  const std::size_t t = ring.factor_count();
  if (factor_partitions.size() != t) throw InvalidArgument("one partition per factor is required");
  // Per factor, label every element: 0 for zero, 1 for units, 2 + c for class c.
  std::vector<std::vector<std::size_t>> labels(t);
  for (std::size_t i = 0; i < t; ++i) {
    const Ring fi = ring.factor(i);
    const auto zds = fi.zero_divisors(element_cap);
    if (factor_partitions[i].vertex_count != zds.size()) throw InvalidArgument("factor partition size mismatch");
    const auto idx = factor_partitions[i].class_index();
    auto& lab = labels[i];
    lab.assign(fi.cardinality(), 1);
    lab[0] = 0;
    for (std::size_t v = 0; v < zds.size(); ++v) lab[zds[v].code] = 2 + idx[v];
  }
  const auto zds = ring.zero_divisors(element_cap);
  std::vector<std::vector<std::size_t>> keys;
  keys.reserve(zds.size());
  for (auto a : zds) {
    std::vector<std::size_t> key(t);
    for (std::size_t i = 0; i < t; ++i) key[i] = labels[i][ring.component(a, i).code];
    keys.push_back(std::move(key));
  }
  auto p = group_by_key(keys, Relation::associate);
  assign_square_kinds(p, ring, zds);
  return p;
}

ClassPartition classes_product(const Ring& ring, std::uint64_t element_cap) {
  std::vector<ClassPartition> parts;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) parts.push_back(classes_associate_fast(ring.factor(i), element_cap));
  return classes_product(ring, parts, element_cap);
}

ClassPartition classes_associate_fast(const Ring& ring, std::uint64_t element_cap) {
  const auto& d = ring.descriptor();
  if (const auto* zn = std::get_if<ZnSpec>(&d.kind())) return classes_associate_zn(zn->n, element_cap);
  if (d.is_galois() || d.is_matrix()) return classes_associate_matrix(ring, element_cap);
  return classes_product(ring, element_cap);
}

ClassPartition classes_neighborhood(const ZeroDivisorGraph& g) {
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto row = g.adjacency.row(v);
    keys.emplace_back(row.begin(), row.end());
  }
  auto p = group_by_key(keys, Relation::neighborhood);
  for (auto& c : p.classes) c.kind = CellKind::null;
  return p;
}

ClassPartition classes_neighborhood_masked(const ZeroDivisorGraph& g) {
  const std::size_t n = g.order();
  auto masked_equal = [&](std::size_t a, std::size_t b) {
    const auto ra = g.adjacency.row(a);
    const auto rb = g.adjacency.row(b);
    for (std::size_t k = 0; k < ra.size(); ++k) {
      std::uint64_t mask = ~std::uint64_t{0};
      if (a / 64 == k) mask &= ~(std::uint64_t{1} << (a % 64));
      if (b / 64 == k) mask &= ~(std::uint64_t{1} << (b % 64));
      if ((ra[k] & mask) != (rb[k] & mask)) return false;
    }
    return true;
  };
  ClassPartition p;
  p.relation = Relation::neighborhood;
  p.vertex_count = n;
  std::vector<bool> taken(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (taken[a]) continue;
    EquivalenceClass cls;
    cls.kind = CellKind::null;
    for (std::size_t b = a; b < n; ++b) {
      if (!taken[b] && masked_equal(a, b)) {
        taken[b] = true;
        cls.members.push_back(b);
      }
    }
    p.classes.push_back(std::move(cls));
  }
  return p;
}

ClassPartition classes_annihilator(const ZeroDivisorGraph& g) {
  std::vector<std::vector<std::uint64_t>> keys;
  keys.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto row = g.adjacency.row(v);
    std::vector<std::uint64_t> key(row.begin(), row.end());
    const auto a = g.vertices[v];
    if (g.ring.mul(a, a) == g.ring.zero()) key[v / 64] |= std::uint64_t{1} << (v % 64);
    keys.push_back(std::move(key));
  }
  return group_by_key(keys, Relation::annihilator);
}

ClassPartition compute_partition(const ZeroDivisorGraph& g, Relation relation) {
  switch (relation) {
    case Relation::associate: return classes_associate_fast(g.ring, g.ring.cardinality());
    case Relation::neighborhood: return classes_neighborhood(g);
    case Relation::annihilator: return classes_annihilator(g);
  }
  throw InvalidArgument("unknown relation");
}

bool AgreementReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return !c.applicable || c.passed; });
}

namespace {

std::string first_difference(const ClassPartition& a, const ClassPartition& b, const ZeroDivisorGraph& g) {
  const auto ia = a.class_index();
  const auto ib = b.class_index();
  for (std::size_t v = 0; v < a.vertex_count; ++v) {
    if (a.classes[ia[v]].members != b.classes[ib[v]].members) {
      return "classes of " + g.ring.label(g.vertices[v]) + " differ (sizes " +
             std::to_string(a.classes[ia[v]].size()) + " and " + std::to_string(b.classes[ib[v]].size()) + ")";
    }
  }
  return "partitions differ";
}

AgreementCheck compare(std::string name, bool applicable, const ClassPartition& a, const ClassPartition& b,
                       const ZeroDivisorGraph& g) {
  AgreementCheck c{std::move(name), applicable, true, {}};
  if (!applicable) return c;
  c.passed = a.same_blocks(b);
  if (!c.passed) c.detail = first_difference(a, b, g);
  return c;
}

}  // namespace

AgreementReport check_relation_agreements(const Ring& ring, std::uint64_t element_cap) {
  AgreementReport report;
  report.ring = ring.descriptor().to_string();
  const auto g = build_zdg(ring, element_cap);
  const auto generic = classes_associate(ring, element_cap);
  const auto fast = classes_associate_fast(ring, element_cap);
  const auto approx = classes_neighborhood(g);
  const auto ann = classes_annihilator(g);

  std::vector<bool> square_zero(g.order());
  bool reduced = true;
  for (std::size_t v = 0; v < g.order(); ++v) {
    square_zero[v] = ring.mul(g.vertices[v], g.vertices[v]) == ring.zero();
    if (square_zero[v]) reduced = false;
  }

  report.checks.push_back(compare("structural associate classes equal the generic ones", true, fast, generic, g));

  {
    AgreementCheck c{"associate refines annihilator", true, generic.refines(ann), {}};
    if (!c.passed) c.detail = "an associate class straddles two annihilator classes";
    report.checks.push_back(c);
  }

  report.checks.push_back(compare("reduced ring: neighborhood equals annihilator", reduced, approx, ann, g));

  {
    bool hypothesis = false;
    const auto one = ring.one();
    for (auto u : ring.units(element_cap)) {
      const auto w = ring.sub(one, u);
      if (ring.is_commutative() ? ring.mul(w, w) != ring.zero() : ring.is_unit(w)) {
        hypothesis = true;
        break;
      }
    }
    AgreementCheck c{"unit hypothesis: neighborhood classes match annihilator classes off the square-zero set",
                     hypothesis, true, {}};
    if (hypothesis) {
      const auto ia = approx.class_index();
      const auto im = ann.class_index();
      for (std::size_t v = 0; v < g.order() && c.passed; ++v) {
        const auto& ca = approx.classes[ia[v]].members;
        if (square_zero[v]) {
          if (ca.size() != 1) {
            c.passed = false;
            c.detail = ring.label(g.vertices[v]) + " squares to zero but its neighborhood class is not a singleton";
          }
        } else if (ca != ann.classes[im[v]].members) {
          c.passed = false;
          c.detail = "neighborhood and annihilator classes of " + ring.label(g.vertices[v]) + " differ";
        }
      }
    }
    report.checks.push_back(c);
  }

  {
    const auto* zn = std::get_if<ZnSpec>(&ring.descriptor().kind());
    ClassPartition gcd;
    if (zn != nullptr) gcd = classes_associate_zn(zn->n, element_cap);
    report.checks.push_back(compare("Z_n: associate classes are the gcd classes", zn != nullptr, generic, gcd, g));
  }

  report.checks.push_back(
      compare("semisimple: associate equals annihilator", ring.descriptor().is_semisimple(), generic, ann, g));
  return report;
}

}  // namespace zdg
