#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/spectra.hpp"

using namespace zdg;

namespace {

Ring ring(const char* spec) { return Ring(parse_ring_spec(spec)); }

void check_close(const std::vector<double>& got, std::vector<double> want, double tol = 1e-9) {
  REQUIRE(got.size() == want.size());
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < tol);
}

using CellKey = std::tuple<std::uint64_t, CellKind, std::uint64_t>;

std::multiset<CellKey> cell_keys(const JoinDecomposition& d) {
  std::multiset<CellKey> out;
  for (const auto& c : d.cells) out.insert({c.size, c.kind, c.neighbor_sum});
  return out;
}

DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("Z_8: star with a looped centre") {
  const auto d = decompose_zn(8);
  const double r2 = std::sqrt(2.0);
  const auto ca = quotient_adjacency(d);
  const auto cn = quotient_laplacian(d);
  REQUIRE(ca.rows == 2);
  // Classes ordered by gcd: {2, 6} then {4}.
  CHECK(ca(0, 0) == 0.0);
  CHECK(ca(1, 1) == 0.0);
  CHECK(ca(0, 1) == doctest::Approx(r2));
  CHECK(cn(0, 0) == 1.0);
  CHECK(cn(1, 1) == 2.0);
  CHECK(cn(0, 1) == doctest::Approx(-r2));
  check_close(assemble_adjacency_spectrum(d).values, {-r2, 0.0, r2});
  check_close(assemble_laplacian_spectrum(d).values, {0.0, 1.0, 3.0});
  CHECK(d.cells[1].kind == CellKind::complete);
}

TEST_CASE("Z_9 and Z_6") {
  const auto d9 = decompose_zn(9);
  REQUIRE(d9.cell_count() == 1);
  CHECK(quotient_adjacency(d9)(0, 0) == 1.0);
  check_close(assemble_adjacency_spectrum(d9).values, {-1.0, 1.0});
  check_close(assemble_laplacian_spectrum(d9).values, {0.0, 2.0});

  const auto s6 = spectrum_zn(6);
  check_close(s6.adjacency.values, {-std::sqrt(2.0), 0.0, std::sqrt(2.0)});
  check_close(s6.laplacian.values, {0.0, 1.0, 3.0});
  CHECK(spectrum_zn(7).adjacency.values.empty());
}

TEST_CASE("Z_18 cells under both relations") {
  const auto d = decompose_zn(18);
  std::vector<std::uint64_t> sizes;
  std::vector<CellKind> kinds;
  for (const auto& c : d.cells) {
    sizes.push_back(c.size);
    kinds.push_back(c.kind);
  }
  CHECK(sizes == std::vector<std::uint64_t>{6, 2, 2, 1});
  CHECK(kinds == std::vector<CellKind>{CellKind::null, CellKind::null, CellKind::complete, CellKind::null});

  const auto g = build_zdg(ring("Zn(18)"));
  const auto nb = decompose(g, classes_neighborhood(g));
  std::multiset<std::uint64_t> nsizes;
  for (const auto& c : nb.cells) nsizes.insert(c.size);
  CHECK(nsizes == std::multiset<std::uint64_t>{6, 2, 1, 1, 1});
}

TEST_CASE("join route agrees with direct eigensolve on Z_n, n <= 200") {
  for (std::uint64_t n = 4; n <= 200; ++n) {
    if (nt::is_prime(n)) continue;
    CAPTURE(n);
    const auto g = build_zdg(Ring(RingDescriptor::zn(n)));
    const auto direct_a = brute_spectrum(g, Flavor::adjacency);
    const auto direct_l = brute_spectrum(g, Flavor::laplacian);

    const auto closed = decompose_zn(n);
    const auto assoc = decompose(g, classes_associate_zn(n));
    CHECK(cell_keys(closed) == cell_keys(assoc));
    CHECK(closed.vertex_count() == g.order());

    for (const auto* d : {&closed, &assoc}) {
      CHECK(multiset_equal(assemble_adjacency_spectrum(*d).values, direct_a.values).matched);
      CHECK(multiset_equal(assemble_laplacian_spectrum(*d).values, direct_l.values).matched);
    }
    const auto nb = decompose(g, classes_neighborhood(g));
    CHECK(multiset_equal(assemble_adjacency_spectrum(nb).values, direct_a.values).matched);
    CHECK(multiset_equal(assemble_laplacian_spectrum(nb).values, direct_l.values).matched);
  }
}

TEST_CASE("spectral identities on assembled spectra") {
  for (const char* spec : {"Zn(12)", "Zn(36)", "Zn(64)", "Zn(90)", "M(2,GF(3))", "Zn(2)xZn(2)xZn(3)"}) {
    CAPTURE(spec);
    const auto r = ring(spec);
    const auto g = build_zdg(r);
    const auto d = decompose(g, classes_associate_fast(r));
    const auto a = assemble_adjacency_spectrum(d);
    const auto l = assemble_laplacian_spectrum(d);
    double sum_a = 0.0, sum_a2 = 0.0, sum_l = 0.0;
    for (double v : a.values) {
      sum_a += v;
      sum_a2 += v * v;
    }
    for (double v : l.values) sum_l += v;
    const double twice_edges = 2.0 * static_cast<double>(g.edge_count());
    CHECK(std::abs(sum_a) < 1e-7);
    CHECK(sum_a2 == doctest::Approx(twice_edges).epsilon(1e-9));
    CHECK(sum_l == doctest::Approx(twice_edges).epsilon(1e-9));
    const auto zeros = std::count_if(l.values.begin(), l.values.end(), [](double v) { return std::abs(v) < 1e-7; });
    CHECK(static_cast<std::size_t>(zeros) == connected_components(g).size());
    CHECK(blow_up(d) == g.adjacency);

    std::size_t from_cells = 0;
    for (auto s : a.provenance) from_cells += s == ValueSource::cell;
    CHECK(from_cells == g.order() - d.cell_count());
  }
}

TEST_CASE("decompose rejects partitions that are not join-compatible") {
  const auto g = build_zdg(ring("Zn(8)"));
  ClassPartition whole;
  whole.relation = Relation::associate;
  whole.vertex_count = g.order();
  EquivalenceClass c;
  for (std::size_t i = 0; i < g.order(); ++i) c.members.push_back(i);
  c.kind = CellKind::unset;
  whole.classes.push_back(c);
  CHECK_THROWS_AS(decompose(g, whole), VerificationError);

  const auto g12 = build_zdg(ring("Zn(12)"));
  // Merging the classes of 2 and 3 breaks the all-or-nothing rule.
  auto p = classes_associate_zn(12);
  ClassPartition bad = p;
  bad.classes.clear();
  EquivalenceClass merged;
  for (const auto& cls : p.classes) {
    const auto label = g12.vertices[cls.representative()].code;
    if (label == 2 || label == 3) {
      merged.members.insert(merged.members.end(), cls.members.begin(), cls.members.end());
    } else {
      bad.classes.push_back(cls);
    }
  }
  merged.kind = CellKind::unset;
  std::sort(merged.members.begin(), merged.members.end());
  bad.classes.push_back(merged);
  CHECK_THROWS_AS(decompose(g12, bad), VerificationError);
}

TEST_CASE("closed-form semisimple decomposition matches enumeration") {
  for (const char* spec : {"M(2,GF(2))", "M(2,GF(3))", "Zn(2)xZn(3)", "Zn(30)", "GF(4)xGF(2)", "M(2,GF(2))xGF(2)",
                           "M(2,GF(4))", "Zn(2)xZn(2)xZn(2)"}) {
    CAPTURE(spec);
    const auto desc = parse_ring_spec(spec);
    const Ring r(desc);
    const auto g = build_zdg(r);
    const auto closed = decompose_semisimple(desc);
    const auto enumerated = decompose(g, classes_associate_fast(r));
    CHECK(closed.vertex_count() == g.order());
    CHECK(cell_keys(closed) == cell_keys(enumerated));
    CHECK(multiset_equal(assemble_adjacency_spectrum(closed).values, brute_spectrum(g, Flavor::adjacency).values)
              .matched);
    CHECK(multiset_equal(assemble_laplacian_spectrum(closed).values, brute_spectrum(g, Flavor::laplacian).values)
              .matched);
  }
}

TEST_CASE("closed-form route on rings too large to enumerate") {
  const auto d = decompose_semisimple(parse_ring_spec("M(3,GF(3))"));
  // 3^9 elements minus |GL_3(F_3)| = 11232 units minus zero.
  CHECK(d.vertex_count() == 19683 - 11232 - 1);
  const auto a = assemble_adjacency_spectrum(d);
  CHECK(a.size() == d.vertex_count());
  double sum = 0.0;
  for (double v : a.values) sum += v;
  CHECK(std::abs(sum) < 1e-6);

  const auto pair = spectrum_semisimple(parse_ring_spec("M(3,GF(3))"));
  CHECK(multiset_equal(pair.adjacency.values, a.values).matched);
  CHECK_THROWS_AS(decompose_semisimple(parse_ring_spec("M(3,GF(3))"), 1000), CapExceeded);
  CHECK_THROWS_AS(decompose_semisimple(parse_ring_spec("Zn(4)")), InvalidArgument);
}

TEST_CASE("clusters and multiset comparison") {
  SpectrumMultiset s;
  s.values = {-1.0, -1.0 + 1e-9, 0.0, 2.0, 2.0, 2.0};
  const auto c = s.clusters();
  REQUIRE(c.size() == 3);
  CHECK(c[0].multiplicity == 2);
  CHECK(c[2].value == doctest::Approx(2.0));
  CHECK(c[2].multiplicity == 3);

  CHECK(multiset_equal({1.0, 2.0}, {2.0, 1.0}).matched);
  const auto bad = multiset_equal({1.0}, {1.0, 2.0});
  CHECK(bad.length_mismatch);
  CHECK_FALSE(bad.matched);
  CHECK(multiset_equal({1.0}, {1.1}).max_deviation == doctest::Approx(0.1));
}

TEST_CASE("Fiedler combination on random symmetric pairs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> rho_dist(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 5;
    const auto a = random_symmetric(rng, m);
    const auto b = random_symmetric(rng, n);
    const auto rep = check_fiedler(a, rng() % m, b, rng() % n, rho_dist(rng));
    CHECK(rep.passed);
    CHECK(rep.combined.size() == m + n);
  }
  CHECK_THROWS_AS(fiedler_combine({1.0}, {0.5}, {1.0}, {1.0}, 1.0), InvalidArgument);
  // ρ = 0 leaves both spectra untouched.
  check_close(fiedler_combine({3.0, 1.0}, {1.0, 0.0}, {2.0}, {1.0}, 0.0), {1.0, 2.0, 3.0});
}

TEST_CASE("shift lemma on random commuting pairs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 6;
    // B diagonal with repeated entries; A supported where B's entries agree.
    std::vector<double> levels{dist(rng), dist(rng), dist(rng)};
    std::vector<double> b(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = levels[rng() % levels.size()];
      d[i] = dist(rng);
    }
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (b[i] == b[j]) a(i, j) = a(j, i) = dist(rng);
    const auto rep = check_shift_lemma(b, a, d);
    CHECK(rep.passed);
    CHECK(rep.max_residual < 1e-8);
  }
  DenseMatrix a(2, 2);
  a(0, 1) = a(1, 0) = 1.0;
  CHECK_THROWS_AS(check_shift_lemma({1.0, 2.0}, a, {1.0, 1.0}), InvalidArgument);
}

TEST_CASE("duplication lift: worked example and edge cases") {
  DenseMatrix b(3, 3);
  b(0, 0) = -1.0;
  b(0, 2) = 1.0;
  b(1, 1) = 2.0;
  b(2, 2) = 1.0;

  const auto r = duplicate_lift(b, 1, 2, 2.0, {0.0, 1.0, 0.0});
  CHECK(r.status == LiftStatus::ok);
  CHECK(r.mu == doctest::Approx(4.0));
  CHECK(r.w == std::vector<double>{0.0, 1.0, 1.0, 0.0});
  const std::vector<double> expect{-1, 0, 0, 1, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 1};
  CHECK(r.duplicated.data == expect);
  CHECK(r.rayleigh == doctest::Approx(4.0));

  // v_j = 0 leaves the eigenvalue in place.
  const auto z = duplicate_lift(b, 1, 3, -1.0, {1.0, 0.0, 0.0});
  CHECK(z.status == LiftStatus::ok);
  CHECK(z.mu == -1.0);
  CHECK(z.w.size() == 5);

  const auto one = duplicate_lift(b, 0, 1, 2.0, {0.0, 1.0, 0.0});
  CHECK(one.status == LiftStatus::ok);
  CHECK(one.duplicated.data == b.data);

  DenseMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  const auto fail = duplicate_lift(swap, 0, 2, 1.0, {1.0, 1.0});
  CHECK(fail.status == LiftStatus::verification_failed);
  CHECK(fail.mu == doctest::Approx(1.5));
  CHECK_FALSE(fail.message.empty());
  CHECK(duplicate_lift(swap, 0, 2, -1.0, {1.0, -1.0}).status == LiftStatus::formula_inapplicable);

  CHECK_THROWS_AS(duplicate_lift(swap, 0, 2, 3.0, {1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(duplicate_lift(swap, 2, 2, 1.0, {1.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(duplicate_lift(swap, 0, 0, 1.0, {1.0, 1.0}), InvalidArgument);
}

TEST_CASE("duplication lift: column proportional to the eigenvector") {
  // When column j of B is c·v the lifted pair is an eigenpair with
  // μ = λ + c (m - 1) v_j, checked here against A w directly.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const std::size_t j = rng() % n;
    const std::size_t k0 = (j + 1) % n;
    const std::size_t m = 1 + rng() % 4;
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    v[k0] = 1.0 + std::abs(v[k0]);
    double vsum = 0.0;
    for (double x : v) vsum += x;
    if (std::abs(vsum) < 1e-3) continue;
    const double c = dist(rng), lambda = dist(rng);

    DenseMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) b(i, k) = k == j ? c * v[i] : dist(rng);
    for (std::size_t i = 0; i < n; ++i) {
      double rest = c * v[j] * v[i];
      for (std::size_t k = 0; k < n; ++k)
        if (k != j && k != k0) rest += b(i, k) * v[k];
      b(i, k0) = (lambda * v[i] - rest) / v[k0];
    }

    const auto r = duplicate_lift(b, j, m, lambda, v);
    REQUIRE(r.status == LiftStatus::ok);
    CHECK(r.mu == doctest::Approx(lambda + c * static_cast<double>(m - 1) * v[j]).epsilon(1e-9));
    const auto aw = r.duplicated.apply(r.w);
    for (std::size_t s = 0; s < aw.size(); ++s) CHECK(std::abs(aw[s] - r.mu * r.w[s]) < 1e-8);
  }
}

TEST_CASE("Boolean rings: reciprocal pairing of adjacency eigenvalues") {
  const auto two = spectrum_semisimple(parse_ring_spec("Zn(2)xZn(2)"));
  check_close(two.adjacency.values, {-1.0, 1.0});
  const auto p2 = boolean_pairing(two.adjacency);
  CHECK(p2.perfect);
  CHECK(p2.pairs.size() == 1);

  const auto three = spectrum_semisimple(parse_ring_spec("Zn(2)xZn(2)xZn(2)"));
  const auto p3 = boolean_pairing(three.adjacency);
  CHECK(p3.zero_count + 2 * p3.pairs.size() + p3.unmatched.size() == three.adjacency.size());
  for (const auto& [x, y] : p3.pairs) CHECK(x * y == doctest::Approx(-1.0).epsilon(1e-6));
}
