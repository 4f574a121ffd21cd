#include "doctest.h"
#include "zdg/error.hpp"
#include "zdg/field.hpp"

using namespace zdg;

namespace {

using Poly = std::vector<std::uint64_t>;

// Naive polynomial remainder over F_p, coefficients constant term first.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    a.pop_back();
  }
  return a;
}

// Irreducible iff no monic polynomial of degree 1..deg-1 divides it.
bool oracle_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d < deg; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (auto x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("smallest irreducible moduli") {
  CHECK(smallest_irreducible(2, 1) == Poly{0, 1});
  CHECK(smallest_irreducible(2, 2) == Poly{1, 1, 1});
  CHECK(smallest_irreducible(3, 2) == Poly{1, 0, 1});
}

TEST_CASE("chosen modulus is irreducible and lexicographically first") {
  const std::pair<std::uint64_t, unsigned> cases[] = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  for (auto [p, k] : cases) {
    const Poly chosen = smallest_irreducible(p, k);
    CHECK(oracle_irreducible(chosen, p));
    // Enumerate monic candidates with the constant term as the most
    // significant digit and stop at the first irreducible one.
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    Poly first;
    for (std::uint64_t code = 0; code < total && first.empty(); ++code) {
      Poly f(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = k; i-- > 0;) {
        f[i] = c % p;
        c /= p;
      }
      f[k] = 1;
      if (oracle_irreducible(f, p)) first = f;
    }
    CHECK(chosen == first);
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  const std::pair<std::uint64_t, unsigned> cases[] = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}};
  for (auto [p, k] : cases) {
    FieldTable f(p, k);
    const auto q = f.order();
    for (std::uint64_t a = 0; a < q; ++a) {
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        // Frobenius is additive.
        CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
        for (std::uint64_t c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    }
    CHECK_THROWS_AS(f.inv(0), InvalidArgument);
  }
}

TEST_CASE("GF(4) labels follow coefficient order") {
  FieldTable f(2, 2);
  CHECK(f.label(0) == "0");
  CHECK(f.label(1) == "1");
  CHECK(f.label(2) == "x");
  CHECK(f.label(3) == "x+1");
  // x * x = x + 1 modulo x^2 + x + 1
  CHECK(f.mul(2, 2) == 3);
  FieldTable g(3, 2);
  CHECK(g.mul(3, 3) == 2);  // x^2 = -1 = 2 modulo x^2 + 1
}
