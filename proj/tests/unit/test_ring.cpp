#include <numeric>
#include <set>

#include "doctest.h"
#include "zdg/error.hpp"
#include "zdg/number_theory.hpp"
#include "zdg/ring.hpp"

using namespace zdg;

namespace {

Ring ring(const char* spec) { return Ring(parse_ring_spec(spec)); }

std::vector<std::uint64_t> codes(const std::vector<RingElement>& xs) {
  std::vector<std::uint64_t> out;
  for (auto x : xs) out.push_back(x.code);
  return out;
}

}  // namespace

TEST_CASE("parse_ring_spec accepts the grammar") {
  CHECK(parse_ring_spec("Zn(18)").cardinality() == 18);
  CHECK(parse_ring_spec("M(2,GF(2))").cardinality() == 16);
  CHECK(parse_ring_spec(" M( 2 , GF(9) ) ").cardinality() == 6561);
  CHECK(parse_ring_spec("GF(4)").is_galois());
  const auto p = parse_ring_spec("Zn(2) x Zn(3) x GF(5)");
  REQUIRE(p.is_product());
  CHECK(std::get<ProductSpec>(p.kind()).factors.size() == 3);
  CHECK(p.cardinality() == 30);
  CHECK(p.to_string() == "Zn(2)xZn(3)xGF(5)");
  CHECK(parse_ring_spec("M(2,GF(2))xGF(2)").to_string() == "M(2,GF(2))xGF(2)");
}

TEST_CASE("parse_ring_spec rejects malformed input with a position") {
  CHECK_THROWS_AS(parse_ring_spec("GF(6)"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zn(1)"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zn(0)"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("M(2,Zn(4))"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zn(4"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec(""), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zn(4)y"), ParseError);
  try {
    parse_ring_spec("Zn(4)xQ(3)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("element enumeration order") {
  CHECK(codes(ring("Zn(4)").elements()) == std::vector<std::uint64_t>{0, 1, 2, 3});
  const Ring gf4 = ring("GF(4)");
  std::vector<std::string> labels;
  for (auto a : gf4.elements()) labels.push_back(gf4.label(a));
  CHECK(labels == std::vector<std::string>{"0", "1", "x", "x+1"});
  const Ring m13 = ring("M(1,GF(3))");
  CHECK(m13.cardinality() == 3);
  CHECK(m13.mul(RingElement{2}, RingElement{2}).code == 1);
  CHECK(m13.is_unit(RingElement{2}));
  CHECK_THROWS_AS(ring("M(3,GF(4))").elements(), CapExceeded);
}

TEST_CASE("basic products and units") {
  const Ring z18 = ring("Zn(18)");
  CHECK(z18.mul(RingElement{3}, RingElement{6}).code == 0);
  const Ring z16 = ring("Zn(16)");
  CHECK(codes(z16.units()) == std::vector<std::uint64_t>{1, 3, 5, 7, 9, 11, 13, 15});
  CHECK(z16.is_unit(RingElement{3}));
  CHECK_FALSE(z16.is_unit(RingElement{8}));
  CHECK(codes(z16.zero_divisors()) == std::vector<std::uint64_t>{2, 4, 6, 8, 10, 12, 14});

  const Ring m = ring("M(2,GF(2))");
  const std::uint64_t e11[] = {1, 0, 0, 0};
  const std::uint64_t e22[] = {0, 0, 0, 1};
  const auto a = m.from_matrix_entries(e11);
  const auto b = m.from_matrix_entries(e22);
  CHECK(m.mul(a, b) == m.zero());
  CHECK_FALSE(m.is_unit(a));
  CHECK(m.label(a) == "[[1,0],[0,0]]");
  CHECK(m.zero_divisors().size() == 9);
  CHECK(ring("GF(7)").zero_divisors().empty());
  CHECK_THROWS_AS(z16.mul(RingElement{16}, RingElement{1}), InvalidArgument);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const char* spec : {"Zn(12)", "GF(8)", "GF(9)", "M(2,GF(2))", "Zn(2)xZn(3)", "M(2,GF(2))xGF(2)", "M(2,GF(3))"}) {
    CAPTURE(spec);
    const Ring r = ring(spec);
    const auto els = r.elements();
    const auto one = r.one();
    for (auto a : els) {
      REQUIRE(r.mul(a, one) == a);
      REQUIRE(r.mul(one, a) == a);
      REQUIRE(r.add(a, r.neg(a)) == r.zero());
      for (auto b : els) {
        REQUIRE(r.add(a, b) == r.add(b, a));
        for (auto c : els) {
          REQUIRE(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
          REQUIRE(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
          REQUIRE(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("is_unit agrees with an exhaustive two-sided inverse search") {
  for (const char* spec : {"Zn(36)", "GF(16)", "M(2,GF(2))", "M(2,GF(3))", "Zn(4)xGF(3)", "M(2,GF(2))xGF(2)", "Zn(2)xZn(2)xZn(2)"}) {
    CAPTURE(spec);
    const Ring r = ring(spec);
    const auto els = r.elements();
    for (auto a : els) {
      bool inverse = false;
      for (auto b : els) {
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) inverse = true;
      }
      REQUIRE(r.is_unit(a) == inverse);
    }
  }
}

TEST_CASE("zero_divisors agrees with the two-sided definition") {
  for (const char* spec : {"Zn(36)", "M(2,GF(2))", "M(2,GF(3))", "Zn(4)xGF(3)", "GF(8)xZn(2)"}) {
    CAPTURE(spec);
    const Ring r = ring(spec);
    const auto els = r.elements();
    std::vector<RingElement> expect;
    for (auto a : els) {
      if (a == r.zero()) continue;
      bool zd = false;
      for (auto b : els) {
        if (b == r.zero()) continue;
        if (r.mul(a, b) == r.zero() || r.mul(b, a) == r.zero()) zd = true;
      }
      if (zd) expect.push_back(a);
    }
    CHECK(r.zero_divisors() == expect);
  }
}

TEST_CASE("|Z(Z_n)| = n - phi(n) - 1") {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t a = 1; a <= n; ++a) phi += std::gcd(a, n) == 1;
    CHECK(Ring(RingDescriptor::zn(n)).zero_divisors().size() == n - phi - 1);
  }
}

TEST_CASE("product structure round-trips") {
  const Ring r = ring("Zn(4)xGF(3)xZn(2)");
  CHECK(r.factor_count() == 3);
  for (auto a : r.elements()) {
    std::vector<RingElement> parts;
    for (std::size_t i = 0; i < r.factor_count(); ++i) parts.push_back(r.component(a, i));
    CHECK(r.compose(parts) == a);
    CHECK(r.from_payload(r.payload(a)) == a);
  }
  // Component 0 is the most significant digit.
  const RingElement parts[] = {{1}, {0}, {0}};
  CHECK(r.compose(parts).code == 6);
  CHECK(r.label(RingElement{6}) == "(1,0,0)");
}

TEST_CASE("matrix rank and payloads") {
  const Ring r = ring("M(2,GF(3))");
  std::size_t by_rank[3] = {0, 0, 0};
  for (auto a : r.elements()) {
    ++by_rank[r.rank(a)];
    CHECK(r.from_payload(r.payload(a)) == a);
  }
  CHECK(by_rank[0] == 1);
  CHECK(by_rank[1] == 32);
  CHECK(by_rank[2] == 48);
  const Ring g = ring("GF(9)");
  for (auto a : g.elements()) CHECK(g.from_payload(g.payload(a)) == a);
}
