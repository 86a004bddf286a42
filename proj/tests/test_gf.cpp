#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscodim/gf.hpp"

using namespace grasscodim;

TEST_CASE("constructing invalid fields fails") {
  CHECK_THROWS_AS(Field(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field(1, 2), std::invalid_argument);
}

TEST_CASE("prime field arithmetic is arithmetic mod p") {
  Field f(7, 1);
  CHECK(f.q() == 7);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      CHECK(f.add(f.element(a), f.element(b)) == f.element((a + b) % 7));
      CHECK(f.mul(f.element(a), f.element(b)) == f.element(a * b % 7));
    }
  }
  CHECK(f.neg(f.element(3)) == f.element(4));
  CHECK(f.from_int(-1) == f.element(6));
  CHECK(f.from_int(10) == f.element(3));
}

// The reduction polynomial for GF(9) must be x^2 + 1: walking monic
// quadratics over GF(3) in increasing constant-first order, x^2 + 1 is the
// first with no root (0 -> 1, 1 -> 2, 2 -> 2).
TEST_CASE("GF(9) uses the least irreducible quadratic") {
  Field f(3, 2);
  CHECK(f.q() == 9);
  CHECK(f.reduction() == std::vector<int>{1, 0});
  // x * x = -1 = 2: element x has index 3, element 2 has index 2
  CHECK(f.mul(f.element(3), f.element(3)) == f.element(2));
}

static void check_field_axioms(Field& f) {
  int q = f.q();
  for (int a = 0; a < q; ++a) {
    Fe ea = f.element(a);
    CHECK(f.add(ea, f.zero()) == ea);
    CHECK(f.mul(ea, f.one()) == ea);
    CHECK(f.add(ea, f.neg(ea)) == f.zero());
    if (a != 0) {
      CHECK(f.mul(ea, f.inv(ea)) == f.one());
      // Fermat: x^q = x
      CHECK(f.pow(ea, static_cast<unsigned>(q)) == ea);
    }
    for (int b = 0; b < q; ++b) {
      Fe eb = f.element(b);
      CHECK(f.add(ea, eb) == f.add(eb, ea));
      CHECK(f.mul(ea, eb) == f.mul(eb, ea));
      for (int c = 0; c < std::min(q, 11); ++c) {
        Fe ec = f.element(c);
        CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
        CHECK(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, m] : {std::pair{3, 1}, {3, 2}, {5, 1}, {7, 2}, {3, 3}}) {
    CAPTURE(p);
    CAPTURE(m);
    Field f(p, m);
    check_field_axioms(f);
  }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  Field f(3, 3);  // GF(27)
  // some element must have order exactly q-1
  bool found = false;
  for (int a = 1; a < f.q() && !found; ++a) {
    Fe x = f.element(a);
    int order = 1;
    Fe acc = x;
    while (acc != f.one()) {
      acc = f.mul(acc, x);
      ++order;
    }
    if (order == f.q() - 1) found = true;
  }
  CHECK(found);
}

TEST_CASE("digit strings round-trip, least significant digit first") {
  Field f(3, 2);
  CHECK(f.to_string(f.element(5)) == "21");  // 5 = 2 + 1*3
  CHECK(f.parse("21") == f.element(5));
  CHECK(f.to_string(f.zero()) == "00");
  for (int a = 0; a < f.q(); ++a) CHECK(f.parse(f.to_string(f.element(a))) == f.element(a));
  CHECK_THROWS_AS(f.parse("5"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse("123"), std::invalid_argument);

  Field f3(3, 1);
  CHECK(f3.to_string(f3.element(2)) == "2");
}

TEST_CASE("frobenius is additive") {
  Field f(3, 2);
  for (int a = 0; a < f.q(); ++a)
    for (int b = 0; b < f.q(); ++b) {
      Fe s = f.add(f.element(a), f.element(b));
      CHECK(f.pow(s, 3) == f.add(f.pow(f.element(a), 3), f.pow(f.element(b), 3)));
    }
}
