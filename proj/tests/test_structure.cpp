#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscodim/structure.hpp"

using namespace grasscodim;

namespace {

PrTerm make_term(std::vector<int> by, std::vector<int> bz, std::vector<Variable> psi) {
  return PrTerm{std::move(by), std::move(bz), std::move(psi)};
}

}  // namespace

TEST_CASE("degrees and accessors") {
  // y1^2 * [y2, z1] with l = 2, m = 1
  PrTerm t = make_term({2, 0}, {0}, {Variable::y(2), Variable::z(1)});
  CHECK(t.valid());
  CHECK(t.deg(Variable::y(1)) == 2);
  CHECK(t.deg(Variable::y(2)) == 1);
  CHECK(t.deg(Variable::z(1)) == 1);
  CHECK(t.deg_y_total() == 3);
  CHECK(t.deg_z_total() == 1);
  CHECK(t.beg_deg_z() == 0);
  CHECK(t.psi_deg_y() == 1);
  CHECK(!t.pr_z().has_value());
  CHECK(t.to_string() == "y1^2*[y2,z1]");

  auto split = classify(t);
  CHECK(split.y_beg_only == std::vector{Variable::y(1)});
  CHECK(split.y_psi_only == std::vector{Variable::y(2)});
  CHECK(split.z_psi_only == std::vector{Variable::z(1)});
  CHECK(split.y_both.empty());
  CHECK(split.z_both.empty());

  // z1 * [y1, z1]: z1 in prefix and tail
  PrTerm u = make_term({0}, {1}, {Variable::y(1), Variable::z(1)});
  CHECK(u.pr_z() == Variable::z(1));
  auto us = classify(u);
  CHECK(us.z_both == std::vector{Variable::z(1)});
  CHECK(us.y_psi_only == std::vector{Variable::y(1)});
  CHECK(!u.is_multilinear());
  CHECK(make_term({1}, {1}, {}).is_multilinear());
}

TEST_CASE("family membership") {
  int p = 3;
  // prefix exponent cap p-1
  CHECK(is_member(make_term({2}, {0}, {}), Family::SS, p, 0));
  CHECK(!is_member(make_term({3}, {0}, {}), Family::SS, p, 0));
  CHECK(!is_member(make_term({0}, {3}, {}), Family::SS, p, 0));

  // the two readings of the multilinearity clause
  PrTerm mixed = make_term({1}, {0}, {Variable::y(1), Variable::z(1)});  // y1[y1,z1]
  CHECK(is_member(mixed, Family::SS, p, 0, MultilinearMode::PsiOnly));
  CHECK(!is_member(mixed, Family::SS, p, 0, MultilinearMode::WholeTerm));

  // SS0: no tail, multilinear z prefix
  CHECK(is_member(make_term({2}, {1}, {}), Family::SS0, p, 0));
  CHECK(!is_member(make_term({2}, {2}, {}), Family::SS0, p, 0));
  CHECK(!is_member(make_term({0}, {0}, {Variable::z(1), Variable::z(2)}), Family::SS0, p, 0));

  // SS1: z-degree bounded by k
  CHECK(is_member(make_term({0}, {1}, {}), Family::SS1, p, 1));
  CHECK(!is_member(make_term({0}, {2}, {}), Family::SS1, p, 1));
  CHECK(!is_member(make_term({0}, {1}, {Variable::z(1), Variable::z(2)}), Family::SS1, p, 2));

  // z1*[y1,z1] at k = 1: in SS2 (1 y in tail, 1 + 1 <= k+1) but not SS3
  // (the sum hits k+1 and the lowest z of the term sits in the tail)
  PrTerm border = make_term({0}, {1}, {Variable::y(1), Variable::z(1)});
  CHECK(is_member(border, Family::SS2, p, 1));
  CHECK(!is_member(border, Family::SS3, p, 1));
  // z2*[y1,z1] still trips it: z1 is the lowest z and lives in the tail,
  // and indeed z2*[y1,z1] = -z1*[y1,z2] modulo the graded identities
  PrTerm swapped = make_term({0, 0}, {0, 1}, {Variable::y(1), Variable::z(1)});
  CHECK(!is_member(swapped, Family::SS3, p, 1));
  // the reduced representative keeps the lowest z in the prefix
  PrTerm ok = make_term({0, 0}, {1, 0}, {Variable::y(1), Variable::z(2)});
  CHECK(is_member(ok, Family::SS3, p, 1));
}

TEST_CASE("lex-rig order compares from the greatest variable down") {
  auto d = [](std::vector<std::pair<Variable, int>> v) { return v; };
  // z beats y
  CHECK(compare_lex_rig(d({{Variable::y(1), 5}}), d({{Variable::z(1), 1}})) < 0);
  // higher z index dominates
  CHECK(compare_lex_rig(d({{Variable::z(1), 3}}), d({{Variable::z(2), 1}})) < 0);
  // same variable, compare exponent
  CHECK(compare_lex_rig(d({{Variable::z(1), 1}}), d({{Variable::z(1), 2}})) < 0);
  CHECK(compare_lex_rig(d({{Variable::y(1), 1}, {Variable::z(1), 2}}),
                        d({{Variable::y(1), 2}, {Variable::z(1), 2}})) < 0);
  CHECK(compare_lex_rig(d({{Variable::y(1), 2}}), d({{Variable::y(1), 2}})) == 0);
  // zeros are invisible
  CHECK(compare_lex_rig(d({{Variable::y(1), 1}, {Variable::z(1), 0}}),
                        d({{Variable::y(1), 1}})) == 0);
}

TEST_CASE("term order: degree, then prefix, then tail") {
  PrTerm a = make_term({1}, {1}, {});                              // y1 z1
  PrTerm b = make_term({0}, {0}, {Variable::y(1), Variable::z(1)});  // [y1,z1]
  CHECK(a.deg_total() == b.deg_total());
  CHECK(compare_ss(b, a) < 0);  // empty prefix loses
  CHECK(compare_ss(a, a) == 0);
  PrTerm c = make_term({0}, {1}, {});  // z1, smaller degree
  CHECK(compare_ss(c, a) < 0);
  CHECK(leading_term({a, b, c}) == a);
}

TEST_CASE("bad terms and the greatest bad term") {
  // multidegree (y1:1, z1:1, z2:2), two tail-bearing terms
  PrTerm t1 = make_term({0}, {0, 2}, {Variable::y(1), Variable::z(1)});  // z2^2[y1,z1]
  PrTerm t2 = make_term({1}, {0, 1}, {Variable::z(1), Variable::z(2)});  // y1z2[z1,z2]
  for (Variable v : {Variable::y(1), Variable::z(1), Variable::z(2)})
    CHECK(t1.deg(v) == t2.deg(v));
  CHECK(leading_term({t1, t2}) == t1);
  CHECK(*t1.pr_z() == Variable::z(2));
  CHECK(is_bad_term(t2, t1));
  // a bad term is below the leading term
  CHECK(compare_ss(t2, t1) < 0);
  auto bad = bad_terms({t1, t2});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == t2);
  CHECK(lbt({t1, t2}) == t2);

  // the full-prefix term as leader leaves nothing bad here
  PrTerm full = make_term({1}, {1, 2}, {});
  CHECK(leading_term({full, t1, t2}) == full);
  CHECK(bad_terms({full, t1, t2}).empty());
  CHECK(!lbt({full, t1, t2}).has_value());
}

TEST_CASE("family enumeration agrees with hand counts") {
  int p = 3, k = 0;
  // SS over l=m=1 at bidegree (2,1): y1^2 z1 and y1[y1,z1]
  auto ss = enumerate_family(Family::SS, 2, 1, 1, 1, p, k);
  REQUIRE(ss.size() == 2);
  for (const auto& t : ss) CHECK(is_member(t, Family::SS, p, k));
  // strict reading drops the repeated-variable term
  CHECK(enumerate_family(Family::SS, 2, 1, 1, 1, p, k, MultilinearMode::WholeTerm).size() == 1);

  // SS0 matches kappa(n1,p,l)*kappa(n2,2,m) pointwise
  for (int n1 = 0; n1 <= 6; ++n1)
    for (int n2 = 0; n2 <= 4; ++n2) {
      auto fam = enumerate_family(Family::SS0, n1, n2, 2, 2, p, k);
      long long expect = 0;
      // independent count: exponent vectors below p summing to n1 times
      // 0/1 vectors summing to n2
      int c1 = 0, c2 = 0;
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) c1 += (a + b == n1);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) c2 += (a + b == n2);
      expect = static_cast<long long>(c1) * c2;
      CHECK(static_cast<long long>(fam.size()) == expect);
    }

  // SS1 is empty above z-degree k
  CHECK(enumerate_family(Family::SS1, 0, 2, 1, 2, p, 1).empty());
  CHECK(enumerate_family(Family::SS1, 0, 1, 1, 2, p, 1).size() == 2);  // z1, z2

  // enumeration is sorted and duplicate-free
  auto fam = enumerate_family(Family::SS, 3, 2, 2, 2, p, k);
  for (std::size_t i = 0; i + 1 < fam.size(); ++i)
    CHECK(compare_ss(fam[i], fam[i + 1]) < 0);
  // (0,0) has exactly the empty monomial
  auto unit = enumerate_family(Family::SS, 0, 0, 2, 2, p, k);
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_unit());
}

TEST_CASE("p-polynomial monomials") {
  int p = 3, q = 3, l = 2;
  // all exponents multiples of p below pq; across all degrees q^l vectors
  std::size_t total = 0;
  for (int s = 0; s <= p * (q - 1) * l; ++s) {
    auto ms = enumerate_ppoly(s, l, p, q);
    for (const auto& mo : ms) {
      CHECK(mo.total() == s);
      for (int e : mo.exps) {
        CHECK(e % p == 0);
        CHECK(e < p * q);
      }
    }
    total += ms.size();
  }
  CHECK(total == 9);  // q^l
  CHECK(enumerate_ppoly(1, l, p, q).empty());
  CHECK(enumerate_ppoly(3, 1, 3, 3).size() == 1);
  CHECK(enumerate_ppoly(0, 1, 3, 3).size() == 1);
}

TEST_CASE("terms print and expand") {
  Field f(3, 1);
  PrTerm t = make_term({2, 0}, {1}, {Variable::y(2), Variable::z(1)});
  CHECK(t.to_string() == "y1^2*z1*[y2,z1]");
  auto poly = t.to_poly(f);
  // y1^2 z1 (y2 z1 - z1 y2)
  auto y1 = FreePoly::var(f, Variable::y(1));
  auto y2 = FreePoly::var(f, Variable::y(2));
  auto z1 = FreePoly::var(f, Variable::z(1));
  CHECK(poly == y1 * y1 * z1 * (y2 * z1 - z1 * y2));
  CHECK(make_term({0}, {0}, {}).to_string() == "1");
}
