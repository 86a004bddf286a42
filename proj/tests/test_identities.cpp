#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscodim/identities.hpp"

using namespace grasscodim;

TEST_CASE("basis composition per grading") {
  Field f(3, 1);
  auto can = identity_basis(GradingSpec::canonical(), f);
  CHECK(can.generators.size() == 4);
  auto inf = identity_basis(GradingSpec::infinity(), f);
  CHECK(inf.generators.size() == 8 + 2);  // triple commutators + z^p + frobenius
  auto ks0 = identity_basis(GradingSpec::kstar(0), f);
  REQUIRE(ks0.generators.size() == 3);
  CHECK(ks0.generators[2].label == "z1");
  auto ks2 = identity_basis(GradingSpec::kstar(2), f);
  CHECK(ks2.generators.size() == 8 + 3);  // plus z1*z2*z3
  // k odd: one head generator; k even: two; plus g-type pairs/singles
  auto k1 = identity_basis(GradingSpec::kk(1), f);
  // [y1,y2]; 8 triples; l=1: g2[z3,y1], [g2,y1]; z1^3; frobenius
  CHECK(k1.generators.size() == 1 + 8 + 2 + 2);
  auto k2 = identity_basis(GradingSpec::kk(2), f);
  // two heads; 8 triples; l=1: g3[z4,y1],[g3,y1]; l=2: g2[y1,y2]; z1^3; frob
  CHECK(k2.generators.size() == 2 + 8 + 3 + 2);
}

TEST_CASE("random verification passes on every grading over GF(3)") {
  Field f(3, 1);
  int n = 14;
  for (GradingSpec g : {GradingSpec::canonical(), GradingSpec::infinity(),
                        GradingSpec::kstar(0), GradingSpec::kstar(1),
                        GradingSpec::kstar(2), GradingSpec::kk(1), GradingSpec::kk(2)}) {
    CAPTURE(g.name());
    auto basis = identity_basis(g, f);
    auto rep = verify_random(basis, f, n, 150, 2024);
    for (const auto& c : rep.checks) {
      CAPTURE(c.label);
      CHECK(c.violations == 0);
    }
  }
}

TEST_CASE("random verification passes over GF(9)") {
  Field f(3, 2);
  for (GradingSpec g : {GradingSpec::canonical(), GradingSpec::infinity(),
                        GradingSpec::kk(1)}) {
    CAPTURE(g.name());
    auto rep = verify_random(identity_basis(g, f), f, 12, 60, 77);
    CHECK(rep.ok());
  }
}

TEST_CASE("exhaustive verification on a small truncation") {
  Field f(3, 1);
  for (GradingSpec g : {GradingSpec::canonical(), GradingSpec::infinity(),
                        GradingSpec::kstar(1), GradingSpec::kk(1)}) {
    CAPTURE(g.name());
    auto rep = verify_exhaustive(identity_basis(g, f), f, 4);
    for (const auto& c : rep.checks) {
      CAPTURE(c.label);
      CHECK(c.trials > 0);
      CHECK(c.violations == 0);
    }
  }
}

TEST_CASE("mutated generators are caught") {
  Field f(3, 1);
  int n = 12;
  // flip the sign inside the canonical odd-odd generator: z1z2 - z2z1 is
  // not an identity of the canonical grading
  IdentityBasis bad;
  bad.grading = GradingSpec::canonical();
  bad.generators.push_back({"z1*z2 - z2*z1", parse_poly("z1*z2 - z2*z1", f)});
  bad.generators.push_back({"y1*y2 + y2*y1", parse_poly("y1*y2 + y2*y1", f)});
  auto rep = verify_random(bad, f, n, 100, 5);
  for (const auto& c : rep.checks) CHECK(c.violations > 0);

  // z1^2 is not an identity of the infinity grading (z1^3 is)
  IdentityBasis bad2;
  bad2.grading = GradingSpec::infinity();
  bad2.generators.push_back({"z1^2", parse_poly("z1^2", f)});
  // y1^9 - y1^6 is not an identity either
  bad2.generators.push_back({"y1^9 - y1^6", parse_poly("y1^9 - y1^6", f)});
  auto rep2 = verify_random(bad2, f, n, 100, 6);
  for (const auto& c : rep2.checks) CHECK(c.violations > 0);

  // wrong swap sign: [z1,z2][z3,z4] - [z1,z3][z2,z4] does not vanish
  IdentityBasis bad3;
  bad3.grading = GradingSpec::infinity();
  bad3.generators.push_back(
      {"[z1,z2][z3,z4] - [z1,z3][z2,z4]",
       parse_poly("[z1,z2]*[z3,z4] - [z1,z3]*[z2,z4]", f)});
  auto rep3 = verify_random(bad3, f, n, 100, 7);
  CHECK(rep3.checks[0].violations > 0);
}

TEST_CASE("consequences of the bases hold") {
  Field f(3, 1);
  for (GradingSpec g : {GradingSpec::canonical(), GradingSpec::infinity(),
                        GradingSpec::kstar(2), GradingSpec::kk(1)}) {
    CAPTURE(g.name());
    auto rep = consequence_spot_checks(g, f, 14, 100, 99);
    for (const auto& c : rep.checks) {
      CAPTURE(c.label);
      CHECK(c.violations == 0);
    }
  }
}

TEST_CASE("the k* tower collapses correctly at small k") {
  Field f(3, 1);
  // under k* with k < p, the product z1...z_{k+1} already forces z1^p;
  // spot-check: z1^2... z-degree 2 > k=1 vanishes on E under kstar(1)
  GradingSpec g = GradingSpec::kstar(1);
  IdentityBasis extra;
  extra.grading = g;
  extra.generators.push_back({"z1^2", parse_poly("z1^2", f)});
  extra.generators.push_back({"z1*z2", parse_poly("z1*z2", f)});
  auto rep = verify_random(extra, f, 14, 100, 12);
  for (const auto& c : rep.checks) CHECK(c.violations == 0);
}
