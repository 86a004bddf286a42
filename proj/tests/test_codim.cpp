#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscodim/codim.hpp"

using namespace grasscodim;

TEST_CASE("matrix rank and solve") {
  Field f(3, 1);
  Matrix m;
  m.field = &f;
  m.cols = 3;
  auto row = [&](int a, int b, int c) {
    return std::vector<Fe>{f.from_int(a), f.from_int(b), f.from_int(c)};
  };
  m.add_row(row(1, 0, 0));
  m.add_row(row(0, 1, 0));
  m.add_row(row(1, 1, 0));
  CHECK(rank(m) == 2);
  m.add_row(row(0, 0, 2));
  CHECK(rank(m) == 3);

  Matrix a;
  a.field = &f;
  a.cols = 2;
  a.add_row({f.from_int(1), f.from_int(2)});
  a.add_row({f.from_int(0), f.from_int(1)});
  auto x = solve(a, {f.from_int(2), f.from_int(1)});
  REQUIRE(x.has_value());
  // check a x = b
  CHECK(f.add(f.mul(f.from_int(1), (*x)[0]), f.mul(f.from_int(2), (*x)[1])) ==
        f.from_int(2));
  CHECK((*x)[1] == f.from_int(1));
  // inconsistent system
  Matrix bad;
  bad.field = &f;
  bad.cols = 1;
  bad.add_row({f.from_int(1)});
  bad.add_row({f.from_int(2)});
  CHECK(!solve(bad, {f.one(), f.one()}).has_value());
}

TEST_CASE("left kernel tracks row combinations") {
  Field f(3, 1);
  auto row = [&](int a, int b) { return std::vector<Fe>{f.from_int(a), f.from_int(b)}; };
  // row2 = row0 + row1
  std::vector<std::vector<Fe>> rows{row(1, 0), row(0, 1), row(1, 1)};
  auto kernel = left_kernel(rows, 2, f);
  REQUIRE(kernel.size() == 1);
  // the combination annihilates the rows
  for (std::size_t c = 0; c < 2; ++c) {
    Fe acc = f.zero();
    for (std::size_t i = 0; i < 3; ++i) acc = f.add(acc, f.mul(kernel[0][i], rows[i][c]));
    CHECK(f.is_zero(acc));
  }
  // independent rows have trivial kernel
  CHECK(left_kernel({row(1, 0), row(1, 1)}, 2, f).empty());
}

TEST_CASE("multifree basis by hand") {
  CountParams pr{3, 3, 1, 1, 0};
  MdKey md{{2}, {1}};
  auto inf = multifree_basis(md, GradingSpec::infinity(), pr);
  REQUIRE(inf.size() == 2);
  // y1 [y1,z1] sorts below y1^2 z1 (smaller prefix)
  CHECK(inf[0].first.is_unit());
  CHECK(inf[0].second == PrTerm{{1}, {0}, {Variable::y(1), Variable::z(1)}});
  CHECK(inf[1].second == PrTerm{{2}, {1}, {}});
  // the strict multilinearity reading drops the tail term
  CHECK(multifree_basis(md, GradingSpec::infinity(), pr, MultilinearMode::WholeTerm).size() == 1);
  // the canonical grading admits only the plain monomial
  CHECK(multifree_basis(md, GradingSpec::canonical(), pr).size() == 1);

  // p-power part split off the y-degree
  auto high = multifree_basis(MdKey{{7}, {0}}, GradingSpec::infinity(), pr);
  REQUIRE(high.size() == 1);
  CHECK(high[0].first.exps == std::vector<int>{6});
  CHECK(high[0].second == PrTerm{{1}, {0}, {}});

  // zero components are fine; out-of-range degrees are not
  CHECK(multifree_basis(MdKey{{0}, {0}}, GradingSpec::infinity(), pr).size() == 1);
  CHECK_THROWS_AS(multifree_basis(MdKey{{10}, {0}}, GradingSpec::infinity(), pr),
                  std::invalid_argument);
  CHECK_THROWS_AS(multifree_basis(MdKey{{0}, {4}}, GradingSpec::infinity(), pr),
                  std::invalid_argument);
  CHECK_THROWS_AS(multifree_basis(MdKey{{0, 0}, {0}}, GradingSpec::infinity(), pr),
                  std::invalid_argument);
}

TEST_CASE("spanning probes cover every monomial shape") {
  auto terms = all_pr_terms(MdKey{{1}, {1}}, 3);
  REQUIRE(terms.size() == 2);  // y1 z1 and [y1,z1]
  auto more = all_pr_terms(MdKey{{2}, {2}}, 3);
  // tails: none, [y1,z1]; with remaining degrees as prefix
  CHECK(more.size() == 2);
  for (const auto& t : more) {
    CHECK(t.deg(Variable::y(1)) == 2);
    CHECK(t.deg(Variable::z(1)) == 2);
  }
}

TEST_CASE("oracle rank on constant columns") {
  Field f(3, 1);
  CountParams pr{3, 3, 1, 1, 0};
  GradingSpec g = GradingSpec::infinity();
  int n = 10;
  auto blade = [&](std::initializer_list<int> is) {
    GrassmannElement e(&f, n);
    e.set_coeff(Blade::from_indices(is), f.one());
    return e;
  };
  std::vector<Evaluator> cols;
  cols.push_back([=](const Substitution&) { return blade({1}); });
  cols.push_back([=](const Substitution&) { return blade({1}); });
  cols.push_back([=](const Substitution&) { return blade({2}); });
  OracleConfig cfg;
  cfg.truncation = n;
  cfg.seed = 5;
  auto r = oracle_rank(cols, g, pr, cfg, f);
  CHECK(r.rank == 2);
  CHECK(oracle_rank({}, g, pr, cfg, f).rank == 0);
}

TEST_CASE("independence certificates at small multidegrees") {
  Field f(3, 1);
  CountParams pr{3, 3, 1, 1, 0};
  SUBCASE("unrestricted grading, degree (2;1)") {
    auto cert = independence_certificate(MdKey{{2}, {1}}, GradingSpec::infinity(), pr, 11, f);
    CHECK(cert.basis_size == 2);
    CHECK(cert.rank == 2);
    CHECK(cert.independent);
    CHECK(cert.spanning);
    CHECK(cert.stable);
    CHECK(cert.ok());
  }
  SUBCASE("canonical grading, degree (1;1)") {
    auto cert = independence_certificate(MdKey{{1}, {1}}, GradingSpec::canonical(), pr, 12, f);
    CHECK(cert.basis_size == 1);
    CHECK(cert.ok());
  }
  SUBCASE("k-grading, degree (2;1)") {
    CountParams prk{3, 3, 1, 1, 1};
    auto cert = independence_certificate(MdKey{{2}, {1}}, GradingSpec::kk(1), prk, 13, f);
    CHECK(cert.basis_size == cert.rank);
    CHECK(cert.ok());
  }
}

TEST_CASE("codimension counts agree with the basis totals") {
  Field f(3, 1);
  struct Row {
    GradingSpec g;
    CountParams pr;
  };
  std::vector<Row> rows = {
      {GradingSpec::canonical(), {3, 3, 1, 1, 0}},
      {GradingSpec::infinity(), {3, 3, 1, 1, 0}},
      {GradingSpec::kstar(1), {3, 3, 1, 1, 1}},
      {GradingSpec::kk(1), {3, 3, 1, 1, 1}},
      {GradingSpec::infinity(), {3, 3, 2, 1, 0}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.g.name());
    for (int n1 = 0; n1 <= 6; ++n1)
      for (int n2 = 0; n2 <= 3; ++n2) {
        CAPTURE(n1);
        CAPTURE(n2);
        auto res = exact_codim(n1, n2, row.g, row.pr);
        CHECK(res.enumeration_value == res.basis_total);
      }
  }
}

TEST_CASE("high odd degree kills every component") {
  for (int m = 1; m <= 2; ++m) {
    CountParams pr{3, 3, 1, m, 0};
    for (int n1 = 0; n1 <= 4; ++n1)
      for (int n2 = pr.p * m + 1; n2 <= pr.p * m + 3; ++n2) {
        auto res = exact_codim(n1, n2, GradingSpec::infinity(), pr);
        CHECK(res.enumeration_value == 0);
        CHECK(res.basis_total == 0);
        CHECK(multidegrees_for(n1, n2, pr).empty());
      }
  }
}

TEST_CASE("word-span dimension sits inside the counting sandwich") {
  Field f(3, 1);
  CountParams pr{3, 3, 1, 1, 0};
  SUBCASE("canonical grading collapses yz and zy") {
    auto pt = w_bounds(1, 1, GradingSpec::canonical(), pr, 21, f);
    CHECK(pt.oracle_dim == 1);
    CHECK(pt.lower_enum == 1);
    CHECK(pt.holds_enum());
  }
  SUBCASE("unrestricted grading keeps them apart") {
    auto pt = w_bounds(1, 1, GradingSpec::infinity(), pr, 22, f);
    CHECK(pt.oracle_dim == 2);
    CHECK(pt.lower_enum == 2);
    CHECK(pt.holds_enum());
  }
}

TEST_CASE("word enumeration") {
  auto ws = words_of_bidegree(2, 1, 1, 1);
  CHECK(ws.size() == 3);  // yyz, yzy, zyy
  CHECK(words_of_bidegree(0, 0, 1, 1).size() == 1);
  CHECK(words_of_bidegree(1, 1, 2, 2).size() == 8);  // 4 pairs, 2 orders
}
