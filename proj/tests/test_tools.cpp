#include <gtest/gtest.h>

#include "affint/expr.hpp"
#include "affint/suites.hpp"

using namespace affint;

TEST(Expr, NotationMatchesSeries) {
  EXPECT_EQ(parse_expr("hhat(2)"), named_series(SeriesName::HAT, 2)[2]);
  EXPECT_EQ(parse_expr("hhat(2) - h(1)^2/2"), Poly::h(2, q(1, 2)));
  EXPECT_EQ(parse_expr("2*hbar(2)"), Poly::h(2));
  EXPECT_TRUE(parse_expr("hbar(3)").is_zero());
  EXPECT_EQ(parse_expr("hcheck(1) * 2"), Poly::h(1));
  EXPECT_EQ(parse_expr("-(h(1) + 1)^2 + h(1)^2 + 2*h(1)"), Poly(Q(-1)));
  EXPECT_EQ(parse_expr("hhatc(1)"), Poly::h(1));
  EXPECT_EQ(parse_expr("hhat(0)"), Poly(Q(1)));
}

TEST(Expr, ErrorsCarryPosition) {
  try {
    parse_expr("h(1) + foo(2)");
    FAIL();
  } catch (const ExprError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_expr("h(1)/h(2)"), ExprError);
  EXPECT_THROW(parse_expr("h(0)"), ExprError);
  EXPECT_THROW(parse_expr("h(1)^-1"), ExprError);
  EXPECT_THROW(parse_expr("(h(1)"), ExprError);
  EXPECT_THROW(parse_expr("h(1) h(2)"), ExprError);
}

TEST(Suites, ResolveNames) {
  EXPECT_EQ(resolve_suites({"all"}).size(), suite_names().size());
  EXPECT_EQ(resolve_suites({"uea4", "lie22", "lie22"}), (std::vector<std::string>{"lie22", "uea4"}));
  EXPECT_THROW(resolve_suites({"bogus"}), std::invalid_argument);
  RunConfig c;
  c.max_degree = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Suites, PartitionOracle) {
  const long known[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(partition_count_pentagonal(d), known[d]);
}

TEST(Suites, ReportIsSortedAndComplete) {
  RunConfig c;
  c.max_degree = 6;
  c.lie_window = 2;
  c.suites = {"lie22", "commutative", "criteria"};
  auto rep = run_suites(c);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.count(Verdict::SKIPPED), 1);
  for (std::size_t i = 1; i < rep.checks.size(); ++i)
    EXPECT_LT(rep.checks[i - 1].check_id, rep.checks[i].check_id);
  EXPECT_EQ(rep.checks.size(), 5u + 5u + 9u);
}

TEST(Suites, UeaCatalogCovered) {
  RunConfig c;
  c.suites = {"uea22", "uea4"};
  auto rep = run_suites(c);
  EXPECT_TRUE(rep.ok());
  // Two records per catalog entry plus twelve integrality certificates.
  EXPECT_EQ(rep.checks.size(), 2 * uea_catalog().size() + 12);
}
