#include <gtest/gtest.h>

#include "cardrep/errors.hpp"
#include "cardrep/gl_beta.hpp"
#include "support.hpp"

using namespace cardrep;
using testing_support::P;
using testing_support::Q;

TEST(GL, Order) {
  EXPECT_EQ(gl_order(1, 5), 4);
  EXPECT_EQ(gl_order(2, 2), 6);
  EXPECT_EQ(gl_order(2, 3), 48);
  EXPECT_EQ(gl_order(3, 2), 168);
  EXPECT_THROW(gl_order(0, 2), ArgumentError);
}

TEST(GL, Datum) {
  EXPECT_THROW(GLClassDatum(3, 2, P("1,1"), 1), ArgumentError);
  EXPECT_THROW(GLClassDatum(3, 3, P("1,1"), 2), ArgumentError);
  EXPECT_NO_THROW(GLClassDatum(3, 3, P("1,1"), 1));
  EXPECT_TRUE(GLClassDatum(3, 5, P("1,1,1"), 0).is_identity());
}

TEST(GL, ClassRatio) {
  for (int n = 1; n <= 4; ++n)
    for (int q = 2; q <= 5; ++q) EXPECT_EQ(gl_class_ratio(GLClassDatum(n, q, Partition::column(n), 0)), 1) << n << q;
  const Rational expected = ratio(gl_order(2, 3), gl_order(3, 3)) * Q(8, 9) * Q(27);
  EXPECT_EQ(gl_class_ratio(GLClassDatum(3, 3, P("1,1"), 1)), expected);
  EXPECT_EQ(expected, gl_beta_closed_form(3, 3));
  EXPECT_EQ(gl_class_ratio(GLClassDatum(3, 3, P("2"), 1)), 0);
}

TEST(GL, ClosedForm) {
  EXPECT_EQ(gl_beta_closed_form(2, 3), Q(1, 12));
  EXPECT_EQ(gl_beta_closed_form(2, 2), 0);
  EXPECT_EQ(gl_beta_closed_form(3, 2), Q(1, 7));
  EXPECT_THROW(gl_beta_closed_form(1, 3), ArgumentError);
}

TEST(GL, BruteForce) {
  EXPECT_EQ(gl_beta_brute_force(2, 2).beta, 0);
  EXPECT_TRUE(gl_beta_brute_force(2, 2).witnesses.empty());
  const auto a = gl_beta_brute_force(4, 3);
  EXPECT_EQ(a.beta, gl_beta_closed_form(4, 3));
  ASSERT_EQ(a.witnesses.size(), 1u);
  EXPECT_EQ(a.witnesses[0].lambda_z1(), P("1,1,1"));
  EXPECT_EQ(a.witnesses[0].residual_weight(), 1);
  const auto b = gl_beta_brute_force(4, 2);
  EXPECT_EQ(b.beta, gl_beta_closed_form(4, 2));
  ASSERT_EQ(b.witnesses.size(), 1u);
  EXPECT_EQ(b.witnesses[0].lambda_z1(), P("2,1,1"));
  EXPECT_EQ(b.witnesses[0].residual_weight(), 0);
  for (int n = 2; n <= 6; ++n)
    for (int q : {2, 3, 4, 5}) {
      const auto r = gl_beta_brute_force(n, q);
      EXPECT_EQ(r.beta, gl_beta_closed_form(n, q)) << n << " " << q;
      if (q == 2)
        for (const auto& w : r.witnesses) EXPECT_NE(w.residual_weight(), 1);
    }
}

TEST(GL, DirectEnumeration) {
  EXPECT_EQ(gl2_direct_beta(2), 0);
  EXPECT_EQ(gl2_direct_beta(3), Q(1, 12));
  EXPECT_EQ(gl2_direct_beta(2), gl_beta_closed_form(2, 2));
  EXPECT_EQ(gl2_direct_beta(3), gl_beta_closed_form(2, 3));
  EXPECT_THROW(gl2_direct_beta(5), ArgumentError);
}
