#include <gtest/gtest.h>

#include "ncpk/typeb.hpp"
#include "ncpk/verify.hpp"

using namespace ncpk;

TEST(SignedPermutation, Relations) {
  auto s0 = SignedPermutation::simple(0, 2), s1 = SignedPermutation::simple(1, 2);
  auto x = s0 * s1;
  EXPECT_TRUE((x * x * x * x).is_identity());
  EXPECT_FALSE((x * x).is_identity());
  EXPECT_TRUE((s0 * s0).is_identity());
  EXPECT_EQ(s0.str(), "[-1,2]");
  EXPECT_EQ((x * x.inverse()), SignedPermutation(2));
  for (int m = 1; m <= 4; ++m) {
    EXPECT_EQ(static_cast<int>(reflections_b(m).size()), m * m);
    EXPECT_EQ(reflection_length_b(coxeter_element_b(m)), m);
    for (const auto& t : reflections_b(m)) {
      EXPECT_TRUE((t * t).is_identity());
      EXPECT_EQ(reflection_length_b(t), 1);
    }
  }
}

TEST(Grouped, Construction) {
  auto a = build_grouped(1, 2);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0], SignedPermutation::simple(0, 2));
  EXPECT_EQ(a.factors[1], SignedPermutation::simple(1, 2));
  auto b = build_grouped(2, 1);
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0], SignedPermutation::simple(0, 2) * SignedPermutation::simple(1, 2));
  EXPECT_EQ(build_grouped(2, 2).product(), coxeter_element_b(4));
}

TEST(Orbit, ProductPreservedAndSmallCases) {
  auto one = typeb_report(1, 1, 2);
  EXPECT_EQ(one.orbit_observed, 1u);
  EXPECT_EQ(one.orbit_conjectured, 1);
  EXPECT_EQ(one.prefix_observed, 2u);
  EXPECT_EQ(one.prefix_conjectured, 2);
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; k * n <= 4; ++n) {
      auto r = typeb_report(k, n, 3);
      EXPECT_TRUE(r.product_preserved) << k << " " << n;
      EXPECT_EQ(r.orbit_conjectured, ipow(k, n - 1) * ipow(n, n));
      EXPECT_EQ(r.prefix_conjectured, 2 * binomial(n * k + n - 1, n - 1));
      EXPECT_EQ(r.orbit_status == ConjectureStatus::Pass, r.orbit_conjectured == BigCount(r.orbit_observed));
      ASSERT_EQ(r.zeta.size(), 3u);
      for (const auto& z : r.zeta) {
        EXPECT_EQ(z.conjectured, z.q * binomial(n * k * (z.q - 1) + n - 1, n - 1));
        EXPECT_EQ(z.status == ConjectureStatus::Pass, z.conjectured == z.observed);
      }
      // zeta at 2 counts the prefix set itself
      EXPECT_EQ(r.zeta[1].observed, BigCount(r.prefix_observed));
      auto orbit = b_hurwitz_orbit(build_grouped(k, n));
      EXPECT_EQ(orbit.size(), r.orbit_observed);
      for (const auto& g : orbit) EXPECT_EQ(g.product(), coxeter_element_b(k * n));
    }
}

TEST(Verify, SmallSuiteIsGreen) {
  VerifyOptions o;
  o.max_n = 3;
  o.max_k = 3;
  auto rep = run_verification(o);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.count(ClaimStatus::Pass), 100u);
  for (const auto& c : rep.claims) {
    EXPECT_EQ(c.status == ClaimStatus::Pass, c.closed_form == c.observed) << c.claim_id;
    if (c.status == ClaimStatus::Open) EXPECT_EQ(c.claim_id.rfind("typeb.", 0), 0u) << c.claim_id;
  }
}
