#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "ncpk/formulas.hpp"
#include "ncpk/hurwitz.hpp"

using namespace ncpk;

TEST(Factorization, ParseAndValidate) {
  KParams p(1, 3);
  auto f = Factorization::parse("(1 2)|(2 3)|(3 4)", p);
  EXPECT_EQ(f.str(), "(1 2)|(2 3)|(3 4)");
  EXPECT_EQ(f.product(), Permutation::long_cycle(4));
  EXPECT_EQ(f.minima(), (std::vector<int>{1, 2, 3}));
  EXPECT_THROW(Factorization::parse("(2 3)|(1 2)|(3 4)", p), std::invalid_argument);
  EXPECT_THROW(Factorization::parse("(1 2)|(2 3)", p), std::invalid_argument);
  EXPECT_THROW(make_factorization(KParams(2, 2), {{1, 2, 3}, {3, 5, 4}}), std::invalid_argument);
}

TEST(Hurwitz, HandValues) {
  KParams p(1, 3);
  auto f = Factorization::parse("(1 2)|(2 3)|(3 4)", p);
  EXPECT_EQ(hurwitz_sigma(1, f, false).str(), "(2 3)|(1 3)|(3 4)");
  EXPECT_EQ(hurwitz_sigma(1, hurwitz_sigma(1, f, false), true), f);
  auto g = Factorization::parse("(1 2 3)|(3 4 5)", KParams(2, 2));
  auto s = sym_action(1, g);
  EXPECT_EQ(s.str(), "(3 4 5)|(1 2 5)");
  EXPECT_EQ(s.minima(), (std::vector<int>{3, 1}));
}

TEST(Hurwitz, PackedMovesAgreeWithDirectMoves) {
  for (auto p : {KParams(1, 4), KParams(2, 3), KParams(3, 2)}) {
    FactorizationCodec codec(p);
    for (const auto& f : enumerate_factorizations(p)) {
      auto key = codec.pack(f);
      EXPECT_EQ(codec.unpack(key), f);
      for (int i = 1; i < p.n; ++i) {
        auto a = hurwitz_sigma(i, f, false), b = hurwitz_sigma(i, f, true);
        EXPECT_EQ(codec.unpack(codec.sigma(key, i - 1)), a);
        EXPECT_EQ(codec.unpack(codec.sigma_inv(key, i - 1)), b);
        EXPECT_EQ(hurwitz_sigma(i, a, true), f);
        EXPECT_EQ(a.product(), f.product());
      }
    }
  }
}

TEST(Enumeration, MatchesTupleOracle) {
  for (const auto& p : params_up_to(7)) {
    auto lib = enumerate_factorizations(p);
    auto ora = oracle::factorization_tuples(p.N(), p.k, p.n);
    ASSERT_EQ(lib.size(), ora.size()) << "k=" << p.k << " n=" << p.n;
    for (size_t i = 0; i < lib.size(); ++i) {
      std::vector<std::vector<int>> supp;
      for (auto t : lib[i].factors) {
        std::sort(t.begin(), t.end());
        supp.push_back(t);
      }
      EXPECT_EQ(supp, ora[i]);
    }
    EXPECT_EQ(BigCount(lib.size()), count_maximal_chains(p));
  }
  EXPECT_EQ(enumerate_factorizations(KParams(2, 3)).size(), 49u);
  EXPECT_EQ(enumerate_factorizations(KParams(1, 3)).size(), 16u);
  EXPECT_EQ(enumerate_factorizations(KParams(4, 1)).size(), 1u);
}

TEST(Orbit, TransitiveFromManyStarts) {
  std::mt19937 rng(11);
  for (const auto& p : params_up_to(8)) {
    auto all = enumerate_factorizations(p);
    for (int s = 0; s < 3; ++s) {
      const auto& f = all[rng() % all.size()];
      auto r = orbit_report(f);
      EXPECT_TRUE(r.transitive) << f.str();
      EXPECT_EQ(BigCount(r.orbit_size), r.expected);
    }
    auto orbit = hurwitz_orbit(all.front());
    std::sort(orbit.begin(), orbit.end());
    EXPECT_EQ(orbit, all);
  }
  EXPECT_EQ(hurwitz_orbit_size(Factorization::parse("(1 2 3 4)", KParams(3, 1))), 1u);
}

TEST(Orbit, RefusesBeyondCap) {
  KParams p(1, 6);
  auto f = enumerate_factorizations(p).front();
  EXPECT_THROW(hurwitz_orbit_size(f, 100), BoundExceeded);
}

TEST(SymAction, FixesEqualMinimaAndIsAnInvolutionOnMinima) {
  for (const auto& p : params_up_to(9, 3)) {
    if (count_maximal_chains(p) > 5000) continue;
    for (const auto& f : enumerate_factorizations(p)) {
      auto m = f.minima();
      for (int i = 1; i < p.n; ++i) {
        auto g = sym_action(i, f);
        EXPECT_EQ(g.product(), f.product());
        auto mg = g.minima();
        auto expect = m;
        std::swap(expect[i - 1], expect[i]);
        EXPECT_EQ(mg, expect) << f.str() << " i=" << i;
        if (m[i - 1] == m[i]) EXPECT_EQ(g, f);
        EXPECT_EQ(sym_action(i, g), f);
      }
    }
  }
}

TEST(CommutationClasses, Counts) {
  EXPECT_EQ(commutation_classes(KParams(1, 3)).size(), 12u);
  auto five = commutation_classes(KParams(2, 2));
  EXPECT_EQ(five.size(), 5u);
  for (const auto& c : five) EXPECT_EQ(c.size, 1);
  EXPECT_EQ(commutation_classes(KParams(5, 1)).size(), 1u);
  for (const auto& p : params_up_to(9)) {
    auto cls = commutation_classes(p);
    EXPECT_EQ(BigCount(cls.size()), commutation_class_count(p));
    BigCount total = 0;
    for (const auto& c : cls) total += c.size;
    EXPECT_EQ(total, count_maximal_chains(p));
  }
}

TEST(CommutationClasses, MembersAndRepresentatives) {
  for (auto p : {KParams(1, 4), KParams(2, 3), KParams(1, 5)}) {
    std::set<Factorization> seen;
    for (const auto& c : commutation_classes(p)) {
      auto mem = class_members(c.representative);
      EXPECT_EQ(BigCount(mem.size()), c.size);
      EXPECT_EQ(linear_extension_count(c.representative), c.size);
      for (const auto& g : mem) {
        EXPECT_TRUE(commutation_equivalent(g, c.representative));
        EXPECT_EQ(class_representative(g), c.representative);
        EXPECT_LE(c.representative, g);
        EXPECT_TRUE(seen.insert(g).second);
      }
    }
    EXPECT_EQ(BigCount(seen.size()), count_maximal_chains(p));
  }
}
