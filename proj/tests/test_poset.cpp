#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "helpers.hpp"
#include "ncpk/formulas.hpp"
#include "ncpk/nc_poset.hpp"
#include "ncpk/poset.hpp"

using namespace ncpk;

TEST(FinitePoset, ChainAndDiamond) {
  auto chain = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(chain.leq(0, 2));
  EXPECT_FALSE(chain.leq(2, 0));
  EXPECT_EQ(count_maximal_chains(chain), 1);
  EXPECT_EQ(mobius(chain, 0, 2), 0);
  EXPECT_EQ(count_multichains(chain, 2), 6);
  auto diamond = FinitePoset::from_relation(4, [](int x, int y) { return x == y || x == 0 || y == 3; });
  EXPECT_EQ(diamond.covers().size(), 4u);
  EXPECT_EQ(mobius(diamond, 0, 3), 1);
  EXPECT_EQ(count_maximal_chains(diamond), 2);
  EXPECT_TRUE(check_lattice(diamond).is_lattice);
  EXPECT_THROW(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  auto bowtie = FinitePoset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_FALSE(check_lattice(bowtie).is_lattice);
  auto hat = add_bottom(bowtie);
  EXPECT_EQ(hat.size(), 5);
  EXPECT_EQ(hat.minimal_elements(), std::vector<int>{4});
  EXPECT_TRUE(isomorphic(diamond, FinitePoset::from_covers(4, {{2, 0}, {2, 1}, {0, 3}, {1, 3}})));
  EXPECT_FALSE(isomorphic(diamond, chain));
}

namespace {

// Library diagram and oracle poset over the same element list.
struct Pair {
  HasseDiagram H;
  oracle::RefinementPoset P;
  std::vector<int> to_oracle_index;
};

Pair build_pair(KParams p) {
  oracle::CayleyDistances d(p.N(), p.k);
  Pair r{build_poset(p), oracle::refinement_poset(oracle::sn_filter(d), d), {}};
  std::map<oracle::Perm, int> idx;
  for (size_t i = 0; i < r.P.elems.size(); ++i) idx[r.P.elems[i]] = static_cast<int>(i);
  for (const auto& w : r.H.elements) r.to_oracle_index.push_back(idx.at(to_oracle(w)));
  return r;
}

}  // namespace

TEST(HassePoset, HandValues) {
  auto H = build_poset(KParams(2, 3));
  EXPECT_EQ(H.size(), 30);
  auto census = rank_census(H);
  EXPECT_EQ(census, (std::vector<BigCount>{1, 14, 14, 1}));
  auto c2 = build_poset(KParams(1, 1));
  EXPECT_EQ(c2.size(), 2);
  EXPECT_EQ(c2.order.covers().size(), 1u);
  EXPECT_EQ(build_poset(KParams(3, 2)).size(), 9);
  EXPECT_THROW(build_poset(KParams(1, 13)), BoundExceeded);
}

TEST(HassePoset, CoversMatchRefinementOracle) {
  for (const auto& p : params_up_to(7)) {
    auto pr = build_pair(p);
    ASSERT_EQ(pr.H.size(), static_cast<int>(pr.P.elems.size()));
    std::set<std::pair<int, int>> lib, ora;
    for (auto [x, y] : pr.H.order.covers()) lib.insert({pr.to_oracle_index[x], pr.to_oracle_index[y]});
    for (auto e : oracle::covers(pr.P)) ora.insert(e);
    EXPECT_EQ(lib, ora) << "k=" << p.k << " n=" << p.n;
    for (int i = 0; i < pr.H.size(); ++i) EXPECT_EQ(pr.H.rank[i], pr.P.rank[pr.to_oracle_index[i]]);
  }
}

TEST(HassePoset, CoverInvariants) {
  for (const auto& p : params_up_to(11)) {
    auto H = build_poset(p);
    EXPECT_TRUE(H.elements[H.bottom].is_identity());
    EXPECT_EQ(H.elements[H.top], Permutation::long_cycle(p.N()));
    for (auto [x, y] : H.order.covers()) {
      EXPECT_NE(x, y);
      EXPECT_EQ(H.rank[y], H.rank[x] + 1);
      EXPECT_TRUE(refines(H.elements[x], H.elements[y]));
    }
    EXPECT_TRUE(covers_are_irredundant(H.order, H.order.covers()));
  }
}

TEST(HassePoset, StatisticsMatchOracle) {
  for (const auto& p : params_up_to(7)) {
    auto pr = build_pair(p);
    EXPECT_EQ(brute_maximal_chains(pr.H).get_ui(), oracle::maximal_chains(pr.P));
    EXPECT_EQ(brute_mobius(pr.H).get_si(), oracle::mobius(pr.P));
    for (int x = 1; x <= 4; ++x) EXPECT_EQ(brute_zeta(pr.H, x).get_ui(), oracle::multichains(pr.P, x - 1));
    std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& r, int left, int parts) {
      if (parts == 1) {
        r.push_back(left);
        EXPECT_EQ(brute_multichains_by_jump(pr.H, r).get_ui(), oracle::multichains_by_jump(pr.P, r));
        r.pop_back();
        return;
      }
      for (int a = 0; a <= left; ++a) {
        r.push_back(a);
        rec(r, left - a, parts - 1);
        r.pop_back();
      }
    };
    for (int q = 0; q <= 3; ++q) {
      std::vector<int> r;
      rec(r, p.n, q + 1);
    }
  }
}

TEST(HassePoset, ClosedFormsUpToNine) {
  for (const auto& p : params_up_to(9)) {
    auto H = build_poset(p);
    EXPECT_EQ(brute_maximal_chains(H), count_maximal_chains(p));
    EXPECT_EQ(brute_mobius(H), mobius_invariant(p));
    for (int x = 2; x <= 4; ++x) EXPECT_EQ(brute_zeta(H, x), zeta(p, x));
  }
}

TEST(HassePoset, RankCensusUpToEleven) {
  for (const auto& p : params_up_to(11)) {
    auto census = rank_census(build_poset(p));
    for (int l = 0; l <= p.n; ++l) EXPECT_EQ(census[l], count_by_rank(p, l));
  }
}

TEST(HassePoset, ClassicalCaseIsALattice) {
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(check_lattice(build_poset(KParams(1, n)).order).is_lattice);
}

TEST(HassePoset, ChainsAndFactorizations) {
  KParams p(2, 3);
  auto H = build_poset(p);
  auto chains = enumerate_maximal_chains(H, 1000);
  EXPECT_EQ(chains.size(), 49u);
  for (const auto& ch : chains) {
    std::vector<Permutation> els;
    for (int i : ch) els.push_back(H.elements[i]);
    auto f = chain_to_factorization(p, els);
    EXPECT_EQ(factorization_to_chain(p, f), els);
    Permutation prod(p.N());
    for (const auto& t : f) prod = prod * Permutation::cycle(p.N(), t);
    EXPECT_EQ(prod, Permutation::long_cycle(p.N()));
  }
  // a single-element multichain splits c into w and its complement
  auto w = Permutation::parse("(2 3 6)", 7);
  auto kw = kreweras(w);
  EXPECT_EQ(w * kw, Permutation::long_cycle(7));
  EXPECT_TRUE(is_one_mod_k(kw, 2));
}

TEST(HassePoset, Exports) {
  auto H = build_poset(KParams(1, 2));
  auto dot = to_dot(H);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("rank=same"), std::string::npos);
  EXPECT_NE(dot.find("(1 2 3)"), std::string::npos);
  auto csv = rank_census_csv(H);
  EXPECT_EQ(csv, "rank,count\n0,1\n1,3\n2,1\n");
}
