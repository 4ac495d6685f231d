#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "ncpk/formulas.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/nc.hpp"
#include "ncpk/parking.hpp"
#include "ncpk/paths.hpp"
#include "ncpk/trees.hpp"

using namespace ncpk;

// ---- parking functions

TEST(Parking, HandValues) {
  auto f = Factorization::parse("(1 2)|(2 3)|(3 4)", KParams(1, 3));
  EXPECT_EQ(phi(f).entries, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(phi(Factorization::parse("(1 2 3)|(3 4 5)", KParams(2, 2))).entries, (std::vector<int>{1, 3}));
  EXPECT_EQ(phi_inverse(ParkingFunction{1, {1, 2, 3}}), f);
  Factorization ones = phi_inverse(ParkingFunction{2, {1, 1}});
  EXPECT_EQ(ones.minima(), (std::vector<int>{1, 1}));
  int with_ones = 0;
  for (const auto& g : enumerate_factorizations(KParams(2, 2))) with_ones += g.minima() == std::vector<int>{1, 1};
  EXPECT_EQ(with_ones, 1);
  EXPECT_EQ(ParkingFunction::parse("1,3,1", 1).str(), "1,3,1");
  EXPECT_FALSE(is_parking_function({2, 2}, 1));
  EXPECT_TRUE(is_parking_function({3, 1}, 2));
}

TEST(Parking, CountsMatchTupleOracle) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 3; ++k) {
      auto ora = oracle::parking_tuples(n, k);
      auto lib = enumerate_parking_functions(n, k);
      std::set<std::vector<int>> a(ora.begin(), ora.end()), b;
      for (const auto& pf : lib) b.insert(pf.entries);
      EXPECT_EQ(a, b);
      EXPECT_EQ(BigCount(lib.size()), count_maximal_chains(KParams(k, n)));
    }
}

TEST(Parking, BijectiveAndEquivariant) {
  for (auto p : {KParams(2, 3), KParams(1, 4), KParams(1, 3), KParams(3, 2), KParams(2, 4)}) {
    auto facts = enumerate_factorizations(p);
    std::set<ParkingFunction> img;
    for (const auto& f : facts) {
      auto pf = phi(f);
      EXPECT_TRUE(is_parking_function(pf.entries, p.k)) << f.str();
      EXPECT_EQ(phi_inverse(pf), f);
      img.insert(pf);
      for (int i = 1; i < p.n; ++i) {
        auto swapped = pf;
        std::swap(swapped.entries[i - 1], swapped.entries[i]);
        EXPECT_EQ(phi(sym_action(i, f)), swapped);
      }
    }
    EXPECT_EQ(img.size(), facts.size());
    EXPECT_EQ(BigCount(img.size()), count_maximal_chains(p));
  }
}

// ---- trees

TEST(Trees, WorkedExampleDegreeTwentyFive) {
  auto w = Permutation::parse("(1 14 15 16 20 21 22)(2 3 4 5 9 10 11)", 25);
  auto t = gj_tree(w);
  EXPECT_EQ(t.num_edges, 25);
  EXPECT_TRUE(t.is_tree());
  EXPECT_TRUE(t.degrees_one_mod(3));
  EXPECT_EQ(tour_readback(t), w);
  auto [a, b] = split_tree(t);
  EXPECT_EQ(a.vertex_count() + b.vertex_count(), 26);
  EXPECT_TRUE(a.is_k_divisible(3) && b.is_k_divisible(3));
  auto [ca, cb] = split_and_contract(t, 3);
  EXPECT_TRUE(ca.is_k_ary(3) && cb.is_k_ary(3));
  EXPECT_EQ(ca.internal_count() + cb.internal_count(), 8);
  EXPECT_EQ(expand_and_join({ca, cb}, 3), t);
}

TEST(Trees, ExtremeElements) {
  KParams p(2, 3);
  auto id = gj_tree(Permutation(7));
  EXPECT_EQ(id.white.size(), 7u);
  EXPECT_EQ(id.black.size(), 1u);
  auto top = gj_tree(Permutation::long_cycle(7));
  EXPECT_EQ(top.white.size(), 1u);
  EXPECT_EQ(top.black.size(), 7u);
  EXPECT_TRUE(id.degrees_one_mod(2) && top.degrees_one_mod(2));
}

TEST(Trees, PipelineOnAllElements) {
  for (const auto& p : params_up_to(11)) {
    std::map<int, BigCount> census;
    std::set<std::string> seen;
    for (const auto& w : enumerate_nc(p)) {
      auto t = gj_tree(w);
      ASSERT_TRUE(t.is_tree()) << w.str();
      EXPECT_EQ(t.num_edges, p.N());
      EXPECT_EQ(t.white.size() + t.black.size(), static_cast<size_t>(p.N() + 1));
      EXPECT_TRUE(t.degrees_one_mod(p.k)) << w.str();
      EXPECT_EQ(tour_readback(t), w);
      auto pair = split_and_contract(t, p.k);
      EXPECT_EQ(pair.first.internal_count() + pair.second.internal_count(), p.n);
      EXPECT_EQ(expand_and_join(pair, p.k), t);
      EXPECT_TRUE(seen.insert(pair.first.str() + "|" + pair.second.str()).second);
      census[pair.first.internal_count()] += 1;
    }
    for (int i = 0; i <= p.n; ++i)
      EXPECT_EQ(census[i], raney(i, p.k + 1, 1) * raney(p.n - i, p.k + 1, 1)) << "k=" << p.k << " n=" << p.n;
  }
}

TEST(Trees, ContractExpandAndSerialization) {
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= 4; ++i) {
      auto trees = enumerate_kary_trees(i, k);
      EXPECT_EQ(BigCount(trees.size()), raney(i, k + 1, 1));
      for (const auto& t : trees) {
        EXPECT_TRUE(t.is_k_ary(k));
        EXPECT_EQ(t.internal_count(), i);
        EXPECT_EQ(PlaneTree::parse(t.str()), t);
        auto e = expand(t, k);
        EXPECT_TRUE(e.is_k_divisible(k));
        EXPECT_EQ(contract(e, k), t);
        EXPECT_EQ(dyck_to_tree(tree_to_dyck(t, k), k), t);
        EXPECT_TRUE(is_k_dyck(tree_to_dyck(t, k), k));
      }
    }
}

// ---- paths and ideals

TEST(Paths, WorkedDecomposition) {
  KParams p(5, 6);
  std::string path = "UUU" + std::string(8, 'R') + "UU" + std::string(13, 'R') + "U" + std::string(4, 'R') + "U" +
                     std::string(6, 'R');
  ASSERT_TRUE(in_path_set(path, p));
  auto s = path_decompose(path, p);
  EXPECT_EQ(s.i, 4);
  EXPECT_EQ(s.first, "UU" + std::string(8, 'R') + "UU" + std::string(12, 'R'));
  EXPECT_EQ(s.second, "U" + std::string(4, 'R') + "U" + std::string(6, 'R'));
  EXPECT_EQ(path_recombine(s.first, s.second), path);
}

TEST(Paths, ExtremePaths) {
  for (const auto& p : params_up_to(13)) {
    auto m = path_decompose(maximal_path(p), p);
    EXPECT_EQ(m.i, p.n);
    EXPECT_EQ(m.second, "");
    auto b = path_decompose(boundary_path(p), p);
    EXPECT_EQ(b.i, 0);
  }
}

TEST(Paths, DecompositionRoundTrip) {
  for (const auto& p : params_up_to(13)) {
    auto paths = enumerate_path_set(p);
    EXPECT_EQ(BigCount(paths.size()), nc_cardinality(p));
    std::set<std::pair<std::string, std::string>> splits;
    for (const auto& path : paths) {
      auto s = path_decompose(path, p);
      EXPECT_TRUE(is_k_dyck(s.first, p.k) && is_k_dyck(s.second, p.k));
      EXPECT_EQ(path_recombine(s.first, s.second), path);
      splits.insert({s.first, s.second});
    }
    EXPECT_EQ(splits.size(), paths.size());
    for (int i = 0; i <= p.n; ++i) EXPECT_EQ(BigCount(enumerate_k_dyck(i, p.k).size()), raney(i, p.k + 1, 1));
  }
}

TEST(Ideals, MatchSubsetOracle) {
  for (const auto& p : params_up_to(13)) {
    auto elems = oracle::delta_elements(p.N(), p.k);
    auto tri = triangular_poset(p);
    using PS = std::set<std::pair<int, int>>;
    EXPECT_EQ(PS(tri.begin(), tri.end()), PS(elems.begin(), elems.end()));
    if (elems.size() > 22) continue;
    auto ora = oracle::delta_ideals_by_subsets(p.N(), p.k);
    std::set<std::set<std::pair<int, int>>> a(ora.begin(), ora.end()), b;
    for (const auto& I : enumerate_ideals(p)) {
      auto e = I.elements();
      b.insert({e.begin(), e.end()});
      EXPECT_TRUE(is_order_ideal(p, e));
      EXPECT_EQ(OrderIdeal::from_elements(p, e), I);
    }
    EXPECT_EQ(a, b) << "k=" << p.k << " n=" << p.n;
  }
  EXPECT_EQ(enumerate_ideals(KParams(3, 4)).size(), 340u);
  EXPECT_EQ(oracle::delta_ideals_by_subsets(13, 3).size(), 340u);
}

TEST(Ideals, PathRoundTrip) {
  for (const auto& p : params_up_to(13)) {
    auto ideals = enumerate_ideals(p);
    EXPECT_EQ(BigCount(ideals.size()), nc_cardinality(p));
    for (const auto& I : ideals) {
      auto path = ideal_to_path(I);
      EXPECT_TRUE(in_path_set(path, p));
      EXPECT_EQ(path_to_ideal(path, p), I);
    }
    EXPECT_EQ(ideal_to_path(OrderIdeal::from_elements(p, {})),
              boundary_path(p));
    EXPECT_EQ(ideal_to_path(OrderIdeal::from_elements(p, triangular_poset(p))), maximal_path(p));
  }
}

TEST(Nonnesting, BijectionFromNoncrossing) {
  for (const auto& p : params_up_to(11)) {
    std::set<OrderIdeal> img;
    for (const auto& w : enumerate_nc(p)) img.insert(nc_to_nn(w, p));
    EXPECT_EQ(BigCount(img.size()), nc_cardinality(p));
    EXPECT_EQ(nc_to_nn(Permutation(p.N()), p).size(), 0);
    // c_N lands on the right-comb path U (U R^k)^{n-1} R^k ... fixed by the golden table
    if (p.n > 1) EXPECT_LT(nc_to_nn(Permutation::long_cycle(p.N()), p).size(), static_cast<int>(triangular_poset(p).size()));
  }
}

TEST(Nonnesting, GoldenTable) {
  std::ifstream in(NCPK_GOLDEN_DIR "/nc_to_nn_k2_n3.txt");
  ASSERT_TRUE(in.good());
  std::stringstream want;
  want << in.rdbuf();
  KParams p(2, 3);
  std::ostringstream got;
  for (const auto& w : enumerate_nc(p)) {
    auto I = nc_to_nn(w, p);
    got << w.str() << '\t' << I.str() << '\t' << ideal_to_path(I) << '\n';
  }
  EXPECT_EQ(got.str(), want.str());
}

TEST(Determinant, Counts) {
  EXPECT_EQ(determinant_count(3, 2), 30);
  EXPECT_EQ(determinant_count(4, 3), 340);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(determinant_count(1, k), 2);
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(determinant_count(n, k), nc_cardinality(KParams(k, n)));
      EXPECT_TRUE(alternating_recurrence_check(n, k));
    }
  EXPECT_EQ(bareiss_determinant({{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(bareiss_determinant({{0, 1}, {1, 0}}), -1);
}
