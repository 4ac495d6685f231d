#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "ncpk/formulas.hpp"
#include "ncpk/geometry.hpp"
#include "ncpk/hurwitz.hpp"

using namespace ncpk;

namespace {

std::set<int> support(const Cycle& c) { return {c.begin(), c.end()}; }

// Some ordering of the given hulls (as increasing cycles) whose product is c_N.
std::optional<Factorization> order_hulls(KParams p, std::vector<Cycle> hulls) {
  std::sort(hulls.begin(), hulls.end());
  do {
    try {
      return make_factorization(p, hulls);
    } catch (const std::invalid_argument&) {
    }
  } while (std::next_permutation(hulls.begin(), hulls.end()));
  return std::nullopt;
}

}  // namespace

TEST(Theta, WorkedEightAngulation) {
  KParams p(3, 5);
  auto f = order_hulls(p, {{4, 5, 15, 16}, {1, 2, 3, 16}, {10, 11, 12, 13}, {5, 6, 13, 14}, {6, 7, 8, 9}});
  ASSERT_TRUE(f.has_value());
  Dissection d = theta(*f);
  EXPECT_EQ(d.diagonals, (std::set<Diagonal>{{16, 3}, {5, 14}, {6, 9}, {13, 9}}));
  EXPECT_TRUE(d.is_valid());
  EXPECT_EQ(theta_inverse(d), class_representative(*f));

  Dissection r = rotate_diagonal(d, {6, 9}, Rotation::CW);
  EXPECT_EQ(r.diagonals, (std::set<Diagonal>{{16, 3}, {5, 14}, {13, 6}, {13, 9}}));
  auto g = theta_inverse(r);
  bool found = false;
  for (const auto& t : g.factors) found |= support(t) == std::set<int>{7, 8, 9, 13};
  EXPECT_TRUE(found) << g.str();
  EXPECT_EQ(rotate_diagonal(r, {13, 6}, Rotation::CCW), d);
}

TEST(Theta, TrivialCase) {
  for (int k = 1; k <= 4; ++k) {
    KParams p(k, 1);
    auto f = make_factorization(p, {Permutation::long_cycle(p.N()).cycles().front()});
    EXPECT_TRUE(theta(f).diagonals.empty());
    EXPECT_EQ(theta_inverse(Dissection{p, {}}), f);
  }
}

TEST(Theta, BijectionOntoDissections) {
  for (const auto& p : params_up_to(8)) {
    std::set<Dissection> img;
    for (const auto& c : commutation_classes(p)) {
      Dissection d = theta(c.representative);
      EXPECT_TRUE(d.is_valid()) << c.representative.str();
      EXPECT_EQ(static_cast<int>(d.diagonals.size()), p.n - 1);
      EXPECT_EQ(theta_inverse(d), c.representative);
      EXPECT_EQ(theta_inverse_class(d).size, c.size);
      img.insert(d);
      for (const auto& g : class_members(c.representative)) EXPECT_EQ(theta(g), d);
    }
    EXPECT_EQ(BigCount(img.size()), commutation_class_count(p));
  }
}

TEST(Dissection, Validity) {
  KParams p(1, 3);
  EXPECT_TRUE((Dissection{p, {{2, 4}, {3, 4}}}).is_valid());
  EXPECT_FALSE((Dissection{p, {{1, 3}, {2, 4}}}).is_valid());  // crossing
  EXPECT_FALSE((Dissection{p, {{2, 4}}}).is_valid());          // a hexagonal face
  EXPECT_EQ((Dissection{p, {{2, 4}, {3, 4}}}).str(), "(2,4b)(3,4b)");
}

// Inverse Hurwitz moves are clockwise rotations of the separating diagonal.
TEST(Theta, CommutingSquare) {
  for (const auto& p : params_up_to(9)) {
    if (count_maximal_chains(p) > 20000) continue;
    size_t applicable = 0;
    for (const auto& f : enumerate_factorizations(p)) {
      Dissection d = theta(f);
      auto detail = theta_detailed(f);
      for (int i = 1; i < p.n; ++i) {
        const auto a = support(f.factors[i - 1]), b = support(f.factors[i]);
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) continue;
        auto it = std::find_if(detail.begin(), detail.end(), [&](const ThetaDiagonal& td) {
          auto x = support(td.first), y = support(td.second);
          return (x == a && y == b) || (x == b && y == a);
        });
        ASSERT_NE(it, detail.end()) << f.str() << " i=" << i;
        ++applicable;
        EXPECT_EQ(theta(hurwitz_sigma(i, f, true)), rotate_diagonal(d, it->d, Rotation::CW)) << f.str() << " i=" << i;
        EXPECT_EQ(theta(hurwitz_sigma(i, f, false)), rotate_diagonal(d, it->d, Rotation::CCW)) << f.str() << " i=" << i;
      }
    }
    if (p.n > 1) EXPECT_GT(applicable, 0u);
  }
}

TEST(Rotation, InverseMoves) {
  for (const auto& p : params_up_to(9)) {
    for (const auto& c : commutation_classes(p)) {
      Dissection d = theta(c.representative);
      for (const auto& g : d.diagonals) {
        Dissection cw = rotate_diagonal(d, g, Rotation::CW);
        EXPECT_TRUE(cw.is_valid());
        EXPECT_EQ(static_cast<int>(rotation_context(d, g).size()), 4 * p.k + 2);
        Diagonal moved = *std::find_if(cw.diagonals.begin(), cw.diagonals.end(),
                                       [&](const Diagonal& x) { return !d.diagonals.count(x); });
        EXPECT_EQ(rotate_diagonal(cw, moved, Rotation::CCW), d);
      }
    }
  }
}

TEST(Cambrian, ReferenceLatticeOneThree) {
  KParams p(1, 3);
  auto L = build_cambrian(p);
  ASSERT_EQ(L.classes.size(), 12u);
  EXPECT_TRUE(L.lattice_checked);
  EXPECT_TRUE(L.lattice.is_lattice);
  EXPECT_TRUE(L.moves_are_covers);
  EXPECT_TRUE(L.minimum_as_expected);
  EXPECT_TRUE(L.maximum_as_expected);
  EXPECT_EQ(L.classes[L.minimum].representative, cambrian_bottom_factorization(p));
  EXPECT_TRUE(commutation_equivalent(L.classes[L.maximum].representative, cambrian_top_factorization(p)));

  auto ref = oracle::cambrian_one_three();
  std::vector<int> node_of(12, -1);
  for (size_t v = 0; v < ref.nodes.size(); ++v) {
    auto f = order_hulls(p, ref.nodes[v]);
    for (size_t i = 0; i < L.classes.size(); ++i)
      if (commutation_equivalent(L.classes[i].representative, f)) node_of[v] = static_cast<int>(i);
    ASSERT_GE(node_of[v], 0) << f.str();
    EXPECT_EQ(theta(f).str(), quad_from_positions(p, ref.quads[v]).str()) << v + 1;
  }
  std::set<std::pair<int, int>> want, got(L.order.covers().begin(), L.order.covers().end());
  for (auto [a, b] : ref.edges) want.insert({node_of[a], node_of[b]});
  EXPECT_EQ(got, want);
  EXPECT_TRUE(isomorphic(L.order, FinitePoset::from_covers(12, ref.edges)));
}

TEST(Cambrian, SmallCases) {
  EXPECT_EQ(build_cambrian(KParams(2, 1)).classes.size(), 1u);
  auto L = build_cambrian(KParams(2, 2));
  EXPECT_EQ(L.classes.size(), 5u);
  for (const auto& p : params_up_to(9)) {
    if (p.k == 1 && p.n > 6) continue;  // above the lattice-check threshold
    auto C = build_cambrian(p);
    EXPECT_EQ(BigCount(C.classes.size()), commutation_class_count(p));
    EXPECT_TRUE(C.moves_are_covers);
    EXPECT_TRUE(C.minimum_as_expected && C.maximum_as_expected);
    EXPECT_TRUE(C.lattice_checked) << "k=" << p.k << " n=" << p.n << " size " << C.classes.size();
    EXPECT_TRUE(C.lattice.is_lattice) << "k=" << p.k << " n=" << p.n;
  }
  auto dot = to_dot(L);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
}
