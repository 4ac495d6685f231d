#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncpk/nc.hpp"
#include "ncpk/poset.hpp"

namespace ncpk {

inline constexpr int kDefaultPosetBound = 13;

// NC_{N;k} under the k-order.
struct HasseDiagram {
  KParams params;
  std::vector<Permutation> elements;  // sorted by image vector
  std::vector<int> rank;              // ell_k
  FinitePoset order;
  int bottom = 0;
  int top = 0;

  std::optional<int> index_of(const Permutation& w) const;
  int size() const { return static_cast<int>(elements.size()); }

 private:
  friend HasseDiagram build_poset(KParams, int);
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

HasseDiagram build_poset(KParams p, int bound = kDefaultPosetBound);

// Brute-force statistics on an explicit diagram.
std::vector<BigCount> rank_census(const HasseDiagram& H);
BigCount brute_maximal_chains(const HasseDiagram& H);
BigCount brute_zeta(const HasseDiagram& H, int x);  // multichains of length x-1
BigCount brute_mobius(const HasseDiagram& H);       // mu(bottom, top)
BigCount brute_multichains_by_jump(const HasseDiagram& H, const std::vector<int>& r);

// Block containment for set partitions given by the cycles of u and w.
bool refines(const Permutation& u, const Permutation& w);

// Maximal chain (id = x_0 < ... < x_n = c) <-> factorization c = t_1 ... t_n, t_i = x_{i-1}^{-1} x_i.
std::vector<Cycle> chain_to_factorization(KParams p, const std::vector<Permutation>& chain);
std::vector<Permutation> factorization_to_chain(KParams p, const std::vector<Cycle>& factors);

// All maximal chains as index paths bottom..top (up to limit chains).
std::vector<std::vector<int>> enumerate_maximal_chains(const HasseDiagram& H, size_t limit);

std::string to_dot(const HasseDiagram& H);
std::string rank_census_csv(const HasseDiagram& H);

}  // namespace ncpk
