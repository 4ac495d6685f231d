#pragma once

#include <vector>

#include "ncpk/formulas.hpp"
#include "ncpk/nc_poset.hpp"

namespace ncpk {

// An m-multichain x_1 <= ... <= x_m of NC_{N;k} with its delta sequence
// d_0 = x_1, d_i = x_i^{-1} x_{i+1}, d_m = x_m^{-1} c.
struct MultichainElement {
  std::vector<Permutation> chain;
  std::vector<Permutation> delta;  // m+1 entries, d_0 first
};

MultichainElement make_multichain_element(KParams p, std::vector<Permutation> chain);

// C <= C' iff d'_i <=_k d_i for 1 <= i <= m.
bool mposet_leq(KParams p, const MultichainElement& a, const MultichainElement& b);

struct MPoset {
  KParams params;
  int m = 1;
  std::vector<MultichainElement> elements;
  std::vector<int> rank;  // ell_k(x_1)
  FinitePoset order;
  int top = 0;  // (c, ..., c)
};

inline constexpr size_t kDefaultMPosetBound = 6000;

MPoset build_mposet(KParams p, int m, size_t max_elements = kDefaultMPosetBound);

BigCount brute_mzeta(const MPoset& P, int x);
BigCount brute_m_maximal_chains(const MPoset& P);
BigCount brute_m_mobius(const MPoset& P, MVariant v);
BigCount brute_m_rank_jump(const MPoset& P, const std::vector<int>& r);

std::string to_dot(const MPoset& P);

}  // namespace ncpk
