#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncpk/counting.hpp"
#include "ncpk/perm.hpp"
#include "ncpk/trees.hpp"

namespace ncpk {

// Words over {U, R}.
using LatticePath = std::string;

// i U's, ik R's, never more than k R's per U in any prefix.
bool is_k_dyck(const LatticePath& p, int k);
// n+1 U's, N R's, weakly above UR(UR^k)^n.
bool in_path_set(const LatticePath& p, KParams params);
LatticePath boundary_path(KParams params);
LatticePath maximal_path(KParams params);  // U^{n+1} R^N

std::vector<LatticePath> enumerate_k_dyck(int i, int k);
std::vector<LatticePath> enumerate_path_set(KParams params);

// (k+1)-ary tree <-> k-Dyck path: preorder, internal vertex -> U, leaf except the last -> R.
LatticePath tree_to_dyck(const PlaneTree& t, int k);
PlaneTree dyck_to_tree(const LatticePath& p, int k);

struct PathSplit {
  int i = 0;
  LatticePath first;   // k-Dyck with i up steps
  LatticePath second;  // k-Dyck with n-i up steps
};

// p = U first R second, split at the smallest i whose east step ik+1 touches the boundary.
PathSplit path_decompose(const LatticePath& p, KParams params);
LatticePath path_recombine(const LatticePath& first, const LatticePath& second);

// Delta_{N;k}: pairs (a, b), a = jk+1 < b <= N-(k-1); (a,b) below (c,d) iff a >= c and b <= d.
std::vector<std::pair<int, int>> triangular_poset(KParams params);

// Order ideal stored by row: row j (a = jk+1) contains b with a < b <= row_end[j].
struct OrderIdeal {
  KParams params;
  std::vector<int> row_end;

  bool contains(int a, int b) const;
  std::vector<std::pair<int, int>> elements() const;
  int size() const;
  std::string str() const;
  static OrderIdeal from_elements(KParams params, const std::vector<std::pair<int, int>>& elems);
  bool operator==(const OrderIdeal& o) const { return row_end == o.row_end; }
  bool operator<(const OrderIdeal& o) const { return row_end < o.row_end; }
};

bool is_order_ideal(KParams params, const std::vector<std::pair<int, int>>& elems);
std::vector<OrderIdeal> enumerate_ideals(KParams params);
LatticePath ideal_to_path(const OrderIdeal& I);
OrderIdeal path_to_ideal(const LatticePath& p, KParams params);

// Composite NC -> NN: tree, split, contract, encode, recombine, read as an ideal.
OrderIdeal nc_to_nn(const Permutation& w, KParams params);

// det (C((n-j)k+2, j-i+1))_{i,j}, fraction-free elimination.
BigCount determinant_count(int n, int k);
BigCount bareiss_determinant(std::vector<std::vector<BigCount>> m);
// Ran(n,k+1,2) = sum_i (-1)^{i+1} C((n-i)k+2, i) Ran(n-i,k+1,2)
bool alternating_recurrence_check(int n, int k);

}  // namespace ncpk
