#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ncpk/counting.hpp"

namespace ncpk {

using Bitset = boost::dynamic_bitset<>;

// Finite poset on {0..size-1} stored as its cover relation plus the full
// order as down-set bitsets.
class FinitePoset {
 public:
  FinitePoset() = default;
  // covers: (x, y) meaning x is covered by y. Throws on cycles.
  static FinitePoset from_covers(int size, std::vector<std::pair<int, int>> covers);
  // Any reflexive-transitive relation; covers computed by transitive reduction.
  static FinitePoset from_relation(int size, const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(down_.size()); }
  bool leq(int x, int y) const { return down_[y].test(x); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  const Bitset& down_set(int y) const { return down_[y]; }
  const Bitset& up_set(int x) const { return up_[x]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return upc_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lowc_[x]; }
  const std::vector<int>& linear_extension() const { return topo_; }
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

 private:
  void finish();
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> upc_, lowc_;
  std::vector<Bitset> down_, up_;
  std::vector<int> topo_;
};

// Number of multichains x_1 <= ... <= x_q (q = 0 gives 1).
BigCount count_multichains(const FinitePoset& P, int q);

// Saturated chains from any minimal element to any maximal element.
BigCount count_maximal_chains(const FinitePoset& P);

// mu(x, y), computed bottom-up from x.
BigCount mobius(const FinitePoset& P, int x, int y);

// Multichains x_1 <= ... <= x_q with rank(x_1) = r_0, rank(x_{i+1}) - rank(x_i) = r_i
// and top_rank - rank(x_q) = r_q, where r has q+1 entries.
BigCount count_multichains_by_jump(const FinitePoset& P, const std::vector<int>& rank, int top_rank,
                                   const std::vector<int>& r);

// New bottom element appended at index size().
FinitePoset add_bottom(const FinitePoset& P);
// All minimal elements identified; returns the quotient and the index map.
std::pair<FinitePoset, std::vector<int>> merge_minima(const FinitePoset& P);

struct LatticeCheck {
  bool is_lattice = true;
  std::optional<std::pair<int, int>> missing_join;
  std::optional<std::pair<int, int>> missing_meet;
};
LatticeCheck check_lattice(const FinitePoset& P);

// Whether the order relation of P is exactly the transitive closure of the
// given edge list (used to test that a move graph is a Hasse diagram).
bool covers_are_irredundant(const FinitePoset& P, const std::vector<std::pair<int, int>>& edges);

// Isomorphism test for small posets by backtracking on the cover graph.
bool isomorphic(const FinitePoset& A, const FinitePoset& B);

}  // namespace ncpk
