#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "ncpk/perm.hpp"

namespace ncpk {

// a < c < b < d with a, b in one cycle and c, d in another.
struct CrossingWitness {
  int a, c, b, d;
};

// Disjoint-cycle noncrossing test on the cycle supports.
std::optional<CrossingWitness> find_crossing(const Permutation& w);
bool is_noncrossing(const Permutation& w);
// Every cycle is increasing once rotated to its minimum.
bool has_increasing_cycles(const Permutation& w);

Permutation kreweras(const Permutation& w);  // w^{-1} c

// Three equivalent characterizations of k-indivisible noncrossing elements.
bool is_k_indivisible_i(const Permutation& w, int k);    // w <=_k c
bool is_k_indivisible_ii(const Permutation& w, int k);   // noncrossing, w and w^{-1}c 1 mod k
bool is_k_indivisible_iii(const Permutation& w, int k);  // noncrossing, blocks and gaps 1 mod k

inline constexpr int kDefaultEnumerationBound = 17;

// All of NC_{N;k} sorted by image vector. Throws BoundExceeded if N > bound.
std::vector<Permutation> enumerate_nc(KParams p, int bound = kDefaultEnumerationBound);

// A validated member of NC_{N;k}.
class NoncrossingElement {
 public:
  NoncrossingElement(KParams p, Permutation w);  // throws std::invalid_argument
  const Permutation& permutation() const { return w_; }
  KParams params() const { return p_; }
  int rank() const;  // ell_k
  NoncrossingElement kreweras() const;

 private:
  KParams p_;
  Permutation w_;
};

}  // namespace ncpk
