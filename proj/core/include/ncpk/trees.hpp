#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncpk/perm.hpp"

namespace ncpk {

// Plane edge-rooted bicolored tree with labeled edges 1..N. Each vertex
// stores its edges in clockwise order.
struct BicoloredTree {
  int num_edges = 0;
  std::vector<Cycle> white;
  std::vector<Cycle> black;
  int root_edge = 1;

  Permutation white_permutation() const;  // rotation system on white vertices
  Permutation black_permutation() const;
  bool is_tree() const;
  bool degrees_one_mod(int k) const;
  bool operator==(const BicoloredTree&) const = default;
};

// White vertices are the cycles of w, black vertices the cycles of w^{-1}c.
BicoloredTree gj_tree(const Permutation& w);

// Relabel edges by the tour that starts on the root edge from white to black
// and keeps the tree on the right; returns the white rotation under those labels.
Permutation tour_readback(const BicoloredTree& t);

struct PlaneTree {
  std::vector<PlaneTree> children;

  int vertex_count() const;
  int internal_count() const;
  bool is_k_divisible(int k) const;  // child counts are multiples of k
  bool is_k_ary(int k) const;        // every internal vertex has k+1 children
  std::string str() const;           // nested parentheses, leaf = "()"
  static PlaneTree parse(const std::string& s);
  bool operator==(const PlaneTree&) const = default;
};

// Delete the root edge; the white and black sides as k-divisible trees.
std::pair<PlaneTree, PlaneTree> split_tree(const BicoloredTree& t);
// Rejoin two rooted trees by a root edge and label by the tour.
BicoloredTree join_trees(const PlaneTree& white_side, const PlaneTree& black_side);

// k-divisible <-> (k+1)-ary along right-most children.
PlaneTree contract(const PlaneTree& t, int k);
PlaneTree expand(const PlaneTree& t, int k);

std::pair<PlaneTree, PlaneTree> split_and_contract(const BicoloredTree& t, int k);
BicoloredTree expand_and_join(const std::pair<PlaneTree, PlaneTree>& trees, int k);

std::vector<PlaneTree> enumerate_kary_trees(int internal, int k);

}  // namespace ncpk
