#include "ncpk/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ncpk/nc.hpp"

namespace ncpk {

Permutation BicoloredTree::white_permutation() const { return Permutation::from_cycles(num_edges, white); }
Permutation BicoloredTree::black_permutation() const { return Permutation::from_cycles(num_edges, black); }

bool BicoloredTree::is_tree() const {
  const int V = static_cast<int>(white.size() + black.size());
  if (V != num_edges + 1) return false;
  // union-find over vertices joined by shared edge labels
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> wv(num_edges + 1, -1), bv(num_edges + 1, -1);
  for (size_t i = 0; i < white.size(); ++i)
    for (int e : white[i]) wv[e] = static_cast<int>(i);
  for (size_t i = 0; i < black.size(); ++i)
    for (int e : black[i]) bv[e] = static_cast<int>(white.size() + i);
  int comps = V;
  for (int e = 1; e <= num_edges; ++e) {
    if (wv[e] < 0 || bv[e] < 0) return false;
    int a = find(wv[e]), b = find(bv[e]);
    if (a == b) return false;
    parent[a] = b;
    --comps;
  }
  return comps == 1;
}

bool BicoloredTree::degrees_one_mod(int k) const {
  for (const auto* side : {&white, &black})
    for (const auto& v : *side)
      if ((static_cast<int>(v.size()) - 1) % k != 0) return false;
  return true;
}

BicoloredTree gj_tree(const Permutation& w) {
  if (!is_noncrossing(w) || !has_increasing_cycles(w)) throw std::invalid_argument("gj_tree needs a noncrossing partition");
  BicoloredTree t;
  t.num_edges = w.degree();
  t.white = w.cycles();
  t.black = kreweras(w).cycles();
  if (!t.is_tree()) throw std::logic_error("gj_tree did not produce a tree");
  return t;
}

namespace {

struct Rot {
  // vertex -> edges clockwise; edge -> (white vertex, black vertex)
  std::vector<std::vector<int>> wv, bv;
  std::vector<int> we, be;  // endpoint of each edge
};

Rot index_tree(const BicoloredTree& t) {
  Rot r;
  r.we.assign(t.num_edges + 1, -1);
  r.be.assign(t.num_edges + 1, -1);
  for (const auto& v : t.white) {
    r.wv.push_back(v);
    for (int e : v) r.we[e] = static_cast<int>(r.wv.size()) - 1;
  }
  for (const auto& v : t.black) {
    r.bv.push_back(v);
    for (int e : v) r.be[e] = static_cast<int>(r.bv.size()) - 1;
  }
  return r;
}

int next_in(const std::vector<int>& rot, int e) {
  auto it = std::find(rot.begin(), rot.end(), e);
  ++it;
  return it == rot.end() ? rot.front() : *it;
}

// Map from old edge labels to tour labels.
std::vector<int> tour_labels(const BicoloredTree& t) {
  Rot r = index_tree(t);
  std::vector<int> label(t.num_edges + 1, 0);
  int next = 1, e = t.root_edge;
  // each edge is crossed once in each direction
  for (int step = 0; step < 2 * t.num_edges; ++step) {
    if (step % 2 == 0) {
      if (!label[e]) label[e] = next++;
      e = next_in(r.bv[r.be[e]], e);  // arrive at black, leave by the next edge
    } else {
      e = next_in(r.wv[r.we[e]], e);
    }
  }
  return label;
}

PlaneTree grow(const Rot& r, bool white, int vertex, int parent_edge) {
  const auto& rot = white ? r.wv[vertex] : r.bv[vertex];
  auto it = std::find(rot.begin(), rot.end(), parent_edge);
  PlaneTree node;
  const size_t d = rot.size();
  size_t start = it - rot.begin();
  for (size_t s = 1; s < d; ++s) {
    int e = rot[(start + s) % d];
    int other = white ? r.be[e] : r.we[e];
    node.children.push_back(grow(r, !white, other, e));
  }
  return node;
}

}  // namespace

Permutation tour_readback(const BicoloredTree& t) {
  auto label = tour_labels(t);
  std::vector<Cycle> cs;
  for (const auto& v : t.white) {
    Cycle c;
    for (int e : v) c.push_back(label[e]);
    cs.push_back(c);
  }
  return Permutation::from_cycles(t.num_edges, cs);
}

int PlaneTree::vertex_count() const {
  int c = 1;
  for (const auto& ch : children) c += ch.vertex_count();
  return c;
}

int PlaneTree::internal_count() const {
  if (children.empty()) return 0;
  int c = 1;
  for (const auto& ch : children) c += ch.internal_count();
  return c;
}

bool PlaneTree::is_k_divisible(int k) const {
  if (children.size() % k) return false;
  for (const auto& ch : children)
    if (!ch.is_k_divisible(k)) return false;
  return true;
}

bool PlaneTree::is_k_ary(int k) const {
  if (!children.empty() && static_cast<int>(children.size()) != k + 1) return false;
  for (const auto& ch : children)
    if (!ch.is_k_ary(k)) return false;
  return true;
}

std::string PlaneTree::str() const {
  std::string s = "(";
  for (const auto& ch : children) s += ch.str();
  return s + ")";
}

PlaneTree PlaneTree::parse(const std::string& s) {
  size_t i = 0;
  std::function<PlaneTree()> rec = [&]() -> PlaneTree {
    if (i >= s.size() || s[i] != '(') throw std::invalid_argument("bad tree text");
    ++i;
    PlaneTree t;
    while (i < s.size() && s[i] == '(') t.children.push_back(rec());
    if (i >= s.size() || s[i] != ')') throw std::invalid_argument("bad tree text");
    ++i;
    return t;
  };
  PlaneTree t = rec();
  if (i != s.size()) throw std::invalid_argument("trailing characters in tree text");
  return t;
}

std::pair<PlaneTree, PlaneTree> split_tree(const BicoloredTree& t) {
  Rot r = index_tree(t);
  const int e = t.root_edge;
  return {grow(r, true, r.we[e], e), grow(r, false, r.be[e], e)};
}

BicoloredTree join_trees(const PlaneTree& white_side, const PlaneTree& black_side) {
  BicoloredTree t;
  t.num_edges = white_side.vertex_count() + black_side.vertex_count() - 1;
  int next_edge = 1;
  const int root = next_edge++;
  // rotation of a vertex: parent edge first, then child edges
  std::function<void(const PlaneTree&, bool, int)> place = [&](const PlaneTree& v, bool white, int parent) {
    Cycle rot{parent};
    std::vector<int> child_edges;
    for (size_t i = 0; i < v.children.size(); ++i) child_edges.push_back(next_edge++);
    rot.insert(rot.end(), child_edges.begin(), child_edges.end());
    (white ? t.white : t.black).push_back(rot);
    for (size_t i = 0; i < v.children.size(); ++i) place(v.children[i], !white, child_edges[i]);
  };
  place(white_side, true, root);
  place(black_side, false, root);
  t.root_edge = root;
  auto label = tour_labels(t);
  for (auto* side : {&t.white, &t.black})
    for (auto& v : *side) {
      for (int& e : v) e = label[e];
      std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    }
  std::sort(t.white.begin(), t.white.end());
  std::sort(t.black.begin(), t.black.end());
  t.root_edge = label[root];
  return t;
}

PlaneTree contract(const PlaneTree& t, int k) {
  if (t.children.size() % k) throw std::invalid_argument("tree is not k-divisible");
  // children c_1..c_{ik}: keep the first k, hang the rest off a new (k+1)-th child
  std::function<PlaneTree(size_t)> chain = [&](size_t from) -> PlaneTree {
    PlaneTree node;
    if (from == t.children.size()) return node;
    for (size_t i = from; i < from + k; ++i) node.children.push_back(contract(t.children[i], k));
    node.children.push_back(chain(from + k));
    return node;
  };
  return chain(0);
}

PlaneTree expand(const PlaneTree& t, int k) {
  PlaneTree node;
  const PlaneTree* cur = &t;
  while (!cur->children.empty()) {
    if (static_cast<int>(cur->children.size()) != k + 1) throw std::invalid_argument("tree is not (k+1)-ary");
    for (int i = 0; i < k; ++i) node.children.push_back(expand(cur->children[i], k));
    cur = &cur->children[k];
  }
  return node;
}

std::pair<PlaneTree, PlaneTree> split_and_contract(const BicoloredTree& t, int k) {
  auto [a, b] = split_tree(t);
  return {contract(a, k), contract(b, k)};
}

BicoloredTree expand_and_join(const std::pair<PlaneTree, PlaneTree>& trees, int k) {
  return join_trees(expand(trees.first, k), expand(trees.second, k));
}

std::vector<PlaneTree> enumerate_kary_trees(int internal, int k) {
  if (internal == 0) return {PlaneTree{}};
  std::vector<PlaneTree> out;
  // distribute internal-1 vertices over k+1 subtrees
  std::vector<int> parts(k + 1, 0);
  std::function<void(int, int)> comp = [&](int idx, int left) {
    if (idx == k) {
      parts[k] = left;
      std::vector<std::vector<PlaneTree>> sub;
      for (int p : parts) sub.push_back(enumerate_kary_trees(p, k));
      std::vector<size_t> pick(k + 1, 0);
      for (;;) {
        PlaneTree t;
        for (int i = 0; i <= k; ++i) t.children.push_back(sub[i][pick[i]]);
        out.push_back(std::move(t));
        int i = k;
        while (i >= 0 && ++pick[i] == sub[i].size()) pick[i--] = 0;
        if (i < 0) break;
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      parts[idx] = x;
      comp(idx + 1, left - x);
    }
  };
  comp(0, internal - 1);
  return out;
}

}  // namespace ncpk
