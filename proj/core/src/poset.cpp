#include "ncpk/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace ncpk {

FinitePoset FinitePoset::from_covers(int size, std::vector<std::pair<int, int>> covers) {
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  FinitePoset P;
  P.covers_ = std::move(covers);
  P.upc_.assign(size, {});
  P.lowc_.assign(size, {});
  for (auto [x, y] : P.covers_) {
    if (x < 0 || y < 0 || x >= size || y >= size || x == y) throw std::invalid_argument("bad cover pair");
    P.upc_[x].push_back(y);
    P.lowc_[y].push_back(x);
  }
  P.down_.assign(size, Bitset(size));
  P.up_.assign(size, Bitset(size));
  P.finish();
  return P;
}

void FinitePoset::finish() {
  const int M = static_cast<int>(upc_.size());
  std::vector<int> indeg(M);
  for (int y = 0; y < M; ++y) indeg[y] = static_cast<int>(lowc_[y].size());
  std::deque<int> q;
  for (int v = 0; v < M; ++v)
    if (!indeg[v]) q.push_back(v);
  topo_.clear();
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    topo_.push_back(v);
    for (int w : upc_[v])
      if (--indeg[w] == 0) q.push_back(w);
  }
  if (static_cast<int>(topo_.size()) != M) throw std::invalid_argument("relation has a cycle");
  for (int y : topo_) {
    down_[y].set(y);
    for (int x : lowc_[y]) down_[y] |= down_[x];
  }
  for (int y = 0; y < M; ++y)
    for (auto x = down_[y].find_first(); x != Bitset::npos; x = down_[y].find_next(x)) up_[x].set(y);
}

FinitePoset FinitePoset::from_relation(int size, const std::function<bool(int, int)>& leq) {
  std::vector<Bitset> down(size, Bitset(size)), up(size, Bitset(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (x == y || leq(x, y)) {
        down[y].set(x);
        up[x].set(y);
      }
  std::vector<std::pair<int, int>> covers;
  for (int y = 0; y < size; ++y)
    for (auto x = down[y].find_first(); x != Bitset::npos; x = down[y].find_next(x)) {
      if (static_cast<int>(x) == y) continue;
      if (down[static_cast<int>(x)].test(y)) throw std::invalid_argument("relation is not antisymmetric");
      if ((up[x] & down[y]).count() == 2) covers.push_back({static_cast<int>(x), y});
    }
  FinitePoset P = from_covers(size, covers);
  for (int y = 0; y < size; ++y)
    if (P.down_[y] != down[y]) throw std::invalid_argument("relation is not transitive");
  return P;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> r;
  for (int v = 0; v < size(); ++v)
    if (lowc_[v].empty()) r.push_back(v);
  return r;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> r;
  for (int v = 0; v < size(); ++v)
    if (upc_[v].empty()) r.push_back(v);
  return r;
}

BigCount count_multichains(const FinitePoset& P, int q) {
  if (q < 0) throw std::invalid_argument("negative chain length");
  const int M = P.size();
  if (q == 0) return 1;
  std::vector<BigCount> f(M, 1), g(M);
  for (int j = 1; j < q; ++j) {
    for (int y = 0; y < M; ++y) {
      BigCount s = 0;
      const Bitset& d = P.down_set(y);
      for (auto x = d.find_first(); x != Bitset::npos; x = d.find_next(x)) s += f[x];
      g[y] = s;
    }
    std::swap(f, g);
  }
  BigCount total = 0;
  for (const auto& v : f) total += v;
  return total;
}

BigCount count_maximal_chains(const FinitePoset& P) {
  std::vector<BigCount> paths(P.size(), 0);
  for (int v : P.linear_extension()) {
    if (P.lower_covers(v).empty()) {
      paths[v] = 1;
      continue;
    }
    for (int u : P.lower_covers(v)) paths[v] += paths[u];
  }
  BigCount total = 0;
  for (int v : P.maximal_elements()) total += paths[v];
  return total;
}

BigCount mobius(const FinitePoset& P, int x, int y) {
  if (!P.leq(x, y)) return 0;
  Bitset interval = P.up_set(x) & P.down_set(y);
  std::map<int, BigCount> mu;
  for (int z : P.linear_extension()) {
    if (!interval.test(z)) continue;
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    BigCount s = 0;
    Bitset below = P.down_set(z) & interval;
    for (auto w = below.find_first(); w != Bitset::npos; w = below.find_next(w))
      if (static_cast<int>(w) != z) s += mu[static_cast<int>(w)];
    mu[z] = -s;
  }
  return mu[y];
}

BigCount count_multichains_by_jump(const FinitePoset& P, const std::vector<int>& rank, int top_rank,
                                   const std::vector<int>& r) {
  if (r.empty()) throw std::invalid_argument("jump vector must have at least one entry");
  const int M = P.size();
  const int q = static_cast<int>(r.size()) - 1;
  if (q == 0) return r[0] == top_rank ? 1 : 0;
  std::vector<BigCount> f(M, 0), g(M);
  for (int x = 0; x < M; ++x)
    if (rank[x] == r[0]) f[x] = 1;
  for (int j = 1; j < q; ++j) {
    for (int y = 0; y < M; ++y) {
      BigCount s = 0;
      const Bitset& d = P.down_set(y);
      for (auto x = d.find_first(); x != Bitset::npos; x = d.find_next(x))
        if (rank[y] - rank[x] == r[j]) s += f[x];
      g[y] = s;
    }
    std::swap(f, g);
  }
  BigCount total = 0;
  for (int y = 0; y < M; ++y)
    if (top_rank - rank[y] == r[q]) total += f[y];
  return total;
}

FinitePoset add_bottom(const FinitePoset& P) {
  const int M = P.size();
  auto covers = P.covers();
  for (int v : P.minimal_elements()) covers.push_back({M, v});
  return FinitePoset::from_covers(M + 1, covers);
}

std::pair<FinitePoset, std::vector<int>> merge_minima(const FinitePoset& P) {
  const int M = P.size();
  std::vector<int> map(M, -1);
  int next = 1;  // index 0 is the merged bottom
  for (int v = 0; v < M; ++v) map[v] = P.lower_covers(v).empty() ? 0 : next++;
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : P.covers()) covers.push_back({map[x], map[y]});
  return {FinitePoset::from_covers(next, covers), map};
}

LatticeCheck check_lattice(const FinitePoset& P) {
  LatticeCheck res;
  const int M = P.size();
  std::vector<int> pos(M);
  for (int i = 0; i < M; ++i) pos[P.linear_extension()[i]] = i;
  auto extremal = [&](const Bitset& S, bool lowest) -> int {
    int best = -1;
    for (auto z = S.find_first(); z != Bitset::npos; z = S.find_next(z))
      if (best < 0 || (lowest ? pos[z] < pos[best] : pos[z] > pos[best])) best = static_cast<int>(z);
    return best;
  };
  for (int x = 0; x < M && res.is_lattice; ++x)
    for (int y = x + 1; y < M; ++y) {
      Bitset ub = P.up_set(x) & P.up_set(y);
      int z = extremal(ub, true);
      if (z < 0 || P.up_set(z) != ub) {
        res.is_lattice = false;
        res.missing_join = std::pair{x, y};
        break;
      }
      Bitset lb = P.down_set(x) & P.down_set(y);
      z = extremal(lb, false);
      if (z < 0 || P.down_set(z) != lb) {
        res.is_lattice = false;
        res.missing_meet = std::pair{x, y};
        break;
      }
    }
  return res;
}

bool covers_are_irredundant(const FinitePoset& P, const std::vector<std::pair<int, int>>& edges) {
  for (auto [x, y] : edges)
    if (!P.less(x, y) || (P.up_set(x) & P.down_set(y)).count() != 2) return false;
  return true;
}

bool isomorphic(const FinitePoset& A, const FinitePoset& B) {
  const int M = A.size();
  if (M != B.size() || A.covers().size() != B.covers().size()) return false;
  auto sig = [](const FinitePoset& P, int v) {
    return std::tuple{P.lower_covers(v).size(), P.upper_covers(v).size(), P.down_set(v).count(),
                      P.up_set(v).count()};
  };
  const auto& order = A.linear_extension();
  std::vector<int> map(M, -1), used(M, 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == M) return true;
    int v = order[i];
    for (int w = 0; w < M; ++w) {
      if (used[w] || sig(A, v) != sig(B, w)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int u = order[j];
        if (A.leq(u, v) != B.leq(map[u], w) || A.leq(v, u) != B.leq(w, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace ncpk
