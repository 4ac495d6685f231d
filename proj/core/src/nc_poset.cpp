#include "ncpk/nc_poset.hpp"

#include <algorithm>
#include <sstream>

namespace ncpk {

std::optional<int> HasseDiagram::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

HasseDiagram build_poset(KParams p, int bound) {
  if (p.N() > bound) throw BoundExceeded("build_poset: N = " + std::to_string(p.N()) + " exceeds bound");
  HasseDiagram H;
  H.params = p;
  H.elements = enumerate_nc(p, std::max(bound, p.N()));
  const int M = H.size();
  for (int i = 0; i < M; ++i) H.index_.emplace(H.elements[i], i);
  H.rank.resize(M);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < M; ++i) {
    H.rank[i] = ell_1(H.elements[i]) / p.k;
    for (const auto& u : covers_below(H.elements[i], p.k)) {
      auto j = H.index_of(u);
      if (!j) throw std::logic_error("lower cover outside NC: " + u.str());
      covers.push_back({*j, i});
    }
  }
  H.order = FinitePoset::from_covers(M, std::move(covers));
  H.bottom = *H.index_of(Permutation(p.N()));
  H.top = *H.index_of(Permutation::long_cycle(p.N()));
  return H;
}

std::vector<BigCount> rank_census(const HasseDiagram& H) {
  std::vector<BigCount> c(H.params.n + 1, 0);
  for (int r : H.rank) c[r] += 1;
  return c;
}

BigCount brute_maximal_chains(const HasseDiagram& H) { return count_maximal_chains(H.order); }

BigCount brute_zeta(const HasseDiagram& H, int x) {
  if (x < 1) throw std::invalid_argument("brute_zeta needs x >= 1");
  return count_multichains(H.order, x - 1);
}

BigCount brute_mobius(const HasseDiagram& H) { return mobius(H.order, H.bottom, H.top); }

BigCount brute_multichains_by_jump(const HasseDiagram& H, const std::vector<int>& r) {
  return count_multichains_by_jump(H.order, H.rank, H.params.n, r);
}

bool refines(const Permutation& u, const Permutation& w) {
  if (u.degree() != w.degree()) return false;
  std::vector<int> block(w.degree() + 1);
  auto cw = w.cycles();
  for (size_t b = 0; b < cw.size(); ++b)
    for (int x : cw[b]) block[x] = static_cast<int>(b);
  for (const auto& c : u.cycles())
    for (int x : c)
      if (block[x] != block[c[0]]) return false;
  return true;
}

std::vector<Cycle> chain_to_factorization(KParams p, const std::vector<Permutation>& chain) {
  if (static_cast<int>(chain.size()) != p.n + 1) throw std::invalid_argument("chain must have n+1 elements");
  if (!chain.front().is_identity() || chain.back() != Permutation::long_cycle(p.N()))
    throw std::invalid_argument("chain must run from the identity to the long cycle");
  std::vector<Cycle> out;
  for (int i = 1; i <= p.n; ++i) {
    Permutation t = chain[i - 1].inverse() * chain[i];
    auto cs = t.nontrivial_cycles();
    if (cs.size() != 1 || static_cast<int>(cs[0].size()) != p.k + 1 || !leq_k(chain[i - 1], chain[i], p.k))
      throw std::invalid_argument("consecutive chain elements do not differ by a (k+1)-cycle cover");
    out.push_back(cs[0]);
  }
  return out;
}

std::vector<Permutation> factorization_to_chain(KParams p, const std::vector<Cycle>& factors) {
  if (static_cast<int>(factors.size()) != p.n) throw std::invalid_argument("need n factors");
  std::vector<Permutation> chain{Permutation(p.N())};
  for (const auto& t : factors) {
    if (static_cast<int>(t.size()) != p.k + 1) throw std::invalid_argument("factor is not a (k+1)-cycle");
    chain.push_back(chain.back() * Permutation::cycle(p.N(), t));
  }
  if (chain.back() != Permutation::long_cycle(p.N())) throw std::invalid_argument("product is not the long cycle");
  return chain;
}

std::vector<std::vector<int>> enumerate_maximal_chains(const HasseDiagram& H, size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{H.bottom};
  auto rec = [&](auto&& self, int v) -> void {
    if (out.size() >= limit) return;
    if (v == H.top) {
      out.push_back(path);
      return;
    }
    for (int w : H.order.upper_covers(v)) {
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  rec(rec, H.bottom);
  return out;
}

std::string to_dot(const HasseDiagram& H) {
  std::ostringstream os;
  os << "digraph NC {\n  rankdir=BT;\n";
  for (int i = 0; i < H.size(); ++i) os << "  n" << i << " [label=\"" << H.elements[i].str() << "\"];\n";
  const int top_rank = H.rank[H.top];
  for (int l = 0; l <= top_rank; ++l) {
    os << "  { rank=same;";
    for (int i = 0; i < H.size(); ++i)
      if (H.rank[i] == l) os << " n" << i << ";";
    os << " }\n";
  }
  for (auto [x, y] : H.order.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

std::string rank_census_csv(const HasseDiagram& H) {
  std::ostringstream os;
  os << "rank,count\n";
  auto c = rank_census(H);
  for (size_t l = 0; l < c.size(); ++l) os << l << ',' << c[l].get_str() << '\n';
  return os.str();
}

}  // namespace ncpk
