#include "ncpk/mdiv.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ncpk {

MultichainElement make_multichain_element(KParams p, std::vector<Permutation> chain) {
  if (chain.empty()) throw std::invalid_argument("m-multichain must have m >= 1 entries");
  const Permutation c = Permutation::long_cycle(p.N());
  MultichainElement e;
  Permutation prev(p.N());
  for (const auto& x : chain) {
    if (x.degree() != p.N() || !leq_k(prev, x, p.k) || !leq_k(x, c, p.k))
      throw std::invalid_argument("not a multichain of NC_{N;k}");
    e.delta.push_back(prev.inverse() * x);
    prev = x;
  }
  e.delta.push_back(prev.inverse() * c);
  e.chain = std::move(chain);
  return e;
}

bool mposet_leq(KParams p, const MultichainElement& a, const MultichainElement& b) {
  if (a.delta.size() != b.delta.size()) throw std::invalid_argument("m mismatch");
  for (size_t i = 1; i < a.delta.size(); ++i)
    if (!leq_k(b.delta[i], a.delta[i], p.k)) return false;
  return true;
}

MPoset build_mposet(KParams p, int m, size_t max_elements) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BigCount expected = mzeta(p, m, 2);
  if (expected > max_elements) throw BoundExceeded("build_mposet: " + expected.get_str() + " elements exceed bound");
  HasseDiagram H = build_poset(p);
  MPoset P;
  P.params = p;
  P.m = m;
  // multichains by DFS over up-sets
  std::vector<int> idx;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(idx.size()) == m) {
      std::vector<Permutation> ch;
      for (int i : idx) ch.push_back(H.elements[i]);
      P.elements.push_back(make_multichain_element(p, std::move(ch)));
      P.rank.push_back(H.rank[idx.front()]);
      return;
    }
    const Bitset& up = H.order.up_set(from);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      idx.push_back(static_cast<int>(y));
      self(self, static_cast<int>(y));
      idx.pop_back();
    }
  };
  rec(rec, H.bottom);

  // distinct deltas and their pairwise order, cached
  std::map<Permutation, int> delta_id;
  std::vector<Permutation> deltas;
  std::vector<std::vector<int>> ids(P.elements.size());
  for (size_t e = 0; e < P.elements.size(); ++e)
    for (int i = 1; i <= m; ++i) {
      const auto& d = P.elements[e].delta[i];
      auto [it, fresh] = delta_id.emplace(d, static_cast<int>(deltas.size()));
      if (fresh) deltas.push_back(d);
      ids[e].push_back(it->second);
    }
  const int D = static_cast<int>(deltas.size());
  std::vector<Bitset> dleq(D, Bitset(D));  // dleq[a][b]: deltas[a] <=_k deltas[b]
  for (int a = 0; a < D; ++a)
    for (int b = 0; b < D; ++b)
      if (leq_k(deltas[a], deltas[b], p.k)) dleq[a].set(b);
  const int M = static_cast<int>(P.elements.size());
  P.order = FinitePoset::from_relation(M, [&](int x, int y) {
    for (int i = 0; i < m; ++i)
      if (!dleq[ids[y][i]].test(ids[x][i])) return false;
    return true;
  });
  for (int e = 0; e < M; ++e) {
    bool all_c = true;
    for (const auto& x : P.elements[e].chain) all_c = all_c && x == H.elements[H.top];
    if (all_c) P.top = e;
  }
  return P;
}

BigCount brute_mzeta(const MPoset& P, int x) {
  if (x < 1) throw std::invalid_argument("brute_mzeta needs x >= 1");
  return count_multichains(P.order, x - 1);
}

BigCount brute_m_maximal_chains(const MPoset& P) { return count_maximal_chains(P.order); }

BigCount brute_m_mobius(const MPoset& P, MVariant v) {
  if (v == MVariant::Hat) {
    FinitePoset Q = add_bottom(P.order);
    return mobius(Q, P.order.size(), P.top);
  }
  auto [Q, map] = merge_minima(P.order);
  return mobius(Q, 0, map[P.top]);
}

BigCount brute_m_rank_jump(const MPoset& P, const std::vector<int>& r) {
  return count_multichains_by_jump(P.order, P.rank, P.params.n, r);
}

std::string to_dot(const MPoset& P) {
  std::ostringstream os;
  os << "digraph NCm {\n  rankdir=BT;\n  label=\"m=" << P.m << "\";\n";
  for (size_t i = 0; i < P.elements.size(); ++i) {
    os << "  n" << i << " [label=\"";
    for (size_t j = 0; j < P.elements[i].chain.size(); ++j) os << (j ? " <= " : "") << P.elements[i].chain[j].str();
    os << "\"];\n";
  }
  for (auto [x, y] : P.order.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ncpk
