#include "ncpk/paths.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ncpk/nc.hpp"

namespace ncpk {

bool is_k_dyck(const LatticePath& p, int k) {
  long u = 0, r = 0;
  for (char c : p) {
    if (c == 'U') ++u;
    else if (c == 'R') ++r;
    else return false;
    if (r > k * u) return false;
  }
  return r == k * u;
}

LatticePath boundary_path(KParams params) {
  LatticePath p = "UR";
  for (int i = 0; i < params.n; ++i) p += "U" + std::string(params.k, 'R');
  return p;
}

LatticePath maximal_path(KParams params) { return std::string(params.n + 1, 'U') + std::string(params.N(), 'R'); }

namespace {
// height of the boundary when taking east step m (1-based)
int boundary_height(int m, int k) { return m == 1 ? 1 : 1 + (m - 1 + k - 1) / k; }
}  // namespace

bool in_path_set(const LatticePath& p, KParams params) {
  int u = 0, r = 0;
  for (char c : p) {
    if (c == 'U') ++u;
    else if (c == 'R') {
      ++r;
      if (u < boundary_height(r, params.k)) return false;
    } else return false;
  }
  return u == params.n + 1 && r == params.N();
}

std::vector<LatticePath> enumerate_k_dyck(int i, int k) {
  std::vector<LatticePath> out;
  LatticePath cur;
  std::function<void(int, int)> rec = [&](int u, int r) {
    if (u == i && r == i * k) {
      out.push_back(cur);
      return;
    }
    if (u < i) {
      cur.push_back('U');
      rec(u + 1, r);
      cur.pop_back();
    }
    if (r < u * k) {
      cur.push_back('R');
      rec(u, r + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<LatticePath> enumerate_path_set(KParams params) {
  std::vector<LatticePath> out;
  LatticePath cur;
  const int U = params.n + 1, R = params.N(), k = params.k;
  std::function<void(int, int)> rec = [&](int u, int r) {
    if (u == U && r == R) {
      out.push_back(cur);
      return;
    }
    if (u < U) {
      cur.push_back('U');
      rec(u + 1, r);
      cur.pop_back();
    }
    if (r < R && u >= boundary_height(r + 1, k)) {
      cur.push_back('R');
      rec(u, r + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

LatticePath tree_to_dyck(const PlaneTree& t, int k) {
  if (!t.is_k_ary(k)) throw std::invalid_argument("tree is not (k+1)-ary");
  LatticePath p;
  std::function<void(const PlaneTree&)> pre = [&](const PlaneTree& v) {
    p.push_back(v.children.empty() ? 'R' : 'U');
    for (const auto& c : v.children) pre(c);
  };
  pre(t);
  p.pop_back();  // the last leaf
  return p;
}

PlaneTree dyck_to_tree(const LatticePath& p, int k) {
  if (!is_k_dyck(p, k)) throw std::invalid_argument("not a k-Dyck path");
  const LatticePath q = p + "R";
  size_t i = 0;
  std::function<PlaneTree()> rec = [&]() -> PlaneTree {
    PlaneTree t;
    if (q[i++] == 'R') return t;
    for (int c = 0; c <= k; ++c) t.children.push_back(rec());
    return t;
  };
  PlaneTree t = rec();
  if (i != q.size()) throw std::logic_error("k-Dyck decoding did not consume the word");
  return t;
}

PathSplit path_decompose(const LatticePath& p, KParams params) {
  if (!in_path_set(p, params)) throw std::invalid_argument("path is not in the bounded path set");
  const int k = params.k;
  int u = 0, r = 0;
  for (size_t pos = 0; pos < p.size(); ++pos) {
    if (p[pos] == 'U') {
      ++u;
      continue;
    }
    ++r;
    if ((r - 1) % k == 0 && u == (r - 1) / k + 1) {
      PathSplit s;
      s.i = (r - 1) / k;
      s.first = p.substr(1, pos - 1);
      s.second = p.substr(pos + 1);
      if (!is_k_dyck(s.first, k) || !is_k_dyck(s.second, k)) throw std::logic_error("decomposition pieces are not k-Dyck");
      return s;
    }
  }
  throw std::logic_error("no touch point found");
}

LatticePath path_recombine(const LatticePath& first, const LatticePath& second) { return "U" + first + "R" + second; }

std::vector<std::pair<int, int>> triangular_poset(KParams params) {
  std::vector<std::pair<int, int>> out;
  const int M = params.N() - (params.k - 1);
  for (int j = 0; j < params.n; ++j)
    for (int b = j * params.k + 2; b <= M; ++b) out.push_back({j * params.k + 1, b});
  return out;
}

bool OrderIdeal::contains(int a, int b) const {
  if ((a - 1) % params.k) return false;
  int j = (a - 1) / params.k;
  return j >= 0 && j < params.n && b > a && b <= row_end[j];
}

std::vector<std::pair<int, int>> OrderIdeal::elements() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < params.n; ++j)
    for (int b = j * params.k + 2; b <= row_end[j]; ++b) out.push_back({j * params.k + 1, b});
  return out;
}

int OrderIdeal::size() const { return static_cast<int>(elements().size()); }

std::string OrderIdeal::str() const {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : elements()) {
    s += (first ? "" : ",") + std::string("(") + std::to_string(a) + "," + std::to_string(b) + ")";
    first = false;
  }
  return s + "}";
}

bool is_order_ideal(KParams params, const std::vector<std::pair<int, int>>& elems) {
  auto all = triangular_poset(params);
  auto has = [&](std::pair<int, int> e) { return std::find(elems.begin(), elems.end(), e) != elems.end(); };
  for (auto e : elems) {
    if (std::find(all.begin(), all.end(), e) == all.end()) return false;
    for (auto f : all)
      if (f.first >= e.first && f.second <= e.second && !has(f)) return false;
  }
  return true;
}

OrderIdeal OrderIdeal::from_elements(KParams params, const std::vector<std::pair<int, int>>& elems) {
  if (!is_order_ideal(params, elems)) throw std::invalid_argument("not an order ideal");
  OrderIdeal I{params, {}};
  for (int j = 0; j < params.n; ++j) I.row_end.push_back(j * params.k + 1);
  for (auto [a, b] : elems) {
    int j = (a - 1) / params.k;
    I.row_end[j] = std::max(I.row_end[j], b);
  }
  if (I.elements().size() != elems.size()) throw std::invalid_argument("ideal rows are not intervals");
  return I;
}

std::vector<OrderIdeal> enumerate_ideals(KParams params) {
  std::vector<OrderIdeal> out;
  const int M = params.N() - (params.k - 1), k = params.k, n = params.n;
  std::vector<int> f(n);
  // row ends are nondecreasing with f_j >= jk+1
  std::function<void(int, int)> rec = [&](int j, int lo) {
    if (j == n) {
      out.push_back({params, f});
      return;
    }
    for (int v = std::max(lo, j * k + 1); v <= M; ++v) {
      f[j] = v;
      rec(j + 1, v);
    }
  };
  rec(0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

LatticePath ideal_to_path(const OrderIdeal& I) {
  const int n = I.params.n, M = I.params.N() - (I.params.k - 1);
  // R's before the l-th up step: 0, then M - f_{n-1}, M - f_{n-2}, ...
  std::vector<int> x{0};
  for (int l = 0; l < n; ++l) x.push_back(M - I.row_end[n - 1 - l]);
  LatticePath p;
  int r = 0;
  for (int v : x) {
    p += std::string(v - r, 'R');
    r = v;
    p += 'U';
  }
  p += std::string(I.params.N() - r, 'R');
  return p;
}

OrderIdeal path_to_ideal(const LatticePath& p, KParams params) {
  if (!in_path_set(p, params)) throw std::invalid_argument("path is not in the bounded path set");
  const int n = params.n, M = params.N() - (params.k - 1);
  std::vector<int> x;
  int r = 0;
  for (char c : p) {
    if (c == 'R') ++r;
    else x.push_back(r);
  }
  OrderIdeal I{params, std::vector<int>(n)};
  for (int l = 0; l < n; ++l) I.row_end[n - 1 - l] = M - x[l + 1];
  return I;
}

OrderIdeal nc_to_nn(const Permutation& w, KParams params) {
  if (w.degree() != params.N() || !is_k_indivisible_iii(w, params.k))
    throw std::invalid_argument("nc_to_nn needs an element of NC_{N;k}");
  auto trees = split_and_contract(gj_tree(w), params.k);
  LatticePath p = path_recombine(tree_to_dyck(trees.first, params.k), tree_to_dyck(trees.second, params.k));
  return path_to_ideal(p, params);
}

BigCount bareiss_determinant(std::vector<std::vector<BigCount>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  BigCount prev = 1;
  int sign = 1;
  for (size_t c = 0; c + 1 < n; ++c) {
    if (m[c][c] == 0) {
      size_t r = c + 1;
      while (r < n && m[r][c] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[c], m[r]);
      sign = -sign;
    }
    for (size_t i = c + 1; i < n; ++i)
      for (size_t j = c + 1; j < n; ++j) m[i][j] = exact_div(m[i][j] * m[c][c] - m[i][c] * m[c][j], prev);
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

BigCount determinant_count(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::vector<BigCount>> m(n, std::vector<BigCount>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = binomial((n - j) * k + 2, j - i + 1);
  return bareiss_determinant(std::move(m));
}

bool alternating_recurrence_check(int n, int k) {
  BigCount s = 0;
  for (int i = 1; i <= n; ++i) {
    BigCount term = binomial((n - i) * k + 2, i) * raney(n - i, k + 1, 2);
    s += (i % 2) ? term : BigCount(-term);
  }
  return s == raney(n, k + 1, 2);
}

}  // namespace ncpk
