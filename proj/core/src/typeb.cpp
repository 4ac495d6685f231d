#include "ncpk/typeb.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ncpk {

SignedPermutation::SignedPermutation(int m) : img_(m) { std::iota(img_.begin(), img_.end(), 1); }

SignedPermutation SignedPermutation::from_images(std::vector<int> img) {
  const int m = static_cast<int>(img.size());
  std::vector<char> seen(m + 1, 0);
  for (int v : img) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > m || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = 1;
  }
  SignedPermutation p;
  p.img_ = std::move(img);
  return p;
}

SignedPermutation SignedPermutation::simple(int i, int m) {
  if (i < 0 || i >= m) throw std::out_of_range("simple reflection index out of range");
  SignedPermutation s(m);
  if (i == 0) s.img_[0] = -1;
  else std::swap(s.img_[i - 1], s.img_[i]);
  return s;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 1; i <= degree(); ++i) {
    int v = img_[i - 1];
    if (v > 0) r[v - 1] = i;
    else r[-v - 1] = -i;
  }
  return from_images(std::move(r));
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::string SignedPermutation::str() const {
  std::string s = "[";
  for (int i = 0; i < degree(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
  return s + "]";
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> r(v.degree());
  for (int i = 1; i <= v.degree(); ++i) r[i - 1] = u(v(i));
  return SignedPermutation::from_images(std::move(r));
}

std::vector<SignedPermutation> reflections_b(int m) {
  std::vector<SignedPermutation> out;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    img[i - 1] = -i;
    out.push_back(SignedPermutation::from_images(img));
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int sgn : {1, -1}) {
        std::vector<int> img(m);
        std::iota(img.begin(), img.end(), 1);
        img[i - 1] = sgn * j;
        img[j - 1] = sgn * i;
        out.push_back(SignedPermutation::from_images(img));
      }
  return out;
}

int reflection_length_b(const SignedPermutation& w) {
  const int m = w.degree();
  if (m > kTypeBDegreeBound) throw BoundExceeded("reflection length search bound exceeded");
  static std::mutex mu;
  static std::map<int, std::map<SignedPermutation, int>> cache;
  std::lock_guard lock(mu);
  auto& dist = cache[m];
  if (dist.empty()) {
    auto refl = reflections_b(m);
    SignedPermutation id(m);
    dist[id] = 0;
    std::deque<SignedPermutation> q{id};
    while (!q.empty()) {
      auto cur = q.front();
      q.pop_front();
      int d = dist[cur];
      for (const auto& t : refl) {
        auto nx = cur * t;
        if (dist.emplace(nx, d + 1).second) q.push_back(nx);
      }
    }
  }
  return dist.at(w);
}

bool absolute_leq_b(const SignedPermutation& u, const SignedPermutation& w) {
  return reflection_length_b(u) + reflection_length_b(u.inverse() * w) == reflection_length_b(w);
}

SignedPermutation GroupedFactorization::product() const {
  SignedPermutation p(k * n);
  for (const auto& f : factors) p = p * f;
  return p;
}

SignedPermutation coxeter_element_b(int m) {
  SignedPermutation c(m);
  for (int i = 0; i < m; ++i) c = c * SignedPermutation::simple(i, m);
  return c;
}

GroupedFactorization build_grouped(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("k, n must be positive");
  const int m = k * n;
  GroupedFactorization g{k, n, {}};
  for (int j = 1; j <= n; ++j) {
    SignedPermutation f(m);
    for (int i = (j - 1) * k; i <= j * k - 1; ++i) f = f * SignedPermutation::simple(i, m);
    g.factors.push_back(f);
  }
  return g;
}

std::vector<GroupedFactorization> b_hurwitz_orbit(const GroupedFactorization& f, size_t max_states,
                                                  bool* product_preserved) {
  if (f.k * f.n > kTypeBDegreeBound) throw BoundExceeded("type B orbit bound exceeded");
  const SignedPermutation c = f.product();
  std::set<GroupedFactorization> seen{f};
  std::deque<GroupedFactorization> q{f};
  bool ok = true;
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (size_t i = 0; i + 1 < cur.factors.size(); ++i)
      for (bool inv : {false, true}) {
        GroupedFactorization nx = cur;
        const auto& a = cur.factors[i];
        const auto& b = cur.factors[i + 1];
        if (!inv) {
          nx.factors[i] = b;
          nx.factors[i + 1] = b.inverse() * a * b;
        } else {
          nx.factors[i] = a * b * a.inverse();
          nx.factors[i + 1] = a;
        }
        if (nx.product() != c) ok = false;
        if (seen.insert(nx).second) {
          if (seen.size() > max_states) throw BoundExceeded("type B orbit exceeds state cap");
          q.push_back(std::move(nx));
        }
      }
  }
  if (product_preserved) *product_preserved = ok;
  return {seen.begin(), seen.end()};
}

std::vector<SignedPermutation> b_prefix_set(const std::vector<GroupedFactorization>& orbit) {
  std::set<SignedPermutation> out;
  for (const auto& g : orbit) {
    SignedPermutation p(g.k * g.n);
    out.insert(p);
    for (const auto& f : g.factors) {
      p = p * f;
      out.insert(p);
    }
  }
  return {out.begin(), out.end()};
}

const char* to_string(ConjectureStatus s) { return s == ConjectureStatus::Pass ? "PASS" : "OPEN"; }

TypeBReport typeb_report(int k, int n, int max_q, size_t max_states) {
  TypeBReport r;
  r.k = k;
  r.n = n;
  auto orbit = b_hurwitz_orbit(build_grouped(k, n), max_states, &r.product_preserved);
  r.orbit_observed = orbit.size();
  r.orbit_conjectured = ipow(k, n - 1) * ipow(n, n);
  r.orbit_status = BigCount(static_cast<unsigned long>(r.orbit_observed)) == r.orbit_conjectured
                       ? ConjectureStatus::Pass
                       : ConjectureStatus::Open;
  auto prefixes = b_prefix_set(orbit);
  r.prefix_observed = prefixes.size();
  r.prefix_conjectured = 2 * binomial(n * k + n - 1, n - 1);
  r.prefix_status = BigCount(static_cast<unsigned long>(r.prefix_observed)) == r.prefix_conjectured
                        ? ConjectureStatus::Pass
                        : ConjectureStatus::Open;
  // zeta of the absolute order restricted to the prefixes: Z(q) counts
  // multichains of length q-1
  const int P = static_cast<int>(prefixes.size());
  std::vector<std::vector<int>> below(P);
  for (int y = 0; y < P; ++y)
    for (int x = 0; x < P; ++x)
      if (absolute_leq_b(prefixes[x], prefixes[y])) below[y].push_back(x);
  std::vector<BigCount> f(P, 1);
  for (int q = 1; q <= max_q; ++q) {
    ZetaObservation z;
    z.q = q;
    if (q == 1) z.observed = 1;
    else {
      if (q > 2) {
        std::vector<BigCount> g(P, 0);
        for (int y = 0; y < P; ++y)
          for (int x : below[y]) g[y] += f[x];
        f = std::move(g);
      }
      z.observed = 0;
      for (const auto& v : f) z.observed += v;
    }
    z.conjectured = BigCount(q) * binomial(static_cast<long>(n) * k * (q - 1) + n - 1, n - 1);
    z.status = z.observed == z.conjectured ? ConjectureStatus::Pass : ConjectureStatus::Open;
    r.zeta.push_back(z);
  }
  return r;
}

}  // namespace ncpk
