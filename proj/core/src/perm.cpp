#include "ncpk/perm.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "ncpk/counting.hpp"

namespace ncpk {

KParams::KParams(int k_, int n_) : k(k_), n(n_) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
}

Permutation::Permutation(int degree) : img_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int K = static_cast<int>(images.size());
  std::vector<char> seen(K + 1, 0);
  for (int v : images) {
    if (v < 1 || v > K || seen[v]) throw std::invalid_argument("images do not form a permutation");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<Cycle>& cycles) {
  Permutation p(degree);
  std::vector<char> used(degree + 1, 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int x = c[i];
      if (x < 1 || x > degree) throw std::invalid_argument("cycle entry out of range");
      if (used[x]) throw std::invalid_argument("cycles are not disjoint");
      used[x] = 1;
      p.img_[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::cycle(int degree, const Cycle& c) { return from_cycles(degree, {c}); }

Permutation Permutation::long_cycle(int degree) {
  Cycle c(degree);
  std::iota(c.begin(), c.end(), 1);
  return cycle(degree, c);
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<Cycle> cycles;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in permutation text");
    ++i;
    Cycle c;
    for (;;) {
      skip();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw std::invalid_argument("bad number in permutation text");
      i = static_cast<size_t>(ptr - text.data());
      c.push_back(v);
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i] - 1] = i + 1;
  return r;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<char> seen(degree() + 1, 0);
  for (int s = 1; s <= degree(); ++s) {
    if (seen[s]) continue;
    Cycle c;
    for (int x = s; !seen[x]; x = img_[x - 1]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;  // starting at s, the smallest unseen value, so already canonical
}

std::vector<Cycle> Permutation::nontrivial_cycles() const {
  auto cs = cycles();
  std::erase_if(cs, [](const Cycle& c) { return c.size() < 2; });
  return cs;
}

int Permutation::cycle_count() const {
  std::vector<char> seen(degree() + 1, 0);
  int cnt = 0;
  for (int s = 1; s <= degree(); ++s) {
    if (seen[s]) continue;
    ++cnt;
    for (int x = s; !seen[x]; x = img_[x - 1]) seen[x] = 1;
  }
  return cnt;
}

CycleType Permutation::cycle_type() const {
  CycleType t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

bool Permutation::is_even() const { return (degree() - cycle_count()) % 2 == 0; }

std::string Permutation::str() const {
  std::string s;
  for (const auto& c : nontrivial_cycles()) {
    s += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<int> img(v.degree());
  for (int i = 0; i < v.degree(); ++i) img[i] = u(v.images()[i]);
  return Permutation::from_images(std::move(img));
}

size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return boost::hash_range(p.images().begin(), p.images().end());
}

bool is_one_mod_k(const Permutation& w, int k) {
  for (const auto& c : w.cycles())
    if ((static_cast<int>(c.size()) - 1) % k != 0) return false;
  return true;
}

int ell_1(const Permutation& w) { return w.degree() - w.cycle_count(); }

std::optional<int> ell_k(const Permutation& w, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k % 2 == 0 && !w.is_even())
    throw std::domain_error("odd permutation is not a product of (k+1)-cycles for even k");
  if (!is_one_mod_k(w, k)) return std::nullopt;
  return ell_1(w) / k;
}

namespace {

Permutation representative(const CycleType& t) {
  int K = std::accumulate(t.begin(), t.end(), 0);
  std::vector<Cycle> cs;
  int next = 1;
  for (int len : t) {
    Cycle c(len);
    std::iota(c.begin(), c.end(), next);
    next += len;
    cs.push_back(std::move(c));
  }
  return Permutation::from_cycles(K, cs);
}

// All (k+1)-cycles in S_K.
std::vector<Permutation> all_cycles(int K, int len) {
  std::vector<Permutation> out;
  std::vector<int> sel(K);
  std::fill(sel.begin(), sel.begin() + len, 1);
  do {
    Cycle s;
    for (int i = 0; i < K; ++i)
      if (sel[i]) s.push_back(i + 1);
    // fix the first element, permute the rest
    do {
      out.push_back(Permutation::cycle(K, s));
    } while (std::next_permutation(s.begin() + 1, s.end()));
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return out;
}

// Length is constant on conjugacy classes because the generating set is,
// so a breadth-first search over cycle types is exhaustive.
std::map<CycleType, int> class_distances(int K, int k) {
  std::map<CycleType, int> dist;
  auto gens = all_cycles(K, k + 1);
  Permutation id(K);
  dist[id.cycle_type()] = 0;
  std::deque<CycleType> q{id.cycle_type()};
  while (!q.empty()) {
    CycleType t = q.front();
    q.pop_front();
    Permutation rep = representative(t);
    int d = dist[t];
    for (const auto& g : gens) {
      CycleType nt = (rep * g).cycle_type();
      if (dist.emplace(nt, d + 1).second) q.push_back(nt);
    }
  }
  return dist;
}

}  // namespace

int ell_k_oracle(const Permutation& w, int k, int bound) {
  const int K = w.degree();
  if (K > bound) throw BoundExceeded("ell_k_oracle: degree " + std::to_string(K) + " exceeds bound");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k + 1 > K) {
    if (w.is_identity()) return 0;
    throw std::domain_error("no (k+1)-cycles in this degree");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<CycleType, int>> cache;
  std::map<CycleType, int>* table;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({K, k});
    if (it == cache.end()) it = cache.emplace(std::pair{K, k}, class_distances(K, k)).first;
    table = &it->second;
  }
  auto it = table->find(w.cycle_type());
  if (it == table->end()) throw std::domain_error("permutation not generated by (k+1)-cycles");
  return it->second;
}

bool leq_k(const Permutation& u, const Permutation& w, int k) {
  if (!is_one_mod_k(u, k) || !is_one_mod_k(w, k)) return false;
  Permutation d = u.inverse() * w;
  if (!is_one_mod_k(d, k)) return false;
  return ell_1(u) + ell_1(d) == ell_1(w);
}

std::vector<LowerCover> lower_covers_with_factor(const Permutation& w, int k) {
  std::vector<LowerCover> out;
  for (const auto& c : w.cycles()) {
    const int L = static_cast<int>(c.size());
    if (L < k + 1) continue;
    // choose k+1 positions of the cycle; t follows the cyclic order of c
    std::vector<int> sel(L, 0);
    std::fill(sel.begin(), sel.begin() + (k + 1), 1);
    do {
      Cycle t;
      bool ok = true;
      int prev = -1, first = -1;
      for (int i = 0; i < L && ok; ++i) {
        if (!sel[i]) continue;
        if (prev >= 0 && (i - prev) % k != 1 % k) ok = false;
        if (first < 0) first = i;
        prev = i;
        t.push_back(c[i]);
      }
      if (!ok || (first + L - prev) % k != 1 % k) continue;
      std::vector<int> img = w.images();
      // u = w t^{-1}: u(t_{i+1}) = w(t_i)
      for (size_t i = 0; i < t.size(); ++i) img[t[(i + 1) % t.size()] - 1] = w(t[i]);
      Permutation u = Permutation::from_images(std::move(img));
      std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
      out.push_back({std::move(u), std::move(t)});
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  return out;
}

std::vector<Permutation> covers_below(const Permutation& w, int k) {
  std::vector<Permutation> out;
  for (auto& lc : lower_covers_with_factor(w, k)) out.push_back(std::move(lc.u));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpk
