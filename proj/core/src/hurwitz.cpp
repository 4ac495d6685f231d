#include "ncpk/hurwitz.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <stdexcept>

#include "ncpk/nc_poset.hpp"

namespace ncpk {

Permutation Factorization::product() const {
  Permutation p(params.N());
  for (const auto& t : factors) p = p * Permutation::cycle(params.N(), t);
  return p;
}

std::vector<int> Factorization::minima() const {
  std::vector<int> m;
  for (const auto& t : factors) m.push_back(*std::min_element(t.begin(), t.end()));
  return m;
}

std::string Factorization::str() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += '|';
    s += Permutation::cycle(params.N(), factors[i]).str();
  }
  return s;
}

Factorization Factorization::parse(std::string_view text, KParams p) {
  std::vector<Cycle> fs;
  size_t start = 0;
  for (;;) {
    size_t bar = text.find('|', start);
    auto piece = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    auto cs = Permutation::parse(piece, p.N()).nontrivial_cycles();
    if (cs.size() != 1) throw std::invalid_argument("each factor must be a single cycle");
    fs.push_back(cs[0]);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return make_factorization(p, std::move(fs));
}

Factorization make_factorization(KParams p, std::vector<Cycle> factors) {
  if (static_cast<int>(factors.size()) != p.n) throw std::invalid_argument("factorization needs n factors");
  for (auto& t : factors) {
    if (static_cast<int>(t.size()) != p.k + 1) throw std::invalid_argument("factor is not a (k+1)-cycle");
    for (int x : t)
      if (x < 1 || x > p.N()) throw std::invalid_argument("factor entry out of range");
    std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
    if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end())
      throw std::invalid_argument("factor is not an increasing cycle");
  }
  Factorization f{p, std::move(factors)};
  if (f.product() != Permutation::long_cycle(p.N())) throw std::invalid_argument("product is not the long cycle");
  return f;
}

namespace {

void check_index(int i, const Factorization& f) {
  if (i < 1 || i >= static_cast<int>(f.factors.size())) throw std::out_of_range("Hurwitz index out of range");
}

Cycle canonical_cycle(Cycle c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (!std::is_sorted(c.begin(), c.end())) throw std::logic_error("conjugated factor is not increasing");
  return c;
}

// h^{-1} g h as a cycle: entries of g mapped through h^{-1}
Cycle conj_by(const Cycle& g, const Permutation& h_map) {
  Cycle r;
  for (int a : g) r.push_back(h_map(a));
  return canonical_cycle(r);
}

}  // namespace

Factorization hurwitz_sigma(int i, const Factorization& f, bool inverse) {
  check_index(i, f);
  const int N = f.params.N();
  Factorization r = f;
  const Cycle& gi = f.factors[i - 1];
  const Cycle& gj = f.factors[i];
  if (!inverse) {
    Permutation hinv = Permutation::cycle(N, gj).inverse();
    r.factors[i - 1] = gj;
    r.factors[i] = conj_by(gi, hinv);
  } else {
    Permutation g = Permutation::cycle(N, gi);
    r.factors[i - 1] = conj_by(gj, g);
    r.factors[i] = gi;
  }
  return r;
}

Factorization sym_action(int i, const Factorization& f) {
  check_index(i, f);
  auto m = f.minima();
  if (m[i - 1] < m[i]) return hurwitz_sigma(i, f, false);
  if (m[i - 1] > m[i]) return hurwitz_sigma(i, f, true);
  return f;
}

FactorizationCodec::FactorizationCodec(KParams p) : p_(p) {
  if (p.n * p.N() > 128 || p.N() > 32) throw BoundExceeded("factorization does not fit the packed encoding");
  full_ = (static_cast<unsigned __int128>(1) << p.N()) - 1;
}

PackedKey FactorizationCodec::pack(const Factorization& f) const {
  PackedKey key = 0;
  for (int i = 0; i < p_.n; ++i) {
    PackedKey m = 0;
    for (int x : f.factors[i]) m |= static_cast<PackedKey>(1) << (x - 1);
    key |= m << (i * p_.N());
  }
  return key;
}

Factorization FactorizationCodec::unpack(PackedKey key) const {
  Factorization f{p_, {}};
  for (int i = 0; i < p_.n; ++i) {
    uint32_t m = mask(key, i);
    Cycle c;
    for (int x = 0; x < p_.N(); ++x)
      if (m >> x & 1u) c.push_back(x + 1);
    f.factors.push_back(std::move(c));
  }
  return f;
}

PackedKey FactorizationCodec::with_masks(PackedKey key, int i, uint32_t a, uint32_t b) const {
  const int N = p_.N();
  key &= ~(full_ << (i * N));
  key &= ~(full_ << ((i + 1) * N));
  key |= static_cast<PackedKey>(a) << (i * N);
  key |= static_cast<PackedKey>(b) << ((i + 1) * N);
  return key;
}

namespace {
// cyclic predecessor / successor of bit x inside an increasing cycle with support s
inline uint32_t pred_bit(uint32_t s, uint32_t xbit) {
  uint32_t below = s & (xbit - 1);
  uint32_t from = below ? below : s;
  return 1u << (31 - std::countl_zero(from));
}
inline uint32_t succ_bit(uint32_t s, uint32_t xbit) {
  uint32_t above = s & ~((xbit << 1) - 1);
  uint32_t from = above ? above : s;
  return from & (~from + 1);
}
}  // namespace

PackedKey FactorizationCodec::sigma(PackedKey key, int i) const {
  uint32_t a = mask(key, i), b = mask(key, i + 1);
  uint32_t shared = a & b, moved = a & ~b;
  // b^{-1} a b: shared points move to their predecessor in b
  for (uint32_t s = shared; s; s &= s - 1) moved |= pred_bit(b, s & (~s + 1));
  return with_masks(key, i, b, moved);
}

PackedKey FactorizationCodec::sigma_inv(PackedKey key, int i) const {
  uint32_t a = mask(key, i), b = mask(key, i + 1);
  uint32_t shared = a & b, moved = b & ~a;
  // a b a^{-1}: shared points move to their successor in a
  for (uint32_t s = shared; s; s &= s - 1) moved |= succ_bit(a, s & (~s + 1));
  return with_masks(key, i, moved, a);
}

namespace {

inline uint64_t mix(PackedKey k) {
  uint64_t lo = static_cast<uint64_t>(k), hi = static_cast<uint64_t>(k >> 64);
  uint64_t z = lo ^ (hi * 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Insertion-only set of packed keys: arena plus open addressing on indices.
class KeySet {
 public:
  explicit KeySet(size_t cap) : cap_(cap), slots_(1024, 0) {}
  // true if newly inserted
  bool insert(PackedKey k) {
    if ((keys_.size() + 1) * 10 > slots_.size() * 7) grow();
    size_t m = slots_.size() - 1;
    for (size_t h = mix(k) & m;; h = (h + 1) & m) {
      uint32_t s = slots_[h];
      if (!s) {
        if (keys_.size() >= cap_) throw BoundExceeded("orbit exceeds state cap");
        keys_.push_back(k);
        slots_[h] = static_cast<uint32_t>(keys_.size());
        return true;
      }
      if (keys_[s - 1] == k) return false;
    }
  }
  const std::vector<PackedKey>& keys() const { return keys_; }

 private:
  void grow() {
    std::vector<uint32_t> next(slots_.size() * 2, 0);
    size_t m = next.size() - 1;
    for (size_t i = 0; i < keys_.size(); ++i) {
      size_t h = mix(keys_[i]) & m;
      while (next[h]) h = (h + 1) & m;
      next[h] = static_cast<uint32_t>(i + 1);
    }
    slots_.swap(next);
  }
  size_t cap_;
  std::vector<uint32_t> slots_;
  std::vector<PackedKey> keys_;
};

std::vector<PackedKey> orbit_keys(const FactorizationCodec& codec, PackedKey start, size_t max_states) {
  KeySet seen(max_states);
  seen.insert(start);
  const int n = codec.params().n;
  for (size_t head = 0; head < seen.keys().size(); ++head) {
    PackedKey cur = seen.keys()[head];
    for (int i = 0; i + 1 < n; ++i) seen.insert(codec.sigma(cur, i));
  }
  return seen.keys();
}

}  // namespace

std::vector<PackedKey> enumerate_packed_factorizations(KParams p, size_t max_states) {
  if (ipow(p.N(), p.n - 1) > max_states) throw BoundExceeded("factorization count exceeds state cap");
  FactorizationCodec codec(p);
  HasseDiagram H = build_poset(p);
  const int N = p.N();
  // support mask of x^{-1} y on every cover x -> y
  std::vector<std::vector<std::pair<int, uint32_t>>> up(H.size());
  for (auto [x, y] : H.order.covers()) {
    Permutation t = H.elements[x].inverse() * H.elements[y];
    uint32_t m = 0;
    for (int v = 1; v <= N; ++v)
      if (t(v) != v) m |= 1u << (v - 1);
    up[x].push_back({y, m});
  }
  std::vector<PackedKey> out;
  out.reserve(static_cast<size_t>(ipow(p.N(), p.n - 1).get_ui()));
  auto rec = [&](auto&& self, int v, int depth, PackedKey key) -> void {
    if (v == H.top) {
      out.push_back(key);
      return;
    }
    for (auto [w, m] : up[v]) self(self, w, depth + 1, key | (static_cast<PackedKey>(m) << (depth * N)));
  };
  rec(rec, H.bottom, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factorization> enumerate_factorizations(KParams p, size_t max_states) {
  FactorizationCodec codec(p);
  std::vector<Factorization> out;
  for (PackedKey k : enumerate_packed_factorizations(p, max_states)) out.push_back(codec.unpack(k));
  std::sort(out.begin(), out.end());
  return out;
}

size_t hurwitz_orbit_size(const Factorization& f, size_t max_states) {
  FactorizationCodec codec(f.params);
  return orbit_keys(codec, codec.pack(f), max_states).size();
}

std::vector<Factorization> hurwitz_orbit(const Factorization& f, size_t max_states) {
  FactorizationCodec codec(f.params);
  std::vector<Factorization> out;
  for (PackedKey k : orbit_keys(codec, codec.pack(f), max_states)) out.push_back(codec.unpack(k));
  std::sort(out.begin(), out.end());
  return out;
}

OrbitReport orbit_report(const Factorization& f, size_t max_states) {
  OrbitReport r{f, hurwitz_orbit_size(f, max_states), ipow(f.params.N(), f.params.n - 1), false};
  r.transitive = BigCount(static_cast<unsigned long>(r.orbit_size)) == r.expected;
  return r;
}

namespace {

// a <lex b for increasing cycles given by their supports
inline bool mask_less(uint32_t a, uint32_t b) {
  uint32_t d = a ^ b;
  return d && (a & d & (~d + 1));
}

// positions that must precede j: earlier factors sharing a point
std::vector<uint32_t> precedence(const std::vector<uint32_t>& masks) {
  const int n = static_cast<int>(masks.size());
  std::vector<uint32_t> pred(n, 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (masks[i] & masks[j]) pred[j] |= 1u << i;
  return pred;
}

std::vector<uint32_t> representative_masks(const std::vector<uint32_t>& masks) {
  const int n = static_cast<int>(masks.size());
  auto pred = precedence(masks);
  std::vector<uint32_t> out;
  uint32_t done = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (done >> j & 1u || (pred[j] & ~done)) continue;
      if (best < 0 || mask_less(masks[j], masks[best])) best = j;
    }
    done |= 1u << best;
    out.push_back(masks[best]);
  }
  return out;
}

std::vector<uint32_t> to_masks(const Factorization& f) {
  std::vector<uint32_t> m;
  for (const auto& t : f.factors) {
    uint32_t x = 0;
    for (int v : t) x |= 1u << (v - 1);
    m.push_back(x);
  }
  return m;
}

Factorization from_masks(KParams p, const std::vector<uint32_t>& masks) {
  Factorization f{p, {}};
  for (uint32_t m : masks) {
    Cycle c;
    for (int x = 0; x < p.N(); ++x)
      if (m >> x & 1u) c.push_back(x + 1);
    f.factors.push_back(std::move(c));
  }
  return f;
}

BigCount count_extensions(const std::vector<uint32_t>& masks) {
  const int n = static_cast<int>(masks.size());
  if (n > 24) throw BoundExceeded("too many factors for linear-extension count");
  auto pred = precedence(masks);
  std::vector<BigCount> dp(size_t{1} << n, 0);
  dp[0] = 1;
  for (uint32_t S = 0; S < (1u << n); ++S) {
    if (dp[S] == 0) continue;
    for (int j = 0; j < n; ++j)
      if (!(S >> j & 1u) && (pred[j] & ~S) == 0) dp[S | 1u << j] += dp[S];
  }
  return dp.back();
}

}  // namespace

Factorization class_representative(const Factorization& f) {
  return from_masks(f.params, representative_masks(to_masks(f)));
}

BigCount linear_extension_count(const Factorization& f) { return count_extensions(to_masks(f)); }

bool commutation_equivalent(const Factorization& a, const Factorization& b) {
  return a.params == b.params && class_representative(a) == class_representative(b);
}

std::vector<Factorization> class_members(const Factorization& f, size_t max_states) {
  std::set<Factorization> seen{f};
  std::deque<Factorization> q{f};
  while (!q.empty()) {
    Factorization cur = q.front();
    q.pop_front();
    auto m = to_masks(cur);
    for (size_t i = 0; i + 1 < m.size(); ++i) {
      if (m[i] & m[i + 1]) continue;
      Factorization nx = cur;
      std::swap(nx.factors[i], nx.factors[i + 1]);
      if (seen.insert(nx).second) {
        if (seen.size() > max_states) throw BoundExceeded("commutation class exceeds state cap");
        q.push_back(std::move(nx));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CommClass> commutation_classes(KParams p, size_t max_states) {
  FactorizationCodec codec(p);
  const int n = p.n;
  std::vector<PackedKey> reps;
  for (PackedKey key : enumerate_packed_factorizations(p, max_states)) {
    std::vector<uint32_t> m(n);
    for (int i = 0; i < n; ++i) m[i] = codec.mask(key, i);
    auto r = representative_masks(m);
    PackedKey rk = 0;
    for (int i = 0; i < n; ++i) rk |= static_cast<PackedKey>(r[i]) << (i * p.N());
    reps.push_back(rk);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<CommClass> out;
  for (size_t i = 0; i < reps.size();) {
    size_t j = i;
    while (j < reps.size() && reps[j] == reps[i]) ++j;
    out.push_back({codec.unpack(reps[i]), BigCount(static_cast<unsigned long>(j - i))});
    i = j;
  }
  std::sort(out.begin(), out.end(), [](const CommClass& a, const CommClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

}  // namespace ncpk
