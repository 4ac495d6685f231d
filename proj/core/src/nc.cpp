#include "ncpk/nc.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncpk/counting.hpp"

namespace ncpk {

std::optional<CrossingWitness> find_crossing(const Permutation& w) {
  auto cs = w.nontrivial_cycles();
  for (auto& c : cs) std::sort(c.begin(), c.end());
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      // merge the two supports and record the run boundaries
      const auto& A = cs[i];
      const auto& B = cs[j];
      std::vector<std::pair<int, int>> runs;  // (owner, first element)
      size_t x = 0, y = 0;
      while (x < A.size() || y < B.size()) {
        int owner, v;
        if (y == B.size() || (x < A.size() && A[x] < B[y])) {
          owner = 0;
          v = A[x++];
        } else {
          owner = 1;
          v = B[y++];
        }
        if (runs.empty() || runs.back().first != owner) runs.push_back({owner, v});
      }
      if (runs.size() >= 4) return CrossingWitness{runs[0].second, runs[1].second, runs[2].second, runs[3].second};
    }
  }
  return std::nullopt;
}

bool is_noncrossing(const Permutation& w) { return !find_crossing(w).has_value(); }

bool has_increasing_cycles(const Permutation& w) {
  for (const auto& c : w.cycles())
    if (!std::is_sorted(c.begin(), c.end())) return false;
  return true;
}

Permutation kreweras(const Permutation& w) { return w.inverse() * Permutation::long_cycle(w.degree()); }

namespace {
int params_k_from_degree(int N, int k) {
  if (k < 1 || N < 1 || (N - 1) % k != 0) throw std::invalid_argument("degree is not of the form kn+1");
  return (N - 1) / k;
}
}  // namespace

bool is_k_indivisible_iii(const Permutation& w, int k) {
  params_k_from_degree(w.degree(), k);
  if (!has_increasing_cycles(w) || !is_noncrossing(w)) return false;
  for (const auto& c : w.cycles()) {
    if ((static_cast<int>(c.size()) - 1) % k != 0) return false;
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if ((c[i + 1] - c[i]) % k != 1 % k) return false;
  }
  return true;
}

bool is_k_indivisible_ii(const Permutation& w, int k) {
  params_k_from_degree(w.degree(), k);
  return has_increasing_cycles(w) && is_noncrossing(w) && is_one_mod_k(w, k) && is_one_mod_k(kreweras(w), k);
}

bool is_k_indivisible_i(const Permutation& w, int k) {
  const int n = params_k_from_degree(w.degree(), k);
  if (k % 2 == 0 && !w.is_even()) return false;  // not in the group at all
  Permutation rest = kreweras(w);
  auto a = ell_k(w, k);
  auto b = ell_k(rest, k);
  if (!a || !b) {
    // Outside the closed form: exhaustive lengths for small degree.
    if (w.degree() > 10) return false;
    int la = a ? *a : ell_k_oracle(w, k);
    int lb = b ? *b : ell_k_oracle(rest, k);
    return la + lb == n;
  }
  return *a + *b == n;
}

std::vector<Permutation> enumerate_nc(KParams p, int bound) {
  const int N = p.N(), k = p.k;
  if (N > bound) throw BoundExceeded("enumerate_nc: N = " + std::to_string(N) + " exceeds bound");
  const int one = 1 % k;
  std::vector<Permutation> out;
  std::vector<std::vector<int>> open, closed;
  auto ok_size = [&](const std::vector<int>& b) { return static_cast<int>(b.size()) % k == one; };

  auto emit = [&] {
    std::vector<int> img(N);
    auto put = [&](const std::vector<int>& b) {
      for (size_t i = 0; i < b.size(); ++i) img[b[i] - 1] = b[(i + 1) % b.size()];
    };
    for (const auto& b : closed) put(b);
    for (const auto& b : open) put(b);
    out.push_back(Permutation::from_images(std::move(img)));
  };

  // Blocks are scanned left to right; joining an open block closes every
  // block opened after it (they would cross otherwise).
  auto rec = [&](auto&& self, int x) -> void {
    if (x > N) {
      for (const auto& b : open)
        if (!ok_size(b)) return;
      emit();
      return;
    }
    open.push_back({x});
    self(self, x + 1);
    open.pop_back();
    for (int d = static_cast<int>(open.size()) - 1; d >= 0; --d) {
      if (d + 1 < static_cast<int>(open.size()) && !ok_size(open[d + 1])) break;
      if ((x - open[d].back()) % k != one) continue;
      std::vector<std::vector<int>> popped(open.begin() + d + 1, open.end());
      open.resize(d + 1);
      for (auto& b : popped) closed.push_back(b);
      open[d].push_back(x);
      self(self, x + 1);
      open[d].pop_back();
      closed.resize(closed.size() - popped.size());
      for (auto& b : popped) open.push_back(std::move(b));
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

NoncrossingElement::NoncrossingElement(KParams p, Permutation w) : p_(p), w_(std::move(w)) {
  if (w_.degree() != p_.N()) throw std::invalid_argument("degree does not match N");
  if (!is_k_indivisible_iii(w_, p_.k)) throw std::invalid_argument("not a k-indivisible noncrossing permutation");
}

int NoncrossingElement::rank() const { return ell_1(w_) / p_.k; }

NoncrossingElement NoncrossingElement::kreweras() const { return NoncrossingElement(p_, ncpk::kreweras(w_)); }

}  // namespace ncpk
