#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncpk {

// k, n with N = kn + 1.
struct KParams {
  int k = 1;
  int n = 1;
  KParams() = default;
  KParams(int k_, int n_);
  int N() const { return k * n + 1; }
  bool operator==(const KParams&) const = default;
};

using Cycle = std::vector<int>;
using CycleType = std::vector<int>;  // cycle lengths, non-increasing

// Permutation of {1..K}; composition is right-to-left: (u*v)(x) = u(v(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation from_images(std::vector<int> images);  // images[i] = w(i+1)
  static Permutation from_cycles(int degree, const std::vector<Cycle>& cycles);
  static Permutation cycle(int degree, const Cycle& c);
  static Permutation long_cycle(int degree);  // (1 2 ... K)
  // "(1 2 7)(3 4 5 6)"; "()" is the identity. Fixed points may be listed.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // Each cycle starts at its minimum, cycles sorted by minimum, fixed points kept.
  std::vector<Cycle> cycles() const;
  std::vector<Cycle> nontrivial_cycles() const;
  int cycle_count() const;
  CycleType cycle_type() const;
  bool is_identity() const;
  bool is_even() const;
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

struct PermutationHash {
  size_t operator()(const Permutation& p) const noexcept;
};

// Every cycle length is 1 mod k.
bool is_one_mod_k(const Permutation& w, int k);

// Transposition length K - cyc(w).
int ell_1(const Permutation& w);

// Length with respect to (k+1)-cycles, via the closed form for 1 mod k
// permutations. nullopt when w is not 1 mod k (no fast path).
// Throws std::domain_error if k is even and w is odd (not in the group).
std::optional<int> ell_k(const Permutation& w, int k);

// Exhaustive shortest-word search; works for every w in the subgroup
// generated by (k+1)-cycles. Throws BoundExceeded if degree > bound.
int ell_k_oracle(const Permutation& w, int k, int bound = 10);

// u <=_k w for 1 mod k permutations: u, u^{-1}w both 1 mod k and
// transposition length is additive.
bool leq_k(const Permutation& u, const Permutation& w, int k);

// All u covered by w in the k-order restricted to 1 mod k permutations:
// u = w t^{-1} for a (k+1)-cycle t with cyc(u) = cyc(w) + k.
std::vector<Permutation> covers_below(const Permutation& w, int k);

// Lower covers together with the (k+1)-cycle t with w = u t.
struct LowerCover {
  Permutation u;
  Cycle t;
};
std::vector<LowerCover> lower_covers_with_factor(const Permutation& w, int k);

}  // namespace ncpk
