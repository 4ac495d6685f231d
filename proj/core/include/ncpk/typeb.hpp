#pragma once

#include <string>
#include <vector>

#include "ncpk/counting.hpp"

namespace ncpk {

// Signed permutation of {1..m}: img[i-1] = w(i), with w(-x) = -w(x).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(int m);  // identity
  static SignedPermutation from_images(std::vector<int> img);
  static SignedPermutation simple(int i, int m);  // s_0 negates 1, s_i swaps i, i+1

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return x > 0 ? img_[x - 1] : -img_[-x - 1]; }
  const std::vector<int>& images() const { return img_; }
  SignedPermutation inverse() const;
  bool is_identity() const;
  std::string str() const;  // "[2,-1,3]"
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> img_;
};

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
inline SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) { return compose(u, v); }

// Reflections of B_m: sign changes and the two kinds of signed transpositions.
std::vector<SignedPermutation> reflections_b(int m);
// Reflection length by breadth-first search over B_m.
int reflection_length_b(const SignedPermutation& w);
bool absolute_leq_b(const SignedPermutation& u, const SignedPermutation& w);

struct GroupedFactorization {
  int k = 1, n = 1;
  std::vector<SignedPermutation> factors;  // factor j = s_{(j-1)k} ... s_{jk-1}
  SignedPermutation product() const;
  auto operator<=>(const GroupedFactorization& o) const { return factors <=> o.factors; }
  bool operator==(const GroupedFactorization& o) const { return factors == o.factors; }
};

GroupedFactorization build_grouped(int k, int n);
SignedPermutation coxeter_element_b(int m);  // s_0 s_1 ... s_{m-1}

enum class ConjectureStatus { Pass, Open };

struct ZetaObservation {
  int q = 0;
  BigCount observed, conjectured;
  ConjectureStatus status = ConjectureStatus::Open;
};

struct TypeBReport {
  int k = 1, n = 1;
  size_t orbit_observed = 0;
  BigCount orbit_conjectured;  // k^{n-1} n^n
  ConjectureStatus orbit_status = ConjectureStatus::Open;
  size_t prefix_observed = 0;
  BigCount prefix_conjectured;  // 2 C(nk+n-1, n-1)
  ConjectureStatus prefix_status = ConjectureStatus::Open;
  std::vector<ZetaObservation> zeta;  // q C(nk(q-1)+n-1, n-1)
  bool product_preserved = true;      // checked on every orbit edge
};

inline constexpr int kTypeBDegreeBound = 6;

std::vector<GroupedFactorization> b_hurwitz_orbit(const GroupedFactorization& f, size_t max_states = 2'000'000,
                                                  bool* product_preserved = nullptr);
std::vector<SignedPermutation> b_prefix_set(const std::vector<GroupedFactorization>& orbit);
TypeBReport typeb_report(int k, int n, int max_q = 3, size_t max_states = 2'000'000);

const char* to_string(ConjectureStatus s);

}  // namespace ncpk
