#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncpk/counting.hpp"
#include "ncpk/perm.hpp"

namespace ncpk {

// Ordered tuple of increasing (k+1)-cycles with t_1 t_2 ... t_n = c_N.
struct Factorization {
  KParams params;
  std::vector<Cycle> factors;

  Permutation product() const;
  std::vector<int> minima() const;
  std::string str() const;  // "(1 2 3)|(3 4 5)"
  static Factorization parse(std::string_view text, KParams p);
  auto operator<=>(const Factorization& o) const { return factors <=> o.factors; }
  bool operator==(const Factorization& o) const { return factors == o.factors; }
};

// Validates shape and product; throws std::invalid_argument.
Factorization make_factorization(KParams p, std::vector<Cycle> factors);

// i is 1-based, 1 <= i <= n-1.
Factorization hurwitz_sigma(int i, const Factorization& f, bool inverse);
Factorization sym_action(int i, const Factorization& f);

inline constexpr size_t kDefaultMaxStates = 10'000'000;

// Support masks packed into 128 bits: factor i occupies bits [iN, (i+1)N).
using PackedKey = unsigned __int128;

class FactorizationCodec {
 public:
  explicit FactorizationCodec(KParams p);  // throws BoundExceeded if nN > 128
  KParams params() const { return p_; }
  PackedKey pack(const Factorization& f) const;
  Factorization unpack(PackedKey key) const;
  uint32_t mask(PackedKey key, int i) const {
    return static_cast<uint32_t>((key >> (i * p_.N())) & full_);
  }
  PackedKey with_masks(PackedKey key, int i, uint32_t a, uint32_t b) const;
  PackedKey sigma(PackedKey key, int i) const;      // 0-based i
  PackedKey sigma_inv(PackedKey key, int i) const;  // 0-based i

 private:
  KParams p_;
  unsigned __int128 full_;
};

// All of Fact_k(c_N) in packed form, sorted. Walks maximal chains of the poset.
std::vector<PackedKey> enumerate_packed_factorizations(KParams p, size_t max_states = kDefaultMaxStates);
std::vector<Factorization> enumerate_factorizations(KParams p, size_t max_states = 1'000'000);

struct OrbitReport {
  Factorization start;
  size_t orbit_size = 0;
  BigCount expected;  // N^{n-1}
  bool transitive = false;
};

// Orbit under the braid group: closure under every sigma_i (the sigma_i have
// finite order on a finite set, so inverses add nothing).
size_t hurwitz_orbit_size(const Factorization& f, size_t max_states = kDefaultMaxStates);
std::vector<Factorization> hurwitz_orbit(const Factorization& f, size_t max_states = 1'000'000);
OrbitReport orbit_report(const Factorization& f, size_t max_states = kDefaultMaxStates);

// Commutation equivalence: swapping adjacent factors with disjoint supports.
struct CommClass {
  Factorization representative;  // lexicographically least member
  BigCount size;
};

Factorization class_representative(const Factorization& f);
BigCount linear_extension_count(const Factorization& f);
bool commutation_equivalent(const Factorization& a, const Factorization& b);
std::vector<Factorization> class_members(const Factorization& f, size_t max_states = 1'000'000);
std::vector<CommClass> commutation_classes(KParams p, size_t max_states = kDefaultMaxStates);

}  // namespace ncpk
