#include "ncpk/parking.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncpk {

std::string ParkingFunction::str() const {
  std::string s;
  for (size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
  return s;
}

ParkingFunction ParkingFunction::parse(const std::string& text, int k) {
  ParkingFunction p{k, {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.entries.push_back(std::stoi(item));
  if (!is_parking_function(p.entries, k)) throw std::invalid_argument("not a k-parking function: " + text);
  return p;
}

bool is_parking_function(const std::vector<int>& a, int k) {
  if (a.empty() || k < 1) return false;
  std::vector<int> b = a;
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] < 1 || b[i] > k * static_cast<int>(i) + 1) return false;
  return true;
}

std::vector<ParkingFunction> enumerate_parking_functions(int n, int k) {
  std::vector<ParkingFunction> out;
  const int hi = k * (n - 1) + 1;
  std::vector<int> a(n, 1);
  for (;;) {
    if (is_parking_function(a, k)) out.push_back({k, a});
    int i = n - 1;
    while (i >= 0 && a[i] == hi) a[i--] = 1;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

ParkingFunction phi(const Factorization& f) { return {f.params.k, f.minima()}; }

namespace {

// Nondecreasing factorization for sorted b: peel the last factor
// (b_n, ..., b_n + k), then factor (1..b_n, b_n+k+1..N) after closing the gap.
std::vector<Cycle> nondecreasing(const std::vector<int>& b, int k) {
  if (b.empty()) return {};
  const int last = b.back();
  std::vector<int> rest(b.begin(), b.end() - 1);
  auto inner = nondecreasing(rest, k);
  for (auto& t : inner)
    for (int& x : t)
      if (x > last) x += k;
  Cycle t;
  for (int x = last; x <= last + k; ++x) t.push_back(x);
  inner.push_back(t);
  return inner;
}

}  // namespace

Factorization phi_inverse(const ParkingFunction& p) {
  if (!is_parking_function(p.entries, p.k)) throw std::invalid_argument("not a k-parking function");
  const int n = static_cast<int>(p.entries.size());
  KParams params(p.k, n);
  std::vector<int> b = p.entries;
  std::sort(b.begin(), b.end());
  Factorization f = make_factorization(params, nondecreasing(b, p.k));
  // move the minima into the requested order with adjacent transpositions
  std::vector<int> cur = b;
  for (int i = 0; i < n; ++i) {
    int j = i;
    while (cur[j] != p.entries[i]) ++j;
    for (; j > i; --j) {
      f = sym_action(j, f);  // swaps coordinates j-1, j (0-based)
      std::swap(cur[j - 1], cur[j]);
    }
  }
  return f;
}

}  // namespace ncpk
