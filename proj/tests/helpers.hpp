#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncpk/geometry.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/perm.hpp"
#include "oracles.hpp"

inline ncpk::Permutation to_lib(const oracle::Perm& p) {
  std::vector<int> img(p.size());
  for (size_t i = 0; i < p.size(); ++i) img[i] = p[i] + 1;
  return ncpk::Permutation::from_images(img);
}

inline oracle::Perm to_oracle(const ncpk::Permutation& w) {
  oracle::Perm p(w.degree());
  for (int i = 1; i <= w.degree(); ++i) p[i - 1] = w(i) - 1;
  return p;
}

// (k, n) pairs with N = kn + 1 in [lo, hi]
inline std::vector<ncpk::KParams> params_up_to(int hi, int max_k = 99) {
  std::vector<ncpk::KParams> out;
  for (int k = 1; k <= max_k; ++k)
    for (int n = 1; k * n + 1 <= hi; ++n) out.emplace_back(k, n);
  return out;
}

// Whether the brute-force Cayley-graph oracle finishes in seconds:
// (number of (k+1)-cycles) * N! edge visits, capped at 1e8.
inline bool cayley_affordable(ncpk::KParams p) {
  double fact = 1, gens = 1;
  for (int i = 2; i <= p.N(); ++i) fact *= i;
  for (int i = 0; i <= p.k; ++i) gens *= p.N() - i;
  gens /= p.k + 1;
  return gens * fact <= 1e8;
}

// The factors of a reference node, put in an order whose product is c_N.
inline ncpk::Factorization order_hulls(ncpk::KParams p, std::vector<std::pair<int, int>> hulls) {
  std::sort(hulls.begin(), hulls.end());
  do {
    std::vector<ncpk::Cycle> fs;
    for (auto [a, b] : hulls) fs.push_back({a, b});
    try {
      return ncpk::make_factorization(p, fs);
    } catch (const std::invalid_argument&) {
    }
  } while (std::next_permutation(hulls.begin(), hulls.end()));
  throw std::invalid_argument("no ordering of the hulls gives c_N");
}

// Polygon positions (odd = unbarred, even = barred) to a dissection.
inline ncpk::Dissection quad_from_positions(ncpk::KParams p, const std::vector<std::pair<int, int>>& ds) {
  ncpk::Dissection D{p, {}};
  for (auto [x, y] : ds) {
    if (x % 2 == 0) std::swap(x, y);
    D.diagonals.insert({(x + 1) / 2, y / 2});
  }
  return D;
}
