#pragma once

#include <string>
#include <vector>

#include "ncpk/hurwitz.hpp"

namespace ncpk {

struct ParkingFunction {
  int k = 1;
  std::vector<int> entries;
  std::string str() const;  // "1,3,1"
  static ParkingFunction parse(const std::string& text, int k);
  auto operator<=>(const ParkingFunction&) const = default;
};

// Sorted entries b_i satisfy 1 <= b_i <= k(i-1)+1.
bool is_parking_function(const std::vector<int>& a, int k);
std::vector<ParkingFunction> enumerate_parking_functions(int n, int k);

ParkingFunction phi(const Factorization& f);  // minima of the factors
Factorization phi_inverse(const ParkingFunction& p);

}  // namespace ncpk
