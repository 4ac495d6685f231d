#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ncpk {

using BigCount = mpz_class;

// Thrown when a rational closed form hits a zero denominator.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when a computation would exceed a configured size bound.
struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// C(top, bottom) for any integer top; zero for bottom < 0.
BigCount binomial(long top, long bottom);

// r/(np+r) * C(np+r, n). Requires n >= 0. Division is checked to be exact.
BigCount raney(long n, long p, long r);

// sum_{i+j=n} Ran(i,p,r) Ran(j,p,s) == Ran(n,p,r+s)
bool raney_convolution_check(long n, long p, long r, long s);

// sum over compositions of n into parts.size() parts of prod Ran(n_i, b, r_i)
// equals Ran(n, b, sum r_i).
bool multifold_convolution_check(long n, long b, const std::vector<long>& r);

BigCount ipow(long base, unsigned long e);
BigCount factorial(unsigned long n);

// Exact division; throws std::logic_error if d does not divide a.
BigCount exact_div(const BigCount& a, const BigCount& d);

inline std::string to_string(const BigCount& x) { return x.get_str(); }

}  // namespace ncpk
