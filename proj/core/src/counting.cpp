#include "ncpk/counting.hpp"

#include <functional>

namespace ncpk {

BigCount binomial(long top, long bottom) {
  if (bottom < 0) return 0;
  BigCount r;
  if (top >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  } else {
    BigCount t = top;
    mpz_bin_ui(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(bottom));
  }
  return r;
}

BigCount exact_div(const BigCount& a, const BigCount& d) {
  if (d == 0) throw PoleError("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()))
    throw std::logic_error("non-exact division: " + a.get_str() + " / " + d.get_str());
  BigCount q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigCount raney(long n, long p, long r) {
  if (n < 0) throw std::invalid_argument("raney: n must be non-negative");
  if (n == 0) return 1;  // r/r, also the continuous value at r = 0
  long den = n * p + r;
  if (den == 0) {
    // r/(np+r) C(np+r,n) with np+r=0: C(0,n)=0 for n>0 but the product
    // has a removable singularity only when r = 0 too.
    if (r == 0) return 0;
    throw PoleError("raney: np + r = 0");
  }
  return exact_div(BigCount(r) * binomial(den, n), BigCount(den));
}

bool raney_convolution_check(long n, long p, long r, long s) {
  BigCount sum = 0;
  for (long i = 0; i <= n; ++i) sum += raney(i, p, r) * raney(n - i, p, s);
  return sum == raney(n, p, r + s);
}

bool multifold_convolution_check(long n, long b, const std::vector<long>& r) {
  if (r.empty()) return n == 0;
  long total_r = 0;
  for (long x : r) total_r += x;
  std::function<BigCount(size_t, long)> go = [&](size_t idx, long left) -> BigCount {
    if (idx + 1 == r.size()) return raney(left, b, r[idx]);
    BigCount acc = 0;
    for (long i = 0; i <= left; ++i) acc += raney(i, b, r[idx]) * go(idx + 1, left - i);
    return acc;
  };
  return go(0, n) == raney(n, b, total_r);
}

BigCount ipow(long base, unsigned long e) {
  BigCount r;
  BigCount b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigCount factorial(unsigned long n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace ncpk
