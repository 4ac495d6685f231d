#include "ncpk/formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace ncpk {

BigCount nc_cardinality(KParams p) { return raney(p.n, p.k + 1, 2); }

BigCount count_by_rank(KParams p, int l) {
  const long N = p.N(), k = p.k, n = p.n;
  if (l < 0 || l > n) return 0;
  const long a = N - (k - 1) * l, b = N - (k - 1) * (n - l);
  return exact_div(BigCount(N) * binomial(a, l) * binomial(b, n - l), BigCount(a) * BigCount(b));
}

BigCount count_maximal_chains(KParams p) { return ipow(p.N(), p.n - 1); }

namespace {
void check_jumps(const std::vector<int>& r, int n) {
  if (r.empty()) throw std::invalid_argument("jump vector is empty");
  long s = 0;
  for (int x : r) {
    if (x < 0) throw std::invalid_argument("negative jump");
    s += x;
  }
  if (s != n) throw std::invalid_argument("jumps must sum to n");
}
}  // namespace

BigCount count_multichains_by_jump(KParams p, const std::vector<int>& r) {
  check_jumps(r, p.n);
  BigCount prod = 1;
  for (int ri : r) prod *= raney(ri, 1 - p.k, p.N());
  return exact_div(prod, BigCount(p.N()));
}

BigCount zeta(KParams p, long x) {
  const long N = p.N(), n = p.n;
  const long d = N * (x - 1) + 1;
  return exact_div(BigCount(x) * binomial(N * (x - 1) + n, n), BigCount(d));
}

BigCount mobius_invariant(KParams p) {
  BigCount r = raney(p.n, 2 * p.k, 1);
  return p.n % 2 ? BigCount(-r) : r;
}

BigCount commutation_class_count(KParams p) { return raney(p.n, 2 * p.k + 1, 1); }

namespace {
void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}
}  // namespace

BigCount mzeta(KParams p, int m, long x) {
  check_m(m);
  const long N = p.N(), n = p.n;
  const long num = m * (x - 1) + 1, den = m * N * (x - 1) + 1;
  return exact_div(BigCount(num) * binomial(m * N * (x - 1) + n, n), BigCount(den));
}

BigCount m_cardinality(KParams p, int m) { return mzeta(p, m, 2); }

BigCount m_maximal_chains(KParams p, int m) {
  check_m(m);
  return ipow(m, p.n) * ipow(p.N(), p.n - 1);
}

BigCount m_mobius(KParams p, int m, MVariant v) {
  check_m(m);
  const long N = p.N(), n = p.n, k = p.k;
  if (v == MVariant::Hat) {
    BigCount r = exact_div(BigCount(m - 1) * binomial(N * m - 1, n), BigCount(N * m - 1));
    return (n - 1) % 2 ? BigCount(-r) : r;
  }
  BigCount r = raney(n, k * (m + 1), m) - raney(n, k * m, m - 1);
  return n % 2 ? BigCount(-r) : r;
}

BigCount m_rank_jump_count(KParams p, int m, const std::vector<int>& r) {
  check_m(m);
  check_jumps(r, p.n);
  const long N = p.N();
  BigCount prod = raney(r[0], 1 - p.k, N);
  for (size_t i = 1; i < r.size(); ++i) prod *= raney(r[i], 1 - p.k, static_cast<long>(m) * N);
  return exact_div(prod, BigCount(N));
}

}  // namespace ncpk
