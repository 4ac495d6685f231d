#pragma once

#include <vector>

#include "ncpk/counting.hpp"
#include "ncpk/perm.hpp"

namespace ncpk {

BigCount nc_cardinality(KParams p);                                  // Ran(n, k+1, 2)
BigCount count_by_rank(KParams p, int l);                            // elements of rank l
BigCount count_maximal_chains(KParams p);                            // N^{n-1}
BigCount count_multichains_by_jump(KParams p, const std::vector<int>& r);
BigCount zeta(KParams p, long x);                                    // multichains of length x-1
BigCount mobius_invariant(KParams p);                                // mu(bottom, top)
BigCount commutation_class_count(KParams p);                         // Ran(n, 2k+1, 1)

enum class MVariant { Hat, Bar };

BigCount mzeta(KParams p, int m, long x);
BigCount m_maximal_chains(KParams p, int m);
BigCount m_mobius(KParams p, int m, MVariant v);
BigCount m_rank_jump_count(KParams p, int m, const std::vector<int>& r);
BigCount m_cardinality(KParams p, int m);                            // mzeta at x = 2

}  // namespace ncpk
