#pragma once

#include "orient/count.hpp"

namespace orient {

// Number of cyclic-triangle-free orientations of K_{1,l,l}:
//   sum_{i,j <= l} C(l,i) C(l,j) 2^{(l-i)j + (l-j)i}
Count k1ll_count(int ell);

// 2^{floor(n^2/4)}
Count bipartite_max(int n);

// r^2 - C(r-1, 2)
Count corollary_bound(int r);

// (du+1)(dv+1) - C(duv+1, 2); requires 0 <= duv <= min(du, dv)
Count edge_kr_bound(int du, int dv, int duv);

Count factorial(int n);

}  // namespace orient
