#include "orient/closed_forms.hpp"

#include <stdexcept>

namespace orient {

Count k1ll_count(int ell) {
    if (ell < 1) throw std::invalid_argument("k1ll_count requires ell >= 1");
    if (ell > 20) throw std::invalid_argument("k1ll_count guard: ell <= 20");
    Count total = 0;
    for (int i = 0; i <= ell; ++i)
        for (int j = 0; j <= ell; ++j) {
            unsigned long e = static_cast<unsigned long>((ell - i) * j + (ell - j) * i);
            total += binom(ell, i) * binom(ell, j) * pow2(e);
        }
    return total;
}

Count bipartite_max(int n) {
    if (n < 0) throw std::invalid_argument("bipartite_max requires n >= 0");
    return pow2(static_cast<unsigned long>(n) * n / 4);
}

Count corollary_bound(int r) {
    if (r < 2) throw std::invalid_argument("corollary_bound requires r >= 2");
    return Count(r) * r - binom(r - 1, 2);
}

Count edge_kr_bound(int du, int dv, int duv) {
    if (du < 0 || dv < 0 || duv < 0 || duv > du || duv > dv)
        throw std::invalid_argument("edge_kr_bound: need 0 <= duv <= min(du, dv)");
    return Count(du + 1) * (dv + 1) - binom(duv + 1, 2);
}

Count factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
    if (n > 30) throw std::invalid_argument("factorial guard: n <= 30");
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace orient
