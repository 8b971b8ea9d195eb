#include "glsmx/verify/oracles.hpp"

namespace glsmx::oracle {

BigRat delta_by_scan(const BigRat& eps)
{
    BigRat best = -1;
    long kmax = to_long(ceil_of(BigRat(2) / eps));
    for (long k = 1; k <= kmax; ++k) {
        BigRat gap = 1 - BigRat(k) * eps;
        if (gap > 0 && (best < 0 || gap < best)) best = gap;
    }
    return best < 0 ? rat(1, 2) : best / 2;
}

bool delta_rule_holds(const BigRat& eps, const BigRat& delta)
{
    if (delta <= 0) return false;
    long kmax = to_long(floor_of(BigRat(2) / eps));
    for (long k = 0; k <= kmax; ++k) {
        BigRat a = BigRat(k) * eps - 1;
        BigRat b = a + delta;
        if (sgn(a) != sgn(b)) return false;
    }
    return true;
}

}  // namespace glsmx::oracle
