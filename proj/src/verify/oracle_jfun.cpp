#include "glsmx/verify/oracles.hpp"

#include <cstdlib>

namespace glsmx::oracle {

WeightTable bundle_weights_by_cech(int degree, const CohClass& tangent_weight_at_0, const CohClass& fiber_weight_at_0)
{
    WeightTable out;
    int reach = std::abs(degree) + 2;
    for (int k = -reach; k <= reach; ++k) {
        bool regular_at_0 = k >= 0;
        bool regular_at_inf = k <= degree;  // x^k = x^degree * (1/x)^(degree - k)
        CohClass w = fiber_weight_at_0 - tangent_weight_at_0 * RatFun(k);
        if (regular_at_0 && regular_at_inf) out.h0.push_back(w);
        else if (!regular_at_0 && !regular_at_inf) out.h1.push_back(w);
    }
    return out;
}

}  // namespace glsmx::oracle
