#pragma once

#include "glsmx/laurent.hpp"

#include <string>
#include <vector>

namespace glsmx {

// Classes on the equivariant P^1 with tangent weight lambda at 0 and -lambda
// at infinity.  H restricts to lambda at 0 and to 0 at infinity.
HRelation p1_relation();
CohClass p1_one();
CohClass p1_H();
CohClass p1_point_zero();      // [0] = H
CohClass p1_point_infinity();  // [oo] = H - lambda
CohClass p1_phi_zero();        // [0]/lambda
CohClass p1_phi_infinity();    // -[oo]/lambda

// int_{M_{0,n}} prod psi_i^{a_i} = (n-3)! / prod a_i! when sum a_i = n - 3.
BigRat psi_integral_genus0(const std::vector<int>& exponents);

struct P1Insertion {
    CohClass cls;
    int psi = 0;
};

// Genus-zero equivariant integral over stable maps to P^1 of degree delta,
// by localization.  Bounds: 1 <= n <= 5, 0 <= delta <= 3.
RatFun p1_graph_sum(int delta, const std::vector<P1Insertion>& insertions);

// Outer variable y, inner variable z.
using TreeSeries = TruncSeries<TruncSeries<RatFun>>;

// Trees hanging off a level-0 vertex through a node with smoothing
// parameter z.  S carries the one marking (weighted by alpha restricted to
// where it lands); eps carries none.  The y^0 term of S is alpha at 0.
TreeSeries tree_series_S(const CohClass& alpha, int y_order, int z_order);
TreeSeries tree_series_eps(int y_order, int z_order);

// S~(alpha, 0): the psi-bar presentation of S evaluated at psi-bar = 0.
TruncSeries<RatFun> stilde_at_zero(const CohClass& alpha, int y_order);

// 1 + 4y/lambda^2 and the two closed forms the tree sums are compared with.
TruncSeries<RatFun> phi_series(int y_order);
TruncSeries<RatFun> stilde_one_closed_form(int y_order);  // phi^{-1/4}
TruncSeries<RatFun> stilde_H_closed_form(int y_order);    // phi^{-1/4} (lambda/2)(1 + sqrt(phi))

struct IrrRatioReport {
    TruncSeries<RatFun> ratio;     // S~(phi_oo, 0) / S~(phi_0, 0)
    TruncSeries<RatFun> expected;  // (1 - sqrt(phi)) / (1 + sqrt(phi))
    std::vector<LaurentInLambda> laurent;
};

// Throws IdentityFailed naming the first bad coefficient.
IrrRatioReport irr_ratio_check(int y_order);

}  // namespace glsmx
