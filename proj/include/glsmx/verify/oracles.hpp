#pragma once

// Independent reference computations.  Nothing in here calls the routine it
// is meant to check; each oracle recomputes its answer by brute force or by a
// different formula.

#include "glsmx/model.hpp"
#include "glsmx/graphs.hpp"
#include "glsmx/jfun.hpp"
#include "glsmx/p1series.hpp"

#include <set>
#include <string>

namespace glsmx::oracle {

// Half the smallest positive 1 - k eps found by scanning k = 1 .. ceil(2/eps).
BigRat delta_by_scan(const BigRat& eps);

// Direct check of the sign condition for every k >= 0 with |k eps - 1| <= 1.
bool delta_rule_holds(const BigRat& eps, const BigRat& delta);

// Same integral as p1_graph_sum, summing over labelled trees (Pruefer
// sequences), both 2-colourings, edge degrees and marking placements, divided by V!.
RatFun p1_graph_sum_by_trees(int delta, const std::vector<P1Insertion>& insertions);

// Psi integrals on M_{0,n} from the string equation alone.
BigRat psi_integral_by_string(const std::vector<int>& exponents);

// Localization graphs by brute force over edge lists, genus and degree
// vectors, leg placements and every multiplicity assignment.  Returns the
// oracle's own canonical keys.
std::set<std::string> enumerate_loc_graphs_brute(const GlsmModel& model, int g, int n, int beta, int delta);

// The oracle's canonical key for a graph produced elsewhere.
std::string brute_graph_key(const LocGraph& g);

// H^0 and H^1 of O(D) on P^1 by Cech cohomology on the cover {x != oo}, {x != 0}:
// a Laurent monomial x^k lies in H^0 when it is regular on both charts and
// spans H^1 when it is regular on neither.  x^k has weight fiber - k tangent.
WeightTable bundle_weights_by_cech(int degree, const CohClass& tangent_weight_at_0, const CohClass& fiber_weight_at_0);

}  // namespace glsmx::oracle
