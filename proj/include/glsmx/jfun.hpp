#pragma once

#include "glsmx/graphs.hpp"
#include "glsmx/model.hpp"
#include "glsmx/substitute.hpp"

#include <map>
#include <string>
#include <vector>

namespace glsmx {

struct WeightTable {
    std::vector<CohClass> h0;
    std::vector<CohClass> h1;
    int euler() const { return static_cast<int>(h0.size()) - static_cast<int>(h1.size()); }
};

// Torus weights of H^0 and H^1 of a line bundle on a P^1 with torus weight
// t on the tangent line at 0 and fiber weight w0 at 0.  The coarse degree is
// D = orbifold_degree - age0 - age_inf; H^0 has weights w0 - (k + age0) t for
// 0 <= k <= D and H^1 has the same expression for D < k < 0.
// InconsistentOrbData if D is not an integer or an age lies outside [0, 1).
WeightTable bundle_weights(const BigRat& orbifold_degree, const BigRat& age0, const BigRat& age_inf,
                           const CohClass& tangent_weight_at_0, const CohClass& fiber_weight_at_0);

// H nilpotent of order N (LG) or M - N (geometric).
HRelation jfun_relation(const GlsmModel& model);

// A q^beta coefficient: a class in the twisted sector with multiplicity
// sector/d (always 0 in the geometric phase).
struct JTerm {
    int sector = 0;
    CohClass value;
    bool operator==(const JTerm&) const = default;
};

// Unstable coefficient of J^eps as a product of bundle weights on the graph
// space.  OutOfUnstableRange unless 0 <= beta <= 1/epsilon.
JTerm unstable_J_coefficient(const GlsmModel& model, int beta, const BigRat& epsilon, bool twisted);

// The same coefficient from the closed hypergeometric product.
JTerm i_function_coefficient(const GlsmModel& model, int beta, bool twisted);

struct JSeries {
    Phase phase = Phase::lg;
    bool twisted = false;
    std::vector<JTerm> coeffs;  // index beta
};

// Every beta counts as unstable as epsilon -> 0+.
JSeries i_function(const GlsmModel& model, int q_max, bool twisted = false);

// Terms with non-negative powers of z.
RatFun positive_part(const RatFun& f);
CohClass positive_part(const CohClass& c);

// mu_beta = [q^beta](-z 1 + [J^eps]_+) for beta <= q_max; zero for beta > 1/epsilon.
using MuTable = std::map<int, JTerm>;
MuTable mu_table(const GlsmModel& model, const BigRat& epsilon, bool twisted, int q_max);

// lambda_0 = lambda - H and lambda_oo = -lambda + H in the model's ring.
CohClass lambda_zero(const GlsmModel& model);
CohClass lambda_infinity(const GlsmModel& model);

// Edge factor of a localization graph.  DegreeViolation if beta_e > 0 and
// delta_e <= beta_e; ConfigError if delta_e < 1.
CohClass edge_contribution(const GlsmModel& model, int delta_e, int beta_e, const BigRat& epsilon, bool twisted);

// Node factor: e(N) = lambda_j and the smoothing term d_m / (lambda_j/delta - psi).
// In `smoothing` the variable z stands for psi.
struct NodeContribution {
    CohClass normal;
    CohClass smoothing;
    std::string to_string() const;
};

NodeContribution node_contribution(const GlsmModel& model, const BigRat& m_h, Level j, int delta_e);

// Node between two edges at an unstable vertex: d_m / (lambda_j/delta + lambda_j/delta').
CohClass node_contribution_explicit(const GlsmModel& model, const BigRat& m_h, Level j, int delta_e, int delta_other);

struct JwcReport {
    std::vector<std::string> checked;  // one line per verified statement
};

// (a) [J^eps]_+ from the bundle weights equals the truncated I-function for
// both epsilons; (b) mu^{eps2} - mu^{eps1} is exactly the positive part of
// the I-coefficients with beta between the two bounds.  Throws
// IdentityFailed naming the first disagreement.
JwcReport jwc_check(const GlsmModel& model, const BigRat& eps1, const BigRat& eps2, int q_max);

// Degree in (lambda, z, H) that the Riemann-Roch bookkeeping predicts for
// the q^beta coefficient of J.
int predicted_J_degree(const GlsmModel& model, int beta, bool twisted = false);

}  // namespace glsmx
