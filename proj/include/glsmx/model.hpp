#pragma once

#include "glsmx/bigrat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace glsmx {

enum class Phase { lg, geometric };

std::string to_string(Phase p);
Phase parse_phase(const std::string& s);

// Abelian GLSM datum: x-coordinates of weights w_i, N p-coordinates of
// weight -d, a phase and a stability parameter epsilon.
struct GlsmModel {
    int M = 0;
    std::vector<int> weights;
    int N = 0;
    int d = 0;
    Phase phase = Phase::lg;
    BigRat epsilon = 1;
};

// Validates and returns the model; ConfigError on bad data, OnWall when
// k * epsilon = 1 for some positive integer k.
GlsmModel make_model(std::vector<int> weights, int N, int d, Phase phase, const BigRat& epsilon);

// True iff 1/epsilon is a positive integer.
bool on_wall(const BigRat& epsilon);

struct Sector {
    int m = 0;                     // numerator of the multiplicity over d
    std::vector<int> fixed_coords; // 1-based i with m w_i / d integral
    bool narrow = false;
    int d_m = 1;
};

std::vector<Sector> list_sectors(const GlsmModel& model);

// d / gcd(d m, d) for a multiplicity m with denominator dividing d.
int d_of_mult(int d, const BigRat& m);

BigRat frac_bracket(const BigRat& a);

// Compatibility of leg multiplicities for the phase of the model:
// LG: (-beta + 2g - 2 + n)/d - sum m in Z; geometric: beta - sum m in Z.
bool check_compatibility(const GlsmModel& model, int g, const BigRat& beta, const std::vector<BigRat>& mults);

// The unique last multiplicity in [0, 1) making check_compatibility hold
// for mults + {m_n}.
BigRat solve_last(const GlsmModel& model, int g, const BigRat& beta, const std::vector<BigRat>& mults);

// (marked-point multiplicity m1, basepoint multiplicity).
std::pair<BigRat, BigRat> graph_multiplicities(const GlsmModel& model, int beta);

// Line bundle on an orbifold curve.  `coarse_degree` is the orbifold degree;
// the pushforward to the coarse curve has degree coarse_degree - sum(ages).
struct OrbiBundleData {
    int genus = 0;
    BigRat coarse_degree = 0;
    std::vector<BigRat> ages;
};

// 1 - g + (coarse_degree - sum ages); NonIntegralChi when not integral.
long euler_char(const OrbiBundleData& data);

// Base-stack dimension 4g - 4 + n plus the Euler characteristics of the
// x-bundles L^{w_i} and N copies of P = L^{-d} (x) omega_log.  Only
// differences between components carry meaning.
long virtual_dimension(const GlsmModel& model, int g, const std::vector<BigRat>& mults, const BigRat& beta);

// Half the smallest positive gap 1 - k epsilon (k >= 1), or 1/2 when
// epsilon > 1.  Throws OnWall if epsilon sits on a wall.
BigRat choose_delta(const BigRat& epsilon);

}  // namespace glsmx
