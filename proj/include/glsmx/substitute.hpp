#pragma once

#include "glsmx/cohclass.hpp"

namespace glsmx {

// Replaces z by `value` (a class whose coefficients are free of z) in every
// coefficient of `expr`, then reduces.  Throws SubstitutionPole when a
// denominator becomes non-invertible.
CohClass substitute_z(const CohClass& expr, const CohClass& value);

// Same for a single rational function; the result lives in value's ring.
CohClass substitute_z(const RatFun& expr, const CohClass& value);

}  // namespace glsmx
