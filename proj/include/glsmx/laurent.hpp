#pragma once

#include "glsmx/series.hpp"

#include <vector>

namespace glsmx {

// Expansion of a function of lambda around lambda = infinity.  coeffs[i] is the
// coefficient of lambda^(min_exponent + i); every exponent >= window_low is
// exact (possibly zero), exponents below window_low are unknown.
struct LaurentInLambda {
    int min_exponent = 0;
    std::vector<BigRat> coeffs;
    int window_low = 0;

    bool is_zero() const { return coeffs.empty(); }
    int max_exponent() const { return min_exponent + static_cast<int>(coeffs.size()) - 1; }
    BigRat coeff(int e) const;
    bool operator==(const LaurentInLambda&) const = default;
};

// Expands f (free of z) so that all exponents down to `window_low` are exact.
LaurentInLambda laurent_expand(const RatFun& f, int window_low);

// Applies laurent_expand to every coefficient of a y-series.
std::vector<LaurentInLambda> laurent_expand(const TruncSeries<RatFun>& s, int window_low);

// Product, exact down to the lowest exponent both factors determine.
LaurentInLambda operator*(const LaurentInLambda& a, const LaurentInLambda& b);

}  // namespace glsmx
