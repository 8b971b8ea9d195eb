#pragma once

// Seeded generators shared by the property tests.

#include "glsmx/series.hpp"

#include <random>

namespace glsmx::testgen {

inline BigRat small_rat(std::mt19937& rng, int span = 4)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return rat(num(rng), den(rng));
}

inline Poly small_poly(std::mt19937& rng, int max_deg = 2)
{
    std::uniform_int_distribution<int> deg(0, max_deg), terms(1, 3);
    Poly p;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) p += Poly::monomial(small_rat(rng), deg(rng), deg(rng) / 2);
    return p;
}

inline RatFun small_ratfun(std::mt19937& rng)
{
    Poly d;
    while (d.is_zero()) d = small_poly(rng, 1);
    return RatFun(small_poly(rng), d);
}

inline RatFun lambda_only_ratfun(std::mt19937& rng)
{
    std::uniform_int_distribution<int> deg(0, 2);
    Poly n, d;
    for (int i = 0; i < 2; ++i) n += Poly::monomial(small_rat(rng), deg(rng), 0);
    while (d.is_zero()) d += Poly::monomial(small_rat(rng), deg(rng), 0);
    return RatFun(n, d);
}

inline CohClass small_class(std::mt19937& rng, HRelation rel)
{
    std::vector<RatFun> c;
    for (int i = 0; i < rel.r; ++i) c.push_back(small_ratfun(rng));
    return CohClass(rel, c);
}

}  // namespace glsmx::testgen
