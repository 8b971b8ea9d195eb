#include "glsmx/substitute.hpp"

#include "glsmx/errors.hpp"

#include <stdexcept>

namespace glsmx {

namespace {

CohClass horner(const Poly& p, const CohClass& value)
{
    std::vector<Poly> c = p.coeffs_in_z();
    CohClass acc(value.relation());
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= value;
        acc += CohClass(value.relation(), RatFun(*it));
    }
    return acc;
}

}  // namespace

CohClass substitute_z(const RatFun& expr, const CohClass& value)
{
    for (const auto& c : value.coeffs())
        if (!c.free_of_z()) throw std::invalid_argument("substituted value must be free of z");
    CohClass num = horner(expr.num(), value);
    if (expr.is_polynomial()) return num * RatFun(1 / expr.den().constant_term());
    CohClass den = horner(expr.den(), value);
    if (!den.is_unit())
        throw SubstitutionPole("denominator " + expr.den().to_string() + " vanishes at z = " + value.to_string());
    return num * den.inverse();
}

CohClass substitute_z(const CohClass& expr, const CohClass& value)
{
    if (!(expr.relation() == value.relation())) throw std::logic_error("relation mismatch in substitute_z");
    CohClass out(value.relation());
    CohClass hpow(value.relation(), RatFun(1));
    CohClass h = CohClass::H(value.relation());
    for (std::size_t j = 0; j < expr.coeffs().size(); ++j) {
        if (!expr[j].is_zero()) out += substitute_z(expr[j], value) * hpow;
        hpow *= h;
    }
    return out;
}

}  // namespace glsmx
