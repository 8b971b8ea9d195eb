#include "glsmx/cohclass.hpp"

#include "glsmx/errors.hpp"

#include <stdexcept>

namespace glsmx {

HRelation HRelation::nilpotent(int r)
{
    if (r < 1) throw std::invalid_argument("nilpotency order must be positive");
    return HRelation{Kind::nilpotent, r};
}

std::string HRelation::to_string() const
{
    if (kind == Kind::projline) return "H^2=lambda*H";
    return "H^" + std::to_string(r) + "=0";
}

CohClass::CohClass(HRelation rel) : rel_(rel), c_(static_cast<std::size_t>(rel.r)) {}

CohClass::CohClass(HRelation rel, const RatFun& c) : CohClass(rel)
{
    c_[0] = c;
}

CohClass::CohClass(HRelation rel, std::vector<RatFun> coeffs) : rel_(rel)
{
    if (rel.kind == HRelation::Kind::projline) {
        // H^k = lambda^{k-1} H for k >= 1.
        c_.assign(2, RatFun());
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (k == 0)
                c_[0] += coeffs[0];
            else
                c_[1] += coeffs[k] * RatFun::monomial(1, static_cast<int>(k) - 1, 0);
        }
    } else {
        coeffs.resize(static_cast<std::size_t>(rel.r));
        c_ = std::move(coeffs);
    }
}

CohClass CohClass::H(HRelation rel)
{
    return CohClass(rel, std::vector<RatFun>{RatFun(), RatFun(1)});
}

bool CohClass::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

RatFun CohClass::restrict_zero() const
{
    if (rel_.kind != HRelation::Kind::projline) throw std::logic_error("restriction needs the projline relation");
    return c_[0] + c_[1] * RatFun::lambda();
}

RatFun CohClass::restrict_inf() const
{
    if (rel_.kind != HRelation::Kind::projline) throw std::logic_error("restriction needs the projline relation");
    return c_[0];
}

void CohClass::check_same(const CohClass& o) const
{
    if (!(rel_ == o.rel_)) throw std::logic_error("mixing cohomology classes with different relations");
}

CohClass CohClass::operator-() const
{
    CohClass r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

CohClass& CohClass::operator+=(const CohClass& o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CohClass& CohClass::operator-=(const CohClass& o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CohClass& CohClass::operator*=(const RatFun& k)
{
    for (auto& c : c_) c *= k;
    return *this;
}

CohClass& CohClass::operator*=(const CohClass& o)
{
    check_same(o);
    std::size_t n = c_.size();
    std::vector<RatFun> out(rel_.kind == HRelation::Kind::projline ? 3 : n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.c_[j].is_zero()) continue;
            if (i + j < out.size()) out[i + j] += c_[i] * o.c_[j];
        }
    }
    *this = CohClass(rel_, std::move(out));
    return *this;
}

bool CohClass::is_unit() const
{
    if (rel_.kind == HRelation::Kind::projline) return !restrict_zero().is_zero() && !restrict_inf().is_zero();
    return !c_[0].is_zero();
}

CohClass CohClass::inverse() const
{
    if (!is_unit()) throw DivisionByNonUnit("cohomology class " + to_string() + " is not invertible");
    if (rel_.kind == HRelation::Kind::projline) {
        // (a + bH)^{-1} = 1/a - b/(a (a + b lambda)) H
        const RatFun& a = c_[0];
        const RatFun& b = c_[1];
        return CohClass(rel_, std::vector<RatFun>{a.inverse(), -b / (a * (a + b * RatFun::lambda()))});
    }
    // Nilpotent part: u = c0 (1 + n), inverse = c0^{-1} sum (-n)^k.
    std::size_t n = c_.size();
    RatFun inv0 = c_[0].inverse();
    std::vector<RatFun> out(n);
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        RatFun s;
        for (std::size_t j = 1; j <= k; ++j) s += c_[j] * out[k - j];
        out[k] = -s * inv0;
    }
    return CohClass(rel_, std::move(out));
}

CohClass& CohClass::operator/=(const CohClass& o)
{
    return *this *= o.inverse();
}

CohClass CohClass::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    CohClass r(rel_, RatFun(1)), b(*this);
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

std::string CohClass::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i == 1) out += "*H";
        if (i > 1) out += "*H^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace glsmx
