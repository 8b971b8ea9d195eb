#pragma once

#include "glsmx/ratfun.hpp"

#include <string>
#include <vector>

namespace glsmx {

// Relation satisfied by the hyperplane symbol H.
struct HRelation {
    enum class Kind { nilpotent, projline };
    Kind kind = Kind::nilpotent;
    int r = 1;  // H^r = 0 for nilpotent; always 2 for projline (H^2 = lambda H)

    static HRelation nilpotent(int r);
    static HRelation projline() { return HRelation{Kind::projline, 2}; }
    bool operator==(const HRelation&) const = default;
    std::string to_string() const;
};

// Polynomial in H with RatFun coefficients, reduced modulo an HRelation.
class CohClass {
public:
    CohClass() : CohClass(HRelation{}) {}
    explicit CohClass(HRelation rel);
    CohClass(HRelation rel, const RatFun& c);
    CohClass(HRelation rel, std::vector<RatFun> coeffs);  // reduced on construction

    static CohClass H(HRelation rel);

    const HRelation& relation() const { return rel_; }
    const std::vector<RatFun>& coeffs() const { return c_; }
    const RatFun& operator[](std::size_t i) const { return c_[i]; }
    bool is_zero() const;

    // For projline: restriction to the fixed points 0 (H = lambda) and oo (H = 0).
    RatFun restrict_zero() const;
    RatFun restrict_inf() const;

    CohClass operator-() const;
    CohClass& operator+=(const CohClass& o);
    CohClass& operator-=(const CohClass& o);
    CohClass& operator*=(const CohClass& o);
    CohClass& operator*=(const RatFun& c);
    CohClass& operator/=(const CohClass& o);
    friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
    friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
    friend CohClass operator*(CohClass a, const CohClass& b) { return a *= b; }
    friend CohClass operator*(CohClass a, const RatFun& b) { return a *= b; }
    friend CohClass operator/(CohClass a, const CohClass& b) { return a /= b; }
    bool operator==(const CohClass& o) const { return rel_ == o.rel_ && c_ == o.c_; }

    bool is_unit() const;
    // Throws DivisionByNonUnit when not invertible.
    CohClass inverse() const;
    CohClass pow(long e) const;

    std::string to_string() const;

private:
    void check_same(const CohClass& o) const;
    HRelation rel_;
    std::vector<RatFun> c_;
};

}  // namespace glsmx
