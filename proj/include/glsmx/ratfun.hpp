#pragma once

#include "glsmx/poly.hpp"

#include <optional>
#include <string>

namespace glsmx {

// Rational function in lambda and z, kept in canonical form:
// numerator and denominator coprime, denominator a primitive integer
// polynomial with positive grlex-leading coefficient.  Equality is syntactic.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFun(long c) : RatFun(BigRat(c)) {}          // NOLINT(google-explicit-constructor)
    RatFun(const Poly& p) : num_(p), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
    RatFun(const Poly& num, const Poly& den);

    static RatFun lambda() { return RatFun(Poly::lambda()); }
    static RatFun z() { return RatFun(Poly::z()); }
    static RatFun monomial(const BigRat& c, int l, int z);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool free_of_z() const { return num_.free_of_z() && den_.free_of_z(); }
    // Value of a constant function; throws std::domain_error otherwise.
    BigRat constant_value() const;

    // deg(num) - deg(den) when both are homogeneous.
    std::optional<int> homogeneous_degree() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFun inverse() const;
    RatFun pow(long e) const;

    std::string to_string() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
};

// Parses the output of RatFun::to_string (lambda, z, +, -, *, /, ^, parentheses).
RatFun parse_ratfun(const std::string& s);

}  // namespace glsmx
