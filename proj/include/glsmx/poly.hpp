#pragma once

#include "glsmx/bigrat.hpp"

#include <map>
#include <string>
#include <vector>

namespace glsmx {

// Exponent pair of a monomial lambda^l z^k.
struct Mono {
    int l = 0;
    int z = 0;
    int total() const { return l + z; }
    bool operator==(const Mono&) const = default;
};

// Graded lexicographic order with lambda > z.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const
    {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.l < b.l;
    }
};

// Sparse polynomial in lambda and z with rational coefficients.
class Poly {
public:
    using Terms = std::map<Mono, BigRat, MonoLess>;

    Poly() = default;
    Poly(const BigRat& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(BigRat(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly monomial(const BigRat& c, int l, int z);
    static Poly lambda() { return monomial(1, 1, 0); }
    static Poly z() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool free_of_z() const;
    bool free_of_lambda() const;

    // Leading term under the grlex order; the polynomial must be nonzero.
    const Mono& lead_mono() const { return terms_.rbegin()->first; }
    const BigRat& lead_coeff() const { return terms_.rbegin()->second; }
    BigRat coeff(int l, int z) const;
    BigRat constant_term() const { return coeff(0, 0); }

    int degree_lambda() const;
    int degree_z() const;
    int min_degree_lambda() const;
    int min_degree_z() const;
    // Returns the common total degree, or -1 if not homogeneous (or zero).
    int homogeneous_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const BigRat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const BigRat& c) { return a *= c; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly pow(unsigned e) const;

    // Exact division; throws DivisionByNonUnit when b does not divide *this.
    Poly exact_div(const Poly& b) const;

    // Coefficients in z, each a polynomial in lambda alone.
    std::vector<Poly> coeffs_in_z() const;
    static Poly from_coeffs_in_z(const std::vector<Poly>& c);

    // Multiplies by lambda^dl z^dz.
    Poly shifted(int dl, int dz) const;

    std::string to_string() const;

private:
    void add_term(const Mono& m, const BigRat& c);
    Terms terms_;
};

// Greatest common divisor up to a nonzero rational scalar.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace glsmx
