#pragma once

#include "glsmx/cohclass.hpp"
#include "glsmx/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace glsmx {

// Coefficient-ring adapters used by TruncSeries.  Each ring supplies a zero
// and a one shaped like a given element, a unit test, inversion and scaling.
inline BigRat zero_like(const BigRat&) { return 0; }
inline BigRat one_like(const BigRat&) { return 1; }
inline bool is_zero_elem(const BigRat& x) { return x == 0; }
inline bool is_one_elem(const BigRat& x) { return x == 1; }
inline bool is_unit_elem(const BigRat& x) { return x != 0; }
inline BigRat inverse_elem(const BigRat& x) { return 1 / x; }
inline BigRat scalar_mul(const BigRat& x, const BigRat& c) { return x * c; }

inline RatFun zero_like(const RatFun&) { return RatFun(); }
inline RatFun one_like(const RatFun&) { return RatFun(1); }
inline bool is_zero_elem(const RatFun& x) { return x.is_zero(); }
inline bool is_one_elem(const RatFun& x) { return x == RatFun(1); }
inline bool is_unit_elem(const RatFun& x) { return !x.is_zero(); }
inline RatFun inverse_elem(const RatFun& x) { return x.inverse(); }
inline RatFun scalar_mul(const RatFun& x, const BigRat& c) { return x * RatFun(c); }

inline CohClass zero_like(const CohClass& x) { return CohClass(x.relation()); }
inline CohClass one_like(const CohClass& x) { return CohClass(x.relation(), RatFun(1)); }
inline bool is_zero_elem(const CohClass& x) { return x.is_zero(); }
inline bool is_one_elem(const CohClass& x) { return x == one_like(x); }
inline bool is_unit_elem(const CohClass& x) { return x.is_unit(); }
inline CohClass inverse_elem(const CohClass& x) { return x.inverse(); }
inline CohClass scalar_mul(const CohClass& x, const BigRat& c) { return x * RatFun(c); }

// Power series in one variable, truncated after degree `order`.  Every
// operation discards terms above the (smaller) order of its operands.
template <class R>
class TruncSeries {
public:
    TruncSeries(std::string var, int order, const R& zero)
        : var_(std::move(var)), c_(static_cast<std::size_t>(std::max(order, 0)) + 1, zero_like(zero))
    {
    }

    TruncSeries(std::string var, int order, std::vector<R> coeffs, const R& zero)
        : TruncSeries(std::move(var), order, zero)
    {
        for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
    }

    // The series equal to the constant c.
    static TruncSeries constant(std::string var, int order, const R& c)
    {
        TruncSeries s(std::move(var), order, c);
        s.c_[0] = c;
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    R& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }
    const std::vector<R>& coeffs() const { return c_; }
    R zero() const { return zero_like(c_[0]); }

    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return is_zero_elem(x); });
    }

    TruncSeries truncated(int order) const
    {
        TruncSeries s(var_, std::min(order, this->order()), c_[0]);
        for (int k = 0; k <= s.order(); ++k) s.coeff(k) = (*this)[k];
        return s;
    }

    TruncSeries operator-() const
    {
        TruncSeries s(*this);
        for (auto& x : s.c_) x = -x;
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        TruncSeries s = a.truncated(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) s.coeff(k) += b[k];
        return s;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        int n = std::min(a.order(), b.order());
        TruncSeries s(a.var_, n, a.c_[0]);
        for (int i = 0; i <= n; ++i) {
            if (is_zero_elem(a[i])) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (is_zero_elem(b[j])) continue;
                s.coeff(i + j) += a[i] * b[j];
            }
        }
        return s;
    }

    friend TruncSeries operator*(const TruncSeries& a, const R& c)
    {
        TruncSeries s(a);
        for (auto& x : s.c_) x = x * c;
        return s;
    }

    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    bool is_unit() const { return is_unit_elem(c_[0]); }

    // Multiplicative inverse; DivisionByNonUnit if the constant term is not a unit.
    TruncSeries inverse() const
    {
        if (!is_unit()) throw DivisionByNonUnit("series with non-invertible constant term");
        R inv0 = inverse_elem(c_[0]);
        TruncSeries s(var_, order(), c_[0]);
        s.coeff(0) = inv0;
        for (int k = 1; k <= order(); ++k) {
            R acc = zero();
            for (int j = 1; j <= k; ++j)
                if (!is_zero_elem(c_[static_cast<std::size_t>(j)])) acc += (*this)[j] * s[k - j];
            s.coeff(k) = -(acc * inv0);
        }
        return s;
    }

    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

    bool operator==(const TruncSeries& o) const { return order() == o.order() && c_ == o.c_; }

private:
    std::string var_;
    std::vector<R> c_;
};

template <class R>
TruncSeries<R> zero_like(const TruncSeries<R>& x)
{
    return TruncSeries<R>(x.var(), x.order(), x[0]);
}
template <class R>
TruncSeries<R> one_like(const TruncSeries<R>& x)
{
    return TruncSeries<R>::constant(x.var(), x.order(), one_like(x[0]));
}
template <class R>
bool is_zero_elem(const TruncSeries<R>& x)
{
    return x.is_zero();
}
template <class R>
bool is_unit_elem(const TruncSeries<R>& x)
{
    return x.is_unit();
}
template <class R>
TruncSeries<R> inverse_elem(const TruncSeries<R>& x)
{
    return x.inverse();
}
template <class R>
TruncSeries<R> scalar_mul(const TruncSeries<R>& x, const BigRat& c)
{
    TruncSeries<R> s(x);
    for (int k = 0; k <= s.order(); ++k) s.coeff(k) = scalar_mul(s[k], c);
    return s;
}

// s^a for a series with constant term 1, via the power recurrence
// k t_k = sum_{j=1..k} ((a+1) j - k) s_j t_{k-j}.
template <class R>
TruncSeries<R> series_root_pow(const TruncSeries<R>& s, const BigRat& a)
{
    if (!is_one_elem(s[0])) throw BadConstantTerm("constant term must be 1");
    TruncSeries<R> t = one_like(s);
    if (a == 0) return t;
    for (int k = 1; k <= s.order(); ++k) {
        R acc = s.zero();
        for (int j = 1; j <= k; ++j) {
            if (is_zero_elem(s[j])) continue;
            BigRat w = (a + 1) * j - k;
            if (w == 0) continue;
            acc += scalar_mul(s[j] * t[k - j], w);
        }
        t.coeff(k) = scalar_mul(acc, rat(1, k));
    }
    return t;
}

}  // namespace glsmx
