#include "glsmx/laurent.hpp"

#include <stdexcept>

namespace glsmx {

namespace {

// Trims zero coefficients at both ends, keeping the exactness window.
LaurentInLambda trimmed(int lo_exp, std::vector<BigRat> c, int window_low)
{
    std::size_t b = 0;
    while (b < c.size() && c[b] == 0) ++b;
    std::size_t e = c.size();
    while (e > b && c[e - 1] == 0) --e;
    LaurentInLambda out;
    out.window_low = window_low;
    if (b == e) return out;
    out.min_exponent = lo_exp + static_cast<int>(b);
    out.coeffs.assign(c.begin() + static_cast<long>(b), c.begin() + static_cast<long>(e));
    return out;
}

// Coefficients of p in lambda, highest degree first.
std::vector<BigRat> descending(const Poly& p)
{
    int n = p.degree_lambda();
    std::vector<BigRat> out(static_cast<std::size_t>(n + 1));
    for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(n - m.l)] = c;
    return out;
}

}  // namespace

BigRat LaurentInLambda::coeff(int e) const
{
    if (e < window_low) throw std::out_of_range("exponent below the exactness window");
    if (coeffs.empty() || e < min_exponent || e > max_exponent()) return 0;
    return coeffs[static_cast<std::size_t>(e - min_exponent)];
}

LaurentInLambda laurent_expand(const RatFun& f, int window_low)
{
    if (!f.free_of_z()) throw std::invalid_argument("laurent_expand needs a function of lambda alone");
    if (f.is_zero()) return LaurentInLambda{0, {}, window_low};
    // f = lambda^(n-m) * A(u) / B(u) with u = 1/lambda.
    std::vector<BigRat> a = descending(f.num()), b = descending(f.den());
    int top = f.num().degree_lambda() - f.den().degree_lambda();
    if (top < window_low) return LaurentInLambda{0, {}, window_low};
    std::size_t len = static_cast<std::size_t>(top - window_low) + 1;
    std::vector<BigRat> q(len);
    for (std::size_t k = 0; k < len; ++k) {
        BigRat acc = k < a.size() ? a[k] : BigRat(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    std::vector<BigRat> asc(q.rbegin(), q.rend());
    return trimmed(window_low, std::move(asc), window_low);
}

std::vector<LaurentInLambda> laurent_expand(const TruncSeries<RatFun>& s, int window_low)
{
    std::vector<LaurentInLambda> out;
    for (int k = 0; k <= s.order(); ++k) out.push_back(laurent_expand(s[k], window_low));
    return out;
}

LaurentInLambda operator*(const LaurentInLambda& a, const LaurentInLambda& b)
{
    if (a.is_zero() && b.is_zero()) return LaurentInLambda{0, {}, a.window_low + b.window_low - 1};
    if (a.is_zero()) return LaurentInLambda{0, {}, a.window_low + b.max_exponent()};
    if (b.is_zero()) return LaurentInLambda{0, {}, b.window_low + a.max_exponent()};
    int w = std::max(a.window_low + b.max_exponent(), b.window_low + a.max_exponent());
    int lo = a.min_exponent + b.min_exponent;
    std::vector<BigRat> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    int start = std::max(lo, w);
    std::vector<BigRat> kept;
    for (int e = start; e <= lo + static_cast<int>(c.size()) - 1; ++e) kept.push_back(c[static_cast<std::size_t>(e - lo)]);
    return trimmed(start, std::move(kept), w);
}

}  // namespace glsmx
