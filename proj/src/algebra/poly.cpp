#include "glsmx/poly.hpp"

#include "glsmx/errors.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace glsmx {

Poly::Poly(const BigRat& c)
{
    if (c != 0) terms_.emplace(Mono{0, 0}, c);
}

Poly Poly::monomial(const BigRat& c, int l, int z)
{
    Poly p;
    if (c != 0) p.terms_.emplace(Mono{l, z}, c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

bool Poly::free_of_z() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.z == 0; });
}

bool Poly::free_of_lambda() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.l == 0; });
}

BigRat Poly::coeff(int l, int z) const
{
    auto it = terms_.find(Mono{l, z});
    return it == terms_.end() ? BigRat(0) : it->second;
}

int Poly::degree_lambda() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.l);
    return d;
}

int Poly::degree_z() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.z);
    return d;
}

int Poly::min_degree_lambda() const
{
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.l);
    return terms_.empty() ? 0 : d;
}

int Poly::min_degree_z() const
{
    int d = INT_MAX;
    for (const auto& [m, c] : terms_) d = std::min(d, m.z);
    return terms_.empty() ? 0 : d;
}

int Poly::homogeneous_degree() const
{
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.total();
    return terms_.rbegin()->first.total() == d ? d : -1;
}

void Poly::add_term(const Mono& m, const BigRat& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const BigRat& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(Mono{ma.l + mb.l, ma.z + mb.z}, ca * cb);
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly r(1), base(*this);
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::exact_div(const Poly& b) const
{
    if (b.is_zero()) throw DivisionByNonUnit("polynomial division by zero");
    if (b.is_monomial()) {
        const Mono& mb = b.lead_mono();
        BigRat inv = 1 / b.lead_coeff();
        Poly q;
        for (const auto& [m, c] : terms_) {
            if (m.l < mb.l || m.z < mb.z) throw DivisionByNonUnit("inexact polynomial division");
            q.terms_.emplace(Mono{m.l - mb.l, m.z - mb.z}, c * inv);
        }
        return q;
    }
    Poly r(*this), q;
    const Mono& mb = b.lead_mono();
    const BigRat& cb = b.lead_coeff();
    while (!r.is_zero()) {
        Mono mr = r.lead_mono();
        if (mr.l < mb.l || mr.z < mb.z) throw DivisionByNonUnit("inexact polynomial division");
        Poly t = monomial(r.lead_coeff() / cb, mr.l - mb.l, mr.z - mb.z);
        q += t;
        r -= t * b;
    }
    return q;
}

std::vector<Poly> Poly::coeffs_in_z() const
{
    std::vector<Poly> out(static_cast<std::size_t>(std::max(degree_z() + 1, 0)));
    for (const auto& [m, c] : terms_) out[static_cast<std::size_t>(m.z)].add_term(Mono{m.l, 0}, c);
    return out;
}

Poly Poly::from_coeffs_in_z(const std::vector<Poly>& c)
{
    Poly r;
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto& [m, v] : c[k].terms_) r.add_term(Mono{m.l, m.z + static_cast<int>(k)}, v);
    return r;
}

Poly Poly::shifted(int dl, int dz) const
{
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Mono{m.l + dl, m.z + dz}, c);
    return r;
}

std::string Poly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        BigRat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool unit = (c == 1);
        if (!unit || (m.l == 0 && m.z == 0)) os << glsmx::to_string(c);
        bool need_star = !unit;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (need_star) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
            need_star = true;
        };
        var("lambda", m.l);
        var("z", m.z);
    }
    return os.str();
}

namespace {

// Univariate polynomials over Q, low degree first, no trailing zeros.
using UPoly = std::vector<BigRat>;

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b)
{
    UPoly r(std::max(a.size(), b.size()), BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Quotient and remainder over the field Q.
void udivmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r)
{
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
    const BigRat& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        BigRat c = r.back() / lb;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
    trim(q);
}

UPoly umonic(UPoly p)
{
    if (p.empty()) return p;
    BigRat inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly ugcd(UPoly a, UPoly b)
{
    while (!b.empty()) {
        UPoly q, r;
        udivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a);
}

UPoly uexact_div(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    udivmod(a, b, q, r);
    return q;
}

// Polynomials in z whose coefficients are univariate in lambda.
using ZPoly = std::vector<UPoly>;

void ztrim(ZPoly& p)
{
    while (!p.empty() && p.back().empty()) p.pop_back();
}

ZPoly to_zpoly(const Poly& p)
{
    ZPoly out(static_cast<std::size_t>(std::max(p.degree_z() + 1, 0)));
    for (const auto& [m, c] : p.terms()) {
        UPoly& u = out[static_cast<std::size_t>(m.z)];
        if (u.size() <= static_cast<std::size_t>(m.l)) u.resize(static_cast<std::size_t>(m.l) + 1, BigRat(0));
        u[static_cast<std::size_t>(m.l)] = c;
    }
    return out;
}

Poly from_zpoly(const ZPoly& p)
{
    Poly r;
    for (std::size_t k = 0; k < p.size(); ++k)
        for (std::size_t l = 0; l < p[k].size(); ++l)
            r += Poly::monomial(p[k][l], static_cast<int>(l), static_cast<int>(k));
    return r;
}

UPoly zcontent(const ZPoly& p)
{
    UPoly g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = g.empty() ? umonic(c) : ugcd(g, c);
        if (g.size() == 1) break;
    }
    return g;
}

ZPoly zdiv_scalar(const ZPoly& p, const UPoly& c)
{
    ZPoly r(p.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].empty()) r[k] = uexact_div(p[k], c);
    return r;
}

ZPoly zprimitive(const ZPoly& p)
{
    UPoly c = zcontent(p);
    if (c.empty()) return p;
    return zdiv_scalar(p, c);
}

// Pseudo-remainder of a by b in Q[lambda][z].
ZPoly zprem(ZPoly a, const ZPoly& b)
{
    const UPoly& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        UPoly la = a.back();
        for (auto& c : a) c = umul(c, lb);
        for (int j = 0; j <= db; ++j) {
            auto& dst = a[static_cast<std::size_t>(j + da - db)];
            dst = usub(dst, umul(la, b[static_cast<std::size_t>(j)]));
        }
        ztrim(a);
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a.is_monomial() || b.is_monomial()) {
        int l = std::min(a.min_degree_lambda(), b.min_degree_lambda());
        int z = std::min(a.min_degree_z(), b.min_degree_z());
        return Poly::monomial(1, l, z);
    }
    // Pull out monomial factors first; this keeps the common cases cheap.
    int l = std::min(a.min_degree_lambda(), b.min_degree_lambda());
    int z = std::min(a.min_degree_z(), b.min_degree_z());
    Poly mono = Poly::monomial(1, l, z);

    ZPoly za = to_zpoly(a.shifted(-a.min_degree_lambda(), -a.min_degree_z()));
    ZPoly zb = to_zpoly(b.shifted(-b.min_degree_lambda(), -b.min_degree_z()));
    UPoly ca = zcontent(za), cb = zcontent(zb);
    UPoly cg = ugcd(ca, cb);
    za = zdiv_scalar(za, ca);
    zb = zdiv_scalar(zb, cb);
    if (za.size() < zb.size()) std::swap(za, zb);
    while (zb.size() > 1) {
        ZPoly r = zprem(za, zb);
        za = std::move(zb);
        zb = zprimitive(r);
        if (zb.empty()) break;
    }
    ZPoly g;
    if (zb.empty())
        g = zprimitive(za);
    else
        g = ZPoly{UPoly{BigRat(1)}};  // the PRS ended in a constant in z
    for (auto& c : g) c = umul(c, cg);
    ztrim(g);
    return from_zpoly(g) * mono;
}

}  // namespace glsmx
