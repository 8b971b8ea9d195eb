#include "glsmx/p1series.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace glsmx {

namespace {

using YSeries = TruncSeries<RatFun>;
using BiSeries = std::vector<YSeries>;  // index = t-degree

RatFun tau(int p) { return p == 0 ? RatFun::lambda() : -RatFun::lambda(); }

RatFun restrict_at(const CohClass& c, int p) { return p == 0 ? c.restrict_zero() : c.restrict_inf(); }

// 1 / (d prod_{k=1..d} (k tau_p/d)(k tau_q/d)); independent of p.
RatFun edge_factor(int d)
{
    BigRat c = pow(BigRat(d), 2 * d - 1) / (factorial(d) * factorial(d));
    if (d % 2 == 1) c = -c;
    return RatFun::monomial(c, -2 * d, 0);
}

YSeries yzero(int order) { return YSeries("y", order, RatFun()); }

YSeries shift_y(const YSeries& s, int k)
{
    YSeries r = yzero(s.order());
    for (int i = 0; i + k <= s.order(); ++i) r.coeff(i + k) = s[i];
    return r;
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b, int tmax)
{
    BiSeries r(static_cast<std::size_t>(tmax) + 1, yzero(a[0].order()));
    for (int i = 0; i <= tmax; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= tmax; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Branch series: EU[p][d] for unmarked trees, EM[p][d][b] for trees carrying
// the marking, with alpha restricted to the basis vector b (0 or oo).
struct Branches {
    int Y;
    std::vector<std::vector<YSeries>> eu;
    std::vector<std::vector<std::vector<YSeries>>> em;
};

Branches compute_branches(int Y)
{
    Branches br{Y, {}, {}};
    br.eu.assign(2, std::vector<YSeries>(static_cast<std::size_t>(Y) + 1, yzero(Y)));
    br.em.assign(2, std::vector<std::vector<YSeries>>(static_cast<std::size_t>(Y) + 1,
                                                       std::vector<YSeries>(2, yzero(Y))));
    // Each pass fixes one more y-degree.
    for (int pass = 0; pass <= Y; ++pass) {
        auto eu = br.eu;
        auto em = br.em;
        for (int p = 0; p < 2; ++p) {
            int q = 1 - p;
            RatFun tq = tau(q);
            BiSeries A(static_cast<std::size_t>(Y) + 1, yzero(Y));
            for (int d = 1; d <= Y; ++d) A[d] = br.eu[q][d] * RatFun(d);
            std::vector<BiSeries> P(static_cast<std::size_t>(Y) + 1);
            if (Y >= 1) P[1] = A;
            for (int k = 2; k <= Y; ++k) P[k] = bi_mul(P[k - 1], A, Y);

            for (int d = 1; d <= Y; ++d) {
                YSeries u = YSeries::constant("y", Y, tq / RatFun(d));
                std::vector<YSeries> m(2, yzero(Y));
                for (int b = 0; b < 2; ++b)
                    m[b] = YSeries::constant("y", Y, RatFun(q == b ? 1 : 0));
                for (int d2 = 1; d + d2 <= Y; ++d2) {
                    RatFun c(rat(d * d2, d + d2));
                    u += br.eu[q][d2] * c;
                    for (int b = 0; b < 2; ++b) m[b] += br.em[q][d2][b] * c;
                }
                for (int k = 1; k <= Y; ++k) {
                    BigRat kf = factorial(k);
                    for (int D = k; d + D <= Y; ++D) {
                        if (P[k][D].is_zero()) continue;
                        if (k >= 2) {
                            BigRat c = BigRat(d) * pow(BigRat(d + D), k - 2) / kf;
                            u += P[k][D] * (tq.pow(1 - k) * RatFun(c));
                        }
                        RatFun tk = tq.pow(-k);
                        BigRat cl = BigRat(d) * pow(BigRat(d + D), k - 1) / kf;
                        for (int b = 0; b < 2; ++b) {
                            if (q == b) m[b] += P[k][D] * (tk * RatFun(cl));
                            for (int d2 = 1; d + D + d2 <= Y; ++d2) {
                                BigRat cm = BigRat(d * d2) * pow(BigRat(d + D + d2), k - 1) / kf;
                                m[b] += P[k][D] * br.em[q][d2][b] * (tk * RatFun(cm));
                            }
                        }
                    }
                }
                RatFun e = edge_factor(d);
                eu[p][d] = shift_y(u * e, d);
                for (int b = 0; b < 2; ++b) em[p][d][b] = shift_y(m[b] * e, d);
            }
        }
        br.eu = std::move(eu);
        br.em = std::move(em);
    }
    return br;
}

YSeries em_root(const Branches& br, const CohClass& alpha, int d)
{
    return br.em[0][d][0] * alpha.restrict_zero() + br.em[0][d][1] * alpha.restrict_inf();
}

TreeSeries tree_zero(int y_order, int z_order)
{
    return TreeSeries("y", y_order, TruncSeries<RatFun>("z", z_order, RatFun()));
}

// Adds sum_d lambda/(lambda/d - z) f(d) to out.
template <class F>
void add_node_sum(TreeSeries& out, int Y, int Z, F f)
{
    for (int d = 1; d <= Y; ++d) {
        YSeries s = f(d);
        for (int j = 0; j <= Z; ++j) {
            RatFun c = RatFun::monomial(pow(BigRat(d), j + 1), -j, 0);
            for (int k = 0; k <= Y; ++k)
                if (!s[k].is_zero()) out.coeff(k).coeff(j) += s[k] * c;
        }
    }
}

void check_order(int y_order, int z_order)
{
    if (y_order < 0 || y_order > 8 || z_order < 0 || z_order > 12)
        throw BoundsExceeded("tree series orders must satisfy 0 <= y <= 8, 0 <= z <= 12");
}

}  // namespace

HRelation p1_relation() { return HRelation::projline(); }
CohClass p1_one() { return CohClass(p1_relation(), RatFun(1)); }
CohClass p1_H() { return CohClass::H(p1_relation()); }
CohClass p1_point_zero() { return p1_H(); }
CohClass p1_point_infinity() { return p1_H() - p1_one() * RatFun::lambda(); }
CohClass p1_phi_zero() { return p1_H() * RatFun::lambda().inverse(); }
CohClass p1_phi_infinity() { return p1_one() - p1_phi_zero(); }

BigRat psi_integral_genus0(const std::vector<int>& exponents)
{
    long n = static_cast<long>(exponents.size());
    if (n < 3) return 0;
    long sum = 0;
    BigRat den = 1;
    for (int a : exponents) {
        if (a < 0) return 0;
        sum += a;
        den *= factorial(a);
    }
    if (sum != n - 3) return 0;
    return factorial(n - 3) / den;
}

RatFun p1_graph_sum(int delta, const std::vector<P1Insertion>& ins)
{
    int n = static_cast<int>(ins.size());
    if (n < 1 || n > 5 || delta < 0 || delta > 3)
        throw BoundsExceeded("p1_graph_sum supports 1 <= n <= 5 and 0 <= delta <= 3");
    for (const auto& x : ins)
        if (!(x.cls.relation() == p1_relation())) throw ConfigError("insertion is not a class on P^1");

    RatFun gam[5][2];
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 2; ++p) gam[i][p] = restrict_at(ins[i].cls, p);

    struct Child {
        int e, D, mask;
    };
    std::map<std::tuple<int, int, int, int>, RatFun> memo;

    std::function<RatFun(int, int, int, int)> branch;
    std::function<RatFun(int, int, int, int)> vertex;

    // Edge of degree e leaving p, whose subtree has total degree D and markings T.
    branch = [&](int p, int e, int T, int D) -> RatFun {
        auto key = std::make_tuple(p, e, T, D);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        RatFun v = edge_factor(e) * vertex(1 - p, e, T, D - e);
        memo.emplace(key, v);
        return v;
    };

    // Vertex at q reached by an edge of degree e_in (0 at the root) with
    // markings T and degree D left below it.
    vertex = [&](int q, int e_in, int T, int D) -> RatFun {
        RatFun tq = tau(q);
        RatFun total;
        bool root = e_in == 0;
        for (int S = T;; S = (S - 1) & T) {
            if (!root || (S & 1)) {
                int R = T & ~S;
                std::vector<Child> kids;
                // Sum over children: marked blocks partition R, then ordered unmarked children.
                std::function<void(int, int, RatFun)> unmarked;
                std::function<void(int, int, RatFun)> marked;
                auto finish = [&](const RatFun& kid_product, int n_unmarked) {
                    int F = (root ? 0 : 1) + static_cast<int>(kids.size());
                    int ns = 0;
                    RatFun g(1);
                    std::vector<int> a;
                    for (int i = 0; i < n; ++i)
                        if (S >> i & 1) {
                            ++ns;
                            g *= gam[i][q];
                            a.push_back(ins[i].psi);
                        }
                    std::vector<RatFun> w;
                    if (!root) w.push_back(tq / RatFun(e_in));
                    for (const auto& c : kids) w.push_back(tq / RatFun(c.e));
                    RatFun val;
                    int N = F + ns;
                    if (!root && kids.empty() && ns == 0) {
                        val = w[0];
                    } else if (F == 1 && ns == 1) {
                        val = g * (-w[0]).pow(a[0]);
                    } else if (!root && kids.size() == 1 && ns == 0) {
                        val = tq / (w[0] + w[1]);
                    } else if (N >= 3) {
                        int K = N - 3;
                        BigRat den = 1;
                        for (int x : a) {
                            K -= x;
                            den *= factorial(x);
                        }
                        if (K < 0) return;
                        RatFun prod(1), sum;
                        for (const auto& x : w) {
                            prod /= x;
                            sum += x.inverse();
                        }
                        RatFun sk = K == 0 ? RatFun(1) : sum.pow(K);
                        val = tq.pow(F - 1) * g * prod * sk * RatFun(factorial(N - 3) / (den * factorial(K)));
                    } else {
                        return;
                    }
                    if (val.is_zero()) return;
                    total += val * kid_product * RatFun(BigRat(1) / factorial(n_unmarked));
                };
                unmarked = [&](int left, int count, RatFun prod) {
                    if (left == 0) {
                        finish(prod, count);
                        return;
                    }
                    for (int Dc = 1; Dc <= left; ++Dc)
                        for (int e = 1; e <= Dc; ++e) {
                            RatFun b = branch(q, e, 0, Dc);
                            if (b.is_zero()) continue;
                            kids.push_back({e, Dc, 0});
                            unmarked(left - Dc, count + 1, prod * b);
                            kids.pop_back();
                        }
                };
                marked = [&](int rest, int left, RatFun prod) {
                    if (rest == 0) {
                        unmarked(left, 0, prod);
                        return;
                    }
                    int low = rest & -rest;
                    int others = rest & ~low;
                    for (int sub = others;; sub = (sub - 1) & others) {
                        int block = sub | low;
                        for (int Dc = 1; Dc <= left; ++Dc)
                            for (int e = 1; e <= Dc; ++e) {
                                RatFun b = branch(q, e, block, Dc);
                                if (b.is_zero()) continue;
                                kids.push_back({e, Dc, block});
                                marked(rest & ~block, left - Dc, prod * b);
                                kids.pop_back();
                            }
                        if (sub == 0) break;
                    }
                };
                marked(R, D, RatFun(1));
            }
            if (S == 0) break;
        }
        return total;
    };

    int all = (1 << n) - 1;
    return vertex(0, 0, all, delta) + vertex(1, 0, all, delta);
}

TreeSeries tree_series_S(const CohClass& alpha, int y_order, int z_order)
{
    check_order(y_order, z_order);
    Branches br = compute_branches(y_order);
    TreeSeries out = tree_zero(y_order, z_order);
    out.coeff(0).coeff(0) = alpha.restrict_zero();
    add_node_sum(out, y_order, z_order, [&](int d) { return em_root(br, alpha, d); });
    return out;
}

TreeSeries tree_series_eps(int y_order, int z_order)
{
    check_order(y_order, z_order);
    Branches br = compute_branches(y_order);
    TreeSeries out = tree_zero(y_order, z_order);
    add_node_sum(out, y_order, z_order, [&](int d) { return br.eu[0][d]; });
    return out;
}

TruncSeries<RatFun> stilde_at_zero(const CohClass& alpha, int y_order)
{
    check_order(y_order, 0);
    int Y = y_order;
    Branches br = compute_branches(Y);
    YSeries out = YSeries::constant("y", Y, alpha.restrict_zero());
    for (int d = 1; d <= Y; ++d) out += em_root(br, alpha, d) * RatFun(d);
    if (Y == 0) return out;

    // D^(t) and eps^(t): exponential generating functions in t of the
    // psi-coefficients of the marked and unmarked node sums.
    int T = Y - 1;
    BiSeries Dh(static_cast<std::size_t>(T) + 1, yzero(Y)), Eh(static_cast<std::size_t>(T) + 1, yzero(Y));
    for (int a = 0; a <= T; ++a) {
        BigRat inv = BigRat(1) / factorial(a);
        for (int d = 1; d <= Y; ++d) {
            Dh[a] += em_root(br, alpha, d) * RatFun::monomial(pow(BigRat(d), a + 2) * inv, -(a + 1), 0);
            Eh[a] += br.eu[0][d] * RatFun::monomial(pow(BigRat(d), a + 1) * inv, -a, 0);
        }
    }
    BiSeries acc = Dh;
    for (int m = 1; m <= Y; ++m) {
        acc = bi_mul(acc, Eh, T);
        out += acc[m - 1] * RatFun(BigRat(1, m));
    }
    return out;
}

TruncSeries<RatFun> phi_series(int y_order)
{
    YSeries s = YSeries::constant("y", y_order, RatFun(1));
    if (y_order >= 1) s.coeff(1) = RatFun::monomial(4, -2, 0);
    return s;
}

TruncSeries<RatFun> stilde_one_closed_form(int y_order)
{
    return series_root_pow(phi_series(y_order), BigRat(-1, 4));
}

TruncSeries<RatFun> stilde_H_closed_form(int y_order)
{
    YSeries phi = phi_series(y_order);
    YSeries one = YSeries::constant("y", y_order, RatFun(1));
    return series_root_pow(phi, BigRat(-1, 4)) * (one + series_root_pow(phi, BigRat(1, 2))) *
           RatFun::monomial(BigRat(1, 2), 1, 0);
}

IrrRatioReport irr_ratio_check(int y_order)
{
    IrrRatioReport rep{yzero(y_order), yzero(y_order), {}};
    YSeries num = stilde_at_zero(p1_phi_infinity(), y_order);
    YSeries den = stilde_at_zero(p1_phi_zero(), y_order);
    rep.ratio = num / den;
    YSeries one = YSeries::constant("y", y_order, RatFun(1));
    YSeries root = series_root_pow(phi_series(y_order), BigRat(1, 2));
    rep.expected = (one - root) / (one + root);
    rep.laurent = laurent_expand(rep.ratio, -2 * y_order - 2);
    for (int k = 0; k <= y_order; ++k) {
        if (!(rep.ratio[k] == rep.expected[k])) {
            std::ostringstream os;
            os << "coefficient of y^" << k << ": got " << rep.ratio[k].to_string() << ", expected "
               << rep.expected[k].to_string();
            throw IdentityFailed(os.str());
        }
    }
    return rep;
}

}  // namespace glsmx
