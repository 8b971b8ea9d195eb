#include "glsmx/verify/oracles.hpp"

#include <functional>

namespace glsmx::oracle {

namespace {

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int V)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    if (V == 1) {
        out.push_back({});
        return out;
    }
    if (V == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(static_cast<std::size_t>(V - 2), 0);
    while (true) {
        std::vector<int> deg(static_cast<std::size_t>(V), 1);
        for (int x : seq) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.emplace_back(leaf, x);
            --deg[leaf];
            --deg[x];
        }
        int u = -1, v = -1;
        for (int i = 0; i < V; ++i)
            if (deg[i] == 1) (u < 0 ? u : v) = i;
        edges.emplace_back(u, v);
        out.push_back(edges);
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == V) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return out;
}

RatFun tau_of(int p) { return p == 0 ? RatFun::lambda() : -RatFun::lambda(); }

// int_{M_{0,m}} prod psi^{a} prod_F 1/(w_F - psi_F), expanded term by term.
RatFun vertex_integral(const std::vector<int>& a, const std::vector<RatFun>& w)
{
    int m = static_cast<int>(a.size() + w.size());
    int budget = m - 3;
    for (int x : a) budget -= x;
    if (budget < 0) return RatFun();
    RatFun total;
    std::vector<int> b(w.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == w.size()) {
            if (left != 0) return;
            std::vector<int> ex = a;
            RatFun t(1);
            for (std::size_t j = 0; j < w.size(); ++j) {
                ex.push_back(b[j]);
                t *= w[j].pow(-(b[j] + 1));
            }
            total += t * RatFun(psi_integral_genus0(ex));
            return;
        }
        for (int k = 0; k <= left; ++k) {
            b[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, budget);
    return total;
}

}  // namespace

RatFun p1_graph_sum_by_trees(int delta, const std::vector<P1Insertion>& ins)
{
    int n = static_cast<int>(ins.size());
    RatFun total;
    for (int V = 1; V <= delta + 1; ++V) {
        int E = V - 1;
        if (E == 0 && delta != 0) continue;
        if (E > 0 && delta < E) continue;
        BigRat inv_vfact = BigRat(1) / factorial(V);
        for (const auto& edges : labeled_trees(V)) {
            // 2-colouring from vertex 0.
            std::vector<int> col0(static_cast<std::size_t>(V), -1);
            col0[0] = 0;
            for (bool changed = true; changed;) {
                changed = false;
                for (auto [u, v] : edges) {
                    if (col0[u] >= 0 && col0[v] < 0) col0[v] = 1 - col0[u], changed = true;
                    if (col0[v] >= 0 && col0[u] < 0) col0[u] = 1 - col0[v], changed = true;
                }
            }
            for (int flip = 0; flip < 2; ++flip) {
                std::vector<int> col(col0);
                if (flip)
                    for (auto& c : col) c = 1 - c;
                std::vector<int> deg(static_cast<std::size_t>(E), 1);
                std::function<void(int, int)> degs;
                std::vector<int> place(static_cast<std::size_t>(n), 0);
                auto evaluate = [&] {
                    RatFun val(1);
                    for (int e = 0; e < E; ++e) {
                        int d = deg[e];
                        RatFun tp = tau_of(col[edges[e].first]), tq = tau_of(col[edges[e].second]);
                        RatFun den(d);
                        for (int k = 1; k <= d; ++k) den *= (tp * RatFun(rat(k, d))) * (tq * RatFun(rat(k, d)));
                        val /= den;
                    }
                    for (int v = 0; v < V; ++v) {
                        RatFun t = tau_of(col[v]);
                        std::vector<RatFun> w;
                        for (int e = 0; e < E; ++e)
                            if (edges[e].first == v || edges[e].second == v) w.push_back(t / RatFun(deg[e]));
                        std::vector<int> a;
                        RatFun g(1);
                        for (int i = 0; i < n; ++i)
                            if (place[i] == v) {
                                a.push_back(ins[i].psi);
                                g *= col[v] == 0 ? ins[i].cls.restrict_zero() : ins[i].cls.restrict_inf();
                            }
                        int val_v = static_cast<int>(w.size()), nv = static_cast<int>(a.size());
                        RatFun f;
                        if (val_v == 1 && nv == 0)
                            f = w[0];
                        else if (val_v == 1 && nv == 1)
                            f = g * (-w[0]).pow(a[0]);
                        else if (val_v == 2 && nv == 0)
                            f = t / (w[0] + w[1]);
                        else if (val_v + nv >= 3)
                            f = t.pow(val_v - 1) * g * vertex_integral(a, w);
                        else
                            f = RatFun();
                        val *= f;
                        if (val.is_zero()) return;
                    }
                    total += val * RatFun(inv_vfact);
                };
                std::function<void(int)> places = [&](int i) {
                    if (i == n) {
                        evaluate();
                        return;
                    }
                    for (int v = 0; v < V; ++v) {
                        place[i] = v;
                        places(i + 1);
                    }
                };
                degs = [&](int e, int left) {
                    if (e == E) {
                        if (left == 0) places(0);
                        return;
                    }
                    for (int d = 1; d <= left - (E - 1 - e); ++d) {
                        deg[e] = d;
                        degs(e + 1, left - d);
                    }
                };
                degs(0, delta);
            }
        }
    }
    return total;
}

BigRat psi_integral_by_string(const std::vector<int>& a)
{
    int n = static_cast<int>(a.size());
    if (n < 3) return 0;
    long sum = 0;
    for (int x : a) {
        if (x < 0) return 0;
        sum += x;
    }
    if (sum != n - 3) return 0;
    if (n == 3) return 1;
    // Some exponent is zero; drop that point and lower each other exponent.
    std::size_t zero = 0;
    while (a[zero] != 0) ++zero;
    std::vector<int> rest;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (i != zero) rest.push_back(a[i]);
    BigRat total = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue;
        auto b = rest;
        --b[i];
        total += psi_integral_by_string(b);
    }
    return total;
}

}  // namespace glsmx::oracle
