#include "glsmx/graphs.hpp"

#include "glsmx/errors.hpp"

#include <functional>
#include <map>

namespace glsmx {

namespace {

int md(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

// sum of vars = rhs (mod d)
struct Congruence {
    std::vector<int> vars;
    int rhs = 0;
};

// All solutions in (Z/d)^nvars.  A congruence with one unknown left fixes
// it; otherwise the first unknown is branched over.
void solve_congruences(int nvars, int d, const std::vector<Congruence>& cs,
                       const std::function<void(const std::vector<int>&)>& emit)
{
    std::vector<int> x(static_cast<std::size_t>(nvars), -1);
    std::function<void()> rec = [&] {
        std::vector<int> assigned;
        bool progress = true;
        bool ok = true;
        while (progress && ok) {
            progress = false;
            for (const auto& c : cs) {
                int unknown = -1, count = 0;
                long s = 0;
                for (int v : c.vars) {
                    if (x[v] < 0) {
                        ++count;
                        unknown = v;
                    } else {
                        s += x[v];
                    }
                }
                if (count == 0) {
                    if (md(s, d) != md(c.rhs, d)) ok = false;
                } else if (count == 1) {
                    x[unknown] = md(c.rhs - s, d);
                    assigned.push_back(unknown);
                    progress = true;
                }
                if (!ok) break;
            }
        }
        if (ok) {
            int free = -1;
            for (int v = 0; v < nvars; ++v)
                if (x[v] < 0) {
                    free = v;
                    break;
                }
            if (free < 0) {
                emit(x);
            } else {
                for (int val = 0; val < d; ++val) {
                    x[free] = val;
                    rec();
                }
                x[free] = -1;
            }
        }
        for (int v : assigned) x[v] = -1;
    };
    rec();
}

// Calls f for every vector of `parts` non-negative integers summing to total
// (or, with min_one, positive integers).
void compositions(int total, int parts, bool min_one, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts - 1) {
            if (left < (min_one ? 1 : 0)) return;
            c[i] = left;
            f(c);
            return;
        }
        for (int k = min_one ? 1 : 0; k <= left; ++k) {
            c[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (parts == 0) {
        if (total == 0) f(c);
        return;
    }
    rec(0, total);
}

bool bipartite_connected(int V0, int Vi, const std::vector<std::pair<int, int>>& edges)
{
    int n = V0 + Vi;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int s : seen)
        if (!s) return false;
    return true;
}

enum class Kind { stable, end, two_valent, bad };

}  // namespace

std::vector<LocGraph> enumerate_loc_graphs(const GlsmModel& model, int g, int n, int beta, int delta)
{
    if (g < 0 || n < 0 || beta < 0 || delta < 0) throw ConfigError("negative enumeration parameter");
    if (g > 2 || n > 4 || beta > 6 || delta > 4)
        throw BoundsExceeded("enumeration supports g <= 2, n <= 4, beta <= 6, delta <= 4");
    const int d = model.d;
    const bool lg = model.phase == Phase::lg;
    std::map<std::string, LocGraph> found;

    auto rhs_vertex = [&](int genus, int b, int val) { return lg ? md(-b + 2 * genus - 2 + val, d) : 0; };

    if (delta == 0) {
        for (Level lvl : {Level::zero, Level::infinity}) {
            bool stable = lvl == Level::zero ? BigRat(2 * g - 2 + n) + model.epsilon * beta > 0
                                             : (model.N > 1 || beta == 0) && (2 * g - 2 + n > 0 || beta > 0);
            if (!stable) continue;
            std::vector<int> all;
            for (int i = 0; i < n; ++i) all.push_back(i);
            solve_congruences(n, d, {{all, rhs_vertex(g, beta, n)}}, [&](const std::vector<int>& x) {
                LocGraph G;
                G.d = d;
                G.phase = model.phase;
                GVertex v;
                v.genus = g;
                v.beta = beta;
                v.level = lvl;
                for (int i = 0; i < n; ++i) v.legs.push_back({i + 1, x[i]});
                G.vertices.push_back(v);
                found.emplace(canonical_form(G), G);
            });
        }
    }

    for (int E = 1; E <= delta; ++E)
        for (int V0 = 1; V0 <= E; ++V0)
            for (int Vi = 1; V0 + Vi - 1 <= E; ++Vi) {
                int h1 = E - V0 - Vi + 1;
                if (h1 > g) continue;
                int V = V0 + Vi;
                // Edge multiplicities between level-0 vertex i and level-oo vertex j.
                compositions(E, V0 * Vi, false, [&](const std::vector<int>& counts) {
                    std::vector<std::pair<int, int>> shape;
                    for (int i = 0; i < V0; ++i)
                        for (int j = 0; j < Vi; ++j)
                            for (int k = 0; k < counts[i * Vi + j]; ++k) shape.emplace_back(i, V0 + j);
                    if (!bipartite_connected(V0, Vi, shape)) return;
                    std::vector<int> degree(static_cast<std::size_t>(V), 0);
                    for (auto [a, b] : shape) {
                        ++degree[a];
                        ++degree[b];
                    }
                    std::vector<int> beta_slots;
                    for (int v = 0; v < V; ++v)
                        if (v < V0 || model.N > 1) beta_slots.push_back(v);

                    compositions(delta, E, true, [&](const std::vector<int>& deltas) {
                        compositions(g - h1, V, false, [&](const std::vector<int>& genus) {
                            compositions(beta, static_cast<int>(beta_slots.size()), false, [&](const std::vector<int>& bs) {
                                std::vector<int> vb(static_cast<std::size_t>(V), 0);
                                for (std::size_t k = 0; k < beta_slots.size(); ++k) vb[beta_slots[k]] = bs[k];
                                std::vector<int> place(static_cast<std::size_t>(n), 0);
                                std::function<void(int)> legs = [&](int i) {
                                    if (i < n) {
                                        for (int v = 0; v < V; ++v) {
                                            place[i] = v;
                                            legs(i + 1);
                                        }
                                        return;
                                    }
                                    std::vector<std::vector<int>> legs_at(static_cast<std::size_t>(V));
                                    for (int k = 0; k < n; ++k) legs_at[place[k]].push_back(k);
                                    std::vector<Kind> kind(static_cast<std::size_t>(V));
                                    for (int v = 0; v < V; ++v) {
                                        int val = degree[v] + static_cast<int>(legs_at[v].size());
                                        bool stable = v < V0 ? BigRat(2 * genus[v] - 2 + val) + model.epsilon * vb[v] > 0
                                                             : 2 * genus[v] - 2 + val > 0 || vb[v] > 0;
                                        if (stable)
                                            kind[v] = Kind::stable;
                                        else if (genus[v] == 0 && val == 1 && legs_at[v].empty())
                                            kind[v] = Kind::end;
                                        else if (genus[v] == 0 && val == 2 && vb[v] == 0)
                                            kind[v] = Kind::two_valent;
                                        else
                                            return;
                                    }
                                    // Basepoint ends need delta(e) > beta(e).
                                    for (std::size_t e = 0; e < shape.size(); ++e) {
                                        int u = shape[e].first;
                                        if (kind[u] == Kind::end && deltas[e] <= vb[u]) return;
                                    }
                                    // Variables: legs, then (u-end, v-end) per edge.
                                    int nv = n + 2 * E;
                                    std::vector<Congruence> cs;
                                    for (int v = 0; v < V; ++v) {
                                        std::vector<int> vars(legs_at[v]);
                                        for (std::size_t e = 0; e < shape.size(); ++e) {
                                            if (shape[e].first == v) vars.push_back(n + 2 * static_cast<int>(e));
                                            if (shape[e].second == v) vars.push_back(n + 2 * static_cast<int>(e) + 1);
                                        }
                                        if (kind[v] == Kind::stable)
                                            cs.push_back({vars, rhs_vertex(genus[v], vb[v], static_cast<int>(vars.size()))});
                                        else
                                            cs.push_back({vars, 0});
                                    }
                                    for (std::size_t e = 0; e < shape.size(); ++e) {
                                        auto [u, w] = shape[e];
                                        int s = (kind[u] != Kind::end) + (kind[w] != Kind::end);
                                        int be = kind[u] == Kind::end ? vb[u] : 0;
                                        int r = lg ? md(2 - s + be, d) : 0;
                                        int base = n + 2 * static_cast<int>(e);
                                        cs.push_back({{base, base + 1}, r});
                                    }
                                    solve_congruences(nv, d, cs, [&](const std::vector<int>& x) {
                                        LocGraph G;
                                        G.d = d;
                                        G.phase = model.phase;
                                        for (int v = 0; v < V; ++v) {
                                            GVertex gv;
                                            gv.genus = genus[v];
                                            gv.beta = vb[v];
                                            gv.level = v < V0 ? Level::zero : Level::infinity;
                                            for (int k : legs_at[v]) gv.legs.push_back({k + 1, x[k]});
                                            G.vertices.push_back(gv);
                                        }
                                        for (std::size_t e = 0; e < shape.size(); ++e) {
                                            int base = n + 2 * static_cast<int>(e);
                                            G.edges.push_back({shape[e].first, shape[e].second, x[base], x[base + 1], deltas[e]});
                                        }
                                        found.emplace(canonical_form(G), G);
                                    });
                                };
                                legs(0);
                            });
                        });
                    });
                });
            }

    std::vector<LocGraph> out;
    for (auto& [key, G] : found) out.push_back(std::move(G));
    return out;
}

}  // namespace glsmx
