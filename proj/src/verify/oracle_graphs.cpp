#include "glsmx/verify/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace glsmx::oracle {

namespace {

int md(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

struct BruteGraph {
    std::vector<int> level;  // 0 or 1 (oo)
    std::vector<int> genus, beta;
    std::vector<int> leg_vertex, leg_mult;  // leg i + 1
    std::vector<int> eu, ev, edelta, mu, mv;
};

// Admissibility written out rule by rule.
bool admissible(const GlsmModel& model, const BruteGraph& G)
{
    const int d = model.d;
    const bool lg = model.phase == Phase::lg;
    int V = static_cast<int>(G.level.size());
    int E = static_cast<int>(G.eu.size());
    std::vector<int> free_end(static_cast<std::size_t>(V), 0);
    for (int v = 0; v < V; ++v) {
        int edges_here = 0, legs_here = 0;
        long msum = 0;
        for (int e = 0; e < E; ++e) {
            if (G.eu[e] == v) ++edges_here, msum += G.mu[e];
            if (G.ev[e] == v) ++edges_here, msum += G.mv[e];
        }
        for (std::size_t i = 0; i < G.leg_vertex.size(); ++i)
            if (G.leg_vertex[i] == v) ++legs_here, msum += G.leg_mult[i];
        int val = edges_here + legs_here;
        int chi = 2 * G.genus[v] - 2 + val;
        bool stable;
        if (G.level[v] == 0) {
            stable = model.epsilon * G.beta[v] + chi > 0;
        } else {
            if (model.N == 1 && G.beta[v] > 0) return false;
            stable = chi > 0 || G.beta[v] > 0;
        }
        if (stable) {
            int want = lg ? md(-G.beta[v] + chi, d) : 0;
            if (md(msum, d) != want) return false;
            continue;
        }
        if (G.genus[v] != 0) return false;
        if (val == 1 && legs_here == 0) {
            free_end[v] = 1;
            if (msum != 0) return false;
            for (int e = 0; e < E; ++e)
                if ((G.eu[e] == v || G.ev[e] == v) && G.edelta[e] <= G.beta[v]) return false;
            continue;
        }
        // a two-pointed rational component needs an edge: alone it is the whole, unstable, curve
        if (val == 2 && G.beta[v] == 0 && edges_here > 0) {
            if (md(msum, d) != 0) return false;
            continue;
        }
        return false;
    }
    for (int e = 0; e < E; ++e) {
        int s = 2 - free_end[G.eu[e]] - free_end[G.ev[e]];
        int be = free_end[G.eu[e]] ? G.beta[G.eu[e]] : 0;
        int want = lg ? md(2 - s + be, d) : 0;
        if (md(G.mu[e] + G.mv[e], d) != want) return false;
    }
    return true;
}

std::string brute_key(const BruteGraph& G, const std::vector<int>& perm)
{
    // perm[old] = new
    int V = static_cast<int>(G.level.size());
    std::vector<std::string> verts(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
        std::ostringstream os;
        os << G.level[v] << "," << G.genus[v] << "," << G.beta[v] << ":";
        for (std::size_t i = 0; i < G.leg_vertex.size(); ++i)
            if (G.leg_vertex[i] == v) os << (i + 1) << "@" << G.leg_mult[i] << ";";
        verts[perm[v]] = os.str();
    }
    std::vector<std::string> edges;
    for (std::size_t e = 0; e < G.eu.size(); ++e) {
        std::ostringstream os;
        os << perm[G.eu[e]] << "-" << perm[G.ev[e]] << "/" << G.mu[e] << "," << G.mv[e] << "/" << G.edelta[e];
        edges.push_back(os.str());
    }
    std::sort(edges.begin(), edges.end());
    std::string s;
    for (const auto& x : verts) s += "[" + x + "]";
    for (const auto& x : edges) s += "(" + x + ")";
    return s;
}

std::string brute_canonical(const BruteGraph& G)
{
    int V = static_cast<int>(G.level.size());
    std::vector<int> perm(static_cast<std::size_t>(V));
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool have = false;
    do {
        auto k = brute_key(G, perm);
        if (!have || k < best) best = k, have = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every vector in [0, bound)^len.
void all_vectors(int len, int bound, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> x(static_cast<std::size_t>(len), 0);
    while (true) {
        f(x);
        int i = 0;
        while (i < len && ++x[i] == bound) x[i++] = 0;
        if (i == len) return;
    }
}

}  // namespace

std::string brute_graph_key(const LocGraph& g)
{
    BruteGraph G;
    for (const auto& v : g.vertices) {
        G.level.push_back(v.level == Level::zero ? 0 : 1);
        G.genus.push_back(v.genus);
        G.beta.push_back(v.beta);
    }
    int n = 0;
    for (const auto& v : g.vertices)
        for (const auto& l : v.legs) n = std::max(n, l.id);
    G.leg_vertex.assign(static_cast<std::size_t>(n), -1);
    G.leg_mult.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& l : g.vertices[v].legs) {
            G.leg_vertex[l.id - 1] = static_cast<int>(v);
            G.leg_mult[l.id - 1] = l.mult;
        }
    for (const auto& e : g.edges) {
        G.eu.push_back(e.u);
        G.ev.push_back(e.v);
        G.mu.push_back(e.mu);
        G.mv.push_back(e.mv);
        G.edelta.push_back(e.delta);
    }
    return brute_canonical(G);
}

std::set<std::string> enumerate_loc_graphs_brute(const GlsmModel& model, int g, int n, int beta, int delta)
{
    std::set<std::string> out;
    const int d = model.d;
    auto try_mults = [&](BruteGraph G) {
        int E = static_cast<int>(G.eu.size());
        all_vectors(n + 2 * E, d, [&](const std::vector<int>& x) {
            for (int i = 0; i < n; ++i) G.leg_mult[i] = x[i];
            for (int e = 0; e < E; ++e) {
                G.mu[e] = x[n + 2 * e];
                G.mv[e] = x[n + 2 * e + 1];
            }
            if (admissible(model, G)) out.insert(brute_canonical(G));
        });
    };
    for (int V0 = 0; V0 <= delta + 1; ++V0)
        for (int Vi = 0; V0 + Vi <= delta + 1; ++Vi) {
            int V = V0 + Vi;
            if (V == 0) continue;
            if (delta == 0 && V != 1) continue;
            if (delta > 0 && (V0 == 0 || Vi == 0)) continue;
            for (int E = (delta == 0 ? 0 : 1); E <= delta; ++E) {
                if (V - 1 > E) continue;
                // Sequences of edges (i, j, delta_e).
                int choices = std::max(1, V0 * Vi * delta);
                all_vectors(E, choices, [&](const std::vector<int>& code) {
                    BruteGraph G;
                    G.level.assign(static_cast<std::size_t>(V), 1);
                    for (int v = 0; v < V0; ++v) G.level[v] = 0;
                    int dsum = 0;
                    for (int c : code) {
                        int i = c % V0;
                        int j = (c / V0) % Vi;
                        int de = c / (V0 * Vi) + 1;
                        G.eu.push_back(i);
                        G.ev.push_back(V0 + j);
                        G.edelta.push_back(de);
                        dsum += de;
                    }
                    if (dsum != delta) return;
                    // Edge lists are ordered; keep only sorted ones.
                    std::vector<int> sorted(code);
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted != code) return;
                    // Connected, every vertex touched.
                    std::vector<int> comp(static_cast<std::size_t>(V));
                    std::iota(comp.begin(), comp.end(), 0);
                    for (int it = 0; it < V; ++it)
                        for (int e = 0; e < E; ++e) {
                            int a = comp[G.eu[e]], b = comp[G.ev[e]];
                            comp[G.eu[e]] = comp[G.ev[e]] = std::min(a, b);
                        }
                    for (int v = 0; v < V; ++v)
                        if (comp[v] != 0) return;
                    int h1 = E - V + 1;
                    if (h1 > g) return;
                    G.mu.assign(static_cast<std::size_t>(E), 0);
                    G.mv.assign(static_cast<std::size_t>(E), 0);
                    all_vectors(V, g + 1, [&](const std::vector<int>& gen) {
                        if (std::accumulate(gen.begin(), gen.end(), 0) + h1 != g) return;
                        all_vectors(V, beta + 1, [&](const std::vector<int>& bet) {
                            if (std::accumulate(bet.begin(), bet.end(), 0) != beta) return;
                            all_vectors(n, V, [&](const std::vector<int>& place) {
                                BruteGraph H = G;
                                H.genus = gen;
                                H.beta = bet;
                                H.leg_vertex = place;
                                H.leg_mult.assign(static_cast<std::size_t>(n), 0);
                                try_mults(H);
                            });
                        });
                    });
                });
            }
        }
    return out;
}

}  // namespace glsmx::oracle
