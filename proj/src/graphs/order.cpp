#include "glsmx/graphs.hpp"

#include <functional>
#include <map>
#include <set>

namespace glsmx {

namespace {

int md(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

int valence(const DualGraph& g, int v)
{
    int val = static_cast<int>(g.vertices[v].legs.size());
    for (const auto& e : g.edges) val += (e.u == v) + (e.v == v);
    return val;
}

bool connected_on(int k, const std::vector<std::pair<int, int>>& edges)
{
    if (k == 0) return false;
    std::vector<int> seen(static_cast<std::size_t>(k), 0);
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

// Collapses the connected subgraph (vertex mask S, edge mask F) of a to one
// vertex, which becomes the distinguished vertex.
DualGraph collapse(const DualGraph& a, unsigned S, unsigned F)
{
    int n = static_cast<int>(a.vertices.size());
    DualGraph out;
    out.d = a.d;
    out.phase = a.phase;
    GVertex merged;
    int ns = 0;
    std::vector<int> idx(static_cast<std::size_t>(n), -1);
    out.vertices.push_back(GVertex{});
    for (int v = 0; v < n; ++v) {
        if (S >> v & 1) {
            const auto& x = a.vertices[v];
            ++ns;
            merged.genus += x.genus;
            merged.beta += x.beta;
            merged.legs.insert(merged.legs.end(), x.legs.begin(), x.legs.end());
            merged.basepoints.insert(merged.basepoints.end(), x.basepoints.begin(), x.basepoints.end());
            idx[v] = 0;
        } else {
            idx[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(a.vertices[v]);
        }
    }
    int nf = 0;
    for (std::size_t e = 0; e < a.edges.size(); ++e) {
        if (F >> e & 1) {
            ++nf;
            continue;
        }
        const auto& x = a.edges[e];
        out.edges.push_back({idx[x.u], idx[x.v], x.mu, x.mv, x.delta});
    }
    merged.genus += nf - ns + 1;
    out.vertices[0] = merged;
    out.v_bullet = 0;
    return out;
}

}  // namespace

bool triple_stable(const DualGraph& g)
{
    if (!g.v_bullet) return false;
    const auto& b = g.vertices[*g.v_bullet];
    if (b.beta <= 0 || b.extra_legs != 0) return false;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
        const auto& x = g.vertices[v];
        if (2 * x.genus - 2 + valence(g, v) + x.extra_legs <= 0) return false;
    }
    return true;
}

bool graph_leq(const DualGraph& a, const DualGraph& b)
{
    if (!a.v_bullet || !b.v_bullet || a.d != b.d || a.phase != b.phase) return false;
    int na = static_cast<int>(a.vertices.size()), nb = static_cast<int>(b.vertices.size());
    if (na < nb || a.edges.size() < b.edges.size() || total_beta(a) != total_beta(b)) return false;
    int need = na - nb + 1;  // |S|
    const std::string target = canonical_form(b);
    int vb = *a.v_bullet;
    for (unsigned S = 0; S < (1u << na); ++S) {
        if (!(S >> vb & 1) || __builtin_popcount(S) != need) continue;
        std::vector<int> inner;
        for (std::size_t e = 0; e < a.edges.size(); ++e)
            if ((S >> a.edges[e].u & 1) && (S >> a.edges[e].v & 1)) inner.push_back(static_cast<int>(e));
        int removed = static_cast<int>(a.edges.size() - b.edges.size());
        if (static_cast<int>(inner.size()) < removed) continue;
        // Choose which inner edges form the collapsed subgraph.
        std::vector<int> local(static_cast<std::size_t>(na), -1);
        int k = 0;
        for (int v = 0; v < na; ++v)
            if (S >> v & 1) local[v] = k++;
        unsigned m = static_cast<unsigned>(inner.size());
        for (unsigned pick = 0; pick < (1u << m); ++pick) {
            if (__builtin_popcount(pick) != removed) continue;
            std::vector<std::pair<int, int>> sub;
            unsigned F = 0;
            for (unsigned i = 0; i < m; ++i)
                if (pick >> i & 1) {
                    const auto& e = a.edges[inner[i]];
                    sub.emplace_back(local[e.u], local[e.v]);
                    F |= 1u << inner[i];
                }
            if (!connected_on(k, sub)) continue;
            if (canonical_form(collapse(a, S, F)) == target) return true;
        }
    }
    return false;
}

std::vector<DualGraph> predecessors(const DualGraph& b)
{
    std::map<std::string, DualGraph> found;
    if (!b.v_bullet) return {};
    const int d = b.d;
    const bool lg = b.phase == Phase::lg;
    const int x = *b.v_bullet;
    const GVertex& top = b.vertices[x];

    // Half-edges at x: (edge index, 0 for the u end / 1 for the v end).
    std::vector<std::pair<int, int>> halves;
    for (std::size_t e = 0; e < b.edges.size(); ++e) {
        if (b.edges[e].u == x) halves.emplace_back(static_cast<int>(e), 0);
        if (b.edges[e].v == x) halves.emplace_back(static_cast<int>(e), 1);
    }
    const int L = static_cast<int>(top.legs.size());
    const int H = static_cast<int>(halves.size());
    const int euler = 2 * top.genus - 2 + L + H;
    if (euler < 1) return {};

    for (int k = 1; k <= euler; ++k) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
        for (int m = std::max(1, k - 1); m <= k - 1 + top.genus; ++m) {
            int genus_left = top.genus - (m - k + 1);
            // Multisets of m internal edges.
            std::vector<int> pick(static_cast<std::size_t>(m), 0);
            std::function<void(int, int)> shapes = [&](int i, int from) {
                if (i < m) {
                    for (int p = from; p < static_cast<int>(pairs.size()); ++p) {
                        pick[i] = p;
                        shapes(i + 1, p);
                    }
                    return;
                }
                std::vector<std::pair<int, int>> inner;
                for (int p : pick) inner.push_back(pairs[p]);
                if (!connected_on(k, inner)) return;
                std::vector<int> deg(static_cast<std::size_t>(k), 0);
                for (auto [u, v] : inner) {
                    ++deg[u];
                    ++deg[v];
                }
                std::vector<int> genus(static_cast<std::size_t>(k), 0), beta(static_cast<std::size_t>(k), 0);
                std::vector<int> leg_at(static_cast<std::size_t>(L), 0), half_at(static_cast<std::size_t>(H), 0);
                std::vector<int> extra(static_cast<std::size_t>(k), 0);

                auto finish = [&] {
                    for (int v = 0; v < k; ++v)
                        if (2 * genus[v] - 2 + deg[v] + extra[v] <= 0) return;
                    // Multiplicity sums already fixed at each new vertex.
                    std::vector<long> fixed(static_cast<std::size_t>(k), 0);
                    for (int i = 0; i < L; ++i) fixed[leg_at[i]] += top.legs[i].mult;
                    for (int i = 0; i < H; ++i) {
                        const auto& e = b.edges[halves[i].first];
                        fixed[half_at[i]] += halves[i].second == 0 ? e.mu : e.mv;
                    }
                    std::vector<int> xm(static_cast<std::size_t>(m), 0);
                    std::function<void(int)> mults = [&](int i) {
                        if (i < m) {
                            for (int t = 0; t < d; ++t) {
                                xm[i] = t;
                                mults(i + 1);
                            }
                            return;
                        }
                        std::vector<long> sum(fixed);
                        for (int e = 0; e < m; ++e) {
                            sum[inner[e].first] += xm[e];
                            sum[inner[e].second] += md(-xm[e], d);
                        }
                        for (int v = 0; v < k; ++v) {
                            int val = deg[v] + extra[v];
                            int rhs = lg ? md(-beta[v] + 2 * genus[v] - 2 + val, d) : 0;
                            if (md(sum[v], d) != rhs) return;
                        }
                        DualGraph a = b;
                        // New vertex 0 replaces x; the others are appended.
                        std::vector<int> id(static_cast<std::size_t>(k));
                        id[0] = x;
                        for (int v = 1; v < k; ++v) {
                            id[v] = static_cast<int>(a.vertices.size());
                            a.vertices.push_back(GVertex{});
                        }
                        for (int v = 0; v < k; ++v) {
                            GVertex gv;
                            gv.genus = genus[v];
                            gv.beta = beta[v];
                            a.vertices[id[v]] = gv;
                        }
                        for (int i = 0; i < L; ++i) a.vertices[id[leg_at[i]]].legs.push_back(top.legs[i]);
                        for (int i = 0; i < H; ++i) {
                            auto& e = a.edges[halves[i].first];
                            (halves[i].second == 0 ? e.u : e.v) = id[half_at[i]];
                        }
                        for (int e = 0; e < m; ++e)
                            a.edges.push_back({id[inner[e].first], id[inner[e].second], xm[e], md(-xm[e], d), 0});
                        a.v_bullet = x;
                        found.emplace(canonical_form(a), a);
                    };
                    mults(0);
                };
                std::function<void(int)> place_halves = [&](int i) {
                    if (i < H) {
                        for (int v = 0; v < k; ++v) {
                            half_at[i] = v;
                            ++extra[v];
                            place_halves(i + 1);
                            --extra[v];
                        }
                        return;
                    }
                    finish();
                };
                std::function<void(int)> place_legs = [&](int i) {
                    if (i < L) {
                        for (int v = 0; v < k; ++v) {
                            leg_at[i] = v;
                            ++extra[v];
                            place_legs(i + 1);
                            --extra[v];
                        }
                        return;
                    }
                    place_halves(0);
                };
                // genus, then beta with beta[0] > 0 (vertex 0 is the new v_bullet).
                std::function<void(int, int)> genera = [&](int v, int left) {
                    if (v == k - 1) {
                        genus[v] = left;
                        std::function<void(int, int)> betas = [&](int w, int bleft) {
                            if (w == k - 1) {
                                beta[w] = bleft;
                                if (beta[0] > 0) place_legs(0);
                                return;
                            }
                            for (int t = 0; t <= bleft; ++t) {
                                beta[w] = t;
                                betas(w + 1, bleft - t);
                            }
                        };
                        betas(0, top.beta);
                        return;
                    }
                    for (int t = 0; t <= left; ++t) {
                        genus[v] = t;
                        genera(v + 1, left - t);
                    }
                };
                genera(0, genus_left);
            };
            if (genus_left >= 0) shapes(0, 0);
        }
    }
    std::vector<DualGraph> out;
    for (auto& [key, a] : found) out.push_back(std::move(a));
    return out;
}

namespace {

int longest_from(const DualGraph& b, std::map<std::string, int>& memo)
{
    auto key = canonical_form(b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (const auto& a : predecessors(b)) best = std::max(best, 1 + longest_from(a, memo));
    memo[key] = best;
    return best;
}

}  // namespace

int longest_descending_chain(const DualGraph& b)
{
    std::map<std::string, int> memo;
    return longest_from(b, memo);
}

std::vector<std::vector<DualGraph>> descending_chains(const DualGraph& b, int max_len)
{
    std::vector<std::vector<DualGraph>> out;
    std::vector<DualGraph> chain{b};
    std::map<std::string, std::vector<DualGraph>> preds;
    std::function<void()> rec = [&] {
        const auto& last = chain.back();
        if (static_cast<int>(chain.size()) - 1 >= max_len) {
            out.push_back(chain);
            return;
        }
        auto key = canonical_form(last);
        auto it = preds.find(key);
        if (it == preds.end()) it = preds.emplace(key, predecessors(last)).first;
        if (it->second.empty()) {
            out.push_back(chain);
            return;
        }
        auto next = it->second;
        for (const auto& a : next) {
            chain.push_back(a);
            rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace glsmx
