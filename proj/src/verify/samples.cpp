#include "glsmx/verify/samples.hpp"

#include <functional>

namespace glsmx::samples {

namespace {

int md(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

int rand_in(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Fills tree-edge multiplicities (edges[0..V-2] form a spanning tree rooted
// at vertex 0, edge i joining parent u to child v) so that every non-root
// vertex condition holds; returns false if the root condition fails.
bool solve_tree_mults(DualGraph& g)
{
    const int d = g.d;
    int V = static_cast<int>(g.vertices.size());
    auto rhs = [&](int v, int val) {
        const auto& x = g.vertices[v];
        int be = x.beta;
        for (int b : x.basepoints) be += b;
        return md(-be + 2 * x.genus - 2 + val, d);
    };
    // Process children before parents: tree edges were added in BFS order.
    for (int t = V - 2; t >= -1; --t) {
        int v = t >= 0 ? g.edges[t].v : 0;
        long sum = 0;
        int val = 0;
        for (const auto& l : g.vertices[v].legs) sum += l.mult, ++val;
        sum += g.vertices[v].extra_legs;
        val += g.vertices[v].extra_legs;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            if (static_cast<int>(e) == t) continue;
            if (g.edges[e].u == v) sum += g.edges[e].mu, ++val;
            if (g.edges[e].v == v) sum += g.edges[e].mv, ++val;
        }
        if (t >= 0) {
            ++val;
            g.edges[t].mv = md(rhs(v, val) - sum, d);
            g.edges[t].mu = md(-g.edges[t].mv, d);
        } else if (md(sum, d) != rhs(v, val)) {
            return false;
        }
    }
    return true;
}

DualGraph random_shape(std::mt19937& rng, int V, bool allow_loop)
{
    DualGraph g;
    g.d = 5;
    g.vertices.resize(static_cast<std::size_t>(V));
    for (int v = 1; v < V; ++v) g.edges.push_back({rand_in(rng, 0, v - 1), v, 0, 0, 0});
    if (rand_in(rng, 0, 2) == 0) {
        int a = rand_in(rng, 0, V - 1), b = rand_in(rng, 0, V - 1);
        if (a != b || allow_loop) {
            int m = rand_in(rng, 0, 4);
            g.edges.push_back({a, b, m, md(-m, 5), 0});
        }
    }
    return g;
}

int valence(const DualGraph& g, int v)
{
    int val = static_cast<int>(g.vertices[v].legs.size()) + g.vertices[v].extra_legs;
    for (const auto& e : g.edges) val += (e.u == v) + (e.v == v);
    return val;
}

}  // namespace

DualGraph random_infinity_stable_graph(std::mt19937& rng, const BigRat& epsilon)
{
    while (true) {
        int V = rand_in(rng, 1, 5);
        DualGraph g = random_shape(rng, V, true);
        int next_id = 1;
        for (auto& x : g.vertices) {
            x.genus = rand_in(rng, 0, 3) == 0 ? 1 : 0;
            x.beta = rand_in(rng, 0, 2);
            int legs = rand_in(rng, 0, 3) == 0 ? 1 : 0;
            for (int k = 0; k < legs; ++k) x.legs.push_back({next_id++, rand_in(rng, 0, 4)});
        }
        bool ok = true;
        int n = next_id - 1;
        for (int v = 0; v < V && ok; ++v) {
            const auto& x = g.vertices[v];
            if (2 * x.genus - 2 + valence(g, v) <= 0 && x.beta <= 0) ok = false;
        }
        if (!ok) continue;
        if (BigRat(2 * total_genus(g) - 2 + n) + epsilon * total_beta(g) <= 0) continue;
        if (!solve_tree_mults(g)) continue;
        if (!validate(g).empty()) continue;
        return g;
    }
}

DualGraph random_triple(std::mt19937& rng)
{
    while (true) {
        int V = rand_in(rng, 1, 3);
        DualGraph g = random_shape(rng, V, true);
        int bullet = rand_in(rng, 0, V - 1);
        g.v_bullet = bullet;
        int legs = rand_in(rng, 0, 2);
        for (int k = 0; k < legs; ++k) g.vertices[rand_in(rng, 0, V - 1)].legs.push_back({k + 1, rand_in(rng, 0, 4)});
        for (int v = 0; v < V; ++v) {
            auto& x = g.vertices[v];
            x.genus = rand_in(rng, 0, 1);
            x.beta = v == bullet ? rand_in(rng, 1, 2) : rand_in(rng, 0, 2);
            x.extra_legs = v == bullet ? 0 : rand_in(rng, 0, 1);
        }
        if (!triple_stable(g)) continue;
        if (!solve_tree_mults(g)) continue;
        if (!validate(g).empty()) continue;
        return g;
    }
}

}  // namespace glsmx::samples
