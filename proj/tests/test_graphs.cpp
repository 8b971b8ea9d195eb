#include "doctest.h"

#include "glsmx/errors.hpp"
#include "glsmx/graphs.hpp"
#include "glsmx/verify/oracles.hpp"
#include "glsmx/verify/samples.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace glsmx;

namespace {

GVertex vtx(int genus, int beta, std::vector<Leg> legs = {}, int extra = 0)
{
    return GVertex{genus, beta, std::move(legs), extra, {}, std::nullopt};
}

DualGraph graph(std::vector<GVertex> vs, std::vector<GEdge> es, std::optional<int> bullet = std::nullopt)
{
    DualGraph g;
    g.d = 5;
    g.vertices = std::move(vs);
    g.edges = std::move(es);
    g.v_bullet = bullet;
    return g;
}

GlsmModel quintic(const BigRat& eps) { return make_model({1, 1, 1, 1, 1}, 1, 5, Phase::lg, eps); }

DualGraph shuffled(const DualGraph& g, std::mt19937& rng)
{
    std::vector<int> p(g.vertices.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    DualGraph h = g;
    for (std::size_t v = 0; v < p.size(); ++v) h.vertices[p[v]] = g.vertices[v];
    for (auto& e : h.edges) {
        e.u = p[e.u];
        e.v = p[e.v];
        if (!g.is_localization() && rng() % 2) {
            std::swap(e.u, e.v);
            std::swap(e.mu, e.mv);
        }
    }
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    if (g.v_bullet) h.v_bullet = p[*g.v_bullet];
    return h;
}

}  // namespace

TEST_CASE("validate")
{
    CHECK(validate(graph({vtx(1, 0, {{1, 1}})}, {})).empty());
    auto bad = validate(graph({vtx(1, 0), vtx(1, 0)}, {{0, 1, 1, 3, 0}}));
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("node") != std::string::npos);
    auto loop = graph({vtx(0, 1), vtx(0, 1)}, {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}});
    CHECK(first_betti(loop) == 1);
    CHECK(total_genus(loop) == 1);
    auto vb = order_example_top();
    vb.vertices[1].extra_legs = 1;
    CHECK(!validate(vb).empty());
}

TEST_CASE("epsilon_stable")
{
    // Rational tail with one node and degree 1: the ampleness inequality
    // holds at epsilon = 2; carried as a basepoint of order 1 it fails the
    // order bound 1 <= 1/2.
    CHECK(epsilon_stable({0, 1, 1, 0, {}}, 2));
    CHECK(!epsilon_stable({0, 0, 1, 0, {1}}, 2));
    CHECK(!epsilon_stable({0, 1, 1, 0, {}}, rat(1, 3)));
    CHECK(epsilon_stable({0, 1, 2, 0, {}}, rat(1, 3)));
    for (auto eps : {rat(1, 7), rat(2, 3), rat(5, 2)}) CHECK(epsilon_stable({2, 0, 0, 0, {}}, eps));
    // Light markings count with weight light_delta.
    CHECK(!epsilon_stable({0, 0, 1, 1, {}}, rat(1, 3), rat(1, 4)));
    CHECK(epsilon_stable({0, 0, 1, 1, {}}, rat(1, 3)) == false);
    CHECK(epsilon_stable({0, 0, 2, 1, {}}, rat(1, 3), rat(1, 4)));
}

TEST_CASE("contract_c")
{
    auto one_tail = graph({vtx(2, 1), vtx(0, 1)}, {{0, 1, 2, 3, 0}});
    REQUIRE(validate(one_tail).empty());
    auto r = contract_c(one_tail, rat(1, 4));
    CHECK(r.graph.vertices.size() == 1);
    CHECK(r.graph.vertices[0].basepoints == std::vector<int>{1});
    REQUIRE(r.basepoints.size() == 1);
    CHECK(r.basepoints[0] == BasepointRecord{0, 1, 3});
    CHECK(validate(r.graph).empty());

    auto chain = graph({vtx(2, 0), vtx(0, 1), vtx(0, 1)}, {{0, 1, 3, 2, 0}, {1, 2, 2, 3, 0}});
    REQUIRE(validate(chain).empty());
    auto c = contract_c(chain, rat(1, 4));
    CHECK(c.graph.vertices.size() == 1);
    CHECK(c.graph.vertices[0].basepoints == std::vector<int>{2});
    REQUIRE(c.basepoints.size() == 1);
    CHECK(c.basepoints[0] == BasepointRecord{0, 2, 2});

    auto same = contract_c(chain, rat(3, 2));
    CHECK(same.graph == chain);
    CHECK(same.basepoints.empty());

    CHECK_THROWS_AS(contract_c(r.graph, rat(1, 4)), NotInfinityStable);
}

TEST_CASE("convert_markings_b")
{
    auto g = graph({vtx(2, 0, {{1, 3}})}, {});
    REQUIRE(validate(g).empty());
    auto r = convert_markings_b(g, {2}, rat(1, 4));
    CHECK(r.graph.vertices[0].legs.empty());
    CHECK(r.graph.vertices[0].basepoints == std::vector<int>{2});
    CHECK(validate(r.graph).empty());

    auto cascade = graph({vtx(2, 0), vtx(0, 1, {{2, 2}})}, {{0, 1, 3, 2, 0}});
    REQUIRE(validate(cascade).empty());
    auto c = convert_markings_b(cascade, {1}, rat(1, 4));
    CHECK(c.graph.vertices.size() == 1);
    CHECK(c.graph.vertices[0].basepoints == std::vector<int>{2});
    REQUIRE(c.basepoints.size() == 1);
    CHECK(c.basepoints[0].order == 2);

    auto id = convert_markings_b(cascade, {}, rat(1, 4));
    CHECK(id.graph == cascade);
    CHECK_THROWS_AS(convert_markings_b(g, {1}, rat(1, 4)), WrongMultiplicity);
}

TEST_CASE("contraction on random graphs")
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        BigRat eps = rng() % 2 ? rat(1, 4) : rat(2, 3);
        auto g = samples::random_infinity_stable_graph(rng, eps);
        auto r = contract_c(g, eps);
        CHECK(r.graph.vertices.size() + r.basepoints.size() >= 1);
        CHECK(total_beta(r.graph) == total_beta(g));
        int orders = 0;
        for (const auto& b : r.basepoints) orders += b.order;
        int bare = 0;
        for (const auto& v : r.graph.vertices) bare += v.beta;
        CHECK(bare + orders == total_beta(g));
        CHECK(total_genus(r.graph) == total_genus(g));
        CHECK(validate(r.graph).empty());
        for (int v = 0; v < static_cast<int>(r.graph.vertices.size()); ++v)
            CHECK(epsilon_stable(component_data(r.graph, v), eps));
        auto again = contract_tails(r, eps);
        CHECK(again.graph == r.graph);
        CHECK(again.basepoints == r.basepoints);
    }
}

TEST_CASE("aut_degree")
{
    auto one = aut_degree(graph({vtx(1, 0), vtx(2, 0)}, {{0, 1, 1, 4, 0}}));
    CHECK(one.aut_order == 1);
    CHECK(one.degree_factor == rat(1, 5));
    auto two = aut_degree(graph({vtx(1, 1), vtx(1, 1)}, {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}}));
    CHECK(two.aut_order == 4);  // swap the vertices, swap the edges
    auto two_distinct = aut_degree(graph({vtx(1, 1), vtx(2, 1)}, {{0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}}));
    CHECK(two_distinct.aut_order == 2);
    CHECK(two_distinct.degree_factor == 2);
    auto single = aut_degree(graph({vtx(2, 0, {{1, 1}, {2, 4}})}, {}));
    CHECK(single.aut_order == 1);
    CHECK(single.degree_factor == 1);
    auto loops = aut_degree(graph({vtx(0, 1)}, {{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}));
    CHECK(loops.aut_order == 8);
    auto twisted_loop = aut_degree(graph({vtx(0, 1)}, {{0, 0, 2, 3, 0}}));
    CHECK(twisted_loop.aut_order == 1);
    CHECK(twisted_loop.degree_factor == rat(1, 5));
    // Legs are labelled: no vertex swap.
    auto legged = aut_degree(graph({vtx(1, 1, {{1, 0}}), vtx(1, 1, {{2, 0}})}, {{0, 1, 0, 0, 0}}));
    CHECK(legged.aut_order == 1);
}

TEST_CASE("localization graph degree factor")
{
    // Marking on the level-0 end of a single edge: no node in H~.
    auto gs = enumerate_loc_graphs(quintic(rat(2, 5)), 0, 1, 0, 1);
    REQUIRE(gs.size() == 2);
    for (const auto& g : gs) {
        auto a = aut_degree(g);
        CHECK(a.aut_order == 1);
        CHECK(a.degree_factor == 1);
    }
    // Stable level-0 vertex of genus 1 with one edge: one H~ half-edge.
    auto hs = enumerate_loc_graphs(quintic(rat(2, 5)), 1, 0, 0, 1);
    for (const auto& g : hs) {
        int m = g.edges[0].mu;
        auto a = aut_degree(g);
        if (g.vertices[g.edges[0].u].genus == 1)
            CHECK(a.degree_factor == BigRat(1, d_of_mult(5, rat(m, 5))));
    }
}

TEST_CASE("enumerate_loc_graphs examples")
{
    auto m = quintic(rat(2, 5));
    auto gs = enumerate_loc_graphs(m, 0, 1, 0, 1);
    REQUIRE(gs.size() == 2);
    int at_zero = 0, at_inf = 0;
    for (const auto& g : gs)
        for (const auto& v : g.vertices)
            if (!v.legs.empty()) (v.level == Level::zero ? at_zero : at_inf)++;
    CHECK(at_zero == 1);
    CHECK(at_inf == 1);

    // Small epsilon: degree 2 cannot sit in a basepoint on an edge of degree 1.
    auto small = quintic(rat(2, 21));
    for (const auto& g : enumerate_loc_graphs(small, 0, 1, 2, 1))
        for (const auto& v : g.vertices)
            if (v.level == Level::zero && v.legs.empty() && v.genus == 0) CHECK(v.beta < 1);
    // With delta(e) = 2 a basepoint of order 1 is allowed.
    bool found_basepoint = false;
    for (const auto& g : enumerate_loc_graphs(small, 0, 1, 1, 2))
        for (const auto& v : g.vertices)
            if (v.level == Level::zero && v.legs.empty() && v.genus == 0 && v.beta == 1) found_basepoint = true;
    CHECK(found_basepoint);

    CHECK_THROWS_AS(enumerate_loc_graphs(m, 3, 0, 0, 1), BoundsExceeded);
    CHECK_THROWS_AS(enumerate_loc_graphs(m, 0, 0, 0, 5), BoundsExceeded);
}

TEST_CASE("enumerate_loc_graphs agrees with brute force")
{
    for (auto eps : {rat(2, 5), rat(2, 7)}) {
        auto m = quintic(eps);
        for (int g = 0; g <= 1; ++g)
            for (int n = 0; n <= 1; ++n)
                for (int beta = 0; beta <= 2; ++beta)
                    for (int delta = 0; delta <= 2; ++delta) {
                        auto gs = enumerate_loc_graphs(m, g, n, beta, delta);
                        std::set<std::string> keys;
                        for (const auto& x : gs) {
                            CHECK(validate_loc(m, x).empty());
                            keys.insert(oracle::brute_graph_key(x));
                        }
                        CAPTURE(g);
                        CAPTURE(n);
                        CAPTURE(beta);
                        CAPTURE(delta);
                        CHECK(keys.size() == gs.size());
                        CHECK(keys == oracle::enumerate_loc_graphs_brute(m, g, n, beta, delta));
                    }
    }
}

TEST_CASE("canonical form and JSON")
{
    std::mt19937 rng(9);
    for (int i = 0; i < 30; ++i) {
        auto g = i % 2 ? samples::random_triple(rng) : samples::random_infinity_stable_graph(rng, rat(1, 3));
        CHECK(canonical_form(g) == canonical_form(shuffled(g, rng)));
        CHECK(aut_degree(g).aut_order == aut_degree(shuffled(g, rng)).aut_order);
        auto text = write_graph_json(g);
        CHECK(read_graph_json(text) == g);
        CHECK(write_graph_json(read_graph_json(text)) == text);
    }
    for (const auto& g : enumerate_loc_graphs(quintic(rat(2, 5)), 1, 1, 1, 2)) {
        auto text = write_graph_json(g);
        CHECK(write_graph_json(read_graph_json(text)) == text);
        CHECK(canonical_form(g) == canonical_form(shuffled(g, rng)));
    }
    CHECK_THROWS_AS(read_graph_json("{\"d\": 5, \"vertices\": [{\"legs\": [{\"id\": 1, \"mult\": \"1/3\"}]}]}"), ConfigError);
    CHECK_THROWS_AS(read_graph_json("not json"), ConfigError);
}

TEST_CASE("partial order: worked example")
{
    auto top = order_example_top();
    REQUIRE(triple_stable(top));
    CHECK(graph_leq(top, top));
    auto preds = predecessors(top);
    std::set<std::string> keys;
    for (const auto& p : preds) keys.insert(canonical_form(p));
    for (const auto& p : order_example_predecessors()) {
        CHECK(validate(p).empty());
        CHECK(triple_stable(p));
        CHECK(graph_leq(p, top));
        CHECK(!graph_leq(top, p));
        CHECK(keys.count(canonical_form(p)) == 1);
    }
    for (const auto& p : preds) CHECK(graph_leq(p, top));
}

TEST_CASE("partial order properties")
{
    std::mt19937 rng(77);
    std::vector<DualGraph> pool;
    for (int i = 0; i < 6; ++i) {
        auto b = samples::random_triple(rng);
        pool.push_back(b);
        auto ps = predecessors(b);
        for (std::size_t k = 0; k < ps.size() && k < 3; ++k) {
            pool.push_back(ps[k]);
            auto pps = predecessors(ps[k]);
            if (!pps.empty()) pool.push_back(pps.front());
        }
    }
    for (const auto& a : pool) {
        CHECK(graph_leq(a, a));
        CHECK(graph_leq(a, shuffled(a, rng)));
    }
    for (const auto& a : pool)
        for (const auto& b : pool) {
            bool ab = graph_leq(a, b), ba = graph_leq(b, a);
            if (ab && ba) CHECK(canonical_form(a) == canonical_form(b));
            if (!ab) continue;
            for (const auto& c : pool)
                if (graph_leq(b, c)) CHECK(graph_leq(a, c));
        }
}

TEST_CASE("descending chains are bounded")
{
    std::mt19937 rng(31);
    for (int i = 0; i < 8; ++i) {
        auto b = samples::random_triple(rng);
        int bound = static_cast<int>(b.edges.size());
        for (const auto& v : b.vertices) bound += v.genus;
        bound += 2;
        int len = longest_descending_chain(b);
        CHECK(len <= bound);
        auto chains = descending_chains(b, 2);
        for (const auto& ch : chains) {
            for (std::size_t k = 1; k < ch.size(); ++k) {
                CHECK(graph_leq(ch[k], ch[k - 1]));
                CHECK(!graph_leq(ch[k - 1], ch[k]));
            }
        }
    }
}
