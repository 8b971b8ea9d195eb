#pragma once

#include "glsmx/model.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace glsmx {

enum class Level { zero, infinity };

// Multiplicities are stored as numerators k of k/d, 0 <= k < d.
struct Leg {
    int id = 0;
    int mult = 0;
    bool operator==(const Leg&) const = default;
};

struct GVertex {
    int genus = 0;
    int beta = 0;
    std::vector<Leg> legs;
    int extra_legs = 0;           // n'(v); each carries 1/d (LG) or 0 (geometric)
    std::vector<int> basepoints;  // orders, kept sorted
    std::optional<Level> level;
    bool operator==(const GVertex&) const = default;
};

// For a dual graph mu/mv are the half-edge multiplicities at u/v.  For a
// localization graph the edge is itself a genus-0 component of degree delta
// joining u (level 0) to v (level oo); mu/mv are the multiplicities of the
// vertex-side half-edges.
struct GEdge {
    int u = 0, v = 0;
    int mu = 0, mv = 0;
    int delta = 0;
    bool operator==(const GEdge&) const = default;
};

struct DualGraph {
    int d = 1;
    Phase phase = Phase::lg;
    std::vector<GVertex> vertices;
    std::vector<GEdge> edges;
    std::optional<int> v_bullet;

    bool is_localization() const;
    bool operator==(const DualGraph&) const = default;
};

// A localization graph is a dual graph whose vertices all carry a level and
// whose edges carry a degree delta >= 1.
using LocGraph = DualGraph;

int first_betti(const DualGraph& g);
int total_genus(const DualGraph& g);
int total_beta(const DualGraph& g);  // including basepoint orders

// Dual-graph invariants: node balance and the vertex condition.
std::vector<std::string> validate(const DualGraph& g);

// Localization-graph rules for the given model.
std::vector<std::string> validate_loc(const GlsmModel& model, const LocGraph& g);

struct ComponentData {
    int genus = 0;
    int beta = 0;  // degree away from basepoints
    int special = 0;
    int light = 0;  // markings of weight light_delta
    std::vector<int> basepoints;
};

bool epsilon_stable(const ComponentData& c, const BigRat& epsilon,
                    const std::optional<BigRat>& light_delta = std::nullopt);

struct BasepointRecord {
    int host = 0;  // vertex index in the surviving graph
    int order = 0;
    int mult = 0;  // numerator over d
    bool operator==(const BasepointRecord&) const = default;
};

struct ContractionRecord {
    DualGraph graph;
    std::vector<BasepointRecord> basepoints;
};

// Contracts rational tails of degree <= 1/epsilon into basepoints until
// nothing contracts.  NotInfinityStable if the input already has basepoints.
ContractionRecord contract_c(const DualGraph& g, const BigRat& epsilon);

// The contraction loop without the input check; continues from `start`.
ContractionRecord contract_tails(ContractionRecord start, const BigRat& epsilon);

// Turns the legs with the k largest ids into basepoints of the given orders
// (the i-th order goes with the i-th of those legs in increasing id), then
// contracts.  WrongMultiplicity if a leg has the wrong multiplicity.
ContractionRecord convert_markings_b(const DualGraph& g, const std::vector<int>& orders, const BigRat& epsilon);

// Per-vertex stability data of a dual graph (specials: legs, n', edge ends).
ComponentData component_data(const DualGraph& g, int vertex);

// Desk-scale bounds: g <= 2, n <= 4, beta <= 6, delta <= 4.
std::vector<LocGraph> enumerate_loc_graphs(const GlsmModel& model, int g, int n, int beta, int delta);

// Canonical string: minimum over vertex relabellings.  Isomorphic decorated
// graphs (legs labelled, n' unlabelled) get equal strings.
std::string canonical_form(const DualGraph& g);

struct AutDegree {
    long aut_order = 1;
    BigRat degree_factor = 1;
};

AutDegree aut_degree(const DualGraph& g);

// a <= b: b arises from a by collapsing a connected subgraph containing
// v_bullet(a) to the single vertex v_bullet(b).
bool graph_leq(const DualGraph& a, const DualGraph& b);

// Stability of a decorated triple: 2g - 2 + val + n' > 0 at every vertex and
// beta(v_bullet) > 0.
bool triple_stable(const DualGraph& g);

// Strict predecessors of b: stable triples a with a < b, one per isomorphism class.
std::vector<DualGraph> predecessors(const DualGraph& b);

// Number of steps in the longest strictly descending chain starting at b.
int longest_descending_chain(const DualGraph& b);

// Every strictly descending chain from b that stops at a minimal element or
// after max_len steps.  Each chain starts with b.
std::vector<std::vector<DualGraph>> descending_chains(const DualGraph& b, int max_len);

// The top graph of the worked partial-order example and its four predecessors.
DualGraph order_example_top();
std::vector<DualGraph> order_example_predecessors();

// JSON document for a graph; write_graph_json(read_graph_json(s)) == s for
// any s produced by write_graph_json.
std::string write_graph_json(const DualGraph& g);
DualGraph read_graph_json(const std::string& text);
std::string write_record_json(const ContractionRecord& r);

}  // namespace glsmx
