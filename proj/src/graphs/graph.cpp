#include "glsmx/graphs.hpp"

#include "glsmx/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace glsmx {

namespace {

int md(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

std::vector<int> edge_ends(const DualGraph& g, int v)
{
    std::vector<int> out;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].u == v) out.push_back(static_cast<int>(e));
        if (g.edges[e].v == v) out.push_back(static_cast<int>(e));
    }
    return out;
}

// Multiplicity numerators of every half-edge at v (legs, n', edge ends).
std::vector<int> half_mults(const DualGraph& g, int v)
{
    std::vector<int> m;
    const auto& x = g.vertices[v];
    for (const auto& l : x.legs) m.push_back(l.mult);
    for (int k = 0; k < x.extra_legs; ++k) m.push_back(g.phase == Phase::lg ? 1 : 0);
    for (const auto& e : g.edges) {
        if (e.u == v) m.push_back(e.mu);
        if (e.v == v) m.push_back(e.mv);
    }
    return m;
}

// Right-hand side of sum(numerators) = rhs (mod d) at a component.
int vertex_rhs(const DualGraph& g, int genus, int beta, int valence)
{
    if (g.phase == Phase::geometric) return 0;
    return md(-beta + 2 * genus - 2 + valence, g.d);
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool connected(const DualGraph& g)
{
    int n = static_cast<int>(g.vertices.size());
    if (n == 0) return false;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : g.edges) parent[find(e.u)] = find(e.v);
    for (int i = 0; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

std::string level_name(Level l) { return l == Level::zero ? "0" : "inf"; }

std::string vertex_label(const DualGraph& g, int v)
{
    const auto& x = g.vertices[v];
    std::ostringstream os;
    os << (x.level ? level_name(*x.level) : std::string("-")) << "|g" << x.genus << "|b" << x.beta << "|L";
    auto legs = x.legs;
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.id < b.id; });
    for (const auto& l : legs) os << l.id << ":" << l.mult << ",";
    os << "|n" << x.extra_legs << "|p";
    auto bp = x.basepoints;
    std::sort(bp.begin(), bp.end());
    for (int b : bp) os << b << ",";
    if (g.v_bullet && *g.v_bullet == v) os << "|*";
    return os.str();
}

using EdgeKey = std::tuple<int, int, int, int, int>;

std::vector<EdgeKey> mapped_edges(const DualGraph& g, const std::vector<int>& newidx)
{
    bool loc = g.is_localization();
    std::vector<EdgeKey> out;
    for (const auto& e : g.edges) {
        int a = newidx[e.u], b = newidx[e.v], ma = e.mu, mb = e.mv;
        if (!loc && (a > b || (a == b && ma > mb))) {
            std::swap(a, b);
            std::swap(ma, mb);
        }
        out.emplace_back(a, b, ma, mb, e.delta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Calls f(newidx) for every relabelling that sorts the vertex labels.
void for_each_sorted_relabelling(const DualGraph& g, const std::function<void(const std::vector<int>&)>& f)
{
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(vertex_label(g, v));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<std::pair<int, int>> groups;  // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && labels[order[j]] == labels[order[i]]) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    std::vector<int> newidx(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            for (int pos = 0; pos < n; ++pos) newidx[order[pos]] = pos;
            f(newidx);
            return;
        }
        auto [b, e] = groups[gi];
        std::sort(order.begin() + b, order.begin() + e);
        do {
            rec(gi + 1);
        } while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(0);
}

DualGraph relabel(const DualGraph& g, const std::vector<int>& newidx)
{
    DualGraph out = g;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto x = g.vertices[v];
        std::sort(x.legs.begin(), x.legs.end(), [](const Leg& a, const Leg& b) { return a.id < b.id; });
        std::sort(x.basepoints.begin(), x.basepoints.end());
        out.vertices[newidx[v]] = x;
    }
    out.edges.clear();
    for (auto [a, b, ma, mb, dl] : mapped_edges(g, newidx)) out.edges.push_back({a, b, ma, mb, dl});
    if (g.v_bullet) out.v_bullet = newidx[*g.v_bullet];
    return out;
}

}  // namespace

bool DualGraph::is_localization() const
{
    if (vertices.empty()) return false;
    for (const auto& v : vertices)
        if (!v.level) return false;
    return true;
}

int first_betti(const DualGraph& g)
{
    // Components counted by union-find.
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = n;
    for (const auto& e : g.edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return static_cast<int>(g.edges.size()) - n + comps;
}

int total_genus(const DualGraph& g)
{
    int s = first_betti(g);
    for (const auto& v : g.vertices) s += v.genus;
    return s;
}

int total_beta(const DualGraph& g)
{
    int s = 0;
    for (const auto& v : g.vertices) {
        s += v.beta;
        for (int b : v.basepoints) s += b;
    }
    return s;
}

std::vector<std::string> validate(const DualGraph& g)
{
    std::vector<std::string> out;
    int n = static_cast<int>(g.vertices.size());
    if (g.d < 1) out.push_back("d must be positive");
    if (n == 0) out.push_back("graph has no vertices");
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& x = g.edges[e];
        std::string where = "edge " + std::to_string(e);
        if (x.u < 0 || x.u >= n || x.v < 0 || x.v >= n) {
            out.push_back(where + ": endpoint out of range");
            continue;
        }
        if (x.mu < 0 || x.mu >= g.d || x.mv < 0 || x.mv >= g.d)
            out.push_back(where + ": multiplicity outside [0, 1)");
        if (md(x.mu + x.mv, g.d) != 0) out.push_back(where + ": node multiplicities m(h) + m(h') not integral");
    }
    if (!out.empty()) return out;
    for (int v = 0; v < n; ++v) {
        const auto& x = g.vertices[v];
        std::string where = "vertex " + std::to_string(v);
        for (const auto& l : x.legs)
            if (l.mult < 0 || l.mult >= g.d) out.push_back(where + ": leg " + std::to_string(l.id) + " multiplicity outside [0, 1)");
        if (x.genus < 0 || x.beta < 0 || x.extra_legs < 0) out.push_back(where + ": negative decoration");
        int beta_eff = x.beta;
        for (int b : x.basepoints) beta_eff += b;
        auto m = half_mults(g, v);
        if (md(sum_of(m), g.d) != vertex_rhs(g, x.genus, beta_eff, static_cast<int>(m.size())))
            out.push_back(where + ": vertex multiplicity condition fails");
    }
    std::vector<int> ids;
    for (const auto& x : g.vertices)
        for (const auto& l : x.legs) ids.push_back(l.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) out.push_back("leg ids repeat");
    if (g.v_bullet) {
        int b = *g.v_bullet;
        if (b < 0 || b >= n)
            out.push_back("v_bullet out of range");
        else {
            if (g.vertices[b].extra_legs != 0) out.push_back("v_bullet carries extra legs");
            if (g.vertices[b].beta <= 0) out.push_back("v_bullet has beta <= 0");
        }
    }
    return out;
}

std::vector<std::string> validate_loc(const GlsmModel& model, const LocGraph& g)
{
    std::vector<std::string> out;
    if (!g.is_localization()) return {"some vertex has no level"};
    if (g.d != model.d) out.push_back("d differs from the model");
    if (g.phase != model.phase) out.push_back("phase differs from the model");
    int n = static_cast<int>(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& x = g.edges[e];
        std::string where = "edge " + std::to_string(e);
        if (x.u < 0 || x.u >= n || x.v < 0 || x.v >= n) {
            out.push_back(where + ": endpoint out of range");
            continue;
        }
        if (g.vertices[x.u].level != Level::zero || g.vertices[x.v].level != Level::infinity)
            out.push_back(where + ": must join level 0 (u) to level oo (v)");
        if (x.delta < 1) out.push_back(where + ": delta < 1");
        if (x.mu < 0 || x.mu >= g.d || x.mv < 0 || x.mv >= g.d) out.push_back(where + ": multiplicity outside [0, 1)");
    }
    if (!out.empty()) return out;
    if (!connected(g)) out.push_back("graph is not connected");
    if (g.edges.empty() && n != 1) out.push_back("edgeless graph must be a single vertex");

    enum class Kind { stable, end, two_valent };
    std::vector<Kind> kind(static_cast<std::size_t>(n), Kind::stable);
    for (int v = 0; v < n; ++v) {
        const auto& x = g.vertices[v];
        std::string where = "vertex " + std::to_string(v);
        if (x.extra_legs != 0 || !x.basepoints.empty()) out.push_back(where + ": extra legs or basepoints on a localization graph");
        for (const auto& l : x.legs)
            if (l.mult < 0 || l.mult >= g.d) out.push_back(where + ": leg multiplicity outside [0, 1)");
        auto ends = edge_ends(g, v);
        int val = static_cast<int>(ends.size() + x.legs.size());
        bool zero = *x.level == Level::zero;
        bool stable;
        if (zero)
            stable = BigRat(2 * x.genus - 2 + val) + model.epsilon * x.beta > 0;
        else {
            if (model.N == 1 && x.beta != 0) out.push_back(where + ": beta must vanish at level oo when N = 1");
            stable = 2 * x.genus - 2 + val > 0 || x.beta > 0;
        }
        if (stable) {
            kind[v] = Kind::stable;
            auto m = half_mults(g, v);
            if (md(sum_of(m), g.d) != vertex_rhs(g, x.genus, x.beta, static_cast<int>(m.size())))
                out.push_back(where + ": vertex multiplicity condition fails");
        } else if (x.genus == 0 && val == 1 && x.legs.empty() && !ends.empty()) {
            kind[v] = Kind::end;
            const auto& e = g.edges[ends[0]];
            if ((e.u == v ? e.mu : e.mv) != 0) out.push_back(where + ": free end must have multiplicity 0");
            if (e.delta <= x.beta) out.push_back(where + ": basepoint order must be below the edge degree");
        } else if (x.genus == 0 && val == 2 && x.beta == 0) {
            kind[v] = Kind::two_valent;
            auto m = half_mults(g, v);
            if (md(sum_of(m), g.d) != 0) out.push_back(where + ": unbalanced two-valent vertex");
        } else {
            out.push_back(where + ": unstable vertex");
        }
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto& x = g.edges[e];
        int s = (kind[x.u] != Kind::end) + (kind[x.v] != Kind::end);
        int be = kind[x.u] == Kind::end ? g.vertices[x.u].beta : 0;
        int rhs = g.phase == Phase::lg ? md(2 - s + be, g.d) : 0;
        if (md(x.mu + x.mv, g.d) != rhs) out.push_back("edge " + std::to_string(e) + ": edge component multiplicity condition fails");
    }
    return out;
}

bool epsilon_stable(const ComponentData& c, const BigRat& epsilon, const std::optional<BigRat>& light_delta)
{
    BigRat bound = 1 / epsilon;
    int bp = 0;
    for (int b : c.basepoints) {
        if (BigRat(b) > bound) return false;
        bp += b;
    }
    BigRat lhs = epsilon * (c.beta + bp) + 2 * c.genus - 2 + c.special;
    lhs += light_delta ? *light_delta * c.light : BigRat(c.light);
    return lhs > 0;
}

ComponentData component_data(const DualGraph& g, int v)
{
    const auto& x = g.vertices[v];
    ComponentData c;
    c.genus = x.genus;
    c.beta = x.beta;
    c.special = static_cast<int>(x.legs.size() + edge_ends(g, v).size()) + x.extra_legs;
    c.basepoints = x.basepoints;
    return c;
}

ContractionRecord contract_tails(ContractionRecord rec, const BigRat& epsilon)
{
    auto& g = rec.graph;
    while (g.vertices.size() > 1) {
        int tail = -1;
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
            const auto& x = g.vertices[v];
            if (x.genus != 0 || !x.legs.empty() || x.extra_legs != 0) continue;
            auto ends = edge_ends(g, v);
            if (ends.size() != 1) continue;
            int be = x.beta;
            for (int b : x.basepoints) be += b;
            if (epsilon * be > 1) continue;
            tail = v;
            break;
        }
        if (tail < 0) break;
        int eidx = edge_ends(g, tail)[0];
        const GEdge e = g.edges[eidx];
        int host = e.u == tail ? e.v : e.u;
        int order = g.vertices[tail].beta;
        for (int b : g.vertices[tail].basepoints) order += b;
        g.vertices[host].basepoints.push_back(order);
        std::sort(g.vertices[host].basepoints.begin(), g.vertices[host].basepoints.end());
        g.edges.erase(g.edges.begin() + eidx);
        g.vertices.erase(g.vertices.begin() + tail);
        for (auto& x : g.edges) {
            if (x.u > tail) --x.u;
            if (x.v > tail) --x.v;
        }
        if (g.v_bullet) {
            if (*g.v_bullet == tail) g.v_bullet = host;
            if (*g.v_bullet > tail) --*g.v_bullet;
        }
        if (host > tail) --host;
        std::vector<BasepointRecord> kept;
        for (auto r : rec.basepoints) {
            if (r.host == tail) continue;
            if (r.host > tail) --r.host;
            kept.push_back(r);
        }
        kept.push_back({host, order, md(-order - 1, g.d)});
        rec.basepoints = std::move(kept);
    }
    return rec;
}

ContractionRecord contract_c(const DualGraph& g, const BigRat& epsilon)
{
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        const auto& x = g.vertices[v];
        if (!x.basepoints.empty()) throw NotInfinityStable("vertex " + std::to_string(v) + " has basepoints");
        int val = static_cast<int>(x.legs.size() + edge_ends(g, static_cast<int>(v)).size()) + x.extra_legs;
        if (2 * x.genus - 2 + val <= 0 && x.beta <= 0)
            throw NotInfinityStable("vertex " + std::to_string(v) + " is unstable");
    }
    return contract_tails(ContractionRecord{g, {}}, epsilon);
}

ContractionRecord convert_markings_b(const DualGraph& g, const std::vector<int>& orders, const BigRat& epsilon)
{
    std::vector<std::pair<int, int>> legs;  // (id, vertex)
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        for (const auto& l : g.vertices[v].legs) legs.emplace_back(l.id, static_cast<int>(v));
    std::sort(legs.begin(), legs.end());
    std::size_t k = orders.size();
    if (k > legs.size()) throw WrongMultiplicity("more orders than legs");
    ContractionRecord rec{g, {}};
    for (std::size_t i = 0; i < k; ++i) {
        auto [id, v] = legs[legs.size() - k + i];
        auto& x = rec.graph.vertices[v];
        auto it = std::find_if(x.legs.begin(), x.legs.end(), [&](const Leg& l) { return l.id == id; });
        int want = md(orders[i] + 1, g.d);
        if (it->mult != want)
            throw WrongMultiplicity("leg " + std::to_string(id) + " has multiplicity " + std::to_string(it->mult) + "/" +
                                    std::to_string(g.d) + ", expected " + std::to_string(want) + "/" + std::to_string(g.d));
        x.legs.erase(it);
        x.basepoints.push_back(orders[i]);
        std::sort(x.basepoints.begin(), x.basepoints.end());
        rec.basepoints.push_back({v, orders[i], want});
    }
    return contract_tails(rec, epsilon);
}

std::string canonical_form(const DualGraph& g)
{
    std::vector<EdgeKey> best;
    bool have = false;
    std::vector<int> best_idx;
    for_each_sorted_relabelling(g, [&](const std::vector<int>& idx) {
        auto edges = mapped_edges(g, idx);
        if (!have || edges < best) {
            best = edges;
            best_idx = idx;
            have = true;
        }
    });
    DualGraph c = relabel(g, best_idx);
    std::ostringstream os;
    os << "d" << g.d << ";" << to_string(g.phase) << ";V";
    for (std::size_t v = 0; v < c.vertices.size(); ++v) os << "[" << vertex_label(c, static_cast<int>(v)) << "]";
    os << ";E";
    for (const auto& e : c.edges) os << "(" << e.u << "," << e.v << "," << e.mu << "," << e.mv << "," << e.delta << ")";
    return os.str();
}

AutDegree aut_degree(const DualGraph& g)
{
    std::vector<int> id(g.vertices.size());
    std::iota(id.begin(), id.end(), 0);
    auto base = mapped_edges(g, id);
    long perms = 0;
    // Count vertex permutations preserving labels and the edge multiset.
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(vertex_label(g, v));
    std::vector<int> p(id);
    std::function<void(int, std::vector<bool>&)> rec = [&](int v, std::vector<bool>& used) {
        if (v == n) {
            if (mapped_edges(g, p) == base) ++perms;
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || labels[w] != labels[v]) continue;
            used[w] = true;
            p[v] = w;
            rec(v + 1, used);
            used[w] = false;
        }
    };
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    rec(0, used);

    long edge_syms = 1;
    std::map<EdgeKey, int> classes;
    for (const auto& e : base) ++classes[e];
    for (const auto& [key, k] : classes) {
        for (int i = 2; i <= k; ++i) edge_syms *= i;
        auto [a, b, ma, mb, dl] = key;
        if (a == b && ma == mb)
            for (int i = 0; i < k; ++i) edge_syms *= 2;
    }
    AutDegree out;
    out.aut_order = perms * edge_syms;

    BigRat prod = 1;
    if (g.is_localization()) {
        // One half-edge per node of a generic curve: every edge end at a
        // stable vertex, and one end at each unlegged two-valent vertex.
        // Free ends have multiplicity 0 and contribute d_0 = 1 either way.
        std::vector<int> val(static_cast<std::size_t>(n), 0);
        for (const auto& e : g.edges) {
            ++val[e.u];
            ++val[e.v];
        }
        for (int v = 0; v < n; ++v) {
            const auto& x = g.vertices[v];
            int valence = val[v] + static_cast<int>(x.legs.size());
            bool two_valent = x.genus == 0 && x.beta == 0 && valence == 2;
            if (two_valent && !x.legs.empty()) continue;
            bool stable = !two_valent;
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                const auto& x2 = g.edges[e];
                if (x2.u != v && x2.v != v) continue;
                int m = x2.u == v ? x2.mu : x2.mv;
                prod *= d_of_mult(g.d, rat(m, g.d));
                if (!stable) break;
            }
        }
    } else {
        for (const auto& e : g.edges) prod *= d_of_mult(g.d, rat(e.mu, g.d));
    }
    out.degree_factor = BigRat(out.aut_order) / prod;
    return out;
}

namespace {

std::string mult_string(int k, int d) { return std::to_string(k) + "/" + std::to_string(d); }

int parse_mult(const std::string& s, int d)
{
    BigRat r = parse_rat(s) * d;
    if (!is_integer(r)) throw ConfigError("multiplicity " + s + " is not a multiple of 1/" + std::to_string(d));
    return md(to_long_exact(r), d);
}

}  // namespace

std::string write_graph_json(const DualGraph& g)
{
    nlohmann::json j;
    j["d"] = g.d;
    j["phase"] = to_string(g.phase);
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json x;
        x["genus"] = v.genus;
        x["beta"] = v.beta;
        x["extra_legs"] = v.extra_legs;
        x["basepoints"] = v.basepoints;
        x["legs"] = nlohmann::json::array();
        for (const auto& l : v.legs) x["legs"].push_back({{"id", l.id}, {"mult", mult_string(l.mult, g.d)}});
        if (v.level) x["level"] = level_name(*v.level);
        j["vertices"].push_back(x);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"u", e.u},
                              {"v", e.v},
                              {"mu", mult_string(e.mu, g.d)},
                              {"mv", mult_string(e.mv, g.d)},
                              {"delta", e.delta}});
    if (g.v_bullet) j["v_bullet"] = *g.v_bullet;
    return j.dump(2) + "\n";
}

DualGraph read_graph_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("graph JSON: ") + e.what());
    }
    try {
        DualGraph g;
        g.d = j.at("d").get<int>();
        if (g.d < 1) throw ConfigError("graph JSON: d must be positive");
        g.phase = j.contains("phase") ? parse_phase(j["phase"].get<std::string>()) : Phase::lg;
        for (const auto& x : j.at("vertices")) {
            GVertex v;
            v.genus = x.value("genus", 0);
            v.beta = x.value("beta", 0);
            v.extra_legs = x.value("extra_legs", 0);
            if (x.contains("basepoints")) v.basepoints = x["basepoints"].get<std::vector<int>>();
            if (x.contains("legs"))
                for (const auto& l : x["legs"]) v.legs.push_back({l.at("id").get<int>(), parse_mult(l.at("mult").get<std::string>(), g.d)});
            if (x.contains("level")) {
                auto s = x["level"].get<std::string>();
                if (s == "0")
                    v.level = Level::zero;
                else if (s == "inf")
                    v.level = Level::infinity;
                else
                    throw ConfigError("graph JSON: level must be \"0\" or \"inf\"");
            }
            g.vertices.push_back(v);
        }
        if (j.contains("edges"))
            for (const auto& x : j["edges"])
                g.edges.push_back({x.at("u").get<int>(), x.at("v").get<int>(), parse_mult(x.at("mu").get<std::string>(), g.d),
                                   parse_mult(x.at("mv").get<std::string>(), g.d), x.value("delta", 0)});
        if (j.contains("v_bullet")) g.v_bullet = j["v_bullet"].get<int>();
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("graph JSON: ") + e.what());
    }
}

std::string write_record_json(const ContractionRecord& r)
{
    nlohmann::json j;
    j["graph"] = nlohmann::json::parse(write_graph_json(r.graph));
    j["basepoints"] = nlohmann::json::array();
    for (const auto& b : r.basepoints)
        j["basepoints"].push_back({{"host", b.host}, {"order", b.order}, {"mult", mult_string(b.mult, r.graph.d)}});
    return j.dump(2) + "\n";
}

DualGraph order_example_top()
{
    DualGraph g;
    g.d = 5;
    g.vertices = {GVertex{1, 0, {{1, 2}}, 0, {}, std::nullopt}, GVertex{2, 3, {}, 0, {}, std::nullopt}};
    g.edges = {{0, 1, 0, 0, 0}};
    g.v_bullet = 1;
    return g;
}

std::vector<DualGraph> order_example_predecessors()
{
    auto vtx = [](int genus, int beta, std::vector<Leg> legs) { return GVertex{genus, beta, std::move(legs), 0, {}, std::nullopt}; };
    std::vector<DualGraph> out;
    DualGraph g;
    g.d = 5;
    g.v_bullet = 1;

    // A - v'(g1) - B(g1)
    g.vertices = {vtx(1, 0, {{1, 2}}), vtx(1, 3, {}), vtx(1, 0, {})};
    g.edges = {{0, 1, 0, 0, 0}, {1, 2, 4, 1, 0}};
    out.push_back(g);
    // A - B(g1) - v'(g1)
    g.vertices = {vtx(1, 0, {{1, 2}}), vtx(1, 3, {}), vtx(1, 0, {})};
    g.edges = {{0, 2, 0, 0, 0}, {2, 1, 2, 3, 0}};
    out.push_back(g);
    // A - v'(g1) with a self-loop
    g.vertices = {vtx(1, 0, {{1, 2}}), vtx(1, 3, {})};
    g.edges = {{0, 1, 0, 0, 0}, {1, 1, 0, 0, 0}};
    out.push_back(g);
    // A - v'(g0) with a self-loop - B(g1)
    g.vertices = {vtx(1, 0, {{1, 2}}), vtx(0, 3, {}), vtx(1, 0, {})};
    g.edges = {{0, 1, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 4, 1, 0}};
    out.push_back(g);
    return out;
}

}  // namespace glsmx
