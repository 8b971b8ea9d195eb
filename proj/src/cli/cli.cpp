#include "glsmx/cli.hpp"

#include "glsmx/errors.hpp"
#include "glsmx/graphs.hpp"
#include "glsmx/jfun.hpp"
#include "glsmx/p1series.hpp"
#include "glsmx/verify/acceptance.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace glsmx::cli {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int fallback)
{
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer()) throw ConfigError(std::string("'") + key + "' must be an integer");
    return j[key].get<int>();
}

int need_int(const json& j, const char* key)
{
    if (!j.contains(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
    return get_int(j, key, 0);
}

bool get_bool(const json& j, const char* key, bool fallback)
{
    if (!j.contains(key)) return fallback;
    if (!j[key].is_boolean()) throw ConfigError(std::string("'") + key + "' must be a boolean");
    return j[key].get<bool>();
}

BigRat get_rat(const json& j, const char* key)
{
    if (!j.contains(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
    const json& v = j[key];
    if (v.is_number_integer()) return BigRat(v.get<long>());
    if (!v.is_string()) throw ConfigError(std::string("'") + key + "' must be a \"p/q\" string");
    try {
        return parse_rat(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad rational for '") + key + "': " + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DualGraph load_graph(const RunConfig& cfg, const char* key)
{
    const json& p = cfg.params;
    if (!p.contains(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
    if (p[key].is_object()) return read_graph_json(p[key].dump());
    if (!p[key].is_string()) throw ConfigError(std::string("'") + key + "' must be a file name or a graph object");
    std::filesystem::path f(p[key].get<std::string>());
    if (f.is_relative()) f = std::filesystem::path(cfg.base_dir) / f;
    return read_graph_json(read_file(f.string()));
}

json series_json(const TruncSeries<RatFun>& s)
{
    json out = json::array();
    for (int k = 0; k <= s.order(); ++k) out.push_back(s[k].to_string());
    return out;
}

// Splits a class into entries keyed by (z-power, H-power) with values in lambda.
json class_entries(const CohClass& c, int beta)
{
    json out = json::array();
    for (std::size_t j = 0; j < c.coeffs().size(); ++j) {
        const RatFun& f = c[j];
        if (f.is_zero()) continue;
        std::map<int, Poly> by_z;
        int zshift = 0;
        Poly den = f.den();
        if (den.is_monomial()) {
            zshift = den.lead_mono().z;
            den = Poly::monomial(den.lead_coeff(), den.lead_mono().l, 0);
        } else if (!den.free_of_z()) {
            out.push_back({{"beta", beta}, {"H", j}, {"z", nullptr}, {"value", f.to_string()}});
            continue;
        }
        for (const auto& [m, v] : f.num().terms()) by_z[m.z - zshift] += Poly::monomial(v, m.l, 0);
        for (const auto& [zp, p] : by_z)
            out.push_back({{"beta", beta}, {"H", j}, {"z", zp}, {"value", RatFun(p, den).to_string()}});
    }
    return out;
}

Check pass(const std::string& name) { return {name, "pass", ""}; }

Check expect(const std::string& name, bool ok, const std::string& failure)
{
    return ok ? pass(name) : Check{name, "fail", failure};
}

using Handler = std::function<void(const RunConfig&, Report&)>;

void cmd_sectors(const RunConfig& cfg, Report& r)
{
    json list = json::array();
    int narrow = 0;
    for (const auto& s : list_sectors(cfg.model)) {
        list.push_back({{"m", to_string(rat(s.m, cfg.model.d))},
                        {"fixed_coords", s.fixed_coords},
                        {"narrow", s.narrow},
                        {"d_m", s.d_m}});
        narrow += s.narrow;
    }
    r.results["sectors"] = list;
    r.results["narrow_count"] = narrow;
    r.checks.push_back(expect("sector_count", list.size() == static_cast<std::size_t>(cfg.model.d),
                              "expected " + std::to_string(cfg.model.d) + " sectors"));
}

void cmd_stability(const RunConfig& cfg, Report& r)
{
    const json& p = cfg.params;
    ComponentData c;
    c.genus = need_int(p, "genus");
    c.beta = get_int(p, "beta", 0);
    c.special = get_int(p, "special", 0);
    c.light = get_int(p, "light", 0);
    if (p.contains("basepoints")) c.basepoints = p["basepoints"].get<std::vector<int>>();
    std::optional<BigRat> light_delta;
    if (p.contains("light_delta")) light_delta = get_rat(p, "light_delta");
    r.results["epsilon_stable"] = epsilon_stable(c, cfg.model.epsilon, light_delta);
    r.results["delta"] = to_string(choose_delta(cfg.model.epsilon));
}

void cmd_contract(const RunConfig& cfg, Report& r)
{
    DualGraph g = load_graph(cfg, "graph");
    BigRat eps = cfg.params.contains("epsilon") ? get_rat(cfg.params, "epsilon") : cfg.model.epsilon;
    ContractionRecord rec = contract_c(g, eps);
    r.results["record"] = json::parse(write_record_json(rec));
    bool stable = true;
    for (int v = 0; v < static_cast<int>(rec.graph.vertices.size()); ++v)
        stable = stable && epsilon_stable(component_data(rec.graph, v), eps);
    r.checks.push_back(expect("degree_conserved", total_beta(rec.graph) == total_beta(g), "total degree changed"));
    r.checks.push_back(expect("output_stable", stable, "a vertex is not epsilon-stable"));
    ContractionRecord again = contract_tails(rec, eps);
    r.checks.push_back(expect("idempotent", again.graph == rec.graph && again.basepoints == rec.basepoints,
                              "contracting twice changed the record"));
}

void cmd_graphs(const RunConfig& cfg, Report& r)
{
    const json& p = cfg.params;
    int g = need_int(p, "g"), n = need_int(p, "n"), beta = need_int(p, "beta"), delta = need_int(p, "delta");
    auto gs = enumerate_loc_graphs(cfg.model, g, n, beta, delta);
    json list = json::array();
    std::string bad;
    for (const auto& x : gs) {
        AutDegree a = aut_degree(x);
        list.push_back({{"canonical", canonical_form(x)},
                        {"aut_order", a.aut_order},
                        {"degree_factor", to_string(a.degree_factor)}});
        auto errs = validate_loc(cfg.model, x);
        if (!errs.empty() && bad.empty()) bad = canonical_form(x) + ": " + errs.front();
    }
    r.results["count"] = gs.size();
    r.results["graphs"] = list;
    r.checks.push_back(expect("validate_loc", bad.empty(), bad));
}

void cmd_aut(const RunConfig& cfg, Report& r)
{
    DualGraph g = load_graph(cfg, "graph");
    AutDegree a = aut_degree(g);
    r.results["canonical"] = canonical_form(g);
    r.results["aut_order"] = a.aut_order;
    r.results["degree_factor"] = to_string(a.degree_factor);
    auto errs = validate(g);
    r.checks.push_back(expect("validate", errs.empty(), errs.empty() ? "" : errs.front()));
}

void cmd_order(const RunConfig& cfg, Report& r)
{
    DualGraph b = load_graph(cfg, "graph");
    r.results["triple_stable"] = triple_stable(b);
    auto preds = predecessors(b);
    json list = json::array();
    bool below = true;
    for (const auto& p : preds) {
        list.push_back(canonical_form(p));
        below = below && graph_leq(p, b) && !graph_leq(b, p);
    }
    r.results["predecessors"] = list;
    int len = longest_descending_chain(b);
    int bound = static_cast<int>(b.edges.size()) + total_genus(b) + 2;
    r.results["longest_chain"] = len;
    r.results["chain_bound"] = bound;
    r.checks.push_back(expect("predecessors_below", below, "a predecessor is not strictly below"));
    r.checks.push_back(expect("chain_bound", len <= bound, "chain of length " + std::to_string(len)));
    if (cfg.params.contains("other")) r.results["other_leq_graph"] = graph_leq(load_graph(cfg, "other"), b);
}

CohClass p1_class_by_name(const std::string& s)
{
    if (s == "1") return p1_one();
    if (s == "H") return p1_H();
    if (s == "[0]") return p1_point_zero();
    if (s == "[oo]") return p1_point_infinity();
    throw ConfigError("unknown P^1 class '" + s + "' (use 1, H, [0], [oo])");
}

void cmd_p1(const RunConfig& cfg, Report& r)
{
    int Y = cfg.trunc.y_max;
    auto one = stilde_at_zero(p1_one(), Y);
    auto h = stilde_at_zero(p1_H(), Y);
    r.results["stilde_one"] = series_json(one);
    r.results["stilde_H"] = series_json(h);
    r.checks.push_back(expect("stilde_one_closed_form", one == stilde_one_closed_form(Y), "S~(1,0) differs"));
    r.checks.push_back(expect("stilde_H_closed_form", h == stilde_H_closed_form(Y), "S~(H,0) differs"));
    IrrRatioReport irr = irr_ratio_check(Y);
    r.results["irr_ratio"] = series_json(irr.ratio);
    r.checks.push_back(pass("irr_ratio"));
    TreeSeries eps = tree_series_eps(std::min(Y, 3), cfg.trunc.z_cap);
    std::string nonzero;
    for (int j = 0; j <= cfg.trunc.z_cap && nonzero.empty(); ++j)
        if (!eps[0][j].is_zero()) nonzero = "z^" + std::to_string(j);
    r.checks.push_back(expect("eps_series_y0_vanishes", nonzero.empty(), nonzero));
    if (cfg.params.contains("insertions")) {
        std::vector<P1Insertion> ins;
        for (const auto& x : cfg.params["insertions"])
            ins.push_back({p1_class_by_name(x.at("class").get<std::string>()), get_int(x, "psi", 0)});
        r.results["graph_sum"] = p1_graph_sum(need_int(cfg.params, "delta"), ins).to_string();
    }
}

BigRat all_unstable_epsilon(int q_max) { return rat(2, 2 * q_max + 1); }

void cmd_ifun(const RunConfig& cfg, Report& r)
{
    bool tw = get_bool(cfg.params, "twisted", false);
    int Q = cfg.trunc.q_max;
    JSeries s = i_function(cfg.model, Q, tw);
    json coeffs = json::array();
    std::string bad;
    BigRat eps = all_unstable_epsilon(Q);
    for (int b = 0; b <= Q; ++b) {
        const JTerm& t = s.coeffs[static_cast<std::size_t>(b)];
        for (auto& e : class_entries(t.value, b)) {
            e["sector"] = to_string(rat(t.sector, cfg.model.d));
            coeffs.push_back(e);
        }
        if (bad.empty() && !(unstable_J_coefficient(cfg.model, b, eps, tw) == t))
            bad = "beta = " + std::to_string(b);
    }
    r.results["phase"] = to_string(s.phase);
    r.results["twisted"] = s.twisted;
    r.results["coefficients"] = coeffs;
    r.checks.push_back(expect("dual_path", bad.empty(), bad));
}

void cmd_mu(const RunConfig& cfg, Report& r)
{
    bool tw = get_bool(cfg.params, "twisted", false);
    int Q = cfg.trunc.q_max;
    MuTable mu = mu_table(cfg.model, cfg.model.epsilon, tw, Q);
    json coeffs = json::array();
    std::string beyond;
    for (const auto& [b, t] : mu) {
        for (auto& e : class_entries(t.value, b)) coeffs.push_back(e);
        if (BigRat(b) * cfg.model.epsilon > 1 && !t.value.is_zero() && beyond.empty())
            beyond = "beta = " + std::to_string(b);
    }
    r.results["twisted"] = tw;
    r.results["coefficients"] = coeffs;
    r.checks.push_back(expect("mu_0_vanishes", mu.at(0).value.is_zero(), mu.at(0).value.to_string()));
    r.checks.push_back(expect("mu_vanishes_past_1_over_epsilon", beyond.empty(), beyond));
}

void cmd_edge(const RunConfig& cfg, Report& r)
{
    int delta = need_int(cfg.params, "delta");
    int beta = get_int(cfg.params, "beta", 0);
    bool tw = get_bool(cfg.params, "twisted", false);
    CohClass v = edge_contribution(cfg.model, delta, beta, cfg.model.epsilon, tw);
    r.results["value"] = v.to_string();
    r.results["entries"] = class_entries(v, beta);
    CohClass other = edge_contribution(cfg.model, delta, beta, cfg.model.epsilon, !tw);
    r.checks.push_back(expect("twisted_equals_untwisted", v == other, other.to_string()));
}

void cmd_jwc(const RunConfig& cfg, Report& r)
{
    BigRat e1 = get_rat(cfg.params, "epsilon_1");
    BigRat e2 = get_rat(cfg.params, "epsilon_2");
    try {
        JwcReport rep = jwc_check(cfg.model, e1, e2, cfg.trunc.q_max);
        r.results["checked"] = rep.checked;
        r.checks.push_back(pass("wall_crossing"));
    } catch (const IdentityFailed& e) {
        r.checks.push_back({"wall_crossing", "fail", e.what()});
    }
}

void cmd_verify(const RunConfig&, Report& r)
{
    for (const auto& c : acceptance::run_all()) r.checks.push_back({c.name, c.status, c.first_failure});
    r.results["criteria"] = r.checks.size();
}

const std::map<std::string, Handler>& handlers()
{
    static const std::map<std::string, Handler> h = {
        {"sectors", cmd_sectors}, {"stability", cmd_stability}, {"contract", cmd_contract}, {"graphs", cmd_graphs},
        {"aut", cmd_aut},         {"order", cmd_order},         {"p1", cmd_p1},             {"ifun", cmd_ifun},
        {"mu", cmd_mu},           {"edge", cmd_edge},           {"jwc", cmd_jwc},           {"verify", cmd_verify}};
    return h;
}

}  // namespace

RunConfig parse_config(const json& doc, const std::string& base_dir)
{
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig cfg;
    cfg.echo = doc;
    cfg.base_dir = base_dir;
    json m = doc.value("model", json::object());
    if (!m.is_object()) throw ConfigError("'model' must be an object");
    std::vector<int> weights = m.value("weights", std::vector<int>{1, 1, 1, 1, 1});
    int N = get_int(m, "N", 1);
    int d = get_int(m, "d", 5);
    Phase phase = parse_phase(m.value("phase", std::string("LG")));
    BigRat eps = m.contains("epsilon") ? get_rat(m, "epsilon") : rat(2, 5);
    cfg.model = make_model(weights, N, d, phase, eps);

    json t = doc.value("truncations", json::object());
    cfg.trunc.q_max = get_int(t, "q_max", cfg.trunc.q_max);
    cfg.trunc.y_max = get_int(t, "y_max", cfg.trunc.y_max);
    cfg.trunc.z_cap = get_int(t, "z_cap", cfg.trunc.z_cap);
    if (cfg.trunc.q_max <= 0 || cfg.trunc.y_max <= 0 || cfg.trunc.z_cap <= 0)
        throw ConfigError("truncation caps must be positive");
    cfg.params = doc.value("params", json::object());
    if (!cfg.params.is_object()) throw ConfigError("'params' must be an object");
    return cfg;
}

json read_config_document(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

bool Report::all_pass() const
{
    for (const auto& c : checks)
        if (c.status != "pass") return false;
    return true;
}

json Report::to_json() const
{
    json cs = json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.status}, {"first_failure", c.first_failure}});
    return {{"command", command}, {"inputs", inputs}, {"results", results}, {"checks", cs}};
}

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> c = {"sectors", "stability", "contract", "graphs", "aut", "order",
                                               "p1",      "ifun",      "mu",       "edge",   "jwc", "verify"};
    return c;
}

Report run(const std::string& command, const RunConfig& config)
{
    auto it = handlers().find(command);
    if (it == handlers().end()) throw ConfigError("unknown command '" + command + "'");
    Report r;
    r.command = command;
    r.inputs = config.echo;
    try {
        it->second(config, r);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        r.checks.push_back({"run", "fail", e.what()});
    }
    return r;
}

}  // namespace glsmx::cli
