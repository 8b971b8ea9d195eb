#include "glsmx/verify/acceptance.hpp"

#include "glsmx/errors.hpp"
#include "glsmx/graphs.hpp"
#include "glsmx/jfun.hpp"
#include "glsmx/p1series.hpp"
#include "glsmx/verify/oracles.hpp"
#include "glsmx/verify/samples.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <random>
#include <set>

namespace glsmx::acceptance {

namespace {

// Collects the first failed expectation.
class Checker {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok && first_.empty()) first_ = what;
    }
    bool failed() const { return !first_.empty(); }
    const std::string& first() const { return first_; }

private:
    std::string first_;
};

CheckResult run(const std::string& name, const std::function<void(Checker&)>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Checker c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {name, c.failed() ? "fail" : "pass", c.first(), s};
}

GlsmModel quintic(Phase p, const BigRat& eps) { return make_model({1, 1, 1, 1, 1}, 1, 5, p, eps); }

const CohClass& p1_basis(int i)
{
    static const CohClass b[4] = {p1_one(), p1_H(), p1_point_zero(), p1_point_infinity()};
    return b[i];
}

// Every insertion list of length n built from the basis {1, H, [0], [oo]}
// with psi powers up to max_psi.
std::vector<std::vector<P1Insertion>> all_insertions(int n, int max_psi)
{
    std::vector<std::vector<P1Insertion>> out;
    int base = 4 * (max_psi + 1);
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= base;
    for (int code = 0; code < combos; ++code) {
        std::vector<P1Insertion> ins;
        int c = code;
        for (int i = 0; i < n; ++i) {
            ins.push_back({p1_basis(c % 4), (c / 4) % (max_psi + 1)});
            c /= base;
        }
        out.push_back(std::move(ins));
    }
    return out;
}

std::string where(std::initializer_list<std::pair<const char*, long>> kv)
{
    std::string s;
    for (const auto& [k, v] : kv) s += std::string(s.empty() ? "" : ", ") + k + " = " + std::to_string(v);
    return s;
}

}  // namespace

CheckResult stilde_closed_forms()
{
    return run("stilde_closed_forms", [](Checker& c) {
        const int Y = 3;
        auto one = stilde_at_zero(p1_one(), Y);
        auto h = stilde_at_zero(p1_H(), Y);
        auto one_cf = stilde_one_closed_form(Y);
        auto h_cf = stilde_H_closed_form(Y);
        for (int k = 0; k <= Y; ++k) {
            c.expect(one[k] == one_cf[k], "S~(1,0) at y^" + std::to_string(k) + ": " + one[k].to_string() +
                                              " vs " + one_cf[k].to_string());
            c.expect(h[k] == h_cf[k], "S~(H,0) at y^" + std::to_string(k) + ": " + h[k].to_string() + " vs " +
                                          h_cf[k].to_string());
        }
    });
}

CheckResult irrational_factor()
{
    return run("irrational_factor", [](Checker& c) {
        IrrRatioReport rep = irr_ratio_check(6);
        for (int k = 0; k <= 6; ++k)
            c.expect(rep.ratio[k] == rep.expected[k], "ratio differs at y^" + std::to_string(k));
        for (int k = 1; k <= 6; ++k) {
            RatFun scaled = rep.ratio[k] * RatFun::lambda().pow(2 * k);
            c.expect(scaled.is_constant() && !scaled.is_zero(),
                     "y^" + std::to_string(k) + " coefficient " + rep.ratio[k].to_string() +
                         " is not a nonzero multiple of lambda^" + std::to_string(-2 * k));
        }
    });
}

CheckResult eps_series_positivity()
{
    return run("eps_series_positivity", [](Checker& c) {
        const int Z = 6;
        TreeSeries e = tree_series_eps(3, Z);
        for (int j = 0; j <= Z; ++j)
            c.expect(e[0][j].is_zero(), "y^0 z^" + std::to_string(j) + " coefficient is " + e[0][j].to_string());
    });
}

CheckResult dual_path_unstable_terms()
{
    return run("dual_path_unstable_terms", [](Checker& c) {
        struct Case {
            GlsmModel model;
            int top;
        };
        std::vector<Case> cases = {{quintic(Phase::lg, rat(2, 13)), 6}, {quintic(Phase::geometric, rat(2, 7)), 3}};
        for (const auto& [m, top] : cases)
            for (bool tw : {false, true})
                for (int b = 0; b <= top; ++b) {
                    JTerm a = unstable_J_coefficient(m, b, m.epsilon, tw);
                    JTerm i = i_function_coefficient(m, b, tw);
                    c.expect(a == i && positive_part(a.value) == positive_part(i.value),
                             to_string(m.phase) + (tw ? " twisted" : "") + " beta = " + std::to_string(b) + ": " +
                                 a.value.to_string() + " vs " + i.value.to_string());
                }
    });
}

CheckResult leading_normalization()
{
    return run("leading_normalization", [](Checker& c) {
        std::vector<GlsmModel> models;
        for (Phase p : {Phase::lg, Phase::geometric})
            for (const BigRat& e : {rat(3, 2), rat(3, 5), rat(2, 5), rat(2, 7), rat(2, 13)})
                models.push_back(quintic(p, e));
        models.push_back(make_model({1, 2, 3}, 2, 6, Phase::lg, rat(2, 9)));
        models.push_back(make_model({1, 1, 2, 2}, 2, 2, Phase::geometric, rat(2, 5)));
        const int Q = 8;
        for (const auto& m : models) {
            HRelation rel = jfun_relation(m);
            std::string tag = to_string(m.phase) + " epsilon = " + to_string(m.epsilon);
            for (bool tw : {false, true}) {
                CohClass lead = positive_part(unstable_J_coefficient(m, 0, m.epsilon, tw).value);
                c.expect(lead == CohClass(rel, RatFun::z()), tag + ": q^0 of [J]_+ is " + lead.to_string());
                MuTable mu = mu_table(m, m.epsilon, tw, Q);
                c.expect(mu.at(0).value.is_zero(), tag + ": mu_0 = " + mu.at(0).value.to_string());
                for (int b = 1; b <= Q; ++b)
                    if (BigRat(b) * m.epsilon > 1)
                        c.expect(mu.at(b).value.is_zero(), tag + ": mu_" + std::to_string(b) + " nonzero past 1/epsilon");
            }
        }
    });
}

CheckResult graph_sum_oracles()
{
    return run("graph_sum_oracles", [](Checker& c) {
        c.expect(p1_graph_sum(1, {{p1_point_zero(), 0}, {p1_point_infinity(), 0}}) == RatFun(1), "<[0],[oo]>_{0,2,1} != 1");
        c.expect(p1_graph_sum(1, {{p1_H(), 0}, {p1_H(), 0}}) == RatFun(1), "<H,H>_{0,2,1} != 1");

        std::mt19937 rng(2718);
        for (int delta = 0; delta <= 2; ++delta)
            for (int n = 1; n <= 4; ++n) {
                auto lists = all_insertions(n, 1);
                int dim = 2 * delta + n - 2;
                for (const auto& ins : lists) {
                    int deg = 0;
                    for (const auto& x : ins) deg += x.psi + (x.cls == p1_one() ? 0 : 1);
                    if (deg != dim) continue;
                    RatFun v = p1_graph_sum(delta, ins);
                    c.expect(v.is_constant(), "not lambda-free: " + where({{"delta", delta}, {"n", n}}));
                }
                // tree-sum oracle on a random sample
                std::shuffle(lists.begin(), lists.end(), rng);
                for (std::size_t k = 0; k < 3 && k < lists.size(); ++k)
                    c.expect(p1_graph_sum(delta, lists[k]) == oracle::p1_graph_sum_by_trees(delta, lists[k]),
                             "tree oracle: " + where({{"delta", delta}, {"n", n}}));
            }

        // string and divisor identities with the added point, n <= 4 in total
        for (int delta = 0; delta <= 2; ++delta)
            for (int n = 1; n <= 3; ++n) {
                if (delta == 0 && n < 3) continue;
                for (const auto& ins : all_insertions(n, 1)) {
                    auto with_unit = ins;
                    with_unit.push_back({p1_one(), 0});
                    auto with_H = ins;
                    with_H.push_back({p1_H(), 0});
                    RatFun str, div = RatFun(delta) * p1_graph_sum(delta, ins);
                    for (int j = 0; j < n; ++j) {
                        if (ins[j].psi == 0) continue;
                        auto lowered = ins;
                        --lowered[j].psi;
                        str += p1_graph_sum(delta, lowered);
                        lowered[j].cls = lowered[j].cls * p1_H();
                        div += p1_graph_sum(delta, lowered);
                    }
                    c.expect(p1_graph_sum(delta, with_unit) == str, "string: " + where({{"delta", delta}, {"n", n}}));
                    c.expect(p1_graph_sum(delta, with_H) == div, "divisor: " + where({{"delta", delta}, {"n", n}}));
                }
            }
    });
}

CheckResult enumeration_oracle()
{
    return run("enumeration_oracle", [](Checker& c) {
        for (const BigRat& eps : {rat(2, 5), rat(2, 7)}) {
            GlsmModel m = quintic(Phase::lg, eps);
            for (int g = 0; g <= 1; ++g)
                for (int n = 0; n <= 2; ++n)
                    for (int beta = 0; beta <= 3; ++beta)
                        for (int delta = 0; delta <= 2; ++delta) {
                            std::string at = "epsilon = " + to_string(eps) + ", " +
                                             where({{"g", g}, {"n", n}, {"beta", beta}, {"delta", delta}});
                            auto gs = enumerate_loc_graphs(m, g, n, beta, delta);
                            std::set<std::string> keys;
                            for (const auto& x : gs) {
                                auto errs = validate_loc(m, x);
                                c.expect(errs.empty(), "invalid graph at " + at + ": " + (errs.empty() ? "" : errs[0]));
                                keys.insert(oracle::brute_graph_key(x));
                                for (const auto& e : x.edges) {
                                    const GVertex& u = x.vertices[e.u];
                                    int valence = 0;
                                    for (const auto& f : x.edges) valence += (f.u == e.u) + (f.v == e.u);
                                    bool unstable_end = u.genus == 0 && u.legs.empty() && u.extra_legs == 0 && valence == 1;
                                    if (unstable_end && u.beta > 0 && BigRat(u.beta) * eps <= 1)
                                        c.expect(e.delta > u.beta, "basepoint edge with delta <= beta at " + at);
                                }
                            }
                            c.expect(keys.size() == gs.size(), "duplicate graphs at " + at);
                            auto brute = oracle::enumerate_loc_graphs_brute(m, g, n, beta, delta);
                            c.expect(keys == brute, "count " + std::to_string(keys.size()) + " vs brute force " +
                                                        std::to_string(brute.size()) + " at " + at);
                        }
        }
    });
}

CheckResult contraction_algebra()
{
    return run("contraction_algebra", [](Checker& c) {
        std::mt19937 rng(50);
        const BigRat eps_choices[] = {rat(1, 4) + rat(1, 100), rat(2, 3), rat(2, 5), rat(2, 7)};
        for (int i = 0; i < 50; ++i) {
            const BigRat& eps = eps_choices[rng() % 4];
            DualGraph g = samples::random_infinity_stable_graph(rng, eps);
            ContractionRecord r = contract_c(g, eps);
            std::string at = "graph " + std::to_string(i);
            c.expect(total_beta(r.graph) == total_beta(g), "degree not conserved, " + at);
            c.expect(total_genus(r.graph) == total_genus(g), "genus not conserved, " + at);
            c.expect(validate(r.graph).empty(), "contracted graph invalid, " + at);
            for (int v = 0; v < static_cast<int>(r.graph.vertices.size()); ++v)
                c.expect(epsilon_stable(component_data(r.graph, v), eps), "unstable vertex after contraction, " + at);
            ContractionRecord again = contract_tails(r, eps);
            c.expect(again.graph == r.graph && again.basepoints == r.basepoints, "not idempotent, " + at);
        }
    });
}

CheckResult partial_order()
{
    return run("partial_order", [](Checker& c) {
        DualGraph top = order_example_top();
        c.expect(triple_stable(top), "example top is not a stable triple");
        std::set<std::string> preds;
        for (const auto& p : predecessors(top)) preds.insert(canonical_form(p));
        int k = 0;
        for (const auto& p : order_example_predecessors()) {
            std::string at = "example predecessor " + std::to_string(k++);
            c.expect(graph_leq(p, top), at + " is not below the top");
            c.expect(!graph_leq(top, p), at + " is above the top");
            c.expect(preds.count(canonical_form(p)) == 1, at + " missing from predecessors()");
        }
        std::mt19937 rng(20);
        for (int i = 0; i < 20; ++i) {
            DualGraph b = samples::random_triple(rng);
            int bound = static_cast<int>(b.edges.size()) + total_genus(b) + 2;
            int len = longest_descending_chain(b);
            c.expect(len <= bound, "triple " + std::to_string(i) + ": chain of length " + std::to_string(len) +
                                       " exceeds " + std::to_string(bound));
        }
    });
}

CheckResult delta_rule()
{
    return run("delta_rule", [](Checker& c) {
        std::mt19937 rng(100);
        std::uniform_int_distribution<int> p(1, 40), q(1, 40);
        int tested = 0;
        while (tested < 100) {
            BigRat e = rat(p(rng), q(rng));
            if (on_wall(e)) continue;
            ++tested;
            BigRat d = choose_delta(e);
            c.expect(d == oracle::delta_by_scan(e) && oracle::delta_rule_holds(e, d),
                     "epsilon = " + to_string(e) + ": delta = " + to_string(d));
        }
    });
}

std::vector<CheckResult> run_all()
{
    return {stilde_closed_forms(),        irrational_factor(),   eps_series_positivity(), dual_path_unstable_terms(),
            leading_normalization(), graph_sum_oracles(), enumeration_oracle(), contraction_algebra(),
            partial_order(),   delta_rule()};
}

}  // namespace glsmx::acceptance
