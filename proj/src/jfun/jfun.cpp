#include "glsmx/jfun.hpp"

#include "glsmx/errors.hpp"

#include <algorithm>

namespace glsmx {

namespace {

CohClass cst(const HRelation& rel, const RatFun& c) { return CohClass(rel, c); }

CohClass zc(const HRelation& rel) { return cst(rel, RatFun::z()); }

CohClass product(const HRelation& rel, const std::vector<CohClass>& ws)
{
    CohClass out = cst(rel, RatFun(1));
    for (const auto& w : ws) out *= w;
    return out;
}

int lg_sector(const GlsmModel& model, int beta) { return ((beta + 1) % model.d + model.d) % model.d; }

int sector_of(const GlsmModel& model, int beta) { return model.phase == Phase::lg ? lg_sector(model, beta) : 0; }

// (lambda - H) prod_{j=1}^{beta-1} (lambda - H - j z), read off bundle weights of
// P^v (x) C_lambda of degree -beta on the graph space.
CohClass twist_by_weights(const HRelation& rel, int beta)
{
    CohClass l0 = cst(rel, RatFun::lambda()) - CohClass::H(rel);
    CohClass t = zc(rel);
    WeightTable w = bundle_weights(BigRat(-beta), 0, 0, t, l0 - t * RatFun(beta));
    return l0 * product(rel, w.h1) / product(rel, w.h0);
}

CohClass twist_closed(const HRelation& rel, int beta)
{
    if (beta == 0) return cst(rel, RatFun(1));
    CohClass l0 = cst(rel, RatFun::lambda()) - CohClass::H(rel);
    CohClass out = l0;
    for (int j = 1; j < beta; ++j) out *= l0 - zc(rel) * RatFun(j);
    return out;
}

void check_unstable(int beta, const BigRat& epsilon)
{
    if (beta < 0) throw OutOfUnstableRange("negative degree " + std::to_string(beta));
    if (epsilon <= 0) throw ConfigError("epsilon must be positive");
    if (BigRat(beta) * epsilon > 1)
        throw OutOfUnstableRange("beta = " + std::to_string(beta) + " exceeds 1/epsilon for epsilon = " +
                                 to_string(epsilon));
}

}  // namespace

WeightTable bundle_weights(const BigRat& orbifold_degree, const BigRat& age0, const BigRat& age_inf,
                           const CohClass& tangent_weight_at_0, const CohClass& fiber_weight_at_0)
{
    for (const BigRat* a : {&age0, &age_inf})
        if (*a < 0 || *a >= 1) throw InconsistentOrbData("age " + to_string(*a) + " outside [0, 1)");
    BigRat coarse = orbifold_degree - age0 - age_inf;
    if (!is_integer(coarse))
        throw InconsistentOrbData("degree " + to_string(orbifold_degree) + " minus ages is not integral");
    long D = to_long_exact(coarse);
    const CohClass& t = tangent_weight_at_0;
    const CohClass& a = fiber_weight_at_0;
    auto weight = [&](long k) { return a - t * RatFun(BigRat(k) + age0); };
    WeightTable out;
    for (long k = 0; k <= D; ++k) out.h0.push_back(weight(k));
    for (long k = D + 1; k <= -1; ++k) out.h1.push_back(weight(k));
    return out;
}

HRelation jfun_relation(const GlsmModel& model)
{
    int r = model.phase == Phase::lg ? model.N : model.M - model.N;
    return HRelation::nilpotent(std::max(r, 1));
}

JTerm unstable_J_coefficient(const GlsmModel& model, int beta, const BigRat& epsilon, bool twisted)
{
    check_unstable(beta, epsilon);
    HRelation rel = jfun_relation(model);
    CohClass H = CohClass::H(rel);
    CohClass z = zc(rel);
    CohClass num = z;
    CohClass den = cst(rel, RatFun(1));
    if (model.phase == Phase::lg) {
        // x-coordinates: L^{w_i}(-Delta) has negative degree, only H^1 survives.
        for (int w : model.weights) {
            BigRat x = rat(static_cast<long>(beta + 1) * w, model.d);
            BigRat deg = -x - (is_integer(x) ? 1 : 0);
            CohClass fiber = (H + z * RatFun(beta + 1)) * RatFun(-rat(w, model.d));
            WeightTable tab = bundle_weights(deg, 0, frac_part(-x), z, fiber);
            num *= product(rel, tab.h1);
            den *= product(rel, tab.h0);
        }
        // p-coordinates: moving part of H^0 of a degree beta bundle with fixed weight H.
        WeightTable p = bundle_weights(BigRat(beta), 0, 0, z, H + z * RatFun(beta));
        p.h0.pop_back();
        den *= product(rel, p.h0).pow(model.N);
    } else {
        for (int w : model.weights) {
            WeightTable tab = bundle_weights(BigRat(static_cast<long>(w) * beta), 0, 0, z,
                                             (H + z * RatFun(beta)) * RatFun(w));
            tab.h0.pop_back();
            den *= product(rel, tab.h0);
        }
        // P = L^{-d} (x) omega_log: only H^1, taken with positive sign.
        WeightTable p = bundle_weights(BigRat(-static_cast<long>(model.d) * beta - 1), 0, 0, z,
                                       -(H + z * RatFun(beta)) * RatFun(model.d) - z);
        CohClass e = cst(rel, RatFun(1));
        for (const auto& wt : p.h1) e *= -wt;
        num *= e.pow(model.N);
    }
    CohClass value = num / den;
    if (twisted) value *= twist_by_weights(rel, beta);
    return {sector_of(model, beta), value};
}

JTerm i_function_coefficient(const GlsmModel& model, int beta, bool twisted)
{
    if (beta < 0) throw OutOfUnstableRange("negative degree");
    HRelation rel = jfun_relation(model);
    CohClass H = CohClass::H(rel);
    CohClass z = zc(rel);
    CohClass value = z;
    if (model.phase == Phase::lg) {
        for (int w : model.weights) {
            BigRat x = rat(static_cast<long>(beta + 1) * w, model.d);
            for (BigRat b = x - 1; b >= 0; b -= 1) value *= H * RatFun(-rat(w, model.d)) - z * RatFun(b);
        }
        for (int k = 1; k <= beta; ++k) value /= (H + z * RatFun(k)).pow(model.N);
    } else {
        for (int k = 1; k <= model.d * beta; ++k) value *= (H * RatFun(model.d) + z * RatFun(k)).pow(model.N);
        for (int w : model.weights)
            for (int k = 1; k <= w * beta; ++k) value /= H * RatFun(w) + z * RatFun(k);
    }
    if (twisted) value *= twist_closed(rel, beta);
    return {sector_of(model, beta), value};
}

JSeries i_function(const GlsmModel& model, int q_max, bool twisted)
{
    if (q_max < 0) throw ConfigError("q_max must be non-negative");
    JSeries out{model.phase, twisted, {}};
    for (int b = 0; b <= q_max; ++b) out.coeffs.push_back(i_function_coefficient(model, b, twisted));
    return out;
}

RatFun positive_part(const RatFun& f)
{
    if (f.is_zero() || f.den().free_of_z()) return f;
    if (!f.den().is_monomial()) throw ConfigError("positive_part: denominator " + f.den().to_string() + " is not a monomial");
    int shift = f.den().lead_mono().z;
    Poly keep;
    for (const auto& [m, c] : f.num().terms())
        if (m.z >= shift) keep += Poly::monomial(c, m.l, m.z);
    return RatFun(keep, f.den());
}

CohClass positive_part(const CohClass& c)
{
    std::vector<RatFun> out;
    for (const auto& x : c.coeffs()) out.push_back(positive_part(x));
    return CohClass(c.relation(), out);
}

MuTable mu_table(const GlsmModel& model, const BigRat& epsilon, bool twisted, int q_max)
{
    if (on_wall(epsilon)) throw OnWall("epsilon = " + to_string(epsilon));
    HRelation rel = jfun_relation(model);
    MuTable out;
    for (int b = 0; b <= q_max; ++b) {
        if (BigRat(b) * epsilon > 1) {
            out[b] = {sector_of(model, b), CohClass(rel)};
            continue;
        }
        JTerm t = unstable_J_coefficient(model, b, epsilon, twisted);
        t.value = positive_part(t.value);
        if (b == 0) t.value -= zc(rel);
        out[b] = t;
    }
    return out;
}

CohClass lambda_zero(const GlsmModel& model)
{
    HRelation rel = jfun_relation(model);
    return cst(rel, RatFun::lambda()) - CohClass::H(rel);
}

CohClass lambda_infinity(const GlsmModel& model) { return -lambda_zero(model); }

CohClass edge_contribution(const GlsmModel& model, int delta_e, int beta_e, const BigRat& epsilon, bool twisted)
{
    if (delta_e < 1) throw ConfigError("edge degree must be positive");
    if (beta_e < 0) throw ConfigError("basepoint degree must be non-negative");
    if (beta_e > 0 && delta_e <= beta_e)
        throw DegreeViolation("delta = " + std::to_string(delta_e) + " <= beta = " + std::to_string(beta_e));
    CohClass l0 = lambda_zero(model);
    CohClass linf = lambda_infinity(model);
    CohClass at = l0 * RatFun(rat(1, delta_e));

    JTerm j = unstable_J_coefficient(model, beta_e, epsilon, twisted);
    CohClass out = substitute_z(j.value, at) / at;
    int dm = d_of_mult(model.d, graph_multiplicities(model, beta_e).first);
    out *= RatFun(rat(1, dm));
    if (!twisted) {
        // lambda_0 e(-R pi_*(P^v (x) C_lambda)); the twisted J already carries it.
        for (int b = 0; b < beta_e; ++b) out *= l0 - at * RatFun(b);
    }
    for (int b = 1; b <= delta_e; ++b) out /= at * RatFun(b) * (linf * RatFun(rat(b, delta_e)));
    return out;
}

std::string NodeContribution::to_string() const
{
    std::string s = smoothing.to_string();
    std::string r;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'z') r += "psi";
        else r += s[i];
    }
    return "(" + normal.to_string() + ", " + r + ")";
}

NodeContribution node_contribution(const GlsmModel& model, const BigRat& m_h, Level j, int delta_e)
{
    if (delta_e < 1) throw ConfigError("edge degree must be positive");
    HRelation rel = jfun_relation(model);
    CohClass lj = j == Level::zero ? lambda_zero(model) : lambda_infinity(model);
    int dm = d_of_mult(model.d, m_h);
    CohClass smoothing = cst(rel, RatFun(dm)) / (lj * RatFun(rat(1, delta_e)) - zc(rel));
    return {lj, smoothing};
}

CohClass node_contribution_explicit(const GlsmModel& model, const BigRat& m_h, Level j, int delta_e, int delta_other)
{
    if (delta_e < 1 || delta_other < 1) throw ConfigError("edge degree must be positive");
    HRelation rel = jfun_relation(model);
    CohClass lj = j == Level::zero ? lambda_zero(model) : lambda_infinity(model);
    int dm = d_of_mult(model.d, m_h);
    return cst(rel, RatFun(dm)) / (lj * RatFun(rat(1, delta_e) + rat(1, delta_other)));
}

JwcReport jwc_check(const GlsmModel& model, const BigRat& eps1, const BigRat& eps2, int q_max)
{
    for (const BigRat* e : {&eps1, &eps2})
        if (on_wall(*e)) throw OnWall("epsilon = " + to_string(*e));
    JwcReport rep;
    auto fail = [](const std::string& what) { throw IdentityFailed(what); };
    auto unstable = [](int b, const BigRat& e) { return BigRat(b) * e <= 1; };

    for (bool tw : {false, true}) {
        std::string tag = tw ? " twisted" : "";
        for (const BigRat* e : {&eps1, &eps2}) {
            for (int b = 0; b <= q_max && unstable(b, *e); ++b) {
                JTerm a = unstable_J_coefficient(model, b, *e, tw);
                JTerm i = i_function_coefficient(model, b, tw);
                if (a.sector != i.sector || positive_part(a.value) != positive_part(i.value))
                    fail("[J]_+ differs from truncated I at beta = " + std::to_string(b) + tag +
                         ", epsilon = " + to_string(*e));
            }
            rep.checked.push_back("[J]_+ = [I]_+ up to beta " +
                                  std::to_string(std::min<long>(q_max, to_long(floor_of(1 / *e)))) + tag +
                                  ", epsilon = " + to_string(*e));
        }
        MuTable m1 = mu_table(model, eps1, tw, q_max);
        MuTable m2 = mu_table(model, eps2, tw, q_max);
        for (int b = 0; b <= q_max; ++b) {
            bool u1 = unstable(b, eps1), u2 = unstable(b, eps2);
            CohClass diff = m2.at(b).value - m1.at(b).value;
            CohClass want(jfun_relation(model));
            if (u1 != u2) {
                want = positive_part(i_function_coefficient(model, b, tw).value);
                if (u1) want = -want;
            }
            if (diff != want)
                fail("mu difference at beta = " + std::to_string(b) + tag + " is " + diff.to_string() +
                     ", expected " + want.to_string());
        }
        rep.checked.push_back("mu transforms by the intermediate I-coefficients up to beta " + std::to_string(q_max) +
                              tag);
    }
    return rep;
}

int predicted_J_degree(const GlsmModel& model, int beta, bool twisted)
{
    long deg = 1;
    if (model.phase == Phase::lg) {
        for (int w : model.weights) {
            BigRat x = rat(static_cast<long>(beta + 1) * w, model.d);
            deg -= euler_char(OrbiBundleData{0, -x - (is_integer(x) ? 1 : 0), {frac_part(-x)}});
        }
        deg -= static_cast<long>(model.N) * (euler_char(OrbiBundleData{0, BigRat(beta), {}}) - 1);
    } else {
        for (int w : model.weights) deg -= euler_char(OrbiBundleData{0, BigRat(static_cast<long>(w) * beta), {}}) - 1;
        deg -= static_cast<long>(model.N) *
               euler_char(OrbiBundleData{0, BigRat(-static_cast<long>(model.d) * beta - 1), {}});
    }
    if (twisted) deg += beta;
    return static_cast<int>(deg);
}

}  // namespace glsmx
