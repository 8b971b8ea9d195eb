#include "doctest.h"

#include "glsmx/errors.hpp"
#include "glsmx/jfun.hpp"
#include "glsmx/verify/oracles.hpp"

#include <random>

using namespace glsmx;

namespace {

GlsmModel quintic_lg(const BigRat& eps = rat(2, 13)) { return make_model({1, 1, 1, 1, 1}, 1, 5, Phase::lg, eps); }
GlsmModel quintic_geo(const BigRat& eps = rat(2, 7))
{
    return make_model({1, 1, 1, 1, 1}, 1, 5, Phase::geometric, eps);
}

CohClass c(const HRelation& rel, const RatFun& x) { return CohClass(rel, x); }

// Coefficient of lambda^k in f, whose denominator is a monomial.
RatFun lambda_part(const RatFun& f, int k)
{
    if (f.is_zero()) return f;
    REQUIRE(f.den().is_monomial());
    int shift = f.den().lead_mono().l;
    Poly keep;
    for (const auto& [m, v] : f.num().terms())
        if (m.l - shift == k) keep += Poly::monomial(v, m.l, m.z);
    return RatFun(keep, f.den()) / RatFun::lambda().pow(k);
}

CohClass lambda_part(const CohClass& x, int k)
{
    std::vector<RatFun> out;
    for (const auto& r : x.coeffs()) out.push_back(lambda_part(r, k));
    return CohClass(x.relation(), out);
}

}  // namespace

TEST_CASE("bundle_weights examples")
{
    HRelation rel = HRelation::nilpotent(2);
    CohClass t = c(rel, RatFun::z());
    CohClass w0 = c(rel, RatFun::lambda()) + CohClass::H(rel);

    WeightTable a = bundle_weights(3, 0, 0, t, w0);
    REQUIRE(a.h0.size() == 4);
    CHECK(a.h1.empty());
    for (int k = 0; k <= 3; ++k) CHECK(a.h0[k] == w0 - t * RatFun(k));

    WeightTable b = bundle_weights(-1, 0, 0, t, w0);
    CHECK(b.h0.empty());
    CHECK(b.h1.empty());
    CHECK(b.euler() == 0);

    WeightTable e = bundle_weights(-2, 0, 0, t, w0);
    CHECK(e.h0.empty());
    REQUIRE(e.h1.size() == 1);
    CHECK(e.h1[0] == w0 + t);

    // ages shift the weights by age0 * t
    WeightTable f = bundle_weights(rat(7, 5), rat(2, 5), 0, t, w0);
    REQUIRE(f.h0.size() == 2);
    CHECK(f.h0[1] == w0 - t * RatFun(rat(7, 5)));

    CHECK_THROWS_AS(bundle_weights(rat(1, 3), 0, 0, t, w0), InconsistentOrbData);
    CHECK_THROWS_AS(bundle_weights(1, rat(3, 2), rat(1, 2), t, w0), InconsistentOrbData);
}

TEST_CASE("bundle_weights agrees with Cech cohomology")
{
    HRelation rel = HRelation::nilpotent(3);
    CohClass t = c(rel, RatFun::lambda()) * RatFun(rat(1, 3)) - CohClass::H(rel);
    CohClass w0 = c(rel, RatFun::z()) + CohClass::H(rel) * RatFun(2);
    for (int D = -6; D <= 6; ++D) {
        WeightTable a = bundle_weights(D, 0, 0, t, w0);
        WeightTable b = oracle::bundle_weights_by_cech(D, t, w0);
        CAPTURE(D);
        CHECK(a.h0 == b.h0);
        CHECK(a.h1 == b.h1);
    }
}

TEST_CASE("bundle_weights Euler characteristic on random orbifold data")
{
    std::mt19937 rng(7);
    HRelation rel = HRelation::nilpotent(1);
    CohClass t = c(rel, RatFun::z());
    CohClass w0 = c(rel, RatFun::lambda());
    for (int trial = 0; trial < 200; ++trial) {
        int r0 = std::uniform_int_distribution<int>(1, 7)(rng);
        int r1 = std::uniform_int_distribution<int>(1, 7)(rng);
        BigRat a0 = rat(std::uniform_int_distribution<int>(0, r0 - 1)(rng), r0);
        BigRat a1 = rat(std::uniform_int_distribution<int>(0, r1 - 1)(rng), r1);
        int coarse = std::uniform_int_distribution<int>(-8, 8)(rng);
        BigRat deg = BigRat(coarse) + a0 + a1;
        WeightTable w = bundle_weights(deg, a0, a1, t, w0);
        CHECK(w.euler() == euler_char(OrbiBundleData{0, deg, {a0, a1}}));
    }
}

TEST_CASE("leading term and sectors")
{
    for (const GlsmModel& m : {quintic_lg(), quintic_geo()}) {
        HRelation rel = jfun_relation(m);
        for (bool tw : {false, true}) {
            JTerm j0 = unstable_J_coefficient(m, 0, m.epsilon, tw);
            CHECK(j0.value == c(rel, RatFun::z()));
            CHECK(positive_part(j0.value) == c(rel, RatFun::z()));
        }
    }
    CHECK(unstable_J_coefficient(quintic_lg(), 0, rat(2, 13), false).sector == 1);
    CHECK(unstable_J_coefficient(quintic_lg(), 4, rat(2, 13), false).sector == 0);
    CHECK(unstable_J_coefficient(quintic_geo(), 2, rat(2, 7), false).sector == 0);
    CHECK_THROWS_AS(unstable_J_coefficient(quintic_lg(), 7, rat(2, 13), false), OutOfUnstableRange);
    CHECK_THROWS_AS(unstable_J_coefficient(quintic_geo(), 4, rat(2, 7), true), OutOfUnstableRange);
}

TEST_CASE("geometric quintic beta = 1 hypergeometric shape")
{
    GlsmModel m = quintic_geo();
    HRelation rel = jfun_relation(m);
    CohClass H = CohClass::H(rel);
    CohClass z = c(rel, RatFun::z());
    CohClass want = z;
    for (int k = 1; k <= 5; ++k) want *= H * RatFun(5) + z * RatFun(k);
    want /= (H + z).pow(5);
    CHECK(unstable_J_coefficient(m, 1, m.epsilon, false).value == want);
    CHECK(i_function_coefficient(m, 1, false).value == want);
}

TEST_CASE("weight products equal the I-function coefficients")
{
    GlsmModel lg = quintic_lg();
    GlsmModel geo = quintic_geo();
    for (bool tw : {false, true}) {
        for (int b = 0; b <= 6; ++b) {
            JTerm a = unstable_J_coefficient(lg, b, lg.epsilon, tw);
            JTerm i = i_function_coefficient(lg, b, tw);
            CAPTURE(b);
            CHECK(a == i);
            CHECK(positive_part(a.value) == positive_part(i.value));
        }
        for (int b = 0; b <= 3; ++b) {
            CAPTURE(b);
            CHECK(unstable_J_coefficient(geo, b, geo.epsilon, tw) == i_function_coefficient(geo, b, tw));
        }
    }
    // a model with mixed weights and two p-fields
    GlsmModel mixed = make_model({1, 2, 3}, 2, 6, Phase::lg, rat(2, 9));
    GlsmModel mixed_geo = make_model({1, 1, 2, 2}, 2, 2, Phase::geometric, rat(2, 7));
    for (bool tw : {false, true}) {
        for (int b = 0; b <= 4; ++b) CHECK(unstable_J_coefficient(mixed, b, mixed.epsilon, tw) == i_function_coefficient(mixed, b, tw));
        for (int b = 0; b <= 3; ++b)
            CHECK(unstable_J_coefficient(mixed_geo, b, mixed_geo.epsilon, tw) ==
                  i_function_coefficient(mixed_geo, b, tw));
    }
}

TEST_CASE("i_function series")
{
    JSeries s = i_function(quintic_geo(), 3, true);
    CHECK(s.phase == Phase::geometric);
    CHECK(s.twisted);
    REQUIRE(s.coeffs.size() == 4);
    CHECK(s.coeffs[2] == i_function_coefficient(quintic_geo(), 2, true));
    CHECK_THROWS_AS(i_function(quintic_geo(), -1), ConfigError);
}

TEST_CASE("positive part")
{
    RatFun f = parse_ratfun("(z^3 + lambda*z + 2)/z");
    CHECK(positive_part(f) == parse_ratfun("z^2 + lambda"));
    CHECK(positive_part(parse_ratfun("1/z^2")) == RatFun());
    CHECK(positive_part(parse_ratfun("lambda*z + 1")) == parse_ratfun("lambda*z + 1"));
}

TEST_CASE("mu tables")
{
    for (const GlsmModel& m : {quintic_lg(rat(2, 5)), quintic_lg(rat(2, 13)), quintic_geo(rat(2, 5)), quintic_geo(rat(3, 5))}) {
        for (bool tw : {false, true}) {
            MuTable mu = mu_table(m, m.epsilon, tw, 8);
            CHECK(mu.at(0).value.is_zero());
            for (int b = 0; b <= 8; ++b) {
                CAPTURE(b);
                if (BigRat(b) * m.epsilon > 1) CHECK(mu.at(b).value.is_zero());
                else if (b > 0) CHECK(mu.at(b).value == positive_part(unstable_J_coefficient(m, b, m.epsilon, tw).value));
            }
        }
    }
    // the geometric quintic has a nonzero mirror correction at beta = 1
    CHECK_FALSE(mu_table(quintic_geo(rat(2, 5)), rat(2, 5), false, 2).at(1).value.is_zero());
    CHECK_THROWS_AS(mu_table(quintic_geo(), rat(1, 2), false, 2), OnWall);
}

TEST_CASE("twisted mu reduces to untwisted at the top power of lambda")
{
    for (const GlsmModel& m : {quintic_lg(), quintic_geo()}) {
        MuTable a = mu_table(m, m.epsilon, false, 6);
        MuTable b = mu_table(m, m.epsilon, true, 6);
        for (int beta = 0; beta <= 6; ++beta) {
            CAPTURE(beta);
            CHECK(lambda_part(b.at(beta).value, beta) == a.at(beta).value);
        }
    }
}

TEST_CASE("grading of J coefficients")
{
    std::vector<GlsmModel> models = {quintic_lg(), quintic_geo(), make_model({1, 2, 3}, 2, 6, Phase::lg, rat(2, 9)),
                                     make_model({1, 1, 2, 2}, 2, 2, Phase::geometric, rat(2, 7))};
    for (const auto& m : models) {
        int top = m.phase == Phase::lg ? 4 : 3;
        for (bool tw : {false, true}) {
            for (int b = 0; b <= top; ++b) {
                int want = predicted_J_degree(m, b, tw);
                CohClass v = unstable_J_coefficient(m, b, m.epsilon, tw).value;
                for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
                    if (v[j].is_zero()) continue;
                    auto deg = v[j].homogeneous_degree();
                    CAPTURE(b);
                    CAPTURE(j);
                    REQUIRE(deg.has_value());
                    CHECK(*deg + static_cast<int>(j) == want);
                }
            }
        }
    }
}

TEST_CASE("edge contributions")
{
    // target a point (H = 0, trivial sector): recovers the single-edge factor of the P^1 module
    GlsmModel pt = make_model({1}, 1, 1, Phase::geometric, rat(2, 3));
    HRelation prel = jfun_relation(pt);
    CHECK(edge_contribution(pt, 1, 0, pt.epsilon, false) ==
          c(prel, RatFun(1) / (RatFun::lambda() * -RatFun::lambda())));

    GlsmModel m = quintic_geo(rat(2, 7));
    HRelation rel = jfun_relation(m);
    CohClass l0 = lambda_zero(m);
    CohClass linf = lambda_infinity(m);
    CHECK(l0 + linf == CohClass(rel));

    // delta = 2: denominator from the moving sections of O(2[0] + 2[oo])
    WeightTable sec = bundle_weights(4, 0, 0, l0 * RatFun(rat(1, 2)), l0);
    CohClass den = c(rel, RatFun(1));
    for (const auto& w : sec.h0)
        if (!w.is_zero()) den *= w;
    CohClass direct = c(rel, RatFun(1));
    for (int b = 1; b <= 2; ++b) direct *= l0 * RatFun(rat(b, 2)) * (linf * RatFun(rat(b, 2)));
    CHECK(den == direct);
    CHECK(edge_contribution(m, 2, 0, m.epsilon, false) == c(rel, RatFun(1)) / den);

    // delta = 2, beta = 1: J_1 evaluated at z = lambda_0/2 and the extra lambda_0
    CohClass at = l0 * RatFun(rat(1, 2));
    CohClass j1 = substitute_z(i_function_coefficient(m, 1, false).value, at);
    CHECK(edge_contribution(m, 2, 1, m.epsilon, false) == j1 / at * l0 / den);

    CHECK_THROWS_AS(edge_contribution(m, 1, 1, m.epsilon, false), DegreeViolation);
    CHECK_THROWS_AS(edge_contribution(m, 3, 3, m.epsilon, false), DegreeViolation);
    CHECK_THROWS_AS(edge_contribution(m, 0, 0, m.epsilon, false), ConfigError);

    GlsmModel lg = quintic_lg(rat(2, 9));
    HRelation lrel = jfun_relation(lg);
    CohClass ll0 = lambda_zero(lg);
    // d_m = 5 for m = 3/5, J_1 = 1
    CHECK(edge_contribution(lg, 2, 1, lg.epsilon, false) ==
          c(lrel, RatFun(rat(2, 5))) / (ll0 * RatFun(rat(1, 2)) * ll0 * (ll0 * RatFun(rat(-1, 2))) * -ll0));
}

TEST_CASE("twisted and untwisted edge contributions agree")
{
    for (const GlsmModel& m : {quintic_lg(rat(2, 9)), quintic_geo(rat(2, 7))}) {
        int top = to_long(floor_of(1 / m.epsilon));
        for (int beta = 0; beta <= top; ++beta)
            for (int delta = std::max(1, beta + 1); delta <= beta + 3; ++delta) {
                CAPTURE(beta);
                CAPTURE(delta);
                CHECK(edge_contribution(m, delta, beta, m.epsilon, true) ==
                      edge_contribution(m, delta, beta, m.epsilon, false));
            }
    }
}

TEST_CASE("node contributions")
{
    GlsmModel m = quintic_geo();
    HRelation rel = jfun_relation(m);
    CohClass H = CohClass::H(rel);
    CohClass lam = c(rel, RatFun::lambda());
    CohClass z = c(rel, RatFun::z());

    NodeContribution a = node_contribution(m, rat(1, 5), Level::zero, 2);
    CHECK(a.normal == lam - H);
    CHECK(a.smoothing * ((lam - H) * RatFun(rat(1, 2)) - z) == c(rel, RatFun(5)));
    std::string s = a.to_string();
    CHECK(s.find("psi") != std::string::npos);
    CHECK(s.find('z') == std::string::npos);

    NodeContribution b = node_contribution(m, 0, Level::infinity, 1);
    CHECK(b.normal == H - lam);
    CHECK(b.smoothing * (H - lam - z) == c(rel, RatFun(1)));

    CohClass e = node_contribution_explicit(m, rat(2, 5), Level::zero, 2, 3);
    CHECK(e * ((lam - H) * RatFun(rat(5, 6))) == c(rel, RatFun(5)));
}

TEST_CASE("jwc_check")
{
    GlsmModel lg = quintic_lg(rat(3, 5));
    CHECK_FALSE(jwc_check(lg, rat(3, 5), rat(3, 5), 3).checked.empty());
    CHECK_FALSE(jwc_check(lg, rat(3, 5), rat(2, 5), 3).checked.empty());
    CHECK_NOTHROW(jwc_check(lg, rat(2, 5), rat(3, 5), 3));
    CHECK_NOTHROW(jwc_check(lg, rat(3, 5), rat(2, 13), 6));

    GlsmModel geo = quintic_geo(rat(3, 5));
    CHECK_NOTHROW(jwc_check(geo, rat(3, 5), rat(2, 5), 3));
    CHECK_NOTHROW(jwc_check(geo, rat(2, 3), rat(2, 7), 3));

    // mu^{2/5} - mu^{3/5} at beta = 2 is the positive part of I_2
    MuTable m1 = mu_table(geo, rat(3, 5), false, 3);
    MuTable m2 = mu_table(geo, rat(2, 5), false, 3);
    CHECK(m2.at(2).value - m1.at(2).value == positive_part(i_function_coefficient(geo, 2, false).value));
    CHECK_FALSE((m2.at(2).value - m1.at(2).value).is_zero());
    CHECK(m2.at(1).value == m1.at(1).value);
    CHECK(m2.at(3).value == m1.at(3).value);

    CHECK_THROWS_AS(jwc_check(geo, rat(1, 2), rat(2, 5), 3), OnWall);
}
