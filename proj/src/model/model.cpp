#include "glsmx/model.hpp"

#include "glsmx/errors.hpp"

#include <numeric>

namespace glsmx {

std::string to_string(Phase p)
{
    return p == Phase::lg ? "LG" : "geometric";
}

Phase parse_phase(const std::string& s)
{
    if (s == "LG" || s == "lg") return Phase::lg;
    if (s == "geometric" || s == "geom") return Phase::geometric;
    throw ConfigError("unknown phase '" + s + "'");
}

bool on_wall(const BigRat& epsilon)
{
    return epsilon > 0 && epsilon.get_num() == 1;
}

GlsmModel make_model(std::vector<int> weights, int N, int d, Phase phase, const BigRat& epsilon)
{
    if (weights.empty()) throw ConfigError("model needs at least one weight");
    if (N <= 0) throw ConfigError("N must be positive");
    if (d <= 0) throw ConfigError("d must be positive");
    for (int w : weights) {
        if (w <= 0) throw ConfigError("weights must be positive");
        if (d % w != 0) throw ConfigError("weight " + std::to_string(w) + " does not divide d = " + std::to_string(d));
    }
    if (epsilon <= 0) throw ConfigError("epsilon must be positive");
    if (on_wall(epsilon)) throw OnWall("epsilon = " + to_string(epsilon) + " lies on a wall");
    GlsmModel m;
    m.M = static_cast<int>(weights.size());
    m.weights = std::move(weights);
    m.N = N;
    m.d = d;
    m.phase = phase;
    m.epsilon = epsilon;
    return m;
}

int d_of_mult(int d, const BigRat& m)
{
    BigRat dm = frac_bracket(m) * d;
    if (!is_integer(dm)) throw std::domain_error("multiplicity " + to_string(m) + " has denominator not dividing d");
    long k = to_long(dm.get_num());
    return d / std::gcd(static_cast<int>(k), d);
}

std::vector<Sector> list_sectors(const GlsmModel& model)
{
    std::vector<Sector> out;
    for (int m = 0; m < model.d; ++m) {
        Sector s;
        s.m = m;
        for (int i = 0; i < model.M; ++i)
            if ((m * model.weights[static_cast<std::size_t>(i)]) % model.d == 0) s.fixed_coords.push_back(i + 1);
        s.narrow = s.fixed_coords.empty();
        s.d_m = model.d / std::gcd(m, model.d);
        out.push_back(std::move(s));
    }
    return out;
}

BigRat frac_bracket(const BigRat& a)
{
    return frac_part(a);
}

namespace {

BigRat compat_value(const GlsmModel& model, int g, const BigRat& beta, const std::vector<BigRat>& mults, int n)
{
    BigRat sum = 0;
    for (const auto& m : mults) sum += m;
    if (model.phase == Phase::lg) return (-beta + 2 * g - 2 + n) / model.d - sum;
    return beta - sum;
}

}  // namespace

bool check_compatibility(const GlsmModel& model, int g, const BigRat& beta, const std::vector<BigRat>& mults)
{
    return is_integer(compat_value(model, g, beta, mults, static_cast<int>(mults.size())));
}

BigRat solve_last(const GlsmModel& model, int g, const BigRat& beta, const std::vector<BigRat>& mults)
{
    return frac_bracket(compat_value(model, g, beta, mults, static_cast<int>(mults.size()) + 1));
}

std::pair<BigRat, BigRat> graph_multiplicities(const GlsmModel& model, int beta)
{
    if (model.phase == Phase::lg)
        return {frac_bracket(BigRat(-beta - 1, 1) / model.d), frac_bracket(BigRat(beta + 1, 1) / model.d)};
    return {frac_bracket(BigRat(beta)), frac_bracket(BigRat(-beta))};
}

long euler_char(const OrbiBundleData& data)
{
    BigRat deg = data.coarse_degree;
    for (const auto& a : data.ages) deg -= a;
    if (!is_integer(deg))
        throw NonIntegralChi("degree " + to_string(data.coarse_degree) + " minus ages is " + to_string(deg));
    return 1 - data.genus + to_long(deg.get_num());
}

long virtual_dimension(const GlsmModel& model, int g, const std::vector<BigRat>& mults, const BigRat& beta)
{
    int n = static_cast<int>(mults.size());
    BigRat deg_l = model.phase == Phase::lg ? BigRat(2 * g - 2 + n - beta) / model.d : beta;
    BigRat deg_p = model.phase == Phase::lg ? beta : BigRat(-model.d * beta + 2 * g - 2 + n);
    long total = 4L * g - 4 + n;
    for (int w : model.weights) {
        OrbiBundleData x{g, deg_l * w, {}};
        for (const auto& m : mults) x.ages.push_back(frac_bracket(m * w));
        total += euler_char(x);
    }
    OrbiBundleData p{g, deg_p, {}};
    for (const auto& m : mults) p.ages.push_back(frac_bracket(-m * model.d));
    total += model.N * euler_char(p);
    return total;
}

BigRat choose_delta(const BigRat& epsilon)
{
    if (epsilon <= 0) throw ConfigError("epsilon must be positive");
    if (on_wall(epsilon)) throw OnWall("epsilon = " + to_string(epsilon) + " lies on a wall");
    BigInt kmax = floor_of(BigRat(1) / epsilon);
    if (kmax == 0) return rat(1, 2);
    BigRat gap = 1 - BigRat(kmax) * epsilon;
    return gap / 2;
}

}  // namespace glsmx
