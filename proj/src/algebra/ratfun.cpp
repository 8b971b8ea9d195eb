#include "glsmx/ratfun.hpp"

#include "glsmx/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace glsmx {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den)
{
    if (den_.is_zero()) throw DivisionByNonUnit("rational function with zero denominator");
    normalize();
}

RatFun RatFun::monomial(const BigRat& c, int l, int z)
{
    if (l >= 0 && z >= 0) return RatFun(Poly::monomial(c, l, z));
    return RatFun(Poly::monomial(c, l > 0 ? l : 0, z > 0 ? z : 0),
                  Poly::monomial(1, l < 0 ? -l : 0, z < 0 ? -z : 0));
}

void RatFun::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    // Scale so that den is a primitive integer polynomial with positive lead.
    BigInt l = 1, c = 0;
    for (const auto& [m, v] : den_.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& [m, v] : den_.terms()) {
        BigInt n = v.get_num() * (l / v.get_den());
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
    }
    BigRat s(l, c);
    s.canonicalize();
    if (den_.lead_coeff() < 0) s = -s;
    if (s != 1) {
        num_ *= s;
        den_ *= s;
    }
}

BigRat RatFun::constant_value() const
{
    if (!is_constant()) throw std::domain_error("rational function is not constant: " + to_string());
    return num_.constant_term() / den_.constant_term();
}

std::optional<int> RatFun::homogeneous_degree() const
{
    if (num_.is_zero()) return std::nullopt;
    int a = num_.homogeneous_degree(), b = den_.homogeneous_degree();
    if (a < 0 || b < 0) return std::nullopt;
    return a - b;
}

RatFun RatFun::operator-() const
{
    RatFun r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (o.den_.is_constant()) {
        num_ += o.num_ * den_ * (1 / o.den_.constant_term());
    } else if (den_.is_constant()) {
        num_ = num_ * o.den_ * (1 / den_.constant_term()) + o.num_;
        den_ = o.den_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o)
{
    return *this += -o;
}

RatFun& RatFun::operator*=(const RatFun& o)
{
    if (is_zero() || o.is_zero()) return *this = RatFun();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_ * (1 / (den_.constant_term() * o.den_.constant_term()));
        den_ = Poly(1);
        normalize();
        return *this;
    }
    // Cross-cancel before multiplying to keep the gcd work small.
    Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    Poly a = g1.is_constant() ? num_ : num_.exact_div(g1);
    Poly bd = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
    Poly c = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
    Poly ad = g2.is_constant() ? den_ : den_.exact_div(g2);
    num_ = a * c;
    den_ = ad * bd;
    normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o)
{
    return *this *= o.inverse();
}

RatFun RatFun::inverse() const
{
    if (is_zero()) throw DivisionByNonUnit("inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const
{
    if (e < 0) return inverse().pow(-e);
    RatFun r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    r.normalize();
    return r;
}

std::string RatFun::to_string() const
{
    if (den_.is_constant()) {
        if (den_.constant_term() == 1) return num_.to_string();
        return RatFun(num_ * (1 / den_.constant_term())).to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

// Recursive-descent parser over the small grammar emitted by to_string.
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RatFun parse()
    {
        RatFun r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ConfigError("cannot parse rational function '" + s_ + "': " + why);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFun expr()
    {
        RatFun r;
        bool neg = eat('-');
        if (!neg) eat('+');
        r = neg ? -term() : term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFun term()
    {
        RatFun r = power();
        for (;;) {
            if (eat('*'))
                r *= power();
            else if (eat('/'))
                r /= power();
            else
                return r;
        }
    }

    RatFun power()
    {
        RatFun b = atom();
        if (eat('^')) {
            skip();
            std::size_t st = pos_;
            if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("missing exponent");
            b = b.pow(std::stol(s_.substr(st, pos_ - st)));
        }
        return b;
    }

    RatFun atom()
    {
        skip();
        if (eat('(')) {
            RatFun r = expr();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        if (s_.compare(pos_, 6, "lambda") == 0) {
            pos_ += 6;
            return RatFun::lambda();
        }
        if (pos_ < s_.size() && s_[pos_] == 'z') {
            ++pos_;
            return RatFun::z();
        }
        std::size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("unexpected character");
        return RatFun(BigRat(BigInt(s_.substr(st, pos_ - st))));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFun parse_ratfun(const std::string& s)
{
    return Parser(s).parse();
}

}  // namespace glsmx
