#include "glsmx/bigrat.hpp"

#include "glsmx/errors.hpp"

#include <functional>
#include <stdexcept>

namespace glsmx {

BigRat rat(long num, long den)
{
    if (den == 0) throw DivisionByNonUnit("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat parse_rat(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\n");
    std::size_t e = s.find_last_not_of(" \t\n");
    if (b == std::string::npos) throw ConfigError("empty rational literal");
    std::string t = s.substr(b, e - b + 1);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    BigRat r;
    if (r.set_str(t, 10) != 0) throw ConfigError("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const BigRat& r)
{
    return r.get_str(10);
}

bool is_integer(const BigRat& r)
{
    return r.get_den() == 1;
}

BigInt floor_of(const BigRat& r)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ceil_of(const BigRat& r)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigRat frac_part(const BigRat& r)
{
    BigRat f = r - BigRat(floor_of(r));
    f.canonicalize();
    return f;
}

BigRat factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRat(f);
}

BigRat pow(const BigRat& r, long e)
{
    if (e < 0) {
        if (r == 0) throw DivisionByNonUnit("0 raised to a negative power");
        return pow(BigRat(1) / r, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
    BigRat out(n, d);
    out.canonicalize();
    return out;
}

std::size_t hash_value(const BigRat& r)
{
    return std::hash<std::string>{}(r.get_str(16));
}

long to_long(const BigInt& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return z.get_si();
}

long to_long_exact(const BigRat& r)
{
    if (!is_integer(r)) throw std::domain_error("expected an integer, got " + to_string(r));
    return to_long(r.get_num());
}

}  // namespace glsmx
