#include "spinrep/arith.hpp"

#include <stdexcept>

namespace spinrep {

Integer fallingFactorial(long n, long k)
{
    if (k < 0)
        throw std::invalid_argument("fallingFactorial: negative k");
    Integer r = 1;
    for (long i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer doubleFactorial(long n)
{
    if (n < -1)
        throw std::invalid_argument("doubleFactorial: argument below -1");
    Integer r = 1;
    for (long i = n; i > 1; i -= 2)
        r *= i;
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string toString(const Rational& q)
{
    return q.get_str();
}

std::string toString(const Integer& z)
{
    return z.get_str();
}

Rational parseRational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

bool isInteger(const Rational& q)
{
    return q.get_den() == 1;
}

Rational powerOfTwo(long e)
{
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    if (e >= 0)
        return Rational(p);
    return Rational(Integer(1), p);
}

} // namespace spinrep
