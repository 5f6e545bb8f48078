#ifndef SPINREP_ARITH_HPP
#define SPINREP_ARITH_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace spinrep {

using Integer = mpz_class;
using Rational = mpq_class;

// n (n-1) ... (n-k+1); zero when k > n >= 0.
Integer fallingFactorial(long n, long k);
Integer factorial(long n);
// (2m-1)!! style double factorial of an odd or even argument; (-1)!! = 1.
Integer doubleFactorial(long n);
Integer binomial(long n, long k);

// "a" or "a/b" in lowest terms.
std::string toString(const Rational& q);
std::string toString(const Integer& z);
Rational parseRational(const std::string& text);

bool isInteger(const Rational& q);

// 2^e for possibly negative e.
Rational powerOfTwo(long e);

} // namespace spinrep

#endif // SPINREP_ARITH_HPP
