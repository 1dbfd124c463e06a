#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pvf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Every failure raised by the library. The message is the user-facing text
/// (e.g. "not invertible", "truncation deficit: need order 42").
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// Rising factorial (a)_k.
Rational pochhammer(const Rational& a, long k);

Integer factorial(long n);

Integer binomial(long n, long k);

bool is_integer(const Rational& q);

/// a/b in canonical form (mpq_class(a, b) alone does not reduce).
inline Rational frac(long a, long b)
{
    Rational q(a, b);
    q.canonicalize();
    return q;
}

/// Floor division for signed longs.
inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

long gcd_long(long a, long b);
long lcm_long(long a, long b);

/// Least common multiple of all denominators.
Integer denominator_lcm(const std::vector<Rational>& v);

/// Scale v to integers with gcd 1; the first nonzero entry (from the back if
/// `lead_last`) is made positive. Zero vectors are returned unchanged.
std::vector<Rational> primitive_vector(std::vector<Rational> v, bool lead_last = true);

}  // namespace pvf
