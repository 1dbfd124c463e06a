#include "pvf/rational.hpp"

#include <cctype>
#include <numeric>

namespace pvf {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw Error("malformed rational: empty");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw Error("malformed rational: '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw Error("malformed rational: '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("malformed rational: '" + s + "'");
    if (q.get_den() == 0) throw Error("malformed rational: zero denominator");
    q.canonicalize();
    return q;
}

Rational pochhammer(const Rational& a, long k)
{
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

long gcd_long(long a, long b)
{
    return std::gcd(a, b);
}

long lcm_long(long a, long b)
{
    return std::lcm(a, b);
}

Integer denominator_lcm(const std::vector<Rational>& v)
{
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

std::vector<Rational> primitive_vector(std::vector<Rational> v, bool lead_last)
{
    Integer l = denominator_lcm(v);
    Integer g = 0;
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0) return v;
    int sign = 0;
    if (lead_last) {
        for (auto it = v.rbegin(); it != v.rend() && sign == 0; ++it) sign = sgn(*it);
    } else {
        for (auto it = v.begin(); it != v.end() && sign == 0; ++it) sign = sgn(*it);
    }
    if (sign < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

}  // namespace pvf
