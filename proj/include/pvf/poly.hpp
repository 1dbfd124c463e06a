#pragma once

#include "pvf/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pvf {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are never stored, so the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, int degree);
    static Poly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const;

    /// Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly& operator/=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational operator()(const Rational& x) const;
    Poly derivative() const;
    Poly compose(const Poly& inner) const;
    /// p(x + a).
    Poly taylor_shift(const Rational& a) const;
    /// p(x^k).
    Poly inflate(int k) const;
    /// x^d p(1/x); requires d >= degree().
    Poly reversed(int d) const;
    Poly monic() const;
    /// Integer coefficients, gcd 1, positive leading coefficient.
    Poly primitive() const;
    Poly pow(int e) const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division over Q; throws on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b when b divides a exactly; throws otherwise.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& b, const Poly& a);

/// Monic gcd (zero if both are zero); primitive PRS over Z internally.
Poly gcd(const Poly& a, const Poly& b);

Poly lcm(const Poly& a, const Poly& b);

/// Squarefree part, monic.
Poly squarefree_part(const Poly& p);

/// Largest k with f^k | p (p nonzero, deg f >= 1).
int multiplicity(const Poly& p, const Poly& f);

/// Rational roots with multiplicity, ascending. Candidates are located
/// numerically and every reported root is verified exactly.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

/// p divided by all linear factors of its rational roots (to multiplicity).
Poly remove_rational_roots(const Poly& p);

}  // namespace pvf
