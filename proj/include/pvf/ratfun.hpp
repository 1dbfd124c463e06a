#pragma once

#include "pvf/poly.hpp"

#include <string>

namespace pvf {

/// Univariate rational function num/den over Q in lowest terms with a monic
/// denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
    RationalFunction(const Poly& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;
    Rational operator()(const Rational& x) const;
    /// f(g) for a polynomial g.
    RationalFunction compose(const Poly& inner) const;
    /// f(1/x).
    RationalFunction invert_variable() const;
    RationalFunction taylor_shift(const Rational& a) const;
    RationalFunction pow(int e) const;

    /// Order at infinity: deg den - deg num (large for zero).
    int order_at_infinity() const;

    std::string str(const std::string& var = "t") const;

private:
    Poly num_;
    Poly den_;
};

}  // namespace pvf
