#include "pvf/ratfun.hpp"

#include <climits>

namespace pvf {

RationalFunction::RationalFunction(const Poly& num, const Poly& den)
{
    if (den.is_zero()) throw Error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
    Rational l = den_.lead();
    num_ /= l;
    den_ /= l;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        Poly g = gcd(den_, o.den_);
        Poly a = exact_div(o.den_, g);
        Poly b = exact_div(den_, g);
        *this = RationalFunction(num_ * a + o.num_ * b, den_ * a);
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    Rational l = d.lead();
    num_ = n * (1 / l);
    den_ = d * (1 / l);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero()) throw Error("rational function division by zero");
    return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::operator()(const Rational& x) const
{
    Rational d = den_(x);
    if (d == 0) throw Error("rational function evaluated at a pole");
    return num_(x) / d;
}

RationalFunction RationalFunction::compose(const Poly& inner) const
{
    return RationalFunction(num_.compose(inner), den_.compose(inner));
}

RationalFunction RationalFunction::invert_variable() const
{
    int dn = num_.degree();
    int dd = den_.degree();
    if (num_.is_zero()) return {};
    // num(1/x)/den(1/x) = x^{dd-dn} rev(num)/rev(den)
    Poly n = num_.reversed(dn);
    Poly d = den_.reversed(dd);
    if (dd >= dn) n *= Poly::monomial(1, dd - dn);
    else d *= Poly::monomial(1, dn - dd);
    return RationalFunction(n, d);
}

RationalFunction RationalFunction::taylor_shift(const Rational& a) const
{
    return RationalFunction(num_.taylor_shift(a), den_.taylor_shift(a));
}

RationalFunction RationalFunction::pow(int e) const
{
    if (e < 0) return RationalFunction(1) / pow(-e);
    return RationalFunction(num_.pow(e), den_.pow(e));
}

int RationalFunction::order_at_infinity() const
{
    if (num_.is_zero()) return INT_MAX / 4;
    return den_.degree() - num_.degree();
}

std::string RationalFunction::str(const std::string& var) const
{
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace pvf
