#include "pvf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace pvf {

Poly::Poly(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::monomial(const Rational& c, int degree)
{
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Rational& Poly::lead() const
{
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

int Poly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c)
{
    if (c == 0) throw Error("division by zero");
    for (auto& x : c_) x /= c;
    return *this;
}

Poly operator-(Poly a)
{
    for (auto& x : a.c_) x = -x;
    return a;
}

Rational Poly::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

Poly Poly::compose(const Poly& inner) const
{
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= inner;
        r += Poly(*it);
    }
    return r;
}

Poly Poly::taylor_shift(const Rational& a) const
{
    // Horner with (x + a).
    std::vector<Rational> r(c_.size(), Rational(0));
    for (std::size_t n = c_.size(); n-- > 0;) {
        // r = r * (x + a) + c_n
        for (std::size_t k = c_.size() - 1; k > 0; --k) r[k] = r[k] * a + r[k - 1];
        r[0] = r[0] * a + c_[n];
    }
    return Poly(std::move(r));
}

Poly Poly::inflate(int k) const
{
    if (c_.empty()) return {};
    std::vector<Rational> r(static_cast<std::size_t>(degree() * k) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(r));
}

Poly Poly::reversed(int d) const
{
    if (d < degree()) throw Error("reversal degree below polynomial degree");
    std::vector<Rational> r(static_cast<std::size_t>(d) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[static_cast<std::size_t>(d) - i] = c_[i];
    return Poly(std::move(r));
}

Poly Poly::monic() const
{
    if (c_.empty()) return {};
    Poly r = *this;
    r /= lead();
    return r;
}

Poly Poly::primitive() const
{
    if (c_.empty()) return {};
    Poly r = *this;
    r.c_ = primitive_vector(r.c_, true);
    return r;
}

Poly Poly::pow(int e) const
{
    Poly r(1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string Poly::str(const std::string& var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (a == 1);
        if (!unit || i == 0) os << to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(da - db) + 1, Rational(0));
    Rational inv = 1 / b.lead();
    const auto& bc = b.coeffs();
    for (int k = da - db; k >= 0; --k) {
        Rational f = r[static_cast<std::size_t>(k + db)] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

bool divides(const Poly& b, const Poly& a)
{
    return divmod(a, b).second.is_zero();
}

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly to_zpoly(const Poly& p)
{
    Poly q = p.primitive();
    ZPoly z;
    z.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs()) z.push_back(c.get_num());
    return z;
}

void zprimitive(ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return;
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b over Z.
ZPoly prem(ZPoly a, const ZPoly& b)
{
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t da = a.size() - 1;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        std::size_t shift = da - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        ztrim(a);
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = to_zpoly(a);
    ZPoly y = to_zpoly(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return Poly(1);
        ZPoly r = prem(x, y);
        x = std::move(y);
        if (!r.empty()) zprimitive(r);
        y = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (auto& v : x) c.emplace_back(v);
    return Poly(std::move(c)).monic();
}

Poly lcm(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0) return p.monic();
    return exact_div(p, gcd(p, p.derivative())).monic();
}

int multiplicity(const Poly& p, const Poly& f)
{
    if (p.is_zero()) throw Error("multiplicity in zero polynomial");
    int k = 0;
    Poly q = p;
    for (;;) {
        auto [d, r] = divmod(q, f);
        if (!r.is_zero()) return k;
        q = std::move(d);
        ++k;
    }
}

namespace {

using cld = std::complex<long double>;

std::vector<cld> numeric_roots(const Poly& p)
{
    const int n = p.degree();
    std::vector<cld> roots;
    if (n < 1) return roots;
    std::vector<long double> a(static_cast<std::size_t>(n) + 1);
    Poly m = p.monic();
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = static_cast<long double>(m.coeff(i).get_d());
    long double radius = 0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::pow(std::fabs(a[static_cast<std::size_t>(i)]), 1.0L / (n - i)));
    radius = 2 * radius + 1;
    cld seed(0.4L, 0.9L);
    roots.resize(static_cast<std::size_t>(n));
    cld w = 1;
    for (int i = 0; i < n; ++i) {
        w *= seed;
        roots[static_cast<std::size_t>(i)] = w * radius / std::abs(w);
    }
    auto eval = [&](cld z) {
        cld r = 1;
        for (int i = n - 1; i >= 0; --i) r = r * z + a[static_cast<std::size_t>(i)];
        return r;
    };
    for (int it = 0; it < 2000; ++it) {
        long double change = 0;
        for (int i = 0; i < n; ++i) {
            cld num = eval(roots[static_cast<std::size_t>(i)]);
            cld den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
            if (std::abs(den) == 0) den = 1e-30L;
            cld d = num / den;
            roots[static_cast<std::size_t>(i)] -= d;
            change = std::max(change, std::abs(d));
        }
        if (change < 1e-30L) break;
    }
    return roots;
}

// Continued-fraction convergents of x with denominators up to `qmax`.
std::vector<Rational> convergents(long double x, long double qmax)
{
    std::vector<Rational> out;
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    long double y = x;
    for (int i = 0; i < 64; ++i) {
        long double fa = std::floor(y);
        if (std::fabs(fa) > 1e18L) break;
        Integer a(static_cast<double>(fa));
        Integer h2 = a * h1 + h0;
        Integer k2 = a * k1 + k0;
        if (k2.get_d() > static_cast<double>(qmax)) break;
        out.emplace_back(h2, k2);
        out.back().canonicalize();
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        long double frac = y - fa;
        if (std::fabs(frac) < 1e-15L) break;
        y = 1 / frac;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p)
{
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() < 1) return out;
    Poly q = p;
    int v = q.valuation();
    if (v > 0) {
        out.emplace_back(Rational(0), v);
        q = exact_div(q, Poly::monomial(1, v));
    }
    Poly sf = squarefree_part(q).primitive();
    if (sf.degree() < 1) return out;
    long double qmax = std::fabs(static_cast<long double>(sf.lead().get_d())) + 1;
    std::vector<Rational> found;
    for (const cld& z : numeric_roots(sf)) {
        if (std::fabs(z.imag()) > 1e-6L * (1 + std::abs(z))) continue;
        for (const Rational& c : convergents(z.real(), qmax)) {
            if (std::fabs(static_cast<long double>(c.get_d()) - z.real()) > 1e-6L * (1 + std::abs(z))) continue;
            if (sf(c) == 0 && std::find(found.begin(), found.end(), c) == found.end()) {
                found.push_back(c);
                break;
            }
        }
    }
    for (const auto& r : found) {
        int m = multiplicity(q, Poly(std::vector<Rational>{-r, Rational(1)}));
        out.emplace_back(r, m);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Poly remove_rational_roots(const Poly& p)
{
    Poly q = p;
    for (const auto& [r, m] : rational_roots(p))
        q = exact_div(q, Poly(std::vector<Rational>{-r, Rational(1)}).pow(m));
    return q;
}

}  // namespace pvf
