#include "pvf/diffop.hpp"

#include "pvf/linalg.hpp"
#include "pvf/parallel.hpp"

#include <algorithm>
#include <map>

namespace pvf {

DiffOperator::DiffOperator(std::string var, std::vector<RationalFunction> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs))
{
    trim();
}

DiffOperator DiffOperator::from_polys(std::string var, const std::vector<Poly>& coeffs)
{
    std::vector<RationalFunction> c(coeffs.begin(), coeffs.end());
    return DiffOperator(std::move(var), std::move(c));
}

DiffOperator DiffOperator::D(std::string var, int k)
{
    std::vector<RationalFunction> c(static_cast<std::size_t>(k) + 1);
    c.back() = RationalFunction(1);
    return DiffOperator(std::move(var), std::move(c));
}

DiffOperator DiffOperator::scalar(std::string var, const RationalFunction& f)
{
    return DiffOperator(std::move(var), {f});
}

void DiffOperator::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o)
{
    if (o.is_zero()) return *this;
    if (!is_zero() && o.var_ != var_) throw Error("operator variables differ: " + var_ + " vs " + o.var_);
    if (is_zero()) var_ = o.var_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator operator-(const DiffOperator& a)
{
    DiffOperator r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOperator operator*(const RationalFunction& f, const DiffOperator& a)
{
    DiffOperator r = a;
    for (auto& c : r.c_) c *= f;
    r.trim();
    return r;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b)
{
    if (a.is_zero() || b.is_zero()) return DiffOperator(a.var_, {});
    if (a.var_ != b.var_) throw Error("operator variables differ: " + a.var_ + " vs " + b.var_);
    const int na = a.order();
    const int nb = b.order();
    // derivatives of b's coefficients up to order na
    std::vector<std::vector<RationalFunction>> db(static_cast<std::size_t>(nb) + 1);
    for (int j = 0; j <= nb; ++j) {
        auto& d = db[static_cast<std::size_t>(j)];
        d.push_back(b.c_[static_cast<std::size_t>(j)]);
        for (int k = 1; k <= na; ++k) d.push_back(d.back().derivative());
    }
    std::vector<RationalFunction> out(static_cast<std::size_t>(na + nb) + 1);
    for (int i = 0; i <= na; ++i) {
        const auto& ai = a.c_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int k = 0; k <= i; ++k) {
            Rational binom(binomial(i, k));
            for (int j = 0; j <= nb; ++j) {
                const auto& d = db[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (d.is_zero()) continue;
                out[static_cast<std::size_t>(i - k + j)] += ai * d * RationalFunction(binom);
            }
        }
    }
    return DiffOperator(a.var_, std::move(out));
}

DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b) { return a * b; }

DiffOperator DiffOperator::monic() const
{
    if (is_zero()) throw Error("zero operator has no leading coefficient");
    return (RationalFunction(1) / leading()) * *this;
}

std::vector<Poly> DiffOperator::cleared() const
{
    if (is_zero()) return {};
    Poly l(1);
    for (const auto& c : c_) l = lcm(l, c.den());
    std::vector<Poly> p;
    p.reserve(c_.size());
    for (const auto& c : c_) p.push_back(c.num() * exact_div(l, c.den()));
    Poly g;
    for (const auto& q : p) g = gcd(g, q);
    std::vector<Rational> all;
    for (auto& q : p) {
        q = exact_div(q, g);
        all.insert(all.end(), q.coeffs().begin(), q.coeffs().end());
    }
    // common integer scaling with the top coefficient's leading term positive
    auto scaled = primitive_vector(all, true);
    Rational factor = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] != 0) {
            factor = scaled[i] / all[i];
            break;
        }
    for (auto& q : p) q *= factor;
    return p;
}

DiffOperator DiffOperator::canonical() const { return from_polys(var_, cleared()); }

bool DiffOperator::same_up_to_scalar(const DiffOperator& o) const
{
    if (var_ != o.var_ && !is_zero() && !o.is_zero()) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return order() == o.order() && cleared() == o.cleared();
}

DiffOperator DiffOperator::renamed(std::string var) const
{
    DiffOperator r = *this;
    r.var_ = std::move(var);
    return r;
}

std::string DiffOperator::str() const
{
    if (is_zero()) return "0";
    std::string out;
    for (int i = order(); i >= 0; --i) {
        const auto& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.str(var_) + ")";
        if (i >= 1) out += "*D";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<DiffOperator, DiffOperator> right_divide(const DiffOperator& a, const DiffOperator& b)
{
    if (b.is_zero()) throw Error("division by the zero operator");
    DiffOperator q(b.variable(), {});
    DiffOperator r = a;
    while (!r.is_zero() && r.order() >= b.order()) {
        int k = r.order() - b.order();
        DiffOperator term = (r.leading() / b.leading()) * DiffOperator::D(b.variable(), k);
        q += term;
        DiffOperator prev_order_check = r;
        r -= term * b;
        if (!r.is_zero() && r.order() >= prev_order_check.order()) throw Error("right division did not reduce order");
    }
    return {q, r};
}

Series op_apply(const DiffOperator& L, const Series& y)
{
    if (L.is_zero()) return Series::zero_to(y.variable(), Rational(Series::kExact));
    auto p = L.cleared();
    Series acc(y.variable(), 1);
    bool first = true;
    Series d = y;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) d = d.derivative();
        if (p[i].is_zero()) continue;
        Series term = Series::from_poly(y.variable(), p[i]) * d;
        if (first) {
            acc = term;
            first = false;
        } else {
            acc += term;
        }
    }
    return acc;
}

DiffOperator symmetric_power(const DiffOperator& L, int N)
{
    if (L.order() != 2) throw Error("symmetric power needs a second-order operator");
    if (N < 1) throw Error("symmetric power exponent must be positive");
    const RationalFunction p = -L.coeff(1) / L.coeff(2);
    const RationalFunction q = -L.coeff(0) / L.coeff(2);
    const std::size_t dim = static_cast<std::size_t>(N) + 1;
    // y^{N-k} y'^k basis; D m_k = (N-k) m_{k+1} + k p m_k + k q m_{k-1}
    std::vector<std::vector<RationalFunction>> vecs;
    std::vector<RationalFunction> v(dim);
    v[0] = RationalFunction(1);
    vecs.push_back(v);
    for (int step = 0; step <= N; ++step) {
        std::vector<RationalFunction> w(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            if (v[k].is_zero()) continue;
            w[k] += v[k].derivative();
            long kk = static_cast<long>(k);
            if (k + 1 < dim) w[k + 1] += v[k] * RationalFunction(N - kk);
            if (k > 0) {
                w[k] += v[k] * p * RationalFunction(kk);
                w[k - 1] += v[k] * q * RationalFunction(kk);
            }
        }
        v = std::move(w);
        vecs.push_back(v);
    }
    auto c = first_dependency(vecs);
    if (c.empty()) throw Error("symmetric power: no dependency found");
    return DiffOperator(L.variable(), std::move(c));
}

namespace {

// Coefficient vectors of D^k mod_right L for k = 0..kmax.
std::vector<std::vector<RationalFunction>> power_remainders(const DiffOperator& L, int kmax)
{
    const int n = L.order();
    std::vector<RationalFunction> red(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) red[static_cast<std::size_t>(j)] = -L.coeff(j) / L.leading();
    std::vector<std::vector<RationalFunction>> out;
    std::vector<RationalFunction> cur(static_cast<std::size_t>(n));
    if (n > 0) cur[0] = RationalFunction(1);
    for (int k = 0; k <= kmax; ++k) {
        out.push_back(cur);
        if (n == 0) continue;
        std::vector<RationalFunction> next(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            const auto& c = cur[static_cast<std::size_t>(j)];
            if (c.is_zero()) continue;
            next[static_cast<std::size_t>(j)] += c.derivative();
            if (j + 1 < n) {
                next[static_cast<std::size_t>(j + 1)] += c;
            } else {
                for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] += c * red[static_cast<std::size_t>(i)];
            }
        }
        cur = std::move(next);
    }
    return out;
}

// Right remainder of M by L from precomputed power remainders.
std::vector<RationalFunction> remainder_vector(const DiffOperator& M,
                                               const std::vector<std::vector<RationalFunction>>& pr, int n)
{
    std::vector<RationalFunction> r(static_cast<std::size_t>(n));
    for (int k = 0; k <= M.order(); ++k) {
        const auto& m = M.coeff(k);
        if (m.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            const auto& e = pr.at(static_cast<std::size_t>(k))[static_cast<std::size_t>(j)];
            if (!e.is_zero()) r[static_cast<std::size_t>(j)] += m * e;
        }
    }
    return r;
}

}  // namespace

DiffOperator lclm(const DiffOperator& a, const DiffOperator& b)
{
    if (a.is_zero() || b.is_zero()) throw Error("lclm of the zero operator");
    if (a.variable() != b.variable()) throw Error("operator variables differ");
    const int na = a.order();
    const int nb = b.order();
    auto ra = power_remainders(a, na + nb);
    auto rb = power_remainders(b, na + nb);
    std::vector<std::vector<RationalFunction>> vecs;
    for (int k = 0; k <= na + nb; ++k) {
        std::vector<RationalFunction> v = ra[static_cast<std::size_t>(k)];
        v.insert(v.end(), rb[static_cast<std::size_t>(k)].begin(), rb[static_cast<std::size_t>(k)].end());
        vecs.push_back(std::move(v));
    }
    auto c = first_dependency(vecs);
    if (c.empty()) throw Error("lclm: no dependency found");
    return DiffOperator(a.variable(), std::move(c));
}

namespace {

// Sum c_i(x) T_i with T_0 = 1, T_{i+1} = step * T_i.
DiffOperator rebuild(const std::vector<RationalFunction>& c, const DiffOperator& step, const std::string& var)
{
    DiffOperator T = DiffOperator::scalar(var, RationalFunction(1));
    DiffOperator out(var, {});
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) T = step * T;
        if (!c[i].is_zero()) out += c[i] * T;
    }
    return out;
}

}  // namespace

DiffOperator op_substitute_power(const DiffOperator& L, int k, const std::string& new_var)
{
    if (k < 1) throw Error("substitution power must be positive");
    std::vector<RationalFunction> c;
    Poly inner = Poly::monomial(1, k);
    for (const auto& f : L.coefficients()) c.push_back(f.compose(inner));
    // d/dx = 1/(k y^{k-1}) d/dy
    RationalFunction g(Poly(1), Poly::monomial(k, k - 1));
    DiffOperator step(new_var, {RationalFunction(0), g});
    return rebuild(c, step, new_var);
}

DiffOperator op_invert_variable(const DiffOperator& L)
{
    std::vector<RationalFunction> c;
    for (const auto& f : L.coefficients()) c.push_back(f.invert_variable());
    // x = 1/u: d/dx = -u^2 d/du
    DiffOperator step(L.variable(), {RationalFunction(0), RationalFunction(Poly::monomial(-1, 2))});
    return rebuild(c, step, L.variable());
}

DiffOperator op_shift(const DiffOperator& L, const Rational& x0, const std::string& new_var)
{
    std::vector<RationalFunction> c;
    for (const auto& f : L.coefficients()) c.push_back(f.taylor_shift(x0));
    return DiffOperator(new_var, std::move(c));
}

DiffOperator op_conjugate(const DiffOperator& L, const RationalFunction& r)
{
    DiffOperator step(L.variable(), {r, RationalFunction(1)});
    return rebuild(L.coefficients(), step, L.variable());
}

std::vector<Series> taylor_basis(const DiffOperator& L, const Rational& x0, long order, const std::string& local_var)
{
    DiffOperator S = op_shift(L, x0, local_var);
    auto p = S.cleared();
    const int n = S.order();
    if (n < 1) throw Error("taylor basis needs a positive order");
    const Rational lead0 = p.back().coeff(0);
    if (lead0 == 0) throw Error("not an ordinary point: " + to_string(x0));
    const long total = std::max<long>(order, n);
    std::vector<Series> out;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> a(static_cast<std::size_t>(total), Rational(0));
        a[static_cast<std::size_t>(j)] = 1;
        // coefficient of x^k in L y fixes a_{k+n}
        for (long k = 0; k + n < total; ++k) {
            Rational s = 0;
            for (int i = 0; i <= n; ++i) {
                const auto& pi = p[static_cast<std::size_t>(i)];
                for (int l = 0; l <= pi.degree(); ++l) {
                    long m = k - l + i;  // index of a
                    if (k - l < 0) break;
                    if (i == n && l == 0) continue;
                    const Rational& c = pi.coeffs()[static_cast<std::size_t>(l)];
                    if (c == 0 || a[static_cast<std::size_t>(m)] == 0) continue;
                    Rational ff = 1;
                    for (int q = 0; q < i; ++q) ff *= (m - q);
                    s += c * ff * a[static_cast<std::size_t>(m)];
                }
            }
            Rational ff = 1;
            for (int q = 0; q < n; ++q) ff *= (k + n - q);
            a[static_cast<std::size_t>(k + n)] = -s / (lead0 * ff);
        }
        out.push_back(Series::from_coeffs(local_var, 1, 0, std::move(a), total));
    }
    return out;
}

std::string Place::str(const std::string& var) const
{
    switch (kind) {
    case Kind::Rational: return var + "=" + to_string(value);
    case Kind::Infinity: return var + "=infinity";
    case Kind::Algebraic: return "roots of " + minimal.str(var);
    }
    return "";
}

namespace {

// Q[x]/(f) for a squarefree f. A zero divisor exposes a factorization of f
// and is reported through Split.
struct Split {
    Poly factor;
};

struct NumberField {
    Poly f;

    Poly reduce(const Poly& p) const { return divmod(p, f).second; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }

    bool is_zero(const Poly& a) const
    {
        Poly r = reduce(a);
        if (r.is_zero()) return true;
        Poly g = gcd(r, f);
        if (g.degree() > 0) throw Split{g};
        return false;
    }

    Poly inv(const Poly& a) const
    {
        // extended Euclid: s*a = 1 mod f
        Poly r0 = f, r1 = reduce(a);
        Poly s0(0), s1(1);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Poly s = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.degree() > 0) throw Split{r0.monic()};
        if (r0.is_zero()) throw Error("not invertible");
        return reduce(s0 * Poly(1 / r0.coeff(0)));
    }
};

// Local expansion data of a cleared operator at a root of f (or at 0 for
// f = x): P[i][k] = p_i^{(k)}(alpha) / k!.
struct LocalData {
    NumberField K;
    std::vector<std::vector<Poly>> P;
    std::vector<long> val;  // -1 for the zero coefficient
};

LocalData local_data(const std::vector<Poly>& p, const Poly& f)
{
    LocalData d{NumberField{f}, {}, {}};
    for (const auto& pi : p) {
        std::vector<Poly> col;
        Poly q = pi;
        Rational kf = 1;
        for (int k = 0; k <= pi.degree(); ++k) {
            if (k > 0) {
                q = q.derivative();
                kf *= k;
            }
            col.push_back(d.K.reduce(q) * (1 / kf));
        }
        long v = -1;
        for (std::size_t k = 0; k < col.size(); ++k)
            if (!d.K.is_zero(col[k])) {
                v = static_cast<long>(k);
                break;
            }
        d.val.push_back(v);
        d.P.push_back(std::move(col));
    }
    return d;
}

Poly falling(int i)
{
    Poly r(1);
    for (int q = 0; q < i; ++q) r *= Poly(std::vector<Rational>{Rational(-q), Rational(1)});
    return r;
}

// g_j(m) as a polynomial in m with coefficients in K.
using KPoly = std::vector<Poly>;

KPoly g_poly(const LocalData& d, long mu, long j)
{
    KPoly out;
    for (std::size_t i = 0; i < d.P.size(); ++i) {
        long idx = static_cast<long>(i) + mu + j;
        if (idx < 0 || idx >= static_cast<long>(d.P[i].size())) continue;
        const Poly& c = d.P[i][static_cast<std::size_t>(idx)];
        if (c.is_zero()) continue;
        Poly ff = falling(static_cast<int>(i));
        if (out.size() < ff.coeffs().size()) out.resize(ff.coeffs().size());
        for (std::size_t k = 0; k < ff.coeffs().size(); ++k) out[k] += c * ff.coeffs()[k];
    }
    for (auto& c : out) c = d.K.reduce(c);
    return out;
}

Poly k_eval(const KPoly& g, const Rational& m, const NumberField& K)
{
    Poly s;
    Rational pw = 1;
    for (const auto& c : g) {
        if (!c.is_zero()) s += c * pw;
        pw *= m;
    }
    return K.reduce(s);
}

void analyse_local(const std::vector<Poly>& p, const Poly& f, ExponentReport& rep)
{
    const int n = static_cast<int>(p.size()) - 1;
    LocalData d = local_data(p, f);
    long mu = LONG_MAX;
    for (int i = 0; i <= n; ++i)
        if (d.val[static_cast<std::size_t>(i)] >= 0) mu = std::min(mu, d.val[static_cast<std::size_t>(i)] - i);
    const long vn = d.val[static_cast<std::size_t>(n)];
    rep.ordinary = (vn == 0);
    rep.regular = (mu == vn - n);
    if (!rep.regular) return;
    KPoly ind = g_poly(d, mu, 0);
    // rational roots are the common roots of the coordinate polynomials
    const int fd = f.degree();
    Poly common;
    for (int j = 0; j < fd; ++j) {
        std::vector<Rational> coords;
        for (const auto& c : ind) coords.push_back(c.coeff(j));
        common = gcd(common, Poly(coords));
    }
    for (const auto& [root, mult] : rational_roots(common))
        for (int k = 0; k < mult; ++k) rep.exponents.push_back(root);
    if (static_cast<int>(rep.exponents.size()) < n) {
        if (fd == 1) {
            std::vector<Rational> coords;
            for (const auto& c : ind) coords.push_back(c.coeff(0));
            rep.irrational_part = remove_rational_roots(Poly(coords)).monic().str("r");
        } else {
            rep.irrational_part = "degree " + std::to_string(n - static_cast<int>(rep.exponents.size())) +
                                  " over Q[x]/(" + f.str("x") + ")";
        }
        return;
    }
    if (rep.ordinary) return;
    // apparent: distinct nonnegative integer exponents and no logarithms
    for (std::size_t i = 0; i < rep.exponents.size(); ++i) {
        if (!is_integer(rep.exponents[i]) || rep.exponents[i] < 0) return;
        if (i > 0 && rep.exponents[i] == rep.exponents[i - 1]) return;
    }
    const long rho0 = rep.exponents.front().get_num().get_si();
    const long span = rep.exponents.back().get_num().get_si() - rho0 + 2 * n + 10;
    std::vector<KPoly> g;
    for (long j = 0; j <= span; ++j) g.push_back(g_poly(d, mu, j));
    // a_k as linear forms in the free coefficients at the resonances
    std::vector<std::vector<Poly>> a;
    a.push_back(std::vector<Poly>(static_cast<std::size_t>(n)));
    a[0][0] = Poly(1);
    int used = 1;
    for (long K = 1; K <= span; ++K) {
        std::vector<Poly> rhs(static_cast<std::size_t>(n));
        for (long j = 1; j <= K; ++j) {
            if (g[static_cast<std::size_t>(j)].empty()) continue;
            Poly gv = k_eval(g[static_cast<std::size_t>(j)], Rational(rho0 + K - j), d.K);
            if (gv.is_zero()) continue;
            const auto& prev = a[static_cast<std::size_t>(K - j)];
            for (int s = 0; s < n; ++s)
                if (!prev[static_cast<std::size_t>(s)].is_zero())
                    rhs[static_cast<std::size_t>(s)] -= d.K.mul(gv, prev[static_cast<std::size_t>(s)]);
        }
        Poly g0 = k_eval(g[0], Rational(rho0 + K), d.K);
        std::vector<Poly> ak(static_cast<std::size_t>(n));
        if (d.K.is_zero(g0)) {
            for (const auto& c : rhs)
                if (!d.K.is_zero(c)) return;  // logarithmic
            if (used < n) ak[static_cast<std::size_t>(used)] = Poly(1);
            ++used;
        } else {
            Poly inv = d.K.inv(g0);
            for (int s = 0; s < n; ++s) ak[static_cast<std::size_t>(s)] = d.K.mul(rhs[static_cast<std::size_t>(s)], inv);
        }
        a.push_back(std::move(ak));
    }
    rep.apparent = true;
}

ExponentReport analyse_place(const DiffOperator& L, const Place& point)
{
    ExponentReport rep;
    rep.point = point;
    switch (point.kind) {
    case Place::Kind::Rational:
        analyse_local(op_shift(L, point.value, L.variable()).cleared(), Poly::x(), rep);
        break;
    case Place::Kind::Infinity:
        analyse_local(op_invert_variable(L).cleared(), Poly::x(), rep);
        break;
    case Place::Kind::Algebraic:
        analyse_local(L.cleared(), point.minimal, rep);
        break;
    }
    return rep;
}

}  // namespace

ExponentReport indicial_exponents(const DiffOperator& L, const Place& point)
{
    if (L.order() < 1) throw Error("indicial exponents need a positive order");
    try {
        return analyse_place(L, point);
    } catch (const Split& s) {
        throw Error("reducible point polynomial: factor " + s.factor.str(L.variable()));
    }
}

FuchsianReport fuchsian_analysis(const DiffOperator& L)
{
    if (L.order() < 1) throw Error("fuchsian analysis needs a positive order");
    FuchsianReport out;
    auto p = L.cleared();
    Poly lead = squarefree_part(p.back());
    std::vector<Place> places;
    for (const auto& [root, mult] : rational_roots(lead)) {
        (void)mult;
        places.push_back(Place::at(root));
    }
    std::vector<Poly> pending;
    Poly rest = remove_rational_roots(lead).monic();
    if (rest.degree() > 0) pending.push_back(rest);
    std::vector<ExponentReport> algebraic;
    while (!pending.empty()) {
        Poly f = pending.back();
        pending.pop_back();
        try {
            algebraic.push_back(analyse_place(L, Place::roots_of(f)));
        } catch (const Split& s) {
            Poly g = s.factor.monic();
            pending.push_back(g);
            pending.push_back(exact_div(f, g).monic());
        }
    }
    for (const auto& pl : places) out.singular_points.push_back(analyse_place(L, pl));
    std::sort(algebraic.begin(), algebraic.end(), [](const ExponentReport& a, const ExponentReport& b) {
        return a.point.minimal.degree() < b.point.minimal.degree() ||
               (a.point.minimal.degree() == b.point.minimal.degree() &&
                a.point.minimal.str() < b.point.minimal.str());
    });
    for (auto& r : algebraic) out.singular_points.push_back(std::move(r));
    out.singular_points.push_back(analyse_place(L, Place::infinity()));
    for (const auto& r : out.singular_points) {
        out.all_regular = out.all_regular && r.regular;
        if (r.apparent) out.apparent_points.push_back(r.point);
    }
    return out;
}

Rational exponent_sum(const FuchsianReport& r)
{
    Rational s = 0;
    for (const auto& e : r.singular_points) {
        if (!e.regular || e.irrational_part != "1") throw Error("exponent sum needs rational exponents everywhere");
        int mult = e.point.kind == Place::Kind::Algebraic ? e.point.minimal.degree() : 1;
        for (const auto& x : e.exponents) s += x * mult;
    }
    return s;
}

namespace {

std::optional<Intertwiner> search_with(const DiffOperator& L1, const DiffOperator& L2, int ord_r, const Poly& den,
                                       int degree_bound,
                                       const std::vector<std::vector<RationalFunction>>& pr)
{
    const std::string& var = L1.variable();
    const int n1 = L1.order();
    const int ndeg = den.degree() + degree_bound;
    struct Basis {
        int i;
        int j;
    };
    std::vector<Basis> basis;
    for (int i = 0; i <= ord_r; ++i)
        for (int j = 0; j <= ndeg; ++j) basis.push_back({i, j});
    const long nb = static_cast<long>(basis.size());
    std::vector<std::vector<RationalFunction>> rem(basis.size());
    PVF_PARALLEL_FOR_IF(nb > 8)
    for (long b = 0; b < nb; ++b) {
        const auto& e = basis[static_cast<std::size_t>(b)];
        RationalFunction f(Poly::monomial(1, e.j), den);
        DiffOperator M = L2 * (f * DiffOperator::D(var, e.i));
        rem[static_cast<std::size_t>(b)] = remainder_vector(M, pr, n1);
    }
    Matrix rows;
    for (int c = 0; c < n1; ++c) {
        Poly common(1);
        for (const auto& r : rem) common = lcm(common, r[static_cast<std::size_t>(c)].den());
        std::vector<Poly> nums;
        int maxdeg = -1;
        for (const auto& r : rem) {
            const auto& x = r[static_cast<std::size_t>(c)];
            nums.push_back(x.num() * exact_div(common, x.den()));
            maxdeg = std::max(maxdeg, nums.back().degree());
        }
        for (int k = 0; k <= maxdeg; ++k) {
            std::vector<Rational> row;
            bool any = false;
            for (const auto& q : nums) {
                row.push_back(q.coeff(k));
                any = any || row.back() != 0;
            }
            if (any) rows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<Rational>> ns;
    if (rows.empty()) {
        std::vector<Rational> v(basis.size(), Rational(0));
        v[0] = 1;
        ns.push_back(v);
    } else {
        ns = rational_nullspace(rows);
    }
    if (ns.empty()) return std::nullopt;
    const auto& x = ns.front();
    std::vector<Poly> nums(static_cast<std::size_t>(ord_r) + 1);
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (x[b] != 0) nums[static_cast<std::size_t>(basis[b].i)] += Poly::monomial(x[b], basis[b].j);
    std::vector<RationalFunction> rc;
    for (const auto& q : nums) rc.emplace_back(q, den);
    DiffOperator R(var, std::move(rc));
    auto [A, rest] = right_divide(L2 * R, L1);
    if (!rest.is_zero()) throw Error("intertwiner: nonzero remainder");
    return Intertwiner{A, R};
}

}  // namespace

std::optional<Intertwiner> intertwiner_search(const DiffOperator& L1, const DiffOperator& L2, int order_bound,
                                              int degree_bound, int max_pole_order)
{
    if (L1.order() < 1 || L2.order() < 1) throw Error("intertwiner search needs positive orders");
    if (L1.variable() != L2.variable()) throw Error("operator variables differ");
    const int ord_r = std::min(order_bound, L1.order() - 1);
    auto pr = power_remainders(L1, L2.order() + ord_r);
    Poly f1 = squarefree_part(L1.cleared().back());
    Poly f12 = squarefree_part(f1 * L2.cleared().back());
    std::vector<Poly> dens{Poly(1)};
    for (int e = 1; e <= max_pole_order; ++e) {
        for (const auto& [root, mult] : rational_roots(f12))
            dens.push_back((Poly::x() - Poly(root)).pow(e));
        dens.push_back(f1.pow(e));
        if (f12 != f1) dens.push_back(f12.pow(e));
    }
    std::stable_sort(dens.begin(), dens.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
    for (const auto& den : dens)
        if (auto r = search_with(L1, L2, ord_r, den, degree_bound, pr)) return r;
    return std::nullopt;
}

}  // namespace pvf
