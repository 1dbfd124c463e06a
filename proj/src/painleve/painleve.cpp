#include "pvf/painleve.hpp"

#include "pvf/correlations.hpp"
#include "pvf/linalg.hpp"
#include "pvf/parallel.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace pvf {

namespace {

Series poly_series(const std::string& var, std::vector<long> c)
{
    std::vector<Rational> r(c.begin(), c.end());
    return Series::from_poly(var, Poly(std::move(r)));
}

// t(t-1) as an exact series.
Series tt1(const std::string& var) { return poly_series(var, {0, -1, 1}); }

MultiPoly T() { return MultiPoly::var("t"); }
MultiPoly Svar(int k) { return MultiPoly::var("S" + std::to_string(k)); }

}  // namespace

SigmaBundle bundle_from_series(const Series& s0, Regime regime, const Rational& N)
{
    SigmaBundle b;
    b.S0 = s0;
    b.S1 = b.S0.derivative();
    b.S2 = b.S1.derivative();
    b.S3 = b.S2.derivative();
    b.regime = regime;
    b.N = N;
    return b;
}

SigmaBundle sigma_bundle(const Series& C, Regime regime, const Rational& N)
{
    if (C.is_zero()) throw Error("not invertible");
    const std::string& var = C.variable();
    Series s = tt1(var) * (C.derivative() / C);
    if (regime == Regime::High)
        s -= Series::constant(var, Rational(1, 4));
    else
        s -= Series::monomial(var, Rational(1, 4), 1);
    return bundle_from_series(s, regime, N);
}

PVIParams ising_params(const Rational& N) { return {N / 2, (1 - N) / 2, (1 + N) / 2, N / 2}; }

Series pvi_residual_ising(const SigmaBundle& S)
{
    const std::string& var = S.S0.variable();
    Series t = Series::monomial(var, 1, 1);
    Series tm1 = poly_series(var, {-1, 1});
    Series a = tt1(var) * S.S2;
    Series b = tm1 * S.S1 - S.S0;
    Series c = b - Series::constant(var, Rational(1, 4));
    Series d = t * S.S1 - S.S0;
    return a * a - S.N * S.N * (b * b) + Rational(4) * S.S1 * c * d;
}

Series pvi_residual_general(const SigmaBundle& z, const PVIParams& v)
{
    const std::string& var = z.S0.variable();
    Series t = Series::monomial(var, 1, 1);
    Series a = tt1(var) * z.S2;
    Series b = Rational(2) * z.S1 * (t * z.S1 - z.S0) - z.S1 * z.S1 - Series::constant(var, v.v1 * v.v2 * v.v3 * v.v4);
    Series rhs = Series::constant(var, 1);
    for (const Rational& vi : std::array<Rational, 4>{v.v1, v.v2, v.v3, v.v4}) rhs = rhs * (z.S1 + Series::constant(var, vi * vi));
    return z.S1 * a * a + b * b - rhs;
}

SigmaBundle zeta_from_sigma(const SigmaBundle& S)
{
    const std::string& var = S.S0.variable();
    Series z = S.S0 - Series::monomial(var, S.N * S.N / 4, 1) + Series::constant(var, Rational(1, 8));
    return bundle_from_series(z, S.regime, S.N);
}

SigmaBundle zeta_from_tau(const Series& tau, const PVIParams& v)
{
    const std::string& var = tau.variable();
    Series z = tt1(var) * (tau.derivative() / tau) + Series::monomial(var, v.K1(), 1) +
               Series::constant(var, v.K2());
    return bundle_from_series(z, Regime::High, 0);
}

MultiPoly pvi_polynomial(const Rational& N)
{
    MultiPoly t = T(), S0 = Svar(0), S1 = Svar(1), S2 = Svar(2);
    MultiPoly a = t * (t - 1) * S2;
    MultiPoly b = (t - 1) * S1 - S0;
    MultiPoly d = t * S1 - S0;
    return a * a - N * N * (b * b) + Rational(4) * S1 * (b - Rational(1, 4)) * d;
}

// ---- Jimbo data -----------------------------------------------------------

namespace {

RationalFunction alpha_poly(std::vector<Rational> c) { return RationalFunction(Poly(std::move(c))); }

// alpha - c
RationalFunction alpha_minus(const Rational& c) { return alpha_poly({-c, 1}); }

std::vector<Rational> pole_list(const std::vector<const RationalFunction*>& fs)
{
    std::vector<Rational> out;
    for (const auto* f : fs)
        for (const auto& [r, m] : rational_roots(f->den())) {
            (void)m;
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RationalFunction reflect_alpha(const RationalFunction& f) { return f.compose(Poly(std::vector<Rational>{0, -1})); }

JimboData jimbo_coefficients(const PVIParams& v)
{
    const Rational v1 = v.v1, v2 = v.v2, v3 = v.v3, v4 = v.v4;
    JimboData d;
    d.v = v;
    RationalFunction a2 = alpha_poly({0, 0, 1});
    auto sq = [](const Rational& x) { return x * x; };
    d.p0 = (a2 - RationalFunction(sq(v1 + v2 - v3 - v4))) * RationalFunction(Rational(1, 4));
    d.p1 = (a2 - RationalFunction(sq(v1 + v2 - v3 + v4))) * RationalFunction(Rational(1, 4));
    d.pinf = a2 * RationalFunction(Rational(1, 4)) + RationalFunction(v.K1());

    RationalFunction num = alpha_minus(v1 + v2 + v3 - v4) * alpha_minus(v1 + v2 - v3 + v4) *
                           alpha_minus(v1 - v2 + v3 + v4) * alpha_minus(-v1 + v2 + v3 + v4);
    RationalFunction den = RationalFunction(16) * a2 * alpha_minus(1).pow(2);
    d.a_0m1 = num / den;

    const Rational s4 = (v1 + v2 + v3 - v4) * (v1 + v2 - v3 + v4) * (v1 - v2 + v3 + v4) * (v1 - v2 - v3 - v4);
    d.a_10 = a2 * RationalFunction(Rational(-1, 8)) +
             RationalFunction((-v1 * v2 + v1 * v3 + v1 * v4 + v2 * v3 + v2 * v4 - v3 * v4) / 2) +
             RationalFunction(s4 / 8) / a2;

    RationalFunction am2 = alpha_minus(2).pow(2);
    RationalFunction brackets(1);
    for (const Rational& c : std::array<Rational, 4>{v1 + v2 + v3 - v4, v1 + v2 - v3 + v4, v1 - v2 + v3 + v4, -v1 + v2 + v3 + v4})
        brackets *= am2 - RationalFunction(sq(c));
    RationalFunction den2 =
        RationalFunction(256) * alpha_minus(1).pow(2) * alpha_minus(2).pow(4) * alpha_minus(3).pow(2);
    d.a_0m2 = d.a_0m1.pow(2) * brackets / den2;

    d.a_0p1 = reflect_alpha(d.a_0m1);
    d.a_0p2 = reflect_alpha(d.a_0m2);
    d.poles = pole_list({&d.a_0m1, &d.a_0p1, &d.a_10, &d.a_0m2, &d.a_0p2});
    return d;
}

Degeneration degeneration_condition(const PVIParams& v)
{
    Degeneration d;
    d.alpha_from_first = -v.v1 - v.v2 + v.v3 - v.v4;
    d.alpha_from_second = 2 - v.v1 + v.v2 - v.v3 - v.v4;
    d.v2_minus_v3 = v.v2 - v.v3;
    d.satisfied = d.alpha_from_first == d.alpha_from_second;
    return d;
}

TauPowerCheck tau_power_check(const Rational& alpha, const Rational& beta, const Rational& N, long order)
{
    TauPowerCheck out;
    Rational b4 = 4 * beta - 1;
    out.constraint = b4 * b4 * N * N + 16 * beta * (4 * alpha + 1) * (alpha + beta);
    const long extra = 4;
    Series tau = Series::monomial("t", 1, alpha) *
                 binomial_series(beta, -1, 1, "t", order + extra).truncated(order + extra);
    Series s = tt1("t") * (tau.derivative() / tau) - Series::constant("t", Rational(1, 4));
    out.residual = pvi_residual_ising(bundle_from_series(s, Regime::High, N)).truncated(order);
    return out;
}

// ---- Riccati form and elimination -----------------------------------------

namespace {

int s_index(const std::string& v)
{
    if (v.size() >= 2 && v[0] == 'S' && std::all_of(v.begin() + 1, v.end(), ::isdigit)) return std::stoi(v.substr(1));
    return -1;
}

// d/dt with dS_j/dt = S_{j+1}.
MultiPoly total_derivative(const MultiPoly& p)
{
    MultiPoly out = p.derivative("t");
    for (const auto& v : p.variables()) {
        int k = s_index(v);
        if (k >= 0) out += p.derivative(v) * Svar(k + 1);
    }
    return out;
}

}  // namespace

MultiPoly riccatize(const DiffOperator& L, Regime regime)
{
    if (L.order() < 1) throw Error("riccatize needs a positive order");
    auto c = L.cleared();
    const int n = L.order();
    MultiPoly t = T();
    MultiPoly w = t * (t - 1);
    MultiPoly first = regime == Regime::High ? Svar(0) + Rational(1, 4) : Svar(0) + Rational(1, 4) * t;
    // C^{(k)} = P_k C / (t(t-1))^k
    std::vector<MultiPoly> P{MultiPoly(1)};
    for (int k = 0; k < n; ++k) {
        const MultiPoly& pk = P.back();
        MultiPoly next = w * total_derivative(pk) - Rational(k) * (Rational(2) * t - 1) * pk + first * pk;
        P.push_back(next);
    }
    MultiPoly rel;
    for (int i = 0; i <= n; ++i) {
        if (c[static_cast<std::size_t>(i)].is_zero()) continue;
        rel += MultiPoly::from_poly(c[static_cast<std::size_t>(i)], "t") * w.pow(n - i) * P[static_cast<std::size_t>(i)];
    }
    return rel.primitive_over("t");
}

Series curve_residual(const MultiPoly& curve, const SigmaBundle& S)
{
    std::map<std::string, Series> vals{{"S0", S.S0}, {"S1", S.S1}, {"S2", S.S2}, {"S3", S.S3},
                                       {"t", Series::monomial(S.S0.variable(), 1, 1)}};
    std::map<std::string, Series> used;
    for (const auto& v : curve.variables()) {
        auto it = vals.find(v);
        if (it == vals.end()) throw Error("curve variable '" + v + "' has no series");
        used.insert(*it);
    }
    if (used.empty()) used.emplace("t", vals.at("t"));
    return curve.evaluate_series(used);
}

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::size_t kMaxPrimes = 40;
constexpr long kFilterExtraRows = 20;

// Dense coefficient table of a series on integer exponents [lo, hi).
struct Dense {
    long lo = 0;
    long hi = 0;
    std::vector<Rational> c;
};

Dense dense(const Series& s)
{
    if (s.ramification() != 1) throw Error("curve extraction needs integer exponents");
    Dense d;
    d.lo = s.base_exponent();
    d.hi = s.valid_order();
    d.c.assign(static_cast<std::size_t>(std::max<long>(0, d.hi - d.lo)), Rational(0));
    for (std::size_t k = 0; k < s.coefficients().size() && static_cast<long>(k) < d.hi - d.lo; ++k) d.c[k] = s.coefficients()[k];
    return d;
}

struct Cell {
    int d1, d0, dt;
    long count() const { return static_cast<long>(d1 + 1) * (d0 + 1) * (dt + 1); }
};

}  // namespace

CurveRelation eliminate_curve(const MultiPoly& riccati, int N, const SigmaBundle& S)
{
    if (N < 1) throw Error("elimination needs N >= 1");
    MultiPoly F = pvi_polynomial(S.N);
    std::vector<MultiPoly> dF{F};
    for (int k = 1; k <= std::max(0, N - 2); ++k) dF.push_back(total_derivative(dF.back()));
    MultiPoly G = riccati;
    for (int k = N; k >= 2; --k) {
        const std::string v = "S" + std::to_string(k);
        if (!G.has_variable(v)) continue;
        G = resultant(G, dF[static_cast<std::size_t>(k - 2)], v);
        if (G.is_zero()) throw Error("elimination collapsed to zero");
    }
    for (const auto& v : G.variables())
        if (v != "S0" && v != "S1" && v != "t") throw Error("elimination left variable " + v);
    G = G.primitive_over("t");

    CurveRelation out;
    out.eliminant = G;
    const int D1 = G.degree("S1"), D0 = G.degree("S0"), Dt = G.degree("t");

    // S0^a S1^b as dense tables, exact and modulo the prime.
    std::vector<std::vector<Series>> prod(static_cast<std::size_t>(D0) + 1);
    for (int a = 0; a <= D0; ++a) {
        for (int b = 0; b <= D1; ++b) {
            if (a == 0 && b == 0)
                prod[0].push_back(Series::constant(S.S0.variable(), 1).truncated(Rational(S.S1.valid_order())));
            else if (b == 0)
                prod[static_cast<std::size_t>(a)].push_back(prod[static_cast<std::size_t>(a - 1)][0] * S.S0);
            else
                prod[static_cast<std::size_t>(a)].push_back(prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)] * S.S1);
        }
    }
    std::vector<std::vector<Dense>> tab(prod.size());
    long lo = LONG_MAX, hi = LONG_MAX;
    for (std::size_t a = 0; a < prod.size(); ++a)
        for (const auto& s : prod[a]) {
            tab[a].push_back(dense(s));
            lo = std::min(lo, tab[a].back().lo);
            hi = std::min(hi, tab[a].back().hi);
        }
    lo = std::min(lo, 0L);

    using Mons = std::vector<std::array<int, 3>>;
    using TableMod = std::vector<std::vector<std::vector<std::uint64_t>>>;
    auto table_mod = [&](std::uint64_t p) {
        TableMod out(tab.size());
        for (std::size_t a = 0; a < tab.size(); ++a)
            for (const auto& d : tab[a]) {
                std::vector<std::uint64_t> m;
                for (const auto& x : d.c) m.push_back(rational_mod(x, p));
                out[a].push_back(std::move(m));
            }
        return out;
    };
    auto rows_mod = [&](const TableMod& tp, const Mons& mons, long count) {
        std::vector<std::vector<std::uint64_t>> rows;
        for (long pos = lo; pos < hi && static_cast<long>(rows.size()) < count; ++pos) {
            std::vector<std::uint64_t> row;
            for (const auto& m : mons) {
                const Dense& d = tab[static_cast<std::size_t>(m[0])][static_cast<std::size_t>(m[1])];
                long k = pos - m[2] - d.lo;
                bool in = k >= 0 && k < static_cast<long>(d.c.size());
                row.push_back(in ? tp[static_cast<std::size_t>(m[0])][static_cast<std::size_t>(m[1])][static_cast<std::size_t>(k)] : 0);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    auto to_poly = [](const Mons& mons, const std::vector<Rational>& v) {
        std::vector<std::pair<MultiPoly::Exponents, Rational>> terms;
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (v[i] != 0) terms.push_back({{mons[i][0], mons[i][1], mons[i][2]}, v[i]});
        return MultiPoly::from_terms({"S0", "S1", "t"}, terms).primitive();
    };
    auto accept = [&](const MultiPoly& P) { return !P.is_zero() && exact_divide(G, P) && curve_residual(P, S).is_zero(); };

    std::vector<std::uint64_t> primes;
    std::vector<TableMod> tables;
    auto prime_table = [&](std::size_t k) -> const TableMod* {
        while (tables.size() <= k) {
            mpz_class q = primes.empty() ? mpz_class(kPrime) : mpz_class(static_cast<unsigned long>(primes.back()));
            for (;;) {
                mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
                std::uint64_t p = q.get_ui();
                primes.push_back(p);
                try {
                    tables.push_back(table_mod(p));
                    break;
                } catch (const Error&) {
                    tables.emplace_back();
                    break;
                }
            }
        }
        return tables[k].empty() ? nullptr : &tables[k];
    };

    // Kernel vector by Chinese remaindering and rational reconstruction;
    // nullopt when the kernel is not one-dimensional.
    auto modular_kernel = [&](const Mons& mons) -> std::optional<MultiPoly> {
        const std::size_t n = mons.size();
        std::vector<mpz_class> acc(n);
        mpz_class modulus = 1;
        std::size_t ref_free = 0;
        bool have_ref = false;
        for (std::size_t k = 0; k < kMaxPrimes; ++k) {
            const TableMod* tp = prime_table(k);
            if (!tp) continue;
            const std::uint64_t p = primes[k];
            std::vector<std::size_t> free;
            auto ns = nullspace_mod(rows_mod(*tp, mons, hi - lo), n, p, &free);
            if (ns.size() != 1) {
                if (!have_ref) return std::nullopt;
                continue;
            }
            if (!have_ref) {
                ref_free = free[0];
                have_ref = true;
            } else if (free[0] != ref_free) {
                continue;
            }
            const mpz_class pm(static_cast<unsigned long>(p));
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pm.get_mpz_t());
            for (std::size_t i = 0; i < n; ++i) {
                mpz_class r(static_cast<unsigned long>(ns[0][i]));
                mpz_class cur = acc[i] % pm;
                mpz_class d = ((r - cur) % pm + pm) % pm;
                d = (d * inv) % pm;
                acc[i] += modulus * d;
            }
            modulus *= pm;
            std::vector<Rational> v(n);
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                auto q = rational_reconstruct(acc[i], modulus);
                if (!q) ok = false;
                else v[i] = *q;
            }
            if (!ok) continue;
            MultiPoly P = to_poly(mons, v);
            if (accept(P)) return P;
        }
        return std::nullopt;
    };

    std::vector<Cell> cells;
    for (int d1 = 0; d1 <= D1; ++d1)
        for (int d0 = 0; d0 <= D0; ++d0)
            for (int dt = 0; dt <= Dt; ++dt) cells.push_back({d1, d0, dt});
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.count() < y.count(); });
    const long rows_avail = hi - lo;
    const TableMod* filter = prime_table(0);
    if (!filter) throw Error("curve extraction: series denominators divisible by the filter prime");
    for (const auto& cell : cells) {
        const long n = cell.count();
        if (rows_avail < n + 10)
            throw Error("truncation deficit: curve extraction needs " + std::to_string(n + 10) + " sigma terms");
        Mons mons;
        for (int b = 0; b <= cell.d1; ++b)
            for (int a = 0; a <= cell.d0; ++a)
                for (int c = 0; c <= cell.dt; ++c) mons.push_back({a, b, c});
        if (nullity_mod(rows_mod(*filter, mons, n + kFilterExtraRows), mons.size(), primes[0]) == 0) continue;
        if (auto P = modular_kernel(mons)) {
            out.polynomial = *P;
            return out;
        }
        Matrix exact;
        for (long pos = lo; pos < hi; ++pos) {
            std::vector<Rational> row;
            bool any = false;
            for (const auto& m : mons) {
                const Dense& d = tab[static_cast<std::size_t>(m[0])][static_cast<std::size_t>(m[1])];
                long k = pos - m[2] - d.lo;
                row.push_back(k >= 0 && k < static_cast<long>(d.c.size()) ? d.c[static_cast<std::size_t>(k)] : Rational(0));
                any = any || row.back() != 0;
            }
            if (any) exact.push_back(std::move(row));
        }
        auto ns = rational_nullspace(exact);
        if (ns.empty()) continue;
        MultiPoly P = to_poly(mons, ns[0]);
        if (!accept(P)) continue;
        out.polynomial = P;
        out.several_factors = ns.size() > 1;
        return out;
    }
    throw Error("no surviving factor");
}

// ---- exact rational identities --------------------------------------------

bool param_verify(const MultiPoly& curve, const Parametrization& p)
{
    auto r = substitute(curve, {{"S0", p.S0}, {"S1", p.S1}});
    return r.is_zero();
}

bool riccati_consistency(const Parametrization& p, const RiccatiData& r)
{
    MultiFraction u = MultiFraction(MultiPoly::var("u"));
    MultiFraction rhs = r.beta2 * u * u + r.beta1 * u + r.beta0;
    MultiFraction lhs = p.S0.derivative("u") * rhs + p.S0.derivative("t") - p.S1;
    return lhs.is_zero();
}

MultiPoly hamiltonian_polynomial(const HamiltonianData& d)
{
    MultiPoly p = MultiPoly::var("p"), q = MultiPoly::var("q"), t = T();
    MultiPoly Q = (d.n3 + d.n4) * (q - 1) * (q - t) + (d.n3 - d.n4) * q * (q - t) - (d.n1 + d.n2) * (q - 1) * q;
    return q * (q - 1) * (q - t) * p * p - Q * p + (d.n3 - d.n1) * (d.n3 - d.n2) * (q - t);
}

HamiltonianResidual hamiltonian_residual(const HamiltonianData& d, long order)
{
    const long extra = 8;
    Series E = elliptic_series(EllipticKind::E, order + extra, false, "t");
    Series K = elliptic_series(EllipticKind::K, order + extra, false, "t");
    Series t = Series::monomial("t", 1, 1);
    std::map<std::string, Series> ek{{"E", E}, {"K", K}, {"t", t}};
    auto eval = [&](const MultiPoly& m) {
        std::map<std::string, Series> used;
        for (const auto& v : m.variables()) used.insert({v, ek.at(v)});
        if (used.empty()) return Series::constant("t", m.constant_term());
        return m.evaluate_series(used);
    };
    Series p = eval(d.p.num) / eval(d.p.den);
    Series q = eval(d.q.num) / eval(d.q.den);
    MultiPoly H = hamiltonian_polynomial(d);  // t(t-1) H
    std::map<std::string, Series> pq{{"p", p}, {"q", q}, {"t", t}};
    auto evalpq = [&](const MultiPoly& m) {
        std::map<std::string, Series> used;
        for (const auto& v : m.variables()) used.insert({v, pq.at(v)});
        if (used.empty()) return Series::constant("t", m.constant_term());
        return m.evaluate_series(used);
    };
    Series w = tt1("t");
    HamiltonianResidual r;
    r.dp = (w * p.derivative() + evalpq(H.derivative("q"))).truncated(order);
    r.dq = (w * q.derivative() - evalpq(H.derivative("p"))).truncated(order);
    return r;
}

}  // namespace pvf
