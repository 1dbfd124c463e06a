#include "pvf/odeguess.hpp"

#include "pvf/linalg.hpp"
#include "pvf/parallel.hpp"

#include <algorithm>
#include <set>

namespace pvf {

namespace {

constexpr long kVerifyTerms = 20;

struct Unknown {
    int i;       // derivative order
    Poly basis;  // polynomial multiplier
};

std::vector<Unknown> ansatz(const GuessSpec& spec)
{
    if (spec.order < 1) throw Error("guess order must be positive");
    const int m = spec.order;
    std::vector<Unknown> out;
    const Poly t = Poly::x();
    const Poly t1 = t - Poly(1);
    if (!spec.degrees.empty()) {
        if (static_cast<int>(spec.degrees.size()) != m + 1) throw Error("degree profile needs order + 1 entries");
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= spec.degrees[static_cast<std::size_t>(i)]; ++j)
                out.push_back({i, Poly::monomial(1, j)});
        return out;
    }
    if (spec.profile == Profile::Free) {
        if (spec.degree < 0) throw Error("degree bound must be nonnegative");
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= spec.degree; ++j) out.push_back({i, Poly::monomial(1, j)});
        return out;
    }
    if (m < 2) throw Error("gform profile needs order >= 2");
    for (int i = 0; i <= m; ++i) {
        Poly pre(1);
        int deg = m - 2;
        if (i == 1) pre = t * t1;
        if (i >= 2) {
            pre = t.pow(i) * t1.pow(i - 1);
            deg = m - i;
        }
        for (int j = 0; j <= deg; ++j) out.push_back({i, pre * Poly::monomial(1, j)});
    }
    return out;
}

// Rows of the linear system: one per exponent position with a nonzero entry.
Matrix guess_rows(const std::vector<Series>& cols)
{
    int r = 1;
    for (const auto& c : cols) r = static_cast<int>(lcm_long(r, c.ramification()));
    std::vector<Series> s;
    long lo = Series::kExact;
    long hi = Series::kExact;
    for (const auto& c : cols) {
        s.push_back(c.with_ramification(r));
        lo = std::min(lo, s.back().base_exponent());
        hi = std::min(hi, s.back().valid_order());
    }
    Matrix rows;
    for (long p = lo; p < hi; ++p) {
        std::vector<Rational> row;
        bool any = false;
        for (const auto& c : s) {
            long k = p - c.base_exponent();
            if (k >= 0 && k < static_cast<long>(c.coefficients().size())) {
                row.push_back(c.coefficients()[static_cast<std::size_t>(k)]);
                any = any || row.back() != 0;
            } else {
                row.push_back(0);
            }
        }
        if (any) rows.push_back(std::move(row));
    }
    return rows;
}

int coset_count(const Series& y)
{
    std::set<long> res;
    const long r = y.ramification();
    for (std::size_t k = 0; k < y.coefficients().size(); ++k)
        if (y.coefficients()[k] != 0) res.insert(((y.base_exponent() + static_cast<long>(k)) % r + r) % r);
    return std::max<int>(1, static_cast<int>(res.size()));
}

std::optional<GuessResult> fit(const Series& y, const GuessSpec& spec, long extra)
{
    if (y.is_zero()) throw Error("cannot guess from a zero series");
    auto unknowns = ansatz(spec);
    const long n = static_cast<long>(unknowns.size());
    const long window = n + spec.safety_margin;
    const Rational lead = y.leading_exponent();
    const long avail = y.known_terms_from(lead);
    if (avail < window + extra)
        throw Error("insufficient series length: need " + std::to_string(window + extra) + " coefficients, have " +
                    std::to_string(avail));
    Series yfit = y.truncated(lead + window);
    std::vector<Series> derivs{yfit};
    for (int i = 1; i <= spec.order; ++i) derivs.push_back(derivs.back().derivative());
    std::vector<Series> cols(unknowns.size());
    PVF_PARALLEL_FOR_IF(n > 16)
    for (long u = 0; u < n; ++u) {
        const auto& uk = unknowns[static_cast<std::size_t>(u)];
        cols[static_cast<std::size_t>(u)] =
            Series::from_poly(y.variable(), uk.basis) * derivs[static_cast<std::size_t>(uk.i)];
    }
    auto ns = rational_nullspace(guess_rows(cols));
    if (ns.empty()) return std::nullopt;
    if (ns.size() > 1) throw Error("ambiguous: enlarge margin (nullspace dimension " + std::to_string(ns.size()) + ")");
    std::vector<Poly> p(static_cast<std::size_t>(spec.order) + 1);
    for (long u = 0; u < n; ++u) {
        const auto& x = ns[0][static_cast<std::size_t>(u)];
        if (x != 0) p[static_cast<std::size_t>(unknowns[static_cast<std::size_t>(u)].i)] += unknowns[static_cast<std::size_t>(u)].basis * x;
    }
    DiffOperator L = DiffOperator::from_polys(y.variable(), p);
    if (L.order() < 1) return std::nullopt;
    L = L.canonical();
    Series res = op_apply(L, y);
    if (!res.is_zero()) return std::nullopt;
    GuessResult out;
    out.op = L;
    out.unknowns = n;
    out.window = window;
    out.verified = avail - window;
    out.cosets = coset_count(y);
    return out;
}

}  // namespace

long guess_unknowns(const GuessSpec& spec) { return static_cast<long>(ansatz(spec).size()); }

std::optional<GuessResult> guess_ode_report(const Series& y, const GuessSpec& spec) { return fit(y, spec, 0); }

std::optional<DiffOperator> guess_ode(const Series& y, const GuessSpec& spec)
{
    auto r = guess_ode_report(y, spec);
    if (!r) return std::nullopt;
    return r->op;
}

GuessResult minimal_ode_report(const Series& y, int max_order, int max_degree, int safety_margin)
{
    if (max_order < 1 || max_degree < 0) throw Error("bounds must be positive");
    for (int m = 1; m <= max_order; ++m)
        for (int d = 0; d <= max_degree; ++d) {
            GuessSpec spec;
            spec.order = m;
            spec.profile = Profile::Free;
            spec.degree = d;
            spec.safety_margin = safety_margin;
            if (auto r = fit(y, spec, kVerifyTerms)) return *r;
        }
    throw Error("no operator within bounds (order <= " + std::to_string(max_order) +
                ", degree <= " + std::to_string(max_degree) + ")");
}

DiffOperator minimal_ode(const Series& y, int max_order, int max_degree)
{
    return minimal_ode_report(y, max_order, max_degree).op;
}

}  // namespace pvf
