#include "pvf/correlations.hpp"

#include "pvf/parallel.hpp"

#include <algorithm>
#include <set>

namespace pvf {

namespace {

long ceil_rational(const Rational& q)
{
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return n.get_si();
}

// prefactor * t^{shift} * 2F1(a, b; c; t), valid to t^order
Series shifted_hypergeometric(const Rational& prefactor, const Rational& shift, const Rational& a, const Rational& b,
                              const Rational& c, long order)
{
    long body = std::max(0L, ceil_rational(order - shift));
    Series f = pfq_series({a, b}, {c}, "t", body);
    return (prefactor * f.shifted(shift)).truncated(order);
}

}  // namespace

Series toeplitz_entry_upper(long n, long order)
{
    if (n < -1) throw Error("upper branch needs n >= -1");
    Rational pref = -pochhammer(Rational(-1, 2), n + 1) / Rational(factorial(n + 1));
    return shifted_hypergeometric(pref, frac(n + 1, 2), Rational(1, 2), Rational(2 * n + 1, 2), n + 2, order);
}

Series toeplitz_entry_lower(long n, long order)
{
    if (n > -1) throw Error("lower branch needs n <= -1");
    long m = -n - 1;
    Rational pref = -pochhammer(Rational(1, 2), m) / Rational(factorial(m));
    return shifted_hypergeometric(pref, frac(m, 2), Rational(-1, 2), Rational(2 * m + 1, 2), m + 1, order);
}

Series toeplitz_entry(long n, long order)
{
    if (order < 1) throw Error("entry order must be positive");
    return n >= -1 ? toeplitz_entry_upper(n, order) : toeplitz_entry_lower(n, order);
}

namespace {

// num / den for an exact quotient; an exact multi-term divisor is truncated
// just far enough for the numerator.
Series divide(const Series& num, const Series& den, bool parallel = true)
{
    Series d = den;
    if (den.is_exact() && den.coefficients().size() > 1) {
        if (num.is_exact()) throw Error("unsupported: exact series quotient");
        d = den.truncated(num.valid_exponent() + den.leading_exponent());
    }
    return parallel ? num * d.reciprocal() : series_product_serial(num, d.reciprocal());
}

Series bareiss(SeriesMatrix a, bool parallel)
{
    const long n = static_cast<long>(a.size());
    if (n == 0) return Series::constant("t", 1);
    const std::string var = a[0][0].variable();
    Series prev = Series::constant(var, 1);
    bool negate = false;
    for (long k = 0; k < n; ++k) {
        auto K = static_cast<std::size_t>(k);
        long best = -1;
        for (long i = k; i < n; ++i) {
            const Series& x = a[static_cast<std::size_t>(i)][K];
            if (x.is_zero()) continue;
            if (best < 0 || x.leading_exponent() < a[static_cast<std::size_t>(best)][K].leading_exponent()) best = i;
        }
        if (best < 0) throw Error("series matrix is singular to working order");
        if (best != k) {
            std::swap(a[static_cast<std::size_t>(best)], a[K]);
            negate = !negate;
        }
        const auto& prow = a[K];
        if (parallel) {
            PVF_PARALLEL_FOR_IF(n - k > 2)
            for (long i = k + 1; i < n; ++i) {
                auto& row = a[static_cast<std::size_t>(i)];
                for (long j = k + 1; j < n; ++j) {
                    auto J = static_cast<std::size_t>(j);
                    row[J] = divide(prow[K] * row[J] - row[K] * prow[J], prev);
                }
            }
        } else {
            for (long i = k + 1; i < n; ++i) {
                auto& row = a[static_cast<std::size_t>(i)];
                for (long j = k + 1; j < n; ++j) {
                    auto J = static_cast<std::size_t>(j);
                    row[J] = divide(series_product_serial(prow[K], row[J]) - series_product_serial(row[K], prow[J]), prev,
                                    false);
                }
            }
        }
        prev = prow[K];
    }
    Series d = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return negate ? -d : d;
}

}  // namespace

Series series_determinant(const SeriesMatrix& m)
{
    return bareiss(m, true);
}

Series series_determinant_serial(const SeriesMatrix& m)
{
    return bareiss(m, false);
}

Series series_determinant_laplace(const SeriesMatrix& m)
{
    std::size_t n = m.size();
    if (n == 0) return Series::constant("t", 1);
    if (n > 20) throw Error("matrix too large for cofactor expansion");
    const std::string var = m[0][0].variable();
    std::vector<std::optional<Series>> dp(std::size_t{1} << n);
    dp[0] = Series::constant(var, 1);
    std::vector<std::uint32_t> frontier = {0};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : frontier) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                const Series& x = m[r][c];
                if (x.is_zero() && x.is_exact()) continue;
                Series term = *dp[mask] * x;
                if (__builtin_popcount(mask >> (c + 1)) & 1) term = -term;
                std::uint32_t nm = mask | (1u << c);
                if (!dp[nm]) {
                    dp[nm] = std::move(term);
                    next.push_back(nm);
                } else {
                    *dp[nm] += term;
                }
            }
            dp[mask].reset();
        }
        frontier = std::move(next);
    }
    if (!dp.back()) return Series(var);
    return *dp.back();
}

SeriesMatrix toeplitz_matrix(const ToeplitzSpec& spec, long entry_order)
{
    if (spec.N < 1) throw Error("N must be at least 1");
    const long N = spec.N;
    const long shift = spec.dual ? 1 : 0;
    std::vector<Series> entries(static_cast<std::size_t>(2 * N));
    // a_n for n = -N-shift+1 .. N-1
    const long lo = -(N - 1) - shift;
    const long hi = N - 1 - shift;
    PVF_PARALLEL_FOR_IF(N > 2)
    for (long n = lo; n <= hi; ++n) entries[static_cast<std::size_t>(n - lo)] = toeplitz_entry(n, entry_order);
    SeriesMatrix m(static_cast<std::size_t>(N), std::vector<Series>(static_cast<std::size_t>(N)));
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entries[static_cast<std::size_t>(i - j - shift - lo)];
    return m;
}

namespace {

Series raw_correlation(const ToeplitzSpec& spec, long entry_order)
{
    Series d = series_determinant(toeplitz_matrix(spec, entry_order));
    if (spec.dual && (spec.N % 2 == 1)) d = -d;
    return d;
}

bool reaches(const Series& s, long order)
{
    return s.is_exact() || s.valid_exponent() >= order;
}

}  // namespace

Series correlation_diag(const ToeplitzSpec& spec, long entry_order)
{
    if (spec.order < 1) throw Error("order must be positive");
    Series d = raw_correlation(spec, entry_order);
    if (reaches(d, spec.order)) return d.truncated(spec.order);
    long need = entry_order + 1;
    for (; need < 4 * (spec.order + spec.N) + 64; ++need)
        if (reaches(raw_correlation(spec, need), spec.order)) break;
    throw Error("truncation deficit: need entry order " + std::to_string(need));
}

Series correlation_diag(const ToeplitzSpec& spec)
{
    if (spec.order < 1) throw Error("order must be positive");
    long entry_order = spec.order + spec.N;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Series d = raw_correlation(spec, entry_order);
        if (reaches(d, spec.order)) return d.truncated(spec.order);
        entry_order += spec.N + 1;
    }
    throw Error("truncation deficit: entry budget exhausted");
}

Series elliptic_series(EllipticKind kind, long order, bool quartic, const std::string& var)
{
    Rational b = kind == EllipticKind::E ? Rational(-1, 2) : Rational(1, 2);
    if (!quartic) return pfq_series({Rational(1, 2), b}, {Rational(1)}, var, std::max(order, 0L));
    long body = std::max(0L, ceil_div(order, 4));
    return pfq_series({Rational(1, 2), b}, {Rational(1)}, var, body).compose_power(4).truncated(order);
}

std::vector<int> EKPolynomial::degrees() const
{
    std::set<int> d;
    for (const auto& [ij, c] : monomials) d.insert(ij.first + ij.second);
    return {d.begin(), d.end()};
}

EKPolynomial EKPolynomial::homogeneous_part(int d) const
{
    EKPolynomial r;
    r.label = label;
    r.variable = variable;
    for (const auto& [ij, c] : monomials)
        if (ij.first + ij.second == d) r.monomials.emplace(ij, c);
    return r;
}

Series ek_evaluate(const EKPolynomial& form, long order)
{
    const std::string& v = form.variable;
    long extra = 0;
    for (const auto& [ij, c] : form.monomials) extra = std::max(extra, -c.low);
    long work = order + extra;
    Series E = elliptic_series(EllipticKind::E, work, true, v);
    Series K = elliptic_series(EllipticKind::K, work, true, v);
    Series root = binomial_series(Rational(1, 2), 1, 2, v, work);
    std::vector<Series> Ep = {Series::constant(v, 1)};
    std::vector<Series> Kp = {Series::constant(v, 1)};
    Series sum(v);
    for (const auto& [ij, c] : form.monomials) {
        while (static_cast<int>(Ep.size()) <= ij.first) Ep.push_back(Ep.back() * E);
        while (static_cast<int>(Kp.size()) <= ij.second) Kp.push_back(Kp.back() * K);
        Series term = Series::from_coeffs(v, 1, c.low, c.coefficients, Series::kExact);
        if (c.sqrt_factor) term = term * root;
        term = term * Ep[static_cast<std::size_t>(ij.first)] * Kp[static_cast<std::size_t>(ij.second)];
        sum += term;
    }
    return sum.truncated(order);
}

LeadingData leading_data(int N)
{
    if (N < 1) throw Error("N must be at least 1");
    Rational four_n = Rational(Integer(1) << (2 * N));
    Rational c = Rational(binomial(2 * N, N)) / four_n;
    Rational d1 = Rational(factorial(2 * N)) * N / Rational(factorial(N) * factorial(N + 1)) / (four_n * 4);
    return {c, d1};
}

Rational hyper_coefficient(const Rational& N, long k)
{
    if (!is_integer(N) || N < 0) throw Error("hyper_coefficient needs a nonnegative integer N");
    long n = N.get_num().get_si();
    Rational pref = Rational(binomial(2 * n, n)) / Rational(Integer(1) << (2 * n));
    Rational f = pfq_terminating_value({Rational(1, 2), Rational(1, 2) + N, Rational(-k)}, {N + 1, Rational(5, 4) - k}, 1);
    return pref * pochhammer(Rational(-1, 4), k) / Rational(factorial(k)) * f;
}

HyperSolution hyper_solution(const Rational& N, const Rational& lambda, long order)
{
    bool integral = is_integer(N);
    if (integral && lambda != 0) throw Error("logarithmic second solution unsupported");
    Rational half = N / 2;
    long work = order + ceil_rational(abs(half)) + 1;
    Series quarter = binomial_series(Rational(1, 4), -1, 1, "t", work);
    auto branch = [&](int sign) {
        Rational b = Rational(1, 2) + sign * N;
        Rational c = 1 + sign * N;
        Series f = pfq_series({Rational(1, 2), b}, {c}, "t", work);
        return (quarter * f).shifted(sign * half).truncated(order);
    };
    HyperSolution h{N, lambda, branch(+1), std::nullopt, Series()};
    if (integral) {
        long n = N.get_num().get_si();
        Rational pref = Rational(binomial(2 * n, n)) / Rational(Integer(1) << (2 * n));
        h.tau = pref * h.f_plus;
    } else {
        h.f_minus = branch(-1);
        h.tau = h.f_plus + lambda * *h.f_minus;
    }
    return h;
}

Rational boundary_gap_coefficient(int N)
{
    Rational p = pochhammer(Rational(1, 2), N) * pochhammer(Rational(3, 2), N) * pochhammer(Rational(3, 2), N);
    Rational q = Rational(factorial(N + 1)) * Rational(factorial(N + 2)) * Rational(factorial(N + 2));
    return p / q / 16;
}

BoundaryGap boundary_gap(int N, long order)
{
    Series c = correlation_diag({N, false, order});
    Series h = hyper_solution(N, 0, order).tau;
    Series gap = c - h;
    if (gap.is_zero())
        throw Error("truncation deficit: need order above " + to_string(gap.leading_exponent()));
    return {gap.leading_exponent(), gap.leading_coefficient(), gap};
}

LowTemperatureGap low_temperature_gap(int N, long order)
{
    Series c = correlation_diag({N, true, order});
    Series gap = c - binomial_series(Rational(1, 4), -1, 1, "t", order);
    Rational predicted = pochhammer(Rational(1, 2), N) * pochhammer(Rational(3, 2), N) /
                         (Rational(factorial(N + 1)) * Rational(factorial(N + 1))) / 4;
    return {gap, predicted};
}

}  // namespace pvf
