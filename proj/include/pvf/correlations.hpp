#pragma once

#include "pvf/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvf {

/// Toeplitz entry a_n as a t-series valid to t^order (exclusive).
Series toeplitz_entry(long n, long order);

/// The same entry from the other hypergeometric branch. Both branches only
/// apply at n = -1.
Series toeplitz_entry_upper(long n, long order);
Series toeplitz_entry_lower(long n, long order);

using SeriesMatrix = std::vector<std::vector<Series>>;

/// Fraction-free elimination over series; row updates run in parallel.
Series series_determinant(const SeriesMatrix& m);
/// Same elimination with the parallel loop disabled.
Series series_determinant_serial(const SeriesMatrix& m);
/// Cofactor expansion with minors memoized over column subsets.
Series series_determinant_laplace(const SeriesMatrix& m);

struct ToeplitzSpec {
    int N = 1;
    bool dual = false;
    long order = 40;
};

/// Matrix (a_{i-j}) or (a_{i-j-1}) with entries valid to `entry_order`.
SeriesMatrix toeplitz_matrix(const ToeplitzSpec& spec, long entry_order);

/// C(N,N) or C*(N,N) valid to t^order. Entry truncation is chosen
/// automatically.
Series correlation_diag(const ToeplitzSpec& spec);

/// Same with a fixed entry order; throws "truncation deficit" with the
/// required entry order when it is too small.
Series correlation_diag(const ToeplitzSpec& spec, long entry_order);

enum class EllipticKind { E, K };

/// E or K = 2F1(1/2, -+1/2; 1; x) as a series in `var` valid to var^order.
/// With `quartic` the argument is s^4, otherwise the variable itself.
Series elliptic_series(EllipticKind kind, long order, bool quartic = true, const std::string& var = "s");

/// Coefficient function of a monomial E^i K^j: a Laurent polynomial in s
/// times (1+s^2)^{1/2} when `sqrt_factor` is set.
struct CoefficientFunction {
    long low = 0;  // exponent of coefficients[0]
    std::vector<Rational> coefficients;
    bool sqrt_factor = false;
};

struct EKPolynomial {
    std::string label;
    std::string variable = "s";
    std::map<std::pair<int, int>, CoefficientFunction> monomials;  // (i, j) -> coefficient of E^i K^j

    /// Degrees i+j that occur.
    std::vector<int> degrees() const;
    /// Sub-form with only the monomials of total degree d.
    EKPolynomial homogeneous_part(int d) const;
};

/// Series of the form, valid to s^order.
Series ek_evaluate(const EKPolynomial& form, long order);

struct LeadingData {
    Rational d0;
    Rational d1;
};

LeadingData leading_data(int N);

struct HyperSolution {
    Rational N;
    Rational lambda;
    Series f_plus;
    std::optional<Series> f_minus;
    /// h_N (integer N) or f+ + lambda f- (otherwise).
    Series tau;
};

/// c_k(N) from its terminating 3F2 form.
Rational hyper_coefficient(const Rational& N, long k);

/// f+- = t^{+-N/2} (1-t)^{1/4} 2F1(1/2, 1/2 +- N; 1 +- N; t), valid to t^order.
HyperSolution hyper_solution(const Rational& N, const Rational& lambda, long order);

struct BoundaryGap {
    Rational leading_exponent;
    Rational leading_coefficient;
    Series gap;
};

/// C(N,N) - h_N; throws "truncation deficit" when nothing nonzero is visible.
BoundaryGap boundary_gap(int N, long order);

/// Closed form of the first nonzero gap coefficient.
Rational boundary_gap_coefficient(int N);

/// Low-temperature check: C*(N,N) - (1-t)^{1/4} and the closed form of its
/// t^{N+1} coefficient.
struct LowTemperatureGap {
    Series gap;
    Rational predicted;
};
LowTemperatureGap low_temperature_gap(int N, long order);

}  // namespace pvf
