#pragma once

#include "pvf/poly.hpp"
#include "pvf/rational.hpp"

#include <climits>
#include <string>
#include <vector>

namespace pvf {

/// Truncated ramified power series  sum_k c_k x^{(base + k)/r}.
///
/// Exponents are kept as integers in units of 1/r. `valid_order` is the
/// exclusive exponent bound (same units) below which every coefficient is
/// known; coefficients past the stored ones and below it are zero. An exact
/// series (a Laurent polynomial in x^{1/r}) has valid_order == kExact.
///
/// Normal form: the first stored coefficient is nonzero, trailing zeros are
/// dropped, and r is the smallest ramification that carries the support. A
/// series that is zero to its valid order stores nothing and has
/// base_exponent == valid_order.
class Series {
public:
    static constexpr long kExact = LONG_MAX / 4;

    explicit Series(std::string var = "t", int ramification = 1);

    static Series from_coeffs(std::string var, int ramification, long base, std::vector<Rational> coeffs,
                              long valid);
    /// c * x^{exponent}, exact.
    static Series monomial(std::string var, const Rational& c, const Rational& exponent);
    static Series constant(std::string var, const Rational& c) { return monomial(std::move(var), c, 0); }
    static Series from_poly(std::string var, const Poly& p);
    /// Zero known up to (exclusive) x^{exponent}.
    static Series zero_to(std::string var, const Rational& exponent);

    const std::string& variable() const { return var_; }
    int ramification() const { return r_; }
    long base_exponent() const { return base_; }
    long valid_order() const { return valid_; }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_exact() const { return valid_ >= kExact; }
    bool is_zero() const { return c_.empty(); }

    /// Exponent of the first nonzero term (valid bound for zero series).
    Rational leading_exponent() const { return frac(base_, r_); }
    Rational valid_exponent() const;
    Rational leading_coefficient() const;
    /// Coefficient of x^{exponent}; throws past the valid order.
    Rational coeff(const Rational& exponent) const;
    /// Number of known coefficients counted in whole exponent steps from `from`.
    long known_terms_from(const Rational& from) const;

    Series with_ramification(int r) const;
    Series truncated(const Rational& valid_exponent) const;
    Series renamed(std::string var) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Rational& c);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator-(Series a) { return a *= Rational(-1); }
    friend Series operator/(const Series& a, const Series& b);
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series reciprocal() const;
    Series derivative() const;
    Series pow(int e) const;
    /// Multiply by x^{exponent}.
    Series shifted(const Rational& exponent) const;

    /// x = y^k: exponents multiply by k.
    Series compose_power(int k) const;
    /// x -> 1/x for exact Laurent polynomials.
    Series invert_variable() const;
    /// x -> x0 + y for exact polynomials (integer exponents, none negative).
    Series shift_point(const Rational& x0, std::string new_var) const;

    std::string str(int max_terms = 8) const;

private:
    void normalize();
    std::string var_;
    int r_ = 1;
    long base_ = kExact;
    long valid_ = kExact;
    std::vector<Rational> c_;
};

/// Reference convolution kept for testing the parallel product kernel.
Series series_product_serial(const Series& a, const Series& b);

inline Series series_product(const Series& a, const Series& b) { return a * b; }
inline Series series_reciprocal(const Series& a) { return a.reciprocal(); }
inline Series series_derivative(const Series& a) { return a.derivative(); }

/// Generalized hypergeometric series pFq(upper; lower; x) with terms of
/// exponent below `order`. A series that terminates is returned exact.
Series pfq_series(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                  const std::string& var, long order);

/// Value of a terminating pFq at x.
Rational pfq_terminating_value(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                               const Rational& x);

/// (1 + c x^k)^beta to the given exponent order.
Series binomial_series(const Rational& beta, const Rational& c, int k, const std::string& var, long order);

}  // namespace pvf
