#pragma once

#include "pvf/poly.hpp"
#include "pvf/rational.hpp"
#include "pvf/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pvf {

/// Sort key for variable names: S_k (high k first), u, t, alpha, then the
/// rest alphabetically.
bool variable_before(const std::string& a, const std::string& b);

/// Sparse multivariate polynomial over Q.
///
/// Variables are kept in priority order and only variables that actually
/// occur are stored. Terms are ordered graded-lex, leading term first.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    struct TermLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, TermLess>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

    static MultiPoly var(const std::string& name, int power = 1);
    static MultiPoly from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponents, Rational>>& terms);
    /// p(x) with x the named variable.
    static MultiPoly from_poly(const Poly& p, const std::string& name);
    /// Parses sums of products of rationals, variables, powers and
    /// parenthesized subexpressions, e.g. "64*t^2*(t-1)^2*S2 - 3/4*S0".
    static MultiPoly parse(std::string_view text);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool has_variable(const std::string& v) const;

    int degree(const std::string& v) const;
    int total_degree() const;
    /// Coefficient of v^k as a polynomial in the remaining variables.
    MultiPoly coeff(const std::string& v, int k) const;
    /// Coefficients of v^0..v^deg.
    std::vector<MultiPoly> coeffs_in(const std::string& v) const;
    Rational constant_term() const;
    /// Leading (graded-lex first) term coefficient.
    Rational leading_coefficient() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    MultiPoly pow(int e) const;

    MultiPoly derivative(const std::string& v) const;
    MultiPoly substitute(const std::string& v, const MultiPoly& value) const;
    MultiPoly evaluate(const std::string& v, const Rational& value) const;
    /// Renames variables; names missing from the map are kept.
    MultiPoly renamed(const std::map<std::string, std::string>& names) const;

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    MultiPoly primitive() const;
    /// Divides out the gcd over Q[var] of the coefficients with respect to
    /// the other variables, then makes the result primitive.
    MultiPoly primitive_over(const std::string& var) const;
    /// The gcd over Q[var] removed by primitive_over (monic).
    Poly content_in(const std::string& var) const;
    /// Univariate view; throws if other variables occur.
    Poly to_poly(const std::string& var) const;

    /// Evaluate with series for the listed variables. Every variable of the
    /// polynomial must be bound.
    Series evaluate_series(const std::map<std::string, Series>& values) const;

    std::string str() const;

private:
    void set_vars(std::vector<std::string> vars);
    MultiPoly expanded_to(const std::vector<std::string>& vars) const;
    void prune();
    friend std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// a / b if b divides a exactly.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Sylvester resultant with respect to `v`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& v);

/// Determinant of a square matrix of polynomials (Laplace expansion with
/// memoized minors over column subsets).
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Quotient num/den of multivariate polynomials, never reduced. Used for
/// exact identity checks where only "is zero" matters.
struct MultiFraction {
    MultiPoly num;
    MultiPoly den = MultiPoly(1);

    MultiFraction() = default;
    MultiFraction(MultiPoly n) : num(std::move(n)) {}  // NOLINT
    MultiFraction(MultiPoly n, MultiPoly d);

    friend MultiFraction operator+(const MultiFraction& a, const MultiFraction& b);
    friend MultiFraction operator-(const MultiFraction& a, const MultiFraction& b);
    friend MultiFraction operator*(const MultiFraction& a, const MultiFraction& b);
    friend MultiFraction operator/(const MultiFraction& a, const MultiFraction& b);
    MultiFraction derivative(const std::string& v) const;
    MultiFraction pow(int e) const;
    bool is_zero() const { return num.is_zero(); }
};

/// Substitute fractions for variables in p; unbound variables are kept.
MultiFraction substitute(const MultiPoly& p, const std::map<std::string, MultiFraction>& values);

}  // namespace pvf
