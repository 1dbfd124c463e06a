#pragma once

#include "pvf/poly.hpp"
#include "pvf/ratfun.hpp"
#include "pvf/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvf {

/// Linear differential operator sum_i c_i(x) D^i with c_i in Q(x).
class DiffOperator {
public:
    DiffOperator() = default;
    DiffOperator(std::string var, std::vector<RationalFunction> coeffs);
    /// Operator from polynomial coefficients p_0..p_n.
    static DiffOperator from_polys(std::string var, const std::vector<Poly>& coeffs);
    /// D^k.
    static DiffOperator D(std::string var, int k = 1);
    static DiffOperator scalar(std::string var, const RationalFunction& f);

    const std::string& variable() const { return var_; }
    /// -1 for the zero operator.
    int order() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<RationalFunction>& coefficients() const { return c_; }
    const RationalFunction& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const RationalFunction& leading() const { return c_.back(); }

    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator-(const DiffOperator& a);
    /// Composition (A*B)(y) = A(B(y)).
    friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
    /// Left multiplication by a function.
    friend DiffOperator operator*(const RationalFunction& f, const DiffOperator& a);
    friend bool operator==(const DiffOperator& a, const DiffOperator& b)
    {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    /// Divided by the leading coefficient.
    DiffOperator monic() const;
    /// Polynomial coefficients, no common polynomial factor, integer content
    /// 1, top coefficient with positive leading term.
    std::vector<Poly> cleared() const;
    /// The operator rebuilt from cleared().
    DiffOperator canonical() const;
    /// Same operator up to a nonzero left factor in Q(x).
    bool same_up_to_scalar(const DiffOperator& o) const;

    DiffOperator renamed(std::string var) const;
    std::string str() const;

private:
    void trim();
    std::string var_ = "t";
    std::vector<RationalFunction> c_;
};

DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b);

/// A = Q*B + R with ord R < ord B.
std::pair<DiffOperator, DiffOperator> right_divide(const DiffOperator& a, const DiffOperator& b);

/// Applies the cleared form of L (L times its denominator lcm, see
/// DiffOperator::cleared) to y. Zero results are equivalent for L itself.
Series op_apply(const DiffOperator& L, const Series& y);

/// Operator whose solutions are the N-fold products of solutions of L.
DiffOperator symmetric_power(const DiffOperator& L, int N);

/// Least common left multiple, monic.
DiffOperator lclm(const DiffOperator& a, const DiffOperator& b);

/// x = y^k in the new variable.
DiffOperator op_substitute_power(const DiffOperator& L, int k, const std::string& new_var);
/// x -> 1/x (the variable name is kept).
DiffOperator op_invert_variable(const DiffOperator& L);
/// x = x0 + y.
DiffOperator op_shift(const DiffOperator& L, const Rational& x0, const std::string& new_var);
/// g^{-1} L g for g'/g = r, i.e. D -> D + r.
DiffOperator op_conjugate(const DiffOperator& L, const RationalFunction& r);

/// Taylor solutions at an ordinary point x0, in the local variable
/// (x - x0) named `local_var`; basis element j is x^j + O(x^n).
std::vector<Series> taylor_basis(const DiffOperator& L, const Rational& x0, long order,
                                 const std::string& local_var = "x");

/// A point of the line: a rational number, infinity, or the roots of an
/// irreducible polynomial (all conjugates together).
struct Place {
    enum class Kind { Rational, Infinity, Algebraic };
    Kind kind = Kind::Rational;
    Rational value;
    Poly minimal;  // monic, for Algebraic

    static Place at(const Rational& a) { return {Kind::Rational, a, {}}; }
    static Place infinity() { return {Kind::Infinity, 0, {}}; }
    static Place roots_of(const Poly& f) { return {Kind::Algebraic, 0, f.monic()}; }
    std::string str(const std::string& var = "t") const;
};

struct ExponentReport {
    Place point;
    bool regular = true;
    bool ordinary = false;
    /// Rational roots of the indicial polynomial with multiplicity, ascending.
    std::vector<Rational> exponents;
    /// Product of the indicial factors without rational roots ("1" if none).
    std::string irrational_part = "1";
    bool apparent = false;
};

ExponentReport indicial_exponents(const DiffOperator& L, const Place& point);

struct FuchsianReport {
    std::vector<ExponentReport> singular_points;  // infinity last when singular
    bool all_regular = true;
    std::vector<Place> apparent_points;
};

FuchsianReport fuchsian_analysis(const DiffOperator& L);

/// Sum of all local exponents over the singular points (and infinity).
Rational exponent_sum(const FuchsianReport& r);

struct Intertwiner {
    DiffOperator A;
    DiffOperator R;
};

/// Searches A, R with A*L1 = L2*R, ord R <= order_bound, R's coefficients
/// p_i / den and deg p_i <= deg den + degree_bound. Denominators tried, by
/// increasing degree: (x - r)^e for rational singular points r, and powers f^e
/// of the singular factors of L1 and of L1 L2, with e <= max_pole_order.
std::optional<Intertwiner> intertwiner_search(const DiffOperator& L1, const DiffOperator& L2, int order_bound,
                                              int degree_bound, int max_pole_order = 3);

}  // namespace pvf
