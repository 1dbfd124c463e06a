#include "pvf/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

namespace pvf {

namespace {

std::pair<int, std::string> rank(const std::string& v)
{
    static const std::regex sk("S([0-9]+)");
    std::smatch m;
    if (std::regex_match(v, m, sk)) return {0, std::string(8 - std::min<std::size_t>(8, m[1].str().size()), ' ') + m[1].str()};
    if (v == "u") return {1, ""};
    if (v == "t") return {2, ""};
    if (v == "alpha") return {3, ""};
    return {4, v};
}

int total(const MultiPoly::Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool variable_before(const std::string& a, const std::string& b)
{
    auto ra = rank(a);
    auto rb = rank(b);
    if (ra.first != rb.first) return ra.first < rb.first;
    // S_k with larger k first
    if (ra.first == 0) return ra.second > rb.second;
    return ra.second < rb.second;
}

bool MultiPoly::TermLess::operator()(const Exponents& a, const Exponents& b) const
{
    int ta = total(a);
    int tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

MultiPoly::MultiPoly(const Rational& c)
{
    if (c != 0) terms_[{}] = c;
}

MultiPoly MultiPoly::var(const std::string& name, int power)
{
    MultiPoly p;
    if (power == 0) return MultiPoly(1);
    p.vars_ = {name};
    p.terms_[{power}] = 1;
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, const std::vector<std::pair<Exponents, Rational>>& terms)
{
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return variable_before(vars[i], vars[j]); });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (vars[order[i]] == vars[order[i - 1]]) throw Error("duplicate variable '" + vars[order[i]] + "'");
    MultiPoly p;
    for (std::size_t i : order) p.vars_.push_back(vars[i]);
    for (const auto& [e, c] : terms) {
        if (e.size() != vars.size()) throw Error("term exponent count does not match variables");
        Exponents ne(vars.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (e[order[i]] < 0) throw Error("negative exponent in polynomial term");
            ne[i] = e[order[i]];
        }
        if (c == 0) continue;
        p.terms_[ne] += c;
    }
    p.prune();
    return p;
}

MultiPoly MultiPoly::from_poly(const Poly& p, const std::string& name)
{
    MultiPoly r;
    r.vars_ = {name};
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) r.terms_[{i}] = p.coeff(i);
    r.prune();
    return r;
}

bool MultiPoly::has_variable(const std::string& v) const
{
    return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

void MultiPoly::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

MultiPoly MultiPoly::expanded_to(const std::vector<std::string>& vars) const
{
    if (vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        pos[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
    MultiPoly r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), variable_before);
    return out;
}

}  // namespace

int MultiPoly::degree(const std::string& v) const
{
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return is_zero() ? -1 : 0;
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::total_degree() const
{
    if (is_zero()) return -1;
    return total(terms_.begin()->first);
}

MultiPoly MultiPoly::coeff(const std::string& v, int k) const
{
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return k == 0 ? *this : MultiPoly();
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponents ne = e;
        ne[i] = 0;
        r.terms_.emplace(std::move(ne), c);
    }
    r.prune();
    return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(const std::string& v) const
{
    int d = degree(v);
    std::vector<MultiPoly> out;
    if (d < 0) return out;
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return {*this};
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    out.assign(static_cast<std::size_t>(d) + 1, MultiPoly());
    for (auto& o : out) o.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[i] = 0;
        out[static_cast<std::size_t>(e[i])].terms_.emplace(std::move(ne), c);
    }
    for (auto& o : out) o.prune();
    return out;
}

Rational MultiPoly::constant_term() const
{
    Exponents z(vars_.size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coefficient() const
{
    if (is_zero()) return 0;
    return terms_.begin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
        auto vars = merge_vars(vars_, o.vars_);
        *this = expanded_to(vars);
        MultiPoly b = o.expanded_to(vars);
        for (const auto& [e, c] : b.terms_) terms_[e] += c;
    } else {
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
    }
    prune();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    return *this += -o;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        *this = MultiPoly();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a0, const MultiPoly& b0)
{
    if (a0.is_zero() || b0.is_zero()) return {};
    auto vars = merge_vars(a0.vars_, b0.vars_);
    MultiPoly a = a0.expanded_to(vars);
    MultiPoly b = b0.expanded_to(vars);
    MultiPoly r;
    r.vars_ = vars;
    MultiPoly::Exponents e(vars.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0) throw Error("negative power of a polynomial");
    MultiPoly r(1);
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& v) const
{
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return {};
    std::size_t i = static_cast<std::size_t>(it - vars_.begin());
    MultiPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents ne = e;
        --ne[i];
        r.terms_.emplace(std::move(ne), c * e[i]);
    }
    r.prune();
    return r;
}

MultiPoly MultiPoly::substitute(const std::string& v, const MultiPoly& value) const
{
    if (!has_variable(v)) return *this;
    auto cs = coeffs_in(v);
    MultiPoly r;
    MultiPoly pw(1);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k > 0) pw = pw * value;
        if (!cs[k].is_zero()) r += cs[k] * pw;
    }
    return r;
}

MultiPoly MultiPoly::evaluate(const std::string& v, const Rational& value) const
{
    return substitute(v, MultiPoly(value));
}

MultiPoly MultiPoly::renamed(const std::map<std::string, std::string>& names) const
{
    std::vector<std::string> nv = vars_;
    for (auto& v : nv) {
        auto it = names.find(v);
        if (it != names.end()) v = it->second;
    }
    std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
    return from_terms(nv, ts);
}

MultiPoly MultiPoly::primitive() const
{
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational s = Rational(l) / Rational(g);
    if (terms_.begin()->second < 0) s = -s;
    MultiPoly r = *this;
    r *= s;
    return r;
}

Poly MultiPoly::to_poly(const std::string& var) const
{
    for (const auto& v : vars_)
        if (v != var) throw Error("polynomial is not univariate in " + var);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree(var)) + 1), Rational(0));
    for (const auto& [e, x] : terms_) c[e.empty() ? 0 : static_cast<std::size_t>(e[0])] = x;
    return Poly(std::move(c));
}

Poly MultiPoly::content_in(const std::string& var) const
{
    if (is_zero()) return Poly();
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return Poly(1);
    std::size_t vi = static_cast<std::size_t>(it - vars_.begin());
    std::map<Exponents, std::vector<Rational>> groups;
    for (const auto& [e, c] : terms_) {
        Exponents key = e;
        key[vi] = 0;
        auto& g = groups[key];
        if (static_cast<int>(g.size()) <= e[vi]) g.resize(static_cast<std::size_t>(e[vi]) + 1, Rational(0));
        g[static_cast<std::size_t>(e[vi])] = c;
    }
    Poly g;
    for (auto& [k, cs] : groups) {
        g = gcd(g, Poly(cs));
        if (g.degree() == 0) break;
    }
    return g.monic();
}

MultiPoly MultiPoly::primitive_over(const std::string& var) const
{
    Poly g = content_in(var);
    if (g.degree() <= 0) return primitive();
    auto q = exact_divide(*this, from_poly(g, var));
    if (!q) throw Error("internal: content does not divide");
    return q->primitive();
}

Series MultiPoly::evaluate_series(const std::map<std::string, Series>& values) const
{
    std::vector<const Series*> base;
    for (const auto& v : vars_) {
        auto it = values.find(v);
        if (it == values.end()) throw Error("no series bound for variable '" + v + "'");
        base.push_back(&it->second);
    }
    std::string var = values.empty() ? std::string("t") : values.begin()->second.variable();
    std::vector<std::vector<Series>> powers(vars_.size());
    auto power = [&](std::size_t i, int k) -> const Series& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(Series::constant(var, 1));
        while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * *base[i]);
        return pw[static_cast<std::size_t>(k)];
    };
    Series sum = Series(var);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Series term = Series::constant(var, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        if (first) sum = term;
        else sum += term;
        first = false;
    }
    if (first) {
        // zero polynomial: exact zero
        return Series(var);
    }
    return sum;
}

std::string MultiPoly::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool neg = c < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool mono = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool printed = false;
        if (!mono || a != 1) {
            os << to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

// ---- parser ----

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MultiPoly parse_all()
    {
        MultiPoly r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error("polynomial parse error at " + std::to_string(i_) + ": " + what);
    }

    MultiPoly expr()
    {
        MultiPoly r;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly t = term();
        r = neg ? -t : t;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else break;
        }
        return r;
    }

    MultiPoly term()
    {
        MultiPoly r = factor();
        for (;;) {
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                MultiPoly d = factor();
                if (d.is_constant()) {
                    if (d.is_zero()) fail("division by zero");
                    r *= 1 / d.constant_term();
                } else {
                    auto q = exact_divide(r, d);
                    if (!q) fail("inexact polynomial division");
                    r = *q;
                }
            } else {
                break;
            }
        }
        return r;
    }

    MultiPoly factor()
    {
        if (eat('-')) return -factor();
        MultiPoly b = primary();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("expected exponent");
            b = b.pow(std::stoi(std::string(s_.substr(st, i_ - st))));
        }
        return b;
    }

    MultiPoly primary()
    {
        skip();
        if (eat('(')) {
            MultiPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            Integer n(std::string(s_.substr(st, i_ - st)));
            return MultiPoly(Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return MultiPoly::var(std::string(s_.substr(st, i_ - st)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text)
{
    return Parser(text).parse_all();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a0, const MultiPoly& b0)
{
    if (b0.is_zero()) throw Error("polynomial division by zero");
    if (a0.is_zero()) return MultiPoly();
    auto vars = merge_vars(a0.vars_, b0.vars_);
    MultiPoly r = a0.expanded_to(vars);
    MultiPoly b = b0.expanded_to(vars);
    const auto& [lb, cb] = *b.terms_.begin();
    MultiPoly q;
    q.vars_ = vars;
    while (!r.terms_.empty()) {
        const auto& [lr, cr] = *r.terms_.begin();
        MultiPoly::Exponents d(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            d[i] = lr[i] - lb[i];
            if (d[i] < 0) return std::nullopt;
        }
        Rational c = cr / cb;
        q.terms_[d] += c;
        for (const auto& [eb, x] : b.terms_) {
            MultiPoly::Exponents e(vars.size());
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = eb[i] + d[i];
            auto [it, inserted] = r.terms_.emplace(e, -c * x);
            if (!inserted) {
                it->second -= c * x;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    q.prune();
    return q;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m)
{
    std::size_t n = m.size();
    if (n == 0) return MultiPoly(1);
    if (n > 24) throw Error("determinant too large for subset expansion");
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    std::vector<MultiPoly> dp(std::size_t{1} << n);
    std::vector<bool> live(dp.size(), false);
    dp[0] = MultiPoly(1);
    live[0] = true;
    std::vector<std::uint32_t> frontier = {0};
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : frontier) {
            if (dp[mask].is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c) || m[r][c].is_zero()) continue;
                int above = __builtin_popcount(mask >> (c + 1));
                MultiPoly term = dp[mask] * m[r][c];
                if (above & 1) term = -term;
                std::uint32_t nm = mask | (1u << c);
                if (!live[nm]) {
                    live[nm] = true;
                    next.push_back(nm);
                    dp[nm] = std::move(term);
                } else {
                    dp[nm] += term;
                }
            }
            dp[mask] = MultiPoly();
        }
        frontier = std::move(next);
    }
    return dp.back();
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& v)
{
    int m = p.degree(v);
    int n = q.degree(v);
    if (m <= 0 || n <= 0 || !p.has_variable(v) || !q.has_variable(v)) throw Error("nothing to eliminate");
    auto a = p.coeffs_in(v);
    auto b = q.coeffs_in(v);
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a[static_cast<std::size_t>(m - k)];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = b[static_cast<std::size_t>(n - k)];
    return determinant(s);
}

// ---- fractions ----

MultiFraction::MultiFraction(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d))
{
    if (den.is_zero()) throw Error("fraction with zero denominator");
}

MultiFraction operator+(const MultiFraction& a, const MultiFraction& b)
{
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

MultiFraction operator-(const MultiFraction& a, const MultiFraction& b)
{
    return a + MultiFraction(-b.num, b.den);
}

MultiFraction operator*(const MultiFraction& a, const MultiFraction& b)
{
    return {a.num * b.num, a.den * b.den};
}

MultiFraction operator/(const MultiFraction& a, const MultiFraction& b)
{
    if (b.num.is_zero()) throw Error("fraction division by zero");
    return {a.num * b.den, a.den * b.num};
}

MultiFraction MultiFraction::derivative(const std::string& v) const
{
    if (den.is_constant()) return {num.derivative(v), den};
    return {num.derivative(v) * den - num * den.derivative(v), den * den};
}

MultiFraction MultiFraction::pow(int e) const
{
    if (e < 0) return MultiFraction(MultiPoly(1)) / pow(-e);
    return {num.pow(e), den.pow(e)};
}

MultiFraction substitute(const MultiPoly& p, const std::map<std::string, MultiFraction>& values)
{
    const auto& vars = p.variables();
    std::vector<int> maxdeg(vars.size(), 0);
    std::vector<const MultiFraction*> val(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = values.find(vars[i]);
        if (it != values.end()) val[i] = &it->second;
        maxdeg[i] = p.degree(vars[i]);
    }
    std::vector<std::vector<MultiPoly>> npow(vars.size()), dpow(vars.size());
    auto get = [](std::vector<MultiPoly>& cache, const MultiPoly& b, int k) -> const MultiPoly& {
        if (cache.empty()) cache.push_back(MultiPoly(1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * b);
        return cache[static_cast<std::size_t>(k)];
    };
    MultiPoly num;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (val[i]) {
                term = term * get(npow[i], val[i]->num, e[i]);
                term = term * get(dpow[i], val[i]->den, maxdeg[i] - e[i]);
            } else if (e[i] > 0) {
                term = term * MultiPoly::var(vars[i], e[i]);
            }
        }
        num += term;
    }
    MultiPoly den(1);
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (val[i]) den = den * get(dpow[i], val[i]->den, maxdeg[i]);
    return {num, den};
}

}  // namespace pvf
