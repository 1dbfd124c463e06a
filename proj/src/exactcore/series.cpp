#include "pvf/series.hpp"

#include "pvf/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace pvf {

namespace {

constexpr long kExact = Series::kExact;

long sat_add(long a, long b)
{
    if (a >= kExact || b >= kExact) return kExact;
    return a + b;
}

long sat_mul(long a, long m)
{
    if (a >= kExact) return kExact;
    return a * m;
}

void require_same_var(const Series& a, const Series& b)
{
    if (a.variable() != b.variable())
        throw Error("incompatible series: variables '" + a.variable() + "' and '" + b.variable() + "'");
}

long units(const Rational& exponent, int r)
{
    Rational u = exponent * r;
    if (!is_integer(u)) throw Error("exponent not representable at this ramification");
    return u.get_num().get_si();
}

int needed_ramification(const Rational& exponent, int r)
{
    return static_cast<int>(lcm_long(r, exponent.get_den().get_si()));
}

// c_k = sum_{i+j=k} a_i b_j for k < len.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, long len,
                               bool parallel)
{
    std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, len)), Rational(0));
    const long sa = static_cast<long>(a.size());
    const long sb = static_cast<long>(b.size());
    if (parallel) {
        PVF_PARALLEL_FOR_IF(len > 128)
        for (long k = 0; k < len; ++k) {
            Rational acc = 0;
            long lo = std::max(0L, k - sb + 1);
            long hi = std::min(k, sa - 1);
            for (long i = lo; i <= hi; ++i) {
                if (a[static_cast<std::size_t>(i)] == 0) continue;
                acc += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
            }
            out[static_cast<std::size_t>(k)] = std::move(acc);
        }
    } else {
        for (long i = 0; i < sa && i < len; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (long j = 0; j < sb && i + j < len; ++j)
                out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

Series multiply(const Series& a0, const Series& b0, bool parallel)
{
    require_same_var(a0, b0);
    int r = static_cast<int>(lcm_long(a0.ramification(), b0.ramification()));
    Series a = a0.with_ramification(r);
    Series b = b0.with_ramification(r);
    long base = sat_add(a.base_exponent(), b.base_exponent());
    long valid = std::min(sat_add(a.valid_order(), b.base_exponent()), sat_add(b.valid_order(), a.base_exponent()));
    if (a.is_zero() || b.is_zero()) return Series::from_coeffs(a.variable(), r, valid, {}, valid);
    long len = static_cast<long>(a.coefficients().size() + b.coefficients().size()) - 1;
    if (valid < kExact) len = std::min(len, valid - base);
    return Series::from_coeffs(a.variable(), r, base, convolve(a.coefficients(), b.coefficients(), len, parallel),
                               valid);
}

}  // namespace

Series::Series(std::string var, int ramification) : var_(std::move(var)), r_(ramification)
{
    if (r_ < 1) throw Error("ramification must be positive");
    normalize();
}

Series Series::from_coeffs(std::string var, int ramification, long base, std::vector<Rational> coeffs, long valid)
{
    if (ramification < 1) throw Error("ramification must be positive");
    Series s(std::move(var), 1);
    s.r_ = ramification;
    s.base_ = base;
    s.valid_ = valid;
    s.c_ = std::move(coeffs);
    if (valid < kExact && base > valid && !s.c_.empty()) s.c_.clear();
    s.normalize();
    return s;
}

Series Series::monomial(std::string var, const Rational& c, const Rational& exponent)
{
    int r = static_cast<int>(exponent.get_den().get_si());
    long e = exponent.get_num().get_si();
    return from_coeffs(std::move(var), r, e, {c}, kExact);
}

Series Series::from_poly(std::string var, const Poly& p)
{
    return from_coeffs(std::move(var), 1, 0, p.coeffs(), kExact);
}

Series Series::zero_to(std::string var, const Rational& exponent)
{
    int r = static_cast<int>(exponent.get_den().get_si());
    long v = exponent.get_num().get_si();
    return from_coeffs(std::move(var), r, v, {}, v);
}

void Series::normalize()
{
    if (valid_ < kExact) {
        long room = valid_ - base_;
        if (room <= 0) c_.clear();
        else if (static_cast<long>(c_.size()) > room) c_.resize(static_cast<std::size_t>(room));
    }
    std::size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
        c_.clear();
    } else if (first > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
        base_ += static_cast<long>(first);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (c_.empty()) {
        if (valid_ < kExact) {
            long v = ceil_div(valid_, r_);
            r_ = 1;
            valid_ = v;
        } else {
            r_ = 1;
        }
        base_ = valid_;
        return;
    }
    long g = r_;
    for (std::size_t i = 0; i < c_.size() && g > 1; ++i)
        if (c_[i] != 0) g = gcd_long(g, base_ + static_cast<long>(i));
    if (g > 1) {
        std::vector<Rational> nc;
        nc.reserve(c_.size() / static_cast<std::size_t>(g) + 1);
        for (std::size_t i = 0; i < c_.size(); i += static_cast<std::size_t>(g)) nc.push_back(c_[i]);
        c_ = std::move(nc);
        base_ /= g;
        r_ /= static_cast<int>(g);
        if (valid_ < kExact) valid_ = ceil_div(valid_, g);
    }
}

Rational Series::valid_exponent() const
{
    if (is_exact()) throw Error("exact series has no finite valid order");
    return frac(valid_, r_);
}

Rational Series::leading_coefficient() const
{
    if (c_.empty()) throw Error("leading coefficient of a zero series");
    return c_.front();
}

Rational Series::coeff(const Rational& exponent) const
{
    Rational u = exponent * r_;
    if (!is_integer(u)) {
        if (!is_exact() && frac(valid_, r_) <= exponent)
            throw Error("coefficient requested beyond valid order");
        return 0;
    }
    long e = u.get_num().get_si();
    if (e >= valid_) throw Error("coefficient requested beyond valid order");
    if (e < base_ || e - base_ >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e - base_)];
}

long Series::known_terms_from(const Rational& from) const
{
    if (is_exact()) return kExact;
    Rational span = frac(valid_, r_) - from;
    if (span <= 0) return 0;
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    return n.get_si();
}

Series Series::with_ramification(int r) const
{
    if (r == r_) return *this;
    if (r % r_ != 0) throw Error("ramification must be a multiple of the current one");
    int m = r / r_;
    Series s(var_, 1);
    s.r_ = r;
    s.base_ = c_.empty() ? sat_mul(base_, m) : base_ * m;
    s.valid_ = sat_mul(valid_, m);
    if (!c_.empty()) {
        s.c_.assign((c_.size() - 1) * static_cast<std::size_t>(m) + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<std::size_t>(m)] = c_[i];
    }
    return s;
}

Series Series::truncated(const Rational& valid_exponent) const
{
    int r = needed_ramification(valid_exponent, r_);
    Series s = with_ramification(r);
    long v = units(valid_exponent, r);
    if (v < s.valid_) s.valid_ = v;
    if (s.c_.empty()) s.base_ = s.valid_;
    s.normalize();
    return s;
}

Series Series::renamed(std::string var) const
{
    Series s = *this;
    s.var_ = std::move(var);
    return s;
}

Series& Series::operator+=(const Series& o)
{
    require_same_var(*this, o);
    int r = static_cast<int>(lcm_long(r_, o.r_));
    Series a = with_ramification(r);
    Series b = o.with_ramification(r);
    long valid = std::min(a.valid_, b.valid_);
    long base = std::min(a.base_, b.base_);
    if (a.c_.empty() && b.c_.empty()) {
        *this = from_coeffs(var_, r, valid, {}, valid);
        return *this;
    }
    long end = std::max(a.base_ + static_cast<long>(a.c_.size()), b.base_ + static_cast<long>(b.c_.size()));
    if (a.c_.empty()) end = b.base_ + static_cast<long>(b.c_.size());
    if (b.c_.empty()) end = a.base_ + static_cast<long>(a.c_.size());
    if (valid < kExact) end = std::min(end, valid);
    if (a.c_.empty()) base = b.base_;
    if (b.c_.empty()) base = a.base_;
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0L, end - base)), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        long k = a.base_ + static_cast<long>(i) - base;
        if (k >= 0 && k < static_cast<long>(c.size())) c[static_cast<std::size_t>(k)] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        long k = b.base_ + static_cast<long>(i) - base;
        if (k >= 0 && k < static_cast<long>(c.size())) c[static_cast<std::size_t>(k)] += b.c_[i];
    }
    *this = from_coeffs(var_, r, base, std::move(c), valid);
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    return *this += -o;
}

Series& Series::operator*=(const Series& o)
{
    *this = *this * o;
    return *this;
}

Series& Series::operator*=(const Rational& c)
{
    if (c == 0) {
        c_.clear();
        normalize();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    return multiply(a, b, true);
}

Series series_product_serial(const Series& a, const Series& b)
{
    return multiply(a, b, false);
}

Series operator/(const Series& a, const Series& b)
{
    return a * b.reciprocal();
}

bool operator==(const Series& a, const Series& b)
{
    return a.var_ == b.var_ && a.r_ == b.r_ && a.base_ == b.base_ && a.valid_ == b.valid_ && a.c_ == b.c_;
}

Series Series::reciprocal() const
{
    if (c_.empty()) throw Error("not invertible: zero series");
    if (is_exact()) {
        if (c_.size() == 1) return from_coeffs(var_, r_, -base_, {1 / c_[0]}, kExact);
        throw Error("reciprocal of an exact series requires a truncation order");
    }
    long rel = valid_ - base_;
    std::vector<Rational> inv(static_cast<std::size_t>(rel), Rational(0));
    Rational a0inv = 1 / c_[0];
    inv[0] = a0inv;
    for (long k = 1; k < rel; ++k) {
        Rational acc = 0;
        long hi = std::min(k, static_cast<long>(c_.size()) - 1);
        for (long j = 1; j <= hi; ++j) {
            if (c_[static_cast<std::size_t>(j)] == 0) continue;
            acc += c_[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        }
        inv[static_cast<std::size_t>(k)] = -acc * a0inv;
    }
    return from_coeffs(var_, r_, -base_, std::move(inv), -base_ + rel);
}

Series Series::derivative() const
{
    if (c_.empty()) {
        long v = sat_add(valid_, -r_);
        return from_coeffs(var_, r_, v, {}, v);
    }
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * frac(base_ + static_cast<long>(i), r_);
    return from_coeffs(var_, r_, base_ - r_, std::move(d), sat_add(valid_, -r_));
}

Series Series::pow(int e) const
{
    if (e < 0) return reciprocal().pow(-e);
    Series r = constant(var_, 1);
    Series b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Series Series::shifted(const Rational& exponent) const
{
    int r = needed_ramification(exponent, r_);
    Series s = with_ramification(r);
    long u = units(exponent, r);
    if (!s.c_.empty()) s.base_ += u;
    s.valid_ = sat_add(s.valid_, u);
    if (s.c_.empty()) s.base_ = s.valid_;
    s.normalize();
    return s;
}

Series Series::compose_power(int k) const
{
    if (k < 1) throw Error("compose_power needs a positive power");
    Series s(var_, 1);
    s.r_ = r_;
    s.valid_ = sat_mul(valid_, k);
    if (c_.empty()) {
        s.base_ = s.valid_;
        s.normalize();
        return s;
    }
    s.base_ = base_ * k;
    s.c_.assign((c_.size() - 1) * static_cast<std::size_t>(k) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i * static_cast<std::size_t>(k)] = c_[i];
    s.normalize();
    return s;
}

Series Series::invert_variable() const
{
    if (!is_exact()) throw Error("unsupported: x -> 1/x needs an exact Laurent polynomial");
    if (c_.empty()) return *this;
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    long base = -(base_ + static_cast<long>(c_.size()) - 1);
    return from_coeffs(var_, r_, base, std::move(c), kExact);
}

Series Series::shift_point(const Rational& x0, std::string new_var) const
{
    if (!is_exact()) throw Error("unsupported: re-expansion at a new point needs an exact polynomial");
    if (c_.empty()) return Series(std::move(new_var));
    if (r_ != 1 || base_ < 0) throw Error("unsupported: re-expansion of a ramified or Laurent series");
    std::vector<Rational> c(static_cast<std::size_t>(base_), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return from_poly(std::move(new_var), Poly(std::move(c)).taylor_shift(x0));
}

std::string Series::str(int max_terms) const
{
    std::ostringstream os;
    int shown = 0;
    for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i] == 0) continue;
        if (shown) os << " + ";
        os << "(" << to_string(c_[i]) << ")*" << var_ << "^(" << to_string(frac(base_ + static_cast<long>(i), r_))
           << ")";
        ++shown;
    }
    if (shown == 0) os << "0";
    if (is_exact()) os << " [exact]";
    else os << " + O(" << var_ << "^(" << to_string(frac(valid_, r_)) << "))";
    return os.str();
}

Series pfq_series(const std::vector<Rational>& upper, const std::vector<Rational>& lower, const std::string& var,
                  long order)
{
    std::vector<Rational> c;
    if (order <= 0) return Series::zero_to(var, Rational(std::max(order, 0L)));
    Rational term = 1;
    bool terminated = false;
    for (long k = 0; k < order; ++k) {
        c.push_back(term);
        Rational num = 1;
        for (const auto& a : upper) num *= a + k;
        if (num == 0) {
            terminated = true;
            break;
        }
        Rational den = k + 1;
        for (const auto& b : lower) den *= b + k;
        if (den == 0) throw Error("ill-posed parameter list");
        term = term * num / den;
    }
    return Series::from_coeffs(var, 1, 0, std::move(c), terminated ? Series::kExact : order);
}

Rational pfq_terminating_value(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                               const Rational& x)
{
    bool terminating = false;
    for (const auto& a : upper)
        if (is_integer(a) && a <= 0) terminating = true;
    if (!terminating) throw Error("pFq does not terminate");
    Rational sum = 0;
    Rational term = 1;
    for (long k = 0;; ++k) {
        sum += term;
        Rational num = 1;
        for (const auto& a : upper) num *= a + k;
        if (num == 0) break;
        Rational den = k + 1;
        for (const auto& b : lower) den *= b + k;
        if (den == 0) throw Error("ill-posed parameter list");
        term = term * num * x / den;
    }
    return sum;
}

Series binomial_series(const Rational& beta, const Rational& c, int k, const std::string& var, long order)
{
    std::vector<Rational> coeffs;
    Rational b = 1;
    Rational cp = 1;
    bool exact = false;
    for (long n = 0; n * k < order; ++n) {
        if (n > 0) {
            b = b * (beta - (n - 1)) / n;
            cp *= c;
        }
        if (b == 0) {
            exact = true;
            break;
        }
        coeffs.resize(static_cast<std::size_t>(n * k) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(n * k)] = b * cp;
    }
    return Series::from_coeffs(var, 1, 0, std::move(coeffs), exact ? Series::kExact : order);
}

}  // namespace pvf
