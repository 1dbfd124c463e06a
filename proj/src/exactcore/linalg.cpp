#include "pvf/linalg.hpp"

#include "pvf/parallel.hpp"

#include <algorithm>

namespace pvf {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix integer_rows(const Matrix& m)
{
    IntMatrix a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        Integer l = denominator_lcm(m[i]);
        a[i].resize(m[i].size());
        for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    }
    return a;
}

std::size_t column_count(const Matrix& m)
{
    std::size_t n = m.empty() ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("ragged matrix");
    return n;
}

std::vector<Rational> normalized(std::vector<Rational> v)
{
    return primitive_vector(std::move(v), true);
}

}  // namespace

std::vector<std::vector<Rational>> rational_nullspace(const Matrix& m)
{
    const std::size_t cols = column_count(m);
    IntMatrix a = integer_rows(m);
    const long rows = static_cast<long>(a.size());
    std::vector<std::size_t> pivots;
    Integer prev = 1;
    long r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const auto& prow = a[static_cast<std::size_t>(r)];
        const Integer piv = prow[c];
        PVF_PARALLEL_FOR_IF(rows - r > 8)
        for (long i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            Integer f = row[c];
            Integer tmp;
            for (std::size_t j = c + 1; j < cols; ++j) {
                tmp = piv * row[j];
                if (f != 0) tmp -= f * prow[j];
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (long k = static_cast<long>(pivots.size()) - 1; k >= 0; --k) {
            const auto& row = a[static_cast<std::size_t>(k)];
            std::size_t pc = pivots[static_cast<std::size_t>(k)];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (row[j] != 0 && x[j] != 0) s += Rational(row[j]) * x[j];
            x[pc] = -s / Rational(row[pc]);
        }
        basis.push_back(normalized(std::move(x)));
    }
    return basis;
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> rational_nullspace_reference(const Matrix& m)
{
    const std::size_t cols = column_count(m);
    Matrix a = m;
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -a[k][f];
        basis.push_back(normalized(std::move(x)));
    }
    return basis;
}

int rational_rank(const Matrix& m)
{
    const std::size_t cols = column_count(m);
    Matrix a = m;
    return static_cast<int>(rref(a, cols).size());
}

std::vector<RationalFunction> first_dependency(const std::vector<std::vector<RationalFunction>>& vectors)
{
    struct Reduced {
        std::vector<RationalFunction> v;
        std::vector<RationalFunction> comb;
        std::size_t pivot;
    };
    std::vector<Reduced> basis;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        std::vector<RationalFunction> v = vectors[k];
        std::vector<RationalFunction> comb(k + 1);
        comb[k] = RationalFunction(1);
        for (const auto& b : basis) {
            if (v[b.pivot].is_zero()) continue;
            RationalFunction f = v[b.pivot] / b.v[b.pivot];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!b.v[j].is_zero()) v[j] -= f * b.v[j];
            for (std::size_t j = 0; j < b.comb.size(); ++j)
                if (!b.comb[j].is_zero()) comb[j] -= f * b.comb[j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const RationalFunction& x) { return !x.is_zero(); });
        if (it == v.end()) return comb;
        std::size_t pivot = static_cast<std::size_t>(it - v.begin());
        basis.push_back({std::move(v), std::move(comb), pivot});
    }
    return {};
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t rational_mod(const Rational& q, std::uint64_t p)
{
    std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) throw Error("denominator divisible by the modulus");
    return mulmod(n, powmod(d, p - 2, p), p);
}

long nullity_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t cols, std::uint64_t p)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        std::uint64_t inv = powmod(a[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            std::uint64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        ++r;
    }
    return static_cast<long>(cols) - static_cast<long>(r);
}

std::vector<std::vector<std::uint64_t>> nullspace_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t cols,
                                                      std::uint64_t p, std::vector<std::size_t>* free_columns)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        std::uint64_t inv = powmod(a[r][c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j) a[r][j] = mulmod(a[r][j], inv, p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r) continue;
            std::uint64_t f = a[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint64_t>> out;
    if (free_columns) free_columns->clear();
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = (p - a[k][f]) % p;
        out.push_back(std::move(v));
        if (free_columns) free_columns->push_back(f);
    }
    return out;
}

std::optional<Rational> rational_reconstruct(const mpz_class& a, const mpz_class& m)
{
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = ((a % m) + m) % m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

}  // namespace pvf
