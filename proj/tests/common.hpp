#pragma once

#include "pvf/catalog.hpp"
#include "pvf/linalg.hpp"
#include "pvf/odeguess.hpp"

#include <random>
#include <string>

namespace pvf::test {

inline constexpr int kPropertyCases = 100;

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long bound = 9, long max_den = 6)
    {
        return frac(integer(-bound, bound), integer(1, max_den));
    }

    Rational nonzero_rational(long bound = 9, long max_den = 6)
    {
        for (;;) {
            Rational q = rational(bound, max_den);
            if (q != 0) return q;
        }
    }

    Poly poly(int max_degree, long bound = 5)
    {
        std::vector<Rational> c;
        int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i) c.push_back(rational(bound, 3));
        return Poly(c);
    }

    Poly nonzero_poly(int max_degree, long bound = 5)
    {
        for (;;) {
            Poly p = poly(max_degree, bound);
            if (!p.is_zero()) return p;
        }
    }

    /// Series with a nonzero leading coefficient, inexact unless `exact`.
    Series series(const std::string& var, int r, long terms, bool exact = false)
    {
        std::vector<Rational> c;
        c.push_back(nonzero_rational());
        for (long i = 1; i < terms; ++i) c.push_back(rational());
        long base = integer(-2 * r, 2 * r);
        long valid = exact ? Series::kExact : base + terms + integer(0, 3);
        return Series::from_coeffs(var, r, base, c, valid);
    }

    DiffOperator op(const std::string& var, int order, int max_degree)
    {
        std::vector<Poly> c;
        for (int i = 0; i < order; ++i) c.push_back(poly(max_degree, 3));
        c.push_back(nonzero_poly(max_degree, 3));
        return DiffOperator::from_polys(var, c);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Random matrix built as a product of two factors with a random inner dimension.
inline Matrix random_low_rank(Random& rng)
{
    const long rows = rng.integer(1, 7), cols = rng.integer(1, 7), rank = rng.integer(0, std::min(rows, cols));
    Matrix a(rows, std::vector<Rational>(rank)), b(rank, std::vector<Rational>(cols));
    for (auto& row : a)
        for (auto& x : row) x = rng.rational(5, 3);
    for (auto& row : b)
        for (auto& x : row) x = rng.rational(5, 3);
    Matrix m(rows, std::vector<Rational>(cols, 0));
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            for (long k = 0; k < rank; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

/// Indicial exponents of L_NN at 0, 1 and infinity, n = 1..N+1, ascending.
inline std::vector<Rational> rho(int N, char point)
{
    std::vector<Rational> out;
    for (int n = 1; n <= N + 1; ++n) {
        const Rational s = (n % 2 == 0) ? 1 : -1;
        Rational v;
        if (point == '1') {
            v = (n - 1) * (n - 1);
        } else if (point == 'i') {
            v = frac(5, 8) + frac(3, 4) * N + frac(1, 4) * n * n - frac(1, 4) * (2 * N + 3) * n - s / 4 * n +
                s / 8 * (2 * N + 3);
        } else {
            v = frac(-1, 8) + frac(3, 4) * N + frac(1, 4) * (n + 1) * (n + 2) - frac(1, 2) * (N + 3) * n +
                s / 4 * (n + 1) - s / 8 * (2 * N + 5);
        }
        v.canonicalize();
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string diag_name(int N) { return "L" + std::to_string(N) + std::to_string(N); }

inline bool zero_to(const Series& r, const Rational& min_valid)
{
    return r.is_zero() && (r.is_exact() || r.valid_exponent() >= min_valid);
}

}  // namespace pvf::test
