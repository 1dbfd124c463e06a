#pragma once

#include "pvf/ratfun.hpp"
#include "pvf/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace pvf {

using Matrix = std::vector<std::vector<Rational>>;

/// Right nullspace basis of M by fraction-free (Bareiss) elimination over Z.
/// One vector per free column, each primitive with the free entry's sign
/// positive. Row updates run in parallel.
std::vector<std::vector<Rational>> rational_nullspace(const Matrix& m);

/// Same basis from plain Gauss-Jordan elimination over Q, serial. Kept as
/// the reference for rational_nullspace.
std::vector<std::vector<Rational>> rational_nullspace_reference(const Matrix& m);

/// Rank by independent row reduction over Q.
int rational_rank(const Matrix& m);

/// Given vectors v_0, v_1, ... over Q(x), returns the coefficients
/// c_0..c_k (c_k = 1) of the first linear dependency v_k = -sum c_i v_i.
/// Empty if the vectors are independent.
std::vector<RationalFunction> first_dependency(const std::vector<std::vector<RationalFunction>>& vectors);

/// q reduced modulo the prime p; throws when p divides the denominator.
std::uint64_t rational_mod(const Rational& q, std::uint64_t p);

/// Nullity of a matrix over Z/p. It is never below the nullity over Q of a
/// matrix it was reduced from, so it can only over-report.
long nullity_mod(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols, std::uint64_t p);

/// Right nullspace basis over Z/p from reduced echelon form, one vector per
/// free column with that entry 1. `free_columns` receives the free columns.
std::vector<std::vector<std::uint64_t>> nullspace_mod(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                      std::uint64_t p, std::vector<std::size_t>* free_columns = nullptr);

/// The rational n/d with |n|, |d| <= sqrt(m/2) and n = a d mod m, if any.
std::optional<Rational> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace pvf
