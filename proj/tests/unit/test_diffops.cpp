#include "common.hpp"

#include "pvf/correlations.hpp"

#include <doctest.h>

using namespace pvf;
using pvf::test::diag_name;
using pvf::test::kPropertyCases;
using pvf::test::Random;
using pvf::test::rho;
using pvf::test::zero_to;

namespace {

const Poly kT = Poly::x();

std::vector<Rational> exponents_at(const FuchsianReport& r, const Place& p)
{
    for (const auto& e : r.singular_points)
        if (e.point.kind == p.kind && e.point.value == p.value) return e.exponents;
    return {};
}

}  // namespace

TEST_CASE("operator arithmetic basics")
{
    DiffOperator D = DiffOperator::D("t");
    DiffOperator t = DiffOperator::scalar("t", kT);
    CHECK(D * t - t * D == DiffOperator::scalar("t", 1));
    CHECK(DiffOperator::D("t", 2) == D * D);
    auto [q, r] = right_divide(D * D * t + D, D);
    CHECK(q * D + r == D * D * t + D);
    CHECK(r.order() < 1);
}

TEST_CASE("op_apply on exact inputs")
{
    DiffOperator L = DiffOperator::from_polys("t", {Poly(-1), Poly(0), kT});  // t D^2 - 1
    Series y = Series::from_poly("t", kT * kT);
    CHECK(op_apply(L, y) == Series::from_poly("t", Poly(2) * kT - kT * kT));
}

TEST_CASE("taylor basis at an ordinary point")
{
    DiffOperator L = DiffOperator::from_polys("t", {Poly(1), Poly(0), Poly(1)});  // D^2 + 1
    auto basis = taylor_basis(L, frac(1, 2), 12);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].coeff(0) == 1);
    CHECK(basis[0].coeff(1) == 0);
    CHECK(basis[0].coeff(2) == frac(-1, 2));
    CHECK(basis[1].coeff(1) == 1);
    CHECK(basis[1].coeff(3) == frac(-1, 6));
}

TEST_CASE("identity conjugation and variable changes")
{
    DiffOperator L11 = fixture("L11").as_operator();
    CHECK(op_conjugate(L11, RationalFunction(0)).canonical() == L11.canonical());
    CHECK(op_invert_variable(op_invert_variable(L11)).canonical() == L11.canonical());
    DiffOperator L11star = op_invert_variable(L11);
    Series cstar = correlation_diag({1, true, 30});
    CHECK(pvf::test::zero_to(op_apply(L11star, cstar), 28));
    DiffOperator shifted = op_shift(op_shift(L11, frac(1, 2), "x"), frac(-1, 2), "t");
    CHECK(shifted.canonical() == L11.canonical());
}

TEST_CASE("exponent laws and Fuchsian structure of L_NN")
{
    for (int N = 1; N <= 6; ++N) {
        CAPTURE(N);
        FuchsianReport rep = fuchsian_analysis(fixture(diag_name(N)).as_operator());
        CHECK(rep.all_regular);
        CHECK(rep.apparent_points.empty());
        REQUIRE(rep.singular_points.size() == 3);
        CHECK(exponents_at(rep, Place::at(0)) == rho(N, '0'));
        CHECK(exponents_at(rep, Place::at(1)) == rho(N, '1'));
        CHECK(exponents_at(rep, Place::infinity()) == rho(N, 'i'));
        CHECK(exponent_sum(rep) == Rational((N + 1) * N / 2));
    }
}

TEST_CASE("symmetric square identity with A2, R2")
{
    DiffOperator L11 = fixture("L11").as_operator(), L22 = fixture("L22").as_operator();
    DiffOperator A2 = fixture("A2").as_operator(), R2 = fixture("R2").as_operator();
    DiffOperator S2 = symmetric_power(L11, 2).monic();
    CHECK((A2 * L22.monic() - S2 * R2).is_zero());
    auto it = intertwiner_search(L22.monic(), S2, 2, 6);
    REQUIRE(it.has_value());
    CHECK(it->A.same_up_to_scalar(A2));
    CHECK(it->R.same_up_to_scalar(R2));
}

TEST_CASE("L11 in s is homomorphic to L_E")
{
    DiffOperator L11s = op_substitute_power(fixture("L11").as_operator(), 4, "s");
    DiffOperator LE = fixture("LE").as_operator();
    DiffOperator A = fixture("L11_LE_A").as_operator(), R = fixture("L11_LE_R").as_operator();
    CHECK((A * L11s.monic() - LE * R).is_zero());
    CHECK_FALSE((A * L11s - LE * R).is_zero());
    auto it = intertwiner_search(L11s.monic(), LE, 1, 8);
    REQUIRE(it.has_value());
    CHECK(it->A.same_up_to_scalar(A));
    CHECK(it->R.same_up_to_scalar(R));
}

TEST_CASE("order-one equivalences with L_E")
{
    DiffOperator LE = fixture("LE").as_operator();
    DiffOperator l1 = fixture("l1").as_operator();
    const Poly s = Poly::x();
    DiffOperator conj = op_conjugate(l1, RationalFunction(s, s * s + Poly(1)));
    CHECK(conj.monic() == fixture("l1_conj").as_operator().monic());
    for (const char* name : {"l1_conj", "L1"}) {
        CAPTURE(name);
        DiffOperator L = fixture(name).as_operator().monic();
        auto it = intertwiner_search(L, LE.monic(), 1, 6);
        REQUIRE(it.has_value());
        CHECK((it->A * L - LE.monic() * it->R).is_zero());
    }
}

TEST_CASE("L3 is homomorphic to the symmetric cube of L_E")
{
    DiffOperator S3 = symmetric_power(fixture("LE").as_operator(), 3).monic();
    DiffOperator L3 = fixture("L3").as_operator().monic();
    auto it = intertwiner_search(S3, L3, 3, 9, 5);
    REQUIRE(it.has_value());
    CHECK((it->A * S3 - L3 * it->R).is_zero());

    // R sends E^3 to a multiple of the cubic part of C(1,3)
    const long order = 40;
    Series y = elliptic_series(EllipticKind::E, order + 10).pow(3);
    Series image = Series::constant("s", 0).truncated(order + 10);
    for (int i = 0; i <= it->R.order(); ++i) {
        const RationalFunction& c = it->R.coeff(i);
        Series den = Series::from_poly("s", c.den()).truncated(order + 20);
        image += Series::from_poly("s", c.num()) * series_reciprocal(den) * y;
        y = series_derivative(y);
    }
    Series piece = ek_evaluate(fixture("C13").as_ek_form().homogeneous_part(3), order + 10);
    const Rational k = image.coeff(image.leading_exponent()) / piece.coeff(piece.leading_exponent());
    CHECK(zero_to(image - piece * Series::constant("s", k), order - 10));
}

TEST_CASE("property: symmetric powers annihilate products of solutions")
{
    Random rng(201);
    const Rational t0 = frac(1, 2);
    for (int i = 0; i < kPropertyCases; ++i) {
        Poly lead;
        do lead = rng.nonzero_poly(2, 3);
        while (lead(t0) == 0);
        DiffOperator L = DiffOperator::from_polys("t", {rng.poly(2, 3), rng.poly(2, 3), lead});
        const long order = 14;
        auto y = taylor_basis(L, t0, order);
        for (int N = 1; N <= 4; ++N) {
            DiffOperator S = op_shift(symmetric_power(L, N), t0, "x");
            for (int a = 0; a <= N; ++a) {
                Series r = op_apply(S, y[0].pow(a) * y[1].pow(N - a));
                CHECK(r.is_zero());
            }
        }
    }
}

TEST_CASE("property: LCLM is right-divisible by both operands")
{
    Random rng(202);
    for (int i = 0; i < kPropertyCases; ++i) {
        DiffOperator A = rng.op("t", static_cast<int>(rng.integer(1, 2)), 2);
        DiffOperator B = rng.op("t", static_cast<int>(rng.integer(1, 2)), 2);
        DiffOperator M = lclm(A, B);
        CHECK(M.order() <= A.order() + B.order());
        CHECK(right_divide(M, A).second.is_zero());
        CHECK(right_divide(M, B).second.is_zero());
    }
}

TEST_CASE("property: operator multiplication is associative")
{
    Random rng(203);
    for (int i = 0; i < kPropertyCases; ++i) {
        DiffOperator A = rng.op("t", static_cast<int>(rng.integer(0, 2)), 2);
        DiffOperator B = rng.op("t", static_cast<int>(rng.integer(0, 2)), 2);
        DiffOperator C = rng.op("t", static_cast<int>(rng.integer(0, 2)), 2);
        CHECK((A * B) * C == op_multiply(A, op_multiply(B, C)));
    }
}

TEST_CASE("property: Fuchs relation under conjugation by t^a (t-1)^b")
{
    Random rng(204);
    for (int i = 0; i < kPropertyCases; ++i) {
        const int N = static_cast<int>(rng.integer(1, 3));
        const Rational a = rng.rational(3, 4), b = rng.rational(3, 4);
        RationalFunction r = RationalFunction(Poly(a), kT) + RationalFunction(Poly(b), kT - Poly(1));
        DiffOperator L = op_conjugate(fixture(diag_name(N)).as_operator(), r);
        FuchsianReport rep = fuchsian_analysis(L);
        CAPTURE(N);
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        CHECK(rep.all_regular);
        CHECK(rep.apparent_points.empty());
        CHECK(rep.singular_points.size() <= 3);
        CHECK(exponent_sum(rep) == Rational((N + 1) * N / 2));
        if (a != 0) {
            std::vector<Rational> want;
            for (const auto& e : rho(N, '0')) want.push_back(e - a);
            CHECK(exponents_at(rep, Place::at(0)) == want);
        }
    }
}

TEST_CASE("catalog operators are singular only where stated")
{
    for (const auto& name : fixture_names()) {
        const Fixture& f = fixture(name);
        if (f.kind() != FixtureKind::Operator) continue;
        CAPTURE(name);
        const DiffOperator& L = f.as_operator();
        FuchsianReport rep = fuchsian_analysis(L);
        CHECK(rep.all_regular);
        for (const auto& e : rep.singular_points) {
            if (e.apparent) continue;
            const Place& p = e.point;
            bool allowed = p.kind == Place::Kind::Infinity;
            if (p.kind == Place::Kind::Rational)
                allowed = p.value == 0 || p.value == 1 || (L.variable() == "s" && p.value == -1);
            if (p.kind == Place::Kind::Algebraic) allowed = L.variable() == "s" && p.minimal == kT * kT + Poly(1);
            CHECK_MESSAGE(allowed, p.str(L.variable()));
        }
    }
}
