#include "common.hpp"

#include <doctest.h>

using namespace pvf;
using pvf::test::kPropertyCases;
using pvf::test::Random;
using pvf::test::zero_to;

namespace {

std::vector<std::pair<Rational, Rational>> tau_families(const Rational& N)
{
    std::vector<std::pair<Rational, Rational>> out{
        {-N * N / 2 - frac(1, 8), N * N},
        {frac(-1, 4), frac(1, 4)},
        {N / 2, -N / (4 * (N + 1))},
    };
    if (N != 1) out.push_back({-N / 2, -N / (4 * (N - 1))});
    return out;
}

}  // namespace

TEST_CASE("Ising parameters and the K constants")
{
    const Rational N = 3;
    PVIParams v = ising_params(N);
    CHECK(v.v1 == N / 2);
    CHECK(v.v2 == (1 - N) / 2);
    CHECK(v.v3 == (1 + N) / 2);
    CHECK(v.v4 == N / 2);
    Random rng(301);
    for (int i = 0; i < 20; ++i) {
        PVIParams w{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        CHECK(w.K1() == w.v1 * w.v2 - w.v1 * w.v3 - w.v2 * w.v3);
        CHECK(w.K2() == -(w.v1 * w.v2 - w.v1 * w.v3 - w.v1 * w.v4 - w.v2 * w.v3 - w.v2 * w.v4 + w.v3 * w.v4) / 2);
    }
}

TEST_CASE("sigma bundles are derivative-coherent")
{
    for (int N = 1; N <= 3; ++N) {
        for (Regime reg : {Regime::High, Regime::Low}) {
            SigmaBundle S = sigma_bundle(correlation_diag({N, reg == Regime::Low, 30}), reg, N);
            CHECK((S.S1 - S.S0.derivative()).is_zero());
            CHECK((S.S2 - S.S1.derivative()).is_zero());
            CHECK((S.S3 - S.S2.derivative()).is_zero());
        }
    }
}

TEST_CASE("sigma-form PVI vanishes on C(N,N) and C*(N,N)")
{
    for (int N = 1; N <= 4; ++N) {
        CAPTURE(N);
        SigmaBundle S = sigma_bundle(correlation_diag({N, false, 43}), Regime::High, N);
        CHECK(zero_to(pvi_residual_ising(S), 40));
        CHECK(zero_to(pvi_residual_general(zeta_from_sigma(S), ising_params(N)), 40));
        CHECK(zero_to(pvi_polynomial(N).evaluate_series({{"S0", S.S0}, {"S1", S.S1}, {"S2", S.S2}, {"t", Series::from_poly("t", Poly::x())}}), 40));
        SigmaBundle L = sigma_bundle(correlation_diag({N, true, 43}), Regime::Low, N);
        CHECK(zero_to(pvi_residual_ising(L), 40));
    }
}

TEST_CASE("a wrong N breaks the residual")
{
    SigmaBundle S = sigma_bundle(correlation_diag({2, false, 30}), Regime::High, 3);
    CHECK_FALSE(pvi_residual_ising(S).is_zero());
}

TEST_CASE("hypergeometric tau solves PVI for non-integer N")
{
    for (const Rational& N : {frac(1, 3), frac(2, 5)}) {
        for (const Rational& lambda : {Rational(0), Rational(1), Rational(-2)}) {
            CAPTURE(to_string(N));
            CAPTURE(to_string(lambda));
            HyperSolution h = hyper_solution(N, lambda, 44);
            CHECK(zero_to(pvi_residual_ising(sigma_bundle(h.tau, Regime::High, N)), 40));
            PVIParams v = ising_params(N);
            Series tau = h.tau * Series::monomial("t", 1, frac(1, 4));
            CHECK(zero_to(pvi_residual_general(zeta_from_tau(tau, v), v), 40));
        }
    }
}

TEST_CASE("algebraic tau families")
{
    for (const Rational& N : {Rational(1), Rational(2), Rational(3), frac(5, 2)}) {
        for (const auto& [a, b] : tau_families(N)) {
            CAPTURE(to_string(N));
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            TauPowerCheck c = tau_power_check(a, b, N, 30);
            CHECK(c.constraint == 0);
            CHECK(zero_to(c.residual, 30));
        }
    }
    TauPowerCheck bad = tau_power_check(1, 1, 1, 30);
    CHECK(bad.constraint == 169);
    CHECK_FALSE(bad.residual.is_zero());
}

TEST_CASE("property: the tau constraint decides the residual")
{
    Random rng(302);
    for (int i = 0; i < kPropertyCases; ++i) {
        const Rational N = rng.nonzero_rational(4, 3), a = rng.rational(3, 4), b = rng.rational(3, 4);
        TauPowerCheck c = tau_power_check(a, b, N, 12);
        CHECK((c.constraint == 0) == c.residual.is_zero());
    }
}

TEST_CASE("Jimbo coefficients reduce to the Ising table")
{
    const JimboTable& tab = fixture("jimbo_ising").as_jimbo_table();
    for (const Rational& N : {Rational(1), Rational(2), Rational(3), frac(1, 3), frac(7, 2)}) {
        CAPTURE(to_string(N));
        JimboData d = jimbo_coefficients(ising_params(N));
        CHECK(d.p1 == tab.at("p1", N));
        CHECK(d.a_0m1 == tab.at("a_0m1", N));
        CHECK(d.a_10 == tab.at("a_10", N));
        CHECK(d.a_0m2 == tab.at("a_0m2", N));
        CHECK(d.a_0m2 * RationalFunction(frac(256, 265)) != tab.at("a_0m2", N));
    }
}

TEST_CASE("Jimbo symmetry and poles")
{
    Random rng(303);
    for (int i = 0; i < 20; ++i) {
        JimboData d = jimbo_coefficients({rng.rational(), rng.rational(), rng.rational(), rng.rational()});
        CHECK(d.a_0m1 - reflect_alpha(d.a_0p1) == RationalFunction(0));
        CHECK(d.a_0m2 - reflect_alpha(d.a_0p2) == RationalFunction(0));
        for (const auto& p : d.poles) CHECK((p == 0 || p == 1 || p == -1 || p == 2 || p == -2 || p == 3 || p == -3));
    }
}

TEST_CASE("degeneration condition")
{
    CHECK(degeneration_condition({frac(1, 3), 0, 1, frac(1, 5)}).satisfied);
    Degeneration ising = degeneration_condition(ising_params(2));
    CHECK(ising.v2_minus_v3 == -2);
    CHECK_FALSE(ising.satisfied);
    CHECK(degeneration_condition(ising_params(1)).satisfied);
    CHECK_FALSE(degeneration_condition({frac(2, 7), frac(3, 11), frac(5, 13), frac(1, 17)}).satisfied);
}

TEST_CASE("riccatize L22 gives the C22S relation")
{
    MultiPoly p = riccatize(fixture("L22").as_operator());
    MultiPoly want = fixture("C22S").as_curve();
    CHECK((p.primitive() == want.primitive() || p.primitive() == (-want).primitive()));
}

TEST_CASE("elimination for N = 2 reproduces the rational curve")
{
    Series c = correlation_diag({2, false, 120});
    SigmaBundle S = sigma_bundle(c, Regime::High, 2);
    CurveRelation cr = eliminate_curve(riccatize(fixture("L22").as_operator()), 2, S);
    MultiPoly want = fixture("nappe22").as_curve().primitive();
    CHECK((cr.polynomial.primitive() == want || cr.polynomial.primitive() == -want));
    CHECK_FALSE(cr.several_factors);
    CHECK(exact_divide(cr.eliminant, cr.polynomial).has_value());
    CHECK(zero_to(curve_residual(cr.polynomial, S), 40));
}

TEST_CASE("curve residuals on the bundles")
{
    SigmaBundle S2 = sigma_bundle(correlation_diag({2, false, 45}), Regime::High, 2);
    CHECK(zero_to(curve_residual(fixture("nappe22").as_curve(), S2), 40));
    SigmaBundle S3 = sigma_bundle(correlation_diag({3, false, 45}), Regime::High, 3);
    CHECK(zero_to(curve_residual(fixture("ratioN3").as_curve(), S3), 40));
    CHECK_FALSE(curve_residual(fixture("nappe22").as_curve(), S3).is_zero());
}

TEST_CASE("parametrization and Riccati equation are exact identities")
{
    const Parametrization& p = fixture("param22").as_parametrization();
    CHECK(param_verify(fixture("nappe22").as_curve(), p));
    CHECK(riccati_consistency(p, fixture("riccati22").as_riccati()));
    RiccatiData wrong = fixture("riccati22").as_riccati();
    wrong.beta0 = wrong.beta0 + MultiFraction(MultiPoly(1));
    CHECK_FALSE(riccati_consistency(p, wrong));
    CHECK_FALSE(param_verify(fixture("ratioN3").as_curve(), p));
}

TEST_CASE("Hamiltonian residuals")
{
    const HamiltonianData& d = fixture("hamiltonian22").as_hamiltonian();
    CHECK(d.n1 == 1);
    CHECK(d.n2 == frac(-1, 2));
    CHECK(d.n3 == frac(3, 2));
    CHECK(d.n4 == 1);
    HamiltonianResidual h = hamiltonian_residual(d, 32);
    CHECK(zero_to(h.dp, 30));
    CHECK(zero_to(h.dq, 30));

    HamiltonianData neg = d;
    neg.p = MultiFraction(MultiPoly(-1)) * d.p;
    HamiltonianResidual hn = hamiltonian_residual(neg, 32);
    CHECK_FALSE((hn.dp.is_zero() && hn.dq.is_zero()));
}

TEST_CASE("the p-free term of H vanishes when n1 = n3")
{
    HamiltonianData d = fixture("hamiltonian22").as_hamiltonian();
    CHECK_FALSE(hamiltonian_polynomial(d).coeff("p", 0).is_zero());
    d.n3 = d.n1;
    CHECK(hamiltonian_polynomial(d).coeff("p", 0).is_zero());
}
