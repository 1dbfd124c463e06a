#include "common.hpp"

#include <doctest.h>

using namespace pvf;
using pvf::test::zero_to;

TEST_CASE("both hypergeometric branches give the same a_{-1}")
{
    CHECK(toeplitz_entry_upper(-1, 30) == toeplitz_entry_lower(-1, 30));
    CHECK_THROWS_AS(toeplitz_entry_upper(-2, 30), Error);
    CHECK_THROWS_AS(toeplitz_entry_lower(0, 30), Error);
}

TEST_CASE("determinant kernels agree with cofactor expansion")
{
    for (int N = 1; N <= 3; ++N) {
        for (bool dual : {false, true}) {
            SeriesMatrix m = toeplitz_matrix({N, dual, 20}, 24);
            Series det = series_determinant(m);
            CHECK(det == series_determinant_serial(m));
            Series laplace = series_determinant_laplace(m);
            CHECK(zero_to(det - laplace, std::min(det.valid_exponent(), laplace.valid_exponent())));
        }
    }
}

TEST_CASE("C*(1,1) is the complete elliptic integral E")
{
    Series c = correlation_diag({1, true, 30});
    Series e = elliptic_series(EllipticKind::E, 30, false, "t");
    CHECK(zero_to(c - e, 30));
}

TEST_CASE("correlation series are stable under a longer entry budget")
{
    for (int N = 1; N <= 3; ++N) {
        Series a = correlation_diag({N, false, 25});
        Series b = correlation_diag({N, false, 35}).truncated(a.valid_exponent());
        CHECK(a == b);
    }
    CHECK_THROWS_WITH_AS(correlation_diag({3, false, 30}, 5), doctest::Contains("truncation deficit"), Error);
}

TEST_CASE("E/K closed forms cancel their poles at s = 0")
{
    for (const char* name : {"C22", "C33", "C13"}) {
        Series s = ek_evaluate(fixture(name).as_ek_form(), 40);
        CHECK(s.leading_exponent() >= 0);
    }
}

TEST_CASE("E/K closed forms have the expected degrees")
{
    CHECK(fixture("C22").as_ek_form().degrees() == std::vector<int>{2});
    CHECK(fixture("C33").as_ek_form().degrees() == std::vector<int>{3});
    CHECK(fixture("C13").as_ek_form().degrees() == std::vector<int>{1, 3});
    CHECK(fixture("C01").as_ek_form().degrees() == std::vector<int>{0, 1});
}

TEST_CASE("E/K closed forms match the Toeplitz series in s")
{
    for (int N : {2, 3}) {
        Series s = ek_evaluate(fixture(pvf::test::diag_name(N).replace(0, 1, "C")).as_ek_form(), 60);
        Series c = correlation_diag({N, false, 16}).compose_power(4).renamed("s");
        CHECK(zero_to(s - c, 60));
    }
}

TEST_CASE("hypergeometric solution")
{
    HyperSolution h = hyper_solution(frac(1, 3), 1, 20);
    CHECK(h.f_plus.leading_exponent() == frac(1, 6));
    REQUIRE(h.f_minus.has_value());
    CHECK(h.f_minus->leading_exponent() == frac(-1, 6));
    CHECK(h.tau == h.f_plus + *h.f_minus);
    CHECK(hyper_solution(2, 0, 20).f_minus.has_value() == false);
}

TEST_CASE("h_N agrees with C(N,N) below the boundary gap")
{
    for (int N = 1; N <= 4; ++N) {
        const long order = 2 * N + 6;
        Series h = hyper_solution(N, 0, order).tau;
        Series c = correlation_diag({N, false, order});
        Series gap = c - h;
        CHECK(gap.leading_exponent() == frac(3 * N + 4, 2));
    }
}

TEST_CASE("boundary gap examples")
{
    BoundaryGap g1 = boundary_gap(1, 8);
    CHECK(g1.leading_exponent == frac(7, 2));
    CHECK(g1.leading_coefficient == frac(1, 1024));
    CHECK(boundary_gap_coefficient(1) == frac(1, 1024));
    CHECK(boundary_gap(2, 10).leading_exponent == 5);
    for (int N = 1; N <= 4; ++N) CHECK(boundary_gap(N, 2 * N + 6).leading_coefficient == boundary_gap_coefficient(N));
}

TEST_CASE("low-temperature gap")
{
    for (int N = 1; N <= 3; ++N) {
        LowTemperatureGap g = low_temperature_gap(N, N + 4);
        CHECK(g.gap.leading_exponent() == N + 1);
        CHECK(g.gap.leading_coefficient() == g.predicted);
    }
}
