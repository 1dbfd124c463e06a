#include "common.hpp"

#include <doctest.h>

using namespace pvf;
using pvf::test::diag_name;
using pvf::test::zero_to;

TEST_CASE("constant series is annihilated by D")
{
    Series one = Series::constant("t", 1).truncated(40);
    GuessSpec spec;
    spec.order = 1;
    spec.profile = Profile::Free;
    spec.degree = 0;
    auto L = guess_ode(one, spec);
    REQUIRE(L.has_value());
    CHECK(L->canonical() == DiffOperator::D("t"));
}

TEST_CASE("guessing recovers L11, L22, L33 from Toeplitz series")
{
    for (int N = 1; N <= 3; ++N) {
        CAPTURE(N);
        Series c = correlation_diag({N, false, 60});
        GuessSpec spec;
        spec.order = N + 1;
        auto g = guess_ode_report(c, spec);
        REQUIRE(g.has_value());
        CHECK(g->op.canonical() == fixture(diag_name(N)).as_operator().canonical());

        // leading coefficient t^{N+1} (t-1)^N up to a constant
        Poly lead = g->op.cleared().back();
        Poly want = Poly::monomial(1, N + 1) * (Poly::x() - Poly(1)).pow(N);
        CHECK(lead.monic() == want);

        // anti-overfit: the operator also kills a longer recomputation
        const long longer = g->window + g->verified + 20;
        Series c2 = correlation_diag({N, false, longer + N + 2});
        CHECK(zero_to(op_apply(g->op, c2), longer));
    }
}

TEST_CASE("order N is not enough for C(2,2)")
{
    Series c = correlation_diag({2, false, 60});
    GuessSpec spec;
    spec.order = 2;
    CHECK_FALSE(guess_ode(c, spec).has_value());
}

TEST_CASE("a short series is rejected")
{
    Series c = correlation_diag({2, false, 8});
    GuessSpec spec;
    spec.order = 3;
    CHECK_THROWS_WITH_AS(guess_ode(c, spec), doctest::Contains("insufficient series length"), Error);
}

TEST_CASE("E(s) gives L_E")
{
    Series e = elliptic_series(EllipticKind::E, 80);
    DiffOperator L = minimal_ode(e, 2, 8);
    CHECK(L.same_up_to_scalar(fixture("LE").as_operator()));
}

TEST_CASE("the s route and the t route give related operators")
{
    Series c = correlation_diag({1, false, 40});
    Series cs = c.compose_power(4).renamed("s");
    DiffOperator Ls = minimal_ode(cs, 2, 12);
    DiffOperator Lt = op_substitute_power(fixture("L11").as_operator(), 4, "s");
    CHECK(Ls.same_up_to_scalar(Lt));
}

TEST_CASE("ramified series are guessed per exponent coset")
{
    HyperSolution h = hyper_solution(frac(1, 3), 1, 80);
    REQUIRE(h.tau.ramification() == 6);
    auto g = minimal_ode_report(h.tau, 2, 4);
    CHECK(g.op.order() == 2);
    CHECK(g.cosets > 1);
    CHECK(g.op.same_up_to_scalar(minimal_ode(h.f_plus, 2, 4)));
}

TEST_CASE("unknown counts follow the profile")
{
    GuessSpec spec;
    spec.order = 3;
    CHECK(guess_unknowns(spec) > 0);
    GuessSpec free;
    free.order = 2;
    free.profile = Profile::Free;
    free.degree = 3;
    CHECK(guess_unknowns(free) == 12);
}
