#include "common.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace pvf;
using pvf::test::kPropertyCases;
using pvf::test::Random;
using pvf::test::zero_to;

namespace fs = std::filesystem;

namespace {

MultiPoly random_multipoly(Random& rng)
{
    const std::vector<std::string> vars{"S1", "S0", "u", "t"};
    MultiPoly p;
    const long terms = rng.integer(0, 6);
    for (long k = 0; k < terms; ++k) {
        MultiPoly::Exponents e;
        for (std::size_t v = 0; v < vars.size(); ++v) e.push_back(static_cast<int>(rng.integer(0, 3)));
        p += MultiPoly::from_terms(vars, {{e, rng.rational(50, 9)}});
    }
    return p;
}

EKPolynomial random_ek(Random& rng)
{
    EKPolynomial f;
    f.label = "R" + std::to_string(rng.integer(0, 99));
    const long n = rng.integer(1, 4);
    for (long k = 0; k < n; ++k) {
        CoefficientFunction c;
        c.low = rng.integer(-6, 2);
        for (long j = rng.integer(1, 5); j > 0; --j) c.coefficients.push_back(rng.rational(30, 7));
        c.coefficients.back() = rng.nonzero_rational();
        c.coefficients.front() = rng.nonzero_rational();
        c.sqrt_factor = rng.integer(0, 1) == 1;
        f.monomials[{static_cast<int>(rng.integer(0, 3)), static_cast<int>(rng.integer(0, 3))}] = c;
    }
    return f;
}

bool same_ek(const EKPolynomial& a, const EKPolynomial& b)
{
    if (a.label != b.label || a.variable != b.variable || a.monomials.size() != b.monomials.size()) return false;
    for (const auto& [k, c] : a.monomials) {
        auto it = b.monomials.find(k);
        if (it == b.monomials.end()) return false;
        if (c.low != it->second.low || c.coefficients != it->second.coefficients || c.sqrt_factor != it->second.sqrt_factor)
            return false;
    }
    return true;
}

fs::path copy_fixtures()
{
    fs::path dir = fs::temp_directory_path() / ("pvf-fixtures-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::copy(fixture_dir(), dir, fs::copy_options::recursive);
    return dir;
}

}  // namespace

TEST_CASE("property: series serialization round-trips")
{
    Random rng(401);
    for (int i = 0; i < kPropertyCases; ++i) {
        Series s = rng.series(rng.integer(0, 1) ? "t" : "s", static_cast<int>(rng.integer(1, 4)), rng.integer(1, 10),
                              rng.integer(0, 3) == 0);
        Json j = to_json(s);
        CHECK(series_from_json(j) == s);
        CHECK(to_json(series_from_json(Json::parse(j.dump()))).dump() == j.dump());
        CHECK(series_from_text(to_text(s)) == s);
        CHECK(to_text(series_from_text(to_text(s))) == to_text(s));
        CHECK(series_from_json(j).valid_order() == s.valid_order());
    }
}

TEST_CASE("property: multivariate and operator serialization round-trips")
{
    Random rng(402);
    for (int i = 0; i < kPropertyCases; ++i) {
        MultiPoly p = random_multipoly(rng);
        CHECK(multipoly_from_json(Json::parse(to_json(p).dump())) == p);
        CHECK(multipoly_from_text(to_text(p)) == p);

        MultiFraction f(random_multipoly(rng) + MultiPoly(1), random_multipoly(rng) + MultiPoly(2));
        MultiFraction g = multifraction_from_json(to_json(f));
        CHECK(g.num == f.num);
        CHECK(g.den == f.den);
        CHECK(to_text(multifraction_from_text(to_text(f))) == to_text(f));

        DiffOperator L = rng.op("t", static_cast<int>(rng.integer(0, 3)), 3);
        L = RationalFunction(Poly(1), rng.nonzero_poly(2)) * L;
        CHECK(operator_from_json(Json::parse(to_json(L, true).dump())) == L);
        CHECK(operator_from_text(to_text(L)) == L);

        EKPolynomial e = random_ek(rng);
        CHECK(same_ek(ekform_from_json(to_json(e)), e));
        CHECK(same_ek(ekform_from_text(to_text(e)), e));

        Rational q = rng.rational(1000, 1000);
        CHECK(rational_from_json(to_json(q)) == q);
        CHECK(rational_from_text(to_text(q)) == q);
    }
}

TEST_CASE("structured formats follow the documented shapes")
{
    CHECK(to_json(frac(-3, 4)).get<std::string>() == "-3/4");
    CHECK(to_json(Rational(7)).get<std::string>() == "7");
    Json s = to_json(Series::from_coeffs("t", 2, 1, {1, frac(1, 2)}, 9));
    CHECK(s.at("variable") == "t");
    CHECK(s.at("ramification") == 2);
    CHECK(s.at("base_exponent") == 1);
    CHECK(s.at("valid_order") == 9);
    CHECK(to_json(Series::constant("t", 1)).at("valid_order").is_null());
    Json m = to_json(MultiPoly::parse("3*S0*t - 1/2"));
    CHECK(m.at("terms").size() == 2);
    CHECK(m.at("terms")[0].contains("exponents"));
    Json op = to_json(fixture("L11").as_operator(), true);
    CHECK(op.at("order") == 2);
    CHECK(op.at("coefficients")[0].contains("numerator_coeffs"));
    CHECK(op.at("cleared").size() == 3);
}

TEST_CASE("fixture lookup and errors")
{
    CHECK(fixture_names().size() == 31);
    CHECK_THROWS_WITH_AS(fixture("bogus"), doctest::Contains("no such fixture 'bogus'"), Error);
    CHECK_THROWS_WITH_AS(fixture("bogus"), doctest::Contains("L11"), Error);
    CHECK_THROWS_WITH_AS(fixture("L11").as_curve(), doctest::Contains("is a operator, not a curve"), Error);
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture& f = fixture(name);
        CHECK_FALSE(f.provenance().empty());
        CHECK(f.name() == name);
    }
}

TEST_CASE("a corrupted fixture fails its checksum")
{
    fs::path dir = copy_fixtures();
    CHECK_NOTHROW(Catalog(dir.string()));
    {
        std::ofstream f(dir / "L22.json", std::ios::app);
        f << " ";
    }
    CHECK_THROWS_WITH_AS(Catalog(dir.string()), doctest::Contains("checksum mismatch for fixture L22"), Error);
    fs::remove_all(dir);
}

TEST_CASE("the fixture directory can be overridden")
{
    const char* old = std::getenv("PVF_FIXTURE_DIR");
    ::setenv("PVF_FIXTURE_DIR", "/nonexistent/fixtures", 1);
    CHECK(fixture_dir() == "/nonexistent/fixtures");
    if (old) ::setenv("PVF_FIXTURE_DIR", old, 1);
    else ::unsetenv("PVF_FIXTURE_DIR");
    CHECK_THROWS_AS(Catalog("/nonexistent/fixtures"), Error);
}

TEST_CASE("order formula")
{
    for (int N = 1; N <= 6; ++N) {
        CHECK(order_formula(N, N) == N + 1);
        CHECK(fixture(pvf::test::diag_name(N)).as_operator().order() == N + 1);
    }
    CHECK(order_formula(1, 2) == 5);
    CHECK(fixture("L12").as_operator().order() == 5);
    CHECK(order_formula(0, 1) == 3);
    CHECK(order_formula(3, 3) == 4);
    CHECK(order_formula(0, 2) == 4);
    CHECK_THROWS_AS(order_formula(-1, 2), Error);
}

TEST_CASE("C(1,3) and C(0,1) pieces are annihilated by their operators")
{
    const EKPolynomial& c13 = fixture("C13").as_ek_form();
    CHECK(zero_to(op_apply(fixture("L1").as_operator(), ek_evaluate(c13.homogeneous_part(1), 60)), 50));
    CHECK(zero_to(op_apply(fixture("L3").as_operator(), ek_evaluate(c13.homogeneous_part(3), 60)), 50));
    const EKPolynomial& c01 = fixture("C01").as_ek_form();
    CHECK(zero_to(op_apply(fixture("l0").as_operator(), ek_evaluate(c01.homogeneous_part(0), 60)), 50));
    CHECK(zero_to(op_apply(fixture("l1").as_operator(), ek_evaluate(c01.homogeneous_part(1), 60)), 50));
    DiffOperator both = lclm(fixture("l0").as_operator(), fixture("l1").as_operator());
    CHECK(both.order() == order_formula(0, 1));
    CHECK(zero_to(op_apply(both, ek_evaluate(c01, 60)), 50));
}

TEST_CASE("hypergeometric operators annihilate h_N")
{
    for (int N = 1; N <= 3; ++N) {
        const DiffOperator& L = fixture("Lh_N" + std::to_string(N)).as_operator();
        CHECK(zero_to(op_apply(L, hyper_solution(N, 0, 40).tau), 35));
    }
}

TEST_CASE("E times K in s")
{
    Series ek = elliptic_series(EllipticKind::E, 20) * elliptic_series(EllipticKind::K, 20);
    CHECK(ek.coeff(0) == 1);
    CHECK(ek.coeff(4) == 0);
    CHECK(ek.coeff(8) == frac(1, 32));
}
