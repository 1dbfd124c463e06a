#include "common.hpp"

#include "pvf/correlations.hpp"
#include "pvf/painleve.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pvf;
using pvf::test::diag_name;
using pvf::test::kPropertyCases;
using pvf::test::Random;
using pvf::test::rho;
using pvf::test::zero_to;

namespace {

// Exact arithmetic throughout: every comparison below has zero tolerance and
// the only tolerances are the numbers of verified series terms.
constexpr long kAnnihilationTerms = 40;
constexpr long kPviTerms = 40;
constexpr long kEkTerms = 50;
constexpr long kCurveTerms = 40;
constexpr long kTauTerms = 30;
constexpr long kHamiltonTerms = 30;
constexpr int kMaxDiagonal = 6;
constexpr int kGuessedDiagonal = 4;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " failed: " << what << ";";
        }
    }
};

std::vector<Rational> exponents_at(const FuchsianReport& r, const Place& p)
{
    for (const auto& e : r.singular_points)
        if (e.point.kind == p.kind && e.point.value == p.value) return e.exponents;
    return {};
}

bool same_content(const MultiPoly& a, const MultiPoly& b)
{
    return a.primitive() == b.primitive() || a.primitive() == (-b).primitive();
}

void operator_recovery(Outcome& o)
{
    for (int N = 1; N <= kGuessedDiagonal; ++N) {
        GuessSpec spec;
        spec.order = N + 1;
        const long len = guess_unknowns(spec) + 2L * spec.safety_margin + 2L * N;
        auto g = guess_ode_report(correlation_diag({N, false, len}), spec);
        o.require(g.has_value(), "no operator for " + diag_name(N));
        if (g) o.require(g->op.canonical() == fixture(diag_name(N)).as_operator().canonical(), diag_name(N) + " differs");
    }
    for (int N = kGuessedDiagonal + 1; N <= kMaxDiagonal; ++N) {
        Series c = correlation_diag({N, false, kAnnihilationTerms + N + 8});
        o.require(zero_to(op_apply(fixture(diag_name(N)).as_operator(), c), kAnnihilationTerms),
                  diag_name(N) + " residual");
    }
    o.detail << " guessed L11..L" << kGuessedDiagonal << kGuessedDiagonal << ", L55/L66 annihilate to t^"
             << kAnnihilationTerms;
}

void exponent_laws(Outcome& o)
{
    for (int N = 1; N <= kMaxDiagonal; ++N) {
        FuchsianReport rep = fuchsian_analysis(fixture(diag_name(N)).as_operator());
        o.require(exponents_at(rep, Place::at(0)) == rho(N, '0'), diag_name(N) + " at 0");
        o.require(exponents_at(rep, Place::at(1)) == rho(N, '1'), diag_name(N) + " at 1");
        o.require(exponents_at(rep, Place::infinity()) == rho(N, 'i'), diag_name(N) + " at infinity");
    }
    o.detail << " L11..L66 at 0, 1, infinity";
}

void no_apparent(Outcome& o)
{
    for (int N = 1; N <= kMaxDiagonal; ++N) {
        FuchsianReport rep = fuchsian_analysis(fixture(diag_name(N)).as_operator());
        o.require(rep.all_regular, diag_name(N) + " irregular");
        o.require(rep.apparent_points.empty(), diag_name(N) + " apparent point");
        bool places = rep.singular_points.size() == 3;
        if (places) {
            places = rep.singular_points[0].point.kind == Place::Kind::Rational && rep.singular_points[0].point.value == 0 &&
                     rep.singular_points[1].point.kind == Place::Kind::Rational && rep.singular_points[1].point.value == 1 &&
                     rep.singular_points[2].point.kind == Place::Kind::Infinity;
        }
        o.require(places, diag_name(N) + " singular set");
    }
    o.detail << " L11..L66 singular exactly at {0, 1, infinity}";
}

void symmetric_power_identity(Outcome& o)
{
    DiffOperator L11 = fixture("L11").as_operator(), L22 = fixture("L22").as_operator();
    DiffOperator A2 = fixture("A2").as_operator(), R2 = fixture("R2").as_operator();
    DiffOperator S2 = symmetric_power(L11, 2).monic();
    o.require((A2 * L22.monic() - S2 * R2).is_zero(), "A2*L22 - Sym2(L11)*R2");
    auto it = intertwiner_search(L22.monic(), S2, 2, 6);
    o.require(it.has_value(), "no intertwiner at order 2, degree 6");
    if (it) {
        o.require(it->A.same_up_to_scalar(A2), "A differs from A2");
        o.require(it->R.same_up_to_scalar(R2), "R differs from R2");
    }
    o.detail << " identity exact, (A2, R2) rediscovered";
}

void pvi_residuals(Outcome& o)
{
    for (int N = 1; N <= kMaxDiagonal; ++N) {
        const long order = kPviTerms + N;
        SigmaBundle high = sigma_bundle(correlation_diag({N, false, order}), Regime::High, N);
        o.require(zero_to(pvi_residual_ising(high), kPviTerms), "C(" + std::to_string(N) + ") high");
        SigmaBundle low = sigma_bundle(correlation_diag({N, true, order}), Regime::Low, N);
        o.require(zero_to(pvi_residual_ising(low), kPviTerms), "C*(" + std::to_string(N) + ") low");
    }
    o.detail << " N = 1.." << kMaxDiagonal << " both regimes to t^" << kPviTerms;
}

void ek_closed_forms(Outcome& o)
{
    for (int N : {2, 3}) {
        const std::string name = "C" + std::to_string(N) + std::to_string(N);
        Series s = ek_evaluate(fixture(name).as_ek_form(), kEkTerms + 4);
        Series c = correlation_diag({N, false, kEkTerms / 4 + 2}).compose_power(4).renamed("s");
        o.require(zero_to(s - c, kEkTerms), name + " vs Toeplitz");
    }
    auto piece = [&](const std::string& form, int degree, const std::string& op) {
        Series y = ek_evaluate(fixture(form).as_ek_form().homogeneous_part(degree), kEkTerms + 10);
        o.require(!y.is_zero(), form + " degree " + std::to_string(degree) + " vanishes");
        o.require(zero_to(op_apply(fixture(op).as_operator(), y), kEkTerms), op + " residual");
    };
    piece("C13", 1, "L1");
    piece("C13", 3, "L3");
    piece("C01", 0, "l0");
    piece("C01", 1, "l1");
    for (const char* name : {"C13", "C01"})
        o.require(ek_evaluate(fixture(name).as_ek_form(), kEkTerms + 10).leading_exponent() >= 0,
                  std::string(name) + " poles do not cancel");
    DiffOperator l01 = lclm(fixture("l0").as_operator(), fixture("l1").as_operator());
    o.require(zero_to(op_apply(l01, ek_evaluate(fixture("C01").as_ek_form(), kEkTerms + 10)), kEkTerms), "C01 lclm");
    o.detail << " C22, C33 vs Toeplitz, C13 and C01 pieces annihilated, to s^" << kEkTerms;
}

void riccati_and_curves(Outcome& o)
{
    o.require(same_content(riccatize(fixture("L22").as_operator()), fixture("C22S").as_curve()), "riccatize(L22)");
    const std::vector<std::pair<int, std::string>> cases{{2, "nappe22"}, {3, "ratioN3"}};
    for (const auto& [N, name] : cases) {
        const auto start = std::chrono::steady_clock::now();
        SigmaBundle S = sigma_bundle(correlation_diag({N, false, 110L * N - 100}), Regime::High, N);
        CurveRelation cr = eliminate_curve(riccatize(fixture(diag_name(N)).as_operator()), N, S);
        o.require(same_content(cr.polynomial, fixture(name).as_curve()), name + " not reproduced");
        o.require(zero_to(curve_residual(fixture(name).as_curve(), S), kCurveTerms), name + " residual");
        o.detail << " " << name << " in "
                 << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s;";
    }
}

void parametrization(Outcome& o)
{
    const Parametrization& p = fixture("param22").as_parametrization();
    o.require(param_verify(fixture("nappe22").as_curve(), p), "parametrization");
    o.require(riccati_consistency(p, fixture("riccati22").as_riccati()), "Riccati equation");
    o.detail << " both exact";
}

void boundary(Outcome& o)
{
    for (int N = 1; N <= 4; ++N) {
        BoundaryGap g = boundary_gap(N, 2L * N + 6);
        o.require(g.leading_exponent == frac(3 * N + 4, 2), "exponent for N=" + std::to_string(N));
        o.require(g.leading_coefficient == boundary_gap_coefficient(N), "coefficient for N=" + std::to_string(N));
    }
    o.require(boundary_gap(1, 8).leading_coefficient == frac(1, 1024), "N=1 coefficient");
    o.detail << " N = 1..4, N=1 coefficient 1/1024";
}

void jimbo(Outcome& o)
{
    const JimboTable& tab = fixture("jimbo_ising").as_jimbo_table();
    const RationalFunction alpha(Poly::x());
    for (const Rational& N : {Rational(1), Rational(2), Rational(3), frac(1, 3), frac(7, 2)}) {
        JimboData d = jimbo_coefficients(ising_params(N));
        const std::string n = to_string(N);
        o.require(d.p1 == tab.at("p1", N), "p1 at N=" + n);
        o.require(d.a_0m1 == tab.at("a_0m1", N), "a(0,-1) at N=" + n);
        o.require(d.a_10 == tab.at("a_10", N), "a(1,0) at N=" + n);
        o.require(d.a_0m2 == tab.at("a_0m2", N), "a(0,-2) at N=" + n);
        o.require(d.a_0m1 == (alpha - RationalFunction(2 * N)) / (RationalFunction(16) * alpha), "a(0,-1) closed form");
        o.require(d.a_10 == (RationalFunction(1) - alpha * alpha) / RationalFunction(8), "a(1,0) closed form");
    }
    Random rng(1010);
    for (int i = 0; i < 20; ++i) {
        JimboData d = jimbo_coefficients({rng.rational(), rng.rational(), rng.rational(), rng.rational()});
        o.require(d.a_0m1 == reflect_alpha(d.a_0p1), "k=1 symmetry");
        o.require(d.a_0m2 == reflect_alpha(d.a_0p2), "k=2 symmetry");
    }
    o.detail << " five Ising N values, symmetry on 20 random parameter sets";
}

void tau_families(Outcome& o)
{
    for (const Rational& N : {Rational(1), Rational(2), Rational(3), frac(5, 2)}) {
        std::vector<std::pair<Rational, Rational>> fam{
            {-(4 * N * N + 1) / 8, N * N},
            {frac(-1, 4), frac(1, 4)},
            {N / 2, -N / (4 * (N + 1))},
        };
        if (N != 1) fam.push_back({-N / 2, -N / (4 * (N - 1))});
        for (const auto& [a, b] : fam) {
            TauPowerCheck c = tau_power_check(a, b, N, kTauTerms);
            o.require(c.constraint == 0, "constraint at N=" + to_string(N));
            o.require(zero_to(c.residual, kTauTerms), "residual at N=" + to_string(N));
        }
    }
    Random rng(1111);
    for (;;) {
        const Rational N = frac(rng.integer(1, 12), rng.integer(1, 3)), a = rng.rational(3, 4), b = rng.rational(3, 4);
        TauPowerCheck c = tau_power_check(a, b, N, kTauTerms);
        if (c.constraint == 0) continue;
        o.require(!c.residual.is_zero(), "random non-solution has zero residual");
        o.detail << " families at N = 1, 2, 3, 5/2; non-solution (" << to_string(a) << ", " << to_string(b)
                 << ") at N=" << to_string(N) << " has constraint " << to_string(c.constraint);
        break;
    }
}

void hamiltonian(Outcome& o)
{
    HamiltonianResidual h = hamiltonian_residual(fixture("hamiltonian22").as_hamiltonian(), kHamiltonTerms + 2);
    o.require(zero_to(h.dp, kHamiltonTerms), "dp/dt residual");
    o.require(zero_to(h.dq, kHamiltonTerms), "dq/dt residual");
    o.detail << " both residuals to t^" << kHamiltonTerms;
}

void order_formula_check(Outcome& o)
{
    for (int N = 1; N <= kMaxDiagonal; ++N)
        o.require(order_formula(N, N) == fixture(diag_name(N)).as_operator().order(), diag_name(N));
    o.require(order_formula(1, 2) == fixture("L12").as_operator().order(), "L12");
    o.require(order_formula(0, 1) == lclm(fixture("l0").as_operator(), fixture("l1").as_operator()).order(),
              "lclm(l0, l1)");
    o.detail << " L11..L66, L12, lclm(l0, l1)";
}

void property_suites(Outcome& o)
{
    Random rng(1414);
    int cases = 0;
    for (int i = 0; i < kPropertyCases; ++i, ++cases) {
        Series a = rng.series("t", static_cast<int>(rng.integer(1, 3)), rng.integer(1, 12));
        Series b = rng.series("t", static_cast<int>(rng.integer(1, 3)), rng.integer(1, 12));
        Series d = series_derivative(a * b) - (series_derivative(a) * b + a * series_derivative(b));
        o.require(d.is_zero(), "Leibniz");
        Series r = a * series_reciprocal(a) - Series::constant("t", 1);
        o.require(r.is_zero() && r.valid_exponent() > 0, "reciprocal");
        Matrix m = pvf::test::random_low_rank(rng);
        auto ns = rational_nullspace(m);
        o.require(ns.size() == m[0].size() - static_cast<std::size_t>(rational_rank(m)), "nullspace dimension");
        for (const auto& v : ns)
            for (const auto& row : m) {
                Rational dot = 0;
                for (std::size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
                o.require(dot == 0, "nullspace exactness");
            }
    }
    const Rational t0 = frac(1, 2);
    for (int i = 0; i < kPropertyCases; ++i) {
        Poly lead;
        do lead = rng.nonzero_poly(2, 3);
        while (lead(t0) == 0);
        DiffOperator L = DiffOperator::from_polys("t", {rng.poly(2, 3), rng.poly(2, 3), lead});
        auto y = taylor_basis(L, t0, 12);
        for (int N = 1; N <= 3; ++N) {
            DiffOperator S = op_shift(symmetric_power(L, N), t0, "x");
            for (int k = 0; k <= N; ++k) o.require(op_apply(S, y[0].pow(k) * y[1].pow(N - k)).is_zero(), "Sym annihilation");
        }
        DiffOperator A = rng.op("t", static_cast<int>(rng.integer(1, 2)), 2);
        DiffOperator B = rng.op("t", static_cast<int>(rng.integer(1, 2)), 2);
        DiffOperator M = lclm(A, B);
        o.require(right_divide(M, A).second.is_zero() && right_divide(M, B).second.is_zero(), "LCLM divisibility");
        const int N = static_cast<int>(rng.integer(1, 3));
        const Rational u = rng.rational(3, 4), v = rng.rational(3, 4);
        const Poly t = Poly::x();
        DiffOperator C = op_conjugate(fixture(diag_name(N)).as_operator(),
                                      RationalFunction(Poly(u), t) + RationalFunction(Poly(v), t - Poly(1)));
        o.require(exponent_sum(fuchsian_analysis(C)) == Rational((N + 1) * N / 2), "Fuchs relation");
    }
    o.detail << " " << cases << " cases per invariant";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"operator recovery", operator_recovery},
        {"exponent laws", exponent_laws},
        {"no apparent singularities", no_apparent},
        {"symmetric-power identity", symmetric_power_identity},
        {"sigma-form PVI residuals", pvi_residuals},
        {"E/K closed forms", ek_closed_forms},
        {"Riccati form and curves", riccati_and_curves},
        {"parametrization and Riccati equation", parametrization},
        {"boundary gap", boundary},
        {"Jimbo reduction", jimbo},
        {"algebraic tau", tau_families},
        {"Hamiltonian", hamiltonian},
        {"order formula", order_formula_check},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " error: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << (i + 1 < 10 ? " " : "") << i + 1 << " " << criteria[i].first
                  << ":" << o.detail.str() << " [" << secs << " s]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
