#pragma once

#include "pvf/diffop.hpp"
#include "pvf/multipoly.hpp"
#include "pvf/ratfun.hpp"
#include "pvf/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvf {

enum class Regime { High, Low };

struct SigmaBundle {
    Series S0, S1, S2, S3;
    Regime regime = Regime::High;
    Rational N;
};

/// sigma = t(t-1) (log C)' - 1/4 (High) or - t/4 (Low), with derivatives.
SigmaBundle sigma_bundle(const Series& C, Regime regime, const Rational& N);

/// Bundle whose S0 is the given series.
SigmaBundle bundle_from_series(const Series& s0, Regime regime, const Rational& N);

struct PVIParams {
    Rational v1, v2, v3, v4;
    Rational K1() const { return v1 * v2 - v1 * v3 - v2 * v3; }
    Rational K2() const { return -(v1 * v2 - v1 * v3 - v1 * v4 - v2 * v3 - v2 * v4 + v3 * v4) / 2; }
};

PVIParams ising_params(const Rational& N);

/// (t(t-1)s'')^2 - N^2((t-1)s' - s)^2 + 4 s'((t-1)s' - s - 1/4)(t s' - s).
Series pvi_residual_ising(const SigmaBundle& S);

/// The four-parameter form with S0 read as zeta.
Series pvi_residual_general(const SigmaBundle& zeta, const PVIParams& v);

/// zeta = sigma - N^2 t/4 + 1/8.
SigmaBundle zeta_from_sigma(const SigmaBundle& S);

/// zeta = t(t-1)(log tau)' + K1 t + K2.
SigmaBundle zeta_from_tau(const Series& tau, const PVIParams& v);

/// The Ising relation as a polynomial in S0, S1, S2, t.
MultiPoly pvi_polynomial(const Rational& N);

struct JimboData {
    PVIParams v;
    RationalFunction p0, p1, pinf;
    RationalFunction a_0m1;  // a1(0,-1; alpha)
    RationalFunction a_0p1;  // a1(0, 1; alpha) = a1(0,-1; -alpha)
    RationalFunction a_10;   // a1(1, 0; alpha)
    RationalFunction a_0m2;
    RationalFunction a_0p2;
    /// alpha values where some coefficient has a pole.
    std::vector<Rational> poles;
};

JimboData jimbo_coefficients(const PVIParams& v);

/// f(-alpha).
RationalFunction reflect_alpha(const RationalFunction& f);

struct Degeneration {
    Rational alpha_from_first;   // -v1 - v2 + v3 - v4
    Rational alpha_from_second;  // 2 - v1 + v2 - v3 - v4
    Rational v2_minus_v3;
    bool satisfied = false;
};
Degeneration degeneration_condition(const PVIParams& v);

struct TauPowerCheck {
    Rational constraint;
    Series residual;
};
/// tau = t^alpha (1-t)^beta, sigma = t(t-1)(log tau)' - 1/4.
TauPowerCheck tau_power_check(const Rational& alpha, const Rational& beta, const Rational& N, long order);

/// Polynomial relation in S0..S_{n-1}, t equivalent to L C = 0 under the
/// substitution C'/C = (S0 + 1/4)/(t(t-1)) (High) or (S0 + t/4)/(t(t-1)).
MultiPoly riccatize(const DiffOperator& L, Regime regime = Regime::High);

struct CurveRelation {
    MultiPoly polynomial;       // in S0, S1, t
    MultiPoly eliminant;        // the resultant it divides
    bool several_factors = false;
};

/// Eliminates S_N, ..., S_2 against the Ising relation and its derivatives,
/// then extracts the factor of the eliminant vanishing on `S`.
CurveRelation eliminate_curve(const MultiPoly& riccati, int N, const SigmaBundle& S);

Series curve_residual(const MultiPoly& curve, const SigmaBundle& S);

struct Parametrization {
    MultiFraction S0, S1;  // in u, t
};

/// curve(S0(u,t), S1(u,t), t) == 0 exactly.
bool param_verify(const MultiPoly& curve, const Parametrization& p);

struct RiccatiData {
    MultiFraction beta2, beta1, beta0;  // in t
};

/// dS0/du * (b2 u^2 + b1 u + b0) + dS0/dt - S1 == 0 exactly.
bool riccati_consistency(const Parametrization& p, const RiccatiData& r);

struct HamiltonianData {
    Rational n1, n2, n3, n4;
    /// p and q as fractions in E, K, t.
    MultiFraction p, q;
};

/// t(t-1) H as a polynomial in p, q, t.
MultiPoly hamiltonian_polynomial(const HamiltonianData& d);

/// Hamilton equations multiplied through by t(t-1).
struct HamiltonianResidual {
    Series dp;  // t(t-1)(p' + dH/dq)
    Series dq;  // t(t-1)(q' - dH/dp)
};

/// E, K are taken as 2F1(1/2, -+1/2; 1; t).
HamiltonianResidual hamiltonian_residual(const HamiltonianData& d, long order);

}  // namespace pvf
