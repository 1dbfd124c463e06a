#pragma once

#include "pvf/diffop.hpp"
#include "pvf/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvf {

enum class Profile {
    /// Coefficient of D^i is t^i (t-1)^{i-1} P_i with deg P_i = m - i for
    /// i >= 2, t(t-1) P_1 and P_0 with deg P_1 = deg P_0 = m - 2.
    GForm,
    /// Every coefficient a polynomial of degree <= `degree`.
    Free,
};

struct GuessSpec {
    int order = 2;
    Profile profile = Profile::GForm;
    int degree = 0;  // Free profile only
    /// Explicit per-coefficient degree bounds; overrides `profile` when set.
    std::vector<int> degrees;
    int safety_margin = 10;
};

struct GuessResult {
    DiffOperator op;
    long unknowns = 0;
    long window = 0;    // coefficients used for fitting
    long verified = 0;  // further coefficients the operator was checked on
    int cosets = 1;     // exponent ladders x^{k/r} with r the series ramification
};

/// Number of unknown polynomial coefficients of the ansatz.
long guess_unknowns(const GuessSpec& spec);

/// Fits the ansatz on the first unknowns + margin coefficients and checks the
/// hit on the rest. Throws "insufficient series length: need K" and
/// "ambiguous: enlarge margin".
std::optional<GuessResult> guess_ode_report(const Series& y, const GuessSpec& spec);
std::optional<DiffOperator> guess_ode(const Series& y, const GuessSpec& spec);

/// Smallest order first, then smallest degree (Free profile). A hit must
/// also annihilate 20 coefficients beyond its fitting window. Throws "no
/// operator within bounds" when nothing is found.
GuessResult minimal_ode_report(const Series& y, int max_order, int max_degree, int safety_margin = 10);
DiffOperator minimal_ode(const Series& y, int max_order, int max_degree);

}  // namespace pvf
