#!/usr/bin/env python3
"""Writes data/fixtures/*.json and manifest.json from the reference forms defined below."""

import json
import pathlib
import sys

import sympy as sp

t, s, u, E, K, alpha, Nsym = sp.symbols("t s u E K alpha N")
S0, S1, S2 = sp.symbols("S0 S1 S2")

OUT = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"


def rat(x):
    x = sp.Rational(x)
    return str(x.p) if x.q == 1 else f"{x.p}/{x.q}"


def coeffs(expr, var):
    p = sp.Poly(sp.expand(expr), var)
    return [rat(c) for c in reversed(p.all_coeffs())]


def ratfun(expr, var):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    return {"numerator_coeffs": coeffs(num, var), "denominator_coeffs": coeffs(den, var)}


def operator(var, cs):
    return {"variable": str(var), "order": len(cs) - 1, "coefficients": [ratfun(c, var) for c in cs]}


def multipoly(expr, gens):
    p = sp.Poly(sp.expand(expr), *gens)
    return {
        "variables": [str(g) for g in gens],
        "terms": [{"exponents": list(m), "coefficient": rat(c)} for m, c in p.terms()],
    }


def multifraction(expr, gens):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    return {"numerator": multipoly(num, gens), "denominator": multipoly(den, gens)}


def laurent(expr):
    expr = sp.expand(expr)
    shift = 40
    p = sp.Poly(sp.expand(expr * s**shift), s)
    terms = dict(p.terms())
    exps = sorted(m[0] for m in terms)
    lo, hi = exps[0], exps[-1]
    return lo - shift, [rat(terms.get((k,), 0)) for k in range(lo, hi + 1)]


def ek_form(label, expr, sqrt_flag=False):
    p = sp.Poly(sp.expand(expr), E, K)
    mons = []
    for (i, j), c in sorted(p.terms(), key=lambda x: x[0]):
        low, cs = laurent(c)
        mons.append({"i": i, "j": j, "low": low, "laurent_coefficients": cs, "sqrt_flag": sqrt_flag})
    return {"label": label, "variable": "s", "monomials": mons}


fixtures = []


def add(name, kind, provenance, payload):
    fixtures.append((name, kind, provenance, payload))


# Operators for the diagonal correlations, coefficients of D^0..D^{N+1}.
L = {}
L[1] = [sp.Rational(1, 4) / ((t - 1) * t**2), 1 / t, 1]
L[2] = [-sp.Rational(1, 2) * (t + 2) / (t**3 * (t - 1) ** 2), -1 / ((t - 1) * t**2), 2 * (t - 2) / ((t - 1) * t), 1]
L[3] = [
    sp.Rational(9, 16) * (15 + 13 * t + 4 * t**2) / ((t - 1) ** 3 * t**4),
    sp.Rational(1, 2) * (2 * t**2 + 2 * t - 5) / (t**3 * (t - 1) ** 2),
    sp.Rational(1, 2) * (41 - 11 * t - 2 * t**2) / (t**2 * (t - 1) ** 2),
    2 * (t - 5) / ((t - 1) * t),
    1,
]
L[4] = [
    -4 * (32 + 33 * t + 20 * t**2 + 5 * t**3) / ((t - 1) ** 4 * t**5),
    (97 + 40 * t - 10 * t**2 - 12 * t**3) / ((t - 1) ** 3 * t**4),
    -sp.Rational(1, 2) * (322 + 95 * t - 9 * t**2 - 16 * t**3) / ((t - 1) ** 3 * t**3),
    (113 + 7 * t - 2 * t**2) / ((t - 1) ** 2 * t**2),
    -20 / (t * (t - 1)),
    1,
]
L[5] = [
    sp.Rational(25, 64) * (784 * t**4 + 3428 * t**3 + 6921 * t**2 + 8650 * t + 7865) / ((t - 1) ** 5 * t**6),
    sp.Rational(5, 16) * (720 * t**4 + 640 * t**3 - 2175 * t**2 - 6912 * t - 8801) / ((t - 1) ** 4 * t**5),
    -sp.Rational(1, 16) * (1552 * t**4 - 1016 * t**3 - 13191 * t**2 - 29618 * t - 29855) / (t**4 * (t - 1) ** 4),
    -sp.Rational(1, 2) * (4 * t**3 + 370 * t**2 + 1707 * t + 3503) / ((t - 1) ** 3 * t**3),
    sp.Rational(1, 4) * (52 * t**2 + 483 * t + 1617) / ((t - 1) ** 2 * t**2),
    -5 * (t + 7) / (t * (t - 1)),
    1,
]
N4 = 10162 + 7059 * t + 2411 * t**2 + 376 * t**3
N3 = 37973 + 35162 * t + 17893 * t**2 + 5116 * t**3 + 500 * t**4
N2 = -28706 - 55327 * t - 46180 * t**2 - 21437 * t**3 - 3358 * t**4 + 1736 * t**5
N1 = -390548 - 402496 * t - 240997 * t**2 - 63239 * t**3 + 24152 * t**4 + 25088 * t**5
N0 = 23814 + 26839 * t + 24583 * t**2 + 16599 * t**3 + 7345 * t**4 + 1620 * t**5
L[6] = [
    -sp.Rational(9, 2) * N0 / ((t - 1) ** 6 * t**7),
    -sp.Rational(1, 4) * N1 / (t**6 * (t - 1) ** 5),
    N2 / ((t - 1) ** 5 * t**5),
    N3 / (t**4 * (t - 1) ** 4),
    -N4 / ((t - 1) ** 3 * t**3),
    14 * (81 + 39 * t + 7 * t**2) / (t**2 * (t - 1) ** 2),
    -14 * (4 + t) / ((t - 1) * t),
    1,
]
for n in range(1, 7):
    add(f"L{n}{n}", "operator", f"printed Fuchsian operator annihilating C({n},{n})", operator(t, L[n]))

add("A2", "operator", "printed left intertwiner for the second symmetric power of L11",
    operator(t, [sp.Rational(3, 4) * (15 * t - 7) / (t - 1), sp.Rational(1, 4) * (31 * t - 23) * t / (t - 1), t**2]))
add("R2", "operator", "printed right intertwiner for the second symmetric power of L11",
    operator(t, [-sp.Rational(1, 4) * (3 * t - 5) / (t - 1), sp.Rational(3, 4) * t, t**2]))
add("LE", "operator", "printed operator annihilating E(s)", operator(s, [-4 * s**2 / (s**4 - 1), 1 / s, 1]))
add("L11_LE_A", "operator", "printed left factor of the L11 to LE equivalence (s variable)",
    operator(s, [6 * s**2, (s**4 - 1) / s]))
add("L11_LE_R", "operator", "printed right factor of the L11 to LE equivalence (s variable)",
    operator(s, [-2 / s**2, (s**4 - 1) / s]))

for n in (1, 2, 3):
    add(f"Lh_N{n}", "operator", f"printed hypergeometric operator at N = {n}",
        operator(t, [-sp.Rational(1, 4) * n**2 / t**2 + sp.Rational(1, 16) / (t - 1) ** 2, 1 / t + 1 / (2 * (t - 1)), 1]))

q3 = 13 * s**8 + 30 * s**6 - 78 * s**4 - 50 * s**2 + 53
q2 = 5 * s**12 - 7 * s**10 + 34 * s**8 - 128 * s**6 - 65 * s**4 - 97 * s**2 + 2
q1 = -5 * s**14 + 2 * s**12 - 67 * s**10 - 118 * s**8 - 816 * s**6 + 157 * s**4 - 76 * s**2 - 101
q0 = -192 * s**10 + 1840 * s**8 - 453 * s**6 + 127 * s**4 - 15 * s**2 - 27
add("L12", "operator", "printed order-five operator for C(1,2)", operator(s, [
    q0 / (s**5 * (1 + s) ** 3 * (1 - s) ** 3 * (1 + s**2) ** 5),
    q1 / (s**4 * (1 + s) ** 3 * (1 - s) ** 3 * (1 + s**2) ** 4),
    q2 / (s**3 * (1 + s) ** 3 * (1 - s) ** 3 * (1 + s**2) ** 3),
    q3 / (s**2 * (1 + s) ** 2 * (1 - s) ** 2 * (1 + s**2) ** 2),
    5 * (2 * s**2 + 3) / (s * (1 + s**2)),
    1,
]))

add("L1", "operator", "printed operator for the linear part of C(1,3)", operator(s, [
    4 * (11 * s**4 - 9 * s**2 + 4) / (s**2 * (s**2 + 1) ** 2 * (s**2 - 2) * (s**2 - 1)),
    -(3 * s**4 - 7 * s**2 + 14) / (s * (s**2 + 1) * (s**2 - 2)),
    1,
]))
Nl3 = s**12 + 5 * s**10 + 14 * s**8 + 54 * s**6 + 49 * s**4 + 13 * s**2 - 1
A3 = 3 * s**14 + 15 * s**12 + 44 * s**10 + 98 * s**8 + 383 * s**6 + 415 * s**4 + 133 * s**2 - 11
A2c = (19 * s**20 + 121 * s**18 + 248 * s**16 - 408 * s**14 - 974 * s**12 + 2546 * s**10
       + 9597 * s**8 + 11440 * s**6 + 6521 * s**4 + 1277 * s**2 - 147)
A1 = (-27 * s**20 - 161 * s**18 + 240 * s**16 + 5576 * s**14 + 17854 * s**12 + 28590 * s**10
      + 30491 * s**8 + 19360 * s**6 + 8799 * s**4 + 1931 * s**2 - 333)
A0 = (-1792 * s**20 - 13136 * s**18 - 37568 * s**16 - 52256 * s**14 - 48848 * s**12
      - 32576 * s**10 - 20720 * s**8 - 1568 * s**6 + 1600 * s**4 - 688 * s**2 + 192)
add("L3", "operator", "printed operator for the cubic part of C(1,3)", operator(s, [
    A0 / (s**4 * (s**4 - 1) ** 3 * Nl3),
    A1 / (s**3 * (s**4 - 1) ** 2 * Nl3),
    A2c / (s**2 * (s**4 - 1) ** 2 * Nl3),
    -2 * A3 / ((s**2 - 1) * s * Nl3),
    1,
]))
add("l0", "operator", "printed operator for the degree-zero part of C(0,1)", operator(s, [1 / (s * (1 + s**2)), 1]))
add("l1", "operator", "printed operator for the K part of C(0,1)", operator(s, [
    (2 * s**6 + 9 * s**4 + 4 * s**2 + 1) / ((1 + s**2) ** 2 * s**2 * (s**2 - 1) ** 2),
    (s**2 - 3) / (s * (s**2 - 1)),
    1,
]))
add("l1_conj", "operator", "printed conjugate of l1 by (1+s^2)^(1/2)", operator(s, [
    (s**6 - s**4 + 7 * s**2 + 1) / ((s**2 - 1) ** 2 * (1 + s**2) * s**2),
    (-4 * s**2 + 3 * s**4 - 3) / ((1 + s**2) * s * (s**2 - 1)),
    1,
]))

# E/K closed forms.
add("C22", "ek_form", "printed E/K form of C(2,2)", ek_form("C(2,2)", sp.Rational(1, 3) / s**4 * (
    3 * (s**4 - 1) ** 2 * K**2 + 8 * (s**4 - 1) * E * K - (s**4 - 5) * E**2)))
P3 = ((33 * s**4 - 1) * (s**4 - 1) ** 3 * K**3 + 3 * (s**8 + 48 * s**4 - 1) * (s**4 - 1) ** 2 * E * K**2
      - 3 * (s**4 - 1) * (s**12 + 3 * s**8 - 69 * s**4 + 1) * E**2 * K
      - (1 + 21 * s**8 - 96 * s**4 + 10 * s**12) * E**3)
add("C33", "ek_form", "printed E/K form of C(3,3)", ek_form("C(3,3)", sp.Rational(4, 135) / s**10 * P3))
P1c13 = 2 * (s**4 - 1) * (s**2 + 1) * s**2 * K - s**2 * (s**2 + 1) * (s**4 + 3 * s**2 - 2) * E
P3c13 = ((6 * s**2 - 1 + 11 * s**4) * E**3 + (s**4 - 1) * (7 * s**4 + 12 * s**2 - 3) * K * E**2
         + (s**4 - 1) * (s**2 + 3) * (s**4 + 2 * s**2 - 1) * (s**2 - 1) * E * K**2
         + (s**4 - 1) ** 2 * (s**2 - 1) ** 2 * K**3)
add("C13", "ek_form", "printed E/K form of C(1,3)", ek_form("C(1,3)", (P1c13 + P3c13) / (3 * s**6)))
add("C01", "ek_form", "printed E/K form of C(0,1), each coefficient times (1+s^2)^(1/2)",
    ek_form("C(0,1)", sp.Rational(1, 2) / s + sp.Rational(1, 2) * (s - 1) * (s + 1) / s * K, sqrt_flag=True))

# Polynomial relations in sigma and its derivatives.
add("C22S", "curve", "printed generalized Riccati form of the operator for C(2,2)", multipoly(
    64 * t**2 * (t - 1) ** 2 * S2 - 16 * t * (8 * t + 5) * (t - 1) * S1 + 192 * t * (t - 1) * S0 * S1
    + 64 * S0**3 - 16 * (16 * t + 1) * S0**2 + 4 * (32 * t**2 + 16 * t - 21) * S0 + 45, [S0, S1, S2, t]))
nappe = ((4 * S0 - 3) * (64 * S0**3 - 16 * (16 * t + 1) * S0**2 + 4 * (64 * t**2 - 16 * t - 21) * S0 + 45)
         - 32 * t * (4 * S0 - 3) * (t - 1) * (8 * t - 1 - 4 * S0) * S1 + 256 * t**2 * (t - 1) ** 2 * S1**2)
add("nappe22", "curve", "printed rational curve in sigma, sigma' for N = 2", multipoly(nappe, [S0, S1, t]))
Q2 = 48 * S0**2 - 8 * (22 * t + 13) * S0 + 55 + 448 * t + 64 * t**2
Q1 = (-768 * S0**4 + 256 * (22 * t + 13) * S0**3 - 32 * (376 * t**2 + 584 * t + 125) * S0**2
      + 16 * (384 * t**3 + 1984 * t**2 + 766 * t + 25) * S0 + 1125 + 2880 * t - 25920 * t**2)
Q0 = (1575 + 16 * (576 * t**3 - 110 * t - 145 - 96 * t**2) * S0 - 32 * (56 * t - 9 + 264 * t**2) * S0**2
      + 256 * (10 * t + 3) * S0**3 - 256 * S0**4)
ratio3 = (4096 * t**3 * (t - 1) ** 3 * S1**3 + 256 * t**2 * (t - 1) ** 2 * Q2 * S1**2
          - 16 * t * (t - 1) * Q1 * S1 - (45 - 8 * (2 * t + 7) * S0 + 16 * S0**2) * Q0)
add("ratioN3", "curve", "printed curve in sigma, sigma' for N = 3", multipoly(ratio3, [S0, S1, t]))

a1 = -6 * t - 3 + 8 * t**2
a0 = 4 * (1 - 2 * t)
PA0 = -176 + 48 * t - 320 * t**2 + 256 * t**3
PA1 = 120 + 184 * t - 144 * t**2 + 768 * t**3 - 512 * t**4
PA2 = 9 - 57 * t + 24 * t**2 + 76 * t**3 - 448 * t**4 + 256 * t**5
B0 = 192 * t**2 - 272 * t - 112
B1 = -8 * (3 * t + 1) * (16 * t**2 - 26 * t - 3)
B2 = 45 + 51 * t - 168 * t**2 - 260 * t**3 + 192 * t**4
C0 = 1088 + 384 * t + 2624 * t**2 + 1280 * t**3 - 1536 * t**4
C1 = -1296 - 2816 * t + 688 * t**2 - 7776 * t**3 - 3840 * t**4 + 4608 * t**5
C2 = 108 + 1848 * t + 636 * t**2 - 3328 * t**3 + 8304 * t**4 + 4416 * t**5 - 4608 * t**6
C3 = 189 + 36 * t - 1323 * t**2 + 210 * t**3 + 2460 * t**4 - 2792 * t**5 - 1856 * t**6 + 1536 * t**7
Bq = B2 * u**2 + B1 * u + B0
add("param22", "parametrization", "printed rational parametrization of the N = 2 curve", {
    "S0": multifraction(sp.Rational(3, 4) * (PA2 * u**2 + PA1 * u + PA0) / Bq, [u, t]),
    "S1": multifraction(3 / t * (a1 * u + a0) * (C3 * u**3 + C2 * u**2 + C1 * u + C0) / Bq**2, [u, t]),
})
lead = 16 * t * (t - 1) * (6 * t**2 - 5 * t - 9)
add("riccati22", "riccati", "printed Riccati equation for the uniformizing parameter, N = 2", {
    "beta2": multifraction((63 - 135 * t - 120 * t**2 - 140 * t**3 + 192 * t**4) / lead, [t]),
    "beta1": multifraction(8 * (15 + 51 * t + 46 * t**2 - 60 * t**3) / lead, [t]),
    "beta0": multifraction((-272 - 112 * t + 192 * t**2) / lead, [t]),
})

# Hamiltonian variables for N = 2.
Np1 = -(9 * t - 1) * (t - 1) ** 2 * K**2 - 2 * (17 * t - 1) * (t - 1) * E * K + (1 + t**2 - 34 * t) * E**2
Np2 = -(t - 1) * K**2 - 2 * E * K + E**2
Dp1 = -3 * K**2 * (t - 1) ** 2 - 8 * (t - 1) * E * K + (-5 + t) * E**2
Dp2 = -K**2 * (t - 1) ** 2 + 2 * (t - 1) ** 2 * E * K + (5 * t - 1) * E**2
Nq = -(3 * t - 11) * (t - 1) ** 2 * K**2 + 2 * (t - 1) * (3 * t**2 - t + 14) * E * K + (17 * t**2 - 2 * t + 17) * E**2
pexpr = -((t + 1) * E + (t - 1) * K) * Np1 * Np2 / (2 * t * (2 * E + (t - 1) * K) * Dp1 * Dp2)
qexpr = -t * (2 * E + (t - 1) * K) * Nq / (((t + 1) * E + (t - 1) * K) * Np1)
add("hamiltonian22", "hamiltonian_pq", "printed Hamiltonian variables p, q for N = 2", {
    "n1": "1", "n2": "-1/2", "n3": "3/2", "n4": "1",
    "p": multifraction(pexpr, [E, K, t]),
    "q": multifraction(qexpr, [E, K, t]),
})

# Local expansion coefficients reduced to the Ising parameters.
a_0m1 = (alpha - 2 * Nsym) / (16 * alpha)
add("jimbo_ising", "jimbo_table", "printed Ising reductions of the local expansion coefficients at t = 1", {
    "p1": multifraction(alpha**2 / 4, [alpha, Nsym]),
    "a_0m1": multifraction(a_0m1, [alpha, Nsym]),
    "a_10": multifraction((1 - alpha**2) / 8, [alpha, Nsym]),
    "a_0m2": multifraction(a_0m1**2 * ((alpha - 2) ** 2 - (2 * Nsym) ** 2) / (256 * (alpha - 2) ** 2), [alpha, Nsym]),
})


def fnv1a64(data):
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


OUT.mkdir(parents=True, exist_ok=True)
manifest = []
for name, kind, prov, payload in fixtures:
    body = json.dumps({"name": name, "kind": kind, "provenance": prov, "payload": payload}, indent=1) + "\n"
    data = body.encode()
    (OUT / f"{name}.json").write_bytes(data)
    manifest.append({"name": name, "kind": kind, "file": f"{name}.json", "provenance": prov, "fnv1a64": fnv1a64(data)})
(OUT / "manifest.json").write_text(json.dumps({"fixtures": manifest}, indent=1) + "\n")
print(f"wrote {len(manifest)} fixtures to {OUT}")
