#!/usr/bin/env python3
"""Derive the ternary cubic invariants and the c4/c6 scaling constants.

Writes include/genus1/detail/cubic_invariant_tables.hpp and
tests/fixtures/calibration.json.  Run from the repository root:

    python3 tools/derive_invariants.py
"""
import itertools
import json
import pathlib
import sys

import sympy as sp

x, y, z = sp.symbols("x y z")
X = (x, y, z)
NAMES = ["a", "b", "c", "a2", "a3", "b1", "b3", "c1", "c2", "m"]
COEF = sp.symbols(NAMES)
MONOS = [x**3, y**3, z**3, x**2 * y, x**2 * z, x * y**2, y**2 * z, x * z**2, y * z**2, x * y * z]
WEIGHT = [sp.Poly(mo, *X).monoms()[0] for mo in MONOS]
CUBIC = sum(c * mo for c, mo in zip(COEF, MONOS))


def coeff_vector(expr):
    p = sp.Poly(sp.expand(expr), *X)
    return [p.coeff_monomial(mo) for mo in MONOS]


def derivations():
    ops = []
    for i in range(3):
        for j in range(3):
            if i != j:
                ops.append(coeff_vector(X[i] * sp.diff(CUBIC, X[j])))
    return ops


def invariant(degree):
    target = (degree, degree, degree)
    monos = []
    for combo in itertools.combinations_with_replacement(range(10), degree):
        w = tuple(sum(WEIGHT[k][r] for k in combo) for r in range(3))
        if w == target:
            monos.append(combo)
    unknowns = sp.symbols(f"u0:{len(monos)}")
    cand = sum(u * sp.Mul(*[COEF[k] for k in combo]) for u, combo in zip(unknowns, monos))
    eqs = []
    for delta in derivations():
        d = sum(sp.diff(cand, COEF[k]) * delta[k] for k in range(10))
        eqs.extend(sp.Poly(sp.expand(d), *COEF).coeffs())
    sol = sp.linsolve(eqs, unknowns)
    (vec,) = list(sol)
    free = sorted(set().union(*[sp.sympify(v).free_symbols for v in vec]), key=str)
    assert len(free) == 1, free
    vec = [sp.sympify(v).subs(free[0], 1) for v in vec]
    return sp.expand(sum(v * sp.Mul(*[COEF[k] for k in combo]) for v, combo in zip(vec, monos)))


A1, A2, A3, A4, A6 = sp.symbols("a1 a2 a3 a4 a6")


def weierstrass_c4_c6():
    b2 = A1**2 + 4 * A2
    b4 = 2 * A4 + A1 * A3
    b6 = A3**2 + 4 * A6
    return sp.expand(b2**2 - 24 * b4), sp.expand(-(b2**3) + 36 * b2 * b4 - 216 * b6)


def constant_ratio(lhs, rhs):
    r = sp.simplify(lhs / rhs)
    assert r.free_symbols == set(), r
    return sp.Rational(r)


def quartic_IJ(a, b, c, d, e):
    I = 12 * a * e - 3 * b * d + c**2
    J = 72 * a * c * e + 9 * b * c * d - 27 * a * d**2 - 27 * e * b**2 - 2 * c**3
    return I, J


def main():
    root = pathlib.Path(__file__).resolve().parents[1]
    S = invariant(4)
    T = invariant(6)
    c4w, c6w = weierstrass_c4_c6()

    # degree 3: the Weierstrass cubic itself
    wcubic = {COEF[0]: -1, COEF[1]: 0, COEF[2]: -A6, COEF[3]: 0, COEF[4]: -A2,
              COEF[5]: 0, COEF[6]: 1, COEF[7]: -A4, COEF[8]: A3, COEF[9]: A1}
    k4_3 = constant_ratio(c4w, sp.expand(S.subs(wcubic)))
    k6_3 = constant_ratio(c6w, sp.expand(T.subs(wcubic)))

    # degree 2: y^2 + (a1 xz + a3 z^2) y = x^3 z + a2 x^2 z^2 + a4 x z^3 + a6 z^4
    alpha = (0, A1, A3)
    quart = (0, 1, A2, A4, A6)
    F = [sp.expand(4 * q) for q in quart]
    F[2] += alpha[1] ** 2 + 2 * alpha[0] * alpha[2]
    F[1] += 2 * alpha[0] * alpha[1]
    F[0] += alpha[0] ** 2
    F[3] += 2 * alpha[1] * alpha[2]
    F[4] += alpha[2] ** 2
    I2, J2 = quartic_IJ(*F)
    k4_2 = constant_ratio(c4w, sp.expand(I2))
    k6_2 = constant_ratio(c6w, sp.expand(J2))

    # degree 4: image of E under |4.O| with coordinates (1, x, y, x^2)
    x1, x2, x3, x4, t, s = sp.symbols("x1 x2 x3 x4 t s")
    q1 = x2**2 - x1 * x4
    q2 = x3**2 + A1 * x2 * x3 + A3 * x1 * x3 - x2 * x4 - A2 * x1 * x4 - A4 * x1 * x2 - A6 * x1**2
    v = (x1, x2, x3, x4)
    gram = lambda q: sp.Matrix(4, 4, lambda i, j: sp.diff(q, v[i], v[j]) / 2)
    G = sp.Poly(sp.expand((t * gram(q1) + s * gram(q2)).det()), t, s)
    g = [G.coeff_monomial(t ** (4 - k) * s**k) for k in range(5)]
    I4, J4 = quartic_IJ(*g)
    k4_4 = constant_ratio(c4w, sp.expand(I4))
    k6_4 = constant_ratio(c6w, sp.expand(J4))

    consts = {
        "degree2": {"c4_per_I": str(k4_2), "c6_per_J": str(k6_2)},
        "degree3": {"c4_per_S": str(k4_3), "c6_per_T": str(k6_3)},
        "degree4": {"c4_per_I": str(k4_4), "c6_per_J": str(k6_4)},
    }
    print(json.dumps(consts, indent=2))

    def table(poly, name):
        p = sp.Poly(poly, *COEF)
        rows = []
        for mono, coeff in sorted(p.terms()):
            rows.append("    {%d, {%s}}," % (int(coeff), ", ".join(str(e) for e in mono)))
        return (f"inline constexpr std::array<CubicTerm, {len(rows)}> {name}{{{{\n"
                + "\n".join(rows) + "\n}};\n")

    hdr = root / "include" / "genus1" / "detail" / "cubic_invariant_tables.hpp"
    hdr.parent.mkdir(parents=True, exist_ok=True)
    hdr.write_text(
        "// Generated by tools/derive_invariants.py. Do not edit.\n"
        "#pragma once\n\n#include <array>\n#include <cstdint>\n\n"
        "namespace genus1::detail {\n\n"
        "// Exponents follow the coefficient order (a, b, c, a2, a3, b1, b3, c1, c2, m).\n"
        "struct CubicTerm {\n  std::int64_t coeff;\n  std::array<std::uint8_t, 10> exps;\n};\n\n"
        "// Degree-4 invariant of the ternary cubic, primitive integer normalisation.\n"
        + table(S, "kCubicS") + "\n"
        "// Degree-6 invariant of the ternary cubic, primitive integer normalisation.\n"
        + table(T, "kCubicT") + "\n"
        "} // namespace genus1::detail\n")

    fx = root / "tests" / "fixtures" / "calibration.json"
    fx.parent.mkdir(parents=True, exist_ok=True)
    fx.write_text(json.dumps(consts, indent=2) + "\n")


if __name__ == "__main__":
    sys.exit(main())
