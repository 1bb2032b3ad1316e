"""Independent brute-force oracles used by the tests.

Everything here recomputes expected values from first principles, by routes
disjoint from the library's own algorithms: explicit monomial polynomials in
finitely many variables, the Frobenius alternant formula for characters,
Euler's pentagonal recurrence for partition counts, and numpy root-finding
for cyclotomic polynomials.
"""

from __future__ import annotations

import itertools

import numpy as np

Mono = dict  # exponent tuple -> coefficient


def pentagonal_partition_counts(limit: int) -> list[int]:
    """p(0..limit) by Euler's pentagonal number recurrence."""
    counts = [1]
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > n:
                    break
                total += (-1) ** (k + 1) * counts[n - g]
            if k * (3 * k - 1) // 2 > n:
                break
            k += 1
        counts.append(total)
    return counts


def mono_mul(a: Mono, b: Mono) -> Mono:
    out: Mono = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def power_sum_mono(r: int, nvars: int) -> Mono:
    out: Mono = {}
    for i in range(nvars):
        exp = [0] * nvars
        exp[i] = r
        out[tuple(exp)] = 1
    return out


def p_mu_mono(mu, nvars: int) -> Mono:
    out: Mono = {(0,) * nvars: 1}
    for part in mu:
        out = mono_mul(out, power_sum_mono(part, nvars))
    return out


def h_k_mono(k: int, nvars: int) -> Mono:
    out: Mono = {}
    for combo in itertools.combinations_with_replacement(range(nvars), k):
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + 1
    return out


def vandermonde_mono(nvars: int) -> Mono:
    """The alternant sum over permutations of sign * x^(sigma applied to delta)."""
    delta = tuple(range(nvars - 1, -1, -1))
    out: Mono = {}
    for perm in itertools.permutations(range(nvars)):
        sign = 1
        seen = [False] * nvars
        for start in range(nvars):
            if seen[start]:
                continue
            length, cursor = 0, start
            while not seen[cursor]:
                seen[cursor] = True
                cursor = perm[cursor]
                length += 1
            if length % 2 == 0:
                sign = -sign
        exp = tuple(delta[perm[i]] for i in range(nvars))
        out[exp] = out.get(exp, 0) + sign
    return out


def frobenius_character(lam, mu) -> int:
    """chi^lam(mu) as the coefficient of x^(lam + delta) in the alternant
    times the power sum: the classical Frobenius formula, no recursion."""
    n = sum(lam)
    assert sum(mu) == n
    poly = mono_mul(vandermonde_mono(n), p_mu_mono(mu, n))
    padded = tuple(lam) + (0,) * (n - len(lam))
    target = tuple(padded[i] + (n - 1 - i) for i in range(n))
    return poly.get(target, 0)


def ssyt_schur_mono(lam, nvars: int) -> Mono:
    """Monomial expansion of the Schur polynomial by enumerating semistandard
    tableaux with entries 1..nvars."""
    if not lam:
        return {(0,) * nvars: 1}
    rows = len(lam)
    out: Mono = {}

    def fill(row: int, col: int, tableau):
        if row == rows:
            exp = [0] * nvars
            for r in tableau:
                for v in r:
                    exp[v] += 1
            key = tuple(exp)
            out[key] = out.get(key, 0) + 1
            return
        nrow, ncol = (row, col + 1) if col + 1 < lam[row] else (row + 1, 0)
        lo = 0
        if col > 0:
            lo = tableau[row][col - 1]  # weakly increasing along rows
        if row > 0 and col < lam[row - 1]:
            lo = max(lo, tableau[row - 1][col] + 1)  # strictly down columns
        for v in range(lo, nvars):
            tableau[row].append(v)
            fill(nrow, ncol, tableau)
            tableau[row].pop()

    fill(0, 0, [[] for _ in range(rows)])
    return out


def schur_decompose(poly: Mono, nvars: int) -> dict[tuple, int]:
    """Write a symmetric polynomial as an integer combination of Schur
    polynomials by repeatedly stripping the lex-leading term."""
    work = {k: v for k, v in poly.items() if v}
    out: dict[tuple, int] = {}
    while work:
        lead = max(work)
        shape = tuple(x for x in lead if x)
        assert all(
            shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
        ), f"leading exponent {lead} is not a partition"
        coeff = work[lead]
        out[shape] = coeff
        for key, value in ssyt_schur_mono(shape, nvars).items():
            updated = work.get(key, 0) - coeff * value
            if updated:
                work[key] = updated
            else:
                work.pop(key, None)
    return out


def cyclotomic_from_roots(order: int) -> list[int]:
    """Phi_order via numpy: the monic polynomial over the primitive roots,
    rounded back to integers."""
    primitive = [
        np.exp(2j * np.pi * k / order)
        for k in range(1, order + 1)
        if np.gcd(k, order) == 1
    ]
    coeffs = np.poly(primitive)  # leading coefficient first
    rounded = [round(c.real) for c in coeffs]
    assert all(abs(c - r) < 1e-8 for c, r in zip(coeffs, rounded))
    return rounded[::-1]  # constant first


def newton_power_sums_from_poly(coeffs, count: int):
    """Power sums of the roots of prod(1 - a_i t) = sum coeffs[k] t^k, via
    Newton's identities on the signed elementary symmetric functions."""
    e = [(-1) ** k * coeffs[k] for k in range(len(coeffs))]
    degree = len(coeffs) - 1
    sums = []
    for r in range(1, count + 1):
        value = 0
        for i in range(1, r):
            if r - i <= degree:
                value = value + (-1) ** (r - i - 1) * e[r - i] * sums[i - 1]
        if r <= degree:
            value = value + (-1) ** (r - 1) * r * e[r]
        sums.append(value)
    return sums
