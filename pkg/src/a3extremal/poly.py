"""Dense polynomials as coefficient lists, lowest power first.

Coefficients may be ints, Fractions, floats or complex numbers; every
routine uses only ring operations (plus one division per series term), so
exact input stays exact.
"""

from __future__ import annotations

from math import comb


def trim(p: list) -> list:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def sub(p: list, q: list) -> list:
    return add(p, scale(q, -1))


def scale(p: list, c) -> list:
    return [c * v for v in p]


def mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def power(p: list, k: int) -> list:
    out = [1]
    for _ in range(k):
        out = mul(out, p)
    return out


def monomial(k: int, c=1) -> list:
    return [0] * k + [c]


def shift(p: list, k: int) -> list:
    """z^k * p(z)."""
    return [0] * k + list(p)


def evaluate(p: list, z):
    acc = 0 * z
    for c in reversed(p):
        acc = acc * z + c
    return acc


def derivative(p: list) -> list:
    return [i * p[i] for i in range(1, len(p))] or [0]


def series_div(num: list, den: list, order: int) -> list:
    """Maclaurin coefficients 0..order of num/den (den[0] != 0) by long division."""
    if den[0] == 0:
        raise ZeroDivisionError("denominator vanishes at z = 0")
    out = []
    for i in range(order + 1):
        s = num[i] if i < len(num) else 0
        for j in range(1, min(i, len(den) - 1) + 1):
            s -= den[j] * out[i - j]
        out.append(s / den[0])
    return out


def inverse_one_minus_z2(k: int, order: int) -> list:
    """Series of (1 - z^2)^(-k) through z^order."""
    out = [0] * (order + 1)
    for j in range(order // 2 + 1):
        out[2 * j] = comb(j + k - 1, k - 1)
    return out
