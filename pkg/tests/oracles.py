"""Brute-force references that share no code with the package.

The cokernel oracle works with the lattice L spanned by the columns of a
matrix.  Rank comes from exact rational elimination.  Torsion comes from
enumerating the saturation of L: an integer echelon basis gives pivot
entries p_i, every coset of L inside Z^n meet span_Q(L) has exactly one
representative with pivot coordinates in prod [0, p_i), and those
representatives are found by trying every box point.  The group is then
pinned down by counting elements of each order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd


def rational_rank(cols: list[list[int]]) -> int:
    rows = [[Fraction(x) for x in c] for c in cols]
    rank = 0
    n = len(rows[0]) if rows else 0
    for j in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][j] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][j] != 0:
                f = rows[i][j] / rows[rank][j]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def echelon(cols: list[list[int]], n: int) -> list[tuple[int, list[int]]]:
    """(pivot coordinate, vector) pairs spanning the same lattice, pivots > 0."""
    vecs = [list(v) for v in cols if any(v)]
    basis = []
    for j in range(n):
        live = [v for v in vecs if v[j]]
        rest = [v for v in vecs if not v[j]]
        while len(live) > 1:
            live.sort(key=lambda v: abs(v[j]))
            small = live[0]
            for v in live[1:]:
                q = v[j] // small[j]
                for k in range(n):
                    v[k] -= q * small[k]
            rest += [v for v in live[1:] if not v[j] and any(v)]
            live = [small] + [v for v in live[1:] if v[j]]
        if live:
            v = live[0]
            if v[j] < 0:
                v = [-x for x in v]
            basis.append((j, v))
        vecs = rest
    return basis


def in_lattice(x: list[int], basis: list[tuple[int, list[int]]]) -> bool:
    x = list(x)
    for j, v in basis:
        if x[j] % v[j]:
            return False
        q = x[j] // v[j]
        x = [a - q * b for a, b in zip(x, v)]
    return not any(x)


def _solve_from_pivots(c: tuple[int, ...], basis) -> list[Fraction]:
    """The unique point of span_Q(L) with pivot coordinates c."""
    n = len(basis[0][1])
    x = [Fraction(0)] * n
    for (j, v), cj in zip(basis, c):
        # later basis vectors vanish at earlier pivots, so solve front to back
        coef = (Fraction(cj) - x[j]) / v[j]
        x = [a + coef * b for a, b in zip(x, v)]
    return x


def cokernel_oracle(rows: list[list[int]]) -> tuple[int, dict[int, int]]:
    """(free rank, {k: #torsion elements killed by k}) of Z^n / column span."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    cols = [[rows[i][j] for i in range(n)] for j in range(m)]
    r = rational_rank(cols) if cols else 0
    basis = echelon(cols, n)
    assert len(basis) == r
    reps = []
    if basis:
        for c in product(*[range(v[j]) for j, v in basis]):
            x = _solve_from_pivots(c, basis)
            if all(t.denominator == 1 for t in x):
                reps.append([int(t) for t in x])
    else:
        reps = [[0] * n]
    order = len(reps)
    killed = {}
    for k in range(1, order + 1):
        killed[k] = sum(1 for x in reps if in_lattice([k * t for t in x], basis))
    return n - r, killed


def killed_counts(torsion: tuple[int, ...], up_to: int) -> dict[int, int]:
    out = {}
    for k in range(1, up_to + 1):
        c = 1
        for d in torsion:
            c *= gcd(k, d)
        out[k] = c
    return out
