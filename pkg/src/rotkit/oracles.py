"""Brute-force reference checks for the lattice routines.

Nothing here imports ``rotkit.lattice``.  The determinant, rank and
divisibility tests are re-implemented naively so they can serve as an
independent second route.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Sequence


def fraction_det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by rational Gaussian elimination."""
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / M[c][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return int(d)


def minor_gcds(A: Sequence[Sequence[int]]) -> list[int]:
    """``[g_1, g_2, ...]`` where ``g_k`` is the gcd of all k x k minors."""
    m = len(A)
    n = len(A[0]) if A else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, fraction_det([[A[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def expected_invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_k = g_k / g_(k-1) from minor gcds."""
    out, prev = [], 1
    for g in minor_gcds(A):
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _rank(A: Sequence[Sequence[int]]) -> int:
    n = len(A[0]) if A else 0
    for k in range(min(len(A), n), 0, -1):
        for rows in itertools.combinations(range(len(A)), k):
            for cols in itertools.combinations(range(n), k):
                if fraction_det([[A[i][j] for j in cols] for i in rows]):
                    return k
    return 0


def _cofactor_forms(M, k: int, n: int):
    """Linear forms p -> det([rows S of M; p] restricted to cols C), |S| = k - 1."""
    forms = []
    for rows in itertools.combinations(range(len(M)), k - 1):
        for cols in itertools.combinations(range(n), k):
            coeffs = [0] * n
            for pos, j in enumerate(cols):
                sub = [[M[i][c] for c in cols if c != j] for i in rows]
                sign = (-1) ** (k - 1 + pos)
                coeffs[j] = sign * (fraction_det(sub) if sub else 1)
            if any(coeffs):
                forms.append(coeffs)
    return forms


def boxed_summand_oracle(M: Sequence[Sequence[int]], box: int = 10) -> bool:
    """True iff every integer point of span_Q(rows) inside ``[-box, box]^n`` is
    an integral combination of the rows.

    Membership uses minors: for p in the rational span of the rank-r lattice L,
    p lies in L exactly when the gcd of r x r minors does not drop on adjoining p.
    """
    n = len(M[0])
    r = _rank(M)
    if r == 0:
        return True
    g_r = minor_gcds(M)[r - 1]
    in_span = _cofactor_forms(M, r + 1, n) if r < n else []
    with_p = _cofactor_forms(M, r, n)
    for p in itertools.product(range(-box, box + 1), repeat=n):
        if any(sum(a * b for a, b in zip(f, p)) for f in in_span):
            continue
        for f in with_p:
            if sum(a * b for a, b in zip(f, p)) % g_r:
                return False
    return True


def lattice_points(rows: Sequence[Sequence[int]], bound: int) -> set[tuple[int, ...]]:
    """All combinations of ``rows`` with coefficients in [-bound, bound]."""
    n = len(rows[0])
    pts = set()
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(rows)):
        pts.add(tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(n)))
    return pts
