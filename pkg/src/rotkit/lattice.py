"""Exact integer linear algebra on dense row-major matrices.

Matrices are plain ``list[list[int]]``.  Everything acts on rows: a matrix
stands for the subgroup of Z^n generated by its rows, and maps are applied
as ``x -> x @ A``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]


class LatticeError(ValueError):
    pass


class NoRationalSolution(LatticeError):
    """The target vector is not in the Q-span of the rows."""


class RationalButNotIntegral(LatticeError):
    """The target is in the Q-span, but only with non-integral coefficients."""

    def __init__(self, solution: list[Fraction]):
        self.solution = solution
        super().__init__(f"unique rational solution is not integral: {[str(x) for x in solution]}")


class NotASummand(LatticeError):
    pass


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> IntMatrix:
    return [[0] * n for _ in range(m)]


def transpose(A: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(x: Sequence, A: Sequence[Sequence]) -> list:
    if not A:
        return []
    return [sum(xi * row[j] for xi, row in zip(x, A)) for j in range(len(A[0]))]


def hstack(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if len(A) != len(B):
        raise ValueError("hstack needs equal row counts")
    return [list(a) + list(b) for a, b in zip(A, B)]


def _copy(A: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(map(int, row)) for row in A]


def _ncols(A: Sequence[Sequence]) -> int:
    return len(A[0]) if A else 0


def hnf(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  ``H`` is in
    row echelon form with positive pivots, every entry above a pivot lies in
    ``[0, pivot)``, and zero rows sit at the bottom.
    """
    H = _copy(A)
    m, n = len(H), _ncols(H)
    U = identity(m)
    r = 0
    for j in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if H[i][j]]
            if not live:
                break
            p = min(live, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][j]:
                        done = False
            if done:
                break
        if not H[r][j]:
            continue
        if H[r][j] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        piv = H[r][j]
        for i in range(r):
            q = H[i][j] // piv
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return H, U


def rank(A: Sequence[Sequence[int]]) -> int:
    H, _ = hnf(A)
    return sum(1 for row in H if any(row))


def rational_rank(A: Sequence[Sequence]) -> int:
    M = [[Fraction(x) for x in row] for row in A]
    r = 0
    n = _ncols(M)
    for j in range(n):
        p = next((i for i in range(r, len(M)) if M[i][j]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][j]:
                f = M[i][j] / M[r][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def row_basis(A: Sequence[Sequence[int]]) -> IntMatrix:
    """A Z-basis (the nonzero HNF rows) of the row lattice of ``A``."""
    H, _ = hnf(A)
    return [row for row in H if any(row)]


@dataclass(frozen=True)
class SnfResult:
    d: list[int]
    left: IntMatrix
    right: IntMatrix

    @property
    def nonzero(self) -> list[int]:
        return [x for x in self.d if x]


def _is_diagonal(D: IntMatrix) -> bool:
    return all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[i])) if i != j)


def snf(A: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with transforms: ``left @ A @ right == diag(d)``.

    ``d`` has length ``min(rows, cols)``, is nonnegative, satisfies the
    divisibility chain, and has its zeros at the end.
    """
    D = _copy(A)
    m, n = len(D), _ncols(D)
    L, R = identity(m), identity(n)
    if m == 0 or n == 0:
        return SnfResult([], L, R)
    # Alternate row and column HNF passes until diagonal.
    while True:
        D, U = hnf(D)
        L = matmul(U, L)
        if _is_diagonal(D):
            break
        Ht, Ut = hnf(transpose(D))
        D = transpose(Ht)
        R = matmul(R, transpose(Ut))
        if _is_diagonal(D):
            break

    k = min(m, n)

    def swap(i: int, j: int):
        L[i], L[j] = L[j], L[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        D[i][i], D[j][j] = D[j][j], D[i][i]

    # Nonzero entries first.
    for t in range(k):
        if not D[t][t]:
            s = next((s for s in range(t + 1, k) if D[s][s]), None)
            if s is not None:
                swap(t, s)

    r = sum(1 for i in range(k) if D[i][i])
    for i in range(r):
        for j in range(i + 1, r):
            a, b = D[i][i], D[j][j]
            if b % a == 0:
                continue
            g, s, t = _xgcd(a, b)
            # [[s, t], [-b/g, a/g]] diag(a, b) [[1, -t b/g], [1, s a/g]] = diag(g, ab/g)
            Li, Lj = L[i], L[j]
            L[i] = [s * x + t * y for x, y in zip(Li, Lj)]
            L[j] = [-(b // g) * x + (a // g) * y for x, y in zip(Li, Lj)]
            for row in R:
                ci, cj = row[i], row[j]
                row[i] = ci + cj
                row[j] = -(t * b // g) * ci + (s * a // g) * cj
            D[i][i], D[j][j] = g, a * b // g
    for i in range(r):
        if D[i][i] < 0:
            D[i][i] = -D[i][i]
            L[i] = [-x for x in L[i]]
    return SnfResult([D[i][i] for i in range(k)], L, R)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    x, nx, y, ny = 1, 0, 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    return snf(A).nonzero


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    M = _copy(A)
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("det needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((i for i in range(k + 1, n) if M[i][k]), None)
            if p is None:
                return 0
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def unimodular_inverse(A: Sequence[Sequence[int]]) -> IntMatrix:
    n = len(A)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise LatticeError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise LatticeError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def kernel_basis(A: Sequence[Sequence[int]]) -> IntMatrix:
    """HNF-reduced Z-basis of the left kernel ``{x : x @ A == 0}``.

    The result is always saturated, since it consists of rows of a unimodular
    transform.
    """
    H, U = hnf(A)
    ker = [u for u, h in zip(U, H) if not any(h)]
    return row_basis(ker) if ker else []


def solve_rational(B: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    """The unique ``x`` with ``x @ B == v``.  Rows of ``B`` must be Q-independent."""
    k = len(B)
    n = len(v)
    # Columns of the augmented system are the k unknowns.
    aug = [[Fraction(B[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if aug[i][c]), None)
        if p is None:
            raise LatticeError("rows of B are not linearly independent")
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        aug[r] = [x / piv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(r)
        r += 1
    if any(aug[i][k] for i in range(r, n)):
        raise NoRationalSolution("vector is not in the rational span of the rows")
    return [aug[i][k] for i in pivots]


def solve_integral(B: Sequence[Sequence], v: Sequence) -> list[int]:
    """Integer ``x`` with ``x @ B == v``.

    ``B`` may have rational entries (flattened character tables do).  Raises
    ``NoRationalSolution`` or ``RationalButNotIntegral``.
    """
    x = solve_rational(B, v)
    if any(c.denominator != 1 for c in x):
        raise RationalButNotIntegral(x)
    return [int(c) for c in x]


def in_row_lattice(A: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    basis = row_basis(A)
    if not any(v):
        return True
    if not basis:
        return False
    try:
        solve_integral(basis, v)
    except (NoRationalSolution, RationalButNotIntegral):
        return False
    return True


def is_direct_summand(M: Sequence[Sequence[int]]) -> bool:
    """True iff the row lattice of ``M`` is a direct summand of Z^n."""
    return all(d == 1 for d in invariant_factors(M))


def complete_to_basis(M: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Rows that, together with any Z-basis of row-span(M), form a basis of Z^n."""
    n = _ncols(M) if M else ncols
    if n is None:
        raise ValueError("ncols is required for an empty matrix")
    if not M or not any(any(row) for row in M):
        return identity(n)
    res = snf(M)
    r = len(res.nonzero)
    if any(d != 1 for d in res.nonzero):
        raise NotASummand(f"invariant factors {res.nonzero} are not all 1")
    # M = left^-1 diag(1..1, 0..0) right^-1, so the first r rows of right^-1
    # span the row lattice and the remaining rows complete it.
    return unimodular_inverse(res.right)[r:]
