"""Exact integer linear algebra.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
everything is arbitrary precision.  Functions accept any nested sequence
and return tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence

from .errors import NotSquareError, ZeroVectorError

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def _rows(M) -> list[list[int]]:
    return [list(row) for row in M]


def _freeze(M) -> IntMatrix:
    return tuple(tuple(row) for row in M)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(M) -> IntMatrix:
    return tuple(zip(*M)) if M else ()


def matmul(A, B):
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vector_gcd(v) -> int:
    return reduce(gcd, v, 0)


def primitive(v) -> IntVector:
    """Divide an integer vector by the gcd of its entries.

    The result is parallel to ``v`` with the same orientation.

    Raises:
        ZeroVectorError: if ``v`` is the zero vector.
    """
    g = vector_gcd(v)
    if g == 0:
        raise ZeroVectorError("cannot make the zero vector primitive")
    return tuple(x // g for x in v)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def determinant(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    A = _rows(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise NotSquareError(f"matrix is {n}x{len(A[0]) if A else 0}")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def hermite_normal_form(M) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H == U @ M`` in row
    echelon form: pivots are positive and every entry above a pivot lies in
    ``[0, pivot)``.  Zero rows collect at the bottom.  ``H`` is the unique
    representative of the orbit ``{W @ M : W in GL(Z)}``.
    """
    H = _rows(M)
    m = len(H)
    n = len(H[0]) if m else 0
    U = _rows(identity(m))
    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][j]
            if b == 0:
                continue
            a = H[r][j]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            for X in (H, U):
                xr, xi = X[r], X[i]
                X[r] = [s * p + t * q for p, q in zip(xr, xi)]
                X[i] = [-bg * p + ag * q for p, q in zip(xr, xi)]
        p = H[r][j]
        if p == 0:
            continue
        if p < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
            p = -p
        for i in range(r):
            q = H[i][j] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return _freeze(H), _freeze(U)


def smith_normal_form(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``S == U @ M @ V``.

    ``S`` is diagonal with nonnegative entries ``s1 | s2 | ...`` and ``U``,
    ``V`` are unimodular.
    """
    A = _rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = _rows(identity(m))
    V = _rows(identity(n))

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for X in (A, V):
            for row in X:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for X in (A, U):
            X[dst] = [x + q * y for x, y in zip(X[dst], X[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for X in (A, V):
            for row in X:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = A[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return _freeze(A), _freeze(U), _freeze(V)
            _, i, j = best
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m)
                        if any(A[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return _freeze(A), _freeze(U), _freeze(V)


def _content(row) -> int:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g or 1


def _echelon(M) -> tuple[list[list[int]], list[int]]:
    """Fraction-free reduced echelon form: integer rows, each pivot the only
    nonzero entry of its column."""
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, m) if A[i][j]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][j]
        for i in range(m):
            if i != r and A[i][j]:
                f = A[i][j]
                row = [p * x - f * y for x, y in zip(A[i], A[r])]
                g = _content(row)
                A[i] = [x // g for x in row] if g > 1 else row
        pivots.append(j)
        r += 1
        if r == m:
            break
    return A, pivots


def row_reduce(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    A, pivots = _echelon(M)
    R = [[Fraction(x) for x in row] for row in A]
    for r, j in enumerate(pivots):
        p = A[r][j]
        R[r] = [Fraction(x, p) for x in A[r]]
    return R, pivots


def rank(M) -> int:
    if not M:
        return 0
    return len(_echelon(M)[1])


def affine_rank(points) -> int:
    """Dimension of the affine span of a nonempty point set."""
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def solve(A, b) -> Optional[tuple[Fraction, ...]]:
    """Unique rational solution of ``A x = b``, or None.

    None is returned when the system is inconsistent or underdetermined.
    """
    n = len(A[0])
    R, pivots = row_reduce([list(row) + [rhs] for row, rhs in zip(A, b)])
    if n in pivots or len(pivots) < n:
        return None
    return tuple(R[i][n] for i in range(n))


def inverse_unimodular(M) -> IntMatrix:
    """Integer inverse of a unimodular matrix."""
    n = len(M)
    A, pivots = _echelon([list(row) + list(e) for row, e in zip(M, identity(n))])
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = []
    for r in range(n):
        p = A[r][r]
        if any(x % p for x in A[r][n:]):
            raise ValueError("matrix is not unimodular")
        inv.append(tuple(x // p for x in A[r][n:]))
    return tuple(inv)


@dataclass(frozen=True)
class AffineLattice:
    """Lattice coordinates on the affine span of a set of lattice points.

    ``basis`` rows form a basis of the saturated lattice ``span ∩ Z^d``.  A
    lattice point ``x`` of the span has integer coordinates
    ``(x - origin) @ projection`` and ``x == origin + coords @ basis``.
    """

    origin: IntVector
    basis: IntMatrix
    projection: IntMatrix  # d x r

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x) -> IntVector:
        diff = [a - b for a, b in zip(x, self.origin)]
        return tuple(dot(diff, col) for col in zip(*self.projection)) if self.basis else ()

    def point(self, lam) -> IntVector:
        out = list(self.origin)
        for c, row in zip(lam, self.basis):
            if c:
                for i, b in enumerate(row):
                    out[i] += c * b
        return tuple(out)

    def contains(self, x) -> bool:
        return self.point(self.coords(x)) == tuple(x)


def affine_lattice(points: Sequence[Sequence[int]]) -> AffineLattice:
    """Lattice basis of the affine span of ``points`` via Smith normal form."""
    pts = [tuple(p) for p in points]
    origin = min(pts)
    d = len(origin)
    diffs = [[a - b for a, b in zip(p, origin)] for p in pts if p != origin]
    if not diffs:
        return AffineLattice(origin, (), tuple(() for _ in range(d)))
    S, _, V = smith_normal_form(diffs)
    r = sum(1 for i in range(min(len(S), d)) if S[i][i])
    basis = inverse_unimodular(V)[:r]
    projection = tuple(row[:r] for row in V)
    return AffineLattice(origin, basis, projection)
