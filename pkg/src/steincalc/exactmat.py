"""Exact integer and rational linear algebra.

Everything here runs on arbitrary-precision Python integers (plus
``fractions.Fraction`` for congruence pivoting); no floating point ever
enters.  The three symmetric-form invariants we need downstream are

* Smith normal form with unimodular transforms (homology cokernels),
* determinants (Bareiss, fraction-free),
* signature and negative-definiteness (exact congruence diagonalization).

Signature convention: number of positive minus number of negative
eigenvalues; zero eigenvalues contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, entries) -> "IntMatrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, key) -> int:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int):
        return self._rows[i]

    def to_lists(self):
        return [list(r) for r in self._rows]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows)) if self._rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        bt = list(zip(*other._rows)) if other._rows else []
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self._rows]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._rows]})"


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form data: left @ M @ right is diagonal.

    ``diagonal`` lists d_1, ..., d_min(m,n) with every d_i >= 0 and each
    nonzero d_i dividing its successor; ``left`` and ``right`` are
    unimodular.
    """

    diagonal: tuple
    left: IntMatrix
    right: IntMatrix

    def diagonal_matrix(self, nrows: int, ncols: int) -> IntMatrix:
        d = self.diagonal
        return IntMatrix(
            [[d[i] if i == j and i < len(d) else 0 for j in range(ncols)] for i in range(nrows)]
        )


def _snf_pivot(A, t, m, n):
    # Smallest nonzero absolute value, ties broken by lowest (row, col).
    best = None
    for i in range(t, m):
        for j in range(t, n):
            v = A[i][j]
            if v != 0 and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                best = (i, j)
    return best


def _snf_core(M: IntMatrix, track: bool):
    m, n = M.nrows, M.ncols
    A = M.to_lists()
    U = IntMatrix.identity(m).to_lists() if track else None
    V = IntMatrix.identity(n).to_lists() if track else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if track:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        Ad, As = A[dst], A[src]
        for j in range(n):
            Ad[j] += q * As[j]
        if track:
            Ud, Us = U[dst], U[src]
            for j in range(m):
                Ud[j] += q * Us[j]

    def add_col(dst, src, q):
        for r in A:
            r[dst] += q * r[src]
        if track:
            for r in V:
                r[dst] += q * r[src]

    t = 0
    while t < min(m, n):
        piv = _snf_pivot(A, t, m, n)
        if piv is None:
            break
        if piv[0] != t:
            swap_rows(t, piv[0])
        if piv[1] != t:
            swap_cols(t, piv[1])
        while True:
            # Clear column t below the pivot, trading places on nonzero
            # remainders until the pivot is the column gcd.
            restart = False
            for i in range(t + 1, m):
                if A[i][t] == 0:
                    continue
                q = A[i][t] // A[t][t]
                add_row(i, t, -q)
                if A[i][t] != 0:
                    swap_rows(t, i)
                    restart = True
            if restart:
                continue
            for j in range(t + 1, n):
                if A[t][j] == 0:
                    continue
                q = A[t][j] // A[t][t]
                add_col(j, t, -q)
                if A[t][j] != 0:
                    swap_cols(t, j)
                    restart = True
            if restart:
                continue
            # Divisibility sweep: the pivot must divide the rest of the block.
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if A[t][t] < 0:
            for j in range(n):
                A[t][j] = -A[t][j]
            if track:
                for j in range(m):
                    U[t][j] = -U[t][j]
        t += 1

    diag = tuple(A[i][i] for i in range(min(m, n)))
    if track:
        return diag, IntMatrix(U), IntMatrix(V)
    return diag, None, None


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms: left @ M @ right diagonal."""
    diag, U, V = _snf_core(M, track=True)
    return SmithForm(diagonal=diag, left=U, right=V)


def smith_diagonal(M: IntMatrix) -> tuple:
    """Just the SNF diagonal (same pivot rule, no transform bookkeeping)."""
    diag, _, _ = _snf_core(M, track=False)
    return diag


def determinant(M: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if not M.is_square:
        raise ValueError("determinant requires a square matrix")
    n = M.nrows
    if n == 0:
        return 1
    A = M.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _require_symmetric(M: IntMatrix, op: str) -> None:
    if not M.is_square or not M.is_symmetric:
        raise ValueError(f"{op} requires a symmetric matrix")


def signature(M: IntMatrix) -> int:
    """Signature by exact rational congruence diagonalization.

    Nonzero diagonal entries pivot ordinarily; an all-zero diagonal with a
    nonzero off-diagonal entry pivots as a hyperbolic 2x2 pair contributing
    one +1 and one -1.  Zero blocks contribute nothing.
    """
    _require_symmetric(M, "signature")
    n = M.nrows
    A = [[Fraction(M[i, j]) for j in range(n)] for i in range(n)]
    active = list(range(n))
    sig = 0
    while active:
        piv = next((i for i in active if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            sig += 1 if d > 0 else -1
            rest = [i for i in active if i != piv]
            for i in rest:
                ci = A[i][piv]
                if ci:
                    for j in rest:
                        A[i][j] -= ci * A[piv][j] / d
            active = rest
            continue
        pair = None
        for i in active:
            for j in active:
                if j > i and A[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i0, j0 = pair
        b = A[i0][j0]
        rest = [i for i in active if i not in (i0, j0)]
        for k in rest:
            cki, ckj = A[k][i0], A[k][j0]
            if cki == 0 and ckj == 0:
                continue
            for l in rest:
                A[k][l] -= (cki * A[l][j0] + ckj * A[l][i0]) / b
        # hyperbolic pair: +1 and -1 cancel in the signature
        active = rest
    return sig


def is_negative_definite(M: IntMatrix) -> bool:
    """Exact negative-definiteness test.

    Sylvester: leading principal minors alternate as (-1)^k.  The minors
    come out of a single swap-free Bareiss pass (the k-th pivot is the
    k-th leading minor); a zero minor leaves Sylvester inconclusive, so
    we fall back to the congruence count (definite iff signature == -n).
    """
    _require_symmetric(M, "is_negative_definite")
    n = M.nrows
    if n == 0:
        return True
    A = M.to_lists()
    prev = 1
    for k in range(n):
        minor = A[k][k]  # leading (k+1)x(k+1) principal minor
        if minor == 0:
            return signature(M) == -n
        if (minor > 0) != (k % 2 == 1):
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return True
