"""Integer Laurent polynomials, Seifert matrices, and Alexander polynomials.

A valid Seifert matrix V is a square integer matrix of even size 2k with
det(V - V^T) = 1, so V - V^T is the (unimodular, skew) intersection form
of a genus-k spanning surface.  The Alexander polynomial is
det(V - t V^T), normalized to the symmetric Laurent representative
(coefficient of t^j equals that of t^-j) with positive leading
coefficient; equality of polynomials always means equality of normalized
forms.

The fiberedness certificate is the necessary monic + full-span condition
only; this module never claims to decide fiberedness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .exactmat import IntMatrix, determinant


class NonSymmetricPolynomial(ValueError):
    """A Laurent polynomial that admits no symmetric centering."""


class LaurentPoly:
    """Immutable integer Laurent polynomial, stored as exponent -> coefficient."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        items = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                c = int(c)
                if c != 0:
                    items[int(e)] = c
        self._coeffs = dict(sorted(items.items()))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self):
        return self._coeffs.items()

    @property
    def min_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    @property
    def max_exp(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    @property
    def span(self) -> int:
        """max exponent minus min exponent; 0 for constants and zero."""
        if self.is_zero:
            return 0
        return self.max_exp - self.min_exp

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            return 0
        return self._coeffs[self.max_exp]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def evaluate_at_one(self) -> int:
        return sum(self._coeffs.values())

    def substitute_power(self, k: int) -> "LaurentPoly":
        """t -> t^k."""
        return LaurentPoly({e * k: c for e, c in self._coeffs.items()})

    @property
    def is_symmetric(self) -> bool:
        return all(self.coefficient(-e) == c for e, c in self._coeffs.items())

    def normalized(self) -> "LaurentPoly":
        """The symmetric representative with positive leading coefficient.

        Multiplies by +-t^k only; raises NonSymmetricPolynomial when no
        such representative exists.
        """
        if self.is_zero:
            return self
        total = self.min_exp + self.max_exp
        if total % 2 != 0:
            raise NonSymmetricPolynomial(f"odd exponent span in {self}")
        centered = self.shift(-total // 2)
        if not centered.is_symmetric:
            raise NonSymmetricPolynomial(f"{self} has no symmetric representative")
        if centered.leading_coefficient < 0:
            centered = -centered
        return centered

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def to_dict(self) -> dict:
        return {str(e): c for e, c in self._coeffs.items()}

    @classmethod
    def from_dict(cls, data: dict) -> "LaurentPoly":
        return cls({int(e): c for e, c in data.items()})

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                term = tpow if mag == 1 else f"{mag}*{tpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._coeffs})"


@dataclass(frozen=True)
class SeifertMatrixK:
    """A knot's Seifert matrix: even size, det(V - V^T) = 1."""

    name: str
    matrix: IntMatrix

    def __post_init__(self):
        V = self.matrix
        if not V.is_square:
            raise ValueError("Seifert matrix must be square")
        if V.nrows % 2 != 0:
            raise ValueError("Seifert matrix must have even size")
        if V.nrows > 0:
            skew = IntMatrix(
                [
                    [V[i, j] - V[j, i] for j in range(V.ncols)]
                    for i in range(V.nrows)
                ]
            )
            if determinant(skew) != 1:
                raise ValueError(f"{self.name}: det(V - V^T) != 1, not a knot Seifert pairing")

    @property
    def genus(self) -> int:
        return self.matrix.nrows // 2

    def to_dict(self) -> dict:
        return {"name": self.name, "matrix": self.matrix.to_lists()}

    @classmethod
    def from_dict(cls, data: dict) -> "SeifertMatrixK":
        return cls(name=data["name"], matrix=IntMatrix(data["matrix"]))

    @classmethod
    def from_json(cls, text: str) -> "SeifertMatrixK":
        return cls.from_dict(json.loads(text))


def load_family(text: str) -> list:
    """Family file: JSON list of {name, matrix}."""
    return [SeifertMatrixK.from_dict(d) for d in json.loads(text)]


def _poly_det(rows) -> LaurentPoly:
    # Laplace expansion down the rows, memoized on the live column set;
    # O(2^n) polynomial products, fine for the matrix sizes we meet.
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    memo = {}

    def det(cols):
        if not cols:
            return LaurentPoly.one()
        if cols in memo:
            return memo[cols]
        i = n - len(cols)
        acc = LaurentPoly.zero()
        for k, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero:
                continue
            sub = det(cols[:k] + cols[k + 1 :])
            term = entry * sub
            acc = acc + term if k % 2 == 0 else acc - term
        memo[cols] = acc
        return acc

    return det(tuple(range(n)))


def alexander(V: SeifertMatrixK) -> LaurentPoly:
    """Normalized det(V - t V^T); the empty matrix gives 1."""
    M = V.matrix
    n = M.nrows
    t = LaurentPoly.monomial(1, 1)
    rows = [
        [
            LaurentPoly.monomial(M[i, j], 0) - t * LaurentPoly.monomial(M[j, i], 0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(rows).normalized()


@dataclass(frozen=True)
class FiberednessCheck:
    passes: bool
    monic: bool
    span_matches: bool
    reasons: tuple


def fibered_certificate(V: SeifertMatrixK) -> FiberednessCheck:
    """Necessary conditions only: Delta monic and of span 2 * genus."""
    delta = alexander(V)
    monic = abs(delta.leading_coefficient) == 1
    span_ok = delta.span == 2 * V.genus
    reasons = []
    if not monic:
        reasons.append(f"leading coefficient {delta.leading_coefficient} is not +-1")
    if not span_ok:
        reasons.append(f"span {delta.span} != 2*genus = {2 * V.genus}")
    return FiberednessCheck(
        passes=monic and span_ok, monic=monic, span_matches=span_ok, reasons=tuple(reasons)
    )


def connected_sum(V1: SeifertMatrixK, V2: SeifertMatrixK) -> SeifertMatrixK:
    """Block-diagonal sum; genus adds, Alexander polynomials multiply."""
    n1, n2 = V1.matrix.nrows, V2.matrix.nrows
    rows = []
    for i in range(n1):
        rows.append(list(V1.matrix.row(i)) + [0] * n2)
    for i in range(n2):
        rows.append([0] * n1 + list(V2.matrix.row(i)))
    return SeifertMatrixK(name=f"{V1.name} # {V2.name}", matrix=IntMatrix(rows))


def substitute_t_squared(p: LaurentPoly) -> LaurentPoly:
    """Double every exponent (the knot-surgery multiplier convention)."""
    return p.substitute_power(2)


@dataclass(frozen=True)
class FamilyReport:
    expected_genus: int
    members: tuple
    genus_ok: bool
    fibered_ok: bool
    distinct_ok: bool
    genus_failures: tuple
    fibered_failures: tuple
    collisions: tuple

    @property
    def passes(self) -> bool:
        return self.genus_ok and self.fibered_ok and self.distinct_ok


def family_report(family, k: int) -> FamilyReport:
    """Gate a family: every member genus k, certificate passes, Delta pairwise distinct."""
    family = list(family)
    if not family:
        raise ValueError("family required")
    genus_failures = tuple(V.name for V in family if V.genus != k)
    fibered_failures = tuple(
        (V.name, fibered_certificate(V).reasons) for V in family if not fibered_certificate(V).passes
    )
    deltas = [(V.name, alexander(V)) for V in family]
    collisions = []
    for i in range(len(deltas)):
        for j in range(i + 1, len(deltas)):
            if deltas[i][1] == deltas[j][1]:
                collisions.append((deltas[i][0], deltas[j][0]))
    return FamilyReport(
        expected_genus=k,
        members=tuple(V.name for V in family),
        genus_ok=not genus_failures,
        fibered_ok=not fibered_failures,
        distinct_ok=not collisions,
        genus_failures=genus_failures,
        fibered_failures=tuple(fibered_failures),
        collisions=tuple(collisions),
    )


# -- bundled blocks and demo families ------------------------------------------

TREFOIL = SeifertMatrixK("trefoil", IntMatrix([[-1, 1], [0, -1]]))
FIGURE_EIGHT = SeifertMatrixK("figure-eight", IntMatrix([[1, 1], [0, -1]]))
UNKNOT = SeifertMatrixK("unknot", IntMatrix([]))


def chain_seifert_matrix(c: int, name: str | None = None) -> SeifertMatrixK:
    """Genus-2 chain-form matrix with middle coupling c; c = 1 is the (2,5) torus knot."""
    rows = [[-1, 1, 0, 0], [0, -1, c, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    if name is None:
        name = "torus(2,5)" if c == 1 else f"chain({c})"
    return SeifertMatrixK(name, IntMatrix(rows))


def demo_family(k: int) -> list:
    """Five genus-k matrices with pairwise distinct Alexander polynomials.

    Built from the trefoil/figure-eight blocks plus two chain-form genus-2
    matrices; their Alexander factors are distinct irreducibles, so the
    five products below stay pairwise distinct for every k >= 2.
    """
    if k < 2:
        raise ValueError("demo families exist for genus >= 2")

    def power(block, count, base=None):
        acc = base
        for _ in range(count):
            acc = block if acc is None else connected_sum(acc, block)
        return acc

    v1 = chain_seifert_matrix(1)
    v2 = chain_seifert_matrix(2)
    members = [
        power(TREFOIL, k),
        power(FIGURE_EIGHT, 1, base=power(TREFOIL, k - 1)),
        power(FIGURE_EIGHT, k),
        power(TREFOIL, k - 2, base=v1) if k > 2 else v1,
        power(FIGURE_EIGHT, k - 2, base=v2) if k > 2 else v2,
    ]
    return members
