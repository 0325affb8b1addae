"""Dehn twist words and their action on surface homology.

The homological (symplectic) representation: a right twist along a curve
with class c acts by the transvection x -> x + <c, x> c, where <,> is the
intersection pairing in the fixed basis a_1, b_1, ..., a_g, b_g (with
<a_i, b_i> = +1) followed by the boundary classes d_1..d_{r-1}, which lie
in the radical.  Words act leftmost letter first, so word_action returns
M_k @ ... @ M_1 in the column-vector convention.

Passing word_action == identity certifies a relation at the homology
level only; reports downstream label it a "homological certificate".

Two twist catalogs are built in:

* the genus-g hyperelliptic chain word over curves c1..c_{2g+1}
  (consecutive intersection one), whose half word must act by -I;
* the genus 2m+1 word (b0 b1 ... bg a^2 b^2)^2 over b0..bg, a, b.  No
  homology classes for those curves ship with the package; supply a
  curve-data file to enable word_action on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactmat import IntMatrix


@dataclass(frozen=True)
class SurfaceSpec:
    genus: int
    boundary_count: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be >= 0")

    @property
    def h1_rank(self) -> int:
        return 2 * self.genus + max(self.boundary_count - 1, 0)


@dataclass(frozen=True)
class Curve:
    name: str
    homology_class: tuple
    embedded: bool = True  # transvections model twists along self-intersection-free curves

    def __post_init__(self):
        object.__setattr__(self, "homology_class", tuple(int(x) for x in self.homology_class))


@dataclass(frozen=True)
class TwistWord:
    """Ordered (curve name, exponent) letters over a named curve table.

    ``curves`` may be None for counting-only words (no homology classes
    available); word_action then refuses to run.
    """

    surface: SurfaceSpec
    letters: tuple
    curves: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "letters", tuple((str(n), int(e)) for n, e in self.letters)
        )
        if self.curves is not None:
            for name, _ in self.letters:
                if name not in self.curves:
                    raise ValueError(f"letter {name!r} missing from the curve table")
            for c in self.curves.values():
                if len(c.homology_class) != self.surface.h1_rank:
                    raise ValueError(
                        f"curve {c.name!r} class has length {len(c.homology_class)}; "
                        f"surface needs {self.surface.h1_rank}"
                    )

    @property
    def letter_count(self) -> int:
        return sum(abs(e) for _, e in self.letters)


def intersection_pairing_matrix(S: SurfaceSpec) -> IntMatrix:
    """J with <a_i, b_i> = +1 blocks; boundary classes pair trivially."""
    n = S.h1_rank
    J = [[0] * n for _ in range(n)]
    for i in range(S.genus):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1
    return IntMatrix(J)


def pairing(S: SurfaceSpec, x, y) -> int:
    n = S.h1_rank
    if len(x) != n or len(y) != n:
        raise ValueError("class length does not match the surface H1 rank")
    total = 0
    for i in range(S.genus):
        total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
    return total


def transvection(c: Curve, S: SurfaceSpec, power: int = 1) -> IntMatrix:
    """Matrix of (t_c)^power: I + power * c (c^T J), using <c, c> = 0."""
    v = c.homology_class
    n = S.h1_rank
    if len(v) != n:
        raise ValueError(
            f"curve {c.name!r} class has length {len(v)}; surface needs {n}"
        )
    J = intersection_pairing_matrix(S)
    ctj = [sum(v[k] * J[k, j] for k in range(n)) for j in range(n)]
    rows = [
        [(1 if i == j else 0) + power * v[i] * ctj[j] for j in range(n)]
        for i in range(n)
    ]
    return IntMatrix(rows)


def word_action(w: TwistWord) -> IntMatrix:
    """Product of transvections, leftmost letter applied first."""
    n = w.surface.h1_rank
    if not w.letters:
        return IntMatrix.identity(n)
    if w.curves is None:
        raise ValueError("word has no curve table; word_action is unavailable")
    M = IntMatrix.identity(n)
    for name, exp in w.letters:
        M = transvection(w.curves[name], w.surface, power=exp) @ M
    return M


# -- hyperelliptic chain catalog ----------------------------------------------


def chain_curves(g: int) -> dict:
    """Curves c1..c_{2g+1} of the standard genus-g chain.

    Classes: c_{2j-1} = a_j, c_{2j} = b_j - b_{j+1}, c_{2g} = b_g, and
    c_{2g+1} = -(a_1 + ... + a_g) (the odd curves bound a half-surface
    together).  Consecutive curves meet once and all other pairs are
    disjoint; both facts are asserted here as a self-consistency gate.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    S = SurfaceSpec(g, 0)
    n = S.h1_rank
    curves = {}
    for j in range(1, g + 1):
        v = [0] * n
        v[2 * (j - 1)] = 1
        curves[f"c{2 * j - 1}"] = Curve(f"c{2 * j - 1}", tuple(v))
    for j in range(1, g):
        v = [0] * n
        v[2 * (j - 1) + 1] = 1
        v[2 * j + 1] = -1
        curves[f"c{2 * j}"] = Curve(f"c{2 * j}", tuple(v))
    v = [0] * n
    v[2 * (g - 1) + 1] = 1
    curves[f"c{2 * g}"] = Curve(f"c{2 * g}", tuple(v))
    v = [0] * n
    for j in range(g):
        v[2 * j] = -1
    curves[f"c{2 * g + 1}"] = Curve(f"c{2 * g + 1}", tuple(v))

    names = [f"c{i}" for i in range(1, 2 * g + 2)]
    for i, ni in enumerate(names):
        for nj in names[i + 1 :]:
            p = pairing(S, curves[ni].homology_class, curves[nj].homology_class)
            expect_one = nj == names[i + 1]
            if expect_one and abs(p) != 1:
                raise AssertionError(f"chain gate: <{ni},{nj}> = {p}, want +-1")
            if not expect_one and p != 0:
                raise AssertionError(f"chain gate: <{ni},{nj}> = {p}, want 0")
    return curves


def hyperelliptic_half_word(g: int) -> TwistWord:
    """c1 c2 ... c_{2g} c_{2g+1}^2 c_{2g} ... c2 c1 (4g + 2 letters)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    letters = (
        [(f"c{i}", 1) for i in range(1, 2 * g + 1)]
        + [(f"c{2 * g + 1}", 2)]
        + [(f"c{i}", 1) for i in range(2 * g, 0, -1)]
    )
    return TwistWord(SurfaceSpec(g, 0), tuple(letters), chain_curves(g))


def hyperelliptic_word(g: int) -> TwistWord:
    """The full relator word: the half word squared, 8g + 4 letters."""
    half = hyperelliptic_half_word(g)
    return TwistWord(half.surface, half.letters + half.letters, half.curves)


# -- odd-genus two-holder catalog ---------------------------------------------


def korkmaz_word(m: int, curves: dict | None = None) -> TwistWord:
    """(b0 b1 ... bg a^2 b^2)^2 with g = 2m + 1, giving 2g + 10 letters.

    The homology classes of b0..bg, a, b are not derivable from the word;
    pass a vetted curve table (see load_curves) to enable word_action.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    g = 2 * m + 1
    block = [(f"b{i}", 1) for i in range(g + 1)] + [("a", 2), ("b", 2)]
    return TwistWord(SurfaceSpec(g, 0), tuple(block + block), curves)


def lf_euler_characteristic(g: int, n: int) -> int:
    """Euler characteristic 4 - 4g + n of a genus-g fibration over the sphere
    with n nodal fibers."""
    if g < 0 or n < 0:
        raise ValueError("genus and fiber count must be >= 0")
    return 4 - 4 * g + n


# -- homology of the blown-up rational surface --------------------------------


@dataclass(frozen=True)
class HomologyClassX:
    """Class over the basis (h, e_1, ..., e_{4g+5}) with form diag(+1, -1, ..., -1)."""

    g: int
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(x) for x in self.coefficients))
        if len(self.coefficients) != 4 * self.g + 6:
            raise ValueError(
                f"class needs {4 * self.g + 6} coefficients, got {len(self.coefficients)}"
            )


def fiber_class(g: int) -> HomologyClassX:
    """[F] = (g+2) h - g e_1 - e_2 - ... - e_{4g+5}."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    coeffs = [g + 2, -g] + [-1] * (4 * g + 4)
    return HomologyClassX(g, tuple(coeffs))


def hyperplane_class(g: int) -> HomologyClassX:
    coeffs = [1] + [0] * (4 * g + 5)
    return HomologyClassX(g, tuple(coeffs))


def exceptional_class(g: int, i: int) -> HomologyClassX:
    """e_i for 1 <= i <= 4g + 5."""
    if not 1 <= i <= 4 * g + 5:
        raise ValueError(f"i must be in 1..{4 * g + 5}")
    coeffs = [0] * (4 * g + 6)
    coeffs[i] = 1
    return HomologyClassX(g, tuple(coeffs))


def pair(x: HomologyClassX, y: HomologyClassX) -> int:
    """Evaluate diag(+1, -1, ..., -1) on two classes."""
    if x.g != y.g or len(x.coefficients) != len(y.coefficients):
        raise ValueError("classes live in different lattices")
    xs, ys = x.coefficients, y.coefficients
    return xs[0] * ys[0] - sum(a * b for a, b in zip(xs[1:], ys[1:]))


def section_count(g: int) -> int:
    """Disjoint (-1)-sphere section count 4g + 4 of the genus-g chain fibration."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return 4 * g + 4


def section_classes(g: int) -> list:
    """The section classes e_2, ..., e_{4g+5} (each of square -1)."""
    return [exceptional_class(g, i) for i in range(2, 4 * g + 6)]


# -- word DSL and curve files --------------------------------------------------


def parse_word(text: str, surface: SurfaceSpec, curves: dict | None = None) -> TwistWord:
    """Parse tokens like ``c1 c2 c3^2 (c2 c1)^-1`` into a TwistWord.

    A group raised to a negative power is inverted: reversed order,
    negated exponents.
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").replace("^", " ^ ").split()
    pos = 0

    def parse_seq(depth):
        nonlocal pos
        letters = []
        while pos < len(tokens):
            tok = tokens[pos]
            if tok == ")":
                if depth == 0:
                    raise ValueError("unbalanced ')'")
                return letters
            if tok == "(":
                pos += 1
                group = parse_seq(depth + 1)
                if pos >= len(tokens) or tokens[pos] != ")":
                    raise ValueError("unbalanced '('")
                pos += 1
                letters.extend(_power(group, _maybe_exponent()))
            elif tok == "^":
                raise ValueError("dangling '^'")
            else:
                pos += 1
                exp = _maybe_exponent()
                if exp != 0:
                    letters.append((tok, exp))
        return letters

    def _maybe_exponent():
        nonlocal pos
        if pos < len(tokens) and tokens[pos] == "^":
            pos += 1
            if pos >= len(tokens):
                raise ValueError("dangling '^'")
            exp = int(tokens[pos])
            pos += 1
            return exp
        return 1

    def _power(group, exp):
        if exp == 0:
            return []
        if exp > 0:
            return group * exp
        inverse = [(n, -e) for n, e in reversed(group)]
        return inverse * (-exp)

    letters = parse_seq(0)
    return TwistWord(surface, tuple(letters), curves)


def load_curves(text: str, surface: SurfaceSpec) -> dict:
    """Curve table from JSON {name: [coefficients]}."""
    data = json.loads(text)
    table = {name: Curve(name, tuple(coeffs)) for name, coeffs in data.items()}
    for c in table.values():
        if len(c.homology_class) != surface.h1_rank:
            raise ValueError(
                f"curve {c.name!r} has class length {len(c.homology_class)}; "
                f"surface needs {surface.h1_rank}"
            )
    return table
