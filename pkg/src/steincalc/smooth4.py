"""Invariant records for the closed 4-manifolds and their fillings.

Records carry (Euler characteristic, signature, fiber genus, section
families, a fundamental-group tag, a Seiberg-Witten distinguisher) plus a
provenance log that replays to the same record.  Three honesty rules
shape the module:

* pi1 is never computed.  The tag moves only by catalog rules, each with
  a citation; anything else becomes "unknown".
* The distinguisher is relative: it starts at 1 when a manifold is built
  or fiber-summed, and knot surgery multiplies it by Delta_K(t^2).  It
  certifies pairwise distinctness of the surgery multipliers, conditional
  on the cited Seiberg-Witten nonvanishing, never absolute invariants.
* Fillings keep only what boundary data justifies: the intersection-form
  determinant is flagged 0 exactly when the boundary has positive first
  Betti number.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field, replace

from . import bibliography
from .exactmat import signature as matrix_signature
from .knots import LaurentPoly, SeifertMatrixK, alexander, substitute_t_squared
from .plumbing import PlumbingGraph, intersection_matrix
from .seifert import OpenBookDesc, SeifertData, openbook_homology, openbook_manifold

PI1_TRIVIAL = "trivial"
PI1_Z_PLUS_ZN = "Z_plus_Zn"
PI1_PRODUCT_SURFACE = "product_surface"
PI1_UNKNOWN = "unknown"


@dataclass(frozen=True)
class Pi1Tag:
    kind: str
    param: int | None = None
    citation: str | None = None

    def __post_init__(self):
        if self.kind not in (PI1_TRIVIAL, PI1_Z_PLUS_ZN, PI1_PRODUCT_SURFACE, PI1_UNKNOWN):
            raise ValueError(f"unknown pi1 tag kind {self.kind!r}")
        if self.citation is not None:
            bibliography.resolve(self.citation)

    def describe(self) -> str:
        if self.kind == PI1_Z_PLUS_ZN:
            return f"Z + Z/{self.param}"
        if self.kind == PI1_PRODUCT_SURFACE:
            return f"genus-{self.param} surface group"
        return self.kind

    def to_dict(self) -> dict:
        return {"kind": self.kind, "param": self.param, "citation": self.citation}


@dataclass(frozen=True)
class ManifoldRecord:
    name: str
    euler_char: int
    signature: int
    fiber_genus: int | None
    sections: tuple  # ((square, count), ...)
    pi1: Pi1Tag
    sw_distinguisher: LaurentPoly
    provenance: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "euler_char": self.euler_char,
            "signature": self.signature,
            "fiber_genus": self.fiber_genus,
            "sections": [list(s) for s in self.sections],
            "pi1": self.pi1.to_dict(),
            "sw_distinguisher": self.sw_distinguisher.to_dict(),
            "provenance": [dict(p) for p in self.provenance],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


@dataclass(frozen=True)
class FillingRecord(ManifoldRecord):
    boundary: SeifertData | None = None
    stein_flag: bool = False
    stein_citation: str | None = None
    simply_connected: bool | None = None
    simply_connected_citation: str | None = None
    det_intersection_form: int | None = None
    det_justification: str = ""

    def to_dict(self) -> dict:
        d = super().to_dict()
        d.update(
            {
                "boundary": self.boundary.to_dict() if self.boundary else None,
                "stein_flag": self.stein_flag,
                "stein_citation": self.stein_citation,
                "simply_connected": self.simply_connected,
                "simply_connected_citation": self.simply_connected_citation,
                "det_intersection_form": self.det_intersection_form,
                "det_justification": self.det_justification,
            }
        )
        return d


def make_X_g1(g: int) -> ManifoldRecord:
    """The blown-up plane carrying the genus-g hyperelliptic fibration.

    One +1 class and 4g+5 exceptional classes: chi = 4g+8 and
    signature 1 - (4g+5) = -4g-4, with 4g+4 disjoint (-1)-sphere sections.
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    return ManifoldRecord(
        name=f"X({g},1)",
        euler_char=4 * g + 8,
        signature=-(4 * g + 4),
        fiber_genus=g,
        sections=((-1, 4 * g + 4),),
        pi1=Pi1Tag(PI1_TRIVIAL, citation="hyperelliptic-fibration"),
        sw_distinguisher=LaurentPoly.one(),
        provenance=({"op": "make_X_g1", "g": g},),
    )


def make_W(m: int) -> ManifoldRecord:
    """(genus-m surface) x S^2 blown up 8 times, fibered in genus 2m+1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return ManifoldRecord(
        name=f"W({m})",
        euler_char=12 - 4 * m,
        signature=-8,
        fiber_genus=2 * m + 1,
        sections=((-1, 2),),
        pi1=Pi1Tag(PI1_PRODUCT_SURFACE, param=m, citation="matsumoto-korkmaz-fibration"),
        sw_distinguisher=LaurentPoly.one(),
        provenance=({"op": "make_W", "m": m},),
    )


def _is_single_step(provenance, op):
    return len(provenance) == 1 and provenance[0]["op"] == op


def _sum_name(M1, M2, twist):
    if twist is None and _is_single_step(M1.provenance, "make_X_g1") and _is_single_step(
        M2.provenance, "make_X_g1"
    ):
        if M1.provenance[0]["g"] == M2.provenance[0]["g"]:
            return f"X({M1.provenance[0]['g']},2)"
    if twist is not None and _is_single_step(M1.provenance, "make_W") and _is_single_step(
        M2.provenance, "make_W"
    ):
        if M1.provenance[0]["m"] == M2.provenance[0]["m"]:
            return f"W_{twist}({M1.provenance[0]['m']})"
    kind = "twisted-sum" if twist is not None else "fiber-sum"
    return f"{kind}({M1.name}, {M2.name})"


def fiber_sum(M1: ManifoldRecord, M2: ManifoldRecord, twist: int | None = None) -> ManifoldRecord:
    """Fiber sum along the common genus-g fiber; ``twist=n`` glues with an
    n-th twist power on a homologically nontrivial curve.

    chi = chi_1 + chi_2 - 2(2 - 2g), signatures add (Novikov), sections
    sew pairwise by equal square (squares add, counts keep the minimum).
    The distinguisher resets to 1; no product formula is attempted.
    """
    if M1.fiber_genus is None or M2.fiber_genus is None:
        raise ValueError("both summands need a fiber genus")
    if M1.fiber_genus != M2.fiber_genus:
        raise ValueError(f"fiber genus mismatch: {M1.fiber_genus} != {M2.fiber_genus}")
    if twist is not None and twist < 1:
        raise ValueError("twist power must be a positive integer")
    g = M1.fiber_genus

    left = {}
    for sq, ct in M1.sections:
        left[sq] = left.get(sq, 0) + ct
    sections = []
    for sq, ct in M2.sections:
        if sq in left:
            sections.append((2 * sq, min(left[sq], ct)))
    sections = tuple(sorted(sections))

    pi1 = Pi1Tag(PI1_UNKNOWN)
    if (
        twist is not None
        and _is_single_step(M1.provenance, "make_W")
        and _is_single_step(M2.provenance, "make_W")
        and M1.provenance[0]["m"] == M2.provenance[0]["m"]
    ):
        pi1 = Pi1Tag(PI1_Z_PLUS_ZN, param=twist, citation="twisted-sum-pi1")

    step = {
        "op": "fiber_sum",
        "twist": twist,
        "left": [dict(p) for p in M1.provenance],
        "right": [dict(p) for p in M2.provenance],
        "note": "sw distinguisher reset to 1 at fiber sum",
    }
    return ManifoldRecord(
        name=_sum_name(M1, M2, twist),
        euler_char=M1.euler_char + M2.euler_char - 2 * (2 - 2 * g),
        signature=M1.signature + M2.signature,
        fiber_genus=g,
        sections=sections,
        pi1=pi1,
        sw_distinguisher=LaurentPoly.one(),
        provenance=(step,),
    )


def knot_surgery(
    M: ManifoldRecord, K: SeifertMatrixK, torus_null_homotopic: bool = True
) -> ManifoldRecord:
    """Knot surgery on the square-zero torus produced by the fiber sum.

    chi and signature are untouched; the distinguisher gains the factor
    Delta_K(t^2); the fibration genus grows by twice the knot genus and
    the sections survive (they miss the torus).  The pi1 tag survives
    only when the torus' loops are null-homotopic.
    """
    if not any(step["op"] == "fiber_sum" for step in M.provenance):
        raise ValueError("knot surgery needs the fiber-sum torus: no fiber_sum in provenance")
    delta = alexander(K)
    multiplier = substitute_t_squared(delta)
    pi1 = M.pi1 if torus_null_homotopic else Pi1Tag(PI1_UNKNOWN)
    step = {
        "op": "knot_surgery",
        "knot": K.to_dict(),
        "torus_null_homotopic": torus_null_homotopic,
    }
    return replace(
        M,
        name=f"{M.name}_{K.name}",
        fiber_genus=M.fiber_genus + 2 * K.genus,
        pi1=pi1,
        sw_distinguisher=(M.sw_distinguisher * multiplier).normalized(),
        provenance=M.provenance + (step,),
    )


def _excised_star(h: int, r: int, p: int) -> PlumbingGraph:
    """Star plumbing of the removed piece: central (0, genus h), r legs of weight -p."""
    verts = [(0, 0, h)] + [(i, -p, 0) for i in range(1, r + 1)]
    edges = [(0, i) for i in range(1, r + 1)]
    return PlumbingGraph(verts, edges)


def _is_untwisted_double_of_X(provenance) -> bool:
    if not provenance or provenance[0]["op"] != "fiber_sum":
        return False
    head = provenance[0]
    if head["twist"] is not None:
        return False
    sides_ok = all(
        len(side) == 1 and side[0]["op"] == "make_X_g1" for side in (head["left"], head["right"])
    )
    tail_ok = all(step["op"] == "knot_surgery" for step in provenance[1:])
    return sides_ok and tail_ok


def excise_filling(M: ManifoldRecord, r: int) -> FillingRecord:
    """Remove a regular fiber and r sections; return the filling's record.

    With fiber genus h and sections of square -p:
    chi(V) = chi(M) - (2 - 2h) - r  (fiber neighborhood plus r sphere
    sections, each meeting the fiber once), and sigma(V) = sigma(M) minus
    the signature of the excised star plumbing.  The boundary is the
    Seifert space of the boundary-twist open book with r powers p; at
    least one section is always retained.
    """
    if M.fiber_genus is None:
        raise ValueError("excision needs a fibration: fiber genus missing")
    if r < 0:
        raise ValueError("r must be >= 0")
    squares = {sq for sq, _ in M.sections}
    if len(squares) > 1:
        raise ValueError(f"mixed section squares {sorted(squares)}; excision is ambiguous")
    if r > 0:
        if not M.sections:
            raise ValueError("no sections recorded")
        sq, count = M.sections[0]
        if sq >= 0:
            raise ValueError(f"sections of square {sq} do not bound the excision pattern")
        if count < r + 1:
            raise ValueError(f"need r+1 = {r + 1} sections (one retained), have {count}")
        p = -sq
    else:
        warnings.warn("r = 0 removes only the fiber; the boundary is a surface bundle")
        p = None

    h = M.fiber_genus
    star = _excised_star(h, r, p if p is not None else 1)
    sigma_star = matrix_signature(intersection_matrix(star))

    if r > 0:
        ob = OpenBookDesc(page_genus=h, powers=(p,) * r)
        boundary = openbook_manifold(ob)
        boundary_rank = openbook_homology(ob)[0]
    else:
        boundary = SeifertData(base_genus=h, e0=0, legs=())
        boundary_rank = 2 * h + 1

    if boundary_rank > 0:
        det_flag, det_why = 0, "det-zero-from-boundary"
    else:
        det_flag, det_why = None, "boundary has finite first homology; determinant not determined"

    simply_connected = None
    sc_citation = None
    pi1 = M.pi1
    if _is_untwisted_double_of_X(M.provenance):
        simply_connected = True
        sc_citation = "simply-connected-fillings"
        pi1 = Pi1Tag(PI1_TRIVIAL, citation=sc_citation)
    elif M.pi1.kind in (PI1_Z_PLUS_ZN, PI1_PRODUCT_SURFACE):
        simply_connected = False
        sc_citation = M.pi1.citation

    retained = ()
    if M.sections and M.sections[0][1] - r > 0:
        retained = ((M.sections[0][0], M.sections[0][1] - r),)

    return FillingRecord(
        name=f"filling({M.name}; r={r})",
        euler_char=M.euler_char - (2 - 2 * h) - r,
        signature=M.signature - sigma_star,
        fiber_genus=h,
        sections=retained,
        pi1=pi1,
        sw_distinguisher=M.sw_distinguisher,
        provenance=M.provenance + ({"op": "excise_filling", "r": r},),
        boundary=boundary,
        stein_flag=True,
        stein_citation="palf-stein-filling",
        simply_connected=simply_connected,
        simply_connected_citation=sc_citation,
        det_intersection_form=det_flag,
        det_justification=det_why,
    )


@dataclass(frozen=True)
class DistinctnessReport:
    names: tuple
    pairs_total: int
    collisions: tuple
    citations: tuple = ("fs-distinguishes", "sw-nonvanishing-assumption")

    @property
    def all_distinct(self) -> bool:
        return not self.collisions

    @property
    def verdict(self) -> str:
        if self.all_distinct:
            return "pairwise non-diffeomorphic (conditional on cited SW nonvanishing)"
        pairs = ", ".join(f"{a} ~ {b}" for a, b in self.collisions)
        return f"distinguishers collide: {pairs}"

    def to_dict(self) -> dict:
        return {
            "names": list(self.names),
            "pairs_total": self.pairs_total,
            "collisions": [list(c) for c in self.collisions],
            "all_distinct": self.all_distinct,
            "verdict": self.verdict,
            "citations": list(self.citations),
        }


def distinguisher_distinct(family) -> DistinctnessReport:
    """Pairwise comparison of normalized distinguisher polynomials."""
    family = list(family)
    if not family:
        raise ValueError("family required")
    polys = [(rec.name, rec.sw_distinguisher.normalized()) for rec in family]
    collisions = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i][1] == polys[j][1]:
                collisions.append((polys[i][0], polys[j][0]))
    return DistinctnessReport(
        names=tuple(n for n, _ in polys),
        pairs_total=len(polys) * (len(polys) - 1) // 2,
        collisions=tuple(collisions),
    )


def replay(provenance) -> ManifoldRecord:
    """Re-run a provenance log; the result must equal the original record."""
    record = None
    for step in provenance:
        op = step["op"]
        if op == "make_X_g1":
            record = make_X_g1(step["g"])
        elif op == "make_W":
            record = make_W(step["m"])
        elif op == "fiber_sum":
            record = fiber_sum(replay(step["left"]), replay(step["right"]), twist=step["twist"])
        elif op == "knot_surgery":
            K = SeifertMatrixK.from_dict(step["knot"])
            record = knot_surgery(record, K, torus_null_homotopic=step["torus_null_homotopic"])
        elif op == "excise_filling":
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                record = excise_filling(record, step["r"])
        else:
            raise ValueError(f"unknown provenance op {op!r}")
    if record is None:
        raise ValueError("empty provenance")
    return record
