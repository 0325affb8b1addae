import json
import random

import pytest
from oracles import naive_laurent_det, random_seifert_matrix

from steincalc.exactmat import IntMatrix
from steincalc.knots import (
    FIGURE_EIGHT,
    TREFOIL,
    UNKNOT,
    LaurentPoly,
    NonSymmetricPolynomial,
    SeifertMatrixK,
    alexander,
    chain_seifert_matrix,
    connected_sum,
    demo_family,
    family_report,
    fibered_certificate,
    load_family,
    substitute_t_squared,
)

TREFOIL_DELTA = LaurentPoly({1: 1, 0: -1, -1: 1})
FIG8_DELTA = LaurentPoly({1: 1, 0: -3, -1: 1})


class TestLaurentPoly:
    def test_arithmetic(self):
        p = LaurentPoly({1: 2, 0: -1})
        q = LaurentPoly({-1: 3})
        assert (p + q) == LaurentPoly({1: 2, 0: -1, -1: 3})
        assert (p * q) == LaurentPoly({0: 6, -1: -3})
        assert (p - p).is_zero

    def test_normalize_centers_and_fixes_sign(self):
        raw = LaurentPoly({2: -1, 1: 3, 0: -1})  # -t^2 + 3t - 1
        assert raw.normalized() == LaurentPoly({1: 1, 0: -3, -1: 1})

    def test_normalize_rejects_odd_span(self):
        with pytest.raises(NonSymmetricPolynomial):
            LaurentPoly({1: 1, 0: 1}).normalized()

    def test_normalize_rejects_asymmetric(self):
        with pytest.raises(NonSymmetricPolynomial):
            LaurentPoly({2: 1, 1: 5, 0: 2}).normalized()

    def test_str(self):
        assert str(LaurentPoly({2: 1, 0: -1, -2: 1})) == "t^2 - 1 + t^-2"
        assert str(LaurentPoly.zero()) == "0"

    def test_json_roundtrip(self):
        p = LaurentPoly({3: -2, 0: 5, -3: -2})
        assert LaurentPoly.from_dict(p.to_dict()) == p


class TestAlexander:
    def test_trefoil(self):
        # det(V - tV^T) for [[-1,1],[0,-1]] is t^2 - t + 1, centered
        assert alexander(TREFOIL) == TREFOIL_DELTA

    def test_figure_eight(self):
        # raw determinant is -(t - 3 + 1/t) up to units; normalization fixes the sign
        assert alexander(FIGURE_EIGHT) == FIG8_DELTA

    def test_unknot(self):
        assert alexander(UNKNOT) == LaurentPoly.one()

    def test_torus_2_5_chain(self):
        assert alexander(chain_seifert_matrix(1)) == LaurentPoly(
            {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}
        )

    def test_against_naive_determinant(self):
        rng = random.Random(2024)
        t = LaurentPoly.monomial(1, 1)
        for _ in range(40):
            V = random_seifert_matrix(rng, rng.randint(1, 3))
            M = V.matrix
            rows = [
                [
                    LaurentPoly.monomial(M[i, j], 0) - t * LaurentPoly.monomial(M[j, i], 0)
                    for j in range(M.ncols)
                ]
                for i in range(M.nrows)
            ]
            assert alexander(V) == naive_laurent_det(rows).normalized()

    def test_symmetric_and_unit_at_one(self):
        rng = random.Random(31337)
        for _ in range(120):
            V = random_seifert_matrix(rng, rng.randint(1, 3))
            delta = alexander(V)
            assert delta.is_symmetric
            assert delta.evaluate_at_one() in (1, -1)
            assert delta.span <= 2 * V.genus


class TestSeifertMatrixValidation:
    def test_odd_size_rejected(self):
        with pytest.raises(ValueError):
            SeifertMatrixK("bad", IntMatrix([[1]]))

    def test_invalid_pairing_rejected(self):
        with pytest.raises(ValueError):
            SeifertMatrixK("bad", IntMatrix([[0, 2], [0, 0]]))

    def test_genus(self):
        assert TREFOIL.genus == 1
        assert UNKNOT.genus == 0
        assert chain_seifert_matrix(2).genus == 2

    def test_json_roundtrip(self):
        again = SeifertMatrixK.from_json(json.dumps(TREFOIL.to_dict()))
        assert again == TREFOIL


class TestFiberedCertificate:
    def test_trefoil_passes(self):
        cert = fibered_certificate(TREFOIL)
        assert cert.passes and cert.monic and cert.span_matches

    def test_non_monic_fails(self):
        V = SeifertMatrixK("twist", IntMatrix([[-1, 1], [0, 2]]))
        assert alexander(V) == LaurentPoly({1: 2, 0: -5, -1: 2})
        cert = fibered_certificate(V)
        assert not cert.passes and not cert.monic
        assert any("monic" in r or "coefficient" in r for r in cert.reasons)

    def test_unknot_passes(self):
        assert fibered_certificate(UNKNOT).passes


class TestConnectedSum:
    def test_trefoil_square(self):
        VV = connected_sum(TREFOIL, TREFOIL)
        assert VV.genus == 2
        assert alexander(VV) == (TREFOIL_DELTA * TREFOIL_DELTA).normalized()

    def test_unknot_neutral(self):
        assert alexander(connected_sum(TREFOIL, UNKNOT)) == alexander(TREFOIL)

    def test_mixed_product(self):
        V = connected_sum(TREFOIL, FIGURE_EIGHT)
        assert V.genus == 2
        assert alexander(V) == (TREFOIL_DELTA * FIG8_DELTA).normalized()

    def test_multiplicative_on_randoms(self):
        rng = random.Random(808)
        for _ in range(40):
            V1 = random_seifert_matrix(rng, rng.randint(1, 2))
            V2 = random_seifert_matrix(rng, rng.randint(1, 2))
            assert alexander(connected_sum(V1, V2)) == (
                alexander(V1) * alexander(V2)
            ).normalized()


class TestSubstitution:
    def test_examples(self):
        assert substitute_t_squared(TREFOIL_DELTA) == LaurentPoly({2: 1, 0: -1, -2: 1})
        assert substitute_t_squared(LaurentPoly.one()) == LaurentPoly.one()
        assert substitute_t_squared(LaurentPoly({1: -1, 0: 3, -1: -1})) == LaurentPoly(
            {2: -1, 0: 3, -2: -1}
        )

    def test_ring_homomorphism(self):
        rng = random.Random(55)
        for _ in range(60):
            p = LaurentPoly({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(4)})
            q = LaurentPoly({rng.randint(-4, 4): rng.randint(-5, 5) for _ in range(4)})
            assert substitute_t_squared(p + q) == substitute_t_squared(p) + substitute_t_squared(q)
            assert substitute_t_squared(p * q) == substitute_t_squared(p) * substitute_t_squared(q)


class TestFamilies:
    def test_demo_family_genus_two(self):
        fam = demo_family(2)
        assert len(fam) == 5
        report = family_report(fam, 2)
        assert report.passes
        assert report.genus_ok and report.fibered_ok and report.distinct_ok

    def test_demo_family_higher_genus(self):
        for k in (3, 4):
            assert family_report(demo_family(k), k).passes

    def test_demo_family_needs_genus_two(self):
        with pytest.raises(ValueError):
            demo_family(1)

    def test_sum_pair_distinct(self):
        fam = [connected_sum(TREFOIL, TREFOIL), connected_sum(TREFOIL, FIGURE_EIGHT)]
        assert family_report(fam, 2).passes

    def test_duplicate_collision(self):
        report = family_report([TREFOIL, TREFOIL], 1)
        assert not report.distinct_ok
        assert report.collisions == (("trefoil", "trefoil"),)

    def test_empty_family_rejected(self):
        with pytest.raises(ValueError):
            family_report([], 2)

    def test_genus_gate(self):
        report = family_report([TREFOIL], 2)
        assert not report.genus_ok
        assert report.genus_failures == ("trefoil",)

    def test_family_file_roundtrip(self):
        fam = demo_family(2)
        text = json.dumps([V.to_dict() for V in fam])
        again = load_family(text)
        assert [V.name for V in again] == [V.name for V in fam]
        assert all(a == b for a, b in zip(again, fam))
