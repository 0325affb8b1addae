import random

import pytest

from steincalc.exactmat import IntMatrix
from steincalc.mcg import (
    Curve,
    SurfaceSpec,
    TwistWord,
    chain_curves,
    exceptional_class,
    fiber_class,
    hyperelliptic_half_word,
    hyperelliptic_word,
    hyperplane_class,
    intersection_pairing_matrix,
    korkmaz_word,
    lf_euler_characteristic,
    load_curves,
    pair,
    pairing,
    parse_word,
    section_classes,
    section_count,
    transvection,
    word_action,
)


def random_class(rng, n):
    return tuple(rng.randint(-3, 3) for _ in range(n))


class TestTransvection:
    def test_twist_along_a_sends_b(self):
        S = SurfaceSpec(1, 0)
        T = transvection(Curve("a1", (1, 0)), S)
        # t_{a1}(b1) = b1 + a1 in the (a1, b1) basis
        assert [T[0, 1], T[1, 1]] == [1, 1]
        assert [T[0, 0], T[1, 0]] == [1, 0]

    def test_fixes_its_own_curve(self):
        rng = random.Random(3)
        for g in (1, 2, 3):
            S = SurfaceSpec(g, 0)
            c = random_class(rng, S.h1_rank)
            T = transvection(Curve("c", c), S)
            image = [sum(T[i, j] * c[j] for j in range(S.h1_rank)) for i in range(S.h1_rank)]
            assert tuple(image) == c

    def test_boundary_parallel_is_identity(self):
        S = SurfaceSpec(2, 1)  # one boundary component: its class is zero
        T = transvection(Curve("d", (0,) * S.h1_rank), S)
        assert T == IntMatrix.identity(S.h1_rank)

    def test_preserves_pairing(self):
        rng = random.Random(12)
        for _ in range(60):
            g = rng.randint(1, 5)
            r = rng.choice((0, 0, 2, 3))
            S = SurfaceSpec(g, r)
            J = intersection_pairing_matrix(S)
            T = transvection(Curve("c", random_class(rng, S.h1_rank)), S)
            assert T.transpose() @ J @ T == J

    def test_inverse(self):
        rng = random.Random(13)
        for _ in range(30):
            g = rng.randint(1, 4)
            S = SurfaceSpec(g, 0)
            c = Curve("c", random_class(rng, S.h1_rank))
            assert transvection(c, S) @ transvection(c, S, power=-1) == IntMatrix.identity(
                S.h1_rank
            )

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            transvection(Curve("c", (1, 0)), SurfaceSpec(2, 0))


class TestWordAction:
    def test_empty_word(self):
        S = SurfaceSpec(2, 0)
        w = TwistWord(S, (), {})
        assert word_action(w) == IntMatrix.identity(4)

    def test_half_word_is_minus_identity(self):
        for g in (1, 2, 3):
            M = word_action(hyperelliptic_half_word(g))
            minus = IntMatrix([[-1 if i == j else 0 for j in range(2 * g)] for i in range(2 * g)])
            assert M == minus

    def test_full_word_is_identity(self):
        for g in (1, 2, 3):
            assert word_action(hyperelliptic_word(g)) == IntMatrix.identity(2 * g)

    def test_missing_curve_rejected(self):
        S = SurfaceSpec(1, 0)
        with pytest.raises(ValueError):
            TwistWord(S, (("zz", 1),), chain_curves(1))


class TestHyperellipticWord:
    def test_letter_counts(self):
        for g in (1, 2, 3, 4, 5):
            assert hyperelliptic_word(g).letter_count == 8 * g + 4
            assert hyperelliptic_half_word(g).letter_count == 4 * g + 2

    def test_g1_count(self):
        assert hyperelliptic_word(1).letter_count == 12

    def test_chain_gate_runs(self):
        for g in range(1, 6):
            curves = chain_curves(g)
            assert len(curves) == 2 * g + 1


class TestKorkmazWord:
    def test_letter_counts(self):
        for m in (1, 2, 3, 4):
            g = 2 * m + 1
            assert korkmaz_word(m).letter_count == 2 * g + 10

    def test_m1_m2(self):
        assert korkmaz_word(1).letter_count == 16
        assert korkmaz_word(2).letter_count == 20

    def test_counting_only_without_curves(self):
        w = korkmaz_word(1)
        with pytest.raises(ValueError, match="unavailable"):
            word_action(w)

    def test_with_curve_file(self):
        # any table with the right names and lengths enables the action
        m = 1
        g = 2 * m + 1
        S = SurfaceSpec(g, 0)
        names = [f"b{i}" for i in range(g + 1)] + ["a", "b"]
        rng = random.Random(5)
        table = {n: Curve(n, random_class(rng, S.h1_rank)) for n in names}
        w = korkmaz_word(m, curves=table)
        M = word_action(w)
        J = intersection_pairing_matrix(S)
        assert M.transpose() @ J @ M == J


class TestEulerCharacteristic:
    def test_hyperelliptic_double_count(self):
        for g in range(1, 6):
            assert lf_euler_characteristic(g, 8 * g + 4) == 4 * g + 8 == 2 + 1 + (4 * g + 5)

    def test_odd_genus_double_count(self):
        for m in range(1, 5):
            g = 2 * m + 1
            assert lf_euler_characteristic(g, 2 * g + 10) == 14 - 2 * g == 12 - 4 * m

    def test_sphere_bundle(self):
        assert lf_euler_characteristic(0, 0) == 4

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            lf_euler_characteristic(-1, 0)


class TestFiberClass:
    def test_square_zero(self):
        for g in range(1, 6):
            F = fiber_class(g)
            assert pair(F, F) == 0

    def test_meets_exceptional_spheres_once(self):
        for g in (1, 2, 3):
            F = fiber_class(g)
            for i in range(2, 4 * g + 6):
                assert pair(F, exceptional_class(g, i)) == 1

    def test_meets_horizontal_sphere_twice(self):
        for g in range(1, 6):
            F = fiber_class(g)
            h = hyperplane_class(g)
            e1 = exceptional_class(g, 1)
            h_minus_e1 = type(F)(g, tuple(a - b for a, b in zip(h.coefficients, e1.coefficients)))
            assert pair(F, h_minus_e1) == 2

    def test_length_validation(self):
        with pytest.raises(ValueError):
            type(fiber_class(1))(1, (0,) * 5)


class TestSections:
    def test_counts(self):
        assert section_count(2) == 12
        assert section_count(1) == 8

    def test_squares(self):
        for g in (1, 2):
            for s in section_classes(g):
                assert pair(s, s) == -1
        assert len(section_classes(2)) == section_count(2)


class TestWordDSL:
    def test_plain_tokens(self):
        S = SurfaceSpec(1, 0)
        w = parse_word("c1 c2 c3^2 c2 c1", S, chain_curves(1))
        assert w.letters == (("c1", 1), ("c2", 1), ("c3", 2), ("c2", 1), ("c1", 1))

    def test_group_power(self):
        S = SurfaceSpec(1, 0)
        w = parse_word("(c1 c2)^2", S, chain_curves(1))
        assert w.letters == (("c1", 1), ("c2", 1), ("c1", 1), ("c2", 1))

    def test_group_inverse(self):
        S = SurfaceSpec(1, 0)
        w = parse_word("(c1 c2^2)^-1", S, chain_curves(1))
        assert w.letters == (("c2", -2), ("c1", -1))

    def test_word_times_inverse_is_identity(self):
        S = SurfaceSpec(2, 0)
        curves = chain_curves(2)
        w = parse_word("c1 c2 c3 (c1 c2 c3)^-1", S, curves)
        assert word_action(w) == IntMatrix.identity(4)

    def test_unbalanced(self):
        with pytest.raises(ValueError):
            parse_word("(c1", SurfaceSpec(1, 0))
        with pytest.raises(ValueError):
            parse_word("c1)", SurfaceSpec(1, 0))

    def test_load_curves_checks_rank(self):
        with pytest.raises(ValueError):
            load_curves('{"x": [1, 0, 0]}', SurfaceSpec(1, 0))


class TestSurfaceSpec:
    def test_rank(self):
        assert SurfaceSpec(2, 0).h1_rank == 4
        assert SurfaceSpec(2, 1).h1_rank == 4
        assert SurfaceSpec(2, 3).h1_rank == 6

    def test_pairing_on_degenerate_part(self):
        S = SurfaceSpec(1, 3)
        d1 = (0, 0, 1, 0)
        d2 = (0, 0, 0, 1)
        assert pairing(S, d1, d2) == 0
        assert pairing(S, (1, 0, 0, 0), (0, 1, 0, 0)) == 1
