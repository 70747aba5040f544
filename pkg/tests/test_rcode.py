"""Ring codes built from four components."""

import random

import pytest

from lcdring import GF, FqCode, RCode, RingElement
from lcdring.errors import MismatchError, NotAUnitError, ZeroCodeError

from support import random_rcode

F5 = GF(5)
F9 = GF(3, 2, [1, 0, 1])


def line_code():
    return FqCode.from_rows(F5, 2, [[1, 2]])


def rcode_of(comp):
    return RCode.from_components([comp] * 4)


class TestConstruction:
    def test_zero(self):
        z = RCode.zero(F5, 3)
        assert z.k == 0 and all(c.k == 0 for c in z.comps)

    def test_mismatched_components(self):
        with pytest.raises(MismatchError):
            RCode.from_components(
                [line_code(), line_code(), line_code(), FqCode.zero(F5, 3)]
            )

    def test_scalar_generator_hits_all_slots(self):
        row = [RingElement.scalar(F5, 1), RingElement.scalar(F5, 2)]
        rc = RCode.from_generators(F5, 2, [row])
        assert all(c == line_code() for c in rc.comps)

    def test_idempotent_generator_hits_one_slot(self):
        row = [RingElement.idempotent(F5, 1), RingElement.zero(F5)]
        rc = RCode.from_generators(F5, 2, [row])
        assert rc.comps[1] == FqCode.from_rows(F5, 2, [[1, 0]])
        assert all(rc.comps[i].k == 0 for i in (0, 2, 3))

    def test_generator_roundtrip(self):
        rng = random.Random(31)
        for _ in range(20):
            rc = random_rcode(rng, F9, rng.randint(1, 4), 2)
            again = RCode.from_generators(rc.field, rc.n, rc.generator_rows())
            assert again == rc


class TestDual:
    def test_zero_dualizes_to_full(self):
        z = RCode.zero(F5, 2)
        d = z.galois_dual(0)
        assert all(c == FqCode.full(F5, 2) for c in d.comps)

    def test_self_dual_line(self):
        rc = rcode_of(line_code())
        assert rc.galois_dual(0) == rc

    def test_dimension_identity(self):
        rng = random.Random(32)
        for _ in range(25):
            rc = random_rcode(rng, F9, rng.randint(1, 4), 3)
            for l in range(2):
                assert rc.k + rc.galois_dual(l).k == 4 * rc.n


class TestGrayImage:
    def test_single_slot(self):
        rc = RCode.from_components(
            [
                FqCode.zero(F5, 1),
                FqCode.from_rows(F5, 1, [[1]]),
                FqCode.zero(F5, 1),
                FqCode.zero(F5, 1),
            ]
        )
        assert rc.gray_image() == FqCode.from_rows(F5, 4, [[0, 1, 0, 0]])

    def test_repetition_components(self):
        rep = FqCode.from_rows(F5, 3, [[1, 1, 1]])
        img = rcode_of(rep).gray_image()
        assert (img.n, img.k) == (12, 4)
        assert img.min_dist() == 3

    def test_zero(self):
        assert RCode.zero(F5, 2).gray_image() == FqCode.zero(F5, 8)

    def test_dimension_always_adds_up(self):
        rng = random.Random(33)
        for _ in range(20):
            rc = random_rcode(rng, F9, rng.randint(1, 4), 3)
            assert rc.gray_image().k == rc.k

    def test_image_distance_is_lee_distance(self):
        rng = random.Random(36)
        for _ in range(15):
            rc = random_rcode(rng, F5, rng.randint(1, 3), 2)
            if rc.k == 0:
                continue
            assert rc.gray_image().min_dist() == rc.lee_min_dist()


class TestParams:
    def test_repetition(self):
        rep = FqCode.from_rows(F5, 3, [[1, 1, 1]])
        p = rcode_of(rep).params()
        assert (p.n, p.k, p.d_lee) == (3, 4, 3)
        assert p.components == ((3, 1, 3),) * 4

    def test_mixed_distance(self):
        rep = FqCode.from_rows(F5, 3, [[1, 1, 1]])
        par = rep.galois_dual(0)  # [3, 2, 2]
        rc = RCode.from_components([par, rep, rep, rep])
        assert rc.params().d_lee == 2

    def test_zero_code(self):
        p = RCode.zero(F5, 3).params()
        assert p.k == 0 and p.d_lee is None


class TestPredicates:
    def test_lcd_all_components(self):
        good = FqCode.from_rows(F5, 2, [[1, 1]])
        assert rcode_of(good).is_lcd(0)
        mixed = RCode.from_components([line_code(), good, good, good])
        flag, dets = mixed.lcd_status(0)
        assert not flag and dets == (0, 2, 2, 2)

    def test_zero_code_is_lcd(self):
        assert RCode.zero(F5, 2).is_lcd(0)

    def test_self_dual_and_orthogonal(self):
        rc = rcode_of(line_code())
        assert rc.is_self_dual()
        assert rc.is_self_orthogonal(0)
        bad = RCode.from_components([FqCode.from_rows(F5, 2, [[1, 1]])] + [line_code()] * 3)
        assert not bad.is_self_dual()
        assert not bad.is_self_orthogonal(0)
        assert RCode.zero(F5, 2).is_self_orthogonal(0)


class TestMds:
    def test_repetition_components(self):
        rep = FqCode.from_rows(F5, 3, [[1, 1, 1]])
        assert rcode_of(rep).is_mds()

    def test_parity_components(self):
        par = FqCode.from_rows(F5, 3, [[1, 1, 1]]).galois_dual(0)
        assert rcode_of(par).is_mds()

    def test_mixed_parameters_fail(self):
        rep = FqCode.from_rows(F5, 3, [[1, 1, 1]])
        par = rep.galois_dual(0)
        rc = RCode.from_components([par, rep, rep, rep])
        assert not rc.is_mds()

    def test_zero_raises(self):
        with pytest.raises(ZeroCodeError):
            RCode.zero(F5, 3).is_mds()

    def test_bound_equality_matches_componentwise_rule(self):
        rng = random.Random(34)
        for _ in range(30):
            rc = random_rcode(rng, F5, rng.randint(2, 4), 2)
            if any(c.k == 0 for c in rc.comps):
                continue
            per_comp = all(c.is_mds() for c in rc.comps) and (
                len({(c.k, c.min_dist()) for c in rc.comps}) == 1
            )
            assert rc.is_mds() == per_comp


class TestScale:
    def test_identity(self):
        rc = rcode_of(line_code())
        ones = tuple(RingElement.one(F5) for _ in range(2))
        assert rc.scale(ones) == rc

    def test_worked_example(self):
        rc = rcode_of(line_code())
        alpha = (RingElement.scalar(F5, 2), RingElement.one(F5))
        scaled = rc.scale(alpha)
        assert all(c == FqCode.from_rows(F5, 2, [[1, 1]]) for c in scaled.comps)

    def test_nonunit_rejected(self):
        rc = rcode_of(line_code())
        alpha = (RingElement.idempotent(F5, 1), RingElement.one(F5))
        with pytest.raises(NotAUnitError):
            rc.scale(alpha)

    def test_preserves_parameters(self):
        rng = random.Random(35)
        for _ in range(15):
            rc = random_rcode(rng, F5, 3, 2)
            if rc.k == 0:
                continue
            alpha = tuple(
                RingElement(F5, tuple(rng.randint(1, 4) for _ in range(4)))
                for _ in range(3)
            )
            scaled = rc.scale(alpha)
            assert scaled.k == rc.k
            assert scaled.lee_min_dist() == rc.lee_min_dist()
