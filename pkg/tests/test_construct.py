"""Minor search, the determinant identity, and the LCD scalings."""

import random

import pytest

from lcdring import GF, FqCode, Matrix, RCode, RingElement
from lcdring.construct import (
    MinorCertificate,
    euclid_lcd_scaling,
    galois_lcd_scaling,
    lemma_det_check,
    minor_search,
    ring_lcd_equivalent,
)
from lcdring.errors import (
    BadLError,
    BetaOneError,
    FieldTooSmallError,
    SizeCapError,
    SupportMismatchError,
    ZeroCodeError,
)
from lcdring.linalg import minor_det

from support import random_fqcode

F4 = GF(2, 2)
F5 = GF(5)
F9 = GF(3, 2, [1, 0, 1])


def mat(field, rows):
    return Matrix.from_rows(field, rows)


class TestMinorSearch:
    def test_nonsingular_matrix(self):
        cert = minor_search(mat(F5, [[3]]))
        assert (cert.t, cert.r_set, cert.det) == (-1, (), 3)

    def test_scalar_zero(self):
        cert = minor_search(mat(F5, [[0]]))
        assert (cert.t, cert.r_set, cert.det) == (0, (0,), 1)

    def test_zero_two_by_two(self):
        cert = minor_search(mat(F5, [[0, 0], [0, 0]]))
        assert (cert.t, cert.r_set, cert.det) == (1, (0, 1), 1)

    def test_zero_matrix_needs_full_deletion(self):
        cert = minor_search(Matrix.zero(F5, 4, 4))
        assert (cert.t, cert.r_set, cert.det) == (3, (0, 1, 2, 3), 1)

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            minor_search(Matrix.identity(F5, 3), max_dim=2)

    def test_minimality_by_rescan(self):
        rng = random.Random(41)
        for _ in range(30):
            m = rng.randint(1, 4)
            p = mat(F5, [[rng.randrange(5) for _ in range(m)] for _ in range(m)])
            cert = minor_search(p)
            import itertools

            for w in range(cert.t + 1):
                for drop in itertools.combinations(range(m), w):
                    assert minor_det(p, drop) == 0
            assert minor_det(p, cert.r_set) == cert.det != 0


class TestLemmaCheck:
    def test_scalar(self):
        p = mat(F5, [[0]])
        cert = minor_search(p)
        assert lemma_det_check(p, [3], cert)

    def test_two_by_two(self):
        p = mat(F5, [[0, 0], [0, 3]])
        cert = minor_search(p)
        assert cert.r_set == (0,)
        assert lemma_det_check(p, [4, 0], cert)

    def test_empty_support(self):
        p = mat(F5, [[2]])
        cert = minor_search(p)
        assert cert.t == -1
        assert lemma_det_check(p, [0], cert)

    def test_support_mismatch(self):
        p = mat(F5, [[0, 0], [0, 3]])
        cert = minor_search(p)
        with pytest.raises(SupportMismatchError):
            lemma_det_check(p, [0, 1], cert)

    def test_random_instances(self):
        rng = random.Random(42)
        for field in (F5, F9):
            for _ in range(30):
                m = rng.randint(1, 4)
                p = mat(field, [[rng.randrange(field.q) for _ in range(m)] for _ in range(m)])
                cert = minor_search(p)
                b = [0] * m
                for j in cert.r_set:
                    b[j] = rng.randint(1, field.q - 1)
                assert lemma_det_check(p, b, cert)


class TestEuclidScaling:
    def test_worked_pipeline(self):
        c = FqCode.from_rows(F5, 2, [[1, 2]])
        alpha, out, cert = euclid_lcd_scaling(c)
        assert alpha == (2, 1)
        assert out == FqCode.from_rows(F5, 2, [[1, 1]])
        assert cert.minor == MinorCertificate(0, (0,), 1)
        assert cert.gram_det == 3
        assert out.is_lcd(0)

    def test_already_lcd_gets_identity(self):
        c = FqCode.from_rows(F5, 2, [[1, 1]])
        alpha, out, cert = euclid_lcd_scaling(c)
        assert alpha == (1, 1) and out == c and cert.minor.t == -1

    def test_small_fields_refused(self):
        for field in (GF(2), GF(3)):
            c = FqCode.from_rows(field, 2, [[1, 1]])
            with pytest.raises(FieldTooSmallError):
                euclid_lcd_scaling(c)

    def test_zero_code_refused(self):
        with pytest.raises(ZeroCodeError):
            euclid_lcd_scaling(FqCode.zero(F5, 2))

    def test_gf4_works_for_euclid(self):
        # q = 4 > 3: the only excluded unit is 1, so both others serve
        c = FqCode.from_rows(F4, 2, [[1, 1]])
        if not c.is_lcd(0):
            alpha, out, _ = euclid_lcd_scaling(c)
            assert out.is_lcd(0)

    def test_seeded_choice_is_reproducible(self):
        rng = random.Random(43)
        for _ in range(10):
            c = random_fqcode(rng, F5, 4, rng.randint(1, 3))
            if c.k == 0:
                continue
            a1, out1, _ = euclid_lcd_scaling(c, seed=99)
            a2, out2, _ = euclid_lcd_scaling(c, seed=99)
            assert a1 == a2 and out1 == out2


class TestGaloisScaling:
    def test_worked_pipeline(self):
        c = FqCode.from_rows(F9, 2, [[1, 4]])
        alpha, out, cert = galois_lcd_scaling(c, 1)
        assert alpha == (4, 1)
        assert cert.beta == 2
        assert cert.gram_det == 1
        assert out.is_lcd(1)

    def test_already_lcd(self):
        c = FqCode.from_rows(F9, 2, [[1, 1]])
        assert c.is_lcd(1)
        alpha, out, cert = galois_lcd_scaling(c, 1)
        assert alpha == (1, 1) and out == c

    def test_beta_one_refused(self):
        c = FqCode.from_rows(F4, 2, [[1, 1]])
        with pytest.raises(BetaOneError):
            galois_lcd_scaling(c, 1)

    def test_bad_l(self):
        c = FqCode.from_rows(F9, 2, [[1, 1]])
        for l in (0, 2, -1):
            with pytest.raises(BadLError):
                galois_lcd_scaling(c, l)

    def test_parameters_preserved(self):
        rng = random.Random(44)
        for _ in range(15):
            c = random_fqcode(rng, F9, 4, rng.randint(1, 2))
            if c.k == 0:
                continue
            _, out, _ = galois_lcd_scaling(c, 1)
            assert out.k == c.k
            assert out.min_dist() == c.min_dist()
            assert out.is_lcd(1)


class TestRingLevel:
    def test_componentwise_example(self):
        line = FqCode.from_rows(F5, 2, [[1, 2]])
        rc = RCode.from_components([line] * 4)
        alpha, out, cert = ring_lcd_equivalent(rc, "euclid")
        assert all(a.is_unit for a in alpha)
        assert alpha[0] == RingElement.scalar(F5, 2)
        assert alpha[1] == RingElement.one(F5)
        assert out.is_lcd(0)
        assert all(c == FqCode.from_rows(F5, 2, [[1, 1]]) for c in out.comps)

    def test_already_lcd_identity(self):
        good = FqCode.from_rows(F5, 2, [[1, 1]])
        rc = RCode.from_components([good] * 4)
        alpha, out, cert = ring_lcd_equivalent(rc, "euclid")
        assert out == rc
        assert all(a == RingElement.one(F5) for a in alpha)
        assert all(c is None for c in cert.components)

    def test_mixed_components_scale_only_where_needed(self):
        line = FqCode.from_rows(F5, 2, [[1, 2]])
        good = FqCode.from_rows(F5, 2, [[1, 1]])
        rc = RCode.from_components([line, good, good, good])
        alpha, out, cert = ring_lcd_equivalent(rc, "euclid")
        assert cert.components[0] is not None
        assert all(c is None for c in cert.components[1:])
        assert all(a.g[1] == a.g[2] == a.g[3] == 1 for a in alpha)
        assert out.is_lcd(0)

    def test_galois_mode(self):
        bad = FqCode.from_rows(F9, 2, [[1, 4]])
        rc = RCode.from_components([bad] * 4)
        alpha, out, cert = ring_lcd_equivalent(rc, "galois", l=1)
        assert cert.beta == 2
        assert out.is_lcd(1)
        assert out.lee_min_dist() == rc.lee_min_dist()

    def test_galois_refusals_fire_before_scaling(self):
        rc = RCode.from_components([FqCode.from_rows(F4, 2, [[1, 1]])] * 4)
        with pytest.raises(BetaOneError):
            ring_lcd_equivalent(rc, "galois", l=1)
        rc3 = RCode.from_components([FqCode.from_rows(GF(3), 2, [[1, 1]])] * 4)
        with pytest.raises(FieldTooSmallError):
            ring_lcd_equivalent(rc3, "euclid")

    def test_determinism_with_seed(self):
        rng = random.Random(45)
        line = FqCode.from_rows(F5, 2, [[1, 2]])
        rc = RCode.from_components([line] * 4)
        a1, o1, _ = ring_lcd_equivalent(rc, "euclid", seed=7)
        a2, o2, _ = ring_lcd_equivalent(rc, "euclid", seed=7)
        assert a1 == a2 and o1 == o2

    def test_oracle_confirms_trivial_hull_of_outputs(self):
        from lcdring import oracle
        from support import random_rcode

        rng = random.Random(46)
        for _ in range(8):
            rc = random_rcode(rng, F5, rng.randint(2, 3), 1)
            _, out, _ = ring_lcd_equivalent(rc, "euclid")
            assert oracle.hull_dim(out, 0) == 0
