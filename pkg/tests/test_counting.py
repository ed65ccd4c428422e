"""Torus counts and non-degeneracy checks."""

import itertools

import pytest

from igusa.counting import (CountTriple, check_nondegenerate_single,
                            check_pair_nondegenerate,
                            check_strong_nondegenerate, count_triple,
                            rank_mod_p)
from igusa.cones import partition_pair
from igusa.errors import SizeGuardError
from igusa.newton import NewtonPolyhedron
from igusa.polynomials import PolynomialMapping, parse_polynomial

from conftest import example_measure


def brute_counts(fparts, gpart, p, n):
    """Independent recount with plain integer evaluation."""
    N = P = Q = 0
    for a in itertools.product(range(1, p), repeat=n):
        fzero = fparts is not None and all(
            c.evaluate(a) % p == 0 for c in fparts)
        gzero = gpart is not None and gpart.evaluate(a) % p == 0
        N += fzero and not gzero
        P += gzero and not fzero
        Q += fzero and gzero
    return CountTriple(N, P, Q)


class TestCountTriple:
    def test_measure_polynomial_counts(self):
        g = example_measure()
        # case split: 3(p-1) zeros when p = 1,7 mod 12, else p-1
        for p, expected in [(13, 36), (7, 18), (5, 4), (11, 10)]:
            assert count_triple(None, g, p) == CountTriple(0, expected, 0)

    def test_monomial_never_vanishes(self):
        mono = parse_polynomial("x^4*y^2", 2)
        for p in (2, 3, 5, 7):
            assert count_triple(None, mono, p) == CountTriple(0, 0, 0)

    def test_matches_independent_recount(self):
        f = parse_polynomial("x + y + x*y", 2)
        g = parse_polynomial("x - y", 2)
        for p in (2, 3, 5, 7):
            assert count_triple(f, g, p) == brute_counts([f], g, p, 2)

    def test_mapping_needs_all_components_zero(self):
        ff = PolynomialMapping([parse_polynomial("x + y", 2),
                                parse_polynomial("x - y", 2)])
        g = parse_polynomial("x*y - 1", 2)
        for p in (3, 5):
            assert count_triple(ff, g, p) == brute_counts(
                list(ff.components), g, p, 2)

    def test_totals(self):
        f = parse_polynomial("x + y", 2)
        g = parse_polynomial("x + 2*y", 2)
        for p in (3, 5, 7):
            c = count_triple(f, g, p)
            both_nonzero = sum(
                1 for a in itertools.product(range(1, p), repeat=2)
                if f.evaluate(a) % p and g.evaluate(a) % p)
            assert c.N + c.P + c.Q + both_nonzero == (p - 1)**2

    def test_unit_scaling_invariance(self):
        g = example_measure()
        for p in (5, 7, 13):
            for c in (2, 3, p - 1):
                assert count_triple(None, g, p) == count_triple(None, c * g, p)

    def test_size_guard(self):
        g = parse_polynomial("x + y", 2)
        with pytest.raises(SizeGuardError):
            count_triple(None, g, 100003)


class TestRankModP:
    def test_known(self):
        assert rank_mod_p([[1, 0], [0, 1]], 5) == 2
        assert rank_mod_p([[2, 4], [1, 2]], 5) == 1
        assert rank_mod_p([[5, 10], [3, 1]], 5) == 1

    def test_matches_rational_rank_when_no_p_division(self):
        import random
        from igusa import linalg
        rng = random.Random(7)
        for _ in range(50):
            p = rng.choice([3, 5, 7])
            rows = [[rng.randint(0, p - 1) for _ in range(3)]
                    for _ in range(3)]
            rp = rank_mod_p(rows, p)
            rq = linalg.rank(rows)
            assert rp <= rq
            if all(x in (0, 1) for row in rows for x in row) and p > 3:
                # tiny 0/1 matrices of rank r have a nonzero r-minor < p
                assert rp == rq


class TestSingleCheck:
    def test_example_measure_iff_p_not_3(self):
        g = example_measure()
        report = check_nondegenerate_single(g, 3)
        assert not report.ok
        assert report.witnesses
        for p in (2, 5, 7, 11, 13):
            assert check_nondegenerate_single(g, p).ok

    def test_witness_is_singular_zero(self):
        g = example_measure()
        report = check_nondegenerate_single(g, 3)
        _, point, _ = report.witnesses[0]
        assert g.evaluate(point) % 3 == 0

    def test_monomial_always_ok(self):
        mono = parse_polynomial("x^3*y", 2)
        for p in (2, 3, 5):
            assert check_nondegenerate_single(mono, p).ok


class TestStrongCheck:
    def test_coordinate_mapping_ok(self):
        ff = PolynomialMapping([parse_polynomial("x", 2),
                                parse_polynomial("y", 2)])
        for p in (2, 3, 5):
            assert check_strong_nondegenerate(ff, p).ok

    def test_t1_reduces_to_single(self):
        f = parse_polynomial("x + y", 2)
        ff = PolynomialMapping([f])
        for p in (2, 3, 5, 7):
            assert check_strong_nondegenerate(ff, p).ok == \
                check_nondegenerate_single(f, p).ok

    def test_exhaustive_small_case(self):
        ff = PolynomialMapping([parse_polynomial("x + y", 2),
                                parse_polynomial("x - y", 2)])
        # common torus zeros need 2x = 0: vacuous for odd p, while mod 2
        # the point (1,1) kills both with Jacobian rows (1,1),(1,1)
        for p in (3, 5):
            assert check_strong_nondegenerate(ff, p).ok
        assert not check_strong_nondegenerate(ff, 2).ok


class TestPairCheck:
    def _partition(self, f, g):
        return partition_pair(NewtonPolyhedron.of(f), NewtonPolyhedron.of(g))

    def test_vacuous_linear_pairs(self):
        f = parse_polynomial("x + y", 2)
        for gtext, p in [("x - y", 5), ("x + 2*y", 3), ("x + 2*y", 2)]:
            g = parse_polynomial(gtext, 2)
            report = check_pair_nondegenerate(f, g, self._partition(f, g), p)
            assert report.ok

    def test_dimension_floor(self):
        f = parse_polynomial("x + y", 2)
        ff = PolynomialMapping([f, parse_polynomial("x*y", 2)])
        g = parse_polynomial("x - y", 2)
        with pytest.raises(ValueError):
            check_pair_nondegenerate(ff, g, self._partition(ff, g), 5)

    def test_degenerate_pair_detected(self):
        # mod 2 both reduce to x + y: common zero at (1,1) with
        # proportional gradients, stacked rank 1 < 2; mod 5 the only
        # common zero (1,4) has an invertible stacked Jacobian
        f = parse_polynomial("x + y", 2)
        g = parse_polynomial("x - y + 2*x*y", 2)
        partition = self._partition(f, g)
        report = check_pair_nondegenerate(f, g, partition, 2)
        assert not report.ok
        assert check_pair_nondegenerate(f, g, partition, 5).ok
