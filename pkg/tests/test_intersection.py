"""Pairing matrices, definiteness, fundamental and canonical cycles."""

import random
from fractions import Fraction

import pytest

from starres.errors import PreconditionError
from starres.intersection import (
    IntersectionMatrix,
    canonical_cycle,
    fundamental_cycle,
    fundamental_cycle_brute,
    is_negative_definite,
    is_reduced,
    matrix_from_graph,
    pair,
)
from starres.lgroup import Parameters, normal_form, special_elements
from starres.linalg import det
from starres.resolution import dual_graph, make_star


def chain_matrix(labels):
    return matrix_from_graph(make_star(labels[0], [labels[1:]] if len(labels) > 1 else []))


def laufer_any_order(m, rng, start):
    """Laufer increments with a random choice at every step."""
    z = [0] * m.size
    z[start] = 1
    while True:
        hot = [
            i
            for i in range(m.size)
            if sum(z[j] * m.entries[i][j] for j in range(m.size)) > 0
        ]
        if not hot:
            return tuple(z)
        z[rng.choice(hot)] += 1


class TestMatrix:
    def test_single_vertex(self):
        assert chain_matrix([-2]).entries == ((-2,),)

    def test_chain(self):
        assert chain_matrix([-2, -3]).entries == ((-2, 1), (1, -3))

    def test_star_from_example(self):
        params = Parameters([3, 5, 5])
        g = dual_graph(params, normal_form(params, [2, 2, 3], 0))
        m = matrix_from_graph(g)
        assert m.size == 6
        center_row = m.entries[g.center]
        assert center_row[g.center] == -3
        heads = [arm[0] for arm in g.arms]
        assert [center_row[h] for h in heads] == [1, 1, 1]
        assert sum(center_row) == 0  # -3 plus three edges


class TestNegativeDefinite:
    def test_single(self):
        assert is_negative_definite(IntersectionMatrix(((-2,),)))
        assert not is_negative_definite(IntersectionMatrix(((0,),)))

    def test_affine_tree_rejected(self):
        # the all-(-2) star with four single arms is only semidefinite
        m = matrix_from_graph(make_star(-2, [[-2], [-2], [-2], [-2]]))
        assert not is_negative_definite(m)
        assert is_negative_definite(matrix_from_graph(make_star(-2, [[-2], [-2], [-2]])))

    def test_every_resolution_graph(self):
        rng = random.Random(11)
        for _ in range(60):
            weights = [rng.randint(2, 5) for _ in range(rng.randint(1, 3))]
            params = Parameters(weights)
            x = normal_form(
                params, [rng.randrange(p) for p in weights], rng.randint(0, 3)
            )
            if x.c_coeff + sum(1 for a in x.arms if a) < 2:
                continue
            assert is_negative_definite(matrix_from_graph(dual_graph(params, x)))


class TestFundamentalCycle:
    def test_single_vertex(self):
        assert fundamental_cycle(IntersectionMatrix(((-2,),))) == (1,)

    def test_chain(self):
        m = chain_matrix([-2, -3])
        assert fundamental_cycle(m) == (1, 1)
        assert fundamental_cycle_brute(m) == (1, 1)

    def test_star_all_ones_iff_center_deep_enough(self):
        # center -(a+v) with v arms: reduced exactly when a >= 0, i.e. always
        params = Parameters([3, 5, 5])
        g = dual_graph(params, normal_form(params, [2, 2, 3], 0))
        assert fundamental_cycle(matrix_from_graph(g)) == (1,) * 6

    def test_shallow_center_not_reduced(self):
        # beta = 2 < v = 3: negative definite, but the cycle climbs
        m = matrix_from_graph(make_star(-2, [[-3], [-3], [-3]]))
        assert is_negative_definite(m)
        zf = fundamental_cycle(m)
        assert not is_reduced(zf)
        assert zf == fundamental_cycle_brute(m)

    def test_more_shallow_stars(self):
        for arms in ([[-4], [-4], [-4]], [[-2], [-3], [-3]]):
            m = matrix_from_graph(make_star(-2, arms))
            if not is_negative_definite(m):
                continue
            zf = fundamental_cycle(m)
            assert sum(zf) > m.size or not is_reduced(zf)
            assert zf == fundamental_cycle_brute(m)

    def test_order_and_start_independence(self):
        rng = random.Random(12)
        mats = [
            chain_matrix([-2, -3]),
            chain_matrix([-3, -2, -2, -4]),
            matrix_from_graph(make_star(-3, [[-2], [-2, -2], [-3]])),
            matrix_from_graph(make_star(-2, [[-3], [-3], [-3]])),
        ]
        for m in mats:
            expected = fundamental_cycle(m)
            for start in range(m.size):
                for _ in range(5):
                    assert laufer_any_order(m, rng, start) == expected

    def test_every_increment_order_small_graphs(self):
        # exhaustively branch over every choice at every step
        def all_orders(m, z):
            hot = [
                i
                for i in range(m.size)
                if sum(z[j] * m.entries[i][j] for j in range(m.size)) > 0
            ]
            if not hot:
                return {tuple(z)}
            results = set()
            for i in hot:
                z[i] += 1
                results |= all_orders(m, z)
                z[i] -= 1
            return results

        for m in [
            chain_matrix([-2, -2, -2]),
            matrix_from_graph(make_star(-2, [[-3], [-3], [-3]])),
            matrix_from_graph(make_star(-2, [[-2], [-3], [-4]])),
        ]:
            expected = fundamental_cycle(m)
            for start in range(m.size):
                z = [0] * m.size
                z[start] = 1
                assert all_orders(m, z) == {expected}

    def test_matches_brute_force_on_random_graphs(self):
        rng = random.Random(13)
        seen = 0
        while seen < 25:
            weights = [rng.randint(2, 5) for _ in range(rng.randint(1, 3))]
            params = Parameters(weights)
            x = normal_form(
                params, [rng.randrange(p) for p in weights], rng.randint(0, 3)
            )
            if x.c_coeff + sum(1 for a in x.arms if a) < 2:
                continue
            m = matrix_from_graph(dual_graph(params, x))
            if m.size > 8:
                continue
            seen += 1
            assert fundamental_cycle(m) == fundamental_cycle_brute(m)

    def test_requires_negative_definite(self):
        with pytest.raises(PreconditionError):
            fundamental_cycle(IntersectionMatrix(((0,),)))


class TestReduced:
    def test_values(self):
        assert is_reduced((1, 1, 1))
        assert not is_reduced((2, 1))
        assert not is_reduced((1, 0))

    def test_rejects_rationals(self):
        with pytest.raises(PreconditionError):
            is_reduced((Fraction(1, 2),))


class TestCanonicalCycle:
    def test_single_minus_two(self):
        assert canonical_cycle(IntersectionMatrix(((-2,),))) == (0,)

    def test_single_minus_three(self):
        assert canonical_cycle(IntersectionMatrix(((-3,),))) == (Fraction(1, 3),)

    def test_ade_trees_vanish(self):
        for labels in ([-2, -2], [-2, -2, -2, -2]):
            assert all(z == 0 for z in canonical_cycle(chain_matrix(labels)))
        for arms in ([[-2], [-2], [-2]], [[-2], [-2, -2], [-2, -2]]):
            m = matrix_from_graph(make_star(-2, arms))
            assert all(z == 0 for z in canonical_cycle(m))

    def test_defining_system(self):
        m = matrix_from_graph(make_star(-3, [[-2], [-2, -2], [-3]]))
        zk = canonical_cycle(m)
        for i in range(m.size):
            ei = tuple(1 if j == i else 0 for j in range(m.size))
            assert pair(m, zk, ei) == m.entries[i][i] + 2

    def test_denominators_divide_determinant(self):
        m = matrix_from_graph(make_star(-4, [[-3, -2], [-5], [-2, -2, -2]]))
        d = det(m.entries)
        for z in canonical_cycle(m):
            assert (z * d).denominator == 1

    def test_singular_rejected(self):
        with pytest.raises(PreconditionError):
            canonical_cycle(IntersectionMatrix(((0,),)))


class TestPair:
    def test_self_intersection(self):
        m = chain_matrix([-2, -3])
        assert pair(m, (1, 0), (1, 0)) == -2
        assert pair(m, (0, 1), (0, 1)) == -3
        assert pair(m, (1, 0), (0, 1)) == 1

    def test_fundamental_self_intersection_233(self):
        # the degree-one Veronese of (2,3,3): center -3, arms of -2's
        params = Parameters([2, 3, 3])
        g = dual_graph(params, special_elements(params).s)
        m = matrix_from_graph(g)
        zf = fundamental_cycle(m)
        assert zf == (1,) * 6
        assert pair(m, zf, zf) == -3

    def test_length_mismatch(self):
        with pytest.raises(PreconditionError):
            pair(chain_matrix([-2, -3]), (1,), (1, 1))
