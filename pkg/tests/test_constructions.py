import itertools

import numpy as np
import pytest

from setpentagon.algebra import (
    Factorization,
    Magma,
    commuting_idempotent_pairs,
    exact_factorizations,
    factorization,
    idempotent_endomorphisms,
)
from setpentagon.constructions import (
    alternating_subgroup,
    baaj_skandalis,
    canonical_transposition,
    constant_solution,
    coset,
    endo_solution,
    kac_takesaki_s,
    kac_takesaki_t,
    militaru,
    sign_solution,
    zakrzewski,
)
from setpentagon.errors import FactorizationError, MapError, PentagonError
from setpentagon.groups import cyclic, trivial
from setpentagon.pentagon import (
    identity_map,
    is_cocommutative,
    is_commutative,
    is_invertible,
    is_reversed_solution,
    is_solution_direct,
    opposite,
)

import oracles


def split_v4(v4):
    # bit vectors (a, b) are labelled 2a + b; A is the first factor
    return factorization(v4, [0, 2], [0, 1])


class TestKacTakesaki:
    def test_values_on_z3(self):
        g = cyclic(3)
        assert kac_takesaki_s(g)(1, 2) == (0, 2)
        assert kac_takesaki_t(g)(1, 2) == (1, 1)

    def test_trivial_group(self):
        assert kac_takesaki_s(trivial()) == identity_map(1)

    def test_invertible_solutions(self, corpus):
        for name, g in corpus.items():
            for s in (kac_takesaki_s(g), kac_takesaki_t(g)):
                assert is_solution_direct(s), name
                assert is_invertible(s)

    def test_commutativity(self, corpus):
        for name, g in corpus.items():
            s, t = kac_takesaki_s(g), kac_takesaki_t(g)
            assert is_cocommutative(s), name
            assert is_commutative(t), name
            assert bool(is_commutative(s)) == oracles.is_commutative(s)
            assert bool(is_commutative(s)) == g.is_abelian()


class TestEndo:
    def test_triple_on_z6(self, z6):
        s = endo_solution(z6.magma, [3 * x % 6 for x in range(6)])
        assert s(1, 2) == (3, 0)

    def test_identity_gamma(self, z6):
        assert endo_solution(z6.magma, range(6)) == kac_takesaki_s(z6)

    def test_constant_gamma(self, z6):
        assert endo_solution(z6.magma, [0] * 6) == constant_solution(z6.magma)

    def test_rejections(self, z6):
        with pytest.raises(MapError):
            endo_solution(z6.magma, [1] * 6)  # not an endomorphism
        with pytest.raises(MapError):
            endo_solution(z6.magma, [2 * x % 6 for x in range(6)])  # not idempotent
        with pytest.raises(PentagonError):
            endo_solution(Magma([[1, 0], [0, 0]]), [0, 1])
        with pytest.raises(MapError):
            endo_solution(z6.magma, [0, 1])

    def test_semigroup_input(self):
        m = Magma([[0, 0], [1, 1]])
        for gamma in idempotent_endomorphisms(m):
            assert is_solution_direct(endo_solution(m, gamma))

    def test_constant_needs_idempotent(self):
        with pytest.raises(MapError):
            constant_solution(cyclic(3).magma, 1)

    def test_every_idempotent_endomorphism(self, corpus):
        for name, g in corpus.items():
            for gamma in idempotent_endomorphisms(g.magma):
                assert is_solution_direct(endo_solution(g.magma, gamma)), (name, gamma)


class TestMilitaru:
    def test_identity_maps(self):
        assert militaru(2, (0, 1), (0, 1)) == identity_map(2)

    def test_value(self):
        assert militaru(3, (0, 0, 0), (0, 1, 2))(1, 2) == (0, 2)

    def test_non_commuting(self):
        with pytest.raises(MapError):
            militaru(2, (0, 0), (1, 1))

    def test_non_idempotent(self):
        with pytest.raises(MapError):
            militaru(2, (1, 0), (0, 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_all_four_identities(self, n):
        for a, b in commuting_idempotent_pairs(n):
            s = militaru(n, a, b)
            assert is_solution_direct(s) and is_reversed_solution(s)
            assert is_commutative(s) and is_cocommutative(s)


class TestFactorizationSolutions:
    def test_zakrzewski_on_v4(self, v4):
        s = zakrzewski(v4, split_v4(v4))
        assert s(2, 3) == (3, 1)
        assert oracles.is_solution(s)

    def test_baaj_skandalis_on_v4(self, v4):
        s = baaj_skandalis(v4, split_v4(v4))
        assert s(2, 3) == (0, 3)
        assert oracles.is_solution(s)
        assert s == opposite(zakrzewski(v4, split_v4(v4)))

    def test_trivial_factorizations(self, s3):
        whole = factorization(s3, range(6), [0])
        assert zakrzewski(s3, whole) == opposite(kac_takesaki_s(s3))
        flipped = factorization(s3, [0], range(6))
        assert baaj_skandalis(s3, flipped) == kac_takesaki_t(s3)

    def test_s3_split(self, s3):
        f = factorization(s3, alternating_subgroup(3), [0, canonical_transposition(3)])
        z = zakrzewski(s3, f)
        assert is_solution_direct(z) and is_invertible(z)
        assert opposite(z) == baaj_skandalis(s3, f)

    def test_rejects_tampered_projection(self, v4):
        f = split_v4(v4)
        bad = Factorization(f.A, f.B, tuple(reversed(f.p1)), f.p2)
        with pytest.raises(FactorizationError):
            zakrzewski(v4, bad)

    def test_every_factorization(self, corpus):
        for name, g in corpus.items():
            for f in exact_factorizations(g):
                z, b = zakrzewski(g, f), baaj_skandalis(g, f)
                assert is_solution_direct(z) and is_invertible(z), name
                assert is_solution_direct(b) and is_invertible(b), name
                assert opposite(z) == b


class TestSign:
    def test_kernel_is_alternating(self, s3):
        from setpentagon.theta import GroupSolution, kernel, theta_one

        gs = GroupSolution(s3, sign_solution(3).star)
        assert kernel(gs).elements == alternating_subgroup(3)
        pi = canonical_transposition(3)
        even = set(alternating_subgroup(3))
        assert theta_one(gs) == tuple(0 if x in even else pi for x in range(6))

    def test_transposition_square(self, s3):
        pi = canonical_transposition(3)
        assert sign_solution(3)(pi, pi) == (0, pi)

    def test_matches_coset_construction(self, s3):
        pi = canonical_transposition(3)
        assert sign_solution(3) == coset(s3, alternating_subgroup(3), [0, pi])

    def test_degree_range(self):
        with pytest.raises(PentagonError):
            sign_solution(5)
        assert is_solution_direct(sign_solution(4))


def test_coset_factory_matches_solution_table(z6):
    s = coset(z6, [0, 2, 4], [0, 1])
    t1 = np.array([0, 1, 0, 1, 0, 1])
    for x, y in itertools.product(range(6), repeat=2):
        assert s(x, y) == ((x + y) % 6, (t1[(x + y) % 6] - t1[x]) % 6)
