import itertools

import numpy as np
import pytest

from setpentagon.algebra import (
    Magma,
    commuting_idempotent_pairs,
    compose,
    exact_factorizations,
    factorization,
    group_from_magma,
    idempotent_endomorphisms,
    is_associative,
    normal_subgroups,
    normalized,
    relabel,
    representative_systems,
    right_cosets,
    subgroup,
    subgroups,
    validate_magma,
)
from setpentagon.constructions import alternating_subgroup, canonical_transposition
from setpentagon.errors import (
    BudgetExceededError,
    FactorizationError,
    NoIdentityError,
    NoInverseError,
    NotAssociativeError,
    SubgroupError,
    TableError,
)
from setpentagon.groups import cyclic, symmetric, trivial

import oracles

LEFT_PROJECTION_2 = [[0, 0], [1, 1]]


class TestValidateMagma:
    def test_singleton(self):
        assert validate_magma(1, [[0]]).n == 1

    def test_xor(self):
        m = validate_magma(2, [[0, 1], [1, 0]])
        assert m.table.tolist() == [[0, 1], [1, 0]]

    def test_out_of_range_reports_position(self):
        with pytest.raises(TableError) as exc:
            validate_magma(2, [[0, 2], [1, 0]])
        assert (exc.value.row, exc.value.col) == (0, 1)

    def test_ragged(self):
        with pytest.raises(TableError):
            validate_magma(2, [[0, 1], [1]])
        with pytest.raises(TableError):
            validate_magma(3, [[0, 1, 2], [1, 2, 0]])

    def test_tables_are_immutable(self):
        m = validate_magma(2, [[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            m.table[0, 0] = 1


class TestAssociativity:
    def test_group_table(self):
        assert is_associative(validate_magma(2, [[0, 1], [1, 0]]))

    def test_meet_table_matches_scan(self):
        table = [[0, 0], [0, 1]]
        v = is_associative(validate_magma(2, table))
        assert bool(v) == (oracles.associativity_failure(table) is None)
        assert v.witness == oracles.associativity_failure(table)

    def test_left_projection(self):
        assert is_associative(validate_magma(2, LEFT_PROJECTION_2))

    @pytest.mark.parametrize("seed", range(20))
    def test_witness_matches_oracle_on_random_tables(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 5))
        table = rng.integers(0, n, size=(n, n)).tolist()
        assert is_associative(Magma(table)).witness == oracles.associativity_failure(table)


class TestGroupFromMagma:
    def test_cyclic_six(self, z6):
        assert z6.identity == 0
        assert z6.inverse.tolist() == [(6 - k) % 6 for k in range(6)]

    def test_left_projection_has_no_identity(self):
        with pytest.raises(NoIdentityError):
            group_from_magma(validate_magma(2, LEFT_PROJECTION_2))

    def test_not_associative(self):
        with pytest.raises(NotAssociativeError) as exc:
            group_from_magma(validate_magma(2, [[1, 0], [0, 0]]))
        assert exc.value.witness == oracles.associativity_failure([[1, 0], [0, 0]])

    def test_no_inverse(self):
        # multiplicative monoid {0, 1}: identity 1, zero has no inverse
        with pytest.raises(NoInverseError) as exc:
            group_from_magma(validate_magma(2, [[0, 0], [0, 1]]))
        assert exc.value.element == 0

    def test_symmetric_three(self, s3):
        assert s3.identity == 0
        for x in range(6):
            assert s3.mul(x, s3.inv(x)) == 0
        assert oracles.associativity_failure(s3.table.tolist()) is None

    def test_normalized_moves_identity_to_zero(self):
        g = relabel(cyclic(5), [2, 0, 1, 3, 4])
        assert g.identity == 2
        h = normalized(g)
        assert h.identity == 0
        assert sorted(h.table.ravel().tolist()) == sorted(g.table.ravel().tolist())


class TestSubgroups:
    def test_cyclic_six(self, z6):
        assert [K.elements for K in normal_subgroups(z6)] == [
            (0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)]

    def test_symmetric_three(self, s3):
        assert [K.elements for K in normal_subgroups(s3)] == [
            (0,), alternating_subgroup(3), tuple(range(6))]

    def test_trivial_group(self):
        assert [K.elements for K in normal_subgroups(trivial())] == [(0,)]

    def test_normal_subgroups_match_subset_oracle(self, corpus):
        for name, g in corpus.items():
            got = [K.elements for K in normal_subgroups(g)]
            assert got == oracles.normal_subgroups_brute(g.table.tolist()), name

    def test_scan_and_generation_agree(self, corpus):
        for name, g in corpus.items():
            assert subgroups(g, "subsets") == subgroups(g, "generation"), name

    def test_symmetric_four_uses_generation(self):
        g = symmetric(4)
        subs = subgroups(g)
        assert len(subs) == 30
        assert [len(K) for K in subs if K.is_normal] == [1, 4, 12, 24]

    def test_subgroup_rejects_non_subgroup(self, z6):
        with pytest.raises(SubgroupError):
            subgroup(z6, [0, 1])


class TestRepresentativeSystems:
    def test_index_two_in_z6(self, z6):
        assert list(representative_systems(z6, [0, 2, 4])) == [(0, 1), (0, 3), (0, 5)]

    def test_whole_group(self, z6):
        assert list(representative_systems(z6, range(6))) == [(0,)]

    def test_z4(self):
        assert list(representative_systems(cyclic(4), [0, 2])) == [(0, 1), (0, 3)]

    def test_not_a_subgroup(self, z6):
        with pytest.raises(SubgroupError):
            list(representative_systems(z6, [0, 1]))

    def test_count_and_coverage(self, corpus):
        for name, g in corpus.items():
            for K in subgroups(g):
                systems = list(representative_systems(g, K))
                index = g.n // len(K)
                assert len(systems) == len(K) ** (index - 1), name
                assert systems == sorted(set(systems))
                cosets = right_cosets(g, K)
                for R in systems:
                    assert g.identity in R
                    assert all(len(set(R) & set(c)) == 1 for c in cosets)


class TestFactorizations:
    def test_s3_contains_alternating_split(self, s3):
        pairs = {(f.A.elements, f.B.elements) for f in exact_factorizations(s3)}
        assert (alternating_subgroup(3), (0, canonical_transposition(3))) in pairs

    def test_z2_only_trivial(self):
        pairs = [(f.A.elements, f.B.elements) for f in exact_factorizations(cyclic(2))]
        assert pairs == [((0,), (0, 1)), ((0, 1), (0,))]

    def test_z4_has_no_proper_factorization(self):
        facts = exact_factorizations(cyclic(4))
        assert all(len(f.A) in (1, 4) for f in facts)
        assert len(facts) == 2

    def test_projections_invert_multiplication(self, corpus):
        for name, g in corpus.items():
            for f in exact_factorizations(g):
                products = {g.mul(a, b) for a in f.A for b in f.B}
                assert len(products) == g.n
                for x in range(g.n):
                    assert g.mul(f.p1[x], f.p2[x]) == x
                    assert f.p1[x] in f.A and f.p2[x] in f.B

    def test_overlapping_subgroups_rejected(self):
        g = cyclic(4)
        with pytest.raises(FactorizationError):
            factorization(g, [0, 2], [0, 2])


class TestSelfMaps:
    def test_z6_endomorphisms(self, z6):
        expected = sorted(tuple(k * x % 6 for x in range(6)) for k in (0, 1, 3, 4))
        assert idempotent_endomorphisms(z6.magma) == expected

    def test_trivial(self):
        assert idempotent_endomorphisms(trivial().magma) == [(0,)]

    def test_z2(self):
        assert idempotent_endomorphisms(cyclic(2).magma) == [(0, 0), (0, 1)]

    def test_matches_oracle(self, corpus):
        for name in ("Z3", "Z4", "V4", "S3", "Z5"):
            table = corpus[name].table
            assert idempotent_endomorphisms(corpus[name].magma) == \
                oracles.idempotent_endomorphisms_brute(table.tolist()), name

    def test_non_group_magma(self):
        table = [[0, 0, 0], [0, 1, 2], [0, 2, 1]]
        assert idempotent_endomorphisms(Magma(table)) == \
            oracles.idempotent_endomorphisms_brute(table)

    def test_budget(self, z6):
        with pytest.raises(BudgetExceededError):
            idempotent_endomorphisms(z6.magma, budget=100)

    def test_commuting_pairs_small(self):
        assert len(list(commuting_idempotent_pairs(1))) == 1
        pairs = list(commuting_idempotent_pairs(2))
        assert len(pairs) == 7
        assert ((0, 0), (1, 1)) not in pairs

    def test_commuting_pairs_match_scan(self):
        n = 3
        maps = list(itertools.product(range(n), repeat=n))
        idem = [f for f in maps if all(f[f[x]] == f[x] for x in range(n))]
        expected = [(a, b) for a in idem for b in idem
                    if all(a[b[x]] == b[a[x]] for x in range(n))]
        assert list(commuting_idempotent_pairs(n)) == expected

    def test_commuting_pairs_budget(self):
        with pytest.raises(BudgetExceededError):
            next(commuting_idempotent_pairs(6))

    def test_compose_order(self):
        assert compose((1, 1), (0, 0)) == (1, 1)
        assert compose((0, 0), (1, 1)) == (0, 0)
