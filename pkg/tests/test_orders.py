import itertools

import pytest

from grobasin.orders import (
    IncidenceCertificate,
    SplitQuadruple,
    build_poset,
    check_certificate,
    dominance,
    et_row_partition,
    figure_alg,
    find_certificate,
    incidence_filter,
    leq_et,
    leq_punc,
    leq_punc_via_alg,
    lex_cols_geq,
    lex_rows_leq,
    order_function,
    to_dot,
)
from grobasin.staircase import EMPTY, StandardSet, enumerate_staircases


def index_partitions(k):
    # all set partitions of range(k), grown one element at a time
    parts = [[]]
    for i in range(k):
        grown = []
        for part in parts:
            for j in range(len(part)):
                grown.append(part[:j] + [part[j] + [i]] + part[j + 1:])
            grown.append(part + [[i]])
        parts = grown
    return parts


def brute_leq_et(a, b):
    # rows of a, partitioned into blocks whose sums give the rows of b
    if a.cardinality != b.cardinality:
        return False
    ra = list(a.rows())
    rb = sorted(b.rows())
    for part in index_partitions(len(ra)):
        sums = sorted(sum(ra[i] for i in block) for block in part)
        if sums == rb:
            return True
    return False


def brute_leq_punc(a, b):
    # vertical column breaking is horizontal row merging of the mirrors
    return brute_leq_et(b.transpose(), a.transpose())


NONEX_A = StandardSet.from_columns([3, 2, 1])
NONEX_B = StandardSet.from_columns([3, 1, 1, 1])


class TestAgainstBruteForce:
    def test_leq_et(self):
        for n in range(7):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                assert leq_et(a, b) == brute_leq_et(a, b)

    def test_leq_punc(self):
        for n in range(7):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                assert leq_punc(a, b) == brute_leq_punc(a, b)


class TestOrderAxioms:
    @pytest.mark.parametrize("name", ["et", "punc", "dominance"])
    def test_partial_order(self, name):
        leq = order_function(name)
        for n in range(1, 8):
            sts = enumerate_staircases(n)
            rel = {
                (i, j): leq(a, b)
                for i, a in enumerate(sts)
                for j, b in enumerate(sts)
            }
            k = len(sts)
            for i in range(k):
                assert rel[i, i]
            for i, j in itertools.product(range(k), range(k)):
                if i != j:
                    assert not (rel[i, j] and rel[j, i])
            for i, j, l in itertools.product(range(k), repeat=3):
                if rel[i, j] and rel[j, l]:
                    assert rel[i, l]

    @pytest.mark.parametrize("name", ["et", "punc", "dominance"])
    def test_column_is_bottom_row_is_top(self, name):
        leq = order_function(name)
        for n in range(1, 8):
            col = StandardSet([n])
            row = StandardSet.from_rows([n])
            for s in enumerate_staircases(n):
                assert leq(col, s)
                assert leq(s, row)

    @pytest.mark.parametrize("name", ["et", "punc", "dominance"])
    def test_cross_size_is_never_related(self, name):
        leq = order_function(name)
        a = StandardSet([2, 1])
        b = StandardSet([2, 2])
        assert not leq(a, b)
        assert not leq(b, a)

    def test_unknown_order_name(self):
        with pytest.raises(ValueError):
            order_function("colex")


class TestRefinementAndDuality:
    def test_both_orders_refine_dominance(self):
        for n in range(1, 8):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                if leq_et(a, b) or leq_punc(a, b):
                    assert dominance(a, b)

    def test_both_orders_refine_the_full_filter(self):
        for n in range(1, 8):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                if leq_et(a, b) or leq_punc(a, b):
                    assert incidence_filter(a, b)

    def test_dominance_incomparable_pair(self):
        a = StandardSet.from_rows([4, 1, 1])
        b = StandardSet.from_rows([3, 3])
        assert not dominance(a, b)
        assert not dominance(b, a)

    def test_transpose_duality(self):
        for n in range(1, 8):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                assert leq_punc(a, b) == leq_et(b.transpose(), a.transpose())

    def test_orders_differ(self):
        # the two orders disagree somewhere by n = 6
        assert leq_punc(NONEX_A, NONEX_B)
        assert not leq_et(NONEX_A, NONEX_B)


class TestNonExample:
    def test_frozen_quadruple(self):
        assert leq_punc(NONEX_A, NONEX_B) is True
        assert leq_et(NONEX_A, NONEX_B) is False
        assert incidence_filter(NONEX_A, NONEX_B) is True
        assert incidence_filter(NONEX_B, NONEX_A) is False

    def test_lex_components(self):
        assert lex_rows_leq(NONEX_A, NONEX_B)
        assert lex_cols_geq(NONEX_A, NONEX_B)
        assert dominance(NONEX_A, NONEX_B)
        assert not dominance(NONEX_B, NONEX_A)


class TestRowPartitionWitness:
    def test_witness_exists_iff_related(self):
        for n in range(1, 7):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                witness = et_row_partition(a, b)
                assert (witness is not None) == leq_et(a, b)

    def test_witness_blocks_reassemble(self):
        for n in range(1, 7):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                witness = et_row_partition(a, b)
                if witness is None:
                    continue
                assert len(witness) == len(b.rows())
                for block, target in zip(witness, b.rows()):
                    assert sum(block) == target
                pooled = sorted(w for block in witness for w in block)
                assert pooled == sorted(a.rows())

    def test_simple_witness(self):
        a = StandardSet.from_columns([2, 2, 1])  # rows (3, 2)
        whole = StandardSet.from_rows([5])
        assert et_row_partition(a, whole) == ((3, 2),)
        assert et_row_partition(a, a) == ((3,), (2,))


class TestSplittingGame:
    def test_equal_inputs_succeed_immediately(self):
        s = StandardSet([2])
        assert figure_alg(s, s) == {SplitQuadruple((2,), (), (2,), ())}

    def test_frozen_failure(self):
        ones = StandardSet([1, 1])
        two = StandardSet([2])
        assert figure_alg(ones, two) == {
            SplitQuadruple((), (1, 1), (), (2,))
        }

    def test_frozen_success_by_splitting(self):
        ones = StandardSet([1, 1])
        two = StandardSet([2])
        assert figure_alg(two, ones) == {
            SplitQuadruple((2,), (), (1, 1), ())
        }

    def test_size_mismatch_raises(self):
        with pytest.raises(ValueError):
            figure_alg(StandardSet([1]), StandardSet([1, 1]))

    def test_via_alg_matches_direct_order(self):
        for n in range(1, 7):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                assert leq_punc_via_alg(a, b) == leq_punc(a, b)

    def test_via_alg_cross_size_false(self):
        assert not leq_punc_via_alg(StandardSet([1]), StandardSet([1, 1]))

    def test_terminals_conserve_size(self):
        for n in range(1, 6):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                for quad in figure_alg(a, b):
                    assert sum(quad.c1) + sum(quad.c2) == n
                    assert sum(quad.c1p) + sum(quad.c2p) == n
                    # leftovers on both sides weigh the same
                    assert sum(quad.c2) == sum(quad.c2p)


class TestPosets:
    def test_n4_et_covers(self):
        poset = build_poset(4, "et")
        edges = {
            (poset.elements[i].cols(), poset.elements[j].cols())
            for i, j in poset.covers
        }
        assert edges == {
            ((4,), (3, 1)),
            ((3, 1), (2, 2)),
            ((3, 1), (2, 1, 1)),
            ((2, 2), (1, 1, 1, 1)),
            ((2, 1, 1), (1, 1, 1, 1)),
        }

    def test_n4_punc_covers(self):
        poset = build_poset(4, "punc")
        edges = {
            (poset.elements[i].cols(), poset.elements[j].cols())
            for i, j in poset.covers
        }
        assert edges == {
            ((4,), (3, 1)),
            ((4,), (2, 2)),
            ((3, 1), (2, 1, 1)),
            ((2, 2), (2, 1, 1)),
            ((2, 1, 1), (1, 1, 1, 1)),
        }

    def test_relation_matrix_matches_order(self):
        for name in ("et", "punc", "dominance"):
            leq = order_function(name)
            poset = build_poset(5, name)
            for i, a in enumerate(poset.elements):
                for j, b in enumerate(poset.elements):
                    assert poset.relation[i][j] == leq(a, b)

    def test_covers_are_transitive_reduction(self):
        poset = build_poset(5, "et")
        cover_set = set(poset.covers)
        k = len(poset.elements)
        for i, j in itertools.product(range(k), range(k)):
            if i == j or not poset.relation[i][j]:
                assert (i, j) not in cover_set
                continue
            through = any(
                poset.relation[i][m] and poset.relation[m][j]
                for m in range(k)
                if m not in (i, j)
            )
            assert ((i, j) in cover_set) == (not through)

    def test_to_dot_frozen(self):
        poset = build_poset(3, "punc")
        assert to_dot(poset, name="punc_3") == (
            'digraph punc_3 {\n'
            '  "3";\n'
            '  "2,1";\n'
            '  "1,1,1";\n'
            '  "3" -> "2,1";\n'
            '  "2,1" -> "1,1,1";\n'
            "}\n"
        )


def single_box_certificate(a, b):
    box = StandardSet([1])
    return IncidenceCertificate(
        lambda_shape=box,
        lambda_prime_shape=box,
        box_map={(0, 0): (0, 0)},
        per_box={(0, 0): a},
        per_box_prime={(0, 0): b},
    )


class TestCertificates:
    def test_single_box_accepts(self):
        a = StandardSet([2, 1])
        b = StandardSet.from_rows([3])
        assert check_certificate(single_box_certificate(a, b), a, b)

    def test_two_box_row_certificate(self):
        # both shapes a single row of two boxes, factors matched in place
        flat = StandardSet([1, 1])
        cert = IncidenceCertificate(
            lambda_shape=flat,
            lambda_prime_shape=flat,
            box_map={(0, 0): (0, 0), (1, 0): (1, 0)},
            per_box={(0, 0): StandardSet([2]), (1, 0): StandardSet([1])},
            per_box_prime={
                (0, 0): StandardSet([1, 1]),
                (1, 0): StandardSet([1]),
            },
        )
        assert check_certificate(cert, StandardSet([2, 1]), StandardSet([1, 1, 1]))

    def test_two_box_row_certificate_reversed_factors_fail(self):
        # same skeleton, but now one factor would need to merge columns
        flat = StandardSet([1, 1])
        cert = IncidenceCertificate(
            lambda_shape=flat,
            lambda_prime_shape=flat,
            box_map={(0, 0): (0, 0), (1, 0): (1, 0)},
            per_box={(0, 0): StandardSet([1, 1]), (1, 0): StandardSet([1])},
            per_box_prime={
                (0, 0): StandardSet([2]),
                (1, 0): StandardSet([1]),
            },
        )
        assert not check_certificate(
            cert, StandardSet([1, 1, 1]), StandardSet([2, 1])
        )

    def test_reconstruction_mismatch_is_false(self):
        a = StandardSet([2])
        b = StandardSet([1, 1])
        cert = single_box_certificate(StandardSet([1, 1]), b)
        assert not check_certificate(cert, a, b)

    def test_per_box_order_failure_is_false(self):
        a = StandardSet([1, 1])
        b = StandardSet([2])
        assert not check_certificate(single_box_certificate(a, b), a, b)

    def test_wrong_factor_keys_raise(self):
        a = StandardSet([2])
        cert = IncidenceCertificate(
            lambda_shape=StandardSet([1]),
            lambda_prime_shape=StandardSet([1]),
            box_map={(0, 0): (0, 0)},
            per_box={(1, 1): a},
            per_box_prime={(0, 0): a},
        )
        with pytest.raises(ValueError):
            check_certificate(cert, a, a)

    def test_non_bijective_map_raises(self):
        flat = StandardSet([1, 1])
        one = StandardSet([1])
        cert = IncidenceCertificate(
            lambda_shape=flat,
            lambda_prime_shape=flat,
            box_map={(0, 0): (0, 0), (1, 0): (0, 0)},
            per_box={(0, 0): one, (1, 0): one},
            per_box_prime={(0, 0): one, (1, 0): one},
        )
        with pytest.raises(ValueError):
            check_certificate(cert, StandardSet([1, 1]), StandardSet([1, 1]))

    def test_row_splitting_map_raises(self):
        one = StandardSet([1])
        cert = IncidenceCertificate(
            lambda_shape=StandardSet([1, 1]),
            lambda_prime_shape=StandardSet([2]),
            box_map={(0, 0): (0, 0), (1, 0): (0, 1)},
            per_box={(0, 0): one, (1, 0): one},
            per_box_prime={(0, 0): one, (0, 1): one},
        )
        with pytest.raises(ValueError):
            check_certificate(cert, StandardSet([1, 1]), StandardSet([2]))

    def test_search_validates_and_implies_filter(self):
        for n in range(1, 6):
            sts = enumerate_staircases(n)
            for a, b in itertools.product(sts, sts):
                cert = find_certificate(a, b)
                if cert is not None:
                    assert check_certificate(cert, a, b)
                    assert incidence_filter(a, b)

    def test_search_none_on_size_mismatch(self):
        assert find_certificate(StandardSet([1]), StandardSet([2])) is None

    def test_search_over_bound_raises(self):
        with pytest.raises(ValueError):
            find_certificate(StandardSet([3]), StandardSet([3]), bound=2)

    def test_search_empty_pair(self):
        cert = find_certificate(EMPTY, EMPTY)
        assert cert is not None
        assert check_certificate(cert, EMPTY, EMPTY)

    def test_worked_pair_has_certificate(self):
        a = StandardSet([2, 1])
        b = StandardSet.from_rows([3])
        cert = find_certificate(a, b)
        assert cert is not None
        assert check_certificate(cert, a, b)

    def test_nonexample_reverse_has_no_certificate(self):
        assert find_certificate(NONEX_B, NONEX_A) is None
