import numpy as np
import pytest
from math import comb, factorial

from signotopes import (
    SignFunction,
    brute_force_monotone_count,
    brute_force_transitive_count,
    count_monotone,
    enumerate_monotone,
    find_avoiding_coloring,
    is_monotone,
    longest_mono_paths,
    project,
    projection_signature,
    ramsey_number,
    random_monotone_coloring,
    tow,
)
from signotopes.enumeration import AtLeast
from signotopes.errors import InvalidArgument, TooLarge

EXAMPLE_134 = SignFunction.from_string(3, 4, "-+-+")


class TestEnumerate:
    def test_single_edge(self):
        got = list(enumerate_monotone(3, 3))
        assert len(got) == 2

    @pytest.mark.parametrize(
        "r,n",
        [(2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)],
    )
    def test_agrees_with_brute_force(self, r, n):
        got = list(enumerate_monotone(r, n))
        assert all(is_monotone(c) for c in got)
        assert len(set(got)) == len(got)
        assert len(got) == brute_force_monotone_count(r, n)

    def test_small_complete_counts(self):
        for r in range(3, 6):
            assert len(list(enumerate_monotone(r, r + 1))) == 2 * r + 2

    def test_golden_count_k36_against_brute_force(self):
        # 20 edges: the largest size the 2^C(n,r) filtering oracle covers
        assert brute_force_monotone_count(3, 6) == 908
        assert count_monotone(3, 6).count == 908

    def test_pair_count_equals_factorial(self):
        # frozen from brute force; coincides with the permutation count
        assert len(list(enumerate_monotone(2, 4))) == 24
        assert 24 == factorial(4)

    def test_swap_and_reversal_are_involutions_on_the_set(self):
        colorings = set(enumerate_monotone(3, 5))
        assert {c.swapped() for c in colorings} == colorings
        assert {c.reversed_order() for c in colorings} == colorings
        assert sum(1 for c in colorings if c.swapped() == c) == 0

    def test_prefix_split_partitions_the_search(self):
        full = set(enumerate_monotone(3, 5))
        split = set()
        for a in (-1, 1):
            for b in (-1, 1):
                split |= set(enumerate_monotone(3, 5, prefix=(a, b)))
        assert split == full

    def test_edge_cap_is_overridable(self):
        with pytest.raises(TooLarge):
            next(enumerate_monotone(2, 13))
        assert next(enumerate_monotone(2, 13, max_edges=100)) is not None

    def test_node_budget(self):
        with pytest.raises(TooLarge):
            list(enumerate_monotone(3, 5, max_nodes=10))

    def test_argument_validation(self):
        with pytest.raises(InvalidArgument):
            list(enumerate_monotone(1, 3))
        with pytest.raises(InvalidArgument):
            list(enumerate_monotone(3, 2))
        with pytest.raises(InvalidArgument):
            list(enumerate_monotone(3, 4, prefix=(0, 1)))


class TestRandomColoring:
    def test_deterministic_and_monotone(self):
        a = random_monotone_coloring(3, 7, 11)
        b = random_monotone_coloring(3, 7, 11)
        assert a == b and is_monotone(a)
        assert random_monotone_coloring(3, 7, 12) != a


class TestCount:
    def test_exact_small_values(self):
        assert count_monotone(3, 4).count == 8
        assert count_monotone(3, 5).count == 62
        assert count_monotone(2, 5).count == 120

    def test_report_fields(self):
        rep = count_monotone(3, 4)
        assert rep.upper_exponent == 16.0
        assert not rep.lower_binding
        assert rep.bounds_ok
        assert rep.nodes > 0 and rep.seconds >= 0

    def test_pair_counts_skip_bounds(self):
        rep = count_monotone(2, 5)
        assert rep.upper_exponent is None and rep.bounds_ok

    def test_halving_reproduces_count(self):
        assert count_monotone(3, 5, halve=True).count == 62
        assert count_monotone(2, 5, halve=True).count == 120

    def test_worker_count_does_not_change_result(self):
        assert count_monotone(3, 5, workers=2).count == 62

    def test_brute_force_transitive_matches_closed_form(self):
        for r in (2, 3, 4, 5, 6):
            assert brute_force_transitive_count(r, r + 1) == 2 ** r + 2


class TestProjection:
    def test_all_minus(self):
        p = project(SignFunction.constant(3, 4), 4)
        assert p == SignFunction.constant(2, 3)

    def test_known_example_projects_to_non_monotone(self):
        p = project(EXAMPLE_134, 4)
        assert p.color_string() == "+-+"
        assert not is_monotone(p)

    def test_projections_of_monotone_are_monotone(self):
        for c in enumerate_monotone(3, 5):
            for i in range(3, 6):
                assert is_monotone(project(c, i))

    def test_signature_shape_and_injectivity(self):
        c = SignFunction.constant(3, 3)
        assert len(projection_signature(c)) == 1
        sigs = {
            tuple(p.colors.tobytes() for p in projection_signature(c))
            for c in enumerate_monotone(3, 4)
        }
        assert len(sigs) == 8

    def test_validation(self):
        with pytest.raises(InvalidArgument):
            project(SignFunction.constant(2, 4), 3)
        with pytest.raises(InvalidArgument):
            project(SignFunction.constant(3, 4), 5)
        with pytest.raises(InvalidArgument):
            project(SignFunction.constant(3, 4), 2)


class TestRamsey:
    def test_pair_paths_match_square_formula(self):
        assert ramsey_number(2, 3, 6).number == 5

    def test_triple_paths_match_binomial_formula(self):
        report = ramsey_number(3, 4, 8)
        assert report.number == 7
        assert report.witness is not None and report.witness.n == 6
        assert is_monotone(report.witness)
        assert longest_mono_paths(report.witness).best < 4

    def test_trivial_length(self):
        report = ramsey_number(3, 3, 5)
        assert report.number == 3  # a single edge is always monochromatic
        assert report.witness is None

    def test_unresolved_reports_lower_bound(self):
        report = ramsey_number(3, 5, 6)
        assert report.number is None
        assert report.lower_bound == 7
        assert report.witness is not None and report.witness.n == 6
        assert longest_mono_paths(report.witness).best < 5

    def test_avoider_search_finds_valid_witnesses(self):
        avoider, _ = find_avoiding_coloring(2, 4, 3)
        assert avoider is not None
        assert is_monotone(avoider)
        assert longest_mono_paths(avoider).best < 3

    def test_validation(self):
        with pytest.raises(InvalidArgument):
            ramsey_number(3, 2, 5)


class TestTow:
    def test_values(self):
        assert tow(1, 7) == 7
        assert tow(2, 10) == 1024
        assert tow(3, 4) == 65536

    def test_nonpositive_arguments(self):
        assert tow(2, 0) == 1
        assert abs(tow(3, -1) - 2 ** 0.5) < 1e-12

    def test_symbolic_overflow(self):
        out = tow(4, 4, max_bits=1000)
        assert out == AtLeast(1000)
        assert "2^1000" in repr(out)

    def test_validation(self):
        with pytest.raises(InvalidArgument):
            tow(0, 3)
