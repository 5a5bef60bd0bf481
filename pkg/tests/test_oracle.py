"""Unit tests for the brute-force labeled-graph enumeration oracle."""

from fractions import Fraction as F
from math import factorial

import pytest
import sympy

from orbchi.euler import all_graphs_series, connected_series
from orbchi.oracle import (
    LabeledGraphSum,
    count_pairings,
    iter_pairings,
    iter_partitions_min3,
    labeled_graph_sum,
    oracle_all_graphs_coefficient,
    oracle_connected_coefficient,
    partition_weights,
    unsigned_graph_count,
)
from orbchi.species import builtin_species

COMM = builtin_species("commutative")


class TestPairings:
    def test_four_points_explicit(self):
        got = set(iter_pairings((1, 2, 3, 4)))
        assert got == {
            ((1, 2), (3, 4)),
            ((1, 3), (2, 4)),
            ((1, 4), (2, 3)),
        }

    def test_empty(self):
        assert list(iter_pairings(())) == [()]

    def test_odd_yields_nothing(self):
        assert list(iter_pairings((1, 2, 3))) == []

    def test_counts(self):
        assert count_pairings(4) == 3
        assert count_pairings(6) == 15
        assert count_pairings(5) == 0
        assert count_pairings(0) == 1

    def test_count_negative_rejected(self):
        with pytest.raises(ValueError):
            count_pairings(-2)

    def test_double_factorial_growth(self):
        for k in range(2, 13, 2):
            assert count_pairings(k) == (k - 1) * count_pairings(k - 2)


class TestPartitions:
    def test_six_elements(self):
        parts = list(iter_partitions_min3(range(1, 7)))
        assert len(parts) == 11  # one 6-block + 10 splits into two 3-blocks
        assert sum(1 for p in parts if len(p) == 2) == 10

    def test_blocks_canonical(self):
        for p in iter_partitions_min3(range(8)):
            firsts = [block[0] for block in p]
            assert firsts == sorted(firsts)
            assert all(block == tuple(sorted(block)) for block in p)

    def test_too_few_elements(self):
        assert list(iter_partitions_min3((1, 2))) == []

    def test_empty_partition(self):
        assert list(iter_partitions_min3(())) == [()]

    def test_counts_match_egf(self):
        # coefficients of e^(e^x - 1 - x - x^2/2) count min-3 partitions
        x = sympy.symbols("x")
        egf = sympy.exp(sympy.exp(x) - 1 - x - x ** 2 / 2)
        series = sympy.series(egf, x, 0, 13).removeO()
        for k in range(13):
            expected = int(series.coeff(x, k) * sympy.factorial(k))
            got = sum(1 for _ in iter_partitions_min3(range(k)))
            assert got == expected


class TestPartitionWeights:
    def test_commutative_six(self):
        assert partition_weights(COMM, 6) == {1: F(1), 2: F(10)}

    def test_associative_six(self):
        assoc = builtin_species("associative")
        assert partition_weights(assoc, 6) == {1: F(120), 2: F(40)}

    def test_five_is_single_block(self):
        for name in ("commutative", "associative", "lie"):
            sp = builtin_species(name)
            assert partition_weights(sp, 5) == {1: sp.structure_count(5)}
        # chord kills odd blocks entirely
        assert partition_weights(builtin_species("chord"), 5) == {}

    def test_empty_ground_set(self):
        assert partition_weights(COMM, 0) == {0: F(1)}

    def test_commutative_totals_match_egf(self):
        x = sympy.symbols("x")
        egf = sympy.exp(sympy.exp(x) - 1 - x - x ** 2 / 2)
        series = sympy.series(egf, x, 0, 13).removeO()
        for k in range(3, 13):
            total = sum(partition_weights(COMM, k).values(), F(0))
            assert total == int(series.coeff(x, k) * sympy.factorial(k))

    def test_coverage_error(self, tmp_path):
        import json

        from orbchi.species import species_from_file

        f = tmp_path / "sp.json"
        f.write_text(json.dumps({"name": "x", "Q": {"3": 1, "4": 1}}))
        with pytest.raises(ValueError, match="n=6"):
            partition_weights(species_from_file(f), 6)


class TestLabeledGraphSum:
    def test_vertex_count_bounds(self):
        with pytest.raises(ValueError, match="out of range"):
            LabeledGraphSum("x", 6, {3: F(1)})
        with pytest.raises(ValueError, match="out of range"):
            LabeledGraphSum("x", 6, {0: F(1)})

    def test_commutative_three_edges(self):
        gs = labeled_graph_sum(COMM, 3)
        assert gs.half_edges == 6
        assert gs.per_vertex_count == {
            1: F(-15, 720),        # -Ch_6 * 1 / 6!
            2: F(150, 720),        # +Ch_6 * 10 / 6!
        }

    def test_needs_an_edge(self):
        with pytest.raises(ValueError):
            labeled_graph_sum(COMM, 0)


class TestAllGraphsOracle:
    def test_commutative_m1(self):
        assert oracle_all_graphs_coefficient(COMM, 1, 3) == F(1, 12)

    def test_chord_m1(self):
        assert oracle_all_graphs_coefficient(builtin_species("chord"), 1, 3) == F(-3, 8)

    def test_empty_graph(self):
        assert oracle_all_graphs_coefficient(COMM, 0, 0) == 1

    def test_incomplete_sum_rejected(self):
        with pytest.raises(ValueError, match="incomplete sum"):
            oracle_all_graphs_coefficient(COMM, 2, 5)

    def test_larger_max_e_changes_nothing(self):
        assert (oracle_all_graphs_coefficient(COMM, 1, 3)
                == oracle_all_graphs_coefficient(COMM, 1, 6))

    @pytest.mark.parametrize("name", ["commutative", "associative", "lie", "chord"])
    @pytest.mark.parametrize("m", [1, 2])
    def test_matches_pipeline(self, name, m):
        sp = builtin_species(name)
        series = all_graphs_series(sp, m + 1)
        assert oracle_all_graphs_coefficient(sp, m, 3 * m) == series[m]


class TestConnectedOracle:
    def test_commutative_m1(self):
        assert oracle_connected_coefficient(COMM, 1, 3) == F(1, 12)

    def test_commutative_m2(self):
        assert oracle_connected_coefficient(COMM, 2, 6) == 0

    def test_lie_m2(self):
        assert oracle_connected_coefficient(builtin_species("lie"), 2, 6) == F(-1, 48)

    def test_budget_enforced(self):
        with pytest.raises(ValueError, match="2e <= 12"):
            oracle_connected_coefficient(COMM, 3, 9)

    def test_incomplete_sum_rejected(self):
        with pytest.raises(ValueError, match="incomplete sum"):
            oracle_connected_coefficient(COMM, 2, 4)

    @pytest.mark.parametrize("name", ["commutative", "associative", "lie", "chord"])
    @pytest.mark.parametrize("m", [1, 2])
    def test_matches_pipeline(self, name, m):
        sp = builtin_species(name)
        connected = connected_series(all_graphs_series(sp, m + 1))
        assert oracle_connected_coefficient(sp, m, 3 * m) == connected[m]


class TestUnsignedCount:
    def test_figure_eight(self):
        # the unique 1-vertex 2-edge graph has |Aut| = 8
        assert unsigned_graph_count(COMM, 2) == F(1, 8)

    def test_three_edges(self):
        assert unsigned_graph_count(COMM, 3) == F(11, 48)

    def test_one_edge(self):
        assert unsigned_graph_count(COMM, 1) == 0

    def test_matches_per_vertex_totals(self):
        for e in (2, 3, 4):
            gs = labeled_graph_sum(COMM, e)
            total = sum(abs(c) for c in gs.per_vertex_count.values())
            assert total == unsigned_graph_count(COMM, e)
