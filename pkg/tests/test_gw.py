"""Tests for the Gromov-Witten and Hurwitz partition sums."""

from app.core.gw import (
    GWQuery,
    HurwitzQuery,
    connected_1pt,
    connected_1pt_factorized,
    connected_1pt_series,
    cycle_type,
    elliptic_series,
    gw_generating,
    gw_generating_value,
    gw_stationary,
    gw_stationary_target,
    hurwitz_brute,
    hurwitz_count,
    partition_sum,
    vacuum_factor,
)
from app.core.partitions import (
    Partition,
    dimension,
    enumerate_partitions,
    partition_count,
    power_series_E,
    power_sum,
    zeta_negative,
)
from app.types import ArgumentError, ResourceError
import math
import unittest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class TestStationary(unittest.TestCase):
    """Test the stationary partition sums."""

    def test_degree_zero_anchor(self):
        """Test ⟨τ_0⟩_0 = −1/24."""
        self.assertEqual(gw_stationary(GWQuery(0, (0,))), Fraction(-1, 24))

    def test_degree_one_anchor(self):
        """Test ⟨τ_0⟩_1 = 23/24."""
        self.assertEqual(gw_stationary(GWQuery(1, (0,))), Fraction(23, 24))

    def test_anchor_from_zeta(self):
        """Test the anchors against p_1 built directly from ζ(−1) = −1/12."""
        self.assertEqual(zeta_negative(1), Fraction(-1, 12))
        regularization = (1 - Fraction(1, 2)) * Fraction(-1, 12)
        self.assertEqual(gw_stationary(GWQuery(0, (0,))), regularization)
        self.assertEqual(gw_stationary(GWQuery(1, (0,))), 1 + regularization)

    def test_no_insertions(self):
        """Test the degree-2 sum without insertions is 1/2."""
        self.assertEqual(gw_stationary(GWQuery(2)), Fraction(1, 2))

    def test_vacuum_factor(self):
        """Test the vacuum factor equals 1/e! for e ≤ 10."""
        for e in range(11):
            self.assertEqual(vacuum_factor(e), Fraction(1, math.factorial(e)))

    def test_two_insertions(self):
        """Test a two-point sum against its direct evaluation."""
        expected = sum(Fraction(1, 2) ** 2 * power_sum(2, p) * power_sum(3, p) / (2 * 6)
                       for p in enumerate_partitions(2))
        self.assertEqual(gw_stationary(GWQuery(2, (1, 2))), expected)

    def test_odd_orders_vanish(self):
        """Test ⟨τ_k⟩_d vanishes for odd k."""
        for d in range(6):
            for k in (1, 3, 5, 7):
                self.assertEqual(gw_stationary(GWQuery(d, (k,))), 0)

    def test_elliptic_target_counts_partitions(self):
        """Test g_X = 1 without insertions gives p(d)."""
        for d in range(9):
            self.assertEqual(gw_stationary_target(GWQuery(d, (), 1)), partition_count(d))

    def test_genus_two_target(self):
        """Test g_X = 2, d = 2 gives 8."""
        self.assertEqual(gw_stationary_target(GWQuery(2, (), 2)), 8)

    def test_genus_zero_target_is_p1(self):
        """Test g_X = 0 reduces to the P¹ sum."""
        query = GWQuery(3, (2, 0))
        self.assertEqual(gw_stationary_target(query), gw_stationary(query))

    def test_p1_rejects_other_targets(self):
        """Test gw_stationary refuses a positive target genus."""
        with self.assertRaises(ArgumentError):
            gw_stationary(GWQuery(1, (0,), 1))

    def test_domain_genus(self):
        """Test the genus fixed by the dimension constraint."""
        self.assertEqual(GWQuery(1, (0,)).domain_genus(), 0)
        self.assertEqual(GWQuery(1, (2,)).domain_genus(), 1)
        self.assertIsNone(GWQuery(2, (0,)).domain_genus())
        self.assertIsNone(GWQuery(1, (1,)).domain_genus())

    def test_limits(self):
        """Test the degree and insertion limits."""
        with self.assertRaises(ResourceError):
            gw_stationary(GWQuery(15))
        with self.assertRaises(ResourceError):
            gw_stationary(GWQuery(1, (0, 0, 0, 0, 0)))

    def test_invalid_query(self):
        """Test negative data is rejected."""
        with self.assertRaises(ArgumentError):
            GWQuery(-1)
        with self.assertRaises(ArgumentError):
            GWQuery(1, (-1,))


class TestGenerating(unittest.TestCase):
    """Test the operator form of the stationary sums."""

    def test_degree_one_coefficient(self):
        """Test the z¹ coefficient at degree 1 is 23/24."""
        self.assertEqual(gw_generating(1, 1, 2)[(1,)], Fraction(23, 24))

    def test_degree_zero(self):
        """Test degree 0 reduces to the eigenvalue on the vacuum."""
        series = gw_generating(0, 1, 3)
        self.assertEqual(series[(-1,)], 1)
        self.assertEqual(series[(1,)], Fraction(-1, 24))
        self.assertEqual(series[(2,)], 0)

    def test_one_insertion_agrees(self):
        """Test one insertion agrees with the partition sum for d ≤ 4."""
        for d in range(5):
            series = gw_generating(d, 1, 8)
            for k in range(8):
                self.assertEqual(series[(k + 1,)], gw_stationary(GWQuery(d, (k,))))

    def test_two_insertions_agree(self):
        """Test two insertions agree with the partition sum for d ≤ 4."""
        for d in range(5):
            series = gw_generating(d, 2, 7)
            for k1 in range(7):
                for k2 in range(7 - k1 - 1):
                    self.assertEqual(series[(k1 + 1, k2 + 1)],
                                     gw_stationary(GWQuery(d, (k1, k2))))

    def test_numeric_value(self):
        """Test the numeric form at degree 1 equals the eigenvalue on v_(1)."""
        value = gw_generating_value(1, [0.5])
        self.assertAlmostEqual(abs(value - power_series_E(Partition((1,)), 0.5)), 0, places=12)

    def test_series_approximates_value(self):
        """Test the truncated series approaches the numeric value at small z."""
        series = gw_generating(2, 1, 14)
        self.assertAlmostEqual(abs(series.evaluate([0.3]) - gw_generating_value(2, [0.3])), 0,
                               places=10)

    def test_degree_limit(self):
        """Test the operator route refuses d > 8."""
        with self.assertRaises(ResourceError):
            gw_generating(9, 1, 1)


class TestConnected(unittest.TestCase):
    """Test the connected one-point invariants."""

    def test_routes_agree(self):
        """Test the series and the factorization agree for d ≤ 4, g ≤ 3."""
        for d in range(5):
            self.assertEqual(connected_1pt_series(d, 3), connected_1pt_factorized(d, 3))

    def test_degree_one(self):
        """Test ⟨τ_0⟩°_1 = 1 and ⟨τ_2⟩°_1 = 1/24."""
        values = connected_1pt(1, 1)
        self.assertEqual(values[0], 1)
        self.assertEqual(values[1], Fraction(1, 24))

    def test_degree_zero(self):
        """Test ⟨τ_0⟩°_0 = −1/24 and the unstable genus is omitted."""
        values = connected_1pt(0, 2)
        self.assertNotIn(0, values)
        self.assertEqual(values[1], Fraction(-1, 24))
        self.assertEqual(values[2], Fraction(7, 5760))

    def test_degree_two_genus_zero(self):
        """Test the constant term of S³/4 is 1/4."""
        self.assertEqual(connected_1pt(2, 0)[0], Fraction(1, 4))

    def test_disconnected_consistency(self):
        """Test 1·⟨τ_0⟩°_1 + ⟨τ_0⟩°_0·Z(1) = 23/24."""
        total = connected_1pt(1, 0)[0] + connected_1pt(0, 1)[1] * vacuum_factor(1)
        self.assertEqual(total, gw_stationary(GWQuery(1, (0,))))

    def test_series_rebuild_disconnected(self):
        """Test the closed-form series rebuild the disconnected values for d ≤ 6."""
        series = {e: connected_1pt_series(e, 9) for e in range(7)}
        for d in range(1, 7):
            for g in range(4):
                k = 2 * g - 2 + 2 * d
                total = sum(series[e][(k + 2 - 2 * e) // 2] * vacuum_factor(d - e)
                            for e in range(d + 1))
                self.assertEqual(total, gw_stationary(GWQuery(d, (k,))))


class TestHurwitz(unittest.TestCase):
    """Test Burnside's formula against the permutation count."""

    def test_torus_unbranched(self):
        """Test the torus degree-2 count is 2."""
        self.assertEqual(hurwitz_count(HurwitzQuery(2, 1)), 2)

    def test_sphere_identity_cover(self):
        """Test the degree-1 sphere count is 1."""
        self.assertEqual(hurwitz_count(HurwitzQuery(1, 0)), 1)

    def test_two_simple_branch_points(self):
        """Test the sphere with two transpositions at d = 2 gives 1/2."""
        query = HurwitzQuery(2, 0, ((2,), (2,)))
        self.assertEqual(hurwitz_count(query), Fraction(1, 2))
        self.assertEqual(hurwitz_brute(query), Fraction(1, 2))

    def test_brute_matches_burnside(self):
        """Test both counts agree on torus queries with d ≤ 4 and ≤ 1 branch point."""
        for d in range(1, 5):
            queries = [HurwitzQuery(d, 1)]
            queries += [HurwitzQuery(d, 1, (eta,)) for eta in enumerate_partitions(d)]
            for query in queries:
                self.assertEqual(hurwitz_brute(query), hurwitz_count(query), query)

    def test_brute_matches_on_sphere(self):
        """Test both counts agree on spheres with three branch points at d = 3."""
        for first in enumerate_partitions(3):
            for second in enumerate_partitions(3):
                query = HurwitzQuery(3, 0, (first, second, (2, 1)))
                self.assertEqual(hurwitz_brute(query), hurwitz_count(query))

    def test_torus_counts_partitions(self):
        """Test the unbranched torus count is p(d) for d ≤ 10."""
        for d in range(1, 11):
            self.assertEqual(hurwitz_count(HurwitzQuery(d, 1)), partition_count(d))
            identity = (1,) * d
            self.assertEqual(hurwitz_count(HurwitzQuery(d, 1, (identity,))), partition_count(d))

    def test_degree_one(self):
        """Test d = 1 gives 1 for every base genus."""
        for genus in range(3):
            self.assertEqual(hurwitz_brute(HurwitzQuery(1, genus)), 1)
            self.assertEqual(hurwitz_count(HurwitzQuery(1, genus)), 1)

    def test_wrong_class_size(self):
        """Test branch data must partition the degree."""
        with self.assertRaises(ArgumentError):
            HurwitzQuery(3, 0, ((2,),))

    def test_enumeration_limits(self):
        """Test the permutation count refuses oversized queries."""
        with self.assertRaises(ResourceError):
            hurwitz_brute(HurwitzQuery(6, 0))
        with self.assertRaises(ResourceError):
            hurwitz_brute(HurwitzQuery(5, 3))

    def test_cycle_type(self):
        """Test cycle types of small permutations."""
        self.assertEqual(cycle_type((1, 0, 2)), (2, 1))
        self.assertEqual(cycle_type((1, 2, 0)), (3,))
        self.assertEqual(cycle_type((0, 1)), (1, 1))


class TestEllipticTrace(unittest.TestCase):
    """Test the trace over the charge-zero sector."""

    def test_euler_product(self):
        """Test no insertions give the partition numbers."""
        self.assertEqual(elliptic_series([], 12), [partition_count(d) for d in range(13)])

    def test_vacuum_term(self):
        """Test the q⁰ coefficient of one E(z) is 1/(2 sinh(z/2))."""
        z = 0.8
        value = elliptic_series([z], 0)[0]
        self.assertAlmostEqual(abs(value - 1 / (2 * math.sinh(z / 2))), 0, places=12)

    def test_degree_coefficient(self):
        """Test the q^d coefficient is the sum of eigenvalues over |λ| = d."""
        z = 0.4
        series = elliptic_series([z], 5)
        for d in range(6):
            expected = sum(power_series_E(p, z) for p in enumerate_partitions(d))
            self.assertAlmostEqual(abs(series[d] - expected), 0, places=10)

    def test_parity(self):
        """Test every coefficient is odd in z."""
        plus = elliptic_series([0.7], 6)
        minus = elliptic_series([-0.7], 6)
        for a, b in zip(plus, minus):
            self.assertAlmostEqual(abs(a + b), 0, places=10)

    def test_order_limit(self):
        """Test the q-order limit."""
        with self.assertRaises(ResourceError):
            elliptic_series([], 41)


class TestParallelReduction(unittest.TestCase):
    """Test that threaded partition sums reduce to the serial value."""

    def test_stationary_serial_matches_parallel(self):
        """Test gw_stationary_target is identical for 1, 2, 3 and 7 workers."""
        for query in (GWQuery(6, (1, 3)), GWQuery(5, (2,), target_genus=1), GWQuery(4, (0, 0, 2))):
            serial = gw_stationary_target(query)
            for workers in (2, 3, 7):
                self.assertEqual(gw_stationary_target(query, workers=workers), serial)

    def test_hurwitz_serial_matches_parallel(self):
        """Test hurwitz_count is identical under a threaded reduction."""
        query = HurwitzQuery(5, 0, ((2, 1, 1, 1),) * 6)
        self.assertEqual(hurwitz_count(query, workers=4), hurwitz_count(query))

    def test_more_workers_than_partitions(self):
        """Test empty chunks contribute zero."""
        self.assertEqual(partition_sum(lambda p: Fraction(1), 3, workers=10), 3)

    def test_exact_reduction(self):
        """Test the reduction stays a Fraction: Σ (dim λ/n!)² = 1/n!."""
        total = partition_sum(lambda p: Fraction(dimension(p), math.factorial(7)) ** 2, 7, workers=3)
        self.assertIsInstance(total, Fraction)
        self.assertEqual(total, Fraction(1, math.factorial(7)))

    def test_bad_worker_count(self):
        """Test a nonpositive worker count is rejected."""
        with self.assertRaises(ArgumentError):
            partition_sum(lambda p: Fraction(1), 3, workers=0)


if __name__ == '__main__':
    unittest.main()
