"""Tests for limit shapes, the hook functional and the conformal-map solver."""

from app.core.kernels import Sine, kernel_eval
from app.core.measures import Schur
from app.core.partitions import Partition
from app.core.shapes import (
    PERIOD_CONSTANT,
    DiscreteProfile,
    SWCurveData,
    action_value,
    bands_at_level,
    calibrate_period_constant,
    chebyshev_curve,
    critical_values,
    diagram_profile_distance,
    facets,
    g_of_phi,
    hook_energy,
    limit_density,
    limit_kernel,
    log_matrix,
    match_periods,
    maximize_action,
    maximizer_from_map,
    real_axis_phi,
    surface_tension,
    sw_map,
    sw_periods,
    uniform_edges,
    vkls_discrete,
    vkls_height,
    vkls_profile,
)
from app.core.shapes.energy import DENSE_LIMIT
from app.types import ArgumentError, DegenerateLevelWarning, DomainError, NumericError
import math
import unittest
import sys
import os
import warnings
from types import SimpleNamespace
from unittest import mock

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

PLANCHEREL = Schur(t=(1.0,), tbar=(1.0,))
TWO_BAND = Schur(t=(1.0, 0.4), tbar=(1.0, 0.4))


class TestSymbol(unittest.TestCase):
    """Test g(φ)."""

    def test_plancherel(self):
        """Test g(φ) = 2cos φ for P(z) = z − 1/z."""
        for phi in np.linspace(-math.pi, math.pi, 17):
            self.assertAlmostEqual(g_of_phi(PLANCHEREL, phi), 2 * math.cos(phi), places=14)

    def test_second_harmonic(self):
        """Test t_2 = t̄_2 = s gives 4s cos 2φ."""
        spec = Schur(t=(0, 0.3), tbar=(0, 0.3))
        for phi in (-2.0, -0.4, 0.0, 1.1, 3.0):
            self.assertAlmostEqual(g_of_phi(spec, phi), 1.2 * math.cos(2 * phi), places=14)

    def test_conjugate_data_is_real(self):
        """Test g is the real part of a real series for complex conjugate data."""
        t = (0.3 + 0.2j, -0.1j, 0.05 - 0.05j)
        spec = Schur(t=t, tbar=tuple(v.conjugate() for v in t))
        phis = np.linspace(-3, 3, 25)
        direct = sum(k * t[k - 1] * np.exp(1j * k * phis) + k * t[k - 1].conjugate() * np.exp(-1j * k * phis)
                     for k in range(1, 4))
        self.assertLess(np.max(np.abs(direct.imag)), 1e-12)
        np.testing.assert_allclose(g_of_phi(spec, phis), direct.real, atol=1e-12)

    def test_non_conjugate(self):
        """Test non-conjugate data raise DomainError."""
        with self.assertRaises(DomainError):
            g_of_phi(Schur(t=(1.0,), tbar=(2.0,)), 0.0)

    def test_needs_schur_data(self):
        """Test other specs raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            g_of_phi((1.0,), 0.0)


class TestBands(unittest.TestCase):
    """Test bands, densities and limiting kernels."""

    def test_plancherel_zero_level(self):
        """Test the band at x̄ = 0 is [−π/2, π/2]."""
        bands = bands_at_level(PLANCHEREL, 0.0)
        self.assertEqual(len(bands.intervals), 1)
        alpha, beta = bands.intervals[0]
        self.assertAlmostEqual(alpha, -math.pi / 2, places=10)
        self.assertAlmostEqual(beta, math.pi / 2, places=10)

    def test_endpoints_are_roots(self):
        """Test g(endpoint) = x̄ for one and two bands."""
        for spec, level in ((PLANCHEREL, 0.7), (PLANCHEREL, -1.3), (TWO_BAND, -1.0), (TWO_BAND, 1.2)):
            for alpha, beta in bands_at_level(spec, level).intervals:
                self.assertAlmostEqual(g_of_phi(spec, alpha), level, places=10)
                self.assertAlmostEqual(g_of_phi(spec, beta), level, places=10)

    def test_two_bands(self):
        """Test a level between the two local maxima gives two arcs."""
        bands = bands_at_level(TWO_BAND, -1.0)
        self.assertEqual(len(bands.intervals), 2)
        for alpha, beta in bands.intervals:
            self.assertGreater(g_of_phi(TWO_BAND, (alpha + beta) / 2), -1.0)

    def test_extreme_levels(self):
        """Test empty bands above max g and the full circle below min g."""
        self.assertEqual(bands_at_level(PLANCHEREL, 2.5).intervals, ())
        full = bands_at_level(PLANCHEREL, -2.5)
        self.assertAlmostEqual(full.total_length, 2 * math.pi, places=12)
        self.assertEqual(limit_density(PLANCHEREL, 3.0), 0.0)
        self.assertAlmostEqual(limit_density(PLANCHEREL, -3.0), 1.0, places=12)

    def test_wrapping_arc(self):
        """Test an arc through φ = π is reported once; arcs crossing 0 are split."""
        flipped = bands_at_level(Schur(t=(-1.0,), tbar=(-1.0,)), 1.0)
        self.assertEqual(len(flipped.intervals), 1)
        alpha, beta = flipped.intervals[0]
        self.assertAlmostEqual(alpha, 2 * math.pi / 3, places=10)
        self.assertAlmostEqual(beta, 4 * math.pi / 3, places=10)
        self.assertEqual(len(flipped.arcs()), 1)
        arcs = bands_at_level(PLANCHEREL, 1.0).arcs()
        self.assertEqual(len(arcs), 2)
        self.assertAlmostEqual(arcs[0][0], 0.0, places=12)
        self.assertAlmostEqual(arcs[0][1], math.pi / 3, places=10)
        self.assertAlmostEqual(arcs[1][1], 2 * math.pi, places=12)
        self.assertAlmostEqual(sum(b - a for a, b in arcs), 2 * math.pi / 3, places=10)

    def test_degenerate_level(self):
        """Test a critical value of g warns DegenerateLevelWarning."""
        values = critical_values(PLANCHEREL)
        self.assertEqual(len(values), 2)
        self.assertAlmostEqual(values[0], -2.0, places=12)
        self.assertAlmostEqual(values[1], 2.0, places=12)
        with self.assertWarns(DegenerateLevelWarning):
            bands = bands_at_level(PLANCHEREL, 2.0)
        self.assertAlmostEqual(bands.total_length, 0.0, places=6)

    def test_plancherel_density(self):
        """Test the density arccos(x̄/2)/π."""
        self.assertAlmostEqual(limit_density(PLANCHEREL, 0.0), 0.5, places=10)
        for level in (-1.5, -0.3, 0.9, 1.7):
            self.assertAlmostEqual(limit_density(PLANCHEREL, level), math.acos(level / 2) / math.pi, places=10)

    def test_density_non_increasing(self):
        """Test the density decreases from 1 to 0 and the slope 1 − 2ρ increases."""
        levels = np.linspace(-3.95, 3.95, 80)
        for spec in (PLANCHEREL, TWO_BAND):
            with warnings.catch_warnings():
                warnings.simplefilter('ignore', DegenerateLevelWarning)
                densities = [limit_density(spec, level) for level in levels]
            self.assertTrue(all(a >= b - 1e-12 for a, b in zip(densities, densities[1:])))
            self.assertAlmostEqual(densities[0], 1.0, places=12)
            self.assertEqual(densities[-1], 0.0)

    def test_single_band_is_sine(self):
        """Test one band gives the discrete sine kernel with a = half the band width."""
        level = 0.6
        a = math.acos(level / 2)
        for offset in range(-5, 6):
            expected = kernel_eval(Sine(a), offset + 0.5, 0.5)
            self.assertAlmostEqual(limit_kernel(PLANCHEREL, level, offset), expected, places=12)

    def test_kernel_diagonal_is_density(self):
        """Test K(0) equals the density for two bands."""
        self.assertAlmostEqual(limit_kernel(TWO_BAND, -1.0, 0), limit_density(TWO_BAND, -1.0), places=12)

    def test_kernel_offset_must_be_integer(self):
        """Test a fractional lattice offset raises ArgumentError."""
        with self.assertRaises(ArgumentError):
            limit_kernel(PLANCHEREL, 0.0, 0.5)


class TestVkls(unittest.TestCase):
    """Test the closed forms of Ω."""

    def test_slope_values(self):
        """Test Ω' at 0, the edges and outside."""
        self.assertEqual(vkls_profile(0.0), 0.0)
        self.assertAlmostEqual(vkls_profile(2.0), 1.0, places=15)
        self.assertAlmostEqual(vkls_profile(-2.0), -1.0, places=15)
        self.assertEqual(vkls_profile(5.0), 1.0)

    def test_slope_is_one_minus_twice_density(self):
        """Test Ω' = 1 − 2·arccos(x̄/2)/π."""
        for x in np.linspace(-1.9, 1.9, 11):
            self.assertAlmostEqual(vkls_profile(x), 1 - 2 * math.acos(x / 2) / math.pi, places=14)

    def test_heights(self):
        """Test Ω(0) = 4/π and Ω = |x| outside [−2, 2]."""
        self.assertAlmostEqual(vkls_height(0.0), 4 / math.pi, places=15)
        self.assertAlmostEqual(vkls_height(2.0), 2.0, places=15)
        self.assertEqual(vkls_height(-5.0), 5.0)

    def test_discrete_is_neutral(self):
        """Test the discretized Ω returns to |x| and matches Ω at the edges."""
        shape = vkls_discrete(128)
        self.assertTrue(shape.is_neutral())
        np.testing.assert_allclose(shape(shape.edges), vkls_height(shape.edges), atol=1e-12)

    def test_single_box_distance(self):
        """Test the unscaled box (1) is 2 − 4/π from Ω at the origin."""
        self.assertAlmostEqual(diagram_profile_distance(Partition((1,)), 1.0), 2 - 4 / math.pi, places=12)

    def test_empty_diagram(self):
        """Test the empty diagram has no scaled profile."""
        with self.assertRaises(ArgumentError):
            diagram_profile_distance(Partition(()))


class TestHookEnergy(unittest.TestCase):
    """Test the hook functional and the surface tension."""

    def test_absolute_value_vanishes(self):
        """Test E(|x|) = 0 in both forms."""
        edges = uniform_edges(100, 2.0)
        flat = DiscreteProfile(edges, np.sign(edges[:-1] + 0.02))
        self.assertAlmostEqual(hook_energy(flat), 0.0, places=12)
        self.assertAlmostEqual(hook_energy(flat, form='literal'), 0.0, places=12)

    def test_vkls_value(self):
        """Test E(Ω) = −1."""
        self.assertAlmostEqual(hook_energy(vkls_discrete(512), tolerance=1e-3), -1.0, delta=1e-3)

    def test_translation_invariance(self):
        """Test shifting a profile by whole cells keeps E."""
        rng = np.random.default_rng(7)
        core = rng.uniform(-1, 1, 20)
        edges = uniform_edges(60, 3.0)
        left = np.concatenate((-np.ones(10), core, np.ones(30)))
        right = np.concatenate((-np.ones(25), core, np.ones(15)))
        self.assertAlmostEqual(hook_energy(DiscreteProfile(edges, left)),
                               hook_energy(DiscreteProfile(edges, right)), places=10)

    def test_midpoint_convexity(self):
        """Test E((f₀ + f₁)/2) ≤ (E(f₀) + E(f₁))/2 for neutral random profiles."""
        rng = np.random.default_rng(11)
        edges = uniform_edges(64, 2.0)
        for _ in range(5):
            profiles = []
            for _ in range(2):
                v = rng.uniform(-1, 1, 32)
                profiles.append(np.concatenate((v, -v[::-1])))
            first, second = (DiscreteProfile(edges, s) for s in profiles)
            middle = DiscreteProfile(edges, (profiles[0] + profiles[1]) / 2)
            self.assertLessEqual(hook_energy(middle), (hook_energy(first) + hook_energy(second)) / 2 + 1e-12)

    def test_unknown_form(self):
        """Test an unknown form raises ArgumentError."""
        with self.assertRaises(ArgumentError):
            hook_energy(vkls_discrete(64), form='other')

    def test_coarse_grid_fails_refinement(self):
        """Test four cells of Ω are flagged as too coarse."""
        with self.assertRaises(NumericError) as caught:
            hook_energy(vkls_discrete(4, 3.0))
        self.assertEqual(caught.exception.diagnostics['cells'], 4)
        self.assertGreater(abs(caught.exception.diagnostics['refined'] - caught.exception.diagnostics['value']),
                           1e-6)

    def test_fine_grid_passes_refinement(self):
        """Test 4096 cells of Ω meet the default tolerance and land on −1."""
        self.assertAlmostEqual(hook_energy(vkls_discrete(4096)), -1.0, delta=1e-4)

    def test_refinement_can_be_skipped(self):
        """Test check=False returns the coarse value."""
        value = hook_energy(vkls_discrete(4, 3.0), check=False)
        self.assertLess(value, 0)
        self.assertGreater(abs(value + 1), 1e-3)

    def test_piecewise_linear_profile_is_exact(self):
        """Test a profile without a source is not refined."""
        shape = DiscreteProfile(uniform_edges(4, 3.0), [-1, 0, 0, 1])
        self.assertIsNone(shape.source)
        self.assertEqual(hook_energy(shape), hook_energy(shape, check=False))

    def test_refine(self):
        """Test refine halves the cells and keeps the heights at the old edges."""
        coarse = vkls_discrete(8, 3.0)
        fine = coarse.refine()
        self.assertEqual(len(fine), 16)
        np.testing.assert_allclose(fine.heights[::2], coarse.heights, atol=1e-12)
        with self.assertRaises(ArgumentError):
            DiscreteProfile(uniform_edges(4, 3.0), [-1, 0, 0, 1]).refine()

    def test_large_grid_matches_dense_form(self):
        """Test the FFT Toeplitz product agrees with the dense quadratic form."""
        rng = np.random.default_rng(3)
        cells = DENSE_LIMIT + 500
        slopes = np.clip(np.linspace(-1, 1, cells) + rng.uniform(-0.2, 0.2, cells), -1, 1)
        shape = DiscreteProfile(uniform_edges(cells, 3.0), slopes)
        dense = (1 + slopes) @ log_matrix(cells, shape.width) @ (1 - slopes) / 2
        self.assertAlmostEqual(hook_energy(shape), dense, delta=1e-9 * max(1.0, abs(dense)))

    def test_surface_tension_segments(self):
        """Test u = (4, 1, −2, −3) gives four segments with sorted slopes."""
        tension = surface_tension((4, 1, -2, -3))
        self.assertEqual(tension.slopes, (-3.0, -2.0, 1.0, 4.0))
        np.testing.assert_allclose(tension.values, [0.0, -1.5, -2.5, -2.0, 0.0], atol=1e-15)
        self.assertAlmostEqual(tension(-0.75), -0.75, places=15)
        self.assertTrue(all(a <= b for a, b in zip(tension.slopes, tension.slopes[1:])))

    def test_zero_potential(self):
        """Test u ≡ 0 gives σ ≡ 0."""
        tension = surface_tension((0.0, 0.0, 0.0))
        np.testing.assert_array_equal(tension(np.linspace(-1, 1, 9)), np.zeros(9))

    def test_surface_tension_errors(self):
        """Test a nonzero sum and out-of-range slopes raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            surface_tension((1.0, 0.5))
        with self.assertRaises(ArgumentError):
            surface_tension((1.0, -1.0))(1.5)

    def test_action_of_vkls(self):
        """Test S(Ω) = 1 for the zero potential."""
        self.assertAlmostEqual(action_value(vkls_discrete(512), (0.0,), 1.0), 1.0, delta=1e-3)


class TestMaximizer(unittest.TestCase):
    """Test the direct action maximizer against Ω."""

    def test_zero_potential_is_vkls(self):
        """Test u ≡ 0 reproduces Ω within 0.02 on [−2, 2]."""
        shape = maximize_action((0.0,), 1.0, cells=512, half_width=3.0)
        reference = vkls_discrete(512, 3.0)
        self.assertLess(shape.sup_distance(reference, window=(-2.0, 2.0)), 0.02)
        self.assertTrue(shape.is_neutral(1e-8))
        self.assertLess(shape.diagnostics['residual'], 1e-8)

    def test_argument_errors(self):
        """Test κ ≤ 0 and coarse grids raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            maximize_action((0.0,), 0.0)
        with self.assertRaises(ArgumentError):
            maximize_action((0.0,), 1.0, cells=32)

    def test_iteration_cap(self):
        """Test non-convergence raises NumericError with diagnostics."""
        with mock.patch('app.core.shapes.maximize.MAX_ITERATIONS', 3):
            with self.assertRaises(NumericError) as context:
                maximize_action((1.0, -1.0), 1.0, cells=64)
        self.assertEqual(context.exception.diagnostics['iterations'], 3)


class TestConformalMap(unittest.TestCase):
    """Test w + 1/w = B(z) and Φ."""

    def test_chebyshev_curves(self):
        """Test 2T_N(z/2) for N = 1, 2, 3."""
        self.assertEqual(chebyshev_curve(1).lower, ())
        np.testing.assert_allclose(chebyshev_curve(2).lower, (-2.0,), atol=1e-14)
        np.testing.assert_allclose(chebyshev_curve(3).lower, (-3.0, 0.0), atol=1e-14)
        np.testing.assert_allclose(chebyshev_curve(2, 1.2).lower, (-2.88,), atol=1e-14)

    def test_curve_errors(self):
        """Test malformed curves raise ArgumentError."""
        with self.assertRaises(ArgumentError):
            SWCurveData(0)
        with self.assertRaises(ArgumentError):
            SWCurveData(2, ())

    def test_degree_one_is_vkls(self):
        """Test Re Φ(x + i0) = Ω'(x) for B(z) = z."""
        xs = np.linspace(-3, 3, 61)
        np.testing.assert_allclose(real_axis_phi(SWCurveData(1), xs).real, vkls_profile(xs), atol=1e-12)

    def test_far_field(self):
        """Test Re Φ → ±1 far from the bands."""
        curve = chebyshev_curve(3, 1.2)
        self.assertAlmostEqual(real_axis_phi(curve, 50.0).real, 1.0, places=12)
        self.assertAlmostEqual(real_axis_phi(curve, -50.0).real, -1.0, places=12)

    def test_gap_slope(self):
        """Test Re Φ is the slit abscissa on a gap."""
        curve = SWCurveData(2, (-5.0,))
        phi = real_axis_phi(curve, 0.0)
        self.assertAlmostEqual(phi.real, 0.0, places=14)
        self.assertGreater(phi.imag, 0.0)

    def test_three_gap_slopes(self):
        """Test the gaps of a cubic carry slopes −1/3 and 1/3."""
        curve = chebyshev_curve(3, 1.3)
        critical = curve.critical_points()
        self.assertAlmostEqual(real_axis_phi(curve, critical[0]).real, 1 / 3, places=12)
        self.assertAlmostEqual(real_axis_phi(curve, critical[1]).real, -1 / 3, places=12)

    def test_off_axis_matches_boundary(self):
        """Test the tracked branch approaches the boundary values."""
        curve = SWCurveData(2, (-5.0,))
        for x in (-3.0, -2.0, -1.0, 0.5, 2.5):
            _, phi = sw_map(curve, complex(x, 1e-9))
            self.assertAlmostEqual(phi, real_axis_phi(curve, x), delta=1e-6)

    def test_curve_equation(self):
        """Test w + 1/w = B(z) with |w| ≥ 1 in the upper half-plane."""
        curve = chebyshev_curve(3, 1.2)
        for z in (0.3 + 0.7j, -2.0 + 0.1j, 4.0 + 3.0j):
            w, phi = sw_map(curve, z)
            self.assertAlmostEqual(w + 1 / w, curve(z), delta=1e-9 * max(1.0, abs(curve(z))))
            self.assertGreaterEqual(abs(w), 1.0 - 1e-12)
            self.assertGreaterEqual(phi.imag, -1e-12)

    def test_lower_half_plane(self):
        """Test Im z < 0 raises ArgumentError."""
        with self.assertRaises(ArgumentError):
            sw_map(SWCurveData(1), 1 - 1j)

    def test_overlapping_bands(self):
        """Test curves with overlapping bands raise DomainError."""
        with self.assertRaises(DomainError):
            sw_periods(SWCurveData(2, (-1.0,)))
        with self.assertRaises(DomainError):
            real_axis_phi(SWCurveData(3, (1.0, 0.0)), 0.0)

    def test_degree_one_map_is_vkls(self):
        """Test the conformal-map shape for N = 1 is Ω to 1e-8."""
        shape = maximizer_from_map(SWCurveData(1), cells=512, half_width=3.0)
        self.assertLess(shape.sup_distance(vkls_discrete(512, 3.0)), 1e-8)

    def test_facets(self):
        """Test runs of constant slope are reported as intervals."""
        shape = DiscreteProfile(uniform_edges(6, 3.0), [-1, 0, 0, 0.5, 0, 1])
        self.assertEqual(facets(shape, 0.0), [(-2.0, 0.0), (1.0, 2.0)])
        self.assertEqual(facets(shape, 0.25), [])


class TestPeriods(unittest.TestCase):
    """Test gap periods and their matching to a potential."""

    def test_degree_one(self):
        """Test N = 1 has no gaps."""
        self.assertEqual(sw_periods(SWCurveData(1)), [])

    def test_monotone_in_gap_size(self):
        """Test the period of z² − c increases with c."""
        periods = [sw_periods(SWCurveData(2, (-c,)))[0] for c in (2.5, 3.0, 4.0, 6.0)]
        self.assertTrue(all(a < b for a, b in zip(periods, periods[1:])))

    def test_closing_gap(self):
        """Test the period vanishes as the gap closes."""
        self.assertEqual(sw_periods(SWCurveData(2, (-2.0,)))[0], 0.0)
        self.assertLess(sw_periods(SWCurveData(2, (-2.000001,)))[0], 1e-5)

    def test_match_symmetric(self):
        """Test C·P = κ(u₁ − u₂) for u = (1, −1)."""
        match = match_periods((1.0, -1.0), 1.0)
        self.assertLessEqual(match.residual, 1e-8)
        self.assertAlmostEqual(PERIOD_CONSTANT * sw_periods(match.curve)[0], 2.0, places=7)
        self.assertLess(match.curve.lower[0], -2.0)

    def test_initial_guess_independence(self):
        """Test two starting curves reach the same root."""
        first = match_periods((1.0, -1.0), 1.0).curve
        second = match_periods((1.0, -1.0), 1.0, guess=chebyshev_curve(2, 1.5)).curve
        np.testing.assert_allclose(first.lower, second.lower, atol=1e-6)

    def test_small_jumps_close_the_gaps(self):
        """Test B → z² − 2 as the jumps vanish."""
        curve = match_periods((0.001, -0.001), 1.0).curve
        self.assertAlmostEqual(curve.lower[0], -2.0, delta=0.01)

    def test_argument_errors(self):
        """Test bad potentials raise ArgumentError."""
        for u, kappa in (((1.0,), 1.0), ((-1.0, 1.0), 1.0), ((1.0, -1.0), 0.0)):
            with self.assertRaises(ArgumentError):
                match_periods(u, kappa)
        with self.assertRaises(ArgumentError):
            match_periods((1.0, -1.0), 1.0, guess=chebyshev_curve(3))

    def test_failed_root(self):
        """Test a root-finder failure raises NumericError."""
        stalled = SimpleNamespace(x=np.array([-2.88]), message='stalled', nfev=1)
        with mock.patch('app.core.shapes.seiberg_witten.root', return_value=stalled):
            with self.assertRaises(NumericError):
                match_periods((1.0, -1.0), 1.0)


class TestCrossSolver(unittest.TestCase):
    """Test the conformal-map and direct solvers against each other."""

    U = (1.0, -1.0)
    KAPPA = 1.0
    CELLS = 512
    HALF_WIDTH = 4.0

    @classmethod
    def setUpClass(cls):
        curve = match_periods(cls.U, cls.KAPPA).curve
        cls.mapped = maximizer_from_map(curve, cls.CELLS, cls.HALF_WIDTH)
        cls.direct = maximize_action(cls.U, cls.KAPPA, cls.CELLS, cls.HALF_WIDTH)

    def test_agreement(self):
        """Test the two shapes agree within 0.02 in slope."""
        self.assertLess(self.mapped.sup_distance(self.direct), 0.02)

    def test_both_have_a_flat_facet(self):
        """Test a slope-0 facet of positive length in both shapes."""
        for shape, tolerance in ((self.mapped, 1e-6), (self.direct, 1e-4)):
            runs = facets(shape, 0.0, tolerance)
            self.assertTrue(runs)
            self.assertGreater(max(b - a for a, b in runs), 0.0)

    def test_maximality(self):
        """Test the maximizer beats Ω on the same window."""
        reference = vkls_discrete(self.CELLS, self.HALF_WIDTH)
        self.assertGreaterEqual(action_value(self.direct, self.U, self.KAPPA),
                                action_value(reference, self.U, self.KAPPA) - 1e-9)

    def test_slopes_in_range(self):
        """Test the map shape stays within [−1, 1]."""
        self.assertLessEqual(np.max(np.abs(self.mapped.slopes)), 1.0)

    def test_calibration(self):
        """Test the fitted period constant is close to π/2."""
        calibration = calibrate_period_constant(self.U, self.KAPPA, self.CELLS, self.HALF_WIDTH)
        self.assertEqual(calibration.reference, PERIOD_CONSTANT)
        self.assertLess(abs(calibration.relative_residual), 0.05)
        self.assertLess(calibration.distance, 0.02)


if __name__ == '__main__':
    unittest.main()
