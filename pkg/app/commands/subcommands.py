import logging
import math
from fractions import Fraction

import numpy as np

from ..core.gw import (
    GWQuery,
    HurwitzQuery,
    connected_1pt,
    elliptic_series,
    gw_stationary,
    gw_stationary_target,
    hurwitz_brute,
    hurwitz_count,
)
from ..core.kernels import (
    Bessel,
    SchurContour,
    Sine,
    brute_force_correlation,
    correlation,
    kernel_matrix,
    lambda1_distribution,
)
from ..core.measures import (
    Jack,
    PeriodicPlancherel,
    Plancherel,
    PoissonizedPlancherel,
    Schur,
    make_rng,
    measure_table,
    partition_function,
    sample_plancherel,
    sample_poissonized,
)
from ..core.partitions import (
    dimension,
    enumerate_partitions,
    hook_lengths,
    parse_partition,
    profile,
)
from ..core.shapes import (
    PERIOD_CONSTANT,
    DiscreteProfile,
    SWCurveData,
    action_value,
    bands_at_level,
    calibrate_period_constant,
    default_half_width,
    hook_energy,
    limit_density,
    limit_kernel,
    match_periods,
    maximize_action,
    maximizer_from_map,
    sw_periods,
    vkls_discrete,
)
from ..types import ArgumentError, Command, Precision, Table

logger = logging.getLogger(__name__)

command_docs = {
    Command.ENUMERATE: {
        "description": "List the partitions of n in reverse lexicographic order",
        "usage": "rpart enumerate --n N",
    },
    Command.DIM: {
        "description": "Dimension of an irreducible representation of S(n) by the hook formula",
        "usage": "rpart dim --partition 8,5,4,2,2,1",
    },
    Command.MEASURE_TABLE: {
        "description": "Weights of every partition under a measure",
        "usage": "rpart measure-table --measure {plancherel,poissonized,schur,jack,periodic} [--n N] "
                 "[--xi XI] [--t T] [--tbar TBAR] [--eps1 E1 --eps2 E2 --d D] [--u U --hbar H] "
                 "[--truncation E]",
    },
    Command.SAMPLE: {
        "description": "Seeded draws from the Plancherel or poissonized Plancherel measure",
        "usage": "rpart sample --measure {plancherel,poissonized} [--n N | --xi XI] [--count K] [--seed S]",
    },
    Command.CORRELATE: {
        "description": "Correlation functions det[K(x_i, x_j)] of a kernel",
        "usage": "rpart correlate --kernel {bessel,sine,contour} --points=-1/2,1/2 [--brute-energy E]",
    },
    Command.GAP: {
        "description": "Distribution of λ_1 under the poissonized Plancherel measure",
        "usage": "rpart gap --xi XI --h-max H",
    },
    Command.KERNEL: {
        "description": "Kernel table (x, y, K) over a range of lattice points",
        "usage": "rpart kernel --kernel {bessel,sine,contour} --range=-5/2:5/2",
    },
    Command.LIMIT_SHAPE: {
        "description": "Bands, limiting density and slope of a Schur measure at given levels",
        "usage": "rpart limit-shape --t T [--tbar TBAR] --levels=-1,0,1 [--offset DX]",
    },
    Command.HOOK_ENERGY: {
        "description": "The hook functional at Ω or at a scaled diagram",
        "usage": "rpart hook-energy [--cells C] [--half-width L] [--tolerance T] [--form {measure,literal}] [--partition P]",
    },
    Command.MAXIMIZE: {
        "description": "Limit shape of a periodic potential by direct maximization",
        "usage": "rpart maximize --u=1,-1 --kappa K [--cells C] [--half-width L]",
    },
    Command.SW_SHAPE: {
        "description": "Limit shape of a periodic potential from the conformal map",
        "usage": "rpart sw-shape --u=1,-1 --kappa K [--cells C] [--half-width L] [--constant C] [--calibrate]",
    },
    Command.GW: {
        "description": "Stationary Gromov-Witten invariants of a curve as partition sums",
        "usage": "rpart gw --degree D [--insertions K1,K2] [--target-genus G] [--connected --genus-max G]",
    },
    Command.HURWITZ: {
        "description": "Hurwitz numbers by Burnside's formula",
        "usage": "rpart hurwitz --degree D [--base-genus G] [--branch 2,1 ...] [--brute]",
    },
    Command.ELLIPTIC_TRACE: {
        "description": "q-coefficients of tr q^{L_0} ∏ E(z_i)",
        "usage": "rpart elliptic-trace --z 0.5,0.7 [--order Q]",
    },
}


def _require(params, *names):
    missing = [name for name in names if params.get(name) is None]
    if missing:
        flags = ', '.join('--' + name.replace('_', '-') for name in missing)
        raise ArgumentError(f"missing required flag(s): {flags}")


def _tbar(params):
    return params['t'] if params.get('tbar') is None else params['tbar']


def handle_enumerate(params, seed, precision):
    """List the partitions of n."""
    n = params['n']
    rows = [(i, p, p.size, len(p)) for i, p in enumerate(enumerate_partitions(n), start=1)]
    return Table(('index', 'partition', 'size', 'length'), rows)


def handle_dim(params, seed, precision):
    """dim λ and the hook lengths."""
    partition = parse_partition(params['partition'])
    value = dimension(partition)
    return Table(('partition', 'size', 'dimension', 'hook_product'),
                 [(partition, partition.size, value, math.prod(hook_lengths(partition)))])


def _measure_spec(params):
    kind = params['measure']
    if kind == 'plancherel':
        _require(params, 'n')
        return Plancherel(params['n'])
    if kind == 'poissonized':
        _require(params, 'xi', 'truncation')
        return PoissonizedPlancherel(params['xi'])
    if kind == 'schur':
        _require(params, 'truncation')
        return Schur(params['t'], _tbar(params))
    if kind == 'jack':
        _require(params, 'eps1', 'eps2', 'd')
        return Jack(params['eps1'], params['eps2'], params['d'])
    _require(params, 'xi', 'hbar', 'truncation')
    return PeriodicPlancherel(params['u'], params['xi'], params['hbar'])


def _exact_parts(value, column, measure):
    if not isinstance(value, (int, Fraction)):
        raise ArgumentError(f"{column} values of the {measure} measure are not rational; "
                            f"rerun with --float")
    value = Fraction(value)
    return value.numerator, value.denominator


def handle_measure_table(params, seed, precision):
    """
    Weights under a measure; Jack and periodic weights get a normalized column.

    Exact runs split every rational into numerator and denominator columns.
    """
    spec = _measure_spec(params)
    table = measure_table(spec, params.get('truncation'))
    diagnostics = {}
    columns = ['weight']
    rows = [(p, w) for p, w in table]
    if isinstance(spec, (Jack, PeriodicPlancherel)):
        total = partition_function(spec, params.get('truncation'))
        diagnostics['partition_function'] = total.value
        diagnostics['tail_bound'] = total.tail_bound
        columns.append('probability')
        rows = [(p, w, w / total.value) for p, w in table]
    if precision == Precision.FLOAT:
        return Table(['partition'] + columns, rows, diagnostics)
    exact_columns = ['partition']
    for name in columns:
        exact_columns += [f"{name}_num", f"{name}_den"]
    exact_rows = []
    for partition, *values in rows:
        row = [partition]
        for name, value in zip(columns, values):
            row.extend(_exact_parts(value, name, params['measure']))
        exact_rows.append(row)
    return Table(exact_columns, exact_rows, diagnostics)


def handle_sample(params, seed, precision):
    """Seeded draws; every draw of the run comes from one generator."""
    rng = make_rng(seed)
    if params['measure'] == 'plancherel':
        _require(params, 'n')
        sampler, argument = sample_plancherel, params['n']
    else:
        _require(params, 'xi')
        sampler, argument = sample_poissonized, params['xi']
    if params['count'] < 1:
        raise ArgumentError(f"--count must be positive, got {params['count']}")
    rows = []
    for index in range(1, params['count'] + 1):
        shape = sampler(argument, rng)
        rows.append((index, shape.size, shape.part(1), len(shape), shape))
    return Table(('index', 'size', 'lambda1', 'length', 'partition'), rows)


def _kernel_spec(params):
    kind = params['kernel']
    if kind == 'bessel':
        return Bessel(params['xi'])
    if kind == 'sine':
        _require(params, 'a')
        return Sine(params['a'])
    return SchurContour(params['t'], _tbar(params))


def handle_correlate(params, seed, precision):
    """ρ(X) = det[K(x_i, x_j)], optionally against the truncated direct sum."""
    kernel = _kernel_spec(params)
    points = params['points']
    value = correlation(kernel, points)
    energy = params.get('brute_energy')
    if energy is None:
        return Table(('points', 'correlation'), [(points, value)])
    if isinstance(kernel, Bessel):
        measure = PoissonizedPlancherel(params['xi'])
    elif isinstance(kernel, SchurContour):
        measure = Schur(params['t'], _tbar(params))
    else:
        raise ArgumentError("the sine kernel has no finite measure to sum over")
    brute = brute_force_correlation(measure, points, energy)
    return Table(('points', 'correlation', 'brute_force', 'tail_bound'),
                 [(points, value, brute.value, brute.tail_bound)])


def handle_gap(params, seed, precision):
    """Prob{λ_1 ≤ h} for h = 0..h_max."""
    values = lambda1_distribution(params['xi'], params['h_max'])
    return Table(('h', 'probability'), list(enumerate(values)))


def handle_kernel(params, seed, precision):
    """K(x, y) for every pair of points in the range."""
    points = params['range']
    matrix = kernel_matrix(_kernel_spec(params), points)
    rows = [(x, y, matrix[i, j]) for i, x in enumerate(points) for j, y in enumerate(points)]
    return Table(('x', 'y', 'K'), rows)


def handle_limit_shape(params, seed, precision):
    """Band structure, density and slope 1 − 2ρ at each level."""
    spec = Schur(params['t'], _tbar(params))
    offset = params.get('offset')
    rows = []
    for level in params['levels']:
        bands = bands_at_level(spec, level)
        density = limit_density(spec, level)
        row = [level, density, 1 - 2 * density,
               ';'.join(f"[{a!r}, {b!r}]" for a, b in bands.intervals)]
        if offset is not None:
            row.append(limit_kernel(spec, level, offset))
        rows.append(row)
    columns = ['level', 'density', 'slope', 'bands']
    if offset is not None:
        columns.append('kernel')
    return Table(columns, rows)


def _diagram_profile(partition):
    """The diagram scaled by 1/√|λ| as a DiscreteProfile on unit cells."""
    shape = profile(partition, 1 / math.sqrt(partition.size))
    return DiscreteProfile(np.asarray(shape.breakpoints, dtype=float), shape.slopes)


def handle_hook_energy(params, seed, precision):
    """E at Ω on a grid, or at a scaled diagram next to −log(n^n (dim λ/n!)²)/n."""
    form = params['form']
    if params.get('partition') is None:
        shape = vkls_discrete(params['cells'], params['half_width'])
        energy = hook_energy(shape, form, tolerance=params['tolerance'])
        return Table(('shape', 'cells', 'energy'), [('vkls', params['cells'], energy)])
    partition = parse_partition(params['partition'])
    if partition.size == 0:
        raise ArgumentError("the empty diagram has no scaled profile")
    n = partition.size
    estimate = -(n * math.log(n) - 2 * sum(math.log(h) for h in hook_lengths(partition))) / n
    energy = hook_energy(_diagram_profile(partition), form)
    return Table(('shape', 'cells', 'energy', 'log_weight_estimate'),
                 [(partition, partition.part(1) + len(partition), energy, estimate)])


def _profile_rows(shape):
    return [(x, s, h) for x, s, h in zip(shape.midpoints, shape.slopes, shape(shape.midpoints))]


def handle_maximize(params, seed, precision):
    """Direct maximizer of the action; solver diagnostics go to the metadata."""
    u, kappa = params['u'], params['kappa']
    shape = maximize_action(u, kappa, params['cells'], params.get('half_width'))
    diagnostics = dict(shape.diagnostics)
    diagnostics['action'] = action_value(shape, u, kappa)
    return Table(('x', 'slope', 'height'), _profile_rows(shape), diagnostics)


def handle_sw_shape(params, seed, precision):
    """Period-matched conformal-map limit shape."""
    u, kappa = params['u'], params['kappa']
    if not kappa > 0:
        raise ArgumentError(f"κ must be positive, got {kappa}")
    half_width = params.get('half_width')
    if half_width is None:
        half_width = default_half_width(u, kappa)
    diagnostics = {}
    if len(u) == 1:
        if u[0] != 0:
            raise ArgumentError("a single potential value must be zero")
        curve = SWCurveData(1)
    else:
        constant = PERIOD_CONSTANT if params.get('constant') is None else params['constant']
        match = match_periods(u, kappa, constant)
        curve = match.curve
        diagnostics.update(constant=match.constant, residual=match.residual,
                           evaluations=match.evaluations, periods=sw_periods(curve))
    diagnostics['curve'] = tuple(curve.coefficients.tolist())
    shape = maximizer_from_map(curve, params['cells'], half_width)
    if params.get('calibrate') and len(u) > 1:
        calibration = calibrate_period_constant(u, kappa, params['cells'], half_width)
        diagnostics.update(calibrated_constant=calibration.constant,
                           calibration_residual=calibration.relative_residual,
                           calibration_distance=calibration.distance)
    return Table(('x', 'slope', 'height'), _profile_rows(shape), diagnostics)


def handle_gw(params, seed, precision):
    """Disconnected stationary invariants, or connected one-point invariants by genus."""
    degree = params['degree']
    if params.get('connected'):
        values = connected_1pt(degree, params['genus_max'])
        return Table(('genus', 'value', 'value_decimal'),
                     [(genus, value, float(value)) for genus, value in sorted(values.items())])
    query = GWQuery(degree, params['insertions'], params['target_genus'])
    if query.target_genus == 0:
        value = gw_stationary(query, params.get('workers'))
    else:
        value = gw_stationary_target(query, params.get('workers'))
    return Table(('degree', 'insertions', 'target_genus', 'domain_genus', 'value', 'value_decimal'),
                 [(degree, query.insertions, query.target_genus, query.domain_genus(), value, float(value))])


def handle_hurwitz(params, seed, precision):
    """Burnside count, optionally next to the permutation enumeration."""
    query = HurwitzQuery(params['degree'], params['base_genus'], params['branch'])
    count = hurwitz_count(query, params.get('workers'))
    row = [query.degree, query.base_genus, ';'.join(str(eta) for eta in query.branch_data),
           count, float(count)]
    columns = ['degree', 'base_genus', 'branch', 'count', 'count_decimal']
    if params.get('brute'):
        columns.append('brute_force')
        row.append(hurwitz_brute(query))
    return Table(columns, [row])


def handle_elliptic_trace(params, seed, precision):
    """q-coefficients of the weighted trace."""
    coefficients = elliptic_series(params['z'], params['order'])
    return Table(('degree', 'coefficient'), list(enumerate(coefficients)))


HANDLERS = {
    Command.ENUMERATE: handle_enumerate,
    Command.DIM: handle_dim,
    Command.MEASURE_TABLE: handle_measure_table,
    Command.SAMPLE: handle_sample,
    Command.CORRELATE: handle_correlate,
    Command.GAP: handle_gap,
    Command.KERNEL: handle_kernel,
    Command.LIMIT_SHAPE: handle_limit_shape,
    Command.HOOK_ENERGY: handle_hook_energy,
    Command.MAXIMIZE: handle_maximize,
    Command.SW_SHAPE: handle_sw_shape,
    Command.GW: handle_gw,
    Command.HURWITZ: handle_hurwitz,
    Command.ELLIPTIC_TRACE: handle_elliptic_trace,
}


def execute_subcommand(config):
    """
    Run the handler of a subcommand.

    Args:
        config: RunConfig

    Returns:
        Table
    """
    handler = HANDLERS.get(config.command)
    if handler is None:
        raise ArgumentError(f"unknown subcommand: {config.command}")
    logger.debug("running %s with %s", config.command.value, config.params)
    return handler(config.params, config.seed, config.precision)
