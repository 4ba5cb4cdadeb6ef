"""
Serialization of result tables to CSV and JSON with a metadata block.
"""

import csv
import io
import json
from fractions import Fraction

import numpy as np

from ..core.partitions import Partition, format_partition
from ..types import TOOL_NAME, VERSION, OutputFormat, Precision


def format_value(value, precision=Precision.EXACT):
    """
    Text form of a table cell.

    Exact rationals print as "num/den" (integers without a denominator) unless
    the run is in float mode; floats use the shortest round-trip repr.
    """
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if precision == Precision.FLOAT:
            return repr(float(value))
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, complex):
        if value.imag == 0:
            return repr(value.real)
        return str(value)
    if isinstance(value, (tuple, list)):
        return ','.join(format_value(v, precision) for v in value)
    if value is None:
        return ''
    return str(value)


def _json_value(value, precision):
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, (bool, type(None))):
        return value
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, (tuple, list)) and not isinstance(value, Partition):
        return [_json_value(v, precision) for v in value]
    if isinstance(value, Fraction) and precision == Precision.FLOAT:
        return float(value)
    if isinstance(value, complex) and value.imag == 0:
        return value.real
    return format_value(value, precision)


def metadata(config, diagnostics=None):
    """
    Everything needed to re-run: tool, version, subcommand, parameters, seed, precision.
    """
    meta = {
        'tool': TOOL_NAME,
        'version': VERSION,
        'command': config.command.value,
        'seed': config.seed,
        'precision': config.precision.value,
        'format': config.fmt.value,
    }
    for key, value in config.params.items():
        meta[f"param.{key}"] = value
    for key, value in (diagnostics or {}).items():
        meta[f"diag.{key}"] = value
    return meta


def render_csv(table, meta, precision):
    """Leading "# key: value" lines, then the header and the rows."""
    buffer = io.StringIO()
    for key in sorted(meta):
        buffer.write(f"# {key}: {format_value(meta[key], Precision.EXACT)}\n")
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v, precision) for v in row])
    return buffer.getvalue()


def render_json(table, meta, precision):
    """{"meta": {...}, "rows": [{column: value}, ...]} with sorted keys."""
    document = {
        'meta': {key: _json_value(value, Precision.EXACT) for key, value in meta.items()},
        'rows': [{c: _json_value(v, precision) for c, v in zip(table.columns, row)} for row in table.rows],
    }
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=True) + '\n'


def render(table, config):
    """Serialize a Table in the run's output format."""
    meta = metadata(config, table.diagnostics)
    if config.fmt == OutputFormat.JSON:
        return render_json(table, meta, config.precision)
    return render_csv(table, meta, config.precision)
