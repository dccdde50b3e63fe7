"""Command-line front end: analyze, scan and normal-form"""
import json
import logging
from dataclasses import dataclass
from typing import Optional

import click

from src.config import configure_logging, load_settings
from src.errors import DegeneratePolytopeError, LatticeError
from src.services import singularity
from src.services.analyzer import analyze_record
from src.services.hull import convex_hull
from src.services.ks_ingest import (
    default_parallelism,
    infer_format,
    read_records,
    scan,
    write_report,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_NOT_APPLICABLE = 3

VERDICT_LABELS = {
    'not_smoothable': 'NOT SMOOTHABLE',
    'no_obstruction_found': 'NO OBSTRUCTION FOUND',
    'already_smooth': 'ALREADY SMOOTH',
}


@dataclass(frozen=True)
class CliConfig:
    command: str
    input_path: Optional[str]
    fmt: Optional[str] = None
    out_path: Optional[str] = None
    parallelism: int = 1
    emit: str = 'table'

    @property
    def input_format(self):
        return self.fmt or infer_format(self.input_path)


def format_class_group(free_rank, torsion):
    parts = ['Z'] * free_rank + [f"Z/{t}" for t in torsion]
    return ' ⊕ '.join(parts) if parts else '0'


def _fail(message, code):
    click.echo(f"error: {message}", err=True)
    return code


def _load(config):
    """Records of the input file, or an exit code"""
    try:
        return read_records(config.input_path, config.input_format), EXIT_OK
    except OSError as e:
        return None, _fail(f"cannot read {config.input_path}: {e}", EXIT_IO)
    except LatticeError as e:
        return None, _fail(f"cannot parse {config.input_path}: {e}", EXIT_IO)


def _render_record(record):
    lines = [f"polytope #{record.index} ({record.vertex_count} vertices, {record.facet_count} facets)"]
    if not record.valid:
        lines.append(f"  invalid: {record.error}")
        return "\n".join(lines)
    lines.append(f"  reflexive: {'yes' if record.reflexive else 'no'}")
    lines.append("  facets: " + ", ".join(f"{k}={v}" for k, v in record.facet_classes.items()))
    for pair in record.pairs:
        flat = 'almost-flat' if pair.almost_flat else 'not almost-flat'
        degrees = ", ".join(str(d) for d in pair.ext_degrees)
        lines.append(
            f"  A{pair.n}-pair facets {tuple(pair.facet_ids)}: pairing {pair.pairing}, {flat}, "
            f"Ext degrees [{degrees}], class group {format_class_group(*pair.class_group)}"
        )
    lines.append(f"  verdict: {VERDICT_LABELS[record.verdict]}")
    return "\n".join(lines)


def cmd_analyze(config):
    records, code = _load(config)
    if records is None:
        return code
    if not records:
        return _fail("no polytopes in input", EXIT_INVALID)

    analyses = []
    for record in records:
        try:
            convex_hull(record.vertices)
        except DegeneratePolytopeError as e:
            return _fail(f"polytope #{record.index}: {e}", EXIT_INVALID)
        analyses.append(analyze_record(record))

    try:
        with click.open_file(config.out_path or '-', 'w', encoding='utf-8') as sink:
            for analysis in analyses:
                if config.emit == 'records':
                    sink.write(json.dumps(analysis.to_dict(), separators=(',', ':')) + "\n")
                else:
                    sink.write(_render_record(analysis) + "\n")
    except OSError as e:
        return _fail(f"cannot write report: {e}", EXIT_IO)
    return EXIT_OK


def cmd_scan(config):
    if not config.input_path:
        return _fail("no input: pass --input or set KS_DB_PATH", EXIT_IO)
    records, code = _load(config)
    if records is None:
        return code
    report = scan(records, config.parallelism)

    to_stdout = not config.out_path
    try:
        with click.open_file(config.out_path or '-', 'w', encoding='utf-8') as sink:
            if config.emit == 'records':
                write_report(report, sink)
            else:
                for record in report.records:
                    if not record.valid or record.not_smoothable:
                        sink.write(_render_record(record) + "\n")
    except OSError as e:
        return _fail(f"cannot write report: {e}", EXIT_IO)

    # keep a records stream on stdout clean
    click.echo(report.summary_line(), err=to_stdout and config.emit == 'records')
    return EXIT_OK


def _render_normal_form(k, pair, nf, kernel, group, degrees):
    free_row, torsion_row = degrees
    lines = [
        f"pair {k}: A{pair.n}, facets {tuple(pair.facet_ids)}, pairing {pair.pairing}",
        f"  rho0={pair.rho0.coords} rho1={pair.rho1.coords} "
        f"rho_u={pair.rho_u.coords} rho_v={pair.rho_v.coords}",
        f"  U = {nf.U.to_rows()}",
        f"  (a, b, n) = {(nf.a, nf.b, nf.n)}",
        f"  r = {nf.r}",
        f"  (p, q, s, t) = {(nf.p, nf.q, nf.s, nf.t)}",
        f"  (d_x, d_y, d_z) = {(nf.d_x, nf.d_y, nf.d_z)}",
        f"  kernel = {kernel}",
        f"  class group = {format_class_group(*group)}",
        f"  degree map = {free_row}" + (f" | {torsion_row} mod {nf.r}" if torsion_row else ""),
    ]
    return "\n".join(lines)


def cmd_normal_form(config, pair_selector=None):
    records, code = _load(config)
    if records is None:
        return code
    if not records:
        return _fail("no polytopes in input", EXIT_INVALID)
    if len(records) > 1:
        logger.warning("input holds %d polytopes; using the first", len(records))

    try:
        polytope = convex_hull(records[0].vertices)
    except DegeneratePolytopeError as e:
        return _fail(str(e), EXIT_INVALID)

    pairs = singularity.find_adjacent_pairs(polytope)
    if not pairs:
        click.echo("no adjacent A_n pairs")
        return EXIT_NOT_APPLICABLE
    if pair_selector is not None and not 0 <= pair_selector < len(pairs):
        return _fail(f"pair {pair_selector} out of range (0..{len(pairs) - 1})", EXIT_INVALID)

    selected = range(len(pairs)) if pair_selector is None else [pair_selector]
    try:
        with click.open_file(config.out_path or '-', 'w', encoding='utf-8') as sink:
            for k in selected:
                pair = pairs[k]
                nf = singularity.normal_form(pair)
                kernel = singularity.ray_map_kernel(nf)
                group = singularity.class_group(nf)
                degrees = singularity.degree_map(nf)
                if config.emit == 'records':
                    doc = {
                        'pair': k,
                        **pair.to_dict(),
                        'normal_form': nf.to_dict(),
                        'kernel': list(kernel),
                        'class_group': {'free_rank': group[0], 'torsion': group[1]},
                        'degree_map': {'free': list(degrees[0]), 'torsion': list(degrees[1])},
                    }
                    sink.write(json.dumps(doc, separators=(',', ':')) + "\n")
                else:
                    sink.write(_render_normal_form(k, pair, nf, kernel, group, degrees) + "\n")
    except OSError as e:
        return _fail(f"cannot write report: {e}", EXIT_IO)
    return EXIT_OK


input_option = click.option('--input', 'input_path', type=str, help="Polytope file (PALP or JSON).")
format_option = click.option('--format', 'fmt', type=click.Choice(['palp', 'json']), default=None,
                             help="Input format; inferred from the extension by default.")
out_option = click.option('--out', 'out_path', type=str, default=None, help="Output file (default: stdout).")
emit_option = click.option('--emit', type=click.Choice(['table', 'records']), default='table', show_default=True)


@click.group()
@click.option('--log-level', default=None, help="Overrides LOG_LEVEL.")
@click.pass_context
def cli(ctx, log_level):
    """Detect adjacent almost-flat A_n-triangle facets in lattice 3-polytopes."""
    settings = load_settings()
    configure_logging(log_level or settings.log_level)
    ctx.obj = settings


@cli.command('analyze')
@input_option
@format_option
@out_option
@emit_option
@click.pass_context
def analyze_command(ctx, input_path, fmt, out_path, emit):
    """Analyze every polytope of a file."""
    if not input_path:
        ctx.exit(_fail("--input is required", EXIT_IO))
    config = CliConfig('analyze', input_path, fmt, out_path, emit=emit)
    ctx.exit(cmd_analyze(config))


@cli.command('scan')
@input_option
@format_option
@out_option
@emit_option
@click.option('--parallelism', type=click.IntRange(min=1), default=None,
              help="Worker processes (default: SCAN_PARALLELISM or CPU count).")
@click.pass_context
def scan_command(ctx, input_path, fmt, out_path, emit, parallelism):
    """Scan a database file and report the census."""
    settings = ctx.obj
    config = CliConfig(
        'scan',
        input_path or settings.ks_db_path,
        fmt,
        out_path,
        parallelism=parallelism or settings.scan_parallelism or default_parallelism(),
        emit=emit,
    )
    ctx.exit(cmd_scan(config))


@cli.command('normal-form')
@input_option
@format_option
@out_option
@emit_option
@click.option('--pair', 'pair_selector', type=int, default=None, help="Index of one pair (default: all).")
@click.pass_context
def normal_form_command(ctx, input_path, fmt, out_path, emit, pair_selector):
    """Print the unimodular normal form of adjacent A_n pairs."""
    if not input_path:
        ctx.exit(_fail("--input is required", EXIT_IO))
    config = CliConfig('normal-form', input_path, fmt, out_path, emit=emit)
    ctx.exit(cmd_normal_form(config, pair_selector))


if __name__ == '__main__':
    cli()
