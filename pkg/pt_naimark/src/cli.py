import functools
import logging
import sys
import traceback

import click
import pandas as pd
import pydantic

from pt_naimark._version import __version__
from pt_naimark.src.logging_utils import make_logger
from pt_naimark.src.utils.errors import PTNaimarkError

# ============================================================================
# Helper Functions
# ============================================================================


def print_banner():
    """Print the startup banner to stderr."""
    width = 80
    border = click.style('=' * width, fg='green')
    version = click.style(f'PT-Naimark Version: {__version__}', fg='yellow', bold=True)
    click.echo(border, err=True)
    click.echo(version.center(width), err=True)
    click.echo(border + '\n', err=True)


def setup_logging(debug):
    """Setup logging based on debug flag."""
    if debug:
        click.echo('Debug mode', err=True)
        return make_logger(level=logging.DEBUG)
    return make_logger(level=logging.INFO)


def load_config(command: str, **options):
    """Gather the flags of ``command`` into a validated CliConfig.

    Invalid flag combinations and parameters outside the admitted domain are
    reported as usage errors (exit status 2).
    """
    from pt_naimark.src.config import CliConfig

    options = {key: value for key, value in options.items() if value is not None}
    try:
        return CliConfig(command=command, **options)
    except pydantic.ValidationError as e:
        messages = '; '.join(error['msg'] for error in e.errors())
        raise click.UsageError(messages)
    except PTNaimarkError as e:
        raise click.UsageError(str(e))


def parameter_options(func):
    """Options shared by the commands that act on a single parameter point."""

    @click.option('--E0', 'E0', type=float, help='Energy offset E0 (default 0)')
    @click.option('--alpha', type=float, help='PT angle alpha in (-pi/2, pi/2), with --s')
    @click.option('--s', type=float, help='Coupling scale s > 0, with --alpha')
    @click.option('--epsilon', type=float, help='Distance from the exceptional point, with --omega0')
    @click.option('--omega0', type=float, help='Level spacing omega0 > 0, with --epsilon')
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def output_options(func):
    @click.option('--output', '-o', type=click.Path(dir_okay=False), help='Output file (default stdout)')
    @click.option('--format', 'format', type=click.Choice(['csv', 'json']), help='Document format')
    @click.option('--tol', type=float, help='Construction tolerance (default 1e-10)')
    @click.option('--debug', '-d', is_flag=True, help='Enable debug mode')
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)

    return wrapper


def run_command(debug, body):
    """Run ``body`` with logging set up and domain errors reported on stderr."""
    logger = setup_logging(debug)
    try:
        body(logger)
    except click.ClickException:
        raise
    except PTNaimarkError as e:
        click.echo(click.style(f'\n✗ Error: {e}', fg='red'), err=True)
        if debug:
            traceback.print_exc()
        sys.exit(1)


def emit_table(frame: pd.DataFrame, config):
    from pt_naimark.src.utils.output import emit, frame_to_csv, frame_to_json

    if config.resolved_format() == 'json':
        emit(frame_to_json(frame) + '\n', config.output)
    else:
        emit(frame_to_csv(frame), config.output)


# ============================================================================
# CLI Commands
# ============================================================================


@click.group()
@click.version_option(version=__version__, prog_name='pt-naimark')
def cli():
    """
    PT-Naimark - Naimark dilation of the PT-symmetric quantum brachistochrone.

    Builds the 2x2 PT-symmetric system, its 4x4 Hermitian dilation and the
    two-qubit measurement protocol, and checks every identity linking them.
    Data documents go to stdout (or --output); logs go to stderr.

    Examples:

        pt-naimark analyze --epsilon 0.1 --omega0 1
        pt-naimark sweep --eps-grid 0.3,0.1,0.03,0.01
        pt-naimark verify
    """
    print_banner()


@cli.command()
@parameter_options
@output_options
def analyze(E0, alpha, s, epsilon, omega0, output, format, tol, debug):
    """
    Regime row of one parameter point with spectrum, timing and protocol results.

    Examples:

        pt-naimark analyze --epsilon 0.1 --omega0 1
        pt-naimark analyze --alpha 0 --s 1 --format json
    """
    config = load_config(
        'analyze',
        E0=E0,
        alpha=alpha,
        s=s,
        epsilon=epsilon,
        omega0=omega0,
        output=output,
        format=format,
        tol=tol,
    )

    def body(logger):
        from pt_naimark.src.protocol import ANALYSIS_COLUMNS, analysis_record
        from pt_naimark.src.utils.output import emit, record_to_json

        params = config.resolve_params()
        logger.info(f'Analyzing alpha={params.alpha}, s={params.s}, E0={params.E0}')
        record = analysis_record(params, config.construction_tol)
        if config.resolved_format() == 'json':
            emit(record_to_json(record) + '\n', config.output)
        else:
            emit_table(pd.DataFrame([record], columns=ANALYSIS_COLUMNS), config)

    run_command(debug, body)


@cli.command()
@click.option('--eps-grid', required=True, help='Comma separated epsilon values, e.g. 0.3,0.1,0.03')
@click.option('--omega0', type=float, help='Level spacing omega0 > 0 (default 1)')
@click.option('--E0', 'E0', type=float, help='Energy offset E0 (default 0)')
@output_options
def sweep(eps_grid, omega0, E0, output, format, tol, debug):
    """
    Regime CSV over an epsilon grid at fixed level spacing.

    Examples:

        pt-naimark sweep --eps-grid 0.3,0.1,0.03,0.01
        pt-naimark sweep --eps-grid 0.5,0.05 --omega0 2 -o regime.csv
    """
    config = load_config(
        'sweep',
        eps_grid=eps_grid,
        omega0=omega0,
        E0=E0,
        output=output,
        format=format,
        tol=tol,
    )

    def body(logger):
        from pt_naimark.src.protocol import regime_frame, regime_report

        logger.info(f'Sweeping {len(config.eps_grid)} epsilon values at omega0={config.sweep_omega0}')
        reports = regime_report(
            config.sweep_omega0, config.eps_grid, config.E0, config.construction_tol
        )
        emit_table(regime_frame(reports), config)

    run_command(debug, body)


@cli.command(name='trajectory')
@parameter_options
@click.option('--n-samples', '-n', type=int, help='Number of samples over [0, tau] (default 200)')
@output_options
def trajectory_command(E0, alpha, s, epsilon, omega0, n_samples, output, format, tol, debug):
    """
    Sample psi(t) and the ancilla component chi(t) over [0, tau].

    Examples:

        pt-naimark trajectory --alpha -1.0471975511965976 --s 1 -n 50
    """
    config = load_config(
        'trajectory',
        E0=E0,
        alpha=alpha,
        s=s,
        epsilon=epsilon,
        omega0=omega0,
        n_samples=n_samples,
        output=output,
        format=format,
        tol=tol,
    )

    def body(logger):
        from pt_naimark.src.pt_system import build_system, trajectory, trajectory_frame

        params = config.resolve_params()
        sys_ = build_system(params, config.construction_tol)
        logger.info(f'Sampling {config.n_samples} points up to tau={params.tau}')
        emit_table(trajectory_frame(trajectory(sys_, params.tau, config.n_samples)), config)

    run_command(debug, body)


@cli.command()
@parameter_options
@output_options
def dilate(E0, alpha, s, epsilon, omega0, output, format, tol, debug):
    """
    JSON document with M, V, H4, Lambda, Omega and E4.

    Examples:

        pt-naimark dilate --alpha 0.5235987755982988 --s 1
    """
    config = load_config(
        'dilate',
        E0=E0,
        alpha=alpha,
        s=s,
        epsilon=epsilon,
        omega0=omega0,
        output=output,
        format=format,
        tol=tol,
    )

    def body(logger):
        from pt_naimark.src.linalg import matrices_to_json
        from pt_naimark.src.naimark import dilate as build_dilation
        from pt_naimark.src.pt_system import build_system
        from pt_naimark.src.utils.output import emit

        params = config.resolve_params()
        logger.info(f'Dilating alpha={params.alpha}, s={params.s}, E0={params.E0}')
        ds = build_dilation(build_system(params, config.construction_tol))
        emit(matrices_to_json(ds.matrices()) + '\n', config.output)

    run_command(debug, body)


@cli.command()
@click.option('--tol', type=float, help='Override every per-invariant tolerance')
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Output file (default stdout)')
@click.option('--debug', '-d', is_flag=True, help='Enable debug mode')
def verify(tol, output, debug):
    """
    Run every invariant suite on the built-in parameter grid.

    Prints one PASS/FAIL line per invariant and exits 1 if any fails.

    Examples:

        pt-naimark verify
        pt-naimark verify --tol 1e-9
    """
    config = load_config('verify', tol=tol, output=output)
    failed = []

    def body(logger):
        from pt_naimark.src.utils.output import emit
        from pt_naimark.src.verification import run_verification

        results = run_verification(tol=config.tol)
        emit('\n'.join(result.line() for result in results) + '\n', config.output)
        failed.extend(r for r in results if not r.passed)

    run_command(debug, body)
    if failed:
        click.echo(click.style(f'✗ {len(failed)} invariants failed', fg='red'), err=True)
        sys.exit(1)
    click.echo(click.style('✓ All invariants passed', fg='green'), err=True)


if __name__ == '__main__':
    cli()
