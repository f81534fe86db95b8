"""
Command-line entry point for parkspace.

Every computing command prints its result on stdout (JSON by default,
``--text`` for a plain rendering) and exits 0 on success, 1 on a domain or
validation error, 2 on a usage error.
"""

import sys
from pathlib import Path
from typing import Optional

import typer

from ..utils.config import Config, create_default_config, get_config, load_config
from ..utils.logging import get_logger, log_config_loaded, log_shutdown, log_startup, setup_logging
from .commands.catalan import catalan_cmd
from .commands.certify import certify_cmd
from .commands.characters import decompose_cmd, dihedral_cmd, mult_cmd
from .commands.conditions import condition_cmd, verify_tables_cmd
from .commands.schur import gcd_cmd, stirling_cmd, unimodality_cmd

app = typer.Typer(
    name="parkspace",
    help="parkspace - q-Catalan numbers and parking space characters of reflection groups",
    add_completion=False,
)

app.command("catalan", help="q-Catalan numbers Cat_k(W,q) and Cat*_k(W,q)")(catalan_cmd)
app.command("condition", help="Congruence conditions on k")(condition_cmd)
app.command("certify", help="Residue enumeration under a certified period")(certify_cmd)
app.command("verify-tables", help="Reproduce the congruence tables")(verify_tables_cmd)
app.command("decompose", help="Decompose phi_k into characters")(decompose_cmd)
app.command("mult", help="Multiplicity of one character in phi_k")(mult_cmd)
app.command("dihedral", help="Character checks for the dihedral group of order 2m")(dihedral_cmd)
app.command("gcd", help="gcd of specialised Schur functions")(gcd_cmd)
app.command("unimodality", help="Unimodality of a Schur quotient")(unimodality_cmd)
app.command("stirling", help="Divisibility of Stirling numbers and class sizes")(stirling_cmd)


def _session_config(
    config_file: Optional[Path], verbose: bool, debug: bool, threads: Optional[int], text: bool
) -> Config:
    """Configuration file and environment, then the global flags on top."""
    if config_file is not None and not config_file.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_file}")
    cfg = load_config(config_file)
    if debug:
        cfg.debug = True
        cfg.logging.level = "DEBUG"
    elif verbose:
        cfg.logging.level = "INFO"
    if threads:
        cfg.compute.threads = threads
    if text:
        cfg.output.mode = "text"
    return cfg


@app.callback()
def main(
    config: Optional[Path] = typer.Option(None, "-c", "--config", help="Configuration file path"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Log progress at INFO level"),
    debug: bool = typer.Option(False, "-d", "--debug", help="Log everything, with source locations"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="Worker threads for scans"),
    text: bool = typer.Option(False, "--text", help="Plain text output instead of JSON"),
):
    """
    parkspace - exact computations on generalized parking spaces.

    Results are printed as JSON on stdout; logs go to stderr.
    """
    try:
        setup_logging(_session_config(config, verbose, debug, threads, text))
    except (OSError, ValueError) as e:
        typer.echo(f"Error loading configuration: {e}", err=True)
        raise typer.Exit(1)

    log_startup()
    if config:
        log_config_loaded(str(config))


@app.command()
def init(output: Optional[Path] = typer.Option(None, "-o", "--output", help="Output file path")):
    """Write a default configuration file."""
    target = Path(output) if output else Path.cwd() / "config" / "config.yaml"
    try:
        create_default_config(target)
    except OSError as e:
        typer.echo(f"❌ Could not write {target}: {e}", err=True)
        raise typer.Exit(1)
    typer.echo(f"✅ Default configuration written to {target}")
    typer.echo("📝 Adjust compute.threads and compute.verify_limits, then try 'parkspace verify-tables'.")


@app.command()
def version():
    """Show version information."""
    from .. import __version__

    typer.echo(f"parkspace v{__version__}")


@app.command()
def config():
    """Show the active configuration."""
    cfg = get_config()
    limits = cfg.compute.verify_limits
    rows = [
        ("Environment", cfg.environment),
        ("Threads", cfg.compute.threads),
        ("Scan Periods", cfg.compute.scan_periods),
        ("Output Mode", cfg.output.mode),
        (
            "Table Limits",
            f"S<={limits.sym_max_n}, G(m,p,n) m<={limits.imprimitive_max_m} "
            f"n<={limits.imprimitive_max_n}, C<={limits.cyclic_max_m}, D<={limits.dihedral_max_m}",
        ),
        ("Log Level", cfg.logging.level),
        ("Log File", cfg.logging.file_path or "-"),
        ("Debug Mode", cfg.debug),
    ]
    typer.echo("📋 Current Configuration:")
    for name, value in rows:
        typer.echo(f"  {name}: {value}")


@app.command()
def validate():
    """Check the active configuration for problems."""
    issues = get_config().validate_config()
    if issues:
        typer.echo(f"❌ {len(issues)} configuration issue(s):")
        for issue in issues:
            typer.echo(f"  • {issue}")
        raise typer.Exit(1)
    typer.echo("✅ Configuration is valid!")


def cli():
    """Console script entry point."""
    try:
        app()
    except KeyboardInterrupt:
        typer.echo("\n👋 Interrupted", err=True)
        sys.exit(130)
    except Exception as e:
        get_logger().exception("Unexpected error")
        typer.echo(f"❌ Unexpected error: {e}", err=True)
        sys.exit(1)
    finally:
        log_shutdown()


if __name__ == "__main__":
    cli()
