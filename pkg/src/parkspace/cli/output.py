"""
Shared output and error handling for the commands.
"""

from contextlib import contextmanager
from typing import Any, Iterator, Optional

import typer

from ..core.errors import ParkspaceError
from ..utils.config import get_config
from ..utils.logging import log_error_with_context
from ..utils.serialization import to_json


def emit(value: Any, text: Optional[str] = None) -> None:
    """Print a result as JSON, or as ``text`` in text mode."""
    config = get_config()
    if config.output.mode == "text" and text is not None:
        typer.echo(text)
    else:
        typer.echo(to_json(value, indent=config.output.indent))


@contextmanager
def command_errors(command: str) -> Iterator[None]:
    """Turn library and validation errors into exit code 1."""
    try:
        yield
    except ParkspaceError as e:
        log_error_with_context(e, command)
        typer.echo(f"❌ Error: {e}", err=True)
        raise typer.Exit(1)
