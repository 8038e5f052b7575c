"""Surface-agnostic progress reporter.

Long-running operations (the verification corpus, family tables) accept any
:class:`ProgressReporter` and stay decoupled from where they are invoked:

- :class:`NullReporter` drops all messages (default for library use).
- :class:`TyperReporter` writes to stderr via ``typer.echo`` (CLI), leaving
  stdout to the command's JSON/CSV output.
"""

from __future__ import annotations

from typing import Protocol, runtime_checkable


@runtime_checkable
class ProgressReporter(Protocol):
    """Progress/log sink."""

    def info(self, message: str) -> None: ...
    def warning(self, message: str) -> None: ...
    def error(self, message: str) -> None: ...
    def progress(self, step: int, total: int, message: str) -> None: ...


class NullReporter:
    """No-op reporter. Use when no surface is attached."""

    def info(self, message: str) -> None:
        return

    def warning(self, message: str) -> None:
        return

    def error(self, message: str) -> None:
        return

    def progress(self, step: int, total: int, message: str) -> None:
        return


class TyperReporter:
    """Reporter that writes every message to stderr via ``typer.echo``."""

    def info(self, message: str) -> None:
        import typer

        typer.echo(message, err=True)

    def warning(self, message: str) -> None:
        import typer

        typer.echo(f"warning: {message}", err=True)

    def error(self, message: str) -> None:
        import typer

        typer.echo(f"error: {message}", err=True)

    def progress(self, step: int, total: int, message: str) -> None:
        import typer

        typer.echo(f"[{step}/{total}] {message}", err=True)


__all__ = [
    "NullReporter",
    "ProgressReporter",
    "TyperReporter",
]
