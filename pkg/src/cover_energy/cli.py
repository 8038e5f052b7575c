"""cover-energy CLI - minimum 3-coverings, covering energies and the theorem harness.

Exit codes: 0 success, 1 validation or usage error, 2 I/O error, 3 a
verification counterexample.
"""

import logging
import sys
from pathlib import Path

import click
import typer

from cover_energy.config import configure, get_settings, load_settings
from cover_energy.covering import (
    CoverSet,
    min_covering_bruteforce,
    min_covering_exact,
)
from cover_energy.errors import CoverEnergyError
from cover_energy.families import (
    ENERGY_TABLE_HEADER,
    StarFamily,
    discrepancy_summary,
    energy_table,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_random,
    star_graph,
)
from cover_energy.graph import (
    Graph,
    LoadedGraph,
    format_edge_list,
    format_graph_json,
    load_graph,
)
from cover_energy.output import dumps_csv, dumps_json
from cover_energy.reporter import TyperReporter
from cover_energy.spectral import (
    ENERGY_CSV_HEADER,
    EigenMethod,
    build_covering_matrix,
    char_poly,
    covering_energy,
)
from cover_energy.verification import verify as run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_COUNTEREXAMPLE = 3

GENERATOR_FAMILIES = ("star", "path", "cycle", "complete", "random")

app = typer.Typer(
    help="Minimum 3-path coverings, covering-matrix energies and closed forms for star families",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)


@app.callback()
def main_callback(
    config: Path | None = typer.Option(
        None, "--config", help="YAML file with settings (tolerances, search bounds)"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr"),
) -> None:
    """Load settings and set up logging before any subcommand runs."""
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    logging.getLogger("cover_energy").setLevel(logging.DEBUG if verbose else logging.WARNING)
    configure(load_settings(config))


# ── Graph input ──────────────────────────────────────────────────────────────


def _generate(
    family: str,
    m: int | None,
    ray_len: int,
    n: int | None,
    p: float,
    seed: int,
) -> Graph:
    if family == "star":
        if m is None:
            raise typer.BadParameter("--family star needs --m", param_hint="--m")
        return star_graph(m, ray_len)
    if n is None:
        raise typer.BadParameter(f"--family {family} needs --n", param_hint="--n")
    if family == "path":
        return gen_path(n)
    if family == "cycle":
        return gen_cycle(n)
    if family == "complete":
        return gen_complete(n)
    if family == "random":
        return gen_random(n, p, seed)
    raise typer.BadParameter(
        f"unknown family {family!r}; choose from {', '.join(GENERATOR_FAMILIES)}",
        param_hint="--family",
    )


def _resolve_input(
    in_file: Path | None,
    family: str | None,
    m: int | None,
    ray_len: int,
    n: int | None,
    p: float,
    seed: int,
) -> LoadedGraph:
    """Read `--in FILE` or build the graph from generator flags (exactly one of the two)."""
    if in_file is not None and family is not None:
        raise click.UsageError("--in and --family are mutually exclusive")
    if in_file is not None:
        return load_graph(in_file)
    if family is not None:
        return LoadedGraph(graph=_generate(family, m, ray_len, n, p, seed), cover=None)
    raise click.UsageError("give a graph with --in FILE or a generator via --family")


def _resolve_cover(
    loaded: LoadedGraph, cover: str | None, min_cover: bool, command: str
) -> CoverSet:
    if cover is not None and min_cover:
        raise click.UsageError("--cover and --min-cover are mutually exclusive")
    if min_cover:
        return min_covering_exact(loaded.graph, 3)
    if cover is not None:
        return CoverSet.parse(cover).validate_for(loaded.graph)
    if loaded.cover is not None:
        return CoverSet.of(loaded.cover).validate_for(loaded.graph)
    raise click.UsageError(f"{command} needs --cover, --min-cover or a cover in the JSON input")


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


# Shared option declarations
_IN = typer.Option(None, "--in", help="Graph file: edge list, or JSON when the suffix is .json")
_FAMILY = typer.Option(
    None, "--family", help=f"Generate instead of reading: {', '.join(GENERATOR_FAMILIES)}"
)
_M = typer.Option(None, "--m", help="Number of rays (star)")
_RAY_LEN = typer.Option(1, "--ray-len", help="Edges per ray (star)")
_N = typer.Option(None, "--n", help="Number of vertices (path, cycle, complete, random)")
_P = typer.Option(0.3, "--p", help="Edge probability (random)")
_SEED = typer.Option(0, "--seed", help="Seed (random)")


# ── Commands ─────────────────────────────────────────────────────────────────


@app.command()
def gen(
    family: str = typer.Option(..., "--family", help=", ".join(GENERATOR_FAMILIES)),
    m: int | None = _M,
    ray_len: int = _RAY_LEN,
    n: int | None = _N,
    p: float = _P,
    seed: int = _SEED,
    fmt: str = typer.Option("edges", "--format", help="edges or json"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write here instead of stdout"),
) -> None:
    """Generate a graph.

      cover-energy gen --family star --m 2 --ray-len 2
      cover-energy gen --family random --n 8 --p 0.3 --seed 42 --format json
    """
    g = _generate(family, m, ray_len, n, p, seed)
    if fmt == "edges":
        _emit(format_edge_list(g), out)
    elif fmt == "json":
        _emit(format_graph_json(g), out)
    else:
        raise typer.BadParameter("choose edges or json", param_hint="--format")


@app.command()
def mincover(
    in_file: Path | None = _IN,
    family: str | None = _FAMILY,
    m: int | None = _M,
    ray_len: int = _RAY_LEN,
    n: int | None = _N,
    p: float = _P,
    seed: int = _SEED,
    method: str = typer.Option("exact", "--method", help="exact (branch and bound) or bruteforce"),
    k: int = typer.Option(3, "--k", help="3 for a 3-path covering, 2 for a vertex cover"),
) -> None:
    """Minimum k-covering of a graph, as JSON."""
    loaded = _resolve_input(in_file, family, m, ray_len, n, p, seed)
    if k not in (2, 3):
        raise typer.BadParameter("only 2 and 3 are supported", param_hint="--k")
    if method == "exact":
        cover = min_covering_exact(loaded.graph, k)
    elif method == "bruteforce":
        cover = min_covering_bruteforce(loaded.graph, k)
    else:
        raise typer.BadParameter("choose exact or bruteforce", param_hint="--method")
    typer.echo(dumps_json({**cover.as_dict(), "method": method}), nl=False)


@app.command()
def energy(
    in_file: Path | None = _IN,
    family: str | None = _FAMILY,
    m: int | None = _M,
    ray_len: int = _RAY_LEN,
    n: int | None = _N,
    p: float = _P,
    seed: int = _SEED,
    cover: str | None = typer.Option(None, "--cover", help='Comma-separated ids, e.g. "0,3,5"'),
    min_cover: bool = typer.Option(False, "--min-cover", help="Use the exact minimum 3-covering"),
    eigen_method: str | None = typer.Option(
        None, "--eigen-method", help="jacobi or lapack (default: by matrix size)"
    ),
    fmt: str = typer.Option("json", "--format", help="json or csv"),
) -> None:
    """Eigenvalues and energy of the covering matrix.

      cover-energy energy --family star --m 2 --ray-len 2 --cover 0
    """
    loaded = _resolve_input(in_file, family, m, ray_len, n, p, seed)
    q = _resolve_cover(loaded, cover, min_cover, "energy")
    if eigen_method is not None and eigen_method not in set(EigenMethod):
        raise typer.BadParameter("choose jacobi or lapack", param_hint="--eigen-method")
    cfg = get_settings()
    report = covering_energy(loaded.graph, q, eigen_method, cfg)
    if fmt == "json":
        typer.echo(
            dumps_json(
                report.as_dict(cfg.float_digits, cfg.zero_display_tolerance), cfg.float_digits
            ),
            nl=False,
        )
    elif fmt == "csv":
        typer.echo(dumps_csv(ENERGY_CSV_HEADER, [report.csv_row()], cfg.float_digits), nl=False)
    else:
        raise typer.BadParameter("choose json or csv", param_hint="--format")


@app.command()
def charpoly(
    in_file: Path | None = _IN,
    family: str | None = _FAMILY,
    m: int | None = _M,
    ray_len: int = _RAY_LEN,
    n: int | None = _N,
    p: float = _P,
    seed: int = _SEED,
    cover: str | None = typer.Option(None, "--cover", help='Comma-separated ids, e.g. "0,3,5"'),
    min_cover: bool = typer.Option(False, "--min-cover", help="Use the exact minimum 3-covering"),
) -> None:
    """Exact integer characteristic polynomial of the covering matrix."""
    loaded = _resolve_input(in_file, family, m, ray_len, n, p, seed)
    q = _resolve_cover(loaded, cover, min_cover, "charpoly")
    poly = char_poly(build_covering_matrix(loaded.graph, q))
    doc = {
        "cover": list(q.members),
        "coefficients": poly.as_list(),
        "polynomial": str(poly),
    }
    typer.echo(dumps_json(doc), nl=False)


@app.command()
def verify(
    trials: int = typer.Option(2000, "--trials", help="Number of random trials"),
    seed: int = typer.Option(7, "--seed", help="Master seed"),
    max_n: int = typer.Option(12, "--max-n", help="Largest graph order (orders start at 3)"),
    workers: int = typer.Option(1, "--workers", help="Worker processes"),
    records: Path | None = typer.Option(
        None, "--records", help="Write one NDJSON record per trial to this file"
    ),
) -> None:
    """Check the covering theorems on a seeded random corpus.

    Prints a JSON summary. On a counterexample each failing graph is written
    to stderr in edge-list form and the exit code is 3.
    """
    cfg = get_settings()
    report = run_verification(trials, seed, max_n, workers, cfg, TyperReporter())
    if records is not None:
        report.write_records(records, cfg.float_digits)
    typer.echo(dumps_json(report.as_dict(), cfg.float_digits), nl=False)
    if report.passed:
        return
    for trial in report.failures:
        typer.echo(f"# trial {trial.index}", err=True)
        for w in trial.witnesses:
            typer.echo(f"# [{w.theorem}] {w.kind.value} {list(w.items)}: {w.detail}", err=True)
        typer.echo(format_edge_list(trial.graph), err=True, nl=False)
    raise typer.Exit(EXIT_COUNTEREXAMPLE)


@app.command("family-table")
def family_table(
    family: str = typer.Option("star3", "--family", help="star1 (K_{1,m}) or star3"),
    m_from: int = typer.Option(3, "--m-from"),
    m_to: int = typer.Option(30, "--m-to"),
) -> None:
    """Closed-form versus numeric energy for a star family, as CSV."""
    if family not in set(StarFamily):
        raise typer.BadParameter("choose star1 or star3", param_hint="--family")
    cfg = get_settings()
    rows = energy_table(family, m_from, m_to, cfg)
    table = dumps_csv(ENERGY_TABLE_HEADER, (r.csv_row() for r in rows), cfg.float_digits)
    typer.echo(table, nl=False)


@app.command()
def discrepancy(
    m_from: int = typer.Option(2, "--m-from"),
    m_to: int = typer.Option(50, "--m-to"),
) -> None:
    """Direct versus published radicand of the length-2 star cubic, as JSON."""
    cfg = get_settings()
    typer.echo(dumps_json(discrepancy_summary(m_from, m_to), cfg.float_digits), nl=False)


# ── Entry points ─────────────────────────────────────────────────────────────


def run(argv: list[str]) -> int:
    """Run the CLI on *argv* and return the exit code instead of exiting."""
    try:
        rv = app(args=argv, prog_name="cover-energy", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.Abort:
        typer.echo("Aborted.", err=True)
        return EXIT_USAGE
    except CoverEnergyError as exc:
        typer.echo(f"Error: {exc}", err=True)
        return EXIT_USAGE
    except OSError as exc:
        typer.echo(f"Error: {exc}", err=True)
        return EXIT_IO
    return rv if isinstance(rv, int) else EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
