"""Run the theorem checks over the seeded random corpus.

Per trial:

- the edge characterization is compared with the direct 3-path check on a
  random candidate set;
- the distance, vertex-case and characterization checks run on the exact
  minimum 3-covering and on a random superset of it;
- for small graphs the exact search is compared with exhaustive search.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Any

from cover_energy.config import Settings, get_settings
from cover_energy.covering.models import CoverSet, TheoremReport, Witness, WitnessKind
from cover_energy.covering.search import (
    is_3_covering,
    min_3_covering_bruteforce,
    min_3_covering_exact,
)
from cover_energy.covering.theorems import (
    check_characterization,
    check_distance_theorems,
    check_vertex_cases,
)
from cover_energy.errors import InvalidParamsError
from cover_energy.graph.models import Graph
from cover_energy.output import write_ndjson
from cover_energy.reporter import NullReporter, ProgressReporter
from cover_energy.verification.corpus import MIN_TRIAL_ORDER, draw_trial

logger = logging.getLogger(__name__)

ORACLE_CHECK = "exact-vs-bruteforce"
ORACLE_MAX_N = 10


# ── Value objects ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class TrialResult:
    """Everything one trial drew and every report it produced."""

    index: int
    p: float
    graph: Graph
    candidate: CoverSet
    min_cover: CoverSet
    superset: CoverSet
    reports: tuple[TheoremReport, ...]
    oracle_checked: bool = False

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    @property
    def witnesses(self) -> tuple[Witness, ...]:
        return tuple(w for r in self.reports for w in r.witnesses)

    def as_dict(self) -> dict[str, Any]:
        return {
            "trial": self.index,
            "n": self.n,
            "p": self.p,
            "edges": [list(e) for e in self.graph.sorted_edges()],
            "candidate": list(self.candidate.members),
            "candidate_is_3_covering": is_3_covering(self.graph, self.candidate),
            "min_cover": list(self.min_cover.members),
            "superset": list(self.superset.members),
            "oracle_checked": self.oracle_checked,
            "passed": self.passed,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate over all trials, in trial order."""

    seed: int
    max_n: int
    trials: tuple[TrialResult, ...]

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.trials)

    @property
    def failures(self) -> tuple[TrialResult, ...]:
        return tuple(t for t in self.trials if not t.passed)

    def witness_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for t in self.trials:
            for w in t.witnesses:
                counts[w.theorem] = counts.get(w.theorem, 0) + 1
        return dict(sorted(counts.items()))

    def as_dict(self) -> dict[str, Any]:
        return {
            "trials": len(self.trials),
            "seed": self.seed,
            "max_n": self.max_n,
            "passed": self.passed,
            "failed_trials": [t.index for t in self.failures],
            "candidates_covering": sum(
                1 for t in self.trials if is_3_covering(t.graph, t.candidate)
            ),
            "oracle_comparisons": sum(1 for t in self.trials if t.oracle_checked),
            "witness_counts": self.witness_counts(),
        }

    def write_records(self, path: Path, digits: int = 12) -> Path:
        """One NDJSON line per trial."""
        return write_ndjson((t.as_dict() for t in self.trials), path, digits)


# ── Checks ───────────────────────────────────────────────────────────────────


def _oracle_report(g: Graph, exact: CoverSet, settings: Settings) -> TheoremReport:
    witnesses: list[Witness] = []
    if not is_3_covering(g, exact):
        witnesses.append(
            Witness(ORACLE_CHECK, WitnessKind.GRAPH, exact.members, "exact result is not a cover")
        )
    brute = min_3_covering_bruteforce(g, max_n=settings.max_bruteforce_n)
    if brute.size != exact.size:
        witnesses.append(
            Witness(
                ORACLE_CHECK,
                WitnessKind.GRAPH,
                exact.members,
                f"exact size {exact.size} != exhaustive size {brute.size} {list(brute.members)}",
            )
        )
    return TheoremReport(theorem=ORACLE_CHECK, witnesses=tuple(witnesses))


def run_trial(
    index: int,
    seed: int,
    max_n: int,
    settings: Settings,
    oracle_max_n: int = ORACLE_MAX_N,
) -> TrialResult:
    """Draw and check trial *index*. Pure in its arguments, so it can run in a worker."""
    sample = draw_trial(seed, index, max_n, settings)
    g = sample.graph
    min_cover = min_3_covering_exact(g)
    superset = min_cover.union(sample.padding)

    reports = [check_characterization(g, sample.candidate)]
    for q in (min_cover, superset):
        reports += [check_characterization(g, q), check_distance_theorems(g, q)]
        reports.append(check_vertex_cases(g, q))
    oracle_checked = g.n <= oracle_max_n
    if oracle_checked:
        reports.append(_oracle_report(g, min_cover, settings))

    result = TrialResult(
        index=index,
        p=sample.p,
        graph=g,
        candidate=sample.candidate,
        min_cover=min_cover,
        superset=superset,
        reports=tuple(reports),
        oracle_checked=oracle_checked,
    )
    if not result.passed:
        logger.warning("Trial %d (n=%d) produced %d witness(es)", index, g.n, len(result.witnesses))
    return result


# ── Runner ───────────────────────────────────────────────────────────────────


def verify(
    trials: int,
    seed: int,
    max_n: int,
    workers: int = 1,
    settings: Settings | None = None,
    reporter: ProgressReporter | None = None,
    oracle_max_n: int = ORACLE_MAX_N,
) -> VerificationReport:
    """Run *trials* seeded trials and collect their reports in trial order.

    Args:
        trials: Number of trials.
        seed: Master seed; trial `i` is fully determined by `(seed, i)`.
        max_n: Largest graph order drawn (orders start at 3).
        workers: Worker processes; 1 runs in-process.
        settings: Overrides the process-wide settings.
        reporter: Progress sink (default: silent).
        oracle_max_n: Largest order compared against exhaustive search.

    Raises:
        InvalidParamsError: Negative trial count or seed, `max_n < 3` or `workers < 1`.
    """
    if trials < 0:
        raise InvalidParamsError(f"trials must be >= 0, got {trials}")
    if seed < 0:
        raise InvalidParamsError(f"seed must be >= 0, got {seed}")
    if workers < 1:
        raise InvalidParamsError(f"workers must be >= 1, got {workers}")
    cfg = settings or get_settings()
    rep = reporter or NullReporter()
    if max_n < MIN_TRIAL_ORDER:
        raise InvalidParamsError(f"max_n must be >= {MIN_TRIAL_ORDER}, got {max_n}")

    job = partial(run_trial, seed=seed, max_n=max_n, settings=cfg, oracle_max_n=oracle_max_n)
    step = max(1, trials // 10)
    results: list[TrialResult] = []

    def collect(result: TrialResult) -> None:
        results.append(result)
        done = len(results)
        if done % step == 0 or done == trials:
            rep.progress(done, trials, "trials checked")

    logger.info(
        "Verifying %d trial(s), seed=%d, max_n=%d, workers=%d", trials, seed, max_n, workers
    )
    rep.info(f"verifying {trials} trial(s) with seed {seed}, orders 3..{max_n}")
    if workers == 1:
        for i in range(trials):
            collect(job(i))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, trials // (workers * 8))
            for result in pool.map(job, range(trials), chunksize=chunk):
                collect(result)

    report = VerificationReport(seed=seed, max_n=max_n, trials=tuple(results))
    for failure in report.failures:
        rep.error(f"trial {failure.index}: {len(failure.witnesses)} witness(es)")
    if not report.passed:
        rep.warning(f"{len(report.failures)} trial(s) produced counterexamples")
    return report
