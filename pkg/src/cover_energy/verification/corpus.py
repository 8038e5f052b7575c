"""Seeded random corpus for the theorem checks.

Every trial derives its own generator from `(master seed, trial index)`, so a
trial's graph and candidate sets do not depend on how many trials ran before
it or on which worker process ran it.
"""

import logging
from dataclasses import dataclass

import numpy as np

from cover_energy.config import Settings
from cover_energy.covering.models import CoverSet
from cover_energy.errors import InvalidParamsError
from cover_energy.families.generators import gen_random
from cover_energy.graph.core import is_connected
from cover_energy.graph.models import Graph

logger = logging.getLogger(__name__)

MIN_TRIAL_ORDER = 3
# Chance that a vertex joins the random candidate set / the superset padding
CANDIDATE_PROBABILITY = 0.5
SUPERSET_PROBABILITY = 0.3


def trial_rng(seed: int, index: int) -> np.random.Generator:
    if seed < 0 or index < 0:
        raise InvalidParamsError(f"seed and trial index must be >= 0, got {seed}, {index}")
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def random_connected_graph(rng: np.random.Generator, n: int, p: float, retries: int) -> Graph:
    """Redraw `G(n, p)` until it is connected.

    Raises:
        InvalidParamsError: No connected sample within *retries* draws.
    """
    for attempt in range(1, retries + 1):
        g = gen_random(n, p, int(rng.integers(0, 2**63 - 1)))
        if is_connected(g):
            if attempt > 1:
                logger.debug("Connected G(%d, %.2f) after %d draws", n, p, attempt)
            return g
    raise InvalidParamsError(f"no connected G({n}, {p}) sample in {retries} draws")


def random_subset(rng: np.random.Generator, n: int, probability: float) -> list[int]:
    return np.flatnonzero(rng.random(n) < probability).tolist()


@dataclass(frozen=True)
class TrialSample:
    """A trial's graph and its random candidate set."""

    index: int
    n: int
    p: float
    graph: Graph
    candidate: CoverSet
    padding: tuple[int, ...]


def draw_trial(seed: int, index: int, max_n: int, settings: Settings) -> TrialSample:
    """Draw trial *index*: order in `[3, max_n]`, an edge probability, a connected graph,
    a random candidate set and the extra vertices used to pad the minimum cover."""
    if max_n < MIN_TRIAL_ORDER:
        raise InvalidParamsError(f"max_n must be >= {MIN_TRIAL_ORDER}, got {max_n}")
    rng = trial_rng(seed, index)
    n = int(rng.integers(MIN_TRIAL_ORDER, max_n + 1))
    p = float(settings.edge_probabilities[int(rng.integers(len(settings.edge_probabilities)))])
    graph = random_connected_graph(rng, n, p, settings.connect_retries)
    candidate = CoverSet.of(random_subset(rng, n, CANDIDATE_PROBABILITY))
    padding = tuple(random_subset(rng, n, SUPERSET_PROBABILITY))
    return TrialSample(index, n, p, graph, candidate, padding)
