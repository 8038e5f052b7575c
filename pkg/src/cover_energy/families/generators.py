"""Graph generators: generalized stars, paths, cycles, complete graphs and seeded random graphs."""

from dataclasses import dataclass

import numpy as np

from cover_energy.errors import InvalidParamsError
from cover_energy.graph.core import new_graph
from cover_energy.graph.models import Graph


@dataclass(frozen=True)
class StarParams:
    """Generalized star with `m` rays, each a path of `ray_len` edges hanging off the center.

    The graph has `1 + m * ray_len` vertices, i.e. `m*n - m + 1` with
    `n = ray_len + 1` vertices per ray path.
    """

    m: int
    ray_len: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise InvalidParamsError(f"a generalized star needs m >= 2 rays, got m={self.m}")
        if self.ray_len < 1:
            raise InvalidParamsError(f"ray length must be >= 1, got {self.ray_len}")

    @property
    def order(self) -> int:
        return 1 + self.m * self.ray_len

    def vertex(self, ring: int, ray: int) -> int:
        """Id of the ring-`ring` vertex on ray `ray` (both 1-based); the center is 0."""
        return (ring - 1) * self.m + ray


def gen_star_rays(p: StarParams) -> Graph:
    """Generalized star: center 0, ring-k vertex of ray i at `(k-1)*m + i`.

    With `ray_len = 1` this is `K_{1,m}`; with `m = 2, ray_len = 2` it is the
    path on five vertices `3-1-0-2-4`.
    """
    edges = [(0, p.vertex(1, i)) for i in range(1, p.m + 1)]
    edges += [
        (p.vertex(k - 1, i), p.vertex(k, i))
        for k in range(2, p.ray_len + 1)
        for i in range(1, p.m + 1)
    ]
    return new_graph(p.order, edges)


def star_graph(m: int, ray_len: int = 1) -> Graph:
    return gen_star_rays(StarParams(m=m, ray_len=ray_len))


def gen_path(n: int) -> Graph:
    """Path `0 - 1 - ... - (n-1)`."""
    if n < 0:
        raise InvalidParamsError(f"path order must be >= 0, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    """Cycle on `n >= 3` vertices."""
    if n < 3:
        raise InvalidParamsError(f"a cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    if n < 0:
        raise InvalidParamsError(f"complete graph order must be >= 0, got {n}")
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the `C(n, 2)` pairs is an edge independently with probability *p*.

    Uses numpy's PCG64 generator, so the same `(n, p, seed)` always gives the
    same graph.
    """
    if n < 0:
        raise InvalidParamsError(f"random graph order must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError(f"edge probability must lie in [0, 1], got {p}")
    if seed < 0:
        raise InvalidParamsError(f"seed must be >= 0, got {seed}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.shape[0]) < p
    return new_graph(n, zip(iu[keep].tolist(), ju[keep].tolist(), strict=True))
