"""Exception hierarchy for cover-energy.

Library code raises these; only the CLI turns them into exit codes.
"""


class CoverEnergyError(Exception):
    """Root of every error raised by the library."""


# ── Graph construction / parsing ─────────────────────────────────────────────


class GraphError(CoverEnergyError, ValueError):
    """A graph failed validation."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""

    def __init__(self, vertex: int) -> None:
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class DuplicateEdgeError(GraphError):
    """The same unordered pair was listed twice."""

    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"duplicate edge {{{u}, {v}}}")
        self.edge = (min(u, v), max(u, v))


class VertexOutOfRangeError(GraphError):
    """A vertex id falls outside `[0, n)`."""

    def __init__(self, vertex: int, n: int) -> None:
        super().__init__(f"vertex {vertex} out of range [0, {n})")
        self.vertex = vertex
        self.n = n


class GraphFormatError(GraphError):
    """An edge-list or JSON document could not be parsed."""


# ── Covering ─────────────────────────────────────────────────────────────────


class InvalidCoverError(CoverEnergyError, ValueError):
    """A cover set names vertices the graph does not have."""


class NotConnectedError(CoverEnergyError, ValueError):
    """A theorem check was asked about a disconnected graph."""


class NotACoveringError(CoverEnergyError, ValueError):
    """The supplied set is not a 3-covering of the graph."""


class SizeBoundExceededError(CoverEnergyError, ValueError):
    """Exhaustive search refused a graph above the configured order."""

    def __init__(self, n: int, bound: int) -> None:
        super().__init__(
            f"exhaustive search supports n <= {bound}, got n = {n} "
            "(raise COVER_ENERGY_MAX_N or use the exact method)"
        )
        self.n = n
        self.bound = bound


# ── Families / numerics ──────────────────────────────────────────────────────


class InvalidParamsError(CoverEnergyError, ValueError):
    """Family parameters outside their documented range."""


class ComplexRootsError(CoverEnergyError, ValueError):
    """A cubic handed to the real solver has a complex-conjugate root pair."""


class ConvergenceFailureError(CoverEnergyError, RuntimeError):
    """The symmetric eigensolver hit its sweep cap without converging."""


class ConfigError(CoverEnergyError, ValueError):
    """Configuration file or environment value is invalid."""
