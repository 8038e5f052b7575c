"""Value objects for coverings, edge/vertex classifications and theorem reports."""

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from cover_energy.errors import InvalidCoverError
from cover_energy.graph.models import Edge, Graph


class CoverKind(enum.StrEnum):
    """Which family of paths a cover set is meant to hit."""

    TWO = "2-covering"
    THREE = "3-covering"

    @property
    def k(self) -> int:
        return 2 if self is CoverKind.TWO else 3

    @classmethod
    def from_k(cls, k: int) -> "CoverKind":
        if k == 2:
            return cls.TWO
        if k == 3:
            return cls.THREE
        raise ValueError(f"only 2- and 3-coverings are supported, got k={k}")


@dataclass(frozen=True)
class CoverSet:
    """A sorted, duplicate-free set of vertex ids proposed as a covering.

    Use :meth:`of` to build one from any iterable; it sorts and de-duplicates.
    """

    members: tuple[int, ...]
    kind: CoverKind = CoverKind.THREE
    _lookup: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if list(self.members) != sorted(set(self.members)):
            raise InvalidCoverError(f"cover members must be sorted and unique: {self.members}")
        if any(v < 0 for v in self.members):
            raise InvalidCoverError(f"negative vertex id in cover: {self.members}")
        object.__setattr__(self, "_lookup", frozenset(self.members))

    @classmethod
    def of(cls, members: Iterable[int], kind: CoverKind = CoverKind.THREE) -> "CoverSet":
        return cls(members=tuple(sorted(set(members))), kind=kind)

    @classmethod
    def parse(cls, text: str, kind: CoverKind = CoverKind.THREE) -> "CoverSet":
        """Parse a comma-separated id list such as `"0,3,5"` (empty string → empty set)."""
        tokens = [t.strip() for t in text.split(",") if t.strip()]
        try:
            return cls.of((int(t) for t in tokens), kind)
        except ValueError:
            raise InvalidCoverError(f"cover must be comma-separated integers, got {text!r}")

    def validate_for(self, g: Graph) -> "CoverSet":
        """Return self after checking every member is a vertex of *g*."""
        if self.members and self.members[-1] >= g.n:
            raise InvalidCoverError(
                f"cover vertex {self.members[-1]} out of range for graph with n={g.n}"
            )
        return self

    def union(self, extra: Iterable[int]) -> "CoverSet":
        return CoverSet.of([*self.members, *extra], self.kind)

    @property
    def size(self) -> int:
        return len(self.members)

    def as_frozenset(self) -> frozenset[int]:
        return self._lookup

    def __contains__(self, v: object) -> bool:
        return v in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def as_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "size": self.size, "members": list(self.members)}


class EdgeClass(enum.StrEnum):
    """Verdict for one edge relative to a candidate set Q."""

    COVERED = "covered"
    PENDANT2 = "2-pendant"
    HANDLE = "handle"
    TRIANGLE = "triangle"
    VIOLATION = "violation"


@dataclass(frozen=True)
class EdgeClassification:
    """Classification of a single edge.

    A non-covered edge may carry both `HANDLE` and `TRIANGLE`. `VIOLATION`
    comes with at least one human-readable reason.
    """

    edge: Edge
    classes: frozenset[EdgeClass]
    reasons: tuple[str, ...] = ()

    @property
    def is_covered(self) -> bool:
        return EdgeClass.COVERED in self.classes

    @property
    def is_violation(self) -> bool:
        return EdgeClass.VIOLATION in self.classes

    def as_dict(self) -> dict[str, Any]:
        return {
            "edge": list(self.edge),
            "classes": sorted(c.value for c in self.classes),
            "reasons": list(self.reasons),
        }


class VertexCaseKind(enum.StrEnum):
    """The alternatives a vertex can satisfy with respect to a 3-covering."""

    IN_Q = "in-q"
    PENDANT_OF_1_PATH = "pendant-of-1-path"
    PENDANT_OF_2_PATH = "pendant-of-2-path"
    MIDDLE_OF_2_PENDANT_PATH = "middle-of-2-pendant-path"
    V_PATH = "v-path"
    HANDLE_MIDDLE_ENDPOINT = "handle-middle-endpoint"
    TRIANGLE_EDGE_ENDPOINT = "triangle-edge-endpoint"


@dataclass(frozen=True)
class VertexCase:
    """Every case a vertex satisfies (possibly several)."""

    vertex: int
    cases: frozenset[VertexCaseKind]

    def as_dict(self) -> dict[str, Any]:
        return {"vertex": self.vertex, "cases": sorted(c.value for c in self.cases)}


class WitnessKind(enum.StrEnum):
    VERTEX = "vertex"
    EDGE = "edge"
    PATH = "path"
    GRAPH = "graph"


@dataclass(frozen=True)
class Witness:
    """One counterexample: the offending vertex, edge or path plus what was violated."""

    theorem: str
    kind: WitnessKind
    items: tuple[int, ...]
    detail: str

    def as_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "kind": self.kind.value,
            "items": list(self.items),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one theorem check; it passes exactly when no witness was found."""

    theorem: str
    witnesses: tuple[Witness, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.witnesses

    def as_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }
