"""Edge colorings, side constraints and solver results."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from ..graph import Graph


class Color(enum.IntEnum):
    BLUE = 0
    RED = 1

    @property
    def other(self) -> Color:
        return Color(1 - self)

    @classmethod
    def parse(cls, text: str) -> Color:
        key = text.strip().upper()
        if key in ("B", "BLUE"):
            return cls.BLUE
        if key in ("R", "RED"):
            return cls.RED
        raise ValueError(f"unknown color {text!r}")


BLUE = Color.BLUE
RED = Color.RED


@dataclass(frozen=True)
class EdgeColoring:
    """Total coloring: ``colors[i]`` is the color of edge handle ``i``."""

    colors: tuple[Color, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(Color(c) for c in self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, edge: int) -> Color:
        return self.colors[edge]

    @classmethod
    def from_blue_mask(cls, mask: int, m: int) -> EdgeColoring:
        return cls(tuple(BLUE if mask >> i & 1 else RED for i in range(m)))

    @classmethod
    def uniform(cls, m: int, color: Color) -> EdgeColoring:
        return cls((color,) * m)

    @property
    def blue_mask(self) -> int:
        mask = 0
        for i, c in enumerate(self.colors):
            if c == BLUE:
                mask |= 1 << i
        return mask

    def edges_of(self, color: Color) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == color]

    def to_lines(self, g: Graph) -> str:
        """Serialize as ``u v COLOR`` lines in canonical edge order."""
        if len(self.colors) != g.m:
            raise ValueError(f"coloring has {len(self.colors)} edges, graph has {g.m}")
        return "".join(f"{u} {v} {c.name}\n" for (u, v), c in zip(g.edges, self.colors))

    @classmethod
    def from_lines(cls, g: Graph, text: str) -> EdgeColoring:
        colors: dict[int, Color] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            u, v, c = line.split()
            colors[g.edge_index(int(u), int(v))] = Color.parse(c)
        if len(colors) != g.m:
            raise ValueError(f"witness colors {len(colors)} of {g.m} edges")
        return cls(tuple(colors[i] for i in range(g.m)))


class PartialColoring(Mapping[int, Color]):
    """Fixed colors for a subset of edge handles.

    Assigning one edge both colors does not raise; the clash is recorded in
    ``conflicts`` and solvers report it as an immediate (pre-conflict)
    unsatisfiable result.
    """

    def __init__(self, pairs: Iterable[tuple[int, Color]] | Mapping[int, Color] = ()):
        if isinstance(pairs, Mapping):
            pairs = pairs.items()
        colors: dict[int, Color] = {}
        conflicts: set[int] = set()
        for edge, color in pairs:
            color = Color(color)
            if colors.get(edge, color) != color:
                conflicts.add(edge)
            colors[edge] = color
        self._colors = dict(sorted(colors.items()))
        self.conflicts = frozenset(conflicts)

    @classmethod
    def edges(cls, edges: Iterable[int], color: Color) -> PartialColoring:
        return cls((e, color) for e in edges)

    def __or__(self, other: PartialColoring) -> PartialColoring:
        merged = PartialColoring(list(self.items()) + list(other.items()))
        merged.conflicts = merged.conflicts | self.conflicts | other.conflicts
        return merged

    def __getitem__(self, edge: int) -> Color:
        return self._colors[edge]

    def __iter__(self) -> Iterator[int]:
        return iter(self._colors)

    def __len__(self) -> int:
        return len(self._colors)

    def __repr__(self) -> str:
        body = ", ".join(f"{e}:{c.name[0]}" for e, c in self._colors.items())
        return f"PartialColoring({{{body}}})"

    @property
    def consistent(self) -> bool:
        return not self.conflicts

    def agrees_with(self, coloring: EdgeColoring) -> bool:
        return self.consistent and all(coloring[e] == c for e, c in self._colors.items())


@dataclass(frozen=True)
class SideClause:
    """Disjunction of (edge, required color) literals: at least one must hold."""

    literals: tuple[tuple[int, Color], ...]

    def __post_init__(self):
        lits = tuple((int(e), Color(c)) for e, c in self.literals)
        if not lits:
            raise ValueError("side clause must not be empty")
        if len({e for e, _ in lits}) != len(lits):
            raise ValueError("side clause repeats an edge")
        object.__setattr__(self, "literals", lits)

    def satisfied_by(self, coloring: EdgeColoring) -> bool:
        return any(coloring[e] == c for e, c in self.literals)


def not_monochromatic(edges: Sequence[int]) -> list[SideClause]:
    """Two clauses forcing ``edges`` to use both colors."""
    return [
        SideClause(tuple((e, BLUE) for e in edges)),
        SideClause(tuple((e, RED) for e in edges)),
    ]


class Verdict(str, enum.Enum):
    SATISFIABLE = "SAT"
    UNSATISFIABLE = "UNSAT"
    INDETERMINATE = "INDETERMINATE"


@dataclass
class SolveStats:
    engine: str = ""
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    elapsed: float = 0.0
    pre_conflict: bool = False

    def summary(self) -> str:
        text = (
            f"engine={self.engine} decisions={self.decisions} "
            f"propagations={self.propagations} conflicts={self.conflicts}"
        )
        if self.pre_conflict:
            text += " pre-conflict"
        return text


@dataclass
class SolveResult:
    """Outcome of an arrowing query.

    UNSATISFIABLE means no coloring avoids a blue p-clique and a red
    q-clique under the given constraints, i.e. the graph arrows (p, q).
    """

    verdict: Verdict
    witness: EdgeColoring | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    reason: str = ""
    # Per-engine or per-cube sub-results, when the query fanned out.
    runs: list[SolveResult] = field(default_factory=list)

    @property
    def satisfiable(self) -> bool:
        return self.verdict is Verdict.SATISFIABLE

    @property
    def unsatisfiable(self) -> bool:
        return self.verdict is Verdict.UNSATISFIABLE

    @property
    def indeterminate(self) -> bool:
        return self.verdict is Verdict.INDETERMINATE
