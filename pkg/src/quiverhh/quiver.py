"""Finite quivers, paths and walks.

Vertices and arrows are identified by their position in the defining
tuples; display names are metadata.  Paths store their arrows in
traversal order (first-traversed first).  The conventional right-to-left
product notation is only used when rendering, see :func:`path_str`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CompositionError


@dataclass(frozen=True)
class Quiver:
    vertex_names: tuple
    arrows: tuple  # (name, source vertex id, target vertex id)

    def __post_init__(self):
        n = len(self.vertex_names)
        if len(set(self.vertex_names)) != n:
            raise ValueError("vertex names must be unique")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        for name, s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError(f"arrow {name} has an invalid endpoint")

    # -- accessors -----------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertex_names)

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def source(self, a: int) -> int:
        return self.arrows[a][1]

    def target(self, a: int) -> int:
        return self.arrows[a][2]

    def arrow_name(self, a: int) -> str:
        return self.arrows[a][0]

    @cached_property
    def arrow_index(self) -> dict:
        return {arr[0]: i for i, arr in enumerate(self.arrows)}

    @cached_property
    def vertex_index(self) -> dict:
        return {name: i for i, name in enumerate(self.vertex_names)}

    @cached_property
    def arrows_from(self) -> tuple:
        out = [[] for _ in self.vertex_names]
        for i, (_, s, _) in enumerate(self.arrows):
            out[s].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def arrows_into(self) -> tuple:
        inc = [[] for _ in self.vertex_names]
        for i, (_, _, t) in enumerate(self.arrows):
            inc[t].append(i)
        return tuple(tuple(x) for x in inc)

    # -- path construction ---------------------------------------------------

    def trivial_path(self, v: int) -> "Path":
        return Path(v, v, ())

    def path(self, arrow_ids) -> "Path":
        ids = tuple(arrow_ids)
        if not ids:
            raise CompositionError("a nontrivial path needs at least one arrow")
        for prev, nxt in zip(ids, ids[1:]):
            if self.target(prev) != self.source(nxt):
                raise CompositionError(
                    f"arrow {self.arrow_name(nxt)} does not continue {self.arrow_name(prev)}"
                )
        return Path(self.source(ids[0]), self.target(ids[-1]), ids)

    def arrow_path(self, a: int) -> "Path":
        return Path(self.source(a), self.target(a), (a,))


@dataclass(frozen=True)
class Path:
    """Oriented path; ``arrows`` is empty exactly for the trivial path."""

    source: int
    target: int
    arrows: tuple

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self) -> tuple:
        return (len(self.arrows), self.arrows, self.source)

    def subpaths(self, length: int):
        for i in range(len(self.arrows) - length + 1):
            yield self.arrows[i : i + length]


def compose(later: Path, earlier: Path) -> Path:
    """Concatenation realizing the right-to-left product ``later * earlier``."""
    if later.source != earlier.target:
        raise CompositionError("paths do not compose: endpoint mismatch")
    return Path(earlier.source, later.target, earlier.arrows + later.arrows)


def parallel(p: Path, q: Path) -> bool:
    return p.source == q.source and p.target == q.target


def path_str(Q: Quiver, p: Path) -> str:
    """Right-to-left rendering; trivial paths show as ``(vertex)``."""
    if not p.arrows:
        return f"({Q.vertex_names[p.source]})"
    return ".".join(Q.arrow_name(a) for a in reversed(p.arrows))


# -- connectivity ------------------------------------------------------------


def connected_components(Q: Quiver) -> list:
    """Partition of vertex ids by underlying-graph connectivity, each sorted."""
    parent = list(range(Q.num_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, s, t in Q.arrows:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    groups: dict = {}
    for v in range(Q.num_vertices):
        groups.setdefault(find(v), []).append(v)
    return [sorted(g) for _, g in sorted(groups.items())]


def component_of(Q: Quiver, v: int) -> int:
    """Index of the component containing ``v`` in ``connected_components``."""
    for i, comp in enumerate(connected_components(Q)):
        if v in comp:
            return i
    raise ValueError(f"vertex {v} not in quiver")


def betti(Q: Quiver) -> int:
    """First Betti number of the underlying graph: arrows - vertices + components."""
    return Q.num_arrows - Q.num_vertices + len(connected_components(Q))


# -- arrow classifications ----------------------------------------------------


def is_source_arrow(Q: Quiver, a: int) -> bool:
    s, t = Q.source(a), Q.target(a)
    if Q.arrows_into[s]:
        return False
    if any(b != a for b in Q.arrows_from[s]):
        return False
    if any(b != a for b in Q.arrows_into[t]):
        return False
    return True


def is_sink_arrow(Q: Quiver, a: int) -> bool:
    s, t = Q.source(a), Q.target(a)
    if Q.arrows_from[t]:
        return False
    if any(b != a for b in Q.arrows_into[t]):
        return False
    if any(b != a for b in Q.arrows_from[s]):
        return False
    return True


def crown_order(Q: Quiver):
    """n if the quiver is a cyclically oriented n-cycle, else None."""
    n = Q.num_vertices
    if n == 0 or Q.num_arrows != n:
        return None
    succ = {}
    for _, s, t in Q.arrows:
        if s in succ:
            return None
        succ[s] = t
    seen = set()
    v = 0
    for _ in range(n):
        if v in seen or v not in succ:
            return None
        seen.add(v)
        v = succ[v]
    return n if v == 0 and len(seen) == n else None


# -- walks ---------------------------------------------------------------------

FORWARD = 1
INVERSE = -1


@dataclass(frozen=True)
class Walk:
    """Walk in the underlying graph; steps are (arrow id, direction)."""

    source: int
    target: int
    steps: tuple

    @property
    def length(self) -> int:
        return len(self.steps)


def trivial_walk(v: int) -> Walk:
    return Walk(v, v, ())


def walk_of_path(p: Path) -> Walk:
    return Walk(p.source, p.target, tuple((a, FORWARD) for a in p.arrows))


def arrow_walk(Q: Quiver, a: int, direction: int = FORWARD) -> Walk:
    if direction == FORWARD:
        return Walk(Q.source(a), Q.target(a), ((a, FORWARD),))
    return Walk(Q.target(a), Q.source(a), ((a, INVERSE),))


def walk_compose(later: Walk, earlier: Walk) -> Walk:
    if later.source != earlier.target:
        raise CompositionError("walks do not compose: endpoint mismatch")
    return Walk(earlier.source, later.target, earlier.steps + later.steps)


def walk_inverse(w: Walk) -> Walk:
    return Walk(w.target, w.source, tuple((a, -d) for a, d in reversed(w.steps)))


def walk_reduce(w: Walk) -> Walk:
    """Cancel adjacent mutually inverse steps until none remain."""
    stack: list = []
    for step in w.steps:
        if stack and stack[-1][0] == step[0] and stack[-1][1] == -step[1]:
            stack.pop()
        else:
            stack.append(step)
    return Walk(w.source, w.target, tuple(stack))


def walk_is_valid(Q: Quiver, w: Walk) -> bool:
    at = w.source
    for a, d in w.steps:
        frm, to = (Q.source(a), Q.target(a)) if d == FORWARD else (Q.target(a), Q.source(a))
        if frm != at:
            return False
        at = to
    return at == w.target


def signed_count(w: Walk, arrow: int) -> int:
    """Net signed number of times ``arrow`` is traversed by the reduced walk."""
    return sum(d for a, d in walk_reduce(w).steps if a == arrow)
