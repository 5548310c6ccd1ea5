"""Commuting graphs, extended commuting graphs and (star) knit degrees.

A left path is a path ``x1 - ... - xn`` with ``x1 != xn`` and
``x1*xi == xn*xi`` for every vertex ``xi`` on it.  Once the endpoints ``a, b``
are fixed the condition constrains each vertex independently, so the shortest
left path between them is a BFS inside ``{v : a*v == b*v}``.  The knit degree
is the minimum over all endpoint pairs; pairs are scanned in index order so
witnesses are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CommutativeSemigroupError
from .graph import SimpleGraph, _bits
from .semigroup import Semigroup


@dataclass(frozen=True)
class LeftPathResult:
    exists: bool
    length: int | None = None
    witness: tuple[str, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"exists": self.exists}
        if self.exists:
            out["length"] = self.length
            out["witness"] = list(self.witness)
        return out

    @classmethod
    def from_json(cls, data) -> LeftPathResult:
        if not data["exists"]:
            return cls(False)
        return cls(True, int(data["length"]), tuple(data["witness"]))


NO_PATH = LeftPathResult(False)


def non_central(s: Semigroup) -> list[int]:
    z = s.center
    return [x for x in range(len(s)) if x not in z]


def _commuting_on(s: Semigroup, elements: list[int]) -> SimpleGraph:
    t = s.table
    rows = []
    for a in elements:
        r = 0
        for j, b in enumerate(elements):
            if a != b and t[a][b] == t[b][a]:
                r |= 1 << j
        rows.append(r)
    return SimpleGraph(tuple(s.labels[x] for x in elements), tuple(rows))


def commuting_graph(s: Semigroup) -> SimpleGraph:
    """Graph on the non-central elements; distinct ``x, y`` adjacent iff ``xy = yx``."""
    if s.is_commutative:
        raise CommutativeSemigroupError()
    return _commuting_on(s, non_central(s))


def extended_commuting_graph(s: Semigroup) -> SimpleGraph:
    return _commuting_on(s, list(range(len(s))))


def _shortest_left_path(s: Semigroup, elements: list[int], g: SimpleGraph) -> LeftPathResult:
    t = s.table
    m = len(elements)
    rows = g.rows
    best: tuple[int, list[int]] | None = None
    for i in range(m):
        a = elements[i]
        ta = t[a]
        for j in range(i + 1, m):
            b = elements[j]
            tb = t[b]
            if ta[a] != tb[a] or ta[b] != tb[b]:
                continue
            allowed = 0
            for p, v in enumerate(elements):
                if ta[v] == tb[v]:
                    allowed |= 1 << p
            path = _bfs_path(rows, i, j, allowed)
            if path is not None and (best is None or len(path) - 1 < best[0]):
                best = (len(path) - 1, path)
                if best[0] == 1:
                    break
        if best is not None and best[0] == 1:
            break
    if best is None:
        return NO_PATH
    length, path = best
    return LeftPathResult(True, length, tuple(g.vertices[p] for p in path))


def _bfs_path(rows, src: int, dst: int, allowed: int) -> list[int] | None:
    parent = {src: -1}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in _bits(rows[u] & allowed):
            if w in parent:
                continue
            parent[w] = u
            if w == dst:
                path = [w]
                while parent[path[-1]] >= 0:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def knit_degree(s: Semigroup, graph: SimpleGraph | None = None) -> LeftPathResult:
    """Shortest left path in the commuting graph (``exists=False`` if there is none)."""
    if s.is_commutative:
        raise CommutativeSemigroupError("knit degree")
    g = graph if graph is not None else commuting_graph(s)
    return _shortest_left_path(s, non_central(s), g)


def star_knit_degree(s: Semigroup, graph: SimpleGraph | None = None) -> LeftPathResult:
    """Shortest left path in the extended commuting graph."""
    g = graph if graph is not None else extended_commuting_graph(s)
    return _shortest_left_path(s, list(range(len(s))), g)


def left_path_problems(s: Semigroup, g: SimpleGraph, witness) -> list[str]:
    """Everything wrong with ``witness`` as a left path of ``g``; empty when valid."""
    problems = []
    witness = list(witness)
    if len(witness) < 2:
        return ["a left path needs at least two vertices"]
    for lab in witness:
        if lab not in g._index:
            problems.append(f"{lab!r} is not a vertex of the graph")
    if problems:
        return problems
    if len(set(witness)) != len(witness):
        problems.append("vertices repeat")
    for u, v in zip(witness, witness[1:]):
        if not g.adjacent(g.index(u), g.index(v)):
            problems.append(f"{u!r} and {v!r} are not adjacent")
    first, last = s.index(witness[0]), s.index(witness[-1])
    if first == last:
        problems.append("endpoints coincide")
    t = s.table
    for lab in witness:
        x = s.index(lab)
        if t[first][x] != t[last][x]:
            problems.append(f"{witness[0]}*{lab} != {witness[-1]}*{lab}")
    return problems


def has_xy_pair(s: Semigroup) -> bool:
    """Distinct non-central ``x, y`` with ``x*x == y*x`` and ``y*y == x*y``."""
    t = s.table
    nc = non_central(s)
    return any(
        t[x][x] == t[y][x] and t[y][y] == t[x][y]
        for i, x in enumerate(nc)
        for y in nc[i + 1:]
    )
