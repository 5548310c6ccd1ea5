"""Exact graph invariants: diameter, girth, clique number, chromatic number.

``INF`` (``math.inf``) stands for an infinite distance or girth; it compares
greater than every integer.  In JSON it is written as the string ``"inf"``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Union

from .errors import CapExceededError, GraphError
from .graph import SimpleGraph, _bits

INF = math.inf
ExtNat = Union[int, float]

DEFAULT_CLIQUE_CAP = 64
DEFAULT_CHI_CAP = 32


def ext_to_json(value: ExtNat):
    return "inf" if value == INF else int(value)


def ext_from_json(value) -> ExtNat:
    return INF if value == "inf" else int(value)


@dataclass(frozen=True)
class InvariantReport:
    connected: bool
    diameter: ExtNat
    girth: ExtNat
    clique_number: int
    chromatic_number: int

    def to_json(self) -> dict:
        return {
            "connected": self.connected,
            "diameter": ext_to_json(self.diameter),
            "girth": ext_to_json(self.girth),
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
        }

    @classmethod
    def from_json(cls, data) -> InvariantReport:
        return cls(
            connected=bool(data["connected"]),
            diameter=ext_from_json(data["diameter"]),
            girth=ext_from_json(data["girth"]),
            clique_number=int(data["clique_number"]),
            chromatic_number=int(data["chromatic_number"]),
        )


def invariant_report(
    g: SimpleGraph, clique_cap: int = DEFAULT_CLIQUE_CAP, chi_cap: int = DEFAULT_CHI_CAP
) -> InvariantReport:
    d = diameter(g)
    w = clique_number(g, cap=clique_cap)
    return InvariantReport(
        connected=d != INF,
        diameter=d,
        girth=girth(g),
        clique_number=w,
        chromatic_number=chromatic_number(g, cap=chi_cap, clique_hint=w),
    )


# -- distances ------------------------------------------------------------

def bfs_levels(g: SimpleGraph, source: int, allowed: int | None = None) -> dict[int, int]:
    """Distances from ``source`` to every reachable vertex inside ``allowed``."""
    if allowed is None:
        allowed = (1 << len(g)) - 1
    rows = g.rows
    dist = {source: 0}
    seen = 1 << source
    frontier = [source]
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for u in frontier:
            nxt |= rows[u]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = list(_bits(nxt))
        for v in frontier:
            dist[v] = level
    return dist


def eccentricity(g: SimpleGraph, v: int) -> ExtNat:
    dist = bfs_levels(g, v)
    if len(dist) < len(g):
        return INF
    return max(dist.values())


def diameter(g: SimpleGraph) -> ExtNat:
    """Largest distance between two vertices; ``INF`` when disconnected."""
    if len(g) == 0:
        raise GraphError("diameter of a graph with no vertices is undefined")
    best = 0
    for v in range(len(g)):
        e = eccentricity(g, v)
        if e == INF:
            return INF
        best = max(best, e)
    return best


def is_connected(g: SimpleGraph) -> bool:
    return len(g) == 0 or len(bfs_levels(g, 0)) == len(g)


def girth(g: SimpleGraph) -> ExtNat:
    """Length of a shortest cycle, or ``INF`` for a forest.

    BFS from every root; a non-tree edge ``u - w`` closes a closed walk of
    length ``dist[u] + dist[w] + 1`` through the root, and the minimum over all
    roots is attained by a genuine shortest cycle.
    """
    best = INF
    rows = g.rows
    for root in range(len(g)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # every cycle still to be found here has length >= 2 * dist[u]
            if 2 * dist[u] >= best:
                break
            for w in _bits(rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
        if best == 3:
            return 3
    return best


# -- cliques ----------------------------------------------------------------

def _color_sort(rows, cand: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand``; returns vertices and their colour numbers, ascending."""
    order, bounds = [], []
    remaining = cand
    color = 0
    while remaining:
        color += 1
        avail = remaining
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append(v)
            bounds.append(color)
            remaining ^= low
            avail &= ~rows[v] & ~low
    return order, bounds


def max_clique(g: SimpleGraph, cap: int = DEFAULT_CLIQUE_CAP) -> list[int]:
    """A maximum clique, found by branch and bound with a colouring bound."""
    n = len(g)
    if n > cap:
        raise CapExceededError("clique search vertex count", n, cap, "--clique-cap")
    if n == 0:
        return []
    rows = g.rows
    best: list[int] = [0]

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order, bounds = _color_sort(rows, cand)
        for v, b in zip(reversed(order), reversed(bounds)):
            if len(current) + b <= len(best):
                return
            current.append(v)
            sub = cand & rows[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(best)


def clique_number(g: SimpleGraph, cap: int = DEFAULT_CLIQUE_CAP) -> int:
    return len(max_clique(g, cap=cap))


# -- colouring --------------------------------------------------------------

def greedy_coloring(g: SimpleGraph) -> list[int]:
    """DSATUR greedy colouring (an upper bound for the chromatic number)."""
    n = len(g)
    rows = g.rows
    colors = [-1] * n
    classes: list[int] = []
    degree = [r.bit_count() for r in rows]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sum(1 for m in classes if rows[u] & m), degree[u], -u),
        )
        c = next((k for k, m in enumerate(classes) if not rows[v] & m), len(classes))
        if c == len(classes):
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
    return colors


def k_coloring(g: SimpleGraph, k: int) -> list[int] | None:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists."""
    n = len(g)
    if n == 0:
        return []
    if k <= 0:
        return None
    rows = g.rows
    degree = [r.bit_count() for r in rows]
    colors = [-1] * n
    classes = [0] * k

    def pick() -> int:
        best_v, best_key = -1, None
        for u in range(n):
            if colors[u] >= 0:
                continue
            sat = 0
            for m in classes:
                if rows[u] & m:
                    sat += 1
            key = (sat, degree[u])
            if best_key is None or key > best_key:
                best_v, best_key = u, key
        return best_v

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        # new colours are interchangeable, so only the first unused one is tried
        for c in range(min(used + 1, k)):
            if rows[v] & classes[c]:
                continue
            colors[v] = c
            classes[c] |= 1 << v
            if solve(colored + 1, max(used, c + 1)):
                return True
            classes[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return list(colors) if solve(0, 0) else None


def chromatic_number(g: SimpleGraph, cap: int = DEFAULT_CHI_CAP, clique_hint: int | None = None) -> int:
    n = len(g)
    if n > cap:
        raise CapExceededError("exact colouring vertex count", n, cap, "--chi-cap")
    if n == 0:
        return 0
    lower = clique_hint if clique_hint is not None else clique_number(g, cap=max(cap, n))
    upper = max(greedy_coloring(g)) + 1
    for k in range(lower, upper):
        if k_coloring(g, k) is not None:
            return k
    return upper


def is_proper_coloring(g: SimpleGraph, colors) -> bool:
    return all(colors[i] != colors[j] for i, j in g.edges())
