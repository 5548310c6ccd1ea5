"""Labelled simple graphs, graph join and strong product.

Adjacency is a dense symmetric bit matrix: ``rows[i]`` is an int whose bit
``j`` is set iff vertices ``i`` and ``j`` are adjacent.  Vertex order is the
declaration order of the labels.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import CapExceededError, GraphError

DEFAULT_STRONG_PRODUCT_CAP = 4096


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[str, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "rows", tuple(self.rows))
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise GraphError("vertex labels must be distinct")
        if len(self.rows) != n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << n) - 1
        for i, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {i} refers to a vertex outside the graph")
            if r >> i & 1:
                raise GraphError(f"self-loop at {self.vertices[i]!r}")
            for j in _bits(r):
                if not self.rows[j] >> i & 1:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        rows = [0] * len(vertices)
        for i, j in edges:
            if i == j:
                raise GraphError(f"self-loop at {vertices[i]!r}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(tuple(vertices), tuple(rows))

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"SimpleGraph(n={len(self)}, edges={self.edge_count})"

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r}") from None

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, i: int) -> list[int]:
        return list(_bits(self.rows[i]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in _bits(r >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_null(self) -> bool:
        return not any(self.rows)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        pairs = sorted(
            tuple(sorted((self.vertices[i], self.vertices[j]))) for i, j in self.edges()
        )
        for a, b in pairs:
            lines.append(f"  {_quote(a)} -- {_quote(b)};")
        for i, v in enumerate(self.vertices):
            if not self.rows[i]:
                lines.append(f"  {_quote(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: Mapping) -> SimpleGraph:
        return cls.from_edges(data["vertices"], (tuple(e) for e in data["edges"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def complete_graph(n: int, labels: Sequence[str] | None = None) -> SimpleGraph:
    labels = _default_labels(n, labels)
    full = (1 << n) - 1
    return SimpleGraph(labels, tuple(full ^ (1 << i) for i in range(n)))


def null_graph(n: int, labels: Sequence[str] | None = None) -> SimpleGraph:
    labels = _default_labels(n, labels)
    return SimpleGraph(labels, (0,) * n)


def _default_labels(n: int, labels: Sequence[str] | None) -> tuple[str, ...]:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    if labels is None:
        return tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise GraphError(f"expected {n} labels, got {len(labels)}")
    return tuple(labels)


def relabel(g: SimpleGraph, mapping) -> SimpleGraph:
    """Rename every vertex via ``mapping`` (a dict or callable)."""
    f = mapping if callable(mapping) else mapping.__getitem__
    return SimpleGraph(tuple(f(v) for v in g.vertices), g.rows)


def graph_join(graphs: Sequence[SimpleGraph]) -> SimpleGraph:
    """Disjoint union plus every edge between different summands."""
    labels: list[str] = []
    for g in graphs:
        labels.extend(g.vertices)
    if len(set(labels)) != len(labels):
        raise GraphError("graph join needs pairwise disjoint vertex labels")
    total = (1 << len(labels)) - 1
    rows: list[int] = []
    base = 0
    for g in graphs:
        block = ((1 << len(g)) - 1) << base
        outside = total & ~block
        rows.extend((r << base) | outside for r in g.rows)
        base += len(g)
    return SimpleGraph(tuple(labels), tuple(rows))


def strong_product(graphs: Sequence[SimpleGraph], cap: int = DEFAULT_STRONG_PRODUCT_CAP) -> SimpleGraph:
    """Tuples adjacent iff distinct and equal-or-adjacent in every coordinate.

    Vertices are labelled ``"(v1,...,vn)"`` and ordered as in ``itertools.product``.
    """
    from .constructions import tuple_label

    size = math.prod(len(g) for g in graphs)
    if size > cap:
        raise CapExceededError("strong product vertex count", size, cap, "--product-cap")
    coords = list(itertools.product(*(range(len(g)) for g in graphs)))
    labels = tuple(tuple_label([g.vertices[x] for g, x in zip(graphs, c)]) for c in coords)
    # closed neighbourhoods per factor
    closed = [[r | (1 << i) for i, r in enumerate(g.rows)] for g in graphs]
    # weights to turn a coordinate tuple into a carrier index
    strides = []
    acc = 1
    for g in reversed(graphs):
        strides.append(acc)
        acc *= len(g)
    strides.reverse()

    rows = []
    for k, c in enumerate(coords):
        mask = 1
        for f, x in enumerate(c):
            new = 0
            for y in _bits(closed[f][x]):
                new |= mask << (strides[f] * y)
            mask = new
        rows.append(mask & ~(1 << k))
    return SimpleGraph(labels, tuple(rows))


def induced_subgraph(g: SimpleGraph, subset: Iterable[str]) -> SimpleGraph:
    wanted = set(subset)
    keep = [i for i, v in enumerate(g.vertices) if v in wanted]
    if len(keep) != len(wanted):
        missing = sorted(wanted - set(g.vertices))
        raise GraphError(f"unknown vertex {missing[0]!r}")
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        r = 0
        for j in _bits(g.rows[old]):
            if j in pos:
                r |= 1 << pos[j]
        rows.append(r)
    return SimpleGraph(tuple(g.vertices[i] for i in keep), tuple(rows))


def equal_via(g: SimpleGraph, h: SimpleGraph, mapping: Mapping[str, str]) -> bool:
    """True iff ``mapping`` is an adjacency-preserving bijection from ``g`` onto ``h``."""
    if set(mapping) != set(g.vertices):
        raise GraphError("mapping domain must be exactly the vertices of the first graph")
    image = [mapping[v] for v in g.vertices]
    if len(set(image)) != len(image) or set(image) != set(h.vertices):
        raise GraphError("mapping is not a bijection onto the vertices of the second graph")
    pos = [h.index(v) for v in image]
    for i, r in enumerate(g.rows):
        mapped = 0
        for j in _bits(r):
            mapped |= 1 << pos[j]
        if mapped != h.rows[pos[i]]:
            return False
    return True


def identity_map(g: SimpleGraph) -> dict[str, str]:
    return {v: v for v in g.vertices}


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(tuple(str(i) for i in range(n)), edges)
