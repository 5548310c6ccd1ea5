"""Zero-union and direct product of finite semigroups.

Labels encode the canonical embeddings so later checks never need an
isomorphism search:

* zero-union: the fresh zero is ``"0"`` and element ``x`` of the i-th
  component (1-based) becomes ``"i.x"``;
* direct product: the tuple ``(x1, ..., xn)`` is labelled ``"(x1,...,xn)"``
  and carrier order is ``itertools.product`` order of the component indices.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError, SmgError
from .semigroup import Semigroup

DEFAULT_PRODUCT_CAP = 4096
KINDS = ("zero_union", "direct_product")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    components: tuple[Semigroup, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SmgError(f"unknown construction kind {self.kind!r}")
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise SmgError("a construction needs at least one component")

    def order(self) -> int:
        sizes = [len(c) for c in self.components]
        if self.kind == "zero_union":
            return 1 + sum(sizes)
        return math.prod(sizes)

    def build(self, product_cap: int = DEFAULT_PRODUCT_CAP) -> Semigroup:
        if self.kind == "zero_union":
            return zero_union(self.components)
        return direct_product(self.components, cap=product_cap)


def tuple_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def prefixed_label(i: int, label: str) -> str:
    """Label of ``label`` from component ``i`` (0-based) inside a zero-union."""
    return f"{i + 1}.{label}"


def zero_union_embedding(components: Sequence[Semigroup]) -> list[list[int]]:
    """``emb[i][x]`` is the index in the zero-union of element ``x`` of component ``i``."""
    emb, base = [], 1
    for comp in components:
        emb.append(list(range(base, base + len(comp))))
        base += len(comp)
    return emb


def zero_union(components: Sequence[Semigroup]) -> Semigroup:
    if not components:
        raise SmgError("zero-union needs at least one component")
    labels = ["0"]
    owner = [-1]
    local = [-1]
    for i, comp in enumerate(components):
        labels.extend(prefixed_label(i, lab) for lab in comp.labels)
        owner.extend([i] * len(comp))
        local.extend(range(len(comp)))
    assert len(set(labels)) == len(labels), "label collision in zero-union"
    emb = zero_union_embedding(components)

    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for x in range(1, n):
        ci, lx = owner[x], local[x]
        ctab = components[ci].table
        row = table[x]
        for y in emb[ci]:
            row[y] = emb[ci][ctab[lx][local[y]]]
    return Semigroup(tuple(labels), tuple(tuple(r) for r in table))


def product_coordinates(components: Sequence[Semigroup]) -> list[tuple[int, ...]]:
    """Coordinate projections of the direct-product carrier, in carrier order."""
    return list(itertools.product(*(range(len(c)) for c in components)))


def direct_product(components: Sequence[Semigroup], cap: int = DEFAULT_PRODUCT_CAP) -> Semigroup:
    if not components:
        raise SmgError("direct product needs at least one component")
    order = math.prod(len(c) for c in components)
    if order > cap:
        raise CapExceededError("direct product order", order, cap, "--product-cap")
    coords = product_coordinates(components)
    where = {c: k for k, c in enumerate(coords)}
    labels = [tuple_label([comp.labels[x] for comp, x in zip(components, c)]) for c in coords]
    tables = [comp.table for comp in components]
    table = []
    for a in coords:
        rows = [tab[x] for tab, x in zip(tables, a)]
        table.append(tuple(where[tuple(r[y] for r, y in zip(rows, b))] for b in coords))
    return Semigroup(tuple(labels), tuple(table))
