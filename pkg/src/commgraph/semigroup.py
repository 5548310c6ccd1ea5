"""Finite semigroups given by Cayley tables.

A :class:`Semigroup` is a list of element labels plus an ``n x n`` table of
element indices, where ``table[i][j]`` is the index of ``labels[i] * labels[j]``.
Every instance is validated on construction (closure, distinct labels,
associativity), so any value you hold is a genuine semigroup.

Transformations compose left to right: for maps ``f`` and ``g`` the product
``fg`` first applies ``f`` and then ``g`` (``x(fg) = (xf)g``).  With this
convention the constant maps ``a = [1,1]`` and ``b = [2,2]`` of T_2 satisfy
``a*b = b`` and ``b*a = a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import AssociativityError, CapExceededError, ParseError, SmgError

FAMILIES = ("full_transformation", "cyclic_group", "left_zero", "right_zero", "null_with_zero")
MAX_TRANSFORMATION_DEGREE = 4
MAX_GENERATED_ORDER = 256


@dataclass(frozen=True)
class Semigroup:
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "table", table)
        n = len(labels)
        if n == 0:
            raise SmgError("a semigroup must have at least one element")
        for lab in labels:
            _check_label(lab)
        if len(set(labels)) != n:
            dup = next(lab for lab in labels if labels.count(lab) > 1)
            raise SmgError(f"duplicate element label {dup!r}")
        if len(table) != n or any(len(row) != n for row in table):
            raise SmgError(f"table must be {n}x{n}")
        for row in table:
            for v in row:
                if not 0 <= v < n:
                    raise SmgError(f"table entry {v} is not an element index in [0, {n})")
        witness = associativity_witness(table)
        if witness is not None:
            x, y, z = witness
            lhs = table[table[x][y]][z]
            rhs = table[x][table[y][z]]
            raise AssociativityError(
                (labels[x], labels[y], labels[z]), labels[lhs], labels[rhs]
            )

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"Semigroup(order={len(self)}, labels={list(self.labels)!r})"

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise SmgError(f"unknown element label {label!r}") from None

    def product(self, x: int, y: int) -> int:
        return self.table[x][y]

    def mul(self, x: str, y: str) -> str:
        """Label-level product, handy in tests and at the REPL."""
        return self.labels[self.table[self.index(x)][self.index(y)]]

    @cached_property
    def center(self) -> frozenset[int]:
        t = self.table
        n = len(t)
        return frozenset(
            x for x in range(n) if all(t[x][y] == t[y][x] for y in range(n))
        )

    @property
    def is_commutative(self) -> bool:
        return len(self.center) == len(self)

    def commute(self, x: int, y: int) -> bool:
        return self.table[x][y] == self.table[y][x]


def product(s: Semigroup, x: int, y: int) -> int:
    return s.table[x][y]


def center(s: Semigroup) -> frozenset[int]:
    return s.center


def is_commutative(s: Semigroup) -> bool:
    return s.is_commutative


def _check_label(label: str) -> None:
    if not isinstance(label, str) or not label:
        raise SmgError(f"element labels must be nonempty strings, got {label!r}")
    if any(ch.isspace() for ch in label):
        raise SmgError(f"element label {label!r} contains whitespace")
    if label.startswith("#"):
        raise SmgError(f"element label {label!r} starts with the comment character '#'")


def associativity_witness(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """Return the first triple ``(x, y, z)`` with ``(xy)z != x(yz)``, or ``None``."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    # one x at a time keeps memory at O(n^2)
    for x in range(n):
        lhs = t[t[x]]          # lhs[y, z] = (x y) z
        rhs = t[x][t]          # rhs[y, z] = x (y z)
        bad = lhs != rhs
        if bad.any():
            y, z = np.argwhere(bad)[0]
            return x, int(y), int(z)
    return None


def is_associative(table: Sequence[Sequence[int]]) -> bool:
    return associativity_witness(table) is None


# -- file format ----------------------------------------------------------

def parse_semigroup(text: str) -> Semigroup:
    """Parse the line-oriented table format.

    ::

        # comment
        elements: e s a b
        e s a b
        s e a b
        a b a b
        b a a b

    Row ``i`` lists the products ``labels[i] * labels[j]`` by label.
    """
    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        content.append((lineno, raw))
    if not content:
        raise ParseError("empty input: expected an 'elements:' header", 1, 1)

    lineno, header = content[0]
    head = header.lstrip()
    if not head.startswith("elements:"):
        col = len(header) - len(head) + 1
        raise ParseError("expected header 'elements: <label> <label> ...'", lineno, col)
    offset = len(header) - len(head) + len("elements:")
    labels = [tok for tok, _ in _tokens(header, offset)]
    if not labels:
        raise ParseError("header declares no elements (empty semigroups are not allowed)", lineno)
    seen: dict[str, int] = {}
    for tok, col in _tokens(header, offset):
        if tok in seen:
            raise ParseError(f"duplicate element label {tok!r}", lineno, col)
        if tok.startswith("#"):
            raise ParseError(f"label {tok!r} may not start with '#'", lineno, col)
        seen[tok] = len(seen)
    n = len(labels)

    rows = content[1:]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else (rows[-1][0] if rows else lineno)
        raise ParseError(f"expected {n} table rows, found {len(rows)}", where)
    table = []
    for lineno, raw in rows:
        toks = _tokens(raw, 0)
        if len(toks) != n:
            raise ParseError(f"expected {n} entries in row, found {len(toks)}", lineno)
        row = []
        for tok, col in toks:
            if tok not in seen:
                raise ParseError(f"unknown label {tok!r} in table body", lineno, col)
            row.append(seen[tok])
        table.append(row)
    return Semigroup(tuple(labels), tuple(tuple(r) for r in table))


def _tokens(line: str, start: int) -> list[tuple[str, int]]:
    out = []
    i, n = start, len(line)
    while i < n:
        while i < n and line[i].isspace():
            i += 1
        if i >= n:
            break
        j = i
        while j < n and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def serialize_semigroup(s: Semigroup) -> str:
    lines = ["elements: " + " ".join(s.labels)]
    for row in s.table:
        lines.append(" ".join(s.labels[v] for v in row))
    return "\n".join(lines)


def read_semigroup(path) -> Semigroup:
    with open(path, encoding="utf-8") as fh:
        return parse_semigroup(fh.read())


def write_semigroup(s: Semigroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_semigroup(s) + "\n")


# -- standard families ----------------------------------------------------

def from_function(labels: Sequence[str], op) -> Semigroup:
    """Build a semigroup from labels and a function on indices."""
    n = len(labels)
    return Semigroup(tuple(labels), tuple(tuple(op(i, j) for j in range(n)) for i in range(n)))


def full_transformation(n: int) -> Semigroup:
    """T_n with left-to-right composition.

    Elements are labelled by their image words (``"21"`` sends 1->2, 2->1).
    The identity comes first, then the other permutations, then the remaining
    maps, each group in lexicographic order; for n = 2 this is the order
    identity, transposition, [1,1], [2,2].
    """
    if not 1 <= n <= MAX_TRANSFORMATION_DEGREE:
        raise CapExceededError("full transformation degree", n, MAX_TRANSFORMATION_DEGREE)
    maps = list(itertools.product(range(n), repeat=n))
    ident = tuple(range(n))
    perms = sorted(m for m in maps if len(set(m)) == n and m != ident)
    rest = sorted(m for m in maps if len(set(m)) < n)
    elems = [ident] + perms + rest
    where = {m: i for i, m in enumerate(elems)}
    labels = ["".join(str(v + 1) for v in m) for m in elems]

    def compose(i, j):
        f, g = elems[i], elems[j]
        return where[tuple(g[f[x]] for x in range(n))]

    return from_function(labels, compose)


def cyclic_group(n: int) -> Semigroup:
    return from_function([f"g{i}" for i in range(n)], lambda i, j: (i + j) % n)


def left_zero(n: int) -> Semigroup:
    return from_function([f"l{i}" for i in range(n)], lambda i, j: i)


def right_zero(n: int) -> Semigroup:
    return from_function([f"r{i}" for i in range(n)], lambda i, j: j)


def null_with_zero(n: int) -> Semigroup:
    """Null semigroup: every product equals the zero ``z`` (index 0)."""
    return from_function(["z"] + [f"n{i}" for i in range(1, n)], lambda i, j: 0)


_GENERATORS = {
    "full_transformation": full_transformation,
    "cyclic_group": cyclic_group,
    "left_zero": left_zero,
    "right_zero": right_zero,
    "null_with_zero": null_with_zero,
}


def generate(family: str, n: int) -> Semigroup:
    if family not in _GENERATORS:
        raise SmgError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise SmgError("order parameter must be at least 1")
    if family != "full_transformation" and n > MAX_GENERATED_ORDER:
        raise CapExceededError(f"{family} order", n, MAX_GENERATED_ORDER)
    return _GENERATORS[family](n)


def relabel(s: Semigroup, labels: Iterable[str]) -> Semigroup:
    return Semigroup(tuple(labels), s.table)
