"""Closed-form predictions for zero-unions and direct products.

Everything here works from :class:`ComponentProfile` values, i.e. from data
about the factors only.  The constructed semigroup is never consulted, which
keeps the comparison in :mod:`commgraph.verify` a genuine two-sided check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .commuting import (
    LeftPathResult,
    commuting_graph,
    extended_commuting_graph,
    has_xy_pair,
    knit_degree,
    star_knit_degree,
)
from .errors import CommutativeSemigroupError
from .invariants import (
    DEFAULT_CHI_CAP,
    DEFAULT_CLIQUE_CAP,
    INF,
    ExtNat,
    InvariantReport,
    ext_to_json,
    invariant_report,
)
from .semigroup import Semigroup

STRUCTURE_CLAIMS = ("equals_component", "equals_join", "isomorphic_strong_product")


@dataclass(frozen=True)
class ComponentProfile:
    order: int
    center_size: int
    commutative: bool
    extended_invariants: InvariantReport
    kd_star: LeftPathResult
    # the fields below are None for commutative components
    graph_invariants: InvariantReport | None = None
    is_null_graph: bool | None = None
    has_xy_pair: bool | None = None
    kd: LeftPathResult | None = None

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "center_size": self.center_size,
            "commutative": self.commutative,
            "graph_invariants": self.graph_invariants.to_json() if self.graph_invariants else None,
            "extended_invariants": self.extended_invariants.to_json(),
            "is_null_graph": self.is_null_graph,
            "has_xy_pair": self.has_xy_pair,
            "kd": self.kd.to_json() if self.kd else None,
            "kd_star": self.kd_star.to_json(),
        }


def component_profile(
    s: Semigroup, clique_cap: int = DEFAULT_CLIQUE_CAP, chi_cap: int = DEFAULT_CHI_CAP
) -> ComponentProfile:
    ext = extended_commuting_graph(s)
    common = dict(
        order=len(s),
        center_size=len(s.center),
        commutative=s.is_commutative,
        extended_invariants=invariant_report(ext, clique_cap, chi_cap),
        kd_star=star_knit_degree(s, ext),
    )
    if s.is_commutative:
        return ComponentProfile(**common)
    g = commuting_graph(s)
    return ComponentProfile(
        **common,
        graph_invariants=invariant_report(g, clique_cap, chi_cap),
        is_null_graph=g.is_null(),
        has_xy_pair=has_xy_pair(s),
        kd=knit_degree(s, g),
    )


@dataclass(frozen=True)
class Prediction:
    structure_claim: str
    connected: bool
    diameter: ExtNat
    clique_number: int
    chromatic_number: int
    chromatic_is_bound: bool
    girth: ExtNat
    kd: int | None
    component: int | None = None          # 0-based index for equals_component
    K: frozenset[int] = field(default_factory=frozenset)
    K_star: frozenset[int] = field(default_factory=frozenset)
    conditions_held: frozenset[int] = field(default_factory=frozenset)
    cycle_components: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "structure_claim": self.structure_claim,
            "component": self.component,
            "connected": self.connected,
            "diameter": ext_to_json(self.diameter),
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "chromatic_is_bound": self.chromatic_is_bound,
            "girth": ext_to_json(self.girth),
            "kd": self.kd,
            "K": sorted(self.K),
            "K_star": sorted(self.K_star),
            "conditions_held": sorted(self.conditions_held),
            "cycle_components": list(self.cycle_components),
        }


def _split(profiles: Sequence[ComponentProfile]) -> tuple[list[int], list[int]]:
    comm = [i for i, p in enumerate(profiles) if p.commutative]
    noncomm = [i for i, p in enumerate(profiles) if not p.commutative]
    if not noncomm:
        raise CommutativeSemigroupError("commuting graph of the construction")
    return comm, noncomm


def predict_zero_union(profiles: Sequence[ComponentProfile]) -> Prediction:
    _, nc = _split(profiles)
    if len(nc) == 1:
        j = nc[0]
        p = profiles[j]
        inv = p.graph_invariants
        return Prediction(
            structure_claim="equals_component",
            component=j,
            connected=inv.connected,
            diameter=inv.diameter,
            clique_number=inv.clique_number,
            chromatic_number=inv.chromatic_number,
            chromatic_is_bound=False,
            girth=inv.girth,
            kd=p.kd.length if p.kd.exists else None,
        )

    graphs = [profiles[i].graph_invariants for i in nc]
    if len(nc) >= 3 or not all(profiles[i].is_null_graph for i in nc):
        g = 3
    else:
        g = 4
    if not any(profiles[i].has_xy_pair for i in nc):
        kd = None
    elif any(profiles[i].kd.exists and profiles[i].kd.length == 1 for i in nc):
        kd = 1
    else:
        kd = 2
    return Prediction(
        structure_claim="equals_join",
        connected=True,
        diameter=2,
        clique_number=sum(r.clique_number for r in graphs),
        chromatic_number=sum(r.chromatic_number for r in graphs),
        chromatic_is_bound=False,
        girth=g,
        kd=kd,
    )


def dp_cycle_conditions(profiles: Sequence[ComponentProfile]) -> frozenset[int]:
    """Which of the eight cycle conditions for a direct product hold."""
    comm = [p for p in profiles if p.commutative]
    nc = [p for p in profiles if not p.commutative]
    many_nc = len(nc) >= 2
    held = set()
    if any(p.order >= 3 for p in comm):
        held.add(1)
    if sum(1 for p in comm if p.order >= 2) >= 2:
        held.add(2)
    if any(p.order >= 2 for p in comm) and any(not p.is_null_graph for p in nc):
        held.add(3)
    if many_nc and any(p.order >= 2 for p in comm) and any(p.center_size > 0 for p in nc):
        held.add(4)
    if sum(1 for p in nc if p.center_size > 0 or not p.is_null_graph) >= 2:
        held.add(5)
    if many_nc and any(p.center_size >= 2 for p in nc):
        held.add(6)
    if many_nc and any(p.center_size > 0 and not p.is_null_graph for p in nc):
        held.add(7)
    if any(p.graph_invariants.girth != INF for p in nc):
        held.add(8)
    return frozenset(held)


def _product_formula(profiles: Sequence[ComponentProfile], key: str) -> int:
    value = 1
    for p in profiles:
        if p.commutative:
            value *= p.order
        else:
            value *= p.center_size + getattr(p.graph_invariants, key)
    return value - math.prod(p.center_size for p in profiles)


def _dp_diameter(profiles: Sequence[ComponentProfile], nc: list[int]) -> ExtNat:
    if len(nc) == 1:
        return profiles[nc[0]].graph_invariants.diameter
    centerless = [i for i in nc if profiles[i].center_size == 0]
    if not centerless:
        return 2 if any(profiles[i].graph_invariants.diameter == 2 for i in nc) else 3
    # connected iff every centreless factor has a connected graph
    if not all(profiles[i].graph_invariants.connected for i in centerless):
        return INF
    return max(profiles[i].graph_invariants.diameter for i in centerless)


def predict_direct_product(profiles: Sequence[ComponentProfile]) -> Prediction:
    _, nc = _split(profiles)
    diam = _dp_diameter(profiles, nc)

    held = dp_cycle_conditions(profiles)
    cyc = tuple(i for i in nc if profiles[i].graph_invariants.girth != INF)
    if held & {1, 2, 3, 4, 5, 6, 7}:
        g = 3
    elif 8 in held:
        g = min(profiles[i].graph_invariants.girth for i in cyc)
    else:
        g = INF

    K = frozenset(profiles[i].kd.length for i in nc if profiles[i].kd.exists)
    K_star = frozenset(
        p.kd_star.length
        for i, p in enumerate(profiles)
        if any(j != i for j in nc) and p.kd_star.exists
    )
    both = K | K_star
    return Prediction(
        structure_claim="isomorphic_strong_product",
        connected=diam != INF,
        diameter=diam,
        clique_number=_product_formula(profiles, "clique_number"),
        chromatic_number=_product_formula(profiles, "chromatic_number"),
        chromatic_is_bound=True,
        girth=g,
        kd=min(both) if both else None,
        K=K,
        K_star=K_star,
        conditions_held=held,
        cycle_components=cyc,
    )


def predict(kind: str, profiles: Sequence[ComponentProfile]) -> Prediction:
    if kind == "zero_union":
        return predict_zero_union(profiles)
    return predict_direct_product(profiles)
