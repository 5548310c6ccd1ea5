"""Commuting graphs of finite semigroups, zero-unions and direct products."""

from .commuting import (
    LeftPathResult,
    commuting_graph,
    extended_commuting_graph,
    knit_degree,
    star_knit_degree,
)
from .constructions import ConstructionSpec, direct_product, zero_union
from .errors import (
    AssociativityError,
    CapExceededError,
    CommutativeSemigroupError,
    GraphError,
    ParseError,
    SmgError,
)
from .graph import SimpleGraph, graph_join, strong_product
from .invariants import INF, InvariantReport, invariant_report
from .predict import ComponentProfile, Prediction, component_profile, predict
from .semigroup import Semigroup, parse_semigroup, serialize_semigroup
from .verify import CheckReport, Verdict, check_construction, enumerate_semigroups, run_corpus_suite

__version__ = "0.1.0"

__all__ = [
    "LeftPathResult",
    "commuting_graph",
    "extended_commuting_graph",
    "knit_degree",
    "star_knit_degree",
    "ConstructionSpec",
    "direct_product",
    "zero_union",
    "AssociativityError",
    "CapExceededError",
    "CommutativeSemigroupError",
    "GraphError",
    "ParseError",
    "SmgError",
    "SimpleGraph",
    "graph_join",
    "strong_product",
    "INF",
    "InvariantReport",
    "invariant_report",
    "ComponentProfile",
    "Prediction",
    "component_profile",
    "predict",
    "Semigroup",
    "parse_semigroup",
    "serialize_semigroup",
    "CheckReport",
    "Verdict",
    "check_construction",
    "enumerate_semigroups",
    "run_corpus_suite",
]
