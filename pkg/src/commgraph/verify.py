"""Two-sided audits of the zero-union and direct-product theorems.

:func:`check_construction` builds a construction, computes everything about
its commuting graph directly, computes the closed-form predictions from the
component profiles, and compares the two.  :func:`enumerate_semigroups` and
:func:`run_corpus_suite` feed it with every small semigroup.
"""

from __future__ import annotations

import itertools
import random
import string
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .commuting import (
    commuting_graph,
    extended_commuting_graph,
    knit_degree,
    left_path_problems,
)
from .constructions import (
    DEFAULT_PRODUCT_CAP,
    ConstructionSpec,
    direct_product,
    prefixed_label,
    product_coordinates,
    tuple_label,
    zero_union,
)
from .errors import CapExceededError, SmgError
from .graph import (
    SimpleGraph,
    complete_graph,
    equal_via,
    graph_join,
    relabel,
    strong_product,
)
from .invariants import (
    DEFAULT_CHI_CAP,
    DEFAULT_CLIQUE_CAP,
    INF,
    chromatic_number,
    clique_number,
    diameter,
    girth,
)
from .predict import ComponentProfile, component_profile, predict
from .semigroup import Semigroup

MAX_EXHAUSTIVE_ORDER = 4
MAX_SAMPLED_ORDER = 6
MAX_CANONICAL_ORDER = 7


def _jsonable(value):
    if isinstance(value, float) and value == INF:
        return "inf"
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class Verdict:
    name: str
    anchor: str
    status: str                     # "pass", "fail" or "skipped"
    predicted: object = None
    computed: object = None
    reason: str | None = None
    witness: object = None

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "predicted": _jsonable(self.predicted),
            "computed": _jsonable(self.computed),
        }
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        return out


@dataclass
class CheckReport:
    kind: str
    components: list[str]
    order: int
    commutative: bool
    verdicts: list[Verdict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v.status != "fail" for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "fail"]

    def skipped(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "skipped"]

    def verdict(self, name: str) -> Verdict:
        return next(v for v in self.verdicts if v.name == name)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "kind": self.kind,
            "components": list(self.components),
            "order": self.order,
            "commutative": self.commutative,
            "passed": self.passed,
            "verdicts": [v.to_json() for v in self.verdicts],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def _compare(name, anchor, predicted, computed, witness=None) -> Verdict:
    ok = predicted == computed
    return Verdict(name, anchor, "pass" if ok else "fail", predicted, computed,
                   witness=None if ok else witness)


def adjacency_mismatch(g: SimpleGraph, h: SimpleGraph, mapping) -> list[str] | None:
    """First pair whose adjacency differs under ``mapping``, or ``None``."""
    pos = [h.index(mapping[v]) for v in g.vertices]
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            if g.adjacent(i, j) != h.adjacent(pos[i], pos[j]):
                return [g.vertices[i], g.vertices[j]]
    return None


def _structure_verdict(name, anchor, g, h, mapping) -> Verdict:
    if set(mapping) != set(g.vertices) or sorted(mapping.values()) != sorted(h.vertices):
        return Verdict(name, anchor, "fail", len(h), len(g),
                       reason="vertex sets do not correspond under the canonical map")
    bad = None if equal_via(g, h, mapping) else adjacency_mismatch(g, h, mapping)
    return Verdict(name, anchor, "pass" if bad is None else "fail",
                   "isomorphic", "isomorphic" if bad is None else "differs", witness=bad)


def check_construction(
    spec: ConstructionSpec,
    profiles: Sequence[ComponentProfile] | None = None,
    component_ids: Sequence[str] | None = None,
    clique_cap: int = DEFAULT_CLIQUE_CAP,
    chi_cap: int = DEFAULT_CHI_CAP,
    product_cap: int = DEFAULT_PRODUCT_CAP,
) -> CheckReport:
    start = time.perf_counter()
    comps = list(spec.components)
    ids = list(component_ids) if component_ids else [f"S{i + 1}" for i in range(len(comps))]
    zu = spec.kind == "zero_union"
    s = spec.build(product_cap=product_cap)
    report = CheckReport(spec.kind, ids, len(s), s.is_commutative)
    add = report.verdicts.append

    # centre of the construction from the centres of the factors
    if zu:
        expected = {"0"} | {
            prefixed_label(i, c.labels[x]) for i, c in enumerate(comps) for x in c.center
        }
        anchor = "zero-union centre proposition"
    else:
        expected = {
            tuple_label([c.labels[x] for c, x in zip(comps, coord)])
            for coord in itertools.product(*(sorted(c.center) for c in comps))
        }
        anchor = "direct-product centre proposition"
    computed = {s.labels[x] for x in s.center}
    add(_compare("center", anchor, sorted(expected), sorted(computed),
                 witness=sorted(expected ^ computed)))
    add(_compare("commutative_iff_components", anchor,
                 all(c.is_commutative for c in comps), s.is_commutative))

    ext = extended_commuting_graph(s)
    if s.is_commutative:
        k = complete_graph(len(s), s.labels)
        add(_structure_verdict("extended_graph_lemma", "extended commuting graph of a commutative semigroup is complete",
                               ext, k, {v: v for v in s.labels}))
    else:
        g_s = commuting_graph(s)
        zlabels = [s.labels[x] for x in sorted(s.center)]
        joined = graph_join([complete_graph(len(zlabels), zlabels), g_s])
        add(_structure_verdict("extended_graph_lemma", "extended commuting graph is K_|Z| joined with the commuting graph",
                               ext, joined, {v: v for v in ext.vertices}))

    if not zu:
        ext_factors = [extended_commuting_graph(c) for c in comps]
        sp = strong_product(ext_factors, cap=max(product_cap, len(s)))
        coords = product_coordinates(comps)
        mapping = {
            s.labels[k]: tuple_label([f.vertices[x] for f, x in zip(ext_factors, c)])
            for k, c in enumerate(coords)
        }
        add(_structure_verdict("strong_product_structure",
                               "extended graph of a direct product is the strong product",
                               ext, sp, mapping))

    names = ["commuting_structure", "connected", "diameter", "clique_number",
             "chromatic_number", "girth", "knit_degree"]
    if s.is_commutative:
        reason = "commutative product" if not zu else "commutative zero-union"
        for name in names:
            add(Verdict(name, "commuting graph needs a non-commutative semigroup", "skipped", reason=reason))
        report.wall_time = time.perf_counter() - start
        return report

    if profiles is None:
        profiles = [component_profile(c, clique_cap, chi_cap) for c in comps]
    pred = predict(spec.kind, profiles)
    g_s = commuting_graph(s)

    if zu:
        nc = [i for i, c in enumerate(comps) if not c.is_commutative]
        if len(nc) == 1:
            j = nc[0]
            h = commuting_graph(comps[j])
            mapping = {prefixed_label(j, v): v for v in h.vertices}
            add(_structure_verdict("commuting_structure",
                                   "single non-commutative summand: commuting graph equals that summand's",
                                   g_s, h, {v: mapping.get(v, v) for v in g_s.vertices}))
        else:
            parts = [relabel(commuting_graph(comps[i]), lambda v, i=i: prefixed_label(i, v)) for i in nc]
            add(_structure_verdict("commuting_structure",
                                   "zero-union commuting graph is the join of the summands' graphs",
                                   g_s, graph_join(parts), {v: v for v in g_s.vertices}))
    else:
        add(Verdict("commuting_structure", "extended graph of a direct product is the strong product",
                    "pass", "see strong_product_structure", "see strong_product_structure"))

    d = diameter(g_s)
    dia_anchor = "zero-union diameter corollary" if zu else "direct-product diameter theorem"
    add(_compare("connected", dia_anchor, pred.connected, d != INF))
    add(_compare("diameter", dia_anchor, pred.diameter, d))

    w = None
    if len(g_s) > clique_cap:
        add(Verdict("clique_number", "clique number formula", "skipped",
                    pred.clique_number, reason=f"cap: {len(g_s)} vertices > clique cap {clique_cap}"))
    else:
        w = clique_number(g_s, cap=clique_cap)
        add(_compare("clique_number",
                     "zero-union clique corollary" if zu else "direct-product clique number theorem",
                     pred.clique_number, w))

    if len(g_s) > chi_cap or w is None:
        add(Verdict("chromatic_number", "chromatic number", "skipped", pred.chromatic_number,
                    reason=f"cap: {len(g_s)} vertices > chromatic cap {chi_cap}"))
    else:
        chi = chromatic_number(g_s, cap=chi_cap, clique_hint=w)
        if zu:
            add(_compare("chromatic_number", "zero-union chromatic corollary", pred.chromatic_number, chi))
        else:
            ok = w <= chi <= pred.chromatic_number
            add(Verdict("chromatic_number", "direct-product chromatic upper bound",
                        "pass" if ok else "fail",
                        f"[{w},{pred.chromatic_number}]", chi,
                        reason=f"{chi} {'in' if ok else 'not in'} [{w},{pred.chromatic_number}]"))

    gg = girth(g_s)
    add(_compare("girth", "zero-union girth theorem" if zu else "direct-product girth theorem",
                 pred.girth, gg, witness={"conditions_held": sorted(pred.conditions_held)} if not zu else None))
    if not zu and pred.conditions_held == frozenset({8}):
        add(Verdict("girth_unique_cycle_component", "direct-product girth theorem, condition 8 alone",
                    "pass" if len(pred.cycle_components) == 1 else "fail",
                    1, len(pred.cycle_components), witness=list(pred.cycle_components)))

    kd = knit_degree(s, g_s)
    add(_compare("knit_degree",
                 "zero-union knit degree theorem" if zu else "direct-product knit degree theorem",
                 pred.kd, kd.length if kd.exists else None,
                 witness={"K": sorted(pred.K), "K_star": sorted(pred.K_star),
                          "path": list(kd.witness) if kd.exists else None}))
    if kd.exists:
        problems = left_path_problems(s, g_s, kd.witness)
        add(Verdict("knit_witness", "left path definition", "fail" if problems else "pass",
                    "valid", "invalid" if problems else "valid",
                    witness={"path": list(kd.witness), "problems": problems} if problems else None))

    report.wall_time = time.perf_counter() - start
    return report


# -- enumeration ------------------------------------------------------------

def element_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"x{i}" for i in range(n))


def _extend_ok(t: list[int], n: int, a: int, b: int) -> bool:
    """Check every triple whose last undefined cell was ``(a, b)``."""
    v = t[a * n + b]
    for z in range(n):                  # (a b) z = a (b z)
        lhs = t[v * n + z]
        bz = t[b * n + z]
        if lhs >= 0 and bz >= 0:
            rhs = t[a * n + bz]
            if rhs >= 0 and lhs != rhs:
                return False
    for x in range(n):                  # (x a) b = x (a b)
        xa = t[x * n + a]
        rhs = t[x * n + v]
        if xa >= 0 and rhs >= 0:
            lhs = t[xa * n + b]
            if lhs >= 0 and lhs != rhs:
                return False
    for xy in range(n * n):
        if t[xy] == a:                  # (x y) b = x (y b) with x y = a
            x, y = divmod(xy, n)
            yb = t[y * n + b]
            if yb >= 0:
                rhs = t[x * n + yb]
                if rhs >= 0 and rhs != v:
                    return False
        if t[xy] == b:                  # (a y) z = a (y z) with y z = b
            y, z = divmod(xy, n)
            ay = t[a * n + y]
            if ay >= 0:
                lhs = t[ay * n + z]
                if lhs >= 0 and lhs != v:
                    return False
    return True


def _exhaustive_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = n * n
    t = [-1] * cells

    def fill(k: int):
        if k == cells:
            yield tuple(tuple(t[i * n:(i + 1) * n]) for i in range(n))
            return
        a, b = divmod(k, n)
        for v in range(n):
            t[k] = v
            if _extend_ok(t, n, a, b):
                yield from fill(k + 1)
        t[k] = -1

    yield from fill(0)


@lru_cache(maxsize=None)
def exhaustive_corpus(n: int) -> tuple[Semigroup, ...]:
    if not 1 <= n <= MAX_EXHAUSTIVE_ORDER:
        raise SmgError(f"exhaustive enumeration supports orders 1..{MAX_EXHAUSTIVE_ORDER}, got {n}")
    labels = element_labels(n)
    return tuple(Semigroup(labels, tab) for tab in _exhaustive_tables(n))


def adjoin_identity(s: Semigroup) -> Semigroup:
    n = len(s)
    table = [list(row) + [i] for i, row in enumerate(s.table)]
    table.append(list(range(n + 1)))
    return Semigroup(element_labels(n + 1), tuple(tuple(r) for r in table))


def adjoin_zero(s: Semigroup) -> Semigroup:
    n = len(s)
    table = [list(row) + [n] for row in s.table]
    table.append([n] * (n + 1))
    return Semigroup(element_labels(n + 1), tuple(tuple(r) for r in table))


def _recipes(n: int, rng: random.Random) -> Semigroup:
    """One pseudorandom semigroup of order ``n`` built from smaller tables."""
    def pick(k: int) -> Semigroup:
        if k <= MAX_EXHAUSTIVE_ORDER:
            return rng.choice(exhaustive_corpus(k))
        return _recipes(k, rng)

    options = ["identity", "zero", "union"]
    factors = [(a, n // a) for a in range(2, n) if n % a == 0 and n // a >= 2]
    if factors:
        options.append("product")
    kind = rng.choice(options)
    if kind == "identity":
        s = adjoin_identity(pick(n - 1))
    elif kind == "zero":
        s = adjoin_zero(pick(n - 1))
    elif kind == "product":
        a, b = rng.choice(factors)
        s = direct_product([pick(a), pick(b)])
    else:
        rest, parts = n - 1, []
        while rest:
            k = rng.randint(1, min(rest, MAX_EXHAUSTIVE_ORDER))
            parts.append(k)
            rest -= k
        s = zero_union([pick(k) for k in parts])
    return Semigroup(element_labels(n), s.table)


def enumerate_semigroups(
    order: int, mode: str = "exhaustive", seed: int = 0, count: int | None = None
) -> Iterator[Semigroup]:
    """All labelled semigroups of ``order`` (exhaustive) or a seeded sample.

    Sampled mode draws from the exhaustive list for orders up to 4 and builds
    products, zero-unions and identity/zero adjunctions of smaller tables for
    orders 5 and 6.
    """
    if mode == "exhaustive":
        if order > MAX_EXHAUSTIVE_ORDER:
            raise SmgError(f"exhaustive mode needs order <= {MAX_EXHAUSTIVE_ORDER}, got {order}")
        yield from exhaustive_corpus(order)
        return
    if mode != "sampled":
        raise SmgError(f"unknown enumeration mode {mode!r}")
    if not 1 <= order <= MAX_SAMPLED_ORDER:
        raise SmgError(f"sampled mode needs order <= {MAX_SAMPLED_ORDER}, got {order}")
    count = 20 if count is None else count
    rng = random.Random(seed)
    if order <= MAX_EXHAUSTIVE_ORDER:
        pool = exhaustive_corpus(order)
        for i in sorted(rng.sample(range(len(pool)), min(count, len(pool)))):
            yield pool[i]
        return
    seen = set()
    for _ in range(count * 50):
        if len(seen) >= count:
            break
        s = _recipes(order, rng)
        if s.table not in seen:
            seen.add(s.table)
            yield s


def canonical_form(s: Semigroup) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least table over all relabellings (small orders only)."""
    n = len(s)
    if n > MAX_CANONICAL_ORDER:
        raise CapExceededError("canonical form order", n, MAX_CANONICAL_ORDER)
    t = s.table
    best = None
    for perm in itertools.permutations(range(n)):
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        cand = tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


def isomorphism_classes(semigroups: Iterable[Semigroup]) -> list[Semigroup]:
    """One representative per isomorphism class, first occurrence kept."""
    seen, out = set(), []
    for s in semigroups:
        key = canonical_form(s)
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


# -- corpus suite -----------------------------------------------------------

@dataclass
class CorpusEntry:
    ident: str
    semigroup: Semigroup


def build_corpus(orders: Iterable[int], seed: int = 0, sample_count: int = 20) -> list[CorpusEntry]:
    out = []
    for n in sorted(set(orders)):
        if n <= MAX_EXHAUSTIVE_ORDER:
            stream = enumerate_semigroups(n)
        else:
            stream = enumerate_semigroups(n, "sampled", seed=seed, count=sample_count)
        out.extend(CorpusEntry(f"o{n}#{i:04d}", s) for i, s in enumerate(stream))
    return out


def _check_job(job):
    kind, comps, profiles, ids, caps = job
    clique_cap, chi_cap, product_cap = caps
    spec = ConstructionSpec(kind, comps)
    if spec.order() > product_cap:
        return ids, kind, None, f"cap: construction order {spec.order()} > product cap {product_cap}"
    report = check_construction(spec, profiles, ids, clique_cap, chi_cap, product_cap)
    return ids, kind, report, None


def _eligible(entries: list[CorpusEntry], combo) -> bool:
    return any(not entries[i].semigroup.is_commutative for i in combo)


def _tuples(entries: list[CorpusEntry], arity: int, cap: int | None, rng: random.Random):
    total = len(entries) ** arity
    if cap is None or total <= 200_000:
        eligible = [
            combo for combo in itertools.product(range(len(entries)), repeat=arity)
            if _eligible(entries, combo)
        ]
        if cap is not None and cap < len(eligible):
            eligible = sorted(rng.sample(eligible, cap))
        return eligible
    # large pools: rejection sampling of distinct eligible tuples
    if not any(not e.semigroup.is_commutative for e in entries):
        return []
    picked = set()
    while len(picked) < cap:
        combo = tuple(rng.randrange(len(entries)) for _ in range(arity))
        if _eligible(entries, combo):
            picked.add(combo)
    return sorted(picked)


def run_corpus_suite(
    orders: Iterable[int] = (2, 3),
    pair_cap: int | None = None,
    seed: int = 0,
    kinds: Sequence[str] = ("zero_union", "direct_product"),
    triples: int = 0,
    clique_cap: int = DEFAULT_CLIQUE_CAP,
    chi_cap: int = DEFAULT_CHI_CAP,
    product_cap: int = DEFAULT_PRODUCT_CAP,
    workers: int = 1,
    sample_count: int = 20,
) -> dict:
    """Check every (or a seeded sample of) pair and triple of corpus semigroups.

    Pairs are ordered and may repeat a semigroup; only tuples with at least one
    non-commutative member are checked.  ``pair_cap`` bounds the number of
    pairs per construction kind; ``triples`` is the number of seeded triples
    per kind.  Failures are collected, never raised.
    """
    entries = build_corpus(orders, seed=seed, sample_count=sample_count)
    rng = random.Random(seed)
    profiles: dict[int, ComponentProfile] = {}

    def profile(i: int) -> ComponentProfile:
        if i not in profiles:
            profiles[i] = component_profile(entries[i].semigroup, clique_cap, chi_cap)
        return profiles[i]

    caps = (clique_cap, chi_cap, product_cap)
    jobs = []
    for kind in kinds:
        combos = _tuples(entries, 2, pair_cap, rng)
        if triples:
            combos += _tuples(entries, 3, triples, rng)
        for combo in combos:
            comps = tuple(entries[i].semigroup for i in combo)
            ids = [entries[i].ident for i in combo]
            profs = None
            if not all(c.is_commutative for c in comps):
                profs = [profile(i) for i in combo]
            jobs.append((kind, comps, profs, ids, caps))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_job, jobs, chunksize=64))
    else:
        results = [_check_job(job) for job in jobs]
    return aggregate(results)


def aggregate(results) -> dict:
    """Merge per-tuple results deterministically (sorted by kind and component ids)."""
    results = sorted(results, key=lambda r: (r[1], r[0]))
    out = {"checked": 0, "passed": 0, "failed": [], "skipped": [], "by_kind": {}}
    for ids, kind, report, skip in results:
        stats = out["by_kind"].setdefault(kind, {"checked": 0, "passed": 0, "failed": 0, "skipped": 0})
        if report is None:
            out["skipped"].append({"kind": kind, "components": ids, "reason": skip})
            stats["skipped"] += 1
            continue
        out["checked"] += 1
        stats["checked"] += 1
        if report.passed:
            out["passed"] += 1
            stats["passed"] += 1
        else:
            stats["failed"] += 1
            failed = report.to_json(timing=False)
            failed["verdicts"] = [v.to_json() for v in report.failures()]
            out["failed"].append(failed)
        for v in report.skipped():
            if v.reason and v.reason.startswith("cap"):
                out["skipped"].append({"kind": kind, "components": ids,
                                       "verdict": v.name, "reason": v.reason})
    return out
