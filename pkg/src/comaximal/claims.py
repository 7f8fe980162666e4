"""Mechanised checks of structural claims about comaximal graphs.

Each claim has a stable id and a checker that returns pass, fail, or
skip.  A fail always carries a witness dict of concrete elements or
counts; `revalidate_report` can later recheck such a witness against
the ring primitives, so doctored reports do not survive an audit.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Sequence

import numpy as np

from .construct import expression_size, parse_expression, ring_from_text
from .errors import CapacityError, ParseError, RingAxiomError, TableFormatError
from .graphs import (
    SimpleGraph,
    build_comaximal_graph,
    chromatic_number,
    clique_number,
    join,
    metrics,
    distance,
    multipartite_structure,
)
from .isomorphism import are_isomorphic
from .limits import (
    DEFAULT_EXACT_VERTEX_CAP,
    DEFAULT_GRAPH_ISO_CAP,
    DEFAULT_MAX_RING_SIZE,
    DEFAULT_RING_ISO_CAP,
)
from .rings import RingTable, ring_isomorphic
from .version import __version__


@dataclass(frozen=True)
class Caps:
    """Effective size caps, embedded into every persisted report."""

    max_ring_size: int = DEFAULT_MAX_RING_SIZE
    max_exact_vertices: int = DEFAULT_EXACT_VERTEX_CAP
    max_ringiso_size: int = DEFAULT_RING_ISO_CAP
    max_graphiso_vertices: int = DEFAULT_GRAPH_ISO_CAP
    exact_chromatic_ring_size: int = 64

    def to_json(self) -> dict:
        return {
            "max_ring_size": self.max_ring_size,
            "max_exact_vertices": self.max_exact_vertices,
            "max_ringiso_size": self.max_ringiso_size,
            "max_graphiso_vertices": self.max_graphiso_vertices,
            "exact_chromatic_ring_size": self.exact_chromatic_ring_size,
        }


@dataclass
class ClaimReport:
    claim: str
    rings: tuple[str, ...]
    outcome: str  # "pass" | "fail" | "skip"
    skip_reason: str | None = None
    witness: dict | None = None
    elapsed: float = 0.0  # excluded from files so reports stay byte-reproducible

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "rings": list(self.rings),
            "outcome": self.outcome,
            "skip_reason": self.skip_reason,
            "witness": self.witness,
        }


class RingAnalysis:
    """Shared per-ring context so claim checkers reuse graphs and metrics."""

    def __init__(self, ring: RingTable, text: str | None = None, caps: Caps | None = None):
        self.ring = ring
        self.text = text if text is not None else ring.name
        self.caps = caps or Caps()
        self._graphs: dict[str, SimpleGraph] = {}

    def graph(self, selector: str) -> SimpleGraph:
        if selector not in self._graphs:
            self._graphs[selector] = build_comaximal_graph(self.ring, selector)
        return self._graphs[selector]

    @cached_property
    def core_metrics(self):
        return metrics(self.graph("core"))

    @cached_property
    def core_clique(self) -> int:
        return clique_number(self.graph("core"), self.caps.max_exact_vertices)

    @cached_property
    def core_chromatic(self) -> int:
        return chromatic_number(self.graph("core"), self.caps.max_exact_vertices)

    @cached_property
    def is_z2xz2(self) -> bool:
        if self.ring.size != 4:
            return False
        return ring_isomorphic(self.ring, _z2xz2(), cap=4) is not None


@lru_cache(maxsize=1)
def _z2xz2() -> RingTable:
    return ring_from_text("Z/2 x Z/2")


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    summary: str
    arity: int
    check: Callable


SINGLE_CLAIMS: dict[str, ClaimSpec] = {}
PAIR_CLAIMS: dict[str, ClaimSpec] = {}


def _claim(claim_id: str, summary: str, arity: int = 1):
    def register(fn: Callable) -> Callable:
        spec = ClaimSpec(claim_id, summary, arity, fn)
        (SINGLE_CLAIMS if arity == 1 else PAIR_CLAIMS)[claim_id] = spec
        return fn

    return register


def _passed(witness: dict | None = None):
    return "pass", witness, None


def _failed(witness: dict):
    return "fail", witness, None


def _skipped(reason: str):
    return "skip", None, reason


def _distinct_prime_count(n: int) -> int:
    count, d = 0, 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            while n % d == 0:
                n //= d
        d += 1
    return count + (1 if n > 1 else 0)


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = min(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


# -- single-ring claims -----------------------------------------------------------


@_claim("L2.1a", "the subgraph induced by the units is complete")
def _check_units_complete(a: RingAnalysis):
    g = a.graph("units")
    full = (1 << g.n) - 1
    for i in range(g.n):
        missing = full & ~g.rows[i] & ~(1 << i)
        if missing:
            j = (missing & -missing).bit_length() - 1
            return _failed(
                {"non_adjacent_units": [g.vertex_keys[i], g.vertex_keys[j]]}
            )
    return _passed({"unit_count": g.n, "edges": g.edge_count})


@_claim("L2.1b", "isolated vertices of the nonunit subgraph are exactly the radical")
def _check_radical_isolated(a: RingAnalysis):
    g = a.graph("nonunits")
    radical = a.ring.jacobson_radical
    isolated = 0
    for i in range(g.n):
        deg = g.rows[i].bit_count()
        key = g.vertex_keys[i]
        in_rad = key in radical
        if (deg == 0) != in_rad:
            return _failed({"element": key, "degree": deg, "in_radical": in_rad})
        if deg == 0:
            isolated += 1
    return _passed({"radical_size": len(radical), "isolated": isolated})


def _edge_key_set(g: SimpleGraph) -> set[tuple[int, int]]:
    out = set()
    for i, j in g.edges():
        a, b = g.vertex_keys[i], g.vertex_keys[j]
        out.add((a, b) if a < b else (b, a))
    return out


@_claim("JOIN", "the full graph is the join of the unit and nonunit subgraphs")
def _check_join(a: RingAnalysis):
    full_edges = _edge_key_set(a.graph("full"))
    joined = join(a.graph("units"), a.graph("nonunits"))
    join_edges = _edge_key_set(joined)
    if full_edges != join_edges:
        diff = sorted(full_edges.symmetric_difference(join_edges))[0]
        return _failed({"edge": list(diff), "in_full": diff in full_edges})
    return _passed({"edges": len(full_edges)})


@_claim("T2.2", "the core is complete bipartite exactly when there are two maximal ideals")
def _check_core_bipartite(a: RingAnalysis):
    st = multipartite_structure(a.graph("core"))
    t = a.ring.maximal_ideal_count
    is_cb = st.is_complete_bipartite
    witness = {
        "max_ideal_count": t,
        "core_complete_bipartite": is_cb,
        "part_sizes": sorted(len(p) for p in st.multipartite_parts or ()),
    }
    return _passed(witness) if is_cb == (t == 2) else _failed(witness)


@_claim("P2.3", "core clique and chromatic numbers both equal the maximal-ideal count")
def _check_core_counts(a: RingAnalysis):
    t = a.ring.maximal_ideal_count
    if t < 2:
        return _skipped("stated for rings with at least two maximal ideals")
    witness = {
        "max_ideal_count": t,
        "clique": a.core_clique,
        "chromatic": a.core_chromatic,
    }
    ok = a.core_clique == t and a.core_chromatic == t
    return _passed(witness) if ok else _failed(witness)


@_claim("P2.4a", "a complete multipartite core has exactly two parts")
def _check_core_multipartite(a: RingAnalysis):
    if a.ring.maximal_ideal_count < 2:
        return _skipped("stated for rings with at least two maximal ideals")
    st = multipartite_structure(a.graph("core"))
    if st.multipartite_parts is None:
        return _passed({"core_complete_multipartite": False})
    parts = len(st.multipartite_parts)
    witness = {"core_complete_multipartite": True, "parts": parts}
    return _passed(witness) if parts == 2 else _failed(witness)


@_claim("P2.4b", "a universal core vertex forces Z/2 x field structure")
def _check_universal_vertex(a: RingAnalysis):
    ring = a.ring
    if ring.maximal_ideal_count < 2:
        return _skipped("stated for rings with at least two maximal ideals")
    g = a.graph("core")
    universal = [i for i in range(g.n) if g.rows[i].bit_count() == g.n - 1]
    if not universal:
        return _passed({"universal_vertices": 0})
    if len(ring.jacobson_radical) != 1:
        return _failed({"kind": "radical_nonzero", "radical_size": len(ring.jacobson_radical)})
    if ring.maximal_ideal_count != 2:
        return _failed({"kind": "max_ideal_count", "count": ring.maximal_ideal_count})
    for i in universal:
        x = g.vertex_keys[i]
        mask = 1 | (1 << x)
        if not any(m.mask == mask for m in ring.maximal_ideals):
            return _failed({"kind": "pair_ideal_missing", "vertex": x})
    q, rem = divmod(ring.size, 2)
    if rem or not _is_prime_power(q):
        return _failed({"kind": "size_not_2q", "size": ring.size})
    witness: dict = {"universal_vertices": len(universal), "field_size": q}
    if ring.size <= a.caps.max_ringiso_size:
        target = ring_from_text(f"Z/2 x GF({q})")
        if ring_isomorphic(ring, target, cap=a.caps.max_ringiso_size) is None:
            return _failed({"kind": "not_isomorphic", "target": f"Z/2 x GF({q})"})
        witness["ring_isomorphism"] = "verified"
    else:
        witness["ring_isomorphism"] = "consistent (not attempted above cap)"
    return _passed(witness)


@_claim("T2.5", "clean ring whose core clique count matches its local factor count")
def _check_clean_decomposition(a: RingAnalysis):
    ring = a.ring
    cd = ring.clean_decomposition()
    if not cd.clean:
        return _failed({"kind": "not_clean", "element": cd.counterexample})
    t = ring.maximal_ideal_count
    witness: dict = {"clean": True, "max_ideal_count": t}
    if t == 1:
        if a.graph("core").n != 0:
            return _failed({"kind": "local_core_nonempty", "core_vertices": a.graph("core").n})
        witness["core"] = "empty"
    else:
        witness["clique"] = a.core_clique
        if a.core_clique != t:
            return _failed({"kind": "clique_mismatch", "clique": a.core_clique, "expected": t})
    idems = [e for e in ring.idempotent_elements if e != 0]
    primitive = [
        e for e in idems if not any(f != e and ring.mul(e, f) == f for f in idems)
    ]
    if len(primitive) != t:
        return _failed({"kind": "primitive_count", "count": len(primitive), "expected": t})
    for e in primitive:
        for f in primitive:
            if e < f and ring.mul(e, f) != 0:
                return _failed({"kind": "not_orthogonal", "pair": [e, f]})
    total = 0
    for e in primitive:
        total = ring.add(total, e)
    if total != ring.one:
        return _failed({"kind": "sum_not_one", "sum": total})
    sizes = []
    for e in primitive:
        component = ring.idempotent_component(e)
        sizes.append(component.size)
        if component.maximal_ideal_count != 1:
            return _failed({"kind": "factor_not_local", "idempotent": e})
    witness["local_factor_sizes"] = sorted(sizes)
    return _passed(witness)


@_claim("T3.1", "the core is connected with diameter at most three")
def _check_core_connected(a: RingAnalysis):
    if a.ring.maximal_ideal_count < 2:
        return _skipped("the core of a local ring is empty")
    m = a.core_metrics
    g = a.graph("core")
    if not m.connected:
        u, v = m.witness_pair
        return _failed(
            {"kind": "disconnected", "pair": [g.vertex_keys[u], g.vertex_keys[v]]}
        )
    if m.diameter > 3:
        u, v = m.witness_pair
        return _failed(
            {
                "kind": "diameter",
                "pair": [g.vertex_keys[u], g.vertex_keys[v]],
                "distance": m.diameter,
            }
        )
    return _passed({"diameter": m.diameter})


@_claim("L3.2", "core diameter is one exactly for Z/2 x Z/2")
def _check_diameter_one(a: RingAnalysis):
    m = a.core_metrics
    lhs = m.diameter == 1
    rhs = a.is_z2xz2
    witness = {"diameter": m.diameter_text(), "is_z2xz2": rhs}
    return _passed(witness) if lhs == rhs else _failed(witness)


@_claim("P3.3a", "prime-radical diameter bound (no finite instances)")
def _check_prime_radical(a: RingAnalysis):
    return _skipped(
        "vacuous here: a finite ring with prime radical is local, "
        "and the statement assumes a non-local ring"
    )


@_claim("P3.3b", "core diameter is two exactly for two maximal ideals, except Z/2 x Z/2")
def _check_diameter_two(a: RingAnalysis):
    t = a.ring.maximal_ideal_count
    if t < 2:
        return _skipped("stated for non-local rings")
    m = a.core_metrics
    lhs = m.diameter == 2
    rhs = t == 2 and not a.is_z2xz2
    witness = {"diameter": m.diameter_text(), "max_ideal_count": t, "is_z2xz2": a.is_z2xz2}
    return _passed(witness) if lhs == rhs else _failed(witness)


@_claim("E3.4", "core diameter of Z/n follows its distinct prime count")
def _check_zn_pattern(a: RingAnalysis):
    ring = a.ring
    if ring.characteristic != ring.size:
        return _skipped("additive group is not cyclic of full order, so this is not Z/n")
    r = _distinct_prime_count(ring.size)
    m = a.core_metrics
    witness = {
        "n": ring.size,
        "distinct_primes": r,
        "core_vertices": m.vertex_count,
        "diameter": m.diameter_text(),
    }
    if r == 1:
        ok = m.vertex_count == 0
    elif r == 2:
        ok = m.diameter == 2
    else:
        ok = m.diameter == 3
    return _passed(witness) if ok else _failed(witness)


@_claim("P4.7a", "adjacency is constant across radical cosets")
def _check_coset_lifting(a: RingAnalysis):
    ring = a.ring
    radical = ring.jacobson_radical
    if len(radical) == 1:
        return _passed({"cosets": ring.size, "note": "radical is zero; cosets are singletons"})
    g = a.graph("full")
    reps, rep_of = ring.coset_representatives(radical)
    members: list[list[int]] = []
    masks: list[int] = []
    for r in reps:
        mem = [int(x) for x in np.flatnonzero(rep_of == r)]
        members.append(mem)
        mask = 0
        for x in mem:
            mask |= 1 << x
        masks.append(mask)
    k = len(reps)
    for i in range(k):
        for j in range(i + 1, k):
            count = sum((g.rows[u] & masks[j]).bit_count() for u in members[i])
            expected_full = len(members[i]) * len(members[j])
            if count == 0 or count == expected_full:
                continue
            good = bad = None
            for u in members[i]:
                for v in members[j]:
                    if g.has_edge(u, v):
                        good = good or [u, v]
                    else:
                        bad = bad or [u, v]
            return _failed(
                {
                    "coset_pair": [int(reps[i]), int(reps[j])],
                    "adjacent_pair": good,
                    "non_adjacent_pair": bad,
                }
            )
    return _passed({"cosets": k})


@_claim("P4.7b", "within a radical coset, adjacency happens exactly on unit cosets")
def _check_coset_units(a: RingAnalysis):
    ring = a.ring
    radical = ring.jacobson_radical
    if len(radical) == 1:
        return _passed({"cosets": ring.size, "note": "radical is zero; cosets are singletons"})
    g = a.graph("full")
    reps, rep_of = ring.coset_representatives(radical)
    units = ring.unit_flags
    unit_cosets = 0
    for r in reps:
        mem = [int(x) for x in np.flatnonzero(rep_of == r)]
        mask = 0
        for x in mem:
            mask |= 1 << x
        internal = sum((g.rows[u] & mask).bit_count() for u in mem) // 2
        possible = len(mem) * (len(mem) - 1) // 2
        coset_units = [bool(units[x]) for x in mem]
        if bool(units[int(r)]):
            unit_cosets += 1
            if not all(coset_units):
                x = mem[coset_units.index(False)]
                return _failed({"kind": "nonunit_in_unit_coset", "coset_rep": int(r), "element": x})
            if internal != possible:
                pair = next(
                    [u, v]
                    for u in mem
                    for v in mem
                    if u < v and not g.has_edge(u, v)
                )
                return _failed({"kind": "missing_internal_edge", "coset_rep": int(r), "pair": pair})
        else:
            if any(coset_units):
                x = mem[coset_units.index(True)]
                return _failed({"kind": "unit_in_nonunit_coset", "coset_rep": int(r), "element": x})
            if internal != 0:
                pair = next(
                    [u, v] for u in mem for v in mem if u < v and g.has_edge(u, v)
                )
                return _failed({"kind": "unexpected_internal_edge", "coset_rep": int(r), "pair": pair})
    return _passed({"cosets": len(reps), "unit_cosets": unit_cosets})


@_claim("P4.7c", "radical-coset representatives induce the quotient ring's graph")
def _check_quotient_graph(a: RingAnalysis):
    ring = a.ring
    radical = ring.jacobson_radical
    quotient, proj = ring.quotient(radical)
    if quotient is ring:
        return _passed({"note": "radical is zero; the quotient is the ring itself"})
    reps, _ = ring.coset_representatives(radical)
    reps = [int(r) for r in reps]
    for i, r in enumerate(reps):
        assert proj(r) == i, "representative order must match quotient element order"
    g_full = a.graph("full")
    g_quot = build_comaximal_graph(quotient, "full")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            ring_adj = g_full.has_edge(reps[i], reps[j])
            quot_adj = g_quot.has_edge(i, j)
            if ring_adj != quot_adj:
                return _failed(
                    {
                        "rep_pair": [reps[i], reps[j]],
                        "ring_adjacent": ring_adj,
                        "quotient_adjacent": quot_adj,
                    }
                )
    return _passed({"quotient_size": quotient.size})


@_claim("SB-chi", "full-graph chromatic and clique numbers equal maximal ideals plus units")
def _check_full_coloring(a: RingAnalysis):
    ring = a.ring
    limit = a.caps.exact_chromatic_ring_size
    if ring.size > limit:
        return _skipped(f"exact chromatic number restricted to rings of size <= {limit}")
    g = a.graph("full")
    expected = ring.maximal_ideal_count + ring.unit_count
    omega = clique_number(g, a.caps.max_exact_vertices)
    chi = chromatic_number(g, a.caps.max_exact_vertices)
    witness = {"clique": omega, "chromatic": chi, "expected": expected}
    ok = omega == expected and chi == expected
    return _passed(witness) if ok else _failed(witness)


# -- pair claims -------------------------------------------------------------------


@_claim("T4.4", "isomorphic graphs force matching residue field multisets", arity=2)
def _check_residue_match(a1: RingAnalysis, a2: RingAnalysis):
    g1, g2 = a1.graph("full"), a2.graph("full")
    cap = a1.caps.max_graphiso_vertices
    if max(g1.n, g2.n) > cap:
        return _skipped(f"graph isomorphism capped at {cap} vertices")
    if are_isomorphic(g1, g2, cap) is None:
        return _skipped("graphs are not isomorphic, so the hypothesis is not met")
    res1 = list(a1.ring.residue_field_sizes)
    res2 = list(a2.ring.residue_field_sizes)
    if res1 != res2:
        return _failed({"kind": "residue_mismatch", "residues": [res1, res2]})
    for analysis in (a1, a2):
        ring = analysis.ring
        g = analysis.graph("full")
        ideals = ring.maximal_ideals
        for idx, ideal in enumerate(ideals):
            others = 0
            for jdx, other in enumerate(ideals):
                if jdx != idx:
                    others |= other.mask
            only = ideal.mask & ~others
            assert only, "a maximal ideal is covered by the others"
            x = (only & -only).bit_length() - 1
            non_neighbours = g.n - 1 - g.rows[x].bit_count()
            if non_neighbours != len(ideal) - 1:
                return _failed(
                    {
                        "kind": "non_neighbour_count",
                        "ring": analysis.text,
                        "element": x,
                        "count": non_neighbours,
                        "ideal_size": len(ideal),
                    }
                )
    return _passed({"residues": res1})


@_claim("C4.6", "for reduced rings, graph isomorphism coincides with ring isomorphism", arity=2)
def _check_reduced_rigidity(a1: RingAnalysis, a2: RingAnalysis):
    r1, r2 = a1.ring, a2.ring
    if not (r1.is_reduced or r2.is_reduced):
        return _skipped("neither ring is reduced")
    if r1.size != r2.size:
        return _passed({"graphs_isomorphic": False, "rings_isomorphic": False})
    cap = a1.caps.max_ringiso_size
    if r1.size > cap:
        return _skipped(f"ring isomorphism capped at size {cap}")
    giso = are_isomorphic(a1.graph("full"), a2.graph("full"), a1.caps.max_graphiso_vertices)
    riso = ring_isomorphic(r1, r2, cap=cap)
    witness = {"graphs_isomorphic": giso is not None, "rings_isomorphic": riso is not None}
    ok = (giso is None) == (riso is None)
    return _passed(witness) if ok else _failed(witness)


CLAIM_ORDER: dict[str, int] = {
    cid: i for i, cid in enumerate([*SINGLE_CLAIMS, *PAIR_CLAIMS])
}


def claim_catalog() -> list[tuple[str, str, int]]:
    """(id, summary, arity) for every registered claim, in canonical order."""
    specs = [*SINGLE_CLAIMS.values(), *PAIR_CLAIMS.values()]
    return [(s.claim_id, s.summary, s.arity) for s in specs]


# -- driving ------------------------------------------------------------------------


def _as_analysis(target, text: str | None, caps: Caps | None) -> RingAnalysis:
    if isinstance(target, RingAnalysis):
        return target
    return RingAnalysis(target, text=text, caps=caps)


def verify_ring(
    target: RingTable | RingAnalysis,
    claims: Sequence[str] | None = None,
    *,
    text: str | None = None,
    caps: Caps | None = None,
) -> list[ClaimReport]:
    """Run single-ring claims (all by default) and report each outcome."""
    analysis = _as_analysis(target, text, caps)
    ids = list(claims) if claims is not None else list(SINGLE_CLAIMS)
    reports = []
    for cid in ids:
        spec = SINGLE_CLAIMS.get(cid)
        if spec is None:
            raise ValueError(f"unknown claim id {cid!r}")
        start = time.perf_counter()
        try:
            outcome, witness, reason = spec.check(analysis)
        except CapacityError as exc:
            outcome, witness, reason = "skip", None, str(exc)
        reports.append(
            ClaimReport(
                cid,
                (analysis.text,),
                outcome,
                reason,
                witness,
                time.perf_counter() - start,
            )
        )
    return reports


def verify_pair(
    first: RingTable | RingAnalysis,
    second: RingTable | RingAnalysis,
    claims: Sequence[str] | None = None,
    *,
    texts: tuple[str | None, str | None] = (None, None),
    caps: Caps | None = None,
) -> list[ClaimReport]:
    """Run two-ring claims (all by default) against an ordered pair."""
    caps = caps or Caps()
    a1 = _as_analysis(first, texts[0], caps)
    a2 = _as_analysis(second, texts[1], caps)
    ids = list(claims) if claims is not None else list(PAIR_CLAIMS)
    reports = []
    for cid in ids:
        spec = PAIR_CLAIMS.get(cid)
        if spec is None:
            raise ValueError(f"unknown claim id {cid!r}")
        start = time.perf_counter()
        try:
            outcome, witness, reason = spec.check(a1, a2)
        except CapacityError as exc:
            outcome, witness, reason = "skip", None, str(exc)
        reports.append(
            ClaimReport(
                cid,
                (a1.text, a2.text),
                outcome,
                reason,
                witness,
                time.perf_counter() - start,
            )
        )
    return reports


# -- sweeps ------------------------------------------------------------------------


def zn_family(max_n: int) -> list[str]:
    return [f"Z/{n}" for n in range(2, max_n + 1)]


def product_family(
    base_texts: Sequence[str],
    max_factors: int = 3,
    max_size: int = 512,
) -> list[str]:
    """All products of 1..max_factors base rings, capped by total size."""
    sizes = [expression_size(parse_expression(t)) for t in base_texts]
    out = []
    for r in range(1, max_factors + 1):
        for combo in combinations_with_replacement(range(len(base_texts)), r):
            total = 1
            for i in combo:
                total *= sizes[i]
            if total <= max_size:
                out.append(" x ".join(base_texts[i] for i in combo))
    return out


def corpus_family(path: str) -> list[str]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line)
    return out


def _sweep_one(text: str, ids: list[str], caps: Caps) -> list[dict]:
    try:
        ring = ring_from_text(text, max_size=caps.max_ring_size)
    except (ParseError, TableFormatError, RingAxiomError, CapacityError, ValueError) as exc:
        reason = f"construction failed: {exc}"
        return [
            ClaimReport(cid, (text,), "skip", reason, None).to_json() for cid in ids
        ]
    return [r.to_json() for r in verify_ring(ring, ids, text=text, caps=caps)]


def sweep(
    texts: Sequence[str],
    claims: Sequence[str] | None = None,
    *,
    caps: Caps | None = None,
    jobs: int = 1,
) -> dict:
    """Check claims across a family of rings; the result dict is JSON-ready.

    Entries are sorted by (ring, claim) so identical inputs always produce
    identical reports, regardless of worker count.
    """
    caps = caps or Caps()
    ids = list(claims) if claims is not None else list(SINGLE_CLAIMS)
    for cid in ids:
        if cid not in SINGLE_CLAIMS:
            raise ValueError(f"unknown claim id {cid!r}")
    entries: list[dict] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_sweep_one, texts, [ids] * len(texts), [caps] * len(texts)):
                entries.extend(chunk)
    else:
        for text in texts:
            entries.extend(_sweep_one(text, ids, caps))
    entries.sort(key=lambda e: (e["rings"], CLAIM_ORDER[e["claim"]]))
    summary = {"pass": 0, "fail": 0, "skip": 0}
    for e in entries:
        summary[e["outcome"]] += 1
    return {
        "tool_version": __version__,
        "caps": caps.to_json(),
        "entries": entries,
        "summary": summary,
    }


def save_report(report: dict, path: str) -> None:
    import json

    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, sort_keys=True, indent=2)
        fh.write("\n")


# -- report auditing -----------------------------------------------------------------


def _audit_fail_witness(claim: str, witness: dict, analyses: list[RingAnalysis]) -> bool:
    """Does the recorded witness genuinely contradict the claim?"""
    a = analyses[0]
    ring = a.ring
    if claim == "L2.1a":
        x, y = witness["non_adjacent_units"]
        return (
            ring.is_unit(x)
            and ring.is_unit(y)
            and x != y
            and not ring.is_comaximal_via_closure(x, y)
        )
    if claim == "L2.1b":
        x = witness["element"]
        g = a.graph("nonunits")
        pos = g.vertex_keys.index(x)
        deg = g.rows[pos].bit_count()
        in_rad = x in ring.jacobson_radical
        return deg == witness["degree"] and in_rad == witness["in_radical"] and (
            (deg == 0) != in_rad
        )
    if claim == "JOIN":
        x, y = witness["edge"]
        full_has = x != y and ring.is_comaximal(x, y)
        ux, uy = ring.is_unit(x), ring.is_unit(y)
        if ux != uy:
            join_has = x != y
        else:
            join_has = x != y and ring.is_comaximal(x, y)
        return full_has != join_has and witness["in_full"] == full_has
    if claim == "T2.2":
        st = multipartite_structure(a.graph("core"))
        t = ring.maximal_ideal_count
        return (
            witness["core_complete_bipartite"] == st.is_complete_bipartite
            and witness["max_ideal_count"] == t
            and st.is_complete_bipartite != (t == 2)
        )
    if claim == "P2.3":
        t = ring.maximal_ideal_count
        if t < 2:
            return False
        return (
            witness["clique"] == a.core_clique
            and witness["chromatic"] == a.core_chromatic
            and witness["max_ideal_count"] == t
            and not (a.core_clique == t and a.core_chromatic == t)
        )
    if claim == "P2.4a":
        if ring.maximal_ideal_count < 2:
            return False
        st = multipartite_structure(a.graph("core"))
        return (
            st.multipartite_parts is not None
            and witness["parts"] == len(st.multipartite_parts)
            and len(st.multipartite_parts) != 2
        )
    if claim == "P2.4b":
        if ring.maximal_ideal_count < 2:
            return False
        g = a.graph("core")
        if not any(g.rows[i].bit_count() == g.n - 1 for i in range(g.n)):
            return False
        kind = witness["kind"]
        if kind == "radical_nonzero":
            return len(ring.jacobson_radical) == witness["radical_size"] > 1
        if kind == "max_ideal_count":
            return ring.maximal_ideal_count == witness["count"] != 2
        if kind == "pair_ideal_missing":
            x = witness["vertex"]
            mask = 1 | (1 << x)
            return not any(m.mask == mask for m in ring.maximal_ideals)
        if kind == "size_not_2q":
            q, rem = divmod(ring.size, 2)
            return bool(rem) or not _is_prime_power(q)
        if kind == "not_isomorphic":
            target = ring_from_text(witness["target"])
            return ring_isomorphic(ring, target, cap=max(ring.size, 4)) is None
        return False
    if claim == "T2.5":
        kind = witness["kind"]
        if kind == "not_clean":
            x = witness["element"]
            return not any(
                ring.is_unit(ring.sub(x, e)) for e in ring.idempotent_elements
            )
        if kind == "clique_mismatch":
            return a.core_clique == witness["clique"] != ring.maximal_ideal_count
        if kind == "local_core_nonempty":
            return ring.maximal_ideal_count == 1 and a.graph("core").n > 0
        idems = [e for e in ring.idempotent_elements if e != 0]
        primitive = [
            e for e in idems if not any(f != e and ring.mul(e, f) == f for f in idems)
        ]
        if kind == "primitive_count":
            return len(primitive) == witness["count"] != ring.maximal_ideal_count
        if kind == "not_orthogonal":
            e, f = witness["pair"]
            return e != f and e in primitive and f in primitive and ring.mul(e, f) != 0
        if kind == "sum_not_one":
            total = 0
            for e in primitive:
                total = ring.add(total, e)
            return total == witness["sum"] and total != ring.one
        if kind == "factor_not_local":
            e = witness["idempotent"]
            if e not in primitive:
                return False
            component = ring.idempotent_component(e)
            return component.maximal_ideal_count != 1
        return False
    if claim == "T3.1":
        g = a.graph("core")
        x, y = witness["pair"]
        u = g.vertex_keys.index(x)
        v = g.vertex_keys.index(y)
        d = distance(g, u, v)
        if witness["kind"] == "disconnected":
            return d is None
        return d == witness["distance"] and d is not None and d > 3
    if claim == "L3.2":
        lhs = a.core_metrics.diameter == 1
        rhs = a.is_z2xz2
        return witness["is_z2xz2"] == rhs and lhs != rhs
    if claim == "P3.3b":
        t = ring.maximal_ideal_count
        lhs = a.core_metrics.diameter == 2
        rhs = t == 2 and not a.is_z2xz2
        return witness["max_ideal_count"] == t and lhs != rhs
    if claim == "E3.4":
        if ring.characteristic != ring.size:
            return False
        r = _distinct_prime_count(ring.size)
        m = a.core_metrics
        if witness["distinct_primes"] != r:
            return False
        if r == 1:
            return m.vertex_count != 0
        if r == 2:
            return m.diameter != 2
        return m.diameter != 3
    if claim == "P4.7a":
        radical = ring.jacobson_radical
        _, rep_of = ring.coset_representatives(radical)
        u, v = witness["adjacent_pair"]
        p, q = witness["non_adjacent_pair"]
        same_cosets = rep_of[u] == rep_of[p] and rep_of[v] == rep_of[q]
        return (
            bool(same_cosets)
            and ring.is_comaximal_via_closure(u, v)
            and not ring.is_comaximal_via_closure(p, q)
        )
    if claim == "P4.7b":
        radical = ring.jacobson_radical
        _, rep_of = ring.coset_representatives(radical)
        kind = witness["kind"]
        rep = witness["coset_rep"]
        if kind in ("nonunit_in_unit_coset", "unit_in_nonunit_coset"):
            x = witness["element"]
            if rep_of[x] != rep:
                return False
            return ring.is_unit(x) != ring.is_unit(rep)
        u, v = witness["pair"]
        if rep_of[u] != rep or rep_of[v] != rep:
            return False
        adjacent = ring.is_comaximal_via_closure(u, v)
        if kind == "missing_internal_edge":
            return ring.is_unit(rep) and not adjacent
        if kind == "unexpected_internal_edge":
            return not ring.is_unit(rep) and adjacent
        return False
    if claim == "P4.7c":
        quotient, proj = ring.quotient(ring.jacobson_radical)
        _, rep_of = ring.coset_representatives(ring.jacobson_radical)
        x, y = witness["rep_pair"]
        if x == y or rep_of[x] != x or rep_of[y] != y:
            return False
        ring_adj = ring.is_comaximal_via_closure(x, y)
        quot_adj = quotient.is_comaximal(proj(x), proj(y))
        return ring_adj != quot_adj and witness["ring_adjacent"] == ring_adj
    if claim == "SB-chi":
        g = a.graph("full")
        expected = ring.maximal_ideal_count + ring.unit_count
        omega = clique_number(g, a.caps.max_exact_vertices)
        chi = chromatic_number(g, a.caps.max_exact_vertices)
        return (
            witness["clique"] == omega
            and witness["chromatic"] == chi
            and not (omega == expected and chi == expected)
        )
    if claim == "T4.4":
        a2 = analyses[1]
        g1, g2 = a.graph("full"), a2.graph("full")
        if are_isomorphic(g1, g2, a.caps.max_graphiso_vertices) is None:
            return False
        if witness["kind"] == "residue_mismatch":
            res1 = list(a.ring.residue_field_sizes)
            res2 = list(a2.ring.residue_field_sizes)
            return witness["residues"] == [res1, res2] and res1 != res2
        if witness["kind"] == "non_neighbour_count":
            target = a if witness["ring"] == a.text else a2
            g = target.graph("full")
            x = witness["element"]
            holders = [
                m for m in target.ring.maximal_ideals if x in m
            ]
            if len(holders) != 1:
                return False
            count = g.n - 1 - g.rows[x].bit_count()
            return (
                count == witness["count"]
                and len(holders[0]) == witness["ideal_size"]
                and count != len(holders[0]) - 1
            )
        return False
    if claim == "C4.6":
        a2 = analyses[1]
        if not (a.ring.is_reduced or a2.ring.is_reduced):
            return False
        giso = are_isomorphic(
            a.graph("full"), a2.graph("full"), a.caps.max_graphiso_vertices
        )
        riso = ring_isomorphic(a.ring, a2.ring, cap=max(a.ring.size, a.caps.max_ringiso_size))
        return (
            witness["graphs_isomorphic"] == (giso is not None)
            and witness["rings_isomorphic"] == (riso is not None)
            and (giso is None) != (riso is None)
        )
    return False


def revalidate_report(
    report: ClaimReport | dict,
    rings: Sequence[RingTable] | None = None,
    *,
    caps: Caps | None = None,
) -> bool:
    """Audit a claim report against the ring primitives.

    Pass/skip outcomes carry no counter-witness and validate trivially.
    A fail outcome validates only when its recorded witness still
    contradicts the claim when recomputed from scratch; hand-edited
    reports or graphs are rejected here.
    """
    if isinstance(report, ClaimReport):
        claim, outcome = report.claim, report.outcome
        witness, texts = report.witness, report.rings
    else:
        claim, outcome = report["claim"], report["outcome"]
        witness, texts = report.get("witness"), report["rings"]
    if outcome in ("pass", "skip"):
        return True
    if witness is None:
        return False
    if rings is None:
        rings = [ring_from_text(t) for t in texts]
    analyses = [
        RingAnalysis(r, text=t, caps=caps) for r, t in zip(rings, texts)
    ]
    try:
        return _audit_fail_witness(claim, witness, analyses)
    except (KeyError, TypeError, ValueError, IndexError, CapacityError):
        return False
