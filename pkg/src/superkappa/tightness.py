"""Boundary probing for the super-connectivity sufficient conditions.

Samples small instances that fail exactly one hypothesis clause of a
target rule, builds the corresponding construction, decides super
connectivity by complete cut enumeration, and records which boundary
instances break the conclusion (witnesses) and which do not
(non-witnesses; the conditions are sufficient, not necessary).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import connectivity as conn
from .construct import (
    cycle,
    direct_product,
    double_cover,
    random_connected_bipartite,
    random_connected_nonbipartite,
    tilde,
)
from .errors import GenerationError, InputError
from .formats import write_graph6
from .theorems import check_hypotheses, hypotheses_hold

TARGETS = ("L2.2", "T3.5", "T3.6", "T3.7", "T3.8")


@dataclass
class BoundaryRecord:
    target: str
    instance: dict
    failed_clause: str
    conclusion_holds: bool | None  # None: enumeration incomplete
    witness: dict | None = None


@dataclass
class TightnessReport:
    target: str
    records: list = field(default_factory=list)
    instances_probed: int = 0
    complete: bool = True
    runtime_ms: int = 0

    @property
    def witnesses(self):
        return [r for r in self.records if r.conclusion_holds is False]

    def to_json(self):
        return {
            "target": self.target,
            "instances_probed": self.instances_probed,
            "complete": self.complete,
            "runtime_ms": self.runtime_ms,
            "records": [
                {
                    "instance": r.instance,
                    "failed_clause": r.failed_clause,
                    "conclusion_holds": r.conclusion_holds,
                    "witness": r.witness,
                }
                for r in self.records
            ],
        }


def _boundary_candidates(target, max_part_size, n_range, seed):
    """Yield (graph, n, provenance) candidates to screen."""
    if target in ("L2.2", "T3.5", "T3.6"):
        sizes = [
            (m, k)
            for m in range(1, max_part_size + 1)
            for k in range(m, max_part_size + 1)
        ]
        probs = (0.5, 0.7, 1.0)
        for n in n_range:
            for m, k in sizes:
                for i, p in enumerate(probs):
                    s = seed + 1009 * i + 31 * (m * 64 + k) + n
                    try:
                        G, _ = random_connected_bipartite(m, k, p, s, min_delta=1)
                    except GenerationError:
                        continue
                    yield G, n, {
                        "random_bipartite": {"m": m, "n": k, "p": p, "seed": s}
                    }
    else:
        probs = (0.4, 0.6, 0.8)
        for n in n_range:
            for nv in range(3, 2 * max_part_size + 1):
                for i, p in enumerate(probs):
                    s = seed + 1013 * i + 17 * nv + n
                    try:
                        G = random_connected_nonbipartite(nv, p, s, min_delta=2)
                    except GenerationError:
                        continue
                    yield G, n, {
                        "random_nonbipartite": {"n": nv, "p": p, "seed": s}
                    }


def _parity_ok(target, G, n):
    bip = G.is_bipartite() is not None
    if target == "L2.2":
        return bip and n >= 3
    if target == "T3.5":
        return bip and n >= 3 and n % 2 == 1
    if target == "T3.6":
        return bip and n >= 6 and n % 2 == 0
    if target == "T3.7":
        return (not bip) and n >= 6 and n % 2 == 0
    return (not bip) and n >= 7 and n % 2 == 1


def _build(target, G, n):
    if target == "L2.2":
        H, _ = tilde(G, G.is_bipartite(), n)
        return [H]
    prod = direct_product(G, cycle(n))
    if target == "T3.6":
        return [prod.induced_subgraph(sorted(c)) for c in prod.components()]
    return [prod]


def tightness_search(target, max_part_size, n_range, seed, budget, cut_budget=conn.EXHAUSTIVE_BUDGET):
    """Probe instances that miss exactly one hypothesis clause of `target`.

    `budget` caps the number of boundary instances evaluated; hitting it
    flags the report incomplete rather than guessing.
    """
    if target not in TARGETS:
        raise InputError(f"tightness target must be one of {TARGETS}")
    if budget <= 0:
        raise InputError("budget must be positive")
    start = time.perf_counter()
    report = TightnessReport(target=target)
    seen = set()
    for G, n, provenance in _boundary_candidates(target, max_part_size, n_range, seed):
        key = (G.n, G.edges, n)
        if key in seen:
            continue
        seen.add(key)
        if not _parity_ok(target, G, n):
            continue
        clauses = check_hypotheses(target, G, n=n)
        failed = [c for c in clauses if not c.holds]
        if len(failed) != 1:
            continue
        if report.instances_probed >= budget:
            report.complete = False
            break
        report.instances_probed += 1
        built = _build(target, G, n)
        holds = True
        witness = None
        for H in built:
            res = conn.is_super_kappa(H, budget=cut_budget)
            if res.status is None:
                holds = None
                break
            if res.status is False:
                holds = False
                witness = {
                    "graph6": write_graph6(H).strip(),
                    "cut": sorted(res.witness.vertices),
                }
                break
        instance = dict(provenance)
        instance["n"] = n
        instance["graph6"] = write_graph6(G).strip()
        report.records.append(
            BoundaryRecord(
                target=target,
                instance=instance,
                failed_clause=failed[0].text,
                conclusion_holds=holds,
                witness=witness,
            )
        )
    report.runtime_ms = int((time.perf_counter() - start) * 1000)
    return report
