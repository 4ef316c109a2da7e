"""Sweep engines behind the CLI: family scans, theorem verdicts, and the
second-tier exploration.

Every sweep streams a deterministic family, counts each graph exactly, and
aggregates the top count tiers.  Results are plain dataclasses; `to_dict`
gives the JSON-stable view (elapsed time is deliberately excluded so output
is byte-identical across runs; timing goes to the diagnostic stream).
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from itertools import islice
from multiprocessing import Pool
from typing import Iterable, Iterator

from .canon import canonical_form
from .counting import (
    count,
    count_cycle,
    count_path,
    max_tree_count,
    max_unicyclic_count,
    subset_bound,
)
from .families import (
    complete_graph,
    extremal_trees,
    extremal_unicyclic,
    is_complete_multipartite_small_parts,
    is_union_of_vertices_and_edges,
    star_join,
)
from .generate import FamilySpec, all_connected, all_graphs, family_stream
from .graph import Graph
from .graph6 import from_graph6, to_graph6
from .transforms import delete_edge_check, find_quasi_pendants, quasi_pendant_transform

PROGRESS_EVERY = 10_000

VERIFIED = "verified"
VIOLATED = "violated"


# -- counting over streams ----------------------------------------------------

def _count_g6(text: str) -> int:
    return count(from_graph6(text))


def counted_stream(
    graphs: Iterable[Graph], jobs: int = 1, batch: int = 2048
) -> Iterator[tuple[Graph, int]]:
    """Yield (graph, count) in stream order, optionally over a worker pool."""
    if jobs <= 1:
        for g in graphs:
            yield g, count(g)
        return
    it = iter(graphs)
    with Pool(processes=jobs) as pool:
        while True:
            chunk = list(islice(it, batch))
            if not chunk:
                return
            texts = [to_graph6(g) for g in chunk]
            counts = pool.map(_count_g6, texts, chunksize=max(1, batch // (4 * jobs)))
            yield from zip(chunk, counts)


def _progress(label: str, done: int) -> None:
    if done % PROGRESS_EVERY == 0:
        print(f"{label}: {done} graphs scanned", file=sys.stderr)


class _TopTiers:
    """Accumulate the graphs of the k largest distinct count values."""

    def __init__(self, k: int):
        self.k = k
        self.tiers: dict[int, list[str]] = {}

    def add(self, g6: str, c: int) -> None:
        bucket = self.tiers.get(c)
        if bucket is not None:
            bucket.append(g6)
            return
        if len(self.tiers) < self.k:
            self.tiers[c] = [g6]
            return
        low = min(self.tiers)
        if c > low:
            del self.tiers[low]
            self.tiers[c] = [g6]

    def ranked(self) -> list[tuple[int, list[str]]]:
        return [
            (c, _sort_by_canon(g6s))
            for c, g6s in sorted(self.tiers.items(), reverse=True)
        ]


def _sort_by_canon(g6s: list[str]) -> list[str]:
    return sorted(g6s, key=lambda s: canonical_form(from_graph6(s)))


def _canon_set(graphs: Iterable[Graph]) -> set[bytes]:
    return {canonical_form(g) for g in graphs}


# -- family scans --------------------------------------------------------------

@dataclass
class ScanReport:
    """Top count tiers of one family at one order."""

    family: str
    order: int
    total_scanned: int
    max_count: int
    extremal: list[str]
    runner_up_count: int | None
    runner_up: list[str]
    tiers: list[tuple[int, list[str]]]
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "order": self.order,
            "total_scanned": self.total_scanned,
            "max_count": self.max_count,
            "extremal": [[g, self.max_count] for g in self.extremal],
            "runner_up_count": self.runner_up_count,
            "runner_up": [[g, self.runner_up_count] for g in self.runner_up],
            "tiers": [[c, list(gs)] for c, gs in self.tiers],
        }


def scan_family(
    family: str,
    order: int,
    top: int = 2,
    jobs: int = 1,
    graphs: Iterable[Graph] | None = None,
) -> ScanReport:
    """Count every graph of a family and report the top count tiers.

    ``graphs`` substitutes an external stream (e.g. ingested graph6) for the
    in-repo generator, bypassing the family caps.
    """
    start = time.monotonic()
    if graphs is None:
        graphs = family_stream(FamilySpec(family, order))
    tracker = _TopTiers(max(top, 2))
    total = 0
    for g, c in counted_stream(graphs, jobs=jobs):
        total += 1
        tracker.add(to_graph6(g), c)
        _progress(f"scan {family} n={order}", total)
    if total == 0:
        raise ValueError("nothing to scan: empty graph stream")
    ranked = tracker.ranked()
    max_count, extremal = ranked[0]
    runner = ranked[1] if len(ranked) > 1 else None
    return ScanReport(
        family=family,
        order=order,
        total_scanned=total,
        max_count=max_count,
        extremal=extremal,
        runner_up_count=runner[0] if runner else None,
        runner_up=runner[1] if runner else [],
        tiers=ranked[: max(top, 1)],
        elapsed=time.monotonic() - start,
    )


# -- theorem verdicts -----------------------------------------------------------

@dataclass
class TheoremVerdict:
    """Per-order verified/violated status with counterexamples."""

    theorem: str
    orders: list[int]
    status: dict[int, str] = field(default_factory=dict)
    counterexamples: dict[int, list[str]] = field(default_factory=dict)
    details: dict[int, str] = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return all(s == VERIFIED for s in self.status.values())

    def record(self, order: int, ok: bool, detail: str = "", bad: list[str] | None = None):
        self.status[order] = VERIFIED if ok else VIOLATED
        if detail:
            self.details[order] = detail
        if not ok:
            self.counterexamples[order] = bad or []

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "orders": self.orders,
            "verified": self.verified,
            "status": {str(n): s for n, s in sorted(self.status.items())},
            "counterexamples": {
                str(n): gs for n, gs in sorted(self.counterexamples.items())
            },
            "details": {str(n): d for n, d in sorted(self.details.items())},
        }


def _verify_bounds(verdict: TheoremVerdict, orders: list[int], jobs: int) -> None:
    """(n^2+n+2)/2 <= d(G) <= 2^n with both equality characterizations."""
    for n in orders:
        low = (n * n + n + 2) // 2
        high = subset_bound(n)
        bad = []
        for g, c in counted_stream(all_graphs(n), jobs=jobs):
            ok = (
                low <= c <= high
                and (c == low) == is_complete_multipartite_small_parts(g)
                and (c == high) == is_union_of_vertices_and_edges(g)
            )
            if not ok:
                bad.append(to_graph6(g))
        verdict.record(n, not bad, f"range [{low}, {high}]", bad)


def _verify_edge_deletion(verdict: TheoremVerdict, orders: list[int], jobs: int) -> None:
    """d(G) <= d(G-uv) for every edge, equality exactly at true twins."""
    for n in orders:
        bad = []
        for g in all_graphs(n):
            for u, v in g.edges():
                rec = delete_edge_check(g, u, v)
                equal_expected = rec.twins == "true-twin"
                if rec.after < rec.before or (rec.relation == "equal") != equal_expected:
                    bad.append(to_graph6(g))
                    break
        verdict.record(n, not bad, "all edges checked", bad)


def _verify_quasi_pendant(verdict: TheoremVerdict, orders: list[int], jobs: int) -> None:
    """Pendant-bundle rewiring strictly increases the count except on the
    degenerate two-pendant star (where it is the identity)."""
    for n in orders:
        bad = []
        sites = 0
        for g in all_connected(n):
            before = count(g)
            for u_q, pendants in find_quasi_pendants(g):
                if len(pendants) < 2:
                    continue
                sites += 1
                after = count(quasi_pendant_transform(g, u_q))
                degenerate = g.degree(u_q) == len(pendants) == 2
                ok = before == after if degenerate else before < after
                if not ok:
                    bad.append(to_graph6(g))
        verdict.record(n, not bad, f"{sites} rewiring sites", bad)


def _verify_family_max(
    verdict: TheoremVerdict,
    orders: list[int],
    jobs: int,
    family: str,
    expected_max,
    expected_graphs,
) -> None:
    for n in orders:
        report = scan_family(family, n, top=1, jobs=jobs)
        want_max = expected_max(n)
        want = _canon_set(expected_graphs(n))
        got = {s: canonical_form(from_graph6(s)) for s in report.extremal}
        ok = report.max_count == want_max and set(got.values()) == want
        unexpected = [s for s, key in got.items() if key not in want]
        verdict.record(
            n,
            ok,
            f"max {report.max_count} over {report.total_scanned} graphs"
            f" (expected {want_max}, {len(want)} extremal)",
            [] if ok else (unexpected or list(report.extremal)),
        )


def _verify_path_cycle(verdict: TheoremVerdict, orders: list[int], jobs: int) -> None:
    """Cycle counts sit below path counts, and both below the unicyclic max."""
    for n in orders:
        checks = []
        if n >= 4:
            checks.append(count_cycle(n) < count_path(n))
            checks.append(count_cycle(n) < max_unicyclic_count(n))
        if n >= 9:
            checks.append(count_path(n) < max_unicyclic_count(n))
        ok = all(checks)
        verdict.record(n, ok, f"{len(checks)} inequalities")


THEOREMS = {
    "bounds-2.1": (_verify_bounds, range(1, 8)),
    "lemma-2.5": (_verify_edge_deletion, range(2, 8)),
    "lemma-2.8": (_verify_quasi_pendant, range(3, 8)),
    "tree-max-3.1": (
        lambda v, o, j: _verify_family_max(
            v, o, j, "trees", max_tree_count, extremal_trees
        ),
        range(2, 15),
    ),
    "connected-max-3.2": (
        lambda v, o, j: _verify_family_max(
            v, o, j, "connected", max_tree_count, extremal_trees
        ),
        range(2, 10),
    ),
    "unicyclic-max-4.3": (
        lambda v, o, j: _verify_family_max(
            v, o, j, "unicyclic", max_unicyclic_count,
            lambda n: [extremal_unicyclic(n)],
        ),
        range(3, 15),
    ),
    "path-cycle-4.1": (_verify_path_cycle, range(4, 17)),
}


def verify_theorem(theorem: str, orders: Iterable[int] | None = None, jobs: int = 1) -> TheoremVerdict:
    """Exhaustively check one named claim over the given orders."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; known: {sorted(THEOREMS)}")
    func, default = THEOREMS[theorem]
    order_list = sorted(default if orders is None else orders)
    verdict = TheoremVerdict(theorem=theorem, orders=order_list)
    func(verdict, order_list, jobs)
    return verdict


# -- second-largest tier (exploratory) ------------------------------------------

BANNER = "evidence, not theorem"


@dataclass
class QuestionReport:
    """Second-largest count tier among trees and unicyclic graphs of one order."""

    order: int
    max_count: int
    second_count: int | None
    second_graphs: list[str]
    unicyclic_max: int
    second_equals_unicyclic_max: bool
    candidates: list[str]
    second_within_candidates: bool
    connected_checked: bool
    connected_second_count: int | None
    connected_agrees: bool | None
    banner: str = BANNER

    def to_dict(self) -> dict:
        return {
            "banner": self.banner,
            "order": self.order,
            "max_count": self.max_count,
            "second_count": self.second_count,
            "second_graphs": list(self.second_graphs),
            "unicyclic_max": self.unicyclic_max,
            "second_equals_unicyclic_max": self.second_equals_unicyclic_max,
            "candidates": list(self.candidates),
            "second_within_candidates": self.second_within_candidates,
            "connected_checked": self.connected_checked,
            "connected_second_count": self.connected_second_count,
            "connected_agrees": self.connected_agrees,
        }


def _second_tier_candidates(n: int) -> list[Graph]:
    """Conjectured second-tier graphs: the extremal unicyclic graph and its
    true-twin edge deletion (a hub with isolated vertices plus a matching)."""
    k1, k2 = complete_graph(1), complete_graph(2)
    if n % 2:
        tree = star_join(1, [k1, k1] + [k2] * ((n - 3) // 2))
    else:
        tree = star_join(1, [k1, k1, k1] + [k2] * ((n - 4) // 2))
    return [extremal_unicyclic(n), tree]


def question_scan(
    orders: Iterable[int], jobs: int = 1, cross_check: bool = True
) -> list[QuestionReport]:
    """Second-largest tier among trees U unicyclic per order, compared to the
    unicyclic maximum; exhaustively cross-checked against all connected
    graphs where that family is generable (order <= 9)."""
    out = []
    for n in sorted(orders):
        tracker = _TopTiers(2)
        for fam in ("trees", "unicyclic"):
            for g, c in counted_stream(family_stream(FamilySpec(fam, n)), jobs=jobs):
                tracker.add(to_graph6(g), c)
        ranked = tracker.ranked()
        max_count = ranked[0][0]
        second_count, second_graphs = (
            ranked[1] if len(ranked) > 1 else (None, [])
        )
        h_n = max_unicyclic_count(n)
        candidates = _second_tier_candidates(n)
        cand_canon = _canon_set(candidates)
        second_canon = _canon_set(from_graph6(s) for s in second_graphs)

        checked = cross_check and n <= 9
        conn_second = None
        agrees = None
        if checked:
            conn = _TopTiers(2)
            done = 0
            for g, c in counted_stream(all_connected(n), jobs=jobs):
                conn.add(to_graph6(g), c)
                done += 1
                _progress(f"question n={n} connected cross-check", done)
            conn_ranked = conn.ranked()
            conn_second, conn_graphs = (
                conn_ranked[1] if len(conn_ranked) > 1 else (None, [])
            )
            agrees = (
                conn_second == second_count
                and _canon_set(from_graph6(s) for s in conn_graphs) == second_canon
            )

        out.append(
            QuestionReport(
                order=n,
                max_count=max_count,
                second_count=second_count,
                second_graphs=second_graphs,
                unicyclic_max=h_n,
                second_equals_unicyclic_max=second_count == h_n,
                candidates=_sort_by_canon([to_graph6(g) for g in candidates]),
                second_within_candidates=second_canon <= cand_canon,
                connected_checked=checked,
                connected_second_count=conn_second,
                connected_agrees=agrees,
            )
        )
    return out
