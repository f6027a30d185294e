"""Backtracking search over chord tuples for a target girth.

Chord values are assigned depth-first in ascending order, one symmetry class
at a time.  Three incremental filters keep the tree small:

* residue forward-checking -- targets of the assigned chords must stay
  pairwise distinct mod 2b, or no completion is a perfect matching;
* local girth checking -- placing a class adds rotated copies of one chord;
  any new short cycle can be rotated onto the canonical copy, so a single
  depth-limited bidirectional BFS around that edge suffices;
* optional canonical pruning -- tuples equivalent under rotation of the
  chord sequence or orientation reversal with complemented displacements
  (d -> 2m - d) describe isomorphic graphs, so only the lexicographically
  least representative of each class is kept.

A NonExistent verdict is issued only from a completed, unbudgeted run.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import InvalidRange, InvalidTask
from .graphs import ChordIndexSpec
from .girth import girth_symmetric

__all__ = [
    "SearchTask",
    "SearchStats",
    "SearchOutcome",
    "NonexistenceCertificate",
    "ScanResult",
    "search",
    "count_survivors",
    "scan_orders",
    "certify_nonexistence",
]


@dataclass(frozen=True)
class SearchTask:
    girth_target: int
    order: int
    sym_factor: int
    budget: int = 0  # max accepted assignments; 0 = unbounded
    prune_canonical: bool = True

    def validate(self) -> None:
        g, n, b = self.girth_target, self.order, self.sym_factor
        if g < 6 or g % 2:
            raise InvalidTask(f"girth target {g} must be an even integer >= 6")
        if n < 4 or n % 2:
            raise InvalidTask(f"order {n} must be an even integer >= 4")
        if b < 1 or (n // 2) % b:
            raise InvalidTask(f"symmetry factor {b} must divide {n // 2}")
        if self.budget < 0:
            raise InvalidTask(f"budget {self.budget} must be >= 0")


@dataclass
class SearchStats:
    nodes: int = 0
    prunes_girth: int = 0
    prunes_residue: int = 0
    prunes_canonical: int = 0
    candidates: int = 0
    seconds: float = 0.0
    per_level: list[dict] = field(default_factory=list)

    def merge(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunes_girth += other.prunes_girth
        self.prunes_residue += other.prunes_residue
        self.prunes_canonical += other.prunes_canonical
        self.candidates += other.candidates
        if not self.per_level:
            self.per_level = [dict(row) for row in other.per_level]
        else:
            for mine, theirs in zip(self.per_level, other.per_level):
                for key, val in theirs.items():
                    mine[key] = mine.get(key, 0) + val


@dataclass(frozen=True)
class SearchOutcome:
    verdict: str  # "Exists" | "NonExistent" | "Inconclusive"
    witness: Optional[ChordIndexSpec]
    stats: SearchStats


def _is_canonical(t: tuple[int, ...], n: int) -> bool:
    b = len(t)
    refl = (n - t[0],) + tuple(n - x for x in t[:0:-1])
    for i in range(b):
        if t[i:] + t[:i] < t:
            return False
        if refl[i:] + refl[:i] < t:
            return False
    return True


class _Searcher:
    """Serial depth-first engine over one candidate set for the first class."""

    def __init__(self, task: SearchTask, level0_values=None, count_all=False,
                 progress: Optional[Callable[[dict], None]] = None,
                 progress_every: int = 0):
        self.task = task
        n, b, g = task.order, task.sym_factor, task.girth_target
        self.n, self.b, self.g = n, b, g
        self.copies = (n // 2) // b
        self.step2b = 2 * b
        self.values = list(range(3, n - 2, 2))
        self.level0 = list(level0_values) if level0_values is not None else self.values
        self.prune = task.prune_canonical
        self.budget = task.budget
        self.count_all = count_all
        self.progress = progress
        self.progress_every = progress_every

        self.chord = [-1] * n
        self.res_used = bytearray(self.step2b)
        self.assigned = [0] * b
        self.mark_a = [0] * max(n, 1)
        self.mark_b = [0] * max(n, 1)
        self.gen = 0
        self.limit_b = (g - 2) // 2
        self.limit_a = (g - 2) - self.limit_b

        self.nodes = 0
        self.survivors = 0
        self.witness: Optional[tuple[int, ...]] = None
        self.level_rows = [
            {"candidates": 0, "residue": 0, "girth": 0, "canonical": 0, "accepted": 0}
            for _ in range(b + 1)  # final row counts leaf canonicity checks
        ]

    # -- incremental feasibility ------------------------------------------

    def _short_cycle(self, u: int, v: int) -> bool:
        """Is there a path u..v of at most g-2 edges avoiding the edge itself?"""
        self.gen += 1
        gen = self.gen
        n, ch = self.n, self.chord
        mb = self.mark_b
        mb[v] = gen
        frontier = [v]
        for _ in range(self.limit_b):
            nxt = []
            for x in frontier:
                p = x - 1 if x else n - 1
                q = x + 1 if x < n - 1 else 0
                c = ch[x]
                for y in (p, q, c):
                    if y >= 0 and mb[y] != gen and not (x == v and y == u):
                        mb[y] = gen
                        nxt.append(y)
            frontier = nxt
            if not frontier:
                break
        if mb[u] == gen:
            return True
        ma = self.mark_a
        ma[u] = gen
        frontier = [u]
        for _ in range(self.limit_a):
            nxt = []
            for x in frontier:
                p = x - 1 if x else n - 1
                q = x + 1 if x < n - 1 else 0
                c = ch[x]
                for y in (p, q, c):
                    if y >= 0 and ma[y] != gen and not (x == u and y == v):
                        if mb[y] == gen:
                            return True
                        ma[y] = gen
                        nxt.append(y)
            frontier = nxt
            if not frontier:
                break
        return False

    def _rotated_prefix_smaller(self, level: int, d: int) -> bool:
        # Would some rotation of the prefix (assigned[:level] + [d]) be
        # lexicographically smaller?  Then no completion is canonical.
        a = self.assigned
        length = level + 1
        first = a[0]
        for r in range(1, length):
            if (a[r] if r < level else d) != first:
                continue
            for off in range(length - r):
                x = a[r + off] if r + off < level else d
                y = a[off]
                if x != y:
                    if x < y:
                        return True
                    break
            else:
                continue
        return False

    # -- depth-first extension --------------------------------------------

    def _extend(self, level: int) -> Optional[str]:
        if level == self.b:
            row = self.level_rows[level]
            t = tuple(self.assigned)
            if self.prune and not _is_canonical(t, self.n):
                row["canonical"] += 1
                return None
            row["accepted"] += 1
            self.survivors += 1
            if not self.count_all:
                self.witness = t
                return "found"
            return None

        n = self.n
        row = self.level_rows[level]
        prune = self.prune
        d1 = self.assigned[0] if level else 0
        u0 = 2 * level
        copies, step = self.copies, self.step2b
        ch = self.chord
        for d in self.level0 if level == 0 else self.values:
            row["candidates"] += 1
            if prune:
                if level == 0:
                    if 2 * d > n:
                        row["canonical"] += 1
                        continue
                elif d < d1 or d > n - d1:
                    row["canonical"] += 1
                    continue
            r = (u0 + 1 + d) % step
            if self.res_used[r]:
                row["residue"] += 1
                continue
            if prune and level and self._rotated_prefix_smaller(level, d):
                row["canonical"] += 1
                continue
            v0 = (u0 + d) % n
            k = u0
            for _ in range(copies):
                w = (k + d) % n
                ch[k] = w
                ch[w] = k
                k = (k + step) % n
            if self._short_cycle(u0, v0):
                k = u0
                for _ in range(copies):
                    w = (k + d) % n
                    ch[k] = -1
                    ch[w] = -1
                    k = (k + step) % n
                row["girth"] += 1
                continue
            row["accepted"] += 1
            self.nodes += 1
            if self.progress and self.progress_every and self.nodes % self.progress_every == 0:
                self.progress({"nodes": self.nodes, "level": level, "assigned": tuple(self.assigned[:level]) + (d,)})
            outcome = None
            if self.budget and self.nodes >= self.budget:
                outcome = "budget"
            else:
                self.assigned[level] = d
                self.res_used[r] = 1
                outcome = self._extend(level + 1)
                self.res_used[r] = 0
            k = u0
            for _ in range(copies):
                w = (k + d) % n
                ch[k] = -1
                ch[w] = -1
                k = (k + step) % n
            if outcome:
                return outcome
        return None

    def run(self) -> SearchOutcome:
        t0 = time.perf_counter()
        task = self.task
        outcome: Optional[str]
        if self.n < self.g:
            # the Hamiltonian cycle itself is shorter than the target girth
            outcome = None
        elif not self.values:
            outcome = None
        else:
            outcome = self._extend(0)
        stats = SearchStats(
            nodes=self.nodes,
            prunes_girth=sum(r["girth"] for r in self.level_rows),
            prunes_residue=sum(r["residue"] for r in self.level_rows),
            prunes_canonical=sum(r["canonical"] for r in self.level_rows),
            candidates=sum(r["candidates"] for r in self.level_rows),
            seconds=time.perf_counter() - t0,
            per_level=self.level_rows,
        )
        if outcome == "found":
            spec = ChordIndexSpec(task.order, task.sym_factor, self.witness)
            return SearchOutcome("Exists", spec, stats)
        if outcome == "budget":
            return SearchOutcome("Inconclusive", None, stats)
        # the space was covered completely, budgeted or not
        return SearchOutcome("NonExistent", None, stats)


def _partition_job(args) -> tuple[int, SearchOutcome]:
    task, d1 = args
    return d1, _Searcher(task, level0_values=[d1]).run()


def search(task: SearchTask, workers: int = 1,
           progress: Optional[Callable[[dict], None]] = None,
           progress_every: int = 0) -> SearchOutcome:
    """Run a task; Exists returns the lexicographically least witness.

    With workers > 1 and no budget, the tree is partitioned by the first
    chord value; partitions are merged in ascending order so the verdict,
    witness and node counts match the serial run exactly.
    """
    task.validate()
    values = list(range(3, task.order - 2, 2))
    if workers <= 1 or task.budget or len(values) < 2 or task.sym_factor < 2:
        return _Searcher(task, progress=progress, progress_every=progress_every).run()

    t0 = time.perf_counter()
    merged = SearchStats()
    result: Optional[SearchOutcome] = None
    with ProcessPoolExecutor(max_workers=min(workers, len(values))) as pool:
        futures = [pool.submit(_partition_job, (task, d1)) for d1 in values]
        try:
            for fut in futures:
                _, outcome = fut.result()
                merged.merge(outcome.stats)
                if outcome.verdict == "Exists":
                    result = outcome
                    break
        finally:
            for fut in futures:
                fut.cancel()
            pool.shutdown(wait=False, cancel_futures=True)
    merged.seconds = time.perf_counter() - t0
    if result is not None:
        return SearchOutcome("Exists", result.witness, merged)
    return SearchOutcome("NonExistent", None, merged)


def count_survivors(task: SearchTask) -> tuple[int, SearchStats]:
    """Exhaustively count assignments reaching full depth with girth >= target.

    With canonical pruning on, only class representatives are counted.
    Budgets are rejected: a partial count certifies nothing.
    """
    task.validate()
    if task.budget:
        raise InvalidTask("count_survivors requires an unbounded budget")
    engine = _Searcher(task, count_all=True)
    outcome = engine.run()
    return engine.survivors, outcome.stats


@dataclass(frozen=True)
class NonexistenceCertificate:
    """Replayable account of an exhaustive refutation (or the witness that voids it)."""

    girth_target: int
    order: int
    sym_factor: int
    outcome: SearchOutcome
    reduction: str  # symmetries pruned during the enumeration
    per_level: tuple[dict, ...]
    total_candidates: int
    total_refuted: int


def certify_nonexistence(girth_target: int, order: int, sym_factor: int,
                         prune_canonical: bool = True, workers: int = 1,
                         progress=None, progress_every: int = 0) -> NonexistenceCertificate:
    """Exhaustive search with an audit trail; verdict is never Inconclusive."""
    task = SearchTask(girth_target, order, sym_factor, 0, prune_canonical)
    outcome = search(task, workers=workers, progress=progress, progress_every=progress_every)
    stats = outcome.stats
    reduction = (
        "sequence rotation + orientation reversal with complemented chords"
        if prune_canonical
        else "none"
    )
    return NonexistenceCertificate(
        girth_target=girth_target,
        order=order,
        sym_factor=sym_factor,
        outcome=outcome,
        reduction=reduction,
        per_level=tuple(stats.per_level),
        total_candidates=stats.candidates,
        total_refuted=stats.candidates - stats.nodes,
    )


def _divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


@dataclass(frozen=True)
class ScanResult:
    order: int
    verdict: str
    sym_factor: Optional[int]  # of the witness, or m for a full refutation
    outcome: SearchOutcome
    attempts: tuple[tuple[int, str], ...]  # (sym factor, verdict) in scan order


def scan_orders(girth_target: int, orders: Iterable[int],
                sym_policy: str | Sequence[int] | None = "ascending",
                budget: int = 0, prune_canonical: bool = True, workers: int = 1,
                progress=None, progress_every: int = 0) -> list[ScanResult]:
    """Resolve each order by trying symmetry factors until a witness appears.

    Cheap, highly rotation-symmetric classes (small b) go first by default.
    An order is refuted only by completing b = m, since that enumeration
    covers every labeled graph of the class; otherwise inconclusive runs
    leave the order inconclusive.
    """
    orders = list(orders)
    if any(o % 2 or o < 4 for o in orders):
        raise InvalidRange(f"orders must be even integers >= 4: {orders}")
    results = []
    for order in orders:
        m = order // 2
        if isinstance(sym_policy, str) or sym_policy is None:
            factors = _divisors(m)
            if sym_policy == "descending":
                factors.reverse()
            elif sym_policy in (None, "ascending"):
                pass
            elif sym_policy == "full":
                factors = [m]
            else:
                raise InvalidTask(f"unknown symmetry policy {sym_policy!r}")
        else:
            factors = [b for b in sym_policy if b <= m and m % b == 0]
        attempts = []
        found: Optional[SearchOutcome] = None
        found_b: Optional[int] = None
        full_refuted: Optional[SearchOutcome] = None
        for b in factors:
            task = SearchTask(girth_target, order, b, budget, prune_canonical)
            outcome = search(task, workers=workers, progress=progress,
                             progress_every=progress_every)
            attempts.append((b, outcome.verdict))
            if outcome.verdict == "Exists":
                found, found_b = outcome, b
                break
            if outcome.verdict == "NonExistent" and b == m:
                full_refuted = outcome
        if found is not None:
            results.append(ScanResult(order, "Exists", found_b, found, tuple(attempts)))
        elif full_refuted is not None:
            results.append(ScanResult(order, "NonExistent", m, full_refuted, tuple(attempts)))
        else:
            # refutations below b = m do not cover the class
            outcome = SearchOutcome("Inconclusive", None, SearchStats())
            results.append(ScanResult(order, "Inconclusive", None, outcome, tuple(attempts)))
    return results
