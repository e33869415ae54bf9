"""Exact search for factors of G(n, k) with the maximum number of cycles.

Branch and bound over successor assignments: vertices take their one
out-arc in ascending packed order, each choice ascending by appended
symbol; an in-degree flag keeps the assignment a bijection, and path
endpoints are tracked so cycle closures are counted incrementally.

The admissible bound uses the phase invariant (every cycle length is a
positive multiple of k): cycles still to be closed can be at most
min(#open paths, open_vertices // k), where open vertices are those not
yet locked into a completed cycle.  The incumbent starts at the
rotation-rule factor, which is optimal whenever k | n or n | k.
"""

from __future__ import annotations

import random
import threading
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .counting import closed_form_pcr
from .errors import BudgetExceeded, Inconclusive, PreconditionViolated
from .graph import (Factor, GraphParams, factor_from_successor,
                    successor_codes, validate_factor)
from .rules import pcr, successor_array

EXHAUSTIVE_MAX_VERTICES = 20


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 32
    max_nodes: int = 10 ** 8
    time_cap: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_nodes < 1:
            raise ValueError("budgets must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError("time_cap must be positive")


@dataclass(frozen=True)
class SearchResult:
    best_count: int
    certificate: Factor
    optimal: bool
    nodes_explored: int


class _Shared:
    """Monotone incumbent shared between search workers."""

    def __init__(self, best: int, succ: list[int]):
        self.lock = threading.Lock()
        self.best = best
        self.succ = succ

    def improve(self, count: int, succ: list[int]) -> None:
        with self.lock:
            if count > self.best:
                self.best = count
                self.succ = list(succ)


class _Searcher:
    def __init__(self, p: GraphParams, shared: _Shared, budget: SearchBudget):
        self.p = p
        self.n_vertices = p.num_vertices
        self.k = p.k
        self.shared = shared
        self.budget = budget
        self.succ_choices = [successor_codes(c, p) for c in range(self.n_vertices)]
        self.nodes = 0
        self.stopped = False
        self.deadline = (time.monotonic() + budget.time_cap
                         if budget.time_cap is not None else None)
        n = self.n_vertices
        self.succ = [-1] * n
        self.pred_used = bytearray(n)
        self.head_of_tail = list(range(n))
        self.tail_of_head = list(range(n))
        self.len_of_tail = [1] * n
        self.completed = 0
        self.closed = 0

    def run(self, first_choices: Optional[list[int]] = None) -> None:
        """Explore assignments; restrict vertex 0 to first_choices if given."""
        self._descend(0, first_choices)

    def _descend(self, u: int, first_choices: Optional[list[int]] = None) -> None:
        if self.stopped:
            return
        n, k = self.n_vertices, self.k
        if u == n:
            self.shared.improve(self.completed, self.succ)
            return
        remaining = min(n - u, (n - self.closed) // k)
        if self.completed + remaining <= self.shared.best:
            return
        choices = first_choices if first_choices is not None else self.succ_choices[u]
        pred_used = self.pred_used
        for v in choices:
            if pred_used[v]:
                continue
            self.nodes += 1
            if self.nodes >= self.budget.max_nodes:
                self.stopped = True
                return
            if self.deadline is not None and not self.nodes % 1024 \
                    and time.monotonic() > self.deadline:
                self.stopped = True
                return
            closes = self.head_of_tail[u] == v
            if closes:
                self.completed += 1
                self.closed += self.len_of_tail[u]
                h1 = t2 = -1
            else:
                h1 = self.head_of_tail[u]
                t2 = self.tail_of_head[v]
                self.head_of_tail[t2] = h1
                self.tail_of_head[h1] = t2
                self.len_of_tail[t2] += self.len_of_tail[u]
            pred_used[v] = 1
            self.succ[u] = v

            self._descend(u + 1)

            self.succ[u] = -1
            pred_used[v] = 0
            if closes:
                self.completed -= 1
                self.closed -= self.len_of_tail[u]
            else:
                self.len_of_tail[t2] -= self.len_of_tail[u]
                self.head_of_tail[t2] = v
                self.tail_of_head[h1] = u
            if self.stopped:
                return


def search_extremal(p: GraphParams, budget: SearchBudget | None = None,
                    workers: int = 1) -> SearchResult:
    """Find a factor of G(n, k) with the maximum number of cycles.

    Exhaustive within the budget; returns optimal=False with the best
    incumbent when the node or time cap is hit.  Single-worker runs are
    deterministic; with workers > 1 the top-level branch set is split
    across threads sharing only the incumbent bound.
    """
    budget = budget or SearchBudget()
    n = p.num_vertices
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"{n} vertices exceeds search budget {budget.max_vertices}")
    # incumbent: the rotation-rule factor, so a run that finds nothing
    # strictly better still certificates with a valid factor
    pcr_succ = successor_array(pcr(p.n, p.b), p.k)
    pcr_count = len(factor_from_successor(pcr_succ, p).cycles)
    shared = _Shared(pcr_count, pcr_succ)

    if workers <= 1:
        searcher = _Searcher(p, shared, budget)
        searcher.run()
        nodes = searcher.nodes
        optimal = not searcher.stopped
    else:
        first = successor_codes(0, p)
        parts: list[list[int]] = [[] for _ in range(min(workers, len(first)))]
        for i, v in enumerate(first):
            parts[i % len(parts)].append(v)
        searchers = [_Searcher(p, shared, budget) for _ in parts]
        threads = [threading.Thread(target=s.run, args=(part,))
                   for s, part in zip(searchers, parts)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        nodes = sum(s.nodes for s in searchers)
        optimal = not any(s.stopped for s in searchers)

    certificate = factor_from_successor(shared.succ, p)
    return SearchResult(shared.best, certificate, optimal, nodes)


@dataclass(frozen=True)
class ExtremalityReport:
    ok: bool
    search_count: int
    formula_count: int
    certificate: Factor
    nodes_explored: int = field(compare=False, default=0)

    def __bool__(self) -> bool:
        return self.ok


def verify_theorem1(p: GraphParams, budget: SearchBudget | None = None,
                    workers: int = 1) -> ExtremalityReport:
    """Check that the rotation-rule factor is extremal on G(n, k).

    Only defined when k | n or n | k.  Compares the exhaustive search
    optimum against the rotation-rule closed form; an incomplete search
    raises Inconclusive rather than guessing.
    """
    if p.n % p.k and p.k % p.n:
        raise PreconditionViolated(f"need k | n or n | k, got n={p.n}, k={p.k}")
    result = search_extremal(p, budget, workers=workers)
    if not result.optimal:
        raise Inconclusive(
            f"search hit its budget after {result.nodes_explored} nodes")
    formula = closed_form_pcr(p.n, p.k, p.b).value
    return ExtremalityReport(result.best_count == formula, result.best_count,
                             formula, result.certificate, result.nodes_explored)


def exhaustive_factors(p: GraphParams) -> Iterator[Factor]:
    """Yield every factor of G(n, k), in deterministic order.

    Only for tiny instances; every successor assignment that forms a
    permutation is a factor.
    """
    n = p.num_vertices
    if n > EXHAUSTIVE_MAX_VERTICES:
        raise BudgetExceeded(
            f"{n} vertices exceeds exhaustive budget {EXHAUSTIVE_MAX_VERTICES}")
    succ_choices = [successor_codes(c, p) for c in range(n)]
    succ = [-1] * n
    pred_used = bytearray(n)

    def descend(u: int) -> Iterator[Factor]:
        if u == n:
            yield factor_from_successor(succ, p)
            return
        for v in succ_choices[u]:
            if pred_used[v]:
                continue
            pred_used[v] = 1
            succ[u] = v
            yield from descend(u + 1)
            succ[u] = -1
            pred_used[v] = 0

    return descend(0)


def random_factor(p: GraphParams, rng: random.Random) -> Factor:
    """A uniformly random factor of G(n, k).

    The successor bijection splits into independent blocks: the b
    sources (y w, i) share the target set {(w x, i+1)}, so a factor is
    exactly one permutation of the alphabet per (suffix w, phase i).
    """
    b, n, k = p.b, p.n, p.k
    head = b ** (n - 1)
    succ = [0] * p.num_vertices
    for w in range(head):
        for ph in range(k):
            perm = list(range(b))
            rng.shuffle(perm)
            for y in range(b):
                src = (y * head + w) * k + ph
                dst = (w * b + perm[y]) * k + (ph + 1) % k
                succ[src] = dst
    f = factor_from_successor(succ, p)
    assert validate_factor(f), "random factor construction broke adjacency"
    return f
