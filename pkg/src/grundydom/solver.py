"""Exact solvers for longest legal (total) dominating sequences.

The value of a position depends only on the set of already covered vertices:
a vertex is playable iff its row still has an uncovered bit, and rows only
lose uncovered bits as play proceeds. The main solver memoizes on that
covered set. Every maximal legal sequence covers all of V (in open mode this
needs the no-isolated-vertices precondition), so the longest legal sequence
is automatically dominating and no separate completion check is needed.

Two exact-safe prunings keep the search tractable on 25-vertex products:

  * a move whose fresh coverage contains another move's fresh coverage is
    dropped (covering less can never shorten the best continuation), and
  * the value of a position is capped by both the number of uncovered
    vertices and the number of playable vertices, so sibling exploration
    stops once the cap is reached.

grundy_bruteforce is an independent oracle: plain enumeration of all legal
sequences straight from the definition, no memo, no pruning.
"""

from __future__ import annotations

import os
import threading
import time
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapacityError, ParameterError
from .graphs import Graph, has_isolated_vertex

MAX_SOLVER_ORDER = 64
BRUTE_MAX_ORDER = 10
WEIGHTED_MAX_ORDER = 20
MEMO_CAP_ENV = "GRUNDYDOM_MEMO_CAP"


@dataclass
class SolveStats:
    nodes: int = 0
    memo_entries: int = 0
    elapsed: float = 0.0


@dataclass
class SolveResult:
    value: int
    witness: list[int] = field(default_factory=list)
    stats: SolveStats = field(default_factory=SolveStats)


def _mode_rows(G: Graph, mode: str) -> list[int]:
    if mode == "closed":
        return [G.adj[v] | 1 << v for v in range(G.n)]
    if mode == "open":
        if has_isolated_vertex(G):
            raise ParameterError("open mode requires a graph with no isolated vertices")
        return list(G.adj)
    raise ParameterError(f"unknown mode '{mode}'")


def _env_memo_cap() -> int | None:
    raw = os.environ.get(MEMO_CAP_ENV)
    if raw is None:
        return None
    try:
        cap = int(raw)
    except ValueError:
        raise ParameterError(f"{MEMO_CAP_ENV} must be an integer, got {raw!r}")
    return cap if cap > 0 else None


class _Search:
    """Memoized value function over covered-set positions."""

    def __init__(self, rows: list[int], n: int, memo_cap: int | None):
        self.rows = rows
        self.n = n
        self.memo_cap = memo_cap
        self.memo: dict = OrderedDict() if memo_cap else {}
        self.lock = threading.Lock() if memo_cap else None
        self.nodes = 0

    def value(self, S: int) -> int:
        memo = self.memo
        cached = memo.get(S)
        if cached is not None:
            return cached
        rows = self.rows
        n = self.n
        moves = []
        for u in range(n):
            new = rows[u] & ~S
            if new:
                moves.append((new.bit_count(), new))
        self.nodes += 1
        if not moves:
            best = 0
        else:
            moves.sort()
            kept: list[int] = []
            for _, new in moves:
                for old in kept:
                    if old & ~new == 0:
                        break
                else:
                    kept.append(new)
            cap = min(len(moves), n - S.bit_count())
            best = 0
            value = self.value
            for new in kept:
                child = S | new
                if n - child.bit_count() < best:
                    continue
                got = 1 + value(child)
                if got > best:
                    best = got
                    if best == cap:
                        break
        if self.memo_cap:
            with self.lock:
                if len(memo) >= self.memo_cap:
                    memo.popitem(last=False)
                memo[S] = best
        else:
            memo[S] = best
        return best

    def root_value(self, threads: int) -> int:
        if threads <= 1 or self.n == 0:
            return self.value(0)
        children = []
        for u in range(self.n):
            new = self.rows[u]
            if new:
                children.append(new)
        if not children:
            return self.value(0)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            vals = list(pool.map(self.value, children))
        best = 1 + max(vals)
        if self.memo_cap:
            with self.lock:
                self.memo[0] = best
        else:
            self.memo[0] = best
        return best

    def reconstruct(self) -> list[int]:
        # Greedy walk: at each position take the smallest-id vertex that still
        # achieves the memoized value. This is deterministic regardless of
        # search order and yields the lexicographically least optimal witness.
        seq: list[int] = []
        S = 0
        t = self.value(0)
        rows = self.rows
        while t:
            for u in range(self.n):
                new = rows[u] & ~S
                if new and self.value(S | new) == t - 1:
                    seq.append(u)
                    S |= new
                    t -= 1
                    break
            else:
                raise AssertionError("witness reconstruction lost the optimum")
        return seq


def grundy(
    G: Graph,
    mode: str = "closed",
    *,
    memo_cap: int | None = None,
    threads: int = 1,
    max_order: int | None = None,
    witness: bool = True,
) -> SolveResult:
    """Length of a longest legal (total) dominating sequence, with witness.

    memo_cap bounds the number of cached positions (oldest entries are evicted
    first; the answer is unchanged, recomputation just grows). The environment
    variable GRUNDYDOM_MEMO_CAP supplies a default cap. threads > 1 fans the
    root branches out over a shared memo; value and witness do not depend on
    the schedule.
    """
    n = G.n
    if n < 1:
        raise ParameterError("solver needs at least one vertex")
    limit = MAX_SOLVER_ORDER if max_order is None else max_order
    if n > limit:
        raise CapacityError(f"graph order {n} exceeds solver cap {limit}")
    rows = _mode_rows(G, mode)
    if memo_cap is None:
        memo_cap = _env_memo_cap()
    start = time.perf_counter()
    search = _Search(rows, n, memo_cap)
    val = search.root_value(threads)
    seq = search.reconstruct() if witness else []
    stats = SolveStats(
        nodes=search.nodes,
        memo_entries=len(search.memo),
        elapsed=time.perf_counter() - start,
    )
    if witness:
        assert len(seq) == val
    return SolveResult(value=val, witness=seq, stats=stats)


def grundy_bruteforce(G: Graph, mode: str = "closed") -> SolveResult:
    """Definition-level oracle: enumerate every legal sequence, no memoization.

    Records the length whenever the covered union reaches V(G), keeping the
    first longest sequence found; depth-first in ascending vertex order, so
    the witness is the lexicographically least one of maximum length.
    """
    n = G.n
    if n < 1:
        raise ParameterError("solver needs at least one vertex")
    if n > BRUTE_MAX_ORDER:
        raise CapacityError(f"brute force capped at {BRUTE_MAX_ORDER} vertices")
    rows = _mode_rows(G, mode)
    full = G.full_mask
    start = time.perf_counter()
    best_len = 0
    best_seq: list[int] = []
    seq: list[int] = []
    nodes = 0

    def rec(dominated: int, chosen: int):
        nonlocal best_len, best_seq, nodes
        nodes += 1
        if dominated == full and len(seq) > best_len:
            best_len = len(seq)
            best_seq = seq.copy()
        for u in range(n):
            if chosen >> u & 1:
                continue
            new = rows[u] & ~dominated
            if new:
                seq.append(u)
                rec(dominated | new, chosen | 1 << u)
                seq.pop()

    rec(0, 0)
    stats = SolveStats(nodes=nodes, memo_entries=0, elapsed=time.perf_counter() - start)
    return SolveResult(value=best_len, witness=best_seq, stats=stats)


def max_weighted_sequence(G: Graph, w_independent: int, w_dependent: int) -> tuple[int, list[int]]:
    """Best total weight of a legal dominating sequence (closed mode).

    An item weighs w_independent when no earlier item is adjacent to it and
    w_dependent otherwise, mirroring the a-value split. Positions are pairs
    (covered set, chosen set) since the weight of a new item depends on the
    chosen set. Weights must be nonnegative so that extending a sequence
    never hurts; the maximum is then attained by a maximal legal sequence,
    which is automatically dominating.
    """
    n = G.n
    if n < 1:
        raise ParameterError("solver needs at least one vertex")
    if n > WEIGHTED_MAX_ORDER:
        raise CapacityError(f"weighted search capped at {WEIGHTED_MAX_ORDER} vertices")
    if w_independent < 0 or w_dependent < 0:
        raise ParameterError("weights must be nonnegative")
    adj = G.adj
    rows = [adj[v] | 1 << v for v in range(n)]
    memo: dict[tuple[int, int], int] = {}

    def value(dom: int, chosen: int) -> int:
        key = (dom, chosen)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = 0
        for u in range(n):
            if chosen >> u & 1:
                continue
            new = rows[u] & ~dom
            if new:
                w = w_independent if adj[u] & chosen == 0 else w_dependent
                got = w + value(dom | new, chosen | 1 << u)
                if got > best:
                    best = got
        memo[key] = best
        return best

    total = value(0, 0)
    seq: list[int] = []
    dom = 0
    chosen = 0
    t = total
    # extend until maximal so the witness is dominating even with zero weights
    while dom != G.full_mask:
        for u in range(n):
            if chosen >> u & 1:
                continue
            new = rows[u] & ~dom
            if new:
                w = w_independent if adj[u] & chosen == 0 else w_dependent
                if w + value(dom | new, chosen | 1 << u) == t:
                    seq.append(u)
                    dom |= new
                    chosen |= 1 << u
                    t -= w
                    break
        else:
            raise AssertionError("weighted reconstruction lost the optimum")
    return total, seq


def lex_grundy(G: Graph, gamma_h: int) -> tuple[int, list[int]]:
    """max over dominating sequences D of a(D) * (gamma_h - 1) + len(D).

    This equals the longest legal dominating sequence length of the
    lexicographic product of G with any graph whose value is gamma_h.
    """
    if gamma_h < 1:
        raise ParameterError("gamma_h must be at least 1")
    return max_weighted_sequence(G, gamma_h, 1)


def domination_number(G: Graph, mode: str = "closed") -> int:
    """Smallest (total) dominating set size, by subset enumeration."""
    n = G.n
    if n < 1:
        raise ParameterError("needs at least one vertex")
    if n > 16:
        raise CapacityError("domination number search capped at 16 vertices")
    rows = _mode_rows(G, mode)
    full = G.full_mask
    for k in range(1, n + 1):
        for sub in combinations(range(n), k):
            cover = 0
            for v in sub:
                cover |= rows[v]
            if cover == full:
                return k
    raise ParameterError("graph has no dominating set in this mode")
