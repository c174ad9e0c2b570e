"""Exact solvability search and pebbling numbers by exhaustive level scan.

A pebbling move takes two pebbles off a vertex and puts one on a chosen
neighbor.  A configuration is solvable for a root when some move sequence
lands a pebble on the root.  The rooted pebbling number is the smallest t
such that every configuration of t pebbles is solvable; it is found by
scanning totals upward from the lower bound max(n, 2^ecc(root)), using the
fact that adding pebbles never breaks solvability.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import Graph, GraphError, distances_from, is_connected

DEFAULT_MAX_CONFIGS = 10_000_000

Move = tuple[int, int]


class ConfigFormatError(ValueError):
    """Malformed configuration text."""


class EnumerationCapError(RuntimeError):
    """A level scan would enumerate more configurations than the cap allows."""

    def __init__(self, cap: int, level: int, count: int, last_verified: int):
        self.cap = cap
        self.level = level
        self.count = count
        self.last_verified = last_verified
        super().__init__(
            f"level {level} needs {count} configurations, over the cap of {cap}; "
            f"levels up to {last_verified} were verified"
        )


@dataclass(frozen=True)
class SolveResult:
    solvable: bool
    witness: tuple[Move, ...] | None
    explored: int


@dataclass(frozen=True)
class PebblingResult:
    value: int
    root: int
    critical_config: tuple[int, ...]


# ---------------------------------------------------------------------------
# configuration text format: "v:count,v:count" with vertices ascending,
# omitted vertices holding zero; the empty string is the empty configuration.

def format_config(config) -> str:
    return ",".join(f"{v}:{c}" for v, c in enumerate(config) if c)


def parse_config(text: str, n: int) -> tuple[int, ...]:
    counts = [0] * n
    text = text.strip()
    if not text:
        return tuple(counts)
    last = -1
    for field in text.split(","):
        parts = field.split(":")
        if len(parts) != 2:
            raise ConfigFormatError(f"expected vertex:count, got {field!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ConfigFormatError(f"expected integers in {field!r}") from None
        if not 0 <= v < n:
            raise ConfigFormatError(f"vertex {v} outside 0..{n - 1}")
        if v <= last:
            raise ConfigFormatError(f"vertices must be strictly ascending at {field!r}")
        if c < 0:
            raise ConfigFormatError(f"negative count in {field!r}")
        counts[v] = c
        last = v
    return tuple(counts)


def apply_moves(config, moves) -> tuple[int, ...]:
    """Replay a move sequence, checking each move is legal."""
    counts = list(config)
    for u, v in moves:
        if counts[u] < 2:
            raise ValueError(f"move ({u}, {v}) needs two pebbles on {u}, found {counts[u]}")
        counts[u] -= 2
        counts[v] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# solvability search

def _root_geometry(g: Graph, root: int):
    """Distances from the root, quick-accept thresholds, and a step map.

    threshold[v] = 2^dist(v, root): a vertex holding that many pebbles can
    ship one to the root along a shortest path unaided.  step[v] is the
    lowest-numbered neighbor one hop closer to the root.
    """
    dist = distances_from(g, root)
    threshold = [None] * g.n
    step = [None] * g.n
    for v in range(g.n):
        d = dist[v]
        if d is None:
            continue
        threshold[v] = 1 << d
        if d > 0:
            step[v] = min(u for u in g.adj[v] if dist[u] == d - 1)
    return dist, threshold, step


def _chain_moves(v, dist, step) -> list[Move]:
    """Moves sending one pebble from v to the root using only v's own stack."""
    moves = []
    d = dist[v]
    u = v
    for i in range(d):
        nxt = step[u]
        moves.extend([(u, nxt)] * (1 << (d - 1 - i)))
        u = nxt
    return moves


def _search(adj, threshold, step, dist, counts) -> tuple[list[Move] | None, int]:
    """Depth-first search over move sequences with a visited-configuration memo.

    counts must already fail every quick accept (no vertex at or over its
    threshold, root empty).  Returns (witness moves, explored count).
    """
    n = len(adj)
    seen = {counts}
    explored = 1

    def move_iter(c):
        for u in range(n):
            if c[u] >= 2:
                for v in adj[u]:
                    yield u, v

    stack = [(counts, move_iter(counts))]
    trail: list[Move] = []
    while stack:
        c, it = stack[-1]
        step_uv = next(it, None)
        if step_uv is None:
            stack.pop()
            if trail:
                trail.pop()
            continue
        u, v = step_uv
        nxt = list(c)
        nxt[u] -= 2
        nxt[v] += 1
        # only v gained pebbles, so the quick accept can only fire there
        if threshold[v] is not None and nxt[v] >= threshold[v]:
            return trail + [(u, v)] + _chain_moves(v, dist, step), explored
        t = tuple(nxt)
        if t not in seen:
            seen.add(t)
            explored += 1
            stack.append((t, move_iter(t)))
            trail.append((u, v))
    return None, explored


def is_solvable(g: Graph, config, root: int) -> SolveResult:
    """Decide whether config can put a pebble on root; carries a replayable witness."""
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    counts = tuple(config)
    if len(counts) != g.n:
        raise ValueError(f"configuration length {len(counts)} does not match {g.n} vertices")
    if any(c < 0 for c in counts):
        raise ValueError("configuration counts must be nonnegative")
    if counts[root] >= 1:
        return SolveResult(True, (), 0)
    dist, threshold, step = _root_geometry(g, root)
    for v in range(g.n):
        if threshold[v] is not None and counts[v] >= threshold[v]:
            return SolveResult(True, tuple(_chain_moves(v, dist, step)), 0)
    witness, explored = _search(g.adj, threshold, step, dist, counts)
    if witness is None:
        return SolveResult(False, None, explored)
    return SolveResult(True, tuple(witness), explored)


# ---------------------------------------------------------------------------
# level enumeration
#
# Any configuration holding threshold[v] pebbles somewhere is solvable
# outright, so a level scan only needs the configurations bounded strictly
# below every threshold (with the root empty).  The enumeration runs in
# lexicographic order over non-root vertices for determinism.

def _bounded_count(total: int, caps) -> int:
    ways = [1] + [0] * total
    for cap in caps:
        nxt = [0] * (total + 1)
        running = 0
        # prefix sums over a sliding window of width cap + 1
        for s in range(total + 1):
            running += ways[s]
            if s - cap - 1 >= 0:
                running -= ways[s - cap - 1]
            nxt[s] = running
        ways = nxt
    return ways[total]


def _bounded_compositions(total: int, caps):
    n = len(caps)
    tail = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        tail[i] = tail[i + 1] + caps[i]
    if total > tail[0]:
        return
    x = [0] * n

    def rec(i, rem):
        if i == n:
            yield tuple(x)
            return
        lo = max(0, rem - tail[i + 1])
        hi = min(caps[i], rem)
        for val in range(lo, hi + 1):
            x[i] = val
            yield from rec(i + 1, rem - val)
        x[i] = 0

    yield from rec(0, total)


def _level_configs(n, root, others, caps, total):
    """Yield full configurations of the given total, root empty, below thresholds."""
    for comp in _bounded_compositions(total, caps):
        counts = [0] * n
        for v, c in zip(others, comp):
            counts[v] = c
        yield tuple(counts)


def _scan_batch(args):
    """Worker: index of the first unsolvable configuration in the batch, or None."""
    adj, root, batch = args
    g = Graph(len(adj), adj)
    dist, threshold, step = _root_geometry(g, root)
    for i, counts in enumerate(batch):
        witness, _ = _search(adj, threshold, step, dist, counts)
        if witness is None:
            return i
    return None


def _scan_level(g: Graph, root: int, geometry, others, caps, total: int, threads: int):
    """First unsolvable configuration at this total, in enumeration order."""
    dist, threshold, step = geometry
    configs = _level_configs(g.n, root, others, caps, total)
    if threads <= 1:
        for counts in configs:
            witness, _ = _search(g.adj, threshold, step, dist, counts)
            if witness is None:
                return counts
        return None
    batch_size = 2048
    def batches():
        while True:
            batch = []
            for counts in configs:
                batch.append(counts)
                if len(batch) >= batch_size:
                    break
            if not batch:
                return
            yield g.adj, root, batch
    hit = None
    with ProcessPoolExecutor(max_workers=threads) as pool:
        pending = []
        for payload in batches():
            pending.append((payload[2], pool.submit(_scan_batch, payload)))
            # keep the pipeline bounded; consume oldest first so the earliest
            # hit in enumeration order wins regardless of completion order
            if len(pending) >= threads * 2:
                batch, fut = pending.pop(0)
                idx = fut.result()
                if idx is not None:
                    hit = batch[idx]
                    break
        if hit is None:
            for batch, fut in pending:
                idx = fut.result()
                if idx is not None:
                    hit = batch[idx]
                    break
        for _, fut in pending:
            fut.cancel()
    return hit


def pebbling_number(g: Graph, root: int, *, max_configs: int = DEFAULT_MAX_CONFIGS,
                    threads: int = 1) -> PebblingResult:
    """Rooted pebbling number with a critical configuration one pebble below it.

    Scans totals upward from max(n, 2^ecc(root)); the first total whose every
    configuration is solvable is the answer.  Raises EnumerationCapError if a
    level would enumerate more than max_configs configurations.
    """
    if not is_connected(g):
        raise GraphError("pebbling numbers need a connected graph")
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    geometry = _root_geometry(g, root)
    dist = geometry[0]
    ecc = max(dist)
    others = [v for v in range(g.n) if v != root]
    caps = [(1 << dist[v]) - 1 for v in others]
    lower = max(g.n, 1 << ecc)
    level = lower
    previous_hit = None
    while True:
        count = _bounded_count(level, caps) if level <= sum(caps) else 0
        if count > max_configs:
            raise EnumerationCapError(max_configs, level, count, level - 1)
        hit = _scan_level(g, root, geometry, others, caps, level, threads)
        if hit is None:
            critical = previous_hit if previous_hit is not None else _witness_below(g, root, geometry, others, caps, lower)
            return PebblingResult(level, root, critical)
        previous_hit = hit
        level += 1


def _witness_below(g: Graph, root, geometry, others, caps, lower) -> tuple[int, ...]:
    """Unsolvable configuration of size lower - 1 when the scan starts at the answer."""
    dist, threshold, step = geometry
    if lower - 1 == g.n - 1:
        return tuple(0 if v == root else 1 for v in range(g.n))
    # lower - 1 = 2^ecc - 1: stack it all on the nearest farthest vertex
    ecc = max(dist)
    far = min(v for v in range(g.n) if dist[v] == ecc)
    counts = [0] * g.n
    counts[far] = (1 << ecc) - 1
    counts = tuple(counts)
    witness, _ = _search(g.adj, threshold, step, dist, counts)
    if witness is None:
        return counts
    # cannot happen for either canonical witness; fall back to a full scan
    return _scan_level(g, root, geometry, others, caps, lower - 1, 1)


def max_unsolvable(g: Graph, root: int, *, max_configs: int = DEFAULT_MAX_CONFIGS,
                   threads: int = 1) -> tuple[int, tuple[int, ...]]:
    """Largest unsolvable total for the root, with a witness configuration."""
    result = pebbling_number(g, root, max_configs=max_configs, threads=threads)
    return result.value - 1, result.critical_config


def pebbling_number_max(g: Graph, *, max_configs: int = DEFAULT_MAX_CONFIGS,
                        threads: int = 1) -> PebblingResult:
    """Pebbling number of the graph: the rooted value maximized over all roots."""
    best: PebblingResult | None = None
    for root in range(g.n):
        result = pebbling_number(g, root, max_configs=max_configs, threads=threads)
        if best is None or result.value > best.value:
            best = result
    assert best is not None
    return best
