"""Weight-function strategies: rooted subtrees whose weights certify unsolvability.

A strategy assigns weight 0 to its root and positive weights to the other
vertices of a subtree of the host graph, doubling from child to parent
wherever the parent is not the root.  For any configuration that cannot
reach the root, the weighted pebble count never exceeds the strategy's unit
weight (its value on the all-ones configuration), which is what the bounds
module exploits.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .graph import Graph, GraphError, distances_from, eccentricity
from .solver import is_solvable

MAX_DEPTH = 62  # keeps every weight and weight sum inside 64-bit range
_WEIGHT_LIMIT = (1 << 63) - 1


class StrategyError(ValueError):
    """Structurally invalid strategy."""


class CoverageError(ValueError):
    """Some non-root vertex is reached by no strategy."""

    def __init__(self, vertices):
        self.vertices = tuple(vertices)
        super().__init__(f"no strategy covers vertices {list(self.vertices)}")


@dataclass(frozen=True)
class Strategy:
    root: int
    parent: dict[int, int]
    weight: dict[int, int]

    def vertices(self) -> tuple[int, ...]:
        """Non-root strategy vertices, ascending."""
        return tuple(sorted(self.parent))


@dataclass(frozen=True)
class StrategySet:
    root: int
    strategies: tuple[Strategy, ...]

    def __post_init__(self):
        if not self.strategies:
            raise StrategyError("a strategy set needs at least one strategy")
        for s in self.strategies:
            if s.root != self.root:
                raise StrategyError(f"strategy rooted at {s.root} in a set rooted at {self.root}")


class Validation(NamedTuple):
    ok: bool
    problem: str | None


def _depths(root: int, parent: dict[int, int]) -> dict[int, int]:
    """Depth of every strategy vertex; raises if the parent map is not a tree."""
    depth = {root: 0}
    for v in parent:
        chain = []
        u = v
        while u not in depth:
            chain.append(u)
            if u not in parent or len(chain) > len(parent):
                raise StrategyError(f"vertex {v} does not reach the root through parents")
            u = parent[u]
        base = depth[u]
        for i, w in enumerate(reversed(chain), start=1):
            depth[w] = base + i
    return depth


def strategy_from_tree(g: Graph, root: int, parent: dict[int, int]) -> Strategy:
    """Strategy from a parent map: each vertex gets weight 2^(h - depth).

    h is the height of the subtree, so the deepest vertices carry weight 1
    and weights double toward the root.
    """
    if not parent:
        raise StrategyError("a strategy needs at least one edge")
    if root in parent:
        raise StrategyError("the root cannot have a parent")
    for v, p in parent.items():
        if not g.has_edge(v, p):
            raise StrategyError(f"({v}, {p}) is not an edge of the graph")
    depth = _depths(root, parent)
    height = max(depth.values())
    if height > MAX_DEPTH:
        raise StrategyError(f"strategy depth {height} over the limit of {MAX_DEPTH}")
    weight = {v: 1 << (height - d) for v, d in depth.items() if v != root}
    return Strategy(root, dict(parent), weight)


def strategy_from_path(g: Graph, vertices) -> Strategy:
    """Path strategy along vertices[0]..vertices[-1] rooted at the first vertex.

    The far endpoint gets weight 1, doubling back toward the root.
    """
    vertices = list(vertices)
    if len(vertices) < 2:
        raise StrategyError("a path strategy needs at least one edge")
    if len(set(vertices)) != len(vertices):
        raise StrategyError("path vertices must be distinct")
    if len(vertices) - 1 > MAX_DEPTH:
        raise StrategyError(f"path length {len(vertices) - 1} over the limit of {MAX_DEPTH}")
    parent = {}
    for prev, v in zip(vertices, vertices[1:]):
        if not g.has_edge(prev, v):
            raise StrategyError(f"({prev}, {v}) is not an edge of the graph")
        parent[v] = prev
    return strategy_from_tree(g, vertices[0], parent)


def validate_strategy(g: Graph, s: Strategy) -> Validation:
    """Check the strategy invariants; the first violation is named."""
    if not 0 <= s.root < g.n:
        return Validation(False, f"root {s.root} outside 0..{g.n - 1}")
    if not s.parent:
        return Validation(False, "strategy has no edges")
    if s.root in s.parent:
        return Validation(False, f"root {s.root} has a parent")
    for v, p in sorted(s.parent.items()):
        if not 0 <= v < g.n:
            return Validation(False, f"vertex {v} outside 0..{g.n - 1}")
        if not g.has_edge(v, p):
            return Validation(False, f"({v}, {p}) is not an edge of the graph")
    try:
        _depths(s.root, s.parent)
    except StrategyError as exc:
        return Validation(False, str(exc))
    if set(s.weight) != set(s.parent):
        return Validation(False, "weight map does not cover exactly the non-root vertices")
    for v, w in sorted(s.weight.items()):
        if w <= 0:
            return Validation(False, f"vertex {v} has nonpositive weight {w}")
    for v, p in sorted(s.parent.items()):
        if p != s.root and s.weight[p] != 2 * s.weight[v]:
            return Validation(False, f"weight does not double from {v} to its parent {p}")
    return Validation(True, None)


def config_weight(s: Strategy, config) -> int:
    """Weighted pebble count of a configuration under the strategy."""
    total = 0
    for v, w in s.weight.items():
        total += w * config[v]
    if total > _WEIGHT_LIMIT:
        raise OverflowError(f"configuration weight {total} over the 64-bit limit")
    return total


def unit_weight(s: Strategy) -> int:
    """Sum of the strategy weights: its value on the all-ones configuration."""
    total = sum(s.weight.values())
    if total > _WEIGHT_LIMIT:
        raise OverflowError(f"unit weight {total} over the 64-bit limit")
    return total


# ---------------------------------------------------------------------------
# generation

def _bfs_parent_map(g: Graph, root: int, order_key) -> dict[int, int]:
    parent = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in sorted(g.adj[u], key=order_key):
            if v not in seen:
                seen.add(v)
                parent[v] = u
                queue.append(v)
    return parent


def _branch_tree(g: Graph, root: int, branches, depth_cap: int) -> dict[int, int] | None:
    """Parent map of a breadth-first forest grown from the given neighbors of root.

    The forest lives in the graph with the root deleted, each branch vertex
    hanging under the root, truncated at the given strategy depth.  Vertices
    are visited in ascending order for determinism.
    """
    parent = {}
    depth = {}
    queue = deque()
    for b in sorted(branches):
        parent[b] = root
        depth[b] = 1
        queue.append(b)
    while queue:
        u = queue.popleft()
        if depth[u] >= depth_cap:
            continue
        for v in g.adj[u]:
            if v != root and v not in depth:
                depth[v] = depth[u] + 1
                parent[v] = u
                queue.append(v)
    return parent if parent else None


def _geodesic_spines(g: Graph, root: int, limit: int) -> list[tuple[int, ...]]:
    """Shortest paths from the root to its most distant vertices.

    Every farthest vertex contributes its geodesics in ascending DFS order
    until the limit is reached.
    """
    dist = distances_from(g, root)
    ecc = max(d for d in dist if d is not None)
    spines: list[tuple[int, ...]] = []
    for far in range(g.n):
        if dist[far] != ecc:
            continue
        dist_far = distances_from(g, far)

        def rec(path):
            if len(spines) >= limit:
                return
            if path[-1] == far:
                spines.append(tuple(path))
                return
            d = len(path) - 1
            for u in g.adj[path[-1]]:
                if dist[u] == d + 1 and dist_far[u] == ecc - d - 1:
                    rec(path + [u])

        rec([root])
        if len(spines) >= limit:
            break
    return spines


def _broom_tree(g: Graph, root: int, spine, weight_cap: int) -> dict[int, int]:
    """Parent map of a spine path with extra vertices hung as deep as possible.

    Unplaced neighbors are adopted under the deepest available host first,
    repeating until nothing moves, but never above the depth where their
    weight would exceed the cap.  Deep adoption keeps the tree's unit weight
    small, which is what makes these trees efficient for bounds.
    """
    h = len(spine) - 1
    depth = {v: i for i, v in enumerate(spine)}
    parent = {spine[i]: spine[i - 1] for i in range(1, len(spine))}
    min_depth = max(1, h - (weight_cap.bit_length() - 1))
    changed = True
    while changed:
        changed = False
        for d in range(h, min_depth - 1, -1):
            hosts = sorted(u for u in depth if depth[u] == d - 1)
            for u in hosts:
                for v in g.adj[u]:
                    if v not in depth:
                        depth[v] = d
                        parent[v] = u
                        changed = True
    return parent


def _all_simple_paths(g: Graph, root: int, maxlen: int):
    """All simple paths from the root with 1..maxlen edges, in DFS order."""
    path = [root]
    on_path = {root}

    def rec():
        if len(path) - 1 >= maxlen:
            return
        for v in g.adj[path[-1]]:
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                yield tuple(path)
                yield from rec()
                on_path.remove(v)
                path.pop()

    yield from rec()


def _coverage(n: int, root: int, strategies) -> list[int]:
    cover = [0] * n
    for s in strategies:
        for v, w in s.weight.items():
            cover[v] += w
    cover[root] = 0
    return cover


def _ratio(n: int, root: int, strategies):
    """(total unit weight, min coverage) of a candidate set; None if not covering."""
    cover = _coverage(n, root, strategies)
    low = min(cover[v] for v in range(n) if v != root)
    if low == 0:
        return None
    return sum(unit_weight(s) for s in strategies), low


def _greedy_descent(n: int, root: int, pool: list[Strategy], start: list[int]):
    """Steepest-descent removal on total/coverage starting from the given subset.

    Coverage is maintained incrementally: each candidate removal costs one
    pass over the dropped strategy's vertices plus a min scan, so descending
    from a large pool stays cheap.
    """
    current = list(start)
    cover = _coverage(n, root, [pool[i] for i in current])
    units = [unit_weight(pool[i]) for i in current]
    total = sum(units)
    low = min(cover[v] for v in range(n) if v != root)
    if low == 0:
        return None
    while len(current) > 1:
        best = None
        for drop, i in enumerate(current):
            weight = pool[i].weight
            new_low = min(cover[v] - weight.get(v, 0) for v in range(n) if v != root)
            if new_low == 0:
                continue
            new_total = total - units[drop]
            # compare total/coverage as fractions: a/b < c/d iff a*d < c*b
            if new_total * low < total * new_low and (best is None or
                    new_total * best[1][1] < best[1][0] * new_low):
                best = (drop, (new_total, new_low))
        if best is None:
            break
        drop, (total, low) = best
        for v, w in pool[current[drop]].weight.items():
            cover[v] -= w
        current.pop(drop)
        units.pop(drop)
    return current, (total, low)


def generate_strategies(g: Graph, root: int, method: str = "greedy-search", *,
                        maxlen: int | None = None, budget: int | None = None,
                        seed: int = 0) -> StrategySet:
    """Build a covering strategy set for the root.

    all-paths: every simple path from the root with at most maxlen edges
    (default: the root's eccentricity).  bfs-trees: breadth-first spanning
    trees under distinct neighbor orderings, deduplicated.  greedy-search:
    assembles paths, spanning trees, and depth-capped branch subtrees, then
    keeps the subset minimizing total weight over minimum coverage.

    Raises CoverageError if the produced set leaves a vertex unreached.
    """
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    if g.n < 2:
        raise StrategyError("strategies need a graph with at least one edge")
    ecc = eccentricity(g, root)

    if method == "all-paths":
        limit = maxlen if maxlen is not None else ecc
        strategies = [strategy_from_path(g, p) for p in _all_simple_paths(g, root, limit)]
    elif method == "bfs-trees":
        count = budget if budget is not None else 8
        rng = random.Random(seed)
        seen_trees = set()
        strategies = []
        base = list(range(g.n))
        for _ in range(count):
            key = {v: i for i, v in enumerate(base)}
            parent = _bfs_parent_map(g, root, key.__getitem__)
            frozen = tuple(sorted(parent.items()))
            if frozen not in seen_trees:
                seen_trees.add(frozen)
                strategies.append(strategy_from_tree(g, root, parent))
            rng.shuffle(base)
    elif method == "greedy-search":
        strategies = _greedy_search(g, root, ecc, maxlen, budget)
    else:
        raise StrategyError(f"unknown generation method {method!r}")

    uncovered = [v for v, c in enumerate(_coverage(g.n, root, strategies))
                 if v != root and c == 0]
    if uncovered:
        raise CoverageError(uncovered)
    return StrategySet(root, tuple(strategies))


def _greedy_search(g: Graph, root: int, ecc: int, maxlen: int | None,
                   budget: int | None) -> list[Strategy]:
    cap = budget if budget is not None else 256
    limit = maxlen if maxlen is not None else ecc
    pool: list[Strategy] = []
    index_of: dict[tuple, int] = {}

    def push(parent) -> int | None:
        """Pool the strategy unless an equal-weight one is present; give its index."""
        s = strategy_from_tree(g, root, parent)
        key = tuple(sorted(s.weight.items()))
        if key in index_of:
            return index_of[key]
        if len(pool) >= cap:
            return None
        index_of[key] = len(pool)
        pool.append(s)
        return index_of[key]

    # branch subtrees by depth: one family per depth cap of the trees grown
    # from each single neighbor, plus the all-neighbor spanning variant
    neighbors = list(g.adj[root])
    families: list[list[int]] = []
    previous = None
    for depth_cap in range(1, MAX_DEPTH + 1):
        family = []
        for b in neighbors:
            parent = _branch_tree(g, root, [b], depth_cap)
            if parent is not None:
                i = push(parent)
                if i is not None:
                    family.append(i)
        parent = _branch_tree(g, root, neighbors, depth_cap)
        if parent is not None:
            push(parent)
        family = sorted(set(family))
        if family and family != previous:
            families.append(family)
        elif depth_cap > ecc:
            break  # deeper caps stopped changing the trees
        previous = family

    # brooms: geodesic spines with the leftover vertices hung as deep as a
    # weight cap allows, the cheapest spanning trees this search knows
    brooms = []
    for spine in _geodesic_spines(g, root, 32):
        for weight_cap in (1, 2, 4, 8):
            i = push(_broom_tree(g, root, spine, weight_cap))
            if i is not None:
                brooms.append(i)
    if brooms:
        families.append(sorted(set(brooms)))

    for p in _all_simple_paths(g, root, limit):
        if len(pool) >= cap:
            break
        push({v: u for u, v in zip(p, p[1:])})

    starts = [list(range(len(pool)))] + families
    best = None
    for start in starts:
        outcome = _greedy_descent(g.n, root, pool, start)
        if outcome is None:
            continue
        chosen, (total, low) = outcome
        if best is None or total * best[1][1] < best[1][0] * low:
            best = (chosen, (total, low))
    if best is None:
        return pool
    return [pool[i] for i in best[0]]


# ---------------------------------------------------------------------------
# exhaustive weight-bound oracle

class WeightCheck(NamedTuple):
    ok: bool
    counterexample: tuple[int, ...] | None


def max_unsolvable_weight_check(g: Graph, root: int, s: Strategy,
                                max_total: int) -> WeightCheck:
    """Verify every unsolvable configuration weighs at most the unit weight.

    Enumerates all configurations with up to max_total pebbles off the root
    and returns the first unsolvable one whose weighted count exceeds the
    strategy's unit weight, if any exists.
    """
    check = validate_strategy(g, s)
    if not check.ok:
        raise StrategyError(check.problem)
    bound = unit_weight(s)
    others = [v for v in range(g.n) if v != root]
    for total in range(max_total + 1):
        for combo in _compositions(total, len(others)):
            counts = [0] * g.n
            for v, c in zip(others, combo):
                counts[v] = c
            if config_weight(s, counts) <= bound:
                continue
            if not is_solvable(g, counts, root).solvable:
                return WeightCheck(False, tuple(counts))
    return WeightCheck(True, None)


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    x = [0] * parts

    def rec(i, rem):
        if i == parts - 1:
            x[i] = rem
            yield tuple(x)
            return
        for val in range(rem + 1):
            x[i] = val
            yield from rec(i + 1, rem - val)

    yield from rec(0, total)


# ---------------------------------------------------------------------------
# JSON wire format

def strategy_set_to_json(ss: StrategySet) -> dict:
    payload = []
    for s in ss.strategies:
        payload.append({
            "parent": {str(v): p for v, p in sorted(s.parent.items())},
            "weight": {str(v): w for v, w in sorted(s.weight.items())},
        })
    return {"root": ss.root, "strategies": payload}


def strategy_set_from_json(data: dict) -> StrategySet:
    try:
        root = int(data["root"])
        entries = data["strategies"]
    except (KeyError, TypeError) as exc:
        raise StrategyError(f"strategy JSON missing field: {exc}") from exc
    strategies = []
    for entry in entries:
        parent = {int(v): int(p) for v, p in entry["parent"].items()}
        if "weight" in entry:
            weight = {int(v): int(w) for v, w in entry["weight"].items()}
            strategies.append(Strategy(root, parent, weight))
        else:
            depth = _depths(root, parent)
            height = max(depth.values())
            weight = {v: 1 << (height - d) for v, d in depth.items() if v != root}
            strategies.append(Strategy(root, parent, weight))
    return StrategySet(root, tuple(strategies))


def save_strategy_set(ss: StrategySet, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(strategy_set_to_json(ss), fh, indent=2)
        fh.write("\n")


def load_strategy_set(path) -> StrategySet:
    with open(path, "r", encoding="utf-8") as fh:
        return strategy_set_from_json(json.load(fh))
