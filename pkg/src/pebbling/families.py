"""Constructors for the graph families the workbench ships with."""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, GraphError, new_graph

ROOT_SENTINEL = -1

MAX_HYPERCUBE_DIM = 20
MAX_BRUHAT = 6


def path(n: int) -> Graph:
    """Path on n vertices: 0 - 1 - ... - n-1."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return new_graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle on n vertices: 0 - 1 - ... - n-1 - 0."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return new_graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return new_graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def hypercube(d: int) -> Graph:
    """d-dimensional hypercube; vertex ids are bit masks, edges flip one bit."""
    if not 1 <= d <= MAX_HYPERCUBE_DIM:
        raise GraphError(f"hypercube dimension must be in 1..{MAX_HYPERCUBE_DIM}, got {d}")
    n = 1 << d
    return new_graph(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def petersen() -> Graph:
    """Petersen graph on the fixed labeling: outer cycle 0..4, inner vertices 5..9.

    Outer edges (i, i+1 mod 5), spokes (i, 5+i), and inner edges
    (5+i, 5+((i+2) mod 5)) forming the pentagram.
    """
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, 5 + i))
        edges.append((5 + i, 5 + ((i + 2) % 5)))
    return new_graph(10, edges)


def bruhat(n: int) -> Graph:
    """Adjacent-transposition graph on all permutations of 1..n.

    Vertex ids follow lexicographic order of the permutations; two vertices
    are adjacent when the permutations differ by swapping one pair of
    neighboring positions.  Every vertex has degree n-1.
    """
    if not 2 <= n <= MAX_BRUHAT:
        raise GraphError(f"bruhat size must be in 2..{MAX_BRUHAT}, got {n}")
    perms = list(permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    edges = []
    for p in perms:
        for i in range(n - 1):
            q = list(p)
            q[i], q[i + 1] = q[i + 1], q[i]
            j = index[tuple(q)]
            if index[p] < j:
                edges.append((index[p], j))
    return new_graph(len(perms), edges)


def tree_from_parents(parents) -> Graph:
    """Tree from a parent array; the single root holds ROOT_SENTINEL (-1)."""
    parents = list(parents)
    n = len(parents)
    if n < 1:
        raise GraphError("parent array must be nonempty")
    roots = [v for v, p in enumerate(parents) if p == ROOT_SENTINEL]
    if len(roots) != 1:
        raise GraphError(f"expected exactly one root sentinel, found {len(roots)}")
    root = roots[0]
    for v, p in enumerate(parents):
        if v != root and not 0 <= p < n:
            raise GraphError(f"parent of {v} is {p}, outside 0..{n - 1}")
        if p == v:
            raise GraphError(f"vertex {v} is its own parent")
    # Walk each vertex to the root; a cycle never reaches it.
    state = [0] * n  # 0 unseen, 1 on current walk, 2 known good
    state[root] = 2
    for v in range(n):
        walk = []
        u = v
        while state[u] == 0:
            state[u] = 1
            walk.append(u)
            u = parents[u]
            if state[u] == 1:
                raise GraphError(f"parent pointers cycle through vertex {u}")
        for w in walk:
            state[w] = 2
    return new_graph(n, ((v, parents[v]) for v in range(n) if v != root))


FAMILY_KINDS = ("path", "cycle", "complete", "hypercube", "petersen", "bruhat", "tree")


def build_family(kind: str, size: int | None = None, parents=None) -> Graph:
    """Dispatch used by the command-line layer."""
    if kind == "petersen":
        return petersen()
    if kind == "tree":
        if parents is None:
            raise GraphError("tree family needs a parent array")
        return tree_from_parents(parents)
    if kind not in FAMILY_KINDS:
        raise GraphError(f"unknown family kind {kind!r}")
    if size is None:
        raise GraphError(f"family {kind!r} needs a size parameter")
    builders = {"path": path, "cycle": cycle, "complete": complete,
                "hypercube": hypercube, "bruhat": bruhat}
    return builders[kind](size)
