"""Upper bounds on pebbling numbers from covering strategy sets.

Summing every strategy's constraint shows an unsolvable configuration holds
fewer than (total unit weight) / (minimum coverage) pebbles, so the floor of
that ratio plus one bounds the rooted pebbling number.  The LP relaxation
optimizes the same constraints exactly and is never looser.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph
from .lp import build_relaxation, solve_max
from .strategy import (CoverageError, StrategySet, generate_strategies,
                       unit_weight)


@dataclass(frozen=True)
class BoundReport:
    root: int
    min_coverage: int
    total_unit_weight: int
    ratio_bound: int
    strategy_count: int
    lp_value: Fraction | None = None
    lp_bound: int | None = None

    def to_json_dict(self) -> dict:
        payload = {
            "root": self.root,
            "kappa": self.min_coverage,
            "chi": self.total_unit_weight,
            "ratio_bound": self.ratio_bound,
        }
        if self.lp_value is not None:
            payload["lp_value"] = f"{self.lp_value.numerator}/{self.lp_value.denominator}"
            payload["lp_bound"] = self.lp_bound
        return payload


@dataclass(frozen=True)
class GraphBounds:
    per_root: dict[int, BoundReport]
    failures: dict[int, str]
    overall_bound: int | None

    def to_json_dict(self, g: Graph) -> dict:
        return {
            "graph": {"n": g.n, "m": g.num_edges},
            "per_root": [self.per_root[r].to_json_dict() for r in sorted(self.per_root)],
            "failures": {str(r): msg for r, msg in sorted(self.failures.items())},
            "overall_bound": self.overall_bound,
        }


def min_coverage(g: Graph, root: int, ss: StrategySet) -> int:
    """Least summed strategy weight over the non-root vertices.

    Every vertex must be reached by some strategy; otherwise the aggregation
    says nothing about configurations concentrated on the uncovered vertex.
    """
    if ss.root != root:
        raise ValueError(f"strategy set rooted at {ss.root} does not match root {root}")
    cover = [0] * g.n
    for s in ss.strategies:
        for v, w in s.weight.items():
            cover[v] += w
    uncovered = [v for v in range(g.n) if v != root and cover[v] == 0]
    if uncovered:
        raise CoverageError(uncovered)
    return min(cover[v] for v in range(g.n) if v != root)


def total_unit_weight(ss: StrategySet) -> int:
    return sum(unit_weight(s) for s in ss.strategies)


def aggregate_bound(coverage: int, total: int) -> int:
    """floor(total / coverage) + 1; the arithmetic core of the ratio bound."""
    if coverage <= 0:
        raise ValueError(f"coverage must be positive, got {coverage}")
    return total // coverage + 1


def ratio_bound(g: Graph, root: int, ss: StrategySet) -> int:
    return aggregate_bound(min_coverage(g, root, ss), total_unit_weight(ss))


def lp_bound(g: Graph, root: int, ss: StrategySet) -> BoundReport:
    """Full report: aggregation ratio plus the exact LP optimum, floored + 1."""
    coverage = min_coverage(g, root, ss)
    total = total_unit_weight(ss)
    solution = solve_max(build_relaxation(g, root, ss))
    if solution.status != "optimal":
        # cannot happen for covering sets: every column has a positive entry
        raise RuntimeError("relaxation is unbounded despite full coverage")
    z = solution.value
    return BoundReport(
        root=root,
        min_coverage=coverage,
        total_unit_weight=total,
        ratio_bound=aggregate_bound(coverage, total),
        strategy_count=len(ss.strategies),
        lp_value=z,
        lp_bound=math.floor(z) + 1,
    )


def _bound_one_root(args):
    g, root, method, maxlen, budget, seed, use_lp = args
    try:
        ss = generate_strategies(g, root, method, maxlen=maxlen, budget=budget, seed=seed)
        if use_lp:
            return root, lp_bound(g, root, ss), None
        report = BoundReport(
            root=root,
            min_coverage=min_coverage(g, root, ss),
            total_unit_weight=total_unit_weight(ss),
            ratio_bound=ratio_bound(g, root, ss),
            strategy_count=len(ss.strategies),
        )
        return root, report, None
    except (CoverageError, ValueError) as exc:
        return root, None, str(exc)


def bound_graph(g: Graph, method: str = "lp", *, gen: str = "greedy-search",
                maxlen: int | None = None, budget: int | None = None,
                seed: int = 0, threads: int = 1) -> GraphBounds:
    """Bound the pebbling number of the whole graph: one report per root.

    The overall bound is the maximum over roots of the tightest per-root
    bound; it is only reported when every root produced one.
    """
    if method not in ("ratio", "lp"):
        raise ValueError(f"unknown bound method {method!r}")
    jobs = [(g, root, gen, maxlen, budget, seed, method == "lp") for root in range(g.n)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_bound_one_root, jobs))
    else:
        outcomes = [_bound_one_root(job) for job in jobs]
    per_root: dict[int, BoundReport] = {}
    failures: dict[int, str] = {}
    for root, report, error in outcomes:
        if report is None:
            failures[root] = error
        else:
            per_root[root] = report
    overall = None
    if not failures and per_root:
        overall = max(r.lp_bound if r.lp_bound is not None else r.ratio_bound
                      for r in per_root.values())
    return GraphBounds(per_root, failures, overall)
