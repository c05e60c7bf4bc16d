"""Greedy degree-ordered coloring and the two sufficient-condition checkers.

The greedy procedure colors core vertices in non-increasing clique degree,
giving each the least color unused in all of its cliques so far.  The two
checkers test the per-clique core-vertex counts that guarantee this greedy
succeeds: at most sqrt(n) core vertices per clique, or, for every d in 2..n,
at most ceil((n+d-1)/d) vertices of clique degree >= d per clique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .instance import Instance, require_valid
from .matrix_engine import (
    REASON_INTERNAL_VERIFICATION,
    REASON_NO_COLOR_AVAILABLE,
    STATUS_FAILED,
    STATUS_SUCCESS,
    ColoringResult,
    extend_to_full,
)


@dataclass(frozen=True)
class CliqueCount:
    clique: int
    count: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.count <= self.bound


@dataclass(frozen=True)
class HypothesisReport:
    holds: bool
    per_clique: tuple[CliqueCount, ...]
    parameter: str
    first_failing_d: Optional[int] = None


def run_greedy(inst: Instance) -> ColoringResult:
    """Color core vertices greedily in non-increasing clique degree.

    Ties break on the lexicographically smallest incidence tuple.  Fails with
    ``no-color-available`` when some vertex finds all n colors used in its
    cliques; otherwise the core coloring is extended to a verified total one.
    """
    require_valid(inst)
    n = inst.n
    inc = {v: ix for v, ix in inst.incidence_map.items() if len(ix) > 1}
    order = sorted(inc, key=lambda v: (-len(inc[v]), inc[v]))
    used_in_clique: list[set[int]] = [set() for _ in range(n + 1)]
    core: dict[str, int] = {}
    all_colors = set(range(1, n + 1))
    for v in order:
        blocked = set()
        for i in inc[v]:
            blocked |= used_in_clique[i]
        free = all_colors - blocked
        if not free:
            return ColoringResult(status=STATUS_FAILED, reason=REASON_NO_COLOR_AVAILABLE)
        c = min(free)
        core[v] = c
        for i in inc[v]:
            used_in_clique[i].add(c)

    total = extend_to_full(inst, core)

    from .oracle import verify_proper

    report = verify_proper(inst, total)
    if not report.proper or report.max_color > n:
        return ColoringResult(status=STATUS_FAILED, reason=REASON_INTERNAL_VERIFICATION)
    return ColoringResult(status=STATUS_SUCCESS, coloring=total)


def _core_counts(inst: Instance, min_degree: int) -> list[int]:
    inc = inst.incidence_map
    counts = [0] * inst.n
    for v, ix in inc.items():
        if len(ix) >= min_degree:
            for i in ix:
                counts[i - 1] += 1
    return counts


def check_sy1(inst: Instance) -> HypothesisReport:
    """At most sqrt(n) vertices of clique degree > 1 in every clique.

    The comparison count <= sqrt(n) is evaluated exactly as count <= isqrt(n),
    avoiding floating point at perfect-square boundaries.
    """
    require_valid(inst)
    bound = math.isqrt(inst.n)
    rows = tuple(
        CliqueCount(clique=i, count=c, bound=bound)
        for i, c in enumerate(_core_counts(inst, 2), start=1)
    )
    return HypothesisReport(
        holds=all(r.ok for r in rows), per_clique=rows, parameter="sy1"
    )


def check_sy2(inst: Instance, d: int, bound_rule: str = "statement") -> HypothesisReport:
    """At most ceil((n+d-1)/d) vertices of clique degree >= d in every clique.

    ``bound_rule="proof"`` switches to the tighter ceil(n/d) variant.
    """
    require_valid(inst)
    n = inst.n
    if not 2 <= d <= n:
        raise ValueError(f"d must lie in 2..{n}, got {d}")
    if bound_rule == "statement":
        bound = (n + 2 * d - 2) // d  # ceil((n+d-1)/d)
    elif bound_rule == "proof":
        bound = (n + d - 1) // d  # ceil(n/d)
    else:
        raise ValueError(f"unknown bound_rule '{bound_rule}'")
    rows = tuple(
        CliqueCount(clique=i, count=c, bound=bound)
        for i, c in enumerate(_core_counts(inst, d), start=1)
    )
    return HypothesisReport(
        holds=all(r.ok for r in rows),
        per_clique=rows,
        parameter=f"sy2 d={d} ({bound_rule})",
    )


def check_sy2_all(inst: Instance, bound_rule: str = "statement") -> HypothesisReport:
    """Conjunction of :func:`check_sy2` over d = 2..n; records the first failing d."""
    require_valid(inst)
    for d in range(2, inst.n + 1):
        report = check_sy2(inst, d, bound_rule)
        if not report.holds:
            return HypothesisReport(
                holds=False,
                per_clique=report.per_clique,
                parameter=f"sy2 all d in 2..{inst.n} ({bound_rule})",
                first_failing_d=d,
            )
    return HypothesisReport(
        holds=True,
        per_clique=(),
        parameter=f"sy2 all d in 2..{inst.n} ({bound_rule})",
    )
