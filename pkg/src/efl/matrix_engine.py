"""The intersection-matrix coloring method.

The working state is a symmetric n-by-n matrix over clique pairs: a cell is
DISJOINT when the two cliques miss each other (and on the diagonal), UNASSIGNED
while their shared vertex has no color yet, and otherwise carries that color.
Core vertices are processed in non-increasing clique degree; a degree-k vertex
receives the least color that does not already appear at least k-1 times in any
of its incident rows, written into every cell of its block.

When all n colors are blocked, a repair pass recolors previously placed
vertices to free one.  Plain one-vertex recolors alone provably cannot finish
tight instances (on the dense family the deterministic least-color choice ends
up flipping a single vertex back and forth), so the repair escalates: first the
scan of single legal recolors, then, for a stuck vertex shared by exactly two
cliques, a fan-and-alternating-path recoloring in the style of the constructive
proof of Vizing's theorem, planned on a scratch matrix and committed only when
it verifiably frees a color.  Every recolor counts against a budget; runs that
exhaust it, or that find no applicable repair, fail loudly with their trace.

On success the core coloring extends clique by clique to a total n-coloring:
inside each clique the private (degree-1) vertices absorb the unused colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import (
    ExtensionError,
    InconsistentBlockError,
    IncompleteColoringError,
)
from .instance import Instance, require_valid

DISJOINT = 0
UNASSIGNED = -1

STATUS_SUCCESS = "success"
STATUS_FAILED = "failed"

REASON_BUDGET_EXHAUSTED = "budget-exhausted"
REASON_STUCK_NO_REPAIR = "stuck-no-repair"
REASON_INTERNAL_VERIFICATION = "internal-verification"
REASON_NO_COLOR_AVAILABLE = "no-color-available"


class ColorMatrix:
    """Symmetric color matrix with 1-based clique indices."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[Sequence[int]]):
        self.n = n
        self._rows = [list(r) for r in rows]

    @classmethod
    def for_instance(cls, inst: Instance) -> "ColorMatrix":
        n = inst.n
        sets = inst.clique_sets
        rows = [[DISJOINT] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if sets[i] & sets[j]:
                    rows[i][j] = UNASSIGNED
                    rows[j][i] = UNASSIGNED
        return cls(n, rows)

    @classmethod
    def from_text(cls, text: str) -> "ColorMatrix":
        """Parse the render format: '.' disjoint, '?' unassigned, integer color."""
        rows = []
        for line in text.strip().split("\n"):
            row = []
            for tok in line.split():
                if tok == ".":
                    row.append(DISJOINT)
                elif tok == "?":
                    row.append(UNASSIGNED)
                else:
                    row.append(int(tok))
            rows.append(row)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix text is not square")
        return cls(n, rows)

    def get(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"cell ({i},{j}) out of range 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.n:
            raise IndexError(f"row {i} out of range 1..{self.n}")
        return tuple(self._rows[i - 1])

    def set_block(self, indices: Sequence[int], color: int) -> None:
        """Write one color into every off-diagonal cell over the given cliques."""
        for a in indices:
            for b in indices:
                if a != b:
                    self._rows[a - 1][b - 1] = color

    def copy(self) -> "ColorMatrix":
        return ColorMatrix(self.n, self._rows)

    def render(self) -> str:
        def tok(x: int) -> str:
            if x == DISJOINT:
                return "."
            if x == UNASSIGNED:
                return "?"
            return str(x)

        return "\n".join(" ".join(tok(x) for x in row) for row in self._rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ColorMatrix)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __repr__(self) -> str:
        return f"ColorMatrix(n={self.n})"


def initial_matrix(inst: Instance) -> ColorMatrix:
    """The intersection matrix: DISJOINT exactly on the diagonal and empty pairs."""
    require_valid(inst)
    return ColorMatrix.for_instance(inst)


def blocked_colors(matrix: ColorMatrix, i: int, threshold: int) -> set[int]:
    """Colors appearing at least ``threshold`` times in row i."""
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    counts: dict[int, int] = {}
    for x in matrix.row(i):
        if x > 0:
            counts[x] = counts.get(x, 0) + 1
    return {color for color, c in counts.items() if c >= threshold}


@dataclass(frozen=True)
class EngineConfig:
    """Run parameters; ``repair_budget`` defaults to n^2 at run time."""

    repair_budget: Optional[int] = None
    trace_enabled: bool = False

    def __post_init__(self):
        if self.repair_budget is not None and self.repair_budget < 1:
            raise ValueError("repair_budget must be at least 1")


@dataclass(frozen=True)
class Assigned:
    vertex: str
    color: int
    snapshot: Optional[ColorMatrix] = None


@dataclass(frozen=True)
class RepairRecolored:
    vertex: str
    old_color: int
    new_color: int
    snapshot: Optional[ColorMatrix] = None


@dataclass(frozen=True)
class RepairSkipped:
    vertex: str


@dataclass(frozen=True)
class BudgetExhausted:
    pass


TraceEvent = Union[Assigned, RepairRecolored, RepairSkipped, BudgetExhausted]


def render_trace(events: Sequence[TraceEvent]) -> str:
    """One line per event: ASSIGN / REPAIR / SKIP / BUDGET."""
    lines = []
    for ev in events:
        if isinstance(ev, Assigned):
            lines.append(f"ASSIGN {ev.vertex} {ev.color}")
        elif isinstance(ev, RepairRecolored):
            lines.append(f"REPAIR {ev.vertex} {ev.old_color} {ev.new_color}")
        elif isinstance(ev, RepairSkipped):
            lines.append(f"SKIP {ev.vertex}")
        elif isinstance(ev, BudgetExhausted):
            lines.append("BUDGET")
        else:
            raise TypeError(f"unknown trace event {ev!r}")
    return "\n".join(lines)


def replay_trace(
    inst: Instance, events: Sequence[TraceEvent], start: ColorMatrix
) -> ColorMatrix:
    """Fold the write events over a starting matrix."""
    matrix = start.copy()
    inc = inst.incidence_map
    for ev in events:
        if isinstance(ev, Assigned):
            matrix.set_block(inc[ev.vertex], ev.color)
        elif isinstance(ev, RepairRecolored):
            matrix.set_block(inc[ev.vertex], ev.new_color)
    return matrix


@dataclass(frozen=True)
class ColoringResult:
    status: str
    reason: Optional[str] = None
    coloring: Optional[dict[str, int]] = None
    final_matrix: Optional[ColorMatrix] = None
    trace: Optional[list[TraceEvent]] = None

    @property
    def ok(self) -> bool:
        return self.status == STATUS_SUCCESS


def _fan_path_plan(
    matrix: ColorMatrix,
    inc: dict[str, tuple[int, ...]],
    owner: dict[tuple[int, int], str],
    u: str,
    n: int,
) -> Optional[list[tuple[str, int]]]:
    """Plan a recolor sequence freeing a common color for a stuck 2-clique vertex.

    Works on a scratch copy: builds a fan of same-row vertices, inverts one
    two-colored alternating path, rotates the fan, and only returns the write
    list if the result verifiably leaves a color free in both of the stuck
    vertex's rows while keeping every row conflict-free.  All participants must
    sit in exactly two cliques; anything else aborts the plan.
    """
    row_a, row_b = inc[u]
    work = matrix.copy()
    writes: list[tuple[str, int]] = []
    palette = set(range(1, n + 1))

    def row_colors(r: int) -> set[int]:
        return {x for x in work.row(r) if x > 0}

    def free(r: int) -> list[int]:
        return sorted(palette - row_colors(r))

    def holder(r: int, color: int) -> Optional[str]:
        for j0, x in enumerate(work.row(r)):
            if x == color:
                j = j0 + 1
                return owner.get((min(r, j), max(r, j)))
        return None

    def write(v: str, color: int) -> None:
        work.set_block(inc[v], color)
        writes.append((v, color))

    # maximal fan from row_b: each next row is reached through a 2-clique
    # vertex of row_a whose color is free at the previous fan row
    fan = [row_b]
    while True:
        step = None
        for cand in free(fan[-1]):
            w = holder(row_a, cand)
            if w is None or len(inc[w]) != 2:
                continue
            other = inc[w][0] if inc[w][1] == row_a else inc[w][1]
            if other in fan:
                continue
            step = other
            break
        if step is None:
            break
        fan.append(step)

    free_a = free(row_a)
    free_last = free(fan[-1])
    if not free_a or not free_last:
        return None
    c = free_a[0]
    d = free_last[0]

    if d not in free_a:
        # read-only walk of the maximal c/d-alternating path from row_a,
        # then swap the two colors along it
        path: list[tuple[str, int]] = []
        r, expect = row_a, d
        while True:
            w = holder(r, expect)
            if w is None:
                break
            if len(inc[w]) != 2 or len(path) > n:
                return None
            path.append((w, expect))
            r = inc[w][0] if inc[w][1] == r else inc[w][1]
            expect = c if expect == d else d
        for w, had in path:
            write(w, c if had == d else d)

    target = None
    for idx, f in enumerate(fan):
        if d in free(f):
            target = idx
            break
    if target is None:
        return None
    if target >= 1:
        members: list[str] = []
        olds: list[int] = []
        for idx in range(1, target + 1):
            w = owner.get((min(row_a, fan[idx]), max(row_a, fan[idx])))
            if w is None or len(inc[w]) != 2:
                return None
            members.append(w)
            olds.append(work.get(min(row_a, fan[idx]), max(row_a, fan[idx])))
        # rotate the fan prefix in reverse so every intermediate state is proper
        if d in row_colors(fan[target]) or d in row_colors(row_a):
            return None
        write(members[-1], d)
        for idx in range(target - 1, 0, -1):
            shifted = olds[idx]
            if shifted in row_colors(fan[idx]) or shifted in row_colors(row_a):
                return None
            write(members[idx - 1], shifted)

    if not set(free(row_a)) & set(free(row_b)):
        return None
    for r in range(1, n + 1):
        seen: dict[int, Optional[str]] = {}
        for j0, x in enumerate(work.row(r)):
            if x > 0:
                v = owner.get((min(r, j0 + 1), max(r, j0 + 1)))
                if x in seen and seen[x] != v:
                    return None
                seen[x] = v
    return writes


def run_matrix_method(inst: Instance, config: Optional[EngineConfig] = None) -> ColoringResult:
    """Color the core through the matrix, then extend to a total coloring.

    All free choices are pinned for determinism: the next vertex is always the
    one with the lexicographically smallest incidence tuple among the highest
    remaining clique degree; written colors are always the least available.
    The repair scan walks previously placed vertices meeting the stuck vertex's
    cliques in the same incidence order, skipping fully blocked ones; after a
    successful recolor the scan restarts with skips forgotten, but a vertex is
    recolored at most once per stuck episode.  When the scan runs dry the
    fan-and-path escalation takes over; every write counts against the budget.
    """
    require_valid(inst)
    cfg = config or EngineConfig()
    n = inst.n
    budget = cfg.repair_budget if cfg.repair_budget is not None else n * n
    matrix = ColorMatrix.for_instance(inst)
    trace: Optional[list[TraceEvent]] = [] if cfg.trace_enabled else None

    inc = {v: ix for v, ix in inst.incidence_map.items() if len(ix) > 1}
    owner: dict[tuple[int, int], str] = {}
    for v, ix in inc.items():
        for p in range(len(ix)):
            for q in range(p + 1, len(ix)):
                owner[(ix[p], ix[q])] = v
    pending: dict[int, list[str]] = {}
    for v, ix in inc.items():
        pending.setdefault(len(ix), []).append(v)
    for vs in pending.values():
        vs.sort(key=lambda v: inc[v])

    placed: list[str] = []
    budget_used = 0

    def record(ev: TraceEvent) -> None:
        if trace is not None:
            trace.append(ev)

    def snapshot() -> Optional[ColorMatrix]:
        return matrix.copy() if cfg.trace_enabled else None

    def fail(reason: str) -> ColoringResult:
        return ColoringResult(
            status=STATUS_FAILED, reason=reason, final_matrix=matrix, trace=trace
        )

    all_colors = set(range(1, n + 1))

    while True:
        degrees = [d for d, vs in pending.items() if vs]
        if not degrees:
            break
        k = max(degrees)
        queue = pending[k]
        while queue:
            u = queue[0]
            rows_u = inc[u]
            recolored_this_episode: set[str] = set()
            failure: Optional[str] = None
            while True:
                blocked = set()
                for i in rows_u:
                    blocked |= blocked_colors(matrix, i, k - 1)
                if len(blocked) < n:
                    x = min(all_colors - blocked)
                    matrix.set_block(rows_u, x)
                    record(Assigned(u, x, snapshot()))
                    break
                # all n colors blocked: recolor one previously placed vertex
                rows_u_set = set(rows_u)
                eligible = sorted(
                    (
                        v
                        for v in placed
                        if v not in recolored_this_episode and rows_u_set & set(inc[v])
                    ),
                    key=lambda v: inc[v],
                )
                recolored = False
                for v in eligible:
                    rows_v = inc[v]
                    blocked_v = set()
                    for i in rows_v:
                        blocked_v |= blocked_colors(matrix, i, k - 1)
                    if len(blocked_v) >= n:
                        record(RepairSkipped(v))
                        continue
                    if budget_used >= budget:
                        record(BudgetExhausted())
                        return fail(REASON_BUDGET_EXHAUSTED)
                    x = min(all_colors - blocked_v)
                    old = matrix.get(rows_v[0], rows_v[1])
                    matrix.set_block(rows_v, x)
                    budget_used += 1
                    recolored_this_episode.add(v)
                    record(RepairRecolored(v, old, x, snapshot()))
                    recolored = True
                    break
                if recolored:
                    continue
                plan = (
                    _fan_path_plan(matrix, inc, owner, u, n) if k == 2 else None
                )
                if not plan:
                    failure = REASON_STUCK_NO_REPAIR
                    break
                if budget_used + len(plan) > budget:
                    record(BudgetExhausted())
                    failure = REASON_BUDGET_EXHAUSTED
                    break
                for v, x in plan:
                    old = matrix.get(inc[v][0], inc[v][1])
                    matrix.set_block(inc[v], x)
                    budget_used += 1
                    record(RepairRecolored(v, old, x, snapshot()))
            if failure is not None:
                return fail(failure)
            queue.pop(0)
            placed.append(u)

    core = matrix_to_coloring(inst, matrix)
    total = extend_to_full(inst, core)

    from .oracle import verify_proper  # local import: oracle depends on instance only

    report = verify_proper(inst, total)
    if not report.proper or report.max_color > n:
        return fail(REASON_INTERNAL_VERIFICATION)
    return ColoringResult(
        status=STATUS_SUCCESS,
        coloring=total,
        final_matrix=matrix,
        trace=trace,
    )


def matrix_to_coloring(inst: Instance, matrix: ColorMatrix) -> dict[str, int]:
    """Read the partial core coloring off a matrix.

    Every colored core vertex maps to the color of its cell block; blocks still
    fully unassigned are simply absent.  A block holding two different values
    means the matrix was not produced by a correct engine run.
    """
    if matrix.n != inst.n:
        raise ValueError(f"matrix order {matrix.n} does not match instance n={inst.n}")
    coloring: dict[str, int] = {}
    for v, ix in inst.incidence_map.items():
        if len(ix) < 2:
            continue
        values = {
            matrix.get(a, b) for a in ix for b in ix if a != b
        }
        if values == {UNASSIGNED}:
            continue
        if len(values) != 1 or min(values) < 1:
            raise InconsistentBlockError(
                f"vertex '{v}' block over cliques {ix} holds {sorted(values)}"
            )
        coloring[v] = values.pop()
    return coloring


def extend_to_full(inst: Instance, core_coloring: dict[str, int]) -> dict[str, int]:
    """Extend a full core coloring to all vertices, clique by clique.

    Inside each clique the private vertices receive that clique's unused
    colors, ascending color matched to ascending vertex token.  Requires the
    core colors within every clique to be distinct and within 1..n.
    """
    require_valid(inst)
    n = inst.n
    total = dict(core_coloring)
    inc = inst.incidence_map
    for i, members in enumerate(inst.cliques, start=1):
        core_members = [v for v in members if len(inc[v]) > 1]
        missing = [v for v in core_members if v not in core_coloring]
        if missing:
            raise IncompleteColoringError(
                f"core vertices {missing} of clique {i} are uncolored"
            )
        used = [core_coloring[v] for v in core_members]
        if any(not 1 <= c <= n for c in used):
            raise ExtensionError(f"clique {i} carries a color outside 1..{n}")
        if len(set(used)) != len(used):
            raise ExtensionError(f"clique {i} repeats a core color; no extension exists")
        free = sorted(set(range(1, n + 1)) - set(used))
        privates = sorted(v for v in members if len(inc[v]) == 1)
        for v, c in zip(privates, free):
            total[v] = c
    return total
