"""Clique-cover instances and their derived combinatorial structure.

An instance is a union of n complete graphs (cliques), each on exactly n
vertices, such that any two cliques share at most one vertex.  This is the
graph form of a linear hypergraph with n edges of cardinality n, the object
of the Erdos-Faber-Lovasz conjecture.  Vertices are identified by string
tokens; clique indices are 1-based everywhere, including file formats and
reports.

The clique degree of a vertex is the number of cliques containing it.
Vertices of clique degree 1 are "private", the rest are "core"; the core
vertices induce the core graph, which is all that matters for n-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import InvalidInstanceError, ParseError, UnknownVertexError

VertexId = str


def _is_valid_token(token: str) -> bool:
    # visible ASCII only, no whitespace
    return len(token) > 0 and all(0x21 <= ord(ch) <= 0x7E for ch in token)


class Instance:
    """n cliques of order n; clique i keeps its vertex tokens in input order.

    Construction is permissive about clique contents (wrong sizes, duplicate
    tokens, oversized intersections) so that :func:`validate` can report the
    violations; only the clique count itself must match ``n``.  Instances are
    immutable and hashable, and all derived views are cached.
    """

    def __init__(self, n: int, cliques: Iterable[Iterable[VertexId]]):
        if n < 1:
            raise ValueError(f"clique count must be positive, got {n}")
        normalized = tuple(tuple(c) for c in cliques)
        if len(normalized) != n:
            raise ValueError(f"expected {n} cliques, got {len(normalized)}")
        self.n = n
        self.cliques = normalized

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Instance)
            and self.n == other.n
            and self.cliques == other.cliques
        )

    def __hash__(self) -> int:
        return hash((self.n, self.cliques))

    def __repr__(self) -> str:
        return f"Instance(n={self.n}, vertices={len(self.vertices)})"

    def clique(self, i: int) -> tuple[VertexId, ...]:
        """Vertex tokens of clique i (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"clique index {i} out of range 1..{self.n}")
        return self.cliques[i - 1]

    @cached_property
    def clique_sets(self) -> tuple[frozenset[VertexId], ...]:
        return tuple(frozenset(c) for c in self.cliques)

    @cached_property
    def vertices(self) -> tuple[VertexId, ...]:
        """The vertex universe in lexicographic token order."""
        return tuple(sorted({t for c in self.cliques for t in c}))

    @cached_property
    def incidence_map(self) -> dict[VertexId, tuple[int, ...]]:
        """For every vertex, the ascending 1-based indices of its cliques."""
        found: dict[VertexId, list[int]] = {}
        for i, members in enumerate(self.clique_sets, start=1):
            for token in members:
                found.setdefault(token, []).append(i)
        return {t: tuple(ix) for t, ix in found.items()}

    @cached_property
    def validation(self) -> "ValidationReport":
        return validate(self)

    @property
    def is_valid(self) -> bool:
        return self.validation.ok


@dataclass(frozen=True)
class Violation:
    """One structured validation finding."""

    kind: str  # "clique-size" | "duplicate-vertex" | "shared-pair"
    cliques: tuple[int, ...]
    tokens: tuple[VertexId, ...] = ()
    message: str = ""


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()


@dataclass(frozen=True)
class DegreeProfile:
    """Clique degrees of every vertex, aggregated."""

    degree_of: dict[VertexId, int]
    histogram: dict[int, int]
    max_degree: int


@dataclass(frozen=True)
class CoreGraph:
    """Subgraph induced by the vertices of clique degree greater than one.

    Two core vertices are adjacent exactly when their incidence lists meet,
    i.e. when some clique contains both.
    """

    vertices: tuple[VertexId, ...]
    edges: tuple[tuple[VertexId, VertexId], ...]
    incidence: dict[VertexId, tuple[int, ...]] = field(default_factory=dict)

    def adjacency(self) -> dict[VertexId, set[VertexId]]:
        adj: dict[VertexId, set[VertexId]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def validate(inst: Instance) -> ValidationReport:
    """Check the clique-cover invariants, reporting every violation.

    Findings cover wrong clique sizes, tokens repeated inside a clique, and
    clique pairs sharing two or more vertices.  All offenders are listed, not
    just the first, so generator bugs surface completely.
    """
    violations: list[Violation] = []
    n = inst.n
    for i, members in enumerate(inst.cliques, start=1):
        seen: dict[VertexId, int] = {}
        for t in members:
            seen[t] = seen.get(t, 0) + 1
        if len(seen) != n:
            violations.append(
                Violation(
                    kind="clique-size",
                    cliques=(i,),
                    message=f"clique {i} has {len(seen)} distinct vertices, expected {n}",
                )
            )
        for t, count in seen.items():
            if count > 1:
                violations.append(
                    Violation(
                        kind="duplicate-vertex",
                        cliques=(i,),
                        tokens=(t,),
                        message=f"clique {i} lists vertex '{t}' {count} times",
                    )
                )
    sets = inst.clique_sets
    for i in range(n):
        for j in range(i + 1, n):
            shared = sets[i] & sets[j]
            if len(shared) >= 2:
                toks = tuple(sorted(shared))
                violations.append(
                    Violation(
                        kind="shared-pair",
                        cliques=(i + 1, j + 1),
                        tokens=toks,
                        message=(
                            f"cliques {i + 1},{j + 1} share {len(shared)} vertices "
                            f"({', '.join(toks)})"
                        ),
                    )
                )
    return ValidationReport(ok=not violations, violations=tuple(violations))


def require_valid(inst: Instance) -> None:
    """Raise :class:`InvalidInstanceError` unless the instance validates."""
    report = inst.validation
    if not report.ok:
        summary = "; ".join(v.message for v in report.violations)
        raise InvalidInstanceError(summary)


def parse_instance(text: str, *, require_validity: bool = True) -> Instance:
    """Parse ``.efl`` text: a clique count line, then one clique per line.

    Blank lines and ``#`` comment lines are ignored; CRLF input is accepted.
    Grammar errors (bad header, wrong counts, malformed or duplicated tokens)
    raise :class:`ParseError` naming the line.  With ``require_validity`` the
    parsed cover must also satisfy the at-most-one-shared-vertex invariant.
    """
    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        content.append((lineno, line))

    if not content:
        raise ParseError("empty input: expected a clique count line")
    header_line, header = content[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(
            f"line {header_line}: expected a decimal clique count, got '{header}'"
        ) from None
    if n < 1:
        raise ParseError(f"line {header_line}: clique count must be positive, got {n}")

    body = content[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} clique lines, found {len(body)}")

    cliques: list[tuple[str, ...]] = []
    for idx, (lineno, line) in enumerate(body, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(
                f"line {lineno}: clique {idx} has {len(tokens)} tokens, expected {n}"
            )
        seen: set[str] = set()
        for t in tokens:
            if not _is_valid_token(t):
                raise ParseError(f"line {lineno}: invalid token '{t}' in clique {idx}")
            if t in seen:
                raise ParseError(f"line {lineno}: duplicate token '{t}' in clique {idx}")
            seen.add(t)
        cliques.append(tuple(tokens))

    inst = Instance(n, cliques)
    if require_validity:
        report = inst.validation
        if not report.ok:
            raise ParseError("; ".join(v.message for v in report.violations))
    return inst


def clique_degree(inst: Instance, v: VertexId) -> int:
    """Number of cliques containing v."""
    try:
        return len(inst.incidence_map[v])
    except KeyError:
        raise UnknownVertexError(f"vertex '{v}' does not occur in the instance") from None


def incidence(inst: Instance, v: VertexId) -> list[int]:
    """Ascending 1-based indices of the cliques containing v."""
    try:
        return list(inst.incidence_map[v])
    except KeyError:
        raise UnknownVertexError(f"vertex '{v}' does not occur in the instance") from None


def shared_vertex(inst: Instance, i: int, j: int) -> Optional[VertexId]:
    """The unique vertex shared by cliques i and j, or None when disjoint."""
    if i == j:
        raise ValueError("clique indices must differ")
    for k in (i, j):
        if not 1 <= k <= inst.n:
            raise IndexError(f"clique index {k} out of range 1..{inst.n}")
    shared = inst.clique_sets[i - 1] & inst.clique_sets[j - 1]
    if not shared:
        return None
    if len(shared) > 1:
        raise InvalidInstanceError(
            f"cliques {i},{j} share {len(shared)} vertices; instance is not a legal cover"
        )
    return next(iter(shared))


def core_subgraph(inst: Instance) -> CoreGraph:
    """The core graph: vertices of clique degree > 1, adjacency via shared cliques."""
    require_valid(inst)
    inc = inst.incidence_map
    core = sorted(v for v, ix in inc.items() if len(ix) > 1)
    core_set = set(core)
    edges: set[tuple[VertexId, VertexId]] = set()
    # core vertices inside one clique are pairwise adjacent; the union over
    # cliques is exactly the pairs with intersecting incidence lists
    for members in inst.clique_sets:
        group = sorted(t for t in members if t in core_set)
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                edges.add((group[a], group[b]))
    return CoreGraph(
        vertices=tuple(core),
        edges=tuple(sorted(edges)),
        incidence={v: inc[v] for v in core},
    )


def degree_profile(inst: Instance) -> DegreeProfile:
    """Clique degree of every vertex plus the degree histogram."""
    require_valid(inst)
    degree_of = {v: len(ix) for v, ix in inst.incidence_map.items()}
    histogram: dict[int, int] = {}
    for d in degree_of.values():
        histogram[d] = histogram.get(d, 0) + 1
    return DegreeProfile(
        degree_of=degree_of,
        histogram=dict(sorted(histogram.items())),
        max_degree=max(degree_of.values()),
    )


def intersecting_pair_count(inst: Instance) -> int:
    """Count clique pairs (i < j) with a nonempty intersection."""
    require_valid(inst)
    sets = inst.clique_sets
    return sum(
        1
        for i in range(inst.n)
        for j in range(i + 1, inst.n)
        if sets[i] & sets[j]
    )
