"""Shared test machinery: independent oracles, the seeded corpus, strategies.

The oracles here deliberately ignore the library's own data paths: core edges
come from a direct pairwise incidence scan, properness from an all-pairs scan,
and chromatic numbers from plain fixed-order backtracking with no ordering
heuristics, bounds, or symmetry breaking beyond feasibility.
"""

from __future__ import annotations

from hypothesis import strategies as st

from efl.generators import gen_dense, gen_disjoint, gen_random
from efl.instance import Instance


def brute_core_edges(inst: Instance) -> set[tuple[str, str]]:
    """Edges of the core graph straight from the definition."""
    inc = inst.incidence_map
    core = sorted(v for v, ix in inc.items() if len(ix) > 1)
    edges = set()
    for a in range(len(core)):
        for b in range(a + 1, len(core)):
            u, v = core[a], core[b]
            if set(inc[u]) & set(inc[v]):
                edges.add((u, v))
    return edges


def brute_is_proper(inst: Instance, coloring: dict[str, int]) -> bool:
    """All-pairs scan over every clique."""
    for members in inst.cliques:
        group = sorted(set(members))
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                if coloring[group[a]] == coloring[group[b]]:
                    return False
    return True


def brute_k_colorable(order: list[str], adj: dict[str, set[str]], k: int) -> bool:
    """Fixed-order backtracking; tries every color 1..k at every vertex."""

    colors: dict[str, int] = {}

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for c in range(1, k + 1):
            if any(colors.get(u) == c for u in adj[v]):
                continue
            colors[v] = c
            if place(idx + 1):
                return True
            del colors[v]
        return False

    return place(0)


def brute_chromatic(order: list[str], adj: dict[str, set[str]]) -> int:
    """Least k admitting a proper coloring, found by ascending enumeration."""
    if not order:
        return 0
    for k in range(1, len(order) + 1):
        if brute_k_colorable(order, adj, k):
            return k
    raise AssertionError("unreachable: |V| colors always suffice")


def random_corpus(count: int = 500) -> list[Instance]:
    """The seeded 500-instance corpus with n in 3..10 used across the suite."""
    out = []
    for i in range(count):
        n = 3 + i % 8
        merges = (7 * i + 3) % (n * (n - 1) // 2 + 1)
        out.append(gen_random(n, merges, seed=100000 + i))
    return out


@st.composite
def instances(draw, max_n: int = 8) -> Instance:
    """Arbitrary valid instances: disjoint, dense, or seeded random covers."""
    kind = draw(st.sampled_from(["disjoint", "dense", "random", "random"]))
    if kind == "disjoint":
        return gen_disjoint(draw(st.integers(min_value=1, max_value=max_n)))
    n = draw(st.integers(min_value=2, max_value=max_n))
    if kind == "dense":
        return gen_dense(n)
    merges = draw(st.integers(min_value=0, max_value=n * (n - 1) // 2))
    seed = draw(st.integers(min_value=0, max_value=2**32))
    percent = draw(st.sampled_from([0, 20, 50]))
    return gen_random(n, merges, seed, extension_percent=percent)
