"""Instance constructions: canonical families, the bundled example, seeded random covers.

The random generator is driven by SplitMix64, a widely documented 64-bit
pseudorandom generator whose seed is its full state.  Identical generator
parameters therefore reproduce identical instances on any platform, which the
test corpora rely on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import Instance

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream; the 64-bit seed is the entire generator state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); modulo bias is irrelevant here."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance."""

    kind: str  # "disjoint" | "dense" | "random"
    n: int
    seed: int = 0
    merges: int = 0
    extension_percent: int = 20
    debug_validate: bool = False  # validate after every move; for generator debugging

    def __post_init__(self):
        if self.kind not in ("disjoint", "dense", "random"):
            raise ValueError(f"unknown generator kind '{self.kind}'")
        if self.n < 1 or (self.kind != "disjoint" and self.n < 2):
            raise ValueError(f"n={self.n} too small for kind '{self.kind}'")
        if self.merges < 0 or self.merges > self.n * (self.n - 1) // 2:
            raise ValueError(
                f"merges must lie in 0..C(n,2)={self.n * (self.n - 1) // 2}, got {self.merges}"
            )
        if not 0 <= self.extension_percent <= 100:
            raise ValueError("extension_percent must lie in 0..100")


@dataclass(frozen=True)
class RandomBuildResult:
    instance: Instance
    merges_done: int
    extensions_done: int


def gen_disjoint(n: int) -> Instance:
    """n pairwise-disjoint cliques: n^2 vertices, empty core."""
    if n < 1:
        raise ValueError("n must be positive")
    return Instance(
        n, [tuple(f"v{i}_{j}" for j in range(1, n + 1)) for i in range(1, n + 1)]
    )


def gen_dense(n: int) -> Instance:
    """The dense cover: every clique pair meets in its own degree-2 vertex.

    Clique i holds the shared vertices b{i}_{j} (one per other clique) plus a
    single private vertex p{i}; the core is the line graph of the complete
    graph on n points.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    cliques = []
    for i in range(1, n + 1):
        members = [
            f"b{min(i, j)}_{max(i, j)}" for j in range(1, n + 1) if j != i
        ]
        members.append(f"p{i}")
        cliques.append(tuple(members))
    return Instance(n, cliques)


def build_random(spec: GenSpec) -> RandomBuildResult:
    """Grow a random linear cover from disjoint cliques by identifying vertices.

    Each merge picks a disjoint clique pair and fuses one private vertex of
    each into a fresh vertex ``m<counter>``.  After a successful merge, with
    probability ``extension_percent``/100 an existing shared vertex is pushed
    into one more clique that currently misses all of its cliques, raising its
    clique degree.  Generation stops after ``merges`` successful merges or
    when no legal move remains; the result always validates.
    """
    if spec.kind != "random":
        raise ValueError("build_random requires a GenSpec of kind 'random'")
    n = spec.n
    rng = SplitMix64(spec.seed)
    cliques: list[list[str]] = [
        [f"v{i}_{j}" for j in range(1, n + 1)] for i in range(1, n + 1)
    ]
    incidence: dict[str, set[int]] = {
        t: {i + 1} for i, members in enumerate(cliques) for t in members
    }

    def privates(ci: int) -> list[str]:
        return sorted(t for t in cliques[ci - 1] if len(incidence[t]) == 1)

    def replace(ci: int, old: str, new: str) -> None:
        members = cliques[ci - 1]
        members[members.index(old)] = new
        incidence[old].discard(ci)
        if not incidence[old]:
            del incidence[old]
        incidence.setdefault(new, set()).add(ci)

    def checkpoint() -> None:
        if spec.debug_validate:
            snapshot = Instance(n, [tuple(c) for c in cliques])
            if not snapshot.is_valid:
                raise AssertionError(
                    "generator broke linearity mid-run: "
                    + "; ".join(v.message for v in snapshot.validation.violations)
                )

    merges_done = 0
    extensions_done = 0
    counter = 0
    while merges_done < spec.merges:
        sets = [set(c) for c in cliques]
        candidates = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if not (sets[i - 1] & sets[j - 1]) and privates(i) and privates(j)
        ]
        if not candidates:
            break
        i, j = candidates[rng.below(len(candidates))]
        pi = privates(i)
        pj = privates(j)
        a = pi[rng.below(len(pi))]
        b = pj[rng.below(len(pj))]
        counter += 1
        fresh = f"m{counter}"
        replace(i, a, fresh)
        replace(j, b, fresh)
        merges_done += 1
        checkpoint()

        if rng.below(100) < spec.extension_percent:
            sets = [set(c) for c in cliques]
            ext_candidates: list[tuple[str, int]] = []
            for v in sorted(t for t, ix in incidence.items() if len(ix) > 1):
                owned = incidence[v]
                for c in range(1, n + 1):
                    if c in owned:
                        continue
                    if not privates(c):
                        continue
                    if any(sets[c - 1] & sets[k - 1] for k in owned):
                        continue
                    ext_candidates.append((v, c))
            if ext_candidates:
                v, c = ext_candidates[rng.below(len(ext_candidates))]
                pc = privates(c)
                gone = pc[rng.below(len(pc))]
                replace(c, gone, v)
                extensions_done += 1
                checkpoint()

    return RandomBuildResult(
        instance=Instance(n, [tuple(c) for c in cliques]),
        merges_done=merges_done,
        extensions_done=extensions_done,
    )


def gen_random(n: int, merges: int, seed: int, extension_percent: int = 20) -> Instance:
    """Seeded random linear cover; see :func:`build_random` for the moves."""
    spec = GenSpec(
        kind="random", n=n, seed=seed, merges=merges, extension_percent=extension_percent
    )
    return build_random(spec).instance


def example_instance() -> Instance:
    """The bundled 27-vertex, 6-clique example used by the golden trace."""
    return Instance(
        6,
        [
            ("v1", "v2", "v3", "v4", "v5", "v6"),
            ("v1", "v7", "v8", "v9", "v10", "v11"),
            ("v1", "v12", "v13", "v14", "v15", "v16"),
            ("v1", "v17", "v18", "v19", "v20", "v21"),
            ("v6", "v7", "v16", "v22", "v23", "v24"),
            ("v9", "v16", "v19", "v25", "v26", "v27"),
        ],
    )


# What the matrix method must produce on example_instance(): the assignment
# order with colors, and the final matrix it reaches.  The trace-example CLI
# subcommand and the golden tests diff against these.
EXAMPLE_ASSIGNMENTS: tuple[tuple[str, int], ...] = (
    ("v1", 1),
    ("v16", 2),
    ("v6", 3),
    ("v7", 4),
    ("v9", 3),
    ("v19", 4),
)

EXAMPLE_FINAL_MATRIX = "\n".join(
    (
        ". 1 1 1 3 .",
        "1 . 1 1 4 3",
        "1 1 . 1 2 2",
        "1 1 1 . . 4",
        "3 4 2 . . 2",
        ". 3 2 4 2 .",
    )
)
