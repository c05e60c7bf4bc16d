"""Serialization and export: ``.efl`` text, coloring listings, DOT graphs."""

from __future__ import annotations

from typing import Mapping, Optional

from .instance import Instance, require_valid

# DOT palette for the first six colors; higher colors fall back to their index.
DOT_COLOR_NAMES = {1: "maroon", 2: "tan", 3: "green", 4: "red", 5: "blue", 6: "cyan"}


def serialize_instance(inst: Instance) -> str:
    """Inverse of parsing: header line, then one clique per line, LF only."""
    lines = [str(inst.n)]
    lines.extend(" ".join(c) for c in inst.cliques)
    return "\n".join(lines) + "\n"


def export_coloring(coloring: Mapping[str, int], n: int) -> str:
    """Stable text form: first line n, then 'vertex color' sorted by token."""
    lines = [str(n)]
    lines.extend(f"{v} {coloring[v]}" for v in sorted(coloring))
    return "\n".join(lines) + "\n"


def _dot_color(color: int) -> str:
    return DOT_COLOR_NAMES.get(color, str(color))


def export_dot(inst: Instance, coloring: Optional[Mapping[str, int]] = None) -> str:
    """DOT text: every vertex once, every clique as its full edge set.

    With a coloring each node carries a ``color`` attribute (named for colors
    1..6, numeric beyond).  The coloring must be total and proper.
    """
    require_valid(inst)
    if coloring is not None:
        from .oracle import verify_proper

        report = verify_proper(inst, dict(coloring))
        if not report.proper:
            first = report.conflicts[0]
            raise ValueError(
                f"refusing to export an improper coloring: clique {first[0]} "
                f"has '{first[1]}' and '{first[2]}' both colored {first[3]}"
            )
    lines = ["graph cover {"]
    for v in inst.vertices:
        if coloring is None:
            lines.append(f'  "{v}";')
        else:
            lines.append(f'  "{v}" [color="{_dot_color(coloring[v])}", style=filled];')
    seen: set[tuple[str, str]] = set()
    for members in inst.cliques:
        group = sorted(set(members))
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                edge = (group[a], group[b])
                if edge not in seen:
                    seen.add(edge)
                    lines.append(f'  "{edge[0]}" -- "{edge[1]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
