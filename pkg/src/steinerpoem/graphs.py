"""Triangle decompositions of complete graphs, with DOT/TikZ/JSON exports.

An STS(u) is the same thing as a partition of the edges of K_u into
triangles, so the conversion in each direction is mostly bookkeeping plus
honest validation.  Exports are byte-deterministic for a fixed input.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .systems import Triple, TripleSystem, require_valid, verify_sts

# 12 display colors, assigned cyclically by triangle index; enough for one
# cycle on K_9's 12 triangles
PALETTE = (
    "red",
    "blue",
    "green",
    "orange",
    "magenta",
    "teal",
    "violet",
    "cyan",
    "brown",
    "lime",
    "gray",
    "pink",
)

EXPORT_FORMATS = ("dot", "tikz", "json")


class DecompositionError(ValueError):
    """Raised when triangles fail to partition the edges of the graph."""


@dataclass(frozen=True)
class CompleteGraph:
    n: int

    @property
    def edge_count(self) -> int:
        return self.n * (self.n - 1) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(a + 1, self.n)]


@dataclass(frozen=True)
class TriangleDecomposition:
    """Triangles over K_n with display labels and colors per triangle."""

    graph: CompleteGraph
    labels: tuple[str, ...]
    triangles: tuple[Triple, ...]
    colors: tuple[str, ...]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"p{i + 1}" for i in range(n))


def to_decomposition(
    system: TripleSystem, labels: Optional[Sequence[str]] = None
) -> TriangleDecomposition:
    """View a valid system as a triangle decomposition of K_u.

    Rejects invalid systems, citing the verification report.
    """
    report = verify_sts(system)
    if not report.ok:
        raise DecompositionError(
            f"not a triangle decomposition: system fails verification with "
            f"{len(report.errors)} violation(s), first: {report.errors[0].message}"
        )
    if labels is None:
        labels = default_labels(system.order)
    labels = tuple(str(w) for w in labels)
    if len(labels) != system.order:
        raise DecompositionError(
            f"expected {system.order} labels, got {len(labels)}"
        )
    colors = tuple(PALETTE[i % len(PALETTE)] for i in range(len(system.triples)))
    return TriangleDecomposition(
        graph=CompleteGraph(system.order),
        labels=labels,
        triangles=system.triples,
        colors=colors,
    )


def from_decomposition(decomp: TriangleDecomposition) -> TripleSystem:
    """Recover the triple system, checking the edge partition honestly.

    Raises DecompositionError naming the offending edges when triangles
    overlap or leave edges uncovered.
    """
    n = decomp.graph.n
    cover: dict[tuple[int, int], int] = {}
    for tri in decomp.triangles:
        a, b, c = tri
        if not (0 <= a < b < c < n):
            raise DecompositionError(f"triangle {tri} is not three vertices of K_{n}")
        for e in ((a, b), (a, c), (b, c)):
            cover[e] = cover.get(e, 0) + 1
    overlapping = sorted(e for e, k in cover.items() if k > 1)
    uncovered = sorted(e for e in CompleteGraph(n).edges() if e not in cover)
    problems = []
    if overlapping:
        shown = ", ".join(str(e) for e in overlapping[:8])
        problems.append(f"overlapping edges: {len(overlapping)} ({shown})")
    if uncovered:
        shown = ", ".join(str(e) for e in uncovered[:8])
        problems.append(f"uncovered edges: {len(uncovered)} ({shown})")
    if problems:
        raise DecompositionError(
            "triangles do not decompose K_%d: %s" % (n, "; ".join(problems))
        )
    return TripleSystem.build(n, decomp.triangles)


def _node_ids(labels: Sequence[str]) -> list[str]:
    # TikZ node names must be plain; fall back to positional ids on clashes
    ids = []
    for i, label in enumerate(labels):
        clean = re.sub(r"[^A-Za-z0-9]", "", label)
        ids.append(clean if clean else f"v{i}")
    seen: set[str] = set()
    for i, node in enumerate(ids):
        if node.lower() in seen:
            ids[i] = f"v{i}"
        seen.add(ids[i].lower())
    return ids


def _export_dot(decomp: TriangleDecomposition) -> str:
    n = decomp.graph.n
    lines = [f"graph K{n} {{", "  layout=circo", "  node [shape=circle]"]
    for i, label in enumerate(decomp.labels):
        text = label.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  v{i} [label="{text}"]')
    for tri, color in zip(decomp.triangles, decomp.colors):
        a, b, c = tri
        for x, y in ((a, b), (a, c), (b, c)):
            lines.append(f"  v{x} -- v{y} [color={color}]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _export_tikz(decomp: TriangleDecomposition) -> str:
    # a fragment for use inside a tikzpicture: nodes on the unit circle
    # starting at 90 degrees and proceeding clockwise, then one colored
    # closed path per triangle
    n = decomp.graph.n
    ids = _node_ids(decomp.labels)
    step = 360.0 / n
    lines = []
    for i, (node, label) in enumerate(zip(ids, decomp.labels)):
        angle = 90.0 - i * step
        angle = (angle + 180.0) % 360.0 - 180.0
        lines.append(f"\\node ({node}) at ({angle:.1f}:1) {{{label}}};")
    for tri, color in zip(decomp.triangles, decomp.colors):
        a, b, c = tri
        lines.append(
            f"\\draw[thick, {color}] ({ids[a]}) -- ({ids[b]}) -- "
            f"({ids[c]}) -- cycle;"
        )
    return "\n".join(lines) + "\n"


def _export_json(decomp: TriangleDecomposition) -> str:
    doc = {
        "order": decomp.graph.n,
        "points": list(decomp.labels),
        "triples": [list(t) for t in decomp.triangles],
        "colors": list(decomp.colors),
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def export_graph(decomp: TriangleDecomposition, format: str) -> str:
    """Render the decomposition as dot, tikz, or json text."""
    if format == "dot":
        return _export_dot(decomp)
    if format == "tikz":
        return _export_tikz(decomp)
    if format == "json":
        return _export_json(decomp)
    raise ValueError(
        f"unknown format {format!r}: supported formats are {', '.join(EXPORT_FORMATS)}"
    )
