"""JSON interchange for systems and resolutions.

Document shape:
{ "order": u, "points": ["word", ...], "triples": [[i, j, k], ...],
  "classes": [[triple-index, ...], ...] }
"classes" is optional; triple entries are ascending; "points" length equals
the order.  Loaders reject violations with positional messages.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .resolution import Resolution
from .systems import TripleSystem


class InterchangeError(ValueError):
    """Raised for malformed interchange documents; messages carry positions."""


@dataclass(frozen=True)
class LoadedSystem:
    system: TripleSystem
    points: tuple[str, ...]
    resolution: Optional[Resolution] = None


def system_to_doc(
    system: TripleSystem,
    points: Optional[Sequence[str]] = None,
    resolution: Optional[Resolution] = None,
) -> dict[str, Any]:
    """Build the interchange dict; points default to p1..pu."""
    if points is None:
        points = [f"p{i + 1}" for i in range(system.order)]
    points = [str(w) for w in points]
    if len(points) != system.order:
        raise InterchangeError(
            f"points: expected {system.order} entries, got {len(points)}"
        )
    doc: dict[str, Any] = {
        "order": system.order,
        "points": points,
        "triples": [list(t) for t in system.triples],
    }
    if resolution is not None:
        if resolution.system != system:
            raise InterchangeError("classes: resolution belongs to a different system")
        index = {t: i for i, t in enumerate(system.triples)}
        doc["classes"] = [[index[t] for t in cl] for cl in resolution.classes]
    return doc


def doc_to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def dump_system(
    system: TripleSystem,
    points: Optional[Sequence[str]] = None,
    resolution: Optional[Resolution] = None,
) -> str:
    return doc_to_json(system_to_doc(system, points, resolution))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InterchangeError(message)


def load_document(text: str) -> LoadedSystem:
    """Parse and validate an interchange document.

    Structural validation only: the loaded triples need not form a valid
    system (verification is a separate step), but classes, when present,
    must be a genuine resolution.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(f"not valid JSON: {exc}") from None
    _require(isinstance(doc, dict), "top level: expected a JSON object")
    for key in ("order", "points", "triples"):
        _require(key in doc, f"{key}: required key missing")
    order = doc["order"]
    _require(
        isinstance(order, int) and not isinstance(order, bool) and order >= 3,
        f"order: expected an integer >= 3, got {order!r}",
    )
    points = doc["points"]
    _require(isinstance(points, list), "points: expected a list")
    _require(
        len(points) == order,
        f"points: expected {order} entries, got {len(points)}",
    )
    for i, w in enumerate(points):
        _require(isinstance(w, str) and w != "", f"points[{i}]: expected a nonempty string")
    raw_triples = doc["triples"]
    _require(isinstance(raw_triples, list), "triples: expected a list")
    triples = []
    for i, row in enumerate(raw_triples):
        _require(
            isinstance(row, list) and len(row) == 3,
            f"triples[{i}]: expected a list of 3 point indices",
        )
        for v in row:
            _require(
                isinstance(v, int) and not isinstance(v, bool),
                f"triples[{i}]: entries must be integers",
            )
            _require(
                0 <= v < order,
                f"triples[{i}]: point {v} out of range for order {order}",
            )
        _require(
            row[0] < row[1] < row[2],
            f"triples[{i}]: entries must be strictly ascending",
        )
        triples.append((row[0], row[1], row[2]))
    system = TripleSystem.build(order, triples)
    _require(
        list(system.triples) == triples,
        "triples: rows must be sorted lexicographically",
    )

    resolution = None
    if "classes" in doc and doc["classes"] is not None:
        raw_classes = doc["classes"]
        _require(isinstance(raw_classes, list), "classes: expected a list")
        classes = []
        seen: dict[int, int] = {}
        for ci, cl in enumerate(raw_classes):
            _require(isinstance(cl, list), f"classes[{ci}]: expected a list of triple indices")
            members = []
            for v in cl:
                _require(
                    isinstance(v, int) and not isinstance(v, bool),
                    f"classes[{ci}]: entries must be integers",
                )
                _require(
                    0 <= v < len(triples),
                    f"classes[{ci}]: triple index {v} out of range",
                )
                if v in seen:
                    raise InterchangeError(
                        f"classes: triple {v} appears in classes {seen[v]} and {ci}"
                    )
                seen[v] = ci
                members.append(system.triples[v])
            classes.append(members)
        try:
            resolution = Resolution.build(system, classes)
        except ValueError as exc:
            raise InterchangeError(f"classes: {exc}") from None
    return LoadedSystem(
        system=system, points=tuple(str(w) for w in points), resolution=resolution
    )
