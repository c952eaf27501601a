"""Constraint checking for poems against their declared variant.

Checks run in a fixed order: line shape, pair coverage of the induced
triple collection, purity (no fillers), stanza structure for resolvable
variants, then any optional rules.  Every failure is a finding; nothing
raises, so a report always comes back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .orders import counts_for
from .poems import Poem, PoemLine
from .reports import ERROR, WARNING, Finding
from .systems import TripleSystem, pair_count_matrix


@dataclass(frozen=True)
class PoemReport:
    """Validation outcome plus the triple system the poem's lines induce."""

    findings: tuple[Finding, ...]
    derived_system: TripleSystem
    keywords: tuple[str, ...]

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == WARNING)

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "findings": [f.to_json() for f in self.findings],
            "derived_system": {
                "order": self.derived_system.order,
                "points": list(self.keywords),
                "triples": [list(t) for t in self.derived_system.triples],
            },
        }


def _loc(line: PoemLine) -> dict[str, Any]:
    return {"stanza": line.stanza_no, "line": line.line_no}


def validate_poem(poem: Poem) -> PoemReport:
    u = poem.order
    expected_blocks, expected_r = counts_for(u)
    words = poem.keywords.words
    findings: list[Finding] = []
    all_lines = poem.lines()

    # (a) line shape: exactly 3 distinct keywords per line
    bound: list[tuple[PoemLine, tuple[int, int, int]]] = []
    for line in all_lines:
        distinct = line.distinct_points
        if len(distinct) != 3:
            present = ", ".join(words[p] for p in distinct) or "none"
            findings.append(
                Finding(
                    rule="line-keyword-count",
                    severity=ERROR,
                    message=(
                        f"line has {len(distinct)} distinct keyword(s) "
                        f"({present}), needs exactly 3"
                    ),
                    location=_loc(line),
                )
            )
            continue
        if len(line.keyword_points) > 3:
            repeats = sorted(
                {p for p in distinct if line.keyword_points.count(p) > 1}
            )
            names = ", ".join(words[p] for p in repeats)
            findings.append(
                Finding(
                    rule="keyword-repeated",
                    severity=WARNING,
                    message=f"keyword(s) repeated within the line: {names}",
                    location=_loc(line),
                )
            )
        a, b, c = sorted(distinct)
        bound.append((line, (a, b, c)))

    # (b) pair coverage over the bound lines, counted with multiplicity so
    # duplicated lines surface as overcovered pairs
    triples = [t for _line, t in bound]
    counts = pair_count_matrix(u, triples)
    upper = np.triu(np.ones((u, u), dtype=bool), k=1)
    for a, b in np.argwhere(upper & (counts == 0)).tolist():
        findings.append(
            Finding(
                rule="pair-uncovered",
                severity=ERROR,
                message=(
                    f"keywords {words[a]!r} and {words[b]!r} never share a line"
                ),
                location={"pair": [words[a], words[b]]},
            )
        )
    for a, b in np.argwhere(upper & (counts > 1)).tolist():
        where = [
            line.poem_line_no
            for line, t in bound
            if a in t and b in t
        ]
        findings.append(
            Finding(
                rule="pair-overcovered",
                severity=ERROR,
                message=(
                    f"keywords {words[a]!r} and {words[b]!r} share "
                    f"{int(counts[a, b])} lines (lines {where}), expected 1"
                ),
                location={"pair": [words[a], words[b]], "lines": where},
            )
        )
    if len(triples) != expected_blocks:
        findings.append(
            Finding(
                rule="block-count",
                severity=ERROR,
                message=(
                    f"poem binds {len(triples)} line(s) to triples, "
                    f"expected {expected_blocks} (u(u-1)/6 for u={u})"
                ),
            )
        )
    replication = [0] * u
    for _line, t in bound:
        for p in t:
            replication[p] += 1
    for p, dp in enumerate(replication):
        if dp != expected_r:
            findings.append(
                Finding(
                    rule="replication",
                    severity=ERROR,
                    message=(
                        f"keyword {words[p]!r} appears in {dp} line(s), "
                        f"expected {expected_r} ((u-1)/2 for u={u})"
                    ),
                    location={"point": words[p]},
                )
            )

    # (c) pure variants admit no filler tokens
    if poem.pure:
        for line in all_lines:
            fillers = line.fillers
            if fillers:
                shown = ", ".join(repr(t.text) for t in fillers)
                findings.append(
                    Finding(
                        rule="pure-filler",
                        severity=ERROR,
                        message=f"filler word(s) not allowed in a pure poem: {shown}",
                        location=_loc(line),
                    )
                )

    # (d) resolvable variants: stanzas are parallel classes
    if poem.resolvable:
        if len(poem.stanzas) != expected_r:
            findings.append(
                Finding(
                    rule="stanza-count",
                    severity=ERROR,
                    message=(
                        f"poem has {len(poem.stanzas)} stanza(s), expected "
                        f"{expected_r} parallel classes ((u-1)/2 for u={u})"
                    ),
                )
            )
        for si, stanza in enumerate(poem.stanzas, start=1):
            if len(stanza) != u // 3:
                findings.append(
                    Finding(
                        rule="stanza-line-count",
                        severity=ERROR,
                        message=(
                            f"stanza has {len(stanza)} line(s), expected "
                            f"{u // 3} (u/3 for u={u})"
                        ),
                        location={"stanza": si},
                    )
                )
            seen = [0] * u
            for line in stanza:
                for p in set(line.keyword_points):
                    seen[p] += 1
            missing = [words[p] for p, k in enumerate(seen) if k == 0]
            repeated = [words[p] for p, k in enumerate(seen) if k > 1]
            if missing:
                findings.append(
                    Finding(
                        rule="stanza-coverage",
                        severity=ERROR,
                        message=(
                            f"stanza does not cover keyword(s): {', '.join(missing)}"
                        ),
                        location={"stanza": si},
                    )
                )
            if repeated:
                findings.append(
                    Finding(
                        rule="stanza-coverage",
                        severity=ERROR,
                        message=(
                            f"stanza repeats keyword(s): {', '.join(repeated)}"
                        ),
                        location={"stanza": si},
                    )
                )

    # (e) optional chain rule over consecutive lines of the whole poem
    if "chain_last_to_first" in poem.rules:
        for prev, nxt in zip(all_lines, all_lines[1:]):
            if not prev.keyword_points or not nxt.keyword_points:
                continue
            last = prev.keyword_points[-1]
            first = nxt.keyword_points[0]
            if last != first:
                findings.append(
                    Finding(
                        rule="chain",
                        severity=ERROR,
                        message=(
                            f"line ends with keyword {words[last]!r} but the "
                            f"next line starts with {words[first]!r}"
                        ),
                        location={
                            "stanza": nxt.stanza_no,
                            "line": nxt.line_no,
                        },
                    )
                )

    derived = TripleSystem.build(u, triples)
    return PoemReport(
        findings=tuple(findings),
        derived_system=derived,
        keywords=words,
    )
