"""Parallel classes: exact-cover resolution search and resolvable instances.

A resolution partitions the blocks of an STS(u) into (u-1)/2 parallel
classes, each covering every point exactly once.  Resolvable systems exist
iff u = 3 mod 6, but not every individual STS(u) of such an order is
resolvable, so there is also a seeded restart search over hill-climb
instances for finding one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .orders import InadmissibleOrderError, counts_for, require_admissible
from .systems import Triple, TripleSystem, construct_sts, random_sts, require_valid

RESOLVED = "resolved"
UNRESOLVABLE = "unresolvable"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class Resolution:
    """An ordered tuple of parallel classes over a fixed system."""

    system: TripleSystem
    classes: tuple[tuple[Triple, ...], ...]

    @classmethod
    def build(
        cls, system: TripleSystem, classes: Sequence[Sequence[Triple]]
    ) -> "Resolution":
        u = system.order
        if u % 3 != 0:
            raise ValueError(f"order {u} is not divisible by 3, no parallel class exists")
        _b, r = counts_for(u)
        if len(classes) != r:
            raise ValueError(f"expected {r} parallel classes, got {len(classes)}")
        flattened: list[Triple] = []
        for idx, cl in enumerate(classes):
            seen = [0] * u
            for tri in cl:
                for p in tri:
                    seen[p] += 1
            if len(cl) != u // 3 or any(s != 1 for s in seen):
                bad = [p for p, s in enumerate(seen) if s != 1]
                raise ValueError(
                    f"class {idx} is not a parallel class: points {bad} are "
                    f"not covered exactly once"
                )
            flattened.extend(cl)
        if sorted(flattened) != list(system.triples):
            raise ValueError("classes do not partition the system's triples")
        return cls(system, tuple(tuple(sorted(cl)) for cl in classes))


@dataclass(frozen=True)
class ResolutionOutcome:
    """Result of a resolution search; the status is never silent.

    status is one of "resolved", "unresolvable" (search space exhausted,
    which certifies no resolution exists), or "budget-exceeded" (the node
    budget ran out before the search finished).
    """

    status: str
    resolution: Optional[Resolution]
    nodes: int
    reason: str = ""

    @property
    def resolved(self) -> bool:
        return self.status == RESOLVED


def find_resolution(system: TripleSystem, max_nodes: int = 5_000_000) -> ResolutionOutcome:
    """Search for a partition of the blocks into parallel classes.

    Exact-cover backtracking: each class is grown at its lowest-index
    uncovered point, candidate blocks tried in canonical order, so the
    returned resolution is a deterministic function of the system.  Raises
    ValueError for systems that fail verification; returns an explicit
    budget-exceeded outcome when max_nodes placements were tried.
    """
    require_valid(system, "find_resolution")
    u = system.order
    if u % 3 != 0:
        return ResolutionOutcome(
            status=UNRESOLVABLE,
            resolution=None,
            nodes=0,
            reason=f"order {u} is not divisible by 3, so no parallel class exists",
        )
    status, assignment, nodes = kernels.resolve_classes(
        u, system.as_array(), max_nodes
    )
    nodes = int(nodes)
    if status == 1:
        m = u // 3
        triples = system.triples
        classes = [
            [triples[int(ti)] for ti in assignment[c * m : (c + 1) * m]]
            for c in range(len(assignment) // m)
        ]
        return ResolutionOutcome(
            status=RESOLVED,
            resolution=Resolution.build(system, classes),
            nodes=nodes,
        )
    if status == 0:
        return ResolutionOutcome(
            status=UNRESOLVABLE,
            resolution=None,
            nodes=nodes,
            reason=f"search exhausted after {nodes} nodes: no resolution exists",
        )
    return ResolutionOutcome(
        status=BUDGET_EXCEEDED,
        resolution=None,
        nodes=nodes,
        reason=(
            f"bound exceeded: search stopped after {nodes} nodes without "
            f"an answer; raise max_nodes to continue"
        ),
    )


class ResolvableSearchError(RuntimeError):
    """Raised when the restart search gives up without finding a resolution."""


def search_resolvable_sts(
    u: int,
    seed: int = 0,
    max_restarts: int = 50_000,
    max_nodes_per_try: int = 200_000,
) -> tuple[TripleSystem, Resolution]:
    """Find a resolvable STS(u) together with one of its resolutions.

    Tries the direct construction first, then walks a deterministic
    sequence of hill-climb instances derived from the seed until one
    resolves.  Deterministic given the seed: the same seed always yields
    the same system and resolution.
    """
    require_admissible(u)
    if u % 6 != 3:
        raise InadmissibleOrderError(
            f"order {u} admits no resolvable system: resolvable systems "
            f"exist only when the order is congruent to 3 mod 6"
        )
    direct = construct_sts(u, seed)
    outcome = find_resolution(direct, max_nodes=max_nodes_per_try)
    if outcome.resolved:
        return direct, outcome.resolution
    trial_seeds = random.Random(seed)
    for _ in range(max_restarts):
        candidate = random_sts(u, trial_seeds.randrange(1 << 31))
        outcome = find_resolution(candidate, max_nodes=max_nodes_per_try)
        if outcome.resolved:
            return candidate, outcome.resolution
    raise ResolvableSearchError(
        f"no resolvable STS({u}) found within {max_restarts} restarts"
    )
