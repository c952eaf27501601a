"""Triple systems: construction, verification, and a brute-force oracle.

A Steiner triple system of order u is a set of 3-element blocks over points
0..u-1 in which every unordered pair of points appears in exactly one block.
This module builds them directly (quasigroup constructions for both residue
classes of admissible orders), grows random ones by hill climbing, verifies
arbitrary block collections, and recovers the lexicographically least system
for small orders as an independent oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .orders import InadmissibleOrderError, admissible_order, counts_for, require_admissible
from .reports import ERROR, Finding, Report

Triple = tuple[int, int, int]


def canonical_triple(points: Iterable[int]) -> Triple:
    """Sort a 3-element block and reject repeats or wrong arity."""
    pts = sorted(points)
    if len(pts) != 3:
        raise ValueError(f"a triple needs exactly 3 points, got {len(pts)}")
    if pts[0] == pts[1] or pts[1] == pts[2]:
        raise ValueError(f"triple {tuple(pts)} repeats a point")
    return (int(pts[0]), int(pts[1]), int(pts[2]))


@dataclass(frozen=True)
class TripleSystem:
    """An order plus a canonically sorted tuple of blocks.

    The block list is kept as given (duplicates preserved) so that the
    verifier can diagnose overcovered pairs in malformed collections; a
    valid system never contains duplicates.  Two systems compare equal iff
    their orders and canonical block tuples are equal.
    """

    order: int
    triples: tuple[Triple, ...]

    @classmethod
    def build(cls, order: int, triples: Iterable[Iterable[int]]) -> "TripleSystem":
        if not isinstance(order, int) or isinstance(order, bool) or order < 3:
            raise ValueError(f"order must be an int >= 3, got {order!r}")
        canon = []
        for tri in triples:
            tri = canonical_triple(tri)
            if tri[0] < 0 or tri[2] >= order:
                raise ValueError(
                    f"triple {tri} out of range for order {order}"
                )
            canon.append(tri)
        return cls(order, tuple(sorted(canon)))

    @property
    def block_count(self) -> int:
        return len(self.triples)

    def replication(self) -> list[int]:
        """Number of blocks through each point."""
        counts = [0] * self.order
        for a, b, c in self.triples:
            counts[a] += 1
            counts[b] += 1
            counts[c] += 1
        return counts

    def as_array(self) -> np.ndarray:
        arr = np.array(self.triples, dtype=np.int64)
        return arr.reshape(len(self.triples), 3)


def relabel_system(system: TripleSystem, perm: Sequence[int]) -> TripleSystem:
    """Apply a point permutation: point i becomes perm[i]."""
    if sorted(perm) != list(range(system.order)):
        raise ValueError(f"not a permutation of 0..{system.order - 1}")
    return TripleSystem.build(
        system.order,
        [(perm[a], perm[b], perm[c]) for a, b, c in system.triples],
    )


def pair_count_matrix(order: int, triples: Sequence[Triple]) -> np.ndarray:
    """(order, order) matrix of how many blocks cover each unordered pair.

    Only the upper triangle (row < column) is populated.
    """
    counts = np.zeros(order * order, dtype=np.int64)
    if triples:
        arr = np.asarray(triples, dtype=np.int64)
        flat = np.concatenate(
            [
                arr[:, 0] * order + arr[:, 1],
                arr[:, 0] * order + arr[:, 2],
                arr[:, 1] * order + arr[:, 2],
            ]
        )
        counts = np.bincount(flat, minlength=order * order)
    return counts.reshape(order, order)


def verify_sts(system: TripleSystem) -> Report:
    """Check the defining conditions; an empty finding list means valid.

    Findings cover, in order: inadmissible order, uncovered pairs, pairs
    covered more than once, wrong block count, and wrong per-point
    replication.  The input may be any block collection; diagnostics are
    the output and nothing raises.
    """
    u = system.order
    findings: list[Finding] = []
    if not admissible_order(u):
        findings.append(
            Finding(
                rule="order-admissibility",
                severity=ERROR,
                message=(
                    f"order {u} inadmissible: no system exists unless the "
                    f"order is congruent to 1 or 3 mod 6"
                ),
            )
        )
    counts = pair_count_matrix(u, system.triples)
    upper = np.triu(np.ones((u, u), dtype=bool), k=1)
    for a, b in np.argwhere(upper & (counts == 0)).tolist():
        findings.append(
            Finding(
                rule="pair-uncovered",
                severity=ERROR,
                message=f"pair ({a}, {b}) is covered by no triple",
                location={"pair": [a, b]},
            )
        )
    for a, b in np.argwhere(upper & (counts > 1)).tolist():
        c = int(counts[a, b])
        findings.append(
            Finding(
                rule="pair-overcovered",
                severity=ERROR,
                message=f"pair ({a}, {b}) is covered by {c} triples, expected 1",
                location={"pair": [a, b]},
            )
        )
    if admissible_order(u):
        expected_b, expected_r = counts_for(u)
        if system.block_count != expected_b:
            findings.append(
                Finding(
                    rule="block-count",
                    severity=ERROR,
                    message=(
                        f"block count {system.block_count} != {expected_b} "
                        f"(u(u-1)/6 for u={u})"
                    ),
                )
            )
        for p, dp in enumerate(system.replication()):
            if dp != expected_r:
                findings.append(
                    Finding(
                        rule="replication",
                        severity=ERROR,
                        message=(
                            f"point {p} lies in {dp} triples, expected "
                            f"{expected_r} ((u-1)/2 for u={u})"
                        ),
                        location={"point": p},
                    )
                )
    return Report(tuple(findings))


def require_valid(system: TripleSystem, context: str) -> None:
    """Raise ValueError when the system fails verify_sts."""
    report = verify_sts(system)
    if not report.ok:
        first = report.errors[0].message
        raise ValueError(
            f"{context} requires a valid triple system: "
            f"{len(report.errors)} violation(s), first: {first}"
        )


def _bose_triples(u: int) -> list[Triple]:
    # u = 6t + 3: points are Z_n x {0,1,2} with n = 2t + 1, glued by the
    # idempotent commutative quasigroup x*y = (x+y)(t+1) mod n
    t = (u - 3) // 6
    n = 2 * t + 1

    def point(x: int, layer: int) -> int:
        return layer * n + x

    def star(x: int, y: int) -> int:
        return ((x + y) * (t + 1)) % n

    triples = []
    for x in range(n):
        triples.append(canonical_triple((point(x, 0), point(x, 1), point(x, 2))))
    for x in range(n):
        for y in range(x + 1, n):
            for layer in range(3):
                triples.append(
                    canonical_triple(
                        (
                            point(x, layer),
                            point(y, layer),
                            point(star(x, y), (layer + 1) % 3),
                        )
                    )
                )
    return triples


def _skolem_triples(u: int) -> list[Triple]:
    # u = 6t + 1: points are Z_n x {0,1,2} plus one extra point, n = 2t,
    # glued by the half-idempotent commutative quasigroup with
    # f(2k) = k and f(2k+1) = k + t
    t = (u - 1) // 6
    n = 2 * t
    extra = u - 1

    def point(x: int, layer: int) -> int:
        return layer * n + x

    def star(x: int, y: int) -> int:
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + t

    triples = []
    for x in range(t):
        triples.append(canonical_triple((point(x, 0), point(x, 1), point(x, 2))))
    for x in range(t):
        for layer in range(3):
            triples.append(
                canonical_triple(
                    (extra, point(t + x, layer), point(x, (layer + 1) % 3))
                )
            )
    for x in range(n):
        for y in range(x + 1, n):
            for layer in range(3):
                triples.append(
                    canonical_triple(
                        (
                            point(x, layer),
                            point(y, layer),
                            point(star(x, y), (layer + 1) % 3),
                        )
                    )
                )
    return triples


def construct_sts(u: int, seed: int = 0) -> TripleSystem:
    """Build an STS(u) directly; the seed only relabels the points.

    Uses the quasigroup construction for u = 3 mod 6 and the one-extra-point
    variant for u = 1 mod 6.  Every output is checked with verify_sts before
    it is returned, so correctness rests on the verifier.
    """
    require_admissible(u)
    base = _bose_triples(u) if u % 6 == 3 else _skolem_triples(u)
    perm = list(range(u))
    random.Random(seed).shuffle(perm)
    system = TripleSystem.build(u, [(perm[a], perm[b], perm[c]) for a, b, c in base])
    report = verify_sts(system)
    if not report.ok:  # pragma: no cover - construction is verified by tests
        raise RuntimeError(f"construction produced an invalid system for u={u}")
    return system


def random_sts(u: int, seed: int = 0, max_steps: int = 10_000_000) -> TripleSystem:
    """Grow a pseudorandom STS(u) by hill climbing.

    Unlike construct_sts, different seeds give structurally different
    systems, which matters when hunting for resolvable instances.
    """
    require_admissible(u)
    ok, tris, _steps = kernels.hill_climb(u, seed, max_steps)
    if not ok:
        raise RuntimeError(
            f"hill climb did not complete an STS({u}) within {max_steps} steps"
        )
    system = TripleSystem.build(u, tris.tolist())
    report = verify_sts(system)
    if not report.ok:  # pragma: no cover - kernel is verified by tests
        raise RuntimeError(f"hill climb produced an invalid system for u={u}")
    return system


_BRUTE_FORCE_ORDERS = (3, 7, 9, 13, 15)
_brute_cache: dict[int, TripleSystem] = {}


def brute_force_sts(u: int) -> TripleSystem:
    """Exhaustively find the lexicographically least STS(u), u <= 15.

    Depth-first search that always branches on the smallest uncovered pair
    (a, b) and tries third points in increasing order.  Because the blocks
    through the smallest pairs are fixed first, the first complete system
    reached is the minimum under the canonical ordering of sorted block
    tuples.  Independent of construct_sts by design.
    """
    require_admissible(u)
    if u not in _BRUTE_FORCE_ORDERS:
        raise ValueError(
            f"search bound exceeded: brute force supports orders "
            f"{_BRUTE_FORCE_ORDERS}, got {u}"
        )
    if u in _brute_cache:
        return _brute_cache[u]
    b, _r = counts_for(u)
    covered = [1 << a for a in range(u)]
    full = (1 << u) - 1
    chosen: list[Triple] = []
    result: list[Triple] = []

    def least_uncovered() -> tuple[int, int] | None:
        for a in range(u):
            if covered[a] != full:
                mask = covered[a]
                for c in range(a + 1, u):
                    if not (mask >> c) & 1:
                        return a, c
        return None

    def dfs() -> bool:
        pair = least_uncovered()
        if pair is None:
            result.extend(chosen)
            return True
        a, bb = pair
        for c in range(bb + 1, u):
            if (covered[a] >> c) & 1 or (covered[bb] >> c) & 1:
                continue
            covered[a] |= 1 << bb | 1 << c
            covered[bb] |= 1 << a | 1 << c
            covered[c] |= 1 << a | 1 << bb
            chosen.append((a, bb, c))
            if dfs():
                return True
            chosen.pop()
            covered[a] &= ~(1 << bb | 1 << c)
            covered[bb] &= ~(1 << a | 1 << c)
            covered[c] &= ~(1 << a | 1 << bb)
        return False

    if not dfs() or len(result) != b:  # pragma: no cover - always solvable
        raise RuntimeError(f"brute force failed to build an STS({u})")
    system = TripleSystem.build(u, result)
    _brute_cache[u] = system
    return system


def is_fano(system: TripleSystem) -> bool:
    """True iff every pair of distinct blocks meets in exactly one point.

    Requires a valid system (raises ValueError otherwise).  Holds vacuously
    for the single-block system of order 3 and characterizes order 7.
    """
    require_valid(system, "is_fano")
    tris = [frozenset(t) for t in system.triples]
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            if len(tris[i] & tris[j]) != 1:
                return False
    return True
