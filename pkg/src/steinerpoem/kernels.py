"""Hot search kernels: hill-climb generation and parallel-class exact cover.

Both kernels compile with numba when it is importable.  Set the environment
variable ``STEINERPOEM_NO_NUMBA=1`` before import to force the interpreted
fallback.  The two backends run the identical algorithm with the identical
in-kernel PRNG, so they produce bit-identical results.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("STEINERPOEM_NO_NUMBA", "") not in ("", "0")

if _DISABLED:
    NUMBA_ENABLED = False
else:
    try:
        from numba import njit as _njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def _njit(*args, **kwargs):  # noqa: ANN002 - decorator shim
        def wrap(fn):
            return fn

        return wrap


BACKEND = "numba" if NUMBA_ENABLED else "numpy"

# Park-Miller MINSTD; tiny state keeps the compiled and interpreted runs in
# lock step without depending on any library RNG.
_LCG_MOD = 2147483647
_LCG_MUL = 48271


@_njit(cache=True)
def _lcg_next(state: int) -> int:
    return (state * _LCG_MUL) % _LCG_MOD


@_njit(cache=True)
def _add_triple(pair_tri, deg, tris, ntris, x, y, z):
    tris[ntris, 0] = x
    tris[ntris, 1] = y
    tris[ntris, 2] = z
    pair_tri[x, y] = ntris
    pair_tri[y, x] = ntris
    pair_tri[x, z] = ntris
    pair_tri[z, x] = ntris
    pair_tri[y, z] = ntris
    pair_tri[z, y] = ntris
    deg[x] += 2
    deg[y] += 2
    deg[z] += 2
    return ntris + 1


@_njit(cache=True)
def _remove_triple(pair_tri, deg, tris, ntris, ti):
    x = tris[ti, 0]
    y = tris[ti, 1]
    z = tris[ti, 2]
    pair_tri[x, y] = -1
    pair_tri[y, x] = -1
    pair_tri[x, z] = -1
    pair_tri[z, x] = -1
    pair_tri[y, z] = -1
    pair_tri[z, y] = -1
    deg[x] -= 2
    deg[y] -= 2
    deg[z] -= 2
    last = ntris - 1
    if ti != last:
        # swap-delete: keep the block list dense
        a = tris[last, 0]
        b = tris[last, 1]
        c = tris[last, 2]
        tris[ti, 0] = a
        tris[ti, 1] = b
        tris[ti, 2] = c
        pair_tri[a, b] = ti
        pair_tri[b, a] = ti
        pair_tri[a, c] = ti
        pair_tri[c, a] = ti
        pair_tri[b, c] = ti
        pair_tri[c, b] = ti
    return last


@_njit(cache=True)
def hill_climb(u: int, seed: int, max_steps: int):
    """Grow a random triple system of odd order ``u`` by hill climbing.

    Repeatedly picks a point x with uncovered pairs, two uncovered partners
    y and z, evicts whichever triple currently covers {y, z}, and inserts
    {x, y, z}.  The block count never decreases and the process empirically
    terminates fast; ``max_steps`` is a safety valve only.

    Returns (ok, tris, steps) where ok is nonzero when a complete system was
    reached and tris is a (b, 3) array of blocks in insertion order.
    """
    b = u * (u - 1) // 6
    pair_tri = np.full((u, u), -1, np.int64)
    deg = np.zeros(u, np.int64)
    tris = np.zeros((b, 3), np.int64)
    ntris = 0
    state = (seed % (_LCG_MOD - 1)) + 1
    steps = 0
    while ntris < b and steps < max_steps:
        steps += 1
        state = _lcg_next(state)
        x = state % u
        while deg[x] >= u - 1:
            state = _lcg_next(state)
            x = state % u
        # u odd and degrees even, so a live point has >= 2 uncovered partners
        free = u - 1 - deg[x]
        state = _lcg_next(state)
        k1 = state % free
        state = _lcg_next(state)
        k2 = state % (free - 1)
        if k2 >= k1:
            k2 += 1
        y = -1
        z = -1
        seen = 0
        for p in range(u):
            if p == x or pair_tri[x, p] >= 0:
                continue
            if seen == k1:
                y = p
            if seen == k2:
                z = p
            seen += 1
        t_yz = pair_tri[y, z]
        if t_yz >= 0:
            ntris = _remove_triple(pair_tri, deg, tris, ntris, t_yz)
        ntris = _add_triple(pair_tri, deg, tris, ntris, x, y, z)
    ok = 1 if ntris == b else 0
    return ok, tris, steps


@_njit(cache=True)
def resolve_classes(u: int, tris, max_nodes: int):
    """Partition the blocks of a triple system into parallel classes.

    ``tris`` must be a (b, 3) int array with each row ascending and rows in
    lexicographic order.  The search always extends the current class at its
    lowest uncovered point and tries that point's blocks in index order, so
    the first resolution found is a deterministic function of the input.
    Classes are forced to appear in increasing order of their block through
    point 0, which prunes permutations of the same partition.

    Returns (status, assignment, nodes): status 1 when resolved, 0 when the
    search space is exhausted, -1 when ``max_nodes`` placements were tried.
    ``assignment`` lists chosen block indices, u//3 consecutive slots per
    class.
    """
    b = tris.shape[0]
    m = u // 3
    r = (u - 1) // 2
    total = r * m
    assignment = np.full(total, -1, np.int64)
    if u % 3 != 0 or b != total:
        return 0, assignment, 0

    # CSR adjacency: blocks through each point, ascending block index
    counts = np.zeros(u + 1, np.int64)
    for i in range(b):
        for j in range(3):
            counts[tris[i, j] + 1] += 1
    row_start = np.zeros(u + 1, np.int64)
    for p in range(u):
        row_start[p + 1] = row_start[p] + counts[p + 1]
    fill = row_start[:u].copy()
    point_tris = np.zeros(3 * b, np.int64)
    for i in range(b):
        for j in range(3):
            p = tris[i, j]
            point_tris[fill[p]] = i
            fill[p] += 1

    used = np.zeros(b, np.uint8)
    cov_by = np.full(u, -1, np.int64)
    stack_pos = np.zeros(total, np.int64)
    stack_point = np.zeros(total, np.int64)
    stack_saved = np.zeros((total, 3), np.int64)

    depth = 0
    nodes = 0
    fresh = True
    pos = 0
    p = 0
    while True:
        if depth == total:
            return 1, assignment, nodes
        c = depth // m
        if fresh:
            p = 0
            for q in range(u):
                if cov_by[q] != c:
                    p = q
                    break
            pos = row_start[p]
            if depth > 0 and depth % m == 0:
                # class boundary: skip blocks at or before the previous
                # class's point-0 pick (classes ordered by that pick)
                pos = stack_pos[depth - m] + 1
        found = -1
        end = row_start[p + 1]
        while pos < end:
            ti = point_tris[pos]
            if used[ti] == 0:
                a0 = tris[ti, 0]
                a1 = tris[ti, 1]
                a2 = tris[ti, 2]
                if cov_by[a0] != c and cov_by[a1] != c and cov_by[a2] != c:
                    found = ti
                    break
            pos += 1
        if found >= 0:
            nodes += 1
            if nodes > max_nodes:
                return -1, assignment, nodes
            a0 = tris[found, 0]
            a1 = tris[found, 1]
            a2 = tris[found, 2]
            stack_saved[depth, 0] = cov_by[a0]
            stack_saved[depth, 1] = cov_by[a1]
            stack_saved[depth, 2] = cov_by[a2]
            stack_pos[depth] = pos
            stack_point[depth] = p
            assignment[depth] = found
            cov_by[a0] = c
            cov_by[a1] = c
            cov_by[a2] = c
            used[found] = 1
            depth += 1
            fresh = True
        else:
            depth -= 1
            if depth < 0:
                return 0, assignment, nodes
            ti = assignment[depth]
            cov_by[tris[ti, 0]] = stack_saved[depth, 0]
            cov_by[tris[ti, 1]] = stack_saved[depth, 1]
            cov_by[tris[ti, 2]] = stack_saved[depth, 2]
            used[ti] = 0
            assignment[depth] = -1
            p = stack_point[depth]
            pos = stack_pos[depth] + 1
            fresh = False


def interpreted(fn):
    """Return the plain-Python body of a kernel (no-op in fallback mode)."""
    return getattr(fn, "py_func", fn)
