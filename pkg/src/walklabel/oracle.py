"""Ground-truth counting of random walk labelings by brute force.

A random walk on a connected graph G labels vertices 1, 2, ... in the order
it first visits them. The label sequences realizable this way are exactly
the orderings v1, ..., vn of V(G) in which every vi with i >= 2 is adjacent
to at least one earlier vj. Sketch: a walk reaches a new vertex only by
stepping off an already-visited one, so every realizable ordering has the
prefix-adjacency property; conversely, given such an ordering, the walk
that goes from vi's already-visited neighbor to vi (walking inside the
visited set first, which is connected by induction) realizes it. Counting
labelings therefore reduces to counting prefix-adjacent orderings.

Two independent algorithms implement that count. The subset dynamic program
runs over all 2^n vertex subsets (N(S) = sum of N(S - v) over vertices v
whose removal leaves a set they are adjacent to) and is the one real
instances use; its hot loop lives in a compiled kernel when available, with
a pure Python twin selected at import time otherwise (set WALKLABEL_PURE=1
to force the twin). The permutation oracle just filters all n! orderings
and exists to check the DP, not to be fast.

Peak DP memory is one value table of 2^n entries (16 bytes each compiled,
Python ints otherwise), about 256 MB at the default 24-vertex cap.
"""

from __future__ import annotations

import os
from itertools import permutations

from .graphs import Graph, is_connected

if os.environ.get("WALKLABEL_PURE"):
    from . import _core_py as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _core_py as _impl

__all__ = [
    "DP_LIMIT",
    "PERM_LIMIT",
    "backend",
    "count_completions",
    "count_labelings",
    "count_labelings_from",
    "count_labelings_from_before",
    "count_labelings_perm",
]

DP_LIMIT = 24
PERM_LIMIT = 10


def backend() -> str:
    """Name of the kernel actually selected at import time."""
    return _impl.BACKEND


def _check(g: Graph, dp_limit: int) -> None:
    if g.n > dp_limit:
        raise ValueError(f"instance too large: {g.n} vertices exceeds the DP limit {dp_limit}")
    if not is_connected(g):
        raise ValueError("graph not connected")


def _check_vertex(g: Graph, v: int, name: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"{name} {v} out of range")


def count_labelings(g: Graph, *, dp_limit: int = DP_LIMIT) -> int:
    """Number of random walk labelings of g (all starting vertices)."""
    _check(g, dp_limit)
    return _impl.dp_total(g.masks, g.n)


def count_labelings_from(g: Graph, start: int, *, dp_limit: int = DP_LIMIT) -> int:
    """Labelings whose first label lands on start."""
    _check(g, dp_limit)
    _check_vertex(g, start, "start")
    return _impl.dp_resume(g.masks, g.n, 1 << start)


def count_completions(g: Graph, labeled, *, dp_limit: int = DP_LIMIT) -> int:
    """Ways to extend a partial labeling to all of g.

    labeled is the set of already-labeled vertices; it must induce a
    connected subgraph, because a walk's visited set is always connected.
    """
    _check(g, dp_limit)
    vs = sorted(set(labeled))
    if not vs:
        raise ValueError("labeled set not connected: it is empty")
    mask = 0
    for v in vs:
        _check_vertex(g, v, "labeled vertex")
        mask |= 1 << v
    seen = {vs[0]}
    frontier = [vs[0]]
    while frontier:
        v = frontier.pop()
        for u in g.adj[v]:
            if mask >> u & 1 and u not in seen:
                seen.add(u)
                frontier.append(u)
    if len(seen) != len(vs):
        raise ValueError("labeled set not connected")
    return _impl.dp_resume(g.masks, g.n, mask)


def count_labelings_from_before(g: Graph, start: int, u: int, v: int, *, dp_limit: int = DP_LIMIT) -> int:
    """Labelings starting at start in which u gets a smaller label than v.

    Implemented by forbidding the DP transition that labels v while u is
    still unlabeled. Two starts need no DP at all: if u is the start it is
    labeled first and the constraint is vacuous, and if v is the start the
    constraint is unsatisfiable.
    """
    _check(g, dp_limit)
    _check_vertex(g, start, "start")
    _check_vertex(g, u, "u")
    _check_vertex(g, v, "v")
    if u == v:
        raise ValueError("order constraint needs two distinct vertices")
    if u == start:
        return _impl.dp_resume(g.masks, g.n, 1 << start)
    if v == start:
        return 0
    return _impl.dp_resume(g.masks, g.n, 1 << start, u, v)


def count_labelings_perm(g: Graph) -> int:
    """Independent check: filter all n! orderings for prefix adjacency.

    Shares nothing with the DP (no subset table, no bit tricks beyond the
    adjacency masks the graph already carries).
    """
    if g.n > PERM_LIMIT:
        raise ValueError(f"instance too large: permutation oracle is capped at {PERM_LIMIT} vertices")
    if not is_connected(g):
        raise ValueError("graph not connected")
    count = 0
    for order in permutations(range(g.n)):
        seen = 1 << order[0]
        for w in order[1:]:
            if not g.masks[w] & seen:
                break
            seen |= 1 << w
        else:
            count += 1
    return count
