"""Shared test helpers: seeded random graphs and the acceptance summary."""

from __future__ import annotations

import random

from walklabel.graphs import Graph

_ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_acceptance(num: int, ok: bool, detail: str = "") -> bool:
    """Record one acceptance criterion outcome for the terminal summary."""
    _ACCEPTANCE[num] = (ok, detail)
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[num]
        line = f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected simple graph: a random spanning tree plus a random
    number of extra edges. Deterministic for a given rng state."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    extra = rng.randrange(n * (n - 1) // 2 + 1)
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))
