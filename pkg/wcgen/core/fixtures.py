"""Named small graphs reused across tests, examples and docs.

Labels map to dense ids in the order they are listed in each `*_LABELS` tuple.
"""

from __future__ import annotations

from wcgen.core.graph import Graph

# Three edge-sharing squares (0,3,5,4), (4,5,6,7), (1,2,6,7): the n=8, m'=10 initial layout.
F1_EDGES: tuple[tuple[int, int], ...] = (
    (0, 3), (0, 4), (3, 5), (4, 5), (4, 7), (5, 6), (6, 7), (2, 6), (1, 2), (1, 7),
)

F4_LABELS = ("u", "v", "a", "b", "c", "d", "e")
F4_EDGES_BY_LABEL = (
    ("u", "a"), ("a", "v"), ("a", "b"), ("a", "d"), ("b", "v"),
    ("b", "d"), ("u", "c"), ("c", "d"), ("d", "e"), ("e", "v"),
)

# Two internally disjoint P3s u-a-b-v and u-c-d-v.
GADGET_LABELS = ("u", "a", "b", "v", "d", "c")
GADGET_BASE_BY_LABEL = (("u", "a"), ("a", "b"), ("b", "v"), ("u", "c"), ("c", "d"), ("d", "v"))
PARALLEL_CROSS = (("a", "c"), ("b", "d"))
ALTERNATE_CROSS = (("a", "d"), ("b", "c"))
GADGET_CROSS_EDGES = PARALLEL_CROSS + ALTERNATE_CROSS


def label_ids(labels: tuple[str, ...]) -> dict[str, int]:
    return {label: i for i, label in enumerate(labels)}


def _labeled(labels: tuple[str, ...], edges: tuple[tuple[str, str], ...]) -> Graph:
    ids = label_ids(labels)
    return Graph.from_edges(len(labels), ((ids[a], ids[b]) for a, b in edges))


def f1() -> Graph:
    return Graph.from_edges(8, F1_EDGES)


def f4() -> Graph:
    return _labeled(F4_LABELS, F4_EDGES_BY_LABEL)


def gadget(cross: tuple[tuple[str, str], ...] = ()) -> Graph:
    """The two-P3 gadget plus the given internal cross edges."""

    return _labeled(GADGET_LABELS, GADGET_BASE_BY_LABEL + cross)


def f2() -> Graph:
    """Parallel cross edges only: inserting (u, v) leaves a 6-hole in the complement."""

    return gadget(PARALLEL_CROSS)


def f3() -> Graph:
    """Alternate cross edges only: inserting (u, v) is safe."""

    return gadget(ALTERNATE_CROSS)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))
