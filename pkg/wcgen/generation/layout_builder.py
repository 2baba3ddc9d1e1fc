"""Phase 2: edge-sharing 4-cycles laid out along the tree, trimmed to exactly n vertices.

The layout is combinatorial: only which side of a square is shared is recorded.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from wcgen.core.events import log_event
from wcgen.core.graph import Graph, connected_components, induced
from wcgen.generation.fsm import GenerationFSM
from wcgen.generation.tree_builder import MAX_DEGREE, TreeGraph, grow_tree

logger = logging.getLogger("wcgen.layout")

Square = tuple[int, int, int, int]

# Side i of a square (c0, c1, c2, c3) is (c_i, c_{i+1 mod 4}). Opposite sides first.
ROOT_SIDES = (0, 2, 1, 3)
CHILD_SIDES = (2, 1, 3)


class LayoutError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class LayoutResult:
    """Initial layout.

    `square_of_node` and `trimmed` use pre-trim vertex ids; `vertex_map` sends each
    surviving pre-trim id to its current id.
    """

    graph: Graph
    tree: TreeGraph
    square_of_node: dict[int, Square]
    trimmed: list[int] = field(default_factory=list)
    vertex_map: dict[int, int] = field(default_factory=dict)

    @property
    def m_prime(self) -> int:
        return self.graph.edge_count


def _side(square: Square, i: int) -> tuple[int, int]:
    return square[i], square[(i + 1) % 4]


def layout_from_tree(t: TreeGraph) -> LayoutResult:
    tg = t.graph
    if tg.vertex_count < 1:
        raise LayoutError("tree has no nodes")
    for v in tg.vertices():
        if tg.degree(v) > MAX_DEGREE:
            raise LayoutError(f"tree node {v} has degree {tg.degree(v)} > {MAX_DEGREE}")

    g = Graph(4)
    root: Square = (0, 1, 2, 3)
    for i in range(4):
        g.add_edge(*_side(root, i))
    squares: dict[int, Square] = {0: root}
    free_sides: dict[int, deque[int]] = {0: deque(ROOT_SIDES)}

    queue = deque([0])
    while queue:
        node = queue.popleft()
        for child in sorted(tg.adjacency(node)):
            if child in squares:
                continue
            if not free_sides[node]:
                raise LayoutError(f"tree node {node} has no free side left for child {child}")
            pa, pb = _side(squares[node], free_sides[node].popleft())
            x = g.add_vertex()
            y = g.add_vertex()
            g.add_edge(pb, x)
            g.add_edge(x, y)
            g.add_edge(y, pa)
            squares[child] = (pa, pb, x, y)
            free_sides[child] = deque(CHILD_SIDES)
            queue.append(child)

    if len(squares) != tg.vertex_count:
        raise LayoutError("tree is not connected")

    log_event(
        logger,
        "layout_built",
        tree_nodes=tg.vertex_count,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
    )
    return LayoutResult(
        graph=g,
        tree=t,
        square_of_node=squares,
        vertex_map={v: v for v in g.vertices()},
    )


def _trim_key(g: Graph, v: int, leaf_private: set[int]) -> tuple[int, int, int]:
    return (g.degree(v), 0 if v in leaf_private else 1, -v)


def trim_to_n(layout: LayoutResult, n: int) -> LayoutResult:
    g0 = layout.graph
    if n < 1:
        raise LayoutError(f"cannot trim to n={n}")
    if n > g0.vertex_count:
        raise LayoutError(f"cannot trim {g0.vertex_count} vertices up to n={n}")
    if n == g0.vertex_count:
        return layout

    # Pre-trim ids; a layout passed in here is normally untrimmed.
    inverse = {cur: pre for pre, cur in layout.vertex_map.items()}
    tg = layout.tree.graph
    owners: dict[int, list[int]] = {}
    for node, sq in layout.square_of_node.items():
        for pre in sq:
            cur = layout.vertex_map.get(pre)
            if cur is not None:
                owners.setdefault(cur, []).append(node)
    leaf_private = {
        v for v, nodes in owners.items() if len(nodes) == 1 and tg.degree(nodes[0]) <= 1
    }

    g = g0.copy()
    removed: set[int] = set()
    while g.vertex_count - len(removed) > n:
        candidates = sorted(
            (v for v in g.vertices() if v not in removed and g.degree(v) <= 2),
            key=lambda v: _trim_key(g, v, leaf_private),
        )
        chosen = None
        for v in candidates:
            if len(connected_components(g, excluded=removed | {v})) <= 1:
                chosen = v
                break
        if chosen is None:
            raise LayoutError(f"no degree-<=2 vertex can be removed without disconnecting (n={n})")
        for w in list(g.adjacency(chosen)):
            g.remove_edge(chosen, w)
        removed.add(chosen)

    h, mapping = induced(g, [v for v in g.vertices() if v not in removed])
    vertex_map = {pre: mapping[cur] for pre, cur in layout.vertex_map.items() if cur in mapping}
    trimmed = layout.trimmed + sorted(inverse[v] for v in removed)
    log_event(logger, "layout_trimmed", removed=len(removed), vertex_count=h.vertex_count, edge_count=h.edge_count)
    return LayoutResult(
        graph=h,
        tree=layout.tree,
        square_of_node=layout.square_of_node,
        trimmed=trimmed,
        vertex_map=vertex_map,
    )


def build_initial_layout(
    n: int,
    m: int,
    rng: np.random.Generator,
    *,
    split_probability: float = 0.5,
    seed: int | None = None,
    fsm: GenerationFSM | None = None,
) -> tuple[LayoutResult, bool]:
    """Phases 1 and 2; `early_return` is True when the layout already has >= m edges."""

    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} must be within [{n - 1}, {n * (n - 1) // 2}] for n={n}")

    tree = grow_tree(math.ceil(n / 2), rng, split_probability=split_probability, seed=seed)
    if fsm is not None:
        fsm.advance("tree_done")
    layout = trim_to_n(layout_from_tree(tree), n)
    if fsm is not None:
        fsm.advance("layout_done")

    early_return = layout.m_prime >= m
    if early_return:
        log_event(
            logger,
            "early_return",
            level=logging.WARNING,
            n=n,
            m=m,
            m_prime=layout.m_prime,
        )
    return layout, early_return
