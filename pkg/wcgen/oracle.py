"""Recognition oracle: holes, weak chordality, two-pairs, peripheral edges, P3 statistics."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

from wcgen.core.graph import Graph, GraphError, complement, reachable


class HoleSide(StrEnum):
    graph = "graph"
    complement = "complement"


@dataclass(frozen=True, slots=True)
class HoleWitness:
    cycle: tuple[int, ...]
    side: HoleSide

    def describe(self) -> str:
        return f"hole side={self.side.value} length={len(self.cycle)} cycle={' '.join(map(str, self.cycle))}"


@dataclass(frozen=True, slots=True)
class P3Stats:
    """Counts over the length-3 u-v paths u-a-b-v.

    `k_att` is the number of u-side attachment vertices a, `l` the number of v-side
    attachment vertices b; `degrees[b]` counts the u-side attachments adjacent to b.
    """

    l: int  # noqa: E741
    k_att: int
    degrees: dict[int, int]
    t: int
    path_count: int
    disjoint_pair_count: int
    pair_products: int
    paths: tuple[tuple[int, int, int, int], ...]


def _connector(g: Graph, start: int, goal: int, blocked: set[int]) -> list[int] | None:
    """Shortest start..goal path whose internal vertices avoid `blocked`."""

    parent = {start: start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adjacency(x)):
            if y in parent:
                continue
            if y == goal:
                parent[y] = x
                out = [y]
                while out[-1] != start:
                    out.append(parent[out[-1]])
                return out[::-1]
            if y in blocked:
                continue
            parent[y] = x
            queue.append(y)
    return None


def _find_hole_in(g: Graph, middle_edges: Iterable[tuple[int, int]] | None = None) -> tuple[int, ...] | None:
    # Every hole of length >= 5 contains an induced P4 w-x-y-z whose remaining vertices form a
    # chordless z..w connector avoiding N[x] | N[y]; grouping by middle edge x-y lets one
    # component labelling answer all (w, z) pairs for that edge.
    for x, y in g.edges() if middle_edges is None else middle_edges:
        nx_, ny_ = g.adjacency(x), g.adjacency(y)
        ws = sorted(w for w in nx_ if w != y and w not in ny_)
        zs = sorted(z for z in ny_ if z != x and z not in nx_)
        if not ws or not zs:
            continue
        blocked = nx_ | ny_ | {x, y}
        label: dict[int, int] = {}
        for s in g.vertices():
            if s in blocked or s in label:
                continue
            label[s] = s
            queue = deque([s])
            while queue:
                a = queue.popleft()
                for b in g.adjacency(a):
                    if b not in blocked and b not in label:
                        label[b] = s
                        queue.append(b)
        touch = {
            v: {label[b] for b in g.adjacency(v) if b in label}
            for v in (*ws, *zs)
        }
        for w in ws:
            if not touch[w]:
                continue
            for z in zs:
                if z in g.adjacency(w) or not (touch[w] & touch[z]):
                    continue
                conn = _connector(g, z, w, blocked)
                if conn is None:  # pragma: no cover - labels guarantee a connector
                    continue
                return (x, y, *conn)
    return None


def find_hole(
    g: Graph,
    *,
    side: HoleSide = HoleSide.graph,
    middle_edges: Iterable[tuple[int, int]] | None = None,
) -> HoleWitness | None:
    """A chordless cycle of length >= 5, searched through the given middle edges (default all)."""

    cyc = _find_hole_in(g, middle_edges)
    return HoleWitness(cycle=cyc, side=side) if cyc is not None else None


def is_weakly_chordal(g: Graph) -> tuple[bool, HoleWitness | None]:
    hole = find_hole(g)
    if hole is None:
        hole = find_hole(complement(g), side=HoleSide.complement)
    return hole is None, hole


def certify_insertion(g: Graph, u: int, v: int) -> tuple[bool, HoleWitness | None]:
    """is_weakly_chordal for g when g minus (u, v) is known to be weakly chordal.

    A new hole must use the edge (u, v) as a middle edge; a new antihole must pass through u,
    so only complement edges at u are tried as middle edges.
    """

    if not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge")
    hole = find_hole(g, middle_edges=[(u, v)])
    if hole is None:
        gc = complement(g)
        hole = find_hole(gc, side=HoleSide.complement, middle_edges=[(u, y) for y in sorted(gc.adjacency(u))])
    return hole is None, hole


def verify_hole(g: Graph, witness: HoleWitness) -> bool:
    """Re-check a witness by adjacency: a chordless cycle of length >= 5 on its side."""

    h = g if witness.side == HoleSide.graph else complement(g)
    cyc = witness.cycle
    k = len(cyc)
    if k < 5 or len(set(cyc)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if h.has_edge(cyc[i], cyc[j]) != consecutive:
                return False
    return True


def is_two_pair(g: Graph, u: int, v: int) -> bool:
    """Non-adjacent, connected, and separated by their common neighborhood.

    Vertices in different components have no chordless path at all and are not a two-pair.
    """

    if u == v:
        raise GraphError("is_two_pair needs two distinct vertices")
    if g.has_edge(u, v):
        return False
    if not reachable(g, u, v):
        return False
    return not reachable(g, u, v, g.common_neighbors(u, v))


def is_peripheral_edge(g: Graph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge")
    nu, nv = g.adjacency(u), g.adjacency(v)
    xs = [x for x in nu if x != v and x not in nv]
    ys = [y for y in nv if y != u and y not in nu]
    for x in xs:
        nx_ = g.adjacency(x)
        for y in ys:
            if y not in nx_:
                return False
    return True


def peripheral_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edges() if is_peripheral_edge(g, u, v)]


def count_p3_stats(g: Graph, u: int, v: int) -> P3Stats:
    if u == v:
        raise GraphError("count_p3_stats needs two distinct vertices")
    if g.has_edge(u, v):
        raise GraphError(f"({u},{v}) must not be an edge")

    paths = tuple(
        (u, a, b, v)
        for a in sorted(g.adjacency(u))
        for b in sorted(g.adjacency(a))
        if b != u and b in g.adjacency(v)
    )
    u_side = {p[1] for p in paths}
    degrees = {b: 0 for b in sorted({p[2] for p in paths})}
    for b in degrees:
        degrees[b] = len(g.adjacency(b) & u_side)

    disjoint = sum(
        1 for p, q in combinations(paths, 2) if not ({p[1], p[2]} & {q[1], q[2]})
    )
    ds = list(degrees.values())
    pair_products = sum(ds[i] * ds[j] for i in range(len(ds)) for j in range(i + 1, len(ds)))
    t = sum(ds)
    if len(paths) > len(degrees) * len(u_side):  # pragma: no cover - counting identity
        raise AssertionError("path_count exceeds l * k_att")
    return P3Stats(
        l=len(degrees),
        k_att=len(u_side),
        degrees=degrees,
        t=t,
        path_count=len(paths),
        disjoint_pair_count=disjoint,
        pair_products=pair_products,
        paths=paths,
    )
