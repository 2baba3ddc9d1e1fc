from __future__ import annotations

from collections import deque
from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass
from enum import StrEnum


class GraphError(ValueError):
    """Invalid vertex, edge or path for a graph operation."""


class EdgeUpdate(StrEnum):
    added = "added"
    already_present = "already_present"
    removed = "removed"
    absent = "absent"


class Graph:
    """Undirected simple graph on dense vertex ids 0..n-1.

    Mutation requires exclusive access; read-only queries may share an instance.
    """

    __slots__ = ("_adj", "_edge_count")

    def __init__(self, vertex_count: int = 0) -> None:
        if vertex_count < 0:
            raise GraphError(f"vertex_count must be non-negative, got {vertex_count}")
        self._adj: list[set[int]] = [set() for _ in range(vertex_count)]
        self._edge_count = 0

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        g = cls(vertex_count)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def vertices(self) -> range:
        return range(len(self._adj))

    def add_vertex(self) -> int:
        """Append an isolated vertex and return its id."""

        self._adj.append(set())
        return len(self._adj) - 1

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphError(f"vertex {v} out of range [0, {len(self._adj)})")

    def _check_pair(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop on vertex {u} is not allowed")

    def add_edge(self, u: int, v: int) -> EdgeUpdate:
        self._check_pair(u, v)
        if v in self._adj[u]:
            return EdgeUpdate.already_present
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._edge_count += 1
        return EdgeUpdate.added

    def remove_edge(self, u: int, v: int) -> EdgeUpdate:
        self._check_pair(u, v)
        if v not in self._adj[u]:
            return EdgeUpdate.absent
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._edge_count -= 1
        return EdgeUpdate.removed

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self._adj[v])

    def closed_neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return frozenset(self._adj[v] | {v})

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        self._check_pair(u, v)
        return frozenset(self._adj[u] & self._adj[v])

    def adjacency(self, v: int) -> set[int]:
        """Live neighbor set of `v`; callers must not mutate it."""

        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self._adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges normalized to u < v, in lexicographic order."""

        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def is_complete(self) -> bool:
        n = len(self._adj)
        return self._edge_count == n * (n - 1) // 2

    def copy(self) -> Graph:
        g = Graph(0)
        g._adj = [set(nbrs) for nbrs in self._adj]
        g._edge_count = self._edge_count
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True, slots=True)
class PathSet:
    """All shortest u-v paths; empty when v is unreachable (or beyond `max_length`)."""

    endpoints: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]
    length: int | None
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.paths)

    def __bool__(self) -> bool:
        return bool(self.paths)

    def internal_vertices(self) -> frozenset[int]:
        return frozenset(x for p in self.paths for x in p[1:-1])

    def vertices(self) -> frozenset[int]:
        return frozenset(x for p in self.paths for x in p)

    def translated(self, ids: tuple[int, ...]) -> PathSet:
        """Map every vertex through `ids` (new id -> old id)."""

        u, v = self.endpoints
        return PathSet(
            endpoints=(ids[u], ids[v]),
            paths=tuple(tuple(ids[x] for x in p) for p in self.paths),
            length=self.length,
            truncated=self.truncated,
        )


def induced(g: Graph, vertices: Collection[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `vertices`; new ids follow the sorted order of the old ones."""

    order = sorted(set(vertices))
    for v in order:
        g._check(v)
    mapping = {old: new for new, old in enumerate(order)}
    h = Graph(len(order))
    for old in order:
        a = mapping[old]
        for w in g.adjacency(old):
            b = mapping.get(w)
            if b is not None and a < b:
                h.add_edge(a, b)
    return h, mapping


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    h = Graph(n)
    for u in range(n):
        nbrs = g.adjacency(u)
        for v in range(u + 1, n):
            if v not in nbrs:
                h.add_edge(u, v)
    return h


def reachable(g: Graph, u: int, v: int, excluded: Collection[int] = ()) -> bool:
    """Breadth-first reachability of `v` from `u` in g minus `excluded`."""

    g._check(u)
    g._check(v)
    blocked = set(excluded)
    if u in blocked or v in blocked:
        raise GraphError(f"endpoints {u},{v} must not be excluded")
    if u == v:
        return True
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.adjacency(x):
            if y == v:
                return True
            if y not in seen and y not in blocked:
                seen.add(y)
                queue.append(y)
    return False


def shortest_path_length(g: Graph, u: int, v: int, excluded: Collection[int] = ()) -> int | None:
    g._check(u)
    g._check(v)
    blocked = set(excluded)
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return dist[x]
        for y in g.adjacency(x):
            if y not in dist and y not in blocked:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


def all_shortest_paths(
    g: Graph,
    u: int,
    v: int,
    *,
    cap: int | None = None,
    max_length: int | None = None,
) -> PathSet:
    """Every shortest u-v path, enumerated from the BFS predecessor DAG.

    `max_length` stops the search once paths would be longer; `cap` bounds the number of
    enumerated paths and sets `truncated` when hit.
    """

    g._check(u)
    g._check(v)
    if u == v:
        raise GraphError("all_shortest_paths needs two distinct endpoints")

    dist = {u: 0}
    preds: dict[int, list[int]] = {u: []}
    frontier = [u]
    found = False
    while frontier and not found:
        depth = dist[frontier[0]] + 1
        if max_length is not None and depth > max_length:
            break
        nxt: list[int] = []
        for x in frontier:
            for y in g.adjacency(x):
                d = dist.get(y)
                if d is None:
                    dist[y] = depth
                    preds[y] = [x]
                    nxt.append(y)
                elif d == depth:
                    preds[y].append(x)
        found = v in dist
        frontier = nxt

    if not found:
        return PathSet(endpoints=(u, v), paths=(), length=None)

    for lst in preds.values():
        lst.sort()

    paths: list[tuple[int, ...]] = []
    truncated = False
    # Depth-first walk from v back to u over predecessor lists.
    stack: list[tuple[int, tuple[int, ...]]] = [(v, (v,))]
    while stack:
        x, suffix = stack.pop()
        if x == u:
            if cap is not None and len(paths) >= cap:
                truncated = True
                break
            paths.append(suffix)
            continue
        for p in reversed(preds[x]):
            stack.append((p, (p, *suffix)))

    return PathSet(endpoints=(u, v), paths=tuple(paths), length=dist[v], truncated=truncated)


def is_chordless_path(g: Graph, path: tuple[int, ...] | list[int]) -> bool:
    for v in path:
        g._check(v)
    if len(set(path)) != len(path):
        raise GraphError(f"path {list(path)} repeats a vertex")
    for a, b in zip(path, path[1:]):
        if b not in g.adjacency(a):
            raise GraphError(f"path {list(path)} uses non-edge ({a},{b})")
    for i in range(len(path)):
        nbrs = g.adjacency(path[i])
        for j in range(i + 2, len(path)):
            if path[j] in nbrs:
                return False
    return True


def connected_components(g: Graph, excluded: Collection[int] = ()) -> list[set[int]]:
    """Components of g minus `excluded`, ordered by smallest vertex."""

    blocked = set(excluded)
    seen: set[int] = set(blocked)
    out: list[set[int]] = []
    for s in g.vertices():
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1
