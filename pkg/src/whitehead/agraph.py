"""Dual A-graphs (Stallings graphs) and the operations on them.

Graphs store positively labelled edges only; the dual edge
``(target, -label, source)`` is implied.  Vertex ids are dense integers
``0 .. vertex_count - 1`` and are reassigned by every operation that
changes the vertex set, which returns an old -> new map when the caller
needs to track a vertex.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .words import EMPTY, Word, letter_index, reduce_word

Edge = tuple[int, int, int]


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class AGraph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    rank: int = 0

    def __post_init__(self):
        edges = []
        for (x, a, y) in self.edges:
            if a < 0:
                x, a, y = y, -a, x
            if a == 0 or not (0 <= x < self.vertex_count and 0 <= y < self.vertex_count):
                raise GraphError(f"bad edge {(x, a, y)} for {self.vertex_count} vertices")
            edges.append((x, a, y))
        object.__setattr__(self, "edges", tuple(edges))
        top = max((a for _, a, _ in edges), default=0)
        if self.rank == 0:
            object.__setattr__(self, "rank", max(top, 1))
        elif self.rank < top:
            raise GraphError(f"label {top} exceeds rank {self.rank}")

    def __len__(self) -> int:
        return self.vertex_count

    @property
    def size(self) -> int:
        return self.vertex_count

    @cached_property
    def adjacency(self) -> list[dict[int, list[int]]]:
        """``adjacency[x][a]`` lists the targets of a-labelled edges out of x (a in A or A^-1)."""
        adj: list[dict[int, list[int]]] = [{} for _ in range(self.vertex_count)]
        for x, a, y in self.edges:
            adj[x].setdefault(a, []).append(y)
            adj[y].setdefault(-a, []).append(x)
        return adj

    def out(self, x: int, a: int) -> int | None:
        t = self.adjacency[x].get(a)
        return t[0] if t else None

    def is_reduced(self) -> bool:
        # (., a, y) unique  <=>  (y, -a, .) unique
        return all(len(t) == 1 for d in self.adjacency for t in d.values()) and \
            len(set(self.edges)) == len(self.edges)

    def is_cyclically_reduced(self) -> bool:
        return self.is_reduced() and all(len(hyperlink(self, x)) >= 2
                                         for x in range(self.vertex_count))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        todo = [0]
        while todo:
            x = todo.pop()
            for ts in self.adjacency[x].values():
                for y in ts:
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
        return len(seen) == self.vertex_count

    def relabel(self, perm: Sequence[int]) -> "AGraph":
        """Rename vertex x to perm[x]."""
        return AGraph(self.vertex_count, tuple((perm[x], a, perm[y]) for x, a, y in self.edges),
                      self.rank)

    def with_rank(self, rank: int) -> "AGraph":
        return AGraph(self.vertex_count, self.edges, rank)


@dataclass(frozen=True)
class PointedAGraph:
    graph: AGraph
    base: int = 0

    def __post_init__(self):
        if not 0 <= self.base < max(self.graph.vertex_count, 1):
            raise GraphError(f"base {self.base} is not a vertex")

    @property
    def size(self) -> int:
        return self.graph.vertex_count


@dataclass
class BranchInfo:
    """Branch data of a graph relative to its cyclic core.

    ``beta[x]`` is the core vertex (in the core's numbering) reached from
    original vertex ``x`` and ``b[x]`` labels the shortest path to it.
    ``index`` maps original vertex ids to core ids (None when trimmed).
    """

    beta: list[int]
    b: list[Word]
    index: list[int | None]
    empty_core: bool = False


def hyperlink(g: AGraph, x: int) -> set[int]:
    """Labels of the edges into ``x`` (dual edges included)."""
    if not 0 <= x < g.vertex_count:
        raise GraphError(f"vertex {x} out of range")
    # an a-edge out of x is the dual of an (-a)-edge into x
    return {-a for a in g.adjacency[x]}


def graph_from_word(u: Sequence[int], rank: int = 0) -> AGraph:
    """The circular graph of ``u``: vertices 0..n-1, edge i --u[i]--> i+1 mod n."""
    n = len(u)
    if n == 0:
        return AGraph(1, (), rank)
    return AGraph(n, tuple((i, u[i], (i + 1) % n) for i in range(n)), rank)


def build_bouquet(gens: Iterable[Sequence[int]], rank: int = 0) -> PointedAGraph:
    """One loop per (nonempty) generator around base vertex 0."""
    edges: list[Edge] = []
    n = 1
    for w in gens:
        w = reduce_word(w)
        if not w:
            continue
        prev = 0
        for i, x in enumerate(w):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            edges.append((prev, x, nxt))
            prev = nxt
    return PointedAGraph(AGraph(n, tuple(edges), rank), 0)


def fold(g: AGraph, base: int | None = None,
         rng: random.Random | None = None) -> tuple[AGraph, list[int]]:
    """Stallings folding by union-find.

    Returns the reduced graph and the map old vertex -> new vertex.  With
    ``rng`` the pending identifications are processed in random order (used
    to exercise confluence).  ``base`` is accepted for symmetry with the
    pointed API; track it through the returned map.
    """
    n = g.vertex_count
    parent = list(range(n))
    adj: list[dict[int, int] | None] = [{} for _ in range(n)]
    pending: list[tuple[int, int]] = []

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def attach(x: int, a: int, y: int) -> None:
        d = adj[x]
        t = d.get(a)
        if t is None:
            d[a] = y
        else:
            pending.append((t, y))

    for x, a, y in g.edges:
        attach(x, a, y)
        attach(y, -a, x)

    while pending:
        if rng is not None:
            k = rng.randrange(len(pending))
            pending[k], pending[-1] = pending[-1], pending[k]
        x, y = pending.pop()
        x, y = find(x), find(y)
        if x == y:
            continue
        if len(adj[x]) < len(adj[y]):
            x, y = y, x
        parent[y] = x
        dy = adj[y]
        adj[y] = None
        for a, t in dy.items():
            attach(x, a, t)

    roots = sorted({find(x) for x in range(n)})
    new_id = {r: i for i, r in enumerate(roots)}
    edges = set()
    for r in roots:
        for a, t in adj[r].items():
            if a > 0:
                edges.add((new_id[r], a, new_id[find(t)]))
    mapping = [new_id[find(x)] for x in range(n)]
    return AGraph(len(roots), tuple(sorted(edges)), g.rank), mapping


def _trim(g: AGraph, keep: int | None = None) -> tuple[list[bool], list[int], list[Word]]:
    """Repeatedly remove endpoints other than ``keep``.

    Returns (alive flags, beta, b) where beta/b are in original vertex ids.
    Requires a reduced graph.
    """
    n = g.vertex_count
    adj = g.adjacency
    deg = [len(adj[x]) for x in range(n)]
    alive = [True] * n
    todo = [x for x in range(n) if deg[x] <= 1 and x != keep]
    while todo:
        x = todo.pop()
        if not alive[x]:
            continue
        alive[x] = False
        for a, ts in adj[x].items():
            for y in ts:
                if alive[y] and y != x:
                    # y loses the edge with label -a into... its a^-1 slot
                    deg[y] -= 1
                    if deg[y] <= 1 and y != keep:
                        todo.append(y)
    beta = list(range(n))
    b: list[Word] = [EMPTY] * n
    if not any(alive):
        return alive, beta, b
    # BFS outward from surviving vertices through trimmed ones
    queue = deque(x for x in range(n) if alive[x])
    seen = list(alive)
    while queue:
        x = queue.popleft()
        for a, ts in sorted(adj[x].items(), key=lambda kv: letter_index(kv[0])):
            for y in ts:
                if not seen[y]:
                    seen[y] = True
                    beta[y] = beta[x]
                    b[y] = (-a,) + b[x]
                    queue.append(y)
    return alive, beta, b


def _restrict(g: AGraph, alive: Sequence[bool]) -> tuple[AGraph, list[int | None]]:
    index: list[int | None] = [None] * g.vertex_count
    k = 0
    for x in range(g.vertex_count):
        if alive[x]:
            index[x] = k
            k += 1
    edges = tuple((index[x], a, index[y]) for x, a, y in g.edges if alive[x] and alive[y])
    return AGraph(k, edges, g.rank), index


def cyclic_core(g: AGraph, root: int | None = None) -> tuple[AGraph, BranchInfo]:
    """Trim all endpoints of a reduced graph.

    A graph whose core is empty (a forest) yields, by convention, a single
    vertex with no edges; ``root`` (default 0) names the original vertex
    kept for it and ``BranchInfo.empty_core`` is set.
    """
    if not g.is_reduced():
        raise GraphError("cyclic_core needs a reduced graph")
    if g.vertex_count == 0:
        return g, BranchInfo([], [], [], True)
    alive, beta, b = _trim(g)
    empty = not any(alive)
    if empty:
        r = 0 if root is None else root
        alive, beta, b = _trim(g, keep=r)
        # keep=r leaves the component of r reduced to r; other trees vanish
        alive = [x == r for x in range(g.vertex_count)]
    core, index = _restrict(g, alive)
    info = BranchInfo([index[beta[x]] if index[beta[x]] is not None else -1
                       for x in range(g.vertex_count)], b, index, empty)
    return core, info


def trim_pointed(g: AGraph, base: int) -> tuple[PointedAGraph, list[int | None]]:
    """Trim every endpoint except ``base``; returns the pointed graph and old -> new ids."""
    alive, _, _ = _trim(g, keep=base)
    h, index = _restrict(g, alive)
    return PointedAGraph(h, index[base]), index


def pointed_core(p: PointedAGraph) -> tuple[PointedAGraph, Word]:
    """Cyclic core of a pointed graph rebased at beta(base); also returns b(base)."""
    core, info = cyclic_core(p.graph, root=p.base)
    return PointedAGraph(core, info.beta[p.base]), info.b[p.base]


def stallings_graph(gens: Iterable[Sequence[int]], rank: int = 0) -> PointedAGraph:
    """The reduced pointed graph representing the subgroup generated by ``gens``."""
    bq = build_bouquet(gens, rank)
    h, m = fold(bq.graph)
    return PointedAGraph(h, m[bq.base])


def subgroup_graph(p: PointedAGraph) -> PointedAGraph:
    """Fold and trim non-base endpoints: the subgroup representation of (p, base)."""
    h, m = fold(p.graph)
    q, _ = trim_pointed(h, m[p.base])
    return q


def bfs_tree(g: AGraph, base: int) -> dict[int, tuple[int, int]]:
    """BFS spanning tree from ``base`` as a map vertex -> (parent, label).

    Letters are tried in the fixed order a < A < b < B < ...
    """
    parent: dict[int, tuple[int, int]] = {base: (-1, 0)}
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for a in sorted(g.adjacency[x], key=letter_index):
            for y in g.adjacency[x][a]:
                if y not in parent:
                    parent[y] = (x, a)
                    queue.append(y)
    return parent


def _tree_word(parent: dict[int, tuple[int, int]], y: int) -> Word:
    out = []
    while parent[y][0] != -1:
        y, a = parent[y]
        out.append(a)
    return tuple(reversed(out))


def extract_basis(p: PointedAGraph) -> list[Word]:
    """Basis words u_x a u_y^-1, one per positive edge outside a BFS spanning tree."""
    g = p.graph
    parent = bfs_tree(g, p.base)
    tree = set()
    for y, (x, a) in parent.items():
        if x != -1:
            tree.add((x, a, y) if a > 0 else (y, -a, x))
    basis = []
    for e in g.edges:
        x, a, y = e
        if e in tree or x not in parent:
            continue
        uy = _tree_word(parent, y)
        basis.append(reduce_word(_tree_word(parent, x) + (a,) + tuple(-c for c in reversed(uy))))
    return basis


def read_word(g: AGraph, x: int, w: Sequence[int]) -> int | None:
    """End vertex of the path from x labelled w in a reduced graph, or None."""
    for a in w:
        t = g.adjacency[x].get(a)
        if not t:
            return None
        x = t[0]
    return x


def pointed_normal_form(p: PointedAGraph) -> bytes:
    """Canonical encoding of a connected reduced pointed graph.

    Equal outputs iff there is a label- and base-preserving isomorphism.
    """
    g = p.graph
    order: dict[int, int] = {p.base: 0}
    queue = deque([p.base])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        for a in sorted(adj[x], key=letter_index):
            for y in adj[x][a]:
                if y not in order:
                    order[y] = len(order)
                    queue.append(y)
    if len(order) != g.vertex_count:
        raise GraphError("pointed_normal_form needs a connected graph")
    edges = sorted((order[x], a, order[y]) for x, a, y in g.edges)
    body = ";".join(f"{x},{a},{y}" for x, a, y in edges)
    return f"{g.vertex_count}|{body}".encode()


def graph_normal_form(g: AGraph) -> bytes:
    """Canonical encoding of a reduced graph up to isomorphism (no base point).

    Components are encoded by their least pointed form and sorted.
    """
    comps = components(g)
    forms = []
    for verts in comps:
        sub, idx = _restrict(g, [x in verts for x in range(g.vertex_count)])
        forms.append(min(pointed_normal_form(PointedAGraph(sub, b))
                         for b in range(sub.vertex_count)))
    return b"#".join(sorted(forms))


def components(g: AGraph) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in range(g.vertex_count):
        if s in seen:
            continue
        comp = {s}
        todo = [s]
        while todo:
            x = todo.pop()
            for ts in g.adjacency[x].values():
                for y in ts:
                    if y not in comp:
                        comp.add(y)
                        todo.append(y)
        seen |= comp
        out.append(comp)
    return out


def disjoint_union(graphs: Sequence[AGraph]) -> tuple[AGraph, list[int]]:
    """Union of graphs; returns the union and the vertex offset of each part."""
    edges: list[Edge] = []
    offsets = []
    n = 0
    rank = max((h.rank for h in graphs), default=1)
    for h in graphs:
        offsets.append(n)
        edges += [(x + n, a, y + n) for x, a, y in h.edges]
        n += h.vertex_count
    return AGraph(n, tuple(edges), rank), offsets
