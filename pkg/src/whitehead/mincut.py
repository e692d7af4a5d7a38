"""Minimum v-cuts of Whitehead hypergraphs via max-flow.

Each distinct hyperedge d becomes two gadget nodes d_in -> d_out with
capacity equal to its multiplicity, plus infinite arcs u -> d_in and
d_out -> u for every letter u in d.  A finite (v, v^-1) cut of that network
pays for d exactly when d has letters on both sides, so minimum network
cuts are minimum-capacity v-cuts of the hypergraph.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

from .hypergraph import WhiteheadHypergraph, degree
from .words import (letter_bit, letter_from_index, letter_index, letter_name,
                    mask_letters)


class FlowNetwork:
    """Directed network with paired residual arcs (arc i and i ^ 1)."""

    def __init__(self, n: int, source: int, sink: int):
        self.n = n
        self.source = source
        self.sink = sink
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.names: list[str] = [str(i) for i in range(n)]

    def add_arc(self, u: int, v: int, c: int) -> int:
        i = len(self.head)
        self.head += [v, u]
        self.cap += [c, 0]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    @property
    def arc_count(self) -> int:
        return len(self.head) // 2

    def arcs(self):
        """(tail, head, original capacity) per forward arc; valid before max_flow."""
        for i in range(0, len(self.head), 2):
            yield self.head[i + 1], self.head[i], self.cap[i] + self.cap[i + 1]

    def to_dot(self) -> str:
        lines = ["digraph network {"]
        for i in range(0, len(self.head), 2):
            u, v = self.head[i + 1], self.head[i]
            lines.append(f'  "{self.names[u]}" -> "{self.names[v]}" '
                         f'[label="{self.cap[i] + self.cap[i + 1]}"];')
        lines.append("}")
        return "\n".join(lines)


def max_flow(net: FlowNetwork) -> int:
    """Dinic's blocking-flow algorithm; mutates residual capacities in place."""
    s, t = net.source, net.sink
    head, cap, adj = net.head, net.cap, net.adj
    n = net.n
    total = 0
    while True:
        level = [-1] * n
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for i in adj[x]:
                if cap[i] > 0 and level[head[i]] < 0:
                    level[head[i]] = level[x] + 1
                    q.append(head[i])
        if level[t] < 0:
            return total
        it = [0] * n
        while True:
            # iterative DFS for one augmenting path in the level graph
            path: list[int] = []
            x = s
            while x != t:
                advanced = False
                arcs = adj[x]
                while it[x] < len(arcs):
                    i = arcs[it[x]]
                    y = head[i]
                    if cap[i] > 0 and level[y] == level[x] + 1:
                        path.append(i)
                        x = y
                        advanced = True
                        break
                    it[x] += 1
                if not advanced:
                    if x == s:
                        break
                    level[x] = -1  # dead end
                    i = path.pop()
                    x = head[i ^ 1]
                    it[x] += 1
            if x != t:
                break
            f = min(cap[i] for i in path)
            for i in path:
                cap[i] -= f
                cap[i ^ 1] += f
            total += f


def residual_reachable(net: FlowNetwork) -> list[bool]:
    seen = [False] * net.n
    seen[net.source] = True
    q = deque([net.source])
    while q:
        x = q.popleft()
        for i in net.adj[x]:
            y = net.head[i]
            if net.cap[i] > 0 and not seen[y]:
                seen[y] = True
                q.append(y)
    return seen


def hypergraph_to_network(W: WhiteheadHypergraph, v: int) -> FlowNetwork:
    """Gadget network with source v and sink v^-1.

    Nodes 0 .. 2r-1 are letters (by letter index); then d_in, d_out per
    distinct hyperedge in sorted order.
    """
    r2 = 2 * W.rank
    masks = sorted(W.edges)
    inf = W.hyperedge_count + 1
    net = FlowNetwork(r2 + 2 * len(masks), letter_index(v), letter_index(-v))
    for i in range(r2):
        net.names[i] = letter_name(letter_from_index(i), W.rank)
    for k, mask in enumerate(masks):
        d_in, d_out = r2 + 2 * k, r2 + 2 * k + 1
        net.names[d_in] = f"d{k}_in"
        net.names[d_out] = f"d{k}_out"
        net.add_arc(d_in, d_out, W.edges[mask])
        i = 0
        m = mask
        while m:
            if m & 1:
                net.add_arc(i, d_in, inf)
                net.add_arc(d_out, i, inf)
            m >>= 1
            i += 1
    return net


class CutResult(NamedTuple):
    Y: int
    cap: int

    @property
    def letters(self) -> list[int]:
        return mask_letters(self.Y)


def min_vcut(W: WhiteheadHypergraph, v: int, net_out: list | None = None) -> CutResult:
    """A minimum-capacity v-cut: letters reachable from v in the final residual network."""
    if abs(v) > W.rank or v == 0:
        raise ValueError(f"letter {v} outside rank {W.rank}")
    net = hypergraph_to_network(W, v)
    value = max_flow(net)
    seen = residual_reachable(net)
    Y = 0
    for i in range(2 * W.rank):
        if seen[i]:
            Y |= 1 << i
    if net_out is not None:
        net_out.append(net)
    return CutResult(Y, value)


BRUTE_FORCE_MAX_RANK = 8


def brute_force_min_vcut(W: WhiteheadHypergraph, v: int) -> CutResult:
    """Exhaustive minimum over all 2^(2r-2) v-cuts; ties go to the smallest bitset."""
    if W.rank > BRUTE_FORCE_MAX_RANK:
        raise ValueError(f"brute force limited to rank <= {BRUTE_FORCE_MAX_RANK}, got {W.rank}")
    free = [i for i in range(2 * W.rank) if i not in (letter_index(v), letter_index(-v))]
    base = letter_bit(v)
    full = W.full
    items = list(W.edges.items())
    best = None
    for k in range(1 << len(free)):
        Y = base
        for j, i in enumerate(free):
            if k >> j & 1:
                Y |= 1 << i
        yc = full & ~Y
        c = 0
        for mask, m in items:
            if mask & Y and mask & yc:
                c += m
        if best is None or c < best.cap or (c == best.cap and Y < best.Y):
            best = CutResult(Y, c)
    return best


class Move(NamedTuple):
    v: int
    Y: int
    delta: int


def best_whitehead_move(W: WhiteheadHypergraph, workers: int = 1) -> Move | None:
    """The v-cut (v positive) with the most negative cap - deg, or None.

    Ties go to the smallest v.  Letters that occur in no hyperedge are
    skipped; their delta is never negative.
    """
    support = W.support()
    letters = [a for a in range(1, W.rank + 1) if support & letter_bit(a)]

    def evaluate(a: int) -> Move:
        cut = min_vcut(W, a)
        return Move(a, cut.Y, cut.cap - degree(W, a))

    if workers > 1 and len(letters) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            moves = list(pool.map(evaluate, letters))
    else:
        moves = [evaluate(a) for a in letters]
    best = None
    for mv in moves:
        if mv.delta < 0 and (best is None or mv.delta < best.delta):
            best = mv
    return best
