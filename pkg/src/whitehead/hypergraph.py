"""Whitehead hypergraphs: one hyperedge per vertex of a cyclically reduced graph.

Hyperedges are bitsets over the 2r letters (bit order a, A, b, B, ...)
kept with multiplicities, since distinct vertices may share a hyperlink.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .agraph import AGraph, GraphError
from .words import letter_bit, letter_name, letters_mask, mask_letters


@dataclass
class WhiteheadHypergraph:
    rank: int
    edges: Counter = field(default_factory=Counter)

    def __post_init__(self):
        for mask in self.edges:
            if bin(mask).count("1") < 2:
                raise ValueError("hyperedges need at least two letters")

    @property
    def full(self) -> int:
        return (1 << (2 * self.rank)) - 1

    @property
    def hyperedge_count(self) -> int:
        return sum(self.edges.values())

    def hyperedges(self) -> list[frozenset[int]]:
        """Hyperedges as letter sets, repeated by multiplicity."""
        out = []
        for mask, m in self.edges.items():
            out += [frozenset(mask_letters(mask))] * m
        return out

    def union(self, other: "WhiteheadHypergraph") -> "WhiteheadHypergraph":
        return WhiteheadHypergraph(max(self.rank, other.rank), self.edges + other.edges)

    __add__ = union

    def support(self) -> int:
        """Bitset of letters occurring in some hyperedge."""
        m = 0
        for mask in self.edges:
            m |= mask
        return m

    def dump(self) -> str:
        lines = []
        for mask in sorted(self.edges):
            names = " ".join(letter_name(x, self.rank) for x in mask_letters(mask))
            lines.append(f"{names} x{self.edges[mask]}")
        return "\n".join(lines)


def build_hypergraph(g: AGraph) -> WhiteheadHypergraph:
    """The Whitehead hypergraph of a cyclically reduced graph."""
    if not g.is_reduced():
        raise GraphError("graph is not reduced")
    edges: Counter = Counter()
    for x in range(g.vertex_count):
        # labels into x are the inverses of labels out of x
        mask = 0
        for a in g.adjacency[x]:
            mask |= letter_bit(-a)
        if bin(mask).count("1") < 2:
            raise GraphError(f"graph is not cyclically reduced at vertex {x}")
        edges[mask] += 1
    return WhiteheadHypergraph(g.rank, edges)


def hypergraph_of_cyclic_word(u: Sequence[int], rank: int | None = None) -> WhiteheadHypergraph:
    """Whitehead graph of a cyclically reduced word, without building its circular graph.

    The vertex between u[i-1] and u[i] has hyperlink {u[i-1], u[i]^-1}.
    """
    if rank is None:
        rank = max((abs(x) for x in u), default=1)
    edges: Counter = Counter()
    n = len(u)
    for i in range(n):
        edges[letter_bit(u[i - 1]) | letter_bit(-u[i])] += 1
    return WhiteheadHypergraph(rank, edges)


def tuple_hypergraph(graphs: Iterable[AGraph]) -> WhiteheadHypergraph:
    out = None
    for g in graphs:
        w = build_hypergraph(g)
        out = w if out is None else out.union(w)
    if out is None:
        return WhiteheadHypergraph(1)
    return out


def _mask(Y) -> int:
    return Y if isinstance(Y, int) else letters_mask(Y)


def capacity(W: WhiteheadHypergraph, Y) -> int:
    """Number of hyperedges meeting both Y and its complement."""
    y = _mask(Y)
    yc = W.full & ~y
    return sum(m for mask, m in W.edges.items() if mask & y and mask & yc)


def degree(W: WhiteheadHypergraph, v: int) -> int:
    bit = letter_bit(v)
    return sum(m for mask, m in W.edges.items() if mask & bit)


def is_vcut(v: int, Y) -> bool:
    y = _mask(Y)
    return bool(y & letter_bit(v)) and not y & letter_bit(-v)


def predicted_delta(W: WhiteheadHypergraph, v: int, Y) -> int:
    """Size change of the graph under the automorphism (v, Y): cap(Y) - deg(v)."""
    if not is_vcut(v, Y):
        raise ValueError("Y is not a v-cut")
    return capacity(W, Y) - degree(W, v)
