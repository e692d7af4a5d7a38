"""Greedy Whitehead minimization.

Every iteration builds the Whitehead hypergraph of the current cyclically
reduced object, asks :func:`best_whitehead_move` for the cut with the most
negative size change, and applies it.  The size drops by at least one per
iteration, so the number of steps is bounded by the starting size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .agraph import (AGraph, PointedAGraph, extract_basis, graph_from_word,
                     pointed_core, stallings_graph)
from .automorphisms import (AutStep, MinimizationTrace, SecondKind,
                            apply_bullet, apply_to_cyclic_graph, apply_to_word)
from .hypergraph import (WhiteheadHypergraph, build_hypergraph,
                         hypergraph_of_cyclic_word)
from .mincut import Move, best_whitehead_move
from .words import (CyclicWord, Word, cyclic_core_word, is_cyclically_reduced,
                    reduce_word, word_rank)


class InvariantError(RuntimeError):
    """A computed size disagreed with the predicted one."""


@dataclass
class MinimizationResult:
    kind: str
    input: Any
    minimal: Any
    trace: MinimizationTrace
    size_history: list[int]
    rank: int
    graph: AGraph | PointedAGraph | list[AGraph] | None = None
    basis: list[Word] | None = None

    @property
    def size(self) -> int:
        return self.size_history[-1]

    @property
    def iterations(self) -> int:
        return self.trace.automorphism_count


def _next_move(W: WhiteheadHypergraph, workers: int) -> tuple[Move, SecondKind] | None:
    mv = best_whitehead_move(W, workers=workers)
    if mv is None:
        return None
    return mv, SecondKind(mv.v, mv.Y)


def _check(expected: int, got: int, what: str) -> None:
    if expected != got:
        raise InvariantError(f"{what}: predicted size {expected}, got {got}")


def minimize_conjugacy(g: AGraph, rank: int | None = None, workers: int = 1) -> MinimizationResult:
    """Minimize the conjugacy class represented by a cyclically reduced graph."""
    if rank is not None:
        g = g.with_rank(max(rank, g.rank))
    if g.edges and not g.is_cyclically_reduced():
        raise ValueError("minimize_conjugacy needs a cyclically reduced graph")
    start = g
    history = [g.vertex_count]
    steps: list[AutStep] = []
    while g.edges:
        found = _next_move(build_hypergraph(g), workers)
        if found is None:
            break
        mv, phi = found
        h = apply_to_cyclic_graph(phi, g)
        _check(g.vertex_count + mv.delta, h.vertex_count, str(phi))
        steps.append(AutStep(phi))
        history.append(h.vertex_count)
        g = h
    return MinimizationResult("conjugacy", start, g, MinimizationTrace(steps), history,
                              g.rank, graph=g)


def minimize_tuple(graphs: Sequence[AGraph], rank: int | None = None,
                   workers: int = 1) -> MinimizationResult:
    """Minimize the total size of a tuple of conjugacy classes with shared moves."""
    r = max([g.rank for g in graphs] + [rank or 1])
    gs = [g.with_rank(r) for g in graphs]
    for g in gs:
        if g.edges and not g.is_cyclically_reduced():
            raise ValueError("minimize_tuple needs cyclically reduced components")
    start = list(gs)
    history = [sum(g.vertex_count for g in gs)]
    steps: list[AutStep] = []
    while any(g.edges for g in gs):
        W = WhiteheadHypergraph(r)
        for g in gs:
            if g.edges:
                W = W.union(build_hypergraph(g))
        found = _next_move(W, workers)
        if found is None:
            break
        mv, phi = found
        new = [apply_to_cyclic_graph(phi, g) if g.edges else g for g in gs]
        total = sum(g.vertex_count for g in new)
        _check(history[-1] + mv.delta, total, str(phi))
        steps.append(AutStep(phi))
        history.append(total)
        gs = new
    return MinimizationResult("tuple", start, gs, MinimizationTrace(steps), history, r, graph=gs)


def minimize_subgroup(gens: Sequence[Sequence[int]], rank: int | None = None,
                      workers: int = 1) -> MinimizationResult:
    """Minimize a finitely generated subgroup given by generators.

    The first step (if any) conjugates by b(1) to reach the cyclic core;
    each later step applies a Whitehead automorphism and then conjugates by
    the branch of the base point in the image.
    """
    gens = [reduce_word(w) for w in gens]
    r = max(word_rank(gens), rank or 1)
    p = stallings_graph(gens, r)
    history = [p.size]
    steps: list[AutStep] = []
    core, b = pointed_core(p)
    if b:
        steps.append(AutStep(None, b))
        history.append(core.size)
    p = core
    while p.graph.edges:
        found = _next_move(build_hypergraph(p.graph), workers)
        if found is None:
            break
        mv, phi = found
        q, b = pointed_core(apply_bullet(phi, p))
        _check(p.size + mv.delta, q.size, str(phi))
        steps.append(AutStep(phi, b or None))
        history.append(q.size)
        p = q
    basis = extract_basis(p)
    return MinimizationResult("subgroup", gens, basis, MinimizationTrace(steps), history, r,
                              graph=p, basis=basis)


def _minimize_cyclic_loop(w: Word, r: int, workers: int, keep_conjugators: bool):
    steps: list[AutStep] = []
    history = [len(w)]
    while w:
        found = _next_move(hypergraph_of_cyclic_word(w, r), workers)
        if found is None:
            break
        mv, phi = found
        c, w2 = cyclic_core_word(apply_to_word(phi, w))
        _check(len(w) + mv.delta, len(w2), str(phi))
        steps.append(AutStep(phi, (c or None) if keep_conjugators else None))
        history.append(len(w2))
        w = w2
    return w, steps, history


def minimize_word(u: Sequence[int], rank: int | None = None, workers: int = 1) -> MinimizationResult:
    """Minimize the length of a word in its automorphic orbit.

    Equivalent to the subgroup loop on <u>, run directly on the word: the
    branch of the base point of the image graph is the conjugating prefix
    of the image word.
    """
    u = reduce_word(u)
    r = max(word_rank([u]), rank or 1)
    v, w = cyclic_core_word(u)
    steps: list[AutStep] = []
    history = [len(u)]
    if v:
        steps.append(AutStep(None, v))
        history.append(len(w))
    w, more, hist = _minimize_cyclic_loop(w, r, workers, keep_conjugators=True)
    steps += more
    history += hist[1:]
    return MinimizationResult("word", u, w, MinimizationTrace(steps), history, r)


def minimize_cyclic_word(u: CyclicWord | Sequence[int], rank: int | None = None,
                         workers: int = 1) -> MinimizationResult:
    if not isinstance(u, CyclicWord):
        if not is_cyclically_reduced(u):
            raise ValueError("minimize_cyclic_word needs a cyclically reduced word")
        u = CyclicWord.from_word(u)
    r = max(word_rank([u.letters]), rank or 1)
    w, steps, history = _minimize_cyclic_loop(u.letters, r, workers, keep_conjugators=False)
    return MinimizationResult("cyclic", u, CyclicWord.from_word(w), MinimizationTrace(steps),
                              history, r)


def minimize_cyclic_word_graph(u: Sequence[int], rank: int | None = None) -> MinimizationResult:
    """Same as :func:`minimize_cyclic_word` but through the circular graph."""
    return minimize_conjugacy(graph_from_word(u, rank or word_rank([u])))
