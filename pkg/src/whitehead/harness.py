"""Random instance generators and brute-force cross-checks.

Used by the test-suite and by the ``oracle-check`` subcommand.  The orbit
searches here apply automorphisms by subdividing and folding graphs (or by
rewriting words); they never consult the hypergraph formula or the
min-cut solver, so they stay independent of the code they check.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass, field

from .agraph import (AGraph, PointedAGraph, cyclic_core, graph_normal_form,
                     pointed_normal_form, stallings_graph)
from .automorphisms import (SecondKind, apply_to_cyclic_graph, apply_to_pointed_graph,
                            apply_to_word, enumerate_second_kind)
from .hypergraph import (WhiteheadHypergraph, build_hypergraph, capacity,
                         predicted_delta)
from .mincut import BRUTE_FORCE_MAX_RANK, brute_force_min_vcut, min_vcut
from .words import CyclicWord, Word, invert_word, letter_bit, multiply


def random_reduced_word(rng: random.Random, rank: int, length: int) -> Word:
    out: list[int] = []
    while len(out) < length:
        x = rng.randint(1, rank) * rng.choice((1, -1))
        if out and out[-1] == -x:
            continue
        out.append(x)
    return tuple(out)


def random_cyclically_reduced_word(rng: random.Random, rank: int, length: int) -> Word:
    while True:
        w = random_reduced_word(rng, rank, length)
        if length < 2 or w[-1] != -w[0]:
            return w


def random_generators(rng: random.Random, rank: int, count: int, max_len: int) -> list[Word]:
    return [random_reduced_word(rng, rank, rng.randint(1, max_len)) for _ in range(count)]


def random_partial_injection_graph(rng: random.Random, rank: int, n: int) -> AGraph:
    """Reduced graph: each letter acts as a random partial injection of the vertices."""
    edges = []
    for a in range(1, rank + 1):
        targets = list(range(n))
        rng.shuffle(targets)
        for x in range(n):
            if rng.random() < 0.7:
                edges.append((x, a, targets[x]))
    return AGraph(n, tuple(edges), rank)


def random_unfolded_graph(rng: random.Random, rank: int, n: int, extra: int) -> AGraph:
    """Connected graph on n vertices: a random spanning tree plus ``extra`` random edges."""
    edges = []
    for y in range(1, n):
        edges.append((rng.randrange(y), rng.randint(1, rank) * rng.choice((1, -1)), y))
    for _ in range(extra):
        edges.append((rng.randrange(n), rng.randint(1, rank), rng.randrange(n)))
    return AGraph(n, tuple(edges), rank)


def nielsen_shuffle(rng: random.Random, gens: list[Word], moves: int = 6) -> list[Word]:
    """Random Nielsen moves: invert, multiply one generator by another, permute."""
    gens = list(gens)
    for _ in range(moves):
        i = rng.randrange(len(gens))
        move = rng.randrange(3)
        if move == 0:
            gens[i] = invert_word(gens[i])
        elif move == 1 and len(gens) > 1:
            j = rng.choice([k for k in range(len(gens)) if k != i])
            gens[i] = multiply(gens[i], gens[j])
        else:
            rng.shuffle(gens)
    return gens


def random_cyclically_reduced_graph(rng: random.Random, rank: int, max_size: int = 30) -> AGraph:
    """A nonempty cyclically reduced graph with at most ``max_size`` vertices."""
    while True:
        if rng.random() < 0.5:
            gens = random_generators(rng, rank, rng.randint(1, 3), 10)
            g = stallings_graph(gens, rank).graph
        else:
            g = random_partial_injection_graph(rng, rank, rng.randint(1, max_size))
        core, info = cyclic_core(g)
        if core.edges and core.vertex_count <= max_size and not info.empty_core:
            return core


def random_vcut(rng: random.Random, rank: int) -> tuple[int, int]:
    v = rng.randint(1, rank) * rng.choice((1, -1))
    Y = letter_bit(v)
    for a in range(1, rank + 1):
        for x in (a, -a):
            if x not in (v, -v) and rng.random() < 0.5:
                Y |= letter_bit(x)
    return v, Y


def random_hypergraph(rng: random.Random, rank: int, max_edges: int = 40) -> WhiteheadHypergraph:
    edges: Counter = Counter()
    r2 = 2 * rank
    for _ in range(rng.randint(1, max_edges)):
        k = rng.randint(2, r2)
        mask = 0
        for i in rng.sample(range(r2), k):
            mask |= 1 << i
        edges[mask] += 1
    return WhiteheadHypergraph(rank, edges)


# ---------------------------------------------------------------------------
# exhaustive orbit search

def orbit_min_cyclic_word(w: Word, rank: int, slack: int = 2) -> int:
    """Least cyclic length reachable by second-kind moves through words of length <= |w| + slack."""
    start = CyclicWord.from_word(w)
    bound = len(start) + slack
    auts = list(enumerate_second_kind(rank))
    seen = {start}
    queue = deque([start])
    best = len(start)
    while queue:
        cw = queue.popleft()
        for phi in auts:
            nxt = CyclicWord.from_word(apply_to_word(phi, cw.letters))
            if len(nxt) <= bound and nxt not in seen:
                seen.add(nxt)
                best = min(best, len(nxt))
                queue.append(nxt)
    return best


def orbit_min_conjugacy(g: AGraph, slack: int = 1, limit: int = 20000) -> int:
    """Least size reachable from cyclically reduced ``g`` through graphs of size <= |g| + slack."""
    bound = g.vertex_count + slack
    auts = list(enumerate_second_kind(g.rank))
    seen = {graph_normal_form(g)}
    queue = deque([g])
    best = g.vertex_count
    while queue:
        h = queue.popleft()
        for phi in auts:
            k = apply_to_cyclic_graph(phi, h)
            if k.vertex_count > bound:
                continue
            key = graph_normal_form(k)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > limit:
                raise RuntimeError("orbit search exceeded its state limit")
            best = min(best, k.vertex_count)
            queue.append(k)
    return best


def orbit_min_subgroup(p: PointedAGraph, slack: int = 2, limit: int = 50000) -> int:
    """Least size reachable from ``p`` through pointed graphs of size <= |p| + slack."""
    bound = p.size + slack
    auts = list(enumerate_second_kind(p.graph.rank))
    seen = {pointed_normal_form(p)}
    queue = deque([p])
    best = p.size
    while queue:
        q = queue.popleft()
        for phi in auts:
            k = apply_to_pointed_graph(phi, q)
            if k.size > bound:
                continue
            key = pointed_normal_form(k)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > limit:
                raise RuntimeError("orbit search exceeded its state limit")
            best = min(best, k.size)
            queue.append(k)
    return best


def classical_minimize(g: AGraph) -> tuple[AGraph, list[SecondKind]]:
    """Whitehead's original method: try every automorphism until one shrinks the graph."""
    auts = list(enumerate_second_kind(g.rank))
    steps = []
    while g.edges:
        for phi in auts:
            h = apply_to_cyclic_graph(phi, g)
            if h.vertex_count < g.vertex_count:
                g = h
                steps.append(phi)
                break
        else:
            break
    return g, steps


def exponent_sums(u: Word, rank: int) -> list[int]:
    sums = [0] * rank
    for x in u:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


# ---------------------------------------------------------------------------
# oracle-check

@dataclass
class OracleReport:
    rank: int
    cases: int
    mincut_checks: int = 0
    mincut_mismatches: list = field(default_factory=list)
    delta_checks: int = 0
    delta_mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mincut_mismatches and not self.delta_mismatches

    def lines(self) -> list[str]:
        return [
            f"mincut: {self.mincut_checks} checks, {len(self.mincut_mismatches)} mismatches",
            f"delta: {self.delta_checks} checks, {len(self.delta_mismatches)} mismatches",
            f"oracle-check: {'ok' if self.ok else 'FAILED'}",
        ]


def check_mincut(W: WhiteheadHypergraph) -> list[tuple]:
    """Compare solver and brute force for every letter of W; return mismatches."""
    bad = []
    for a in range(1, W.rank + 1):
        for v in (a, -a):
            fast = min_vcut(W, v)
            slow = brute_force_min_vcut(W, v)
            if fast.cap != slow.cap or capacity(W, fast.Y) != fast.cap:
                bad.append((dict(W.edges), v, fast, slow))
    return bad


def check_delta(g: AGraph, v: int, Y: int) -> tuple | None:
    phi = SecondKind(v, Y)
    predicted = predicted_delta(build_hypergraph(g), v, Y)
    actual = apply_to_cyclic_graph(phi, g).vertex_count - g.vertex_count
    if predicted != actual:
        return (g, str(phi), predicted, actual)
    return None


def oracle_check(rank: int, cases: int, seed: int = 0, max_size: int = 30) -> OracleReport:
    if rank > BRUTE_FORCE_MAX_RANK:
        raise ValueError(f"oracle-check supports rank <= {BRUTE_FORCE_MAX_RANK}; got {rank}")
    if rank < 1 or cases < 0:
        raise ValueError("rank must be >= 1 and cases >= 0")
    rng = random.Random(seed)
    rep = OracleReport(rank, cases)
    for _ in range(cases):
        W = random_hypergraph(rng, rank)
        rep.mincut_mismatches += check_mincut(W)
        rep.mincut_checks += 2 * rank
        g = random_cyclically_reduced_graph(rng, rank, max_size)
        v, Y = random_vcut(rng, rank)
        bad = check_delta(g, v, Y)
        rep.delta_checks += 1
        if bad:
            rep.delta_mismatches.append(bad)
    return rep
