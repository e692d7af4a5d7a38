"""Whitehead automorphisms and their action on letters, words and graphs."""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from .agraph import AGraph, PointedAGraph, cyclic_core, fold, trim_pointed
from .words import (Alphabet, Word, WordError, format_word, letter_bit,
                    letter_name, letters_mask, mask_letters,
                    multiply, parse_letter, parse_word, reduce_word)


@dataclass(frozen=True)
class FirstKind:
    """Letter permutation with signs: generator i maps to perm[i-1] ** signs[i-1]."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        r = len(self.perm)
        if sorted(self.perm) != list(range(1, r + 1)) or len(self.signs) != r \
                or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"invalid first-kind automorphism {self.perm} {self.signs}")

    def image(self, x: int) -> Word:
        g = abs(x)
        if g > len(self.perm):
            return (x,)
        y = self.perm[g - 1] * self.signs[g - 1]
        return (y,) if x > 0 else (-y,)

    def __str__(self) -> str:
        r = len(self.perm)
        p = ",".join(f"{letter_name(i + 1, r)}->{letter_name(self.perm[i], r)}" for i in range(r))
        s = ",".join("+" if x > 0 else "-" for x in self.signs)
        return f"perm: {p}; signs: {s}"


@dataclass(frozen=True)
class SecondKind:
    """The automorphism given by a letter v and a v-cut Y (a bitset over letters).

    Every letter a other than v, v^-1 maps to v^g a v^r with g = -1 iff
    a^-1 is in Y and r = 1 iff a is in Y; v is fixed.
    """

    v: int
    Y: int

    def __post_init__(self):
        if not self.Y & letter_bit(self.v) or self.Y & letter_bit(-self.v):
            raise ValueError("Y must contain v and avoid v^-1")

    @classmethod
    def from_letters(cls, v: int, Y) -> "SecondKind":
        return cls(v, letters_mask(Y))

    @property
    def cut(self) -> frozenset[int]:
        return frozenset(mask_letters(self.Y))

    def is_identity(self) -> bool:
        return self.Y == letter_bit(self.v)

    def image(self, x: int) -> Word:
        v = self.v
        if x == v or x == -v:
            return (x,)
        out = []
        if self.Y & letter_bit(-x):
            out.append(-v)
        out.append(x)
        if self.Y & letter_bit(x):
            out.append(v)
        return tuple(out)

    def inverse(self) -> "SecondKind":
        return SecondKind(-self.v, (self.Y & ~letter_bit(self.v)) | letter_bit(-self.v))

    def __str__(self) -> str:
        rank = max(abs(x) for x in mask_letters(self.Y))
        rank = max(rank, abs(self.v))
        ys = ",".join(letter_name(x, rank if rank > 26 else None) for x in mask_letters(self.Y))
        return f"({letter_name(self.v, rank if rank > 26 else None)} | {ys})"


WhiteheadAut = Union[FirstKind, SecondKind]


class Images:
    """An endomorphism given by the images of the positive generators.

    Letters without an entry are fixed.  Used for test fixtures and for
    composing short traces; traces themselves never store these.
    """

    def __init__(self, images: Mapping[int, Sequence[int]]):
        self.images = {a: reduce_word(w) for a, w in images.items()}

    def image(self, x: int) -> Word:
        if x > 0:
            return self.images.get(x, (x,))
        w = self.images.get(-x, (-x,))
        return tuple(-c for c in reversed(w))


def apply_to_letter(phi, a: int) -> Word:
    return phi.image(a)


def apply_to_word(phi, u: Sequence[int]) -> Word:
    out: list[int] = []
    for x in u:
        for c in phi.image(x):
            if out and out[-1] == -c:
                out.pop()
            else:
                out.append(c)
    return tuple(out)


def subdivide(phi, g: AGraph) -> AGraph:
    """Replace every a-labelled edge by a path labelled phi(a)."""
    n = g.vertex_count
    edges = []
    for x, a, y in g.edges:
        w = phi.image(a)
        if not w:
            raise ValueError(f"letter {a} has trivial image")
        prev = x
        for i, c in enumerate(w):
            if i == len(w) - 1:
                nxt = y
            else:
                nxt = n
                n += 1
            edges.append((prev, c, nxt))
            prev = nxt
    return AGraph(n, tuple(edges), g.rank)


def apply_bullet(phi, p: PointedAGraph) -> PointedAGraph:
    """Subdivide, fold, then trim every endpoint except the base."""
    h, m = fold(subdivide(phi, p.graph))
    q, _ = trim_pointed(h, m[p.base])
    return q


def apply_to_pointed_graph(phi, p: PointedAGraph) -> PointedAGraph:
    return apply_bullet(phi, p)


def apply_to_cyclic_graph(phi, g: AGraph) -> AGraph:
    h, _ = fold(subdivide(phi, g))
    core, _ = cyclic_core(h)
    return core


def enumerate_second_kind(alphabet: Alphabet | int) -> Iterator[SecondKind]:
    """Every non-identity second-kind automorphism, once each.

    Order: v runs over a, A, b, B, ...; for each v the free letters are
    toggled in binary counting order.
    """
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    letters = alphabet.letters()
    for v in letters:
        free = [x for x in letters if x not in (v, -v)]
        base = letter_bit(v)
        for k in range(1, 1 << len(free)):
            Y = base
            for i, x in enumerate(free):
                if k >> i & 1:
                    Y |= letter_bit(x)
            yield SecondKind(v, Y)


def count_second_kind(r: int) -> int:
    return 2 * r * (2 ** (2 * r - 2) - 1)


def enumerate_first_kind(alphabet: Alphabet | int) -> Iterator[FirstKind]:
    r = alphabet if isinstance(alphabet, int) else alphabet.rank
    for perm in itertools.permutations(range(1, r + 1)):
        for signs in itertools.product((1, -1), repeat=r):
            yield FirstKind(perm, signs)


# ---------------------------------------------------------------------------
# traces

@dataclass(frozen=True)
class AutStep:
    """One trace step: apply ``aut`` (if any), then conjugate by ``conjugator``.

    Conjugation by c is x -> c^-1 x c.
    """

    aut: WhiteheadAut | None = None
    conjugator: Word | None = None

    def apply_to_word(self, u: Sequence[int]) -> Word:
        if self.aut is not None:
            u = apply_to_word(self.aut, u)
        if self.conjugator:
            c = self.conjugator
            u = multiply(tuple(-x for x in reversed(c)), u, c)
        return tuple(u)

    def image(self, x: int) -> Word:
        return self.apply_to_word((x,))


@dataclass
class MinimizationTrace:
    steps: list[AutStep]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def automorphism_count(self) -> int:
        return sum(1 for s in self.steps if s.aut is not None)

    def apply_to_word(self, u: Sequence[int]) -> Word:
        u = tuple(u)
        for s in self.steps:
            u = s.apply_to_word(u)
        return u

    def apply_to_words(self, words: Sequence[Sequence[int]]) -> list[Word]:
        return [self.apply_to_word(w) for w in words]

    def to_json(self, rank: int | None = None) -> list[dict]:
        return [step_to_json(s, rank) for s in self.steps]

    @classmethod
    def from_json(cls, data: list[dict]) -> "MinimizationTrace":
        return cls([step_from_json(d) for d in data])

    def dumps(self, rank: int | None = None) -> str:
        return json.dumps(self.to_json(rank))


def compose(trace: MinimizationTrace, rank: int, limit: int = 10_000) -> Images:
    """Images of the generators under the whole trace.

    Image lengths can grow exponentially with the number of steps; raises
    OverflowError once any image exceeds ``limit`` letters.
    """
    images = {a: (a,) for a in range(1, rank + 1)}
    for step in trace:
        images = {a: step.apply_to_word(w) for a, w in images.items()}
        if any(len(w) > limit for w in images.values()):
            raise OverflowError("composed images exceed the length limit")
    return Images(images)


def aut_to_text(phi: WhiteheadAut, rank: int | None = None) -> str:
    if isinstance(phi, SecondKind) and rank is not None:
        ys = ",".join(letter_name(x, rank) for x in mask_letters(phi.Y))
        return f"({letter_name(phi.v, rank)} | {ys})"
    return str(phi)


_SECOND = re.compile(r"^\(\s*(\S+)\s*\|\s*([^)]*)\)$")
_FIRST = re.compile(r"^perm:\s*(.*?);\s*signs:\s*(.*)$")


def parse_aut(text: str) -> WhiteheadAut:
    """Parse ``(a | a,b,C,D)`` or ``perm: a->b,b->a; signs: +,-``."""
    text = text.strip()
    m = _SECOND.match(text)
    if m:
        v = parse_letter(m.group(1))
        ys = [parse_letter(t.strip()) for t in m.group(2).split(",") if t.strip()]
        return SecondKind.from_letters(v, ys)
    m = _FIRST.match(text)
    if m:
        pairs = [t.strip() for t in m.group(1).split(",") if t.strip()]
        mapping = {}
        for pr in pairs:
            src, dst = (s.strip() for s in pr.split("->"))
            mapping[parse_letter(src)] = parse_letter(dst)
        r = len(mapping)
        perm = tuple(mapping[i] for i in range(1, r + 1))
        signs = tuple(1 if s.strip() == "+" else -1 for s in m.group(2).split(","))
        return FirstKind(perm, signs)
    raise WordError(f"cannot parse automorphism {text!r}")


def step_to_json(step: AutStep, rank: int | None = None) -> dict:
    d: dict = {"aut": None if step.aut is None else aut_to_text(step.aut, rank)}
    if step.conjugator is not None:
        d["conjugator"] = format_word(step.conjugator, rank)
    return d


def step_from_json(d: dict) -> AutStep:
    aut = None if d.get("aut") is None else parse_aut(d["aut"])
    conj = d.get("conjugator")
    return AutStep(aut, None if conj is None else parse_word(conj))
