"""Letters, reduced words and cyclic words over a finite-rank free basis.

A letter is a nonzero integer: ``i`` stands for the i-th generator and
``-i`` for its inverse.  A word is a tuple of letters.  Text rendering uses
``a..z`` for generators 1..26 and ``A..Z`` for their inverses; alphabets of
rank above 26 switch to indexed names ``x1 .. xN`` / ``X1 .. XN``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple[int, ...]

EMPTY: Word = ()

_TOKEN = re.compile(r"[xX]\d+|[a-zA-Z]")


class WordError(ValueError):
    """Raised on malformed letters or word text."""


@dataclass(frozen=True)
class Alphabet:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"rank must be >= 1, got {self.rank}")

    def positive(self) -> range:
        return range(1, self.rank + 1)

    def letters(self) -> list[int]:
        """All 2r letters in the fixed order a < A < b < B < ..."""
        out = []
        for i in self.positive():
            out += [i, -i]
        return out

    def check(self, x: int) -> int:
        if x == 0 or abs(x) > self.rank:
            raise WordError(f"letter {x} outside alphabet of rank {self.rank}")
        return x

    @property
    def full_mask(self) -> int:
        return (1 << (2 * self.rank)) - 1


def inverse(x: int) -> int:
    return -x


def letter_index(x: int) -> int:
    """Position of ``x`` in the order a < A < b < B < ... (0-based)."""
    return 2 * (abs(x) - 1) + (x < 0)


def letter_bit(x: int) -> int:
    return 1 << letter_index(x)


def letter_from_index(i: int) -> int:
    g = i // 2 + 1
    return -g if i % 2 else g


def mask_letters(mask: int) -> list[int]:
    """Letters whose bits are set in ``mask``, in alphabet order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(letter_from_index(i))
        mask >>= 1
        i += 1
    return out


def letters_mask(letters: Iterable[int]) -> int:
    m = 0
    for x in letters:
        m |= letter_bit(x)
    return m


def reduce_word(raw: Iterable[int], rank: int | None = None) -> Word:
    """Free reduction by a single stack pass."""
    stack: list[int] = []
    for x in raw:
        if x == 0 or (rank is not None and abs(x) > rank):
            raise WordError(f"letter {x} outside alphabet of rank {rank}")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def is_reduced(u: Sequence[int]) -> bool:
    return all(u[i] != -u[i + 1] for i in range(len(u) - 1))


def is_cyclically_reduced(u: Sequence[int]) -> bool:
    return is_reduced(u) and (len(u) < 2 or u[-1] != -u[0])


def invert_word(u: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(u))


def multiply(*words: Sequence[int]) -> Word:
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def conjugate(u: Sequence[int], c: Sequence[int]) -> Word:
    """The conjugation x -> c^-1 x c applied to ``u``."""
    return multiply(invert_word(c), u, c)


def cyclic_core_word(u: Sequence[int]) -> tuple[Word, Word]:
    """Split reduced ``u`` as v w v^-1 with w cyclically reduced; return (v, w)."""
    i, j = 0, len(u) - 1
    while i < j and u[i] == -u[j]:
        i += 1
        j -= 1
    return tuple(u[:i]), tuple(u[i:j + 1])


def _least_rotation(keys: list[int]) -> int:
    # two-pointer minimal rotation, O(n)
    n = len(keys)
    s = keys + keys
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a, b = s[i + k], s[j + k]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j)


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored in its least rotation.

    Build instances with :meth:`from_word`; the constructor assumes its
    argument is already canonical.
    """

    letters: Word

    @classmethod
    def from_word(cls, u: Iterable[int]) -> "CyclicWord":
        u = reduce_word(u)
        _, w = cyclic_core_word(u)
        if not w:
            return cls(EMPTY)
        k = _least_rotation([letter_index(x) for x in w])
        return cls(w[k:] + w[:k])

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)


# ---------------------------------------------------------------------------
# text syntax

def letter_name(x: int, rank: int | None = None) -> str:
    g = abs(x)
    if (rank is not None and rank > 26) or g > 26:
        return ("X" if x < 0 else "x") + str(g)
    c = chr(ord("a") + g - 1)
    return c.upper() if x < 0 else c


def format_word(u: Sequence[int], rank: int | None = None) -> str:
    if not u:
        return "1"
    if rank is None and max(abs(x) for x in u) > 26:
        rank = 27
    return "".join(letter_name(x, rank) for x in u)


def parse_letter(tok: str) -> int:
    if len(tok) > 1 and tok[0] in "xX" and tok[1:].isdigit():
        g = int(tok[1:])
        if g < 1:
            raise WordError(f"bad letter {tok!r}")
        return -g if tok[0] == "X" else g
    if len(tok) != 1 or not ("a" <= tok.lower() <= "z"):
        raise WordError(f"bad letter {tok!r}")
    g = ord(tok.lower()) - ord("a") + 1
    return -g if tok.isupper() else g


def parse_word(text: str, rank: int | None = None, strict: bool = False) -> Word:
    """Parse word text such as ``aaB`` or ``x1X27``; ``1`` is the empty word.

    Non-reduced input is freely reduced unless ``strict`` is set, in which
    case it is rejected.
    """
    text = text.strip()
    if text == "1":
        return EMPTY
    letters = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            raise WordError(f"unexpected token {text[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        x = parse_letter(m.group())
        if rank is not None and abs(x) > rank:
            raise WordError(f"letter {m.group()!r} outside alphabet of rank {rank}")
        letters.append(x)
    if pos != len(text):
        raise WordError(f"unexpected token {text[pos:]!r} in {text!r}")
    u = reduce_word(letters)
    if strict and len(u) != len(letters):
        raise WordError(f"word {text!r} is not freely reduced")
    return u


def word_rank(words: Iterable[Sequence[int]]) -> int:
    """Smallest rank covering every letter (at least 1)."""
    return max((abs(x) for w in words for x in w), default=1)
