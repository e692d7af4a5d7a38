"""Primitivity and free-factor tests built on the minimizer."""

from __future__ import annotations

from typing import Sequence

from .automorphisms import MinimizationTrace
from .minimizer import minimize_subgroup, minimize_word
from .words import reduce_word


def is_primitive(u: Sequence[int], rank: int | None = None) -> tuple[bool, MinimizationTrace]:
    """True iff the orbit of ``u`` contains a letter; the trace maps u to it."""
    u = reduce_word(u)
    if not u:
        raise ValueError("the empty word is not primitive")
    res = minimize_word(u, rank)
    return res.size == 1, res.trace


def is_free_factor(gens: Sequence[Sequence[int]],
                   rank: int | None = None) -> tuple[bool, MinimizationTrace]:
    """True iff the subgroup's orbit contains a one-vertex graph.

    The trivial subgroup counts as a free factor.
    """
    res = minimize_subgroup(gens, rank)
    return res.size == 1, res.trace
