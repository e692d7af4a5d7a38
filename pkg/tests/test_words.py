import itertools
import random

import pytest
from hypothesis import given, strategies as st

from whitehead.words import (Alphabet, CyclicWord, WordError, cyclic_core_word,
                             format_word, invert_word, is_cyclically_reduced,
                             is_reduced, multiply, parse_word, reduce_word)


def naive_reduce(u):
    """Delete any adjacent inverse pair until none is left."""
    u = list(u)
    changed = True
    while changed:
        changed = False
        for i in range(len(u) - 1):
            if u[i] == -u[i + 1]:
                del u[i:i + 2]
                changed = True
                break
    return tuple(u)


raw_words = st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), max_size=30)


def test_alphabet():
    A = Alphabet(3)
    assert A.letters() == [1, -1, 2, -2, 3, -3]
    assert len(A.letters()) == 6
    with pytest.raises(WordError):
        Alphabet(0)
    with pytest.raises(WordError):
        A.check(4)


@pytest.mark.parametrize("raw, expected", [
    ([1, -1], ()),
    ([1, 2, -2, -1], ()),
    ([1, 2, -1, 1, 2], (1, 2, 2)),
])
def test_reduce_examples(raw, expected):
    assert reduce_word(raw) == expected
    assert naive_reduce(raw) == expected


def test_reduce_rejects_out_of_range():
    with pytest.raises(WordError):
        reduce_word([1, 3], rank=2)
    with pytest.raises(WordError):
        reduce_word([0])


@given(raw_words)
def test_reduce_matches_naive_and_is_idempotent(raw):
    u = reduce_word(raw)
    assert u == naive_reduce(raw)
    assert reduce_word(u) == u
    assert len(u) <= len(raw)
    assert is_reduced(u)


@pytest.mark.parametrize("u, v, w", [
    ("abA", "a", "b"),
    ("ab", "1", "ab"),
    ("abcBA", "ab", "c"),
    ("1", "1", "1"),
])
def test_cyclic_core_word_examples(u, v, w):
    assert cyclic_core_word(parse_word(u)) == (parse_word(v), parse_word(w))


def all_reduced_words(rank, max_len):
    letters = [x for g in range(1, rank + 1) for x in (g, -g)]
    for n in range(max_len + 1):
        for t in itertools.product(letters, repeat=n):
            if is_reduced(t):
                yield t


def test_cyclic_core_exhaustive_rank2():
    for u in all_reduced_words(2, 8):
        v, w = cyclic_core_word(u)
        assert multiply(v, w, invert_word(v)) == u
        assert is_cyclically_reduced(w)
        # v is the shortest such prefix: stripping one more pair is impossible
        assert len(w) < 2 or w[0] != -w[-1]


def test_invert_word():
    assert invert_word(()) == ()
    assert invert_word(parse_word("ab")) == parse_word("BA")
    rng = random.Random(3)
    for _ in range(100):
        u = reduce_word(rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 20)))
        assert invert_word(invert_word(u)) == u


def test_cyclic_word_rotation_invariance():
    base = parse_word("aabAbc")
    forms = {CyclicWord.from_word(base[k:] + base[:k]) for k in range(len(base))}
    assert len(forms) == 1
    cw = forms.pop()
    assert is_cyclically_reduced(cw.letters)
    assert CyclicWord.from_word(parse_word("abA")) == CyclicWord.from_word(parse_word("b"))


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3]), min_size=1, max_size=12))
def test_cyclic_word_is_least_rotation(raw):
    from whitehead.words import letter_index
    cw = CyclicWord.from_word(raw)
    w = cw.letters
    rots = [w[k:] + w[:k] for k in range(len(w))] or [()]
    assert [letter_index(x) for x in w] == min([letter_index(x) for x in r] for r in rots)


def test_text_round_trip():
    assert parse_word("aaB") == (1, 1, -2)
    assert format_word((1, 1, -2)) == "aaB"
    assert format_word(()) == "1"
    assert parse_word("1") == ()
    assert parse_word("x27X3") == (27, -3)
    assert format_word((27, -3)) == "x27X3"
    assert format_word((1, -3), rank=30) == "x1X3"
    assert parse_word("aA") == ()
    with pytest.raises(WordError, match="not freely reduced"):
        parse_word("aA", strict=True)
    with pytest.raises(WordError, match="'3'"):
        parse_word("ab3")
    with pytest.raises(WordError):
        parse_word("abc", rank=2)
