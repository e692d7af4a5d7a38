import json
import random

import pytest
from hypothesis import given, strategies as st

from whitehead.agraph import (PointedAGraph, extract_basis, pointed_normal_form,
                              stallings_graph)
from whitehead.automorphisms import (AutStep, FirstKind, Images, MinimizationTrace,
                                     SecondKind, apply_bullet, apply_to_cyclic_graph,
                                     apply_to_letter, apply_to_pointed_graph,
                                     apply_to_word, aut_to_text, compose,
                                     count_second_kind, enumerate_first_kind,
                                     enumerate_second_kind, parse_aut)
from whitehead.harness import random_generators, random_vcut
from whitehead.words import WordError, letters_mask, reduce_word

from conftest import w


def sk(v, letters):
    return SecondKind.from_letters(w(v)[0], w(letters))


def test_letter_images():
    phi = sk("a", "ab")
    assert apply_to_letter(phi, w("b")[0]) == w("ba")
    assert apply_to_letter(phi, w("c")[0]) == w("c")
    assert apply_to_letter(phi, w("B")[0]) == w("AB")
    assert apply_to_letter(phi, 1) == (1,)
    assert apply_to_letter(phi, -1) == (-1,)


def test_second_kind_validation():
    with pytest.raises(ValueError):
        sk("a", "b")
    with pytest.raises(ValueError):
        sk("a", "aA")
    assert sk("a", "a").is_identity()
    assert not sk("a", "ab").is_identity()


def test_word_images():
    assert apply_to_word(sk("a", "aB"), w("ab")) == w("b")
    assert apply_to_word(sk("a", "a"), w("abcBA")) == w("abcBA")
    swap = FirstKind((2, 1), (1, 1))
    assert apply_to_word(swap, w("ab")) == w("ba")
    assert apply_to_word(FirstKind((1, 2), (-1, 1)), w("ab")) == w("Ab")


def test_inverse_is_inverse():
    rng = random.Random(2)
    for _ in range(200):
        v, Y = random_vcut(rng, 3)
        phi = SecondKind(v, Y)
        u = reduce_word(rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 15)))
        assert apply_to_word(phi.inverse(), apply_to_word(phi, u)) == u
        assert apply_to_word(phi, apply_to_word(phi.inverse(), u)) == u


def test_non_whitehead_map_on_gamma1(gamma1):
    phi = Images({1: w("bA"), 2: w("baB")})
    bullet = apply_bullet(phi, PointedAGraph(gamma1, 0))
    assert bullet.size == 5
    assert apply_to_cyclic_graph(phi, gamma1).vertex_count == 4


def test_two_cuts_on_six_vertex_graph(six_vertex_graph):
    assert apply_to_cyclic_graph(sk("a", "abCD"), six_vertex_graph).vertex_count == 5
    assert apply_to_cyclic_graph(sk("a", "aBC"), six_vertex_graph).vertex_count == 7


def test_identity_on_pointed_graph(gamma2):
    out = apply_to_pointed_graph(sk("b", "b"), gamma2)
    assert pointed_normal_form(out) == pointed_normal_form(gamma2)


@pytest.mark.parametrize("r, count", [(1, 0), (2, 12), (3, 90), (4, 504), (5, 2550)])
def test_second_kind_count(r, count):
    auts = list(enumerate_second_kind(r))
    assert len(auts) == count == count_second_kind(r)
    assert count == r * (2 ** (2 * r - 1) - 2)
    assert len({(a.v, a.Y) for a in auts}) == count
    assert not any(a.is_identity() for a in auts)


def test_first_kind_enumeration_and_length():
    auts = list(enumerate_first_kind(3))
    assert len(auts) == 48
    rng = random.Random(4)
    for phi in auts:
        u = reduce_word(rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(12))
        assert len(apply_to_word(phi, u)) == len(u)


@given(st.integers(0, 2 ** 16))
def test_letter_image_length_at_most_three(seed):
    rng = random.Random(seed)
    v, Y = random_vcut(rng, 4)
    phi = SecondKind(v, Y)
    for a in (1, -1, 2, -2, 3, -3, 4, -4):
        assert len(apply_to_letter(phi, a)) <= 3


def test_pointed_action_matches_word_action():
    rng = random.Random(8)
    for _ in range(100):
        p = stallings_graph(random_generators(rng, 3, rng.randint(1, 3), 7), 3)
        phi = SecondKind(*random_vcut(rng, 3))
        via_graph = apply_to_pointed_graph(phi, p)
        via_words = stallings_graph([apply_to_word(phi, b) for b in extract_basis(p)], 3)
        assert pointed_normal_form(via_graph) == pointed_normal_form(via_words)
        back = apply_to_pointed_graph(phi.inverse(), via_graph)
        assert pointed_normal_form(back) == pointed_normal_form(p)


def test_text_forms():
    phi = sk("a", "abCD")
    assert str(phi) == "(a | a,b,C,D)"
    assert parse_aut("(a | a,b,C,D)") == phi
    assert parse_aut(" ( a | a , b ) ") == sk("a", "ab")
    swap = FirstKind((2, 1), (1, -1))
    assert str(swap) == "perm: a->b,b->a; signs: +,-"
    assert parse_aut(str(swap)) == swap
    assert aut_to_text(SecondKind(30, letters_mask([30, -1])), 30) == "(x30 | X1,x30)"
    with pytest.raises(WordError):
        parse_aut("a | b")


def test_trace_json_round_trip():
    trace = MinimizationTrace([AutStep(None, w("ab")), AutStep(sk("a", "aB")),
                               AutStep(sk("b", "bA"), w("b"))])
    data = json.loads(trace.dumps())
    assert data[0] == {"aut": None, "conjugator": "ab"}
    assert data[1] == {"aut": "(a | a,B)"}
    assert MinimizationTrace.from_json(data) == trace
    assert trace.automorphism_count == 2


def test_aut_step_conjugates():
    # x -> c^-1 x c
    assert AutStep(None, w("a")).apply_to_word(w("abA")) == w("b")
    assert AutStep(sk("a", "aB"), None).apply_to_word(w("ab")) == w("b")


def test_compose_matches_sequential_application():
    rng = random.Random(9)
    for _ in range(50):
        steps = [AutStep(SecondKind(*random_vcut(rng, 2))) for _ in range(3)]
        trace = MinimizationTrace(steps)
        total = compose(trace, 2)
        u = reduce_word(rng.choice([1, -1, 2, -2]) for _ in range(8))
        assert apply_to_word(total, u) == trace.apply_to_word(u)


def test_compose_overflow_guard():
    step = AutStep(sk("a", "ab"))
    with pytest.raises(OverflowError):
        compose(MinimizationTrace([step] * 50), 2, limit=20)
