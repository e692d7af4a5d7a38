import random

import pytest

from whitehead.agraph import AGraph
from whitehead.graphio import (GraphFileError, normalize_graph_text, parse_graph_file,
                               parse_tuple_file, to_dot, write_graph_file)
from whitehead.harness import random_cyclically_reduced_graph
from whitehead.words import letter_name

GAMMA1 = """\
# the three-vertex graph
agraph 3 2 1
1 a 2
1 b 3
2 a 3
3 b 2
"""


def test_gamma1_round_trip(gamma1):
    f = parse_graph_file(GAMMA1)
    assert f.graph == gamma1
    assert f.base == 0
    text = write_graph_file(f.graph, f.base)
    assert text == normalize_graph_text(GAMMA1)
    assert parse_graph_file(text).graph == gamma1
    assert write_graph_file(parse_graph_file(text).graph, 0) == text


def test_inverse_letters_are_flipped():
    f = parse_graph_file("agraph 2 2\n2 A 1\n1 b 1\n")
    assert f.graph.edges == ((0, 1, 1), (0, 2, 0))
    assert f.base is None


@pytest.mark.parametrize("text, needle", [
    ("agraph 2 2\n1 c 2\n", "line 2: letter 'c' exceeds rank 2"),
    ("agraph 2 2\n1 a 3\n", "line 2: dangling vertex id 3"),
    ("agraph 2 2\n1 a 2\n# x\n2 A 1\n", "line 4: duplicate edge"),
    ("agraph 2 2\n1 ? 2\n", "line 2: bad letter"),
    ("agraph 2 2\n1 ab 2\n", "line 2: bad letter"),
    ("agraph 2\n", "line 1"),
    ("1 a 2\n", "before 'agraph'"),
    ("agraph 2 2 5\n", "base 5"),
    ("", "exactly one"),
])
def test_errors_name_the_line(text, needle):
    with pytest.raises(GraphFileError, match=needle):
        parse_graph_file(text)


def noisy_text(rng, g, base):
    lines = ["# generated", f"agraph {g.vertex_count} {g.rank}" + (f" {base + 1}" if base is not None else "")]
    for x, a, y in g.edges:
        if rng.random() < 0.5:
            x, a, y = y, -a, x
        lines.append(f"  {x + 1}   {letter_name(a, g.rank)} {y + 1}   # edge")
        if rng.random() < 0.2:
            lines.append("")
    return "\n".join(lines) + "\n"


def test_generated_corpus_round_trip():
    rng = random.Random(1)
    for _ in range(50):
        g = random_cyclically_reduced_graph(rng, rng.randint(1, 4), 12)
        base = rng.choice([None, 0])
        text = noisy_text(rng, g, base)
        f = parse_graph_file(text)
        assert f.graph == g
        assert write_graph_file(f.graph, f.base) == normalize_graph_text(text)
        assert normalize_graph_text(normalize_graph_text(text)) == normalize_graph_text(text)


def test_high_rank_letters():
    g = AGraph(1, ((0, 30, 0),), 30)
    text = write_graph_file(g)
    assert "1 x30 1" in text
    assert parse_graph_file(text).graph == g


def test_tuple_file():
    gs = parse_tuple_file("cyclic ab\nagraph 1 2\n1 a 1\n1 b 1\ncyclic aa\n")
    assert [g.vertex_count for g in gs] == [2, 1, 2]
    with pytest.raises(GraphFileError):
        parse_tuple_file("# nothing\n")
    with pytest.raises(GraphFileError, match="line 1"):
        parse_tuple_file("cyclic a1\n")


def test_dot_draws_positive_edges(gamma1):
    dot = to_dot(gamma1, 0)
    assert dot.count("->") == 4
    assert "1 [shape=doublecircle]" in dot
    assert '3 -> 2 [label="b"]' in dot
