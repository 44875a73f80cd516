import random
import re
from itertools import permutations

import pytest

from canonvec.core.errors import DegreeMismatchError
from canonvec.core.parser import (
    ParseError,
    format_group_text,
    format_vector,
    parse_group_text,
    parse_permutation,
    parse_vector,
)
from canonvec.core.permutation import (
    Permutation,
    act,
    check_vector,
    compose,
    from_cycles,
    identity,
    inverse,
    pullback_getter,
)


def all_perms(n):
    return [Permutation(p) for p in permutations(range(n))]


def test_parse_and_render_cycles():
    p = parse_permutation("(1,2,3)(4,5)", 5)
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1,2,3)(4,5)"
    assert str(identity(4)) == "()"
    assert parse_permutation("()", 3) == identity(3)
    assert parse_permutation(" ( 2 , 3 ) ", 3).images == (0, 2, 1)


def test_cycles_start_at_smallest_point():
    p = from_cycles(5, [[4, 2, 3]])
    assert p.cycles() == [(2, 3, 4)]
    assert str(p) == "(3,4,5)"
    assert parse_permutation("(1,2,3)(4,5)", 6).cycle_type() == (3, 2, 1)


def test_compose_applies_right_factor_first():
    p = parse_permutation("(1,2,3)", 3)
    q = parse_permutation("(1,2)", 3)
    assert compose(p, q).images == (2, 1, 0)
    assert (p * q) == compose(p, q)
    assert compose(p, inverse(p)).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(2), identity(3))


def test_action_moves_entries_forward():
    p = parse_permutation("(1,2,3)", 3)
    assert act(p, (1, 0, 0)) == (0, 1, 0)
    assert act(p, (2, 1, 0)) == (0, 2, 1)


def test_action_is_a_left_action():
    v = (3, 1, 0, 2)
    for p in all_perms(4)[::5]:
        for q in all_perms(4)[::7]:
            assert act(p, act(q, v)) == act(compose(p, q), v)


def test_pullback_is_inverse_action():
    w = (5, 4, 0, 2, 1)
    for p in all_perms(5)[::11]:
        assert pullback_getter(p)(w) == act(p.inverse(), w)
    assert pullback_getter(identity(1))((7,)) == (7,)


def test_invalid_permutation_and_vector():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    with pytest.raises(ValueError):
        check_vector((1, -1))
    with pytest.raises(DegreeMismatchError):
        act(identity(3), (1, 2))


@pytest.mark.parametrize("text, message", [
    ("(1,4)", "out of range"),
    ("(1,2)(2,3)", "repeated"),
    ("1,2", "Unexpected character '1'"),
    ("", "empty permutation"),
    ("(1,2", "Expected ')' or ','"),
    ("(1,)", "Expected a point"),
])
def test_cycle_parse_errors(text, message):
    with pytest.raises(ParseError, match=re.escape(message)):
        parse_permutation(text, 3)


def test_parse_vector():
    assert parse_vector("2, 1,0") == (2, 1, 0)
    assert format_vector((2, 1, 0)) == "2,1,0"
    with pytest.raises(ParseError, match="entry 2"):
        parse_vector("2,x")
    with pytest.raises(ParseError, match="expected 3"):
        parse_vector("1,2", 3)
    with pytest.raises(ParseError):
        parse_vector("1,-2")


def test_group_file_text():
    text = "# cyclic group of order 3\ndegree 3\n(1,2,3)\n\n(1,2)\n"
    n, gens = parse_group_text(text)
    assert n == 3
    assert [str(g) for g in gens] == ["(1,2,3)", "(1,2)"]
    assert parse_group_text(format_group_text(n, gens)) == (n, gens)


def test_group_file_errors_name_the_line():
    with pytest.raises(ParseError, match="line 1"):
        parse_group_text("deg 3\n(1,2)\n")
    with pytest.raises(ParseError, match="line 3: point '4'"):
        parse_group_text("degree 3\n(1,2)\n(1,4)\n")
    with pytest.raises(ParseError, match="missing"):
        parse_group_text("# nothing\n")


def test_non_ascii_digits_are_parse_errors():
    with pytest.raises(ParseError, match="entry 2"):
        parse_vector("1,²,0")
    with pytest.raises(ParseError, match="Expected a point"):
        parse_permutation("(1,²)", 3)
    with pytest.raises(ParseError, match="line 1"):
        parse_group_text("degree ²\n(1,2)\n")
    with pytest.raises(ParseError, match="entry 1"):
        parse_vector("٣,0")


def test_action_agrees_with_composition_on_random_triples():
    rng = random.Random(20240611)
    for _ in range(1200):
        n = rng.randint(1, 8)
        p = Permutation(tuple(rng.sample(range(n), n)))
        q = Permutation(tuple(rng.sample(range(n), n)))
        v = tuple(rng.randint(0, 4) for _ in range(n))
        assert act(p, act(q, v)) == act(compose(p, q), v)
        assert pullback_getter(p)(act(p, v)) == v
