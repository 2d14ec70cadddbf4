import pytest

from hopfseq.perm import (
    PermParseError,
    compose,
    conjugate,
    cycle_string,
    identity,
    inverse,
    parse_cycles,
    perm_order,
)


def test_parse_basic():
    assert parse_cycles("(1 2 3)", 3) == (1, 2, 0)
    assert parse_cycles("(1 2 3)(4 5)", 5) == (1, 2, 0, 4, 3)
    assert parse_cycles("()", 4) == identity(4)
    assert parse_cycles("(1,2)", 2) == (1, 0)


def test_parse_errors():
    with pytest.raises(PermParseError):
        parse_cycles("(1 7)", 3)
    with pytest.raises(PermParseError):
        parse_cycles("(1 2)(2 3)", 3)
    with pytest.raises(PermParseError):
        parse_cycles("1 2 3", 3)


def test_cycle_string_round_trip():
    for text, n in [("(1 2 3)(4 5)", 6), ("(1 4)(2 5 3 6)", 6), ("()", 2)]:
        p = parse_cycles(text, n)
        assert parse_cycles(cycle_string(p), n) == p


def test_compose_applies_right_first():
    a = parse_cycles("(1 2)", 3)
    b = parse_cycles("(2 3)", 3)
    # (a*b)(2) = a(b(2)) = a(3) = 3
    assert compose(a, b)[1] == 2
    assert compose(a, b) == (1, 2, 0)


def test_inverse_and_conjugate():
    p = parse_cycles("(1 2 3 4)", 4)
    assert compose(p, inverse(p)) == identity(4)
    g = parse_cycles("(1 2)", 4)
    assert conjugate(g, p) == compose(compose(g, p), inverse(g))


def test_perm_order():
    assert perm_order(parse_cycles("(1 2 3)(4 5)", 5)) == 6
    assert perm_order(identity(5)) == 1
