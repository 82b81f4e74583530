"""Sanity checks on the oracles themselves, so they are not trusted blindly."""

from baermult.commutators import parse_commutator
from baermult.oracles import (
    MagnusSeries,
    expand,
    free_reduce,
    magnus_commutator,
    magnus_of_tree,
    magnus_of_word,
    naive_collect,
)


def test_free_reduce():
    assert free_reduce([1, -1, 2, 3, -3, -2, 1]) == [1]
    assert free_reduce([]) == []


def test_expand_uses_a_inv_b_inv_a_b():
    assert expand(parse_commutator("[x2,x1]")) == [-2, -1, 2, 1]


def test_magnus_inverse_and_commutator():
    cap = 4
    x, y = MagnusSeries.generator(1, cap), MagnusSeries.generator(2, cap)
    assert x * x.inverse() == MagnusSeries.one(cap)
    assert MagnusSeries.generator(1, cap, -1) == x.inverse()
    c = magnus_commutator(y, x)
    # degree-two part of [y, x] is YX - XY
    assert c.terms[(2, 1)] == 1 and c.terms[(1, 2)] == -1
    assert magnus_of_tree(parse_commutator("[x2,x1]"), cap) == c
    assert magnus_of_word([-2, -1, 2, 1], cap) == c
    assert x**3 == x * x * x


def test_naive_collect_examples():
    assert naive_collect([2, 1], 2) == {parse_commutator("x1"): 1, parse_commutator("x2"): 1,
                                        parse_commutator("[x2,x1]"): 1}
    got = naive_collect([2, 2, 1], 3)
    assert got[parse_commutator("[x2,x1]")] == 2
    assert got[parse_commutator("[[x2,x1],x2]")] == 1
