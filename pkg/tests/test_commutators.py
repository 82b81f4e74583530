import itertools

import pytest
from hypothesis import given, settings, strategies as st

from baermult import GroupSpec
from baermult.arith import witt_chi
from baermult.commutators import (
    Letter,
    all_commutators,
    bracket,
    compare,
    generate_basic,
    generators_in,
    is_basic,
    max_torsion_index,
    parse_commutator,
    sort_hall,
    weight,
)

import brute_force

x1, x2, x3, x4 = (Letter(i) for i in range(1, 5))
P = parse_commutator


def test_weight():
    assert weight(x1) == 1
    assert weight(bracket(x2, x1)) == 2
    assert weight(P("[[x2,x1],x2]")) == 3


def test_compare_examples():
    assert compare(x1, x2) == -1
    assert compare(x2, bracket(x2, x1)) == -1
    assert compare(P("[[x2,x1],x1]"), P("[[x2,x1],x2]")) == -1
    assert compare(x2, x2) == 0


def test_is_basic_examples():
    assert is_basic(bracket(x2, x1))
    assert not is_basic(bracket(x1, x2))
    assert is_basic(P("[[x2,x1],x2]"))
    assert not is_basic(bracket(x1, x1))
    # b2 = x2 exceeds a = x1
    assert not is_basic(P("[[x3,x2],x1]"))


def test_generate_examples():
    assert [str(c) for c in generate_basic(2, 1, 2)] == ["x1", "x2", "[x2,x1]"]
    assert [str(c) for c in generate_basic(2, 3, 3)] == ["[[x2,x1],x1]", "[[x2,x1],x2]"]
    assert generate_basic(1, 2, 5) == []
    with pytest.raises(ValueError):
        generate_basic(2, 3, 2)


def test_generators_in_and_torsion_index():
    assert generators_in(x1) == {1}
    assert generators_in(P("[[x3,x1],x3]")) == {1, 3}
    assert generators_in(bracket(x2, x1)) == {1, 2}
    assert max_torsion_index(bracket(x2, x1), GroupSpec(2, (11,))) is None
    assert max_torsion_index(bracket(x3, x1), GroupSpec(2, (11,))) == 1
    assert max_torsion_index(bracket(x4, x3), GroupSpec(2, (6, 3))) == 2
    with pytest.raises(ValueError):
        max_torsion_index(x4, GroupSpec(2, (11,)))


@pytest.mark.parametrize("d", [1, 2, 3])
def test_counts_match_witt(d):
    for w in range(1, 11):
        assert len(generate_basic(d, w, w)) == witt_chi(w, d)


@pytest.mark.parametrize("d,top", [(2, 6), (3, 5), (4, 4)])
def test_generated_list_is_basic_and_sorted(d, top):
    items = generate_basic(d, 1, top)
    assert all(is_basic(c) for c in items)
    assert items == sort_hall(items)
    assert len(set(items)) == len(items)


def test_matches_filter_of_all_trees():
    # the inductive construction against "build every tree, keep the basic ones"
    for d in (2, 3):
        for w in range(1, 6):
            mine = [str(c) for c in generate_basic(d, w, w)]
            theirs = [t for t in brute_force.trees(w, list(range(1, d + 1))) if brute_force.basic(t)]
            theirs.sort(key=brute_force.key)
            assert mine == [_render(t) for t in theirs]
            assert mine == [str(c) for c in sort_hall(c for c in all_commutators(d, w) if is_basic(c))]


def _render(t):
    return f"x{t}" if isinstance(t, int) else f"[{_render(t[0])},{_render(t[1])}]"


def test_closed_under_inductive_rule():
    items = set(generate_basic(3, 1, 5))
    for c in items:
        if not isinstance(c, Letter):
            assert c.left in items and c.right in items


def test_compare_is_strict_total_order():
    items = generate_basic(2, 1, 5)
    for a, b in itertools.product(items, repeat=2):
        assert compare(a, b) == -compare(b, a)
        assert (compare(a, b) == 0) == (a == b)
    for a, b, c in itertools.product(items[:12], repeat=3):
        if compare(a, b) < 0 and compare(b, c) < 0:
            assert compare(a, c) < 0


trees = st.recursive(
    st.integers(1, 4).map(Letter),
    lambda kids: st.tuples(kids, kids).map(lambda p: bracket(*p)),
    max_leaves=7,
)


@settings(max_examples=200)
@given(trees)
def test_render_parse_round_trip(c):
    assert parse_commutator(str(c)) == c
    assert weight(c) == str(c).count("x")


@given(trees)
def test_is_basic_agrees_with_brute_force(c):
    def tup(t):
        return t.index if isinstance(t, Letter) else (tup(t.left), tup(t.right))

    assert is_basic(c) == brute_force.basic(tup(c))


def test_left_normed_parse():
    assert P("[x2,x1,x2]") == P("[[x2,x1],x2]")
    for bad in ("", "[x1", "[x1,x2]]", "y1", "[x0,x1]"):
        with pytest.raises(ValueError):
            P(bad)
