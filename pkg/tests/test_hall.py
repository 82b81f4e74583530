import random

import pytest
from hypothesis import given, settings, strategies as st

from baermult import GroupSpec, HypothesisError
from baermult.arith import witt_chi
from baermult.commutators import Letter, all_commutators, bracket, parse_commutator
from baermult.hall import (
    BasisMismatchError,
    ResourceLimitError,
    build_basis,
    commutator,
    evaluate,
    inverse,
    multiply,
    power,
    random_element,
    reduce_mod_torsion,
    struik_order_check,
    verify_hall_ranks,
)
from baermult.oracles import expand, free_reduce, magnus_of_normal_form, magnus_of_tree, magnus_of_word

P = parse_commutator


def labelled(e):
    return e.labelled()


def test_build_basis_examples():
    assert [str(c) for c in build_basis(2, 2).elements] == ["x1", "x2", "[x2,x1]"]
    assert len(build_basis(2, 3)) == 5
    assert [str(c) for c in build_basis(1, 4).elements] == ["x1"]


def test_x2_x1_collects_with_a_commutator():
    b = build_basis(2, 2)
    prod = multiply(b.generator(2), b.generator(1))
    assert labelled(prod) == {"x1": 1, "x2": 1, "[x2,x1]": 1}
    # the same identity as plain words: x2 x1 == x1 x2 [x2,x1]
    assert free_reduce([2, 1]) == free_reduce([1, 2] + expand(P("[x2,x1]")))


def test_small_products():
    b = build_basis(2, 2)
    x1 = b.generator(1)
    assert multiply(x1, b.identity()) == x1
    assert labelled(x1 * x1) == {"x1": 2}
    assert inverse(b.identity()) == b.identity()
    assert labelled(power(x1, 3)) == {"x1": 3}
    assert labelled(power(b.basis_element(P("[x2,x1]")), -2)) == {"[x2,x1]": -2}


def test_commutator_convention():
    b = build_basis(2, 2)
    x1, x2 = b.generator(1), b.generator(2)
    assert commutator(x1, x1).is_identity()
    assert labelled(commutator(x2, x1)) == {"[x2,x1]": 1}
    assert labelled(commutator(x1, x2)) == {"[x2,x1]": -1}


@pytest.mark.parametrize("r", range(2, 7))
def test_power_commutator_against_magnus(r):
    cap = 3
    b = build_basis(2, cap)
    value = commutator(power(b.generator(1), r), b.generator(2))
    word = [-1] * r + [-2] + [1] * r + [2]
    assert magnus_of_normal_form(b.elements, value.vector, cap) == magnus_of_word(word, cap)
    assert value.labelled()["[x2,x1]"] == -r
    # weight-3 coordinates are integer combinations of r and C(r,2)
    w3 = [value.vector[p] for p in range(*b.bounds[3])]
    assert w3 == [-(r * (r - 1) // 2), 0]


def test_structure_table_against_magnus():
    b = build_basis(2, 4)
    table = b.structure_table()
    for (k, i), value in table.items():
        lhs = magnus_of_normal_form(b.elements, value.vector, 4)
        rhs = magnus_of_tree(bracket(b.elements[k], b.elements[i]), 4)
        assert lhs == rhs, (b.elements[k], b.elements[i])


def test_evaluate_basic_is_a_coordinate(basis_3_3):
    for c in basis_3_3.elements:
        assert evaluate(c, basis_3_3) == basis_3_3.basis_element(c)


@pytest.mark.parametrize("d,cap", [(2, 4), (3, 3), (1, 5)])
def test_verify_hall_ranks(d, cap):
    assert verify_hall_ranks(d, cap)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds, st.sampled_from([(2, 4), (3, 3), (3, 4)]))
def test_group_axioms(seed, shape):
    b = build_basis(*shape)
    rng = random.Random(seed)
    a, c, e = (random_element(b, rng) for _ in range(3))
    assert (a * c) * e == a * (c * e)
    assert (a * inverse(a)).is_identity() and (inverse(a) * a).is_identity()
    assert commutator(a, c) == inverse(commutator(c, a))
    assert power(a, 3) == a * a * a
    assert power(a, -2) == inverse(a * a)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_truncation_coherence(seed):
    hi, lo = build_basis(2, 4), build_basis(2, 3)
    rng = random.Random(seed)
    a, c = (random_element(lo, rng) for _ in range(2))
    lift = lambda e: hi.element(dict(enumerate(e.vector)))  # noqa: E731
    n = len(lo)
    assert (lift(a) * lift(c)).vector[:n] == (a * c).vector
    assert commutator(lift(a), lift(c)).vector[:n] == commutator(a, c).vector


@settings(max_examples=80, deadline=None)
@given(st.lists(st.sampled_from([1, 2, -1, -2]), max_size=10))
def test_words_against_magnus(word):
    b = build_basis(2, 4)
    assert magnus_of_normal_form(b.elements, b.word(word).vector, 4) == magnus_of_word(word, 4)


def test_section_is_free_abelian_of_witt_rank():
    # products of elements of gamma_n add their coordinates modulo gamma_{n+i}
    rng = random.Random(7)
    for n in range(1, 5):
        for i in range(1, n + 1):
            cap = n + i - 1
            if cap > 4:
                continue
            b = build_basis(2, cap)
            lo = b.bounds[n][0]
            assert len(b) - lo == sum(witt_chi(w, 2) for w in range(n, cap + 1))
            for _ in range(20):
                u = [0] * lo + [rng.randint(-4, 4) for _ in range(len(b) - lo)]
                v = [0] * lo + [rng.randint(-4, 4) for _ in range(len(b) - lo)]
                got = b.element(dict(enumerate(u))) * b.element(dict(enumerate(v)))
                assert got.vector == tuple(x + y for x, y in zip(u, v))


def test_basis_mismatch():
    with pytest.raises(BasisMismatchError):
        build_basis(2, 3).generator(1) * build_basis(2, 2).generator(1)


def test_resource_guards():
    with pytest.raises(ResourceLimitError):
        build_basis(2, 7)
    with pytest.raises(ResourceLimitError):
        build_basis(5, 2)
    with pytest.raises(ResourceLimitError):
        build_basis(4, 6, max_size=900)
    assert len(build_basis(4, 6)) == 964
    assert len(build_basis(2, 7, max_cap=7)) == sum(witt_chi(w, 2) for w in range(1, 8))
    with pytest.raises(ValueError):
        build_basis(2, 0)


def test_reduce_mod_torsion():
    spec = GroupSpec(2, (11,), 1)
    b = build_basis(3, 2)
    e = b.element([(P("[x3,x1]"), 14), (P("[x2,x1]"), 14), (Letter(1), -5)])
    assert reduce_mod_torsion(e, spec).labelled() == {"x1": -5, "[x2,x1]": 14, "[x3,x1]": 3}
    assert reduce_mod_torsion(b.generator(3) ** 11, spec).is_identity()


def test_reduce_mod_torsion_refuses_outside_hypotheses():
    b = build_basis(3, 2)
    with pytest.raises(HypothesisError):
        reduce_mod_torsion(b.identity(), GroupSpec(2, (2,), 1))  # prime 2 <= cap
    with pytest.raises(HypothesisError):
        reduce_mod_torsion(b.identity(), GroupSpec(1, (5, 3), 1))  # chain broken
    with pytest.raises(HypothesisError):
        reduce_mod_torsion(b.identity(), GroupSpec(1, (5,), 1))  # alphabet mismatch


def test_struik_examples():
    spec = GroupSpec(0, (25, 5), 1)
    check = struik_order_check(P("[x2,x1]"), spec)
    assert check and check.order == 5
    assert struik_order_check(P("[x1,x1]"), spec)
    free = struik_order_check(P("[x2,x1]"), GroupSpec(1, (25,), 1))
    assert free and "not applicable" in free.note
    # a single letter of order 25 still needs the 25th power
    assert struik_order_check(Letter(1), spec).order == 25


def test_struik_exhaustive_small():
    spec = GroupSpec(0, (25, 5), 1)
    b = build_basis(2, 4)
    for w in range(2, 5):
        for u in all_commutators(2, w):
            assert struik_order_check(u, spec, b)
