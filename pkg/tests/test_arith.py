import pytest
from hypothesis import given, strategies as st

from baermult.arith import divisors, mobius, prime_factors, primes_upto, witt_chi, witt_sum

from brute_force import basic, trees


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(4) == 0
    assert mobius(6) == 1
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_mobius_rejects_zero():
    with pytest.raises(ValueError):
        mobius(0)


@given(st.integers(1, 400))
def test_mobius_sums_to_zero_over_divisors(n):
    assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_primes_and_factors():
    assert primes_upto(10) == [2, 3, 5, 7]
    assert prime_factors(360) == [2, 2, 2, 3, 3, 5]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


@pytest.mark.parametrize(
    "w,d,expected",
    [(2, 2, 1), (6, 2, 9), (5, 3, 48), (1, 7, 7), (4, 3, 18), (4, 4, 60), (5, 4, 204)],
)
def test_witt_chi_values(w, d, expected):
    assert witt_chi(w, d) == expected


def test_witt_chi_matches_tree_enumeration():
    # every bracketing filtered by the basic test, independent of the library
    for d in (1, 2, 3):
        for w in range(1, 6):
            assert witt_chi(w, d) == len([t for t in trees(w, list(range(1, d + 1))) if basic(t)])


def test_witt_chi_degenerate_alphabets():
    assert all(witt_chi(w, 0) == 0 for w in range(1, 12))
    assert witt_chi(1, 1) == 1
    assert all(witt_chi(w, 1) == 0 for w in range(2, 12))


def test_witt_chi_bigint():
    assert witt_chi(50, 3) == sum(
        mobius(e) * 3 ** (50 // e) for e in divisors(50)
    ) // 50
    assert witt_chi(50, 3) > 2**63


@given(st.integers(1, 12), st.integers(0, 6))
def test_witt_chi_monotone_in_alphabet(w, d):
    assert witt_chi(w, d) <= witt_chi(w, d + 1)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(0, 20))
def test_prime_weight_necklace_identity(p, d):
    assert p * witt_chi(p, d) == d**p - d


@given(st.integers(1, 10), st.integers(0, 5))
def test_full_necklace_identity(w, d):
    assert sum(e * witt_chi(e, d) for e in divisors(w)) == d**w


def test_witt_sum():
    assert witt_sum(2, 4, 5) == 9
    assert witt_sum(3, 4, 5) == 66
    assert witt_sum(7, 5, 4) == 0
