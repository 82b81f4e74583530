"""Independent routes to free-nilpotent normal forms, used to audit ``hall``.

None of this shares code with the collection engine:

* ``MagnusSeries`` embeds the free group into truncated non-commutative
  power series, x_i -> 1 + X_i. Truncating at degree ``cap`` is faithful
  on F/gamma_{cap+1}(F), so two elements are equal iff their images agree.
* ``naive_collect`` runs Hall's original collection process on a positive
  word: repeatedly pull the least uncollected letter left, rewriting
  ``b c -> c b [b, c]`` and dropping letters of weight > cap.
* ``free_reduce``/``expand`` reduce words in the free group itself.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .commutators import Commutator, Letter, Node, is_basic

__all__ = [
    "MagnusSeries",
    "expand",
    "free_reduce",
    "magnus_commutator",
    "magnus_of_normal_form",
    "magnus_of_tree",
    "magnus_of_word",
    "naive_collect",
]


class MagnusSeries:
    """Element of Z<<X_1..X_d>> modulo words longer than ``cap``."""

    __slots__ = ("cap", "terms")

    def __init__(self, cap: int, terms: dict[tuple[int, ...], int] | None = None):
        self.cap = cap
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, cap: int) -> "MagnusSeries":
        return cls(cap, {(): 1})

    @classmethod
    def generator(cls, i: int, cap: int, sign: int = 1) -> "MagnusSeries":
        if sign > 0:
            return cls(cap, {(): 1, (i,): 1})
        # (1 + X)^-1 = sum (-X)^k
        return cls(cap, {(i,) * k: (-1) ** k for k in range(cap + 1)})

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        out: Counter = Counter()
        for u, a in self.terms.items():
            room = self.cap - len(u)
            for v, b in other.terms.items():
                if len(v) <= room:
                    out[u + v] += a * b
        return MagnusSeries(self.cap, out)

    def __sub__(self, other: "MagnusSeries") -> "MagnusSeries":
        out = Counter(self.terms)
        out.subtract(other.terms)
        return MagnusSeries(self.cap, out)

    def inverse(self) -> "MagnusSeries":
        if self.terms.get((), 0) != 1:
            raise ValueError("only series with constant term 1 are inverted here")
        nil = self - MagnusSeries.one(self.cap)
        neg = MagnusSeries(self.cap, {w: -c for w, c in nil.terms.items()})
        out = MagnusSeries.one(self.cap)
        term = MagnusSeries.one(self.cap)
        for _ in range(self.cap):
            term = term * neg
            out = MagnusSeries(self.cap, _add(out.terms, term.terms))
        return out

    def __pow__(self, k: int) -> "MagnusSeries":
        base = self if k >= 0 else self.inverse()
        out = MagnusSeries.one(self.cap)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, MagnusSeries) and self.cap == other.cap and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MagnusSeries(cap={self.cap}, terms={len(self.terms)})"


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, 0) + c
    return out


def magnus_commutator(a: MagnusSeries, b: MagnusSeries) -> MagnusSeries:
    return a.inverse() * b.inverse() * a * b


def magnus_of_tree(c: Commutator, cap: int, _memo: dict | None = None) -> MagnusSeries:
    memo = {} if _memo is None else _memo
    key = (c, cap)
    if key not in memo:
        if isinstance(c, Letter):
            memo[key] = MagnusSeries.generator(c.index, cap)
        else:
            memo[key] = magnus_commutator(
                magnus_of_tree(c.left, cap, memo), magnus_of_tree(c.right, cap, memo)
            )
    return memo[key]


def magnus_of_word(letters: Sequence[int], cap: int) -> MagnusSeries:
    out = MagnusSeries.one(cap)
    for i in letters:
        out = out * MagnusSeries.generator(abs(i), cap, 1 if i > 0 else -1)
    return out


def magnus_of_normal_form(trees: Sequence[Commutator], exponents: Sequence[int], cap: int) -> MagnusSeries:
    """Image of prod trees[p]^exponents[p] taken in list order."""
    memo: dict = {}
    out = MagnusSeries.one(cap)
    for c, e in zip(trees, exponents):
        if e:
            out = out * magnus_of_tree(c, cap, memo) ** e
    return out


def naive_collect(letters: Iterable[int], cap: int) -> Counter:
    """Hall's collection process on a positive word in x_1, x_2, ...

    Returns a Counter mapping basic commutators to exponents. Raises
    AssertionError if a non-basic letter ever appears, which Hall's theorem
    rules out.
    """
    letters = list(letters)
    if any(i < 1 for i in letters):
        raise ValueError("naive collection handles positive words only")
    word: list[Commutator] = [Letter(i) for i in letters]
    done = 0
    while done < len(word):
        least = min(range(done, len(word)), key=lambda p: word[p].sort_key)
        c = word[least]
        pos = least
        while pos > done:
            b = word[pos - 1]
            new = Node(b, c)
            if not is_basic(new):
                raise AssertionError(f"collection produced non-basic {new}")
            # b c -> c b [b, c]
            repl = [c, b] + ([new] if new.weight <= cap else [])
            word[pos - 1 : pos + 1] = repl
            pos -= 1
        done += 1
    return Counter(word)


def free_reduce(word: Iterable[int]) -> list[int]:
    """Freely reduce a word; ``-i`` is the inverse of letter ``i``."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def expand(c: Commutator) -> list[int]:
    """Free-group word of a commutator tree with [a, b] = a^-1 b^-1 a b."""
    if isinstance(c, Letter):
        return [c.index]
    a, b = expand(c.left), expand(c.right)
    inv = lambda w: [-x for x in reversed(w)]
    return free_reduce(inv(a) + inv(b) + a + b)
