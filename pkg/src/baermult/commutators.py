"""Commutator trees over an ordered alphabet and the Hall family of basic commutators.

Letters are ``x1, x2, ...`` ordered by index. Trees are immutable; the Hall
order compares weight first, then letter index for letters and ``(left,
right)`` lexicographically for brackets. ``[x, y, z]`` always means
``[[x, y], z]``.

>>> [str(c) for c in generate_basic(2, 1, 3)]
['x1', 'x2', '[x2,x1]', '[[x2,x1],x1]', '[[x2,x1],x2]']
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Union

from . import kernels

if TYPE_CHECKING:
    from .groups import GroupSpec

__all__ = [
    "BasicCommutator",
    "all_commutators",
    "Commutator",
    "Letter",
    "Node",
    "basic_layers",
    "compare",
    "generate_basic",
    "generators_in",
    "is_basic",
    "letter",
    "bracket",
    "max_torsion_index",
    "parse_commutator",
    "weight",
]


@dataclass(frozen=True)
class Letter:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")

    @property
    def weight(self) -> int:
        return 1

    @cached_property
    def sort_key(self) -> tuple:
        return (1, self.index)

    def __str__(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class Node:
    left: "Commutator"
    right: "Commutator"
    weight: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", self.left.weight + self.right.weight)

    @cached_property
    def sort_key(self) -> tuple:
        return (self.weight, self.left.sort_key, self.right.sort_key)

    def __str__(self) -> str:
        return f"[{self.left},{self.right}]"


Commutator = Union[Letter, Node]
# A basic commutator is a tree for which is_basic() holds.
BasicCommutator = Commutator


def letter(i: int) -> Letter:
    return Letter(i)


def bracket(*terms: Commutator) -> Commutator:
    """Left-normed bracket: bracket(a, b, c) == [[a, b], c]."""
    if len(terms) < 2:
        raise ValueError("a bracket needs at least two terms")
    out = terms[0]
    for t in terms[1:]:
        out = Node(out, t)
    return out


def weight(c: Commutator) -> int:
    return c.weight


def compare(a: Commutator, b: Commutator) -> int:
    """Three-way Hall-order comparison: -1, 0 or 1."""
    ka, kb = a.sort_key, b.sort_key
    return (ka > kb) - (ka < kb)


def is_basic(c: Commutator) -> bool:
    if isinstance(c, Letter):
        return True
    b, a = c.left, c.right
    if not (is_basic(b) and is_basic(a)):
        return False
    if compare(b, a) <= 0:
        return False
    return isinstance(b, Letter) or compare(b.right, a) <= 0


def generators_in(c: Commutator) -> frozenset[int]:
    if isinstance(c, Letter):
        return frozenset((c.index,))
    return generators_in(c.left) | generators_in(c.right)


def max_torsion_index(c: Commutator, spec: "GroupSpec") -> int | None:
    """Largest j such that x_{m+j} occurs in ``c``; None if only free letters occur."""
    top = max(generators_in(c))
    if top > spec.m + spec.t:
        raise ValueError(f"{c} uses x{top}, outside the alphabet of {spec}")
    return top - spec.m if top > spec.m else None


_TOKEN = re.compile(r"\s*(\[|\]|,|x\d+)")


def parse_commutator(text: str) -> Commutator:
    """Parse ``"[[x2,x1],x2]"`` or the left-normed ``"[x2,x1,x2]"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse commutator {text!r} at offset {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)
    it = iter(tokens)
    cur = [next(it)]

    def parse():
        tok = cur[0]
        if tok is None:
            raise ValueError(f"unexpected end of {text!r}")
        cur[0] = next(it)
        if tok.startswith("x"):
            return Letter(int(tok[1:]))
        if tok != "[":
            raise ValueError(f"unexpected {tok!r} in {text!r}")
        terms = [parse()]
        while cur[0] == ",":
            cur[0] = next(it)
            terms.append(parse())
        if cur[0] != "]":
            raise ValueError(f"missing ']' in {text!r}")
        cur[0] = next(it)
        return bracket(*terms)

    out = parse()
    if cur[0] is not None:
        raise ValueError(f"trailing input in {text!r}")
    return out


class BasicLayers:
    """Position-indexed Hall family on ``alphabet_size`` letters up to ``max_weight``.

    Positions follow the Hall order. ``left``/``right`` hold child positions
    (-1 for letters), ``weight`` the weights, and ``bounds[w]`` the position
    range of weight ``w``.
    """

    def __init__(self, alphabet_size: int, max_weight: int):
        if alphabet_size < 1:
            raise ValueError(f"alphabet_size must be >= 1, got {alphabet_size}")
        if max_weight < 1:
            raise ValueError(f"max_weight must be >= 1, got {max_weight}")
        self.alphabet_size = alphabet_size
        self.max_weight = max_weight
        self.left = [-1] * alphabet_size
        self.right = [-1] * alphabet_size
        self.weight = [1] * alphabet_size
        starts = [0, 0]
        ends = [0, alphabet_size]
        for w in range(2, max_weight + 1):
            lefts, rights = kernels.extend_layer(self.weight, self.right, starts, ends, w)
            starts.append(len(self.weight))
            self.left.extend(lefts)
            self.right.extend(rights)
            self.weight.extend([w] * len(lefts))
            ends.append(len(self.weight))
        self.bounds = {w: (starts[w], ends[w]) for w in range(1, max_weight + 1)}
        self._trees: list[Commutator] | None = None

    def __len__(self) -> int:
        return len(self.weight)

    def span(self, lo: int, hi: int) -> tuple[int, int]:
        """Position range covering weights lo..hi (clipped to what was built)."""
        lo = max(lo, 1)
        hi = min(hi, self.max_weight)
        if lo > hi:
            return (0, 0)
        return (self.bounds[lo][0], self.bounds[hi][1])

    @property
    def trees(self) -> list[Commutator]:
        if self._trees is None:
            out: list[Commutator] = []
            for p in range(len(self)):
                if self.left[p] < 0:
                    out.append(Letter(p + 1))
                else:
                    out.append(Node(out[self.left[p]], out[self.right[p]]))
            self._trees = out
        return self._trees

    def letters_mask(self) -> list[int]:
        """Bitmask of letters occurring in each position (bit i-1 for x_i)."""
        mask = [0] * len(self)
        for p in range(len(self)):
            if self.left[p] < 0:
                mask[p] = 1 << p
            else:
                mask[p] = mask[self.left[p]] | mask[self.right[p]]
        return mask


def basic_layers(alphabet_size: int, max_weight: int) -> BasicLayers:
    return BasicLayers(alphabet_size, max_weight)


def generate_basic(alphabet_size: int, min_weight: int, max_weight: int) -> list[Commutator]:
    """All basic commutators with weight in [min_weight, max_weight], in Hall order."""
    if min_weight > max_weight:
        raise ValueError(f"min_weight {min_weight} > max_weight {max_weight}")
    layers = BasicLayers(alphabet_size, max_weight)
    lo, hi = layers.span(min_weight, max_weight)
    return layers.trees[lo:hi]


def all_commutators(alphabet_size: int, weight: int) -> list[Commutator]:
    """Every bracketing of ``weight`` letters drawn from x_1..x_alphabet_size."""
    if weight == 1:
        return [Letter(i) for i in range(1, alphabet_size + 1)]
    out: list[Commutator] = []
    for k in range(1, weight):
        for left in all_commutators(alphabet_size, k):
            for right in all_commutators(alphabet_size, weight - k):
                out.append(Node(left, right))
    return out


def sort_hall(items: Iterable[Commutator]) -> list[Commutator]:
    return sorted(items, key=lambda c: c.sort_key)
