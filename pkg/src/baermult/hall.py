"""Free nilpotent groups of bounded class in Hall-basis coordinates.

Every element of F/gamma_{cap+1}(F), F free on ``d`` letters, is written
uniquely as ``b_1^e_1 b_2^e_2 ... b_N^e_N`` over the basic commutators of
weight <= cap taken in Hall order. Products are brought back to that form by
collection from the left, driven by a memoised table of conjugates
``b_k^(b_i^s)`` (k > i, s = +-1). Commutators are ``[a, b] = a^-1 b^-1 a b``.

>>> B = build_basis(2, 2)
>>> x1, x2 = B.generator(1), B.generator(2)
>>> (x2 * x1).exponents
{0: 1, 1: 1, 2: 1}
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .arith import witt_chi
from .commutators import Commutator, Letter, basic_layers, generators_in
from .groups import Check, GroupSpec, HypothesisError

__all__ = [
    "BasisMismatchError",
    "GroupElement",
    "HallBasis",
    "ResourceLimitError",
    "build_basis",
    "commutator",
    "evaluate",
    "inverse",
    "multiply",
    "power",
    "reduce_mod_torsion",
    "struik_order_check",
    "verify_hall_ranks",
]

MAX_BASIS = 5000
MAX_CAP = 6
MAX_ALPHABET = 4


class ResourceLimitError(RuntimeError):
    pass


class BasisMismatchError(ValueError):
    pass


class HallBasis:
    """Hall basis of the free nilpotent group of class ``class_cap``.

    Holds the basic commutators, their weights and children, and the
    conjugation table used by collection. The table fills lazily; every
    entry is a pure function of the basis, so concurrent fills only ever
    write identical values.
    """

    def __init__(
        self,
        alphabet_size: int,
        class_cap: int,
        max_size: int = MAX_BASIS,
        max_cap: int = MAX_CAP,
        max_alphabet: int = MAX_ALPHABET,
    ):
        if class_cap < 1:
            raise ValueError(f"class_cap must be >= 1, got {class_cap}")
        if alphabet_size < 1:
            raise ValueError(f"alphabet_size must be >= 1, got {alphabet_size}")
        if class_cap > max_cap:
            raise ResourceLimitError(f"class cap {class_cap} exceeds guard {max_cap}")
        if alphabet_size > max_alphabet:
            raise ResourceLimitError(f"alphabet {alphabet_size} exceeds guard {max_alphabet}")
        size = sum(witt_chi(w, alphabet_size) for w in range(1, class_cap + 1))
        if size > max_size:
            raise ResourceLimitError(
                f"Hall basis for d={alphabet_size}, cap={class_cap} has {size} elements "
                f"(guard {max_size})"
            )
        layers = basic_layers(alphabet_size, class_cap)
        self.alphabet_size = alphabet_size
        self.class_cap = class_cap
        self.elements: list[Commutator] = layers.trees
        self.weights: list[int] = layers.weight
        self.left: list[int] = layers.left
        self.right: list[int] = layers.right
        self.bounds = layers.bounds
        self._pair = {(l, r): p for p, (l, r) in enumerate(zip(self.left, self.right)) if l >= 0}
        self._index = {c: p for p, c in enumerate(self.elements)}
        self._conj: dict[tuple[int, int, int], tuple[tuple[int, int], ...]] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"HallBasis(alphabet_size={self.alphabet_size}, class_cap={self.class_cap})"

    def position(self, c: Commutator) -> int:
        try:
            return self._index[c]
        except KeyError:
            raise KeyError(f"{c} is not in {self!r}") from None

    # -- element constructors --

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self))

    def element(self, exponents: dict[int, int] | Iterable[tuple[Commutator, int]]) -> "GroupElement":
        """Element with the given normal-form exponents (by position or by commutator)."""
        exps = [0] * len(self)
        items = exponents.items() if isinstance(exponents, dict) else exponents
        for key, e in items:
            p = key if isinstance(key, int) else self.position(key)
            exps[p] += e
        return GroupElement(self, tuple(exps))

    def generator(self, i: int) -> "GroupElement":
        if not 1 <= i <= self.alphabet_size:
            raise ValueError(f"generator x{i} outside alphabet of size {self.alphabet_size}")
        return self.element({i - 1: 1})

    def basis_element(self, c: Commutator) -> "GroupElement":
        return self.element({self.position(c): 1})

    def word(self, letters: Sequence[int]) -> "GroupElement":
        """Product of generators; ``-i`` stands for x_i^-1."""
        exps = [0] * len(self)
        self._collect(exps, [(abs(i) - 1, 1 if i > 0 else -1) for i in letters])
        return GroupElement(self, tuple(exps))

    # -- collection --

    def _collect(self, exps: list[int], word: Iterable[tuple[int, int]]) -> None:
        """Multiply the normal form ``exps`` in place by the letter powers in ``word``."""
        w = self.weights
        cap = self.class_cap
        n = len(exps)
        stack = list(word)
        stack.reverse()
        while stack:
            i, e = stack.pop()
            if e == 0:
                continue
            wi = w[i]
            tail = [k for k in range(i + 1, n) if exps[k]]
            if all(w[k] + wi > cap for k in tail):
                exps[i] += e
                continue
            s = 1 if e > 0 else -1
            moved = [(k, exps[k]) for k in tail]
            for k in tail:
                exps[k] = 0
            exps[i] += s
            if e != s:
                stack.append((i, e - s))
            for k, ek in reversed(moved):
                if w[k] + wi > cap:
                    stack.append((k, ek))
                    continue
                conj = self._conjugate(k, i, s)
                if ek == 1:
                    part = conj
                else:
                    part = self._power_word(conj, ek)
                for item in reversed(part):
                    stack.append(item)

    def _power_word(self, word: tuple[tuple[int, int], ...], k: int) -> tuple[tuple[int, int], ...]:
        exps = [0] * len(self)
        self._collect(exps, word)
        return _sparse(self._pow(exps, k))

    def _mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        exps = list(a)
        self._collect(exps, _sparse(b))
        return exps

    def _inv(self, a: Sequence[int]) -> list[int]:
        exps = [0] * len(self)
        self._collect(exps, [(p, -e) for p, e in reversed(_sparse(a))])
        return exps

    def _pow(self, a: Sequence[int], k: int) -> list[int]:
        if k < 0:
            a, k = self._inv(a), -k
        out = [0] * len(self)
        base = list(a)
        while k:
            if k & 1:
                out = self._mul(out, base)
            k >>= 1
            if k:
                base = self._mul(base, base)
        return out

    def _comm(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        exps = self._inv(a)
        self._collect(exps, [(p, -e) for p, e in reversed(_sparse(b))])
        self._collect(exps, _sparse(a))
        self._collect(exps, _sparse(b))
        return exps

    def _conjugate(self, k: int, i: int, s: int) -> tuple[tuple[int, int], ...]:
        """Normal form of b_i^-s b_k b_i^s for k > i, as sparse (position, exponent) pairs."""
        key = (k, i, s)
        hit = self._conj.get(key)
        if hit is not None:
            return hit
        if self.weights[k] + self.weights[i] > self.class_cap:
            out = ((k, 1),)
        elif self.left[k] < 0 or self.right[k] <= i:
            # [b_k, b_i] is itself basic
            p = self._pair[(k, i)]
            if s == 1:
                out = ((k, 1), (p, 1))
            else:
                # b_k^(b_i^-1) = b_k * (b_p^(b_i^-1))^-1, and that tail lives above k
                tail = self._unit_word(p, i, -1)
                out = ((k, 1),) + _sparse(self._inv(tail))
        else:
            # conjugation is an automorphism: [u1, u2]^g = [u1^g, u2^g]
            u1, u2 = self.left[k], self.right[k]
            out = _sparse(self._comm(self._unit_word(u1, i, s), self._unit_word(u2, i, s)))
        self._conj[key] = out
        return out

    def _unit_word(self, k: int, i: int, s: int) -> list[int]:
        exps = [0] * len(self)
        for p, e in self._conjugate(k, i, s):
            exps[p] += e
        return exps

    def structure_table(self) -> dict[tuple[int, int], "GroupElement"]:
        """Normal forms of [b_k, b_i] for every k > i (fills the whole table)."""
        out = {}
        for k in range(len(self)):
            for i in range(k):
                c = self._unit_word(k, i, 1)
                c[k] -= 1
                out[(k, i)] = GroupElement(self, tuple(c))
        return out


def _sparse(exps: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple((p, e) for p, e in enumerate(exps) if e)


class GroupElement:
    """Immutable element of a free nilpotent group, stored as Hall exponents."""

    __slots__ = ("basis", "_exps")

    def __init__(self, basis: HallBasis, exps: tuple[int, ...]):
        self.basis = basis
        self._exps = exps

    @property
    def exponents(self) -> dict[int, int]:
        return {p: e for p, e in enumerate(self._exps) if e}

    @property
    def vector(self) -> tuple[int, ...]:
        return self._exps

    def labelled(self) -> dict[str, int]:
        return {str(self.basis.elements[p]): e for p, e in self.exponents.items()}

    def is_identity(self) -> bool:
        return not any(self._exps)

    def _check(self, other: "GroupElement") -> None:
        if other.basis is not self.basis:
            raise BasisMismatchError(f"{self.basis!r} vs {other.basis!r}")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.basis, tuple(self.basis._mul(self._exps, other._exps)))

    def __invert__(self) -> "GroupElement":
        return GroupElement(self.basis, tuple(self.basis._inv(self._exps)))

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.basis, tuple(self.basis._pow(self._exps, k)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.basis is other.basis and self._exps == other._exps

    def __hash__(self) -> int:
        return hash(self._exps)

    def __repr__(self) -> str:
        if self.is_identity():
            return "GroupElement(1)"
        body = " ".join(f"{c}^{e}" for c, e in self.labelled().items())
        return f"GroupElement({body})"


def build_basis(alphabet_size: int, class_cap: int, **guards) -> HallBasis:
    return HallBasis(alphabet_size, class_cap, **guards)


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def inverse(a: GroupElement) -> GroupElement:
    return ~a


def power(a: GroupElement, k: int) -> GroupElement:
    return a**k


def commutator(a: GroupElement, b: GroupElement) -> GroupElement:
    """[a, b] = a^-1 b^-1 a b."""
    a._check(b)
    return GroupElement(a.basis, tuple(a.basis._comm(a._exps, b._exps)))


def evaluate(c: Commutator, basis: HallBasis) -> GroupElement:
    """Value of an arbitrary commutator expression over the generators."""
    if c.weight > basis.class_cap:
        raise ResourceLimitError(f"{c} has weight {c.weight} > class cap {basis.class_cap}")
    if isinstance(c, Letter):
        return basis.generator(c.index)
    return commutator(evaluate(c.left, basis), evaluate(c.right, basis))


def verify_hall_ranks(
    alphabet_size: int, class_cap: int, samples: int = 200, seed: int = 0, **guards
) -> bool:
    """Sampled associativity and inverse round-trips plus Witt counts per weight."""
    basis = build_basis(alphabet_size, class_cap, **guards)
    for w in range(1, class_cap + 1):
        lo, hi = basis.bounds[w]
        if hi - lo != witt_chi(w, alphabet_size):
            return False
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (random_element(basis, rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            return False
        if not (a * ~a).is_identity() or not (~a * a).is_identity():
            return False
    return True


def random_element(basis: HallBasis, rng: random.Random, spread: int = 3) -> GroupElement:
    return GroupElement(basis, tuple(rng.randint(-spread, spread) for _ in range(len(basis))))


# -- torsion quotient --


def torsion_hypotheses(spec: GroupSpec, basis: HallBasis) -> list[Check]:
    checks = [
        spec.chain_check(),
        spec.coprime_check(basis.class_cap, "coprime_upto_class_cap"),
    ]
    if spec.rank != basis.alphabet_size:
        checks.append(
            Check("alphabet", False, f"basis has {basis.alphabet_size} letters, group has {spec.rank}")
        )
    return checks


def reduce_mod_torsion(e: GroupElement, spec: GroupSpec) -> GroupElement:
    """Reduce each coordinate involving a torsion letter into [0, r_j).

    ``j`` is the largest torsion index among the letters of that basic
    commutator; coordinates on free letters only are left untouched.
    """
    basis = e.basis
    checks = torsion_hypotheses(spec, basis)
    if any(not c.passed for c in checks):
        raise HypothesisError(checks)
    out = list(e.vector)
    for p, c in enumerate(basis.elements):
        if out[p]:
            top = max(generators_in(c))
            if top > spec.m:
                out[p] %= spec.r(top - spec.m)
    return GroupElement(basis, tuple(out))


class OrderCheck:
    """Outcome of a Struik-type order check; truthy when the check holds."""

    def __init__(self, holds: bool, order: int, note: str = ""):
        self.holds = holds
        self.order = order
        self.note = note

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        return f"OrderCheck(holds={self.holds}, order={self.order}, note={self.note!r})"


def struik_order_check(u: Commutator, spec: GroupSpec, basis: HallBasis | None = None) -> OrderCheck:
    """Check u^N == 1 modulo torsion, N the gcd of the orders of the letters in u.

    A free letter makes N infinite and the check does not apply.
    """
    from math import gcd

    if basis is None:
        basis = build_basis(spec.rank, max(u.weight, 1))
    letters = generators_in(u)
    if any(i > spec.rank for i in letters):
        raise ValueError(f"{u} uses letters outside {spec}")
    if any(i <= spec.m for i in letters):
        return OrderCheck(True, 0, "not applicable: a free generator occurs")
    order = 0
    for i in letters:
        order = gcd(order, spec.order_of(i))
    value = evaluate(u, basis)
    reduced = reduce_mod_torsion(value**order, spec)
    return OrderCheck(reduced.is_identity(), order)

