"""[N_c1, N_c2]-capability of nilpotent products of cyclic groups.

The verdict is one-sided: a group is reported ``Capable`` only when one of
the known sufficient clauses fires, and ``Unknown`` otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .commutators import Letter, bracket
from .groups import Check, GroupSpec, HypothesisError, failed
from .hall import build_basis, commutator, evaluate, reduce_mod_torsion

__all__ = [
    "CapabilityVerdict",
    "SubgroupDescriptor",
    "c_center_descriptor",
    "capability_hypotheses",
    "is_capable",
    "power_absorption_check",
    "quotient_parameters",
    "verbal_center_descriptor",
]

BASE = "gamma_{n+1}(H)"


@dataclass(frozen=True)
class SubgroupDescriptor:
    """<gamma_{n+1}(H), extra generators>, keyed on how many free factors H has."""

    n: int
    case: str
    extra_generators: tuple[tuple[str, int], ...] = ()
    note: str = ""

    @property
    def base(self) -> str:
        return BASE.replace("n+1", str(self.n + 1))

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "extra_generators": [{"generator": g, "exponent": str(e)} for g, e in self.extra_generators],
            "case": self.case,
            "note": self.note,
        }

    def __str__(self) -> str:
        gens = [self.base] + [f"{g}^{e}" for g, e in self.extra_generators]
        return gens[0] if len(gens) == 1 else "<" + ", ".join(gens) + ">"


@dataclass(frozen=True)
class CapabilityVerdict:
    verdict: str  # "Capable" or "Unknown"
    witness: str

    @property
    def capable(self) -> bool:
        return self.verdict == "Capable"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness}


def _center_hypotheses(spec_H: GroupSpec, c: int) -> list[Check]:
    checks = [
        spec_H.chain_check(),
        Check("degree_exceeds_c", spec_H.n > c, f"degree {spec_H.n} must exceed c={c}"),
        spec_H.coprime_check(spec_H.n, "coprime_below_c_plus_n", strict=True),
    ]
    return checks


def c_center_descriptor(spec_H: GroupSpec, c: int) -> SubgroupDescriptor:
    """Z_c(H) for H the (c+n)-th nilpotent product; ``spec_H.n`` is c+n."""
    checks = _center_hypotheses(spec_H, c)
    if failed(checks):
        raise HypothesisError(checks)
    n = spec_H.n - c
    if spec_H.m >= 2:
        return SubgroupDescriptor(n, "m>=2")
    if spec_H.m == 1:
        # y_1 is the lone infinite cyclic generator; with no torsion r_1 reads as 1
        r1 = spec_H.torsion[0] if spec_H.t else 1
        return SubgroupDescriptor(n, "m=1", (("y1", r1),), "y1 denotes the infinite cyclic generator x1")
    # a one-factor chain has r_2 = 1, giving H itself
    r2 = spec_H.torsion[1] if spec_H.t >= 2 else 1
    return SubgroupDescriptor(n, "m=0", (("x1", r2),))


def verbal_center_descriptor(spec_H: GroupSpec, c1: int, c2: int) -> SubgroupDescriptor:
    """Marginal subgroup V*(H) for V = [N_c1, N_c2]; same case split with c = c1+c2+1."""
    return c_center_descriptor(spec_H, c1 + c2 + 1)


def capability_hypotheses(spec: GroupSpec, c1: int, c2: int) -> list[Check]:
    c = c1 + c2 + 1
    return [
        spec.chain_check(),
        spec.coprime_check(c + spec.n, "coprime_below_c_plus_n", strict=True),
        spec.coprime_check(c1 + c2 + spec.n, "coprime_upto_c1_c2_n"),
    ]


def is_capable(spec: GroupSpec, c1: int, c2: int) -> CapabilityVerdict:
    checks = capability_hypotheses(spec, c1, c2)
    if failed(checks):
        raise HypothesisError(checks)
    if spec.m >= 2:
        return CapabilityVerdict("Capable", "m>=2")
    if spec.m == 0 and spec.t >= 2 and spec.torsion[0] == spec.torsion[1]:
        return CapabilityVerdict("Capable", "m=0 and r_1=r_2")
    return CapabilityVerdict("Unknown", "no sufficient clause applies")


def quotient_parameters(spec: GroupSpec, c1: int, c2: int) -> GroupSpec:
    """Parameters of H / gamma_{n+1}(H) where H is G's factors at degree c+n."""
    c = c1 + c2 + 1
    H = spec.with_degree(c + spec.n)
    desc = verbal_center_descriptor(H, c1, c2)
    return GroupSpec(H.m, H.torsion, desc.n)


def power_absorption_check(
    spec: GroupSpec, c1: int, c2: int, samples: int | None = None
) -> bool:
    """[x_1^{r_2}, h_1, ..., h_c1, [h'_1, ..., h'_{c2+1}]] is trivial modulo torsion.

    ``spec`` describes G (degree n); the word is evaluated in the free
    nilpotent group of class c1+c2+2 on G's letters with h, h' ranging over
    generators. The powered letter is the extra generator of V*(H) (x_1^{r_2}
    when m=0, y_1^{r_1} = x_1^{r_1} when m=1); with none the check is vacuous.
    ``samples=None`` runs every choice, otherwise the first
    ``samples`` choices in lexicographic order (0 is vacuously true).
    """
    checks = capability_hypotheses(spec, c1, c2)
    if failed(checks):
        raise HypothesisError(checks)
    desc = verbal_center_descriptor(spec.with_degree(c1 + c2 + 1 + spec.n), c1, c2)
    if not desc.extra_generators:
        return True
    _, exponent = desc.extra_generators[0]
    basis = build_basis(spec.rank, c1 + c2 + 2)
    head = basis.generator(1) ** exponent
    choices = itertools.product(range(1, spec.rank + 1), repeat=c1 + c2 + 1)
    if samples is not None:
        choices = itertools.islice(choices, samples)
    for choice in choices:
        hs, hps = choice[:c1], choice[c1:]
        value = head
        for h in hs:
            value = commutator(value, basis.generator(h))
        value = commutator(value, evaluate(bracket(*(Letter(i) for i in hps)), basis))
        if not reduce_mod_torsion(value, spec).is_identity():
            return False
    return True
