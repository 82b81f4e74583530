"""Outer commutator multiplier [N_c1, N_c2]M(G) of a nilpotent product of cyclic groups.

G = Z *n ... *n Z *n Z_{r_1} *n ... *n Z_{r_t} on letters x_1..x_{m+t}. The
multiplier is free abelian on the pairs [beta, alpha] of A - C, modulo the
relations that kill ``[beta, alpha]^{r_j}`` whenever x_{m+j} is the
highest torsion letter occurring in the pair. So

    free rank        = #{pairs in A - C on free letters only}
    multiplicity r_k = #{pairs in A - C whose top torsion letter is x_{m+k}}

``ranks_enumerated`` counts those pairs directly; ``ranks_printed`` evaluates
the published closed forms verbatim so the two can be compared.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .arith import witt_chi, witt_sum
from .commutators import BasicLayers, Commutator
from .groups import Check, GroupSpec, HypothesisError, failed
from .hall import ResourceLimitError

__all__ = [
    "CommutatorPair",
    "MultiplierStructure",
    "RankReport",
    "enumerate_A",
    "enumerate_A_minus_C",
    "enumerate_C",
    "enumerate_D_c",
    "enumerate_Y",
    "max_pairs",
    "multiplier_structure",
    "ranks_closed_form",
    "ranks_enumerated",
    "ranks_printed",
    "validate_hypotheses",
]

DEFAULT_MAX_PAIRS = 10**7
MAX_COUNTED_BASICS = 50_000


def max_pairs() -> int:
    """Materialisation bound for pair lists; BAERMULT_MAX_PAIRS overrides it."""
    raw = os.environ.get("BAERMULT_MAX_PAIRS")
    return int(raw) if raw else DEFAULT_MAX_PAIRS


@dataclass(frozen=True)
class CommutatorPair:
    beta: Commutator
    alpha: Commutator

    def __str__(self) -> str:
        return f"[{self.beta},{self.alpha}]"


@dataclass(frozen=True)
class MultiplierStructure:
    free_rank: int
    torsion_summands: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict:
        return {
            "free_rank": str(self.free_rank),
            "torsion": [
                {"modulus": str(r), "multiplicity": str(k)} for r, k in self.torsion_summands
            ],
        }

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z_{r}^{k}" for r, k in self.torsion_summands if k]
        return " + ".join(parts) if parts else "0"


@dataclass
class RankReport:
    spec: GroupSpec
    c1: int
    c2: int
    mode: str
    hypotheses: list[Check]
    enumerated: MultiplierStructure | None = None
    as_printed: MultiplierStructure | None = None
    discrepancies: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "spec": {**self.spec.to_dict(), "c1": str(self.c1), "c2": str(self.c2)},
            "mode": self.mode,
            "hypotheses": [c.to_dict() for c in self.hypotheses],
        }
        if self.enumerated is not None:
            out["result"] = self.enumerated.to_dict()
            out["normative"] = "enumerated"
        if self.as_printed is not None:
            out["as_printed"] = self.as_printed.to_dict()
        if self.mode == "both":
            out["discrepancies"] = self.discrepancies
        return out


def validate_hypotheses(spec: GroupSpec, c1: int, c2: int) -> list[Check]:
    n = spec.n
    gap, need = 2 * c2 - c1, 2 * n - 2
    return [
        spec.chain_check(),
        Check("c1_ge_c2", c1 >= c2, f"c1={c1} {'>=' if c1 >= c2 else '<'} c2={c2}"),
        Check("class_bound", c1 + c2 + 1 >= n,
              f"c1+c2+1={c1 + c2 + 1} {'>=' if c1 + c2 + 1 >= n else '<'} n={n}"),
        Check("window_gap", gap > need, f"2c2-c1={gap} {'>' if gap > need else '<='} 2n-2={need}"),
        spec.coprime_check(c1 + c2 + n, "coprime_r1"),
    ]


class _PairSpace:
    """Basic commutators needed for one (spec, c1, c2), with window bookkeeping."""

    def __init__(self, spec: GroupSpec, c1: int, c2: int):
        n = spec.n
        top = max(c1, c2) + n
        size = witt_sum(spec.rank, 1, top)
        if size > MAX_COUNTED_BASICS:
            raise ResourceLimitError(
                f"{size} basic commutators of weight <= {top} on {spec.rank} letters "
                f"(guard {MAX_COUNTED_BASICS})"
            )
        self.spec = spec
        self.c1, self.c2, self.n = c1, c2, n
        self.layers = BasicLayers(spec.rank, top)
        self.tclass = [max(0, mask.bit_length() - spec.m) for mask in self.layers.letters_mask()]
        self.beta_span = self.layers.span(c1 + 1, c1 + n)
        self.alpha_span = self.layers.span(c2 + 1, c2 + n)

    def in_C(self, wb: int, wa: int) -> bool:
        c1, c2, n = self.c1, self.c2, self.n
        return wb >= c2 + n + 1 and wa >= c1 + 1 and wb + wa <= 2 * n + c1 + c2 + 1

    def count(self) -> tuple[list[int], int]:
        (b_lo, b_hi), (a_lo, a_hi) = self.beta_span, self.alpha_span
        c1, c2, n = self.c1, self.c2, self.n
        return kernels.count_pairs(
            self.layers.weight, self.tclass, b_lo, b_hi, a_lo, a_hi,
            c2 + n + 1, c1 + 1, 2 * n + c1 + c2 + 1, self.spec.t + 1,
        )

    def pairs(self, which: str) -> Iterator[tuple[int, int]]:
        (b_lo, b_hi), (a_lo, a_hi) = self.beta_span, self.alpha_span
        wt = self.layers.weight
        for beta in range(b_lo, b_hi):
            for alpha in range(a_lo, min(a_hi, beta)):
                c = self.in_C(wt[beta], wt[alpha])
                if which == "A" or (which == "C") == c:
                    yield beta, alpha

    def materialise(self, which: str) -> list[tuple[int, int]]:
        bound = max_pairs()
        out = []
        for pair in self.pairs(which):
            out.append(pair)
            if len(out) > bound:
                raise ResourceLimitError(f"more than {bound} pairs; raise BAERMULT_MAX_PAIRS")
        return out

    def wrap(self, pair: tuple[int, int]) -> CommutatorPair:
        trees = self.layers.trees
        return CommutatorPair(trees[pair[0]], trees[pair[1]])


def enumerate_A(spec: GroupSpec, c1: int, c2: int) -> list[CommutatorPair]:
    """Pairs beta > alpha with c1+1 <= wt(beta) <= c1+n and c2+1 <= wt(alpha) <= c2+n."""
    space = _PairSpace(spec, c1, c2)
    return [space.wrap(p) for p in space.materialise("A")]


def enumerate_C(spec: GroupSpec, c1: int, c2: int) -> list[CommutatorPair]:
    """Members of A with wt(beta) >= c2+n+1, wt(alpha) >= c1+1 and total weight <= 2n+c1+c2+1."""
    space = _PairSpace(spec, c1, c2)
    return [space.wrap(p) for p in space.materialise("C")]


def enumerate_A_minus_C(spec: GroupSpec, c1: int, c2: int) -> list[CommutatorPair]:
    space = _PairSpace(spec, c1, c2)
    return [space.wrap(p) for p in space.materialise("A-C")]


def enumerate_D_c(spec: GroupSpec, c: int, l: int) -> list[tuple[Commutator, int]]:
    """Basic commutators b of weight c+1..c+l-1 containing a torsion letter, paired with r_j.

    ``j`` is the top torsion letter of ``b``, so ``b`` lives on x_1..x_{m+j}
    with x_{m+j} occurring.
    """
    check = spec.coprime_check(l - 1, "coprime_upto_l_minus_1")
    if not check.passed:
        raise HypothesisError([check])
    if c + l - 1 < c + 1:
        return []
    layers = BasicLayers(spec.rank, c + l - 1)
    lo, hi = layers.span(c + 1, c + l - 1)
    masks = layers.letters_mask()
    out = []
    for p in range(lo, hi):
        top = masks[p].bit_length()
        if top > spec.m:
            out.append((layers.trees[p], spec.r(top - spec.m)))
    return out


def enumerate_Y(spec: GroupSpec, c1: int, c2: int) -> list[tuple[CommutatorPair, int]]:
    """Pairs of A - C containing a torsion letter, tagged with r_j for the top torsion letter."""
    space = _PairSpace(spec, c1, c2)
    out = []
    for beta, alpha in space.materialise("A-C"):
        j = max(space.tclass[beta], space.tclass[alpha])
        if j:
            out.append((space.wrap((beta, alpha)), spec.r(j)))
    return out


def ranks_enumerated(spec: GroupSpec, c1: int, c2: int) -> MultiplierStructure:
    bins, _ = _PairSpace(spec, c1, c2).count()
    return MultiplierStructure(
        bins[0], tuple((spec.r(k), bins[k]) for k in range(1, spec.t + 1))
    )


def _a_minus_c_size(d: int, c1: int, c2: int, n: int) -> int:
    """|A - C| on d letters, split by whether alpha's weight sits below beta's window."""
    beta = witt_sum(d, c1 + 1, c1 + n)
    below = witt_sum(d, c2 + 1, min(c1, c2 + n))
    overlap = witt_sum(d, c1 + 1, c2 + n)
    return beta * below + witt_chi(2, overlap)


def ranks_closed_form(spec: GroupSpec, c1: int, c2: int) -> MultiplierStructure:
    """Counts from |A - C| on nested alphabets: multiplicity_k = T(m+k) - T(m+k-1)."""
    n, m = spec.n, spec.m
    sizes = [_a_minus_c_size(m + k, c1, c2, n) for k in range(spec.t + 1)]
    return MultiplierStructure(
        sizes[0],
        tuple((spec.r(k), sizes[k] - sizes[k - 1]) for k in range(1, spec.t + 1)),
    )


def ranks_printed(spec: GroupSpec, c1: int, c2: int) -> MultiplierStructure:
    """The published d_1 and d_k formulas, evaluated exactly as they stand.

    d_1 becomes the free rank and d_k the multiplicity of Z_{r_k}. No index
    is corrected: the alpha sum in d_1 runs to c1, and d_k compares alphabet
    sizes m+k+1 and m+k.
    """
    n, m = spec.n, spec.m

    def big(d):
        return witt_sum(d, c1 + 1, c1 + n)

    def small(d):
        return witt_sum(d, c2 + 1, c2 + n)

    overlapping = c2 + n >= c1 + 1
    d1 = witt_sum(m, c1 + 1, c1 + n) * witt_sum(m, c2 + 1, c1)
    if overlapping:
        d1 += witt_chi(2, witt_sum(m, c1 + 1, c2 + n))
    summands = []
    for k in range(1, spec.t + 1):
        hi, lo = m + k + 1, m + k
        dk = (big(hi) - big(lo)) * small(lo) + big(lo) * (small(hi) - small(lo))
        if overlapping:
            dk += witt_chi(2, witt_sum(hi, c1 + 1, c2 + n)) - witt_chi(2, witt_sum(lo, c1 + 1, c2 + n))
        summands.append((spec.r(k), dk))
    return MultiplierStructure(d1, tuple(summands))


def _discrepancies(a: MultiplierStructure, b: MultiplierStructure) -> list[dict]:
    rows = [("free_rank", a.free_rank, b.free_rank)]
    rows += [
        (f"torsion[r_{k}={r}]", ka, kb)
        for k, ((r, ka), (_, kb)) in enumerate(zip(a.torsion_summands, b.torsion_summands), 1)
    ]
    return [
        {"field": name, "enumerated": str(x), "as_printed": str(y), "differs": x != y}
        for name, x, y in rows
    ]


def multiplier_structure(spec: GroupSpec, c1: int, c2: int, mode: str = "enumerated") -> RankReport:
    if mode not in ("enumerated", "printed", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    checks = validate_hypotheses(spec, c1, c2)
    if failed(checks):
        raise HypothesisError(checks)
    report = RankReport(spec, c1, c2, mode, checks)
    if mode in ("enumerated", "both"):
        report.enumerated = ranks_enumerated(spec, c1, c2)
    if mode in ("printed", "both"):
        report.as_printed = ranks_printed(spec, c1, c2)
    if mode == "both":
        report.discrepancies = _discrepancies(report.enumerated, report.as_printed)
    return report
