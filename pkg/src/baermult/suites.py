"""Oracle suites run by ``baermult verify``.

Each suite pits a library route against an independent one and returns a
SuiteResult; nothing here raises on a mismatch.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from .arith import witt_chi
from .capability import power_absorption_check
from .commutators import all_commutators, generate_basic
from .groups import GroupSpec, failed
from .hall import build_basis, random_element, struik_order_check, verify_hall_ranks
from .multiplier import _a_minus_c_size, _PairSpace, validate_hypotheses
from .oracles import magnus_of_normal_form, magnus_of_word, naive_collect

__all__ = [
    "SUITES",
    "SuiteResult",
    "absorption_suite",
    "admissible_tuples",
    "hall_suite",
    "identity_suite",
    "run_suites",
    "struik_suite",
    "witt_suite",
]

log = logging.getLogger(__name__)

SUITES = ("witt", "hall", "identity", "absorption", "struik")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "detail": self.detail}

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<11} {self.detail}"


def witt_suite(max_weight: int = 10, max_alphabet: int = 3) -> SuiteResult:
    bad = []
    for d in range(1, max_alphabet + 1):
        for w in range(1, max_weight + 1):
            got = len(generate_basic(d, w, w))
            want = witt_chi(w, d)
            if got != want:
                bad.append(f"d={d} w={w}: {got} != {want}")
    cases = max_alphabet * max_weight
    detail = f"{cases} (alphabet, weight) cases" + (f"; {bad[:3]}" if bad else "")
    return SuiteResult("witt", not bad, detail)


def hall_suite(
    alphabet: int = 2, cap: int = 4, samples: int = 1000, words: int = 200, seed: int = 0
) -> SuiteResult:
    """Associativity, inverses, Witt section counts and oracle agreement."""
    failures = []
    if not verify_hall_ranks(alphabet, cap, samples=samples, seed=seed):
        failures.append("associativity/inverse/rank sample")
    basis = build_basis(alphabet, cap)
    rng = random.Random(seed + 1)
    for _ in range(words):
        length = rng.randint(0, 8)
        positive = [rng.randint(1, alphabet) for _ in range(length)]
        collected = naive_collect(positive, cap)
        if basis.word(positive).vector != tuple(collected.get(c, 0) for c in basis.elements):
            failures.append(f"naive collection {positive}")
        signed = [rng.choice((1, -1)) * x for x in positive]
        e = basis.word(signed)
        if magnus_of_word(signed, cap) != magnus_of_normal_form(basis.elements, e.vector, cap):
            failures.append(f"magnus {signed}")
    a = random_element(basis, rng)
    if not (a * ~a).is_identity():
        failures.append("inverse")
    detail = f"d={alphabet} cap={cap}: {samples} triples, {words} oracle words"
    if failures:
        detail += f"; {len(failures)} failures, first {failures[0]}"
    return SuiteResult("hall", not failures, detail)


def admissible_tuples(max_top: int = 7, max_n: int = 7):
    """(c1, c2, n) passing the non-torsion hypotheses with c1 + n <= max_top."""
    for n in range(1, max_n + 1):
        for c1 in range(1, max_top - n + 1):
            for c2 in range(1, c1 + 1):
                checks = validate_hypotheses(GroupSpec(1, (), n), c1, c2)
                if not failed(checks):
                    yield c1, c2, n


def identity_suite(max_top: int = 7, max_alphabet: int = 3) -> SuiteResult:
    """Enumerated |A - C| against the overlapping-window closed form."""
    bad = []
    count = 0
    for c1, c2, n in admissible_tuples(max_top):
        if c2 + n < c1 + 1:
            continue
        for d in range(1, max_alphabet + 1):
            bins, _ = _PairSpace(GroupSpec(d, (), n), c1, c2).count()
            want = _a_minus_c_size(d, c1, c2, n)
            count += 1
            if bins[0] != want:
                bad.append(f"(c1={c1},c2={c2},n={n},d={d}): {bins[0]} != {want}")
    return SuiteResult("identity", not bad and count > 0, f"{count} cases" + (f"; {bad[:3]}" if bad else ""))


def absorption_suite() -> SuiteResult:
    spec = GroupSpec(0, (25, 25), 1)
    ok = power_absorption_check(spec, 1, 1)
    return SuiteResult("absorption", ok, f"{spec}, c1=c2=1, every generator choice")


def struik_suite(max_weight: int = 4) -> SuiteResult:
    spec = GroupSpec(0, (25, 5), 1)
    basis = build_basis(spec.rank, max_weight)
    shapes = 0
    bad = []
    for w in range(2, max_weight + 1):
        for u in all_commutators(spec.rank, w):
            shapes += 1
            if not struik_order_check(u, spec, basis):
                bad.append(str(u))
    detail = f"{spec}: {shapes} outer commutators of weight 2..{max_weight}"
    return SuiteResult("struik", not bad, detail + (f"; failed {bad[:3]}" if bad else ""))


def run_suites(names=SUITES, **opts) -> list[SuiteResult]:
    out = []
    for name in names:
        if name == "witt":
            r = witt_suite(opts.get("max_weight", 10), opts.get("max_alphabet", 3))
        elif name == "hall":
            r = hall_suite(opts.get("alphabet", 2), opts.get("cap", 4), opts.get("samples", 1000))
        elif name == "identity":
            r = identity_suite(opts.get("max_top", 7), opts.get("max_alphabet", 3))
        elif name == "absorption":
            r = absorption_suite()
        elif name == "struik":
            r = struik_suite(opts.get("struik_weight", 4))
        else:
            raise ValueError(f"unknown suite {name!r}")
        log.info(r.line())
        out.append(r)
    return out

