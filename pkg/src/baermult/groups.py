"""Input groups: n-th nilpotent products of cyclic groups."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .arith import primes_upto

__all__ = ["Check", "Generator", "GroupSpec", "HypothesisError", "failed", "parse_group"]


class HypothesisError(ValueError):
    """Raised when a computation is asked for outside its validity region."""

    def __init__(self, checks: list["Check"]):
        self.checks = [c for c in checks if not c.passed]
        super().__init__("; ".join(f"{c.name}: {c.detail}" for c in self.checks))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def failed(checks: list[Check]) -> list[Check]:
    return [c for c in checks if not c.passed]


@dataclass(frozen=True)
class Generator:
    index: int
    torsion_order: int  # 0 means infinite order


@dataclass(frozen=True)
class GroupSpec:
    """Z *n ... *n Z (m copies) *n Z_{r_1} *n ... *n Z_{r_t}.

    The divisibility chain on ``torsion`` is reported by hypothesis checks
    rather than enforced here.
    """

    m: int
    torsion: tuple[int, ...] = ()
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(r) for r in self.torsion))
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if any(r < 2 for r in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {list(self.torsion)}")
        if self.m + len(self.torsion) < 1:
            raise ValueError("need at least one cyclic factor")

    @property
    def t(self) -> int:
        return len(self.torsion)

    @property
    def rank(self) -> int:
        """Size of the generating alphabet, m + t."""
        return self.m + len(self.torsion)

    def r(self, j: int) -> int:
        """Torsion order r_j, 1-based."""
        return self.torsion[j - 1]

    def generators(self) -> list[Generator]:
        return [Generator(i, 0) for i in range(1, self.m + 1)] + [
            Generator(self.m + j, r) for j, r in enumerate(self.torsion, 1)
        ]

    def order_of(self, index: int) -> int:
        return 0 if index <= self.m else self.torsion[index - self.m - 1]

    def with_degree(self, n: int) -> "GroupSpec":
        return GroupSpec(self.m, self.torsion, n)

    def to_dict(self) -> dict:
        return {"m": str(self.m), "torsion": [str(r) for r in self.torsion], "n": str(self.n)}

    def __str__(self) -> str:
        parts = ["Z"] * self.m + [f"Z{r}" for r in self.torsion]
        return f" *{self.n} ".join(parts)

    # -- hypothesis checks shared by several modules --

    def chain_check(self) -> Check:
        bad = [i for i in range(self.t - 1) if self.torsion[i] % self.torsion[i + 1]]
        if bad:
            detail = ", ".join(
                f"r_{i + 2}={self.torsion[i + 1]} does not divide r_{i + 1}={self.torsion[i]}"
                for i in bad
            )
            return Check("divisibility_chain", False, detail)
        return Check("divisibility_chain", True, "r_{i+1} | r_i for all i")

    def coprime_check(self, bound: int, name: str, strict: bool = False) -> Check:
        """Every prime p <= bound (p < bound if strict) is coprime to r_1."""
        top = bound - 1 if strict else bound
        rel = "<" if strict else "<="
        if not self.torsion:
            return Check(name, True, f"vacuous: no torsion factors (primes {rel} {bound})")
        r1 = self.torsion[0]
        bad = [p for p in primes_upto(top) if r1 % p == 0]
        if bad:
            detail = "; ".join(f"prime {p} divides r_1={r1}" for p in bad)
            return Check(name, False, f"{detail} (primes {rel} {bound} must be coprime to r_1)")
        return Check(name, True, f"all primes {rel} {bound} coprime to r_1={r1}")


_FACTOR = re.compile(r"^Z(?:\^(\d+))?$|^Z_?(\d+)$")


def parse_group(text: str) -> GroupSpec:
    """Desugar ``"Z^2 * Z11 @ n=2"`` into a GroupSpec."""
    body, _, tail = text.partition("@")
    n = 1
    if tail.strip():
        m_ = re.fullmatch(r"\s*n\s*=\s*(\d+)\s*", tail)
        if not m_:
            raise ValueError(f"bad degree clause {tail.strip()!r}; expected 'n=<int>'")
        n = int(m_.group(1))
    m = 0
    torsion = []
    for raw in body.split("*"):
        tok = raw.strip().replace(" ", "")
        match = _FACTOR.match(tok)
        if not match:
            raise ValueError(f"bad factor {raw.strip()!r}; expected Z, Z^k or Z<r>")
        if match.group(2) is not None:
            torsion.append(int(match.group(2)))
        else:
            m += int(match.group(1) or 1)
    return GroupSpec(m, tuple(torsion), n)
