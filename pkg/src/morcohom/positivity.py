"""Point-separation bounds for adjoint classes.

Given the minimal intersection numbers ``m_k = min delta^k . [W]`` over
k-dimensional subvarieties, a class ``d = K_X + delta`` separates ``r``
points as soon as ``m_k^{1/k} > n(n + 2r - 1)/2`` for every k.  All roots
are handled as integer power comparisons; no floats are involved.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import InputError


@dataclass(frozen=True)
class IntersectionMinima:
    n: int
    m: Mapping[int, int]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"dimension must be a positive integer, got {self.n!r}")
        if set(self.m) != set(range(1, self.n + 1)):
            raise InputError(f"minima must be given for k = 1..{self.n}, got keys {sorted(self.m)}")
        for k, v in self.m.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError(f"minimum m_{k} must be a positive integer, got {v!r}")
        object.__setattr__(self, "m", dict(sorted(self.m.items())))

    @classmethod
    def from_json(cls, data: Mapping) -> IntersectionMinima:
        try:
            n = data["dim"]
            m = {int(k): v for k, v in data["minima"].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"malformed intersection minima: {exc}") from exc
        return cls(n, m)

    def to_json(self) -> dict:
        return {"dim": self.n, "minima": {str(k): v for k, v in self.m.items()}}

    @classmethod
    def projective_space(cls, n: int, a: int) -> IntersectionMinima:
        """``delta = a h`` on ``P^n``; minimised on linear subspaces."""
        return cls(n, {k: a**k for k in range(1, n + 1)})


def iroot(x: int, k: int) -> int:
    """``floor(x ** (1/k))`` for integers ``x >= 0``, ``k >= 1``."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)  # overestimate
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def separates_r(mins: IntersectionMinima, r: int) -> bool:
    """Strict Angehrn-Siu test: ``2^k m_k > (n(n + 2r - 1))^k`` for all k."""
    if r < 1:
        raise InputError(f"r must be a positive integer, got {r}")
    n = mins.n
    return all(2**k * m > (n * (n + 2 * r - 1)) ** k for k, m in mins.m.items())


def r_operational(mins: IntersectionMinima) -> int:
    """Largest ``r >= 1`` passing :func:`separates_r`, or 0 if none does."""
    # the k = 1 condition alone forces n(n + 2r - 1) < 2 m_1
    hi = max(1, mins.m[1] // mins.n + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if separates_r(mins, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def r_formula(mins: IntersectionMinima, variant: str = "A") -> int:
    """``floor(min_k (2 m_k^{1/k} - n^2 + n - 1) / 2)``, minus 1 for variant B.

    Since ``2t + c <= 2 m^{1/k}`` iff ``2t + c <= iroot(2^k m, k)`` for
    integers, each per-k floor is exact.
    """
    if variant not in ("A", "B"):
        raise InputError(f"variant must be 'A' or 'B', got {variant!r}")
    n = mins.n
    c = n * n - n + 1
    value = min((iroot(2**k * m, k) - c) // 2 for k, m in mins.m.items())
    return value - 1 if variant == "B" else value


@dataclass
class BoundReport:
    minima: IntersectionMinima
    operational: int
    formula_a: int
    formula_b: int
    warnings: list[dict] = field(default_factory=list)

    @property
    def separates(self) -> bool:
        return self.operational >= 1

    def to_json(self) -> dict:
        return {
            "minima": self.minima.to_json(),
            "r_operational": self.operational,
            "r_formula": {"A": self.formula_a, "B": self.formula_b},
            "separates_points": self.separates,
            "warnings": self.warnings,
        }


def bound_report(mins: IntersectionMinima) -> BoundReport:
    op = r_operational(mins)
    a = r_formula(mins, "A")
    b = r_formula(mins, "B")
    report = BoundReport(mins, op, a, b)
    for variant, value in (("A", a), ("B", b)):
        if value != op:
            report.warnings.append({
                "code": "DISCREPANCY",
                "variant": variant,
                "r_operational": op,
                "r_formula": value,
                "message": (
                    f"closed-form variant {variant} gives r = {value} but the separation "
                    f"inequality gives r = {op}; r = {op} is used"
                ),
            })
    if op == 0:
        report.warnings.append({
            "code": "NO_SEPARATION",
            "message": "the separation inequality fails already at r = 1",
        })
    return report
