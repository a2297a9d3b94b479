"""Built-in consistency suite run by ``morcohom selfcheck``."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .chow import curve, hrr_sections, projective_space
from .e1 import PN, MapSpaceProblem, assemble_e1, e_polynomial_of_mor
from .errors import MorcohomError, OracleTooLarge
from .graded import projective_space_table
from .oracles import mor1_les_table, mor_p1_epoly, table_epoly
from .positivity import IntersectionMinima, r_operational
from .syminv import ORACLE_CAP, profile_grid, signed_invariants, signed_invariants_oracle


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SelfcheckReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [r.to_json() for r in self.results]}


def _run(report: SelfcheckReport, name: str, fn) -> None:
    try:
        detail = fn() or ""
    except OracleTooLarge as exc:
        report.results.append(CheckResult(name, "skip", str(exc)))
    except (AssertionError, MorcohomError) as exc:
        report.results.append(CheckResult(name, "fail", str(exc)))
    else:
        report.results.append(CheckResult(name, "pass", detail))


def check_hrr_presets() -> str:
    for n in range(1, 5):
        R = projective_space(n)
        for d in range(11):
            got = hrr_sections(R, R.element({"h": d}))
            assert got == comb(n + d, n), f"P^{n}, d={d}: {got} != {comb(n + d, n)}"
    for g in range(4):
        C = curve(g)
        for d in range(max(0, 2 * g - 1), 11):
            got = hrr_sections(C, C.element({"pt": d}))
            assert got == d + 1 - g, f"curve g={g}, d={d}: {got} != {d + 1 - g}"
    return "projective spaces n<=4, d<=10; curves g<=3"


def check_ring_todd(ring, degree, todd=None) -> str:
    """HRR integrality/nonnegativity for multiples ``t * degree``, ``t = 0..10``."""
    for t in range(11):
        hrr_sections(ring, degree.scale(t), todd)
    return "HRR integral and nonnegative for t*d, t<=10"


def check_sign_oracle(cap: int = ORACLE_CAP) -> tuple[str, int]:
    count = skipped = 0
    for base in profile_grid():
        for p in range(5):
            fast = signed_invariants(base, p)
            try:
                slow = signed_invariants_oracle(base, p, cap=cap)
            except OracleTooLarge:
                skipped += 1
                continue
            assert fast == slow, f"mismatch for {base!r}, p={p}: {fast!r} vs {slow!r}"
            count += 1
    return f"{count} (profile, p) cases", skipped


def check_cross_oracles() -> str:
    assert table_epoly(mor1_les_table(1)) == mor_p1_epoly(1), "LES and recursion disagree at d=1"
    for d in range(1, 6):
        a = d + 2  # delta-degree on P^1
        prob = MapSpaceProblem(
            projective_space_table(1), 1, 0, PN(1), N_d=d + 1,
            r_d=r_operational(IntersectionMinima(1, {1: a})),
        )
        got = e_polynomial_of_mor(assemble_e1(prob))
        want = mor_p1_epoly(d)
        assert got == want, f"d={d}: spectral sequence gives {got}, recursion gives {want}"
    return "LES = recursion at d=1; E1 alternating sum = recursion for d<=5"


def run_selfcheck(extra=None, cap: int = ORACLE_CAP) -> SelfcheckReport:
    """``extra`` is an optional (ring, degree, todd) triple to vet as well."""
    report = SelfcheckReport()
    _run(report, "hrr_presets", check_hrr_presets)
    skipped = []

    def sign_oracle():
        detail, n_skipped = check_sign_oracle(cap)
        skipped.append(n_skipped)
        return detail

    _run(report, "sign_invariants_oracle", sign_oracle)
    if skipped and skipped[0]:
        report.results.append(
            CheckResult("sign_invariants_oracle_cap", "skip", f"{skipped[0]} cases exceed the oracle cap {cap}")
        )
    _run(report, "cross_oracles", check_cross_oracles)
    if extra is not None:
        _run(report, "problem_ring_todd", lambda: check_ring_todd(*extra))
    return report
