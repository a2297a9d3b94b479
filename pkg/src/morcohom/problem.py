"""Problem-file ingestion.

A problem file is a single JSON document describing the source variety
(preset or inline), the degree class, the target and a few flags.  Each
command pulls only what it needs, so e.g. ``rd`` works on a file holding just
``minima``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import schemas
from .chow import RingElement, RingPresentation, hrr_sections, preset
from .e1 import GenericY, MapSpaceProblem, PN
from .errors import InputError
from .graded import BigradedTable, projective_space_table, tensor
from .positivity import IntersectionMinima, r_operational


@dataclass
class Variety:
    name: str
    params: dict
    n: int
    q_irr: int
    hodge: BigradedTable
    ring: RingPresentation


def curve_table(genus: int) -> BigradedTable:
    return BigradedTable({(0, 0, 0): 1, (1, 1, 0): genus, (1, 0, 1): genus, (2, 1, 1): 1})


def preset_variety(name: str, params: dict) -> Variety:
    ring = preset(name, **params)
    if name == "projective_space":
        hodge, q_irr = projective_space_table(params["n"]), 0
    elif name == "product_of_projective_spaces":
        hodge, q_irr = tensor(projective_space_table(params["a"]), projective_space_table(params["b"])), 0
    else:
        hodge, q_irr = curve_table(params["genus"]), params["genus"]
    return Variety(name, dict(sorted(params.items())), ring.dim, q_irr, hodge, ring)


@dataclass
class Problem:
    raw: dict
    variety: Variety | None = None
    degree: RingElement | None = None
    minima_override: IntersectionMinima | None = None
    target: PN | GenericY | None = None
    acyclic: bool = True
    cutoff: str = "r+1"
    d1_ranks: dict = field(default_factory=dict)

    # -- derived quantities --------------------------------------------------

    def require(self, *names: str) -> None:
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            raise InputError(f"problem file lacks required section(s): {', '.join(missing)}")

    def sections(self) -> int:
        self.require("variety", "degree")
        return hrr_sections(self.variety.ring, self.degree)

    def minima(self) -> IntersectionMinima:
        if self.minima_override is not None:
            return self.minima_override
        self.require("variety", "degree")
        v = self.variety
        if v.name == "projective_space":
            coef = self.degree["h" if v.n > 1 else "pt"]
            a = coef + v.n + 1  # delta = d - K = (d + n + 1) h
            if a.denominator != 1 or a < 1:
                raise InputError(f"adjoint class {a}h is not ample")
            return IntersectionMinima.projective_space(v.n, int(a))
        if v.name == "curve":
            m1 = self.degree["pt"] - (2 * v.params["genus"] - 2)
            if m1.denominator != 1 or m1 < 1:
                raise InputError(f"adjoint class of degree {m1} is not ample")
            return IntersectionMinima(1, {1: int(m1)})
        raise InputError(f"variety {v.name!r} has no minima rule; supply 'minima' in the problem file")

    def r_d(self) -> int:
        return r_operational(self.minima())

    def map_space_problem(self) -> MapSpaceProblem:
        self.require("variety", "degree", "target")
        v = self.variety
        return MapSpaceProblem(
            x_cohomology=v.hodge,
            n=v.n,
            q_irr=v.q_irr,
            target=self.target,
            N_d=self.sections(),
            r_d=self.r_d(),
            acyclic_asserted=self.acyclic,
            cutoff=self.cutoff,
        )

    def summary(self) -> dict:
        out: dict = {}
        if self.variety is not None:
            out["variety"] = {"name": self.variety.name, "params": self.variety.params,
                              "dim": self.variety.n, "q_irr": self.variety.q_irr}
        if self.degree is not None:
            out["degree"] = self.degree.to_records()
        if isinstance(self.target, PN):
            out["target"] = {"PN": self.target.N}
        elif isinstance(self.target, GenericY):
            out["target"] = {"genericY": {"N": self.target.N}}
        out["flags"] = {"acyclic": self.acyclic, "cutoff_variant": self.cutoff}
        return out


def parse_problem(data: dict, cutoff: str | None = None) -> Problem:
    schemas.validate(data, schemas.PROBLEM_FILE, "problem file")
    prob = Problem(raw=data)

    var = data.get("variety")
    if var is not None:
        if "preset" in var:
            prob.variety = preset_variety(var["preset"], dict(var.get("params", {})))
        else:
            ring = RingPresentation.from_json(var["ring"], todd=var["todd"])
            if ring.dim != var["dim"]:
                raise InputError(f"ring dimension {ring.dim} differs from variety dim {var['dim']}")
            prob.variety = Variety("inline", {}, var["dim"], var["q_irr"],
                                   BigradedTable.from_records(var["hodge"]), ring)

    if "degree" in data:
        if prob.variety is None:
            raise InputError("'degree' needs a 'variety'")
        deg = data["degree"]
        coeffs = deg if isinstance(deg, dict) else {r["name"]: r["coef"] for r in deg}
        prob.degree = prob.variety.ring.element(coeffs)
        if not prob.variety.ring.is_homogeneous(prob.degree, 1):
            raise InputError("degree class must be a combination of codimension-1 classes")
        if any(Fraction(c).denominator != 1 for _, c in prob.degree.items()):
            raise InputError("degree class must have integer coefficients")

    if "minima" in data:
        prob.minima_override = IntersectionMinima.from_json(data["minima"])

    target = data.get("target")
    if target is not None:
        if "PN" in target:
            prob.target = PN(target["PN"])
        else:
            g = target["genericY"]
            prob.target = GenericY(
                N=g["N"],
                fiber_tables={int(p): BigradedTable.from_records(t) for p, t in g["fibers"].items()},
                ambient_table=BigradedTable.from_records(g["ambient"]),
            )

    flags = data.get("flags", {})
    prob.acyclic = flags.get("acyclic", True)
    prob.cutoff = cutoff or flags.get("cutoff_variant", "r+1")
    prob.d1_ranks = {(r["p"], r["q"], r["weight"]): r["rank"] for r in data.get("d1_ranks", [])}
    return prob


def load_problem(path: str | Path, cutoff: str | None = None) -> Problem:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read problem file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: problem file must be a JSON object")
    return parse_problem(data, cutoff=cutoff)

