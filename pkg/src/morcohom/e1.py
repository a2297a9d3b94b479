"""The E1 page for compactly supported cohomology of ``Mor_d(X, Y)``.

Column ``p = 0`` is the cohomology of the compactification (a projective
bundle over ``Pic_d(X)`` when ``Y = P^N``).  For ``1 <= p <= p_max`` column
``p`` is the product

    sign-invariants of H*(X)^{(x)p}  (x)  H*(Pic_d)  (x)  fiber,

where the sign-invariants are placed in compactly supported degrees by the
duality reindexing with ``n p`` and the fiber is ``P^{(N_d - p)(N+1) - 1}``
(or a supplied table for general ``Y``).  The differentials are unknown, so
only differential-free quantities are exported.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .epoly import EPolynomial
from .errors import InconclusiveError, InputError
from .graded import (
    BigradedTable,
    dual_shift,
    e_polynomial,
    pic_table,
    projective_space_table,
    tensor,
)
from .syminv import signed_invariants

CUTOFFS = ("r+1", "r-1")


@dataclass(frozen=True)
class PN:
    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise InputError(f"target dimension N must be a positive integer, got {self.N!r}")


@dataclass(frozen=True)
class GenericY:
    """Target with user-asserted Leray-Hirsch splitting.

    ``fiber_tables[p]`` is the compactly supported cohomology of the fibre
    entering column ``p``; ``ambient_table`` is the cohomology of the
    compactification (column 0).
    """

    N: int
    fiber_tables: Mapping[int, BigradedTable]
    ambient_table: BigradedTable

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise InputError(f"target dimension N must be a positive integer, got {self.N!r}")


@dataclass(frozen=True)
class MapSpaceProblem:
    x_cohomology: BigradedTable
    n: int
    q_irr: int
    target: PN | GenericY
    N_d: int
    r_d: int
    acyclic_asserted: bool = True
    cutoff: str = "r+1"

    def __post_init__(self):
        check_x_cohomology(self.x_cohomology, self.n, self.q_irr)
        if not isinstance(self.N_d, int) or self.N_d < 1:
            raise InputError(f"N_d must be a positive integer, got {self.N_d!r}")
        if not isinstance(self.r_d, int) or self.r_d < 0:
            raise InputError(f"r_d must be a nonnegative integer, got {self.r_d!r}")
        if self.cutoff not in CUTOFFS:
            raise InputError(f"cutoff must be one of {CUTOFFS}, got {self.cutoff!r}")

    @property
    def p_max(self) -> int:
        return self.r_d + 1 if self.cutoff == "r+1" else self.r_d - 1

    @property
    def compactification_dim(self) -> int:
        return self.q_irr + (self.target.N + 1) * self.N_d - 1


def check_x_cohomology(table: BigradedTable, n: int, q_irr: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"dim X must be a positive integer, got {n!r}")
    if not isinstance(q_irr, int) or q_irr < 0:
        raise InputError(f"irregularity must be a nonnegative integer, got {q_irr!r}")
    if not table.is_pure():
        raise InputError("cohomology of X must be pure (a + b = k for every entry)")
    betti = table.betti()
    if any(k > 2 * n for k in betti):
        raise InputError(f"cohomology of X has degrees beyond 2n = {2 * n}")
    if betti.get(0, 0) != 1:
        raise InputError("cohomology of X must have dimension 1 in degree 0")
    if betti.get(1, 0) != 2 * q_irr:
        raise InputError(f"b_1 = {betti.get(1, 0)} does not match 2 * q_irr = {2 * q_irr}")
    for (k, a, b), d in table.items():
        if table[(2 * n - k, n - a, n - b)] != d:
            raise InputError(f"Poincare duality fails at ({k},({a},{b}))")


@dataclass
class E1Page:
    cells: dict[int, BigradedTable]
    p_max: int
    complete: bool
    cutoff: str = "r+1"
    inconclusive: tuple[int, ...] = ()
    warnings: list[dict] = field(default_factory=list)

    def cell(self, p: int, q: int) -> dict[tuple[int, int], int]:
        """Hodge dimensions of ``E1^{p,q}``."""
        table = self.cells.get(p, BigradedTable())
        return {(a, b): d for (k, a, b), d in table.items() if k == q}

    def to_json(self) -> dict:
        return {
            "p_max": self.p_max,
            "complete": self.complete,
            "cutoff": self.cutoff,
            "inconclusive": list(self.inconclusive),
            "cells": [{"p": p, "table": t.to_records()} for p, t in sorted(self.cells.items())],
            "warnings": self.warnings,
        }


def column_table(prob: MapSpaceProblem, p: int) -> BigradedTable | None:
    """The E1 column ``p`` as a table indexed by ``q``; ``None`` if a fibre is missing."""
    pic = pic_table(prob.q_irr)
    target = prob.target
    if p == 0:
        if isinstance(target, PN):
            return tensor(pic, projective_space_table((target.N + 1) * prob.N_d - 1))
        return target.ambient_table
    if isinstance(target, PN):
        fiber_dim = (prob.N_d - p) * (target.N + 1) - 1
        if fiber_dim < 0:
            return BigradedTable()
        fiber = projective_space_table(fiber_dim)
    else:
        fiber = target.fiber_tables.get(p)
        if fiber is None:
            return None
    sym = signed_invariants(prob.x_cohomology, p)
    if not sym or not fiber:
        return BigradedTable()
    return tensor(tensor(dual_shift(sym, prob.n * p), pic), fiber)


def assemble_e1(prob: MapSpaceProblem) -> E1Page:
    cells: dict[int, BigradedTable] = {}
    missing = []
    for p in range(0, max(prob.p_max, 0) + 1):
        table = column_table(prob, p)
        if table is None:
            missing.append(p)
            continue
        cells[p] = table
    # Columns p <= r_d are exact.  If moreover N_d <= r_d, d separates N_d
    # points, so no nonzero section vanishes on N_d or more points and every
    # column p >= N_d is zero.  N_d <= p_max alone is not enough: on a genus-1
    # curve with N_d = r_d + 1 column r_d + 1 is nonzero.
    complete = isinstance(prob.target, PN) and prob.N_d <= min(prob.p_max, prob.r_d)
    page = E1Page(cells, prob.p_max, complete, prob.cutoff, tuple(missing))
    page.warnings.append({
        "code": "CUTOFF",
        "cutoff": prob.cutoff,
        "p_max": prob.p_max,
        "message": f"product formula used for columns p <= {prob.p_max} (cutoff {prob.cutoff})",
    })
    if prob.p_max > prob.r_d:
        page.warnings.append({
            "code": "WIDE_CUTOFF",
            "p_max": prob.p_max,
            "r_d": prob.r_d,
            "message": f"columns {prob.r_d} < p <= {prob.p_max} lie beyond the points d separates; "
            "their product-formula values are not certified",
        })
    for p in missing:
        page.warnings.append({
            "code": "INCONCLUSIVE_COLUMN",
            "p": p,
            "message": f"column {p}: no fibre table supplied; inconclusive",
        })
    if not complete:
        page.warnings.append({
            "code": "INCOMPLETE",
            "message": "columns beyond the validity cutoff are not certified zero",
        })
    if not prob.acyclic_asserted:
        page.warnings.append({
            "code": "NOT_ACYCLIC",
            "message": "the degree class is not asserted acyclic; the E1 formula may not apply",
        })
    return page


def e_polynomial_of_mor(page: E1Page) -> EPolynomial:
    """Compactly supported E-polynomial of ``Mor_d(X, Y)``: ``sum (-1)^p E(column p)``."""
    if not page.complete or page.inconclusive:
        raise InconclusiveError(
            "inconclusive: columns beyond validity cutoff not certified zero", warnings=page.warnings
        )
    total = EPolynomial()
    for p, table in sorted(page.cells.items()):
        e = e_polynomial(table)
        total = total - e if p % 2 else total + e
    return total


def _weight_mass(page: E1Page) -> dict[tuple[int, int], int]:
    mass: dict[tuple[int, int], int] = {}
    for p, table in page.cells.items():
        for (q, a, b), d in table.items():
            key = (p + q, a + b)
            mass[key] = mass.get(key, 0) + d
    return mass


def weight_bounds(
    page: E1Page, d1_ranks: Mapping[tuple[int, int, int], int] | None = None
) -> dict[tuple[int, int], tuple[int, int]]:
    """Bounds on ``dim H_c^D`` of weight ``w`` for every populated ``(D, w)``.

    Differentials preserve weight and raise total degree by one, so the E1
    mass at ``(D, w)`` is an upper bound, and it can only be cancelled by mass
    of the same weight at ``D - 1`` or ``D + 1``.  The bounds hold for the
    abutment when ``page.complete``.

    ``d1_ranks`` is optional external data: the rank of ``d1`` leaving
    ``E1^{p,q}`` in weight ``w``, keyed ``(p, q, w)``.  When given, the E2
    dimensions replace the E1 ones.
    """
    if d1_ranks:
        mass: dict[tuple[int, int], int] = {}
        for p, table in page.cells.items():
            per_cell: dict[tuple[int, int], int] = {}
            for (q, a, b), d in table.items():
                per_cell[(q, a + b)] = per_cell.get((q, a + b), 0) + d
            for (q, w), d in per_cell.items():
                e2 = d - d1_ranks.get((p, q, w), 0) - d1_ranks.get((p - 1, q, w), 0)
                if e2 < 0:
                    raise InputError(f"d1 rank data exceeds E1 dimension at (p={p}, q={q}, w={w})")
                if e2:
                    mass[(p + q, w)] = mass.get((p + q, w), 0) + e2
    else:
        mass = _weight_mass(page)
    out = {}
    for (D, w), upper in sorted(mass.items()):
        nbr = mass.get((D - 1, w), 0) + mass.get((D + 1, w), 0)
        out[(D, w)] = (max(0, upper - nbr), upper)
    return out


def weight_bound(page: E1Page, D: int, w: int) -> tuple[int, int]:
    return weight_bounds(page).get((D, w), (0, 0))


@dataclass
class StableWindow:
    p_max: int
    cutoff: str
    M: int
    q_min: int
    q_max: int
    discriminant_codim: int
    level_codims: dict[int, int]
    warnings: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "cutoff": self.cutoff,
            "p_range": [0, self.p_max],
            "dim_compactification": self.M,
            "q_range": [self.q_min, self.q_max],
            "codimension": {
                "discriminant": self.discriminant_codim,
                "hypercover_levels": [
                    {"level": r, "codim_at_least": c} for r, c in sorted(self.level_codims.items())
                ],
            },
            "warnings": self.warnings,
        }


def stable_window(prob: MapSpaceProblem) -> StableWindow:
    """Range of ``(p, q)`` over which ``E2 = E_infinity`` is asserted for ``Y = P^N``."""
    if not isinstance(prob.target, PN):
        raise InputError("the stable window is only defined for projective-space targets")
    M = prob.compactification_dim
    nN = prob.n * prob.target.N
    report = StableWindow(
        p_max=prob.p_max,
        cutoff=prob.cutoff,
        M=M,
        q_min=M - prob.r_d,
        q_max=M,
        discriminant_codim=nN,
        # level r of the hypercover feeds column p = r + 1
        level_codims={r: (r + 1) * nN for r in range(0, max(prob.p_max, 0))},
    )
    report.warnings.append({
        "code": "WINDOW_READING",
        "message": "dim Mor_d is read as the complex dimension M of the compactification, "
        "and q as the spectral-sequence row; other readings are possible",
    })
    return report
