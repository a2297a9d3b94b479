"""Command-line front end.

    morcohom {hrr,rd,e1,epoly,stable,bounds,oracle,selfcheck} [FILE] [--json|--text]

JSON goes to stdout by default.  Exit codes: 0 success, 2 input error,
3 mathematical inconsistency, 4 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .e1 import PN, assemble_e1, e_polynomial_of_mor, stable_window, weight_bounds
from .epoly import EPolynomial
from .errors import InconclusiveError, InputError, MorcohomError
from .graded import BigradedTable
from .oracles import mor1_les_table, mor_p1_epoly, table_epoly
from .positivity import bound_report
from .problem import Problem, load_problem
from .selfcheck import run_selfcheck

COMMANDS = ("hrr", "rd", "e1", "epoly", "stable", "bounds", "oracle", "selfcheck")


# -- text rendering -------------------------------------------------------------


def _table_lines(table: BigradedTable, indent: str = "  ") -> list[str]:
    if not table:
        return [indent + "(zero)"]
    lines = [indent + f"{'deg':>5} {'hodge':>9} {'dim':>6}"]
    for (k, a, b), d in table.items():
        lines.append(indent + f"{k:>5} {f'({a},{b})':>9} {d:>6}")
    return lines


def _warning_lines(warnings: list[dict]) -> list[str]:
    return [f"WARNING [{w['code']}]: {w['message']}" for w in warnings]


def _epoly_json(e: EPolynomial) -> dict:
    return {"e_polynomial": e.to_records(), "display": str(e), "euler_characteristic": e.euler_characteristic()}


# -- commands -------------------------------------------------------------------
# Each returns (json payload, text lines).


def cmd_hrr(prob: Problem):
    prob.require("variety", "degree")
    n_d = prob.sections()
    payload = {"command": "hrr", **prob.summary(), "N_d": n_d}
    return payload, [f"N_d = {n_d}"]


def cmd_rd(prob: Problem):
    report = bound_report(prob.minima())
    payload = {"command": "rd", **report.to_json()}
    lines = [
        f"dim X                  : {report.minima.n}",
        "minima                 : " + ", ".join(f"m_{k}={v}" for k, v in report.minima.m.items()),
        f"r (operational)        : {report.operational}",
        f"r (closed form A)      : {report.formula_a}",
        f"r (closed form B)      : {report.formula_b}",
    ]
    return payload, lines + _warning_lines(report.warnings)


def cmd_e1(prob: Problem):
    mp = prob.map_space_problem()
    page = assemble_e1(mp)
    payload = {"command": "e1", **prob.summary(), "N_d": mp.N_d, "r_d": mp.r_d, "page": page.to_json()}
    lines = [f"N_d = {mp.N_d}, r(d) = {mp.r_d}, p_max = {page.p_max} (cutoff {page.cutoff}), "
             f"complete = {str(page.complete).lower()}"]
    for p, table in sorted(page.cells.items()):
        lines.append(f"column p={p}:")
        lines.extend(_table_lines(table))
    return payload, lines + _warning_lines(page.warnings)


def cmd_epoly(prob: Problem):
    mp = prob.map_space_problem()
    page = assemble_e1(mp)
    e = e_polynomial_of_mor(page)
    payload = {"command": "epoly", **prob.summary(), "N_d": mp.N_d, "r_d": mp.r_d,
               "p_max": page.p_max, "cutoff": page.cutoff, **_epoly_json(e),
               "warnings": page.warnings}
    lines = [f"E_c(Mor_d) = {e}", f"Euler characteristic (compact support) = {e.euler_characteristic()}"]
    return payload, lines + _warning_lines(page.warnings)


def cmd_stable(prob: Problem):
    mp = prob.map_space_problem()
    w = stable_window(mp)
    payload = {"command": "stable", **prob.summary(), "N_d": mp.N_d, "r_d": mp.r_d, "window": w.to_json()}
    lines = [
        f"p range            : 0 <= p <= {w.p_max} (cutoff {w.cutoff})",
        f"M (dim compactif.) : {w.M}",
        f"q range            : {w.q_min} <= q <= {w.q_max}",
        f"codim discriminant : nN = {w.discriminant_codim}",
    ]
    lines += [f"codim level {r:<6} : >= {c}" for r, c in sorted(w.level_codims.items())]
    return payload, lines + _warning_lines(w.warnings)


def cmd_bounds(prob: Problem):
    mp = prob.map_space_problem()
    page = assemble_e1(mp)
    bounds = weight_bounds(page, prob.d1_ranks or None)
    warnings = list(page.warnings)
    if prob.d1_ranks:
        warnings.append({"code": "EXTERNAL_D1", "message": "bounds use externally supplied d1 rank data"})
    rows = [{"deg": D, "weight": w, "lower": lo, "upper": hi} for (D, w), (lo, hi) in bounds.items()]
    payload = {"command": "bounds", **prob.summary(), "N_d": mp.N_d, "r_d": mp.r_d,
               "certified": page.complete, "bounds": rows, "warnings": warnings}
    lines = [f"{'deg':>5} {'weight':>7} {'lower':>6} {'upper':>6}"]
    lines += [f"{r['deg']:>5} {r['weight']:>7} {r['lower']:>6} {r['upper']:>6}" for r in rows]
    if not page.complete:
        lines.append("(bounds not certified: page incomplete)")
    return payload, lines + _warning_lines(warnings)


def cmd_oracle(prob: Problem):
    prob.require("variety", "degree", "target")
    v = prob.variety
    if not (v.name == "projective_space" and v.n == 1 and isinstance(prob.target, PN)):
        raise InputError("oracles exist only for X = P^1 and Y = P^N")
    d = prob.degree["pt"]
    if d.denominator != 1 or d < 0:
        raise InputError(f"degree must be a nonnegative integer, got {d}")
    d, N = int(d), prob.target.N
    payload: dict = {"command": "oracle", **prob.summary()}
    lines = []
    if N == 1:
        e = mor_p1_epoly(d)
        payload["recursion"] = _epoly_json(e)
        lines.append(f"resultant recursion: E_c(Mor_{d}) = {e}")
    if d == 1:
        table = mor1_les_table(N)
        e = table_epoly(table)
        payload["les"] = {"table": [{"deg": k, "hodge": [a, b], "dim": dim} for (k, a, b), dim in table.items()],
                          **_epoly_json(e)}
        lines.append(f"long exact sequence: E_c(Mor_1) = {e}")
    if len(payload) == 1 + len(prob.summary()):
        raise InputError("no oracle applies: need N = 1 or d = 1")
    return payload, lines


def cmd_selfcheck(prob: Problem | None, cap: int | None = None):
    extra = None
    if prob is not None and prob.variety is not None and prob.degree is not None:
        extra = (prob.variety.ring, prob.degree, None)
    report = run_selfcheck(extra) if cap is None else run_selfcheck(extra, cap=cap)
    payload = {"command": "selfcheck", **report.to_json()}
    lines = [f"{r.status.upper():<5} {r.name}: {r.detail}" for r in report.results]
    lines.append("selfcheck: " + ("pass" if report.ok else "FAIL"))
    return payload, lines, report.ok


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="morcohom", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", nargs="?", help="problem file (JSON)")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="fixed-width text output")
    parser.add_argument("--cutoff", choices=("r+1", "r-1"), help="override the E1 validity cutoff")
    parser.add_argument("--oracle-cap", type=int, default=None,
                        help="selfcheck: max basis tensors per sign-invariants oracle instance")
    parser.set_defaults(fmt="json")
    return parser


def _emit(payload: dict, lines: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        prob = load_problem(args.file, cutoff=args.cutoff) if args.file else None
        if args.command == "selfcheck":
            payload, lines, ok = cmd_selfcheck(prob, args.oracle_cap)
            _emit(payload, lines, args.fmt, out)
            return 0 if ok else 1
        if prob is None:
            raise InputError(f"'{args.command}' needs a problem file")
        handler = globals()[f"cmd_{args.command}"]
        payload, lines = handler(prob)
    except InconclusiveError as exc:
        payload = {"command": args.command, "error": "inconclusive", "message": str(exc),
                   "warnings": exc.warnings}
        _emit(payload, [f"INCONCLUSIVE: {exc}"] + _warning_lines(exc.warnings), args.fmt, out)
        return exc.exit_code
    except MorcohomError as exc:
        err.write(f"morcohom {args.command}: error: {exc}\n")
        return exc.exit_code
    _emit(payload, lines, args.fmt, out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
