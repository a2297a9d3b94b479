"""Finite graded commutative rings with a degree functional.

A :class:`RingPresentation` is explicit basis / structure-constant data for a
numerical Chow ring, enough to evaluate Hirzebruch-Riemann-Roch integrals
``int ch(L) td(X)``.  Presets cover projective spaces, products of two
projective spaces and smooth curves.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from itertools import product
from math import factorial

from .errors import InconsistentDataError, InputError, NotAcyclicError


def parse_rational(value) -> Fraction:
    """Parse an int or a decimal-free ``"p/q"`` string."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str) and value.strip() and not any(ch in value for ch in ".eE"):
        try:
            return Fraction(value.strip())
        except ValueError:
            pass
    raise InputError(f"rational must be an int or a 'p/q' string, got {value!r}")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class RingElement:
    """Immutable rational combination of named basis classes."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[str, object] | None = None):
        clean = {}
        for name, c in (coeffs or {}).items():
            q = parse_rational(c) if not isinstance(c, Fraction) else c
            if q:
                clean[name] = clean.get(name, Fraction(0)) + q
        self._coeffs = {k: v for k, v in sorted(clean.items()) if v}

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, name: str) -> Fraction:
        return self._coeffs.get(name, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: RingElement) -> RingElement:
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return RingElement(out)

    def scale(self, c) -> RingElement:
        c = Fraction(c)
        return RingElement({k: v * c for k, v in self._coeffs.items()})

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "RingElement(0)"
        return "RingElement(" + " + ".join(f"{v}*{k}" for k, v in self._coeffs.items()) + ")"

    def to_records(self) -> list[dict]:
        return [{"name": k, "coef": format_rational(v)} for k, v in self._coeffs.items()]


class RingPresentation:
    """Basis per codimension, structure constants and a degree functional.

    ``mult`` maps an (unordered) pair of basis names to a dict of output
    coefficients.  Products with the unit are implicit, products past the top
    codimension are zero, and a pair absent from ``mult`` multiplies to zero.
    Construction checks unit laws, grading, commutativity and associativity.
    """

    def __init__(
        self,
        dim: int,
        basis: list[list[str]],
        mult: Mapping[tuple[str, str], Mapping[str, object]],
        degree: Mapping[str, object],
        todd: RingElement | None = None,
        aliases: Mapping[str, str] | None = None,
    ):
        if dim < 0:
            raise InputError(f"ring dimension must be nonnegative, got {dim}")
        if len(basis) != dim + 1:
            raise InputError(f"basis must list codimensions 0..{dim}, got {len(basis)} groups")
        if len(basis[0]) != 1:
            raise InputError("codimension-0 basis must be the single unit class")
        self.dim = dim
        self.basis = [list(group) for group in basis]
        self.unit_name = basis[0][0]
        self.codim: dict[str, int] = {}
        for c, group in enumerate(basis):
            for name in group:
                if name in self.codim:
                    raise InputError(f"duplicate basis name {name!r}")
                self.codim[name] = c
        self.aliases = dict(aliases or {})
        for alias, target in self.aliases.items():
            if target not in self.codim or alias in self.codim:
                raise InputError(f"bad alias {alias!r} -> {target!r}")

        self._mult: dict[tuple[str, str], dict[str, Fraction]] = {}
        for (lhs, rhs), out in mult.items():
            lhs, rhs = self._resolve(lhs), self._resolve(rhs)
            coeffs = {self._resolve(n): parse_rational(c) for n, c in out.items()}
            coeffs = {n: c for n, c in coeffs.items() if c}
            target = self.codim[lhs] + self.codim[rhs]
            for n in coeffs:
                if self.codim[n] != target:
                    raise InconsistentDataError(
                        f"product {lhs}*{rhs} has component {n!r} outside codimension {target}"
                    )
            if target > dim and coeffs:
                raise InconsistentDataError(f"product {lhs}*{rhs} must vanish beyond top codimension")
            if self.unit_name in (lhs, rhs):
                other = rhs if lhs == self.unit_name else lhs
                if coeffs != {other: Fraction(1)}:
                    raise InconsistentDataError(f"unit law fails for {other!r}")
            for key in ((lhs, rhs), (rhs, lhs)):
                if key in self._mult and self._mult[key] != coeffs:
                    raise InconsistentDataError(f"multiplication is not commutative on {lhs}, {rhs}")
            self._mult[(lhs, rhs)] = coeffs
            self._mult[(rhs, lhs)] = coeffs

        self.degree_functional: dict[str, Fraction] = {}
        for name, c in degree.items():
            name = self._resolve(name)
            if self.codim[name] != dim:
                raise InputError(f"degree functional is supported on top codimension only, got {name!r}")
            self.degree_functional[name] = parse_rational(c)

        self._check_associative()
        self.todd = todd
        if todd is not None:
            self.validate(todd)

    # -- internals ----------------------------------------------------------

    def _resolve(self, name: str) -> str:
        name = self.aliases.get(name, name)
        if name not in self.codim:
            raise InputError(f"unknown basis class {name!r}")
        return name

    def _basis_product(self, x: str, y: str) -> dict[str, Fraction]:
        if x == self.unit_name:
            return {y: Fraction(1)}
        if y == self.unit_name:
            return {x: Fraction(1)}
        if self.codim[x] + self.codim[y] > self.dim:
            return {}
        return self._mult.get((x, y), {})

    def _check_associative(self) -> None:
        names = list(self.codim)
        for x, y, z in product(names, repeat=3):
            if self.codim[x] + self.codim[y] + self.codim[z] > self.dim:
                continue
            left = self.multiply(self.multiply(self.basis_element(x), self.basis_element(y)), self.basis_element(z))
            right = self.multiply(self.basis_element(x), self.multiply(self.basis_element(y), self.basis_element(z)))
            if left != right:
                raise InconsistentDataError(f"multiplication is not associative on ({x}, {y}, {z})")

    # -- public API ---------------------------------------------------------

    def basis_element(self, name: str) -> RingElement:
        return RingElement({self._resolve(name): 1})

    def one(self) -> RingElement:
        return RingElement({self.unit_name: 1})

    def element(self, coeffs: Mapping[str, object]) -> RingElement:
        out: dict[str, Fraction] = {}
        for name, c in coeffs.items():
            n = self._resolve(name)
            out[n] = out.get(n, Fraction(0)) + parse_rational(c)
        return RingElement(out)

    def validate(self, x: RingElement) -> RingElement:
        for name, _ in x.items():
            if name not in self.codim:
                raise InputError(f"element uses unknown class {name!r}")
        return x

    def component(self, x: RingElement, codim: int) -> RingElement:
        return RingElement({n: c for n, c in x.items() if self.codim[n] == codim})

    def is_homogeneous(self, x: RingElement, codim: int) -> bool:
        return all(self.codim[n] == codim for n, _ in x.items())

    def multiply(self, x: RingElement, y: RingElement) -> RingElement:
        out: dict[str, Fraction] = {}
        for n1, c1 in x.items():
            for n2, c2 in y.items():
                for n, c in self._basis_product(n1, n2).items():
                    out[n] = out.get(n, Fraction(0)) + c1 * c2 * c
        return RingElement(out)

    def power(self, x: RingElement, k: int) -> RingElement:
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    def integrate(self, x: RingElement) -> Fraction:
        return sum((c * self.degree_functional.get(n, Fraction(0)) for n, c in x.items()), Fraction(0))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        mult = []
        seen = set()
        for (lhs, rhs), out in sorted(self._mult.items()):
            if (rhs, lhs) in seen or not out:
                continue
            seen.add((lhs, rhs))
            mult.append({
                "lhs": lhs,
                "rhs": rhs,
                "out": [{"name": n, "coef": format_rational(c)} for n, c in sorted(out.items())],
            })
        data = {
            "dim": self.dim,
            "basis": self.basis,
            "mult": mult,
            "degree": [{"name": n, "coef": format_rational(c)} for n, c in sorted(self.degree_functional.items())],
        }
        if self.aliases:
            data["aliases"] = dict(sorted(self.aliases.items()))
        return data

    @classmethod
    def from_json(cls, data: Mapping, todd=None) -> RingPresentation:
        try:
            dim = data["dim"]
            basis = data["basis"]
            mult = {}
            for rec in data.get("mult", []):
                key = (rec["lhs"], rec["rhs"])
                if key in mult:
                    raise InputError(f"duplicate structure constant for {key}")
                mult[key] = _records_to_dict(rec["out"])
            degree = _records_to_dict(data["degree"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed ring presentation: {exc}") from exc
        if not isinstance(dim, int) or not isinstance(basis, list) or not all(isinstance(g, list) for g in basis):
            raise InputError("ring presentation needs integer 'dim' and a list of basis groups")
        ring = cls(dim, basis, mult, degree, aliases=data.get("aliases"))
        if todd is not None:
            ring.todd = ring.validate(ring.element(_records_to_dict(todd)) if isinstance(todd, list) else todd)
        return ring


def _records_to_dict(records: Iterable[Mapping]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for rec in records:
        try:
            name, coef = rec["name"], rec["coef"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed coefficient record {rec!r}") from exc
        out[name] = out.get(name, Fraction(0)) + parse_rational(coef)
    return out


# -- HRR ----------------------------------------------------------------------


def multiply(R: RingPresentation, x: RingElement, y: RingElement) -> RingElement:
    return R.multiply(x, y)


def integrate(R: RingPresentation, x: RingElement) -> Fraction:
    return R.integrate(x)


def chern_character(R: RingPresentation, c1L: RingElement) -> RingElement:
    """``sum_{k<=n} c1L^k / k!`` for a line bundle with first Chern class c1L."""
    if not R.is_homogeneous(c1L, 1):
        raise InputError("c1(L) must be homogeneous of codimension 1")
    total = RingElement()
    term = R.one()
    for k in range(R.dim + 1):
        total = total + term.scale(Fraction(1, factorial(k)))
        term = R.multiply(term, c1L)
    return total


def hrr_sections(R: RingPresentation, c1L: RingElement, todd: RingElement | None = None) -> int:
    """``N_d = int_X ch(L) td(X)``, asserted to be a nonnegative integer."""
    todd = R.todd if todd is None else todd
    if todd is None:
        raise InputError("no Todd class supplied")
    R.validate(todd)
    if todd[R.unit_name] != 1:
        raise InconsistentDataError("inconsistent ring/Todd data: Todd class must have unit component 1")
    value = R.integrate(R.multiply(chern_character(R, c1L), todd))
    if value.denominator != 1:
        raise InconsistentDataError(f"inconsistent ring/Todd data: HRR integral {value} is not an integer")
    if value < 0:
        raise NotAcyclicError(f"class not acyclic/effective: HRR integral is {value}")
    return int(value)


# -- presets --------------------------------------------------------------------


def todd_series(n: int) -> list[Fraction]:
    """Coefficients of ``(h / (1 - e^{-h}))^{n+1}`` up to ``h^n``."""
    # (1 - e^{-h}) / h = sum (-1)^k h^k / (k+1)!
    g = [Fraction((-1) ** k, factorial(k + 1)) for k in range(n + 1)]
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / g[0]
    for m in range(1, n + 1):
        inv[m] = -sum(g[j] * inv[m - j] for j in range(1, m + 1)) / g[0]
    out = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(n + 1):
        out = [sum(out[i] * inv[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return out


def _monomial_name(exps: tuple[int, ...], symbols: tuple[str, ...]) -> str:
    parts = [s if e == 1 else f"{s}^{e}" for s, e in zip(symbols, exps) if e]
    return "*".join(parts) or "1"


def _monomial_ring(dims: tuple[int, ...], symbols: tuple[str, ...]) -> RingPresentation:
    """``Q[h_1..h_r] / (h_i^{dims_i + 1})`` with the top monomial named ``pt``."""
    top = sum(dims)
    exps_all = list(product(*(range(d + 1) for d in dims)))

    def name(e):
        return "pt" if sum(e) == top and top > 0 else _monomial_name(e, symbols)

    basis = [[] for _ in range(top + 1)]
    for e in sorted(exps_all, key=lambda e: tuple(-x for x in e)):
        basis[sum(e)].append(name(e))
    mult = {}
    for e1, e2 in product(exps_all, repeat=2):
        if sum(e1) == 0 or sum(e2) == 0:
            continue
        s = tuple(x + y for x, y in zip(e1, e2))
        out = {name(s): 1} if all(x <= d for x, d in zip(s, dims)) else {}
        mult[(name(e1), name(e2))] = out
    aliases = {}
    if top > 0:
        aliases[_monomial_name(tuple(dims), symbols)] = "pt"
    return RingPresentation(top, basis, mult, {"pt": 1}, aliases=aliases)


def projective_space(n: int) -> RingPresentation:
    if n < 1:
        raise InputError(f"projective space dimension must be >= 1, got {n}")
    ring = _monomial_ring((n,), ("h",))
    coeffs = todd_series(n)
    ring.todd = ring.element({_monomial_name((i,), ("h",)) if i else "1": c for i, c in enumerate(coeffs)})
    return ring


def product_of_projective_spaces(a: int, b: int) -> RingPresentation:
    if a < 1 or b < 1:
        raise InputError(f"factor dimensions must be >= 1, got ({a}, {b})")
    ring = _monomial_ring((a, b), ("h1", "h2"))
    t1, t2 = todd_series(a), todd_series(b)
    ring.todd = ring.element({
        _monomial_name((i, j), ("h1", "h2")): t1[i] * t2[j] for i in range(a + 1) for j in range(b + 1)
    })
    return ring


def curve(genus: int) -> RingPresentation:
    if genus < 0:
        raise InputError(f"genus must be nonnegative, got {genus}")
    ring = RingPresentation(1, [["1"], ["pt"]], {}, {"pt": 1})
    ring.todd = ring.element({"1": 1, "pt": 1 - genus})
    return ring


PRESETS = {
    "projective_space": projective_space,
    "product_of_projective_spaces": product_of_projective_spaces,
    "curve": curve,
}


def preset(name: str, **params) -> RingPresentation:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise InputError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    try:
        return factory(**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for preset {name!r}: {exc}") from exc
