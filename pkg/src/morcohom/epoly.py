"""Two-variable Hodge-Deligne E-polynomials with integer coefficients.

An :class:`EPolynomial` is a finitely supported map ``(a, b) -> c`` standing
for ``sum c * u^a v^b``.  It deliberately depends on nothing else in the
package so that the oracles can use it without touching the table code.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping


class EPolynomial:
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (a, b), c in (coeffs or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"E-polynomial coefficient must be int, got {c!r}")
            if c:
                clean[(int(a), int(b))] = clean.get((int(a), int(b)), 0) + c
        self._coeffs = {k: clean[k] for k in sorted(clean) if clean[k]}
        self._hash = None

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> EPolynomial:
        return cls({(a, b): c})

    @classmethod
    def one(cls) -> EPolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def projective_space(cls, m: int) -> EPolynomial:
        """``1 + uv + ... + (uv)^m``; zero for ``m = -1``."""
        return cls({(j, j): 1 for j in range(m + 1)})

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> EPolynomial:
        return cls({(int(r["hodge"][0]), int(r["hodge"][1])): int(r["coef"]) for r in records})

    @property
    def coefficients(self) -> dict[tuple[int, int], int]:
        return dict(self._coeffs)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._coeffs.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = EPolynomial({(0, 0): other})
        if not isinstance(other, EPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other: EPolynomial) -> EPolynomial:
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return EPolynomial(out)

    def __neg__(self) -> EPolynomial:
        return EPolynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: EPolynomial) -> EPolynomial:
        return self + (-other)

    def __mul__(self, other: EPolynomial | int) -> EPolynomial:
        if isinstance(other, int):
            return EPolynomial({k: c * other for k, c in self._coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._coeffs.items():
            for (a2, b2), c2 in other._coeffs.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return EPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, u, v):
        return sum(c * u**a * v**b for (a, b), c in self._coeffs.items())

    def euler_characteristic(self) -> int:
        return self.evaluate(1, 1)

    def degree(self) -> int:
        """Top weight ``max(a + b)``; ``-1`` for the zero polynomial."""
        return max((a + b for a, b in self._coeffs), default=-1)

    def to_records(self) -> list[dict]:
        return [{"hodge": [a, b], "coef": c} for (a, b), c in self._coeffs.items()]

    def __repr__(self) -> str:
        return f"EPolynomial({self._coeffs!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        # highest weight first reads most naturally
        for (a, b), c in sorted(self._coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            mono = _monomial_str(a, b)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}{mono}" if mono else str(mag))
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _monomial_str(a: int, b: int) -> str:
    parts = []
    for var, e in (("u", a), ("v", b)):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return "".join(parts)
