"""Bigraded dimension tables.

A :class:`BigradedTable` records ``dim`` for each cohomological degree ``k``
and Hodge bidegree ``(a, b)``.  Everything here is integer arithmetic on
finitely supported dictionaries; the tables carry no ring structure.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from math import comb

from .epoly import EPolynomial
from .errors import InconsistentDataError, InputError

Key = tuple[int, int, int]  # (k, a, b)


class BigradedTable:
    """Immutable map ``(k, a, b) -> dim`` with every stored dim >= 1."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[Key, int] | None = None):
        clean: dict[Key, int] = {}
        for key, dim in (entries or {}).items():
            k, a, b = (int(x) for x in key)
            if min(k, a, b) < 0:
                raise InputError(f"negative index in table entry {key}")
            if not isinstance(dim, int) or dim < 0:
                raise InputError(f"dimension must be a nonnegative int, got {dim!r}")
            if dim:
                clean[(k, a, b)] = clean.get((k, a, b), 0) + dim
        self._entries = {key: clean[key] for key in sorted(clean)}
        self._hash = None

    @classmethod
    def unit(cls) -> BigradedTable:
        return cls({(0, 0, 0): 1})

    @classmethod
    def empty(cls) -> BigradedTable:
        return cls()

    # -- mapping-ish access -------------------------------------------------

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def __getitem__(self, key: Key) -> int:
        return self._entries.get(tuple(key), 0)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BigradedTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._entries.items()))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(f"{k},({a},{b}):{d}" for (k, a, b), d in self._entries.items())
        return f"BigradedTable({{{body}}})"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: BigradedTable) -> BigradedTable:
        out = dict(self._entries)
        for key, dim in other._entries.items():
            out[key] = out.get(key, 0) + dim
        return BigradedTable(out)

    def __matmul__(self, other: BigradedTable) -> BigradedTable:
        return tensor(self, other)

    def shift(self, k: int = 0, a: int = 0, b: int = 0) -> BigradedTable:
        return BigradedTable({(k0 + k, a0 + a, b0 + b): d for (k0, a0, b0), d in self._entries.items()})

    # -- summaries ----------------------------------------------------------

    def total_dim(self) -> int:
        return sum(self._entries.values())

    def max_degree(self) -> int:
        return max((k for k, _, _ in self._entries), default=-1)

    def is_pure(self) -> bool:
        return all(a + b == k for k, a, b in self._entries)

    def betti(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (k, _, _), d in self._entries.items():
            out[k] = out.get(k, 0) + d
        return dict(sorted(out.items()))

    def weight_table(self) -> dict[tuple[int, int], int]:
        """Betti-only view: collapse each ``(a, b)`` to its weight ``a + b``."""
        out: dict[tuple[int, int], int] = {}
        for (k, a, b), d in self._entries.items():
            out[(k, a + b)] = out.get((k, a + b), 0) + d
        return dict(sorted(out.items()))

    # -- serialization ------------------------------------------------------

    def to_records(self) -> list[dict]:
        return [{"deg": k, "hodge": [a, b], "dim": d} for (k, a, b), d in self._entries.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> BigradedTable:
        entries: dict[Key, int] = {}
        for rec in records:
            try:
                key = (int(rec["deg"]), int(rec["hodge"][0]), int(rec["hodge"][1]))
                dim = rec["dim"]
            except (KeyError, TypeError, IndexError, ValueError) as exc:
                raise InputError(f"malformed table record {rec!r}") from exc
            if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
                raise InputError(f"table record dim must be a positive int: {rec!r}")
            if key in entries:
                raise InputError(f"duplicate table record for {key}")
            entries[key] = dim
        return cls(entries)

    def to_json(self) -> str:
        return json.dumps(self.to_records(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> BigradedTable:
        return cls.from_records(json.loads(text))


def tensor(A: BigradedTable, B: BigradedTable) -> BigradedTable:
    """Kunneth convolution of two tables."""
    out: dict[Key, int] = {}
    for (k1, a1, b1), d1 in A.items():
        for (k2, a2, b2), d2 in B.items():
            key = (k1 + k2, a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + d1 * d2
    return BigradedTable(out)


def dual_shift(A: BigradedTable, n: int) -> BigradedTable:
    """Reindex ``(k, (a, b)) -> (2n - k, (n - a, n - b))``."""
    if n < 0:
        raise InputError(f"duality dimension must be nonnegative, got {n}")
    out = {}
    for (k, a, b), d in A.items():
        if k > 2 * n or a > n or b > n:
            raise InconsistentDataError(f"table exceeds duality dimension {n} at entry ({k},({a},{b}))")
        out[(2 * n - k, n - a, n - b)] = d
    return BigradedTable(out)


def projective_space_table(m: int) -> BigradedTable:
    """Cohomology of ``P^m``; ``P^-1`` is the empty space."""
    if m < -1:
        raise InputError(f"invalid fiber dimension {m}")
    return BigradedTable({(2 * j, j, j): 1 for j in range(m + 1)})


def pic_table(q_irr: int) -> BigradedTable:
    """Cohomology of a ``q_irr``-dimensional abelian variety.

    This is the exterior algebra on ``q_irr`` classes of type (1,0) and
    ``q_irr`` of type (0,1), all in degree 1.
    """
    if q_irr < 0:
        raise InputError(f"irregularity must be nonnegative, got {q_irr}")
    out: dict[Key, int] = {}
    for i in range(q_irr + 1):
        for j in range(q_irr + 1):
            out[(i + j, i, j)] = comb(q_irr, i) * comb(q_irr, j)
    return BigradedTable(out)


def e_polynomial(A: BigradedTable) -> EPolynomial:
    coeffs: dict[tuple[int, int], int] = {}
    for (k, a, b), d in A.items():
        coeffs[(a, b)] = coeffs.get((a, b), 0) + (-1) ** k * d
    return EPolynomial(coeffs)

