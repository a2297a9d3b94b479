"""Independent brute-force checks for ``Mor_d(P^1, P^1)``.

Neither oracle touches the table or spectral-sequence code; they share only
the :class:`EPolynomial` type with the engine.

* :func:`mor_p1_epoly` stratifies pairs of binary forms by the degree of
  their common factor.  A pair of degree-d forms up to scaling is a point of
  ``P^{2d+1}``; pairs whose gcd has degree exactly j are a common factor in
  ``P^j`` times a coprime pair of degree ``d - j``.
* :func:`mor1_les_table` runs the long exact sequence of the pair
  (``P^{2N+1}``, discriminant) for ``d = 1``, where the discriminant is the
  Segre variety ``P^1 x P^N`` of rank-one ``2 x (N+1)`` matrices.
* :func:`mor_elliptic_epoly` repeats the stratification for an elliptic
  source curve.
"""

from __future__ import annotations

from collections.abc import Mapping

from .epoly import EPolynomial
from .errors import InconsistentDataError, InputError

MAX_DEGREE = 12

Table = dict[tuple[int, int, int], int]


def mor_p1_epoly(d: int, memo: dict[int, EPolynomial] | None = None) -> EPolynomial:
    """``E_c(Mor_d(P^1, P^1))`` from the resultant stratification."""
    if not 0 <= d <= MAX_DEGREE:
        raise InputError(f"degree must be in 0..{MAX_DEGREE}, got {d}")
    memo = {} if memo is None else memo
    memo.setdefault(0, EPolynomial.projective_space(1))
    for e in range(1, d + 1):
        if e in memo:
            continue
        value = EPolynomial.projective_space(2 * e + 1)
        for j in range(1, e + 1):
            value = value - EPolynomial.projective_space(j) * memo[e - j]
        memo[e] = value
    return memo[d]


def _proj(m: int) -> Table:
    return {(2 * j, j, j): 1 for j in range(m + 1)}


def _segre(N: int) -> Table:
    out: Table = {}
    for i in range(2):
        for j in range(N + 1):
            key = (2 * (i + j), i + j, i + j)
            out[key] = out.get(key, 0) + 1
    return out


def segre_restriction_ranks(N: int) -> Table:
    """Ranks of ``H^k(P^{2N+1}) -> H^k(P^1 x P^N)``.

    The restriction of ``h^j`` is the j-th power of an ample class, nonzero up
    to the dimension ``N + 1`` of the Segre variety.
    """
    return {(2 * j, j, j): 1 for j in range(N + 2)}


def les_complement_table(ambient: Table, closed: Table, ranks: Mapping[tuple[int, int, int], int]) -> Table:
    """``H_c`` of ``ambient - closed`` from ranks of the restriction map.

    ``H_c^k(U) = coker(r_{k-1}) (+) ker(r_k)`` blockwise in Hodge type, with
    ``r_k: H^k(ambient) -> H^k(closed)``.
    """
    if not ranks:
        raise InconsistentDataError("no restriction-map rank data supplied")
    keys = set(ambient) | set(closed) | set(ranks)
    out: Table = {}
    for key in keys:
        r = ranks.get(key, 0)
        if r < 0 or r > ambient.get(key, 0) or r > closed.get(key, 0):
            raise InconsistentDataError(f"rank {r} at {key} violates exactness bounds")
        k, a, b = key
        kernel = ambient.get(key, 0) - r
        cokernel = closed.get(key, 0) - r
        if kernel:
            out[key] = out.get(key, 0) + kernel
        if cokernel:
            shifted = (k + 1, a, b)
            out[shifted] = out.get(shifted, 0) + cokernel
    return dict(sorted(out.items()))


def mor1_les_table(N: int, ranks: Mapping[tuple[int, int, int], int] | None = None) -> Table:
    """``H_c(Mor_1(P^1, P^N))`` as ``{(k, a, b): dim}``."""
    if N < 1:
        raise InputError(f"N must be a positive integer, got {N}")
    ranks = segre_restriction_ranks(N) if ranks is None else ranks
    return les_complement_table(_proj(2 * N + 1), _segre(N), ranks)


def table_epoly(table: Mapping[tuple[int, int, int], int]) -> EPolynomial:
    out: dict[tuple[int, int], int] = {}
    for (k, a, b), d in table.items():
        out[(a, b)] = out.get((a, b), 0) + (-1) ** k * d
    return EPolynomial(out)


def _sym_power_elliptic(j: int) -> EPolynomial:
    """``E(Sym^j E)`` for an elliptic curve, from
    ``sum_j E(Sym^j E) t^j = (1 - ut)(1 - vt) / ((1 - t)(1 - uvt))``."""
    numerator = [EPolynomial.one(), -(EPolynomial.monomial(1, 0) + EPolynomial.monomial(0, 1)),
                 EPolynomial.monomial(1, 1)]
    total = EPolynomial()
    for i, c in enumerate(numerator):
        if j - i >= 0:
            # (1 - t)^-1 (1 - uvt)^-1 contributes sum_{b <= j - i} (uv)^b
            total = total + c * EPolynomial.projective_space(j - i)
    return total


def mor_elliptic_epoly(d: int, memo: dict[int, EPolynomial] | None = None) -> EPolynomial:
    """``E_c(Mor_d(E, P^1))`` for an elliptic curve ``E``.

    Same stratification as :func:`mor_p1_epoly`: every line bundle of degree
    ``e >= 1`` has ``e`` sections, so the pairs form a ``P^{2e-1}``-bundle
    over ``Pic^e = E``, and the pairs with a common divisor of degree j are
    ``Sym^j E x Mor_{e-j}``.  Degree-0 maps are the constants.
    """
    if not 0 <= d <= MAX_DEGREE:
        raise InputError(f"degree must be in 0..{MAX_DEGREE}, got {d}")
    memo = {} if memo is None else memo
    memo.setdefault(0, EPolynomial.projective_space(1))
    for e in range(1, d + 1):
        if e in memo:
            continue
        value = _sym_power_elliptic(1) * EPolynomial.projective_space(2 * e - 1)
        for j in range(1, e + 1):
            value = value - _sym_power_elliptic(j) * memo[e - j]
        memo[e] = value
    return memo[d]
