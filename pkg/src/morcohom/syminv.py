"""Sign-twisted symmetric-group invariants of graded tensor powers.

For a graded vector space ``V`` (given as a :class:`BigradedTable`), the
sgn-isotypic part of ``V^{(x)p}`` under the Koszul-signed ``S_p`` action is
the graded exterior power: even classes anticommute, odd classes commute.
Two independent routes compute it:

* :func:`signed_invariants` reads it off a generating function;
* :func:`signed_invariants_oracle` builds the antisymmetrizer as an explicit
  matrix and takes its rank block by block.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb, gcd

from .errors import InputError, OracleTooLarge
from .graded import BigradedTable

ORACLE_CAP = 10**6


def signed_invariants(base: BigradedTable, p: int) -> BigradedTable:
    """Hodge-graded dimensions of ``(base^{(x)p} (x) sgn)^{S_p}``.

    This is the ``t^p`` coefficient of the product over entries of
    ``(1 + t z^k u^a v^b)^dim`` (even ``k``) and ``(1 - t z^k u^a v^b)^-dim``
    (odd ``k``).
    """
    if p < 0:
        raise InputError(f"p must be nonnegative, got {p}")
    # levels[j] holds the t^j coefficient as {(k, a, b): count}
    levels: list[dict[tuple[int, int, int], int]] = [{(0, 0, 0): 1}] + [{} for _ in range(p)]
    for (k, a, b), dim in base.items():
        if k % 2 == 0:
            series = [comb(dim, j) for j in range(p + 1)]
        else:
            series = [comb(dim + j - 1, j) for j in range(p + 1)]
        new = [dict() for _ in range(p + 1)]
        for i, level in enumerate(levels):
            for j in range(p + 1 - i):
                c = series[j]
                if not c:
                    continue
                target = new[i + j]
                for (k0, a0, b0), c0 in level.items():
                    key = (k0 + j * k, a0 + j * a, b0 + j * b)
                    target[key] = target.get(key, 0) + c0 * c
        levels = new
    return BigradedTable(levels[p])


def generating_series(base: BigradedTable, order: int) -> list[int]:
    """Total dimensions of :func:`signed_invariants` for ``p = 0..order``,
    expanded from the product at ``u = v = z = 1``."""
    even = sum(d for (k, _, _), d in base.items() if k % 2 == 0)
    odd = sum(d for (k, _, _), d in base.items() if k % 2 == 1)
    def sym(j):  # t^j coefficient of (1 - t)^-odd
        return 1 if j == 0 else comb(odd + j - 1, j)

    return [sum(comb(even, i) * sym(p - i) for i in range(p + 1)) for p in range(order + 1)]


# -- matrix oracle ----------------------------------------------------------


def _transposition_tree(p: int) -> list[tuple[int, int]]:
    """Spanning tree of the Cayley graph of ``S_p`` on adjacent transpositions.

    Entry ``j`` is ``(parent, i)``: group element ``j + 1`` is obtained from
    element ``parent`` (0 is the identity) by swapping positions ``i, i+1``.
    Every element of ``S_p`` appears exactly once.
    """
    seen = {tuple(range(p)): 0}
    order = [tuple(range(p))]
    tree = []
    for perm in order:
        for i in range(p - 1):
            nxt = list(perm)
            nxt[i], nxt[i + 1] = nxt[i + 1], nxt[i]
            nxt = tuple(nxt)
            if nxt not in seen:
                seen[nxt] = len(order)
                tree.append((seen[perm], i))
                order.append(nxt)
    return tree


def _rank(rows: list[dict[int, int]]) -> int:
    """Rank over Q of an integer sparse matrix given as rows ``{column: value}``.

    Fraction-free elimination: rows stay integral, reduced by their gcd.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                break
            piv = pivots[col]
            a, b = piv[col], row[col]
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def signed_invariants_oracle(base: BigradedTable, p: int, cap: int = ORACLE_CAP) -> BigradedTable:
    """Same quantity as :func:`signed_invariants`, by explicit linear algebra.

    Builds a basis of the ``p``-th tensor power, lets every permutation act
    through its decomposition into adjacent transpositions (each swap of
    factors of degrees ``k``, ``k'`` contributing ``(-1)^{k k'}``), and returns
    per ``(degree, Hodge)`` block the rank of ``(1/p!) sum sgn(s) rho(s)`` over
    the rationals.
    """
    if p < 0:
        raise InputError(f"p must be nonnegative, got {p}")
    basis = [key for key, dim in base.items() for _ in range(dim)]
    if len(basis) ** p > cap:
        raise OracleTooLarge(f"oracle instance too large: {len(basis)}^{p} basis tensors exceeds cap {cap}")
    if p == 0:
        return BigradedTable.unit()

    tree = _transposition_tree(p)
    odd = [basis[i][0] % 2 == 1 for i in range(len(basis))]

    # Columns of the antisymmetrizer at tensors in one S_p-orbit are +-
    # multiples of each other, so one representative per orbit (a
    # nondecreasing index tuple) spans the image.
    blocks: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}
    for rep in combinations_with_replacement(range(len(basis)), p):
        key = tuple(sum(basis[i][j] for i in rep) for j in range(3))
        blocks.setdefault(key, []).append(rep)

    # p! times the projector is an integer matrix of the same rank
    out: dict[tuple[int, int, int], int] = {}
    for key, reps in blocks.items():
        index: dict[tuple[int, ...], int] = {}
        columns = []
        for rep in reps:
            # states[j] = (image tensor, sgn(s) * Koszul sign) for element j
            states = [(rep, 1)]
            for parent, i in tree:
                cur, sign = states[parent]
                if odd[cur[i]] and odd[cur[i + 1]]:
                    sign = -sign
                states.append((cur[:i] + (cur[i + 1], cur[i]) + cur[i + 2 :], -sign))
            col: dict[int, int] = {}
            for cur, sign in states:
                row = index.setdefault(cur, len(index))
                col[row] = col.get(row, 0) + sign
            columns.append(col)
        r = _rank(columns)
        if r:
            out[key] = r
    return BigradedTable(out)


def profile_grid(max_total: int = 4, max_degree: int = 4):
    """Every table of total dim <= ``max_total`` built from pure basis
    classes ``(k, (a, k - a))`` with ``k <= max_degree``."""
    types = [(k, a, k - a) for k in range(max_degree + 1) for a in range(k + 1)]
    for size in range(max_total + 1):
        for combo in combinations_with_replacement(types, size):
            entries: dict[tuple[int, int, int], int] = {}
            for t in combo:
                entries[t] = entries.get(t, 0) + 1
            yield BigradedTable(entries)
