import pytest

from morcohom.epoly import EPolynomial
from morcohom.errors import InconsistentDataError, InputError
from morcohom.oracles import (
    les_complement_table,
    mor1_les_table,
    mor_elliptic_epoly,
    mor_p1_epoly,
    segre_restriction_ranks,
    table_epoly,
)

u, v = EPolynomial.monomial(1, 0), EPolynomial.monomial(0, 1)
uv = u * v


def uv_power(k):
    return EPolynomial.monomial(k, k)


def test_small_degrees():
    assert mor_p1_epoly(0) == EPolynomial.projective_space(1)
    assert mor_p1_epoly(1) == uv_power(3) - uv
    assert mor_p1_epoly(2) == uv_power(5) - uv_power(3)


@pytest.mark.parametrize("d", range(1, 7))
def test_recursion_shape(d):
    e = mor_p1_epoly(d)
    # PGL_2-like: (uv)^{2d+1} - (uv)^{2d-1}, Euler characteristic 0
    assert e == uv_power(2 * d + 1) - uv_power(2 * d - 1)
    assert e.degree() == 2 * (2 * d + 1)
    assert e.euler_characteristic() == 0


def test_recursion_range():
    with pytest.raises(InputError):
        mor_p1_epoly(13)
    with pytest.raises(InputError):
        mor_p1_epoly(-1)


def test_les_degree_one():
    assert mor1_les_table(1) == {(3, 1, 1): 1, (6, 3, 3): 1}


@pytest.mark.parametrize("N", range(1, 5))
def test_les_matches_complement(N):
    want = EPolynomial.projective_space(2 * N + 1) - EPolynomial.projective_space(1) * EPolynomial.projective_space(N)
    assert table_epoly(mor1_les_table(N)) == want


def test_les_rejects_bad_ranks():
    with pytest.raises(InconsistentDataError):
        mor1_les_table(1, ranks={})
    bad = dict(segre_restriction_ranks(1))
    bad[(2, 1, 1)] = 3
    with pytest.raises(InconsistentDataError, match="exactness"):
        mor1_les_table(1, ranks=bad)
    with pytest.raises(InputError):
        mor1_les_table(0)


def test_les_zero_ranks_shift_cokernel():
    ambient = {(0, 0, 0): 1}
    closed = {(0, 0, 0): 1}
    assert les_complement_table(ambient, closed, {(0, 0, 0): 0}) == {(0, 0, 0): 1, (1, 0, 0): 1}
    assert les_complement_table(ambient, closed, {(0, 0, 0): 1}) == {}


def test_elliptic_stratification():
    assert mor_elliptic_epoly(0) == EPolynomial.projective_space(1)
    # degree 1: no maps, every section vanishes at its divisor point
    assert mor_elliptic_epoly(1) == EPolynomial()
    for d in range(2, 6):
        assert mor_elliptic_epoly(d).euler_characteristic() == 0
