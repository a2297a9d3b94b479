import pytest
from hypothesis import given, strategies as st

from morcohom.errors import InputError
from morcohom.positivity import (
    IntersectionMinima,
    bound_report,
    iroot,
    r_formula,
    r_operational,
    separates_r,
)


def separated_by_line_bundle(deg: int) -> int:
    """Largest r with H^1(O(deg - r)) = 0 on P^1, i.e. r general points imposing independent conditions."""
    r = 0
    while max(0, -(deg - (r + 1)) - 1) == 0:
        r += 1
    return r


@given(st.integers(0, 10**40), st.integers(1, 7))
def test_iroot(x, k):
    r = iroot(x, k)
    assert r**k <= x < (r + 1) ** k


def test_iroot_rejects_negative():
    with pytest.raises(ValueError):
        iroot(-1, 2)


def test_surface_example():
    mins = IntersectionMinima(2, {1: 5, 2: 25})
    assert r_operational(mins) == 1
    assert r_formula(mins, "A") == 3
    assert r_formula(mins, "B") == 2
    report = bound_report(mins)
    assert {w["variant"] for w in report.warnings if w["code"] == "DISCREPANCY"} == {"A", "B"}


@pytest.mark.parametrize("a", range(2, 101))
def test_p1_closed_form(a):
    mins = IntersectionMinima.projective_space(1, a)
    assert r_operational(mins) == a - 1
    assert r_formula(mins, "A") == a - 1
    assert r_formula(mins, "B") == a - 2
    assert r_operational(mins) == separated_by_line_bundle(a - 2)


def test_no_separation():
    report = bound_report(IntersectionMinima(1, {1: 1}))
    assert report.operational == 0
    assert not report.separates
    assert "NO_SEPARATION" in {w["code"] for w in report.warnings}


def test_separation_is_strict():
    # n = 2, r = 1: need 2 m_1 > 6 and 4 m_2 > 36
    assert not separates_r(IntersectionMinima(2, {1: 3, 2: 10}), 1)
    assert not separates_r(IntersectionMinima(2, {1: 4, 2: 9}), 1)
    assert separates_r(IntersectionMinima(2, {1: 4, 2: 10}), 1)


minima = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(1, 10**6), min_size=n, max_size=n).map(
        lambda ms: IntersectionMinima(len(ms), {k + 1: m for k, m in enumerate(ms)})
    )
)


@given(minima)
def test_operational_is_threshold(mins):
    r = r_operational(mins)
    if r >= 1:
        assert separates_r(mins, r)
    assert not separates_r(mins, r + 1)


@given(minima, st.integers(1, 4))
def test_monotone_in_minima(mins, k):
    k = min(k, mins.n)
    bigger = IntersectionMinima(mins.n, {**mins.m, k: mins.m[k] + 1})
    assert r_operational(bigger) >= r_operational(mins)


@given(minima, st.integers(2, 5))
def test_scaling_delta(mins, t):
    # delta -> t delta multiplies m_k by t^k
    scaled = IntersectionMinima(mins.n, {k: t**k * m for k, m in mins.m.items()})
    assert r_operational(scaled) >= r_operational(mins)


@given(minima)
def test_variant_b_is_a_minus_one(mins):
    assert r_formula(mins, "B") == r_formula(mins, "A") - 1


def test_validation():
    with pytest.raises(InputError):
        IntersectionMinima(2, {1: 5})
    with pytest.raises(InputError):
        IntersectionMinima(1, {1: 0})
    with pytest.raises(InputError):
        IntersectionMinima(1, {1: True})
    with pytest.raises(InputError):
        r_formula(IntersectionMinima(1, {1: 3}), "C")
    with pytest.raises(InputError):
        IntersectionMinima.from_json({"dim": 1})


def test_json_roundtrip():
    mins = IntersectionMinima(2, {1: 4, 2: 32})
    assert IntersectionMinima.from_json(mins.to_json()) == mins
