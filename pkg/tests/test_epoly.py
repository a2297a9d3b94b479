from morcohom.epoly import EPolynomial


def test_arithmetic_and_display():
    x = EPolynomial.monomial
    e = x(3, 3) - x(1, 1)
    assert str(e) == "u^3v^3 - uv"
    assert str(EPolynomial()) == "0"
    assert str(-x(0, 0, 2) + x(1, 0)) == "u - 2"
    assert e.euler_characteristic() == 0
    assert e.degree() == 6
    assert (x(1, 0) + x(0, 1)) * (x(1, 0) - x(0, 1)) == x(2, 0) - x(0, 2)


def test_records_roundtrip():
    e = EPolynomial({(0, 0): 1, (2, 1): -3})
    assert EPolynomial.from_records(e.to_records()) == e
    assert e.to_records()[0] == {"hodge": [0, 0], "coef": 1}


def test_zero_coefficients_dropped():
    assert EPolynomial({(1, 1): 0}) == EPolynomial()
    assert EPolynomial.projective_space(-1) == EPolynomial()
