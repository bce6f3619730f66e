import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from avcodes import Ring, format_poly, parse_poly, pinned_field
from avcodes.config import fixture_names, load_fixture
from avcodes.gf import ParseError
from avcodes.mpoly import RingMismatch, UnknownVariable, ZeroPolynomial
from oracles import divide_by_linear_power

F2, F4, F7 = pinned_field(2), pinned_field(4), pinned_field(7)


def test_ring_arithmetic():
    R7 = Ring(F7, ["x", "y"])
    x, y = R7.gens()
    assert (x + y) + (x - y) == R7.parse("2*x")
    R2 = Ring(F2, ["x", "y"])
    x2, y2 = R2.gens()
    assert (x2 + y2) ** 2 == x2 ** 2 + y2 ** 2
    assert (x * R7.zero()).is_zero()
    assert len(x * R7.zero()) == 0
    with pytest.raises(RingMismatch):
        x + x2


def test_leading_terms():
    R = Ring(F7, ["x", "y"])
    p = R.parse("x^2*y + y^3")
    assert p.leading_term()[0] == (0, 3)
    assert R.const(3).leading_term() == ((0, 0), F7(3))
    with pytest.raises(ZeroPolynomial):
        R.zero().leading_term()
    R5 = Ring(F4, ["s1", "s2", "s3", "s4", "s5", "x"])
    f = R5.parse("x^2*s5 + x*(s1 + s2^2) + s3*s4")
    assert f.leading_poly("x") == R5.var("s5")


def test_evaluate_and_specialize():
    R = Ring(F4, ["x", "y"])
    a = F4.gen
    curve = R.parse("y^2+y+x^3")
    assert curve.evaluate({"x": 1, "y": a}) == F4(0)
    R2 = Ring(F4, ["s1", "x"])
    assert R2.parse("x^2 + x*s1").specialize({"s1": 0}) == R2.parse("x^2")
    assert R.zero().evaluate({"x": a, "y": 1}) == F4(0)
    with pytest.raises(UnknownVariable):
        curve.evaluate({"z": 1})


def test_hasse_examples():
    x2 = Ring(F2, ["x"]).var("x")
    assert (x2 ** 2).hasse_derivative("x", 1).is_zero()
    x7 = Ring(F7, ["x"]).var("x")
    assert (x7 ** 5).hasse_derivative("x", 2) == 3 * x7 ** 3
    p = x7 ** 3 + 2 * x7
    assert p.hasse_derivative("x", 0) == p


def test_multiplicity_and_roots():
    R2 = Ring(F2, ["x"])
    assert R2.parse("(x+1)^2").multiplicity_at("x", 1) == 2
    R4 = Ring(F4, ["y"])
    a = F4.gen
    assert R4.parse("y^2 + g").multiplicity_at("y", a + 1) == 2
    assert R4.parse("y^2 + y + 1").multiplicity_at("y", a) == 1
    assert R4.parse("y^2 + y + 1").roots("y") == [(a, 1), (a + 1, 1)]
    assert R4.parse("y^2").roots("y") == [(F4(0), 2)]
    assert Ring(F7, ["y"]).parse("y^2 - 3*y + 2").roots("y") == [(F7(1), 1), (F7(2), 1)]
    with pytest.raises(ZeroPolynomial):
        R4.zero().roots("y")


def test_parse_and_format():
    R = Ring(F4, ["x", "y"])
    a = F4.gen
    assert R.parse("y^2+y+x^3") == R.var("y") ** 2 + R.var("y") + R.var("x") ** 3
    assert R.parse("g^2*x + 1") == (a + 1) * R.var("x") + 1
    R8 = Ring(pinned_field(8), ["x", "y"])
    nt = R8.parse("x^7-y^4-y^2-y")
    assert nt.degree("x") == 7 and len(nt) == 4
    assert R.parse("-x") == R.parse("x")  # characteristic 2
    for bad in ["x^", "x +* y", "(x", "z"]:
        with pytest.raises((ParseError, UnknownVariable)):
            R.parse(bad)


def test_parse_error_has_position():
    R = Ring(F4, ["x", "y"])
    with pytest.raises(ParseError) as info:
        R.parse("x + + ")
    assert info.value.pos is not None


@pytest.mark.parametrize("name", fixture_names())
def test_format_roundtrip_on_fixtures(name):
    code = load_fixture(name).code
    for g in code.generators + code.L:
        assert parse_poly(format_poly(g), code.ring) == g


# -- properties ---------------------------------------------------------------

monomial = st.tuples(*[st.integers(0, 6)] * 3)


@given(monomial, monomial, monomial)
def test_lex_order_laws(u, v, w):
    R = Ring(F7, ["a", "b", "c"])
    pu, pv, pw = R.pack(u), R.pack(v), R.pack(w)
    key = lambda e: tuple(reversed(e))  # lex with a < b < c
    assert (pu < pv) == (key(u) < key(v))
    if pu < pv:
        assert R.pack(tuple(x + y for x, y in zip(u, w))) < R.pack(tuple(x + y for x, y in zip(v, w)))
    assert R.pack((0, 0, 0)) <= pu


def _rand_poly(rng, R, deg):
    F = R.field
    return R.from_terms({(e,): rng.choice(F.elements()) for e in range(deg + 1)})


@given(st.integers(0, 2**32), st.sampled_from([4, 7, 8]), st.integers(0, 4))
@settings(max_examples=150)
def test_hasse_leibniz(seed, q, n):
    rng = random.Random(seed)
    R = Ring(pinned_field(q), ["x"])
    f, g = _rand_poly(rng, R, rng.randint(0, 6)), _rand_poly(rng, R, rng.randint(0, 6))
    rhs = R.zero()
    for i in range(n + 1):
        rhs = rhs + f.hasse_derivative("x", i) * g.hasse_derivative("x", n - i)
    assert (f * g).hasse_derivative("x", n) == rhs


@given(st.integers(0, 2**32), st.sampled_from([4, 7]))
@settings(max_examples=150)
def test_multiplicity_matches_division(seed, q):
    rng = random.Random(seed)
    F = pinned_field(q)
    R = Ring(F, ["x"])
    x = R.var("x")
    r = rng.choice(F.elements())
    k = rng.randint(0, 4)
    p = (x - F.element(r)) ** k * _rand_poly(rng, R, rng.randint(0, 4))
    if p.is_zero():
        return
    m = p.multiplicity_at("x", r)
    coeffs = p.univariate_coeffs("x")
    assert m >= k
    assert divide_by_linear_power(F, coeffs, r, m)
    assert not divide_by_linear_power(F, coeffs, r, m + 1)
