import itertools
import random

import pytest

from avcodes import Ring, pinned_field
from avcodes.code import enumerate_variety
from avcodes.groebner import (GroebnerBasis, IncompatibleOrder, buchberger, is_groebner,
                              normal_form)
from avcodes.points import radical_groebner
from conftest import config, star_spec
from avcodes.ideals import build_ideal, decoding_basis

F2, F4, F7 = pinned_field(2), pinned_field(4), pinned_field(7)


def test_normal_form_examples():
    R = Ring(F7, ["x", "y"])
    x, y = R.gens()
    assert normal_form(x ** 2, [x]).is_zero()
    assert normal_form(x + y, [y]) == x
    G = buchberger([x ** 2 - y, x * y - 1], R)
    for g in [x ** 2 - y, x * y - 1]:
        assert G.contains(g)


def test_buchberger_examples():
    R = Ring(F7, ["x", "y"])
    x, y = R.gens()
    assert list(buchberger([x + y, y], R)) == [x, y]
    assert buchberger([x, x + 1], R).is_unit()


def test_is_groebner():
    R = Ring(F7, ["y", "x"])  # y < x
    x, y = R.var("x"), R.var("y")
    ok, pair = is_groebner([x ** 2 - y, x])
    assert not ok and pair is not None
    assert is_groebner([R.one()]) == (True, None)
    assert is_groebner(list(buchberger([x ** 2 - y, x * y - 2], R)))[0]


def test_elimination_view():
    R = Ring(F7, ["x", "y"])
    x, y = R.gens()
    G = buchberger([x, y], R)
    assert G.elimination_view(["x"]) == [x]
    assert G.elimination_view(2) == list(G)
    with pytest.raises(IncompatibleOrder):
        G.elimination_view(["y"])


def test_stratify_small():
    R = Ring(F7, ["x"])
    G = buchberger([R.parse("x - 1")], R)
    st = G.stratify(["x"])
    assert st.zeta("x") == 1 and len(st.pure_power_tops("x")) == 1


def test_serialization_roundtrip():
    R = Ring(F4, ["x", "y"])
    G = buchberger([R.parse("y^2+y+x^3"), *R.field_equations()], R)
    text = G.serialize()
    assert text.startswith("# ring x,y")
    assert list(GroebnerBasis.deserialize(text, R)) == list(G)


def _random_ideal(rng, R, k=3):
    F = R.field
    polys = []
    for _ in range(k):
        terms = {tuple(rng.randint(0, 2) for _ in R.names): rng.choice(F.elements()[1:])
                 for _ in range(rng.randint(1, 3))}
        polys.append(R.from_terms(terms))
    return polys


@pytest.mark.parametrize("seed", range(25))
def test_buchberger_properties(seed):
    rng = random.Random(seed)
    F = rng.choice([F4, F7])
    R = Ring(F, ["x", "y", "z"])
    gens = _random_ideal(rng, R) + R.field_equations()
    G = buchberger(gens, R)
    assert is_groebner(list(G))[0]
    # reduced and monic
    for g in G:
        assert g.lc == 1
        for h in G:
            if h is not g:
                assert all(not R.divides(h.lm, m) for m in g.terms)
    # same ideal
    assert all(G.contains(g) for g in gens)
    # idempotent and independent of generator order
    assert list(buchberger(list(G), R)) == list(G)
    assert list(buchberger(list(reversed(gens)), R)) == list(G)


@pytest.mark.parametrize("seed", range(10))
def test_vanishing_consistency_with_field_equations(seed):
    rng = random.Random(seed)
    R = Ring(F4, ["x", "y"])
    gens = _random_ideal(rng, R, 2) + R.field_equations()
    G = buchberger(gens, R)
    if G.is_unit():
        return
    pts = enumerate_variety(gens, R)
    for g in G:
        assert all(g.eval_ints(P) == 0 for P in pts)
    # normal form zero iff vanishing on the variety, over all polys of degree <= 1 in each variable
    for coeffs in itertools.product(F4.elements(), repeat=4):
        f = R.from_terms({(0, 0): coeffs[0], (1, 0): coeffs[1], (0, 1): coeffs[2], (1, 1): coeffs[3]})
        vanishes = all(f.eval_ints(P) == 0 for P in pts)
        assert G.contains(f) == vanishes
    # uniqueness of the top element per slot
    st = G.stratify(["x", "y"])
    for v in ["x", "y"]:
        assert len(st.pure_power_tops(v)) == 1


@pytest.mark.parametrize("name,variant", [("sdg_curve", "FL"), ("sdg_surface1", "FL"),
                                          ("sdg_surface2", "FL"), ("norm_trace", "FL"),
                                          ("sdg_surface1", "STAR"), ("hermitian_q2", "FL")])
def test_buchberger_agrees_with_variety_basis(name, variant):
    """Plain Buchberger on the generators and the variety-based radical basis coincide."""
    spec = config(name).spec(variant=variant)
    R = spec.ring()
    G = buchberger(build_ideal(spec) + R.field_equations(), R)
    assert list(G) == list(decoding_basis(spec))


@pytest.mark.slow
@pytest.mark.parametrize("name", ["degenere1", "degenere2", "hermitian_q2"])
def test_buchberger_agrees_on_two_error_codes(name):
    spec = star_spec(name)
    R = spec.ring()
    G = buchberger(build_ideal(spec) + R.field_equations(), R)
    assert list(G) == list(decoding_basis(spec))


def test_radical_groebner_small():
    R = Ring(F4, ["x", "y"])
    G = radical_groebner([R.parse("y^2+y+x^3")], R)
    assert list(G) == list(buchberger([R.parse("y^2+y+x^3"), *R.field_equations()], R))
    assert len(G.standard_monomials()) == 8
