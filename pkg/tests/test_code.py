import itertools
import random
from math import comb

import pytest

from avcodes import Ring, pinned_field
from avcodes.code import (AffineVarietyCode, EmptyVariety, ErrorPattern, LengthMismatch,
                          NotCorrectable, enumerate_variety)
from avcodes.linalg import rank
from conftest import ALL_FIXTURES, config

F4 = pinned_field(4)
a = F4.generator
a2 = F4.mul(a, a)


def test_hermitian_points(herm):
    code = herm.code
    assert code.points == [(0, 0), (0, 1), (1, a), (1, a2), (a, a), (a, a2), (a2, a), (a2, a2)]
    assert sorted(code.points) == sorted(enumerate_variety(code.generators, code.ring))
    assert (code.n, code.r, code.t) == (8, 5, 2)


def test_hermitian_family_size():
    # the q=3 curve over GF(9) has q^3 points
    F9 = pinned_field(9)
    R = Ring(F9, ["x", "y"])
    pts = enumerate_variety([R.parse("y^3+y-x^4"), *R.field_equations()], R)
    assert len(pts) == 27


def test_enumerate_variety_edge_cases():
    F2 = pinned_field(2)
    R = Ring(F2, ["x"])
    assert enumerate_variety(R.field_equations(), R) == [(0,), (1,)]
    with pytest.raises(EmptyVariety):
        enumerate_variety([R.parse("x^2+x+1"), *R.field_equations()], R)


def test_hermitian_syndromes(herm):
    code = herm.code
    assert code.syndrome([0, 0, 0, 0, 0, 1, 1, 0]) == (0, 1, 1, 1, 0)
    assert code.syndrome([1, a, 0, 0, 0, 0, 0, 0]) == (a2, 0, a, 0, 0)
    assert code.syndrome([0] * 8) == (0,) * 5
    with pytest.raises(LengthMismatch):
        code.syndrome([0] * 7)


def test_oracle_decode(herm):
    code = herm.code
    assert code.oracle_decode((0, 1, 1, 1, 0)) == ErrorPattern(((5, 1), (6, 1)))
    assert code.oracle_decode((0,) * 5) == ErrorPattern()
    assert code.oracle_decode((a2, a2, 1, a2, 1)) == ErrorPattern(((2, a2),))
    table = code.oracle_table()
    bad = next(s for s in itertools.product(F4.elements(), repeat=5) if s not in table)
    with pytest.raises(NotCorrectable):
        code.oracle_decode(bad)


def test_pattern_counts(herm):
    code = herm.code
    pats = list(code.correctable_patterns())
    assert len(pats) == 1 + 8 * 3 + 28 * 9 == 277 == code.count_correctable()
    assert len(set(pats)) == 277
    assert len({code.syndrome_of(e) for e in pats}) == 277


def test_tiny_codes():
    F2 = pinned_field(2)
    R = Ring(F2, ["x"])
    one = AffineVarietyCode.build(R, [R.parse("x")], [R.one()], 1)
    assert one.n == 1 and len(list(one.correctable_patterns())) == 2
    zero_t = AffineVarietyCode.build(R, [], [R.one()], 0)
    assert list(zero_t.correctable_patterns()) == [ErrorPattern()]


def test_build_rejects_bad_input():
    R = Ring(F4, ["x", "y"])
    curve = R.parse("y^2+y+x^3")
    with pytest.raises(ValueError):
        AffineVarietyCode.build(R, [curve], [R.one(), R.one()], 1)
    with pytest.raises(ValueError):
        AffineVarietyCode.build(R, [curve], [R.one()], 1, points=[(0, 0), (1, 1)])


def test_error_pattern_validation():
    with pytest.raises(ValueError):
        ErrorPattern(((0, 1), (0, 2)))
    with pytest.raises(ValueError):
        ErrorPattern(((0, 0),))
    e = ErrorPattern(((3, 2), (1, 1)))
    assert e.positions == (1, 3) and e.weight == 2
    assert ErrorPattern.from_word(e.to_word(5)) == e


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_fixture_codes_are_sound(name):
    code = config(name).code
    assert rank(code.field, code.H) == code.r
    for row, b in zip(code.H, code.L):
        assert row == [b.eval_ints(P) for P in code.points]
    assert all(g.eval_ints(P) == 0 for g in code.generators for P in code.points)
    assert len(code.oracle_table()) == code.count_correctable() == sum(
        comb(code.n, mu) * (code.field.q - 1) ** mu for mu in range(code.t + 1))


@pytest.mark.parametrize("seed", range(20))
def test_syndrome_linearity(herm, seed):
    rng = random.Random(seed)
    code = herm.code
    F = code.field
    u = [rng.choice(F.elements()) for _ in range(code.n)]
    v = [rng.choice(F.elements()) for _ in range(code.n)]
    w = [F.add(x, y) for x, y in zip(u, v)]
    assert code.syndrome(w) == tuple(F.add(x, y) for x, y in zip(code.syndrome(u), code.syndrome(v)))
