"""Affine-variety codes: points, parity-check matrix, syndromes and a brute-force oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .gf import FieldSpec
from .linalg import rank
from .mpoly import Ring, SparsePoly


class EmptyVariety(ValueError):
    pass


class LengthMismatch(ValueError):
    pass


class NotCorrectable(ValueError):
    pass


@dataclass(frozen=True)
class ErrorPattern:
    """Errors as ``(position, value)`` pairs; positions are 0-based indices into the point list."""

    entries: tuple = ()

    def __post_init__(self):
        ent = tuple(sorted((int(p), int(v)) for p, v in self.entries))
        if len({p for p, _ in ent}) != len(ent):
            raise ValueError("repeated error position")
        if any(v == 0 for _, v in ent):
            raise ValueError("error values must be nonzero")
        object.__setattr__(self, "entries", ent)

    @property
    def weight(self) -> int:
        return len(self.entries)

    @property
    def positions(self) -> tuple:
        return tuple(p for p, _ in self.entries)

    def to_word(self, n: int) -> list[int]:
        w = [0] * n
        for p, v in self.entries:
            w[p] = v
        return w

    @classmethod
    def from_word(cls, word) -> "ErrorPattern":
        return cls(tuple((i, v) for i, v in enumerate(word) if v))


def enumerate_variety(generators, ring: Ring) -> list[tuple]:
    """Zeros of the generators in GF(q)^m, first coordinate varying slowest, by field order."""
    F = ring.field
    pts = []
    for P in itertools.product(F.elements(), repeat=ring.nvars):
        if all(g.eval_ints(P) == 0 for g in generators):
            pts.append(P)
    if not pts:
        raise EmptyVariety("the variety has no rational points")
    return pts


@dataclass
class AffineVarietyCode:
    field: FieldSpec
    ring: Ring
    generators: list  # generators of I (field equations included)
    points: list  # ordered raw-int tuples
    L: list  # the functions b_1..b_r
    t: int
    name: str = "code"
    H: list = field(default_factory=list)
    _oracle: dict | None = field(default=None, repr=False)

    @classmethod
    def build(cls, ring: Ring, generators, L, t: int, points=None, name="code"):
        gens = list(generators)
        fe = ring.field_equations()
        gens += [f for f in fe if f not in gens]
        scanned = enumerate_variety(gens, ring)
        if points is None:
            pts = scanned
        else:
            pts = [tuple(P) for P in points]
            if sorted(pts) != sorted(scanned):
                raise ValueError("listed points do not match the variety of the ideal")
        H = [[b.eval_ints(P) for P in pts] for b in L]
        code = cls(ring.field, ring, gens, pts, list(L), t, name, H)
        if rank(ring.field, H) != len(L):
            raise ValueError("the functions in L are not independent on the variety")
        return code

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return len(self.L)

    def point_index(self, P) -> int:
        return self.points.index(tuple(P))

    def syndrome(self, word) -> tuple:
        if len(word) != self.n:
            raise LengthMismatch(f"word has length {len(word)}, expected {self.n}")
        F = self.field
        out = []
        for row in self.H:
            acc = 0
            for h, w in zip(row, word):
                if w and h:
                    acc = F.add(acc, F.mul(h, w))
            out.append(acc)
        return tuple(out)

    def syndrome_of(self, pattern: ErrorPattern) -> tuple:
        F = self.field
        out = []
        for row in self.H:
            acc = 0
            for p, v in pattern.entries:
                acc = F.add(acc, F.mul(row[p], v))
            out.append(acc)
        return tuple(out)

    def count_correctable(self) -> int:
        q = self.field.q
        return sum(comb(self.n, mu) * (q - 1) ** mu for mu in range(self.t + 1))

    def correctable_patterns(self):
        """Every pattern of weight <= t exactly once: by weight, then positions, then values."""
        nonzero = self.field.elements()[1:]
        for mu in range(self.t + 1):
            for pos in itertools.combinations(range(self.n), mu):
                for vals in itertools.product(nonzero, repeat=mu):
                    yield ErrorPattern(tuple(zip(pos, vals)))

    def oracle_table(self) -> dict:
        if self._oracle is None:
            table = {}
            for e in self.correctable_patterns():
                s = self.syndrome_of(e)
                if s in table:
                    raise ValueError(f"code does not correct {self.t} errors: syndrome clash")
                table[s] = e
            self._oracle = table
        return self._oracle

    def oracle_decode(self, s) -> ErrorPattern:
        e = self.oracle_table().get(tuple(s))
        if e is None:
            raise NotCorrectable(f"no pattern of weight <= {self.t} has syndrome {tuple(s)}")
        return e

    def describe_pattern(self, e: ErrorPattern) -> str:
        F = self.field
        parts = []
        for p, v in e.entries:
            pt = ",".join(F.format_int(c) for c in self.points[p])
            parts.append(f"P{p + 1}=({pt}) value {F.format_int(v)}")
        return "; ".join(parts) if parts else "no errors"
