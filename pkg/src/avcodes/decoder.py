"""Decoding with precomputed locator tables, weight prediction and exhaustive verification."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .code import AffineVarietyCode, ErrorPattern, NotCorrectable
from .ideals import (DecodingIdealSpec, LocatorSet, decoding_basis, evaluator_roots,
                     extract_evaluator, extract_weak_locators, stuff_ideal)
from .linalg import solve
from .mpoly import SparsePoly, univariate_roots


class EvaluatorMissing(ValueError):
    pass


@dataclass
class DecoderTables:
    spec: DecodingIdealSpec
    locators: LocatorSet
    evaluator: SparsePoly | None = None
    meta: dict = field(default_factory=dict)

    @property
    def code(self) -> AffineVarietyCode:
        return self.spec.code

    @property
    def flavor(self) -> str:
        return self.locators.flavor


def build_tables(spec: DecodingIdealSpec, flavor: str = "stuffed", evaluator: bool = True) -> DecoderTables:
    meta = {"variant": spec.variant}
    if spec.t == 0:
        # nothing to locate: only the zero syndrome is correctable
        return DecoderTables(spec, LocatorSet([], [], flavor, []), None, meta)
    t0 = time.perf_counter()
    basis = decoding_basis(spec)
    meta["basis_size"] = len(basis)
    meta["basis_seconds"] = round(time.perf_counter() - t0, 3)
    t0 = time.perf_counter()
    if flavor == "weak":
        locs = extract_weak_locators(spec, basis)
    elif flavor == "stuffed":
        _, locs, logs = stuff_ideal(spec, basis)
        meta["stuffing_steps"] = sum(len(lg.steps) for lg in logs)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    meta["locator_seconds"] = round(time.perf_counter() - t0, 3)
    ev = None
    if evaluator:
        t0 = time.perf_counter()
        ev = extract_evaluator(spec)
        meta["evaluator_seconds"] = round(time.perf_counter() - t0, 3)
    return DecoderTables(spec, locs, ev, meta)


@dataclass
class DecodeResult:
    status: str  # corrected | no_error | not_correctable | ambiguous
    pattern: ErrorPattern | None = None
    candidates: list = field(default_factory=list)  # location tuples found by the locators
    trace: list = field(default_factory=list)  # (prefix, roots) per specialization
    alternatives: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in ("corrected", "no_error")


def _specialized_roots(poly: SparsePoly, values) -> list[int] | None:
    coeffs = poly.specialize(list(values)).univariate_coeffs(poly.ring.nvars - 1)
    if not any(coeffs):
        return None
    return [r for r, _ in univariate_roots(poly.ring.field, coeffs)]


def location_candidates(tables: DecoderTables, s) -> tuple[list, list]:
    """All m-tuples reachable through successive locator roots, in canonical order."""
    trace = []
    prefixes = [()]
    for L in tables.locators.locators:
        nxt = []
        for pre in prefixes:
            roots = _specialized_roots(L, tuple(s) + pre)
            trace.append((pre, roots))
            if roots is None:
                continue
            nxt += [pre + (a,) for a in roots]
        prefixes = nxt
    return prefixes, trace


def _solve_values(code: AffineVarietyCode, positions, s):
    A = [[row[p] for p in positions] for row in code.H]
    x, unique = solve(code.field, A, list(s))
    if x is None or not unique or any(v == 0 for v in x):
        return None
    return ErrorPattern(tuple(zip(positions, x)))


def decode(tables: DecoderTables, syndrome=None, word=None) -> DecodeResult:
    code = tables.code
    spec = tables.spec
    if (syndrome is None) == (word is None):
        raise ValueError("give exactly one of syndrome and word")
    s = tuple(code.syndrome(word)) if word is not None else tuple(int(v) for v in syndrome)
    if len(s) != code.r:
        raise ValueError(f"syndrome has length {len(s)}, expected {code.r}")
    if not any(s):
        return DecodeResult("no_error", ErrorPattern())
    tuples, trace = location_candidates(tables, s)
    ghost = spec.ghost_coords()
    index = {loc: k for k, loc in enumerate(spec.locations())}
    res = DecodeResult("not_correctable", candidates=tuples, trace=trace)
    if tables.flavor == "stuffed":
        locs = [P for P in tuples if P != ghost]
        if not locs or len(locs) > code.t or any(P not in index for P in locs):
            return res
        e = _solve_values(code, sorted(index[P] for P in locs), s)
        if e is None or code.syndrome_of(e) != s:
            return res
        res.status, res.pattern = "corrected", e
        return res
    # weak flavor: try every subset of the candidate locations on the variety
    positions = sorted({index[P] for P in tuples if P in index})
    found = []
    for size in range(1, code.t + 1):
        for sub in itertools.combinations(positions, size):
            e = _solve_values(code, list(sub), s)
            if e is not None and code.syndrome_of(e) == s and e not in found:
                found.append(e)
    if len(found) == 1:
        res.status, res.pattern = "corrected", found[0]
    elif found:
        res.status, res.alternatives = "ambiguous", found
    return res


def predict_weight(tables: DecoderTables, s) -> tuple[int, list[int]]:
    """Number of errors and their values read off the evaluator's roots."""
    if tables.evaluator is None:
        raise EvaluatorMissing("tables were built without an evaluator")
    t = tables.code.t
    roots = evaluator_roots(tables.evaluator, s)
    zero = sum(k for r, k in roots if r == 0)
    values = [r for r, k in roots if r for _ in range(k)]
    return t - zero, values


@dataclass
class VerifyReport:
    total: int = 0
    exact: int = 0
    mismatches: list = field(default_factory=list)
    ambiguous: int = 0
    oracle_disagreements: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.exact == self.total and not self.oracle_disagreements

    def summary(self) -> str:
        return (f"{self.exact}/{self.total} ok, {len(self.mismatches)} mismatches, "
                f"{self.ambiguous} ambiguous, {self.seconds:.2f}s")


def verify_exhaustive(tables: DecoderTables) -> VerifyReport:
    code = tables.code
    rep = VerifyReport()
    t0 = time.perf_counter()
    for e in code.correctable_patterns():
        s = code.syndrome_of(e)
        res = decode(tables, syndrome=s)
        rep.total += 1
        got = res.pattern if res.ok else None
        if res.status == "ambiguous":
            rep.ambiguous += 1
        if got == e:
            rep.exact += 1
        else:
            rep.mismatches.append((e, res.status))
        try:
            oracle = code.oracle_decode(s)
        except NotCorrectable:
            oracle = None
        if got is not None and oracle != got:
            rep.oracle_disagreements += 1
    rep.seconds = time.perf_counter() - t0
    return rep
