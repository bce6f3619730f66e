"""Decoding ideals of an affine-variety code, their varieties, stratification and locators.

The decoding ring has syndrome variables ``s1..sr``, ``t`` blocks of location
variables (block ``j`` holds ``x_j, y_j, ...`` named after the code variables
with suffix ``j``) and value variables ``e_t..e_1``.  Two lex orders are used:

* locator order:   s1 < .. < sr < X_t < .. < X_1 < e_t < .. < e_1
* evaluator order: s1 < .. < sr < e_t < .. < e_1 < X_t < .. < X_1

All decoding ideals contain the field equations, so they are radical and
their reduced bases are computed from the enumerated variety (see
``points.radical_groebner``).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .code import AffineVarietyCode
from .groebner import GroebnerBasis, stratify_basis
from .mpoly import BITS, Ring, SparsePoly, univariate_roots
from .points import radical_groebner, stuff_at, top_poly, vanishing_ideal

VARIANTS = ("FL", "HAT", "STAR")


class GhostOnVariety(ValueError):
    pass


class NoGhostAvailable(ValueError):
    pass


class LocatorMissing(RuntimeError):
    """A basis lacks the pure-power element zero-dimensional radical decoding ideals always have."""


class StuffingFailed(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# ghost points


def is_optimal_ghost(code: AffineVarietyCode, P0) -> tuple[bool, list[int]]:
    """Which coordinates (1-based) of P0 take a value that no variety point has there."""
    comps = []
    for k in range(code.ring.nvars):
        if all(P[k] != P0[k] for P in code.points):
            comps.append(k + 1)
    return bool(comps), comps


def choose_ghost_point(code: AffineVarietyCode) -> tuple:
    F = code.field
    on = set(code.points)
    first = None
    for P in itertools.product(F.elements(), repeat=code.ring.nvars):
        if P in on:
            continue
        if first is None:
            first = P
        if is_optimal_ghost(code, P)[0]:
            return P
    if first is None:
        raise NoGhostAvailable("the variety is the whole affine space")
    return first


def compute_t_bounds(code: AffineVarietyCode, P0, coordinate_order=None) -> list[int]:
    """min(t, number of distinct i-th projections of V(I) plus the ghost point), i = 1..m."""
    perm = _perm(code, coordinate_order)
    pts = list(code.points) + ([tuple(P0)] if P0 is not None else [])
    return [min(code.t, len({tuple(P[k] for k in perm[:i]) for P in pts}))
            for i in range(1, len(perm) + 1)]


def _perm(code, coordinate_order):
    names = list(code.ring.names)
    if coordinate_order is None:
        return list(range(len(names)))
    order = list(coordinate_order)
    if sorted(order) != sorted(names):
        raise ValueError(f"coordinate order {order} must permute {names}")
    return [names.index(v) for v in order]


# ---------------------------------------------------------------------------
# the ideal specification


@dataclass
class DecodingIdealSpec:
    code: AffineVarietyCode
    variant: str = "STAR"
    ghost: tuple | None = None
    coordinate_order: list | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if self.ghost is not None:
            self.ghost = tuple(int(v) for v in self.ghost)
            if len(self.ghost) != self.code.ring.nvars:
                raise ValueError("ghost point has the wrong dimension")
            if self.ghost in set(self.code.points):
                raise GhostOnVariety(f"ghost point {self.ghost} lies on the variety")
        elif self.variant == "STAR":
            raise ValueError("the STAR ideal needs a ghost point")
        self.perm = _perm(self.code, self.coordinate_order)
        self.coords = [self.code.ring.names[k] for k in self.perm]

    # -- names and rings --------------------------------------------------------

    @property
    def t(self) -> int:
        return self.code.t

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def r(self) -> int:
        return self.code.r

    def s_names(self) -> list[str]:
        return [f"s{k}" for k in range(1, self.r + 1)]

    def block_names(self, j: int) -> list[str]:
        return [f"{v}{j}" for v in self.coords]

    def x_names(self) -> list[str]:
        return [v for j in range(self.t, 0, -1) for v in self.block_names(j)]

    def e_names(self) -> list[str]:
        return [f"e{j}" for j in range(self.t, 0, -1)]

    def ring(self, order: str = "locator") -> Ring:
        key = ("ring", order)
        if key not in self._cache:
            S, X, E = self.s_names(), self.x_names(), self.e_names()
            if order == "locator":
                names = S + X + E
            elif order == "evaluator":
                names = S + E + X
            else:
                raise ValueError(f"unknown order {order!r}")
            self._cache[key] = Ring(self.code.field, names)
        return self._cache[key]

    def search_order(self) -> list[str]:
        """Variable order for the depth-first variety search: X_t, e_t, X_{t-1}, ..., then S."""
        out = []
        for j in range(self.t, 0, -1):
            out += self.block_names(j) + [f"e{j}"]
        return out + self.s_names()

    def code_ring(self) -> Ring:
        """The code's ring with variables in the coordinate order."""
        return self.code.ring.reorder(self.coords)

    def ghost_coords(self):
        return None if self.ghost is None else tuple(self.ghost[k] for k in self.perm)

    def locations(self) -> list[tuple]:
        return [tuple(P[k] for k in self.perm) for P in self.code.points]

    def _to_block(self, g: SparsePoly, j: int, ring: Ring) -> SparsePoly:
        idx = {i: ring.index[f"{n}{j}"] for i, n in enumerate(g.ring.names)}
        return g.substitute_mono_map(ring, idx)

    def point_layout(self, s, slots, order="locator") -> tuple:
        """Assemble a ring point from a syndrome and ``t`` (location, value) slots (slot 0 -> block t)."""
        X = [c for loc, _ in slots for c in loc]
        E = [v for _, v in slots]
        if order == "locator":
            return tuple(s) + tuple(X) + tuple(E)
        return tuple(s) + tuple(E) + tuple(X)


# ---------------------------------------------------------------------------
# generators


def modified_curve_basis(spec: DecodingIdealSpec) -> GroebnerBasis:
    """Reduced basis of I(V(I) + {P0}) in the code ring, coordinates in coordinate order."""
    pts = spec.locations() + [spec.ghost_coords()]
    return vanishing_ideal(sorted(pts), spec.code_ring())


def build_ideal(spec: DecodingIdealSpec, order: str = "locator") -> list[SparsePoly]:
    code = spec.code
    R = spec.ring(order)
    F = code.field
    q = F.q
    t, m = spec.t, spec.m
    one = R.one()
    gens: list[SparsePoly] = []

    def e(j):
        return R.var(f"e{j}")

    def xv(j, i):
        return R.var(spec.block_names(j)[i])

    # location equations
    if spec.variant == "STAR":
        curve = list(modified_curve_basis(spec))
    else:
        cr = spec.code_ring()
        curve = [g.to_ring(cr) for g in code.generators]
    for j in range(1, t + 1):
        gens += [spec._to_block(g, j, R) for g in curve]
    # value equations
    for j in range(1, t + 1):
        if spec.variant == "STAR":
            gens.append(e(j) ** q - e(j))
        else:
            gens.append(e(j) ** (q - 1) - one)
    # syndrome equations
    cr = spec.code_ring()
    for k, b in enumerate(code.L):
        bb = b.to_ring(cr)
        acc = R.zero()
        for j in range(1, t + 1):
            acc = acc + e(j) * spec._to_block(bb, j, R)
        gens.append(acc - R.var(f"s{k + 1}"))
    # distinct locations
    if spec.variant in ("HAT", "STAR"):
        for j in range(1, t + 1):
            for k in range(j + 1, t + 1):
                prod = one
                for i in range(m):
                    prod = prod * ((xv(j, i) - xv(k, i)) ** (q - 1) - one)
                if spec.variant == "STAR":
                    prod = e(j) * e(k) * prod
                gens.append(prod)
    # ghost coupling
    if spec.variant == "STAR":
        g0 = spec.ghost_coords()
        for j in range(1, t + 1):
            prod = e(j)
            for i in range(m):
                prod = prod * ((xv(j, i) - R.const(F.element(g0[i]))) ** (q - 1) - one)
            gens.append(prod)
            for i in range(m):
                gens.append((e(j) ** (q - 1) - one) * (xv(j, i) - R.const(F.element(g0[i]))))
    for f in R.field_equations():
        if f not in gens:
            gens.append(f)
    return [g for g in gens if g]


# ---------------------------------------------------------------------------
# varieties


def semantic_variety(spec: DecodingIdealSpec, order: str = "locator") -> set[tuple]:
    """V(J) built from its meaning: every syndrome with every ordering of its error slots."""
    key = ("semantic", order)
    if key in spec._cache:
        return spec._cache[key]
    code = spec.code
    t = spec.t
    locs = spec.locations()
    out = set()
    if spec.variant == "STAR":
        ghost = (spec.ghost_coords(), 0)
        for e in code.correctable_patterns():
            s = code.syndrome_of(e)
            slots = [(locs[p], v) for p, v in e.entries] + [ghost] * (t - e.weight)
            for arr in set(itertools.permutations(slots)):
                out.add(spec.point_layout(s, arr, order))
    else:
        nonzero = code.field.elements()[1:]
        choices = [(p, v) for p in range(code.n) for v in nonzero]
        for combo in itertools.product(choices, repeat=t):
            positions = [p for p, _ in combo]
            if spec.variant == "HAT" and len(set(positions)) < t:
                continue
            s = _syndrome_sum(code, combo)
            out.add(spec.point_layout(s, [(locs[p], v) for p, v in combo], order))
    spec._cache[key] = out
    return out


def _syndrome_sum(code, combo):
    F = code.field
    out = []
    for row in code.H:
        acc = 0
        for p, v in combo:
            acc = F.add(acc, F.mul(row[p], v))
        out.append(acc)
    return tuple(out)


def decoding_basis(spec: DecodingIdealSpec, order: str = "locator") -> GroebnerBasis:
    """Reduced lex basis of the decoding ideal under the locator or evaluator order."""
    key = ("basis", order)
    if key not in spec._cache:
        gb = radical_groebner(build_ideal(spec, order), spec.ring(order), spec.search_order())
        gb.meta["variant"] = spec.variant
        gb.meta["order"] = order
        spec._cache[key] = gb
    return spec._cache[key]


def enumerate_from_basis(basis: GroebnerBasis, r: int, seeds=None) -> set[tuple]:
    """Variety of a zero-dimensional lex basis by extending one variable at a time.

    The first ``r`` variables are scanned exhaustively (or taken from ``seeds``);
    each later variable is extended by the field values on which all basis
    elements with that top variable vanish.
    """
    ring = basis.ring
    F = ring.field
    n = ring.nvars
    by_top: dict[int, list] = {}
    for g in basis:
        by_top.setdefault(g.top_var(), []).append(g)
    if by_top.get(-1):
        return set()

    def ok(vals, k):
        return all(g.eval_ints(vals) == 0 for g in by_top.get(k, []))

    if seeds is None:
        if r > 6:
            raise ValueError("too many leading variables for a full scan; pass seeds")
        seeds = itertools.product(F.elements(), repeat=r)
    level = []
    for s in seeds:
        vals = list(s) + [0] * (n - r)
        if all(ok(vals, k) for k in range(r)):
            level.append(list(s))
    for k in range(r, n):
        nxt = []
        for pre in level:
            for a in F.elements():
                vals = pre + [a] + [0] * (n - k - 1)
                if ok(vals, k):
                    nxt.append(pre + [a])
        level = nxt
    return {tuple(v) for v in level}


# ---------------------------------------------------------------------------
# stratification


@dataclass
class SlotReport:
    j: int
    i: int
    var: str
    eta: int
    sigma: dict  # l -> |Sigma_l|
    zeta: int | None = None
    pure_power_tops: int | None = None
    gaps: list = field(default_factory=list)  # degrees 1..zeta with no basis element


@dataclass
class StratificationReport:
    slots: list
    weakly_stratified: bool
    multi_stratified: bool
    strongly_multi_stratified: bool
    strongly_ghost_padded: bool
    zeta_equals_eta: bool | None
    unique_pure_power_tops: bool | None
    strong_counterexample: str | None = None
    block_fibers: dict = field(default_factory=dict)

    def eta(self, j, i) -> int:
        return next(s.eta for s in self.slots if (s.j, s.i) == (j, i))

    def lines(self) -> list[str]:
        yn = {True: "yes", False: "no", None: "n/a"}
        out = ["slot   var   eta  zeta  |Sigma_l| (l=1..eta)"]
        for s in self.slots:
            sig = " ".join(str(s.sigma.get(l, 0)) for l in range(1, s.eta + 1))
            z = "-" if s.zeta is None else str(s.zeta)
            out.append(f"({s.j},{s.i})  {s.var:5} {s.eta:4} {z:>5}  {sig}")
        out.append(f"weakly stratified: {yn[self.weakly_stratified]}")
        out.append(f"multi-stratified: {yn[self.multi_stratified]}")
        out.append(f"strongly multi-stratified (ghost-padded subsets): {yn[self.strongly_ghost_padded]}")
        lit = yn[self.strongly_multi_stratified]
        if self.strong_counterexample:
            lit += f" ({self.strong_counterexample})"
        out.append(f"strongly multi-stratified (every subset): {lit}")
        out.append(f"zeta=eta: {yn[self.zeta_equals_eta]}")
        out.append(f"unique pure-power top elements: {yn[self.unique_pure_power_tops]}")
        return out


def analyze_stratification(points, ring: Ring, blocks, basis: GroebnerBasis | None = None,
                           ghost=None) -> StratificationReport:
    """Level function, Sigma partition and stratification flags of a finite variety.

    ``blocks`` lists the variable names of A_L, ..., A_1 (ascending in the
    ring, contiguous, and after the leading S variables).  Variables after the
    last block are projected away.  ``ghost`` (block coordinates) enables the
    ghost-padded form of the subset condition.
    """
    pts = list(points)
    L = len(blocks)
    slots = []
    for bi, names in enumerate(blocks):
        j = L - bi
        for i, v in enumerate(names, start=1):
            k = ring.index[v]
            fib: dict = {}
            for P in pts:
                fib.setdefault(P[:k], set()).add(P[k])
            sizes = Counter(len(s) for s in fib.values())
            eta = max(sizes)
            slots.append(SlotReport(j, i, v, eta, dict(sorted(sizes.items())),
                                    gaps=[l for l in range(1, eta + 1) if l not in sizes]))
    weakly = all(not s.gaps for s in slots)

    # block-level fibers: prefix up to the block start, extension = the block values
    multi_1 = multi_2 = True
    strong_lit = strong_pad = True
    counter = None
    block_fibers = {}
    for bi, names in enumerate(blocks):
        j = L - bi
        a = ring.index[names[0]]
        b = ring.index[names[-1]] + 1
        fib: dict = {}
        for P in pts:
            fib.setdefault(P[:a], set()).add(P[a:b])
        sizes = [len(s) for s in fib.values()]
        block_fibers[j] = dict(sorted(Counter(sizes).items()))
        if max(sizes) > j:
            multi_1 = False
        if j not in sizes:
            multi_2 = False
        Z = sorted({P[a:b] for P in pts})
        realized = {frozenset(s) for s in fib.values()}
        for size in range(1, min(j, len(Z)) + 1):
            for T in itertools.combinations(Z, size):
                if frozenset(T) in realized:
                    continue
                if strong_lit:
                    counter = f"block {j}: subset {_fmt_set(ring, T)} is not a fiber"
                strong_lit = False
                if ghost is None or size == j or tuple(ghost) in T:
                    strong_pad = False
    multi = multi_1 and multi_2
    strong_lit = strong_lit and multi_1
    strong_pad = strong_pad and multi_1

    zeq = unique = None
    if basis is not None:
        strat = stratify_basis(basis, [s.var for s in slots])
        zeq = unique = True
        for s in slots:
            s.zeta = strat.zeta(s.var)
            s.pure_power_tops = len(strat.pure_power_tops(s.var))
            zeq = zeq and s.zeta == s.eta
            unique = unique and s.pure_power_tops == 1
    return StratificationReport(slots, weakly, multi, strong_lit, strong_pad, zeq, unique,
                                counter, block_fibers)


def _fmt_set(ring, T):
    F = ring.field
    return "{" + ", ".join("(" + ",".join(F.format_int(c) for c in P) + ")" for P in T) + "}"


def analyze_spec(spec: DecodingIdealSpec, with_basis: bool = True) -> StratificationReport:
    """Stratification of the decoding ideal w.r.t. the X blocks, on its semantic variety."""
    R = spec.ring("locator")
    blocks = [spec.block_names(j) for j in range(spec.t, 0, -1)]
    basis = decoding_basis(spec) if with_basis else None
    return analyze_stratification(semantic_variety(spec), R, blocks, basis, spec.ghost_coords())


# ---------------------------------------------------------------------------
# locators


@dataclass
class LocatorSet:
    locators: list  # L_i in GF(q)[S, x_1..x_i] (ring: first r+i locator-ring variables)
    degrees: list
    flavor: str  # "weak" or "stuffed"
    variables: list  # x_1..x_m as named in the locator ring

    def __len__(self):
        return len(self.locators)


def slot_ring(spec: DecodingIdealSpec, i: int) -> Ring:
    R = spec.ring("locator")
    return Ring(R.field, R.names[: spec.r + i])


def _move(g: SparsePoly, ring: Ring) -> SparsePoly:
    # the target ring is an initial segment, so packed monomials carry over
    return SparsePoly(ring, dict(g.terms))


def extract_weak_locators(spec: DecodingIdealSpec, basis: GroebnerBasis | None = None) -> LocatorSet:
    basis = basis or decoding_basis(spec)
    R = basis.ring
    names = spec.block_names(spec.t)
    strat = stratify_basis(basis, names)
    locs, degs = [], []
    for i, v in enumerate(names, start=1):
        z = strat.zeta(v)
        tops = strat.pure_power_tops(v)
        if z == 0 or len(tops) != 1:
            raise LocatorMissing(f"no unique element with leading term {v}^{z}")
        locs.append(_move(tops[0].monic(), slot_ring(spec, i)))
        degs.append(z)
    del R
    return LocatorSet(locs, degs, "weak", names)


@dataclass
class StuffingLog:
    slot: int
    var: str
    delta: int
    steps: list  # (prefix, root, target multiplicity)
    basis_size: int


def _prefix_extensions(points, k):
    ext: dict = {}
    for P in points:
        ext.setdefault(P[:k], set()).add(P[k])
    return ext


def _is_clean(poly: SparsePoly, pre, vals, F) -> bool:
    coeffs = poly.specialize(list(pre)).univariate_coeffs(poly.ring.nvars - 1)
    if not any(coeffs):
        return False
    roots = univariate_roots(F, coeffs)
    return {r for r, _ in roots} == vals and sum(mu for _, mu in roots) == len(coeffs) - 1


def parasite_prefixes(poly: SparsePoly, ext: dict, F) -> list:
    """Prefixes where the specialization's roots differ from the true extensions.

    ``poly`` lives in a ring whose last variable is the slot variable; each
    prefix assigns all the others.  A clean prefix has root set equal to its
    extension set and root multiplicities summing to the degree.
    """
    return [pre for pre, vals in ext.items() if not _is_clean(poly, pre, vals, F)]


def stuff_ideal(spec: DecodingIdealSpec, basis: GroebnerBasis | None = None,
                max_rounds: int = 64):
    """Stuffed bases W_1..W_m (one per slot of the least X block) and their locators.

    Slot i works in GF(q)[S, x_1..x_i]; its starting ideal is the elimination
    ideal of the decoding basis.  While some prefix's top polynomial has roots
    other than the prefix's true extensions, the smallest true extension of the
    first such prefix (canonical order) gets its multiplicity raised to
    ``delta - h + 1`` through Hasse functionals.
    """
    basis = basis or decoding_basis(spec)
    F = spec.code.field
    pts = semantic_variety(spec)
    names = spec.block_names(spec.t)
    bases, locs, degs, logs = [], [], [], []
    for i, v in enumerate(names, start=1):
        Ri = slot_ring(spec, i)
        n = spec.r + i
        W = [_move(g, Ri) for g in basis.elimination_view(n)]
        proj = {P[:n] for P in pts}
        ext = _prefix_extensions(proj, n - 1)
        delta = max(len(s) for s in ext.values())
        order = sorted(ext, key=lambda pre: tuple(F.order_index(c) for c in pre))
        steps = []
        pos = 0
        limit = max_rounds * len(order)
        while True:
            top = top_poly(W, Ri)
            if top is None or top.degree(n - 1) != delta:
                raise StuffingFailed(f"slot {v}: top polynomial lost its shape")
            # scan on from the last repaired prefix; a final full pass confirms
            bad = next((k for k in range(pos, len(order))
                        if not _is_clean(top, order[k], ext[order[k]], F)), None)
            if bad is None and pos:
                pos = 0
                continue
            if bad is None:
                break
            if len(steps) >= limit:
                raise StuffingFailed(f"slot {v}: parasites remain after {len(steps)} steps")
            pre = order[bad]
            h = len(ext[pre])
            root = min(ext[pre], key=F.order_index)
            target = delta - h + 1
            W = stuff_at(W, pre + (root,), target, Ri)
            steps.append((pre, root, target))
            pos = bad
        top = top_poly(W, Ri).monic()
        bases.append(GroebnerBasis(Ri, W, {"method": "stuffed", "slot": v}))
        locs.append(top)
        degs.append(delta)
        logs.append(StuffingLog(i, v, delta, steps, len(W)))
    return bases, LocatorSet(locs, degs, "stuffed", names), logs


def extract_locators(spec: DecodingIdealSpec, basis: GroebnerBasis | None = None) -> LocatorSet:
    return stuff_ideal(spec, basis)[1]


def check_locator_contract(spec: DecodingIdealSpec, locators: LocatorSet) -> list:
    """Prefixes (slot, prefix) where a locator specialization has parasite roots."""
    pts = semantic_variety(spec)
    F = spec.code.field
    bad = []
    for i, g in enumerate(locators.locators, start=1):
        n = spec.r + i
        ext = _prefix_extensions({P[:n] for P in pts}, n - 1)
        bad += [(i, pre) for pre in parasite_prefixes(g, ext, F)]
    return bad


# ---------------------------------------------------------------------------
# evaluator


def evaluator_ring(spec: DecodingIdealSpec) -> Ring:
    return Ring(spec.code.field, spec.s_names() + ["e"])


def extract_evaluator(spec: DecodingIdealSpec, basis: GroebnerBasis | None = None) -> SparsePoly:
    basis = basis or decoding_basis(spec, "evaluator")
    R = basis.ring
    r, t = spec.r, spec.t
    target = R.var_mono(f"e{t}", t)
    found = [g for g in basis.elimination_view(r + 1) if g.lm == target]
    if len(found) != 1:
        raise LocatorMissing(f"no element with leading term e{t}^{t} in the evaluator basis")
    return _move(found[0].monic(), evaluator_ring(spec))


def evaluator_roots(E: SparsePoly, s) -> list[tuple[int, int]]:
    g = E.specialize(list(s))
    return univariate_roots(E.ring.field, g.univariate_coeffs(E.ring.nvars - 1))


# ---------------------------------------------------------------------------
# the Hermitian identities


@dataclass
class EvvivaReport:
    checked: int = 0
    violations: list = field(default_factory=list)
    degenerate_checked: int = 0
    degenerate_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.degenerate_violations


def check_evviva(spec: DecodingIdealSpec, locators: LocatorSet) -> EvvivaReport:
    """a(s)*s_j + b(s)*s_i + s_k = 0 where the first locator is x^2 + a x + b.

    ``s_i, s_j, s_k`` are the syndromes of ``1, x, x^2`` for x the first
    coordinate.  With the y-first coordinate order this is the y-variant.  For
    two errors with s_i = s_j = 0 also checks b = x^2 and a = -2x at the
    common first coordinate x.
    """
    code = spec.code
    F = code.field
    P = locators.locators[0]
    if locators.degrees[0] != 2:
        raise ValueError("the identities concern degree-2 locators")
    x = len(spec.s_names())
    parts = P.coefficients_in(x)
    ring = P.ring
    a = parts.get(1, ring.zero())
    b = parts.get(0, ring.zero())
    cr = code.ring
    v = spec.coords[0]
    wanted = [cr.one(), cr.var(v), cr.var(v) ** 2]
    try:
        i1, ix, ix2 = (code.L.index(w) for w in wanted)
    except ValueError:
        raise ValueError(f"L must contain 1, {v} and {v}^2") from None
    k0 = spec.perm[0]
    rep = EvvivaReport()
    for e in code.correctable_patterns():
        s = code.syndrome_of(e)
        av, bv = a.eval_ints(list(s) + [0]), b.eval_ints(list(s) + [0])
        lhs = F.add(F.add(F.mul(av, s[ix]), F.mul(bv, s[i1])), s[ix2])
        rep.checked += 1
        if lhs:
            rep.violations.append(s)
        if e.weight == 2 and s[i1] == 0 and s[ix] == 0:
            xs = {code.points[p][k0] for p in e.positions}
            xb = xs.pop()
            rep.degenerate_checked += 1
            two = F.from_int(2)
            if bv != F.mul(xb, xb) or av != F.neg[F.mul(two, xb)]:
                rep.degenerate_violations.append(s)
    return rep
