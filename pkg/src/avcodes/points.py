"""Vanishing ideals of point sets by Buchberger-Moeller steps, and Hasse stuffing.

A step takes the reduced basis ``W`` of an ideal ``H`` and a linear functional
``f`` and returns the reduced basis of ``ker(f) & H``: with ``g*`` the least
basis element on which ``f`` does not vanish, the new basis is built from

* the elements below ``g*``,
* ``(V_k - beta_k) * g*`` for every variable ``V_k``,
* ``g - f(g)/f(g*) * g*`` for the elements above ``g*``,

followed by interreduction.  Point evaluation gives vanishing ideals; the
Hasse functional ``g -> phi^(n)(g(Q_1..Q_{N-1}, V_N))(Q_N)`` in the greatest
variable raises the multiplicity of ``Q_N`` as a root over the prefix of ``Q``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldElement
from .groebner import GroebnerBasis, reduce_dict
from .mpoly import BITS, FIELD_MASK, Ring, SparsePoly, binomial_mod


class DuplicatePoint(ValueError):
    pass


class FunctionalDegenerate(RuntimeError):
    """No basis element has a nonzero functional value."""


@dataclass(frozen=True)
class Functional:
    kind: str  # "point" or "hasse"
    point: tuple  # raw field ints, one per ring variable
    n: int = 0

    @classmethod
    def at(cls, point):
        return cls("point", _raw(point))

    @classmethod
    def hasse(cls, point, n: int):
        if n < 1:
            raise ValueError("Hasse functional order must be >= 1")
        return cls("hasse", _raw(point), n)

    def __call__(self, g: SparsePoly) -> int:
        if self.kind == "point":
            return g.eval_ints(self.point)
        return hasse_value(g, self.point, self.n)


def _raw(point) -> tuple:
    return tuple(v.value if isinstance(v, FieldElement) else int(v) for v in point)


def hasse_value(g: SparsePoly, Q, n: int) -> int:
    """phi^(n) in the greatest variable of g's ring, evaluated at Q."""
    ring = g.ring
    F = ring.field
    add, mul, power = F.add_table, F.mul_table, F.power
    N = ring.nvars - 1
    shift = BITS * N
    p = F.p
    total = 0
    for m, c in g.terms.items():
        e = (m >> shift) & FIELD_MASK
        if e < n:
            continue
        b = binomial_mod(e, n, p)
        if not b:
            continue
        v = mul[c][F.from_int(b)]
        v = mul[v][power(Q[N], e - n)]
        rest = m & ((1 << shift) - 1)
        i = 0
        while rest and v:
            k = rest & FIELD_MASK
            if k:
                v = mul[v][power(Q[i], k)]
            rest >>= BITS
            i += 1
        total = add[total][v]
    return total


def bm_step(W: list[SparsePoly], f: Functional, ring: Ring | None = None) -> list[SparsePoly]:
    """Reduced basis of ker(f) intersected with the ideal whose reduced basis is ``W``.

    ``W`` must be sorted ascending by leading monomial.  Returns ``W`` itself
    when ``f`` vanishes on every element.
    """
    if ring is None:
        ring = W[0].ring
    F = ring.field
    alphas = [f(g) for g in W]
    star = next((k for k, a in enumerate(alphas) if a), None)
    if star is None:
        return W
    gs = W[star]
    a_star = alphas[star]
    beta = list(f.point)
    if f.kind == "hasse":
        # beta_N = g*(Q)/theta_n(g*) + Q_N; g* vanishes at Q whenever Q lies on V(W)
        beta[-1] = F.add(F.div(gs.eval_ints(f.point), a_star), f.point[-1])

    low = W[:star]
    high = []
    for g, a in zip(W[star + 1:], alphas[star + 1:]):
        if a:
            d = dict(g.terms)
            k = F.neg[F.div(a, a_star)]
            row = F.mul_table[k]
            add = F.add_table
            for m, c in gs.terms.items():
                v = add[d.get(m, 0)][row[c]]
                if v:
                    d[m] = v
                else:
                    d.pop(m, None)
            high.append(SparsePoly(ring, d))
        else:
            high.append(g)

    kept = low + high
    kept_lms = [g.lm for g in kept]
    guard = ring.guard
    cands = []
    for k in range(ring.nvars):
        vm = 1 << (BITS * k)
        lm = gs.lm + vm
        if any(((lm | guard) - a) & guard == guard for a in kept_lms):
            continue
        d = {m + vm: c for m, c in gs.terms.items()}
        nb = F.neg[beta[k]]
        if nb:
            row = F.mul_table[nb]
            add = F.add_table
            for m, c in gs.terms.items():
                v = add[d.get(m, 0)][row[c]]
                if v:
                    d[m] = v
                else:
                    d.pop(m, None)
        cands.append((lm, d))
    # the candidates' leading monomials are pairwise distinct and none divides
    # another (they differ in one variable each), so only tails need reducing
    new_lms = [lm for lm, _ in cands]
    red_lms = kept_lms + new_lms
    red_items = [list(g.terms.items()) for g in kept] + [list(d.items()) for _, d in cands]
    out = list(kept)
    for lm, d in cands:
        head = d.pop(lm)
        tail = reduce_dict(d, red_lms, red_items, ring, full=True)
        tail[lm] = head
        out.append(SparsePoly(ring, tail))
    out.sort(key=lambda g: g.lm)
    return out


def vanishing_ideal(points, ring: Ring) -> GroebnerBasis:
    """Reduced Groebner basis of I(Z) for an ordered list of distinct points."""
    pts = [_raw(P) for P in points]
    if not pts:
        raise ValueError("empty point set")
    if len(set(pts)) != len(pts):
        raise DuplicatePoint("point set has repeated points")
    for P in pts:
        if len(P) != ring.nvars:
            raise ValueError(f"point {P} has wrong dimension")
    W = [ring.one()]
    for P in pts:
        W = bm_step(W, Functional.at(P), ring)
    return GroebnerBasis(ring, W, {"method": "buchberger-moeller", "points": len(pts)})


def top_poly(W, ring: Ring) -> SparsePoly | None:
    """The element of greatest leading monomial whose leading term is a pure power of the last variable."""
    N = ring.nvars - 1
    for g in reversed(W):
        lm = g.lm
        if lm >> (BITS * N) and lm & ((1 << (BITS * N)) - 1) == 0:
            return g
    return None


def stuff_at(W: list[SparsePoly], Q, target_mult: int, ring: Ring | None = None,
             strict: bool = False) -> list[SparsePoly]:
    """Apply the Hasse functionals of orders 1..r-1 at Q in the last variable.

    A functional that vanishes on the whole basis means the multiplicity is
    already enforced; that is success unless ``strict`` is set.
    """
    if ring is None:
        ring = W[0].ring
    Q = _raw(Q)
    for n in range(1, target_mult):
        f = Functional.hasse(Q, n)
        new = bm_step(W, f, ring)
        if new is W:
            if strict:
                raise FunctionalDegenerate(f"Hasse functional of order {n} vanishes on the basis")
            continue
        W = new
    return W


def _compile(g: SparsePoly):
    out = []
    for m, c in g.terms.items():
        fac = []
        i = 0
        while m:
            e = m & FIELD_MASK
            if e:
                fac.append((i, e))
            m >>= BITS
            i += 1
        out.append((c, fac))
    return out


def enumerate_zeros(generators, ring: Ring, var_order=None) -> list[tuple]:
    """All points of GF(q)^n where every generator vanishes, by pruned depth-first search.

    Variables are assigned in ``var_order`` (names; default: ring order).  A
    generator is tested as soon as all of its variables carry a value, so
    variables that are functions of earlier ones cost one pass over the field.
    Points are returned as raw-int tuples in ring order, in the canonical
    order induced by the search.
    """
    F = ring.field
    add, mul, power = F.add_table, F.mul_table, F.power
    order = [ring.index[v] for v in (var_order or ring.names)]
    if sorted(order) != list(range(ring.nvars)):
        raise ValueError("var_order must list every ring variable once")
    pos = {v: k for k, v in enumerate(order)}
    buckets = [[] for _ in order]
    for g in generators:
        if not g:
            continue
        used = [i for i in range(ring.nvars) if any(ring.exponent(m, i) for m in g.terms)]
        if not used:
            return []  # nonzero constant
        buckets[max(pos[i] for i in used)].append(_compile(g))
    elems = F.elements()
    vals = [0] * ring.nvars
    out = []

    def ok(compiled):
        total = 0
        for c, fac in compiled:
            v = c
            for i, e in fac:
                v = mul[v][power(vals[i], e)]
                if not v:
                    break
            total = add[total][v]
        return total == 0

    def rec(d):
        if d == len(order):
            out.append(tuple(vals))
            return
        i = order[d]
        checks = buckets[d]
        for a in elems:
            vals[i] = a
            if all(ok(c) for c in checks):
                rec(d + 1)
        vals[i] = 0

    rec(0)
    return out


def radical_groebner(generators, ring: Ring, var_order=None) -> GroebnerBasis:
    """Reduced basis of an ideal that contains (or is given) the field equations.

    Such an ideal is radical and equals the vanishing ideal of its zeros in
    GF(q)^n, so its reduced basis is computed from the enumerated variety by
    Buchberger-Moeller steps.  Field equations for every variable are adjoined.
    """
    gens = list(generators) + ring.field_equations()
    pts = enumerate_zeros(gens, ring, var_order)
    if not pts:
        return GroebnerBasis(ring, [ring.one()], {"method": "variety", "points": 0})
    gb = vanishing_ideal(sorted(pts), ring)
    gb.meta["method"] = "variety+buchberger-moeller"
    return gb
