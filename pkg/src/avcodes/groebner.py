"""Buchberger's algorithm over GF(q) on packed-monomial dict polynomials.

The working representation inside the loop is a bare ``dict`` from packed
monomial to int coefficient; ``SparsePoly`` objects are only built for the
finished basis.  Pair handling follows the Gebauer-Moeller update (the same
bookkeeping sympy's ``groebnertools`` uses), pairs are selected by the normal
strategy (smallest lcm first, ties broken by pair indices).
"""

from __future__ import annotations

import logging
from heapq import heapify, heappop, heappush
from dataclasses import dataclass, field

from .mpoly import BITS, FIELD_MASK, Ring, SparsePoly, format_poly, parse_poly

log = logging.getLogger(__name__)


class IncompatibleOrder(ValueError):
    pass


# ---------------------------------------------------------------------------
# dict-level kernels


def _sub_multiple(f: dict, g_items, mono: int, k: int, F, heap=None) -> None:
    """In place: f += k * mono * g.  New monomials are pushed on ``heap`` (negated)."""
    add = F.add_table
    row = F.mul_table[k]
    get = f.get
    for mg, cg in g_items:
        m = mg + mono
        old = get(m, 0)
        v = add[old][row[cg]]
        if v:
            f[m] = v
            if not old and heap is not None:
                heappush(heap, -m)
        else:
            del f[m]


def _find_divisor(lm: int, lms, guard: int) -> int:
    for idx, a in enumerate(lms):
        if ((lm | guard) - a) & guard == guard:
            return idx
    return -1


def reduce_dict(f: dict, lms: list, items: list, ring: Ring, full: bool = True) -> dict:
    """Reduce ``f`` (consumed) by monic polynomials with leading monomials ``lms``.

    ``items[i]`` is the term list of the i-th reducer.  With ``full=False`` only
    the head is reduced.  A lazy max-heap tracks the current leading monomial.
    """
    F = ring.field
    neg = F.neg
    guard = ring.guard
    rem: dict = {}
    heap = [-m for m in f]
    heapify(heap)
    while heap:
        lm = -heappop(heap)
        c = f.get(lm)
        if not c:
            continue
        if heap and heap[0] == -lm:
            continue  # duplicate entry, the live one is still queued
        idx = _find_divisor(lm, lms, guard)
        if idx < 0:
            if not full:
                f.update(rem)
                return f
            rem[lm] = f.pop(lm)
            continue
        _sub_multiple(f, items[idx], lm - lms[idx], neg[c], F, heap)
    return rem


def _monic_dict(f: dict, F) -> dict:
    lc = f[max(f)]
    if lc == 1:
        return f
    row = F.mul_table[F.inv[lc]]
    return {m: row[c] for m, c in f.items()}


def _spoly(f: dict, fl: int, g: dict, gl: int, ring: Ring) -> dict:
    """S-polynomial of two monic polynomials."""
    F = ring.field
    l = ring.lcm(fl, gl)
    out = {m + (l - fl): c for m, c in f.items()}
    _sub_multiple(out, list(g.items()), l - gl, F.neg[1], F)
    return out


# ---------------------------------------------------------------------------
# Buchberger


def _update(G: list, B: list, ih: int, lms: list, ring: Ring):
    """Gebauer-Moeller installation of the new polynomial ``ih``."""
    lcm, guard = ring.lcm, ring.guard

    def divides(a, b):
        return ((b | guard) - a) & guard == guard

    def coprime(a, b):
        return lcm(a, b) == a + b

    mh = lms[ih]
    C = sorted(G, reverse=True)
    D = []
    while C:
        ig = C.pop()
        mg = lms[ig]
        lhg = lcm(mh, mg)
        if coprime(mh, mg) or (
            not any(divides(lcm(mh, lms[ix]), lhg) for ix in C)
            and not any(divides(lcm(mh, lms[jx]), lhg) for _, jx in D)
        ):
            D.append((ih, ig))
    E = [(a, b) for a, b in D if not coprime(mh, lms[b])]
    B_new = []
    for i1, i2 in B:
        m1, m2 = lms[i1], lms[i2]
        l12 = lcm(m1, m2)
        if not divides(mh, l12) or lcm(m1, mh) == l12 or lcm(m2, mh) == l12:
            B_new.append((i1, i2))
    B_new.extend(E)
    G_new = [ig for ig in G if not divides(mh, lms[ig])]
    G_new.append(ih)
    return G_new, B_new


def _total_degree(m: int) -> int:
    d = 0
    while m:
        d += m & FIELD_MASK
        m >>= BITS
    return d


def buchberger_dicts(polys: list[dict], ring: Ring, full_reduce: bool = True):
    """Reduced Groebner basis of dict polynomials; returns monic dicts ascending by lm.

    Pairs are chosen by the sugar strategy: smallest sugar degree, then
    smallest lcm, then pair indices.  The sugar of a polynomial is the total
    degree it would have if the computation were homogenized; for lex orders
    this keeps intermediate polynomials far smaller than the plain normal
    strategy does.
    """
    F = ring.field
    polys = [dict(p) for p in polys if p]
    if not polys:
        return []
    polys.sort(key=lambda d: sorted(d.items(), reverse=True))
    f: list[dict] = []
    lms: list[int] = []
    sugar: list[int] = []
    G: list[int] = []
    B: list = []
    lcm = ring.lcm

    def active():
        idx = sorted(G)
        return [lms[i] for i in idx], [list(f[i].items()) for i in idx]

    def install(h, sug):
        nonlocal G, B
        f.append(h)
        lms.append(max(h))
        sugar.append(sug)
        G, B = _update(G, B, len(f) - 1, lms, ring)

    def pair_key(pr):
        i, j = pr
        l = lcm(lms[i], lms[j])
        sug = max(sugar[i] + _total_degree(l - lms[i]), sugar[j] + _total_degree(l - lms[j]))
        return (sug, l, pr)

    for p in polys:
        cur_lms, cur_items = active()
        sug = max(_total_degree(m) for m in p)
        h = reduce_dict(dict(p), cur_lms, cur_items, ring, full=full_reduce)
        if not h:
            continue
        h = _monic_dict(h, F)
        if 0 in h and len(h) == 1:
            return [{0: 1}]
        install(h, sug)

    steps = 0
    while B:
        keys = [pair_key(pr) for pr in B]
        best = min(range(len(B)), key=keys.__getitem__)
        sug = keys[best][0]
        i, j = B[best]
        B[best] = B[-1]
        B.pop()
        s = _spoly(f[i], lms[i], f[j], lms[j], ring)
        cur_lms, cur_items = active()
        h = reduce_dict(s, cur_lms, cur_items, ring, full=full_reduce)
        steps += 1
        if not h:
            continue
        h = _monic_dict(h, F)
        if 0 in h and len(h) == 1:
            return [{0: 1}]
        install(h, sug)
        if steps % 200 == 0:
            log.debug("buchberger: %d reductions, %d pairs left, |G|=%d", steps, len(B), len(G))

    return _finalize([f[i] for i in G], ring)


def _finalize(polys: list[dict], ring: Ring) -> list[dict]:
    """Minimalize, interreduce and sort a Groebner basis."""
    F = ring.field
    guard = ring.guard
    polys = sorted(polys, key=max)
    keep = []
    for k, p in enumerate(polys):
        lp = max(p)
        redundant = False
        for other in keep:
            if ((lp | guard) - max(other)) & guard == guard:
                redundant = True
                break
        if not redundant:
            keep.append(p)
    lms = [max(p) for p in keep]
    out = []
    for k, p in enumerate(keep):
        others_l = lms[:k] + lms[k + 1:]
        others_i = [list(q.items()) for q in keep[:k] + keep[k + 1:]]
        tail = dict(p)
        head = tail.pop(lms[k])
        red = reduce_dict(tail, others_l, others_i, ring, full=True)
        red[lms[k]] = head
        out.append(_monic_dict(red, F))
    out.sort(key=max)
    return out


def interreduce(polys: list[SparsePoly]) -> list[SparsePoly]:
    """Reduced form of a set that is already a Groebner basis (minimalize + tail reduce)."""
    if not polys:
        return []
    ring = polys[0].ring
    return [SparsePoly(ring, d) for d in _finalize([dict(p.terms) for p in polys if p], ring)]


# ---------------------------------------------------------------------------
# public objects


@dataclass
class GroebnerBasis:
    ring: Ring
    elements: list[SparsePoly]
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def leading_monomials(self) -> list[int]:
        return [g.lm for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].terms == {0: 1}

    def normal_form(self, f: SparsePoly) -> SparsePoly:
        return normal_form(f, self.elements)

    def contains(self, f: SparsePoly) -> bool:
        return not self.normal_form(f)

    def elimination_view(self, retained) -> list[SparsePoly]:
        """Basis elements supported on the retained variables.

        ``retained`` is a count or a list of names; it must be an initial
        segment of the ring's (ascending) variable list.
        """
        k = retained if isinstance(retained, int) else len(retained)
        if not isinstance(retained, int) and tuple(retained) != self.ring.names[:k]:
            raise IncompatibleOrder(
                f"{list(retained)} is not an initial segment of {list(self.ring.names)}")
        bound = 1 << (BITS * k)
        return [g for g in self.elements if g.lm < bound]

    def standard_monomials(self, limit: int = 100000) -> list[int]:
        """Monomials not divisible by any leading monomial (zero-dimensional ideals)."""
        ring = self.ring
        lms = self.leading_monomials
        guard = ring.guard
        if self.is_unit():
            return []
        pure = {}
        for m in lms:
            tv = ring.top_var(m)
            if m == ring.var_mono(tv, ring.exponent(m, tv)) if tv >= 0 else False:
                pure[tv] = min(pure.get(tv, 1 << 30), ring.exponent(m, tv))
        if len(pure) != ring.nvars:
            raise ValueError("ideal is not zero-dimensional")
        out = []

        def rec(i, mono):
            if len(out) > limit:
                raise ValueError("too many standard monomials")
            if i < 0:
                out.append(mono)
                return
            for e in range(pure[i]):
                m = mono + (e << (BITS * i))
                # prune: if m already divisible it stays divisible for larger e
                if any(((m | guard) - a) & guard == guard for a in lms):
                    break
                rec(i - 1, m)

        rec(ring.nvars - 1, 0)
        return sorted(out)

    def quotient_dimension(self) -> int:
        return len(self.standard_monomials())

    def stratify(self, slot_vars) -> "BasisStratification":
        return stratify_basis(self, slot_vars)

    def header(self) -> str:
        return f"# ring {','.join(self.ring.names)} ; order lex ; field {self.ring.field.describe()}"

    def serialize(self) -> str:
        lines = [self.header()]
        lines += [format_poly(g) for g in self.elements]
        return "\n".join(lines) + "\n"

    @classmethod
    def deserialize(cls, text: str, ring: Ring) -> "GroebnerBasis":
        polys = [parse_poly(line, ring) for line in text.splitlines()
                 if line.strip() and not line.startswith("#")]
        return cls(ring, polys)


def normal_form(f: SparsePoly, basis) -> SparsePoly:
    basis = [g for g in basis if g]
    ring = f.ring
    F = ring.field
    lms, items = [], []
    for g in basis:
        gm = g.monic()
        lms.append(gm.lm)
        items.append(list(gm.terms.items()))
    return SparsePoly(ring, reduce_dict(dict(f.terms), lms, items, ring, full=True))


def buchberger(generators, ring: Ring | None = None, full_reduce: bool = True) -> GroebnerBasis:
    generators = list(generators)
    if ring is None:
        ring = generators[0].ring
    dicts = [g.terms for g in generators if g]
    if not dicts:
        return GroebnerBasis(ring, [])
    out = buchberger_dicts(dicts, ring, full_reduce=full_reduce)
    return GroebnerBasis(ring, [SparsePoly(ring, d) for d in out])


def is_groebner(polys) -> tuple[bool, tuple | None]:
    """Buchberger criterion; returns (ok, offending index pair)."""
    polys = [p.monic() for p in polys if p]
    if not polys:
        return True, None
    ring = polys[0].ring
    lms = [p.lm for p in polys]
    items = [list(p.terms.items()) for p in polys]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if ring.lcm(lms[i], lms[j]) == lms[i] + lms[j]:
                continue
            s = _spoly(polys[i].terms, lms[i], polys[j].terms, lms[j], ring)
            if reduce_dict(s, lms, items, ring, full=False):
                return False, (i, j)
    return True, None


# ---------------------------------------------------------------------------
# degree stratification of a basis


@dataclass
class BasisStratification:
    ring: Ring
    slices: dict  # var name -> {delta: [polys ascending]}

    def zeta(self, var) -> int:
        s = self.slices.get(var)
        return max(s) if s else 0

    def slot(self, var) -> list[SparsePoly]:
        s = self.slices.get(var, {})
        return [g for d in sorted(s) for g in s[d]]

    def top_elements(self, var) -> list[SparsePoly]:
        s = self.slices.get(var)
        return s[max(s)] if s else []

    def pure_power_tops(self, var) -> list[SparsePoly]:
        """Elements of the top slice whose leading term is a pure power of ``var``."""
        ring = self.ring
        i = ring.index[var]
        z = self.zeta(var)
        return [g for g in self.top_elements(var) if g.lm == ring.var_mono(i, z)]


def stratify_basis(basis: GroebnerBasis, slot_vars) -> BasisStratification:
    ring = basis.ring
    slices: dict = {}
    for v in slot_vars:
        i = ring.index.get(v)
        if i is None:
            raise IncompatibleOrder(f"{v} is not a ring variable")
        slices[v] = {}
    for g in basis.elements:
        tv = g.top_var()
        if tv < 0:
            continue
        name = ring.names[tv]
        if name in slices:
            d = ring.exponent(g.lm, tv)
            slices[name].setdefault(d, []).append(g)
    return BasisStratification(ring, slices)
