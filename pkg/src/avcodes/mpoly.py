"""Sparse multivariate polynomials over GF(q).

Monomials are packed into a single Python int: the variable at ascending
position ``i`` owns bits ``16*i .. 16*i+15``, the top bit of each field is a
guard bit.  With that layout plain integer comparison is the lex order in
which later variables dominate earlier ones, and monomial multiplication is
integer addition.  Every order used by the decoders is lex on some variable
list (a block order with lex blocks is again lex on the concatenated list),
so a ``Ring`` carries its order in the order of its variable names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .gf import FieldElement, FieldSpec, ParseError

BITS = 16
FIELD_MASK = (1 << BITS) - 1
EXP_MASK = (1 << (BITS - 1)) - 1


class RingMismatch(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class UnknownVariable(KeyError):
    pass


@dataclass(frozen=True)
class Block:
    name: str
    start: int
    stop: int  # exclusive


class Ring:
    """Polynomial ring GF(q)[names] with lex order ``names[0] < names[1] < ...``.

    ``blocks`` optionally groups contiguous positions (used for reporting and
    for elimination of a block prefix); it does not change the order.
    """

    def __init__(self, field: FieldSpec, names, blocks=None):
        names = list(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if len(names) * BITS > 4096:
            raise ValueError("too many variables")
        self.field = field
        self.names = tuple(names)
        self.nvars = len(names)
        self.index = {v: i for i, v in enumerate(names)}
        self.guard = sum(1 << (BITS * i + BITS - 1) for i in range(self.nvars))
        if blocks is None:
            blocks = [Block(n, i, i + 1) for i, n in enumerate(names)]
        else:
            blocks = [b if isinstance(b, Block) else Block(*b) for b in blocks]
            pos = 0
            for b in blocks:
                if b.start != pos or b.stop <= b.start:
                    raise ValueError("blocks must be contiguous and cover all variables")
                pos = b.stop
            if pos != self.nvars:
                raise ValueError("blocks must cover all variables")
        self.blocks = tuple(blocks)

    # -- monomials ------------------------------------------------------------

    def pack(self, exps) -> int:
        m = 0
        for i, e in enumerate(exps):
            if e:
                if not 0 <= e <= EXP_MASK:
                    raise ValueError(f"exponent {e} out of range")
                m |= e << (BITS * i)
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (BITS * i)) & FIELD_MASK for i in range(self.nvars))

    def var_mono(self, name_or_index, e: int = 1) -> int:
        i = self._idx(name_or_index)
        return e << (BITS * i)

    def exponent(self, m: int, i: int) -> int:
        return (m >> (BITS * i)) & FIELD_MASK

    def divides(self, a: int, b: int) -> bool:
        """True if monomial ``a`` divides monomial ``b``."""
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        g = self.guard
        d = ((a | g) - b)  # guard bit set in fields where a >= b
        sel = ((d & g) >> (BITS - 1)) * FIELD_MASK
        return (a & sel) | (b & ~sel)

    def top_var(self, m: int) -> int:
        """Index of the greatest variable occurring in ``m`` (-1 for 1)."""
        return (m.bit_length() - 1) // BITS if m else -1

    def _idx(self, v) -> int:
        if isinstance(v, int):
            if not 0 <= v < self.nvars:
                raise UnknownVariable(v)
            return v
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVariable(v) from None

    # -- constructors -----------------------------------------------------------

    def zero(self) -> "SparsePoly":
        return SparsePoly(self, {})

    def one(self) -> "SparsePoly":
        return SparsePoly(self, {0: 1})

    def const(self, c) -> "SparsePoly":
        c = self._coef(c)
        return SparsePoly(self, {0: c} if c else {})

    def var(self, name) -> "SparsePoly":
        return SparsePoly(self, {self.var_mono(name): 1})

    def gens(self) -> list["SparsePoly"]:
        return [self.var(n) for n in self.names]

    def from_terms(self, terms) -> "SparsePoly":
        """Build from ``{exponent tuple: coefficient}`` or an iterable of pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        d: dict[int, int] = {}
        add = self.field.add
        for exps, c in items:
            c = self._coef(c)
            m = self.pack(exps)
            v = add(d.get(m, 0), c)
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return SparsePoly(self, d)

    def _coef(self, c) -> int:
        if isinstance(c, FieldElement):
            if c.field != self.field:
                raise RingMismatch("coefficient from another field")
            return c.value
        return self.field.from_int(c)

    def field_equations(self) -> list["SparsePoly"]:
        q = self.field.q
        return [SparsePoly(self, {self.var_mono(i, q): 1, self.var_mono(i): self.field.neg[1]})
                for i in range(self.nvars)]

    def parse(self, text: str) -> "SparsePoly":
        return parse_poly(text, self)

    def reorder(self, names, blocks=None) -> "Ring":
        return Ring(self.field, names, blocks)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.field == other.field and self.names == other.names

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"Ring({self.field.q}, {' < '.join(self.names)})"


class SparsePoly:
    """Immutable polynomial: ``terms`` maps packed monomial -> nonzero int coefficient."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # -- basic queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        if self._lm is None:
            self._lm = max(self.terms)
        return self._lm

    @property
    def lc(self) -> int:
        return self.terms[self.lm]

    def leading_term(self) -> tuple[tuple[int, ...], FieldElement]:
        m = self.lm
        return self.ring.unpack(m), self.ring.field.element(self.terms[m])

    def sorted_terms(self, descending=True):
        return sorted(self.terms.items(), reverse=descending)

    def degree(self, var=None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(self.ring.unpack(m)) for m in self.terms)
        i = self.ring._idx(var)
        return max(self.ring.exponent(m, i) for m in self.terms)

    def variables(self) -> set[str]:
        used = 0
        for m in self.terms:
            used |= m
        return {n for i, n in enumerate(self.ring.names) if (used >> (BITS * i)) & FIELD_MASK}

    def top_var(self) -> int:
        """Index of the greatest variable in the support (-1 for constants)."""
        return self.ring.top_var(self.lm) if self.terms else -1

    def coefficient(self, exps) -> FieldElement:
        return self.ring.field.element(self.terms.get(self.ring.pack(exps), 0))

    def coefficients_in(self, var) -> dict[int, "SparsePoly"]:
        """Write self as sum_k c_k * var^k; returns {k: c_k}."""
        i = self.ring._idx(var)
        shift = BITS * i
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = (m >> shift) & FIELD_MASK
            out.setdefault(e, {})[m - (e << shift)] = c
        return {e: SparsePoly(self.ring, d) for e, d in out.items()}

    def leading_poly(self, var) -> "SparsePoly":
        """Coefficient of the top power of ``var``."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading polynomial")
        parts = self.coefficients_in(var)
        return parts[max(parts)]

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        add = self.ring.field.add_table
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = add[d.get(m, 0)][c]
            if v:
                d[m] = v
            else:
                del d[m]
        return SparsePoly(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return SparsePoly(self.ring, {m: neg[c] for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        add, mul = F.add_table, F.mul_table
        d: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            row = mul[c1]
            for m2, c2 in other.terms.items():
                m = m1 + m2
                v = add[d.get(m, 0)][row[c2]]
                if v:
                    d[m] = v
                else:
                    d.pop(m, None)
        if d and any(m & self.ring.guard for m in d):
            raise OverflowError("exponent overflow")
        return SparsePoly(self.ring, d)

    __rmul__ = __mul__

    def scale(self, c) -> "SparsePoly":
        c = self.ring._coef(c)
        if not c:
            return self.ring.zero()
        row = self.ring.field.mul_table[c]
        return SparsePoly(self.ring, {m: row[v] for m, v in self.terms.items()})

    def mul_term(self, mono: int, c: int) -> "SparsePoly":
        if not c:
            return self.ring.zero()
        row = self.ring.field.mul_table[c]
        return SparsePoly(self.ring, {m + mono: row[v] for m, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "SparsePoly":
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return self.scale(FieldElement(self.ring.field, self.ring.field.inv[lc]))

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ring.const(other)
        return isinstance(other, SparsePoly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sort_key(self):
        """Key ordering polynomials by leading term, then by full term sequence."""
        return tuple(m for m, _ in self.sorted_terms()), tuple(c for _, c in self.sorted_terms())

    # -- evaluation ---------------------------------------------------------------

    def evaluate(self, assignment) -> FieldElement:
        """Evaluate at a full assignment (mapping name -> element, or sequence by position)."""
        vals = self._assignment_vector(assignment, full=True)
        return FieldElement(self.ring.field, self.eval_ints(vals))

    def eval_ints(self, vals) -> int:
        """Evaluate at a full int vector (one raw field int per variable)."""
        F = self.ring.field
        add, mul, power = F.add_table, F.mul_table, F.power
        total = 0
        for m, c in self.terms.items():
            v = c
            i = 0
            while m and v:
                e = m & FIELD_MASK
                if e:
                    v = mul[v][power(vals[i], e)]
                m >>= BITS
                i += 1
            total = add[total][v]
        return total

    def specialize(self, assignment) -> "SparsePoly":
        """Substitute the assigned variables; the result lives in the same ring."""
        vals = self._assignment_vector(assignment, full=False)
        F = self.ring.field
        add, mul, power = F.add_table, F.mul_table, F.power
        keep = 0
        for i, v in enumerate(vals):
            if v is None:
                keep |= FIELD_MASK << (BITS * i)
        d: dict[int, int] = {}
        for m, c in self.terms.items():
            v = c
            rest = m
            i = 0
            while rest and v:
                e = rest & FIELD_MASK
                if e and vals[i] is not None:
                    v = mul[v][power(vals[i], e)]
                rest >>= BITS
                i += 1
            if v:
                mm = m & keep
                s = add[d.get(mm, 0)][v]
                if s:
                    d[mm] = s
                else:
                    d.pop(mm, None)
        return SparsePoly(self.ring, d)

    def _assignment_vector(self, assignment, full: bool):
        ring = self.ring
        vals: list = [None] * ring.nvars
        if isinstance(assignment, dict):
            for k, v in assignment.items():
                # raw ints are taken as already-encoded field values
                vals[ring._idx(k)] = v.value if isinstance(v, FieldElement) else v
        else:
            seq = list(assignment)
            if len(seq) > ring.nvars:
                raise UnknownVariable("too many values")
            for i, v in enumerate(seq):
                vals[i] = v.value if isinstance(v, FieldElement) else v
        if full and any(v is None for v in vals):
            missing = [ring.names[i] for i, v in enumerate(vals) if v is None]
            raise UnknownVariable(f"no value for {missing}")
        return vals

    def substitute_mono_map(self, target: Ring, index_map) -> "SparsePoly":
        """Rename variables into ``target``: variable i goes to index_map[i]."""
        d: dict[int, int] = {}
        for m, c in self.terms.items():
            nm = 0
            i = 0
            while m:
                e = m & FIELD_MASK
                if e:
                    nm += e << (BITS * index_map[i])
                m >>= BITS
                i += 1
            d[nm] = c
        return SparsePoly(target, d)

    def to_ring(self, target: Ring) -> "SparsePoly":
        """Move into a ring whose variables include all of ours (by name)."""
        used = self.variables()
        idx = {}
        for i, n in enumerate(self.ring.names):
            if n in target.index:
                idx[i] = target.index[n]
            elif n in used:
                raise UnknownVariable(n)
        return self.substitute_mono_map(target, idx)

    # -- derivatives and roots -----------------------------------------------------

    def hasse_derivative(self, var, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative derivative order")
        if n == 0:
            return self
        ring = self.ring
        i = ring._idx(var)
        shift = BITS * i
        p = ring.field.p
        F = ring.field
        d: dict[int, int] = {}
        for m, c in self.terms.items():
            e = (m >> shift) & FIELD_MASK
            if e < n:
                continue
            b = binomial_mod(e, n, p)
            if not b:
                continue
            v = F.mul(c, F.from_int(b))
            mm = m - (n << shift)
            s = F.add(d.get(mm, 0), v)
            if s:
                d[mm] = s
            else:
                d.pop(mm, None)
        return SparsePoly(ring, d)

    def univariate_coeffs(self, var) -> list[int]:
        """Dense coefficient list (ascending) of a polynomial in the single variable ``var``."""
        i = self.ring._idx(var)
        shift = BITS * i
        if not self.terms:
            return []
        out = [0] * (self.degree(var) + 1)
        for m, c in self.terms.items():
            e = (m >> shift) & FIELD_MASK
            if m != e << shift:
                raise ValueError(f"{self} is not univariate in {self.ring.names[i]}")
            out[e] = c
        return out

    def multiplicity_at(self, var, root) -> int:
        coeffs = self.univariate_coeffs(var)
        if not coeffs:
            raise ZeroPolynomial("multiplicity of a root of the zero polynomial")
        F = self.ring.field
        r = root.value if isinstance(root, FieldElement) else root
        return univariate_multiplicity(F, coeffs, r)

    def roots(self, var) -> list[tuple[FieldElement, int]]:
        coeffs = self.univariate_coeffs(var)
        if not coeffs:
            raise ZeroPolynomial("roots of the zero polynomial")
        F = self.ring.field
        return [(FieldElement(F, r), k) for r, k in univariate_roots(F, coeffs)]

    # -- text -----------------------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"SparsePoly({format_poly(self)!r})"


# ---------------------------------------------------------------------------
# univariate helpers on dense int coefficient lists


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    result = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        num = den = 1
        for j in range(b):
            num = num * (a - j) % p
            den = den * (j + 1) % p
        result = result * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return result


def univariate_eval(F: FieldSpec, coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def univariate_hasse(F: FieldSpec, coeffs, n: int) -> list[int]:
    out = []
    for e in range(n, len(coeffs)):
        b = binomial_mod(e, n, F.p)
        out.append(F.mul(coeffs[e], F.from_int(b)) if b else 0)
    return out


def univariate_multiplicity(F: FieldSpec, coeffs, r: int) -> int:
    k = 0
    while k < len(coeffs) and univariate_eval(F, univariate_hasse(F, coeffs, k), r) == 0:
        k += 1
    return k


def univariate_roots(F: FieldSpec, coeffs) -> list[tuple[int, int]]:
    """All roots with multiplicities, in canonical field order."""
    if all(c == 0 for c in coeffs):
        raise ZeroPolynomial("roots of the zero polynomial")
    out = []
    for x in F.elements():
        k = univariate_multiplicity(F, coeffs, x)
        if k:
            out.append((x, k))
    return out


# ---------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def format_mono(ring: Ring, m: int) -> str:
    parts = []
    for i in range(ring.nvars - 1, -1, -1):
        e = ring.exponent(m, i)
        if e == 1:
            parts.append(ring.names[i])
        elif e:
            parts.append(f"{ring.names[i]}^{e}")
    return "*".join(parts)


def _format_coef(F: FieldSpec, c: int) -> str:
    if F.in_prime_subfield(c):
        return str(c)
    log = F.log[c]
    return "g" if log == 1 else f"g^{log}"


def format_poly(p: SparsePoly) -> str:
    if not p.terms:
        return "0"
    F = p.ring.field
    out = []
    for m, c in p.sorted_terms():
        mono = format_mono(p.ring, m)
        if not mono:
            out.append(_format_coef(F, c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{_format_coef(F, c)}*{mono}")
    return " + ".join(out)


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # only trailing whitespace left
                break
            kind = "num" if m.group(1) else "name" if m.group(2) else "sym"
            val = m.group(1) or m.group(2) or m.group(3)
            self.toks.append((kind, val, m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, sym):
        kind, val, pos = self.take()
        if val != sym:
            raise ParseError(f"expected {sym!r}", pos)

    def parse(self) -> SparsePoly:
        if not self.toks:
            raise ParseError("empty polynomial", 0)
        p = self.poly()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def poly(self) -> SparsePoly:
        neg = False
        if self.peek()[1] in ("-", "+"):
            neg = self.take()[1] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> SparsePoly:
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> SparsePoly:
        base = self.base()
        if self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError("expected exponent", pos)
            return base ** int(val)
        return base

    def base(self) -> SparsePoly:
        kind, val, pos = self.take()
        ring = self.ring
        if kind == "num":
            return ring.const(int(val))
        if kind == "name":
            if val in ring.index:
                return ring.var(val)
            if val == "g":
                return ring.const(FieldElement(ring.field, ring.field.generator))
            raise ParseError(f"unknown variable {val!r}", pos)
        if val == "(":
            p = self.poly()
            self.expect(")")
            return p
        raise ParseError(f"unexpected {val!r}" if val else "unexpected end of input", pos)


def parse_poly(text: str, ring: Ring) -> SparsePoly:
    return _Parser(text, ring).parse()
