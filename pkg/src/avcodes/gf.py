"""Finite field arithmetic GF(p^k) with a pinned primitive polynomial.

Elements are stored as plain ints in ``range(q)``: the base-``p`` digits of
the int are the coefficients of the polynomial-basis representation
(least significant digit = constant term).  ``FieldSpec`` owns lookup
tables, so hot loops elsewhere can work on ints directly; ``FieldElement``
is the user-facing value type.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass


class FieldError(ValueError):
    pass


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class ParseError(ValueError):
    """Malformed literal or polynomial text; ``pos`` is the offending offset."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)
        self.pos = pos


# Largest field for which full q*q addition/multiplication tables are built.
_FULL_TABLE_LIMIT = 1024


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of ``num`` by monic ``den`` over GF(p), ascending coefficients."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j in range(dd + 1):
                num[i - dd + j] = (num[i - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def _is_irreducible(poly: list[int], p: int) -> bool:
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(poly, list(tail) + [1], p)):
                return False
    return True


class FieldSpec:
    """GF(p^k) defined by a monic primitive polynomial over GF(p).

    ``primitive_poly`` lists coefficients in ascending powers, length k+1.
    The class of the indeterminate is the generator ``g``.
    """

    def __init__(self, p: int, k: int, primitive_poly):
        primitive_poly = [int(c) % p if p else int(c) for c in primitive_poly]
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1 or len(primitive_poly) != k + 1:
            raise FieldError(f"need {k + 1} coefficients for degree {k}")
        if primitive_poly[-1] != 1:
            raise FieldError("primitive polynomial must be monic")
        if not _is_irreducible(primitive_poly, p):
            raise NotIrreducible(f"{primitive_poly} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p**k
        self.primitive_poly = tuple(primitive_poly)
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.k):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _from_digits(self, digits) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d
        return v

    def _add_slow(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        return self._from_digits((x + y) % p for x, y in zip(self._digits(a), self._digits(b)))

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            gen_digits = [(-self.primitive_poly[0]) % p]
        else:
            gen_digits = [0, 1] + [0] * (k - 2)
        gen = self._from_digits(gen_digits)
        low = [(-c) % p for c in self.primitive_poly[:-1]]

        def times_gen(v):
            d = self._digits(v)
            if k == 1:
                return (d[0] * gen_digits[0]) % p
            top = d[-1]
            shifted = [0] + d[:-1]
            return self._from_digits((shifted[i] + top * low[i]) % p for i in range(k))

        exp = [1]
        for _ in range(q - 2):
            exp.append(times_gen(exp[-1]))
        if len(set(exp)) != q - 1 or 0 in exp or (q > 2 and times_gen(exp[-1]) != 1):
            raise NotPrimitive(
                f"{list(self.primitive_poly)}: generator does not have order {q - 1}")
        self.generator = gen
        self.exp = exp + exp  # doubled so exp[a+b] needs no reduction
        self.log = [None] * q
        for i, v in enumerate(exp):
            self.log[v] = i
        self.neg = [self._from_digits((-d) % p for d in self._digits(v)) for v in range(q)]
        self.inv = [None] + [exp[(q - 1 - self.log[v]) % (q - 1)] for v in range(1, q)]
        if q <= _FULL_TABLE_LIMIT:
            self.add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
            self.mul_table = [[self._mul_log(a, b) for b in range(q)] for a in range(q)]
        else:
            self.add_table = None
            self.mul_table = None
        # prime subfield embedding: integer n -> element n*1
        self.prime_elems = [self._from_digits([i] + [0] * (k - 1)) for i in range(p)]

    def _mul_log(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    # -- int-level arithmetic ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in " + str(self))
        if a == 0:
            return 0
        return self.exp[self.log[a] - self.log[b] + self.q - 1]

    def power(self, a: int, n: int) -> int:
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Embed an integer into the prime subfield."""
        return self.prime_elems[n % self.p]

    def in_prime_subfield(self, a: int) -> bool:
        return a < self.p

    def elements(self) -> list[int]:
        """All q elements in canonical order: 0, 1, g, g^2, ..., g^(q-2)."""
        return [0] + self.exp[: self.q - 1]

    def order_index(self, a: int) -> int:
        """Position of ``a`` in the canonical order."""
        return 0 if a == 0 else self.log[a] + 1

    # -- literals -----------------------------------------------------------

    def format_int(self, a: int) -> str:
        if self.in_prime_subfield(a):
            return str(a)
        return "g" if self.log[a] == 1 else f"g^{self.log[a]}"

    def parse_int(self, text: str) -> int:
        s = text.strip()
        m = re.fullmatch(r"(\d+)|g(?:\s*\^\s*(\d+))?", s)
        if not m:
            raise ParseError(f"bad field element literal {text!r}", 0)
        if m.group(1) is not None:
            return self.from_int(int(m.group(1)))
        e = int(m.group(2)) if m.group(2) is not None else 1
        return self.power(self.generator, e)

    # -- value helpers ------------------------------------------------------

    def __call__(self, v) -> "FieldElement":
        if isinstance(v, FieldElement):
            return v
        if isinstance(v, str):
            return FieldElement(self, self.parse_int(v))
        return FieldElement(self, self.from_int(v))

    def element(self, raw: int) -> "FieldElement":
        """Wrap an already-encoded int (no prime-subfield reduction)."""
        if not 0 <= raw < self.q:
            raise FieldError(f"{raw} out of range for GF({self.q})")
        return FieldElement(self, raw)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def enumerate(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in self.elements()]

    def describe(self) -> str:
        return f"p={self.p} k={self.k} primitive={','.join(map(str, self.primitive_poly))}"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (
            self.p, self.k, self.primitive_poly) == (other.p, other.k, other.primitive_poly)

    def __hash__(self):
        return hash((self.p, self.k, self.primitive_poly))

    def __repr__(self):
        return f"GF({self.q})[{self.describe()}]"


def make_field(p: int, k: int, primitive_poly) -> FieldSpec:
    return FieldSpec(p, k, primitive_poly)


# Primitive polynomials pinned for the fields used by the fixtures.
PINNED = {
    2: (2, 1, (1, 1)),
    3: (3, 1, (1, 1)),  # x + 1: generator -1 = 2
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (3, 1)),  # generator 2
    7: (7, 1, (4, 1)),  # generator 3
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
}


def pinned_field(q: int) -> FieldSpec:
    if q not in PINNED:
        raise FieldError(f"no pinned primitive polynomial for q={q}")
    return make_field(*PINNED[q])


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("mixing elements of different fields")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg[self.value])

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.power(self.value, n))

    def inverse(self):
        return FieldElement(self.field, self.field.div(1, self.value))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.from_int(other)
        return isinstance(other, FieldElement) and self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def __str__(self):
        return self.field.format_int(self.value)

    def __repr__(self):
        return f"FieldElement({self})"
