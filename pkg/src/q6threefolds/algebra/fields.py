"""Exact scalar fields.

Three kinds of scalars are used throughout the package:

* rationals, represented by :class:`fractions.Fraction` (plain ``int`` is
  accepted wherever a rational is expected);
* elements of a prime field F_q, represented by :class:`FF`;
* elements of the quadratic extension F_{q^2}, represented by :class:`FF2`.

Characteristic 2 and 3 are rejected.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import isqrt


class FieldMismatch(TypeError):
    """Raised when scalars from different fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class RationalField:
    name = "QQ"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, (FF, FF2)):
            raise FieldMismatch(f"cannot coerce {x!r} into QQ")
        return Fraction(x)

    def random(self, rng: random.Random, bound: int = 20) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def sqrt(self, x) -> Fraction | None:
        x = Fraction(x)
        if x < 0:
            return None
        n, d = isqrt(x.numerator), isqrt(x.denominator)
        if n * n == x.numerator and d * d == x.denominator:
            return Fraction(n, d)
        return None

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class PrimeField:
    """The prime field F_q for an odd prime q > 3."""

    def __init__(self, q: int):
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        if q in (2, 3):
            raise ValueError("characteristic 2 and 3 are not supported")
        self.q = q
        self.characteristic = q
        self.zero = FF(0, self)
        self.one = FF(1, self)

    @property
    def name(self) -> str:
        return f"GF({self.q})"

    def __call__(self, x) -> FF:
        if isinstance(x, FF):
            if x.field is not self:
                raise FieldMismatch(f"{x!r} is not in {self.name}")
            return x
        if isinstance(x, FF2):
            raise FieldMismatch(f"{x!r} is not in {self.name}")
        if isinstance(x, Fraction):
            num = x.numerator % self.q
            den = x.denominator % self.q
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.q}")
            return FF(num * pow(den, -1, self.q), self)
        return FF(int(x), self)

    def elements(self):
        return [FF(i, self) for i in range(self.q)]

    def random(self, rng: random.Random, bound: int | None = None) -> FF:
        return FF(rng.randrange(self.q), self)

    def is_square(self, x) -> bool:
        v = self(x).v
        return v == 0 or pow(v, (self.q - 1) // 2, self.q) == 1

    def sqrt(self, x) -> FF | None:
        """Tonelli-Shanks square root, or None for non-residues."""
        a = self(x).v
        q = self.q
        if a == 0:
            return self.zero
        if pow(a, (q - 1) // 2, q) != 1:
            return None
        if q % 4 == 3:
            return FF(pow(a, (q + 1) // 4, q), self)
        s, e = q - 1, 0
        while s % 2 == 0:
            s //= 2
            e += 1
        n = 2
        while pow(n, (q - 1) // 2, q) != q - 1:
            n += 1
        x_ = pow(a, (s + 1) // 2, q)
        b = pow(a, s, q)
        g = pow(n, s, q)
        r = e
        while b != 1:
            t, m = b, 0
            while t != 1:
                t = t * t % q
                m += 1
            gs = pow(g, 1 << (r - m - 1), q)
            g = gs * gs % q
            x_ = x_ * gs % q
            b = b * g % q
            r = m
        return FF(x_, self)

    def nonresidue(self) -> int:
        n = 2
        while pow(n, (self.q - 1) // 2, self.q) != self.q - 1:
            n += 1
        return n

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def GF(q: int) -> PrimeField:
    """Cached prime field constructor, so equal moduli give the same object."""
    return PrimeField(q)


class FF:
    """An element of a prime field."""

    __slots__ = ("v", "field")

    def __init__(self, v: int, field: PrimeField):
        self.v = v % field.q
        self.field = field

    def _coerce(self, other):
        if isinstance(other, FF):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, FF2):
            return NotImplemented
        raise FieldMismatch(f"cannot combine {self.field} element with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FF(self.v + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FF(self.v - o, self.field)

    def __rsub__(self, other):
        return FF(self._coerce(other) - self.v, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FF(self.v * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FF(-self.v, self.field)

    def inverse(self) -> FF:
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in " + self.field.name)
        return FF(pow(self.v, -1, self.field.q), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o % self.field.q == 0:
            raise ZeroDivisionError("division by zero in " + self.field.name)
        return FF(self.v * pow(o, -1, self.field.q), self.field)

    def __rtruediv__(self, other):
        return FF(self._coerce(other), self.field) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FF(pow(self.v, n, self.field.q), self.field)

    def __eq__(self, other):
        if isinstance(other, FF):
            return self.field is other.field and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.field.q
        if isinstance(other, FF2):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.field.q))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v}"


class QuadraticExtension:
    """F_{q^2} = F_q[w] / (w^2 - n) for the smallest non-residue n."""

    def __init__(self, q: int):
        self.base = GF(q)
        self.q = q
        self.n = self.base.nonresidue()
        self.characteristic = q
        self.zero = FF2(0, 0, self)
        self.one = FF2(1, 0, self)
        self.gen = FF2(0, 1, self)

    @property
    def name(self) -> str:
        return f"GF({self.q}^2)"

    def __call__(self, x) -> FF2:
        if isinstance(x, FF2):
            if x.field is not self:
                raise FieldMismatch(f"{x!r} is not in {self.name}")
            return x
        b = self.base(x)
        return FF2(b.v, 0, self)

    def elements(self):
        return [FF2(a, b, self) for b in range(self.q) for a in range(self.q)]

    def random(self, rng: random.Random, bound: int | None = None) -> FF2:
        return FF2(rng.randrange(self.q), rng.randrange(self.q), self)

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def GF2(q: int) -> QuadraticExtension:
    return QuadraticExtension(q)


class FF2:
    """An element a + b*w of F_{q^2}, w^2 = n."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: int, b: int, field: QuadraticExtension):
        q = field.q
        self.a = a % q
        self.b = b % q
        self.field = field

    def _coerce(self, other) -> tuple[int, int]:
        if isinstance(other, FF2):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.a, other.b
        if isinstance(other, FF):
            if other.field is not self.field.base:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.v, 0
        if isinstance(other, int):
            return other, 0
        raise FieldMismatch(f"cannot combine {self.field} element with {type(other).__name__}")

    def __add__(self, other):
        c, d = self._coerce(other)
        return FF2(self.a + c, self.b + d, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        c, d = self._coerce(other)
        return FF2(self.a - c, self.b - d, self.field)

    def __rsub__(self, other):
        c, d = self._coerce(other)
        return FF2(c - self.a, d - self.b, self.field)

    def __mul__(self, other):
        c, d = self._coerce(other)
        n = self.field.n
        return FF2(self.a * c + self.b * d * n, self.a * d + self.b * c, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FF2(-self.a, -self.b, self.field)

    def inverse(self) -> FF2:
        q, n = self.field.q, self.field.n
        norm = (self.a * self.a - n * self.b * self.b) % q
        if norm == 0:
            raise ZeroDivisionError("inverse of zero in " + self.field.name)
        t = pow(norm, -1, q)
        return FF2(self.a * t, -self.b * t, self.field)

    def __truediv__(self, other):
        c, d = self._coerce(other)
        return self * FF2(c, d, self.field).inverse()

    def __rtruediv__(self, other):
        c, d = self._coerce(other)
        return FF2(c, d, self.field) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            c, d = self._coerce(other)
        except FieldMismatch:
            return False
        q = self.field.q
        return self.a == c % q and self.b == d % q

    def __hash__(self):
        if self.b == 0:
            return hash((self.a, self.field.q))
        return hash((self.a, self.b, self.field.q, 2))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"{self.a}+{self.b}w" if self.b else f"{self.a}"


def field_of(x):
    """Field an individual scalar belongs to (ints count as rationals)."""
    if isinstance(x, (FF, FF2)):
        return x.field
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a scalar: {x!r}")


def common_field(values):
    """The single field shared by ``values``.

    Plain ints are compatible with every field. Rationals with a nontrivial
    denominator never mix with finite field elements.
    """
    found = None
    saw_fraction = False
    for x in values:
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            continue
        if isinstance(x, Fraction):
            saw_fraction = True
            continue
        f = field_of(x)
        if found is None:
            found = f
        elif f is not found:
            raise FieldMismatch(f"mixed fields {found} and {f}")
    if found is None:
        return QQ
    if saw_fraction:
        raise FieldMismatch(f"mixed fields QQ and {found}")
    return found


def to_field(x, field):
    return field(x)


def format_scalar(x) -> str:
    """Serialize a scalar as ``"n/d"`` (or ``"n"``); finite field elements as residues."""
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, FF):
        return str(x.v)
    if isinstance(x, FF2):
        return f"{x.a}+{x.b}w"
    raise TypeError(f"not a scalar: {x!r}")


def parse_scalar(s) -> Fraction:
    if isinstance(s, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s.strip())
    raise ValueError(f"rational must be a string 'n/d' or an integer, got {s!r}")
