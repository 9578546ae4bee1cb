"""Exact scalars: rationals and cyclotomic numbers.

Rationals are ``gmpy2.mpq`` (canonical reduced form, positive denominator).
A :class:`Cyclotomic` lives in Q(zeta_m) for an explicit conductor m and is
stored as a coefficient vector of length phi(m) in the power basis
1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic polynomial.  Mixed
arithmetic unifies conductors via the lcm embedding, so expressions like
``root_of_unity(6, 1) + root_of_unity(3, 2)`` just work (and equal 0).

Scalar literals use a tiny grammar: sums of rational terms, optionally
times a root of unity written ``z<m>`` or ``z<m>^<k>``::

    -1/2*z3 + 1        z4^3        7

parse_scalar/format_scalar round-trip exactly.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Union

from gmpy2 import mpq

Scalar = Union[int, "mpq", "Cyclotomic"]

_ZERO = mpq(0)
_ONE = mpq(1)


def _poly_divmod_exact(num: list[int], den: list[int]) -> list[int]:
    """Quotient of num / den over Z, asserting the division is exact.

    Coefficient lists are ascending, den is monic.
    """
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert all(c == 0 for c in num[: len(den) - 1]), "non-exact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the m-th cyclotomic polynomial, over Z.

    Computed by exact division: Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    """
    if m < 1:
        raise ValueError("conductor must be >= 1")
    p = [0] * (m + 1)
    p[0], p[m] = -1, 1
    for d in range(1, m):
        if m % d == 0:
            p = _poly_divmod_exact(p, list(cyclotomic_polynomial(d)))
    return tuple(p)


def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


class CyclotomicField:
    """Q(zeta_m) with precomputed reduction data, one shared instance per m.

    ``reduction[e]`` is the coefficient vector of x^(phi+e) mod Phi_m, for
    exponents up to whatever multiplication and lcm-embeddings can produce.
    """

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, m: int):
        inst = cls._cache.get(m)
        if inst is None:
            inst = super().__new__(cls)
            inst._init(m)
            cls._cache[m] = inst
        return inst

    def _init(self, m: int):
        self.conductor = m
        mod = cyclotomic_polynomial(m)
        self.phi = len(mod) - 1
        # x^phi = -(c_0 + ... + c_{phi-1} x^{phi-1}); extend by shifted folding
        top = max(2 * self.phi - 2, m - 1)
        rows: list[tuple[mpq, ...]] = []
        cur = [mpq(-c) for c in mod[: self.phi]]
        for _ in range(self.phi, top + 1):
            rows.append(tuple(cur))
            lead = cur[-1]
            cur = [_ZERO] + cur[:-1]
            if lead:
                for j in range(self.phi):
                    cur[j] -= lead * mod[j]
        self.reduction = rows

    def power_vector(self, e: int) -> tuple[mpq, ...]:
        """Coefficients of x^e mod Phi_m, 0 <= e < conductor (or < 2*phi-1)."""
        if e < self.phi:
            return tuple(_ONE if i == e else _ZERO for i in range(self.phi))
        return self.reduction[e - self.phi]

    def element(self, coeffs) -> "Cyclotomic":
        return Cyclotomic(self, tuple(mpq(c) for c in coeffs))

    def zero(self) -> "Cyclotomic":
        return self.element([_ZERO] * self.phi)

    def one(self) -> "Cyclotomic":
        return self.element([_ONE] + [_ZERO] * (self.phi - 1))

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"


def _unify(a: "Cyclotomic", b: "Cyclotomic"):
    if a.field is b.field:
        return a, b
    m = math.lcm(a.field.conductor, b.field.conductor)
    F = CyclotomicField(m)
    return a.embed(F), b.embed(F)


class Cyclotomic:
    """An element of Q(zeta_m), immutable.

    Not hashable: equality crosses conductors (zeta6 == -zeta3^2 holds with
    distinct representations), so a consistent hash would require subfield
    descent, which nothing here needs.
    """

    __slots__ = ("field", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        assert len(coeffs) == field.phi
        self.field = field
        self.coeffs = coeffs

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _lift(x, field: CyclotomicField):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, int) or isinstance(x, type(_ZERO)):
            return field.element([mpq(x)] + [_ZERO] * (field.phi - 1))
        return None

    def embed(self, target: CyclotomicField) -> "Cyclotomic":
        m, M = self.field.conductor, target.conductor
        if m == M:
            return self
        if M % m:
            raise ValueError(f"no embedding Q(zeta_{m}) -> Q(zeta_{M})")
        step = M // m
        acc = [_ZERO] * target.phi
        for j, c in enumerate(self.coeffs):
            if c:
                for i, p in enumerate(target.power_vector(j * step)):
                    if p:
                        acc[i] += c * p
        return target.element(acc)

    def rational_part(self):
        """The element as an mpq if it lies in Q, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        a, b = _unify(self, o)
        return a.field.element([x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return self.field.element([-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        a, b = _unify(self, o)
        return a.field.element([x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        a, b = _unify(self, o)
        phi = a.field.phi
        conv = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        acc = list(conv[:phi])
        for e in range(2 * phi - 2, phi - 1, -1):
            c = conv[e]
            if c:
                for i, p in enumerate(a.field.reduction[e - phi]):
                    if p:
                        acc[i] += c * p
        return a.field.element(acc)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Extended Euclid against Phi_m (irreducible, so gcd is 1)."""
        if not self:
            raise ZeroDivisionError("cyclotomic division by zero")
        mod = [mpq(c) for c in cyclotomic_polynomial(self.field.conductor)]
        r0, r1 = mod, list(self.coeffs)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = _ONE / r1[0]
                acc = [_ZERO] * self.field.phi
                for i, c in enumerate(s1):
                    acc[i] += c * inv
                return self.field.element(acc)
            # r0 = q*r1 + r2
            q = [_ZERO] * (len(r0) - len(r1) + 1)
            r2 = list(r0)
            for i in range(len(q) - 1, -1, -1):
                c = r2[i + len(r1) - 1] / r1[-1]
                q[i] = c
                if c:
                    for j, d in enumerate(r1):
                        r2[i + j] -= c * d
            del r2[len(r1) - 1:]
            s2 = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s2[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, r2, s1, s2

    def __truediv__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        a, b = _unify(self, o)
        return a * b.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other, self.field)
        if o is None:
            return NotImplemented
        a, b = _unify(self, o)
        return a.coeffs == b.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"<cyclo[{self.field.conductor}] {format_scalar(self)}>"


def root_of_unity(m: int, k: int = 1) -> Scalar:
    """zeta_m^k as a scalar (an mpq when it is rational).

    >>> root_of_unity(2)
    mpq(-1,1)
    >>> root_of_unity(4) ** 2
    mpq(-1,1)
    """
    k %= m
    g = math.gcd(k, m) if k else m
    m2, k2 = m // g, k // g
    if m2 == 1:
        return _ONE
    if m2 == 2:
        return -_ONE
    F = CyclotomicField(m2)
    z = F.element(F.power_vector(k2))
    return z


def scalar_conductor(x: Scalar) -> int:
    return x.field.conductor if isinstance(x, Cyclotomic) else 1


def as_rational(x: Scalar):
    """mpq value of x if it is rational, else None."""
    if isinstance(x, Cyclotomic):
        return x.rational_part()
    return mpq(x)


# -- literal grammar ------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?:(?P<rat>\d+(?:/\d+)?))?(?:\*?z(?P<m>\d+)(?:\^(?P<k>\d+))?)?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar literal; result is an mpq when no root appears.

    >>> parse_scalar("-3/2")
    mpq(-3,2)
    >>> parse_scalar("z6") == -root_of_unity(3, 2)
    True
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"bad scalar literal: {text!r}")
    total: Scalar = _ZERO
    for t in chunks:
        sg = 1
        if t[0] == "+":
            t = t[1:]
        elif t[0] == "-":
            sg, t = -1, t[1:]
        m = _TERM_RE.match(t)
        if not m or (m.group("rat") is None and m.group("m") is None):
            raise ValueError(f"bad scalar literal: {text!r}")
        coef = mpq(m.group("rat")) if m.group("rat") is not None else _ONE
        if sg < 0:
            coef = -coef
        if m.group("m") is not None:
            mm = int(m.group("m"))
            if mm < 1:
                raise ValueError(f"bad conductor in {text!r}")
            kk = int(m.group("k") or 1)
            val = coef * root_of_unity(mm, kk)
        else:
            val = coef
        total = val + total
    return total


def _fmt_rat(q: mpq) -> str:
    return str(q)


def format_scalar(x: Scalar) -> str:
    """Canonical literal for x; parse_scalar(format_scalar(x)) == x.

    Roots are printed at the element's own conductor, constant term first.
    """
    r = as_rational(x)
    if r is not None:
        return _fmt_rat(r)
    assert isinstance(x, Cyclotomic)
    m = x.field.conductor
    parts: list[str] = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(_fmt_rat(c))
        else:
            z = f"z{m}" if k == 1 else f"z{m}^{k}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{_fmt_rat(c)}*{z}")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    return bool(a == b)


class ScalarField:
    """Session-wide scalar context: a fixed conductor plus parse/format.

    conductor 1 hands out raw mpq everywhere (fast path); otherwise zeros
    and ones are Cyclotomic at the session conductor so sums stay in one
    field without repeated unification.
    """

    def __init__(self, conductor: int = 1):
        self.conductor = conductor
        if conductor == 1:
            self.zero: Scalar = _ZERO
            self.one: Scalar = _ONE
        else:
            F = CyclotomicField(conductor)
            self.zero = F.zero()
            self.one = F.one()

    def from_int(self, n: int) -> Scalar:
        return mpq(n) + self.zero if self.conductor > 1 else mpq(n)

    def parse(self, text: str) -> Scalar:
        x = parse_scalar(text)
        c = scalar_conductor(x)
        if self.conductor % c:
            raise ValueError(
                f"literal {text!r} needs conductor {c}, session is {self.conductor}"
            )
        if self.conductor > 1 and isinstance(x, Cyclotomic):
            return x.embed(CyclotomicField(self.conductor))
        if self.conductor > 1:
            return x + self.zero
        return x

    def root(self, m: int, k: int = 1) -> Scalar:
        z = root_of_unity(m, k)
        c = scalar_conductor(z)
        if self.conductor % c:
            raise ValueError(f"zeta_{m} needs conductor {c}, session is {self.conductor}")
        return self.parse(format_scalar(z))

    def __repr__(self):
        return f"ScalarField(conductor={self.conductor})"


def literal_conductor(text: str) -> int:
    """Smallest conductor containing the value of the literal."""
    return scalar_conductor(parse_scalar(text))
