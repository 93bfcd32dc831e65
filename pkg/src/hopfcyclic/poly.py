"""Sparse multivariate polynomials over Q, and dual numbers over them.

Variables are arbitrary hashable, totally ordered keys (tuples in practice).
A monomial is a sorted tuple of (variable, exponent) pairs; the empty tuple
is 1.  DualPoly adjoins a square-zero parameter t for exact first-order
perturbation (derivatives of group actions at t=0).
"""

from __future__ import annotations

from fractions import Fraction

ONE_MONO = ()


def mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def const(cls, c) -> "Poly":
        c = Fraction(c)
        return cls({ONE_MONO: c} if c else {})

    @classmethod
    def var(cls, v) -> "Poly":
        return cls({((v, 1),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONO in self.terms)

    def const_part(self) -> Fraction:
        return self.terms.get(ONE_MONO, Fraction(0))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                del out[m]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly.__new__(Poly)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def coeff(self, mono: tuple) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def variables(self):
        vs = set()
        for m in self.terms:
            for v, _ in m:
                vs.add(v)
        return vs

    def subst(self, mapping: dict) -> "Poly":
        """Substitute variables per mapping {var: Poly}; absent vars stay."""
        out = Poly.const(0)
        cache = {}

        def var_pow(v, e):
            key = (v, e)
            if key not in cache:
                base = mapping.get(v)
                if base is None:
                    base = Poly.var(v)
                acc = Poly.const(1)
                for _ in range(e):
                    acc = acc * base
                cache[key] = acc
            return cache[key]

        for m, c in self.terms.items():
            term = Poly.const(c)
            for v, e in m:
                term = term * var_pow(v, e)
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{e}" if e > 1 else f"{v}" for v, e in m) or "1"
            bits.append(f"({c})*{mono}")
        return " + ".join(bits)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


class DualPoly:
    """a0 + t*a1 with t^2 = 0; components live in a base ring (Poly or Fraction)."""

    __slots__ = ("a0", "a1")

    def __init__(self, a0, a1):
        self.a0 = a0
        self.a1 = a1

    def __add__(self, other):
        return DualPoly(self.a0 + other.a0, self.a1 + other.a1)

    def __sub__(self, other):
        return DualPoly(self.a0 - other.a0, self.a1 - other.a1)

    def __neg__(self):
        return DualPoly(-self.a0, -self.a1)

    def __mul__(self, other):
        return DualPoly(self.a0 * other.a0, self.a0 * other.a1 + self.a1 * other.a0)

    def __eq__(self, other):
        return isinstance(other, DualPoly) and self.a0 == other.a0 and self.a1 == other.a1

    def __repr__(self):
        return f"({self.a0}) + t*({self.a1})"


class FractionRing:
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x):
        return Fraction(x)

    @staticmethod
    def is_zero(x):
        return not x

    @staticmethod
    def inv(x):
        return 1 / x


class PolyRing:
    zero = Poly.const(0)
    one = Poly.const(1)

    @staticmethod
    def coerce(x):
        return x if isinstance(x, Poly) else Poly.const(x)

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def inv(x):
        if not x.is_const() or x.is_zero():
            raise ZeroDivisionError("only nonzero constants invert in Poly")
        return Poly.const(1 / x.const_part())


class DualRing:
    """Dual numbers over a base ring adapter."""

    def __init__(self, base):
        self.base = base
        self.zero = DualPoly(base.zero, base.zero)
        self.one = DualPoly(base.one, base.zero)

    def coerce(self, x):
        if isinstance(x, DualPoly):
            return x
        return DualPoly(self.base.coerce(x), self.base.zero)

    def is_zero(self, x):
        return self.base.is_zero(x.a0) and self.base.is_zero(x.a1)

    def inv(self, x):
        i0 = self.base.inv(x.a0)
        return DualPoly(i0, -(i0 * x.a1 * i0))


FRACTION_RING = FractionRing()
POLY_RING = PolyRing()
