"""Truncated formal diffeomorphisms of R^n.

A Jet is the polynomial representative of an order-J jet at 0: per component a
sparse map {multi-index: coefficient}, multi-indices being sorted tuples over
1..n of length <= J (the empty tuple is the constant term).  Coefficients live
in a ring adapter (Fraction, Poly, or DualPoly) so the same composition and
factorization code serves concrete jets, jets with symbolic Taylor
coefficients, and first-order perturbed jets.

Coordinates follow the derivative normalization: alpha(i, S) is the value of
the |S|-th partial derivative at 0, i.e. multiplicity! times the monomial
coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import DimensionMismatch, NotUnipotent, SingularLinearPart, TruncationOverflow
from .poly import FRACTION_RING, POLY_RING, DualPoly, DualRing, Poly

Mono = tuple  # sorted tuple of indices in 1..n, e.g. (1, 1, 2) = x1^2 x2


def mono_factorial(m: Mono) -> int:
    """Product of factorials of multiplicities (the d^|S| <-> coefficient factor)."""
    out, run = 1, 1
    for a, b in zip(m, m[1:] + (None,)):
        if b == a:
            run += 1
        else:
            out *= math.factorial(run)
            run = 1
    return out


def monomials_upto(n: int, max_deg: int, min_deg: int = 0):
    for d in range(min_deg, max_deg + 1):
        yield from combinations_with_replacement(range(1, n + 1), d)


class Jet:
    __slots__ = ("n", "order", "comps", "ring")

    def __init__(self, n: int, order: int, comps=None, ring=FRACTION_RING):
        if order < 1:
            raise DimensionMismatch("jet order must be >= 1")
        self.n = n
        self.order = order
        self.ring = ring
        self.comps = [dict() for _ in range(n)]
        if comps:
            for (i, m), c in comps.items():
                self.set_coeff(i, m, c)

    def set_coeff(self, i: int, m: Mono, c):
        if len(m) > self.order:
            return
        c = self.ring.coerce(c)
        if self.ring.is_zero(c):
            self.comps[i - 1].pop(m, None)
        else:
            self.comps[i - 1][m] = c

    def coeff(self, i: int, m: Mono):
        return self.comps[i - 1].get(m, self.ring.zero)

    def alpha(self, i: int, S: Mono):
        """Derivative-normalized Taylor coefficient alpha^i_S."""
        return self.coeff(i, tuple(sorted(S))) * self.ring.coerce(mono_factorial(tuple(sorted(S))))

    def constant(self):
        return [self.coeff(i, ()) for i in range(1, self.n + 1)]

    def linear_matrix(self):
        return [[self.coeff(i, (j,)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    @classmethod
    def identity(cls, n: int, order: int, ring=FRACTION_RING) -> "Jet":
        j = cls(n, order, ring=ring)
        for i in range(1, n + 1):
            j.set_coeff(i, (i,), ring.one)
        return j

    def is_njet(self) -> bool:
        ring = self.ring
        for i in range(1, self.n + 1):
            if not ring.is_zero(self.coeff(i, ())):
                return False
            for j in range(1, self.n + 1):
                want = ring.one if i == j else ring.zero
                got = self.coeff(i, (j,))
                diff = got - want
                if not ring.is_zero(ring.coerce(diff)):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Jet) or (self.n, self.order) != (other.n, other.order):
            return False
        for a, b in zip(self.comps, other.comps):
            keys = set(a) | set(b)
            for k in keys:
                x = a.get(k, self.ring.zero)
                y = b.get(k, self.ring.zero)
                if not self.ring.is_zero(self.ring.coerce(x - y)):
                    return False
        return True

    def __repr__(self):
        bits = []
        for i in range(1, self.n + 1):
            terms = []
            for m, c in sorted(self.comps[i - 1].items(), key=lambda t: (len(t[0]), t[0])):
                mono = "".join(f"x{j}" for j in m) or "1"
                terms.append(f"({c})*{mono}")
            bits.append(f"y{i} = " + (" + ".join(terms) or "0"))
        return "Jet[" + "; ".join(bits) + "]"


def _series_mul(a: dict, b: dict, order: int, ring) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            if len(m1) + len(m2) > order:
                continue
            m = tuple(sorted(m1 + m2))
            s = out.get(m)
            s = c1 * c2 if s is None else s + c1 * c2
            out[m] = s
    return {m: c for m, c in out.items() if not ring.is_zero(ring.coerce(c))}


def compose(f: Jet, g: Jet) -> Jet:
    """Polynomial composition f(g(x)) truncated at the common order."""
    if f.n != g.n or f.order != g.order:
        raise DimensionMismatch("composition needs matching (n, order)")
    n, order, ring = f.n, f.order, f.ring
    out = Jet(n, order, ring=ring)
    # powers of g-components built incrementally per needed multiset prefix
    prod_cache: dict = {(): {(): ring.one}}

    def product_for(m: Mono) -> dict:
        if m in prod_cache:
            return prod_cache[m]
        head, last = m[:-1], m[-1]
        res = _series_mul(product_for(head), g.comps[last - 1], order, ring)
        prod_cache[m] = res
        return res

    for i in range(1, n + 1):
        acc: dict = {}
        for m, c in f.comps[i - 1].items():
            for mm, cc in product_for(m).items():
                s = acc.get(mm)
                v = c * cc
                acc[mm] = v if s is None else s + v
        for mm, cc in acc.items():
            out.set_coeff(i, mm, cc)
    return out


def invert(f: Jet) -> Jet:
    """Compositional inverse of an N-jet, exact order by order."""
    if not f.is_njet():
        raise NotUnipotent("invert requires an N-jet (fixed origin, identity linear part)")
    n, order, ring = f.n, f.order, f.ring
    g = Jet.identity(n, order, ring=ring)
    ident = Jet.identity(n, order, ring=ring)
    for _ in range(order):
        fg = compose(f, g)
        # g <- g - (f o g - id)
        nxt = Jet(n, order, ring=ring)
        for i in range(1, n + 1):
            keys = set(g.comps[i - 1]) | set(fg.comps[i - 1]) | set(ident.comps[i - 1])
            for m in keys:
                nxt.set_coeff(i, m, g.coeff(i, m) - fg.coeff(i, m) + ident.coeff(i, m))
        g = nxt
    if not compose(f, g) == Jet.identity(n, order, ring=ring):
        raise NotUnipotent("inverse iteration failed to converge")
    return g


@dataclass(frozen=True)
class AffineMap:
    """x -> matrix.x + translation, matrix invertible."""

    matrix: tuple  # tuple of row tuples
    translation: tuple

    @property
    def n(self):
        return len(self.translation)


def _mat_inv(mat, ring):
    n = len(mat)
    a = [list(row) for row in mat]
    inv = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if not ring.is_zero(ring.coerce(a[r][col])):
                piv = r
                break
        if piv is None:
            raise SingularLinearPart("linear part not invertible")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        try:
            d = ring.inv(a[col][col])
        except ZeroDivisionError as exc:
            raise SingularLinearPart(str(exc)) from exc
        a[col] = [x * d for x in a[col]]
        inv[col] = [x * d for x in inv[col]]
        for r in range(n):
            if r != col:
                x = a[r][col]
                if not ring.is_zero(ring.coerce(x)):
                    a[r] = [u - x * v for u, v in zip(a[r], a[col])]
                    inv[r] = [u - x * v for u, v in zip(inv[r], inv[col])]
    return inv


def affine_apply(a: AffineMap, psi: Jet) -> Jet:
    """The jet a o psi (exact: affine maps are global polynomials)."""
    ring = psi.ring
    out = Jet(psi.n, psi.order, ring=ring)
    for i in range(1, psi.n + 1):
        acc: dict = {(): ring.coerce(a.translation[i - 1])}
        for j in range(1, psi.n + 1):
            c = ring.coerce(a.matrix[i - 1][j - 1])
            if ring.is_zero(c):
                continue
            for m, v in psi.comps[j - 1].items():
                s = acc.get(m)
                w = c * v
                acc[m] = w if s is None else s + w
        for m, v in acc.items():
            out.set_coeff(i, m, v)
    return out


def kac_factorize(phi: Jet):
    """Unique phi = a o psi with a affine and psi an N-jet."""
    ring = phi.ring
    c = phi.constant()
    lin = phi.linear_matrix()
    lin_inv = _mat_inv(lin, ring)
    a = AffineMap(matrix=tuple(tuple(row) for row in lin), translation=tuple(c))
    psi = Jet(phi.n, phi.order, ring=ring)
    for i in range(1, phi.n + 1):
        acc: dict = {}
        for j in range(1, phi.n + 1):
            coef = lin_inv[i - 1][j - 1]
            if ring.is_zero(ring.coerce(coef)):
                continue
            for m, v in phi.comps[j - 1].items():
                w = coef * (v - c[j - 1] if m == () else v)
                s = acc.get(m)
                acc[m] = w if s is None else s + w
        for m, v in acc.items():
            psi.set_coeff(i, m, v)
    if not psi.is_njet():
        raise SingularLinearPart("Kac factorization produced a non-N jet")
    return a, psi


def right_action(psi: Jet, phi: AffineMap) -> Jet:
    """psi <| phi: the N-component of psi o phi."""
    if psi.n != phi.n:
        raise DimensionMismatch("dimension mismatch in right action")
    ring = psi.ring
    comp = Jet(psi.n, psi.order, ring=ring)
    # psi o phi: substitute the affine map (exact; degree does not grow)
    aff = Jet(psi.n, psi.order, ring=ring)
    for i in range(1, psi.n + 1):
        aff.set_coeff(i, (), phi.translation[i - 1])
        for j in range(1, psi.n + 1):
            aff.set_coeff(i, (j,), phi.matrix[i - 1][j - 1])
    comp = compose(psi, aff)
    _, out = kac_factorize(comp)
    return out


# ---------------------------------------------------------------------------
# symbolic jets and the infinitesimal action of g on jet coordinates


def alpha_var(i: int, S: Mono, family: str = "a") -> tuple:
    return ("a", family, i, tuple(sorted(S)))


def symbolic_njet(n: int, order: int, family: str = "a") -> Jet:
    """N-jet whose alpha coordinates are free polynomial indeterminates."""
    j = Jet.identity(n, order, ring=POLY_RING)
    for i in range(1, n + 1):
        for m in monomials_upto(n, order, min_deg=2):
            j.set_coeff(i, m, Poly.var(alpha_var(i, m, family)) * Fraction(1, mono_factorial(m)))
    return j


def flow_jet(gen, n: int, order: int, base_ring):
    """Order-1 flow of a g-basis element over dual numbers.

    gen = ('X', k): x -> x + t e_k;  gen = ('Y', i, j): x -> (I + t E_i^j) x.
    """
    ring = DualRing(base_ring)
    t = DualPoly(base_ring.zero, base_ring.one)
    j = Jet.identity(n, order, ring=ring)
    if gen[0] == "X":
        k = gen[1]
        j.set_coeff(k, (), t)
    else:
        _, i, jj = gen
        base = ring.one if i == jj else ring.zero
        j.set_coeff(i, (jj,), base + t)
    return j


def lift_to_dual(psi: Jet, base_ring) -> Jet:
    ring = DualRing(base_ring)
    out = Jet(psi.n, psi.order, ring=ring)
    for i in range(1, psi.n + 1):
        for m, c in psi.comps[i - 1].items():
            out.set_coeff(i, m, DualPoly(c, base_ring.zero))
    return out


def generator_action_table(gen, n: int, order: int) -> dict:
    """{alpha key (i, S): Poly in alpha vars} for the action of one g-generator.

    Computed from d/dt at t=0 of the coordinates of psi <| exp(t gen), with
    psi a symbolic N-jet; exact by dual-number arithmetic.
    """
    psi = lift_to_dual(symbolic_njet(n, order), POLY_RING)
    fl = flow_jet(gen, n, order, POLY_RING)
    comp = compose(psi, fl)
    _, acted = kac_factorize(comp)
    table = {}
    for i in range(1, n + 1):
        for m in monomials_upto(n, order, min_deg=2):
            val = acted.alpha(i, m)
            table[(i, m)] = val.a1
    return table


def infinitesimal_action(gen, poly: Poly, n: int, order: int, _cache: dict = {}) -> Poly:
    """Derivation action of a g-basis element on a polynomial in alpha vars.

    Raises TruncationOverflow when the exact result needs coordinates above
    the truncation order (X-flows raise jet order by one).
    """
    raises_order = gen[0] == "X"
    key = (gen, n, order)
    if key not in _cache:
        _cache[key] = generator_action_table(gen, n, order)
    table = _cache[key]
    out = Poly.const(0)
    for mono, c in poly.terms.items():
        for pos, (v, e) in enumerate(mono):
            _, _, i, S = v
            if raises_order and len(S) >= order:
                raise TruncationOverflow(
                    f"action on order-{len(S)} coordinate needs order {len(S)+1} > {order}"
                )
            img = table[(i, S)]
            rest = []
            for k, (vv, ee) in enumerate(mono):
                if k == pos:
                    if ee > 1:
                        rest.append((vv, ee - 1))
                else:
                    rest.append((vv, ee))
            out = out + Poly({tuple(rest): c * e}) * img
    return out
