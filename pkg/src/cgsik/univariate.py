"""Univariate polynomials over Q(sqrt2): Sturm sequences and root isolation.

Everything here is exact.  Real algebraic numbers are represented by a
squarefree defining polynomial plus an isolating rational interval; the
only approximation in the whole toolkit is the final conversion to float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Union

from .qsqrt2 import QSqrt2

Scalar = Union[int, Fraction, QSqrt2]


def _coerce(x: Scalar) -> QSqrt2:
    if isinstance(x, QSqrt2):
        return x
    return QSqrt2(x, 0)


class UPoly:
    """Dense univariate polynomial, coefficients low to high, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar]) -> None:
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UPoly is immutable")

    @classmethod
    def zero(cls) -> UPoly:
        return _U_ZERO

    @classmethod
    def one(cls) -> UPoly:
        return _U_ONE

    @classmethod
    def x(cls) -> UPoly:
        return UPoly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> QSqrt2:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: UPoly) -> UPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPoly(out)

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __mul__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _U_ZERO
        out = [QSqrt2.zero()] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return UPoly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> UPoly:
        c = _coerce(c)
        if not c:
            return _U_ZERO
        return UPoly([k * c for k in self.coeffs])

    def shift_mul(self, k: int) -> UPoly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UPoly([QSqrt2.zero()] * k + list(self.coeffs))

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        if self.degree < other.degree:
            return _U_ZERO, self
        inv = other.leading().inverse()
        rem = list(self.coeffs)
        db = other.degree
        q = [QSqrt2.zero()] * (self.degree - db + 1)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c * inv
            q[i - db] = f
            rem[i] = QSqrt2.zero()
            for j in range(db):
                rem[i - db + j] = rem[i - db + j] - f * other.coeffs[j]
        return UPoly(q), UPoly(rem)

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def exact_div(self, other: UPoly) -> UPoly:
        q, r = divmod(self, other)
        if r:
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> UPoly:
        return UPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> UPoly:
        if not self.coeffs:
            return self
        lead = self.leading()
        if lead == QSqrt2.one():
            return self
        return self.scale(lead.inverse())

    def eval(self, x: Scalar) -> QSqrt2:
        x = _coerce(x)
        acc = QSqrt2.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Scalar) -> int:
        return self.eval(x).sign()

    def sign_at_inf(self, direction: int) -> int:
        """Sign at +infinity (direction=+1) or -infinity (-1)."""
        if not self.coeffs:
            return 0
        s = self.leading().sign()
        if direction < 0 and self.degree % 2 == 1:
            s = -s
        return s

    def compose_linear(self, a: Fraction, b: Fraction) -> UPoly:
        """p(a*x + b)."""
        acc = _U_ZERO
        lin = UPoly([b, a])
        for c in reversed(self.coeffs):
            acc = acc * lin + UPoly([c])
        return acc

    def __repr__(self) -> str:
        from .poly import format_coeff
        if not self.coeffs:
            return "UPoly(0)"
        parts = [f"({format_coeff(c)})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UPoly(" + " + ".join(parts) + ")"


_U_ZERO = UPoly([])
_U_ONE = UPoly([1])


def gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm."""
    while g:
        f, g = g, f % g
        if g:
            g = g.monic()
    return f.monic() if f else f


def squarefree_part(f: UPoly) -> UPoly:
    if f.degree <= 0:
        raise ValueError("squarefree part needs degree >= 1")
    return f.exact_div(gcd(f, f.derivative())).monic()


def root_bound(f: UPoly) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    if f.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    lead = f.leading()
    # lower bound for |lead|: |a^2 - 2 b^2| / (|a| + 2|b|)
    a, b = abs(lead.a), abs(lead.b)
    low = abs(lead.a * lead.a - 2 * lead.b * lead.b) / (a + 2 * b)
    top = Fraction(0)
    for c in f.coeffs[:-1]:
        up = abs(c.a) + 2 * abs(c.b)
        if up > top:
            top = up
    return 1 + top / low


def sturm_chain(f: UPoly) -> list[UPoly]:
    chain = [f, f.derivative()]
    while chain[-1]:
        rem = chain[-2] % chain[-1]
        if not rem:
            break
        chain.append((-rem).monic())
    return [p for p in chain if p]


def _variations(signs: Sequence[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count_interval(chain: Sequence[UPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct roots of chain[0] in the half-open interval (a, b]."""
    va = _variations([p.sign_at(a) for p in chain])
    vb = _variations([p.sign_at(b) for p in chain])
    return va - vb


def sturm_count_real(f: UPoly) -> int:
    """Number of distinct real roots of a nonzero polynomial."""
    if not f:
        raise ValueError("zero polynomial has infinitely many roots")
    if f.degree == 0:
        return 0
    g = squarefree_part(f)
    if g.degree == 0:
        return 0
    chain = sturm_chain(g)
    vneg = _variations([p.sign_at_inf(-1) for p in chain])
    vpos = _variations([p.sign_at_inf(+1) for p in chain])
    return vneg - vpos


class RealRoot:
    """A real algebraic number: either exact rational, or the unique root
    of a squarefree polynomial inside an open isolating interval."""

    __slots__ = ("poly", "lo", "hi", "_sign_lo", "exact")

    def __init__(self, poly: Optional[UPoly], lo: Fraction, hi: Fraction,
                 exact: Optional[Fraction] = None) -> None:
        self.poly = poly
        if exact is not None:
            self.lo = self.hi = Fraction(exact)
            self.exact = Fraction(exact)
            self._sign_lo = 0
        else:
            assert poly is not None
            self.lo = Fraction(lo)
            self.hi = Fraction(hi)
            self.exact = None
            self._sign_lo = poly.sign_at(self.lo)
            assert self._sign_lo != 0 and poly.sign_at(self.hi) == -self._sign_lo

    @classmethod
    def rational(cls, value: Fraction) -> RealRoot:
        return cls(None, value, value, exact=Fraction(value))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction) -> None:
        if self.exact is not None:
            return
        while self.hi - self.lo > width:
            mid = (self.lo + self.hi) / 2
            s = self.poly.sign_at(mid)
            if s == 0:
                self.exact = mid
                self.lo = self.hi = mid
                return
            if s == self._sign_lo:
                self.lo = mid
            else:
                self.hi = mid

    def refine_steps(self, n: int) -> None:
        for _ in range(n):
            if self.exact is not None:
                return
            self.refine(self.width() / 2)

    def midpoint(self) -> Fraction:
        if self.exact is not None:
            return self.exact
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        if self.exact is None:
            self.refine(Fraction(1, 10 ** 17))
        return float(self.midpoint())

    # -- comparisons -------------------------------------------------------

    def cmp_rational(self, q: Fraction) -> int:
        if self.exact is not None:
            return -1 if self.exact < q else (1 if self.exact > q else 0)
        if q <= self.lo:
            return 1
        if q >= self.hi:
            return -1
        s = self.poly.sign_at(q)
        if s == 0:
            self.exact = q
            self.lo = self.hi = q
            return 0
        if s == self._sign_lo:
            self.lo = q
            return 1
        self.hi = q
        return -1

    def cmp(self, other: Union[RealRoot, Fraction, int]) -> int:
        if isinstance(other, (int, Fraction)):
            return self.cmp_rational(Fraction(other))
        if other.exact is not None:
            return self.cmp_rational(other.exact)
        if self.exact is not None:
            return -other.cmp_rational(self.exact)
        for _ in range(4):
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            self.refine(self.width() / 4)
            other.refine(other.width() / 4)
        # persistent overlap: equal iff they are the same root of gcd
        h = gcd(self.poly, other.poly)
        if h.degree >= 1:
            lo = max(self.lo, other.lo)
            hi = min(self.hi, other.hi)
            if lo < hi and sturm_count_interval(sturm_chain(h), lo, hi) > 0:
                return 0
        while True:
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            self.refine(self.width() / 4)
            other.refine(other.width() / 4)

    def __lt__(self, other) -> bool:
        return self.cmp(other) < 0

    def __le__(self, other) -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self.cmp(other) >= 0

    def equals(self, other) -> bool:
        return self.cmp(other) == 0

    # -- exact sign of another polynomial at this number ---------------------

    def sign_of(self, p: UPoly) -> int:
        if not p:
            return 0
        if self.exact is not None:
            return p.sign_at(self.exact)
        h = gcd(p, self.poly)
        if h.degree >= 1:
            if sturm_count_interval(sturm_chain(h), self.lo, self.hi) > 0:
                return 0
        psf = squarefree_part(p) if p.degree >= 1 else None
        chain = sturm_chain(psf) if psf is not None and psf.degree >= 1 else None
        while True:
            if (p.sign_at(self.lo) != 0 and chain is None
                    or p.sign_at(self.lo) != 0 and chain is not None
                    and sturm_count_interval(chain, self.lo, self.hi) == 0):
                return p.sign_at(self.lo)
            self.refine(self.width() / 4)
            if self.exact is not None:
                return p.sign_at(self.exact)

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"RealRoot({self.exact})"
        return f"RealRoot(({self.lo}, {self.hi}))"


def isolate_real_roots(f: UPoly) -> list[RealRoot]:
    """Disjoint isolating representations of all distinct real roots,
    in increasing order."""
    if not f:
        raise ValueError("cannot isolate roots of the zero polynomial")
    if f.degree == 0:
        return []
    g = squarefree_part(f)
    if g.degree == 0:
        return []
    chain = sturm_chain(g)
    bound = root_bound(g)
    total = sturm_count_interval(chain, -bound, bound)
    roots: list[RealRoot] = []
    stack = [(-bound, bound, total)]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1:
            if not g.eval(hi):
                roots.append(RealRoot.rational(hi))
                continue
            # shrink until the endpoints have opposite signs (the single
            # root has odd multiplicity 1 in the squarefree part)
            slo, shi = g.sign_at(lo), g.sign_at(hi)
            if slo == 0:
                # lo is a root of g but it is excluded from (lo, hi];
                # nudge lo upward off the root
                while True:
                    mid = (lo + hi) / 2
                    if sturm_count_interval(chain, mid, hi) == 1:
                        lo = mid
                        slo = g.sign_at(lo)
                        if slo != 0:
                            break
                    else:
                        hi = mid
                        if not g.eval(hi):
                            roots.append(RealRoot.rational(hi))
                            break
                else:
                    continue
                if not slo:
                    continue
            while slo == shi:
                mid = (lo + hi) / 2
                sm = g.sign_at(mid)
                if sm == 0:
                    roots.append(RealRoot.rational(mid))
                    break
                if sturm_count_interval(chain, lo, mid) == 1:
                    hi, shi = mid, sm
                else:
                    lo, slo = mid, sm
            else:
                roots.append(RealRoot(g, lo, hi))
            continue
        mid = (lo + hi) / 2
        left = sturm_count_interval(chain, lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left))
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots
