"""Dense univariate polynomials over Z with exact arbitrary-precision arithmetic.

Coefficients are stored lowest degree first, trailing zeros trimmed; the zero
polynomial has an empty coefficient tuple and degree -1.  Everything here is
pure and exact: no floats, no modular shortcuts unless explicitly asked for.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return IntPoly(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return IntPoly(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        """Exact Euclidean division; every quotient coefficient must be an integer."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q, r = [], list(self.coeffs)
        d, lead = other.degree(), other.lc()
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            c, rem = divmod(r[-1], lead)
            if rem:
                raise ValueError(f"inexact division: {r[-1]} not divisible by {lead}")
            k = len(r) - 1 - d
            q.append((k, c))
            for j, b in enumerate(other.coeffs):
                r[k + j] -= c * b
        qc = [0] * (max((k for k, _ in q), default=-1) + 1)
        for k, c in q:
            qc[k] = c
        return IntPoly(qc), IntPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "IntPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    # -- calculus and normal forms ----------------------------------------

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        """gcd of coefficients, sign chosen so content * primitive has the original lc sign."""
        if self.is_zero():
            return 0
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g if self.lc() > 0 else -g

    def primitive(self) -> "IntPoly":
        if self.is_zero():
            return self
        c = self.content()
        return IntPoly(a // c for a in self.coeffs)

    def monic_normalized(self) -> "IntPoly":
        """Scale by -1 if the leading coefficient is -1; error if |lc| != 1."""
        if self.lc() == 1:
            return self
        if self.lc() == -1:
            return -self
        raise ValueError("polynomial cannot be made monic over Z")

    def reversed(self) -> "IntPoly":
        return IntPoly(self.coeffs[::-1])

    # -- evaluation and composition ---------------------------------------

    def eval(self, x):
        """Horner evaluation; works for int, Fraction, or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPoly([c])
        return acc

    def __repr__(self):
        if self.is_zero():
            return "IntPoly('0')"
        parts = []
        for i in range(self.degree(), -1, -1):
            c = self[i]
            if not c:
                continue
            sign = " + " if (c > 0 and parts) else (" - " if parts else ("-" if c < 0 else ""))
            mag = abs(c)
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            co = str(mag) if (mag != 1 or i == 0) else ""
            parts.append(sign + co + term)
        return f"IntPoly('{''.join(parts)}')"


def _coerce(v) -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly([v])
    raise TypeError(f"cannot coerce {type(v)!r} to IntPoly")


X = IntPoly([0, 1])
ONE = IntPoly([1])


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a, b)."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    da, db = a.degree(), b.degree()
    if da < db:
        return a * (b.lc() ** (da - db + 1) if da - db + 1 >= 0 else 1)
    lead = b.lc()
    r = list(a.coeffs)
    steps = da - db + 1
    for k in range(da, db - 1, -1):
        c = r[k] if k < len(r) else 0
        r = [lead * v for v in r]
        if c:
            for j, bc in enumerate(b.coeffs):
                r[k - db + j] -= c * bc
        steps -= 1
        # r[k] is now zero by construction
    res = IntPoly(r)
    return res * (lead ** steps) if steps > 0 else res


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient, via a primitive PRS."""
    if a.is_zero():
        return b.primitive() if b.lc() >= 0 else (-b).primitive()
    if b.is_zero():
        return a.primitive() if a.lc() >= 0 else (-a).primitive()
    ca, cb = abs(a.content()), abs(b.content())
    g = math.gcd(ca, cb)
    a, b = a.primitive(), b.primitive()
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        r = prem(a, b).primitive()
        a, b = b, r
    a = a if a.lc() > 0 else -a
    return a * g if a.degree() > 0 or g != 1 else a


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Resultant over Z by the subresultant PRS (Collins/Cohen bookkeeping)."""
    if a.is_zero() or b.is_zero():
        return 0
    da, db = a.degree(), b.degree()
    if da == 0 and db == 0:
        return 1
    if da < db:
        sign = -1 if (da * db) % 2 else 1
        return sign * resultant(b, a)
    if db == 0:
        return b.lc() ** da
    ca, cb = abs(a.content()), abs(b.content())
    A, B = IntPoly(c // ca for c in a.coeffs), IntPoly(c // cb for c in b.coeffs)
    t = ca ** db * cb ** da
    g, h, s = 1, 1, 1
    while True:
        dA, dB = A.degree(), B.degree()
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = prem(A, B)
        A = B
        divisor = g * h ** delta
        B = IntPoly(c // divisor for c in R.coeffs)
        assert all(c % divisor == 0 for c in R.coeffs), "subresultant division failed"
        g = A.lc()
        if delta > 0:
            num = g ** delta
            den = h ** (delta - 1)
            assert num % den == 0, "subresultant h-update failed"
            h = num // den
        if B.is_zero():
            return 0
        if B.degree() <= 0:
            dA = A.degree()
            num = B.lc() ** dA
            den = h ** (dA - 1)
            assert num % den == 0, "subresultant final step failed"
            return s * t * (num // den)


def radical(f: IntPoly) -> IntPoly:
    """Squarefree part f / gcd(f, f'); primitive, monic-normalized when f is monic."""
    if f.is_zero():
        raise ValueError("radical of the zero polynomial")
    if f.degree() == 0:
        return IntPoly([1])
    g = poly_gcd(f, f.derivative())
    r = f.primitive().exact_div(g) if g.degree() > 0 else f.primitive()
    r = r.primitive()
    if f.is_monic():
        r = r.monic_normalized()
    elif r.lc() < 0 <= f.lc():
        r = -r
    return r


def poly_sqrt(s: IntPoly) -> IntPoly:
    """Exact square root of a monic even-degree polynomial; raises if s is not a square."""
    if s.is_zero():
        return s
    if not s.is_monic() or s.degree() % 2:
        raise ValueError("not a monic square")
    d = s.degree() // 2
    p = [0] * (d + 1)
    p[d] = 1
    for i in range(d - 1, -1, -1):
        acc = s[d + i]
        for j in range(i + 1, d):
            k = d + i - j
            if i < k < d:
                acc -= p[j] * p[k]
        if acc % 2:
            raise ValueError("not a perfect square")
        p[i] = acc // 2
    root = IntPoly(p)
    if root * root != s:
        raise ValueError("not a perfect square")
    return root


def interpolate(points: list[tuple[int, int]]) -> IntPoly:
    """Newton-form interpolation through integer points; the result must be integer."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    # divided differences
    dd = [Fraction(y) for _, y in points]
    for level in range(1, len(points)):
        for i in range(len(points) - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # expand Newton form dd[0] + dd[1](x-x0) + dd[2](x-x0)(x-x1) + ...
    coeffs = [Fraction(0)] * len(points)
    basis = [Fraction(1)]  # running product (x-x0)...(x-x_{k-1})
    for k, c in enumerate(dd):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= xs[k] * b
            nxt[i + 1] += b
        basis = nxt
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ValueError("interpolation produced non-integer coefficients")
        out.append(int(c))
    return IntPoly(out)


def power_sums(f: IntPoly, count: int) -> list[int]:
    """Power sums p_1..p_count of the roots of a monic integer polynomial, by Newton's identities."""
    if not f.is_monic():
        raise ValueError("power sums need a monic polynomial")
    d = f.degree()
    # e[i] = (-1)^i * elementary symmetric = coefficient of x^(d-i)
    c = [f[d - i] for i in range(d + 1)]
    ps: list[int] = []
    for k in range(1, count + 1):
        if k <= d:
            acc = -k * c[k]
            for i in range(1, k):
                acc -= c[i] * ps[k - i - 1]
        else:
            acc = 0
            for i in range(1, d + 1):
                acc -= c[i] * ps[k - i - 1]
        ps.append(acc)
    return ps


def from_power_sums(ps: list[int], degree: int) -> IntPoly:
    """Monic polynomial of the given degree whose roots have power sums ps[0..degree-1]."""
    if len(ps) < degree:
        raise ValueError("not enough power sums")
    c = [1] + [0] * degree
    for k in range(1, degree + 1):
        acc = ps[k - 1]
        for i in range(1, k):
            acc += c[i] * ps[k - i - 1]
        if acc % k:
            raise ValueError("power sums do not come from an integer polynomial")
        c[k] = -(acc // k)
    return IntPoly([c[degree - i] for i in range(degree + 1)])
