"""Exact univariate rational-function arithmetic in the variable t.

Polynomials are dense coefficient lists (index = power of t) over exact
rationals; RationalFunction keeps a gcd-reduced fraction normalized to
coprime integer-coefficient polynomials with a positive denominator
leading coefficient, which makes equality a plain comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import PoleEvaluationError


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        if isinstance(coeffs, dict):
            deg = max(coeffs, default=-1)
            lst = [Fraction(0)] * (deg + 1)
            for e, c in coeffs.items():
                lst[e] = Fraction(c)
            coeffs = lst
        else:
            coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = coeffs

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def t_power(cls, e, c=1):
        return cls({e: c})

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lead
            q[i - d] = f
            for j, c in enumerate(other.coeffs):
                rem[i - d + j] -= f * c
        return Poly(q), Poly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        return a.monic()

    def evaluate(self, x):
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def integerized(self):
        """(integer-coefficient Poly, positive rational scale) with
        self = scale * integer poly and the integer poly content-free."""
        if self.is_zero():
            return self, Fraction(1)
        denom = 1
        for c in self.coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in self.coeffs]
        content = 0
        for c in ints:
            content = gcd(content, abs(c))
        return Poly([c // content for c in ints]), Fraction(content, denom)

    def int_coeffs(self):
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{e}" if mag == 1 else f"{mag}*t^{e}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


class RationalFunction:
    """Reduced fraction of integer-coefficient polynomials in t."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls(Poly.const(c.numerator), Poly.const(c.denominator))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def as_fraction(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        num = self.num.coeffs[0] if self.num.coeffs else Fraction(0)
        return num / self.den.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def evaluate(self, tval):
        tval = Fraction(tval)
        den = self.den.evaluate(tval)
        if den == 0:
            raise PoleEvaluationError(f"evaluation at pole t = {tval}")
        return self.num.evaluate(tval) / den

    def to_json(self):
        return {"num": [str(c) for c in self.num.int_coeffs()],
                "den": [str(c) for c in self.den.int_coeffs()]}

    def __str__(self):
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.const(x)
    raise TypeError(f"cannot coerce {x!r}")


def _normalize(num, den):
    if num.is_zero():
        return Poly([]), Poly.const(1)
    g = num.gcd(den)
    if g.degree > 0:
        num = num.exact_div(g)
        den = den.exact_div(g)
    num, num_scale = num.integerized()
    den, den_scale = den.integerized()
    # contents scale.numerator and scale.denominator are coprime, so the
    # resulting integer fraction is content-reduced
    scale = num_scale / den_scale
    num = num * scale.numerator
    den = den * scale.denominator
    if den.coeffs[-1] < 0:
        num, den = -num, -den
    return num, den
