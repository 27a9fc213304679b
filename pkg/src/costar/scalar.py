"""Exact scalar layer: Gaussian rationals, rational functions of the radius
variable u, and truncated formal series in the deformation parameter.

Everything here is exact.  There are no floats anywhere in the engine; all
higher layers (phase-space algebras, products, coefficient tables) reduce to
the arithmetic in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function where its reduced denominator vanishes."""


class AlgebraMismatchError(TypeError):
    """Binary operation between values that do not live in the same algebra."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("cannot interpret %r as an exact rational" % (x,))


def _int_primitive(cs):
    g = 0
    for v in cs:
        g = _int_gcd(g, v)
    return [v // g for v in cs] if g else []


def _int_pseudo_rem(a, b):
    # remainder of a by b after scaling by powers of lead(b); integer lists
    dv = len(b) - 1
    lb = b[-1]
    rem = list(a)
    while len(rem) - 1 >= dv:
        shift = len(rem) - 1 - dv
        lr = rem.pop()
        if lr:
            rem = [c * lb for c in rem]
            for k in range(dv):
                rem[shift + k] -= lr * b[k]
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return rem


class GaussianRational:
    """Exact complex scalar re + im*I with rational re, im.

    Fraction keeps both parts gcd-reduced with positive denominator, so
    structural equality is value equality.  Instances are treated as
    immutable; every operation returns a fresh value.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def of(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        raise TypeError("cannot interpret %r as a Gaussian rational" % (x,))

    def is_zero(self):
        return not self.re and not self.im

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.of(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.of(other)
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return GaussianRational.of(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        try:
            other = GaussianRational.of(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def scalar_text(c):
    """Deterministic, re-parseable text for a Gaussian rational.

    Pure parts print bare ("-3/2", "I", "2*I"); mixed values are
    parenthesized ("(1/2 - 3*I)") so they can be embedded in products.
    """
    c = GaussianRational.of(c)
    if not c.im:
        return str(c.re)
    if c.im == 1:
        im = "I"
    elif c.im == -1:
        im = "-I"
    else:
        im = "%s*I" % (c.im,)
    if not c.re:
        return im
    if c.im < 0:
        return "(%s - %s)" % (c.re, im[1:])
    return "(%s + %s)" % (c.re, im)


class UPoly:
    """Univariate polynomial in u over GaussianRational.

    Coefficients are little-endian with no trailing zeros; the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [GaussianRational.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def of(x):
        if isinstance(x, UPoly):
            return x
        if isinstance(x, (int, Fraction, GaussianRational)):
            return UPoly((GaussianRational.of(x),))
        raise TypeError("cannot interpret %r as a polynomial in u" % (x,))

    @staticmethod
    def u(power=1):
        # the monomial u**power
        return UPoly((0,) * power + (1,))

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other):
        other = UPoly.of(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-UPoly.of(other))

    def __rsub__(self, other):
        return UPoly.of(other) - self

    def __mul__(self, other):
        other = UPoly.of(other)
        if self.is_zero() or other.is_zero():
            return UPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = GaussianRational.of(c)
        return UPoly(tuple(a * c for a in self.coeffs))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise TypeError("polynomial exponent must be a nonnegative integer")
        out = UPoly.of(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        other = UPoly.of(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, dv = len(rem) - 1, other.degree()
        inv_lead = ONE / other.lead()
        quo = [ZERO] * max(dd - dv + 1, 0)
        while dd >= dv and rem:
            while rem and rem[-1].is_zero():
                rem.pop()
                dd -= 1
            if dd < dv or not rem:
                break
            c = rem[-1] * inv_lead
            quo[dd - dv] = c
            for k in range(dv + 1):
                rem[dd - dv + k] = rem[dd - dv + k] - c * other.coeffs[k]
        return UPoly(quo), UPoly(rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(ONE / self.lead())

    def _as_primitive_ints(self):
        # primitive integer coefficient list, or None for complex coefficients
        den = 1
        for c in self.coeffs:
            if c.im:
                return None
            d = c.re.denominator
            den = den * d // _int_gcd(den, d)
        ints = [int(c.re * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _int_gcd(g, v)
        return [v // g for v in ints]

    def gcd(self, other):
        other = UPoly.of(other)
        if self.is_zero():
            return other.monic() if not other.is_zero() else UPoly.of(1)
        if other.is_zero():
            return self.monic()
        # a nonzero constant is coprime to everything
        if self.degree() == 0 or other.degree() == 0:
            return UPoly.of(1)
        sa, sb = self._as_primitive_ints(), other._as_primitive_ints()
        if sa is not None and sb is not None:
            # primitive pseudo-remainder sequence over the integers
            while sb:
                sa, sb = sb, _int_primitive(_int_pseudo_rem(sa, sb))
            lead = sa[-1]
            return UPoly(tuple(Fraction(v, lead) for v in sa))
        a, b = self.monic(), other.monic()
        while not b.is_zero():
            a, b = b, a.divmod(b)[1].monic()
        return a if not a.is_zero() else UPoly.of(1)

    def lcm(self, other):
        other = UPoly.of(other)
        if self.is_zero() or other.is_zero():
            return UPoly()
        return (self * other).exact_div(self.gcd(other)).monic()

    def eval(self, x):
        x = GaussianRational.of(x)
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self):
        return UPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def __eq__(self, other):
        try:
            other = UPoly.of(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "UPoly(%r)" % (self.coeffs,)


class RadialRational:
    """Rational function of u in canonical form.

    Canonical means gcd(num, den) = 1 and den monic; the zero function is
    0/1.  With that normalization, structural equality is function equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = UPoly.of(num), UPoly.of(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function of u")
        if num.is_zero():
            self.num, self.den = UPoly(), UPoly.of(1)
            return
        if den.degree() == 0:
            lc = den.lead()
            self.num = num if lc == ONE else num.scale(ONE / lc)
            self.den = UPoly.of(1)
            return
        if num.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead()
        if lc != ONE:
            num, den = num.scale(ONE / lc), den.monic()
        self.num, self.den = num, den

    @staticmethod
    def of(x):
        if isinstance(x, RadialRational):
            return x
        return RadialRational(UPoly.of(x))

    @staticmethod
    def u_power(k):
        # u**k, with negative k allowed
        if k >= 0:
            return RadialRational(UPoly.u(k) if k else UPoly.of(1))
        return RadialRational(UPoly.of(1), UPoly.u(-k))

    @staticmethod
    def _raw(num, den):
        # bypass reduction for results known to be reduced and monic
        r = RadialRational.__new__(RadialRational)
        r.num, r.den = num, den
        return r

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("rational function of u is not constant")
        return self.num.eval(0)

    def __add__(self, other):
        other = RadialRational.of(other)
        if self.den == other.den:
            return RadialRational(self.num + other.num, self.den)
        g = self.den.gcd(other.den)
        if g.degree() == 0:
            # coprime denominators: the sum is already reduced
            num = self.num * other.den + other.num * self.den
            if num.is_zero():
                return RadialRational(UPoly())
            return RadialRational._raw(num, self.den * other.den)
        rden = other.den.exact_div(g)
        return RadialRational(
            self.num * rden + other.num * self.den.exact_div(g), self.den * rden
        )

    __radd__ = __add__

    def __neg__(self):
        return RadialRational._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RadialRational.of(other))

    def __rsub__(self, other):
        return RadialRational.of(other) - self

    def __mul__(self, other):
        other = RadialRational.of(other)
        if self.num.is_zero() or other.num.is_zero():
            return RadialRational(UPoly())
        # cross-cancel so the product needs no further reduction
        a = RadialRational(self.num, other.den)
        b = RadialRational(other.num, self.den)
        return RadialRational._raw(a.num * b.num, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RadialRational.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        if self.is_zero():
            return self
        a = RadialRational(self.num, other.num)
        b = RadialRational(other.den, self.den)
        return RadialRational._raw(a.num * b.num, a.den * b.den)

    def __rtruediv__(self, other):
        return RadialRational.of(other) / self

    def scale(self, c):
        c = GaussianRational.of(c)
        if c.is_zero():
            return RadialRational(UPoly())
        return RadialRational._raw(self.num.scale(c), self.den)

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return (RadialRational.of(1) / self) ** (-n)
        out = RadialRational.of(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self):
        return RadialRational(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def eval(self, u0):
        u0 = GaussianRational.of(u0)
        d = self.den.eval(u0)
        if d.is_zero():
            raise PoleError("pole at u = %s" % (scalar_text(u0),))
        return self.num.eval(u0) / d

    def __eq__(self, other):
        try:
            other = RadialRational.of(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "RadialRational(%r, %r)" % (self.num, self.den)


def zero_like(x):
    """Additive zero of the algebra x lives in."""
    return x - x


class LambdaSeries:
    """Truncated formal power series in the deformation parameter.

    coeffs[k] is the order-k coefficient; the truncation order is
    len(coeffs) - 1.  Binary operations truncate to the smaller order, since
    nothing is known about either operand beyond its own truncation.
    Coefficients may live in any algebra with +, -, *; mixing algebras is an
    error.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the order-0 coefficient")
        self.coeffs = coeffs

    @staticmethod
    def constant(x, order):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        z = zero_like(x)
        return LambdaSeries((x,) + (z,) * order)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncated(self, order):
        if order >= self.order:
            return self
        return LambdaSeries(self.coeffs[: order + 1])

    def map(self, fn):
        return LambdaSeries(tuple(fn(c) for c in self.coeffs))

    def _check(self, other):
        if not isinstance(other, LambdaSeries):
            raise AlgebraMismatchError("expected a LambdaSeries, got %r" % (other,))
        if type(self.coeffs[0]) is not type(other.coeffs[0]):
            raise AlgebraMismatchError(
                "series coefficients live in different algebras: %s vs %s"
                % (type(self.coeffs[0]).__name__, type(other.coeffs[0]).__name__)
            )

    def __add__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return LambdaSeries(tuple(self[k] + other[k] for k in range(n + 1)))

    def __sub__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return LambdaSeries(tuple(self[k] - other[k] for k in range(n + 1)))

    def __neg__(self):
        return LambdaSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        out = []
        for m in range(n + 1):
            acc = zero_like(self.coeffs[0])
            for k in range(m + 1):
                acc = acc + self[k] * other[m - k]
            out.append(acc)
        return LambdaSeries(tuple(out))

    def scale(self, c):
        return LambdaSeries(tuple(x.scale(c) if hasattr(x, "scale") else x * c
                                  for x in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def __repr__(self):
        return "LambdaSeries(%r)" % (self.coeffs,)
