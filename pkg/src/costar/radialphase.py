"""Radial function algebra on C^{n+1} and its Wick-type star product.

Elements are finite sums of terms z^alpha zbar^beta R(u) where u = sum_i
z^i zbar^i and R is a rational function of u.  The symplectic form is
(i/2) sum_i dz^i ^ dzbar^i.  Two codimension-one constraints are provided,
both cutting out the sphere u = -2*mu (mu < 0):

    linear     J = -u/2 - mu
    quadratic  J = u^2/4 - mu^2

together with restriction to the sphere, prolongation (pullback along the
radial retraction z -> sqrt(-2 mu / u) z), and the exact difference
quotient against J.

The stored term representation is not unique for dim >= 2 (u may appear
either as a radial factor or expanded into monomials).  Equality therefore
goes through a normal form: numerators are expanded into plain monomials
over a common denominator in u, where coefficients are comparable.  For
dim == 1 the single pair z^1 zbar^1 is rewritten into u on construction,
which already makes the stored form canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalar import (
    AlgebraMismatchError,
    GaussianRational,
    I,
    LambdaSeries,
    PoleError,
    RadialRational,
    UPoly,
)

ZERO = GaussianRational(0)
ONE = GaussianRational(1)


class ParityError(ValueError):
    """A term of odd monomial degree fed into a radial-only operation."""


def _term_parity(key):
    return (sum(key[0]) + sum(key[1])) % 2


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _multinomial(k, s):
    n = factorial(k)
    for e in s:
        n //= factorial(e)
    return n


class RadialFun:
    """Finite sum of terms z^alpha zbar^beta R(u) on C^dim.

    terms maps (alpha, beta) pairs of exponent tuples to nonzero
    RadialRational parts.  Odd-degree terms are legal in the algebra (they
    occur transiently inside derivatives) but are rejected by the
    sphere-aware operations prol/pij/restrict.
    """

    __slots__ = ("dim", "terms", "_dcache", "_zcache")

    def __init__(self, dim, terms=()):
        if dim < 1:
            raise ValueError("radial algebra needs dim >= 1")
        self.dim = dim
        out = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (alpha, beta), r in items:
            alpha, beta = tuple(alpha), tuple(beta)
            if len(alpha) != dim or len(beta) != dim:
                raise ValueError("exponent tuples must have length %d" % dim)
            if any(e < 0 for e in alpha + beta):
                raise ValueError("negative monomial exponent")
            r = RadialRational.of(r)
            if dim == 1:
                # z^1 zbar^1 is u itself; strip the common power into R
                m = min(alpha[0], beta[0])
                if m:
                    r = r * RadialRational.u_power(m)
                    alpha, beta = (alpha[0] - m,), (beta[0] - m,)
            key = (alpha, beta)
            if key in out:
                r = out[key] + r
            if r.is_zero():
                out.pop(key, None)
            else:
                out[key] = r
        self.terms = out
        self._dcache = {}
        self._zcache = None

    @staticmethod
    def zero(dim):
        return RadialFun(dim)

    @staticmethod
    def from_radial(r, dim):
        z = (0,) * dim
        return RadialFun(dim, {(z, z): RadialRational.of(r)})

    @staticmethod
    def constant(c, dim):
        return RadialFun.from_radial(RadialRational.of(GaussianRational.of(c)), dim)

    @staticmethod
    def one(dim):
        return RadialFun.constant(1, dim)

    @staticmethod
    def u(dim, power=1):
        return RadialFun.from_radial(RadialRational.u_power(power), dim)

    @staticmethod
    def z(i, dim):
        # 1-based coordinate index
        if not 1 <= i <= dim:
            raise ValueError("z index out of range")
        alpha = tuple(1 if k == i - 1 else 0 for k in range(dim))
        return RadialFun(dim, {(alpha, (0,) * dim): RadialRational.of(1)})

    @staticmethod
    def zbar(i, dim):
        if not 1 <= i <= dim:
            raise ValueError("zbar index out of range")
        beta = tuple(1 if k == i - 1 else 0 for k in range(dim))
        return RadialFun(dim, {((0,) * dim, beta): RadialRational.of(1)})

    @staticmethod
    def monomial(alpha, beta, radial=1, dim=None):
        alpha, beta = tuple(alpha), tuple(beta)
        dim = dim or len(alpha)
        return RadialFun(dim, {(alpha, beta): RadialRational.of(radial)})

    def _check(self, other):
        if not isinstance(other, RadialFun):
            raise AlgebraMismatchError("expected a RadialFun, got %r" % (other,))
        if other.dim != self.dim:
            raise AlgebraMismatchError(
                "dimension mismatch: %d vs %d" % (self.dim, other.dim)
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = RadialFun.constant(other, self.dim)
        self._check(other)
        merged = list(self.terms.items()) + list(other.terms.items())
        return RadialFun(self.dim, merged)

    __radd__ = __add__

    def __neg__(self):
        return RadialFun(self.dim, {k: -r for k, r in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = RadialFun.constant(other, self.dim)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if isinstance(other, RadialRational):
            return self.mul_radial(other)
        self._check(other)
        out = []
        for (a1, b1), r1 in self.terms.items():
            for (a2, b2), r2 in other.terms.items():
                key = (
                    tuple(x + y for x, y in zip(a1, a2)),
                    tuple(x + y for x, y in zip(b1, b2)),
                )
                out.append((key, r1 * r2))
        return RadialFun(self.dim, out)

    def __rmul__(self, other):
        return self * other

    def scale(self, c):
        c = GaussianRational.of(c)
        if c.is_zero():
            return RadialFun.zero(self.dim)
        return RadialFun(self.dim, {k: r.scale(c) for k, r in self.terms.items()})

    def mul_radial(self, r):
        r = RadialRational.of(r)
        if r.is_zero():
            return RadialFun.zero(self.dim)
        return RadialFun(self.dim, {k: v * r for k, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = RadialFun.one(self.dim)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def d_z(self, i):
        """Derivative by z^i (1-based); du/dz^i = zbar^i."""
        return self._derivative("z", i - 1)

    def d_zbar(self, i):
        return self._derivative("zb", i - 1)

    def _derivative(self, kind, idx):
        if not 0 <= idx < self.dim:
            raise ValueError("coordinate index out of range")
        cached = self._dcache.get((kind, idx))
        if cached is not None:
            return cached
        out = []
        for (alpha, beta), r in self.terms.items():
            if kind == "z":
                e = alpha[idx]
                if e:
                    na = alpha[:idx] + (e - 1,) + alpha[idx + 1:]
                    out.append(((na, beta), r.scale(e)))
                dr = r.derivative()
                if not dr.is_zero():
                    nb = beta[:idx] + (beta[idx] + 1,) + beta[idx + 1:]
                    out.append(((alpha, nb), dr))
            else:
                e = beta[idx]
                if e:
                    nb = beta[:idx] + (e - 1,) + beta[idx + 1:]
                    out.append(((alpha, nb), r.scale(e)))
                dr = r.derivative()
                if not dr.is_zero():
                    na = alpha[:idx] + (alpha[idx] + 1,) + alpha[idx + 1:]
                    out.append(((na, beta), dr))
        res = RadialFun(self.dim, out)
        self._dcache[(kind, idx)] = res
        return res

    def euler_e(self):
        """E = sum_i z^i d/dz^i; on a term: |alpha| R + u R'."""
        u = RadialRational.u_power(1)
        out = {}
        for (alpha, beta), r in self.terms.items():
            nr = r.scale(sum(alpha)) + u * r.derivative()
            if not nr.is_zero():
                out[(alpha, beta)] = nr
        return RadialFun(self.dim, out)

    def euler_ebar(self):
        u = RadialRational.u_power(1)
        out = {}
        for (alpha, beta), r in self.terms.items():
            nr = r.scale(sum(beta)) + u * r.derivative()
            if not nr.is_zero():
                out[(alpha, beta)] = nr
        return RadialFun(self.dim, out)

    def common_denominator(self):
        den = UPoly.of(1)
        for r in self.terms.values():
            den = den.lcm(r.den)
        return den

    def expansion(self, den=None):
        """Normal form: (den, cells) with f = (sum cells) / den(u).

        Numerator u-powers are expanded into plain monomials, so cells maps
        (gamma, delta) to scalar coefficients; den stays a polynomial in u.
        A given den must be a common multiple of the term denominators.
        """
        den = self.common_denominator() if den is None else den
        cells = {}
        for (alpha, beta), r in self.terms.items():
            num = r.num * den.exact_div(r.den)
            for k, c in enumerate(num.coeffs):
                if c.is_zero():
                    continue
                for s in _compositions(k, self.dim):
                    key = (
                        tuple(x + y for x, y in zip(alpha, s)),
                        tuple(x + y for x, y in zip(beta, s)),
                    )
                    v = cells.get(key, ZERO) + c * _multinomial(k, s)
                    if v.is_zero():
                        cells.pop(key, None)
                    else:
                        cells[key] = v
        return den, cells

    @staticmethod
    def from_expansion(den, cells, dim):
        out = []
        for key, c in cells.items():
            out.append((key, RadialRational(UPoly.of(c), den)))
        return RadialFun(dim, out)

    def is_zero(self):
        if not self.terms:
            return True
        if self._zcache is None:
            self._zcache = not self.expansion()[1]
        return self._zcache

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = RadialFun.constant(other, self.dim)
        if not isinstance(other, RadialFun):
            return NotImplemented
        if other.dim != self.dim:
            return False
        if self.terms == other.terms:
            return True
        return (self - other).is_zero()

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __repr__(self):
        return "RadialFun(%d, %r)" % (self.dim, self.sorted_terms())


def scalar_ratio(x, y):
    """The scalar c with x = c*y, or None if there is no such scalar."""
    x._check(y)
    if y.is_zero():
        return None
    den = x.common_denominator().lcm(y.common_denominator())
    _, cx = x.expansion(den)
    _, cy = y.expansion(den)
    key = sorted(cy)[0]
    c = cx.get(key, ZERO) / cy[key]
    for k in set(cx) | set(cy):
        if cx.get(k, ZERO) != cy.get(k, ZERO) * c:
            return None
    return c


def is_homogeneous(f):
    """True iff f is invariant under complex scaling, i.e. Ef = Ebar f = 0."""
    return f.euler_e().is_zero() and f.euler_ebar().is_zero()


@dataclass(frozen=True)
class RadialConstraint:
    """Radial constraint J(u) with regular zero on the sphere u = -2*mu."""

    kind: str
    mu: Fraction

    def __post_init__(self):
        if self.kind not in ("linear", "quadratic"):
            raise ValueError("constraint kind must be 'linear' or 'quadratic'")
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.mu >= 0:
            raise ValueError("mu must be negative")
        a = self.sphere_u
        j = self.j_radial()
        if not j.eval(a).is_zero():
            raise ValueError("constraint does not vanish on the sphere")
        if j.derivative().eval(a).is_zero():
            raise ValueError("sphere is not a regular zero of the constraint")

    @staticmethod
    def linear(mu):
        return RadialConstraint("linear", Fraction(mu))

    @staticmethod
    def quadratic(mu):
        return RadialConstraint("quadratic", Fraction(mu))

    @property
    def sphere_u(self):
        # value of u on the constraint sphere
        return -2 * self.mu

    def j_radial(self):
        if self.kind == "linear":
            return RadialRational(UPoly((-self.mu, Fraction(-1, 2))))
        return RadialRational(UPoly((-self.mu ** 2, 0, Fraction(1, 4))))

    def j(self, dim):
        return RadialFun.from_radial(self.j_radial(), dim)


def _require_even(f, op):
    for key in f.terms:
        if _term_parity(key):
            raise ParityError(
                "%s needs even terms; found odd monomial degree in %r" % (op, key)
            )


def restrict(f, constraint):
    """Restriction to the sphere: evaluate every radial part at u = -2*mu."""
    _require_even(f, "restriction")
    a = constraint.sphere_u
    out = []
    for key, r in f.terms.items():
        out.append((key, RadialRational.of(r.eval(a))))
    return RadialFun(f.dim, out)


def prol(f, constraint):
    """Prolongation: pull the restriction of f back along z -> sqrt(a/u) z.

    On a term z^alpha zbar^beta R(u) of even degree d this gives
    a^{d/2} u^{-d/2} z^alpha zbar^beta R(a), with a = -2*mu.  Homogeneous
    functions are fixed; prol is a projection onto scale-invariant functions.
    """
    _require_even(f, "prolongation")
    a = constraint.sphere_u
    out = []
    for (alpha, beta), r in f.terms.items():
        d = sum(alpha) + sum(beta)
        val = r.eval(a) * GaussianRational.of(a ** (d // 2))
        if val.is_zero():
            continue
        out.append(((alpha, beta), RadialRational.u_power(-(d // 2)).scale(val)))
    return RadialFun(f.dim, out)


def pij(f, constraint):
    """Exact difference quotient (f - prol f) / J.

    The per-term radial numerator vanishes on the sphere, so the quotient
    stays pole-free there; a residual pole would mean the prolongation and
    the constraint disagree, which is reported rather than simplified away.
    """
    g = f - prol(f, constraint)
    j = constraint.j_radial()
    a = constraint.sphere_u
    out = []
    for key, r in g.terms.items():
        q = r / j
        if q.den.eval(a).is_zero():
            raise PoleError(
                "difference quotient left a pole at u = %s" % (a,)
            )
        out.append((key, q))
    return RadialFun(f.dim, out)


def vanishes_on_sphere(f, constraint):
    """True iff f vanishes identically on the constraint sphere.

    Monomial and radial spellings of the same function differ ambiently but
    agree on the sphere, so this goes through prol, which identifies them.
    """
    return prol(f, constraint).is_zero()


def wick_kernel(f, g, r):
    """Order-r Wick bidifferential kernel.

    M_r(f,g) = (2^r / r!) sum over r-tuples of indices of
    (d^r f / dz^{i_1}..dz^{i_r}) (d^r g / dzbar^{i_1}..dzbar^{i_r}),
    grouped by multi-index; the normalization makes M_0 = fg and
    M_1(f,g) - M_1(g,f) = i {f, g} for the form (i/2) sum dz^i ^ dzbar^i.
    """
    f._check(g)
    if r < 0:
        raise ValueError("kernel order must be nonnegative")
    acc = RadialFun.zero(f.dim)
    for s in _compositions(r, f.dim):
        df = _dz_multi(f, s, "z")
        if not df.terms:
            continue
        dg = _dz_multi(g, s, "zb")
        if not dg.terms:
            continue
        c = Fraction(2 ** r, _multi_factorial(s))
        acc = acc + (df * dg).scale(c)
    return acc


def _multi_factorial(s):
    n = 1
    for e in s:
        n *= factorial(e)
    return n


def _dz_multi(f, s, kind):
    out = f
    for i, e in enumerate(s):
        for _ in range(e):
            out = out._derivative(kind, i)
            if not out.terms:
                return out
    return out


def wick_product(f, g, order):
    """Wick star product as a series truncated at the given order."""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    return LambdaSeries(tuple(wick_kernel(f, g, r) for r in range(order + 1)))


def poisson(f, g):
    """Poisson bracket -2i sum_i (d_z^i f d_zbar^i g - d_z^i g d_zbar^i f),
    the bracket of (i/2) sum dz^i ^ dzbar^i; equals -i (M_1(f,g) - M_1(g,f))."""
    f._check(g)
    acc = RadialFun.zero(f.dim)
    for i in range(1, f.dim + 1):
        acc = acc + f.d_z(i) * g.d_zbar(i) - g.d_z(i) * f.d_zbar(i)
    return acc.scale(I * (-2))
