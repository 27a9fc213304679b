"""Closed forms for the reduced products on complex projective space.

For the sphere constraints the transfer recursion can be resolved
explicitly.  With the linear constraint the recursion collapses to powers
of a single first-order kernel K, and the reduced product of homogeneous
f, g takes the table form

    f x g = sum_{k,l} (t/a)^{k+l} A(k,l) u^k M_k(f,g),     a = -2*mu,

where the integer table A(k,l) has three independent descriptions kept
here side by side: a nested-sum recursion, a direct binomial formula and
the operator definition a^{k+l} res(K^l(u^{-k})).  With the quadratic
constraint the recursion resolves into words in two letters P (weight 1)
and R (weight 2), giving an analogous rational table B(k,l).  The two
tables differ at order two by a multiple of u {f,g}, which makes the two
reduced products inequivalent deformations; the exact multiple is
computed by obstruction_order2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .radialphase import (
    RadialConstraint,
    RadialFun,
    is_homogeneous,
    pij,
    poisson,
    prol,
    restrict,
    scalar_ratio,
    wick_kernel,
)
from .reduction import MembershipError, radial_setup, reduce_star
from .scalar import I, LambdaSeries, RadialRational


def transfer_kernel(setup):
    """First-order transfer kernel K(f) = -M_1(pi_J(f), J).

    For constraints whose higher kernels against J vanish, the transfer
    operators are plain powers: T_n = K^n.
    """

    def k(f):
        return -setup.kernel(setup.pij(f), setup.j, 1)

    return k


def restricted_kernel_euler(f, constraint):
    """Euler-operator form of the restricted transfer kernel.

    Equals restrict(K f) for terms with equal z and zbar degrees, which
    covers everything the reduction feeds into K.
    """
    e, ebar = f.euler_e(), f.euler_ebar()
    combo = (e.euler_e() - ebar.euler_ebar()).scale(Fraction(1, 2)) \
        + (e + ebar) - (e.euler_e() + e.euler_ebar())
    return restrict(combo, constraint).scale(Fraction(-1, 4) / constraint.mu)


def a_coeff_sum(k, l):
    """Nested-sum value of the linear table: (-1)^l sum over descending
    chains k >= i_1 >= ... >= i_l >= 1 of the products i_1 ... i_l."""
    if k < 0 or l < 0:
        raise ValueError("table indices must be nonnegative")
    row = [1] * (k + 1)
    for _ in range(l):
        acc = 0
        new = [0] * (k + 1)
        for m in range(1, k + 1):
            acc += m * row[m]
            new[m] = acc
        row = new
    return (-1) ** l * row[k]


def a_coeff_closed(k, l):
    """Direct binomial formula for the linear table, defined for k >= 1."""
    if k < 1:
        raise ValueError("the direct formula needs k >= 1")
    if l < 0:
        raise ValueError("table indices must be nonnegative")
    s = sum(
        comb(k - 1, n - 1) * (-1) ** (k + l - n) * n ** (k + l - 1)
        for n in range(1, k + 1)
    )
    return Fraction(s, factorial(k - 1))


def a_coeff_engine(k, l):
    """Linear table in the normalization of the product kernels used here."""
    return Fraction(2 ** l * a_coeff_sum(k, l))


def _restricted_constant(f, constraint):
    # the value on the sphere, read off the scale-invariant representative
    # so that split monomial spellings of a constant are identified
    p = prol(f, constraint)
    c = scalar_ratio(p, RadialFun.one(f.dim))
    if c is None:
        raise ValueError("the restriction is not constant on the sphere")
    return c


def _real(c):
    if c.im:
        raise ValueError("expected a real table value")
    return c.re


def a_coeff_operator(k, l, mu=Fraction(-1, 2), dim=1):
    """Linear table through the operator definition a^{k+l} res(K^l u^{-k})."""
    constraint = RadialConstraint.linear(mu)
    setup = radial_setup(constraint, dim)
    kernel = transfer_kernel(setup)
    f = RadialFun.u(dim, -k)
    for _ in range(l):
        f = kernel(f)
    a = constraint.sphere_u
    val = _real(_restricted_constant(f, constraint))
    return a ** (k + l) * val


def pr_letters(setup):
    """The two word letters of the quadratic transfer recursion, built from
    the product kernels: P(f) = -M_1(pi_J f, J), R(f) = -M_2(pi_J f, J)."""

    def p(f):
        return -setup.kernel(setup.pij(f), setup.j, 1)

    def r(f):
        return -setup.kernel(setup.pij(f), setup.j, 2)

    return p, r


def pr_letters_euler(constraint, dim):
    """The same letters in closed Euler-operator form: P = -u E pi_J and
    R = -(E^2 - E) pi_J, with E^2 - E the normally ordered second Euler
    operator sum_{i,j} z^i z^j d2/dz^i dz^j."""

    def p(f):
        return -(RadialFun.u(dim) * pij(f, constraint).euler_e())

    def r(f):
        e = pij(f, constraint).euler_e()
        return -(e.euler_e() - e)

    return p, r


def _weight_words(n):
    if n == 0:
        yield ()
        return
    for head in (1, 2):
        if head <= n:
            for rest in _weight_words(n - head):
                yield (head,) + rest


def pr_word_sum(setup, weight):
    """Sum over words in the two letters with total weight as given,
    rightmost letter acting first; equals the transfer operator T_weight."""
    p, r = pr_letters(setup)
    letters = {1: p, 2: r}

    def apply(f):
        acc = setup.zero
        for word in _weight_words(weight):
            g = f
            for w in reversed(word):
                g = letters[w](g)
            acc = acc + g
        return acc

    return apply


@lru_cache(maxsize=None)
def b_coeff_engine(k, l, mu=Fraction(-1, 2)):
    """Quadratic table a^{k+l} res(T_l(u^{-k})) via the word-sum form of the
    transfer operators; the value does not depend on mu."""
    if k < 0 or l < 0:
        raise ValueError("table indices must be nonnegative")
    constraint = RadialConstraint.quadratic(mu)
    setup = radial_setup(constraint, 1)
    f = pr_word_sum(setup, l)(RadialFun.u(1, -k))
    a = constraint.sphere_u
    val = _real(_restricted_constant(f, constraint))
    return a ** (k + l) * val


def coefficient_table(kind, kmax, lmax, mu=Fraction(-1, 2)):
    """Table rows k = 1..kmax, columns l = 0..lmax-1 for one constraint."""
    if kmax < 1 or lmax < 1:
        raise ValueError("table extents must be positive")
    if kind == "linear":
        cell = lambda k, l: a_coeff_engine(k, l)
    elif kind == "quadratic":
        cell = lambda k, l: b_coeff_engine(k, l, mu)
    else:
        raise ValueError("table kind must be 'linear' or 'quadratic'")
    return [[cell(k, l) for l in range(lmax)] for k in range(1, kmax + 1)]


def table_reduced_product(constraint, f, g, order):
    """Closed-form reduced product of homogeneous functions.

    Every (k, l) contribution is homogeneous, so no prolongation step is
    needed; the result agrees with the transfer-operator construction.
    """
    for x in (f, g):
        if not is_homogeneous(x):
            raise MembershipError("closed form needs homogeneous factors")
    a = constraint.sphere_u
    if constraint.kind == "linear":
        cell = lambda k, l: a_coeff_engine(k, l)
    else:
        cell = lambda k, l: b_coeff_engine(k, l, constraint.mu)
    out = [RadialFun.zero(f.dim) for _ in range(order + 1)]
    for k in range(order + 1):
        mk = wick_kernel(f, g, k)
        if mk.is_zero():
            continue
        uk_mk = mk.mul_radial(RadialRational.u_power(k))
        for l in range(order - k + 1):
            c = cell(k, l)
            if not c:
                continue
            out[k + l] = out[k + l] + uk_mk.scale(c / a ** (k + l))
    return LambdaSeries(tuple(out))


def obstruction_order2(f, g, mu, order_check=2):
    """Antisymmetrized order-2 difference of the two reduced products.

    Returns (lhs, rhs, ratio) with
    lhs = (f x g - f x~ g)_2 - (g x f - g x~ f)_2 for the quadratic (x) and
    linear (x~) constraints, rhs = (i/2) a^{-2} u {f, g}, and ratio the
    scalar lhs / rhs.  A nonzero constant ratio off the exact class of the
    reduced symplectic form is what makes the two products inequivalent.
    """
    lin = radial_setup(RadialConstraint.linear(mu), f.dim)
    quad = radial_setup(RadialConstraint.quadratic(mu), f.dim)
    a = -2 * Fraction(mu)

    def second(setup, x, y):
        return reduce_star(setup, x, y, order_check)[2]

    lhs = (second(quad, f, g) - second(lin, f, g)) \
        - (second(quad, g, f) - second(lin, g, f))
    rhs = (RadialFun.u(f.dim) * poisson(f, g)).scale(I * Fraction(1, 2) / a ** 2)
    return lhs, rhs, scalar_ratio(lhs, rhs)
