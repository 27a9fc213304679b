"""Reduction of a deformed product to the constraint quotient.

Everything here is generic over a phase setup: an algebra with a graded
family of product kernels M_r, a constraint element J cutting out the
reduced space C, and the three classical maps restriction, prolongation
and the difference quotient pi_J with f = prol f + pi_J(f) * J.

The central object is the transfer operator series T, defined by

    T_0 = id,   T_n(f) = - sum_{k=1..n} T_{n-k}( M_k(pi_J(f), J) ).

T fixes prolonged functions and the constraint, and straightens the left
star ideal: T(f * J) = f J order by order.  Its inverse U (as a formal
operator series) turns classical multiples of J back into star multiples.
The reduced product of two functions on C is then

    f x g = S^{-1}( prol( T( S(f) * S(g) ) ) )

for an intertwiner S that starts at the identity; the default S = id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .scalar import LambdaSeries
from . import flatphase
from . import radialphase


class MembershipError(ValueError):
    """An input lies outside the subalgebra the reduced product is defined on."""


def identity(x):
    return x


@dataclass(frozen=True)
class PhaseSetup:
    """A phase space with constraint, product kernels and classical maps.

    kernel(f, g, r) is the order-r bidifferential product term; prol, pij
    and restrict satisfy f = prol(f) + pij(f) * j with prol(j) = 0, and
    bracket is the Poisson bracket generating kernel antisymmetry at
    order one.
    """

    label: str
    j: object
    kernel: Callable
    prol: Callable
    pij: Callable
    restrict: Callable
    bracket: Callable
    one: object
    zero: object

    def __post_init__(self):
        if not self.prol(self.j).is_zero():
            raise ValueError("constraint must vanish on the reduced space")
        if self.pij(self.j) != self.one:
            raise ValueError("difference quotient must send the constraint to 1")

    def as_series(self, f, order):
        return LambdaSeries((f,) + (self.zero,) * order)

    def vanishes_on_c(self, f):
        # prol identifies ambient spellings of the same function on C
        return self.prol(f).is_zero()


def flat_setup(n):
    """Flat phase space R^{2n} with the last momentum as constraint."""
    if n < 2:
        raise ValueError("flat reduction needs at least two coordinate pairs")
    return PhaseSetup(
        label="flat-%d" % n,
        j=flatphase.FlatPoly.p(n, n),
        kernel=flatphase.moyal_kernel,
        prol=flatphase.prol,
        pij=flatphase.pij,
        restrict=flatphase.restrict,
        bracket=flatphase.poisson,
        one=flatphase.FlatPoly.one(n),
        zero=flatphase.FlatPoly.zero(n),
    )


def radial_setup(constraint, dim):
    """Radial functions on C^dim with a sphere constraint."""
    return PhaseSetup(
        label="radial-%s-%d" % (constraint.kind, dim),
        j=constraint.j(dim),
        kernel=radialphase.wick_kernel,
        prol=lambda f: radialphase.prol(f, constraint),
        pij=lambda f: radialphase.pij(f, constraint),
        restrict=lambda f: radialphase.restrict(f, constraint),
        bracket=radialphase.poisson,
        one=radialphase.RadialFun.one(dim),
        zero=radialphase.RadialFun.zero(dim),
    )


@dataclass(frozen=True)
class OperatorSeries:
    """A formal series of linear operators, one per order in the parameter."""

    ops: tuple

    @property
    def order(self):
        return len(self.ops) - 1

    def apply(self, series):
        if series.order > self.order:
            raise ValueError(
                "operator series of order %d applied to series of order %d"
                % (self.order, series.order)
            )
        out = []
        for m in range(series.order + 1):
            acc = self.ops[0](series[m])
            for k in range(1, m + 1):
                acc = acc + self.ops[k](series[m - k])
            out.append(acc)
        return LambdaSeries(tuple(out))

    def compose(self, other):
        n = min(self.order, other.order)

        def make(m):
            def composed(f):
                acc = None
                for k in range(m + 1):
                    term = self.ops[k](other.ops[m - k](f))
                    acc = term if acc is None else acc + term
                return acc

            return composed

        return OperatorSeries(tuple(make(m) for m in range(n + 1)))


def operator_series_invert(series):
    """Invert an operator series with unit leading term.

    U_0 = id, U_n = - sum_{k=1..n} T_k o U_{n-k}; then U o T = T o U = id
    order by order.
    """
    ops = series.ops
    if ops[0] is not identity:
        raise ValueError("can only invert a series whose leading term is the identity")
    inv = [identity]

    def make(n):
        def u_n(f):
            acc = None
            for k in range(1, n + 1):
                term = ops[k](inv[n - k](f))
                acc = term if acc is None else acc + term
            return -acc

        return u_n

    for n in range(1, len(ops)):
        inv.append(make(n))
    return OperatorSeries(tuple(inv))


def transfer_ops(setup, order):
    """The transfer operator series T for a setup, up to the given order."""
    ops = [identity]

    def make(n):
        def t_n(f):
            g = setup.pij(f)
            acc = setup.zero
            for k in range(1, n + 1):
                mk = setup.kernel(g, setup.j, k)
                acc = acc + ops[n - k](mk)
            return -acc

        return t_n

    for n in range(1, order + 1):
        ops.append(make(n))
    return OperatorSeries(tuple(ops))


def star_series(setup, fs, gs):
    """Bilinear extension of the product kernels to truncated series."""
    n = min(fs.order, gs.order)
    out = []
    for m in range(n + 1):
        acc = setup.zero
        for r in range(m + 1):
            for j in range(m - r + 1):
                acc = acc + setup.kernel(fs[j], gs[m - r - j], r)
        out.append(acc)
    return LambdaSeries(tuple(out))


def star_elements(setup, f, g, order):
    return star_series(setup, setup.as_series(f, order), setup.as_series(g, order))


def decompose_deformed(setup, series):
    """Split a series as U(p) + (w * J) with p prolonged order by order.

    Returns (p, w) where p = prol(T series) and w = pij(T series); the
    reconstruction series == U(p) + star(w, J) is exact at the truncation
    order, and series lies in the left star ideal iff p vanishes.
    """
    t = transfer_ops(setup, series.order)
    h = t.apply(series)
    return h.map(setup.prol), h.map(setup.pij)


def in_istar(setup, series):
    """Membership in the left star ideal generated by the constraint.

    A series is of the form g * J iff its transfer image vanishes on C
    order by order.
    """
    t = transfer_ops(setup, series.order)
    return all(setup.vanishes_on_c(c) for c in t.apply(series).coeffs)


def in_bstar(setup, series):
    """Membership in the deformed normalizer: [J, f]_* lies in the ideal."""
    j = setup.as_series(setup.j, series.order)
    comm = star_series(setup, j, series) - star_series(setup, series, j)
    return in_istar(setup, comm)


def is_in_b_cap_f(setup, f):
    """Classical admissibility: f is prolonged and {J, f} vanishes on C."""
    if f != setup.prol(f):
        return False
    return setup.vanishes_on_c(setup.bracket(setup.j, f))


class Intertwiner:
    """Equivalence S between star products, as an operator series with
    unit leading term; the reduced product is conjugated through it.
    None stands for the identity at every order."""

    def __init__(self, ops=None):
        if ops is not None:
            if ops.ops[0] is not identity:
                raise ValueError("intertwiner must start at the identity")
            self._inv = operator_series_invert(ops)
        else:
            self._inv = None
        self.ops = ops

    @staticmethod
    def identity_map():
        return Intertwiner(None)

    @staticmethod
    def closed_form(ops):
        return Intertwiner(ops)

    def apply(self, series):
        return series if self.ops is None else self.ops.apply(series)

    def apply_inverse(self, series):
        return series if self._inv is None else self._inv.apply(series)


def reduce_star_series(setup, fs, gs, intertwiner=None):
    """Bilinear extension of the reduced product to truncated series.

    The coefficients are assumed admissible; no membership check is done
    here, so element inputs should go through reduce_star instead.
    """
    s = intertwiner or Intertwiner.identity_map()
    ambient = star_series(setup, s.apply(fs), s.apply(gs))
    t = transfer_ops(setup, ambient.order)
    h = t.apply(ambient).map(setup.prol)
    return s.apply_inverse(h)


def reduce_star(setup, f, g, order, intertwiner=None):
    """The reduced product of two admissible functions, as a series.

    Both inputs must be prolonged and bracket-commute with the constraint
    on C; otherwise the construction is not well defined and a
    MembershipError is raised.
    """
    for side, x in (("left", f), ("right", g)):
        if not is_in_b_cap_f(setup, x):
            raise MembershipError(
                "%s factor is not an admissible function on the reduced space"
                % side
            )
    return reduce_star_series(
        setup, setup.as_series(f, order), setup.as_series(g, order), intertwiner
    )


def verify_intertwiner(setup, intertwiner, f, g, order):
    """Check S(f x g) = S(f) * S(g) modulo the left star ideal."""
    fs = intertwiner.apply(setup.as_series(f, order))
    gs = intertwiner.apply(setup.as_series(g, order))
    ambient = star_series(setup, fs, gs)
    reduced = reduce_star(setup, f, g, order, intertwiner)
    return in_istar(setup, ambient - intertwiner.apply(reduced))
