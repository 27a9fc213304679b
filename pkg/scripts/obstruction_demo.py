"""Compare the two reduced products at order 2.

The sphere sits inside the same ambient algebra as the zero set of either
a linear or a quadratic constraint.  Both reductions produce star products
on the quotient; this script antisymmetrizes their order-2 difference on a
family of degree-0 functions and prints the single scalar that relates it
to the reduced Poisson bracket.  A nonzero scalar means no equivalence can
remove the difference, so the constraint shape genuinely matters.
"""

import argparse
from fractions import Fraction

from costar.cli import radial_text, scalar_text
from costar.cpn import obstruction_order2
from costar.radialphase import RadialFun
from costar.scalar import RadialRational


def pairs(dim):
    inv_u = RadialRational.u_power(-1)

    def gen(i, j):
        alpha = tuple(1 if k == i else 0 for k in range(dim))
        beta = tuple(1 if k == j else 0 for k in range(dim))
        return RadialFun(dim, {(alpha, beta): inv_u})

    yield gen(0, 1), gen(1, 0)
    yield gen(0, 0), gen(0, 1)
    yield gen(1, 1), gen(1, 0)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mu", type=Fraction, default=Fraction(-1, 2))
    ap.add_argument("--dim", type=int, default=2)
    args = ap.parse_args()

    for f, g in pairs(args.dim):
        lhs, rhs, ratio = obstruction_order2(f, g, args.mu)
        print("f = %s" % radial_text(f))
        print("g = %s" % radial_text(g))
        print("  antisymmetrized difference: %s" % radial_text(lhs))
        print("  reference shape:            %s" % radial_text(rhs))
        print("  ratio: %s" % ("none" if ratio is None else scalar_text(ratio)))
        print()


if __name__ == "__main__":
    main()
