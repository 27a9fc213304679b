"""Command line front end.

Subcommands:
  star      ambient star product of two expressions, printed order by order
  reduce    reduced star product on the constraint surface
  coeffs    closed-form coefficient tables for the reduced product
  obstruct  order-2 comparison of the two reduced products on the sphere
  verify    randomized self-checks of the core identities

Expressions use q<i>/p<i> in flat mode and z<i>/zb<i>/u in the radial
modes, plus integers, I, + - * / ^ and parentheses.  Division and negative
exponents are restricted to scalar or purely radial quantities, which keeps
every expression inside the implemented algebras.  All output is
deterministic: terms are sorted, scalars print exactly, and JSON payloads
are emitted with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .cpn import (
    a_coeff_engine,
    a_coeff_operator,
    a_coeff_closed,
    a_coeff_sum,
    b_coeff_engine,
    obstruction_order2,
    pr_word_sum,
    table_reduced_product,
)
from .flatphase import FlatPoly, moyal_product
from .radialphase import (
    ParityError,
    RadialConstraint,
    RadialFun,
    poisson,
    wick_product,
)
from .reduction import (
    MembershipError,
    flat_setup,
    in_bstar,
    in_istar,
    is_in_b_cap_f,
    radial_setup,
    reduce_star,
    star_elements,
    transfer_ops,
)
from .scalar import (
    GaussianRational,
    I,
    LambdaSeries,
    RadialRational,
    UPoly,
    scalar_text,
)

ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
MODES = ("flat", "radial-linear", "radial-quadratic")


class ParseError(ValueError):
    """Expression syntax or vocabulary error, with a character offset."""

    def __init__(self, msg, pos):
        super().__init__("%s (at position %d)" % (msg, pos))
        self.msg = msg
        self.pos = pos


_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[+\-*/^()])"
)


def tokenize(text):
    """Split an expression into (kind, text, position) triples."""
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.lastgroup != "ws":
            toks.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    """Recursive descent over + - * / ^ with ^ binding tightest."""

    def __init__(self, text, mode, dim):
        self.toks = tokenize(text)
        self.i = 0
        self.flat = mode == "flat"
        self.dim = dim

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self):
        value = self.parse_sum()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected %r" % text, pos)
        return value

    def parse_sum(self):
        value = self.parse_product()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.parse_product()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def parse_product(self):
        value = self.parse_unary()
        while True:
            kind, text, pos = self.peek()
            if kind == "op" and text in "*/":
                self.advance()
                rhs = self.parse_unary()
                if text == "*":
                    value = value * rhs
                else:
                    value = value * self.inverse(rhs, pos)
            else:
                return value

    def parse_unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return -self.parse_unary()
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        kind, text, pos = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            kind, text, _ = self.peek()
            negative = kind == "op" and text == "-"
            if negative:
                self.advance()
            kind, text, epos = self.advance()
            if kind != "int":
                raise ParseError("exponent must be an integer", epos)
            n = int(text)
            if negative:
                return self.inverse(base, pos) ** n
            return base ** n
        return base

    def parse_atom(self):
        kind, text, pos = self.advance()
        if kind == "int":
            return self.constant(int(text))
        if kind == "op" and text == "(":
            value = self.parse_sum()
            kind, text, pos = self.advance()
            if not (kind == "op" and text == ")"):
                raise ParseError("expected ')'", pos)
            return value
        if kind == "name":
            return self.name(text, pos)
        raise ParseError("expected a value, found %r" % (text or "end of input"), pos)

    def constant(self, c):
        if self.flat:
            return FlatPoly.constant(c, self.dim)
        return RadialFun.constant(c, self.dim)

    def name(self, text, pos):
        if text == "I":
            return self.constant(I)
        if self.flat:
            m = re.fullmatch(r"([qp])(\d+)", text)
            if m is None:
                raise ParseError(
                    "unknown name %r in flat mode (expected q<i>, p<i>, I)" % text, pos
                )
            i = int(m.group(2))
            if not 1 <= i <= self.dim:
                raise ParseError(
                    "coordinate index %d out of range 1..%d" % (i, self.dim), pos
                )
            make = FlatPoly.q if m.group(1) == "q" else FlatPoly.p
            return make(i, self.dim)
        if text == "u":
            return RadialFun.u(self.dim)
        m = re.fullmatch(r"(zb|z)(\d+)", text)
        if m is None:
            raise ParseError(
                "unknown name %r in radial mode (expected z<i>, zb<i>, u, I)" % text,
                pos,
            )
        i = int(m.group(2))
        if not 1 <= i <= self.dim:
            raise ParseError(
                "coordinate index %d out of range 1..%d" % (i, self.dim), pos
            )
        make = RadialFun.zbar if m.group(1) == "zb" else RadialFun.z
        return make(i, self.dim)

    def inverse(self, value, pos):
        if value.is_zero():
            raise ParseError("division by zero", pos)
        if self.flat:
            zero_key = (0,) * (2 * self.dim)
            if set(value.terms) == {zero_key}:
                return FlatPoly.constant(ONE / value.terms[zero_key], self.dim)
            raise ParseError("flat division needs a scalar divisor", pos)
        zero_key = ((0,) * self.dim, (0,) * self.dim)
        if set(value.terms) == {zero_key}:
            r = value.terms[zero_key]
            return RadialFun.from_radial(RadialRational(r.den, r.num), self.dim)
        raise ParseError("division needs a scalar or purely radial divisor", pos)


def parse_expression(text, mode, dim):
    return _Parser(text, mode, dim).parse()


# ---------------------------------------------------------------------------
# deterministic, re-parseable printing


def _join_sum(parts):
    out = parts[0]
    for text in parts[1:]:
        if text.startswith("-"):
            out += " - " + text[1:]
        else:
            out += " + " + text
    return out


def upoly_text(poly):
    if poly.is_zero():
        return "0"
    parts = []
    for k in range(poly.degree(), -1, -1):
        c = poly.coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            parts.append(scalar_text(c))
            continue
        base = "u" if k == 1 else "u^%d" % k
        if c == ONE:
            parts.append(base)
        elif c == MINUS_ONE:
            parts.append("-" + base)
        else:
            parts.append("%s*%s" % (scalar_text(c), base))
    return _join_sum(parts)


def _monomial_entries(poly):
    return [(k, c) for k, c in enumerate(poly.coeffs) if not c.is_zero()]


def _radial_factor(r):
    """Split a radial coefficient into (scalar, factor texts, denominator)."""
    coeff = ONE
    factors = []
    entries = _monomial_entries(r.num)
    if len(entries) == 1:
        k, coeff = entries[0]
        if k:
            factors.append("u" if k == 1 else "u^%d" % k)
    else:
        factors.append("(%s)" % upoly_text(r.num))
    den = None
    if r.den.degree() > 0:
        entries = _monomial_entries(r.den)
        if len(entries) == 1 and entries[0][1] == ONE:
            k = entries[0][0]
            den = "u" if k == 1 else "u^%d" % k
        else:
            den = "(%s)" % upoly_text(r.den)
    return coeff, factors, den


def _term_text(coeff, factors, den=None):
    if factors:
        body = "*".join(factors)
        if coeff == ONE:
            text = body
        elif coeff == MINUS_ONE:
            text = "-" + body
        else:
            text = "%s*%s" % (scalar_text(coeff), body)
    else:
        text = scalar_text(coeff)
    if den:
        text += "/" + den
    return text


def _coordinate_factors(exps, letter):
    out = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            out.append("%s%d" % (letter, i))
        elif e:
            out.append("%s%d^%d" % (letter, i, e))
    return out


def radial_text(f):
    if f.is_zero():
        return "0"
    parts = []
    for (alpha, beta), r in f.sorted_terms():
        coeff, factors, den = _radial_factor(r)
        coords = _coordinate_factors(alpha, "z") + _coordinate_factors(beta, "zb")
        parts.append(_term_text(coeff, coords + factors, den))
    return _join_sum(parts)


def flat_text(f):
    if f.is_zero():
        return "0"
    n = f.dim
    parts = []
    for key, c in f.sorted_terms():
        coords = _coordinate_factors(key[:n], "q") + _coordinate_factors(key[n:], "p")
        parts.append(_term_text(c, coords))
    return _join_sum(parts)


def fun_text(f):
    return flat_text(f) if isinstance(f, FlatPoly) else radial_text(f)


def series_lines(series):
    return ["order %d: %s" % (k, fun_text(series[k])) for k in range(series.order + 1)]


# ---------------------------------------------------------------------------
# JSON payloads


def scalar_json(c):
    c = GaussianRational.of(c)
    return {"re": str(c.re), "im": str(c.im)}


def upoly_json(poly):
    # little-endian coefficient list
    return [scalar_json(c) for c in poly.coeffs]


def coeff_json(f):
    terms = []
    if isinstance(f, FlatPoly):
        n = f.dim
        for key, c in f.sorted_terms():
            terms.append({
                "alpha": list(key[:n]),
                "beta": list(key[n:]),
                "num": [scalar_json(c)],
                "den": [scalar_json(1)],
            })
    else:
        for (alpha, beta), r in f.sorted_terms():
            terms.append({
                "alpha": list(alpha),
                "beta": list(beta),
                "num": upoly_json(r.num),
                "den": upoly_json(r.den),
            })
    return {"terms": terms}


def series_json(series):
    return {
        "order": series.order,
        "coeffs": [coeff_json(series[k]) for k in range(series.order + 1)],
    }


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True))


# ---------------------------------------------------------------------------
# commands


@dataclass(frozen=True)
class RunConfig:
    """Validated settings shared by the product commands."""

    mode: str
    dim: int
    order: int
    mu: Fraction

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError("unknown mode %r" % (self.mode,))
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.order < 0:
            raise ValueError("order must be nonnegative")

    def constraint(self):
        if self.mode == "radial-linear":
            return RadialConstraint.linear(self.mu)
        if self.mode == "radial-quadratic":
            return RadialConstraint.quadratic(self.mu)
        return None

    def setup(self):
        if self.mode == "flat":
            return flat_setup(self.dim)
        return radial_setup(self.constraint(), self.dim)

    def parse(self, text):
        return parse_expression(text, self.mode, self.dim)


def _config(ns):
    return RunConfig(mode=ns.mode, dim=ns.dim, order=ns.order, mu=ns.mu)


def cmd_star(ns):
    cfg = _config(ns)
    f, g = cfg.parse(ns.f), cfg.parse(ns.g)
    if cfg.mode == "flat":
        series = moyal_product(f, g, cfg.order)
    else:
        series = wick_product(f, g, cfg.order)
    if ns.json:
        _emit_json(series_json(series))
    else:
        for line in series_lines(series):
            print(line)
    return 0


def cmd_reduce(ns):
    cfg = _config(ns)
    setup = cfg.setup()
    f, g = cfg.parse(ns.f), cfg.parse(ns.g)
    series = reduce_star(setup, f, g, cfg.order)
    if ns.json:
        _emit_json(series_json(series))
    else:
        for line in series_lines(series):
            print(line)
    return 0


def _thread_count():
    raw = os.environ.get("COSTAR_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise ValueError("COSTAR_THREADS must be a positive integer, got %r" % raw)
    return n


def coefficient_cells(kind, kmax, lmax, mu):
    """Engine-normalized table values, rows k = 1..kmax, columns l = 0..lmax-1."""
    if kind == "linear":
        cell = lambda k, l: a_coeff_engine(k, l)
    else:
        cell = lambda k, l: b_coeff_engine(k, l, mu)
    pairs = [(k, l) for k in range(1, kmax + 1) for l in range(lmax)]
    workers = _thread_count()
    if workers == 1:
        values = [cell(k, l) for k, l in pairs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda kl: cell(*kl), pairs))
    return [values[r * lmax:(r + 1) * lmax] for r in range(kmax)]


def cmd_coeffs(ns):
    if ns.kmax < 1 or ns.lmax < 1:
        raise ValueError("kmax and lmax must be at least 1")
    rows = coefficient_cells(ns.kind, ns.kmax, ns.lmax, ns.mu)
    cells = [[str(v) for v in row] for row in rows]
    if ns.json:
        _emit_json({
            "kind": ns.kind,
            "kmax": ns.kmax,
            "lmax": ns.lmax,
            "rows": cells,
        })
    elif ns.tsv:
        for row in cells:
            print("\t".join(row))
    else:
        width = max(max(len(v) for v in row) for row in cells)
        width = max(width, len("l=%d" % (ns.lmax - 1)))
        header = ["%*s" % (width, "l=%d" % l) for l in range(ns.lmax)]
        print("%-6s%s" % ("", "  ".join(header)))
        for k, row in enumerate(cells, start=1):
            body = "  ".join("%*s" % (width, v) for v in row)
            print("%-6s%s" % ("k=%d" % k, body))
    return 0


def cmd_obstruct(ns):
    f = parse_expression(ns.f, "radial-linear", ns.dim)
    g = parse_expression(ns.g, "radial-linear", ns.dim)
    lhs, rhs, ratio = obstruction_order2(f, g, ns.mu)
    if ns.json:
        _emit_json({
            "lhs": coeff_json(lhs),
            "rhs": coeff_json(rhs),
            "ratio": None if ratio is None else scalar_json(ratio),
        })
    else:
        print("lhs:   %s" % radial_text(lhs))
        print("rhs:   %s" % radial_text(rhs))
        print("ratio: %s" % ("none" if ratio is None else scalar_text(ratio)))
    return 0


# ---------------------------------------------------------------------------
# randomized verification suites


def _rand_fraction(rng):
    return Fraction(rng.randint(-2, 2), rng.choice((1, 2)))


def _rand_gauss(rng):
    return GaussianRational(_rand_fraction(rng), _rand_fraction(rng))


def _rand_flat(rng, dim=2):
    terms = {}
    for _ in range(3):
        key = tuple(rng.randint(0, 2) for _ in range(2 * dim))
        terms[key] = _rand_gauss(rng)
    return FlatPoly(dim, terms)


_EVEN_KEYS = (
    ((0, 0), (0, 0)),
    ((1, 0), (1, 0)),
    ((1, 0), (0, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (1, 1)),
    ((2, 0), (0, 2)),
)


def _rand_even(rng):
    terms = []
    for _ in range(2):
        key = rng.choice(_EVEN_KEYS)
        radial = RadialRational(UPoly(tuple(rng.randint(-2, 2) for _ in range(3))))
        terms.append((key, radial))
    return RadialFun(2, terms)


def _pool():
    inv_u = RadialRational.u_power(-1)
    inv_u2 = RadialRational.u_power(-2)
    return (
        RadialFun.one(2),
        RadialFun.monomial((1, 0), (1, 0), radial=inv_u),
        RadialFun.monomial((1, 0), (0, 1), radial=inv_u),
        RadialFun.monomial((0, 1), (1, 0), radial=inv_u),
        RadialFun.monomial((1, 1), (1, 1), radial=inv_u2),
    )


def _rand_homog(rng, pool):
    out = RadialFun.zero(2)
    for f in pool:
        c = rng.randint(-2, 2)
        if c:
            out = out + f.scale(Fraction(c))
    return out if not out.is_zero() else pool[1]


def _all_setups():
    return (
        flat_setup(2),
        radial_setup(RadialConstraint.linear(Fraction(-1, 2)), 2),
        radial_setup(RadialConstraint.quadratic(Fraction(-3, 2)), 2),
    )


def _suite_lemma1(rng, examples):
    ok = True
    for setup in _all_setups():
        gen = _rand_flat if setup.label.startswith("flat") else _rand_even
        t = transfer_ops(setup, 3)
        for _ in range(examples):
            f = gen(rng)
            got = t.apply(star_elements(setup, f, setup.j, 3))
            want = LambdaSeries((f * setup.j,) + (setup.zero,) * 3)
            ok = ok and got == want
    return ok


def _suite_axioms(rng, examples):
    ok = True
    pool = _pool()
    for kind, mu in (("linear", Fraction(-1, 2)), ("quadratic", Fraction(-3, 2))):
        setup = radial_setup(RadialConstraint(kind, mu), 2)
        for _ in range(examples):
            f, g = _rand_homog(rng, pool), _rand_homog(rng, pool)
            fg = reduce_star(setup, f, g, 2)
            gf = reduce_star(setup, g, f, 2)
            ok = ok and reduce_star(setup, setup.one, f, 2) == setup.as_series(f, 2)
            ok = ok and fg[0] == f * g
            ok = ok and fg[1] - gf[1] == setup.prol(setup.bracket(f, g).scale(I))
            ok = ok and all(is_in_b_cap_f(setup, fg[k]) for k in range(3))
    return ok


def _suite_membership(rng, examples):
    ok = True
    for setup in _all_setups():
        gen = _rand_flat if setup.label.startswith("flat") else _rand_even
        for _ in range(examples):
            f = gen(rng)
            ok = ok and in_istar(setup, star_elements(setup, f, setup.j, 2))
        ok = ok and not in_istar(setup, setup.as_series(setup.one, 2))
    pool = _pool()
    for kind in ("linear", "quadratic"):
        setup = radial_setup(RadialConstraint(kind, Fraction(-1, 2)), 2)
        for _ in range(examples):
            series = setup.as_series(_rand_homog(rng, pool), 2)
            ok = ok and in_bstar(setup, series)
    flat = flat_setup(2)
    q1p1 = FlatPoly(2, {(1, 0, 1, 0): ONE})
    q2 = FlatPoly.q(2, 2)
    ok = ok and in_bstar(flat, flat.as_series(q1p1, 2))
    ok = ok and not in_bstar(flat, flat.as_series(q2, 2))
    return ok


def _suite_prwords(rng, examples):
    ok = True
    for kind in ("linear", "quadratic"):
        setup = radial_setup(RadialConstraint(kind, Fraction(-1, 2)), 2)
        t = transfer_ops(setup, 3)
        for _ in range(examples):
            f = _rand_even(rng)
            for w in range(1, 4):
                ok = ok and pr_word_sum(setup, w)(f) == t.ops[w](f)
    return ok


def _suite_tables(rng, examples):
    ok = all(
        a_coeff_closed(k, l) == a_coeff_sum(k, l)
        for k in range(1, 7) for l in range(7)
    )
    for k in range(3):
        for l in range(3):
            ok = ok and a_coeff_operator(k, l) == a_coeff_engine(k, l)
    ok = ok and b_coeff_engine(1, 1) == -3
    ok = ok and b_coeff_engine(2, 1) == -8
    ok = ok and b_coeff_engine(1, 2) == Fraction(17, 2)
    pool = _pool()
    for kind, mu in (("linear", Fraction(-1, 2)), ("quadratic", Fraction(-3, 2))):
        c = RadialConstraint(kind, mu)
        setup = radial_setup(c, 2)
        for _ in range(examples):
            f, g = _rand_homog(rng, pool), _rand_homog(rng, pool)
            ok = ok and table_reduced_product(c, f, g, 3) == reduce_star(setup, f, g, 3)
    return ok


def _suite_obstruction(rng, examples):
    ok = True
    pool = _pool()
    done = 0
    while done < examples:
        f, g = _rand_homog(rng, pool), _rand_homog(rng, pool)
        if poisson(f, g).is_zero():
            continue
        _, rhs, ratio = obstruction_order2(f, g, Fraction(-1, 2))
        ok = ok and not rhs.is_zero() and ratio == GaussianRational(-2)
        done += 1
    return ok


SUITES = (
    ("lemma1", _suite_lemma1),
    ("axioms", _suite_axioms),
    ("membership", _suite_membership),
    ("prwords", _suite_prwords),
    ("tables", _suite_tables),
    ("obstruction", _suite_obstruction),
)


def cmd_verify(ns):
    failed = False
    for name, suite in SUITES:
        if ns.suite != "all" and ns.suite != name:
            continue
        ok = suite(Random(ns.seed), ns.examples)
        print("VERIFY %s: %s" % (name, "PASS" if ok else "FAIL"))
        failed = failed or not ok
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_product_args(sub, default_order):
    sub.add_argument("--mode", choices=MODES, default="radial-quadratic")
    sub.add_argument("--dim", type=int, default=2,
                     help="coordinate pairs (flat) or complex coordinates (radial)")
    sub.add_argument("--order", type=int, default=default_order,
                     help="truncation order of the deformation series")
    sub.add_argument("--mu", type=Fraction, default=Fraction(-1, 2),
                     help="constraint level, a negative fraction (radial modes)")
    sub.add_argument("--json", action="store_true", help="emit a JSON payload")
    sub.add_argument("f", help="left factor expression")
    sub.add_argument("g", help="right factor expression")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="costar",
        description="Star products and coisotropic reduction, exactly.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    star = sub.add_parser("star", help="ambient star product")
    _add_product_args(star, default_order=3)
    star.set_defaults(func=cmd_star)

    reduce_ = sub.add_parser("reduce", help="reduced star product")
    _add_product_args(reduce_, default_order=3)
    reduce_.set_defaults(func=cmd_reduce)

    coeffs = sub.add_parser("coeffs", help="reduced-product coefficient tables")
    coeffs.add_argument("--kind", choices=("linear", "quadratic"), default="linear")
    coeffs.add_argument("--kmax", type=int, default=4)
    coeffs.add_argument("--lmax", type=int, default=4)
    coeffs.add_argument("--mu", type=Fraction, default=Fraction(-1, 2))
    fmt = coeffs.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")
    coeffs.set_defaults(func=cmd_coeffs)

    obstruct = sub.add_parser(
        "obstruct", help="order-2 difference of the two reduced products"
    )
    obstruct.add_argument("--dim", type=int, default=2)
    obstruct.add_argument("--mu", type=Fraction, default=Fraction(-1, 2))
    obstruct.add_argument("--json", action="store_true")
    obstruct.add_argument("f")
    obstruct.add_argument("g")
    obstruct.set_defaults(func=cmd_obstruct)

    verify = sub.add_parser("verify", help="randomized self-checks")
    verify.add_argument(
        "--suite",
        choices=("all",) + tuple(name for name, _ in SUITES),
        default="all",
    )
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--examples", type=int, default=3)
    verify.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    try:
        return ns.func(ns)
    except ParseError as exc:
        print("costar: parse error: %s" % exc, file=sys.stderr)
        return 2
    except (MembershipError, ParityError, ValueError, ZeroDivisionError) as exc:
        print("costar: error: %s" % exc, file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
