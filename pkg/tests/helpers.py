"""Shared generators and converters for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy

from rigidity import GaussianRational, Polynomial


def random_scalar(rng: random.Random, span: int = 6, imaginary: bool = True) -> GaussianRational:
    """A small random Gaussian rational, biased toward integers."""
    def part() -> Fraction:
        num = rng.randint(-span, span)
        den = rng.choice((1, 1, 1, 2, 3))
        return Fraction(num, den)

    re = part()
    im = part() if imaginary and rng.random() < 0.4 else Fraction(0)
    return GaussianRational(re, im)


def random_poly(
    rng: random.Random,
    variables: tuple[str, ...],
    max_terms: int = 5,
    max_exp: int = 4,
    span: int = 6,
    imaginary: bool = True,
) -> Polynomial:
    """A random sparse polynomial (possibly zero)."""
    result = Polynomial.zero(variables)
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in variables)
        result = result + Polynomial.monomial(
            variables, exps, random_scalar(rng, span, imaginary)
        )
    return result


def nonzero_random_poly(rng: random.Random, variables: tuple[str, ...], **kw) -> Polynomial:
    while True:
        p = random_poly(rng, variables, **kw)
        if not p.is_zero:
            return p


_SYMPY_I = sympy.I


def to_sympy(p: Polynomial):
    """Exact sympy expression for cross-checking arithmetic."""
    syms = sympy.symbols(p.variables) if p.variables else ()
    total = sympy.Integer(0)
    for exps, coeff in p.terms.items():
        term = sympy.Rational(coeff.re.numerator, coeff.re.denominator) + _SYMPY_I * sympy.Rational(
            coeff.im.numerator, coeff.im.denominator
        )
        for sym, e in zip(syms, exps):
            term *= sym**e
        total += term
    return sympy.expand(total)
