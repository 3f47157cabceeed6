"""Sparse multivariate polynomials over Q(i).

A polynomial is stored as a mapping from exponent tuples to nonzero
coefficients, together with an ordered tuple of variable names.  The zero
polynomial is the empty mapping.  All operations are pure: they return new
polynomials and never mutate their arguments.

The canonical monomial order everywhere in this package is graded
lexicographic: monomials are compared first by total degree, then
lexicographically with the first declared variable largest.  Exponent tuples
follow declaration order, so Python's tuple comparison implements the lex
tie-break directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .gauss import ONE, ZERO, GaussianRational, ScalarLike

ExponentVector = tuple[int, ...]
#: A weight vector assigns an integer weight to each variable, in declaration
#: order.  Weighted degree of the zero polynomial is MINUS_INF.
WeightVector = Sequence[int]

MINUS_INF = float("-inf")


class VariableMismatchError(ValueError):
    """Raised when two polynomials over different variable tuples are combined."""


class UnknownVariableError(ValueError):
    """Raised when an operation names a variable the polynomial does not have."""


class NotDivisibleError(ArithmeticError):
    """Raised by exact division when the divisor does not divide the dividend."""


class NotUnivariateError(ValueError):
    """Raised when a univariate-only operation receives multivariate input."""


def grlex_key(exponents: ExponentVector) -> tuple[int, ExponentVector]:
    """Sort key realising the graded lexicographic order (larger = leading)."""
    return (sum(exponents), exponents)


def monomial_divides(divisor: ExponentVector, dividend: ExponentVector) -> bool:
    return all(d <= e for d, e in zip(divisor, dividend))


class Polynomial:
    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Union[Mapping[ExponentVector, ScalarLike], Iterable[tuple[ExponentVector, ScalarLike]], None] = None,
    ) -> None:
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        clean: dict[ExponentVector, GaussianRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for exponents, coefficient in items:
            exponents = tuple(exponents)
            if len(exponents) != len(variables):
                raise ValueError(
                    f"exponent tuple {exponents!r} does not match variables {variables!r}"
                )
            if any(e < 0 or not isinstance(e, int) for e in exponents):
                raise ValueError(f"exponents must be nonnegative integers: {exponents!r}")
            coefficient = GaussianRational.coerce(coefficient)
            if coefficient.is_zero:
                continue
            existing = clean.get(exponents)
            total = coefficient if existing is None else existing + coefficient
            if total.is_zero:
                clean.pop(exponents, None)
            else:
                clean[exponents] = total
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Polynomial instances are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> Polynomial:
        return cls(variables)

    @classmethod
    def constant(cls, variables: Sequence[str], value: ScalarLike) -> Polynomial:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> Polynomial:
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(f"{name!r} is not one of {variables!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: ONE})

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exponents: Sequence[int], coefficient: ScalarLike = 1
    ) -> Polynomial:
        return cls(variables, {tuple(exponents): coefficient})

    # -- predicates and views --------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_constant(self) -> bool:
        zero_exps = (0,) * len(self.variables)
        return all(e == zero_exps for e in self.terms)

    def constant_value(self) -> GaussianRational:
        """The coefficient of the constant monomial (valid on any polynomial)."""
        return self.terms.get((0,) * len(self.variables), ZERO)

    def occurring_variables(self) -> tuple[str, ...]:
        used = [False] * len(self.variables)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, flag in zip(self.variables, used) if flag)

    def sorted_terms(self) -> list[tuple[ExponentVector, GaussianRational]]:
        """Terms in descending graded-lex order (deterministic iteration)."""
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> tuple[ExponentVector, GaussianRational]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def total_degree(self) -> Union[int, float]:
        if not self.terms:
            return MINUS_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> Union[int, float]:
        i = self._index(name)
        if not self.terms:
            return MINUS_INF
        return max(e[i] for e in self.terms)

    def coefficient(self, exponents: Sequence[int]) -> GaussianRational:
        return self.terms.get(tuple(exponents), ZERO)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} is not one of {self.variables!r}") from None

    def _check_same_ring(self, other: Polynomial) -> None:
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"polynomials live over different variables: {self.variables!r} vs {other.variables!r}"
            )

    # -- ring operations --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            value = GaussianRational.coerce(other)
            if value.is_zero:
                return self.is_zero
            return self.terms == {(0,) * len(self.variables): value}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]  # mutable mapping inside

    def __add__(self, other: Union[Polynomial, ScalarLike]) -> Polynomial:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            existing = merged.get(exps)
            total = c if existing is None else existing + c
            if total.is_zero:
                merged.pop(exps, None)
            else:
                merged[exps] = total
        return self._raw(self.variables, merged)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return self._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union[Polynomial, ScalarLike]) -> Polynomial:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: Union[Polynomial, ScalarLike]) -> Polynomial:
        if isinstance(other, (int, Fraction, GaussianRational)):
            value = GaussianRational.coerce(other)
            if value.is_zero:
                return Polynomial.zero(self.variables)
            return self._raw(self.variables, {e: c * value for e, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_ring(other)
        product: dict[ExponentVector, GaussianRational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                contribution = c1 * c2
                existing = product.get(exps)
                total = contribution if existing is None else existing + contribution
                if total.is_zero:
                    product.pop(exps, None)
                else:
                    product[exps] = total
        return self._raw(self.variables, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponents must be nonnegative integers")
        result = Polynomial.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[ExponentVector, GaussianRational]) -> Polynomial:
        """Internal fast constructor: `terms` must already be canonical."""
        p = cls.__new__(cls)
        object.__setattr__(p, "variables", variables)
        object.__setattr__(p, "terms", terms)
        return p

    # -- division ----------------------------------------------------------

    def div_rem(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Division with remainder by a single divisor under graded lex.

        Returns (q, r) with self = q*divisor + r and no term of r divisible
        by the leading monomial of the divisor.  The pair is unique for the
        fixed monomial order.
        """
        self._check_same_ring(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        lead_exps, lead_coeff = divisor.leading_term()
        lead_inv = lead_coeff.inverse()
        quotient: dict[ExponentVector, GaussianRational] = {}
        remainder: dict[ExponentVector, GaussianRational] = {}
        work = dict(self.terms)
        while work:
            exps = max(work, key=grlex_key)
            coeff = work.pop(exps)
            if monomial_divides(lead_exps, exps):
                factor_exps = tuple(a - b for a, b in zip(exps, lead_exps))
                factor_coeff = coeff * lead_inv
                quotient[factor_exps] = quotient.get(factor_exps, ZERO) + factor_coeff
                for d_exps, d_coeff in divisor.terms.items():
                    if d_exps == lead_exps:
                        continue
                    target = tuple(a + b for a, b in zip(factor_exps, d_exps))
                    updated = work.get(target, ZERO) - factor_coeff * d_coeff
                    if updated.is_zero:
                        work.pop(target, None)
                    else:
                        work[target] = updated
            else:
                remainder[exps] = coeff
        quotient = {e: c for e, c in quotient.items() if not c.is_zero}
        return self._raw(self.variables, quotient), self._raw(self.variables, remainder)

    def divide_exact(self, divisor: Polynomial) -> Polynomial:
        """Exact division; raises NotDivisibleError when a remainder is left."""
        quotient, remainder = self.div_rem(divisor)
        if not remainder.is_zero:
            raise NotDivisibleError(
                f"{self!r} is not divisible by {divisor!r} (remainder {remainder!r})"
            )
        return quotient

    def divides(self, other: Polynomial) -> bool:
        if self.is_zero:
            return other.is_zero
        return other.div_rem(self)[1].is_zero

    # -- calculus and substitution ------------------------------------------

    def diff(self, name: str) -> Polynomial:
        """Formal partial derivative with respect to one variable."""
        i = self._index(name)
        out: dict[ExponentVector, GaussianRational] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if not e:
                continue
            lowered = exps[:i] + (e - 1,) + exps[i + 1 :]
            out[lowered] = out.get(lowered, ZERO) + coeff * e
        return self._raw(self.variables, {e: c for e, c in out.items() if not c.is_zero})

    def substitute(self, images: Mapping[str, Polynomial]) -> Polynomial:
        """Evaluate the polynomial at polynomial images of its variables.

        Every variable that actually occurs must have an image, and all
        images must live over one common target variable tuple.
        """
        occurring = self.occurring_variables()
        missing = [v for v in occurring if v not in images]
        if missing:
            raise UnknownVariableError(f"no image given for variable(s) {missing!r}")
        target: tuple[str, ...] | None = None
        for img in images.values():
            if target is None:
                target = img.variables
            elif img.variables != target:
                raise VariableMismatchError("substitution images live over different variables")
        if target is None:
            target = self.variables
        result = Polynomial.zero(target)
        power_cache: dict[tuple[str, int], Polynomial] = {}

        def power(name: str, e: int) -> Polynomial:
            key = (name, e)
            if key not in power_cache:
                power_cache[key] = images[name] ** e
            return power_cache[key]

        for exps, coeff in self.sorted_terms():
            term = Polynomial.constant(target, coeff)
            for name, e in zip(self.variables, exps):
                if e:
                    term = term * power(name, e)
            result = result + term
        return result

    # -- weighted degrees -----------------------------------------------------

    def weighted_degree(self, weights: WeightVector) -> Union[int, float]:
        """Max over terms of the weight inner product; MINUS_INF for zero."""
        weights = self._check_weights(weights)
        if not self.terms:
            return MINUS_INF
        return max(sum(w * e for w, e in zip(weights, exps)) for exps in self.terms)

    def top_part(self, weights: WeightVector) -> Polynomial:
        """Sum of the terms attaining the weighted degree (input must be nonzero)."""
        weights = self._check_weights(weights)
        if not self.terms:
            raise ValueError("top_part of the zero polynomial is undefined")
        degree = self.weighted_degree(weights)
        kept = {
            exps: coeff
            for exps, coeff in self.terms.items()
            if sum(w * e for w, e in zip(weights, exps)) == degree
        }
        return self._raw(self.variables, kept)

    def _check_weights(self, weights: WeightVector) -> tuple[int, ...]:
        weights = tuple(weights)
        if len(weights) != len(self.variables):
            raise ValueError(
                f"weight vector {weights!r} does not match variables {self.variables!r}"
            )
        if any(not isinstance(w, int) for w in weights):
            raise ValueError("weights must be integers")
        return weights

    # -- univariate helpers ----------------------------------------------------

    def univariate_profile(self) -> tuple[Union[str, None], list[GaussianRational]]:
        """Return (active variable or None, dense ascending coefficient list).

        Raises NotUnivariateError when two or more variables occur.
        A constant reports variable None and a length-<=1 list.
        """
        occurring = self.occurring_variables()
        if len(occurring) > 1:
            raise NotUnivariateError(f"polynomial involves {occurring!r}; expected one variable")
        if not occurring:
            value = self.constant_value()
            return None, ([] if value.is_zero else [value])
        name = occurring[0]
        i = self._index(name)
        degree = max(e[i] for e in self.terms)
        coeffs = [ZERO] * (degree + 1)
        for exps, coeff in self.terms.items():
            coeffs[exps[i]] = coeff
        return name, coeffs

    # -- display ---------------------------------------------------------------

    def __repr__(self) -> str:
        if self.is_zero:
            return f"Polynomial({self.variables!r}, 0)"
        bits = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.variables, exps) if e
            )
            bits.append(f"({coeff}){('*' + mono) if mono else ''}")
        return f"Polynomial({self.variables!r}, {' + '.join(bits)})"


def gens(*names: str) -> tuple[Polynomial, ...]:
    """Generators of a polynomial ring: ``x, y = gens("X", "Y")``."""
    return tuple(Polynomial.variable(names, n) for n in names)


def _univariate_pair(p: Polynomial, q: Polynomial) -> tuple[list[GaussianRational], list[GaussianRational]]:
    if p.variables != q.variables:
        raise VariableMismatchError("gcd arguments live over different variables")
    var_p, coeffs_p = p.univariate_profile()
    var_q, coeffs_q = q.univariate_profile()
    if var_p is not None and var_q is not None and var_p != var_q:
        raise NotUnivariateError(
            f"gcd arguments use different variables: {var_p!r} vs {var_q!r}"
        )
    return coeffs_p, coeffs_q


def _trim(coeffs: list[GaussianRational]) -> list[GaussianRational]:
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return coeffs


def _mod(a: list[GaussianRational], b: list[GaussianRational]) -> list[GaussianRational]:
    """Remainder of dense univariate division (b nonzero)."""
    a = list(a)
    lead_inv = b[-1].inverse()
    while len(a) >= len(b):
        factor = a[-1] * lead_inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - factor * c
        _trim(a)
        if not a:
            break
    return a


def gcd_univariate(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd of two univariate polynomials over Q(i).

    gcd(0, q) is the monic normalisation of q; gcd(0, 0) is 0.  Nonzero
    constants behave as units, so any gcd involving one is 1.
    """
    coeffs_p, coeffs_q = _univariate_pair(p, q)
    a, b = list(coeffs_p), list(coeffs_q)
    while b:
        # Renormalizing each remainder to monic keeps the coefficient sizes
        # of the remainder sequence polynomial instead of exponential; the
        # gcd is only defined up to units, so the result is unchanged.
        lead_inv = b[-1].inverse()
        b = [c * lead_inv for c in b]
        a, b = b, _mod(a, b)
    if not a:
        return Polynomial.zero(p.variables)
    lead_inv = a[-1].inverse()
    monic = [c * lead_inv for c in a]
    var = (p.occurring_variables() or q.occurring_variables() or (None,))[0]
    if var is None or len(monic) == 1:
        return Polynomial.constant(p.variables, monic[-1] if len(monic) == 1 else 1)
    i = p.variables.index(var)
    terms = {}
    for e, c in enumerate(monic):
        if not c.is_zero:
            exps = tuple(e if j == i else 0 for j in range(len(p.variables)))
            terms[exps] = c
    return Polynomial(p.variables, terms)
