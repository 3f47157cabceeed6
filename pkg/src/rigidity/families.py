"""Hypersurface family recognition and the rigidity verdict table.

The entry points are :func:`recognize_family`, which pattern-matches a
relation against the supported hypersurface families (up to variable
permutation and nonzero term coefficients), and :func:`classify`, which maps
a descriptor to a :class:`Verdict` via a fixed rule table.

Every NotRigid verdict ships with a machine-checked witness: the catalog
derivation is rebuilt on the actual presentation, validated as well-defined
and nonzero, and certified nilpotent by iteration before the verdict is
returned.  A verdict of Unknown is deliberate: the rule table never
extrapolates beyond the results it encodes, and the open exponent patterns
must stay open.

Citations are stable strings (golden-tested); rigidity citations name the
theorem tag that justifies the rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Mapping, Optional, Sequence, Union

from .derivation import (
    DEFAULT_PROBE_BOUND,
    Derivation,
    NilpotencyReport,
    make_derivation,
    probe_nilpotency,
)
from .gauss import GaussianRational, ONE, ScalarLike
from .mason import OBSTRUCTED, check_fermat_sum, check_mini_mason
from .poly import Polynomial
from .quotient import RingPresentation

THREE_TERM_XY = "ThreeTermXY"
FERMAT_3 = "Fermat3"
MIXED_FOUR = "MixedFour"
FERMAT_N = "FermatN"
DANIELEWSKI_LIKE = "DanielewskiLike"
UNRECOGNIZED = "Unrecognized"

RIGID = "Rigid"
NOT_RIGID = "NotRigid"
UNKNOWN = "Unknown"
OUT_OF_SCOPE = "OutOfScope"

# Citation strings are part of the public surface; golden tests freeze them.
CITE_CASE1 = (
    "Theorem case1: X^a*Y^b - Z^c with a, b, c >= 2 defines a rigid ring"
)
CITE_KALZAI = (
    "Theorem KalZai: X^a + Y^b + Z^c with a >= 2 and b, c >= 3 defines a rigid ring"
)
CITE_ABCD = (
    "Theorem abcdTHM: X^a*Y^b + Z^c + T^d defines a rigid ring away from the"
    " exceptional exponent patterns"
)
CITE_LEFTOVER = (
    "Remark Leftover: rigidity is open for the patterns X^(6k)*Y^3 + Z^2 + T^4"
    " and X^(6k)*Y^2 + Z^3 + T^3"
)
CITE_CB4 = (
    "Theorem CB4: rigid when gcd(a*b, c) = gcd(a*b*c, d) = 1 and gcd(a, b) is"
    " neither a nor b"
)
CITE_EX1 = (
    "Lemma EX1: rigid when every exponent is >= 2, the exponents have gcd 1,"
    " and the reciprocal sum is at most 1/(n-2)"
)
CITE_EX2T = (
    "Theorem EX2t: X^d*Y + Z^d*P(Y) with P(0) != 0, d >= 2 and"
    " deg(P) <= (d-1)^2 defines a rigid ring"
)
CITE_MINIMASON = (
    "Lemma MiniMason: a monomial tail yields the unit equation"
    " F^d + c*H^(d+e) = 1, which admits no nonconstant solutions"
)
CITE_FREE_COORDINATE = "explicit witness: translation along a free coordinate"
CITE_TRIANGULAR = "explicit witness: triangular derivation for an exponent-1 slot"
CITE_TWO_SQUARES = (
    "derived witness: two quadratic slots factor as X*Y after a linear change"
    " of variables"
)
CITE_ZT_PRODUCT = (
    "derived witness: Z^2 + T^2 factors as Z*T after a linear change of"
    " variables"
)
CITE_EVEN_TWIST = (
    "explicit witness: imaginary-unit twist for the pattern"
    " X^(2m)*Y^2 + Z^2 + T^d"
)
CITE_DEGENERATE = "degenerate relation: the quotient is a full polynomial ring"
CITE_OPEN = "open case: no catalog rule applies"
CITE_OUT_OF_SCOPE = "outside the catalog"


class InternalInvariantError(RuntimeError):
    """A verdict-table invariant failed; the toolkit itself is at fault."""


@dataclass(frozen=True)
class FamilyDescriptor:
    """A recognized relation, canonicalized for rule evaluation.

    ``roles`` lists the ambient variables in family order (for instance
    ``(x, y, z)`` for the three-term family), ``coefficients`` the nonzero
    scalar on each canonical term, and ``relation`` the defining polynomial
    (None only for the fully degenerate all-zero exponent tuple, which has no
    presentable relation).  DanielewskiLike descriptors carry the tail
    polynomial P as an ascending coefficient tuple when the tail is strict.
    """

    kind: str
    exponents: tuple[int, ...]
    variables: tuple[str, ...]
    roles: tuple[str, ...]
    coefficients: tuple[GaussianRational, ...]
    relation: Optional[Polynomial]
    tail: Optional[tuple[GaussianRational, ...]] = None
    strict_tail: bool = True
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Verdict:
    status: str
    citation: str
    witness: Optional[Derivation]
    notes: tuple[str, ...]
    witness_report: Optional[NilpotencyReport] = None


# --------------------------------------------------------------------------
# descriptor constructors (used by tests and the exhaustive table checks)
# --------------------------------------------------------------------------


def _coerce_coeffs(values: Sequence[ScalarLike]) -> tuple[GaussianRational, ...]:
    coeffs = tuple(GaussianRational.coerce(v) for v in values)
    if any(c.is_zero for c in coeffs):
        raise ValueError("family term coefficients must be nonzero")
    return coeffs


def _mono(
    variables: Sequence[str], coefficient: ScalarLike, powers: Mapping[str, int]
) -> Polynomial:
    exps = tuple(powers.get(v, 0) for v in variables)
    return Polynomial.monomial(variables, exps, coefficient)


def _check_exponents(exponents: Sequence[int], minimum: int) -> tuple[int, ...]:
    exps = tuple(exponents)
    if any(not isinstance(e, int) or e < minimum for e in exps):
        raise ValueError(f"exponents must be integers >= {minimum}: {exps!r}")
    return exps


def three_term_xy(
    a: int,
    b: int,
    c: int,
    variables: Sequence[str] = ("X", "Y", "Z"),
    coefficients: Sequence[ScalarLike] = (1, -1),
) -> FamilyDescriptor:
    """Descriptor for alpha*X^a*Y^b + beta*Z^c (exponents may be 0)."""
    exps = _check_exponents((a, b, c), 0)
    variables = tuple(variables)
    if len(variables) != 3:
        raise ValueError("the three-term family lives in three variables")
    alpha, beta = _coerce_coeffs(coefficients)
    x, y, z = variables
    relation = _mono(variables, alpha, {x: a, y: b}) + _mono(variables, beta, {z: c})
    if relation.is_zero or relation.is_constant:
        relation = None
    return FamilyDescriptor(
        kind=THREE_TERM_XY,
        exponents=exps,
        variables=variables,
        roles=variables,
        coefficients=(alpha, beta),
        relation=relation,
    )


def fermat_3(
    a: int,
    b: int,
    c: int,
    variables: Sequence[str] = ("X", "Y", "Z"),
    coefficients: Sequence[ScalarLike] = (1, 1, 1),
) -> FamilyDescriptor:
    """Descriptor for a sum of three pure powers; exponents get sorted."""
    variables = tuple(variables)
    if len(variables) != 3:
        raise ValueError("the three-power family lives in three variables")
    exps = _check_exponents((a, b, c), 1)
    coeffs = _coerce_coeffs(coefficients)
    order = sorted(range(3), key=lambda i: (exps[i], i))
    roles = tuple(variables[i] for i in order)
    exps = tuple(exps[i] for i in order)
    coeffs = tuple(coeffs[i] for i in order)
    relation = Polynomial.zero(variables)
    for v, e, cf in zip(roles, exps, coeffs):
        relation = relation + _mono(variables, cf, {v: e})
    notes = ()
    if order != [0, 1, 2]:
        notes = ("slots reordered so the exponents ascend",)
    return FamilyDescriptor(
        kind=FERMAT_3,
        exponents=exps,
        variables=variables,
        roles=roles,
        coefficients=coeffs,
        relation=relation,
        notes=notes,
    )


def mixed_four(
    a: int,
    b: int,
    c: int,
    d: int,
    variables: Sequence[str] = ("X", "Y", "Z", "T"),
    coefficients: Sequence[ScalarLike] = (1, 1, 1),
) -> FamilyDescriptor:
    """Descriptor for alpha*X^a*Y^b + beta*Z^c + gamma*T^d, canonicalized
    so that a >= b and c <= d."""
    variables = tuple(variables)
    if len(variables) != 4:
        raise ValueError("the mixed four-variable family lives in four variables")
    exps = _check_exponents((a, b, c, d), 1)
    alpha, beta, gamma = _coerce_coeffs(coefficients)
    x, y, z, t = variables
    notes: list[str] = []
    a, b, c, d = exps
    if a < b:
        a, b, x, y = b, a, y, x
        notes.append("first and second slots swapped so a >= b")
    if c > d:
        c, d, z, t = d, c, t, z
        beta, gamma = gamma, beta
        notes.append("third and fourth slots swapped so c <= d")
    relation = (
        _mono(variables, alpha, {x: a, y: b})
        + _mono(variables, beta, {z: c})
        + _mono(variables, gamma, {t: d})
    )
    return FamilyDescriptor(
        kind=MIXED_FOUR,
        exponents=(a, b, c, d),
        variables=variables,
        roles=(x, y, z, t),
        coefficients=(alpha, beta, gamma),
        relation=relation,
        notes=tuple(notes),
    )


def fermat_n(
    exponents: Sequence[int],
    variables: Optional[Sequence[str]] = None,
    coefficients: Optional[Sequence[ScalarLike]] = None,
) -> FamilyDescriptor:
    """Descriptor for a sum of n >= 4 pure powers, one per variable."""
    exps = _check_exponents(exponents, 1)
    n = len(exps)
    if n < 4:
        raise ValueError("the n-power family needs at least four variables")
    if variables is None:
        variables = tuple(f"X{i + 1}" for i in range(n)) if n > 4 else ("X", "Y", "Z", "T")
    variables = tuple(variables)
    if len(variables) != n:
        raise ValueError("one variable per exponent")
    coeffs = _coerce_coeffs(coefficients if coefficients is not None else (1,) * n)
    if len(coeffs) != n:
        raise ValueError("one coefficient per exponent")
    relation = Polynomial.zero(variables)
    for v, e, cf in zip(variables, exps, coeffs):
        relation = relation + _mono(variables, cf, {v: e})
    return FamilyDescriptor(
        kind=FERMAT_N,
        exponents=exps,
        variables=variables,
        roles=variables,
        coefficients=coeffs,
        relation=relation,
    )


def danielewski_like(
    d: int,
    p_coefficients: Sequence[ScalarLike],
    variables: Sequence[str] = ("X", "Y", "Z"),
    head_coefficient: ScalarLike = 1,
) -> FamilyDescriptor:
    """Descriptor for X^d*Y + Z^d*P(Y); ``p_coefficients`` ascend from P(0)."""
    variables = tuple(variables)
    if len(variables) != 3:
        raise ValueError("the Danielewski-like family lives in three variables")
    if not isinstance(d, int) or d < 1:
        raise ValueError("the head exponent d must be a positive integer")
    p_coeffs = tuple(GaussianRational.coerce(v) for v in p_coefficients)
    while p_coeffs and p_coeffs[-1].is_zero:
        p_coeffs = p_coeffs[:-1]
    if len(p_coeffs) < 2:
        raise ValueError(
            "the tail P must be nonconstant (a constant tail is a two-term relation)"
        )
    head = GaussianRational.coerce(head_coefficient)
    if head.is_zero:
        raise ValueError("the head coefficient must be nonzero")
    x, y, z = variables
    relation = _mono(variables, head, {x: d, y: 1})
    for k, cf in enumerate(p_coeffs):
        if not cf.is_zero:
            relation = relation + _mono(variables, cf, {z: d, y: k})
    return FamilyDescriptor(
        kind=DANIELEWSKI_LIKE,
        exponents=(d,),
        variables=variables,
        roles=variables,
        coefficients=(head,),
        relation=relation,
        tail=p_coeffs,
    )


def unrecognized(f: Polynomial, reason: str) -> FamilyDescriptor:
    return FamilyDescriptor(
        kind=UNRECOGNIZED,
        exponents=(),
        variables=f.variables,
        roles=(),
        coefficients=(),
        relation=f,
        notes=(reason,),
    )


# --------------------------------------------------------------------------
# recognition
# --------------------------------------------------------------------------


def recognize_family(f: Polynomial) -> FamilyDescriptor:
    """Match a relation against the catalog families.

    Matching is up to variable permutation and nonzero term coefficients;
    the descriptor records the normalization in its notes.  Anything else
    comes back Unrecognized.
    """
    if f.is_zero or f.is_constant:
        raise ValueError("family recognition needs a nonconstant relation")
    n = len(f.variables)
    found = None
    if n == 3:
        if len(f.terms) == 2:
            found = _match_three_term(f)
        elif len(f.terms) >= 3:
            found = _match_pure_powers(f) or _match_danielewski(f)
    elif n == 4:
        if len(f.terms) == 3:
            found = _match_mixed_four(f)
        elif len(f.terms) == 4:
            found = _match_pure_powers(f)
    elif n >= 5:
        if len(f.terms) == n:
            found = _match_pure_powers(f)
    if found is not None:
        return found
    return unrecognized(f, "no catalog family matches the relation shape")


def _support(exps: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(exps) if e)


def _coefficient_note(coeffs: Sequence[GaussianRational], canonical: Sequence[ScalarLike]) -> list[str]:
    wanted = tuple(GaussianRational.coerce(v) for v in canonical)
    if tuple(coeffs) != wanted:
        shown = ", ".join(str(c) for c in coeffs)
        return [f"term coefficients ({shown}) absorbed by rescaling variables"]
    return []


def _match_three_term(f: Polynomial) -> Optional[FamilyDescriptor]:
    variables = f.variables
    items = f.sorted_terms()
    for head, other in ((items[0], items[1]), (items[1], items[0])):
        head_support = _support(head[0])
        if len(head_support) > 2:
            continue
        other_support = _support(other[0])
        for iz, z in enumerate(variables):
            if iz in head_support:
                continue
            if not set(other_support) <= {iz}:
                continue
            ix, iy = (i for i in range(3) if i != iz)
            a, b = head[0][ix], head[0][iy]
            c = other[0][iz]
            roles = (variables[ix], variables[iy], z)
            coeffs = (head[1], other[1])
            notes = _coefficient_note(coeffs, (1, -1))
            notes.append(
                f"roles x={roles[0]}, y={roles[1]}, z={roles[2]}"
            )
            return FamilyDescriptor(
                kind=THREE_TERM_XY,
                exponents=(a, b, c),
                variables=variables,
                roles=roles,
                coefficients=coeffs,
                relation=f,
                notes=tuple(notes),
            )
    return None


def _match_pure_powers(f: Polynomial) -> Optional[FamilyDescriptor]:
    variables = f.variables
    n = len(variables)
    if len(f.terms) != n:
        return None
    slot: dict[int, tuple[int, GaussianRational]] = {}
    for exps, coeff in f.terms.items():
        support = _support(exps)
        if len(support) != 1:
            return None
        (i,) = support
        if i in slot:
            return None
        slot[i] = (exps[i], coeff)
    if len(slot) != n:
        return None
    exps = tuple(slot[i][0] for i in range(n))
    coeffs = tuple(slot[i][1] for i in range(n))
    if n == 3:
        descriptor = fermat_3(*exps, variables=variables, coefficients=coeffs)
    else:
        descriptor = fermat_n(exps, variables=variables, coefficients=coeffs)
    notes = list(descriptor.notes) + _coefficient_note(coeffs, (1,) * n)
    return FamilyDescriptor(
        kind=descriptor.kind,
        exponents=descriptor.exponents,
        variables=descriptor.variables,
        roles=descriptor.roles,
        coefficients=descriptor.coefficients,
        relation=f,
        notes=tuple(notes),
    )


def _match_mixed_four(f: Polynomial) -> Optional[FamilyDescriptor]:
    variables = f.variables
    mixed = None
    pure: dict[int, tuple[int, GaussianRational]] = {}
    for exps, coeff in f.terms.items():
        support = _support(exps)
        if len(support) == 2 and mixed is None:
            mixed = (support, exps, coeff)
        elif len(support) == 1 and support[0] not in pure:
            pure[support[0]] = (exps[support[0]], coeff)
        else:
            return None
    if mixed is None or len(pure) != 2:
        return None
    (ix, iy), exps, alpha = mixed
    if set(pure) != set(range(4)) - {ix, iy}:
        return None
    iz, it = sorted(pure)
    descriptor = mixed_four(
        exps[ix],
        exps[iy],
        pure[iz][0],
        pure[it][0],
        variables=(variables[ix], variables[iy], variables[iz], variables[it]),
        coefficients=(alpha, pure[iz][1], pure[it][1]),
    )
    notes = list(descriptor.notes) + _coefficient_note(
        (alpha, pure[iz][1], pure[it][1]), (1, 1, 1)
    )
    return FamilyDescriptor(
        kind=MIXED_FOUR,
        exponents=descriptor.exponents,
        variables=variables,
        roles=descriptor.roles,
        coefficients=descriptor.coefficients,
        relation=f,
        notes=tuple(notes),
    )


def _match_danielewski(f: Polynomial) -> Optional[FamilyDescriptor]:
    variables = f.variables
    for ix, iy, iz in permutations(range(3)):
        heads = [item for item in f.terms.items() if item[0][ix]]
        if len(heads) != 1:
            continue
        (head_exps, head_coeff) = heads[0]
        d = head_exps[ix]
        if head_exps[iy] != 1 or head_exps[iz] != 0:
            continue
        tail = [item for item in f.terms.items() if not item[0][ix]]
        if not tail or any(exps[iz] < 1 for exps, _ in tail):
            continue
        if min(exps[iz] for exps, _ in tail) != d:
            continue
        strict = all(exps[iz] == d for exps, _ in tail)
        roles = (variables[ix], variables[iy], variables[iz])
        p_coeffs: Optional[tuple[GaussianRational, ...]] = None
        if strict:
            degree = max(exps[iy] for exps, _ in tail)
            dense = [GaussianRational(0)] * (degree + 1)
            for exps, coeff in tail:
                dense[exps[iy]] = coeff
            p_coeffs = tuple(dense)
        notes = _coefficient_note((head_coeff,), (1,))
        notes.append(f"roles x={roles[0]}, y={roles[1]}, z={roles[2]}")
        if not strict:
            notes.append("the tail mixes the y and z variables (loose tail)")
        return FamilyDescriptor(
            kind=DANIELEWSKI_LIKE,
            exponents=(d,),
            variables=variables,
            roles=roles,
            coefficients=(head_coeff,),
            relation=f,
            tail=p_coeffs,
            strict_tail=strict,
            notes=tuple(notes),
        )
    return None


# --------------------------------------------------------------------------
# the verdict table
# --------------------------------------------------------------------------


def classify(descriptor: FamilyDescriptor) -> Verdict:
    """Rigidity verdict for a recognized relation.

    NotRigid verdicts carry a validated witness (or notes explaining why no
    witness is expressible over Q(i)); Rigid verdicts cite the justifying
    theorem; Unknown marks the open exponent patterns.
    """
    if descriptor.kind == THREE_TERM_XY:
        return _classify_three_term(descriptor)
    if descriptor.kind == FERMAT_3:
        return _classify_fermat_3(descriptor)
    if descriptor.kind == MIXED_FOUR:
        return _classify_mixed_four(descriptor)
    if descriptor.kind == FERMAT_N:
        return _classify_fermat_n(descriptor)
    if descriptor.kind == DANIELEWSKI_LIKE:
        return _classify_danielewski(descriptor)
    if descriptor.kind == UNRECOGNIZED:
        return Verdict(
            status=OUT_OF_SCOPE,
            citation=CITE_OUT_OF_SCOPE,
            witness=None,
            notes=descriptor.notes or ("unrecognized relation shape",),
        )
    raise ValueError(f"unknown family kind {descriptor.kind!r}")


def witness_for(descriptor: FamilyDescriptor) -> Derivation:
    """The catalog witness for a NotRigid descriptor, validated and certified.

    Raises ValueError when the descriptor is not a NotRigid case, or when the
    catalog witness is not expressible over Q(i) for these coefficients.
    """
    verdict = classify(descriptor)
    if verdict.status != NOT_RIGID:
        raise ValueError(f"not a NotRigid case (verdict {verdict.status})")
    if verdict.witness is None:
        raise ValueError("; ".join(verdict.notes) or "no witness available")
    return verdict.witness


def _verdict_with_witness(
    descriptor: FamilyDescriptor,
    citation: str,
    images: Optional[Mapping[str, Polynomial]],
    rule_notes: Sequence[str],
) -> Verdict:
    notes = tuple(descriptor.notes) + tuple(rule_notes)
    if images is None:
        return Verdict(status=NOT_RIGID, citation=citation, witness=None, notes=notes)
    if descriptor.relation is None:
        raise InternalInvariantError("witness requested for an unpresentable relation")
    presentation = RingPresentation(descriptor.variables, descriptor.relation)
    image_list = [
        images.get(v, Polynomial.zero(descriptor.variables))
        for v in descriptor.variables
    ]
    witness = make_derivation(presentation, image_list)
    if witness.is_zero:
        raise InternalInvariantError("catalog witness is the zero derivation")
    bound = max(DEFAULT_PROBE_BOUND, max(descriptor.exponents, default=0) + 2)
    report = probe_nilpotency(witness, bound=bound)
    if not report.certified:
        raise InternalInvariantError(
            f"catalog witness failed nilpotency certification: {report.detail}"
        )
    return Verdict(
        status=NOT_RIGID,
        citation=citation,
        witness=witness,
        notes=notes,
        witness_report=report,
    )


def _classify_three_term(d: FamilyDescriptor) -> Verdict:
    a, b, c = d.exponents
    variables = d.variables
    x, y, z = d.roles
    alpha, beta = d.coefficients
    if d.relation is None:
        return Verdict(
            status=NOT_RIGID,
            citation=CITE_DEGENERATE,
            witness=None,
            notes=tuple(d.notes)
            + (
                "all exponents are zero, so the relation collapses to a constant;"
                " the quotient is a full polynomial ring and every coordinate"
                " derivation is a nonzero locally nilpotent derivation, but no"
                " presentation exists to attach a witness to",
            ),
        )
    if 0 in d.exponents:
        free = [role for role, e in zip(d.roles, d.exponents) if e == 0]
        images = {free[0]: Polynomial.constant(variables, 1)}
        return _verdict_with_witness(
            d,
            CITE_FREE_COORDINATE,
            images,
            (f"exponent 0 leaves {free[0]} out of the relation",),
        )
    if a == 1:
        images = {
            x: _mono(variables, -(beta * c), {z: c - 1}),
            z: _mono(variables, alpha, {y: b}),
        }
        return _verdict_with_witness(d, CITE_TRIANGULAR, images, ("a = 1",))
    if b == 1:
        images = {
            y: _mono(variables, -(beta * c), {z: c - 1}),
            z: _mono(variables, alpha, {x: a}),
        }
        return _verdict_with_witness(d, CITE_TRIANGULAR, images, ("b = 1",))
    if c == 1:
        images = {
            x: Polynomial.constant(variables, 1),
            z: _mono(variables, -(alpha * a) / beta, {x: a - 1, y: b}),
        }
        return _verdict_with_witness(d, CITE_TRIANGULAR, images, ("c = 1",))
    notes = []
    g = gcd(gcd(a, b), c)
    if g > 1:
        notes.append(
            f"exponent gcd {g} > 1: the hypersurface is not a domain, and the"
            " same theorem covers it"
        )
    return Verdict(
        status=RIGID, citation=CITE_CASE1, witness=None, notes=tuple(d.notes) + tuple(notes)
    )


def _classify_fermat_3(d: FamilyDescriptor) -> Verdict:
    a, b, c = d.exponents
    variables = d.variables
    x, y, z = d.roles
    alpha, beta, gamma = d.coefficients
    if a == 1:
        images = {
            y: Polynomial.constant(variables, 1),
            x: _mono(variables, -(beta * b) / alpha, {y: b - 1}),
        }
        return _verdict_with_witness(
            d, CITE_TRIANGULAR, images, ("smallest exponent is 1",)
        )
    if a == 2 and b == 2:
        if alpha == beta:
            scale = (gamma * c) / (alpha * 2)
            images = {
                x: _mono(variables, -scale, {z: c - 1}),
                y: _mono(variables, -scale * GaussianRational(0, 1), {z: c - 1}),
                z: Polynomial.variable(variables, x)
                + _mono(variables, GaussianRational(0, 1), {y: 1}),
            }
            return _verdict_with_witness(
                d, CITE_TWO_SQUARES, images, ("two smallest exponents are 2",)
            )
        return _verdict_with_witness(
            d,
            CITE_TWO_SQUARES,
            None,
            (
                "two smallest exponents are 2, but the catalog witness needs a"
                f" square root of the coefficient ratio {beta / alpha}, which is"
                " not available in Q(i) in general",
            ),
        )
    return Verdict(status=RIGID, citation=CITE_KALZAI, witness=None, notes=d.notes)


def _leftover_pattern(a: int, b: int, c: int, d: int) -> bool:
    if a % 6 != 0:
        return False
    if b == 3 and (c, d) == (2, 4):
        return True
    return b == 2 and c == 3 and d == 3


def _classify_mixed_four(desc: FamilyDescriptor) -> Verdict:
    a, b, c, d = desc.exponents
    variables = desc.variables
    x, y, z, t = desc.roles
    alpha, beta, gamma = desc.coefficients
    if b == 1:
        images = {
            y: _mono(variables, beta * c, {z: c - 1}),
            z: _mono(variables, -alpha, {x: a}),
        }
        return _verdict_with_witness(desc, CITE_TRIANGULAR, images, ("b = 1",))
    if c == 1:
        images = {
            t: Polynomial.constant(variables, 1),
            z: _mono(variables, -(gamma * d) / beta, {t: d - 1}),
        }
        return _verdict_with_witness(desc, CITE_TRIANGULAR, images, ("c = 1",))
    if c == 2 and d == 2:
        if beta == gamma:
            scale = (alpha * b) / (beta * 2)
            images = {
                y: Polynomial.variable(variables, z)
                + _mono(variables, GaussianRational(0, -1), {t: 1}),
                z: _mono(variables, -scale, {x: a, y: b - 1}),
                t: _mono(variables, scale * GaussianRational(0, 1), {x: a, y: b - 1}),
            }
            return _verdict_with_witness(
                desc, CITE_ZT_PRODUCT, images, ("c = d = 2",)
            )
        return _verdict_with_witness(
            desc,
            CITE_ZT_PRODUCT,
            None,
            (
                "c = d = 2, but the catalog witness needs a square root of the"
                f" coefficient ratio {gamma / beta}, which is not available in"
                " Q(i) in general",
            ),
        )
    if b == 2 and (c == 2 or d == 2) and a % 2 == 0:
        # After canonicalization c <= d, the exponent-2 pure slot is z.
        if alpha == beta:
            half = a // 2
            images = {
                y: _mono(variables, gamma * d, {t: d - 1}),
                z: _mono(variables, gamma * d * GaussianRational(0, -1), {x: half, t: d - 1}),
                t: _mono(variables, alpha * (-2), {x: a, y: 1})
                + _mono(variables, alpha * GaussianRational(0, 2), {x: half, z: 1}),
            }
            return _verdict_with_witness(
                desc,
                CITE_EVEN_TWIST,
                images,
                (f"b = 2, c = 2 and a = {a} is even",),
            )
        return _verdict_with_witness(
            desc,
            CITE_EVEN_TWIST,
            None,
            (
                "b = 2 with an even a, but the catalog witness needs a square"
                f" root of the coefficient ratio {beta / alpha}, which is not"
                " available in Q(i) in general",
            ),
        )
    if _leftover_pattern(a, b, c, d):
        return Verdict(
            status=UNKNOWN,
            citation=CITE_LEFTOVER,
            witness=None,
            notes=tuple(desc.notes) + ("open exceptional pattern",),
        )
    return Verdict(status=RIGID, citation=CITE_ABCD, witness=None, notes=desc.notes)


def _cb4_ordering(ds: Sequence[int]) -> Optional[tuple[int, ...]]:
    for perm in permutations(range(4)):
        a, b, c, d = (ds[i] for i in perm)
        if gcd(a * b, c) == 1 and gcd(a * b * c, d) == 1 and gcd(a, b) not in (a, b):
            return perm
    return None


def _classify_fermat_n(desc: FamilyDescriptor) -> Verdict:
    ds = desc.exponents
    n = len(ds)
    variables = desc.variables
    roles = desc.roles
    coeffs = desc.coefficients
    if 1 in ds:
        j = ds.index(1)
        k = min((i for i in range(n) if i != j), key=lambda i: (ds[i], i))
        images = {
            roles[k]: Polynomial.constant(variables, 1),
            roles[j]: _mono(
                variables, -(coeffs[k] * ds[k]) / coeffs[j], {roles[k]: ds[k] - 1}
            ),
        }
        return _verdict_with_witness(
            desc, CITE_TRIANGULAR, images, (f"exponent 1 in slot {j + 1}",)
        )
    squares = [i for i, e in enumerate(ds) if e == 2]
    if len(squares) >= 2:
        j, k = squares[:2]
        rule_note = f"two exponents equal 2 (slots {j + 1} and {k + 1})"
        if coeffs[j] == coeffs[k]:
            m = min(
                (i for i in range(n) if i not in (j, k)), key=lambda i: (ds[i], i)
            )
            scale = (coeffs[m] * ds[m]) / (coeffs[j] * 2)
            images = {
                roles[j]: _mono(variables, -scale, {roles[m]: ds[m] - 1}),
                roles[k]: _mono(
                    variables, -scale * GaussianRational(0, 1), {roles[m]: ds[m] - 1}
                ),
                roles[m]: Polynomial.variable(variables, roles[j])
                + _mono(variables, GaussianRational(0, 1), {roles[k]: 1}),
            }
            return _verdict_with_witness(
                desc, CITE_TWO_SQUARES, images, (rule_note,)
            )
        return _verdict_with_witness(
            desc,
            CITE_TWO_SQUARES,
            None,
            (
                rule_note + ", but the catalog witness needs a square root of"
                f" the coefficient ratio {coeffs[k] / coeffs[j]}, which is not"
                " available in Q(i) in general",
            ),
        )
    trace: list[str] = []
    if n == 4:
        perm = _cb4_ordering(ds)
        if perm is not None:
            a, b, c, d = (ds[i] for i in perm)
            return Verdict(
                status=RIGID,
                citation=CITE_CB4,
                witness=None,
                notes=tuple(desc.notes)
                + (
                    f"ordering (a,b,c,d) = ({a},{b},{c},{d}) satisfies"
                    f" gcd({a * b},{c}) = gcd({a * b * c},{d}) = 1 and"
                    f" gcd({a},{b}) = {gcd(a, b)}",
                ),
            )
        trace.append("CB4: no ordering satisfies the gcd conditions")
    sum_rule = check_fermat_sum(list(ds))
    if sum_rule.status == OBSTRUCTED:
        return Verdict(
            status=RIGID,
            citation=CITE_EX1,
            witness=None,
            notes=tuple(desc.notes) + (f"EX1: {sum_rule.detail}",),
        )
    trace.append(f"EX1: {sum_rule.detail}")
    return Verdict(
        status=UNKNOWN,
        citation=CITE_OPEN,
        witness=None,
        notes=tuple(desc.notes) + tuple(trace),
    )


def _classify_danielewski(desc: FamilyDescriptor) -> Verdict:
    (d,) = desc.exponents
    if not desc.strict_tail or desc.tail is None:
        return Verdict(
            status=UNKNOWN,
            citation=CITE_OPEN,
            witness=None,
            notes=tuple(desc.notes)
            + ("the tail is not a polynomial in y alone, so no catalog rule applies",),
        )
    p = desc.tail
    if p[0].is_zero:
        return Verdict(
            status=OUT_OF_SCOPE,
            citation=CITE_OUT_OF_SCOPE,
            witness=None,
            notes=tuple(desc.notes)
            + ("P(0) = 0 breaks the family's defining hypothesis",),
        )
    deg_p = len(p) - 1
    if d >= 2 and deg_p <= (d - 1) ** 2:
        return Verdict(
            status=RIGID,
            citation=CITE_EX2T,
            witness=None,
            notes=tuple(desc.notes) + (f"deg(P) = {deg_p} <= (d-1)^2 = {(d - 1) ** 2}",),
        )
    # P = y*Q(y) + P(0); a monomial Q = c*y^e turns the unit equation into
    # F^d + c*H^(d+e) = 1, settled by the two-power rule.
    q = p[1:]
    monomial_slots = [e for e, cf in enumerate(q) if not cf.is_zero]
    if len(monomial_slots) == 1:
        e = monomial_slots[0]
        if e >= 2:
            rule = check_mini_mason(d, d + e)
            if rule.status == OBSTRUCTED:
                return Verdict(
                    status=RIGID,
                    citation=CITE_MINIMASON,
                    witness=None,
                    notes=tuple(desc.notes)
                    + (f"tail Q = c*y^{e}: {rule.detail}",),
                )
    return Verdict(
        status=UNKNOWN,
        citation=CITE_OPEN,
        witness=None,
        notes=tuple(desc.notes)
        + (
            f"deg(P) = {deg_p} exceeds (d-1)^2 = {(d - 1) ** 2} and the tail is"
            " not a monomial obstruction",
        ),
    )
