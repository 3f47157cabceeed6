from fractions import Fraction
from itertools import permutations
from math import gcd

import pytest

from rigidity import (
    FamilyDescriptor,
    Polynomial,
    classify,
    danielewski_like,
    fermat_3,
    fermat_n,
    gens,
    mixed_four,
    parse_poly,
    probe_nilpotency,
    recognize_family,
    three_term_xy,
    witness_for,
)
from rigidity.gauss import gq


def assert_sound_witness(verdict, max_steps=None):
    """Every emitted witness must be independently re-certifiable."""
    assert verdict.status == "NotRigid"
    w = verdict.witness
    assert w is not None, verdict.notes
    assert not w.is_zero
    report = probe_nilpotency(w, bound=64)
    assert report.certified, report.detail
    if max_steps is not None:
        assert max(report.steps_per_generator) <= max_steps


# ---------------------------------------------------------------------------
# recognition
# ---------------------------------------------------------------------------


def test_recognize_three_term():
    d = recognize_family(parse_poly("X^2*Y^3 - Z^5", ("X", "Y", "Z")))
    assert d.kind == "ThreeTermXY"
    assert d.exponents == (2, 3, 5)
    assert d.roles == ("X", "Y", "Z")


def test_recognize_three_term_permuted_roles():
    d = recognize_family(parse_poly("Y^4 - X^2*Z^3", ("X", "Y", "Z")))
    assert d.kind == "ThreeTermXY"
    # the product term takes the (x, y) roles regardless of position
    assert d.exponents == (2, 3, 4)
    assert d.roles == ("X", "Z", "Y")


def test_recognize_pure_powers_with_coefficients():
    f = parse_poly("2*X^3 + 5*Y^4 + Z^5 + T^6", ("X", "Y", "Z", "T"))
    d = recognize_family(f)
    assert d.kind == "FermatN"
    assert d.exponents == (3, 4, 5, 6)
    assert any("absorbed by rescaling" in note for note in d.notes)


def test_recognize_fermat3_sorts_exponents():
    d = recognize_family(parse_poly("X^5 + Y^2 + Z^3", ("X", "Y", "Z")))
    assert d.kind == "Fermat3"
    assert d.exponents == (2, 3, 5)
    assert d.roles == ("Y", "Z", "X")
    assert any("reordered" in note for note in d.notes)


def test_recognize_mixed_four_canonicalizes():
    d = recognize_family(parse_poly("X^2*Y^6 + Z^4 + T^3", ("X", "Y", "Z", "T")))
    assert d.kind == "MixedFour"
    assert d.exponents == (6, 2, 3, 4)
    assert d.roles == ("Y", "X", "T", "Z")


def test_recognize_danielewski():
    f = parse_poly("X^3*Y + Z^3 + Z^3*Y", ("X", "Y", "Z"))
    d = recognize_family(f)
    assert d.kind == "DanielewskiLike"
    assert d.exponents == (3,)
    assert d.strict_tail
    assert d.tail == (gq(1), gq(1))


def test_recognize_danielewski_quartic_open_case():
    f = parse_poly("X^3*Y + Z^3*Y + Z^4", ("X", "Y", "Z"))
    d = recognize_family(f)
    assert d.kind == "DanielewskiLike"
    assert not d.strict_tail
    assert d.tail is None


def test_recognize_unmatched_shapes():
    X, Y = gens("X", "Y")
    d = recognize_family(X**2 + X * Y)
    assert d.kind == "Unrecognized"
    with pytest.raises(ValueError):
        recognize_family(Polynomial.constant(("X",), 5))


def test_recognize_five_variable_powers():
    f = parse_poly(
        "X1^2 + X2^4 + X3^4 + X4^4 + X5^4", tuple(f"X{i}" for i in range(1, 6))
    )
    d = recognize_family(f)
    assert d.kind == "FermatN"
    assert d.exponents == (2, 4, 4, 4, 4)


# ---------------------------------------------------------------------------
# descriptor constructors
# ---------------------------------------------------------------------------


def test_constructor_validation():
    with pytest.raises(ValueError):
        three_term_xy(2, 3, 5, coefficients=(0, 1))
    with pytest.raises(ValueError):
        fermat_3(0, 2, 3)
    with pytest.raises(ValueError):
        fermat_n((2, 3, 5))  # needs at least four
    with pytest.raises(ValueError):
        danielewski_like(3, (1,))  # constant tail
    with pytest.raises(ValueError):
        danielewski_like(0, (1, 1))
    with pytest.raises(ValueError):
        danielewski_like(3, (1, 1), head_coefficient=0)


def test_mixed_four_constructor_swaps():
    d = mixed_four(2, 5, 4, 3)
    assert d.exponents == (5, 2, 3, 4)
    assert d.roles == ("Y", "X", "T", "Z")
    assert len(d.notes) == 2


# ---------------------------------------------------------------------------
# three-term verdicts
# ---------------------------------------------------------------------------


def test_three_term_rigid():
    v = classify(three_term_xy(2, 3, 5))
    assert v.status == "Rigid"
    assert v.citation.startswith("Theorem case1")
    assert v.witness is None


def test_three_term_catalog_witness():
    v = classify(three_term_xy(1, 2, 3))
    assert_sound_witness(v)
    w = v.witness
    X, Y, Z = gens("X", "Y", "Z")
    assert w.image_of("X").rep == 3 * Z**2
    assert w.image_of("Y").rep.is_zero
    assert w.image_of("Z").rep == Y**2


def test_three_term_free_coordinate():
    v = classify(three_term_xy(0, 2, 3))
    assert_sound_witness(v)
    assert v.citation == "explicit witness: translation along a free coordinate"
    assert v.witness.image_of("X").rep == Polynomial.constant(("X", "Y", "Z"), 1)


def test_three_term_degenerate_all_zero():
    v = classify(three_term_xy(0, 0, 0))
    assert v.status == "NotRigid"
    assert v.witness is None
    assert any("full polynomial ring" in note for note in v.notes)


def test_three_term_nondomain_still_rigid():
    v = classify(three_term_xy(2, 4, 6))
    assert v.status == "Rigid"
    assert gcd(2, gcd(4, 6)) == 2
    assert any("not a domain" in note for note in v.notes)


def test_three_term_witness_propagates_coefficients():
    v = classify(three_term_xy(1, 2, 3, coefficients=(2, 5)))
    assert_sound_witness(v)
    X, Y, Z = gens("X", "Y", "Z")
    # D(relation) = 2*Y^2*D(X) + 15*Z^2*D(Z) must vanish identically
    assert v.witness.image_of("X").rep == -15 * Z**2
    assert v.witness.image_of("Z").rep == 2 * Y**2


# ---------------------------------------------------------------------------
# three-power verdicts
# ---------------------------------------------------------------------------


def test_fermat3_rigid_block():
    v = classify(fermat_3(2, 3, 3))
    assert v.status == "Rigid"
    assert v.citation.startswith("Theorem KalZai")


def test_fermat3_exponent_one_witness():
    v = classify(fermat_3(1, 2, 3))
    assert_sound_witness(v)
    X, Y, Z = gens("X", "Y", "Z")
    assert v.witness.image_of("Y").rep == Polynomial.constant(("X", "Y", "Z"), 1)
    assert v.witness.image_of("X").rep == -2 * Y
    assert v.witness.image_of("Z").rep.is_zero


def test_fermat3_two_squares_witness():
    v = classify(fermat_3(2, 2, 5))
    assert_sound_witness(v)
    X, Y, Z = gens("X", "Y", "Z")
    half = gq(5, 0) / gq(2, 0)
    assert v.witness.image_of("X").rep == -half * Z**4
    assert v.witness.image_of("Y").rep == gq(0, -1) * half * Z**4
    assert v.witness.image_of("Z").rep == X + gq(0, 1) * Y


def test_fermat3_two_squares_withholds_witness_for_bad_ratio():
    v = classify(fermat_3(2, 2, 5, coefficients=(1, 3, 1)))
    assert v.status == "NotRigid"
    assert v.witness is None
    assert any("square root" in note for note in v.notes)
    with pytest.raises(ValueError):
        witness_for(fermat_3(2, 2, 5, coefficients=(1, 3, 1)))


# ---------------------------------------------------------------------------
# mixed four-variable verdicts
# ---------------------------------------------------------------------------


def test_mixed_four_rigid():
    v = classify(mixed_four(3, 3, 3, 4))
    assert v.status == "Rigid"
    assert v.citation.startswith("Theorem abcdTHM")


def test_mixed_four_exponent_one():
    v = classify(mixed_four(4, 1, 3, 5))
    assert_sound_witness(v)


def test_mixed_four_zt_squares():
    v = classify(mixed_four(3, 2, 2, 2))
    assert_sound_witness(v)
    assert v.citation.startswith("derived witness: Z^2 + T^2")


def test_mixed_four_even_twist_witness():
    v = classify(mixed_four(2, 2, 2, 3))
    assert_sound_witness(v, max_steps=4)
    assert v.citation.startswith("explicit witness: imaginary-unit twist")


def test_mixed_four_leftover_patterns_stay_open():
    for exps in ((6, 3, 2, 4), (12, 3, 2, 4), (6, 2, 3, 3), (18, 2, 3, 3)):
        v = classify(mixed_four(*exps))
        assert v.status == "Unknown", exps
        assert v.citation.startswith("Remark Leftover")


def test_mixed_four_near_leftovers_are_decided():
    # a not divisible by 6 falls back to the general rigidity rule
    assert classify(mixed_four(4, 3, 2, 4)).status == "Rigid"
    assert classify(mixed_four(9, 2, 3, 3)).status == "Rigid"


# ---------------------------------------------------------------------------
# n-power verdicts
# ---------------------------------------------------------------------------


def test_fermat_n_exponent_one():
    v = classify(fermat_n((1, 3, 3, 3)))
    assert_sound_witness(v)


def test_fermat_n_two_squares():
    v = classify(fermat_n((2, 2, 5, 7)))
    assert_sound_witness(v)
    assert v.citation.startswith("derived witness: two quadratic slots")


def test_fermat_n_cb4_rigid():
    v = classify(fermat_n((2, 3, 5, 7)))
    assert v.status == "Rigid"
    assert v.citation.startswith("Theorem CB4")
    assert any("ordering" in note for note in v.notes)


def test_fermat_n_reciprocal_sum_rule():
    # no CB4 ordering works for (2, 3, 7, 42), and the reciprocal sum is
    # 1/2 + 1/3 + 1/7 + 1/42 = 1 > 1/2, so that rule fails too -> Unknown,
    # with the rule trace recorded in the notes
    v = classify(fermat_n((2, 3, 7, 42)))
    assert v.status == "Unknown"
    assert any(note.startswith("CB4:") for note in v.notes)
    assert any(note.startswith("EX1:") for note in v.notes)
    # (8, 8, 9, 11): the repeated 8 rules out every CB4 ordering, but
    # 1/8 + 1/8 + 1/9 + 1/11 = 179/396 <= 1/2 with gcd 1
    rigid = classify(fermat_n((8, 8, 9, 11)))
    assert rigid.status == "Rigid"


def test_fermat_n_five_variables_unknown():
    # n = 5: CB4 does not apply, reciprocal sum 5/4 > 1/3
    v = classify(fermat_n((4, 4, 4, 4, 4)))
    assert v.status == "Unknown"


# ---------------------------------------------------------------------------
# Danielewski-like verdicts
# ---------------------------------------------------------------------------


def test_danielewski_rigid_small_tail():
    v = classify(danielewski_like(3, (1, 1, 1, 1, 1)))  # deg P = 4 = (d-1)^2
    assert v.status == "Rigid"
    assert v.citation.startswith("Theorem EX2t")


def test_danielewski_out_of_scope_when_tail_vanishes_at_zero():
    v = classify(danielewski_like(3, (0, 1, 1)))
    assert v.status == "OutOfScope"


def test_danielewski_monomial_tail_rigid():
    # P = 1 + y^5, d = 2: deg P = 5 > 1 = (d-1)^2, but Q = y^4 is a monomial
    v = classify(danielewski_like(2, (1, 0, 0, 0, 0, 1)))
    assert v.status == "Rigid"
    assert v.citation.startswith("Lemma MiniMason")


def test_danielewski_open_beyond_rules():
    # P = 1 + y + y^5, d = 2: tail Q = 1 + y^4 is not a monomial
    v = classify(danielewski_like(2, (1, 1, 0, 0, 0, 1)))
    assert v.status == "Unknown"


def test_danielewski_loose_tail_unknown():
    f = parse_poly("X^3*Y + Z^3*Y + Z^4", ("X", "Y", "Z"))
    v = classify(recognize_family(f))
    assert v.status == "Unknown"
    assert any("loose tail" in note for note in v.notes)


# ---------------------------------------------------------------------------
# rule-table disjointness against independent predicates
# ---------------------------------------------------------------------------


def independent_three_term(a, b, c):
    if (a, b, c) == (0, 0, 0) or 0 in (a, b, c) or 1 in (a, b, c):
        return "NotRigid"
    return "Rigid"


def independent_fermat3(a, b, c):
    a, b, c = sorted((a, b, c))
    if a == 1 or (a == 2 and b == 2):
        return "NotRigid"
    return "Rigid"


def independent_mixed_four(a, b, c, d):
    a, b = max(a, b), min(a, b)
    c, d = min(c, d), max(c, d)
    if 1 in (a, b, c, d):
        return "NotRigid"
    if c == 2 and d == 2:
        return "NotRigid"
    if b == 2 and c == 2 and a % 2 == 0:
        return "NotRigid"
    if a % 6 == 0 and ((b == 3 and (c, d) == (2, 4)) or (b == 2 and (c, d) == (3, 3))):
        return "Unknown"
    return "Rigid"


def independent_fermat_4(ds):
    if 1 in ds:
        return "NotRigid"
    if sum(1 for e in ds if e == 2) >= 2:
        return "NotRigid"
    for a, b, c, d in permutations(ds):
        if (
            min(a, b, c, d) >= 2
            and gcd(a * b, c) == 1
            and gcd(a * b * c, d) == 1
            and gcd(a, b) not in (a, b)
        ):
            return "Rigid"
    if (
        min(ds) >= 2
        and gcd(gcd(ds[0], ds[1]), gcd(ds[2], ds[3])) == 1
        and sum(Fraction(1, e) for e in ds) <= Fraction(1, 2)
    ):
        return "Rigid"
    return "Unknown"


def test_three_term_table_small_exponents():
    for a in range(0, 7):
        for b in range(0, 7):
            for c in range(0, 7):
                v = classify(three_term_xy(a, b, c))
                assert v.status == independent_three_term(a, b, c), (a, b, c)
                if v.status == "NotRigid" and v.witness is not None:
                    assert not v.witness.is_zero


def test_fermat3_table_small_exponents():
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(b, 7):
                v = classify(fermat_3(a, b, c))
                assert v.status == independent_fermat3(a, b, c), (a, b, c)


def test_mixed_four_table_small_exponents():
    for a in range(1, 7):
        for b in range(1, a + 1):
            for c in range(1, 7):
                for d in range(c, 7):
                    v = classify(mixed_four(a, b, c, d))
                    assert v.status == independent_mixed_four(a, b, c, d), (
                        a,
                        b,
                        c,
                        d,
                    )


def test_fermat_4_table_small_exponents():
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(b, 7):
                for d in range(c, 7):
                    v = classify(fermat_n((a, b, c, d)))
                    assert v.status == independent_fermat_4((a, b, c, d)), (
                        a,
                        b,
                        c,
                        d,
                    )


# ---------------------------------------------------------------------------
# the open list
# ---------------------------------------------------------------------------

OPEN_RELATIONS = (
    "X^3*Y + Z^3*Y + Z^4",
    "X^6*Y^3 + Z^2 + T^4",
    "X^6*Y^2 + Z^3 + T^3",
    "X^2 + Y^3 + Z^3 + T^3",
    "X^3 + Y^3 + Z^3 + T^3",
    "X^2 + Y^3 + Z^5 + T^15",
)


@pytest.mark.parametrize("text", OPEN_RELATIONS)
def test_open_hypersurfaces_stay_open(text):
    names = ("X", "Y", "Z", "T") if "T" in text else ("X", "Y", "Z")
    verdict = classify(recognize_family(parse_poly(text, names)))
    assert verdict.status == "Unknown", (text, verdict.citation, verdict.notes)


# ---------------------------------------------------------------------------
# citations are frozen strings
# ---------------------------------------------------------------------------


def test_citation_strings_are_stable():
    assert classify(three_term_xy(2, 3, 5)).citation == (
        "Theorem case1: X^a*Y^b - Z^c with a, b, c >= 2 defines a rigid ring"
    )
    assert classify(fermat_3(2, 3, 3)).citation == (
        "Theorem KalZai: X^a + Y^b + Z^c with a >= 2 and b, c >= 3 defines a"
        " rigid ring"
    )
    assert classify(mixed_four(3, 3, 3, 4)).citation == (
        "Theorem abcdTHM: X^a*Y^b + Z^c + T^d defines a rigid ring away from"
        " the exceptional exponent patterns"
    )
    assert classify(mixed_four(6, 3, 2, 4)).citation == (
        "Remark Leftover: rigidity is open for the patterns"
        " X^(6k)*Y^3 + Z^2 + T^4 and X^(6k)*Y^2 + Z^3 + T^3"
    )
    assert classify(fermat_n((2, 3, 5, 7))).citation == (
        "Theorem CB4: rigid when gcd(a*b, c) = gcd(a*b*c, d) = 1 and"
        " gcd(a, b) is neither a nor b"
    )
    assert classify(fermat_n((8, 8, 9, 11))).citation == (
        "Lemma EX1: rigid when every exponent is >= 2, the exponents have"
        " gcd 1, and the reciprocal sum is at most 1/(n-2)"
    )
    assert classify(danielewski_like(3, (1, 1))).citation == (
        "Theorem EX2t: X^d*Y + Z^d*P(Y) with P(0) != 0, d >= 2 and"
        " deg(P) <= (d-1)^2 defines a rigid ring"
    )


# ---------------------------------------------------------------------------
# witness plumbing
# ---------------------------------------------------------------------------


def test_witness_for_rejects_rigid_cases():
    with pytest.raises(ValueError):
        witness_for(three_term_xy(2, 3, 5))


def test_witness_for_returns_certified_derivation():
    w = witness_for(mixed_four(2, 2, 2, 3))
    assert probe_nilpotency(w, bound=8).certified


def test_classify_rejects_alien_kind():
    alien = FamilyDescriptor(
        kind="Quintic",
        exponents=(),
        variables=("X",),
        roles=(),
        coefficients=(),
        relation=None,
    )
    with pytest.raises(ValueError):
        classify(alien)


def test_round_trip_recognition_preserves_verdicts():
    """Constructed descriptors and re-recognized relations agree."""
    cases = [
        three_term_xy(2, 3, 5),
        three_term_xy(1, 2, 3),
        fermat_3(2, 2, 5),
        mixed_four(6, 3, 2, 4),
        fermat_n((2, 3, 5, 7)),
        danielewski_like(3, (1, 1, 1)),
    ]
    for descriptor in cases:
        again = recognize_family(descriptor.relation)
        assert again.kind == descriptor.kind
        assert again.exponents == descriptor.exponents
        assert classify(again).status == classify(descriptor).status
