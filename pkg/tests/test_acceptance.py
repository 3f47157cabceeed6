"""End-to-end acceptance suite: one test per shipped criterion.

Each criterion is a single test function so `pytest -v` prints exactly one
pass/fail line per criterion.  Expected values are re-derived here from the
rule statements, independently of the library's internal dispatch order, and
every published witness or search hit is re-verified rather than trusted.
"""

import json
import random
import time
from pathlib import Path

from rigidity import (
    ParametrizationProblem,
    Polynomial,
    RingPresentation,
    bounded_search,
    classify,
    derivation_degree_jump,
    distinct_root_count,
    fermat_3,
    gcd_univariate,
    gens,
    gr_presentation,
    make_derivation,
    mason_check,
    member,
    mixed_four,
    obstruction_check,
    parametrization_obstructed,
    parse_poly,
    probe_nilpotency,
    recognize_family,
    remark_family_candidates,
    three_term_xy,
    verify_parametrization,
)
from rigidity.gauss import gq

from helpers import nonzero_random_poly

GOLDEN_DIR = Path(__file__).parent / "golden"

XY = ("X", "Y")
PX, PY = gens(*XY)
XYZ = ("X", "Y", "Z")
CX, CY, CZ = gens(*XYZ)
XYZT = ("X", "Y", "Z", "T")
QX, QY, QZ, QT = gens(*XYZT)


def test_criterion_01_two_monomial_three_variable_table():
    """X^a*Y^b - Z^c for 0 <= a,b,c <= 8: rigid exactly when a,b,c >= 2."""
    started = time.perf_counter()
    for a in range(9):
        for b in range(9):
            for c in range(9):
                verdict = classify(three_term_xy(a, b, c))
                if a >= 2 and b >= 2 and c >= 2:
                    assert verdict.status == "Rigid", (a, b, c, verdict.status)
                    assert verdict.witness is None
                elif (a, b, c) == (0, 0, 0):
                    # 1 - 1 collapses to the zero relation: the quotient is
                    # the whole polynomial ring, which is as non-rigid as it
                    # gets, but there is no presentation to hang a witness on.
                    assert verdict.status == "NotRigid"
                    assert verdict.witness is None
                    assert any("polynomial ring" in note for note in verdict.notes)
                else:
                    assert verdict.status == "NotRigid", (a, b, c, verdict.status)
                    assert verdict.witness is not None, (a, b, c)
                    assert verdict.witness_report.certified, (a, b, c)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"729-entry table took {elapsed:.2f}s"


def test_criterion_02_three_pure_power_table():
    """X^a+Y^b+Z^c for 1 <= a <= b <= c <= 8: not rigid exactly for a = 1 or
    a = b = 2, and every witness certifies within probe bound 10."""
    for a in range(1, 9):
        for b in range(a, 9):
            for c in range(b, 9):
                verdict = classify(fermat_3(a, b, c))
                if a == 1 or (a == 2 and b == 2):
                    assert verdict.status == "NotRigid", (a, b, c, verdict.status)
                    assert verdict.witness is not None, (a, b, c)
                    report = probe_nilpotency(verdict.witness, bound=10)
                    assert report.certified, (a, b, c, report.detail)
                else:
                    assert verdict.status == "Rigid", (a, b, c, verdict.status)
                    assert verdict.witness is None


def test_criterion_03_mixed_four_variable_table():
    """X^a*Y^b+Z^c+T^d for 1 <= a,b,c,d <= 8, against a restatement of the
    rule table that is symmetric in the declared slot swaps."""

    def expected_status(a, b, c, d):
        hi, lo = max(a, b), min(a, b)
        zc, td = min(c, d), max(c, d)
        if 1 in (a, b, c, d):
            return "NotRigid"
        if zc == 2 and td == 2:
            return "NotRigid"
        if lo == 2 and zc == 2 and hi % 2 == 0:
            return "NotRigid"
        if hi % 6 == 0 and (
            (lo == 3 and (zc, td) == (2, 4)) or (lo == 2 and (zc, td) == (3, 3))
        ):
            return "Unknown"
        return "Rigid"

    for a in range(1, 9):
        for b in range(1, 9):
            for c in range(1, 9):
                for d in range(1, 9):
                    verdict = classify(mixed_four(a, b, c, d))
                    want = expected_status(a, b, c, d)
                    assert verdict.status == want, (a, b, c, d, verdict.status, want)
                    if want == "NotRigid":
                        assert verdict.witness is not None, (a, b, c, d)
                        assert verdict.witness_report.certified, (a, b, c, d)


def test_criterion_04_even_twist_witness_within_four_steps():
    """The explicit derivation on X^a*Y^2+Z^2+T^d for a in {2,4,6} and
    d in {3,4,5}: well-defined, nonzero, kernel contains x and
    x^(a/2)*y - i*z, certified nilpotent with max steps <= 4."""
    imaginary = gq(0, 1)
    results = []
    for a in (2, 4, 6):
        for d in (3, 4, 5):
            pres = RingPresentation(XYZT, QX**a * QY**2 + QZ**2 + QT**d)
            half = a // 2
            images = [
                Polynomial.zero(XYZT),
                d * QT ** (d - 1),
                -d * imaginary * QX**half * QT ** (d - 1),
                -2 * QX**half * (QX**half * QY - imaginary * QZ),
            ]
            derivation = make_derivation(pres, images)  # raises if ill-defined
            assert not derivation.is_zero
            assert derivation.image_of("X").is_zero
            kernel_element = pres.normal_form(QX**half * QY - imaginary * QZ)
            assert derivation(kernel_element).is_zero, (a, d)
            report = probe_nilpotency(derivation)
            assert report.certified, (a, d, report.detail)
            results.append((a, d, report.steps_per_generator))
    over_cap = [(a, d, steps) for a, d, steps in results if max(steps) > 4]
    # The Y- and Z-chains walk down T^(d-1), T^(d-2), ... times powers of the
    # kernel element x^(a/2)*y - i*z, so the probe needs exactly d+1
    # applications on those generators; a cap of 4 is attainable only at d=3.
    assert not over_cap, (
        "every witness certified, but these (a, d) need more than 4 steps "
        f"(steps per generator shown): {over_cap}"
    )


def test_criterion_05_mason_inequalities_and_root_counts():
    """1000 coprime zero-sum triples of degree <= 10 satisfy both degree
    bounds; distinct-root counts match 50 known factorizations exactly."""
    rng = random.Random(20260814)
    trials = 0
    while trials < 1000:
        p = nonzero_random_poly(rng, ("S",), max_terms=4, max_exp=10)
        q = nonzero_random_poly(rng, ("S",), max_terms=4, max_exp=10)
        r = -p - q
        if r.is_zero or (p.is_constant and q.is_constant):
            continue
        if not gcd_univariate(p, q).is_constant:
            continue
        report = mason_check([p, q, r])
        assert report.hypotheses_ok, (p, q)
        assert report.holds_product, (p, q)
        assert report.holds_sum, (p, q)
        trials += 1

    (S,) = gens("S")
    rng = random.Random(1105)
    for _ in range(50):
        k = rng.randint(1, 5)
        roots = rng.sample(range(-8, 9), k)
        p = Polynomial.constant(("S",), 1)
        for root in roots:
            p = p * (S - root) ** rng.randint(1, 3)
        assert distinct_root_count(p) == len(roots), roots


def test_criterion_06_obstruction_boundary():
    """For equal exponents d in 2..6 the tail-degree certificate flips from
    obstructed to not obstructed exactly when deg(Q)+1 passes (d-1)^2."""
    for d in range(2, 7):
        cap = (d - 1) ** 2
        for deg_q in range(cap + 6):
            verdict = obstruction_check(
                "extendedminimason", {"a": d, "b": d, "degq": deg_q}
            )
            assert verdict.obstructed == (deg_q + 1 <= cap), (d, deg_q, verdict)
    equality = obstruction_check("doublemason", {"a": 3, "b": 2, "c": 3, "d": 6})
    assert equality.obstructed
    assert equality.detail == "1/2 + 1/3 + 1/6 = 1 <= 1"


def test_criterion_07_graded_ring_regressions():
    # The parabola presentation: the top part under deg_X is X^2, and the
    # image of x squares to zero in the graded quotient even though x itself
    # is not nilpotent in the base ring.
    base = RingPresentation(XY, PX**2 - PY)
    graded = gr_presentation(base, (1, 0))
    assert graded.gr_relation == PX**2
    x_bar = graded.quotient.generator("X")
    assert (x_bar * x_bar).is_zero
    assert not (base.generator("X") * base.generator("X")).is_zero

    # Adding a pure power of the heavier variable: top parts multiply.
    for n in range(1, 9):
        assert (PY + PX**n).top_part((1, 0)) == PX**n
        assert PX.top_part((1, 0)) ** n == PX**n

    # Homogenizing a certified derivation yields a validated, certified
    # derivation on the graded presentation.
    cone = RingPresentation(XYZ, CX * CY - CZ**2)
    derivation = make_derivation(cone, [Polynomial.zero(XYZ), 2 * CZ, CX])
    out = derivation_degree_jump(derivation, (1, 1, 1))
    assert not out.gr_derivation.is_zero
    assert out.gr_derivation.presentation == out.graded.quotient
    assert probe_nilpotency(out.gr_derivation).certified


def test_criterion_08_weighted_substitution_does_not_descend():
    """Scaling the coordinates of F^2+G^3+H^5 by powers of a new variable S
    makes d/dS kill the scaled relation modulo the ideal while d/dS of a
    scaled coordinate stays nonzero - so "kills the relation" alone does not
    certify a derivation of the quotient."""
    FGHS = ("F", "G", "H", "S")
    F, G, H, S = gens(*FGHS)
    a, b, c = 2, 3, 5
    relation = F**a + G**b + H**c
    pres = RingPresentation(FGHS, relation)
    x = S ** (b * c) * F
    y = S ** (a * c) * G
    z = S ** (a * b) * H
    combined = x**a + y**b + z**c
    assert combined == S ** (a * b * c) * relation
    d_combined = combined.diff("S")
    assert d_combined == (a * b * c) * S ** (a * b * c - 1) * relation
    assert member(d_combined, pres)
    d_x = x.diff("S")
    assert not d_x.is_zero
    assert not pres.normal_form(d_x).is_zero


OPEN_RELATIONS = (
    "X^3*Y + Z^3*Y + Z^4",
    "X^6*Y^3 + Z^2 + T^4",
    "X^6*Y^2 + Z^3 + T^3",
    "X^2 + Y^3 + Z^3 + T^3",
    "X^3 + Y^3 + Z^3 + T^3",
    "X^2 + Y^3 + Z^5 + T^15",
)


def test_criterion_09_open_hypersurfaces_stay_unknown():
    """The six open hypersurfaces classify to Unknown, never (Not)Rigid,
    with family kind and citation frozen in a golden file."""
    golden = json.loads((GOLDEN_DIR / "acceptance_open_list.json").read_text())
    assert sorted(golden) == sorted(OPEN_RELATIONS)
    for text in OPEN_RELATIONS:
        variables = XYZT if "T" in text else XYZ
        descriptor = recognize_family(parse_poly(text, variables))
        verdict = classify(descriptor)
        assert verdict.status == "Unknown", (text, verdict.status)
        assert verdict.witness is None
        entry = golden[text]
        assert entry["kind"] == descriptor.kind, text
        assert entry["status"] == verdict.status, text
        assert entry["citation"] == verdict.citation, text


def test_criterion_10_bounded_search_agrees_with_certificates():
    """Default-window searches find nothing on certified-obstructed problems
    (under 60 s total), and every Found result re-verifies exactly."""
    started = time.perf_counter()
    obstructed_fixtures = [
        ("F^2 + H^3", ("F", "H"), "unit", (3, 2)),
        ("F^3 + H^3 + H^6", ("F", "H"), "unit", (2, 2)),
        ("U^2*V^2 + W^3", ("U", "V", "W"), "unit", (1, 1, 1)),
        ("X^3*Y^2 + Z^3 + T^6", XYZT, "zero", (1, 1, 1, 1)),
        ("X^2 + Y^3 + Z^7", XYZ, "zero", (2, 2, 1)),
    ]
    for text, variables, constraint, bounds in obstructed_fixtures:
        problem = ParametrizationProblem(
            parse_poly(text, variables), constraint, bounds
        )
        assert parametrization_obstructed(problem).obstructed, text
        outcome = bounded_search(problem)  # default coefficient window
        assert not outcome.found, (text, outcome.candidates)
        assert outcome.candidates is None

    circle = ParametrizationProblem(parse_poly("X^2 + Y^2", XY), "zero", (1, 1))
    hit = bounded_search(circle, coefficient_window=1, gaussian=True)
    assert hit.found
    assert verify_parametrization(circle, hit.candidates).ok

    quartic = ParametrizationProblem(
        parse_poly("X^3*Y + Z^3*Y + Z^4", XYZ), "zero", (4, 0, 3)
    )
    hit = bounded_search(quartic, coefficient_window=1)
    assert hit.found
    assert verify_parametrization(quartic, hit.candidates).ok

    # the closed-form solution family for the same quartic, at an arbitrary
    # non-monic, non-coprime instantiation
    (S,) = gens("S")
    family = remark_family_candidates(gq(2, 1), S**2 + 1, S - 3)
    unbounded = ParametrizationProblem(parse_poly("X^3*Y + Z^3*Y + Z^4", XYZ), "zero")
    assert verify_parametrization(unbounded, family).ok

    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"search sweep took {elapsed:.2f}s"
