"""Certify the knot type of every construction from its diagram.

Each closed fold's centerline becomes a knot diagram (coincident runs
displaced apart deterministically), and the diagram's Alexander
polynomial is compared against the target torus knot's.  The rectangle
fold is checked against the 7_4 polynomial instead.
"""

from ribbonfold import FamilyId, build, knot_type, layout
from ribbonfold.knot_id import (
    LaurentPolynomial,
    alexander_polynomial,
    extract_diagram,
    verify_knot_type,
)

SEVEN_FOUR = LaurentPolynomial({0: 4, 1: -7, 2: 4}).normalized()

CASES = (
    FamilyId("odd_wrap", 2),
    FamilyId("odd_wrap", 3),
    FamilyId("odd_wrap", 4),
    FamilyId("star_polygon", 7),
    FamilyId("star_polygon", 9),
    FamilyId("pinwheel", 2),
    FamilyId("pinwheel", 3),
    FamilyId("even_wrap_plus2", 3),
    FamilyId("even_wrap_plus2", 5),
    FamilyId("even_wrap_plus4", 3),
    FamilyId("short_52"),
    FamilyId("short_72"),
)


def main():
    failures = 0
    for family in CASES:
        program = build(family)
        params = knot_type(family)
        report = verify_knot_type(program, (params.p, params.q))
        label = "%s(%s)" % (family.tag, family.parameter)
        print("%-22s %s" % (label, report.summary()))
        failures += 0 if report.matches else 1

    delta = alexander_polynomial(extract_diagram(layout(build(FamilyId("rect_74")))))
    ok = delta == SEVEN_FOUR
    print("%-22s Alexander %s vs %s -> %s"
          % ("rect_74", delta, SEVEN_FOUR, "MATCH" if ok else "MISMATCH"))
    failures += 0 if ok else 1

    print("failures:", failures)
    raise SystemExit(0 if failures == 0 else 1)


if __name__ == "__main__":
    main()
