"""Closed-form ratios, crossing numbers, quotients, and bound tables.

All values here are arithmetic on the family formulas; nothing in this
module builds geometry unless a caller explicitly asks a report to
measure its layout.  Every ratio is reported as value plus an exact
symbolic form, since the interesting constants are cotangents of
rational angles rather than pretty decimals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .constructions import FamilyId, TorusKnotParams, build, knot_type
from .errors import InvalidInputError, NotApplicableError, ParameterError
from .fold_core import ExactAngle, ratio as measured_ratio

__all__ = [
    "BoundsRow",
    "FIGURE_EIGHT_CROSSINGS",
    "FIGURE_EIGHT_RATIO",
    "RECT_74_CROSSINGS",
    "RatioFormula",
    "RatioReport",
    "bounds_table",
    "closed_form_ratio",
    "crossing_number",
    "family_crossing_number",
    "kusner_quotient",
    "limit_constant",
    "quotient_table",
    "ratio_report",
    "ratio_reports",
    "significant",
]

# knot-table crossing number of 7_4; the rectangle fold realises it
RECT_74_CROSSINGS = 7

# reference figure-eight fold: ratio 6 + 2*sqrt(2) over 4 crossings.
# External comparison value only; no builder here produces it.
FIGURE_EIGHT_RATIO = 6.0 + 2.0 * math.sqrt(2.0)
FIGURE_EIGHT_CROSSINGS = 4

_FIXED_TAGS = ("short_52", "short_72", "rect_74")


def significant(x: float, digits: int = 6) -> str:
    """Format a number to the given count of significant digits."""
    return "%.*g" % (digits, x)


def _angle_text(angle: ExactAngle) -> str:
    if angle.numerator == 1:
        return "pi/%d" % angle.denominator
    if angle.denominator == 1:
        return "%d*pi" % angle.numerator
    return "%d*pi/%d" % (angle.numerator, angle.denominator)


@dataclass(frozen=True)
class RatioFormula:
    """A ratio of the form coefficient * cot(angle), or a pure rational.

    ``limit`` marks formulas the construction only approaches as its
    epsilon parameter goes to zero, rather than attains exactly.
    """

    coefficient: Fraction
    angle: Optional[ExactAngle] = None
    limit: bool = False

    @property
    def value(self) -> float:
        base = self.coefficient.numerator / self.coefficient.denominator
        if self.angle is None:
            return base
        return base / math.tan(self.angle.radians)

    def symbolic(self) -> str:
        coeff = self.coefficient
        if self.angle is None:
            return str(coeff)
        cot = "cot(%s)" % _angle_text(self.angle)
        if coeff == 1:
            return cot
        if coeff.denominator == 1:
            return "%d*%s" % (coeff.numerator, cot)
        return "(%d/%d)*%s" % (coeff.numerator, coeff.denominator, cot)


def closed_form_ratio(family: FamilyId, presentation: str = "closed") -> RatioFormula:
    """Exact length-to-width ratio formula of a family.

    For the two short variants the returned formula is the epsilon -> 0
    limit, flagged as such.  Only odd_wrap accepts a truncated
    presentation.
    """
    if presentation not in ("closed", "truncated"):
        raise ParameterError("presentation must be 'closed' or 'truncated'")
    if presentation == "truncated" and family.tag != "odd_wrap":
        raise ParameterError("only odd_wrap has a truncated presentation")
    tag, m = family.tag, family.parameter
    if tag == "odd_wrap":
        n = 2 * m + 1
        count = 2 * m if presentation == "truncated" else n
        return RatioFormula(Fraction(count), ExactAngle(1, n))
    if tag == "star_polygon":
        return RatioFormula(Fraction(m), ExactAngle(1, m))
    if tag == "pinwheel":
        n = 2 * m + 1
        return RatioFormula(Fraction(n), ExactAngle(1, 2 * n))
    if tag == "even_wrap_plus2":
        n = 2 * m + 2
        return RatioFormula(Fraction(n), ExactAngle(1, n))
    if tag == "even_wrap_plus4":
        n = 2 * m + 4
        return RatioFormula(Fraction(n), ExactAngle(1, n))
    if tag == "short_52":
        return RatioFormula(Fraction(7), ExactAngle(1, 5), limit=True)
    if tag == "short_72":
        return RatioFormula(Fraction(9), ExactAngle(1, 5), limit=True)
    return RatioFormula(Fraction(24))


def crossing_number(p: int, q: int) -> int:
    """Crossing number of the (p, q) torus knot: min{p(q-1), q(p-1)}."""
    if isinstance(p, bool) or isinstance(q, bool):
        raise InvalidInputError("crossing number needs integer p and q")
    if not isinstance(p, int) or not isinstance(q, int):
        raise InvalidInputError("crossing number needs integer p and q")
    if p < 2 or q < 2:
        raise InvalidInputError("torus parameters must both be at least 2")
    if math.gcd(p, q) != 1:
        raise InvalidInputError("(%d, %d) describes a link, not a knot" % (p, q))
    return min(p * (q - 1), q * (p - 1))


def family_crossing_number(family: FamilyId) -> int:
    """Crossing number of the knot a family folds."""
    params = knot_type(family)
    if params is None:
        return RECT_74_CROSSINGS
    return crossing_number(params.p, params.q)


def kusner_quotient(family: FamilyId, presentation: str = "closed") -> float:
    """Ratio divided by crossing number, the quantity the bounds compare."""
    formula = closed_form_ratio(family, presentation)
    return formula.value / family_crossing_number(family)


def limit_constant(family: Union[FamilyId, str]) -> float:
    """Limit of a parametric family's quotient as its parameter grows.

    Returns math.inf for the star polygons, whose quotient is unbounded.
    The three fixed constructions have no parameter to take a limit in,
    so they raise NotApplicableError.
    """
    tag = family.tag if isinstance(family, FamilyId) else family
    if tag in ("odd_wrap", "pinwheel"):
        return 4.0 / math.pi
    if tag in ("even_wrap_plus2", "even_wrap_plus4"):
        return 2.0 / math.pi
    if tag == "star_polygon":
        return math.inf
    if tag in _FIXED_TAGS:
        raise NotApplicableError("%s has no parameter limit" % tag)
    raise ParameterError("unknown family tag %r" % (tag,))


@dataclass(frozen=True)
class BoundsRow:
    """One bound on ratio / crossing, with the witness that pins it."""

    constant: str
    value: float
    symbolic: str
    witness: str
    note: str


def bounds_table() -> List[BoundsRow]:
    """The four quotient bounds these constructions establish.

    The c1 rows are upper bounds approached by family limits, never
    attained by a finite member; the c2 rows are the best witness
    quotients, so they bound c2 from below.
    """
    c1_note = "upper bound for c1; approached in the limit, not attained"
    c2_note = "best witness quotient; bounds c2 from below"
    return [
        BoundsRow(
            "c1_closed",
            2.0 / math.pi,
            "2/pi",
            "even_wrap quotients as q grows",
            c1_note,
        ),
        BoundsRow(
            "c1_truncated",
            4.0 / math.pi,
            "4/pi",
            "truncated odd_wrap quotients as q grows",
            c1_note,
        ),
        BoundsRow(
            "c2_closed",
            (5.0 / 3.0) / math.tan(math.pi / 5.0),
            "(5/3)*cot(pi/5)",
            "odd_wrap q=2 closed, the five-panel trefoil",
            c2_note,
        ),
        BoundsRow(
            "c2_truncated",
            (3.0 + math.sqrt(2.0)) / 2.0,
            "(3+sqrt(2))/2",
            "figure-eight fold at ratio 6+2*sqrt(2), an external"
            " reference value no builder here produces",
            c2_note,
        ),
    ]


@dataclass(frozen=True)
class RatioReport:
    """One table row: a family member with its ratio and quotient."""

    family: FamilyId
    params: Optional[TorusKnotParams]
    presentation: str
    closed_form: float
    symbolic: str
    crossings: int
    quotient: float
    limit: bool = False
    geometric_ratio: Optional[float] = None


def ratio_report(
    family: FamilyId,
    presentation: str = "closed",
    *,
    measure: bool = False,
) -> RatioReport:
    """Assemble the report row for one family member.

    With ``measure`` the member is actually built and its layout ratio
    recorded next to the closed form; the two agree to 1e-9 relative
    except for the short variants, which only reach their formula in
    the epsilon -> 0 limit.
    """
    formula = closed_form_ratio(family, presentation)
    crossings = family_crossing_number(family)
    geometric = None
    if measure:
        geometric = measured_ratio(build(family, presentation=presentation))
    return RatioReport(
        family=family,
        params=knot_type(family),
        presentation=presentation,
        closed_form=formula.value,
        symbolic=formula.symbolic(),
        crossings=crossings,
        quotient=formula.value / crossings,
        limit=formula.limit,
        geometric_ratio=geometric,
    )


def ratio_reports(q_max: int = 12, p_max: int = 25) -> List[RatioReport]:
    """All family rows up to the given parameter caps, in stable order."""
    if isinstance(q_max, bool) or not isinstance(q_max, int) or q_max < 2:
        raise ParameterError("q_max must be an integer >= 2")
    if isinstance(p_max, bool) or not isinstance(p_max, int) or p_max < 7:
        raise ParameterError("p_max must be an integer >= 7")
    reports = []
    for q in range(2, q_max + 1):
        fam = FamilyId("odd_wrap", q)
        reports.append(ratio_report(fam, "closed"))
        reports.append(ratio_report(fam, "truncated"))
    for p in range(7, p_max + 1, 2):
        reports.append(ratio_report(FamilyId("star_polygon", p)))
    for q in range(2, q_max + 1):
        reports.append(ratio_report(FamilyId("pinwheel", q)))
    for tag in ("even_wrap_plus2", "even_wrap_plus4"):
        for q in range(3, q_max + 1, 2):
            reports.append(ratio_report(FamilyId(tag, q)))
    reports.append(ratio_report(FamilyId("short_52")))
    reports.append(ratio_report(FamilyId("short_72")))
    reports.append(ratio_report(FamilyId("rect_74")))
    return reports


def _report_cells(report: RatioReport, full_precision: bool) -> List[str]:
    if full_precision:
        num = repr
    else:
        num = significant
    p = "" if report.params is None else str(report.params.p)
    q = "" if report.params is None else str(report.params.q)
    return [
        report.family.tag,
        p,
        q,
        report.presentation,
        num(report.closed_form),
        str(report.crossings),
        num(report.quotient),
    ]


def quotient_table(q_max: int = 12, p_max: int = 25, format: str = "csv") -> str:
    """Render the full quotient table as CSV or an aligned markdown table.

    CSV keeps full float precision; markdown rounds to 6 significant
    digits for reading.
    """
    if format not in ("csv", "markdown"):
        raise ParameterError("format must be 'csv' or 'markdown'")
    header = ["family", "p", "q", "presentation", "ratio", "crossing", "quotient"]
    rows = ratio_reports(q_max, p_max)
    if format == "csv":
        lines = [",".join(header)]
        for report in rows:
            lines.append(",".join(_report_cells(report, True)))
        return "\n".join(lines) + "\n"
    cells = [header] + [_report_cells(r, False) for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    def fmt(row):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |"
    lines = [fmt(header)]
    lines.append("| " + " | ".join("-" * w for w in widths) + " |")
    for row in cells[1:]:
        lines.append(fmt(row))
    return "\n".join(lines) + "\n"
