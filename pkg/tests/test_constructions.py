"""Unit tests for the family builders."""

import math

import pytest

from ribbonfold import (
    ClosureError,
    FamilyId,
    ParameterError,
    TorusKnotParams,
    build,
    build_74,
    build_even_wrap,
    build_odd_wrap,
    build_pinwheel,
    build_short_52,
    build_short_72,
    build_star_polygon,
    knot_type,
    layout,
    ratio,
)
from ribbonfold.knot_id import (
    LaurentPolynomial,
    alexander_polynomial,
    extract_diagram,
    verify_knot_type,
)


def side_length(panel, k):
    a, b = panel.side(k)
    return math.hypot(b[0] - a[0], b[1] - a[1])


def line_distance(a, b, center):
    ux, uy = b[0] - a[0], b[1] - a[1]
    ax, ay = a[0] - center[0], a[1] - center[1]
    norm = math.hypot(ux, uy)
    return abs(ux * ay - uy * ax) / norm


def layout_center(lay):
    # closed star polylines have their vertices evenly spread, so the
    # vertex centroid recovers the centre wherever the layout landed
    xs = [seg[0][0] for seg in lay.centerline]
    ys = [seg[0][1] for seg in lay.centerline]
    return (sum(xs) / len(xs), sum(ys) / len(ys))


# ---------------------------------------------------------------- types


def test_torus_knot_params_accepts_coprime_pairs():
    t = TorusKnotParams(5, 2)
    assert (t.p, t.q) == (5, 2)
    TorusKnotParams(3, 2)
    TorusKnotParams(13, 5)


@pytest.mark.parametrize("p,q", [(2, 2), (3, 3), (2, 3), (4, 2), (9, 3), (5, 1)])
def test_torus_knot_params_rejects_bad_pairs(p, q):
    with pytest.raises(ParameterError):
        TorusKnotParams(p, q)


def test_torus_knot_params_rejects_non_integers():
    with pytest.raises(ParameterError):
        TorusKnotParams(5.0, 2)
    with pytest.raises(ParameterError):
        TorusKnotParams(True, 2)


def test_family_id_accepts_documented_ranges():
    FamilyId("odd_wrap", 2)
    FamilyId("star_polygon", 7)
    FamilyId("pinwheel", 2)
    FamilyId("even_wrap_plus2", 3)
    FamilyId("even_wrap_plus4", 11)
    FamilyId("short_52")
    FamilyId("short_72")
    FamilyId("rect_74")


@pytest.mark.parametrize(
    "tag,parameter",
    [
        ("odd_wrap", 1),
        ("odd_wrap", None),
        ("star_polygon", 6),
        ("star_polygon", 5),
        ("pinwheel", 1),
        ("even_wrap_plus2", 2),
        ("even_wrap_plus2", 1),
        ("even_wrap_plus4", 4),
        ("short_52", 3),
        ("rect_74", 0),
        ("heptagon", 7),
    ],
)
def test_family_id_rejects_out_of_range(tag, parameter):
    with pytest.raises(ParameterError):
        FamilyId(tag, parameter)


def test_knot_type_per_family():
    assert knot_type(FamilyId("odd_wrap", 4)) == TorusKnotParams(5, 4)
    assert knot_type(FamilyId("star_polygon", 9)) == TorusKnotParams(9, 2)
    assert knot_type(FamilyId("pinwheel", 3)) == TorusKnotParams(7, 3)
    assert knot_type(FamilyId("even_wrap_plus2", 3)) == TorusKnotParams(8, 3)
    assert knot_type(FamilyId("even_wrap_plus4", 5)) == TorusKnotParams(14, 5)
    assert knot_type(FamilyId("short_52")) == TorusKnotParams(5, 2)
    assert knot_type(FamilyId("short_72")) == TorusKnotParams(7, 2)
    assert knot_type(FamilyId("rect_74")) is None


# ------------------------------------------------------------- builders


def test_panel_counts_per_family():
    assert len(layout(build_odd_wrap(3)).panels) == 7
    assert len(layout(build_odd_wrap(3, "truncated")).panels) == 6
    assert len(layout(build_star_polygon(7)).panels) == 7
    assert len(layout(build_pinwheel(3)).panels) == 7
    assert len(layout(build_even_wrap(3, 2)).panels) == 8
    assert len(layout(build_even_wrap(3, 4)).panels) == 10
    assert len(layout(build_short_52(1e-3)).panels) == 7
    assert len(layout(build_short_72(1e-3)).panels) == 9
    assert len(layout(build_74()).panels) == 16


def test_ratio_matches_closed_form_across_ranges():
    for q in range(2, 13):
        n = 2 * q + 1
        closed = ratio(build_odd_wrap(q))
        trunc = ratio(build_odd_wrap(q, "truncated"))
        assert abs(closed - n / math.tan(math.pi / n)) < 1e-9 * closed
        assert abs(trunc - 2 * q / math.tan(math.pi / n)) < 1e-9 * trunc
    for p in range(7, 26, 2):
        got = ratio(build_star_polygon(p))
        assert abs(got - p / math.tan(math.pi / p)) < 1e-9 * got
    for q in range(2, 13):
        n = 2 * q + 1
        got = ratio(build_pinwheel(q))
        assert abs(got - n / math.tan(math.pi / (2 * n))) < 1e-9 * got
    for q in range(3, 12, 2):
        for variant in (2, 4):
            n = 2 * q + variant
            got = ratio(build_even_wrap(q, variant))
            assert abs(got - n / math.tan(math.pi / n)) < 1e-9 * got


def test_odd_wrap_corners_lie_on_circumscribed_circle():
    # every fold line is a chord of the circle around the wrapped polygon
    for q in range(2, 13):
        n = 2 * q + 1
        r = 1.0 / (2.0 * math.sin(math.pi / n))
        lay = layout(build_odd_wrap(q))
        cx, cy = layout_center(lay)
        for panel in lay.panels:
            for vx, vy in panel.vertices:
                assert abs(math.hypot(vx - cx, vy - cy) - r) < 1e-9


def test_odd_wrap_panel_edges_match_direct_chords():
    # measure one panel of the q = 3 wrap against chords constructed
    # directly on the circumscribed heptagon circle
    q = 3
    n = 2 * q + 1
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    base_direct = 2.0 * r * math.sin(q * math.pi / n)
    top_direct = 2.0 * r * math.sin((q - 1) * math.pi / n)
    width_direct = math.sqrt(r * r - base_direct**2 / 4.0) + math.sqrt(
        r * r - top_direct**2 / 4.0
    )

    base_formula = 1.0 / (2.0 * math.sin(math.pi / (2 * n)))
    top_formula = math.cos(3.0 * math.pi / (2 * n)) / math.sin(math.pi / n)
    width_formula = math.cos(math.pi / (2 * n))
    assert abs(base_formula - base_direct) < 1e-12
    assert abs(top_formula - top_direct) < 1e-12
    assert abs(width_formula - width_direct) < 1e-12

    prog = build_odd_wrap(q)
    assert abs(prog.width - width_direct) < 1e-12
    panel = layout(prog).panels[0]
    edges = sorted([side_length(panel, 0), side_length(panel, 2)])
    assert abs(edges[1] - base_direct) < 1e-12
    assert abs(edges[0] - top_direct) < 1e-12
    # fold lines are unit chords, the sides of the wrapped polygon
    assert abs(side_length(panel, 1) - 1.0) < 1e-12
    assert abs(side_length(panel, 3) - 1.0) < 1e-12


def test_star_polygon_hole_is_regular_concentric_polygon():
    for p in range(7, 26, 2):
        width = math.sin(2.0 * math.pi / p)
        chord = 1.0 + math.cos(2.0 * math.pi / p)
        radius = chord / (2.0 * math.sin(2.0 * math.pi / p))
        apothem = radius * math.cos(2.0 * math.pi / p) - width / 2.0
        assert apothem > 0.0
        lay = layout(build_star_polygon(p))
        cx, cy = layout_center(lay)
        azimuths = []
        for panel in lay.panels:
            d0 = line_distance(*panel.side(0), (cx, cy))
            d2 = line_distance(*panel.side(2), (cx, cy))
            inner = panel.side(0) if d0 < d2 else panel.side(2)
            assert abs(min(d0, d2) - apothem) < 1e-9
            (ax, ay), (bx, by) = inner
            mx, my = 0.5 * (ax + bx) - cx, 0.5 * (ay + by) - cy
            foot = math.hypot(mx, my)
            assert foot > 0.0
            azimuths.append(math.atan2(my, mx))
        # p tangent lines with evenly spaced normals bound a regular p-gon
        azimuths.sort()
        for i in range(p):
            nxt = azimuths[(i + 1) % p] + (2.0 * math.pi if i + 1 == p else 0.0)
            assert abs((nxt - azimuths[i]) - 2.0 * math.pi / p) < 1e-9


def test_star_polygon_unit_sides():
    panel = layout(build_star_polygon(7)).panels[0]
    chord = 1.0 + math.cos(2.0 * math.pi / 7)
    edges = sorted([side_length(panel, 0), side_length(panel, 2)])
    assert abs(side_length(panel, 1) - 1.0) < 1e-12
    assert abs(side_length(panel, 3) - 1.0) < 1e-12
    # short parallel side is unit too; the base carries the rest
    assert abs(edges[0] - 1.0) < 1e-12
    assert abs(edges[1] - (1.0 + 2.0 * math.cos(2.0 * math.pi / 7))) < 1e-12
    assert abs((edges[0] + edges[1]) / 2.0 - chord) < 1e-12


def test_pinwheel_panel_edges():
    q = 2
    n = 2 * q + 1
    panel = layout(build_pinwheel(q)).panels[0]
    top = 2.0 / math.tan(math.pi / n)
    base = 2.0 / math.sin(math.pi / n)
    edges = sorted([side_length(panel, 0), side_length(panel, 2)])
    assert abs(edges[0] - top) < 1e-12
    assert abs(edges[1] - base) < 1e-12
    # (base + top) / (2 width) collapses to cot(pi / (2n))
    assert abs((base + top) / 2.0 - 1.0 / math.tan(math.pi / (2 * n))) < 1e-12


def test_even_wrap_center_coverage():
    # the n = 2q+2 wraps close the centre exactly; n = 2q+4 leaves a hole
    for q in (3, 5):
        n = 2 * q + 2
        width = math.sin(q * math.pi / n)
        radius = (width / math.tan(math.pi / n)) / (2.0 * math.sin(q * math.pi / n))
        apothem = radius * math.cos(q * math.pi / n) - width / 2.0
        assert abs(apothem) < 1e-12
    for q in (3, 5):
        n = 2 * q + 4
        width = math.sin(q * math.pi / n)
        radius = (width / math.tan(math.pi / n)) / (2.0 * math.sin(q * math.pi / n))
        apothem = radius * math.cos(q * math.pi / n) - width / 2.0
        assert apothem > 1e-3


def test_closed_builders_pass_closure():
    programs = [
        build_odd_wrap(2),
        build_star_polygon(7),
        build_pinwheel(2),
        build_even_wrap(3, 2),
        build_even_wrap(3, 4),
        build_short_52(1e-3),
        build_short_72(1e-3),
        build_74(),
    ]
    for prog in programs:
        assert prog.presentation == "closed"
        layout(prog)  # raises ClosureError when the seam fails to meet


def test_truncated_odd_wrap_has_end_cuts():
    prog = build_odd_wrap(3, "truncated")
    assert prog.presentation == "truncated"
    assert prog.start_cut is not None
    assert prog.end_cut is not None


@pytest.mark.parametrize(
    "call",
    [
        lambda: build_odd_wrap(1),
        lambda: build_odd_wrap(0),
        lambda: build_odd_wrap(2.5),
        lambda: build_odd_wrap(3, "open"),
        lambda: build_star_polygon(5),
        lambda: build_star_polygon(8),
        lambda: build_pinwheel(1),
        lambda: build_even_wrap(2),
        lambda: build_even_wrap(4, 2),
        lambda: build_even_wrap(3, 3),
        lambda: build_short_52(0.0),
        lambda: build_short_52(-1e-3),
        lambda: build_short_52(0.1),
        lambda: build_short_72(0.25),
        lambda: build(FamilyId("star_polygon", 7), presentation="truncated"),
    ],
)
def test_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()


# ---------------------------------------------------------- the shorts


def test_short_ratios_converge_first_order():
    for builder, limit in (
        (build_short_52, 7.0 / math.tan(math.pi / 5.0)),
        (build_short_72, 9.0 / math.tan(math.pi / 5.0)),
    ):
        d3 = limit - ratio(builder(1e-3))
        d4 = limit - ratio(builder(1e-4))
        d6 = limit - ratio(builder(1e-6))
        assert abs(d6) < 5e-6
        assert abs(d3) < 5e-3
        # halving epsilon should halve the defect: first order in epsilon
        assert 8.0 < d3 / d4 < 12.0
        assert d3 - d6 == pytest.approx(d3, rel=2e-2)


def test_short_panel_count_stable_over_epsilon():
    for eps in (1e-4, 1e-3, 1e-2, 5e-2, 9e-2):
        assert len(layout(build_short_52(eps)).panels) == 7
        assert len(layout(build_short_72(eps)).panels) == 9


def test_short_52_certifies_five_two():
    for eps in (1e-3, 1e-2):
        report = verify_knot_type(build_short_52(eps), expected=(5, 2))
        assert report.matches


def test_short_72_certifies_seven_two():
    report = verify_knot_type(build_short_72(1e-3), expected=(7, 2))
    assert report.matches


# ------------------------------------------------------- the rectangle


def test_74_ratio_and_box():
    prog = build_74()
    assert abs(ratio(prog) - 24.0) < 1e-12
    lay = layout(prog)
    xs = [v[0] for panel in lay.panels for v in panel.vertices]
    ys = [v[1] for panel in lay.panels for v in panel.vertices]
    span_x = max(xs) - min(xs)
    span_y = max(ys) - min(ys)
    assert abs(span_x - 3.0) < 1e-9
    assert abs(span_y - 2.0) < 1e-9
    assert abs(span_x / span_y - 1.5) < 1e-9


def test_74_alexander_polynomial():
    # the coincident lane copies must separate cleanly during extraction
    diagram = extract_diagram(layout(build_74()))
    delta = alexander_polynomial(diagram)
    assert delta == LaurentPolynomial({0: 4, 1: -7, 2: 4}).normalized()


# ------------------------------------------------------------ dispatch


def test_build_dispatch_matches_direct_builders():
    pairs = [
        (FamilyId("odd_wrap", 3), build_odd_wrap(3)),
        (FamilyId("star_polygon", 9), build_star_polygon(9)),
        (FamilyId("pinwheel", 2), build_pinwheel(2)),
        (FamilyId("even_wrap_plus2", 3), build_even_wrap(3, 2)),
        (FamilyId("even_wrap_plus4", 5), build_even_wrap(5, 4)),
        (FamilyId("short_52"), build_short_52(1e-3)),
        (FamilyId("short_72"), build_short_72(1e-3)),
        (FamilyId("rect_74"), build_74()),
    ]
    for family, direct in pairs:
        assert build(family).to_json() == direct.to_json()
    trunc = build(FamilyId("odd_wrap", 3), presentation="truncated")
    assert trunc.to_json() == build_odd_wrap(3, "truncated").to_json()


def test_builders_are_deterministic():
    assert build_74().to_json() == build_74().to_json()
    assert build_short_52(2e-3).to_json() == build_short_52(2e-3).to_json()
    assert build_odd_wrap(5).to_json() == build_odd_wrap(5).to_json()
