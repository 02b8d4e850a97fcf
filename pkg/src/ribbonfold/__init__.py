"""Flat folded ribbon geometry, ratio formulas, and knot certification."""

from .errors import (
    ClosureError,
    DegenerateDiagramError,
    InconsistencyError,
    InvalidDiagramError,
    InvalidInputError,
    LayeringInconsistencyError,
    MalformedProgramError,
    NotApplicableError,
    ParameterError,
    RibbonError,
)
from .fold_core import (
    CreaseSpec,
    CutSpec,
    ExactAngle,
    FoldProgram,
    FoldedLayout,
    Isometry,
    Panel,
    Point,
    WeaveRule,
    centerline_length,
    layout,
    layout_from_centerline,
    ratio,
    reflect_point,
    unfold,
)
from .constructions import (
    FAMILY_TAGS,
    FamilyId,
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
)
from .formulas import (
    BoundsRow,
    RatioFormula,
    RatioReport,
    bounds_table,
    closed_form_ratio,
    crossing_number,
    family_crossing_number,
    kusner_quotient,
    limit_constant,
    quotient_table,
    ratio_report,
    ratio_reports,
    significant,
)
from .render import RenderOptions, render_table_figure, to_svg

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "ClosureError",
    "CreaseSpec",
    "CutSpec",
    "DegenerateDiagramError",
    "ExactAngle",
    "FAMILY_TAGS",
    "FamilyId",
    "FoldProgram",
    "FoldedLayout",
    "InconsistencyError",
    "InvalidDiagramError",
    "InvalidInputError",
    "Isometry",
    "LayeringInconsistencyError",
    "MalformedProgramError",
    "NotApplicableError",
    "Panel",
    "ParameterError",
    "Point",
    "RatioFormula",
    "RatioReport",
    "RenderOptions",
    "RibbonError",
    "TorusKnotParams",
    "WeaveRule",
    "bounds_table",
    "build",
    "build_74",
    "build_even_wrap",
    "build_odd_wrap",
    "build_pinwheel",
    "build_short_52",
    "build_short_72",
    "build_star_polygon",
    "centerline_length",
    "closed_form_ratio",
    "crossing_number",
    "family_crossing_number",
    "knot_type",
    "kusner_quotient",
    "layout",
    "layout_from_centerline",
    "limit_constant",
    "quotient_table",
    "ratio",
    "ratio_report",
    "ratio_reports",
    "reflect_point",
    "render_table_figure",
    "significant",
    "to_svg",
    "unfold",
    "__version__",
]
