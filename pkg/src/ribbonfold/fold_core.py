"""Planar fold kernel for flat ribbon strips.

A ribbon of width w is modelled in strip coordinates as the region
between the parallel edges y = -w/2 and y = +w/2, with the centerline
on y = 0.  A crease is a straight line through a centerline position at
an exact rational multiple of pi to the strip direction.  Folding
reflects everything past a crease across the crease line; applying the
creases left to right places every panel in the plane as a flat quad.

A fold program is the complete recipe: width, an ordered crease list,
whether the strip closes into a loop, and optional end cuts for open
presentations.  ``layout`` realizes a program as placed panels,
``unfold`` recovers a program from placed panels, and the two are
mutually inverse up to floating point rounding.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from .errors import (
    ClosureError,
    InconsistencyError,
    InvalidInputError,
    MalformedProgramError,
)

CLOSURE_TOLERANCE = 1e-9

WEAVE_MODES = ("layers", "alternating", "torus", "explicit")


class Point(NamedTuple):
    x: float
    y: float


def _dot(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * bx + ay * by


def _cross(ax: float, ay: float, bx: float, by: float) -> float:
    return ax * by - ay * bx


def _hypot(ax: float, ay: float) -> float:
    return math.hypot(ax, ay)


@dataclass(frozen=True)
class ExactAngle:
    """An angle that is an exact rational multiple of pi.

    The stored value is (numerator / denominator) * pi, normalized to
    [0, 2*pi) with a positive denominator and the fraction reduced, so
    equal angles always compare equal structurally.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if (
            not isinstance(num, int)
            or not isinstance(den, int)
            or isinstance(num, bool)
            or isinstance(den, bool)
        ):
            raise InvalidInputError("angle numerator and denominator must be int")
        if den == 0:
            raise InvalidInputError("angle denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        num //= g
        den //= g
        num %= 2 * den
        g = math.gcd(num, den)
        object.__setattr__(self, "numerator", num // g)
        object.__setattr__(self, "denominator", den // g)

    @classmethod
    def from_fraction(cls, frac: Fraction) -> "ExactAngle":
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def from_float(cls, radians: float, *, tolerance: float = 1e-9) -> "ExactAngle":
        """Snap a float angle to the nearest simple rational multiple of pi.

        Denominators up to 1000 are preferred when one matches within
        ``tolerance``; otherwise the closest dyadic-precision fraction
        is used so arbitrary angles still round-trip.
        """
        if not math.isfinite(radians):
            raise InvalidInputError("angle must be finite")
        turns = Fraction(radians) / Fraction(math.pi)
        for max_den in (1000, 10**12):
            cand = turns.limit_denominator(max_den)
            if abs(float(cand) * math.pi - radians) <= tolerance:
                return cls(cand.numerator, cand.denominator)
        raise InconsistencyError(
            "no rational multiple of pi within %g of %r" % (tolerance, radians)
        )

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def radians(self) -> float:
        return float(self.fraction) * math.pi

    def supplement(self) -> "ExactAngle":
        """pi minus this angle."""
        return ExactAngle(self.denominator - self.numerator, self.denominator)

    def __add__(self, other: "ExactAngle") -> "ExactAngle":
        return ExactAngle.from_fraction(self.fraction + other.fraction)

    def __sub__(self, other: "ExactAngle") -> "ExactAngle":
        return ExactAngle.from_fraction(self.fraction - other.fraction)

    def __repr__(self) -> str:
        return "ExactAngle(%d, %d)" % (self.numerator, self.denominator)


@dataclass(frozen=True)
class Isometry:
    """A planar isometry stored as a 2x3 affine matrix.

    Maps (x, y) to (a*x + b*y + tx, c*x + d*y + ty).  Only rigid
    motions and reflections are ever constructed, so the linear part is
    always orthogonal.
    """

    a: float = 1.0
    b: float = 0.0
    tx: float = 0.0
    c: float = 0.0
    d: float = 1.0
    ty: float = 0.0

    @classmethod
    def identity(cls) -> "Isometry":
        return cls()

    @classmethod
    def reflection(cls, p: Point, q: Point) -> "Isometry":
        """Reflection across the line through p and q."""
        ux, uy = q[0] - p[0], q[1] - p[1]
        norm = _hypot(ux, uy)
        if norm < 1e-15:
            raise InvalidInputError("reflection line needs two distinct points")
        ux /= norm
        uy /= norm
        a = ux * ux - uy * uy
        b = 2.0 * ux * uy
        px, py = p[0], p[1]
        tx = px - (a * px + b * py)
        ty = py - (b * px - a * py)
        return cls(a, b, tx, b, -a, ty)

    @classmethod
    def reflection_at(cls, point: Point, angle: ExactAngle) -> "Isometry":
        """Reflection across the line through ``point`` at ``angle``."""
        r = angle.radians
        q = Point(point[0] + math.cos(r), point[1] + math.sin(r))
        return cls.reflection(Point(point[0], point[1]), q)

    def apply(self, p: Point) -> Point:
        x, y = p[0], p[1]
        return Point(self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)

    def apply_vector(self, vx: float, vy: float) -> Tuple[float, float]:
        return (self.a * vx + self.b * vy, self.c * vx + self.d * vy)

    def compose(self, other: "Isometry") -> "Isometry":
        """Return self after other, i.e. the map p -> self(other(p))."""
        oa, ob, otx, oc, od, oty = other.a, other.b, other.tx, other.c, other.d, other.ty
        return Isometry(
            self.a * oa + self.b * oc,
            self.a * ob + self.b * od,
            self.a * otx + self.b * oty + self.tx,
            self.c * oa + self.d * oc,
            self.c * ob + self.d * od,
            self.c * otx + self.d * oty + self.ty,
        )

    @property
    def orientation(self) -> int:
        """+1 for rigid motions, -1 for reflections."""
        return 1 if self.a * self.d - self.b * self.c > 0 else -1


def reflect_point(p: Point, line: Tuple[Point, Point]) -> Point:
    """Reflect a point across the line through two distinct points."""
    return Isometry.reflection(line[0], line[1]).apply(Point(p[0], p[1]))


@dataclass(frozen=True)
class CreaseSpec:
    """One fold line: centerline position, exact angle, layer jump."""

    position: float
    angle: ExactAngle
    layer_shift: int = 1

    def __post_init__(self):
        pos = self.position
        if isinstance(pos, bool) or not isinstance(pos, (int, float)):
            raise MalformedProgramError("crease position must be a number")
        pos = float(pos)
        if not math.isfinite(pos) or pos <= 0.0:
            raise MalformedProgramError("crease position must be finite and positive")
        object.__setattr__(self, "position", pos)
        if not isinstance(self.angle, ExactAngle):
            raise MalformedProgramError("crease angle must be an ExactAngle")
        if not 0 < self.angle.fraction < 1:
            raise MalformedProgramError("crease angle must lie strictly between 0 and pi")
        if isinstance(self.layer_shift, bool) or not isinstance(self.layer_shift, int):
            raise MalformedProgramError("layer_shift must be an integer")
        if self.layer_shift == 0:
            raise MalformedProgramError("layer_shift must be nonzero")


@dataclass(frozen=True)
class CutSpec:
    """A straight end cut for an open presentation."""

    position: float
    angle: ExactAngle = ExactAngle(1, 2)

    def __post_init__(self):
        pos = self.position
        if isinstance(pos, bool) or not isinstance(pos, (int, float)):
            raise MalformedProgramError("cut position must be a number")
        pos = float(pos)
        if not math.isfinite(pos):
            raise MalformedProgramError("cut position must be finite")
        object.__setattr__(self, "position", pos)
        if not isinstance(self.angle, ExactAngle):
            raise MalformedProgramError("cut angle must be an ExactAngle")
        if not 0 < self.angle.fraction < 1:
            raise MalformedProgramError("cut angle must lie strictly between 0 and pi")


@dataclass(frozen=True)
class WeaveRule:
    """How crossings decide over/under when panel layers tie.

    Modes: "layers" reads panel heights (the default behaviour when no
    rule is given), "alternating" alternates over/under along the
    strand, "torus" sends the outward-bound strand over, and
    "explicit" lists signed crossing pairs directly.
    """

    mode: str
    pairs: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.mode not in WEAVE_MODES:
            raise MalformedProgramError("unknown weave mode %r" % (self.mode,))
        pairs = []
        for entry in self.pairs:
            i, j, s = entry
            if (
                isinstance(i, bool)
                or isinstance(j, bool)
                or isinstance(s, bool)
                or not isinstance(i, int)
                or not isinstance(j, int)
                or not isinstance(s, int)
            ):
                raise MalformedProgramError("weave pair entries must be integers")
            if i == j or s not in (-1, 1):
                raise MalformedProgramError("weave pair must be (i, j, +-1) with i != j")
            pairs.append((i, j, s))
        if pairs and self.mode != "explicit":
            raise MalformedProgramError("weave pairs are only valid in explicit mode")
        if self.mode == "explicit" and not pairs:
            raise MalformedProgramError("explicit weave needs at least one pair")
        object.__setattr__(self, "pairs", tuple(pairs))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise MalformedProgramError(message)


@dataclass(frozen=True)
class FoldProgram:
    """A complete flat-fold recipe for one ribbon strip.

    ``presentation`` is "closed" for a loop whose last crease doubles
    as the seam, or "truncated" for an open strip with straight end
    cuts.  Crease positions are strictly increasing and, for closed
    programs, the final position is the loop's strip length.
    """

    width: float
    creases: Tuple[CreaseSpec, ...]
    presentation: str = "closed"
    label: str = ""
    start_cut: Optional[CutSpec] = None
    end_cut: Optional[CutSpec] = None
    weave: Optional[WeaveRule] = None

    def __post_init__(self):
        w = self.width
        if isinstance(w, bool) or not isinstance(w, (int, float)):
            raise MalformedProgramError("width must be a number")
        w = float(w)
        _require(math.isfinite(w) and w > 0.0, "width must be finite and positive")
        object.__setattr__(self, "width", w)
        creases = tuple(self.creases)
        for c in creases:
            _require(isinstance(c, CreaseSpec), "creases must be CreaseSpec instances")
        positions = [c.position for c in creases]
        _require(
            all(positions[i] < positions[i + 1] for i in range(len(positions) - 1)),
            "crease positions must be strictly increasing",
        )
        object.__setattr__(self, "creases", creases)
        _require(
            self.presentation in ("closed", "truncated"),
            "presentation must be 'closed' or 'truncated'",
        )
        _require(isinstance(self.label, str), "label must be a string")
        if self.presentation == "closed":
            _require(len(creases) >= 1, "a closed program needs at least one crease")
            _require(
                self.start_cut is None and self.end_cut is None,
                "end cuts are only valid for truncated programs",
            )
            total = sum(c.layer_shift for c in creases)
            _require(total == 0, "closed program layer shifts must sum to zero")
        else:
            for cut in (self.start_cut, self.end_cut):
                _require(
                    cut is None or isinstance(cut, CutSpec),
                    "cuts must be CutSpec instances",
                )
            if self.start_cut is not None and creases:
                _require(
                    self.start_cut.position < positions[0],
                    "start cut must precede the first crease",
                )
            if self.end_cut is not None and creases:
                _require(
                    positions[-1] < self.end_cut.position,
                    "end cut must follow the last crease",
                )
            if self.start_cut is not None and self.end_cut is not None:
                _require(
                    self.start_cut.position < self.end_cut.position,
                    "start cut must precede end cut",
                )
            if not creases:
                _require(
                    self.start_cut is not None and self.end_cut is not None,
                    "a truncated program with no creases needs both end cuts",
                )
        if self.weave is not None:
            _require(isinstance(self.weave, WeaveRule), "weave must be a WeaveRule")

    def effective_cuts(self) -> Tuple[CutSpec, CutSpec]:
        """End cuts with defaults filled in.

        A missing cut defaults to a square cut through the point where
        the nearest crease meets the earlier (or later) ribbon edge, so
        the end panel is as short as possible without clipping the
        crease segment.
        """
        if self.presentation != "truncated":
            raise MalformedProgramError("only truncated programs have end cuts")
        start, end = self.start_cut, self.end_cut
        half = 0.5 * self.width
        if start is None:
            first = self.creases[0]
            reach = abs(half / math.tan(first.angle.radians))
            start = CutSpec(first.position - reach)
        if end is None:
            last = self.creases[-1]
            reach = abs(half / math.tan(last.angle.radians))
            end = CutSpec(last.position + reach)
        return start, end

    def length(self) -> float:
        """Strip length of the flat ribbon before folding."""
        if self.presentation == "closed":
            return self.creases[-1].position
        start, end = self.effective_cuts()
        return end.position - start.position

    def to_json(self) -> str:
        doc = {
            "width": self.width,
            "presentation": self.presentation,
            "label": self.label,
            "creases": [
                {
                    "position": c.position,
                    "angle_num": c.angle.numerator,
                    "angle_den": c.angle.denominator,
                    "layer_shift": c.layer_shift,
                }
                for c in self.creases
            ],
        }
        if self.start_cut is not None:
            doc["start_cut"] = {
                "position": self.start_cut.position,
                "angle_num": self.start_cut.angle.numerator,
                "angle_den": self.start_cut.angle.denominator,
            }
        if self.end_cut is not None:
            doc["end_cut"] = {
                "position": self.end_cut.position,
                "angle_num": self.end_cut.angle.numerator,
                "angle_den": self.end_cut.angle.denominator,
            }
        if self.weave is not None:
            if self.weave.mode == "explicit":
                doc["weave"] = {
                    "mode": "explicit",
                    "pairs": [list(p) for p in self.weave.pairs],
                }
            else:
                doc["weave"] = self.weave.mode
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "FoldProgram":
        try:
            doc = json.loads(text)
        except ValueError as exc:
            raise MalformedProgramError("invalid JSON: %s" % exc) from exc
        _require(isinstance(doc, dict), "program document must be a JSON object")
        _require("width" in doc, "missing field 'width'")
        _require("presentation" in doc, "missing field 'presentation'")
        _require("creases" in doc, "missing field 'creases'")
        raw_creases = doc["creases"]
        _require(isinstance(raw_creases, list), "'creases' must be a list")
        creases = []
        previous = None
        for entry in raw_creases:
            _require(isinstance(entry, dict), "each crease must be a JSON object")
            for key in ("position", "angle_num", "angle_den", "layer_shift"):
                _require(key in entry, "crease missing field %r" % key)
            num, den = entry["angle_num"], entry["angle_den"]
            _require(
                isinstance(num, int) and isinstance(den, int) and not isinstance(num, bool) and not isinstance(den, bool),
                "angle_num and angle_den must be integers",
            )
            _require(den > 0, "angle_den must be positive")
            crease = CreaseSpec(entry["position"], ExactAngle(num, den), entry["layer_shift"])
            if previous is not None and crease.position <= previous:
                raise MalformedProgramError("creases must be sorted by strictly increasing position")
            previous = crease.position
            creases.append(crease)
        cuts = {}
        for name in ("start_cut", "end_cut"):
            if name in doc and doc[name] is not None:
                entry = doc[name]
                _require(isinstance(entry, dict), "%s must be a JSON object" % name)
                for key in ("position", "angle_num", "angle_den"):
                    _require(key in entry, "%s missing field %r" % (name, key))
                _require(entry["angle_den"] > 0, "angle_den must be positive")
                cuts[name] = CutSpec(
                    entry["position"], ExactAngle(entry["angle_num"], entry["angle_den"])
                )
        weave = None
        if "weave" in doc and doc["weave"] is not None:
            raw = doc["weave"]
            if isinstance(raw, str):
                weave = WeaveRule(raw)
            elif isinstance(raw, dict):
                _require("mode" in raw, "weave object missing field 'mode'")
                pairs = raw.get("pairs", [])
                _require(isinstance(pairs, list), "weave pairs must be a list")
                weave = WeaveRule(raw["mode"], tuple(tuple(p) for p in pairs))
            else:
                raise MalformedProgramError("weave must be a string or object")
        return cls(
            width=doc["width"],
            creases=tuple(creases),
            presentation=doc["presentation"],
            label=doc.get("label", ""),
            start_cut=cuts.get("start_cut"),
            end_cut=cuts.get("end_cut"),
            weave=weave,
        )


@dataclass(frozen=True)
class Panel:
    """One placed quad of the folded layout.

    ``vertices`` are four corners in cyclic order.  Sides 0 and 2 (the
    side from vertex 0 to 1 and the side from vertex 2 to 3) lie on the
    ribbon edges and are parallel; sides 3 and 1 are the entering and
    leaving fold lines (or end cuts).  ``layer`` is the stacking height
    and ``placement`` the isometry that carried the panel from strip
    coordinates to the plane.
    """

    vertices: Tuple[Point, Point, Point, Point]
    layer: int
    index: int
    placement: Isometry
    parallel_pair: Tuple[int, int] = (0, 2)

    def side(self, k: int) -> Tuple[Point, Point]:
        a = self.vertices[k % 4]
        b = self.vertices[(k + 1) % 4]
        return (a, b)

    @property
    def orientation(self) -> int:
        """Sign of the quad's winding: +1 counterclockwise."""
        area2 = 0.0
        pts = self.vertices
        for i in range(4):
            ax, ay = pts[i]
            bx, by = pts[(i + 1) % 4]
            area2 += ax * by - ay * bx
        return 1 if area2 > 0 else -1


@dataclass(frozen=True)
class FoldedLayout:
    """Placed panels plus the folded centerline of one program."""

    panels: Tuple[Panel, ...]
    centerline: Tuple[Tuple[Point, Point], ...]
    source: Optional[FoldProgram] = None

    @property
    def width(self) -> float:
        if self.source is not None:
            return self.source.width
        return _panel_width(self.panels[0])

    def bounding_box(self) -> Tuple[float, float, float, float]:
        xs = [p[0] for panel in self.panels for p in panel.vertices]
        ys = [p[1] for panel in self.panels for p in panel.vertices]
        return (min(xs), min(ys), max(xs), max(ys))


def _boundaries(program: FoldProgram) -> list:
    """Panel boundary lines as (position, ExactAngle, is_crease)."""
    if program.presentation == "closed":
        seam = program.creases[-1].angle
        if len(program.creases) % 2 == 1:
            # an odd crease count closes with a reflection, which shows
            # the seam line to the first panel at the supplementary angle
            seam = ExactAngle(seam.denominator - seam.numerator, seam.denominator)
        bounds = [(0.0, seam, False)]
        bounds += [(c.position, c.angle, True) for c in program.creases]
        return bounds
    start, end = program.effective_cuts()
    bounds = [(start.position, start.angle, False)]
    bounds += [(c.position, c.angle, True) for c in program.creases]
    bounds.append((end.position, end.angle, False))
    return bounds


def layout(program: FoldProgram) -> FoldedLayout:
    """Realize a fold program as placed panels in the plane.

    Panels are laid down left to right; each crease reflects the rest
    of the strip across its line, so panel k is carried by the product
    of the first k-1 crease reflections.  Raises MalformedProgramError
    if consecutive boundary lines cross inside the strip, and
    ClosureError if a closed program's seam fails to meet its start.
    """
    w = program.width
    half = 0.5 * w
    bounds = _boundaries(program)
    # x offset of each boundary line where it meets the two edges
    reaches = [half * math.cos(a.radians) / math.sin(a.radians) for _, a, _ in bounds]
    tol = 1e-9 * max(w, 1.0)
    for k in range(len(bounds) - 1):
        xa, xb = bounds[k][0], bounds[k + 1][0]
        ca, cb = reaches[k], reaches[k + 1]
        if (xb - cb) - (xa - ca) < -tol or (xb + cb) - (xa + ca) < -tol:
            raise MalformedProgramError(
                "boundary lines %d and %d cross inside the ribbon" % (k, k + 1)
            )
    panels = []
    segments = []
    placement = Isometry.identity()
    layer = 0
    count = len(bounds) - 1
    for k in range(count):
        xa, aa, _ = bounds[k]
        xb, ab, b_is_crease = bounds[k + 1]
        ca, cb = reaches[k], reaches[k + 1]
        corners = (
            Point(xa - ca, -half),
            Point(xb - cb, -half),
            Point(xb + cb, half),
            Point(xa + ca, half),
        )
        placed = tuple(placement.apply(p) for p in corners)
        panels.append(Panel(placed, layer, k, placement))
        segments.append((placement.apply(Point(xa, 0.0)), placement.apply(Point(xb, 0.0))))
        if b_is_crease:
            crease = program.creases[k]
            mirror = Isometry.reflection_at(Point(xb, 0.0), ab)
            placement = placement.compose(mirror)
            if k < count - 1:
                layer += crease.layer_shift
    if program.presentation == "closed":
        # placement now carries the full product of all crease reflections
        length = program.creases[-1].position
        end = placement.apply(Point(length, 0.0))
        vx, vy = placement.apply_vector(1.0, 0.0)
        gap = _hypot(end[0], end[1])
        turn = _hypot(vx - 1.0, vy)
        if gap > CLOSURE_TOLERANCE or turn > CLOSURE_TOLERANCE:
            raise ClosureError(
                "seam misses start: offset %.3e, direction error %.3e" % (gap, turn)
            )
    return FoldedLayout(tuple(panels), tuple(segments), program)


def _panel_width(panel: Panel) -> float:
    """Distance between a panel's two ribbon-edge sides."""
    (a, b) = panel.side(0)
    ux, uy = b[0] - a[0], b[1] - a[1]
    norm = _hypot(ux, uy)
    if norm < 1e-15:
        raise InconsistencyError("panel %d has a degenerate edge side" % panel.index)
    d2 = abs(_cross(ux, uy, panel.vertices[2][0] - a[0], panel.vertices[2][1] - a[1])) / norm
    d3 = abs(_cross(ux, uy, panel.vertices[3][0] - a[0], panel.vertices[3][1] - a[1])) / norm
    if abs(d2 - d3) > 1e-9 * max(d2, d3, 1.0):
        raise InconsistencyError("panel %d edge sides are not parallel" % panel.index)
    return 0.5 * (d2 + d3)


def centerline_length(obj: Union[FoldProgram, FoldedLayout]) -> float:
    """Total centerline length of a program or of its placed layout."""
    if isinstance(obj, FoldProgram):
        return obj.length()
    if isinstance(obj, FoldedLayout):
        return math.fsum(_hypot(b[0] - a[0], b[1] - a[1]) for a, b in obj.centerline)
    raise InvalidInputError("expected a FoldProgram or FoldedLayout")


def ratio(obj: Union[FoldProgram, FoldedLayout]) -> float:
    """Length-to-width ratio of the flat strip."""
    if isinstance(obj, FoldProgram):
        return obj.length() / obj.width
    if isinstance(obj, FoldedLayout):
        return centerline_length(obj) / obj.width
    raise InvalidInputError("expected a FoldProgram or FoldedLayout")


def _recovered_angle(
    seg: Tuple[Point, Point],
    side: Tuple[Point, Point],
    orientation: int,
    tolerance: float,
) -> ExactAngle:
    """Strip angle of a boundary line from its placed geometry."""
    ux, uy = seg[1][0] - seg[0][0], seg[1][1] - seg[0][1]
    vx, vy = side[1][0] - side[0][0], side[1][1] - side[0][1]
    if _hypot(ux, uy) < 1e-15 or _hypot(vx, vy) < 1e-15:
        raise InconsistencyError("degenerate segment while recovering an angle")
    phi = math.atan2(_cross(ux, uy, vx, vy), _dot(ux, uy, vx, vy))
    theta = (orientation * phi) % math.pi
    if theta < 1e-12 or math.pi - theta < 1e-12:
        raise InconsistencyError("boundary line is parallel to the centerline")
    return ExactAngle.from_float(theta, tolerance=tolerance)


def unfold(
    lay: FoldedLayout,
    *,
    presentation: Optional[str] = None,
    label: Optional[str] = None,
    weave: Optional[WeaveRule] = None,
    angle_tolerance: float = 1e-9,
) -> FoldProgram:
    """Recover the fold program of a placed layout.

    The strip is rebuilt from measured panel geometry alone: positions
    from accumulated centerline segment lengths, the width from edge
    side distances, angles from the turn between each centerline
    segment and its boundary line, snapped back to exact rational
    multiples of pi.  Raises InconsistencyError when panels disagree
    about the width or an angle cannot be snapped.
    """
    panels = lay.panels
    if not panels:
        raise InvalidInputError("layout has no panels")
    if len(panels) != len(lay.centerline):
        raise InconsistencyError("panel and centerline counts disagree")
    src = lay.source
    if presentation is None:
        presentation = src.presentation if src is not None else None
    if presentation is None:
        raise InvalidInputError("presentation is required for a sourceless layout")
    if label is None:
        label = src.label if src is not None else ""
    if weave is None and src is not None:
        weave = src.weave

    widths = [_panel_width(p) for p in panels]
    w = widths[0]
    for k, wk in enumerate(widths):
        if abs(wk - w) > 1e-9 * max(w, 1.0):
            raise InconsistencyError("panel %d width %.12g disagrees with %.12g" % (k, wk, w))
    if src is not None and abs(w - src.width) > 1e-9 * max(w, 1.0):
        raise InconsistencyError("measured width disagrees with the source program")

    lengths = [_hypot(b[0] - a[0], b[1] - a[1]) for a, b in lay.centerline]
    positions = []
    for k in range(1, len(lengths) + 1):
        positions.append(math.fsum(lengths[:k]))

    closed = presentation == "closed"
    creases = []
    n_inner = len(panels) - 1
    for k in range(n_inner):
        angle = _recovered_angle(
            lay.centerline[k], panels[k].side(1), panels[k].orientation, angle_tolerance
        )
        shift = panels[k + 1].layer - panels[k].layer
        if shift == 0:
            raise InconsistencyError("panels %d and %d share a layer" % (k, k + 1))
        creases.append(CreaseSpec(positions[k], angle, shift))
    if closed:
        last = len(panels) - 1
        angle = _recovered_angle(
            lay.centerline[last], panels[last].side(1), panels[last].orientation, angle_tolerance
        )
        shift = -sum(c.layer_shift for c in creases)
        if shift == 0:
            raise InconsistencyError("seam panels share a layer")
        creases.append(CreaseSpec(positions[-1], angle, shift))
        return FoldProgram(
            width=w,
            creases=tuple(creases),
            presentation="closed",
            label=label,
            weave=weave,
        )
    start_angle = _recovered_angle(
        lay.centerline[0], panels[0].side(3), panels[0].orientation, angle_tolerance
    )
    last = len(panels) - 1
    end_angle = _recovered_angle(
        lay.centerline[last], panels[last].side(1), panels[last].orientation, angle_tolerance
    )
    return FoldProgram(
        width=w,
        creases=tuple(creases),
        presentation="truncated",
        label=label,
        start_cut=CutSpec(0.0, start_angle),
        end_cut=CutSpec(positions[-1], end_angle),
        weave=weave,
    )


def _intersect_lines(p: Point, ux: float, uy: float, q: Point, vx: float, vy: float) -> Point:
    """Intersection of the lines p + t*u and q + s*v."""
    denom = _cross(ux, uy, vx, vy)
    if abs(denom) < 1e-13 * max(_hypot(ux, uy) * _hypot(vx, vy), 1e-30):
        raise MalformedProgramError("boundary line is parallel to a ribbon edge")
    t = _cross(q[0] - p[0], q[1] - p[1], vx, vy) / denom
    return Point(p[0] + t * ux, p[1] + t * uy)


def layout_from_centerline(
    points: Sequence[Point],
    width: float,
    heights: Sequence[int],
    *,
    closed: bool,
    start_direction: Optional[Tuple[float, float]] = None,
    end_direction: Optional[Tuple[float, float]] = None,
) -> FoldedLayout:
    """Build a placed layout directly from a centerline polyline.

    For a closed polyline ``points`` lists each vertex once; panel k
    runs from vertex k to vertex k+1 (wrapping).  The boundary line at
    a vertex bisects the turn there, which is exactly the line a flat
    fold must crease along.  For an open polyline the two end boundary
    lines bisect against ``start_direction`` / ``end_direction`` when
    given (the direction the virtual neighbouring segment travels), or
    default to square cuts.

    ``heights`` gives each panel's stacking layer.  The result has no
    source program; pass it to ``unfold`` to recover one.
    """
    pts = [Point(float(p[0]), float(p[1])) for p in points]
    if closed:
        if len(pts) < 3:
            raise InvalidInputError("a closed centerline needs at least 3 vertices")
        count = len(pts)
    else:
        if len(pts) < 2:
            raise InvalidInputError("an open centerline needs at least 2 vertices")
        count = len(pts) - 1
    if len(heights) != count:
        raise InvalidInputError("heights must match the panel count")
    if float(width) <= 0:
        raise InvalidInputError("width must be positive")
    half = 0.5 * float(width)

    dirs = []
    for k in range(count):
        a = pts[k]
        b = pts[(k + 1) % len(pts)]
        ux, uy = b[0] - a[0], b[1] - a[1]
        norm = _hypot(ux, uy)
        if norm < 1e-12:
            raise InvalidInputError("centerline vertices %d and %d coincide" % (k, k + 1))
        dirs.append((ux / norm, uy / norm))

    def bisector(u_in, u_out):
        bx, by = u_in[0] + u_out[0], u_in[1] + u_out[1]
        if _hypot(bx, by) < 1e-12:
            # straight-through reversal, crease perpendicular to travel
            return (-u_in[1], u_in[0])
        return (bx, by)

    # boundary line directions at each panel border
    borders = []
    if closed:
        for k in range(count):
            borders.append(bisector(dirs[k - 1], dirs[k]))
        borders.append(borders[0])
    else:
        if start_direction is not None:
            u0 = (float(start_direction[0]), float(start_direction[1]))
            borders.append(bisector(u0, dirs[0]))
        else:
            borders.append((-dirs[0][1], dirs[0][0]))
        for k in range(1, count):
            borders.append(bisector(dirs[k - 1], dirs[k]))
        if end_direction is not None:
            un = (float(end_direction[0]), float(end_direction[1]))
            borders.append(bisector(dirs[-1], un))
        else:
            borders.append((-dirs[-1][1], dirs[-1][0]))

    panels = []
    segments = []
    for k in range(count):
        a = pts[k]
        b = pts[(k + 1) % len(pts)]
        ux, uy = dirs[k]
        nx, ny = -uy, ux
        bottom = Point(a[0] - nx * half, a[1] - ny * half)
        top = Point(a[0] + nx * half, a[1] + ny * half)
        da, db = borders[k], borders[k + 1]
        p0 = _intersect_lines(bottom, ux, uy, a, da[0], da[1])
        p1 = _intersect_lines(bottom, ux, uy, b, db[0], db[1])
        p2 = _intersect_lines(top, ux, uy, b, db[0], db[1])
        p3 = _intersect_lines(top, ux, uy, a, da[0], da[1])
        quad = (p0, p1, p2, p3) if k % 2 == 0 else (p3, p2, p1, p0)
        panels.append(Panel(quad, int(heights[k]), k, Isometry.identity()))
        segments.append((a, b))
    return FoldedLayout(tuple(panels), tuple(segments), None)
