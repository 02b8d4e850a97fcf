"""Knot diagram extraction and Alexander-polynomial certification.

The folded centerline of a closed program is a closed polygonal curve.
Its transverse self-intersections, together with over/under decisions
read from the panel stacking, form a knot diagram.  The diagram's
Alexander polynomial is computed exactly from the crossing/arc matrix
and compared with the classical torus-knot polynomial to certify that a
construction really ties the knot it claims.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    DegenerateDiagramError,
    InconsistencyError,
    InvalidDiagramError,
    InvalidInputError,
    LayeringInconsistencyError,
)
from .fold_core import FoldProgram, FoldedLayout, Point, layout

DEFAULT_PERTURBATION_SCALE = 1e-3

# matrices larger than this use integer evaluation + interpolation
_INTERPOLATION_THRESHOLD = 14


# ------------------------------------------------------------ polynomials


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable t.

    Stored sparsely as exponent -> coefficient with no zero entries.
    Alexander polynomials are defined up to units +-t^k; ``normalized``
    picks the representative with minimum exponent 0 and positive
    constant term.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=None):
        coeffs = {}
        if coefficients:
            for exp, c in dict(coefficients).items():
                if isinstance(exp, bool) or not isinstance(exp, int):
                    raise InvalidInputError("exponents must be integers")
                if isinstance(c, bool) or not isinstance(c, int):
                    raise InvalidInputError("coefficients must be integers")
                if c != 0:
                    coeffs[exp] = c
        self._coeffs = coeffs

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coeffs)

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def from_list(cls, coeffs: Sequence[int], min_exponent: int = 0) -> "LaurentPolynomial":
        return cls({min_exponent + i: c for i, c in enumerate(coeffs)})

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_exponent(self) -> int:
        if not self._coeffs:
            raise InvalidInputError("zero polynomial has no exponent range")
        return min(self._coeffs)

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise InvalidInputError("zero polynomial has no exponent range")
        return max(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()})

    def evaluate(self, x):
        """Exact value at x (int or Fraction)."""
        total = Fraction(0)
        for e, c in self._coeffs.items():
            total += c * Fraction(x) ** e
        if total.denominator == 1:
            return int(total)
        return total

    def normalized(self) -> "LaurentPolynomial":
        if not self._coeffs:
            return LaurentPolynomial()
        low = self.min_exponent
        shifted = {e - low: c for e, c in self._coeffs.items()}
        if shifted[0] < 0:
            shifted = {e: -c for e, c in shifted.items()}
        return LaurentPolynomial(shifted)

    def is_palindromic(self) -> bool:
        """True when the coefficient sequence reads the same reversed."""
        if not self._coeffs:
            return True
        norm = self.normalized()
        deg = norm.degree
        return all(
            norm._coeffs.get(e, 0) == norm._coeffs.get(deg - e, 0)
            for e in range(deg + 1)
        )

    def to_list(self) -> List[int]:
        """Normalized ascending coefficient list, constant term first."""
        norm = self.normalized()
        if not norm._coeffs:
            return [0]
        return [norm._coeffs.get(e, 0) for e in range(norm.degree + 1)]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                term = str(mag)
            elif e == 1:
                term = "t" if mag == 1 else "%d*t" % mag
            else:
                term = "t^%d" % e if mag == 1 else "%d*t^%d" % (mag, e)
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return "LaurentPolynomial(%r)" % (self._coeffs,)


# dense integer polynomial helpers (ascending coefficients, no gaps)


def _pstrip(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _pstrip(out)


def _psub(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _pstrip(out)


def _pmul(a: List[int], b: List[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _pstrip(out)


def _pdiv_exact(a: List[int], b: List[int]) -> List[int]:
    """Exact division in Z[t]; raises if the quotient is not integral."""
    if not b:
        raise InconsistencyError("polynomial division by zero")
    if not a:
        return []
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(b) - 1]
        if c % lead != 0:
            raise InconsistencyError("polynomial division is not exact")
        q = c // lead
        out[k] = q
        if q:
            for j, cb in enumerate(b):
                rem[k + j] -= q * cb
    if any(rem):
        raise InconsistencyError("polynomial division left a remainder")
    return _pstrip(out)


def _poly_bareiss(matrix: List[List[List[int]]]) -> List[int]:
    """Fraction-free determinant of a matrix of integer polynomials."""
    n = len(matrix)
    if n == 0:
        return [1]
    m = [row[:] for row in matrix]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(m[i][j], m[k][k]), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdiv_exact(num, prev)
            m[i][k] = []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return [-c for c in det] if sign < 0 else det


def _int_bareiss(matrix: List[List[int]]) -> int:
    """Fraction-free integer determinant."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if num % prev != 0:
                    raise InconsistencyError("integer elimination lost exactness")
                m[i][j] = num // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _interpolated_det(matrix: List[List[List[int]]]) -> List[int]:
    """Determinant by integer evaluation and Newton interpolation.

    Entries have degree <= 1, so an s x s determinant has degree <= s
    and s+1 sample points pin it down exactly.
    """
    s = len(matrix)
    points = list(range(2, 2 + s + 1))
    values = []
    for x in points:
        m = [
            [
                (row[j][0] if row[j] else 0) + (row[j][1] if len(row[j]) > 1 else 0) * x
                for j in range(s)
            ]
            for row in matrix
        ]
        values.append(_int_bareiss(m))
    # Newton divided differences over exact rationals
    dd = [Fraction(v) for v in values]
    for level in range(1, len(points)):
        for i in range(len(points) - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level])
    coeffs = [Fraction(0)] * len(points)
    coeffs[0] = dd[0]
    basis = [Fraction(1)]
    for k in range(1, len(points)):
        new_basis = [Fraction(0)] * (len(basis) + 1)
        for i, c in enumerate(basis):
            new_basis[i] -= c * points[k - 1]
            new_basis[i + 1] += c
        basis = new_basis
        for i, c in enumerate(basis):
            coeffs[i] += dd[k] * c
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise InconsistencyError("interpolated determinant is not integral")
        out.append(int(c))
    return _pstrip(out)


# ------------------------------------------------------------ diagram types


@dataclass(frozen=True)
class Crossing:
    """One transverse double point of the diagram."""

    id: int
    over_arc: int
    under_in_arc: int
    under_out_arc: int
    sign: int
    position: Point = Point(0.0, 0.0)


@dataclass(frozen=True)
class KnotDiagram:
    """Signed Gauss code plus derived crossing/arc data.

    ``gauss`` lists, in strand order, triples (crossing id, is_over,
    sign); each crossing id appears exactly twice, once over and once
    under, with the same sign both times.  ``arcs`` counts the over-arcs
    (equal to the number of crossings for a knot).
    """

    gauss: Tuple[Tuple[int, bool, int], ...]
    crossings: Tuple[Crossing, ...]
    arcs: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def signed_sequence(self) -> List[int]:
        """Gauss code as signed integers: +id over, -id under."""
        return [cid if over else -cid for cid, over, _ in self.gauss]


def validate_gauss(gauss: Sequence[Tuple[int, bool, int]]) -> int:
    """Check knot-diagram Gauss validity; returns the crossing count."""
    if len(gauss) % 2 != 0:
        raise InvalidDiagramError("Gauss code length must be even")
    seen: Dict[int, List[Tuple[bool, int]]] = {}
    for cid, over, sign in gauss:
        if sign not in (-1, 1):
            raise InvalidDiagramError("crossing sign must be +1 or -1")
        seen.setdefault(cid, []).append((over, sign))
    for cid, entries in seen.items():
        if len(entries) != 2:
            raise InvalidDiagramError("crossing %d appears %d times" % (cid, len(entries)))
        (o1, s1), (o2, s2) = entries
        if o1 == o2:
            raise InvalidDiagramError("crossing %d lacks an over/under pair" % cid)
        if s1 != s2:
            raise InvalidDiagramError("crossing %d has inconsistent signs" % cid)
    return len(seen)


def diagram_from_gauss(gauss: Sequence[Tuple[int, bool, int]]) -> KnotDiagram:
    """Build a KnotDiagram (with arc incidences) from a signed Gauss code."""
    entries = tuple((int(c), bool(o), int(s)) for c, o, s in gauss)
    n = validate_gauss(entries)
    if n == 0:
        raise InvalidDiagramError("empty Gauss code")
    crossings = _crossings_from_gauss(entries)
    return KnotDiagram(entries, crossings, n)


def _crossings_from_gauss(
    gauss: Tuple[Tuple[int, bool, int], ...],
    positions: Optional[Dict[int, Point]] = None,
) -> Tuple[Crossing, ...]:
    """Arc incidences for every crossing of a validated Gauss code.

    Arc k runs from the k-th under-passage (exclusive) to the next one
    (inclusive), wrapping around the strand.
    """
    under_pos = [i for i, (_, over, _) in enumerate(gauss) if not over]
    n = len(under_pos)
    if n == 0:
        raise InvalidDiagramError("diagram has no under-passages")
    under_index = {pos: k for k, pos in enumerate(under_pos)}
    over_at: Dict[int, int] = {}
    under_at: Dict[int, int] = {}
    sign_of: Dict[int, int] = {}
    for i, (cid, over, sign) in enumerate(gauss):
        sign_of[cid] = sign
        if over:
            over_at[cid] = i
        else:
            under_at[cid] = i
    crossings = []
    for cid in sorted(over_at):
        k = under_index[under_at[cid]]
        # an over passage belongs to the arc begun at the previous
        # under-passage; bisect finds the first under at or after it
        idx = bisect.bisect_left(under_pos, over_at[cid])
        over_arc = (idx - 1) % n
        pos = positions.get(cid, Point(0.0, 0.0)) if positions else Point(0.0, 0.0)
        crossings.append(
            Crossing(cid, over_arc, (k - 1) % n, k, sign_of[cid], pos)
        )
    return tuple(crossings)


# --------------------------------------------------------------- Alexander


def alexander_polynomial(
    diagram: KnotDiagram,
    row: Optional[int] = None,
    col: Optional[int] = None,
    method: str = "auto",
) -> LaurentPolynomial:
    """Normalized Alexander polynomial of a knot diagram.

    Builds the n x n crossing/arc matrix (one row per crossing, one
    column per arc), deletes one row and one column, and takes the
    determinant by fraction-free elimination over integer polynomials.
    Large diagrams instead evaluate the integer matrix at sample points
    and interpolate, which is exact and much faster.
    """
    n = validate_gauss(diagram.gauss)
    if n != diagram.arcs or n != len(diagram.crossings):
        raise InvalidDiagramError("diagram arc/crossing counts disagree")
    # dense degree-1 rows: [constant, t] coefficient pairs
    rows: List[List[List[int]]] = []
    for c in diagram.crossings:
        entries = [[0, 0] for _ in range(n)]
        if c.sign > 0:
            entries[c.over_arc][0] += 1
            entries[c.over_arc][1] -= 1
            entries[c.under_in_arc][1] += 1
            entries[c.under_out_arc][0] -= 1
        else:
            entries[c.over_arc][0] -= 1
            entries[c.over_arc][1] += 1
            entries[c.under_in_arc][0] += 1
            entries[c.under_out_arc][1] -= 1
        rows.append([_pstrip(e) for e in entries])
    r = n - 1 if row is None else row
    c_ = n - 1 if col is None else col
    if not (0 <= r < n and 0 <= c_ < n):
        raise InvalidInputError("deleted row/column out of range")
    minor = [
        [rows[i][j] for j in range(n) if j != c_]
        for i in range(n)
        if i != r
    ]
    if method not in ("auto", "exact", "interpolate"):
        raise InvalidInputError("method must be auto, exact, or interpolate")
    use_interp = method == "interpolate" or (
        method == "auto" and len(minor) > _INTERPOLATION_THRESHOLD
    )
    det = _interpolated_det(minor) if use_interp else _poly_bareiss(minor)
    poly = LaurentPolynomial.from_list(det)
    if poly.is_zero():
        raise InvalidDiagramError("Alexander determinant vanished; not a knot diagram")
    return poly.normalized()


def torus_alexander(p: int, q: int) -> LaurentPolynomial:
    """Alexander polynomial of the (p, q) torus knot.

    Computed as the exact quotient (t^{pq} - 1)(t - 1) divided by
    (t^p - 1)(t^q - 1); either parameter equal to 1 gives the unknot
    polynomial 1.
    """
    for v in (p, q):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidInputError("torus parameters must be integers >= 1")
    if math.gcd(p, q) != 1:
        raise InvalidInputError("torus knot parameters must be coprime")

    def cyclo(k: int) -> List[int]:
        out = [0] * (k + 1)
        out[0] = -1
        out[k] = 1
        return out

    numerator = _pmul(cyclo(p * q), cyclo(1))
    quotient = _pdiv_exact(numerator, cyclo(p))
    quotient = _pdiv_exact(quotient, cyclo(q))
    return LaurentPolynomial.from_list(quotient).normalized()


def determinant_invariant(diagram: KnotDiagram) -> int:
    """|Alexander polynomial at t = -1|."""
    value = alexander_polynomial(diagram).evaluate(-1)
    return abs(int(value))


# -------------------------------------------------------------- extraction


def _canonical_line(a: Point, ux: float, uy: float) -> Tuple[float, float, float]:
    """Line through a with direction u as (nx, ny, d), sign-canonical."""
    nx, ny = -uy, ux
    norm = math.hypot(nx, ny)
    nx /= norm
    ny /= norm
    if nx < 0 or (nx == 0 and ny < 0):
        nx, ny = -nx, -ny
    return nx, ny, nx * a.x + ny * a.y


def _segment_data(centerline):
    starts = []
    vectors = []
    for a, b in centerline:
        starts.append(a)
        vectors.append((b.x - a.x, b.y - a.y))
    return starts, vectors


def _collinear_groups(centerline, scale: float) -> List[List[int]]:
    """Indices of segments sharing a supporting line, in strand order."""
    keys = []
    for (a, b) in centerline:
        ux, uy = b.x - a.x, b.y - a.y
        norm = math.hypot(ux, uy)
        keys.append(_canonical_line(a, ux / norm, uy / norm))
    groups: List[List[int]] = []
    tol_d = 1e-9 * max(scale, 1.0)
    for i, (nx, ny, d) in enumerate(keys):
        for group in groups:
            gx, gy, gd = keys[group[0]]
            if abs(nx * gy - ny * gx) >= 1e-9:
                continue
            # the sign canonicalization can flip on noise-level direction
            # components, so match the offset against either orientation
            dd = d - gd if nx * gx + ny * gy > 0 else d + gd
            if abs(dd) < tol_d:
                group.append(i)
                break
        else:
            groups.append([i])
    return [g for g in groups if len(g) > 1]


def _perturbed_polyline(centerline, epsilon: float):
    """Displace collinear runs apart and re-intersect consecutive lines.

    Returns the new vertex list (one per segment start).  Segments not
    in any collinear group keep their exact supporting lines, so fully
    generic layouts pass through unchanged.
    """
    m = len(centerline)
    starts, vectors = _segment_data(centerline)
    xs = [abs(v) for a, _ in centerline for v in a] or [1.0]
    scale = max(xs)
    offsets = [0.0] * m
    normals = {}
    for group in _collinear_groups(centerline, scale):
        g = len(group)
        # displace every member along the first member's normal so the
        # separation is consistent whatever each segment's travel sense
        a0 = starts[group[0]]
        v0x, v0y = vectors[group[0]]
        n0 = math.hypot(v0x, v0y)
        ref = _canonical_line(a0, v0x / n0, v0y / n0)
        for rank, idx in enumerate(group):
            offsets[idx] = epsilon * (rank - 0.5 * (g - 1))
            normals[idx] = (ref[0], ref[1])
    lines = []
    for k in range(m):
        ux, uy = vectors[k]
        norm = math.hypot(ux, uy)
        ux, uy = ux / norm, uy / norm
        nx, ny = normals.get(k) or _canonical_line(starts[k], ux, uy)[:2]
        base = Point(starts[k].x + offsets[k] * nx, starts[k].y + offsets[k] * ny)
        lines.append((base, ux, uy))
    vertices = []
    for k in range(m):
        (pa, ax, ay) = lines[(k - 1) % m]
        (pb, bx, by) = lines[k]
        denom = ax * by - ay * bx
        if abs(denom) < 1e-9:
            raise DegenerateDiagramError(
                "consecutive centerline segments are parallel at vertex %d" % k
            )
        t = ((pb.x - pa.x) * by - (pb.y - pa.y) * bx) / denom
        vertices.append(Point(pa.x + t * ax, pa.y + t * ay))
    # displaced too far: a segment direction must never flip
    for k in range(m):
        a = vertices[k]
        b = vertices[(k + 1) % m]
        ux, uy = vectors[k]
        if (b.x - a.x) * ux + (b.y - a.y) * uy <= 0:
            raise DegenerateDiagramError("perturbation collapsed segment %d" % k)
    return vertices


def _find_crossings(vertices, scale: float):
    """Transverse interior intersections of the closed polyline."""
    m = len(vertices)
    segs = []
    for k in range(m):
        a = vertices[k]
        b = vertices[(k + 1) % m]
        segs.append((a, b.x - a.x, b.y - a.y))
    tol_param = 1e-9
    hits = []
    for i in range(m):
        ai, dix, diy = segs[i]
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            aj, djx, djy = segs[j]
            denom = dix * djy - diy * djx
            norm = math.hypot(dix, diy) * math.hypot(djx, djy)
            if abs(denom) < 1e-12 * max(norm, 1e-30):
                # parallel tracks never cross; a coincident overlap is
                # degenerate
                rx, ry = aj.x - ai.x, aj.y - ai.y
                dist = abs(rx * diy - ry * dix) / math.hypot(dix, diy)
                if dist < 1e-12 * max(scale, 1.0):
                    raise DegenerateDiagramError(
                        "segments %d and %d remain coincident" % (i, j)
                    )
                continue
            rx, ry = aj.x - ai.x, aj.y - ai.y
            t = (rx * djy - ry * djx) / denom
            s = (rx * diy - ry * dix) / denom
            if t < -tol_param or t > 1 + tol_param or s < -tol_param or s > 1 + tol_param:
                continue
            interior_t = tol_param < t < 1 - tol_param
            interior_s = tol_param < s < 1 - tol_param
            if not (interior_t and interior_s):
                raise DegenerateDiagramError(
                    "segments %d and %d touch at an endpoint" % (i, j)
                )
            hits.append((i, t, j, s, Point(ai.x + t * dix, ai.y + t * diy)))
    for a in range(len(hits)):
        for b in range(a + 1, len(hits)):
            pa, pb = hits[a][4], hits[b][4]
            if math.hypot(pa.x - pb.x, pa.y - pb.y) < 1e-12 * max(scale, 1.0):
                raise DegenerateDiagramError("multiple crossings coincide at one point")
    return segs, hits


def _decide_over(hits, segs, layers, weave, centroid, scale):
    """Over/under decision per crossing; returns over_is_i flags."""
    mode = "layers" if weave is None else weave.mode
    if mode == "layers":
        flags = []
        for (i, t, j, s, pos) in hits:
            if layers[i] == layers[j]:
                raise LayeringInconsistencyError(
                    "segments %d and %d share layer %d at a crossing" % (i, j, layers[i])
                )
            flags.append(layers[i] > layers[j])
        return flags
    if mode == "explicit":
        table = {}
        for (a, b, s) in weave.pairs:
            table[(a, b)] = s
            table.setdefault((b, a), -s)
        flags = []
        for (i, t, j, s_, pos) in hits:
            if (i, j) not in table:
                raise LayeringInconsistencyError(
                    "explicit weave has no entry for segments %d and %d" % (i, j)
                )
            flags.append(table[(i, j)] > 0)
        return flags
    if mode == "torus":
        flags = []
        for (i, t, j, s, pos) in hits:
            ui = segs[i][1], segs[i][2]
            uj = segs[j][1], segs[j][2]
            ni = math.hypot(*ui)
            nj = math.hypot(*uj)
            out_i = (ui[0] * (pos.x - centroid.x) + ui[1] * (pos.y - centroid.y)) / ni
            out_j = (uj[0] * (pos.x - centroid.x) + uj[1] * (pos.y - centroid.y)) / nj
            if abs(out_i - out_j) < 1e-9 * max(scale, 1.0):
                raise LayeringInconsistencyError(
                    "outbound rule cannot order segments %d and %d" % (i, j)
                )
            flags.append(out_i > out_j)
        return flags
    if mode == "alternating":
        # passage ranks along the strand; over on even ranks
        passages = []
        for h, (i, t, j, s, pos) in enumerate(hits):
            passages.append((i, t, h, True))
            passages.append((j, s, h, False))
        passages.sort(key=lambda rec: (rec[0], rec[1]))
        first_rank = {}
        flags = [None] * len(hits)
        for rank, (seg, t, h, is_i) in enumerate(passages):
            if h not in first_rank:
                first_rank[h] = rank
                over_here = rank % 2 == 0
            else:
                if (rank - first_rank[h]) % 2 == 0:
                    raise LayeringInconsistencyError(
                        "alternating weave is inconsistent at crossing %d" % h
                    )
                over_here = rank % 2 == 0
            if flags[h] is None:
                flags[h] = over_here if is_i else not over_here
        return flags
    raise LayeringInconsistencyError("unsupported weave mode %r" % mode)


def extract_diagram(
    lay: FoldedLayout,
    perturbation: Optional[float] = None,
) -> KnotDiagram:
    """Knot diagram of a closed layout's folded centerline.

    Exactly coincident collinear runs (wrap constructions create them
    by design) are displaced apart by ``perturbation`` along their
    shared normal before intersecting; the extraction is re-run at half
    the displacement and must produce the identical Gauss code, which
    guards against the displacement itself creating or destroying
    crossings.
    """
    src = lay.source
    if src is not None and src.presentation != "closed":
        raise DegenerateDiagramError("open strips do not close into a knot diagram")
    if len(lay.centerline) < 3:
        raise DegenerateDiagramError("too few segments to form a diagram")
    w = lay.width
    if perturbation is None:
        perturbation = DEFAULT_PERTURBATION_SCALE * w
    if not (perturbation > 0 and math.isfinite(perturbation)):
        raise InvalidInputError("perturbation must be a positive real")
    m = len(lay.centerline)
    for k in range(m):
        b = lay.centerline[k][1]
        a_next = lay.centerline[(k + 1) % m][0]
        if math.hypot(b.x - a_next.x, b.y - a_next.y) > 1e-6 * max(w, 1.0):
            raise DegenerateDiagramError("centerline is not a closed loop")
    layers = [p.layer for p in lay.panels]
    weave = src.weave if src is not None else None
    first = _extract_once(lay.centerline, layers, weave, perturbation)
    second = _extract_once(lay.centerline, layers, weave, perturbation / 2.0)
    if first.gauss != second.gauss:
        raise DegenerateDiagramError(
            "Gauss code changed under perturbation halving; displacement too large"
        )
    return first


def _extract_once(centerline, layers, weave, epsilon) -> KnotDiagram:
    vertices = _perturbed_polyline(centerline, epsilon)
    scale = max(max(abs(v.x), abs(v.y)) for v in vertices)
    cx = math.fsum(v.x for v in vertices) / len(vertices)
    cy = math.fsum(v.y for v in vertices) / len(vertices)
    segs, hits = _find_crossings(vertices, scale)
    if not hits:
        raise DegenerateDiagramError("centerline has no self-intersections")
    over_is_i = _decide_over(hits, segs, layers, weave, Point(cx, cy), scale)
    signs = []
    for flag, (i, t, j, s, pos) in zip(over_is_i, hits):
        uo = (segs[i][1], segs[i][2]) if flag else (segs[j][1], segs[j][2])
        uu = (segs[j][1], segs[j][2]) if flag else (segs[i][1], segs[i][2])
        signs.append(1 if uo[0] * uu[1] - uo[1] * uu[0] > 0 else -1)
    passages = []
    for h, (i, t, j, s, pos) in enumerate(hits):
        passages.append((i, t, h, over_is_i[h]))
        passages.append((j, s, h, not over_is_i[h]))
    passages.sort(key=lambda rec: (rec[0], rec[1]))
    ids: Dict[int, int] = {}
    gauss = []
    positions: Dict[int, Point] = {}
    for seg, t, h, over in passages:
        if h not in ids:
            ids[h] = len(ids) + 1
            positions[ids[h]] = hits[h][4]
        gauss.append((ids[h], over, signs[h]))
    gauss_t = tuple(gauss)
    validate_gauss(gauss_t)
    crossings = _crossings_from_gauss(gauss_t, positions)
    return KnotDiagram(gauss_t, crossings, len(crossings))


# ------------------------------------------------------------ certification


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of comparing a construction's diagram with a torus knot."""

    p: int
    q: int
    crossing_count: int
    gauss: Tuple[Tuple[int, bool, int], ...]
    alexander: LaurentPolynomial
    reference: LaurentPolynomial
    determinant: int
    crossing_bound: int
    crossing_bound_ok: bool
    matches: bool

    def summary(self) -> str:
        verdict = "MATCH" if self.matches else "MISMATCH"
        return (
            "(%d,%d): %d crossings (bound %d %s), det %d, Alexander %s vs %s -> %s"
            % (
                self.p,
                self.q,
                self.crossing_count,
                self.crossing_bound,
                "ok" if self.crossing_bound_ok else "VIOLATED",
                self.determinant,
                self.alexander,
                self.reference,
                verdict,
            )
        )


def verify_knot_type(
    program: FoldProgram,
    expected: Tuple[int, int],
    perturbation: Optional[float] = None,
) -> CertificationReport:
    """Certify that a closed program ties the expected (p, q) torus knot.

    The verdict is in the report; a mismatch is a result, not an error.
    Extraction or polynomial failures propagate as their own errors.
    """
    p, q = int(expected[0]), int(expected[1])
    lay = layout(program)
    diagram = extract_diagram(lay, perturbation)
    delta = alexander_polynomial(diagram)
    reference = torus_alexander(p, q)
    mirror = LaurentPolynomial(
        {delta.degree - e: c for e, c in delta.coefficients.items()}
    ).normalized()
    matches = delta == reference or mirror == reference
    bound = min(p * (q - 1), q * (p - 1))
    det = abs(int(delta.evaluate(-1)))
    return CertificationReport(
        p=p,
        q=q,
        crossing_count=diagram.crossing_count,
        gauss=diagram.gauss,
        alexander=delta,
        reference=reference,
        determinant=det,
        crossing_bound=bound,
        crossing_bound_ok=diagram.crossing_count >= bound,
        matches=matches,
    )
