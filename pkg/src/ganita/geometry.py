"""Rope-and-peg constructions, area by counting, and the diagonal refinement.

Coordinates are :class:`~ganita.core.ExactScalar` whenever the construction
stays inside the rational/single-surd domain.  When it would not (adding a
rational to an unlike surd), the construction switches to
:class:`ApproxPoint` and carries an explicit tolerance instead of silently
rounding.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import floor, gcd, sqrt
from typing import NamedTuple

from .core import (
    ExactScalar,
    InexactError,
    Length,
    as_rational,
    compare,
    convert,
)
from .errors import DomainError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: ExactScalar
    y: ExactScalar

    def __post_init__(self):
        object.__setattr__(self, "x", ExactScalar.coerce(self.x))
        object.__setattr__(self, "y", ExactScalar.coerce(self.y))

    def approx(self, tol=DEFAULT_TOL):
        return ApproxPoint(float(self.x), float(self.y), tol)

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class ApproxPoint:
    x: float
    y: float
    tol: float = DEFAULT_TOL

    def approx(self, tol=None):
        return self if tol is None else ApproxPoint(self.x, self.y, tol)

    def __str__(self):
        return f"(~{self.x:.12g}, ~{self.y:.12g})"


def is_exact(*points):
    return all(isinstance(p, Point) for p in points)


def _tol(*points):
    return max((p.tol for p in points if isinstance(p, ApproxPoint)), default=DEFAULT_TOL)


def squared_distance(p, q):
    """Exact Fraction when the coordinate differences stay exact, else float."""
    if is_exact(p, q):
        try:
            dx = p.x - q.x
            dy = p.y - q.y
            return dx.square() + dy.square()
        except InexactError:
            pass
    a, b = p.approx(), q.approx()
    return (a.x - b.x) ** 2 + (a.y - b.y) ** 2


def _same(u, v, tol):
    if isinstance(u, Fraction) and isinstance(v, Fraction):
        return u == v
    return abs(float(u) - float(v)) <= tol


def orientation(o, a, b, tol=DEFAULT_TOL):
    """Sign of the cross product (a - o) x (b - o): 1 left turn, -1 right, 0 collinear."""
    if is_exact(o, a, b):
        try:
            ux, uy = a.x - o.x, a.y - o.y
            vx, vy = b.x - o.x, b.y - o.y
            # sign(ux*vy - uy*vx) without adding unlike surds
            return compare(ux * vy, uy * vx)
        except InexactError:
            pass
    o, a, b = o.approx(), a.approx(), b.approx()
    c = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
    if abs(c) <= tol:
        return 0
    return 1 if c > 0 else -1


# ---------------------------------------------------------------------------
# East-west line from the shadow observation


@dataclass(frozen=True)
class OrientedLine:
    """Line through ``start`` and ``end``, oriented from start to end."""

    start: object
    end: object
    name: str = ""

    def direction(self):
        if is_exact(self.start, self.end):
            try:
                return (self.end.x - self.start.x, self.end.y - self.start.y)
            except InexactError:
                pass
        s, e = self.start.approx(), self.end.approx()
        return (e.x - s.x, e.y - s.y)

    def contains(self, p):
        return orientation(self.start, self.end, p, _tol(self.start, self.end, p)) == 0


def prachi_from_shadow_points(morning, evening, center=None, radius=None):
    """East-west line through the two points where the shadow tip met the circle.

    The morning shadow falls to the west, so the returned line runs from the
    morning point (west end) to the evening point (east end).  ``radius`` may
    be omitted, in which case the two points only have to be equidistant from
    the stake.
    """
    if center is None:
        center = Point(0, 0)
    tol = _tol(morning, evening, center)
    if _same(squared_distance(morning, evening), Fraction(0), tol):
        raise DomainError("degenerate shadow observation: the two marks coincide")
    dm = squared_distance(morning, center)
    de = squared_distance(evening, center)
    if radius is not None:
        r2 = ExactScalar.coerce(radius).square() if not isinstance(radius, float) else radius**2
        if not (_same(dm, r2, tol) and _same(de, r2, tol)):
            raise DomainError("invalid observation: shadow mark is off the circle")
    elif not _same(dm, de, tol):
        raise DomainError("invalid observation: shadow marks are not on one circle")
    return OrientedLine(morning, evening, "prāchī")


def equinox_shadow_points(radius=5, t=Fraction(1, 3)):
    """Idealized equinox shadow marks on a circle of ``radius`` around the stake.

    Rise and set azimuths are mirror images about the meridian, so the marks
    are symmetric about the north-south axis.  The rational parameter ``t``
    picks the mark via the Pythagorean parametrization, keeping it exact;
    the default gives (-4, 3) and (4, 3) on a circle of radius 5.
    """
    r = as_rational(radius)
    t = as_rational(t)
    x = r * (1 - t * t) / (1 + t * t)
    y = r * 2 * t / (1 + t * t)
    return Point(-x, y), Point(x, y)


# ---------------------------------------------------------------------------
# Perpendicular by stretching a marked cord


def perpendicular_via_cord(a, b, c, cord_length):
    """Pegs P (north, left of A->B) and Q (south) from a cord tied to A and B.

    The cord's midpoint mark is pulled taut to either side, so
    |PA| = |PB| = |QA| = |QB| = cord_length / 2.  Returns exact points when
    every coordinate stays a single surd, otherwise :class:`ApproxPoint` s.
    """
    exact = is_exact(a, b, c) and not isinstance(cord_length, float)
    tol = _tol(a, b, c)
    ab2 = squared_distance(a, b)
    if isinstance(ab2, float):
        exact = False
    if exact:
        try:
            mid_ok = (a.x + b.x == 2 * c.x) and (a.y + b.y == 2 * c.y)
        except InexactError:
            exact = False
    if not exact:
        aa, bb, cc = a.approx(), b.approx(), c.approx()
        mid_ok = abs(aa.x + bb.x - 2 * cc.x) <= tol and abs(aa.y + bb.y - 2 * cc.y) <= tol
    if not mid_ok:
        raise DomainError("pegs not equidistant from the foot point C")

    if exact:
        L = ExactScalar.coerce(cord_length)
        if L.sign() <= 0 or L.square() <= ab2:
            raise DomainError("cord too short to stretch taut")
        try:
            # offset = k * (-dy, dx) with k^2 = (L^2 - AB^2) / (4 AB^2)
            k = ExactScalar.sqrt((L.square() - ab2) / (4 * ab2))
            dx, dy = b.x - a.x, b.y - a.y
            ox, oy = -dy * k, dx * k
            return Point(c.x + ox, c.y + oy), Point(c.x - ox, c.y - oy)
        except InexactError:
            pass

    aa, bb, cc = a.approx(tol), b.approx(tol), c.approx(tol)
    half = float(cord_length) / 2
    ab = sqrt(float(ab2))
    if half * 2 <= ab:
        raise DomainError("cord too short to stretch taut")
    h = sqrt(half * half - ab * ab / 4)
    nx, ny = -(bb.y - aa.y) / ab, (bb.x - aa.x) / ab
    return (
        ApproxPoint(cc.x + h * nx, cc.y + h * ny, tol),
        ApproxPoint(cc.x - h * nx, cc.y - h * ny, tol),
    )


# ---------------------------------------------------------------------------
# Naming figures


class FigureClass(str, Enum):
    CATURASRA = "caturasra"
    SAMACATURASRA = "samacaturasra"
    UBHAYATAHPRAUGA = "ubhayataḥprauga"
    PRAUGA = "prauga"
    DIRGHACATURASRA = "dīrghacaturasra"
    OTHER = "other"

    def __str__(self):
        return self.value


def _segments_cross(p1, p2, p3, p4, tol):
    return (
        orientation(p1, p2, p3, tol) != orientation(p1, p2, p4, tol)
        and orientation(p3, p4, p1, tol) != orientation(p3, p4, p2, tol)
    )


def classify_quadrilateral(vertices):
    """Name a simple quadrilateral from its side and diagonal lengths."""
    if len(vertices) != 4:
        raise DomainError("not a simple quadrilateral: need four vertices")
    v = list(vertices)
    tol = _tol(*v)
    for i in range(4):
        for j in range(i + 1, 4):
            if _same(squared_distance(v[i], v[j]), Fraction(0), tol):
                raise DomainError("not a simple quadrilateral: repeated vertex")
    for i in range(4):
        others = [v[j] for j in range(4) if j != i]
        if orientation(*others, tol=tol) == 0:
            raise DomainError("not a simple quadrilateral: three vertices collinear")
    if _segments_cross(v[0], v[1], v[2], v[3], tol) or _segments_cross(v[1], v[2], v[3], v[0], tol):
        raise DomainError("not a simple quadrilateral: sides cross")

    sides = [squared_distance(v[i], v[(i + 1) % 4]) for i in range(4)]
    d1 = squared_distance(v[0], v[2])
    d2 = squared_distance(v[1], v[3])
    all_sides = all(_same(s, sides[0], tol) for s in sides[1:])
    diags = _same(d1, d2, tol)
    if all_sides:
        return FigureClass.SAMACATURASRA if diags else FigureClass.UBHAYATAHPRAUGA
    if _same(sides[0], sides[2], tol) and _same(sides[1], sides[3], tol) and diags:
        return FigureClass.DIRGHACATURASRA
    return FigureClass.CATURASRA


def classify_triangle(vertices):
    """prauga (isosceles triangle, half a rhombus) or other."""
    if len(vertices) != 3:
        raise DomainError("need three vertices")
    a, b, c = vertices
    tol = _tol(a, b, c)
    if orientation(a, b, c, tol) == 0:
        raise DomainError("degenerate triangle")
    s = [squared_distance(a, b), squared_distance(b, c), squared_distance(c, a)]
    if _same(s[0], s[1], tol) or _same(s[1], s[2], tol) or _same(s[0], s[2], tol):
        return FigureClass.PRAUGA
    return FigureClass.OTHER


# ---------------------------------------------------------------------------
# Area by counting unit squares


def _grid_coords(vertices, unit):
    unit = as_rational(unit)
    if unit <= 0:
        raise DomainError("unit must be positive")
    out = []
    for v in vertices:
        if isinstance(v, Point):
            x, y = v.x, v.y
        else:
            x, y = v
        try:
            gx, gy = as_rational(x) / unit, as_rational(y) / unit
        except InexactError:
            raise DomainError("cannot tile with given unit: irrational vertex") from None
        if gx.denominator != 1 or gy.denominator != 1:
            raise DomainError("cannot tile with given unit")
        out.append((gx.numerator, gy.numerator))
    return out, unit


def area_by_unit_counting(figure, unit=1):
    """Count the unit cells inside an axis-aligned rectilinear polygon.

    Cells are visited one by one, row by row; a cell is inside when its
    centre is (even-odd rule).  Returns ``(count, count * unit**2)``.
    """
    grid, unit = _grid_coords(figure, unit)
    if len(grid) < 4:
        raise DomainError("a rectilinear figure needs at least four vertices")
    n = len(grid)
    verticals = []
    for i in range(n):
        (x0, y0), (x1, y1) = grid[i], grid[(i + 1) % n]
        if x0 != x1 and y0 != y1:
            raise DomainError("figure is not axis-aligned")
        if x0 == x1 and y0 != y1:
            verticals.append((x0, min(y0, y1), max(y0, y1)))
    ys = [y for _, y in grid]
    count = 0
    for row in range(min(ys), max(ys)):
        # cell centres sit at row + 1/2; compare doubled values to stay in ints
        crossings = sorted(x for x, lo, hi in verticals if 2 * lo < 2 * row + 1 < 2 * hi)
        for left, right in zip(crossings[::2], crossings[1::2]):
            for _cell in range(left, right):
                count += 1
    return count, count * unit * unit


def rectangle(width, height, origin=(0, 0)):
    x0, y0 = (as_rational(c) for c in origin)
    w, h = as_rational(width), as_rational(height)
    return [(x0, y0), (x0 + w, y0), (x0 + w, y0 + h), (x0, y0 + h)]


def lattice_area(vertices):
    """Area of a convex lattice polygon from its lattice points, row by row.

    Interior points are counted one at a time along each horizontal row,
    boundary points edge by edge, then area = interior + boundary/2 - 1.
    """
    pts = [(int(x), int(y)) for x, y in vertices]
    n = len(pts)
    boundary = sum(
        gcd(abs(pts[(i + 1) % n][0] - pts[i][0]), abs(pts[(i + 1) % n][1] - pts[i][1]))
        for i in range(n)
    )
    ys = [y for _, y in pts]
    interior = 0
    for row in range(min(ys) + 1, max(ys)):
        xs = []
        for i in range(n):
            (x0, y0), (x1, y1) = pts[i], pts[(i + 1) % n]
            if y0 == y1:
                continue
            if min(y0, y1) <= row <= max(y0, y1):
                xs.append(Fraction(x0) + Fraction((row - y0) * (x1 - x0), y1 - y0))
        lo, hi = min(xs), max(xs)
        x = floor(lo) + 1
        while x < hi:
            interior += 1
            x += 1
    return Fraction(2 * interior + boundary - 2, 2)


def square_area_scale(side_factor):
    """Area ratio of a square whose side is scaled by ``side_factor``.

    For whole-number factors and unit fractions the ratio is also obtained
    by counting cells, and the two must agree.
    """
    f = as_rational(side_factor)
    if f <= 0:
        raise DomainError("side factor must be positive")
    ratio = f * f
    counted = counted_area_ratio(f)
    if counted is not None and counted != ratio:
        raise AssertionError(f"counting gave {counted}, arithmetic {ratio}")
    return ratio


def counted_area_ratio(f):
    """Area ratio by counting, for integral f or f = 1/n; None otherwise."""
    f = as_rational(f)
    if f.denominator == 1:
        count, _ = area_by_unit_counting(rectangle(f, f), 1)
        return Fraction(count)
    if f.numerator == 1:
        # how many small squares tile the unit square
        count, _ = area_by_unit_counting(rectangle(1, 1), f)
        return Fraction(1, count)
    return None


def diagonal_identity_check(width, height):
    """Square on a rectangle's diagonal versus the squares on its two sides.

    With whole-number sides the three squares are measured by counting: the
    side squares cell by cell, the tilted diagonal square by its lattice
    points.  Returns ``(diagonal_square, holds)``.
    """
    w, h = as_rational(width), as_rational(height)
    if w <= 0 or h <= 0:
        raise DomainError("sides must be positive")
    if w.denominator == 1 and h.denominator == 1:
        a, b = w.numerator, h.numerator
        side_a, _ = area_by_unit_counting(rectangle(a, a))
        side_b, _ = area_by_unit_counting(rectangle(b, b))
        # square erected on the diagonal from (0, b) to (a, 0)
        diag = lattice_area([(a, 0), (a + b, a), (b, a + b), (0, b)])
        holds = diag == side_a + side_b
    else:
        diag = squared_distance(Point(0, 0), Point(w, h))
        holds = diag == w * w + h * h
    assert holds, f"diagonal square {diag} differs from side squares"
    return diag, holds


# ---------------------------------------------------------------------------
# Diagonal of the unit square by adding and removing pieces of cord


class Step(NamedTuple):
    sign: int
    term: Fraction
    multiplier: int


@dataclass(frozen=True)
class RefinementTrace:
    steps: tuple
    cumulative: tuple
    residual_sign: tuple
    target_square: Fraction = Fraction(2)

    @property
    def value(self):
        return self.cumulative[-1] if self.cumulative else Fraction(1)

    @property
    def multipliers(self):
        return tuple(s.multiplier for s in self.steps)

    def residual(self):
        return self.value * self.value - self.target_square

    def expression(self):
        text = "1"
        denom = 1
        for s in self.steps:
            denom *= s.multiplier
            text += f" {'+' if s.sign > 0 else '-'} 1/{denom}"
        return text

    def to_json(self):
        return {
            "steps": [
                {"sign": "+" if s.sign > 0 else "-", "term": str(s.term), "multiplier": s.multiplier}
                for s in self.steps
            ],
            "cumulative": [str(c) for c in self.cumulative],
            "residual_sign": list(self.residual_sign),
            "value": str(self.value),
        }


def _residual_sign(value, square):
    r = value * value - square
    return (r > 0) - (r < 0)


def _least_noncrossing(cum, term, direction, square, side):
    """Smallest n >= 2 such that cum + direction*term/n stays on ``side``."""

    def stays(n):
        return _residual_sign(cum + direction * term / n, square) in (side, 0)

    if stays(2):
        return 2
    hi = 4
    while not stays(hi):
        hi *= 2
    lo = hi // 2  # crosses
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if stays(mid):
            hi = mid
        else:
            lo = mid
    return hi


def sulba_diagonal_refinement(max_steps, square=2):
    """Approach sqrt(square) from 1 by adding or removing pieces of cord.

    Each new piece is a part 1/n of the previous piece.  While the cord is
    short a piece is added, once it is long a piece is removed.  Among the
    possible n >= 2 the rule takes the smallest one that keeps the cord on
    its current side of the target, unless the piece one size larger
    overshoots by strictly less; then the overshoot is taken.  All tests are
    made by comparing squares of rationals.  Three steps for the unit
    square's diagonal give 1 + 1/3 + 1/(3*4) - 1/(3*4*34).
    """
    if max_steps < 1:
        raise DomainError("max_steps must be at least 1")
    square = as_rational(square)
    if square <= 1:
        raise DomainError("target square must exceed the unit square")
    cum = Fraction(1)
    term = Fraction(1)
    steps, cumulative, signs = [], [], []
    for _ in range(max_steps):
        side = _residual_sign(cum, square)
        if side == 0:
            break
        direction = -side
        n = _least_noncrossing(cum, term, direction, square, side)
        if n > 2:
            near = cum + direction * term / n
            over = cum + direction * term / (n - 1)
            lo, hi = (near, over) if direction > 0 else (over, near)
            # over is strictly closer iff hi - r < r - lo, i.e. (lo + hi)^2 vs 4*square
            total = (lo + hi) * (lo + hi)
            closer_over = total < 4 * square if direction > 0 else total > 4 * square
            if closer_over:
                n -= 1
        term = term / n
        cum = cum + direction * term
        steps.append(Step(direction, term, n))
        cumulative.append(cum)
        signs.append(_residual_sign(cum, square))
    return RefinementTrace(tuple(steps), tuple(cumulative), tuple(signs), square)


class ScaledCorrection(NamedTuple):
    term: Fraction
    length: Length
    inches: object  # Length in inches, or None for an abstract unit


def scale_trace_to_unit(trace, unit):
    """Each correction piece as a physical length for a given side ``unit``."""
    out = []
    for s in trace.steps:
        length = unit.scaled(s.term)
        inches = convert(length, "inch") if length.convertible else None
        out.append(ScaledCorrection(s.term, length, inches))
    return out


def altar_scale_factor(old_area, new_area):
    """Linear enlargement taking an altar of ``old_area`` to ``new_area``."""
    old, new = as_rational(old_area), as_rational(new_area)
    if old <= 0 or new <= 0:
        raise DomainError("areas must be positive")
    return ExactScalar.sqrt(new / old)


def decompose_square(x, y):
    """Pieces of the square on x + y: two squares and two x-by-y rectangles."""
    x, y = as_rational(x), as_rational(y)
    if x <= 0 or y <= 0:
        raise DomainError("zero side: both parts must be positive")
    parts = [("X-square", x * x), ("Y-square", y * y), ("rectangle", x * y), ("rectangle", x * y)]
    assert sum(a for _, a in parts) == (x + y) ** 2
    return parts
