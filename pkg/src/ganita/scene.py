"""Scenes: pegs, cords, circles, lines and figures of one construction.

A scene is an immutable value; the ``with_*`` methods return new scenes.
``to_json``/``from_json`` implement the scene document read by the SVG
writer and written by ``ganita construct``.
"""

from dataclasses import dataclass, replace
from fractions import Fraction

from .core import ExactScalar, as_rational
from .errors import DomainError, ParseError
from . import geometry
from .geometry import ApproxPoint, Point


@dataclass(frozen=True)
class Cord:
    ends: tuple
    length: ExactScalar
    marks: tuple = ()


@dataclass(frozen=True)
class Circle:
    center: str
    radius: ExactScalar


@dataclass(frozen=True)
class Line:
    start: str
    end: str
    label: str = ""


@dataclass(frozen=True)
class Figure:
    name: str
    vertices: tuple
    tag: str = "other"
    area: object = None


@dataclass(frozen=True)
class Scene:
    pegs: tuple = ()
    cords: tuple = ()
    circles: tuple = ()
    lines: tuple = ()
    figures: tuple = ()
    approximate: bool = False

    def __post_init__(self):
        names = [n for n, _ in self.pegs]
        if len(set(names)) != len(names):
            raise DomainError("duplicate peg name")
        known = set(names)
        refs = []
        for c in self.cords:
            refs.extend(c.ends)
        refs.extend(c.center for c in self.circles)
        for ln in self.lines:
            refs.extend((ln.start, ln.end))
        for f in self.figures:
            if len(f.vertices) < 3:
                raise DomainError(f"figure {f.name} needs at least three vertices")
            refs.extend(f.vertices)
        missing = sorted(set(refs) - known)
        if missing:
            raise DomainError(f"unknown peg(s): {', '.join(missing)}")

    def peg(self, name):
        for n, p in self.pegs:
            if n == name:
                return p
        raise KeyError(name)

    def with_peg(self, name, point):
        approx = self.approximate or isinstance(point, ApproxPoint)
        return replace(self, pegs=self.pegs + ((name, point),), approximate=approx)

    def with_cord(self, a, b, length, marks=()):
        cord = Cord((a, b), ExactScalar.coerce(length), tuple(as_rational(m) for m in marks))
        return replace(self, cords=self.cords + (cord,))

    def with_circle(self, center, radius):
        return replace(self, circles=self.circles + (Circle(center, ExactScalar.coerce(radius)),))

    def with_line(self, start, end, label=""):
        return replace(self, lines=self.lines + (Line(start, end, label),))

    def with_figure(self, name, vertices, tag=None, area=None):
        vertices = tuple(vertices)
        if tag is None:
            pts = [self.peg(v) for v in vertices]
            if len(pts) == 4:
                tag = str(geometry.classify_quadrilateral(pts))
            elif len(pts) == 3:
                tag = str(geometry.classify_triangle(pts))
            else:
                tag = "other"
        return replace(self, figures=self.figures + (Figure(name, vertices, str(tag), area),))

    # -- document -----------------------------------------------------
    def to_json(self):
        return {
            "pegs": [{"name": n, **_point_json(p)} for n, p in self.pegs],
            "cords": [
                {
                    "ends": list(c.ends),
                    "length": c.length.to_json(),
                    "marks": [_frac_json(m) for m in c.marks],
                }
                for c in self.cords
            ],
            "circles": [{"center": c.center, "radius": c.radius.to_json()} for c in self.circles],
            "lines": [{"from": ln.start, "to": ln.end, "label": ln.label} for ln in self.lines],
            "figures": [
                {
                    "name": f.name,
                    "vertices": list(f.vertices),
                    "class": f.tag,
                    **({"area": _frac_json(f.area)} if f.area is not None else {}),
                }
                for f in self.figures
            ],
            "approximate": self.approximate,
        }

    @classmethod
    def from_json(cls, doc):
        try:
            pegs = tuple((p["name"], _point_from_json(p)) for p in doc["pegs"])
            cords = tuple(
                Cord(
                    tuple(c["ends"]),
                    scalar_from_json(c["length"]),
                    tuple(Fraction(m["num"], m["den"]) for m in c.get("marks", [])),
                )
                for c in doc["cords"]
            )
            circles = tuple(
                Circle(c["center"], scalar_from_json(c["radius"])) for c in doc["circles"]
            )
            lines = tuple(Line(ln["from"], ln["to"], ln.get("label", "")) for ln in doc["lines"])
            figures = tuple(
                Figure(
                    f["name"],
                    tuple(f["vertices"]),
                    f.get("class", "other"),
                    Fraction(f["area"]["num"], f["area"]["den"]) if "area" in f else None,
                )
                for f in doc["figures"]
            )
            approximate = bool(doc["approximate"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed scene document: {exc}") from exc
        return cls(pegs, cords, circles, lines, figures, approximate)


def _frac_json(q):
    q = as_rational(q)
    return {"num": q.numerator, "den": q.denominator}


def scalar_from_json(doc):
    if isinstance(doc, (int, float)):
        return float(doc)
    return ExactScalar.from_json(doc)


def scalar_to_float(doc):
    return float(scalar_from_json(doc))


def _point_json(p):
    if isinstance(p, ApproxPoint):
        return {"x": p.x, "y": p.y, "tol": p.tol}
    return {"x": p.x.to_json(), "y": p.y.to_json()}


def _point_from_json(doc):
    if isinstance(doc["x"], (int, float)) or isinstance(doc["y"], (int, float)):
        return ApproxPoint(float(doc["x"]), float(doc["y"]), doc.get("tol", geometry.DEFAULT_TOL))
    return Point(ExactScalar.from_json(doc["x"]), ExactScalar.from_json(doc["y"]))


# ---------------------------------------------------------------------------
# Recipes


def recipe_prachi():
    morning, evening = geometry.equinox_shadow_points(5)
    line = geometry.prachi_from_shadow_points(morning, evening, Point(0, 0), 5)
    scene = (
        Scene()
        .with_peg("S", Point(0, 0))
        .with_circle("S", 5)
        .with_peg("M", line.start)
        .with_peg("E", line.end)
    )
    return scene.with_cord("S", "M", 5).with_line("M", "E", line.name)


def _perpendicular_scene(cord_length, figure):
    a, b, c = Point(-3, 0), Point(3, 0), Point(0, 0)
    p, q = geometry.perpendicular_via_cord(a, b, c, cord_length)
    scene = (
        Scene()
        .with_peg("A", a)
        .with_peg("B", b)
        .with_peg("C", c)
        .with_peg("P", p)
        .with_peg("Q", q)
        .with_line("A", "B", "prāchī")
        .with_line("P", "Q", "north-south")
        .with_cord("A", "B", cord_length, marks=[Fraction(1, 2)])
    )
    return scene.with_figure(figure, ["A", "P", "B", "Q"])


def recipe_perpendicular():
    """A cord of 10 on pegs 6 apart gives the rhombus APBQ."""
    return _perpendicular_scene(10, "APBQ")


def recipe_square():
    """Same cord trick with L/2 = 3*sqrt(2), so both diagonals are 6."""
    return _perpendicular_scene(ExactScalar.surd(6, 2), "APBQ")


def recipe_rectangle(units=3):
    """Unit squares joined side by side; the area is found by counting."""
    scene = Scene()
    for i in range(units + 1):
        scene = scene.with_peg(f"S{i}", Point(i, 0)).with_peg(f"N{i}", Point(i, 1))
    for i in range(1, units):
        scene = scene.with_line(f"S{i}", f"N{i}")
    count, area = geometry.area_by_unit_counting(geometry.rectangle(units, 1))
    return scene.with_figure("rectangle", ["S0", f"S{units}", f"N{units}", "N0"], area=area)


def recipe_diagonal_square():
    """Unit square, its diagonal cord with the refinement marks, and the doubled square."""
    trace = geometry.sulba_diagonal_refinement(3)
    scene = (
        Scene()
        .with_peg("A", Point(0, 0))
        .with_peg("M", Point(1, 0))
        .with_peg("B", Point(1, 1))
        .with_peg("Q", Point(0, 1))
        .with_peg("D1", Point(0, 2))
        .with_peg("D2", Point(-1, 1))
    )
    total = trace.value
    marks = [Fraction(1) / total] + [c / total for c in trace.cumulative[:-1]]
    scene = scene.with_cord("A", "B", total, marks=marks)
    count, area = geometry.area_by_unit_counting(geometry.rectangle(1, 1))
    scene = scene.with_figure("unit-square", ["A", "M", "B", "Q"], area=area)
    diag_area, _ = geometry.diagonal_identity_check(1, 1)
    return scene.with_figure("dvikaraṇī-square", ["A", "B", "D1", "D2"], area=diag_area)


RECIPES = {
    "prachi": recipe_prachi,
    "perpendicular": recipe_perpendicular,
    "square": recipe_square,
    "rectangle": recipe_rectangle,
    "diagonal-square": recipe_diagonal_square,
}


def build_recipe(name):
    try:
        return RECIPES[name]()
    except KeyError:
        raise DomainError(f"unknown recipe {name!r}; choose from {', '.join(RECIPES)}") from None
