"""Equations in one unknown of degree at most two.

A side (pakṣa) holds three coefficients: yāva (the square of the unknown),
yā (the unknown) and rū (the known number).  Quadratics are solved by
eliminating the middle term: multiply by four times the square's
coefficient, add the square of the unknown's coefficient, take the root.
Every step is recorded and can be replayed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .core import ExactScalar, as_rational, rational_sqrt
from .errors import DomainError, InconsistentError, IndeterminateError, InexactError
from .geometry import decompose_square


@dataclass(frozen=True)
class Paksha:
    yava: Fraction = Fraction(0)
    ya: Fraction = Fraction(0)
    ru: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("yava", "ya", "ru"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @property
    def coefficients(self):
        return (self.yava, self.ya, self.ru)

    def is_zero(self):
        return not any(self.coefficients)

    def __sub__(self, other):
        return Paksha(self.yava - other.yava, self.ya - other.ya, self.ru - other.ru)

    def __add__(self, other):
        return Paksha(self.yava + other.yava, self.ya + other.ya, self.ru + other.ru)

    def scale(self, k):
        k = as_rational(k)
        return Paksha(self.yava * k, self.ya * k, self.ru * k)

    def evaluate(self, x):
        """Value at x, exact for rationals and for surds when ya == 0 (or x rational)."""
        x = ExactScalar.coerce(x)
        return x * x * self.yava + x * self.ya + self.ru

    def __str__(self):
        return format_terms(self.coefficients)


ZERO = Paksha()


@dataclass(frozen=True)
class Equation:
    left: Paksha
    right: Paksha = ZERO

    @property
    def degree(self):
        d = self.left - self.right
        if d.yava:
            return 2
        if d.ya:
            return 1
        return 0

    def scale(self, k):
        return Equation(self.left.scale(k), self.right.scale(k))

    def is_normalized(self):
        lead = next((c for c in self.left.coefficients if c), None)
        return self.right.is_zero() and lead is not None and lead > 0

    def __str__(self):
        return f"{self.left} = {self.right}"


def _fmt_coeff(c):
    return str(c) if c.denominator == 1 else f"({c})"


def format_terms(coefficients, var="x"):
    """``(1, -10, 9)`` -> ``"x² - 10x + 9"``."""
    parts = []
    for c, suffix in zip(coefficients, (f"{var}²", var, "")):
        if c == 0:
            continue
        mag = abs(c)
        body = _fmt_coeff(mag) if (suffix == "" or mag != 1) else ""
        term = body + suffix
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------


def normalize(e):
    """Move everything to the left and make the leading coefficient positive."""
    d = e.left - e.right
    if d.is_zero():
        raise IndeterminateError("identity equation (indeterminate)")
    if d.yava == 0 and d.ya == 0:
        raise InconsistentError(f"inconsistent: {d.ru} = 0")
    lead = d.yava if d.yava else d.ya
    if lead < 0:
        d = d.scale(-1)
    return Equation(d, ZERO)


def solve_linear(a1, b1, a2, b2):
    """Value of one bead when a1 beads and b1 coins equal a2 beads and b2 coins."""
    a1, b1, a2, b2 = (as_rational(v) for v in (a1, b1, a2, b2))
    if a1 == a2:
        if b1 == b2:
            raise IndeterminateError("identity equation (indeterminate)")
        raise InconsistentError("inconsistent: the unknown cancels and the known parts differ")
    x = (b2 - b1) / (a1 - a2)
    assert a1 * x + b1 == a2 * x + b2
    return x


# ---------------------------------------------------------------------------
# Trace snapshots


@dataclass(frozen=True)
class SquareForm:
    """(p*x + q)^2 = rhs"""

    p: Fraction
    q: Fraction
    rhs: Fraction

    def __str__(self):
        return f"({format_terms((0, self.p, self.q))})² = {self.rhs}"


@dataclass(frozen=True)
class RootForm:
    """p*x + q = ±root"""

    p: Fraction
    q: Fraction
    root: ExactScalar

    def __str__(self):
        return f"{format_terms((0, self.p, self.q))} = ±{self.root}"


@dataclass(frozen=True)
class RootsForm:
    values: tuple

    def __str__(self):
        return " or ".join(f"x = {v}" for v in self.values)


class TraceStep(NamedTuple):
    label: str
    snapshot: object
    param: object = None


class Roots(NamedTuple):
    values: tuple
    admissible: tuple

    @property
    def admissible_values(self):
        return tuple(v for v, ok in zip(self.values, self.admissible) if ok)


def _lead_sqrt(A):
    p = rational_sqrt(A)
    if p is None:
        raise DomainError(f"{A} is not a square; cannot complete the square")
    return p


def apply_step(label, prev, param=None):
    """Apply one labelled rule to the previous snapshot."""
    if label == "transpose":
        n = normalize(prev)
        d = n.left
        return Equation(Paksha(d.yava, d.ya, 0), Paksha(0, 0, -d.ru))
    if label == "multiply-by-4a":
        if param != 4 * prev.left.yava:
            raise DomainError("multiplier must be four times the square's coefficient")
        return prev.scale(param)
    if label == "add-b-squared":
        A, B, C = prev.left.coefficients
        if C != 0 or param != B * B / (4 * A):
            raise DomainError("addend must be the square of the original middle coefficient")
        add = Paksha(0, 0, param)
        return Equation(prev.left + add, prev.right + add)
    if label == "clear-denominators":
        if param is None or param <= 0 or rational_sqrt(param) is None:
            raise DomainError("denominators are cleared by a positive square")
        return prev.scale(param)
    if label == "complete-square":
        A, B, C = prev.left.coefficients
        p = _lead_sqrt(A)
        q = B / (2 * p)
        if q * q != C or prev.right.yava or prev.right.ya:
            raise DomainError("left side is not a perfect square")
        return SquareForm(p, q, prev.right.ru)
    if label == "extract-root":
        if prev.rhs < 0:
            raise DomainError("no real root: the square would be negative")
        return RootForm(prev.p, prev.q, ExactScalar.sqrt(prev.rhs))
    if label == "isolate":
        values = []
        for r in (prev.root, -prev.root):
            try:
                values.append((r - prev.q) / prev.p)
            except InexactError:
                raise InexactError(
                    f"roots ({-prev.q} ± {prev.root})/{prev.p} are not single surds"
                ) from None
        return RootsForm(tuple(values))
    raise DomainError(f"unknown step {label!r}")


@dataclass(frozen=True)
class SolveTrace:
    steps: tuple

    def replay(self):
        """Re-derive every snapshot from the first; True if all match."""
        prev = self.steps[0].snapshot
        for step in self.steps[1:]:
            nxt = apply_step(step.label, prev, step.param)
            if nxt != step.snapshot:
                return False
            prev = nxt
        return True

    @property
    def labels(self):
        return tuple(s.label for s in self.steps)

    def snapshot(self, label):
        for s in self.steps:
            if s.label == label:
                return s.snapshot
        raise KeyError(label)

    def lines(self):
        return [f"{s.label}: {s.snapshot}" for s in self.steps]

    def to_json(self):
        return [
            {
                "step": s.label,
                "snapshot": str(s.snapshot),
                **({"param": str(s.param)} if s.param is not None else {}),
            }
            for s in self.steps
        ]


def _integral(*values):
    return all(as_rational(v).denominator == 1 for v in values)


def solve_quadratic_madhyamaharana(e, clear_by=None, admissible=None):
    """Solve a quadratic by completing the square; returns ``(Roots, SolveTrace)``.

    ``clear_by`` forces the optional step that multiplies through by
    ``clear_by**2`` to make the numbers whole; without it the step is only
    taken, with the smallest suitable factor, when fractions are present.
    ``admissible`` is a predicate marking which roots make sense for the
    problem; all roots are kept either way.
    """
    norm = normalize(e)
    if norm.left.yava == 0:
        raise DomainError("not quadratic (use solve_linear)")
    steps = [TraceStep("input", e)]

    def push(label, param=None):
        steps.append(TraceStep(label, apply_step(label, steps[-1].snapshot, param), param))

    push("transpose")
    a, b = norm.left.yava, norm.left.ya
    push("multiply-by-4a", 4 * a)
    push("add-b-squared", b * b)
    cur = steps[-1].snapshot
    if clear_by is not None:
        k = as_rational(clear_by)
        if k <= 0:
            raise DomainError("clear_by must be positive")
        if k != 1:
            push("clear-denominators", k * k)
    elif not _integral(*cur.left.coefficients, cur.right.ru):
        rhs = cur.right.ru
        k = lcm((2 * a).denominator, b.denominator, rhs.denominator)
        push("clear-denominators", Fraction(k * k))
    if steps[-1].snapshot.right.ru < 0:
        raise DomainError("no real root: the square would be negative")
    push("complete-square")
    push("extract-root")
    push("isolate")
    values = steps[-1].snapshot.values
    for v in values:
        if norm.left.evaluate(v) != 0:
            raise AssertionError(f"root {v} does not satisfy {norm}")
    flags = tuple(bool(admissible(v)) if admissible else True for v in values)
    return Roots(values, flags), SolveTrace(tuple(steps))


def solve(e):
    """Normalize, then dispatch on degree.  Returns ``(Roots, trace or None)``."""
    norm = normalize(e)
    if norm.left.yava:
        return solve_quadratic_madhyamaharana(e)
    x = solve_linear(norm.left.ya, norm.left.ru, 0, 0)
    return Roots((ExactScalar.coerce(x),), (True,)), None


# ---------------------------------------------------------------------------
# Problems


class InterestSolution(NamedTuple):
    x: Fraction
    by_formula: Fraction
    by_steps: Fraction
    trace: SolveTrace


def interest_equation(principal, months, amount):
    """(T/P) x^2 + x = A for the interest x on P, reloaned for T months."""
    P, T, A = (as_rational(v) for v in (principal, months, amount))
    return Equation(Paksha(T / P, 1, 0), Paksha(0, 0, A))


def interest_by_formula(principal, months, amount):
    """[sqrt(A*T*P + (P/2)^2) - P/2] / T, the closed rule for the interest."""
    P, T, A = (as_rational(v) for v in (principal, months, amount))
    half = P / 2
    return (ExactScalar.sqrt(A * T * P + half * half) - half) / T


def interest_ab_2_25(principal, months, amount):
    """Interest earned on ``principal`` in one month, given the combined amount.

    The interest was lent again for ``months``; ``amount`` is the interest
    plus the interest on it.  Solved twice, by the closed rule and by
    completing the square, and the two must agree exactly.
    """
    P, T, A = (as_rational(v) for v in (principal, months, amount))
    if P <= 0 or T <= 0:
        raise DomainError("principal and time must be positive")
    if A < 0:
        raise DomainError("amount must not be negative")
    roots, trace = solve_quadratic_madhyamaharana(
        interest_equation(P, T, A), clear_by=P, admissible=lambda v: v >= 0
    )
    (by_steps,) = roots.admissible_values
    formula = interest_by_formula(P, T, A)
    if formula != by_steps:
        raise AssertionError(f"closed rule {formula} != completed square {by_steps}")
    x = by_steps.to_rational() if by_steps.is_rational else by_steps
    f = formula.to_rational() if formula.is_rational else formula
    return InterestSolution(x, f, x, trace)


def factors_from_diff_product(difference, product):
    """Two factors x, y with x - y = difference and x * y = product."""
    a, b = as_rational(difference), as_rational(product)
    if a * a + 4 * b < 0:
        raise DomainError("no real factor pair")
    roots, _ = solve_quadratic_madhyamaharana(Equation(Paksha(1, -a, 0), Paksha(0, 0, b)))
    x = roots.values[0]
    y = x - a
    assert x * y == b and x - y == a
    if x.is_rational:
        return x.to_rational(), y.to_rational()
    return x, y


def product_via_squares(x, y):
    """Half of (square of the sum - sum of the squares)."""
    x, y = as_rational(x), as_rational(y)
    value = ((x + y) ** 2 - (x * x + y * y)) / 2
    assert value == x * y
    if x > 0 and y > 0:
        rects = [area for label, area in decompose_square(x, y) if label == "rectangle"]
        assert sum(rects) / 2 == value
    return value
