"""Exact numbers and the old length units.

Rationals are :class:`fractions.Fraction` (canonical, arbitrary precision).
:class:`ExactScalar` adds quantities known only through a rational square
(karaṇī lengths such as the diagonal of a unit square), written as
``coeff * sqrt(radicand)``.  Nothing in this module ever consults a float to
decide an equality or an ordering.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
import numbers

from .errors import DomainError, InexactError

Rational = Fraction

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, isqrt(p) + 1))]


def reduce(p, q):
    """Return p/q in lowest terms with a positive denominator."""
    if q == 0:
        raise DomainError("undefined fraction")
    return Fraction(p, q)


def as_rational(value):
    """Coerce ints, Fractions, rational ExactScalars and decimal strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, ExactScalar):
        return value.to_rational()
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational number: {value!r}") from exc
    if isinstance(value, float):
        # Floats go through their shortest repr so that 29.530589 stays 29530589/10**6.
        return Fraction(repr(value))
    raise TypeError(f"cannot use {type(value).__name__} as a rational")


def rational_sqrt(q):
    """Exact square root of a rational, or None if q is not a rational square."""
    q = as_rational(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign(q):
    return (q > 0) - (q < 0)


class ExactScalar:
    """A rational, or a rational multiple of the square root of a rational.

    Stored as ``coeff * sqrt(radicand)`` with ``radicand`` a positive integer;
    ``radicand == 1`` means the value is rational.  Square factors are pulled
    out of the radicand where cheap, but equality never depends on that:
    two scalars are equal when their signs and squares agree.
    """

    __slots__ = ("coeff", "radicand")

    def __init__(self, coeff, radicand=1):
        coeff = as_rational(coeff)
        radicand = as_rational(radicand)
        if radicand <= 0:
            raise DomainError("radicand must be positive")
        # sqrt(p/q) = sqrt(p*q)/q
        coeff /= radicand.denominator
        rad = radicand.numerator * radicand.denominator
        if coeff == 0:
            rad = 1
        else:
            root = isqrt(rad)
            if root * root == rad:
                coeff *= root
                rad = 1
            else:
                for p in _SMALL_PRIMES:
                    sq = p * p
                    if sq > rad:
                        break
                    while rad % sq == 0:
                        rad //= sq
                        coeff *= p
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", rad)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def rational(cls, value):
        return cls(as_rational(value), 1)

    @classmethod
    def surd(cls, coeff, radicand):
        return cls(coeff, radicand)

    @classmethod
    def sqrt(cls, square):
        """The non-negative scalar whose square is ``square``."""
        square = as_rational(square)
        if square < 0:
            raise DomainError("no real square root of a negative quantity")
        if square == 0:
            return cls(0)
        return cls(1, square)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.rational(value)

    # -- inspection ---------------------------------------------------
    @property
    def kind(self):
        return "rational" if self.radicand == 1 else "surd"

    @property
    def is_rational(self):
        return self.radicand == 1

    def to_rational(self):
        if self.radicand != 1:
            raise InexactError(f"{self} is not rational")
        return self.coeff

    def square(self):
        return self.coeff * self.coeff * self.radicand

    def sign(self):
        return _sign(self.coeff)

    def __bool__(self):
        return self.coeff != 0

    def __float__(self):
        if self.radicand == 1:
            return float(self.coeff)
        return float(self.coeff) * self.radicand ** 0.5

    # -- arithmetic ---------------------------------------------------
    def _like(self, other):
        """Rational s with sqrt(self.radicand) == s*sqrt(other.radicand), or None."""
        return rational_sqrt(Fraction(self.radicand, other.radicand))

    def __add__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        if self.radicand == other.radicand:
            return ExactScalar(self.coeff + other.coeff, self.radicand)
        s = self._like(other)
        if s is None:
            raise InexactError(f"inexact: {self} + {other} is not a single surd")
        return ExactScalar(self.coeff * s + other.coeff, other.radicand)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.coeff, self.radicand)

    def __pos__(self):
        return self

    def __abs__(self):
        return ExactScalar(abs(self.coeff), self.radicand)

    def __sub__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return ExactScalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self.coeff * other.coeff, self.radicand * other.radicand)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero")
        # 1/(c*sqrt(r)) = sqrt(r)/(c*r)
        inv = ExactScalar(1 / (other.coeff * other.radicand), other.radicand)
        return self * inv

    def __rtruediv__(self, other):
        return ExactScalar.coerce(other) / self

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        try:
            other = ExactScalar.coerce(other)
        except (TypeError, DomainError):
            return NotImplemented
        return compare(self, other) == 0

    def __hash__(self):
        if self.radicand == 1:
            return hash(self.coeff)
        return hash((self.sign(), self.square()))

    def __lt__(self, other):
        return compare(self, ExactScalar.coerce(other)) < 0

    def __le__(self, other):
        return compare(self, ExactScalar.coerce(other)) <= 0

    def __gt__(self, other):
        return compare(self, ExactScalar.coerce(other)) > 0

    def __ge__(self, other):
        return compare(self, ExactScalar.coerce(other)) >= 0

    # -- text / json --------------------------------------------------
    def __repr__(self):
        if self.radicand == 1:
            return f"ExactScalar({self.coeff})"
        return f"ExactScalar.surd({self.coeff}, {self.radicand})"

    def __str__(self):
        if self.radicand == 1:
            return str(self.coeff)
        if self.coeff == 1:
            return f"√{self.radicand}"
        if self.coeff == -1:
            return f"-√{self.radicand}"
        return f"{self.coeff}·√{self.radicand}"

    def to_json(self):
        if self.radicand == 1:
            return {"num": self.coeff.numerator, "den": self.coeff.denominator}
        return {
            "coeff": {"num": self.coeff.numerator, "den": self.coeff.denominator},
            "radicand": {"num": self.radicand, "den": 1},
        }

    @classmethod
    def from_json(cls, doc):
        if "radicand" in doc:
            coeff = Fraction(doc["coeff"]["num"], doc["coeff"]["den"])
            rad = Fraction(doc["radicand"]["num"], doc["radicand"]["den"])
            return cls(coeff, rad)
        return cls(Fraction(doc["num"], doc["den"]))


def compare(a, b):
    """Three-way comparison (-1, 0, 1) decided by signs and exact squares."""
    a = ExactScalar.coerce(a)
    b = ExactScalar.coerce(b)
    sa, sb = a.sign(), b.sign()
    if sa != sb:
        return (sa > sb) - (sa < sb)
    if sa == 0:
        return 0
    qa, qb = a.square(), b.square()
    c = (qa > qb) - (qa < qb)
    return c if sa > 0 else -c


def decimal_str(value, places=6):
    """Decimal expansion truncated (not rounded) to ``places`` digits."""
    x = ExactScalar.coerce(value)
    scale = 10 ** places
    # floor(|x| * 10^p) == isqrt(floor(x^2 * 10^2p)) for x >= 0
    digits = isqrt(int(x.square() * scale * scale))
    whole, frac = divmod(digits, scale)
    sign = "-" if x.sign() < 0 and digits else ""
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def format_exact(value, places=6):
    """``p/q ≈ d`` for rationals, ``c·√r ≈ d`` for surds, plain for integers."""
    x = ExactScalar.coerce(value)
    if x.is_rational and x.to_rational().denominator == 1:
        return str(x)
    return f"{x} ≈ {decimal_str(x, places)}"


# ---------------------------------------------------------------------------
# Units of length.  Factors are in aṅgula.

UNIT_FACTORS = {
    "tila": Fraction(1, 34),
    "aṅgula": Fraction(1),
    "puruṣa": Fraction(108),
    "inch": Fraction(4, 3),
    "foot": Fraction(16),
}

# Named in the sources, but with no stated size.
UNCONVERTIBLE_UNITS = ("hasta", "aratni", "abstract")

_UNIT_ALIASES = {
    "tila": "tila",
    "tilas": "tila",
    "aṅgula": "aṅgula",
    "angula": "aṅgula",
    "aṅgulas": "aṅgula",
    "angulas": "aṅgula",
    "puruṣa": "puruṣa",
    "purusa": "puruṣa",
    "purusha": "puruṣa",
    "inch": "inch",
    "inches": "inch",
    "in": "inch",
    "foot": "foot",
    "feet": "foot",
    "ft": "foot",
    "hasta": "hasta",
    "aratni": "aratni",
    "abstract": "abstract",
    "unit": "abstract",
    "units": "abstract",
}


def canonical_unit(name):
    try:
        return _UNIT_ALIASES[name.strip().lower()]
    except KeyError:
        raise DomainError(f"unknown unit {name!r}") from None


@dataclass(frozen=True)
class Length:
    magnitude: ExactScalar
    unit: str = "abstract"

    def __post_init__(self):
        object.__setattr__(self, "magnitude", ExactScalar.coerce(self.magnitude))
        object.__setattr__(self, "unit", canonical_unit(self.unit))

    @property
    def convertible(self):
        return self.unit in UNIT_FACTORS

    def scaled(self, factor):
        return Length(self.magnitude * ExactScalar.coerce(factor), self.unit)

    def __str__(self):
        return f"{self.magnitude} {self.unit}"


def convert(x, target_unit):
    """Convert a :class:`Length` exactly; abstract and unsized units refuse."""
    target = canonical_unit(target_unit)
    if x.unit not in UNIT_FACTORS or target not in UNIT_FACTORS:
        raise DomainError(f"incommensurable unit: {x.unit} -> {target}")
    factor = UNIT_FACTORS[x.unit] / UNIT_FACTORS[target]
    return Length(x.magnitude * factor, target)


def parse_length(text):
    """Parse ``"35 ft"``, ``"1/3 puruṣa"`` or a bare number (abstract unit)."""
    parts = text.split()
    if len(parts) == 1:
        return Length(as_rational(parts[0]), "abstract")
    if len(parts) == 2:
        return Length(as_rational(parts[0]), parts[1])
    raise DomainError(f"cannot read a length from {text!r}")
