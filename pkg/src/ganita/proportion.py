"""The rule of three, its chained extensions, and the gnomon-shadow solver.

The unknown here is positional, the fourth term of a proportion; nothing
is named or symbolized.
"""

from dataclasses import dataclass
from fractions import Fraction
import re

from .core import as_rational
from .errors import DomainError, ParseError


@dataclass(frozen=True)
class RuleOfThreeProblem:
    """If ``pramana`` gives ``phala``, what does ``iccha`` give?"""

    pramana: Fraction
    phala: Fraction
    iccha: Fraction

    def __post_init__(self):
        for name in ("pramana", "phala", "iccha"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))


@dataclass(frozen=True)
class CompoundProportion:
    stages: tuple
    iccha: Fraction

    def __post_init__(self):
        object.__setattr__(
            self, "stages", tuple((as_rational(a), as_rational(b)) for a, b in self.stages)
        )
        object.__setattr__(self, "iccha", as_rational(self.iccha))

    @property
    def rule_size(self):
        """A rule of 3, 5, 7, ... terms."""
        return 2 * len(self.stages) + 1


def rule_of_three(problem):
    """The icchāphala phala * iccha / pramana."""
    if problem.pramana == 0:
        raise DomainError("undefined proportion: pramāṇa is zero")
    return problem.phala * problem.iccha / problem.pramana


def compound_proportion(problem):
    if not problem.stages:
        raise DomainError("a compound proportion needs at least one stage")
    result = problem.iccha
    for pramana, phala in problem.stages:
        result = rule_of_three(RuleOfThreeProblem(pramana, phala, result))
    return result


def gnomon_shadow(known, perpendicular=None, base=None):
    """Missing side of a right triangle similar to ``known = (perpendicular, base)``.

    Give exactly one of ``perpendicular`` or ``base``; the other is returned.
    """
    p1, b1 = (as_rational(v) for v in known)
    if p1 == 0 or b1 == 0:
        raise DomainError("degenerate triangle: known sides must be nonzero")
    if (perpendicular is None) == (base is None):
        raise DomainError("give exactly one of perpendicular or base")
    if base is not None:
        base = as_rational(base)
        if base == 0:
            raise DomainError("degenerate triangle: base is zero")
        return p1 * base / b1
    perpendicular = as_rational(perpendicular)
    if perpendicular == 0:
        raise DomainError("degenerate triangle: perpendicular is zero")
    return b1 * perpendicular / p1


_NUM = r"\s*([-+]?\d+(?:/\d+)?(?:\.\d+)?)\s*"
_RULE3 = re.compile(rf"^{_NUM}:{_NUM}::{_NUM}:\s*\?\s*$")
_PAIR = re.compile(rf"^{_NUM}:{_NUM}$")


def parse_rule_of_three(text):
    """``"a:b::x:?"`` -> RuleOfThreeProblem."""
    m = _RULE3.match(text)
    if not m:
        raise ParseError(f"expected 'a:b::x:?', got {text!r}")
    return RuleOfThreeProblem(*(Fraction(g) for g in m.groups()))


def parse_stage(text):
    m = _PAIR.match(text)
    if not m:
        raise ParseError(f"expected 'a:b', got {text!r}")
    return tuple(Fraction(g) for g in m.groups())
