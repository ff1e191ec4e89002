"""Brick arithmetic and the ritual day-count calendar.

Bricks are split by handing them out one at a time, round robin, and
looking at what is left, never by dividing.  The calendar is a state
machine that advances one day at a time; it learns about the moon and the
sun only through discrete observed events (full moon reached, solstice
reached) produced by phase accumulators running at the configured rates.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
import json
from typing import NamedTuple

from .core import as_rational
from .errors import DomainError, ParseError

# ---------------------------------------------------------------------------
# Time units

MUHURTAS_PER_DAY = 30
MUHURTAS_PER_HALF_DAY = 15
PRATI_MUHURTAS_PER_MUHURTA = 15
DAYS_PER_RITUAL_YEAR = 360
SADAHA_LENGTH = 6
TITHIS_PER_PAKSHA = 15
MONTHS_PER_YEAR = 12

YUGA_YEAR_LABELS = ("year_1", "year_2", "year_3", "year_4", "year_5")

SB_ATTESTED_BODIES_720 = (1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24)


def ritual_year_muhurtas():
    return DAYS_PER_RITUAL_YEAR * MUHURTAS_PER_DAY


def ritual_year_bricks():
    """One brick for each day and one for each night."""
    return 2 * DAYS_PER_RITUAL_YEAR


# ---------------------------------------------------------------------------
# Bricks


@dataclass(frozen=True)
class BrickCollection:
    total: int
    bodies: tuple

    def __post_init__(self):
        object.__setattr__(self, "bodies", tuple(self.bodies))
        if self.total < 1 or any(b < 1 for b in self.bodies):
            raise DomainError("brick counts must be positive")
        if sum(self.bodies) != self.total:
            raise DomainError("bodies do not add up to the total")

    @property
    def equal(self):
        return len(set(self.bodies)) == 1


def round_robin(total, k):
    """Hand ``total`` bricks to ``k`` bodies one at a time; return the body sizes."""
    if k < 1:
        raise DomainError("need at least one body")
    bodies = [0] * k
    i = 0
    for _brick in range(total):
        bodies[i] += 1
        i += 1
        if i == k:
            i = 0
    return bodies


def equal_split(total, k):
    """Size of each body when ``total`` bricks split evenly into ``k``."""
    bodies = round_robin(total, k)
    big = max(bodies)
    if min(bodies) != big:
        leftover = bodies.count(big)
        raise DomainError(f"no equal split exists: {leftover} brick(s) left over after the last full round")
    return big


def equal_partitions_of(total, sb_filter=False):
    """All ways to make equal bodies from ``total`` bricks, as (bodies, size).

    With ``sb_filter`` only bodies of at least thirty bricks are kept, which
    for 720 leaves exactly the fifteen splittings enumerated in the
    Brāhmaṇa (ending with twenty-four bodies of thirty).
    """
    if total < 1:
        raise DomainError("total must be at least 1")
    out = []
    for k in range(1, total + 1):
        bodies = round_robin(total, k)
        if min(bodies) == max(bodies):
            out.append((k, bodies[0]))
    if sb_filter:
        out = [(k, size) for k, size in out if size >= 30]
    return out


def split_collection(collection, k):
    """Gather every brick and hand them out again to ``k`` equal bodies."""
    size = equal_split(collection.total, k)
    return BrickCollection(collection.total, (size,) * k)


# ---------------------------------------------------------------------------
# Tokens whose meaning depends on context


class TokenRegistry:
    """(token, context) -> referent; there is deliberately no default context."""

    def __init__(self, entries=None):
        self._entries = dict(entries or {})

    def register(self, token, context, referent):
        entries = dict(self._entries)
        entries[(token, context)] = referent
        return TokenRegistry(entries)

    def tokens(self):
        return sorted({t for t, _ in self._entries})

    def contexts(self, token):
        return sorted(c for t, c in self._entries if t == token)

    def __contains__(self, token):
        return any(t == token for t, _ in self._entries)

    def get(self, token, context):
        return self._entries.get((token, context))


def default_registry():
    return TokenRegistry(
        {
            ("yajuṣamatī-brick", "day-count"): "one day-or-night of 360",
            ("yajuṣamatī-brick", "muhūrta"): "the 15 muhūrtas of one daytime",
            ("yajuṣamatī-brick", "fortnight"): "one half-moon (fortnight)",
            ("yajuṣamatī-brick", "month"): "one month",
            ("yajuṣamatī-brick", "season"): "one season",
            ("yajuṣamatī-brick", "nakṣatra"): "one nakṣatra (asterism)",
            ("enclosing-stone", "day-count"): "one night of 360",
            ("enclosing-stone", "muhūrta"): "the 15 muhūrtas of one night",
            ("lokamprinā-brick", "muhūrta"): "one muhūrta of the year's 10800",
        }
    )


def resolve_token(registry, token, context=None):
    if token not in registry:
        raise DomainError(f"unknown token {token!r}")
    if context is None:
        raise DomainError(f"{token!r} is ambiguous without context")
    referent = registry.get(token, context)
    if referent is None:
        raise DomainError(f"{token!r} has no referent in context {context!r}")
    return referent


# ---------------------------------------------------------------------------
# Calendar

SUKLA = "śukla"
KRSNA = "kṛṣṇa"

_ATTESTED_TITHI = {1: "prathama", 2: "dviṭīya", 3: "trīṭīya", 4: "caturthī"}


def tithi_name(tithi, paksha):
    if not 1 <= tithi <= TITHIS_PER_PAKSHA:
        raise DomainError(f"tithi out of range: {tithi}")
    if paksha not in (SUKLA, KRSNA):
        raise DomainError(f"unknown pakṣa {paksha!r}")
    if tithi == 15:
        return "pūrṇamāsī" if paksha == SUKLA else "amāvasyā"
    if tithi in _ATTESTED_TITHI:
        return _ATTESTED_TITHI[tithi]
    return f"{tithi}th"


@dataclass(frozen=True)
class CalendarConfig:
    synodic_month_days: Fraction = Fraction("29.530589")
    tropical_year_days: Fraction = Fraction("365.2422")

    def __post_init__(self):
        for name in ("synodic_month_days", "tropical_year_days"):
            value = as_rational(getattr(self, name))
            if value <= 0:
                raise DomainError(f"{name} must be positive")
            object.__setattr__(self, name, value)


def parse_config(text):
    """Read ``key=value`` lines; blank lines and ``#`` comments are ignored."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("expected key=value", row=lineno)
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in ("synodic_month_days", "tropical_year_days"):
            raise ParseError(f"unknown config key {key!r}", row=lineno)
        try:
            values[key] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a number: {value!r}", row=lineno) from None
    return CalendarConfig(**values)


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


@dataclass(frozen=True)
class CalendarState:
    """The count on one day of the satra.

    Months run from the dark half into the bright half and close on the
    observed full moon.  ``day_index`` counts days since the last observed
    solstice; ``elapsed_days`` counts every day since the start.
    """

    day_index: int = 1
    sadaha_day: int = 1
    tithi: int = 1
    paksha: str = KRSNA
    month_index: int = 1
    elapsed_days: int = 1
    day_of_month: int = 1
    months_completed: int = 0
    solstices_observed: int = 0
    yuga_year: int = 1
    config: CalendarConfig = field(default_factory=CalendarConfig)

    @property
    def year_label(self):
        return YUGA_YEAR_LABELS[self.yuga_year - 1]

    @property
    def tithi_name(self):
        return tithi_name(self.tithi, self.paksha)


class DayEvents(NamedTuple):
    full_moon: bool
    month_ends: bool
    dropped: bool
    solstice: bool


def observe(state):
    """What is observed by the end of ``state``'s day."""
    cfg = state.config
    # the next full moon / solstice instants, in days since the start
    moon_at = (state.months_completed + 1) * cfg.synodic_month_days
    sun_at = (state.solstices_observed + 1) * cfg.tropical_year_days
    full_moon = moon_at <= state.elapsed_days
    closing = state.paksha == SUKLA
    early = closing and state.tithi == TITHIS_PER_PAKSHA - 1 and full_moon
    month_ends = early or (closing and state.tithi == TITHIS_PER_PAKSHA)
    return DayEvents(full_moon, month_ends, early, sun_at <= state.elapsed_days)


def step_day(state):
    """Advance one day.  A full moon seen on the 29th drops the 30th day."""
    ev = observe(state)
    changes = {"elapsed_days": state.elapsed_days + 1}
    if ev.month_ends:
        changes.update(
            day_of_month=1,
            sadaha_day=1,
            tithi=1,
            paksha=KRSNA,
            month_index=state.month_index % MONTHS_PER_YEAR + 1,
            months_completed=state.months_completed + 1,
        )
    else:
        changes["day_of_month"] = state.day_of_month + 1
        changes["sadaha_day"] = state.sadaha_day % SADAHA_LENGTH + 1
        if state.tithi == TITHIS_PER_PAKSHA:
            changes.update(tithi=1, paksha=SUKLA)
        else:
            changes["tithi"] = state.tithi + 1
    if ev.solstice:
        changes.update(
            day_index=1,
            solstices_observed=state.solstices_observed + 1,
            yuga_year=state.yuga_year % len(YUGA_YEAR_LABELS) + 1,
        )
    else:
        changes["day_index"] = state.day_index + 1
    return replace(state, **changes)


@dataclass
class SimulationReport:
    months: list
    year_lengths: list
    drops: int
    sadaha_lengths: Counter

    @property
    def mean_month(self):
        return sum(self.months) / len(self.months) if self.months else 0.0

    @property
    def histogram(self):
        return dict(sorted(Counter(self.months).items()))

    def to_json(self):
        return {
            "months": list(self.months),
            "mean_month": self.mean_month,
            "year_lengths": list(self.year_lengths),
            "drops": self.drops,
            "histogram": {str(k): v for k, v in self.histogram.items()},
        }

    def dumps(self):
        return json.dumps(self.to_json(), ensure_ascii=False)


def simulate(config=None, n_days=1):
    """Run the day count for ``n_days`` and report what the observers tallied.

    Month lengths are the counted days between observed full moons; year
    lengths are the counted days between observed solstices.  Partial
    months and years at the end of the run are not reported.
    """
    if n_days < 1:
        raise DomainError("n_days must be at least 1")
    state = CalendarState(config=config or CalendarConfig())
    months, years = [], []
    drops = 0
    sadahas = Counter()
    run = 0
    for _ in range(n_days):
        ev = observe(state)
        run += 1
        if ev.month_ends:
            months.append(state.day_of_month)
            drops += ev.dropped
        if ev.solstice:
            years.append(state.day_index)
        nxt = step_day(state)
        if nxt.sadaha_day == 1:
            sadahas[run] += 1
            run = 0
        state = nxt
    return SimulationReport(months, years, drops, sadahas)
