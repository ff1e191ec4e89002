"""The two-row yāva / yā / rū equation layout.

One side of the equation per row; equality between the rows is understood
and never written.  Each row lists up to three labelled integers::

    yāva 0 yā 10 rū 8°
    yāva 1 yā 0 rū 1

reads as 10x - 8 = x² + 1.  The ring after a number marks it negative
(``-8`` in the ASCII transliteration, with labels ``yava ya ru``).
"""

from dataclasses import dataclass
from math import lcm
import re
import unicodedata

from .bija import Equation, Paksha
from .errors import DomainError, ParseError

LABELS = ("yava", "ya", "ru")
UNICODE_LABELS = {"yava": "yāva", "ya": "yā", "ru": "rū"}
_LABEL_OF = {
    "yāva": "yava",
    "yava": "yava",
    "yā": "ya",
    "ya": "ya",
    "rū": "ru",
    "ru": "ru",
}
RING = "°"
_RINGS = ("°", "∘", "˚", "̊")
# regional variants, accepted only when lenient
_LENIENT_MARKS = ("+", "×")
_EQUALITY = ("=", "≡", "⇔")

_NUMBER = re.compile(r"^(-)?(\d+)(.*)$")


@dataclass(frozen=True)
class NotationDocument:
    rows: tuple
    encoding: str = "unicode"

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.encoding not in ("unicode", "ascii"):
            raise DomainError(f"unknown encoding {self.encoding!r}")

    def text(self):
        return "\n".join(self.rows) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                rows.append(line)
        if len(rows) != 2:
            raise ParseError(f"expected exactly two rows, found {len(rows)}")
        encoding = "ascii" if all(r.isascii() for r in rows) else "unicode"
        return cls(tuple(rows), encoding)


def _parse_number(tok, col, row, lenient):
    m = _NUMBER.match(tok)
    if not m or m.group(3)[:1] in (".", "/", ","):
        raise ParseError(f"expected an integer, found {tok!r}", column=col, row=row)
    minus, digits, mark = m.groups()
    value = int(digits)
    negative = bool(minus)
    if mark:
        if mark in _RINGS or (lenient and mark in _LENIENT_MARKS):
            if negative:
                raise ParseError("number carries two negative marks", column=col, row=row)
            negative = True
        else:
            raise ParseError(f"unexpected mark {mark!r} after number", column=col, row=row)
    return -value if negative else value


def parse_row(text, row=1, lenient=False):
    """One row -> Paksha.  Absent labels contribute zero."""
    text = unicodedata.normalize("NFC", text)
    tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", text)]
    if not tokens:
        raise ParseError("empty row", row=row)
    for tok, col in tokens:
        if any(sym in tok for sym in _EQUALITY):
            raise ParseError(f"anachronistic token {tok!r}: equality is never written", column=col, row=row)
    values = {}
    last = -1
    i = 0
    while i < len(tokens):
        tok, col = tokens[i]
        label = _LABEL_OF.get(tok.lower())
        if label is None:
            raise ParseError(f"unknown label {tok!r}", column=col, row=row)
        if label in values:
            raise ParseError(f"duplicate label {tok!r}", column=col, row=row)
        order = LABELS.index(label)
        if order < last:
            raise ParseError(f"label {tok!r} out of order (yāva, yā, rū)", column=col, row=row)
        last = order
        if i + 1 >= len(tokens):
            raise ParseError(f"missing integer after {tok!r}", column=col + len(tok), row=row)
        num, ncol = tokens[i + 1]
        if _LABEL_OF.get(num.lower()):
            raise ParseError(f"missing integer after {tok!r}", column=ncol, row=row)
        values[label] = _parse_number(num, ncol, row, lenient)
        i += 2
    return Paksha(values.get("yava", 0), values.get("ya", 0), values.get("ru", 0))


def parse(doc, lenient=False):
    """Top row -> left side, bottom row -> right side."""
    if isinstance(doc, str):
        doc = NotationDocument.from_text(doc)
    elif not isinstance(doc, NotationDocument):
        doc = NotationDocument(tuple(doc))
    if len(doc.rows) != 2:
        raise ParseError(f"expected exactly two rows, found {len(doc.rows)}")
    left = parse_row(doc.rows[0], 1, lenient)
    right = parse_row(doc.rows[1], 2, lenient)
    return Equation(left, right)


def _render_number(n, encoding):
    if n < 0:
        return f"-{-n}" if encoding == "ascii" else f"{-n}{RING}"
    return str(n)


def render_row(paksha, encoding="unicode"):
    parts = []
    for label, c in zip(LABELS, paksha.coefficients):
        if c.denominator != 1:
            raise DomainError("notation carries integers only; clear denominators first")
        name = UNICODE_LABELS[label] if encoding == "unicode" else label
        parts.append(f"{name} {_render_number(c.numerator, encoding)}")
    return " ".join(parts)


def render(e, encoding="unicode"):
    if encoding not in ("unicode", "ascii"):
        raise DomainError(f"unknown encoding {encoding!r}")
    return NotationDocument((render_row(e.left, encoding), render_row(e.right, encoding)), encoding)


def clear_denominators(e):
    """Multiply both sides by the least common denominator."""
    k = lcm(*(c.denominator for c in e.left.coefficients + e.right.coefficients))
    return e.scale(k)
