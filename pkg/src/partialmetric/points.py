"""Point values and their canonical string ids.

Three kinds of domain elements occur across the spaces in this package:
exact rationals (``fractions.Fraction``), symbolic tags (plain strings),
and subsets of a declared finite ground set (``FSet``, a bitmask).
Equality is decidable for all three, and every point has a canonical id
used in JSON tables and on the command line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union


@dataclass(frozen=True)
class FSet:
    """Subset of a finite ground set, stored as a bitmask over ``ground``."""

    ground: tuple[str, ...]
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << len(self.ground)):
            raise ValueError(f"mask {self.mask} out of range for ground {self.ground}")

    @classmethod
    def of(cls, ground: Sequence[str], *members: str) -> "FSet":
        mask = 0
        for m in members:
            mask |= 1 << tuple(ground).index(m)
        return cls(tuple(ground), mask)

    def union_size(self, other: "FSet") -> int:
        return (self.mask | other.mask).bit_count()

    def size(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[str, ...]:
        return tuple(g for i, g in enumerate(self.ground) if self.mask >> i & 1)

    def __str__(self) -> str:
        return "{" + ",".join(self.members()) + "}"


Point = Union[Fraction, str, FSet]


def parse_rational(text: str) -> Fraction:
    """Parse a "num/den" (or bare integer) string into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical "num/den" form; the denominator is always spelled out."""
    return f"{value.numerator}/{value.denominator}"


def format_point(point: Point) -> str:
    if isinstance(point, Fraction):
        return format_rational(point)
    return str(point)


def _brace_members(text: str) -> tuple[str, ...]:
    inner = text[1:-1].strip()
    return tuple(part.strip() for part in inner.split(",")) if inner else ()


def parse_point_ids(ids: Sequence[str]) -> tuple[Point, ...]:
    """Decode JSON point ids.

    "{a,b}" is a subset of the ground set collected from all braced ids,
    anything that parses as a rational becomes a ``Fraction``, and the
    rest are kept as symbolic tags.
    """
    braced = [s for s in ids if s.startswith("{") and s.endswith("}")]
    ground: tuple[str, ...] = ()
    if braced:
        ground = tuple(sorted({e for s in braced for e in _brace_members(s)}))
    points: list[Point] = []
    for s in ids:
        if s.startswith("{") and s.endswith("}"):
            points.append(FSet.of(ground, *_brace_members(s)))
            continue
        try:
            points.append(Fraction(s))
        except (ValueError, ZeroDivisionError):
            points.append(s)
    return tuple(points)


def resolve_point(points: Sequence[Point], text: str) -> Point:
    """Match a command-line id against a space's points, else parse it."""
    by_id = {format_point(p): p for p in points}
    if text in by_id:
        return by_id[text]
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        return text
