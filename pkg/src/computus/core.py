"""Closed-form arithmetic for the ecclesiastical moon of the Gregorian calendar.

The age of the ecclesiastical moon on any date follows from three pieces of
integer arithmetic: the year's golden number and epact, a fixed day-of-year
numbering that ignores leap days, and a lunation cycle alternating 30- and
29-day months.  Everything in this module is a pure function of its
arguments, so all of it is safe to call concurrently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

YEAR_MIN = 1583
YEAR_MAX = 4_000_000

# The reform year anchors the epact recurrence (epact 26).  It is accepted
# by golden_number and century_number only; every dated operation starts
# at YEAR_MIN.
ANCHOR_YEAR = 1582

# February is 29 long here because Feb 29 is a valid calendar date; for day
# numbering it simply shares Feb 28's ordinal.
_MONTH_LENGTHS = (31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


def is_leap_year(year: int) -> bool:
    """True for Gregorian leap years (century years only when divisible by 400)."""
    return year % 4 == 0 and (year % 100 != 0 or year % 400 == 0)


def _check_year(year: int, minimum: int = YEAR_MIN, maximum: int = YEAR_MAX) -> None:
    if not minimum <= year <= maximum:
        raise ValueError(f"year {year} not in supported range {minimum}..{maximum}")


def _check_date(month: int, day: int, year: int | None = None) -> None:
    if not 1 <= month <= 12:
        raise ValueError(f"month {month} not in 1..12")
    if not 1 <= day <= _MONTH_LENGTHS[month - 1]:
        raise ValueError(f"day {day} invalid for month {month}")
    if year is not None and month == 2 and day == 29 and not is_leap_year(year):
        raise ValueError(f"February 29 does not exist in {year}")


class CalendarDate(NamedTuple):
    """A month and day within some Gregorian year."""

    month: int
    day: int


def golden_number(year: int) -> int:
    """Position of the year in the 19-year Metonic cycle, 1..19."""
    _check_year(year, ANCHOR_YEAR)
    return year % 19 + 1


def century_number(year: int) -> int:
    """Century count starting from 1; the 1500s are century 16."""
    _check_year(year, ANCHOR_YEAR)
    return year // 100 + 1


_ROMAN_ONES = ("", "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix")


def epact_label(value: int, special25: bool = False) -> str:
    """Liturgical rendering of an epact value.

    0 renders as "*", the special epact 25 as Arabic "25", and everything
    else as a lowercase Roman numeral with a final i printed as j (so 16 is
    "xvj", not "xvi").
    """
    if not 0 <= value <= 29:
        raise ValueError(f"epact value {value} not in 0..29")
    if value == 0:
        return "*"
    if special25 and value == 25:
        return "25"
    numeral = "x" * (value // 10) + _ROMAN_ONES[value % 10]
    if numeral.endswith("i"):
        numeral = numeral[:-1] + "j"
    return numeral


@dataclass(frozen=True)
class Epact:
    """Age of the ecclesiastical moon on January 1, minus one.

    ``special25`` marks the Arabic-numeral epact 25 used when the golden
    number is 12 or more; it places the year's new moons one day apart from
    the Roman-numeral xxv.
    """

    value: int
    special25: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.value <= 29:
            raise ValueError(f"epact value {self.value} not in 0..29")
        if self.special25 and self.value != 25:
            raise ValueError("special25 applies only to epact 25")

    @property
    def label(self) -> str:
        return epact_label(self.value, self.special25)


def _epact_value(year: int) -> int:
    # No range check: the 1582 anchor and the verify sweeps need this raw.
    g = year % 19 + 1
    c = year // 100 + 1
    return (11 * g - 3 * c // 4 + (8 * c + 5) // 25 + 27) % 30


def epact(year: int) -> Epact:
    """Epact of the year by the closed form, with the special-25 flag set."""
    _check_year(year)
    value = _epact_value(year)
    return Epact(value, value == 25 and year % 19 + 1 >= 12)


def day_number(month: int, day: int) -> int:
    """Leap-blind ordinal of a date: 0 for Jan 1 through 364 for Dec 31.

    February 29 shares February 28's number, so the numbering is identical
    in common and leap years.
    """
    _check_date(month, day)
    if month == 2 and day == 29:
        day = 28
    return day - 1 + 30 * (month - 1) + (7 * month - 2) // 12 - 2 * ((month + 9) // 12)


def lunation_value(x: int) -> int:
    """Moon age at offset ``x`` of the alternating lunation cycle.

    Periodic with period 59: within one period the ages run 1..30 and then
    1..29.
    """
    if x < 0:
        raise ValueError("lunation offset must be non-negative")
    return (x + x // 59) % 30 + 1


class LunationBranch(enum.Enum):
    """Which of the two alternating lunation sequences a year follows."""

    SHORT_FIRST = "short-first"
    LONG_FIRST = "long-first"


def lunation_branch(epact_value: int, golden: int) -> LunationBranch:
    """SHORT_FIRST for epacts below 25 and for the special 25; LONG_FIRST
    for xxv and above."""
    if epact_value < 25 or (epact_value == 25 and golden >= 12):
        return LunationBranch.SHORT_FIRST
    return LunationBranch.LONG_FIRST


def moon_age(year: int, month: int, day: int) -> int:
    """Age of the ecclesiastical moon on the given date, 1..30.

    This is the uncorrected age: Januaries of correction years may skip or
    repeat a day relative to the previous December (see
    :mod:`computus.tables` for the pronounced and corrected variants).
    """
    _check_year(year)
    _check_date(month, day, year)
    e = _epact_value(year)
    n = day_number(month, day)
    if lunation_branch(e, year % 19 + 1) is LunationBranch.SHORT_FIRST:
        return lunation_value(e + n)
    return lunation_value(e + n + 29) + (1 if n + e < 30 else 0)
