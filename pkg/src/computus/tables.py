"""Year-level lunar products.

Pronounced and fully corrected moon ages, day-by-day tables with new-moon
and full-moon flags, December/January transition tables, new-moon date
lists, Martyrology letters, and the date of Easter.
"""

from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import NamedTuple

from . import core
from .core import CalendarDate, Epact, _check_date, _check_year, _epact_value, moon_age
from .recurrence import jump

# 365-entry tables never contain Feb 29; it shares Feb 28's age.
_TABLE_MONTH_LENGTHS = (31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31)


class MoonAgeMode(enum.Enum):
    """How January of a correction year is treated."""

    RAW = "raw"
    PRONOUNCED = "pronounced"
    CORRECTED = "corrected"


def pronounced_age(year: int, month: int, day: int) -> int:
    """Moon age as pronounced at the reading of the Martyrology.

    In years with golden number 1 and a positive epact, the age through the
    first January lunation is announced one day lower than the raw age,
    restoring the new moon lost when the Metonic correction lands.  On all
    other days this equals :func:`computus.core.moon_age`.
    """
    age = moon_age(year, month, day)
    e = _epact_value(year)
    if year % 19 == 0 and e > 0 and month == 1 and day + e <= 30:
        return age - 1
    return age


def corrected_age(year: int, month: int, day: int) -> int:
    """Moon age with the year's full new-year jump removed, 1..31.

    Through the first January lunation the raw age is shifted down by the
    year's jump (wrapping back into range by adding 30), which keeps the
    day-over-day sequence continuous across every December 31 / January 1
    boundary.  Elsewhere this equals the raw age.  The value 31 appears
    only on January days of years whose jump is -1.
    """
    age = moon_age(year, month, day)
    e = _epact_value(year)
    if month == 1 and day + e <= 30:
        shifted = age - jump(year)
        return shifted + 30 if shifted <= 0 else shifted
    return age


def age_in_mode(year: int, month: int, day: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> int:
    """Dispatch to the raw, pronounced, or corrected age."""
    if mode is MoonAgeMode.PRONOUNCED:
        return pronounced_age(year, month, day)
    if mode is MoonAgeMode.CORRECTED:
        return corrected_age(year, month, day)
    return moon_age(year, month, day)


def year_ages(year: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> list[int]:
    """The year's 365 moon ages indexed by day number.

    Same values as calling the per-date functions for every day, built
    without re-deriving the epact each time.
    """
    _check_year(year)
    e = _epact_value(year)
    branch = core.lunation_branch(e, year % 19 + 1)
    if branch is core.LunationBranch.SHORT_FIRST:
        ages = [core.lunation_value(e + n) for n in range(365)]
    else:
        ages = [
            core.lunation_value(e + n + 29) + (1 if n + e < 30 else 0)
            for n in range(365)
        ]
    # Both adjustments touch only January days 1..30-epact.
    if mode is MoonAgeMode.PRONOUNCED:
        if year % 19 == 0 and e > 0:
            for n in range(30 - e):
                ages[n] -= 1
    elif mode is MoonAgeMode.CORRECTED:
        j = jump(year)
        if j:
            for n in range(30 - e):
                shifted = ages[n] - j
                ages[n] = shifted + 30 if shifted <= 0 else shifted
    return ages


class DayEntry(NamedTuple):
    month: int
    day: int
    age: int
    is_new_moon: bool
    is_full_moon: bool


CSV_HEADER = ("month", "day", "age", "new_moon", "full_moon")


@dataclass(frozen=True)
class YearLunarTable:
    """365 moon ages for one year, with the new moons (age 1) and
    ecclesiastical full moons (age 14) flagged."""

    year: int
    mode: MoonAgeMode
    entries: tuple[DayEntry, ...]

    def new_moons(self) -> list[CalendarDate]:
        return [CalendarDate(e.month, e.day) for e in self.entries if e.is_new_moon]

    def as_dict(self) -> dict:
        """JSON-ready form: {year, mode, entries: [{month, day, age,
        new_moon, full_moon}, ...]}."""
        return {
            "year": self.year,
            "mode": self.mode.value,
            "entries": [
                {
                    "month": e.month,
                    "day": e.day,
                    "age": e.age,
                    "new_moon": e.is_new_moon,
                    "full_moon": e.is_full_moon,
                }
                for e in self.entries
            ],
        }


def year_table(year: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> YearLunarTable:
    """Build the day-by-day lunar table for a year."""
    ages = year_ages(year, mode)
    entries = []
    n = 0
    for month, length in enumerate(_TABLE_MONTH_LENGTHS, start=1):
        for day in range(1, length + 1):
            age = ages[n]
            n += 1
            entries.append(DayEntry(month, day, age, age == 1, age == 14))
    return YearLunarTable(year, mode, tuple(entries))


class DayAge(NamedTuple):
    day: int
    age: int


@dataclass(frozen=True)
class TransitionTable:
    """December of the previous year laid next to January of the boundary
    year.

    December is always raw; only January is affected by the pronounced and
    corrected treatments.
    """

    year: int
    mode: MoonAgeMode
    december: tuple[DayAge, ...]
    january: tuple[DayAge, ...]

    def as_dict(self) -> dict:
        return {
            "year": self.year,
            "mode": self.mode.value,
            "december": [{"day": d, "age": a} for d, a in self.december],
            "january": [{"day": d, "age": a} for d, a in self.january],
        }


def transition_table(year: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> TransitionTable:
    """The 31 + 31 day ages around the December 31 / January 1 boundary."""
    _check_year(year, core.YEAR_MIN + 1)
    december = year_ages(year - 1)[334:]
    january = year_ages(year, mode)[:31]
    return TransitionTable(
        year,
        mode,
        tuple(DayAge(d + 1, a) for d, a in enumerate(december)),
        tuple(DayAge(d + 1, a) for d, a in enumerate(january)),
    )


def new_moon_dates(year: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> list[CalendarDate]:
    """All dates of the year whose age is 1, ascending; 12 or 13 of them."""
    return year_table(year, mode).new_moons()


class MartyrologyLetter(NamedTuple):
    symbol: str
    distinct_color: bool


@dataclass(frozen=True)
class LetterMap:
    """A glyph for each epact value 0..29 plus the special-25 variant."""

    symbols: tuple[str, ...]
    special25: str


def load_letter_map(path: str | Path | None = None) -> LetterMap:
    """Read a letter mapping from a JSON file, or the packaged default.

    The file holds an ``epacts`` object keyed "0".."29" and a ``special_25``
    glyph.
    """
    if path is None:
        text = (
            resources.files("computus")
            .joinpath("data/martyrology_letters.json")
            .read_text("utf-8")
        )
    else:
        text = Path(path).read_text("utf-8")
    raw = json.loads(text)
    try:
        epacts = raw["epacts"]
        symbols = tuple(epacts[str(v)] for v in range(30))
        special = raw["special_25"]
    except KeyError as exc:
        raise ValueError(f"letter map is missing entry {exc}") from None
    return LetterMap(symbols, special)


@functools.lru_cache(maxsize=1)
def _default_letter_map() -> LetterMap:
    return load_letter_map()


def martyrology_letter(e: Epact, letters: LetterMap | None = None) -> MartyrologyLetter:
    """Glyph standing for the epact in Martyrology lunar tables.

    The special epact 25 shares its F with epact xxv; the distinct colour is
    the cue readers use to pick the right column, so it is reported as a
    flag here.
    """
    if letters is None:
        letters = _default_letter_map()
    if e.special25:
        return MartyrologyLetter(letters.special25, True)
    return MartyrologyLetter(letters.symbols[e.value], False)


class Weekday(enum.IntEnum):
    SUNDAY = 0
    MONDAY = 1
    TUESDAY = 2
    WEDNESDAY = 3
    THURSDAY = 4
    FRIDAY = 5
    SATURDAY = 6


_WEEKDAY_OFFSETS = (0, 3, 2, 5, 0, 3, 5, 1, 4, 6, 2, 4)


def day_of_week(year: int, month: int, day: int) -> Weekday:
    """Gregorian weekday by congruence.

    datetime.date stops at year 9999; the years handled here do not, so the
    weekday is computed directly.  The result repeats with the calendar's
    400-year period.
    """
    _check_year(year)
    _check_date(month, day, year)
    y = year - 1 if month < 3 else year
    return Weekday(
        (y + y // 4 - y // 100 + y // 400 + _WEEKDAY_OFFSETS[month - 1] + day) % 7
    )


def _next_date(month: int, day: int) -> tuple[int, int]:
    if day < _TABLE_MONTH_LENGTHS[month - 1]:
        return month, day + 1
    return month + 1, 1


def easter_date(year: int, mode: MoonAgeMode = MoonAgeMode.RAW) -> CalendarDate:
    """Easter Sunday: the Sunday strictly after the first 14th day of the
    moon falling on or after March 21.

    The mode argument is accepted for interface symmetry but the search
    always reads raw ages: the pronounced and corrected adjustments touch
    only the first January lunation and cannot move the paschal full moon.
    The result always lies in March 22 .. April 25.
    """
    _check_year(year)
    month, day = 3, 21
    while moon_age(year, month, day) != 14:
        month, day = _next_date(month, day)
    month, day = _next_date(month, day)
    while day_of_week(year, month, day) is not Weekday.SUNDAY:
        month, day = _next_date(month, day)
    return CalendarDate(month, day)
