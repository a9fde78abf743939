"""Property sweeps over year ranges, with first-counterexample reporting.

One pass of the epact recurrence drives all year-level identity checks;
day-level checks (age succession, new-year continuity, the Easter window)
ride along for each year in range.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import core, recurrence, tables


@dataclass
class PropertyCheck:
    name: str
    ok: bool
    years_checked: int
    counterexample: str | None = None


@dataclass
class VerifyReport:
    start: int
    end: int
    checks: list[PropertyCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[PropertyCheck]:
        return [c for c in self.checks if not c.ok]


class _Check:
    __slots__ = ("name", "count", "failure")

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failure: str | None = None

    def fail(self, detail: str) -> None:
        if self.failure is None:
            self.failure = detail

    def result(self) -> PropertyCheck:
        return PropertyCheck(self.name, self.failure is None, self.count, self.failure)


def _first_bad_step(ages: list[int], resets: tuple[int, ...]) -> int:
    """Index of the first day whose step to the next is neither +1 nor a
    reset to 1 from an allowed value; -1 if the whole sequence is fine."""
    for i in range(len(ages) - 1):
        a, b = ages[i], ages[i + 1]
        if b != a + 1 and not (b == 1 and a in resets):
            return i
    return -1


def _corrected_resets(year_jump: int) -> tuple[int, ...]:
    # Natural lunations end at 29 or 30; the corrected first January
    # lunation ends at 30 minus the year's jump (31 when the jump is -1,
    # 28 when it is 2).
    return (29, 30, 30 - year_jump)


def verify_range(start: int = core.YEAR_MIN, end: int = 25000) -> VerifyReport:
    """Check every published identity and structural property over a range.

    ``end`` may run to the recurrence ceiling; checks that need dated
    operations stop at the closed-form ceiling (4,000,000).
    """
    if not core.YEAR_MIN <= start <= end <= recurrence.RECURRENCE_MAX:
        raise ValueError(
            f"need {core.YEAR_MIN} <= start <= end <= "
            f"{recurrence.RECURRENCE_MAX}, got {start}..{end}"
        )
    dated_end = min(end, core.YEAR_MAX)

    rec = _Check("epact closed form vs recurrence")
    ssum = _Check("solar sum identity")
    lsum = _Check("lunar sum identity")
    lalt = _Check("alternate lunar sum equivalence")
    jdec = _Check("jump decomposition")
    succ = _Check("raw age succession")
    csucc = _Check("corrected December-January succession")
    cont = _Check("new year continuity")
    east = _Check("easter window")

    prev_ages: list[int] | None = None
    if core.YEAR_MIN < start <= dated_end:
        prev_ages = tables.year_ages(start - 1)

    value = recurrence.ANCHOR_EPACT
    solar_total = 0
    lunar_total = 0
    for year in range(core.YEAR_MIN, end + 1):
        m = recurrence.metonic_correction(year)
        s = recurrence.solar_correction(year)
        lun = recurrence.lunar_correction(year)
        value = (value + 11 + m - s + lun) % 30
        solar_total += s
        lunar_total += lun
        if year < start:
            continue

        closed = core._epact_value(year)
        rec.count += 1
        if closed != value:
            rec.fail(f"year {year}: closed form {closed}, recurrence {value}")

        ssum.count += 1
        if recurrence.solar_sum(year) != solar_total:
            ssum.fail(
                f"year {year}: solar_sum {recurrence.solar_sum(year)}, "
                f"accumulated {solar_total}"
            )
        lsum.count += 1
        if recurrence.lunar_sum(year) != lunar_total:
            lsum.fail(
                f"year {year}: lunar_sum {recurrence.lunar_sum(year)}, "
                f"accumulated {lunar_total}"
            )
        lalt.count += 1
        if recurrence.lunar_sum_alt(year) != recurrence.lunar_sum(year):
            lalt.fail(
                f"year {year}: lunar_sum {recurrence.lunar_sum(year)}, "
                f"alternate form {recurrence.lunar_sum_alt(year)}"
            )
        jdec.count += 1
        if recurrence.jump(year) != m - s + lun:
            jdec.fail(
                f"year {year}: jump {recurrence.jump(year)}, "
                f"corrections give {m - s + lun}"
            )

        if year > dated_end:
            continue

        ages = tables.year_ages(year)
        succ.count += 1
        bad = _first_bad_step(ages, (29, 30))
        if bad >= 0:
            succ.fail(f"year {year}: day {bad} age {ages[bad]} then {ages[bad + 1]}")

        if prev_ages is not None:
            corrected_january = [tables.corrected_age(year, 1, d) for d in range(1, 32)]

            cont.count += 1
            dec31 = prev_ages[364]
            if (corrected_january[0] - dec31 - 1) % 30 != 0:
                cont.fail(
                    f"year {year}: Dec 31 age {dec31}, corrected Jan 1 "
                    f"{corrected_january[0]}"
                )

            csucc.count += 1
            boundary = prev_ages[334:] + corrected_january
            bad = _first_bad_step(boundary, _corrected_resets(recurrence.jump(year)))
            if bad >= 0:
                csucc.fail(
                    f"year {year}: boundary day {bad} age {boundary[bad]} "
                    f"then {boundary[bad + 1]}"
                )

        east.count += 1
        em, ed = tables.easter_date(year)
        if not (3, 22) <= (em, ed) <= (4, 25):
            east.fail(f"year {year}: easter {em:02d}-{ed:02d}")

        prev_ages = ages

    report = VerifyReport(start, end)
    for check in (rec, ssum, lsum, lalt, jdec, succ, csucc, cont, east):
        report.checks.append(check.result())
    return report
