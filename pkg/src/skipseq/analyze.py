"""Exact length accounting: per-level predicted lengths, skip-cycle counts,
asymptotic coefficient, and comparison tables against the older baselines.

Everything is integer/rational arithmetic; the ceiling in the closed form is
evaluated symbolically so large m cannot drift.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Iterable, Optional

from .construct import ValidationError, validate

__all__ = [
    "LengthModel",
    "ComparisonRow",
    "classical_length",
    "zalinescu_length",
    "radomirovic_length",
    "coefficient",
    "constant_term",
    "skip_cycle_count",
    "concat_length",
    "predicted_length",
    "length_model",
    "best_level",
    "comparison_table",
    "rows_to_csv",
    "rows_to_json",
]

CSV_FIELDS = ["m", "classical", "zalinescu", "radomirovic", "best_s", "best_len", "actual"]


@dataclass(frozen=True)
class LengthModel:
    s: int
    m: int
    t: int
    predicted: int
    concat_length: int
    coefficient: Fraction
    constant: Fraction


@dataclass(frozen=True)
class ComparisonRow:
    m: int
    classical: int
    zalinescu: int
    radomirovic: int
    best_s: Optional[int] = None
    best_len: Optional[int] = None
    actual: Optional[int] = None


def classical_length(m: int) -> int:
    """Length of the classical 1970s constructions (level-1 interposed)."""
    return m * m - 2 * m + 4


def zalinescu_length(m: int) -> int:
    # reported for comparison only; no generator exists for this family here
    return m * m - 2 * m + 3


def radomirovic_length(m: int) -> int:
    return math.ceil(m * m - Fraction(7, 3) * m + Fraction(19, 3))


def coefficient(s: int) -> Fraction:
    """The linear-term coefficient (5s-3)/(2s-1); increases to 5/2."""
    if s < 2:
        raise ValidationError(f"coefficient requires s >= 2, got {s}")
    return Fraction(5 * s - 3, 2 * s - 1)


def constant_term(s: int) -> Fraction:
    if s < 2:
        raise ValidationError(f"constant_term requires s >= 2, got {s}")
    return Fraction(2 * s * s + 9 * s - 7, 2 * s - 1)


def _require_level(s: int, m: int) -> None:
    if s < 2:
        raise ValidationError(f"length formulas require s >= 2, got s={s}")
    result = validate(s, m - 1)
    if not result.ok:
        raise ValidationError(result.reason)


def skip_cycle_count(s: int, m: int) -> int:
    """Number t of skip cycles (= skip sequences) in the level-s list."""
    _require_level(s, m)
    t, rem = divmod(m - 2 * s - 3, 2 * s - 1)
    assert rem == 0 and t >= 0, (s, m)
    return t


def concat_length(s: int, m: int) -> int:
    """Total element count of the level-s list over n = m-1 letters."""
    t = skip_cycle_count(s, m)
    return 2 * (m - 1) + (2 * s + t * (2 * s - 2)) * (m - 2) + t * (m - s - 1)


def predicted_length(s: int, m: int) -> int:
    """Supersequence length via the closed form, exactly."""
    _require_level(s, m)
    return math.ceil(m * m - coefficient(s) * m + constant_term(s))


def length_model(s: int, m: int) -> LengthModel:
    return LengthModel(
        s=s,
        m=m,
        t=skip_cycle_count(s, m),
        predicted=predicted_length(s, m),
        concat_length=concat_length(s, m),
        coefficient=coefficient(s),
        constant=constant_term(s),
    )


def best_level(m: int) -> Optional[tuple[int, int]]:
    """(s, predicted length) minimizing length over valid levels s >= 2."""
    n = m - 1
    candidates = []
    if validate(2, n).ok:
        candidates.append(2)
    s = 3
    while 4 * s + 1 <= n:  # n >= 4s+1 bounds the useful level range
        if validate(s, n).ok:
            candidates.append(s)
        s += 1
    if not candidates:
        return None
    s = min(candidates, key=lambda s: (predicted_length(s, m), s))
    return s, predicted_length(s, m)


def comparison_table(
    ms: Iterable[int], with_actual: bool = False
) -> list[ComparisonRow]:
    """One row per m; best_s/best_len absent when no level is valid."""
    from .construct import build_supersequence, generate

    rows = []
    for m in ms:
        if not 5 <= m <= 10_000:
            raise ValidationError(f"m={m} outside supported range 5..10000")
        best = best_level(m)
        actual = None
        if with_actual and best is not None:
            actual = build_supersequence(generate(best[0], m - 1)).length
        rows.append(
            ComparisonRow(
                m=m,
                classical=classical_length(m),
                zalinescu=zalinescu_length(m),
                radomirovic=radomirovic_length(m),
                best_s=best[0] if best else None,
                best_len=best[1] if best else None,
                actual=actual,
            )
        )
    return rows


def rows_to_csv(rows: Iterable[ComparisonRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        writer.writerow({k: "" if record[k] is None else record[k] for k in CSV_FIELDS})
    return buf.getvalue()


def rows_to_json(rows: Iterable[ComparisonRow]) -> str:
    return json.dumps([asdict(row) for row in rows], indent=2)
