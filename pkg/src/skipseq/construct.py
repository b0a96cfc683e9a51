"""Generators for the T1/T2/T_s sequence lists and the interposed
supersequences they induce.

Each generator transcribes its defining recurrence literally in terms of the
1-based slicing primitive, so the code can be diffed clause by clause against
the written definitions.  Levels:

* level 1 (``gen_t1``): the classical list, valid for any n > 3;
* level 2 (``gen_t2``): one skip letter, n >= 9 and n = 0 (mod 3);
* level s >= 3 (``gen_ts``): s-1 skip letters, n >= 4s+1 and n = 3 (mod 2s-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import pslice

__all__ = [
    "ValidationError",
    "ValidationResult",
    "GeneratedList",
    "Supersequence",
    "validate",
    "skip_letters",
    "phi",
    "phi_reverse",
    "gen_t1",
    "gen_t2",
    "gen_ts",
    "generate",
    "build_supersequence",
    "construct_for_m",
]

# case tags, recorded per sequence
TAG_INITIAL = "initial"
TAG_JUMP = "jump"
TAG_FORWARD = "forward"
TAG_SKIP = "skip"
TAG_RECOVER = "recover"
TAG_FINAL = "final"


class ValidationError(ValueError):
    """Construction parameters violate a size or congruence constraint."""


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    reason: Optional[str] = None
    nearest_below: Optional[int] = None
    nearest_above: Optional[int] = None


@dataclass(frozen=True)
class GeneratedList:
    """The list sigma_1..sigma_n for level s over the alphabet {1..n}."""

    s: int
    n: int
    sequences: tuple[tuple[int, ...], ...]
    case_tags: tuple[str, ...]

    def seq(self, k: int) -> tuple[int, ...]:
        """sigma_k, 1-based."""
        return self.sequences[k - 1]

    def tag(self, k: int) -> str:
        return self.case_tags[k - 1]

    @property
    def total_elements(self) -> int:
        return sum(len(seq) for seq in self.sequences)

    def concatenation(self) -> tuple[int, ...]:
        return tuple(a for seq in self.sequences for a in seq)

    def skip_indices(self) -> list[int]:
        """Indices k whose sequence drops the skip letters."""
        return [k for k in range(1, self.n + 1) if self.tag(k) == TAG_SKIP]


@dataclass(frozen=True)
class Supersequence:
    """Word over {1..m}; for interposed builds m = n+1 and the new letter
    is encoded as m itself."""

    word: tuple[int, ...]
    m: int
    source: Optional[GeneratedList] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.word)


def _valid_ns(s: int):
    """Predicate + generator parameters for valid n at level s."""
    if s == 1:
        return lambda n: n > 3
    if s == 2:
        # The written definition admits n = 6, but its clause layout then
        # produces a repeated letter in sigma_4; we reject rather than guess.
        return lambda n: n >= 9 and n % 3 == 0
    return lambda n: n >= 4 * s + 1 and n % (2 * s - 1) == 3


def validate(s: int, n: int) -> ValidationResult:
    """Check the size/congruence constraints for level s at alphabet size n."""
    if s < 1:
        return ValidationResult(False, f"level s={s} must be >= 1")
    good = _valid_ns(s)
    if good(n):
        return ValidationResult(True)
    if s == 1:
        reason = f"n={n} must be > 3 at level 1"
    elif s == 2:
        if n == 6:
            reason = (
                "n=6 is unsupported at level 2: the defining clauses "
                "produce a repeated letter in sigma_4 (erratum)"
            )
        else:
            reason = f"n={n} must be >= 9 and divisible by 3 at level 2"
    else:
        reason = (
            f"n={n} must be >= {4 * s + 1} and = 3 (mod {2 * s - 1}) "
            f"at level {s}"
        )
    below = next((v for v in range(n - 1, 0, -1) if good(v)), None)
    above = next(v for v in range(n + 1, n + 8 * s + 10) if good(v))
    return ValidationResult(False, reason, below, above)


def _require_valid(s: int, n: int) -> None:
    result = validate(s, n)
    if not result.ok:
        raise ValidationError(result.reason)


def skip_letters(s: int, n: int) -> tuple[int, ...]:
    """The s-1 letters n-s+2..n."""
    return tuple(range(n - s + 2, n + 1))


def phi(s: int, n: int) -> tuple[int, ...]:
    """Ascending word of skip letters."""
    return skip_letters(s, n)


def phi_reverse(s: int, n: int) -> tuple[int, ...]:
    """Descending word of skip letters."""
    return tuple(reversed(skip_letters(s, n)))


def gen_t1(n: int) -> GeneratedList:
    """Level-1 list: sigma_k = sigma_{k-2}[-1] . sigma_{k-1}[1,-2]."""
    _require_valid(1, n)
    seqs: list[tuple[int, ...]] = [tuple(range(1, n + 1)), tuple(range(1, n))]
    tags = [TAG_INITIAL, TAG_INITIAL]
    for k in range(3, n):
        prev2, prev = seqs[k - 3], seqs[k - 2]
        seqs.append((prev2[-1],) + pslice(prev, 1, -2))
        tags.append(TAG_FORWARD)
    prev2, prev = seqs[n - 3], seqs[n - 2]
    seqs.append((prev2[-1],) + pslice(prev, 1, -1))
    tags.append(TAG_FINAL)
    return GeneratedList(1, n, tuple(seqs), tuple(tags))


def gen_t2(n: int) -> GeneratedList:
    """Level-2 list: one extra letter n skipped where k = 2 (mod 3)."""
    _require_valid(2, n)
    t1 = gen_t1(n)
    seqs: list[tuple[int, ...]] = [t1.seq(1), t1.seq(2), t1.seq(3)]
    tags = [TAG_INITIAL] * 3
    for k in range(4, n - 2):
        prev2, prev = seqs[k - 3], seqs[k - 2]
        if k % 3 == 1:
            if k == 4:
                seq = (prev2[-1],) + pslice(prev, 2, -3) + (n,) + (prev[-2],)
            else:
                seq = (
                    (prev2[-1], prev[0])
                    + pslice(prev, 3, -3)
                    + (n,)
                    + (prev[-2],)
                )
            tag = TAG_JUMP
        elif k % 3 == 2:
            seq = (prev2[-1],) + pslice(prev, 1, -3)
            tag = TAG_SKIP
        else:
            seq = (prev2[-1], n) + pslice(prev, 1, -2)
            tag = TAG_RECOVER
        seqs.append(seq)
        tags.append(tag)
    # final three sequences
    prev2, prev = seqs[n - 5], seqs[n - 4]
    seqs.append((prev2[-1], prev[0]) + pslice(prev, 3, -2) + (n,))
    prev2, prev = seqs[n - 4], seqs[n - 3]
    seqs.append((prev2[-1],) + pslice(prev, 1, -2))
    prev2, prev = seqs[n - 3], seqs[n - 2]
    seqs.append((prev2[-1],) + pslice(prev, 1, -1))
    tags += [TAG_FINAL] * 3
    return GeneratedList(2, n, tuple(seqs), tuple(tags))


def gen_ts(s: int, n: int) -> GeneratedList:
    """Level-s list (s >= 3): s-1 skip letters cycle through jump / forward /
    skip / recover / forward blocks of 2s-1 sequences."""
    if s < 3:
        raise ValidationError(f"gen_ts requires s >= 3, got s={s}")
    _require_valid(s, n)
    cyc = 2 * s - 1
    fwd = pslice  # alias keeps the clauses below one line each
    ph = phi(s, n)
    ph_rev = phi_reverse(s, n)
    t1 = gen_t1(n)
    seqs: list[tuple[int, ...]] = [t1.seq(k) for k in range(1, s + 2)]
    tags = [TAG_INITIAL] * (s + 1)
    for k in range(s + 2, n - s):
        prev2, prev = seqs[k - 3], seqs[k - 2]
        r = k % cyc
        if r == (s + 2) % cyc:
            if k == s + 2:
                seq = (
                    (prev2[-1],)
                    + fwd(prev, s, -s - 1)
                    + ph
                    + fwd(prev, -s, -2)
                )
            else:
                seq = (
                    (prev2[-1],)
                    + fwd(prev, 1, s - 1)
                    + fwd(prev, 2 * s - 1, -s - 1)
                    + ph
                    + fwd(prev, -s, -2)
                )
            tag = TAG_JUMP
        elif r == 2:
            # the written clause says length n-1 here, but the formula (and
            # the worked examples) give n-s; the formula governs
            seq = (prev2[-1],) + fwd(prev, 1, -s - 1)
            tag = TAG_SKIP
        elif r == 3:
            seq = (prev2[-1],) + ph_rev + fwd(prev, 1, -2)
            tag = TAG_RECOVER
        else:
            seq = (prev2[-1],) + fwd(prev, 1, -2)
            tag = TAG_FORWARD
        seqs.append(seq)
        tags.append(tag)
    # final s+1 sequences mirror the initial block
    prev2, prev = seqs[n - s - 3], seqs[n - s - 2]
    seqs.append(
        (prev2[-1],)
        + fwd(prev, 1, s - 1)
        + fwd(prev, 2 * s - 1, -2)
        + ph_rev
    )
    tags.append(TAG_FINAL)
    for i in range(1, s):
        prev2, prev = seqs[n - s + i - 3], seqs[n - s + i - 2]
        seqs.append((prev2[-1],) + fwd(prev, 1, -2))
        tags.append(TAG_FINAL)
    prev2, prev = seqs[n - 3], seqs[n - 2]
    seqs.append((prev2[-1],) + fwd(prev, 1, -1))
    tags.append(TAG_FINAL)
    return GeneratedList(s, n, tuple(seqs), tuple(tags))


def generate(s: int, n: int) -> GeneratedList:
    """Dispatch to the level-appropriate generator."""
    if s == 1:
        return gen_t1(n)
    if s == 2:
        return gen_t2(n)
    return gen_ts(s, n)


def build_supersequence(glist: GeneratedList) -> Supersequence:
    """Interpose n+1 copies of the new letter x = n+1 around the sequences."""
    m = glist.n + 1
    word: list[int] = [m]
    for seq in glist.sequences:
        word.extend(seq)
        word.append(m)
    return Supersequence(tuple(word), m, glist)


def _valid_levels(n: int) -> list[int]:
    """Levels s >= 2 whose constraints admit this n."""
    out = []
    if validate(2, n).ok:
        out.append(2)
    s = 3
    while 4 * s + 1 <= n:
        if validate(s, n).ok:
            out.append(s)
        s += 1
    return out


def _best_level(n: int) -> Optional[int]:
    """Valid level with the smallest predicted length (ties: smaller s)."""
    from .analyze import predicted_length

    levels = _valid_levels(n)
    if not levels:
        return None
    return min(levels, key=lambda s: (predicted_length(s, n + 1), s))


def construct_for_m(m: int, strategy: str = "best_valid") -> Supersequence:
    """Build a supersequence over exactly m letters.

    strategy:
      exact       -- require some level s >= 2 to be valid at n = m-1
      best_valid  -- as exact, but fall back to the level-1 list
      t1_fallback -- always the level-1 list
      restrict    -- build at the smallest valid n' >= m-1 and delete every
                     letter above m (restriction preserves the property)
    """
    if m < 5:
        raise ValidationError(f"m={m} must be >= 5")
    n = m - 1
    if strategy == "t1_fallback":
        return build_supersequence(gen_t1(n))
    if strategy in ("exact", "best_valid"):
        best = _best_level(n)
        if best is not None:
            return build_supersequence(generate(best, n))
        if strategy == "best_valid":
            return build_supersequence(gen_t1(n))
        below = next(
            (v for v in range(m - 1, 5, -1) if _valid_levels(v - 1)), None
        )
        above = next(v for v in range(m + 1, m + 30) if _valid_levels(v - 1))
        raise ValidationError(
            f"no exact construction at m={m} (no level s >= 2 valid at "
            f"n={n}); nearest valid m: {below} and {above}"
        )
    if strategy == "restrict":
        np_ = next(v for v in range(n, n + 30) if _valid_levels(v))
        best = _best_level(np_)
        full = build_supersequence(generate(best, np_))
        word = tuple(a for a in full.word if a <= m)
        return Supersequence(word, m, full.source)
    raise ValidationError(f"unknown strategy {strategy!r}")
