"""Archimedean bookkeeping: infinitesimal-character multisets, regularity,
and pole orders of the Gamma-factor products in the normalization."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core_types import HalfInt


@dataclass(frozen=True, slots=True)
class ArchBlock:
    """An archimedean block: discrete-series size a_delta, length b, and an
    opaque annotation ell that no operation consumes."""

    a_delta: int
    b: int
    ell: int | None = None

    def __post_init__(self) -> None:
        if self.a_delta < 1 or self.b < 1:
            raise ValueError(
                f"block sizes must be >= 1, got ({self.a_delta}, {self.b})"
            )


def _segment_doubles(b: int) -> range:
    """Doubled entries (b-1)/2, (b-3)/2, ..., -(b-1)/2."""
    return range(b - 1, -b, -2)


def inf_char(blocks: Iterable[ArchBlock]) -> tuple[HalfInt, ...]:
    """Infinitesimal-character multiset of the blocks, sorted descending.

    Each block contributes the segment of b entries centered at 0, shifted
    by +-(a_delta - 1)/2 (a single unshifted copy when a_delta = 1).
    """
    doubles: list[int] = []
    for blk in blocks:
        shift = blk.a_delta - 1
        for e in _segment_doubles(blk.b):
            if shift == 0:
                doubles.append(e)
            else:
                doubles.append(e + shift)
                doubles.append(e - shift)
    doubles.sort(reverse=True)
    return tuple(HalfInt(d) for d in doubles)


def combined_inf_char(
    blocks: Iterable[ArchBlock], a_tau: int, s0: HalfInt
) -> tuple[HalfInt, ...]:
    """Infinitesimal character of the blocks together with the twisted pair
    of size-a_tau entries at +-(a_tau-1)/2 + s0 and their negatives.

    The two twisted entries coincide when a_tau = 1 and are then counted
    once (before mirroring).
    """
    if a_tau < 1:
        raise ValueError(f"a_tau must be >= 1, got {a_tau}")
    doubles = [e.doubled for e in inf_char(blocks)]
    tau_pos = {s0.doubled + (a_tau - 1), s0.doubled - (a_tau - 1)}
    for d in tau_pos:
        doubles.append(d)
        doubles.append(-d)
    doubles.sort(reverse=True)
    return tuple(HalfInt(d) for d in doubles)


def is_regular(entries: Iterable[HalfInt]) -> bool:
    """Whether the multiset of entries has no repetition."""
    counts = Counter(e.doubled for e in entries)
    return all(c == 1 for c in counts.values())


def arch_lfactor_order(a_tau: int, a_delta: int, b: int, s0: HalfInt) -> int:
    """Pole order (<= 0) of the Gamma-factor pair for (a_tau, a_delta, b) at s0.

    The two Gamma arguments are s0 - (b-1)/2 + |a_tau - a_delta|/2 and
    s0 - (b-1)/2 + (a_tau + a_delta)/2 - 1; they coincide when either size
    is 1 and only one is kept. Each kept nonpositive-integer argument
    contributes -1.
    """
    if a_tau < 1 or a_delta < 1 or b < 1:
        raise ValueError(
            f"sizes must be >= 1, got a_tau={a_tau}, a_delta={a_delta}, b={b}"
        )
    base = s0.doubled - (b - 1)
    args = [base + abs(a_tau - a_delta), base + a_tau + a_delta - 2]
    if a_tau == 1 or a_delta == 1:
        args = args[:1]
    return -sum(1 for d in args if d % 2 == 0 and d <= 0)


def normalization_order(
    tau_sizes: Sequence[int], blocks: Sequence[ArchBlock], s0: HalfInt
) -> int:
    """Total pole order of the archimedean normalization at s0 > 0: the sum
    of arch_lfactor_order over every (tau size, block) pair."""
    if s0 <= 0:
        raise ValueError(f"s0 must be positive, got {s0}")
    total = 0
    for a_tau in tau_sizes:
        for blk in blocks:
            total += arch_lfactor_order(a_tau, blk.a_delta, blk.b, s0)
    return total
