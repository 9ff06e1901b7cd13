"""Jacquet-functor words modulo commutation, the chain criterion for their
nonvanishing, and sufficient irreducibility criteria."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core_types import HalfInt
from .jordan import ArthurParameter


@dataclass(frozen=True, slots=True)
class Segment:
    """The arithmetic progression of step 1 from ``start`` to ``stop``."""

    start: HalfInt
    stop: HalfInt

    def __post_init__(self) -> None:
        if (self.start.doubled - self.stop.doubled) % 2 != 0:
            raise ValueError(
                f"segment endpoints must differ by an integer, got [{self.start}, {self.stop}]"
            )

    def entries(self) -> tuple[HalfInt, ...]:
        step = 2 if self.stop.doubled >= self.start.doubled else -2
        return tuple(
            HalfInt(d)
            for d in range(self.start.doubled, self.stop.doubled + step, step)
        )

    def __len__(self) -> int:
        return abs(self.stop.doubled - self.start.doubled) // 2 + 1

    def __str__(self) -> str:
        return f"[{self.start}, {self.stop}]"


def segments_linked(one: Segment, other: Segment) -> bool:
    """Whether two segments are linked: their union is a segment and neither
    contains the other. Segments in different integrality classes are never
    linked."""
    if (one.start.doubled - other.start.doubled) % 2 != 0:
        return False
    s1 = {e.doubled for e in one.entries()}
    s2 = {e.doubled for e in other.entries()}
    if s1 <= s2 or s2 <= s1:
        return False
    union = s1 | s2
    return (max(union) - min(union)) // 2 + 1 == len(union)


def split_segment(b: int) -> tuple[HalfInt, HalfInt, Segment, Segment]:
    """Split the symmetric segment of b entries around 0 into its negative
    and positive halves (the odd middle entry goes to the lower half).

    Returns (delta, delta_prime, lower, upper) where the halves are
    [-(b-1)/2, -delta] and [delta_prime, (b-1)/2]; delta = 0, delta' = 1
    for odd b and delta = delta' = 1/2 for even b.
    """
    if b < 2:
        raise ValueError(f"b must be >= 2, got {b}")
    if b % 2 == 1:
        delta, delta_prime = 0, 2  # doubled values of 0 and 1
    else:
        delta, delta_prime = 1, 1  # doubled values of 1/2 and 1/2
    lower = Segment(HalfInt(-(b - 1)), HalfInt(-delta))
    upper = Segment(HalfInt(delta_prime), HalfInt(b - 1))
    return HalfInt(delta), HalfInt(delta_prime), lower, upper


@dataclass(frozen=True)
class JacSequence:
    """A word of Jacquet exponents along one cuspidal label."""

    rho: str
    exponents: tuple[HalfInt, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))


def jac_commutes(x: HalfInt, y: HalfInt) -> bool:
    """Adjacent exponents x, y may be swapped exactly when |x - y| > 1."""
    return abs(x.doubled - y.doubled) > 2


def jac_normal_form(seq: JacSequence) -> JacSequence:
    """Lexicographically smallest word in the commutation class of ``seq``.

    Greedy: repeatedly emit the smallest exponent that commutes past
    everything before it.
    """
    remaining = list(seq.exponents)
    out: list[HalfInt] = []
    while remaining:
        best_idx = None
        for idx, letter in enumerate(remaining):
            if any(not jac_commutes(letter, remaining[j]) for j in range(idx)):
                continue
            if best_idx is None or letter.doubled < remaining[best_idx].doubled:
                best_idx = idx
        assert best_idx is not None  # idx 0 always qualifies
        out.append(remaining.pop(best_idx))
    return JacSequence(seq.rho, tuple(out))


def jac_nonvanishing_necessary(
    psi: ArthurParameter, rho: str, seg: Segment
) -> bool:
    """Necessary chain condition for Jac along ``seg`` to be nonzero.

    Looks for blocks (rho, A_1, B_1, zeta_1), ..., (rho, A_v, B_v, zeta_v)
    with zeta_1 B_1 = start, A_v >= |stop|, and B_{i+1} <= A_i + 1 along the
    chain. True means "possibly nonzero"; False is conclusive vanishing.
    """
    quads = []
    for blk in psi.blocks:
        if blk.rho != rho:
            continue
        if blk.twist != 0:
            raise ValueError(f"twisted block {blk} in chain search (decompose first)")
        quads.append(blk.quadruple())

    x, y = seg.start, seg.stop
    abs_y = abs(y)

    def signed_b(q) -> HalfInt:
        return q.B if q.zeta > 0 else -q.B

    frontier = [i for i, q in enumerate(quads) if signed_b(q) == x]
    seen = set(frontier)
    while frontier:
        nxt = []
        for i in frontier:
            if quads[i].A >= abs_y:
                return True
            for j, q in enumerate(quads):
                if j not in seen and q.B <= quads[i].A + 1:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return False


class IrredVerdict(enum.Enum):
    """Outcome of a sufficient irreducibility criterion."""

    IRREDUCIBLE = "irreducible"
    UNKNOWN = "unknown"


def irreducible_cuspidal_twist(
    psi: ArthurParameter, rho: str, x: HalfInt
) -> IrredVerdict:
    """Sufficient criterion for the x-twisted cuspidal induction to stay
    irreducible: every same-label block has A < |x| - 1 or B > |x|.

    x = 0 is outside the criterion's scope and raises.
    """
    if x.doubled == 0:
        raise ValueError("x must be nonzero")
    abs_x = abs(x)
    for blk in psi.blocks:
        if blk.rho != rho:
            continue
        if blk.twist != 0:
            raise ValueError(f"twisted block {blk} in irreducibility check")
        q = blk.quadruple()
        if q.A < abs_x - 1 or q.B > abs_x:
            continue
        return IrredVerdict.UNKNOWN
    return IrredVerdict.IRREDUCIBLE


def speh_pair_irreducible(
    rho_eq: bool,
    half_sum_diff_integral: bool,
    y_plus_z: Fraction,
    y2_plus_z2: Fraction,
) -> IrredVerdict:
    """Sufficient criterion for a product of two Speh-type factors to be
    irreducible: different labels, non-integral exponent gap, or close
    centers |(y+z) - (y'+z')| < 1."""
    if not rho_eq or not half_sum_diff_integral:
        return IrredVerdict.IRREDUCIBLE
    if abs(Fraction(y_plus_z) - Fraction(y2_plus_z2)) < 1:
        return IrredVerdict.IRREDUCIBLE
    return IrredVerdict.UNKNOWN
