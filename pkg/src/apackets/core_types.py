"""Exact half-integer arithmetic, cuspidal labels, group types, and declared
analytic facts shared by every other module.

All values are immutable and all arithmetic is exact; no floating point is
used anywhere in the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

PLUS = 1
MINUS = -1

_SIGN_TO_STR = {PLUS: "+", MINUS: "-"}


def check_sign(value: int) -> int:
    """Return ``value`` unchanged if it is +1 or -1, else raise ValueError."""
    if value is not True and value is not False and value in (PLUS, MINUS):
        return value
    raise ValueError(f"not a sign (+1/-1): {value!r}")


def sign_str(value: int) -> str:
    """Render a sign as '+' or '-'."""
    return _SIGN_TO_STR[check_sign(value)]


def parse_sign(text: str) -> int:
    """Parse '+', '-', '+1', '-1' into +1 or -1."""
    if text in ("+", "+1"):
        return PLUS
    if text in ("-", "-1", "−"):
        return MINUS
    raise ValueError(f"not a sign: {text!r}")


@dataclass(frozen=True, slots=True)
class HalfInt:
    """An element of (1/2)Z, stored as the doubled integer ``2x``."""

    doubled: int

    def __post_init__(self) -> None:
        if not isinstance(self.doubled, int) or isinstance(self.doubled, bool):
            raise TypeError(f"doubled value must be an int, got {self.doubled!r}")

    @classmethod
    def whole(cls, n: int) -> "HalfInt":
        """The half-integer equal to the ordinary integer ``n``."""
        return cls(2 * n)

    @classmethod
    def halves(cls, k: int) -> "HalfInt":
        """The half-integer ``k/2``."""
        return cls(k)

    @property
    def is_integral(self) -> bool:
        return self.doubled % 2 == 0

    def as_int(self) -> int:
        """Exact conversion to int; raises if the value is not integral."""
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def floor(self) -> int:
        return self.doubled // 2

    def as_fraction(self):
        from fractions import Fraction

        return Fraction(self.doubled, 2)

    def _coerced(self, other: Union["HalfInt", int]) -> "HalfInt":
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(2 * other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["HalfInt", int]) -> "HalfInt":
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other: Union["HalfInt", int]) -> "HalfInt":
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented
        return HalfInt(other.doubled - self.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __mul__(self, other: int) -> "HalfInt":
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def _cmp_value(self, other: Union["HalfInt", int]) -> int:
        other = self._coerced(other)
        if other is NotImplemented:
            return NotImplemented  # type: ignore[return-value]
        return other.doubled

    def __lt__(self, other: Union["HalfInt", int]) -> bool:
        v = self._cmp_value(other)
        return NotImplemented if v is NotImplemented else self.doubled < v

    def __le__(self, other: Union["HalfInt", int]) -> bool:
        v = self._cmp_value(other)
        return NotImplemented if v is NotImplemented else self.doubled <= v

    def __gt__(self, other: Union["HalfInt", int]) -> bool:
        v = self._cmp_value(other)
        return NotImplemented if v is NotImplemented else self.doubled > v

    def __ge__(self, other: Union["HalfInt", int]) -> bool:
        v = self._cmp_value(other)
        return NotImplemented if v is NotImplemented else self.doubled >= v

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.doubled == other.doubled
        if isinstance(other, int) and not isinstance(other, bool):
            return self.doubled == 2 * other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("HalfInt", self.doubled))

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def parse_halfint(text: str) -> HalfInt:
    """Parse 'n' or 'k/2' (optionally signed) into a HalfInt."""
    text = text.strip()
    if text.endswith("/2"):
        return HalfInt(int(text[:-2]))
    return HalfInt.whole(int(text))


def halfint_in_segment(x: HalfInt, lo: HalfInt, hi: HalfInt) -> bool:
    """Whether ``x`` lies in the integer-step segment between ``lo`` and ``hi``.

    The segment's entries step by 1 starting from ``lo``; a value in a
    different integrality class than the endpoints is never a member.
    Endpoint order does not matter.
    """
    if (x.doubled - lo.doubled) % 2 != 0:
        return False
    a, b = lo.doubled, hi.doubled
    if a > b:
        a, b = b, a
    return a <= x.doubled <= b


class Parity(enum.Enum):
    """Self-dual type of a cuspidal label (type of its dual-side image)."""

    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"

    @property
    def sign(self) -> int:
        return PLUS if self is Parity.ORTHOGONAL else MINUS


def parity_from_sign(sign: int) -> Parity:
    return Parity.ORTHOGONAL if check_sign(sign) == PLUS else Parity.SYMPLECTIC


@dataclass(frozen=True, slots=True)
class CuspidalLabel:
    """An opaque cuspidal datum: identifier, dimension, and duality facts."""

    id: str
    dim: int
    self_dual: bool
    parity: Parity | None = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("label id must be nonempty")
        if self.dim < 1:
            raise ValueError(f"label dimension must be >= 1, got {self.dim}")
        if self.parity is not None and not self.self_dual:
            raise ValueError(f"label {self.id!r}: parity declared but not self-dual")


class GroupKind(enum.Enum):
    """Kind of classical group, named by its dual-side standard representation."""

    SO_ODD = "SOodd"
    SP = "Sp"
    O_EVEN = "Oeven"


class RGFactor(enum.Enum):
    """Which symmetry of the square detects the relevant self-dual L-factor."""

    SYM2 = "Sym2"
    WEDGE2 = "wedge2"


@dataclass(frozen=True, slots=True)
class GroupType:
    """A classical group given by kind, dual standard dimension, and a sign."""

    kind: GroupKind
    rank_dim: int
    epsilon: int = PLUS

    def __post_init__(self) -> None:
        if not isinstance(self.kind, GroupKind):
            raise TypeError(f"kind must be a GroupKind, got {self.kind!r}")
        if self.rank_dim < 1:
            raise ValueError(f"rank_dim must be >= 1, got {self.rank_dim}")
        check_sign(self.epsilon)

    @property
    def r_factor(self) -> RGFactor:
        """The square-symmetry controlling the normalization factor."""
        return RGFactor.WEDGE2 if self.kind is GroupKind.SO_ODD else RGFactor.SYM2

    @property
    def required_parity(self) -> Parity:
        """Parity every good-parity block's product must attain."""
        if self.kind is GroupKind.SO_ODD:
            return Parity.SYMPLECTIC
        return Parity.ORTHOGONAL


class CentralValue(enum.Enum):
    """Declared status of a central L-value."""

    NONZERO = "nonzero"
    ZERO = "zero"
    UNKNOWN = "unknown"


class TriBool(enum.Enum):
    """Three-valued truth for verdicts that may rest on undeclared facts."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def from_bool(cls, value: bool) -> "TriBool":
        return cls.TRUE if value else cls.FALSE


def kleene_and(values: Iterable[TriBool]) -> TriBool:
    """Three-valued conjunction: any FALSE wins, else any UNKNOWN, else TRUE."""
    result = TriBool.TRUE
    for v in values:
        if v is TriBool.FALSE:
            return TriBool.FALSE
        if v is TriBool.UNKNOWN:
            result = TriBool.UNKNOWN
    return result


def _normalized_pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class LContext:
    """Declared analytic facts about a universe of cuspidal labels.

    Records which labels have the degree-two pole at 1, and which unordered
    pairs have nonvanishing/vanishing central value. Everything undeclared
    is Unknown.
    """

    universe: frozenset[str]
    rg_pole_at_1: frozenset[str]
    nonvanishing_pairs: frozenset[tuple[str, str]]
    vanishing_pairs: frozenset[tuple[str, str]]

    @classmethod
    def build(
        cls,
        universe: Iterable[str],
        rg_pole_at_1: Iterable[str] = (),
        nonvanishing: Iterable[tuple[str, str]] = (),
        vanishing: Iterable[tuple[str, str]] = (),
    ) -> "LContext":
        uni = frozenset(universe)
        pole = frozenset(rg_pole_at_1)
        nonzero = frozenset(_normalized_pair(a, b) for a, b in nonvanishing)
        zero = frozenset(_normalized_pair(a, b) for a, b in vanishing)
        for rho in pole:
            if rho not in uni:
                raise ValueError(f"undeclared label in rg_pole_at_1: {rho!r}")
        for a, b in nonzero | zero:
            if a not in uni or b not in uni:
                raise ValueError(f"undeclared label in central-value pair: ({a!r}, {b!r})")
        clash = nonzero & zero
        if clash:
            raise ValueError(f"pairs declared both nonvanishing and vanishing: {sorted(clash)}")
        return cls(uni, pole, nonzero, zero)

    def query_central(self, rho: str, rho2: str) -> CentralValue:
        """Declared central-value status of the unordered pair (rho, rho2)."""
        for r in (rho, rho2):
            if r not in self.universe:
                raise ValueError(f"undeclared label: {r!r}")
        pair = _normalized_pair(rho, rho2)
        if pair in self.nonvanishing_pairs:
            return CentralValue.NONZERO
        if pair in self.vanishing_pairs:
            return CentralValue.ZERO
        return CentralValue.UNKNOWN

    def has_rg_pole_at_1(self, rho: str) -> bool:
        if rho not in self.universe:
            raise ValueError(f"undeclared label: {rho!r}")
        return rho in self.rg_pole_at_1


@dataclass(frozen=True, slots=True)
class Violation:
    """A named check failure with a human-readable detail message."""

    code: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"
