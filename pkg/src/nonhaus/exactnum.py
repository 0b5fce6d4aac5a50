"""Exact arithmetic: extended rationals, intervals, interval sets, partial affine maps.

Nothing in here touches floating point.  Finite values are
:class:`fractions.Fraction`; the two infinities are the singletons
:data:`NEG_INF` and :data:`POS_INF`, which only take part in ordering and
as interval ends.
"""

from __future__ import annotations

import numbers
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Union


class Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "POS_INF" if self.sign > 0 else "NEG_INF"

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"

    def __hash__(self):
        return hash(("Infinity", self.sign))

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def __ne__(self, other):
        return not self == other

    def _key(self, other) -> int:
        if isinstance(other, Infinity):
            return (self.sign > other.sign) - (self.sign < other.sign)
        if isinstance(other, numbers.Rational):
            return self.sign
        return NotImplemented

    def __lt__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else k < 0

    def __le__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else k <= 0

    def __gt__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else k > 0

    def __ge__(self, other):
        k = self._key(other)
        return k if k is NotImplemented else k >= 0

    def __neg__(self):
        return NEG_INF if self.sign > 0 else POS_INF

    def __reduce__(self):
        return (_infinity, (self.sign,))


def _infinity(sign: int) -> Infinity:
    return POS_INF if sign > 0 else NEG_INF


POS_INF = Infinity(1)
NEG_INF = Infinity(-1)

ExtendedRational = Union[Fraction, Infinity]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def is_finite(x: ExtendedRational) -> bool:
    return not isinstance(x, Infinity)


def to_ext(value) -> ExtendedRational:
    """Coerce ``value`` to an extended rational.

    Accepts ints, Fractions, the infinities and the string forms ``"p/q"``,
    ``"n"``, ``"inf"``, ``"+inf"``, ``"-inf"``.  Floats are refused.
    """
    if isinstance(value, Infinity):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        s = value.strip().lower()
        if s in ("inf", "+inf"):
            return POS_INF
        if s == "-inf":
            return NEG_INF
        m = _RATIONAL_RE.match(s)
        if m is None:
            raise ValueError(f"malformed rational {value!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def to_rational(value) -> Fraction:
    x = to_ext(value)
    if isinstance(x, Infinity):
        raise ValueError(f"expected a finite rational, got {value!r}")
    return x


def format_ext(x: ExtendedRational) -> str:
    if isinstance(x, Infinity):
        return str(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Interval:
    """A connected subset of the extended line with explicit end flags.

    Either ``lo < hi`` or ``lo == hi`` with both ends closed (a singleton).
    Infinite ends are always open.
    """

    lo: ExtendedRational
    hi: ExtendedRational
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        lo, hi = to_ext(self.lo), to_ext(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if (self.lo_closed and not is_finite(lo)) or (self.hi_closed and not is_finite(hi)):
            raise ValueError("an infinite interval end cannot be closed")
        if lo > hi or (lo == hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty interval {self._text(lo, hi)}")

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(lo, hi, True, True)

    @classmethod
    def real_line(cls) -> "Interval":
        return cls(NEG_INF, POS_INF)

    def _text(self, lo, hi) -> str:
        return "%s%s, %s%s" % (
            "[" if self.lo_closed else "(",
            format_ext(lo),
            format_ext(hi),
            "]" if self.hi_closed else ")",
        )

    def __str__(self):
        return self._text(self.lo, self.hi)

    @property
    def is_open(self) -> bool:
        return not (self.lo_closed or self.hi_closed)

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    @property
    def bounded(self) -> bool:
        return is_finite(self.lo) and is_finite(self.hi)

    def contains(self, x: ExtendedRational) -> bool:
        if not is_finite(x):
            return False
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    __contains__ = contains

    def interior(self) -> "Interval | None":
        if self.is_singleton:
            return None
        return Interval(self.lo, self.hi)

    def sample(self) -> Fraction:
        """Some rational point of the interval (of its interior when it has one)."""
        lo, hi = self.lo, self.hi
        if is_finite(lo) and is_finite(hi):
            return (lo + hi) / 2
        if is_finite(lo):
            return lo + 1
        if is_finite(hi):
            return hi - 1
        return Fraction(0)

    def intersect(self, other: "Interval") -> "Interval | None":
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo < hi or (lo == hi and lo_closed and hi_closed):
            return Interval(lo, hi, lo_closed, hi_closed)
        return None

    def sort_key(self):
        return (self.lo, not self.lo_closed, self.hi, self.hi_closed)


def _hi_key(iv: Interval):
    return (iv.hi, iv.hi_closed)


def _canonical_parts(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    ordered = sorted(parts, key=Interval.sort_key)
    out: list[Interval] = []
    for iv in ordered:
        if out:
            cur = out[-1]
            touching = iv.lo < cur.hi or (iv.lo == cur.hi and (cur.hi_closed or iv.lo_closed))
            if touching:
                if _hi_key(iv) > _hi_key(cur):
                    out[-1] = Interval(cur.lo, iv.hi, cur.lo_closed, iv.hi_closed)
                continue
        out.append(iv)
    return tuple(out)


@dataclass(frozen=True)
class IntervalSet:
    """Finite union of intervals in unique sorted, merged form."""

    parts: tuple[Interval, ...] = field(default=())

    def __init__(self, parts: Iterable[Interval] = ()):
        object.__setattr__(self, "parts", _canonical_parts(parts))

    @classmethod
    def of(cls, *parts: Interval) -> "IntervalSet":
        return cls(parts)

    @classmethod
    def real_line(cls) -> "IntervalSet":
        return cls([Interval.real_line()])

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls()

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        if not self.parts:
            return "{}"
        return " u ".join(str(p) for p in self.parts)

    @property
    def is_empty(self) -> bool:
        return not self.parts

    @property
    def is_open(self) -> bool:
        return all(p.is_open for p in self.parts)

    def contains(self, x: ExtendedRational) -> bool:
        return any(p.contains(x) for p in self.parts)

    __contains__ = contains

    def component_of(self, x: ExtendedRational) -> Interval | None:
        for p in self.parts:
            if p.contains(x):
                return p
        return None

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.parts + other.parts)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.parts:
            for b in other.parts:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return IntervalSet(out)

    def complement(self) -> "IntervalSet":
        """Complement in the real line."""
        out = []
        prev, prev_closed = NEG_INF, False
        for p in self.parts:
            lo_closed = not prev_closed and is_finite(prev)
            hi_closed = not p.lo_closed and is_finite(p.lo)
            if prev < p.lo or (prev == p.lo and lo_closed and hi_closed):
                out.append(Interval(prev, p.lo, lo_closed, hi_closed))
            prev, prev_closed = p.hi, p.hi_closed
        lo_closed = not prev_closed and is_finite(prev)
        if prev < POS_INF:
            out.append(Interval(prev, POS_INF, lo_closed, False))
        return IntervalSet(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other.complement())

    def complement_within(self, universe: "IntervalSet") -> "IntervalSet":
        return universe.difference(self)

    def issubset(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty

    def endpoints(self) -> list[Fraction]:
        """Finite endpoints of all parts, in order, without repetition."""
        out: list[Fraction] = []
        for p in self.parts:
            for e in (p.lo, p.hi):
                if is_finite(e) and (not out or out[-1] != e):
                    out.append(e)
        return out


def union(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.union(b)


def intersection(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.intersection(b)


def difference(a: IntervalSet, b: IntervalSet) -> IntervalSet:
    return a.difference(b)


def complement_within(a: IntervalSet, universe: IntervalSet) -> IntervalSet:
    return a.complement_within(universe)


Formula = tuple[Fraction, Fraction]
IDENTITY: Formula = (Fraction(1), Fraction(0))


def apply_formula(f: Formula, x: ExtendedRational) -> ExtendedRational:
    slope, offset = f
    if isinstance(x, Infinity):
        return x if slope > 0 else -x
    return slope * x + offset


def invert_formula(f: Formula) -> Formula:
    slope, offset = f
    return (1 / slope, -offset / slope)


def compose_formula(g: Formula, h: Formula) -> Formula:
    """Formula of ``g o h``."""
    return (g[0] * h[0], g[0] * h[1] + g[1])


def map_interval(f: Formula, iv: Interval) -> Interval:
    a, b = apply_formula(f, iv.lo), apply_formula(f, iv.hi)
    if f[0] > 0:
        return Interval(a, b, iv.lo_closed, iv.hi_closed)
    return Interval(b, a, iv.hi_closed, iv.lo_closed)


def map_set(f: Formula, s: IntervalSet) -> IntervalSet:
    return IntervalSet(map_interval(f, p) for p in s.parts)


@dataclass(frozen=True)
class PartialAffine:
    """``x -> slope*x + offset`` restricted to ``domain``."""

    slope: Fraction
    offset: Fraction
    domain: IntervalSet

    def __post_init__(self):
        slope, offset = to_rational(self.slope), to_rational(self.offset)
        if slope == 0:
            raise ValueError("affine slope must be nonzero")
        object.__setattr__(self, "slope", slope)
        object.__setattr__(self, "offset", offset)

    @classmethod
    def identity(cls, domain: IntervalSet) -> "PartialAffine":
        return cls(Fraction(1), Fraction(0), domain)

    @property
    def formula(self) -> Formula:
        return (self.slope, self.offset)

    @property
    def is_identity(self) -> bool:
        return self.slope == 1 and self.offset == 0

    @property
    def is_empty(self) -> bool:
        return self.domain.is_empty

    def __call__(self, x: ExtendedRational) -> ExtendedRational:
        return apply_formula(self.formula, x)

    def image(self) -> IntervalSet:
        return map_set(self.formula, self.domain)

    def preimage(self, s: IntervalSet) -> IntervalSet:
        """Points of the domain sent into ``s``."""
        return self.domain.intersection(map_set(invert_formula(self.formula), s))

    def restrict(self, s: IntervalSet) -> "PartialAffine":
        return PartialAffine(self.slope, self.offset, self.domain.intersection(s))

    def __str__(self):
        return "x -> %s*x + %s on %s" % (format_ext(self.slope), format_ext(self.offset), self.domain)


def affine_compose(g: PartialAffine, h: PartialAffine) -> PartialAffine:
    """``g o h``: first ``h``, then ``g``.  Empty domain when they do not meet."""
    slope, offset = compose_formula(g.formula, h.formula)
    return PartialAffine(slope, offset, h.preimage(g.domain))


def affine_invert(g: PartialAffine) -> PartialAffine:
    slope, offset = invert_formula(g.formula)
    return PartialAffine(slope, offset, g.image())
