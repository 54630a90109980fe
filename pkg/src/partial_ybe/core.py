"""Index sets, partial bijections (the symmetric inverse monoid I_X), partial
integer functions with finite support (the commutative inverse monoid A) and
the restricted product A ⋈ I_X.

Every value here is immutable and hashable.  Intervals are inclusive and an
upper bound of ``None`` means "unbounded", so cofinite subsets of the
naturals are represented exactly.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Tuple

from .errors import MembershipError, NonInjectiveError

Interval = Tuple[int, Optional[int]]
Segment = Tuple[int, Optional[int], int]


def _hi(h):
    return float("inf") if h is None else h


def _min_hi(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _add(h, d):
    return None if h is None else h + d


def _check_index(k, what="index"):
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"{what} must be an int, got {k!r}")
    if k < 0:
        raise ValueError(f"{what} must be a natural number, got {k}")


def _normalize_intervals(intervals) -> tuple:
    items = []
    for iv in intervals:
        lo, hi = iv
        _check_index(lo, "interval bound")
        if hi is not None:
            _check_index(hi, "interval bound")
            if hi < lo:
                continue
        items.append((lo, hi))
    items.sort(key=lambda iv: iv[0])
    out = []
    for lo, hi in items:
        if out:
            plo, phi = out[-1]
            if phi is None:
                continue
            if lo <= phi + 1:
                out[-1] = (plo, None if hi is None else max(phi, hi))
                continue
        out.append((lo, hi))
    return tuple(out)


@dataclass(frozen=True)
class IndexSet:
    """A finite union of disjoint, non-adjacent intervals of naturals."""

    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "intervals", _normalize_intervals(self.intervals))

    @classmethod
    def of(cls, points: Iterable[int]) -> "IndexSet":
        return cls(tuple((p, p) for p in points))

    @classmethod
    def interval(cls, lo: int, hi: Optional[int]) -> "IndexSet":
        return cls(((lo, hi),))

    @classmethod
    def naturals(cls) -> "IndexSet":
        return cls(((0, None),))

    @classmethod
    def empty(cls) -> "IndexSet":
        return cls(())

    def __contains__(self, k) -> bool:
        if not isinstance(k, int) or k < 0:
            return False
        i = bisect_right(self.intervals, k, key=lambda iv: iv[0]) - 1
        if i < 0:
            return False
        return k <= _hi(self.intervals[i][1])

    def __bool__(self):
        return bool(self.intervals)

    def is_finite(self) -> bool:
        return not self.intervals or self.intervals[-1][1] is not None

    def __len__(self):
        if not self.is_finite():
            raise ValueError("infinite IndexSet has no length")
        return sum(hi - lo + 1 for lo, hi in self.intervals)

    def __iter__(self) -> Iterator[int]:
        if not self.is_finite():
            raise ValueError("cannot iterate an infinite IndexSet; use below()")
        for lo, hi in self.intervals:
            yield from range(lo, hi + 1)

    def below(self, bound: int) -> Iterator[int]:
        """Members strictly smaller than ``bound``, ascending."""
        for lo, hi in self.intervals:
            if lo >= bound:
                return
            yield from range(lo, min(_hi(hi) + 1, bound))

    def __and__(self, other: "IndexSet") -> "IndexSet":
        a, b = self.intervals, other.intervals
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = _min_hi(a[i][1], b[j][1])
            if hi is None or lo <= hi:
                out.append((lo, hi))
            if _hi(a[i][1]) < _hi(b[j][1]):
                i += 1
            else:
                j += 1
        return IndexSet(tuple(out))

    def __or__(self, other: "IndexSet") -> "IndexSet":
        return IndexSet(self.intervals + other.intervals)

    def complement(self, universe: Optional["IndexSet"] = None) -> "IndexSet":
        gaps = []
        nxt = 0
        for lo, hi in self.intervals:
            if lo > nxt:
                gaps.append((nxt, lo - 1))
            if hi is None:
                nxt = None
                break
            nxt = hi + 1
        if nxt is not None:
            gaps.append((nxt, None))
        out = IndexSet(tuple(gaps))
        return out if universe is None else out & universe

    def __sub__(self, other: "IndexSet") -> "IndexSet":
        return self & other.complement()

    def issubset(self, other: "IndexSet") -> bool:
        return (self - other) == IndexSet.empty()

    def __repr__(self):
        parts = []
        for lo, hi in self.intervals:
            if hi is None:
                parts.append(f"{lo}..")
            elif lo == hi:
                parts.append(str(lo))
            else:
                parts.append(f"{lo}..{hi}")
        return "{" + ", ".join(parts) + "}"


@dataclass(frozen=True)
class Carrier:
    """Finite(n) has indices 0..n-1; ``size=None`` is the countable carrier."""

    size: Optional[int] = None

    def __post_init__(self):
        if self.size is not None:
            _check_index(self.size, "carrier size")

    @property
    def is_finite(self) -> bool:
        return self.size is not None

    @property
    def universe(self) -> IndexSet:
        if self.size is None:
            return IndexSet.naturals()
        return IndexSet.interval(0, self.size - 1)

    def indices(self, window: Optional[int] = None) -> range:
        if self.size is None:
            if window is None:
                raise ValueError("countable carrier needs a window")
            return range(window)
        return range(self.size if window is None else min(window, self.size))

    def __repr__(self):
        return "Countable" if self.size is None else f"Finite({self.size})"


def Finite(n: int) -> Carrier:
    return Carrier(n)


COUNTABLE = Carrier(None)


def _normalize_segments(segments) -> tuple:
    segs = []
    for lo, hi, shift in segments:
        _check_index(lo, "segment bound")
        if hi is not None:
            _check_index(hi, "segment bound")
            if hi < lo:
                continue
        if lo + shift < 0:
            raise ValueError(f"segment ({lo}, {hi}) shifted by {shift} leaves the naturals")
        segs.append((lo, hi, shift))
    segs.sort(key=lambda s: s[0])
    for (alo, ahi, _), (blo, _, _) in zip(segs, segs[1:]):
        if blo <= _hi(ahi):
            raise ValueError(f"pieces overlap at {blo}")
    images = sorted(((lo + s, _add(hi, s)) for lo, hi, s in segs), key=lambda iv: iv[0])
    for (alo, ahi), (blo, bhi) in zip(images, images[1:]):
        if blo <= _hi(ahi):
            raise NonInjectiveError(f"two points map to {blo}")
    out = []
    for lo, hi, s in segs:
        if out:
            plo, phi, ps = out[-1]
            if ps == s and phi is not None and phi + 1 == lo:
                out[-1] = (plo, hi, s)
                continue
        out.append((lo, hi, s))
    return tuple(out)


@dataclass(frozen=True)
class PartialBijection:
    """An injective partial map of the naturals, stored as shift segments.

    A segment ``(lo, hi, d)`` sends every ``k`` in ``[lo, hi]`` to ``k + d``.
    Finite explicit maps are just many one-point segments; the canonical
    form merges adjacent segments with equal shift, so ``==`` is equality of
    partial maps.
    """

    segments: Tuple[Segment, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "segments", _normalize_segments(self.segments))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "PartialBijection":
        return cls(tuple((k, k, v - k) for k, v in mapping.items()))

    @classmethod
    def from_pieces(cls, pieces: Iterable[Tuple[Interval, int]],
                    overrides: Mapping[int, int] = None) -> "PartialBijection":
        """Build from ``((lo, hi), shift)`` pieces; overrides win pointwise."""
        overrides = dict(overrides or {})
        keys = IndexSet.of(overrides)
        segs = []
        for (lo, hi), shift in pieces:
            for a, b in (IndexSet.interval(lo, hi) - keys).intervals:
                segs.append((a, b, shift))
        segs.extend((k, k, v - k) for k, v in overrides.items())
        return cls(tuple(segs))

    @classmethod
    def identity(cls, domain: IndexSet) -> "PartialBijection":
        return cls(tuple((lo, hi, 0) for lo, hi in domain.intervals))

    @classmethod
    def empty(cls) -> "PartialBijection":
        return cls(())

    def _cached(self, name, build):
        # values are immutable, so derived data is computed once per instance
        try:
            return self.__dict__[name]
        except KeyError:
            value = build()
            object.__setattr__(self, name, value)
            return value

    @property
    def domain(self) -> IndexSet:
        return self._cached("_domain", lambda: IndexSet(
            tuple((lo, hi) for lo, hi, _ in self.segments)))

    @property
    def range(self) -> IndexSet:
        return self._cached("_range", lambda: IndexSet(
            tuple((lo + s, _add(hi, s)) for lo, hi, s in self.segments)))

    def __call__(self, k) -> Optional[int]:
        if not isinstance(k, int) or k < 0:
            return None
        i = bisect_right(self.segments, k, key=lambda s: s[0]) - 1
        if i < 0:
            return None
        lo, hi, s = self.segments[i]
        return k + s if k <= _hi(hi) else None

    def inverse(self) -> "PartialBijection":
        return self._cached("_inverse", lambda: PartialBijection(
            tuple((lo + s, _add(hi, s), -s) for lo, hi, s in self.segments)))

    def __matmul__(self, inner: "PartialBijection") -> "PartialBijection":
        """``self @ inner`` applies ``inner`` first."""
        out = []
        for lo, hi, s in inner.segments:
            ilo, ihi = lo + s, _add(hi, s)
            for olo, ohi, t in self.segments:
                a = max(ilo, olo)
                b = _min_hi(ihi, ohi)
                if b is None or a <= b:
                    out.append((a - s, _add(b, -s), s + t))
        return PartialBijection(tuple(out))

    def restrict(self, subset: IndexSet) -> "PartialBijection":
        return self @ PartialBijection.identity(subset)

    def image(self, subset: IndexSet) -> IndexSet:
        return self.restrict(subset).range

    def preimage(self, subset: IndexSet) -> IndexSet:
        return (PartialBijection.identity(subset) @ self).domain

    def is_partial_identity(self) -> bool:
        return all(s == 0 for _, _, s in self.segments)

    def is_finite(self) -> bool:
        return self.domain.is_finite()

    def items(self) -> Iterator[Tuple[int, int]]:
        for k in self.domain:
            yield k, k + self._shift_at(k)

    def _shift_at(self, k):
        i = bisect_right(self.segments, k, key=lambda s: s[0]) - 1
        return self.segments[i][2]

    def __repr__(self):
        if self.is_finite() and len(self.domain) <= 12:
            return "PB{" + ", ".join(f"{a}->{b}" for a, b in self.items()) + "}"
        parts = []
        for lo, hi, s in self.segments:
            rng = f"{lo}.." if hi is None else (str(lo) if lo == hi else f"{lo}..{hi}")
            parts.append(f"[{rng}]{s:+d}")
        return "PB<" + " ".join(parts) + ">"


def compose(outer: PartialBijection, inner: PartialBijection) -> PartialBijection:
    return outer @ inner


def invert(tau: PartialBijection) -> PartialBijection:
    return tau.inverse()


def _normalize_support(domain, support) -> tuple:
    if isinstance(support, Mapping):
        items = support.items()
    else:
        items = support
    out = {}
    for k, v in items:
        _check_index(k, "support key")
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"value at {k} must be an int, got {v!r}")
        if k in out:
            raise ValueError(f"duplicate support key {k}")
        if k not in domain:
            raise ValueError(f"support key {k} lies outside the domain {domain!r}")
        out[k] = v
    return tuple(sorted((k, v) for k, v in out.items() if v != 0))


@dataclass(frozen=True)
class PartialIntFun:
    """A partial map X -> Z, zero on its domain except on a finite support."""

    domain: IndexSet
    support: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "support", _normalize_support(self.domain, self.support))

    @classmethod
    def zero(cls, domain: IndexSet) -> "PartialIntFun":
        return cls(domain, ())

    @property
    def values(self) -> dict:
        return dict(self.support)

    def __call__(self, k) -> Optional[int]:
        if k not in self.domain:
            return None
        return self.values.get(k, 0)

    def is_zero(self) -> bool:
        return not self.support

    def __add__(self, other: "PartialIntFun") -> "PartialIntFun":
        dom = self.domain & other.domain
        total = {}
        for k, v in self.support + other.support:
            if k in dom:
                total[k] = total.get(k, 0) + v
        return PartialIntFun(dom, total)

    def __neg__(self) -> "PartialIntFun":
        return PartialIntFun(self.domain, tuple((k, -v) for k, v in self.support))

    def precompose(self, tau: PartialBijection) -> "PartialIntFun":
        """``self ∘ tau`` on the largest domain where it makes sense."""
        dom = tau.preimage(self.domain)
        inv = tau.inverse()
        return PartialIntFun(dom, {inv(k): v for k, v in self.support if inv(k) is not None})

    def __repr__(self):
        vals = ", ".join(f"{k}:{v}" for k, v in self.support)
        return f"PIF(dom={self.domain!r}, {{{vals}}})"


def act(tau: PartialBijection, f: PartialIntFun) -> PartialIntFun:
    """tau • f = f ∘ tau⁻¹."""
    return f.precompose(tau.inverse())


def add(f: PartialIntFun, g: PartialIntFun) -> PartialIntFun:
    return f + g


@dataclass(frozen=True)
class EmbeddedElement:
    """A pair (f, tau) of A ⋈ I_X; requires domain(f) == range(tau)."""

    fun: PartialIntFun
    bij: PartialBijection

    def __post_init__(self):
        if self.fun.domain != self.bij.range:
            raise MembershipError(
                f"domain of f {self.fun.domain!r} != range of tau {self.bij.range!r}")

    @classmethod
    def unit(cls, carrier: Carrier) -> "EmbeddedElement":
        u = carrier.universe
        return cls(PartialIntFun.zero(u), PartialBijection.identity(u))

    def __mul__(self, other: "EmbeddedElement") -> "EmbeddedElement":
        return EmbeddedElement(self.fun + act(self.bij, other.fun), self.bij @ other.bij)

    def star(self) -> "EmbeddedElement":
        return EmbeddedElement(-self.fun.precompose(self.bij), self.bij.inverse())


def restricted_mul(a: EmbeddedElement, b: EmbeddedElement) -> EmbeddedElement:
    return a * b


def restricted_inv(a: EmbeddedElement) -> EmbeddedElement:
    return a.star()
