"""Partial set-theoretic solutions r(x, y) = (sigma_x(y), gamma_y(x)) and
checkers for the four axioms (non-degenerate, involutive, braided,
square-free).

The domain D of r is never stored: (x, y) is in D exactly when y is in the
domain of sigma_x and x is in the domain of gamma_y.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .core import Carrier, Finite, PartialBijection
from .errors import MissingWindow
from .families import FAMILIES

DEFAULT_WINDOW = 20


@dataclass(frozen=True)
class PartialSolution:
    """A carrier plus the sigma and gamma families.

    Finite carriers store the families as tuples indexed by generator;
    countable carriers name a closed-form family from ``FAMILIES``.
    """

    carrier: Carrier
    sigmas: Tuple[PartialBijection, ...] = ()
    gammas: Tuple[PartialBijection, ...] = ()
    family: Optional[str] = None

    def __post_init__(self):
        if self.carrier.is_finite:
            if self.family is not None:
                raise ValueError("finite carriers carry explicit maps, not a family")
            n = self.carrier.size
            if len(self.sigmas) != n or len(self.gammas) != n:
                raise ValueError(f"need {n} sigma and gamma maps, got "
                                 f"{len(self.sigmas)} and {len(self.gammas)}")
        elif self.family not in FAMILIES:
            raise ValueError(f"unknown countable family {self.family!r}")

    @classmethod
    def from_maps(cls, n: int, sigma: Sequence[Mapping[int, int]],
                  gamma: Sequence[Mapping[int, int]]) -> "PartialSolution":
        return cls(Finite(n),
                   tuple(PartialBijection.from_mapping(m) for m in sigma),
                   tuple(PartialBijection.from_mapping(m) for m in gamma))

    @property
    def size(self) -> Optional[int]:
        return self.carrier.size

    def sigma(self, x: int) -> Optional[PartialBijection]:
        if self.family is not None:
            return FAMILIES[self.family][0](x) if x >= 0 else None
        return self.sigmas[x] if 0 <= x < len(self.sigmas) else None

    def gamma(self, y: int) -> Optional[PartialBijection]:
        if self.family is not None:
            return FAMILIES[self.family][1](y) if y >= 0 else None
        return self.gammas[y] if 0 <= y < len(self.gammas) else None

    def in_domain(self, x: int, y: int) -> bool:
        s, g = self.sigma(x), self.gamma(y)
        return s is not None and g is not None and y in s.domain and x in g.domain

    def r(self, x: int, y: int) -> Optional[Tuple[int, int]]:
        if not self.in_domain(x, y):
            return None
        return self.sigma(x)(y), self.gamma(y)(x)

    def indices(self, window: Optional[int] = None) -> range:
        if not self.carrier.is_finite:
            if window is None:
                raise MissingWindow("a window is required for countable carriers")
            return range(window)
        return range(self.carrier.size)

    def pairs(self, window: Optional[int] = None):
        """All (x, y) in D with both indices in the carrier (or window)."""
        xs = self.indices(window)
        return [(x, y) for x in xs for y in xs if self.in_domain(x, y)]


def r_apply(S: PartialSolution, x: int, y: int) -> Optional[Tuple[int, int]]:
    return S.r(x, y)


class Axiom(str, Enum):
    NON_DEGENERATE = "NonDegenerate"
    INVOLUTIVE = "Involutive"
    BRAIDED = "Braided"
    SQUARE_FREE = "SquareFree"
    CYCLE_IDENTITY = "CycleIdentity"

    @classmethod
    def parse(cls, text: str) -> "Axiom":
        key = text.replace("-", "").replace("_", "").lower()
        for a in cls:
            if a.value.lower() == key:
                return a
        raise ValueError(f"unknown axiom {text!r}")


SOLUTION_AXIOMS = (Axiom.NON_DEGENERATE, Axiom.INVOLUTIVE, Axiom.BRAIDED, Axiom.SQUARE_FREE)


@dataclass(frozen=True)
class Witness:
    equation: str
    args: Tuple[int, ...]
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        return {"equation": self.equation, "args": list(self.args),
                "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}

    def __str__(self):
        return f"{self.equation} at {self.args}: {self.lhs!r} != {self.rhs!r}"


def _jsonable(v):
    if v is None or isinstance(v, (int, str, bool)):
        return v
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return repr(v)


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    holds: bool
    witness: Optional[Witness] = None
    skipped: int = 0
    checked: int = 0

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the axiom fails")

    def to_json(self) -> dict:
        return {"axiom": self.axiom.value, "holds": self.holds,
                "witness": None if self.witness is None else self.witness.to_json(),
                "skipped": self.skipped}


def _ap(pb: Optional[PartialBijection], k: Optional[int]) -> Optional[int]:
    if pb is None or k is None:
        return None
    return pb(k)


class _Tally:
    def __init__(self):
        self.checked = 0
        self.skipped = 0

    def compare(self, name, args, lhs, rhs) -> Optional[Witness]:
        # one-sided definedness is recorded, never treated as a failure
        if lhs is None and rhs is None:
            return None
        if lhs is None or rhs is None:
            self.skipped += 1
            return None
        self.checked += 1
        if lhs != rhs:
            return Witness(name, args, lhs, rhs)
        return None


def _check_non_degenerate(S, x, xs, tally):
    bound = None if S.carrier.is_finite else (xs.stop if xs else 0)
    for name, pb in (("sigma", S.sigma(x)), ("gamma", S.gamma(x))):
        if pb is None:
            return Witness(f"{name}_x is missing", (x,))
        if S.carrier.is_finite:
            u = S.carrier.universe
            if not pb.domain.issubset(u) or not pb.range.issubset(u):
                return Witness(f"{name}_x maps outside the carrier", (x,),
                               repr(pb.domain), repr(pb.range))
            points = list(pb.domain)
        else:
            points = list(pb.domain.below(bound))
        images = [pb(k) for k in points]
        tally.checked += 1
        if len(set(images)) != len(images):
            seen = {}
            for k, v in zip(points, images):
                if v in seen:
                    return Witness(f"{name}_x is injective", (x, seen[v], k), v, v)
                seen[v] = k
    return None


def _check_involutive(S, x, xs, tally):
    for y in xs:
        s, g = S.sigma(x), S.gamma(y)
        left = g is not None and x in g.domain
        right = s is not None and y in s.domain
        tally.checked += 1
        if left != right:
            return Witness("x in D(gamma_y) iff y in D(sigma_x)", (x, y), left, right)
        if not right:
            continue
        a, b = s(y), g(x)
        back = S.r(a, b)
        if back is None:
            return Witness("r(r(x,y)) is defined", (x, y), (a, b), None)
        if back[0] != x:
            return Witness("sigma_{sigma_x(y)}(gamma_y(x)) = x", (x, y), back[0], x)
        if back[1] != y:
            return Witness("gamma_{gamma_y(x)}(sigma_x(y)) = y", (x, y), back[1], y)
    return None


def _check_braided(S, x, xs, tally):
    sig, gam = S.sigma, S.gamma
    for y in xs:
        sx_y = _ap(sig(x), y) if S.in_domain(x, y) else None
        gy_x = _ap(gam(y), x) if S.in_domain(x, y) else None
        for z in xs:
            args = (x, y, z)
            # sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}, evaluated at z
            lhs = _ap(sig(x), _ap(sig(y), z))
            rhs = None
            if sx_y is not None:
                rhs = _ap(sig(sx_y), _ap(sig(gy_x), z))
            w = tally.compare("sigma_x sigma_y = sigma_{sigma_x(y)} sigma_{gamma_y(x)}",
                              args, lhs, rhs)
            if w:
                return w
            yz = S.in_domain(y, z)
            sy_z = _ap(sig(y), z) if yz else None
            gz_y = _ap(gam(z), y) if yz else None
            # gamma_z gamma_y = gamma_{gamma_z(y)} gamma_{sigma_y(z)}, evaluated at x
            lhs = _ap(gam(z), _ap(gam(y), x))
            rhs = None
            if yz:
                rhs = _ap(gam(gz_y), _ap(gam(sy_z), x))
            w = tally.compare("gamma_z gamma_y = gamma_{gamma_z(y)} gamma_{sigma_y(z)}",
                              args, lhs, rhs)
            if w:
                return w
            lhs = rhs = None
            if sx_y is not None:
                inner = _ap(sig(gy_x), z)
                lhs = _ap(gam(inner), sx_y) if inner is not None else None
            if yz:
                k = _ap(gam(sy_z), x)
                rhs = _ap(sig(k), gz_y) if k is not None else None
            w = tally.compare(
                "gamma_{sigma_{gamma_y(x)}(z)}(sigma_x(y)) = "
                "sigma_{gamma_{sigma_y(z)}(x)}(gamma_z(y))", args, lhs, rhs)
            if w:
                return w
    return None


def _check_square_free(S, x, xs, tally):
    tally.checked += 1
    v = S.r(x, x)
    if v != (x, x):
        return Witness("r(x,x) = (x,x)", (x,), v, (x, x))
    return None


_CHECKS = {
    Axiom.NON_DEGENERATE: _check_non_degenerate,
    Axiom.INVOLUTIVE: _check_involutive,
    Axiom.BRAIDED: _check_braided,
    Axiom.SQUARE_FREE: _check_square_free,
}


def _run_chunk(S, axiom, firsts, xs):
    tally = _Tally()
    check = _CHECKS[axiom]
    for x in firsts:
        w = check(S, x, xs, tally)
        if w is not None:
            return w, tally.checked, tally.skipped
    return None, tally.checked, tally.skipped


def verify(S: PartialSolution, axiom: Axiom, window: Optional[int] = None,
           parallel: bool = False) -> AxiomReport:
    """Check one axiom over the carrier, or over indices < window.

    The first failure in lexicographic order of the quantified indices is
    reported, so the result is the same with or without ``parallel``.
    """
    if not S.carrier.is_finite and window is None:
        raise MissingWindow("verify on a countable carrier needs a window")
    axiom = Axiom(axiom)
    xs = S.indices(window)
    if not parallel or len(xs) < 4:
        w, checked, skipped = _run_chunk(S, axiom, xs, xs)
        return AxiomReport(axiom, w is None, w, skipped, checked)
    with ProcessPoolExecutor() as pool:
        futures = [pool.submit(_run_chunk, S, axiom, range(x, x + 1), xs) for x in xs]
        results = [f.result() for f in futures]
    checked = skipped = 0
    for w, c, s in results:
        checked += c
        skipped += s
        if w is not None:
            return AxiomReport(axiom, False, w, skipped, checked)
    return AxiomReport(axiom, True, None, skipped, checked)


def verify_all(S: PartialSolution, window: Optional[int] = None,
               parallel: bool = False) -> list:
    return [verify(S, a, window, parallel) for a in SOLUTION_AXIOMS]


@lru_cache(maxsize=64)
def satisfies_all(S: PartialSolution, window: Optional[int] = None) -> Optional[AxiomReport]:
    """First failing report among the four axioms, or None if all hold."""
    for report in verify_all(S, window):
        if not report.holds:
            return report
    return None
