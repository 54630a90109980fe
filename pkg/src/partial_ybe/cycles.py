"""Cycle sets derived from solutions, retraction, multipermutation level,
decomposition into invariant subsets, and isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Finite, PartialBijection
from .errors import NonInjectiveError, QuotientNotWellDefined, TooLarge
from .solution import SOLUTION_AXIOMS, Axiom, AxiomReport, PartialSolution, Witness, _Tally, verify


@dataclass(frozen=True)
class CycleSet:
    """x ⋆ y = sigma_x^-1(y), as a partial operation."""

    solution: PartialSolution

    def translation(self, x: int) -> Optional[PartialBijection]:
        s = self.solution.sigma(x)
        return None if s is None else s.inverse()

    def star(self, x: int, y: Optional[int]) -> Optional[int]:
        if x is None or y is None:
            return None
        t = self.translation(x)
        return None if t is None else t(y)

    def indices(self, window=None):
        return self.solution.indices(window)


def derive_cycle_set(S: PartialSolution) -> CycleSet:
    return CycleSet(S)


def _cycle_identity(C: CycleSet, xs) -> AxiomReport:
    tally = _Tally()
    st = C.star
    for x in xs:
        for y in xs:
            xy, yx = st(x, y), st(y, x)
            for z in xs:
                lhs = st(xy, st(x, z))
                rhs = st(yx, st(y, z))
                w = tally.compare("(x*y)*(x*z) = (y*x)*(y*z)", (x, y, z), lhs, rhs)
                if w:
                    return AxiomReport(Axiom.CYCLE_IDENTITY, False, w, tally.skipped, tally.checked)
    return AxiomReport(Axiom.CYCLE_IDENTITY, True, None, tally.skipped, tally.checked)


def _cycle_square_free(C: CycleSet, xs) -> AxiomReport:
    for x in xs:
        v = C.star(x, x)
        if v != x:
            return AxiomReport(Axiom.SQUARE_FREE, False, Witness("x*x = x", (x,), v, x),
                               checked=x + 1)
    return AxiomReport(Axiom.SQUARE_FREE, True, checked=len(xs))


def _cycle_non_degenerate(C: CycleSet, xs) -> AxiomReport:
    seen: Dict[int, int] = {}
    for x in xs:
        v = C.star(x, x)
        if v is None:
            return AxiomReport(Axiom.NON_DEGENERATE, False,
                               Witness("x*x is defined", (x,), None, "defined"))
        if v in seen:
            return AxiomReport(Axiom.NON_DEGENERATE, False,
                               Witness("x -> x*x is injective", (seen[v], x), v, v))
        seen[v] = x
    missing = [y for y in xs if y not in seen]
    if missing and C.solution.carrier.is_finite:
        return AxiomReport(Axiom.NON_DEGENERATE, False,
                           Witness("x -> x*x is surjective", (missing[0],), None, missing[0]))
    return AxiomReport(Axiom.NON_DEGENERATE, True, checked=len(xs))


def verify_cycle_set(C: CycleSet, window: Optional[int] = None) -> List[AxiomReport]:
    """Cycle identity (where both sides are defined), x*x = x, and x -> x*x
    bijective. Countable carriers are checked on indices below the window,
    where only injectivity of x -> x*x can be tested."""
    xs = C.indices(window)
    return [_cycle_identity(C, xs), _cycle_square_free(C, xs), _cycle_non_degenerate(C, xs)]


def _require_finite(S: PartialSolution, what: str):
    if not S.carrier.is_finite:
        raise TooLarge(f"{what} needs a finite carrier")


def relabel(S: PartialSolution, perm: Sequence[int]) -> PartialSolution:
    """The isomorphic copy where generator x is renamed perm[x]."""
    _require_finite(S, "relabel")
    n = S.size
    inv = {p: x for x, p in enumerate(perm)}

    def conj(pb):
        return {perm[k]: perm[v] for k, v in pb.items()}

    return PartialSolution.from_maps(n, [conj(S.sigma(inv[i])) for i in range(n)],
                                     [conj(S.gamma(inv[i])) for i in range(n)])


def restrict(S: PartialSolution, part: Sequence[int]) -> PartialSolution:
    """r restricted to part × part, relabelled 0..len(part)-1 in increasing order."""
    part = sorted(part)
    label = {x: i for i, x in enumerate(part)}
    sig, gam = [], []
    for x in part:
        sig.append({label[y]: label.get(S.sigma(x)(y), -1) for y in part if S.in_domain(x, y)})
        gam.append({label[y]: label.get(S.gamma(x)(y), -1) for y in part if S.in_domain(y, x)})
    for maps in (sig, gam):
        for m in maps:
            if -1 in m.values():
                raise ValueError(f"part {part} is not invariant")
    return PartialSolution.from_maps(len(part), sig, gam)


@dataclass(frozen=True)
class RetractResult:
    quotient: PartialSolution
    class_of: Tuple[int, ...]
    failure: Optional[AxiomReport] = None

    @property
    def verified(self) -> bool:
        return self.failure is None


def retract(S: PartialSolution) -> RetractResult:
    """Quotient by x ~ y iff sigma_x == sigma_y as partial maps.

    The induced r' must not depend on representatives; otherwise
    QuotientNotWellDefined is raised. The quotient is then re-verified against
    every axiom S itself satisfies, and the first one it loses is reported in
    ``failure``.
    """
    _require_finite(S, "retract")
    n = S.size
    classes: Dict[PartialBijection, int] = {}
    class_of = []
    for x in range(n):
        class_of.append(classes.setdefault(S.sigma(x), len(classes)))
    m = len(classes)
    sig: List[Dict[int, Optional[int]]] = [dict() for _ in range(m)]
    gam: List[Dict[int, Optional[int]]] = [dict() for _ in range(m)]
    for x in range(n):
        for y in range(n):
            out = S.r(x, y)
            cx, cy = class_of[x], class_of[y]
            vals = (None, None) if out is None else (class_of[out[0]], class_of[out[1]])
            for table, key, arg, val in ((sig, cx, cy, vals[0]), (gam, cy, cx, vals[1])):
                if arg in table[key] and table[key][arg] != val:
                    raise QuotientNotWellDefined(
                        f"r({x},{y}) induces a class map that differs from another representative")
                table[key][arg] = val
    try:
        Q = PartialSolution.from_maps(
            m, [{k: v for k, v in d.items() if v is not None} for d in sig],
            [{k: v for k, v in d.items() if v is not None} for d in gam])
    except NonInjectiveError as e:
        raise QuotientNotWellDefined(f"induced map is not injective: {e}") from None
    failure = None
    for axiom in SOLUTION_AXIOMS:
        if verify(S, axiom).holds:
            rep = verify(Q, axiom)
            if not rep.holds:
                failure = rep
                break
    return RetractResult(Q, tuple(class_of), failure)


@dataclass(frozen=True)
class LevelResult:
    level: Optional[int]
    reason: str  # "reached", "irretractable" or "max_iter"
    sizes: Tuple[int, ...]


def multipermutation_level(S: PartialSolution, max_iter: int = 32) -> LevelResult:
    _require_finite(S, "multipermutation_level")
    sizes = [S.size]
    cur = S
    for m in range(max_iter + 1):
        if cur.size == 1:
            return LevelResult(m, "reached", tuple(sizes))
        if m == max_iter:
            break
        nxt = retract(cur).quotient
        if nxt.size == cur.size:
            return LevelResult(None, "irretractable", tuple(sizes))
        sizes.append(nxt.size)
        cur = nxt
    return LevelResult(None, "max_iter", tuple(sizes))


def is_invariant(S: PartialSolution, part) -> bool:
    part = set(part)
    for a in part:
        for b in part:
            out = S.r(a, b)
            if out is not None and not (out[0] in part and out[1] in part):
                return False
    return True


def decompose(S: PartialSolution, limit: int = 12) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """First bipartition (Y, Z) into invariant parts whose restrictions are
    non-degenerate and involutive. Parts are ordered by (size, min) and
    candidates are tried in that order."""
    _require_finite(S, "decompose")
    n = S.size
    if n > limit:
        raise TooLarge(f"carrier of size {n} exceeds the decompose limit {limit}")
    everything = set(range(n))
    for k in range(1, n // 2 + 1):
        for Y in combinations(range(n), k):
            Z = tuple(sorted(everything - set(Y)))
            if len(Y) == len(Z) and Y[0] > Z[0]:
                continue
            if not (is_invariant(S, Y) and is_invariant(S, Z)):
                continue
            if all(verify(restrict(S, P), a).holds
                   for P in (Y, Z) for a in (Axiom.NON_DEGENERATE, Axiom.INVOLUTIVE)):
                return Y, Z
    return None


def is_isomorphism(S1: PartialSolution, S2: PartialSolution, alpha: Sequence[int]) -> bool:
    n = S1.size
    for x in range(n):
        for y in range(n):
            out1 = S1.r(x, y)
            out2 = S2.r(alpha[x], alpha[y])
            if (out1 is None) != (out2 is None):
                return False
            if out1 is not None and out2 != (alpha[out1[0]], alpha[out1[1]]):
                return False
    return True


def are_isomorphic(S1: PartialSolution, S2: PartialSolution,
                   limit: int = 8) -> Optional[Tuple[int, ...]]:
    """First bijection alpha (lexicographic) with (alpha×alpha)∘r1 = r2∘(alpha×alpha)
    and (x, y) in D1 iff (alpha x, alpha y) in D2."""
    _require_finite(S1, "are_isomorphic")
    _require_finite(S2, "are_isomorphic")
    if S1.size != S2.size:
        return None
    if S1.size > limit:
        raise TooLarge(f"carrier of size {S1.size} exceeds the isomorphism limit {limit}")
    for alpha in permutations(range(S1.size)):
        if is_isomorphism(S1, S2, alpha):
            return alpha
    return None
