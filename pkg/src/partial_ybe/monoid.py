"""Words over X and X*, the embedding psi(w) = (pi(w), sigma_w), and the
word problem for the structure inverse monoid.

pi is built letter by letter with the cocycle rule
``pi(gh) = pi(g) + sigma_g • pi(h)`` from the per-letter values
``pi(x) = delta_x`` and ``pi(x*) = -delta_x ∘ sigma_x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .core import EmbeddedElement, IndexSet, PartialBijection, PartialIntFun, act
from .errors import MalformedTrace, NotSquareFree, WordSyntaxError, XNotInRange
from .solution import DEFAULT_WINDOW, PartialSolution, satisfies_all


class Letter(NamedTuple):
    index: int
    star: bool = False

    def __str__(self):
        return f"{self.index}'" if self.star else str(self.index)

    def inverse(self) -> "Letter":
        return Letter(self.index, not self.star)


Word = Tuple[Letter, ...]


def parse_word(text: str) -> Word:
    """Parse "0 2 1'" into letters; the empty string is the unit."""
    letters = []
    for tok in text.replace(",", " ").split():
        star = tok.endswith("'") or tok.endswith("*")
        body = tok[:-1] if star else tok
        if not body.isdigit():
            raise WordSyntaxError(f"bad letter {tok!r}")
        letters.append(Letter(int(body), star))
    return tuple(letters)


def as_word(w) -> Word:
    if isinstance(w, str):
        return parse_word(w)
    return tuple(Letter(*l) if not isinstance(l, Letter) else l for l in w)


def format_word(w: Sequence[Letter]) -> str:
    return " ".join(str(l) for l in w)


def inverse_word(w: Sequence[Letter]) -> Word:
    return tuple(l.inverse() for l in reversed(w))


def _check_letters(S: PartialSolution, w: Word):
    for l in w:
        if S.sigma(l.index) is None:
            raise WordSyntaxError(f"letter {l} is not a generator of the carrier")


def _letter_sigma(S, l: Letter) -> PartialBijection:
    s = S.sigma(l.index)
    return s.inverse() if l.star else s


def sigma_of_word(S: PartialSolution, w) -> PartialBijection:
    """x -> sigma_x, x* -> sigma_x^-1, composed left to right (right factor applied first)."""
    w = as_word(w)
    _check_letters(S, w)
    out = PartialBijection.identity(S.carrier.universe)
    for l in w:
        out = out @ _letter_sigma(S, l)
    return out


def delta(S: PartialSolution, x: int) -> PartialIntFun:
    s = S.sigma(x)
    if s is None:
        raise WordSyntaxError(f"{x} is not a generator of the carrier")
    rng = s.range
    if x not in rng:
        raise XNotInRange(f"{x} is not in the range of sigma_{x}")
    return PartialIntFun(rng, {x: 1})


def letter_increment(S: PartialSolution, l: Letter) -> PartialIntFun:
    d = delta(S, l.index)
    if l.star:
        return -d.precompose(S.sigma(l.index))
    return d


@dataclass(frozen=True)
class PiStep:
    letter: Letter
    increment: PartialIntFun
    prefix: PartialBijection


@dataclass(frozen=True)
class PiTrace:
    steps: Tuple[PiStep, ...]
    universe: IndexSet

    def total(self) -> PartialIntFun:
        acc = PartialIntFun.zero(self.universe)
        for st in self.steps:
            acc = acc + act(st.prefix, st.increment)
        return acc


def pi_trace(S: PartialSolution, w) -> PiTrace:
    w = as_word(w)
    _check_letters(S, w)
    prefix = PartialBijection.identity(S.carrier.universe)
    steps = []
    for l in w:
        steps.append(PiStep(l, letter_increment(S, l), prefix))
        prefix = prefix @ _letter_sigma(S, l)
    return PiTrace(tuple(steps), S.carrier.universe)


def pi(S: PartialSolution, w) -> PartialIntFun:
    return pi_trace(S, w).total()


def psi(S: PartialSolution, w) -> EmbeddedElement:
    return EmbeddedElement(pi(S, w), sigma_of_word(S, w))


def _require_solution(S: PartialSolution, window: Optional[int]):
    if not S.carrier.is_finite and window is None:
        window = DEFAULT_WINDOW
    failure = satisfies_all(S, window if not S.carrier.is_finite else None)
    if failure is not None:
        raise NotSquareFree(
            f"word equality is only decided for square-free involutive non-degenerate "
            f"solutions; {failure.axiom.value} fails: {failure.witness}")


def words_equal(S: PartialSolution, w1, w2, window: Optional[int] = None) -> bool:
    """True iff psi(w1) == psi(w2).

    A False answer always separates the two elements of the structure inverse
    monoid, since psi is a well-defined homomorphism. A True answer is only as
    strong as the injectivity of psi, which fails in general: in squarefree3,
    psi(x0 x1) is an idempotent while x0 x1 is not (a degree count shows
    (x0 x1)^2 != x0 x1). Callers needing a certificate of equality should use
    the reversing engine or an explicit chain of relations.
    """
    _require_solution(S, window)
    return psi(S, w1) == psi(S, w2)


def reconstruct(S: PartialSolution, trace: PiTrace) -> Word:
    """Recover the word from the per-letter data of a trace.

    Each increment must be delta_x (giving x) or -delta_x ∘ sigma_x (giving
    x*), and each prefix must be the sigma of the letters decoded so far.
    """
    prefix = PartialBijection.identity(S.carrier.universe)
    out = []
    for i, st in enumerate(trace.steps):
        supp = st.increment.support
        if len(supp) != 1 or supp[0][1] not in (1, -1):
            raise MalformedTrace(f"step {i}: increment {st.increment!r} is not a generator value")
        x, sign = supp[0]
        letter = Letter(x, sign == -1)
        try:
            expected = letter_increment(S, letter)
        except (XNotInRange, WordSyntaxError) as e:
            raise MalformedTrace(f"step {i}: {e}") from None
        if expected != st.increment:
            raise MalformedTrace(f"step {i}: increment does not match {letter}")
        if st.letter != letter:
            raise MalformedTrace(f"step {i}: recorded letter {st.letter} decodes as {letter}")
        if st.prefix != prefix:
            raise MalformedTrace(f"step {i}: prefix sigma does not match the decoded word")
        out.append(letter)
        prefix = prefix @ _letter_sigma(S, letter)
    return tuple(out)


def is_idempotent(S: PartialSolution, w) -> bool:
    e = psi(S, w)
    return e.fun.is_zero() and e.bij.is_partial_identity()


def words(alphabet: Iterable[int], max_len: int, stars: bool = True):
    """All words over the given indices up to max_len, shortest first."""
    letters = [Letter(i, s) for i in alphabet for s in ((False, True) if stars else (False,))]
    layer = [()]
    yield ()
    for _ in range(max_len):
        layer = [w + (l,) for w in layer for l in letters]
        yield from layer
