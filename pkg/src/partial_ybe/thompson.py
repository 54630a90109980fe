"""Thompson's group F as the structure group of the countable partial
solution sigma_n / gamma_n, its normal form, and window checks.

F = Gp< x_0, x_1, ... | x_n x_k = x_k x_{n+1}, k < n >, so conjugation by a
lower generator shifts indices up: x_k^-1 x_n x_k = x_{n+1}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .catalog import thompson as thompson_solution
from .core import PartialBijection
from .errors import WordSyntaxError
from .families import thompson_sigma, thompson_sigma_inverse_closed_form
from .solution import PartialSolution

FWord = Tuple[Tuple[int, int], ...]


def make_fword(pairs) -> FWord:
    """Merge adjacent equal indices and drop zero exponents."""
    out: List[List[int]] = []
    for idx, e in pairs:
        if idx < 0:
            raise WordSyntaxError(f"negative generator index {idx}")
        if out and out[-1][0] == idx:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        elif e:
            out.append([idx, e])
    return tuple((i, e) for i, e in out)


def parse_fword(text: str) -> FWord:
    """Parse "0 1 0^-1"."""
    pairs = []
    for tok in text.replace(",", " ").split():
        base, _, exp = tok.partition("^")
        try:
            idx = int(base)
            e = int(exp) if exp else 1
        except ValueError:
            raise WordSyntaxError(f"bad F token {tok!r}") from None
        if idx < 0 or e == 0:
            raise WordSyntaxError(f"bad F token {tok!r}")
        pairs.append((idx, e))
    return make_fword(pairs)


def format_fword(w: FWord) -> str:
    return " ".join(str(i) if e == 1 else f"{i}^{e}" for i, e in w)


def letters(w: FWord) -> List[Tuple[int, int]]:
    """Expand to single letters (index, +1 or -1)."""
    out = []
    for i, e in w:
        out.extend([(i, 1 if e > 0 else -1)] * abs(e))
    return out


@dataclass(frozen=True)
class FNormalForm:
    """x_0^a_0 ... x_n^a_n x_n^-b_n ... x_0^-b_0."""

    pos: Tuple[int, ...]
    neg: Tuple[int, ...]

    def word(self) -> FWord:
        pairs = [(i, a) for i, a in enumerate(self.pos) if a]
        pairs += [(i, -b) for i, b in reversed(list(enumerate(self.neg))) if b]
        return make_fword(pairs)

    def is_identity(self) -> bool:
        return not self.pos and not self.neg

    def __str__(self):
        return format_fword(self.word())


def _to_positive_negative(seq: List[Tuple[int, int]]) -> Tuple[List[int], List[int]]:
    """Rewrite to P N^-1 by moving inverse letters right."""
    seq = list(seq)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(seq) - 1:
            (a, ea), (b, eb) = seq[i], seq[i + 1]
            if ea < 0 < eb:
                if a == b:
                    del seq[i:i + 2]
                    i = max(i - 1, 0)
                elif a < b:
                    # x_k^-1 x_n = x_{n+1} x_k^-1
                    seq[i:i + 2] = [(b + 1, 1), (a, -1)]
                    i = max(i - 1, 0)
                else:
                    # x_n^-1 x_k = x_k x_{n+1}^-1
                    seq[i:i + 2] = [(b, 1), (a + 1, -1)]
                    i = max(i - 1, 0)
                changed = True
            else:
                i += 1
    pos = [a for a, e in seq if e > 0]
    neg = [a for a, e in reversed(seq) if e < 0]  # N, where the tail is N^-1
    return pos, neg


def _sort_positive(word: List[int]) -> List[int]:
    """Nondecreasing form of a positive word via x_n x_k -> x_k x_{n+1}."""
    w = list(word)
    i = 0
    while i < len(w) - 1:
        n, k = w[i], w[i + 1]
        if k < n:
            w[i], w[i + 1] = k, n + 1
            i = max(i - 1, 0)
        else:
            i += 1
    return w


def _exponents(sorted_word: List[int], size: int) -> List[int]:
    out = [0] * size
    for i in sorted_word:
        out[i] += 1
    return out


def _reduce(a: List[int], b: List[int]) -> Tuple[List[int], List[int]]:
    while True:
        n = len(a)
        for i in range(n):
            nxt_a = a[i + 1] if i + 1 < n else 0
            nxt_b = b[i + 1] if i + 1 < n else 0
            if a[i] > 0 and b[i] > 0 and nxt_a == 0 and nxt_b == 0:
                a[i] -= 1
                b[i] -= 1
                # x_i y x_i^-1 lowers every index above i+1 by one
                a = a[:i + 1] + a[i + 2:] + [0]
                b = b[:i + 1] + b[i + 2:] + [0]
                break
        else:
            return a, b


def f_normal_form(w) -> FNormalForm:
    if isinstance(w, str):
        w = parse_fword(w)
    pos, neg = _to_positive_negative(letters(make_fword(w)))
    pos, neg = _sort_positive(pos), _sort_positive(neg)
    size = max(pos + neg, default=-1) + 1
    a, b = _reduce(_exponents(pos, size), _exponents(neg, size))
    while a and a[-1] == 0 and b[-1] == 0:
        a.pop()
        b.pop()
    return FNormalForm(tuple(a), tuple(b))


def is_normal(nf: FNormalForm) -> bool:
    a, b = nf.pos, nf.neg
    if len(a) != len(b):
        return False
    if not a:
        return True
    if (a[-1] != 0) == (b[-1] != 0):
        return False
    for i in range(len(a) - 1):
        if a[i] and b[i] and not (a[i + 1] or b[i + 1]):
            return False
    return True


def f_words_equal(w1, w2) -> bool:
    return f_normal_form(w1) == f_normal_form(w2)


@dataclass(frozen=True)
class WindowReport:
    window: int
    relations: Tuple[Tuple[int, int], ...]
    expected_relations: Tuple[Tuple[int, int], ...]
    undefined_pairs: Tuple[Tuple[int, int], ...]
    irretractable: bool
    invariant_subsets: bool
    presentation_match: bool
    sigma_inverse_closed_form: bool

    @property
    def relation_count(self) -> int:
        return len(self.relations)

    @property
    def holds(self) -> bool:
        return (self.relations == self.expected_relations and self.irretractable
                and self.invariant_subsets and self.presentation_match
                and self.sigma_inverse_closed_form
                and self.undefined_pairs == tuple((n, n + 1) for n in range(self.window - 1)))

    def to_json(self) -> dict:
        return {"window": self.window, "relation_count": self.relation_count,
                "relations": [f"x{n} x{k} = x{k} x{n + 1}" for n, k in self.relations],
                "undefined_pairs": [list(p) for p in self.undefined_pairs],
                "irretractable": self.irretractable,
                "invariant_subsets": self.invariant_subsets,
                "presentation_match": self.presentation_match,
                "sigma_inverse_closed_form": self.sigma_inverse_closed_form,
                "holds": self.holds}


def _relation_key(x, y, a, b) -> Optional[Tuple[int, int]]:
    """(n, k) if {xy, ab} is the relation x_n x_k = x_k x_{n+1}, k < n."""
    for (p, q), (s, t) in (((x, y), (a, b)), ((a, b), (x, y))):
        if q < p and s == q and t == p + 1:
            return p, q
    return None


def window_checks(N: int, S: Optional[PartialSolution] = None) -> WindowReport:
    """Relations induced by r on indices < N, deduplicated, as (n, k) pairs."""
    if N < 3:
        raise ValueError("window must be at least 3")
    S = S or thompson_solution()
    rels = set()
    undefined = []
    match = True
    for x in range(N):
        for y in range(N):
            out = S.r(x, y)
            if out is None:
                undefined.append((x, y))
                continue
            if out == (x, y):
                continue
            key = _relation_key(x, y, *out)
            if key is None or not f_words_equal(((x, 1), (y, 1)), ((out[0], 1), (out[1], 1))):
                match = False
                continue
            rels.add(key)
    expected = tuple((n, k) for n in range(N) for k in range(n))
    sigmas = [S.sigma(n) for n in range(N)]
    irretractable = len(set(sigmas)) == N
    # {x_0} and Y_1 = {x_1, x_2, ...}, with pairs drawn from the window
    invariant = (_window_invariant(S, range(0, 1), lambda k: k == 0)
                 and _window_invariant(S, range(1, N), lambda k: k >= 1))
    closed = all(S.sigma(n).inverse()(k) == thompson_sigma_inverse_closed_form(n, k)
                 for n in range(N) for k in range(N))
    return WindowReport(N, tuple(sorted(rels, key=lambda p: (p[0], p[1]))), expected,
                        tuple(undefined), irretractable, invariant, match, closed)


def _window_invariant(S, part, member) -> bool:
    for a in part:
        for b in part:
            out = S.r(a, b)
            if out is not None and not (member(out[0]) and member(out[1])):
                return False
    return True


@dataclass
class ComparisonReport:
    """Agreement between psi-equality in IM and equality in F on sampled pairs."""

    pairs: int = 0
    both_equal: int = 0
    both_distinct: int = 0
    monoid_only: List[Tuple[str, str]] = field(default_factory=list)
    group_only: List[Tuple[str, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "both_equal": self.both_equal,
                "both_distinct": self.both_distinct,
                "psi_equal_group_distinct": [list(p) for p in self.monoid_only],
                "group_equal_psi_distinct": len(self.group_only)}


def compare_monoid_group(N: int = 6, length: int = 4, samples: int = 500,
                         seed: int = 0) -> ComparisonReport:
    """Sample pairs of positive words over indices < N, bias towards related
    pairs (one side rewritten by defining relations), and compare."""
    from .monoid import Letter, format_word, psi

    S = thompson_solution()
    rng = random.Random(seed)
    report = ComparisonReport()
    for _ in range(samples):
        w1 = [rng.randrange(N) for _ in range(rng.randint(1, length))]
        w2 = list(w1) if rng.random() < 0.5 else [rng.randrange(N) for _ in range(len(w1))]
        for _ in range(rng.randint(0, 3)):
            i = rng.randrange(len(w2) - 1) if len(w2) > 1 else 0
            if len(w2) > 1 and S.r(w2[i], w2[i + 1]) is not None:
                w2[i], w2[i + 1] = S.r(w2[i], w2[i + 1])
        m1, m2 = tuple(Letter(i) for i in w1), tuple(Letter(i) for i in w2)
        im = psi(S, m1) == psi(S, m2)
        gp = f_words_equal(tuple((i, 1) for i in w1), tuple((i, 1) for i in w2))
        report.pairs += 1
        if im and gp:
            report.both_equal += 1
        elif not im and not gp:
            report.both_distinct += 1
        elif im:
            report.monoid_only.append((format_word(m1), format_word(m2)))
        else:
            report.group_only.append((format_word(m1), format_word(m2)))
    return report
