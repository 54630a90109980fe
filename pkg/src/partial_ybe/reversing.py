"""Right reversing over the defining relations x·y = sigma_x(y)·gamma_y(x),
and the partial-brace sum g ⊕ h = g·u = h·v it produces.

The pair (w1, w2) is encoded as the path w1^-1 w2: horizontal tokens (the
letters of w1, traversed backwards) followed by vertical tokens (w2). A
horizontal token immediately followed by a vertical one is a corner; closing
it replaces the pair by the right edge (vertical) and the bottom edge
(horizontal). When no corner remains the path reads U V^-1 and w1·U = w2·V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from .monoid import Letter, Word, as_word, format_word, words_equal
from .solution import PartialSolution


class RelationTable:
    """Defining relations of IM(X, r) keyed by their first letters.

    ``forward(a, b)`` is the unique (u, v) with a·u = b·v, a != b.
    """

    def __init__(self, S: PartialSolution):
        self.S = S
        self._memo = {}

    def _lookup(self, kind, a, b, compute):
        key = (kind, a, b)
        if key not in self._memo:
            self._memo[key] = compute(a, b)
        return self._memo[key]

    def forward(self, a: int, b: int) -> Optional[Tuple[int, int]]:
        return self._lookup("f", a, b, self._forward)

    def by_right(self, u: int, v: int) -> Optional[Tuple[int, int]]:
        """The (a, b), a != b, with a·u = b·v."""
        return self._lookup("r", u, v, self._by_right)

    def by_left(self, q: int, p: int) -> Optional[Tuple[int, int]]:
        """r(q, p) = (y, z) when it is a non-diagonal relation q·p = y·z."""
        return self._lookup("l", q, p, self._by_left)

    def _forward(self, a, b):
        if a == b:
            return None
        s = self.S.sigma(a)
        if s is None or self.S.sigma(b) is None:
            return None
        u = s.inverse()(b)
        if u is None or not self.S.in_domain(a, u):
            return None
        return u, self.S.gamma(u)(a)

    def _by_right(self, u, v):
        g = self.S.gamma(v)
        if g is None or self.S.sigma(u) is None:
            return None
        b = g.inverse()(u)
        if b is None or not self.S.in_domain(b, v):
            return None
        a = self.S.sigma(b)(v)
        if a == b or self.S.r(a, u) != (b, v):
            return None
        return a, b

    def _by_left(self, q, p):
        out = self.S.r(q, p)
        if out is None or out[0] == q:
            return None
        return out

    def entries(self, window: Optional[int] = None):
        xs = self.S.indices(window)
        for a in xs:
            for b in xs:
                e = self.forward(a, b)
                if e is not None:
                    yield (a, b), e


@lru_cache(maxsize=16)
def relation_table(S: PartialSolution) -> RelationTable:
    return RelationTable(S)


@dataclass(frozen=True)
class _Token:
    vertical: bool
    letter: Letter
    row: int
    col: int


@dataclass(frozen=True)
class Square:
    row: int
    col: int
    vertical: Letter
    horizontal: Letter
    right: Word
    bottom: Word

    def __str__(self):
        def w(x):
            return format_word(x) or "-"
        return (f"({self.row},{self.col}) v={self.vertical} h={self.horizontal}"
                f" -> u={w(self.right)} v={w(self.bottom)}")


@dataclass
class ReversingDiagram:
    w1: Word
    w2: Word
    squares: List[Square] = field(default_factory=list)
    tokens: List[_Token] = field(default_factory=list)

    def dump(self) -> str:
        return "\n".join(str(sq) for sq in self.squares)

    def replay(self) -> Tuple[Word, Word]:
        """Re-apply the logged closures to the initial path; returns (U, V)."""
        path = _initial_path(self.w1, self.w2)
        for sq in self.squares:
            i = _find_corner(path, sq.row, sq.col)
            if i is None or path[i].letter != sq.horizontal or path[i + 1].letter != sq.vertical:
                raise ValueError(f"log entry {sq} does not match the path")
            path[i:i + 2] = _closure_tokens(sq.row, sq.col, sq.right, sq.bottom)
        if _next_corner(path) is not None:
            raise ValueError("replayed path is not terminal")
        return _boundary(path)

    def to_dot(self) -> str:
        lines = ["digraph reversing {", "  rankdir=LR;", "  node [shape=point];"]
        seen = set()
        for t in self.tokens:
            dst = (t.row + 1, t.col) if t.vertical else (t.row, t.col + 1)
            key = (t.row, t.col, dst, str(t.letter))
            if key in seen:
                continue
            seen.add(key)
            style = "dashed" if t.vertical else "solid"
            lines.append(f'  "{t.row},{t.col}" -> "{dst[0]},{dst[1]}" '
                         f'[label="{t.letter}", style={style}];')
        lines.append("}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Closed:
    u: Word
    v: Word
    diagram: ReversingDiagram = field(compare=False, repr=False)
    steps: int = 0


@dataclass(frozen=True)
class NoRelation:
    position: Tuple[int, int]
    letters: Tuple[Letter, Letter]
    diagram: ReversingDiagram = field(compare=False, repr=False, default=None)

    def __str__(self):
        h, v = self.letters
        return f"NoRelation at ({self.position[0]},{self.position[1]}): h={h} v={v}"


@dataclass(frozen=True)
class StepLimit:
    steps: int
    diagram: ReversingDiagram = field(compare=False, repr=False, default=None)


ReversingOutcome = Union[Closed, NoRelation, StepLimit]


def _initial_path(w1: Word, w2: Word) -> List[_Token]:
    path = [_Token(False, w1[i], 0, i) for i in reversed(range(len(w1)))]
    path += [_Token(True, w2[j], j, 0) for j in range(len(w2))]
    return path


def _corners(path):
    for i in range(len(path) - 1):
        if not path[i].vertical and path[i + 1].vertical:
            yield i


def _next_corner(path) -> Optional[int]:
    best = None
    for i in _corners(path):
        key = (path[i].row, path[i].col, i)
        if best is None or key < best[0]:
            best = (key, i)
    return None if best is None else best[1]


def _find_corner(path, row, col):
    for i in _corners(path):
        if (path[i].row, path[i].col) == (row, col):
            return i
    return None


def _closure_tokens(row, col, right: Word, bottom: Word) -> List[_Token]:
    out = [_Token(True, l, row + k, col + 1) for k, l in enumerate(right)]
    out += [_Token(False, l, row + 1, col + len(bottom) - 1 - k)
            for k, l in enumerate(reversed(bottom))]
    return out


def _boundary(path) -> Tuple[Word, Word]:
    U = tuple(t.letter for t in path if t.vertical)
    V = tuple(t.letter for t in reversed(path) if not t.vertical)
    return U, V


def close_corner(table: RelationTable, h: Letter, v: Letter) -> Optional[Tuple[Word, Word]]:
    """Edges (right, bottom) with h·right = v·bottom, or None."""
    if h == v:
        return (), ()
    if not h.star and not v.star:
        e = table.forward(h.index, v.index)
        return None if e is None else ((Letter(e[0]),), (Letter(e[1]),))
    if h.star and v.star:
        # a·u = b·v gives u*·a* = v*·b*
        e = table.by_right(h.index, v.index)
        return None if e is None else ((Letter(e[0], True),), (Letter(e[1], True),))
    if not h.star:
        # q·p = y·z gives p·z* = q*·y
        e = table.by_left(v.index, h.index)
        return None if e is None else ((Letter(e[1], True),), (Letter(e[0]),))
    # q·p = y·z gives q*·y = p·z*
    e = table.by_left(h.index, v.index)
    return None if e is None else ((Letter(e[0]),), (Letter(e[1], True),))


def default_max_steps(w1, w2) -> int:
    return 10 * (len(w1) + 1) * (len(w2) + 1)


def reverse(S: PartialSolution, w1, w2, max_steps: Optional[int] = None) -> ReversingOutcome:
    w1, w2 = as_word(w1), as_word(w2)
    if max_steps is None:
        max_steps = default_max_steps(w1, w2)
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    table = relation_table(S)
    path = _initial_path(w1, w2)
    diagram = ReversingDiagram(w1, w2, [], list(path))
    steps = 0
    while True:
        i = _next_corner(path)
        if i is None:
            U, V = _boundary(path)
            return Closed(U, V, diagram, steps)
        if steps >= max_steps:
            return StepLimit(steps, diagram)
        h, v = path[i], path[i + 1]
        edges = close_corner(table, h.letter, v.letter)
        if edges is None:
            return NoRelation((h.row, h.col), (h.letter, v.letter), diagram)
        right, bottom = edges
        new = _closure_tokens(h.row, h.col, right, bottom)
        diagram.squares.append(Square(h.row, h.col, v.letter, h.letter, right, bottom))
        diagram.tokens.extend(new)
        path[i:i + 2] = new
        steps += 1


def oplus(S: PartialSolution, g, h, max_steps: Optional[int] = None) -> Optional[Word]:
    """g ⊕ h = g·u when reversing (g, h) closes, else None.

    The result depends on the words, not only on the elements they denote:
    g·g*·g ⊕ h and g ⊕ h can close to different elements when the words
    carry stars, because an element and its idempotent g·g* generate the
    same right ideal.
    """
    g, h = as_word(g), as_word(h)
    out = reverse(S, g, h, max_steps)
    if not isinstance(out, Closed):
        return None
    return g + out.u


def check_left_distributivity(S: PartialSolution, a, g, h,
                              max_steps: Optional[int] = None) -> Optional[bool]:
    """a·(g ⊕ h) vs (a·g) ⊕ (a·h); None when either sum is undefined."""
    a, g, h = as_word(a), as_word(g), as_word(h)
    left = oplus(S, g, h, max_steps)
    right = oplus(S, a + g, a + h, max_steps)
    if left is None or right is None:
        return None
    return words_equal(S, a + left, right)
