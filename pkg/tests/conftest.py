import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from partial_ybe.core import EmbeddedElement, Finite, IndexSet, PartialBijection, PartialIntFun
from partial_ybe.monoid import Letter

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

N = 6


@st.composite
def finite_bijections(draw, n=N):
    dom = draw(st.lists(st.integers(0, n - 1), unique=True, max_size=n))
    img = draw(st.permutations(range(n)))
    return dict(zip(dom, img[:len(dom)]))


@st.composite
def finite_funs(draw, n=N, domain=None):
    if domain is None:
        domain = draw(st.sets(st.integers(0, n - 1)))
    vals = {k: draw(st.integers(-3, 3)) for k in sorted(domain)}
    return PartialIntFun(IndexSet.of(domain), vals)


@st.composite
def embedded(draw, n=N):
    tau = PartialBijection.from_mapping(draw(finite_bijections(n)))
    f = draw(finite_funs(n, set(tau.range)))
    return EmbeddedElement(f, tau)


@st.composite
def shift_bijections(draw):
    """Countable-carrier partial bijections built from random shift pieces."""
    pieces = []
    lo = draw(st.integers(0, 3))
    used = set()
    for _ in range(draw(st.integers(0, 3))):
        hi = lo + draw(st.integers(0, 4))
        shift = draw(st.integers(-lo, 3))
        span = set(range(lo + shift, hi + shift + 1))
        if span & used:
            break
        used |= span
        pieces.append(((lo, hi), shift))
        lo = hi + 1 + draw(st.integers(0, 2))
    if draw(st.booleans()):
        top = max(used, default=-1) + 1
        start = max(lo, top)
        pieces.append(((start, None), 0))
    return PartialBijection.from_pieces(pieces)


def monoid_words(indices, max_len=6):
    letter = st.builds(Letter, st.sampled_from(list(indices)), st.booleans())
    return st.lists(letter, max_size=max_len).map(tuple)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
