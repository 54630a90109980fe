"""Closed-form sigma/gamma families for countable carriers, keyed by name."""

from __future__ import annotations

from functools import lru_cache

from .core import PartialBijection


@lru_cache(maxsize=None)
def thompson_sigma(n: int) -> PartialBijection:
    # k for k <= n, undefined at n+1, k-1 for k >= n+2
    return PartialBijection(((0, n, 0), (n + 2, None, -1)))


@lru_cache(maxsize=None)
def thompson_gamma(n: int) -> PartialBijection:
    # k for k <= n-2, undefined at n-1, n at n, k+1 for k >= n+1
    segs = [(n, n, 0), (n + 1, None, 1)]
    if n >= 2:
        segs.append((0, n - 2, 0))
    return PartialBijection(tuple(segs))


def thompson_sigma_inverse_closed_form(n: int, k: int) -> int:
    """sigma_n^{-1}(k): k for k <= n, k+1 for k >= n+1."""
    return k if k <= n else k + 1


FAMILIES = {
    "thompson": (thompson_sigma, thompson_gamma),
}
