"""Lens spaces up to unoriented homeomorphism.

L(m, n) and L(m, n') are homeomorphic iff n' = +-n^(+-1) mod m.  L(0, 1) is
S^2 x S^1 and L(1, 0) is S^3.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from optb.errors import NotALensSpaceError

__all__ = ["LensSpace", "make_lens", "parse_lens", "is_homeomorphic", "homeo_class", "orbit"]


def orbit(m: int, n: int) -> list[int]:
    """Sorted residues {n, -n, 1/n, -1/n} mod m, for m >= 2 and gcd(m, n) = 1."""
    n %= m
    inv = pow(n, -1, m)
    return sorted({n, -n % m, inv, -inv % m})


@dataclass(frozen=True, order=True)
class LensSpace:
    """A lens space with m >= 0 and n reduced mod m.

    Build instances with :func:`make_lens`; ``canonical`` is the smallest
    member of the homeomorphism orbit of n.
    """

    m: int
    n: int
    canonical: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.m == 0:
            if self.n != 1:
                raise NotALensSpaceError("L(0, n) must be normalized to L(0, 1)")
            canonical = 1
        elif self.m == 1:
            if self.n != 0:
                raise NotALensSpaceError("L(1, n) must be normalized to L(1, 0)")
            canonical = 0
        else:
            if not 0 <= self.n < self.m or math.gcd(self.m, self.n) != 1:
                raise NotALensSpaceError(f"L({self.m},{self.n}) is not a normalized lens space")
            canonical = orbit(self.m, self.n)[0]
        object.__setattr__(self, "canonical", canonical)

    @property
    def key(self) -> tuple[int, int]:
        return self.m, self.canonical

    def __str__(self):
        return f"L({self.m},{self.n})"


def make_lens(m: int, n: int) -> LensSpace:
    if m == 0 and n == 0:
        raise NotALensSpaceError("L(0,0) is not a lens space")
    m = abs(m)
    if m == 0:
        return LensSpace(0, 1)
    if m == 1:
        return LensSpace(1, 0)
    n %= m
    if math.gcd(m, n) != 1:
        raise NotALensSpaceError(f"gcd({m}, {n}) != 1")
    return LensSpace(m, n)


_LENS = re.compile(r"\s*L\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*")


def parse_lens(text: str) -> LensSpace:
    match = _LENS.fullmatch(text)
    if match is None:
        raise ValueError(f"expected L(m,n), got {text!r}")
    return make_lens(int(match.group(1)), int(match.group(2)))


def is_homeomorphic(a: LensSpace, b: LensSpace) -> bool:
    return a.key == b.key


def homeo_class(lens: LensSpace) -> list[int]:
    """All n' with L(m, n') homeomorphic to ``lens`` (m >= 2)."""
    if lens.m < 2:
        raise ValueError(f"homeo_class needs m >= 2, got {lens}")
    return orbit(lens.m, lens.n)
