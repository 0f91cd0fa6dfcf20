"""Lens space surgeries on torus knots.

p/q surgery on T(r, s), 0 < s < r, is a lens space iff |rsq + p| = 1, and
the result is then L(|p|, q s^2).  T(3, 2) is the left-handed trefoil.

All comparisons with a target lens space are unoriented, so a search over
T(3, 2) also covers the right-handed trefoil (p/q on one is -p/-q on the
mirror).
"""

from __future__ import annotations

import math
import re
import warnings
from dataclasses import dataclass
from typing import Optional

from sympy import divisors

from optb.lens import LensSpace, is_homeomorphic, make_lens

__all__ = [
    "SurgeryDescription",
    "UnknottedTorusKnotWarning",
    "moser_forward",
    "trefoil_surgeries",
    "moser_inverse",
    "parse_surgery",
]


class UnknottedTorusKnotWarning(UserWarning):
    """moser_forward was called with s = 1, i.e. on an unknot."""


@dataclass(frozen=True, order=True)
class SurgeryDescription:
    r: int
    s: int
    p: int
    q: int

    def __post_init__(self):
        if not 0 < self.s < self.r or math.gcd(self.r, self.s) != 1:
            raise ValueError(f"T({self.r},{self.s}) needs 0 < s < r, gcd(r, s) = 1")
        if self.q == 0 or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} needs q != 0, gcd(p, q) = 1")

    @property
    def lens_yielding(self) -> bool:
        return abs(self.r * self.s * self.q + self.p) == 1

    def __str__(self):
        return f"T({self.r},{self.s}) @ {self.p}/{self.q}"


_SURGERY = re.compile(r"\s*T\((\d+),(\d+)\)\s*@\s*(-?\d+)/(-?\d+)\s*")


def parse_surgery(text: str) -> SurgeryDescription:
    match = _SURGERY.fullmatch(text)
    if match is None:
        raise ValueError(f"expected 'T(r,s) @ p/q', got {text!r}")
    return SurgeryDescription(*map(int, match.groups()))


def moser_forward(desc: SurgeryDescription) -> Optional[LensSpace]:
    """The lens space produced by ``desc``, or None if it is not a lens space."""
    if desc.s == 1:
        warnings.warn(f"{desc}: s = 1 is an unknot", UnknottedTorusKnotWarning, stacklevel=2)
    if not desc.lens_yielding:
        return None
    m = abs(desc.p)
    return make_lens(m, desc.q * desc.s * desc.s % m if m > 1 else 0)


def trefoil_surgeries(lens: LensSpace) -> list[SurgeryDescription]:
    """Every p/q with p/q surgery on T(3, 2) homeomorphic to ``lens``."""
    if lens.m < 2:
        raise ValueError(f"trefoil_surgeries needs m >= 2, got {lens}")
    out = []
    for p in (-lens.m, lens.m):
        for eps in (-1, 1):
            q, r = divmod(eps - p, 6)
            if r or q == 0 or math.gcd(p, q) != 1:
                continue
            if is_homeomorphic(make_lens(lens.m, 4 * q), lens):
                out.append(SurgeryDescription(3, 2, p, q))
    return sorted(out)


def moser_inverse(lens: LensSpace) -> list[SurgeryDescription]:
    """Every lens-yielding surgery on a nontrivial torus knot giving ``lens``.

    From rsq = +-1 - p with p = +-m, rs divides m - 1 or m + 1; each
    divisor rs >= 6 is split into coprime 2 <= s < r.
    """
    if lens.m < 2:
        raise ValueError(f"moser_inverse needs m >= 2, got {lens}")
    m = lens.m
    out = set()
    for p in (-m, m):
        for eps in (-1, 1):
            v = eps - p
            for rs in divisors(abs(v)):
                q = v // rs
                for s in divisors(rs):
                    r = rs // s
                    if not 2 <= s < r or math.gcd(r, s) != 1:
                        continue
                    if is_homeomorphic(make_lens(m, q * s * s), lens):
                        out.add(SurgeryDescription(r, s, p, q))
    return sorted(out)
