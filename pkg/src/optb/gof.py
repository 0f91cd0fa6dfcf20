"""Counting genus one fibered knots in lens spaces.

L(a, b) contains exactly as many genus one fibered knots as the 2-bridge
link b(a, b) has equivalence classes of 3-braid representatives, and those
are classified arithmetically:

* three classes only for b(4, 1);
* two classes for b(a, 1), a != 0;
* one class for b(0, 1), or for 0 < b < a with b = 2q + 1 and either
  a = 2pq + p + q (p, q > 1) or a = 2pq + p + q + 1 (p, q > 0);
* none otherwise.

S^3 = L(1, 0) is special-cased to three (both trefoils and the figure eight).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from optb import _backend
from optb.errors import BoundExceededError
from optb.lens import LensSpace, homeo_class

__all__ = ["GofCase", "GofWitness", "GofVerdict", "gof_count", "gof_count_bruteforce"]


class GofCase(str, enum.Enum):
    B01 = "B01"
    ALPHA1_SPECIAL = "ALPHA1_SPECIAL"
    FOUR_ONE = "FOUR_ONE"
    ALPHA_ONE_FAMILY = "ALPHA_ONE_FAMILY"
    DIOPHANTINE_1 = "DIOPHANTINE_1"
    DIOPHANTINE_2 = "DIOPHANTINE_2"
    NONE = "NONE"


@dataclass(frozen=True)
class GofWitness:
    """beta = 2q + 1 with m = 2pq + p + q (family 1) or 2pq + p + q + 1 (family 2)."""

    p: int
    q: int
    beta: int
    family: int

    def alpha(self) -> int:
        return 2 * self.p * self.q + self.p + self.q + (self.family == 2)

    def to_record(self) -> dict:
        return {"p": self.p, "q": self.q, "beta": self.beta, "family": self.family}


@dataclass(frozen=True)
class GofVerdict:
    count: int
    case: GofCase
    witness: Optional[GofWitness] = None

    def __post_init__(self):
        if self.count == 3 and self.case not in (GofCase.FOUR_ONE, GofCase.ALPHA1_SPECIAL):
            raise ValueError("count 3 only for L(4,1) and S^3")
        diophantine = self.case in (GofCase.DIOPHANTINE_1, GofCase.DIOPHANTINE_2)
        if diophantine != (self.witness is not None):
            raise ValueError("witness present iff the case is Diophantine")

    def to_record(self) -> dict:
        return {
            "count": self.count,
            "case": self.case.value,
            "witness": None if self.witness is None else self.witness.to_record(),
        }


def _special(lens: LensSpace):
    """Verdict for the cases decided before any search, else (None, orbit)."""
    if lens.m == 0:
        return GofVerdict(1, GofCase.B01), None
    if lens.m == 1:
        return GofVerdict(3, GofCase.ALPHA1_SPECIAL), None
    orbit = homeo_class(lens)
    if 1 in orbit:
        if lens.m == 4:
            return GofVerdict(3, GofCase.FOUR_ONE), orbit
        return GofVerdict(2, GofCase.ALPHA_ONE_FAMILY), orbit
    return None, orbit


def _diophantine(witness: GofWitness) -> GofVerdict:
    case = GofCase.DIOPHANTINE_1 if witness.family == 1 else GofCase.DIOPHANTINE_2
    return GofVerdict(1, case, witness)


def gof_count(lens: LensSpace) -> GofVerdict:
    """Number of GOF-knots in ``lens``, with the case that decided it.

    The witness, if any, uses the smallest odd beta in the homeomorphism
    orbit that solves one of the two equations.
    """
    verdict, orbit = _special(lens)
    if verdict is not None:
        return verdict
    m = lens.m
    for beta in orbit:
        if beta % 2 == 0:
            continue
        q = (beta - 1) // 2
        p, r = divmod(m - q, beta)
        if r == 0 and p > 1 and q > 1:
            return _diophantine(GofWitness(p, q, beta, 1))
        p, r = divmod(m - 1 - q, beta)
        if r == 0 and p > 0 and q > 0:
            return _diophantine(GofWitness(p, q, beta, 2))
    return GofVerdict(0, GofCase.NONE)


def gof_count_bruteforce(lens: LensSpace, bound: int) -> GofVerdict:
    """Same as :func:`gof_count`, by exhaustive enumeration of (p, q).

    Every pair 1 <= p, q <= m is tried; that range is complete because
    both families have 2pq + p + q >= p + q.
    """
    if lens.m > bound:
        raise BoundExceededError(f"m = {lens.m} exceeds bound {bound}")
    verdict, orbit = _special(lens)
    if verdict is not None:
        return verdict
    members = set(orbit)
    hits = [h for h in _backend.gof_hits(lens.m) if h[0] in members]
    if not hits:
        return GofVerdict(0, GofCase.NONE)
    beta, family, p, q = min(hits)
    return _diophantine(GofWitness(p, q, beta, family))
