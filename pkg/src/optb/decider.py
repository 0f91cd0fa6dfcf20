"""Deciding whether a lens space contains a knot with OPTB exterior.

For Y with prime |H1| and no genus one fibered knot, Y contains such a knot
iff Y is p/q surgery (p > 1) on the trefoil or the figure eight.  Lens
spaces are never surgery on the figure eight, so for a lens space L(m, n)
with m prime the answer is YES iff it contains a GOF-knot (whose exterior
is an OPTB by definition) or it is a trefoil surgery.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from sympy import isprime

from optb.errors import HypothesisError, InternalConsistencyError
from optb.gof import GofVerdict, gof_count
from optb.lens import LensSpace, is_homeomorphic, make_lens
from optb.torus import SurgeryDescription, trefoil_surgeries

__all__ = [
    "Answer",
    "Reason",
    "OptbVerdict",
    "decide_optb",
    "cor5_congruence_check",
    "cor5_gof_bullets_check",
    "scan_family",
]

FIGURE_EIGHT_NOTE = "figure-eight surgeries excluded: lens spaces are never surgery on the figure eight"


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"


class Reason(str, enum.Enum):
    HAS_GOF_KNOT = "HAS_GOF_KNOT"
    TREFOIL_SURGERY = "TREFOIL_SURGERY"
    NO_CERTIFICATE = "NO_CERTIFICATE"


@dataclass(frozen=True)
class OptbVerdict:
    lens: LensSpace
    answer: Answer
    reason: Reason
    gof: GofVerdict
    surgeries: tuple[SurgeryDescription, ...] = ()
    outside_hypotheses: bool = False
    congruence_check: Optional[bool] = None
    bullets_check: Optional[bool] = None
    notes: tuple[str, ...] = field(default=(FIGURE_EIGHT_NOTE,))

    def __post_init__(self):
        yes = self.gof.count > 0 or bool(self.surgeries)
        if (self.answer is Answer.YES) != yes:
            raise ValueError("answer disagrees with certificates")
        expected = (Reason.HAS_GOF_KNOT if self.gof.count > 0
                    else Reason.TREFOIL_SURGERY if self.surgeries
                    else Reason.NO_CERTIFICATE)
        if self.reason is not expected:
            raise ValueError(f"reason {self.reason} should be {expected}")

    @property
    def congruence_consistent(self) -> Optional[bool]:
        """Whether the L(m,2) congruence argument agrees with the surgery search."""
        if self.congruence_check is None:
            return None
        return self.congruence_check == bool(self.surgeries)

    def to_record(self) -> dict:
        return {
            "m": self.lens.m,
            "n": self.lens.n,
            "answer": self.answer.value,
            "reason": self.reason.value,
            "gof": self.gof.to_record(),
            "surgeries": [str(s) for s in self.surgeries],
            "outside_hypotheses": self.outside_hypotheses,
            "congruence_check": self.congruence_check,
            "bullets_check": self.bullets_check,
            "congruence_consistent": self.congruence_consistent,
            "notes": list(self.notes),
        }


def _is_beta_two(lens: LensSpace) -> bool:
    return lens.m >= 3 and lens.m % 2 == 1 and is_homeomorphic(lens, make_lens(lens.m, 2))


def decide_optb(lens: LensSpace, allow_composite: bool = False) -> OptbVerdict:
    """Decide OPTB-exterior knot containment for L(m, n), m prime.

    Composite m raises :class:`HypothesisError` unless ``allow_composite``;
    the verdict is then flagged ``outside_hypotheses`` and is only a
    heuristic.  For spaces homeomorphic to L(m, 2) with m an odd prime the
    verdict also carries both Corollary-style cross-checks.
    """
    m = lens.m
    if m < 2:
        raise HypothesisError(f"{lens}: need m >= 2")
    prime = isprime(m)
    if not prime and not allow_composite:
        raise HypothesisError(f"{lens}: |H1| = {m} is not prime")

    gof = gof_count(lens)
    surgeries = tuple(trefoil_surgeries(lens))
    if gof.count > 0:
        answer, reason = Answer.YES, Reason.HAS_GOF_KNOT
    elif surgeries:
        answer, reason = Answer.YES, Reason.TREFOIL_SURGERY
    else:
        answer, reason = Answer.NO, Reason.NO_CERTIFICATE

    congruence = bullets = None
    if prime and _is_beta_two(lens):
        congruence = cor5_congruence_check(m)
        bullets = cor5_gof_bullets_check(m)
    return OptbVerdict(lens, answer, reason, gof, surgeries,
                       outside_hypotheses=not prime,
                       congruence_check=congruence, bullets_check=bullets)


def _require_odd_prime(m: int):
    if m % 2 == 0 or not isprime(m):
        raise HypothesisError(f"{m} is not an odd prime")


def cor5_congruence_check(m: int) -> bool:
    """Can some p/q surgery on the trefoil give L(m, 2), by congruences alone?

    Such a surgery forces 24q = +-4 and 24q in {12, -12, 3, -3} mod m; this
    searches q mod m for a simultaneous solution.
    """
    _require_odd_prime(m)
    first = {4 % m, -4 % m}
    second = {12 % m, -12 % m, 3 % m, -3 % m}
    return any(24 * q % m in first and 24 * q % m in second for q in range(m))


def cor5_gof_bullets_check(m: int) -> bool:
    """True iff no k from 2k + 1 in {2, m-2, (m+1)/2, (m-1)/2}, k > 0, and
    no 0 < l <= m give 2kl + k + l in {m, m - 1}.

    Capping l at m loses nothing: 2kl + k + l > l >= m for larger l.
    """
    _require_odd_prime(m)
    targets = (2, m - 2, (m + 1) // 2, (m - 1) // 2)
    ks = {(t - 1) // 2 for t in targets if t % 2 == 1 and t >= 3}
    for k in sorted(ks):
        for l in range(1, m + 1):
            if 2 * k * l + k + l in (m, m - 1):
                return False
    return True


def _scan_one(args):
    m, beta, prime = args
    return decide_optb(make_lens(m, beta), allow_composite=not prime)


def scan_family(
    beta: int,
    m_max: int,
    primes_only: bool = True,
    *,
    m_min: Optional[int] = None,
    skip=frozenset(),
    workers: int = 1,
) -> list[tuple[LensSpace, OptbVerdict]]:
    """Verdicts for L(m, beta), beta < m <= m_max, gcd(m, beta) = 1, ascending m.

    Composite m are skipped with ``primes_only``, otherwise decided with the
    composite override and flagged.  For beta = 2 a disagreement between the
    congruence argument and the surgery search raises
    :class:`InternalConsistencyError`.  ``skip`` holds m values already done.
    """
    if beta <= 0:
        raise ValueError("beta must be positive")
    start = max(beta + 1, 2) if m_min is None else max(m_min, beta + 1, 2)
    jobs = []
    for m in range(start, m_max + 1):
        if m in skip or math.gcd(m, beta) != 1:
            continue
        prime = bool(isprime(m))
        if primes_only and not prime:
            continue
        jobs.append((m, beta, prime))

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(_scan_one, jobs, chunksize=16))
    else:
        verdicts = [_scan_one(job) for job in jobs]

    out = []
    for verdict in verdicts:
        if beta == 2 and verdict.congruence_consistent is False:
            raise InternalConsistencyError(
                f"{verdict.lens}: congruence check says {verdict.congruence_check}, "
                f"surgery search found {len(verdict.surgeries)} surgeries")
        out.append((verdict.lens, verdict))
    return out
