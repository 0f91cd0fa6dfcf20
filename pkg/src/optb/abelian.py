"""Finitely generated abelian groups in invariant-factor form.

Groups arise here as cokernels of small integer matrices, so the Smith
normal form below is a plain pivoting elimination over Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

__all__ = ["AbelianGroup", "smith_diagonal"]


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Return the nonzero invariant factors d1 | d2 | ... of an integer matrix.

    Units (factors equal to 1) are included; the length of the result is
    the rank of the matrix.
    """
    A = [[int(v) for v in row] for row in matrix]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if any(len(row) != ncols for row in A):
        raise ValueError("ragged matrix")

    diag = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _min_entry(A, t, nrows, ncols)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]

        while True:
            dirty = False
            p = A[t][t]
            for i in range(t + 1, nrows):
                if A[i][t]:
                    f = A[i][t] // p
                    A[i] = [a - f * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if A[t][j]:
                    f = A[t][j] // p
                    for row in A:
                        row[j] -= f * row[t]
                    if A[t][j]:
                        dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next(
                    (i for i in range(t + 1, nrows)
                     for j in range(t + 1, ncols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
            i, j = _min_entry(A, t, nrows, ncols, line=t)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]

        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _min_entry(A, t, nrows, ncols, line=None):
    """Position of a smallest nonzero entry in the block A[t:, t:].

    With ``line`` set, only row ``line`` and column ``line`` are searched.
    """
    best = None
    if line is None:
        cells = ((i, j) for i in range(t, nrows) for j in range(t, ncols))
    else:
        cells = [(line, j) for j in range(t, ncols)]
        cells += [(i, line) for i in range(t + 1, nrows)]
    for i, j in cells:
        v = A[i][j]
        if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
            best = (i, j)
    return best


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each di >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"invariant factors must be >= 2: {self.torsion}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {self.torsion}")

    @classmethod
    def cokernel(cls, matrix: Sequence[Sequence[int]]) -> AbelianGroup:
        """Cokernel of ``matrix`` viewed as a map Z^ncols -> Z^nrows."""
        diag = smith_diagonal(matrix)
        return cls(len(matrix) - len(diag), tuple(d for d in diag if d > 1))

    @classmethod
    def from_cyclic(cls, orders: Sequence[int], free_rank: int = 0) -> AbelianGroup:
        """Normalize a direct sum of cyclic groups Z/n; n = 0 means Z."""
        n = len(orders)
        diag = [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]
        group = cls.cokernel(diag)
        return cls(group.free_rank + free_rank, group.torsion)

    @classmethod
    def cyclic(cls, n: int) -> AbelianGroup:
        return cls.from_cyclic([n])

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        torsion = self.torsion + other.torsion
        if len(torsion) > 1:
            torsion = AbelianGroup.from_cyclic(torsion).torsion
        return AbelianGroup(self.free_rank + other.free_rank, torsion)

    def order(self) -> int | float:
        """Group order, or ``math.inf`` when the free rank is positive."""
        if self.free_rank:
            return math.inf
        return math.prod(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_record(self) -> dict:
        order = self.order()
        return {
            "free_rank": self.free_rank,
            "torsion": list(self.torsion),
            "order": "infinite" if order == math.inf else order,
        }

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"
