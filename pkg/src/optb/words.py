"""Monodromies of genus one, one boundary component open books.

A monodromy is a word in Dehn twists on the once-punctured torus:

    x, y   right-handed twists about dual non-separating curves
    d      twist about a boundary-parallel curve (trivial on homology)
    w      the hyperelliptic involution, acting as -I on homology

Words are written left to right, ``"x y^3 x"``, and their homological
action multiplies the generator matrices in the same order.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from optb import _backend
from optb.abelian import AbelianGroup
from optb.errors import (
    InternalConsistencyError,
    MonodromyTypeError,
    SlopeError,
    UnsupportedSlopeError,
    WordSyntaxError,
)

__all__ = [
    "Gen",
    "TwistWord",
    "HomologyMatrix",
    "MonodromyType",
    "parse_word",
    "word_to_matrix",
    "h1_open_book",
    "h1_binding_surgery",
    "word_of_type",
    "h1_table",
    "table_summary",
    "trivial_h1_candidates",
    "candidate_family",
    "reduce_binding_surgery",
    "REDUCED_KNOTS",
]


class Gen(enum.Enum):
    X = "x"
    Y = "y"
    DELTA = "d"
    W = "w"

    @property
    def code(self) -> int:
        return _CODES[self]


_CODES = {Gen.X: 0, Gen.Y: 1, Gen.DELTA: 2, Gen.W: 3}
_TOKEN = re.compile(r"([xydw])(?:\^(-?[0-9]+))?")


@dataclass(frozen=True)
class TwistWord:
    """A word in run-length canonical form.

    Adjacent letters never share a generator and no exponent is zero.  Use
    :meth:`from_letters` to build one from arbitrary (generator, exponent)
    pairs.
    """

    letters: tuple[tuple[Gen, int], ...] = ()

    def __post_init__(self):
        for i, (g, k) in enumerate(self.letters):
            if k == 0:
                raise ValueError("zero exponent in canonical word")
            if i and self.letters[i - 1][0] is g:
                raise ValueError("adjacent letters share a generator")

    @classmethod
    def from_letters(cls, letters: Iterable[tuple[Gen, int]]) -> TwistWord:
        out: list[tuple[Gen, int]] = []
        for g, k in letters:
            g = Gen(g)
            k = int(k)
            if out and out[-1][0] is g:
                k += out.pop()[1]
            if k:
                out.append((g, k))
        return cls(tuple(out))

    @classmethod
    def identity(cls) -> TwistWord:
        return cls()

    def __mul__(self, other: TwistWord) -> TwistWord:
        if not isinstance(other, TwistWord):
            return NotImplemented
        return TwistWord.from_letters(self.letters + other.letters)

    def __pow__(self, n: int) -> TwistWord:
        if n < 0:
            return self.inverse() ** -n
        return TwistWord.from_letters(self.letters * n)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> TwistWord:
        return TwistWord(tuple((g, -k) for g, k in reversed(self.letters)))

    def reversed(self) -> TwistWord:
        return TwistWord(tuple(reversed(self.letters)))

    def split(self, i: int) -> tuple[TwistWord, TwistWord]:
        return TwistWord(self.letters[:i]), TwistWord(self.letters[i:])

    def __str__(self):
        return " ".join(g.value if k == 1 else f"{g.value}^{k}" for g, k in self.letters)

    def __repr__(self):
        return f"TwistWord({str(self)!r})"


def parse_word(text: str) -> TwistWord:
    """Parse ``"x y^3 x"``-style text.  Blank text is the identity word."""
    letters = []
    for token in text.split():
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise WordSyntaxError(f"malformed token {token!r}")
        k = 1 if match.group(2) is None else int(match.group(2))
        if k == 0:
            raise WordSyntaxError(f"zero exponent in token {token!r}")
        letters.append((Gen(match.group(1)), k))
    return TwistWord.from_letters(letters)


@dataclass(frozen=True)
class HomologyMatrix:
    """Integer matrix [[a, b], [c, d]] of determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.rows()} is not 1")

    @classmethod
    def identity(cls) -> HomologyMatrix:
        return cls(1, 0, 0, 1)

    def __matmul__(self, o: HomologyMatrix) -> HomologyMatrix:
        return HomologyMatrix(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __neg__(self) -> HomologyMatrix:
        return HomologyMatrix(-self.a, -self.b, -self.c, -self.d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def det_minus_identity(self) -> int:
        """det(M - I); equals 2 - trace for determinant-one M."""
        return (self.a - 1) * (self.d - 1) - self.b * self.c


def word_to_matrix(word: TwistWord) -> HomologyMatrix:
    codes = [g.code for g, _ in word.letters]
    exps = [k for _, k in word.letters]
    return HomologyMatrix(*_backend.word_matrix(codes, exps))


def h1_open_book(word: TwistWord) -> AbelianGroup:
    """First homology of the open book with monodromy ``word``: coker(M - I)."""
    m = word_to_matrix(word)
    return AbelianGroup.cokernel([[m.a - 1, m.b], [m.c, m.d - 1]])


def _check_slope(p: int, q: int):
    if math.gcd(p, q) != 1:
        raise SlopeError(f"slope {p}/{q} is not reduced")


def h1_binding_surgery(word: TwistWord, p: int, q: int) -> AbelianGroup:
    """Homology after p/q surgery on the binding, for p > 1.

    The binding does not algebraically link the other curves of the
    surgery diagram, so the result splits off Z/p and ignores q.
    """
    if q == 0:
        raise SlopeError("q must be nonzero")
    _check_slope(p, q)
    if p <= 1:
        raise UnsupportedSlopeError(f"binding surgery formula needs p > 1, got p = {p}")
    return h1_open_book(word) + AbelianGroup.cyclic(p)


@dataclass(frozen=True)
class MonodromyType:
    """One of the six normal forms A-F.

    A: d^d x^a1 y^-1 ... x^an y^-1         (ai >= 0, some ai != 0)
    B: d^d w x^a1 y^-1 ... x^an y^-1       (same constraint)
    C: d^d y^m                              (m any integer)
    D: d^d w y^m
    E: d^d x^m y^-1                         (m in {-1, -2, -3})
    F: d^d w x^m y^-1
    """

    tag: str
    d: int = 0
    a: tuple[int, ...] = ()
    m: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.tag in ("A", "B"):
            if self.m is not None:
                raise MonodromyTypeError(f"type {self.tag} takes no m")
            if not self.a or any(v < 0 for v in self.a) or not any(self.a):
                raise MonodromyTypeError(
                    f"type {self.tag} needs a_i >= 0 with some a_j != 0, got {list(self.a)}")
        elif self.tag in ("C", "D", "E", "F"):
            if self.a:
                raise MonodromyTypeError(f"type {self.tag} takes no a_i")
            if self.m is None:
                raise MonodromyTypeError(f"type {self.tag} needs m")
            if self.tag in ("E", "F") and self.m not in (-1, -2, -3):
                raise MonodromyTypeError(f"type {self.tag} needs m in {{-1, -2, -3}}, got {self.m}")
        else:
            raise MonodromyTypeError(f"unknown type {self.tag!r}")

    @property
    def has_w(self) -> bool:
        return self.tag in ("B", "D", "F")

    def __str__(self):
        if self.tag in ("A", "B"):
            params = "a=" + ",".join(map(str, self.a))
        else:
            params = f"m={self.m}"
        return f"{self.tag}(d={self.d}, {params})"


def word_of_type(t: MonodromyType) -> TwistWord:
    letters = [(Gen.DELTA, t.d)]
    if t.has_w:
        letters.append((Gen.W, 1))
    if t.tag in ("A", "B"):
        for ai in t.a:
            letters += [(Gen.X, ai), (Gen.Y, -1)]
    elif t.tag in ("C", "D"):
        letters.append((Gen.Y, t.m))
    else:
        letters += [(Gen.X, t.m), (Gen.Y, -1)]
    return TwistWord.from_letters(letters)


def table_summary(t: MonodromyType) -> tuple[str, Optional[int]]:
    """Closed-form |H1| prediction for a normal form.

    Returns one of ("eq", n), ("gt", 1), ("ge", 4), ("inf", None).
    """
    if t.tag == "A":
        return ("eq", 1) if t.a == (1,) else ("gt", 1)
    if t.tag == "B":
        return ("ge", 4)
    if t.tag == "C":
        return ("inf", None)
    if t.tag == "D":
        return ("eq", 4)
    if t.tag == "E":
        return ("eq", 1) if t.m == -1 else ("gt", 1)
    return ("eq", 1) if t.m == -3 else ("gt", 1)


def _satisfies(order, summary) -> bool:
    kind, value = summary
    if kind == "inf":
        return order == math.inf
    if order == math.inf:
        return False
    if kind == "eq":
        return order == value
    if kind == "gt":
        return order > value
    return order >= value


def h1_table(t: MonodromyType) -> AbelianGroup:
    """h1_open_book of the normal form, cross-checked against the table."""
    group = h1_open_book(word_of_type(t))
    if not _satisfies(group.order(), table_summary(t)):
        raise InternalConsistencyError(
            f"{t}: computed |H1| = {group.order()} contradicts {table_summary(t)}")
    return group


def iter_types(d_lo, d_hi, max_length, max_exponent, m_bound):
    """Every normal form with d in [d_lo, d_hi] and parameters in range.

    A/B: 1 <= n <= max_length, 0 <= ai <= max_exponent.
    C/D: |m| <= m_bound.  E/F: m in {-1, -2, -3} with |m| <= m_bound.
    """
    from itertools import product

    for d in range(d_lo, d_hi + 1):
        for tag in "AB":
            for n in range(1, max_length + 1):
                for a in product(range(max_exponent + 1), repeat=n):
                    if any(a):
                        yield MonodromyType(tag, d, a)
        for tag in "CD":
            for m in range(-m_bound, m_bound + 1):
                yield MonodromyType(tag, d, m=m)
        for tag in "EF":
            for m in (-1, -2, -3):
                if -m <= m_bound:
                    yield MonodromyType(tag, d, m=m)


def trivial_h1_candidates(
    d_range: tuple[int, int],
    param_bound: int,
    *,
    max_length: Optional[int] = None,
    max_exponent: Optional[int] = None,
    m_bound: Optional[int] = None,
) -> list[MonodromyType]:
    """All normal forms in range whose open book has trivial H1.

    ``d_range`` is inclusive; lo > hi is empty.  ``param_bound`` caps the
    word length n, the exponents ai and |m| unless the keyword arguments
    override them individually.
    """
    lo, hi = d_range
    types = iter_types(
        lo, hi,
        param_bound if max_length is None else max_length,
        param_bound if max_exponent is None else max_exponent,
        param_bound if m_bound is None else m_bound,
    )
    return [t for t in types if h1_open_book(word_of_type(t)).is_trivial]


def candidate_family(t: MonodromyType) -> Optional[int]:
    """1, 2 or 3 for the trivial-H1 families, None for anything else.

    1: d^d x y^-1       (binding is the figure eight)
    2: d^d x^-1 y^-1    (left-handed trefoil)
    3: d^d w x^-3 y^-1  (right-handed trefoil)
    """
    if t.tag == "A" and t.a == (1,):
        return 1
    if t.tag == "E" and t.m == -1:
        return 2
    if t.tag == "F" and t.m == -3:
        return 3
    return None


REDUCED_KNOTS = {1: "figure-eight", 2: "left-trefoil", 3: "right-trefoil"}


def reduce_binding_surgery(family: int, d: int, p: int, q: int) -> tuple[str, int, int]:
    """p/q surgery on the binding of family ``family`` with boundary twist power d.

    Absorbing d boundary twists into the slope gives p/(q - d p) surgery on
    the binding of the d = 0 open book.
    """
    if family not in REDUCED_KNOTS:
        raise ValueError(f"family must be 1, 2 or 3, got {family}")
    _check_slope(p, q)
    return REDUCED_KNOTS[family], p, q - d * p
