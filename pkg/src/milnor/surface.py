"""Clasp-word data of a surface system and the total triple linking class.

A surface system is represented only by its combinatorial shadow: one based
clasp-word per component plus signed triple-point counts.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .alternating import AltVector, TripleIndex, triples
from .quotient import LinkingMatrix, MilnorClass, classes_equal

__all__ = [
    "ClaspWord",
    "ClaspWordError",
    "SurfaceSystemData",
    "SurfaceSystemError",
    "Move",
    "parse_clasp_word",
    "epsilon",
    "m_count",
    "derive_linking_matrix",
    "total_triple_linking",
    "borromean_move",
    "base_surface_system",
    "realize",
]


class ClaspWordError(ValueError):
    pass


class SurfaceSystemError(ValueError):
    pass


_TOKEN = re.compile(r"x(\d+)(\^-1)?")


@dataclass(frozen=True)
class ClaspWord:
    """Word in the letters x_j^{+-1}, stored as (component, sign) pairs."""

    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for c, s in self.letters:
            if c < 1:
                raise ClaspWordError(f"component index must be positive, got {c}")
            if s not in (1, -1):
                raise ClaspWordError(f"letter sign must be +1 or -1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "ClaspWord") -> "ClaspWord":
        return ClaspWord(self.letters + other.letters)

    def exponent_sum(self, j: int) -> int:
        return sum(s for c, s in self.letters if c == j)

    def max_index(self) -> int:
        return max((c for c, _ in self.letters), default=0)

    def __str__(self) -> str:
        return " ".join(f"x{c}" if s == 1 else f"x{c}^-1" for c, s in self.letters)


def word(*letters: tuple[int, int]) -> ClaspWord:
    return ClaspWord(tuple(letters))


def parse_clasp_word(text: str) -> ClaspWord:
    """Parse whitespace-separated tokens ``x3`` / ``x3^-1``."""
    letters = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.fullmatch(m.group())
        if tok is None:
            raise ClaspWordError(f"malformed token {m.group()!r} at position {m.start()}")
        c = int(tok.group(1))
        if c == 0:
            raise ClaspWordError(f"component index 0 at position {m.start()}; indices start at 1")
        letters.append((c, -1 if tok.group(2) else 1))
    return ClaspWord(tuple(letters))


def epsilon(w: ClaspWord, i: int, j: int) -> int:
    """Signed count of positions p < q with letter x_i at p and x_j at q."""
    seen_i = 0
    total = 0
    for c, s in w.letters:
        if c == j:
            total += seen_i * s
        if c == i:
            seen_i += s
    return total


@dataclass(frozen=True)
class SurfaceSystemData:
    """Clasp-words w_1..w_n and triple-point counts keyed by canonical triples."""

    n: int
    words: tuple[ClaspWord, ...]
    triple_points: Mapping[TripleIndex, int] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.words) != self.n:
            raise SurfaceSystemError(f"expected {self.n} clasp-words, got {len(self.words)}")
        for k, w in enumerate(self.words, 1):
            if w.max_index() > self.n:
                raise SurfaceSystemError(
                    f"word w_{k} uses x{w.max_index()} but there are only {self.n} components")
        clean = {}
        for t, v in dict(self.triple_points).items():
            t = TripleIndex(*t)
            if not 1 <= t.i < t.j < t.k <= self.n:
                raise SurfaceSystemError(f"triple point key {tuple(t)} is not a canonical triple")
            if v:
                clean[t] = int(v)
        object.__setattr__(self, "triple_points", clean)

    @classmethod
    def from_strings(cls, words: Sequence[str],
                     triple_points: Optional[Mapping] = None) -> "SurfaceSystemData":
        return cls(len(words), tuple(parse_clasp_word(w) for w in words), triple_points or {})

    def word(self, k: int) -> ClaspWord:
        return self.words[k - 1]

    def t(self, i: int, j: int, k: int) -> int:
        return self.triple_points.get(TripleIndex(i, j, k), 0)

    def __eq__(self, other):
        if not isinstance(other, SurfaceSystemData):
            return NotImplemented
        return (self.n, self.words, self.triple_points) == (other.n, other.words, other.triple_points)

    def __hash__(self):
        return hash((self.n, self.words, frozenset(self.triple_points.items())))


def m_count(F: SurfaceSystemData, i: int, j: int, k: int) -> int:
    """eps_ijk + eps_jki + eps_kij, where eps_abc reads x_a before x_b in w_c."""
    if len({i, j, k}) < 3:
        raise ValueError(f"m_count needs distinct indices, got ({i},{j},{k})")
    for x in (i, j, k):
        if not 1 <= x <= F.n:
            raise ValueError(f"index {x} out of range 1..{F.n}")
    return epsilon(F.word(k), i, j) + epsilon(F.word(i), j, k) + epsilon(F.word(j), k, i)


def derive_linking_matrix(F: SurfaceSystemData) -> LinkingMatrix:
    """Entry (i, j) is the exponent sum of x_j in w_i."""
    n = F.n
    rows = [[F.word(i).exponent_sum(j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    for i in range(n):
        if rows[i][i]:
            raise SurfaceSystemError(
                f"w_{i + 1} has exponent sum {rows[i][i]} in x{i + 1}; "
                "a component cannot link itself")
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise SurfaceSystemError(
                    f"inconsistent linking for pair ({i + 1},{j + 1}): w_{i + 1} gives "
                    f"{rows[i][j]} but w_{j + 1} gives {rows[j][i]}")
    return LinkingMatrix.from_rows(rows)


def raw_triple_linking(F: SurfaceSystemData) -> AltVector:
    """The vector sum over i<j<k of (m_ijk - t_ijk) X[i,j,k]."""
    return AltVector(F.n, tuple(m_count(F, *t) - F.t(*t) for t in triples(F.n)))


def total_triple_linking(F: SurfaceSystemData) -> MilnorClass:
    return MilnorClass(derive_linking_matrix(F), raw_triple_linking(F))


@dataclass(frozen=True)
class Move:
    """A Borromean move on canonical triple (i, j, k) with sign +1 or -1."""

    i: int
    j: int
    k: int
    sign: int

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}X[{self.i},{self.j},{self.k}]"


def borromean_move(F: SurfaceSystemData, i: int, j: int, k: int, sign: int) -> SurfaceSystemData:
    """Tie in a Borromean rings band on components i < j < k.

    Prepends cancelling letters to w_i, w_j, w_k so that the linking matrix
    is unchanged and the (m - t) coefficient of X[i,j,k] moves by ``sign``.
    """
    if not 1 <= i < j < k <= F.n:
        raise ValueError(f"Borromean move needs 1 <= i < j < k <= {F.n}, got ({i},{j},{k})")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if sign == 1:
        pi = word((j, 1), (j, -1))
        pj = word((i, -1), (k, 1), (i, 1), (k, -1))
    else:
        pi = word((j, -1), (j, 1))
        pj = word((i, 1), (k, 1), (i, -1), (k, -1))
    pk = word((j, 1), (j, -1))
    words = list(F.words)
    words[i - 1] = pi + words[i - 1]
    words[j - 1] = pj + words[j - 1]
    words[k - 1] = pk + words[k - 1]
    return SurfaceSystemData(F.n, tuple(words), F.triple_points)


def base_surface_system(lam: LinkingMatrix) -> SurfaceSystemData:
    """Clasp-words whose derived linking matrix is ``lam``, with no triple points.

    w_i lists |lk(i, j)| copies of x_j^{sign lk(i, j)} for j = 1..n in order.
    """
    words = []
    for i in range(1, lam.n + 1):
        letters = []
        for j in range(1, lam.n + 1):
            c = lam.lk(i, j)
            letters.extend([(j, 1 if c > 0 else -1)] * abs(c))
        words.append(ClaspWord(tuple(letters)))
    return SurfaceSystemData(lam.n, tuple(words), {})


def realize(lam: LinkingMatrix, target: AltVector,
            base: Optional[SurfaceSystemData] = None) -> tuple[SurfaceSystemData, list[Move]]:
    """Surface-system data with linking matrix ``lam`` whose class equals ``target``.

    Starts from ``base`` (default :func:`base_surface_system`).  If its class
    already equals the target nothing is done; otherwise each coefficient is
    corrected with one Borromean move per unit of difference.
    """
    if target.n != lam.n:
        raise ValueError(f"target is for n = {target.n} but the linking matrix has n = {lam.n}")
    F = base_surface_system(lam) if base is None else base
    if derive_linking_matrix(F) != lam:
        raise SurfaceSystemError("base surface system does not have the requested linking matrix")
    current = raw_triple_linking(F)
    if lam.n < 3 or classes_equal(lam, current, target):
        return F, []
    moves = []
    for t, have, want in zip(triples(lam.n), current.coeffs, target.coeffs):
        delta = want - have
        s = 1 if delta > 0 else -1
        for _ in range(abs(delta)):
            F = borromean_move(F, t.i, t.j, t.k, s)
            moves.append(Move(t.i, t.j, t.k, s))
    return F, moves
