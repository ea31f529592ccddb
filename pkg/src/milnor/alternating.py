"""Alternating 3-tensors Z^n ^ Z^n ^ Z^n with basis X[i,j,k], i < j < k.

Component indices are 1-based everywhere in the public interface.  The basis
is ordered lexicographically on (i, j, k).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple, Optional, Sequence

__all__ = [
    "TripleIndex",
    "AltVector",
    "canonicalize",
    "basis_position",
    "triple_at",
    "triples",
    "dimension",
    "unit",
    "parse_alt_vector",
]


class TripleIndex(NamedTuple):
    i: int
    j: int
    k: int


def dimension(n: int) -> int:
    return comb(n, 3)


def _check_range(n, *indices):
    for x in indices:
        if not 1 <= x <= n:
            raise ValueError(f"index {x} out of range 1..{n}")


def canonicalize(i: int, j: int, k: int, n: int) -> Optional[tuple[TripleIndex, int]]:
    """Sort (i, j, k) and return it with the sign of the sorting permutation.

    Returns None when two indices coincide, since then X[i,j,k] = 0.
    """
    _check_range(n, i, j, k)
    if i == j or j == k or i == k:
        return None
    sign = 1
    a, b, c = i, j, k
    if a > b:
        a, b, sign = b, a, -sign
    if b > c:
        b, c, sign = c, b, -sign
    if a > b:
        a, b, sign = b, a, -sign
    return TripleIndex(a, b, c), sign


def basis_position(t: TripleIndex, n: int) -> int:
    i, j, k = t
    if not 1 <= i < j < k <= n:
        raise ValueError(f"{tuple(t)} is not a canonical triple for n = {n}")
    # triples with smaller first index, then smaller second index, then smaller third
    return (comb(n, 3) - comb(n - i + 1, 3)
            + comb(n - i, 2) - comb(n - j + 1, 2)
            + (k - j - 1))


@lru_cache(maxsize=None)
def triples(n: int) -> tuple[TripleIndex, ...]:
    """All canonical triples for ``n`` components, in basis order."""
    return tuple(TripleIndex(*t) for t in combinations(range(1, n + 1), 3))


def triple_at(position: int, n: int) -> TripleIndex:
    return triples(n)[position]


_TERM = re.compile(r"([+-]?\d+)\*X\[(\d+),(\d+),(\d+)\]")


@dataclass(frozen=True)
class AltVector:
    """Integer combination of the basis vectors X[i,j,k] for ``n`` components."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != comb(self.n, 3):
            raise ValueError(
                f"an alternating vector for n = {self.n} has {comb(self.n, 3)} "
                f"coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, n: int) -> "AltVector":
        return cls(n, (0,) * comb(n, 3))

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence[int]) -> "AltVector":
        return cls(n, tuple(int(c) for c in coeffs))

    def _same_n(self, other: "AltVector") -> None:
        if other.n != self.n:
            raise ValueError(f"cannot combine vectors for n = {self.n} and n = {other.n}")

    def __add__(self, other: "AltVector") -> "AltVector":
        if not isinstance(other, AltVector):
            return NotImplemented
        self._same_n(other)
        return AltVector(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AltVector") -> "AltVector":
        if not isinstance(other, AltVector):
            return NotImplemented
        self._same_n(other)
        return AltVector(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "AltVector":
        return AltVector(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, c: int) -> "AltVector":
        if not isinstance(c, int):
            return NotImplemented
        return AltVector(self.n, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, t) -> int:
        """Coefficient of X[i,j,k]; non-canonical orders pick up the permutation sign."""
        i, j, k = t
        c = canonicalize(i, j, k, self.n)
        if c is None:
            return 0
        idx, sign = c
        return sign * self.coeffs[basis_position(idx, self.n)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> list[tuple[TripleIndex, int]]:
        return [(t, c) for t, c in zip(triples(self.n), self.coeffs) if c]

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        return " ".join(f"{c:+d}*X[{t.i},{t.j},{t.k}]" for t, c in terms)


def unit(i: int, j: int, k: int, n: int) -> AltVector:
    """The vector X[i,j,k]; zero when an index repeats."""
    c = canonicalize(i, j, k, n)
    coeffs = [0] * comb(n, 3)
    if c is not None:
        t, sign = c
        coeffs[basis_position(t, n)] = sign
    return AltVector(n, tuple(coeffs))


def parse_alt_vector(text: str, n: int) -> AltVector:
    """Inverse of ``str(AltVector)``.

    Terms may use any index order (``-1*X[2,1,3]`` equals ``+1*X[1,2,3]``)
    and repeated triples accumulate.
    """
    body = text.strip()
    coeffs = [0] * comb(n, 3)
    if body == "0" or body == "":
        return AltVector(n, tuple(coeffs))
    pos = 0
    for token in body.split():
        m = _TERM.fullmatch(token)
        if m is None:
            raise ValueError(f"malformed term {token!r} at offset {body.find(token, pos)}")
        pos = body.find(token, pos) + len(token)
        c, i, j, k = (int(g) for g in m.groups())
        canon = canonicalize(i, j, k, n)
        if canon is None:
            continue
        t, sign = canon
        coeffs[basis_position(t, n)] += sign * c
    return AltVector(n, tuple(coeffs))
