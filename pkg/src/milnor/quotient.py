"""Total Milnor quotients M(L) = Z^C(n,3) / V(L) of a linking matrix L.

V is spanned by the relators v_jk = sum_i L[i,k] X[i,j,k] over ordered pairs
j != k.  The presentation matrix has one column per relator, ordered
lexicographically by (j, k).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .alternating import AltVector, basis_position, canonicalize, triples, unit
from .linalg import (
    IntMatrix,
    Mod2Matrix,
    SmithForm,
    integer_rank,
    rank_mod2,
    smith_normal_form,
    solve_in_column_lattice,
)

__all__ = [
    "LinkingMatrix",
    "LinkingMatrixError",
    "AbelianGroup",
    "MilnorClass",
    "CheckReport",
    "relator",
    "relator_pairs",
    "presentation_matrix",
    "quotient_group",
    "rank",
    "mod2_rank",
    "rank_lower_bound",
    "coset_reduce",
    "classes_equal",
    "verify_dependencies",
    "unit_classes_trivial",
]


class LinkingMatrixError(ValueError):
    """A matrix that is not symmetric with zero diagonal, or is malformed."""


@dataclass(frozen=True)
class LinkingMatrix:
    """Symmetric integer matrix with zero diagonal.

    ``rows`` is 0-based storage; :meth:`lk` takes 1-based component indices.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for i, r in enumerate(self.rows):
            if len(r) != n:
                raise LinkingMatrixError(f"row {i + 1} has {len(r)} entries, expected {n}")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise LinkingMatrixError(
                    f"diagonal entry ({i + 1},{i + 1}) is {self.rows[i][i]}, expected 0")
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise LinkingMatrixError(
                        f"entry ({i + 1},{j + 1}) = {self.rows[i][j]} but "
                        f"({j + 1},{i + 1}) = {self.rows[j][i]}; matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LinkingMatrix":
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def zeros(cls, n: int) -> "LinkingMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_upper(cls, n: int, upper: Sequence[int]) -> "LinkingMatrix":
        """Build from the strict upper triangle listed row by row."""
        if len(upper) != comb(n, 2):
            raise LinkingMatrixError(f"need {comb(n, 2)} upper-triangle entries, got {len(upper)}")
        a = [[0] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i + 1, n):
                a[i][j] = a[j][i] = int(next(it))
        return cls.from_rows(a)

    @property
    def n(self) -> int:
        return len(self.rows)

    def lk(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def upper(self) -> tuple[int, ...]:
        return tuple(self.rows[i][j] for i in range(self.n) for j in range(i + 1, self.n))

    def reduce_mod2(self) -> "LinkingMatrix":
        return LinkingMatrix(tuple(tuple(x % 2 for x in r) for r in self.rows))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d_1 + ... + Z/d_r with 1 < d_1 | d_2 | ... | d_r."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    @classmethod
    def from_diagonal(cls, d: Sequence[int], generators: int) -> "AbelianGroup":
        """Cokernel of a matrix with ``generators`` rows and Smith diagonal ``d``."""
        nonzero = [x for x in d if x]
        return cls(tuple(x for x in nonzero if x > 1), generators - len(nonzero))

    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    def mod2_rank(self) -> int:
        """Dimension of the group tensored with Z/2."""
        return self.free_rank + sum(1 for d in self.invariant_factors if d % 2 == 0)

    def __str__(self) -> str:
        if self.is_trivial():
            return "trivial"
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts)


def _require_n(lam: LinkingMatrix) -> None:
    if lam.n < 3:
        raise LinkingMatrixError(f"need at least 3 components, got {lam.n}")


def relator(lam: LinkingMatrix, j: int, k: int) -> AltVector:
    """v_jk = sum_i lk(i, k) X[i,j,k]."""
    n = lam.n
    if not (1 <= j <= n and 1 <= k <= n):
        raise ValueError(f"relator indices ({j},{k}) out of range 1..{n}")
    if j == k:
        raise ValueError(f"relator needs j != k, got j = k = {j}")
    coeffs = [0] * comb(n, 3)
    for i in range(1, n + 1):
        c = lam.lk(i, k)
        if not c:
            continue
        canon = canonicalize(i, j, k, n)
        if canon is None:
            continue
        t, sign = canon
        coeffs[basis_position(t, n)] += sign * c
    return AltVector(n, tuple(coeffs))


def relator_pairs(n: int) -> list[tuple[int, int]]:
    """Ordered pairs (j, k), j != k, in presentation-column order."""
    return [(j, k) for j in range(1, n + 1) for k in range(1, n + 1) if j != k]


@lru_cache(maxsize=256)
def presentation_matrix(lam: LinkingMatrix) -> IntMatrix:
    _require_n(lam)
    cols = [relator(lam, j, k).coeffs for j, k in relator_pairs(lam.n)]
    return IntMatrix.from_columns(cols, comb(lam.n, 3))


@lru_cache(maxsize=256)
def _smith(lam: LinkingMatrix) -> SmithForm:
    return smith_normal_form(presentation_matrix(lam))


def quotient_group(lam: LinkingMatrix) -> AbelianGroup:
    P = presentation_matrix(lam)
    return AbelianGroup.from_diagonal(smith_normal_form(P, transforms=False).d, P.rows)


def rank(lam: LinkingMatrix) -> int:
    """Free rank of M(lam), i.e. C(n,3) minus the rank of V."""
    P = presentation_matrix(lam)
    return P.rows - integer_rank(P)


def mod2_rank(lam: LinkingMatrix) -> int:
    """Dimension over Z/2 of M(lam) tensor Z/2; only depends on lam mod 2."""
    _require_n(lam)
    P = presentation_matrix(lam.reduce_mod2())
    return P.rows - rank_mod2(Mod2Matrix.from_rows(P.to_rows(), P.cols))


def rank_lower_bound(n: int) -> int:
    """(n^3 - 9n^2 + 20n - 6) / 6, a lower bound on rank M for n >= 6.

    The numerator is (m - 1) m (m + 1) - 6m with m = n - 3, so it is always
    divisible by 6.
    """
    if n < 6:
        raise ValueError(f"the rank bound holds for n >= 6, got n = {n}")
    q, r = divmod(n ** 3 - 9 * n ** 2 + 20 * n - 6, 6)
    assert r == 0
    return q


def _check_vector(lam: LinkingMatrix, v: AltVector) -> None:
    if v.n != lam.n:
        raise ValueError(f"vector is for n = {v.n} but the linking matrix has n = {lam.n}")


def coset_reduce(lam: LinkingMatrix, v: AltVector) -> AltVector:
    """Canonical representative of the class of ``v`` in M(lam).

    Torsion coordinates in Smith coordinates are reduced into [0, d_i), free
    coordinates are kept, and the result is mapped back.
    """
    _require_n(lam)
    _check_vector(lam, v)
    snf = _smith(lam)
    y = snf.left.apply(v.coeffs)
    for i, di in enumerate(snf.d):
        if di:
            y[i] %= di
    return AltVector(lam.n, tuple(snf.left_inv.apply(y)))


def classes_equal(lam: LinkingMatrix, v: AltVector, w: AltVector) -> bool:
    """True iff v - w lies in V(lam)."""
    _require_n(lam)
    _check_vector(lam, v)
    _check_vector(lam, w)
    diff = v - w
    if diff.is_zero():
        return True
    return solve_in_column_lattice(presentation_matrix(lam), list(diff.coeffs)) is not None


@dataclass(frozen=True)
class MilnorClass:
    """A class in M(lam), stored as a raw representative.

    Equality is equality in the quotient, not of representatives.
    """

    lam: LinkingMatrix
    rep: AltVector

    def __post_init__(self):
        _check_vector(self.lam, self.rep)

    def canonical(self) -> AltVector:
        return coset_reduce(self.lam, self.rep)

    def is_zero(self) -> bool:
        return classes_equal(self.lam, self.rep, AltVector.zero(self.lam.n))

    def __eq__(self, other):
        if not isinstance(other, MilnorClass):
            return NotImplemented
        return self.lam == other.lam and classes_equal(self.lam, self.rep, other.rep)

    def __hash__(self):
        return hash((self.lam, self.canonical()))

    def __add__(self, other: "MilnorClass") -> "MilnorClass":
        if self.lam != other.lam:
            raise ValueError("classes live over different linking matrices")
        return MilnorClass(self.lam, self.rep + other.rep)


@dataclass
class CheckReport:
    """Outcome of a batch of exact identity checks."""

    title: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def __str__(self) -> str:
        head = f"{self.title}: {self.checked - len(self.failures)}/{self.checked} hold"
        return "\n".join([head] + [f"  FAILED {f}" for f in self.failures])


def verify_dependencies(lam: LinkingMatrix) -> CheckReport:
    """Check sum_k v_jk = 0 for every j and sum_j lk(j,k) v_jk = 0 for every k."""
    _require_n(lam)
    n = lam.n
    zero = AltVector.zero(n)
    rel = {(j, k): relator(lam, j, k) for j, k in relator_pairs(n)}
    report = CheckReport("relator dependencies")
    for j in range(1, n + 1):
        total = sum((rel[j, k] for k in range(1, n + 1) if k != j), zero)
        report.record(total == zero, f"sum over k of v[{j},k] = {total}")
    for k in range(1, n + 1):
        total = sum((lam.lk(j, k) * rel[j, k] for j in range(1, n + 1) if j != k), zero)
        report.record(total == zero, f"sum over j of lk(j,{k}) v[j,{k}] = {total}")
    return report


def unit_classes_trivial(lam: LinkingMatrix) -> bool:
    """True iff every basis vector X[i,j,k] is zero in M(lam)."""
    return all(coset_reduce(lam, unit(*t, lam.n)).is_zero() for t in triples(lam.n))
