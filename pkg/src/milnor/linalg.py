"""Exact integer and GF(2) matrix algebra.

Everything over the integers uses Python ints, so nothing overflows.  GF(2)
matrices pack each row into a single int and eliminate with XOR.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "IntMatrix",
    "SmithForm",
    "Mod2Matrix",
    "smith_normal_form",
    "invariant_factors",
    "integer_rank",
    "rank_mod2",
    "reduce_mod2",
    "solve_in_column_lattice",
    "determinant",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, stored row-major.

    ``rows`` and ``cols`` are kept explicitly so that 0 x k and k x 0
    matrices keep their shape.
    """

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries for a "
                f"{self.rows}x{self.cols} matrix, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has length {len(r)}, expected {cols}")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise ValueError(f"column {j} has length {len(c)}, expected {rows}")
        return cls(rows, len(columns),
                   tuple(int(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.to_rows()
        bt = other.transpose().to_rows()
        return IntMatrix(self.rows, other.cols,
                         tuple(sum(x * y for x, y in zip(r, c)) for r in a for c in bt))

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not match {self.cols} columns")
        return [sum(x * y for x, y in zip(r, v)) for r in self.to_rows()]

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"<{self.rows}x{self.cols} matrix>"
        width = max(len(str(x)) for x in self.entries)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.to_rows())


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`.

    ``left @ M @ right`` is the rectangular diagonal matrix with diagonal
    ``d``.  ``left_inv`` is the inverse of ``left``; the transforms are None
    when they were not requested.
    """

    d: tuple[int, ...]
    left: Optional[IntMatrix] = None
    right: Optional[IntMatrix] = None
    left_inv: Optional[IntMatrix] = None

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x)


def _min_abs_nonzero(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        r = a[i]
        for j in range(t, cols):
            x = r[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M: IntMatrix, transforms: bool = True) -> SmithForm:
    """Smith normal form of an integer matrix.

    Pivoting always picks the nonzero entry of least absolute value, then
    clears the pivot row and column by division with remainder.  With
    ``transforms=False`` only the diagonal is computed, which is what rank
    and group computations need.
    """
    m, n = M.rows, M.cols
    a = M.to_rows()
    if transforms:
        u = IntMatrix.identity(m).to_rows()
        uinv = IntMatrix.identity(m).to_rows()
        v = IntMatrix.identity(n).to_rows()

    def swap_rows(p, q):
        a[p], a[q] = a[q], a[p]
        if transforms:
            u[p], u[q] = u[q], u[p]
            for r in uinv:
                r[p], r[q] = r[q], r[p]

    def swap_cols(p, q):
        for r in a:
            r[p], r[q] = r[q], r[p]
        if transforms:
            for r in v:
                r[p], r[q] = r[q], r[p]

    def add_row(dst, src, c):
        # row[dst] += c * row[src]
        rs, rd = a[src], a[dst]
        for j in range(n):
            if rs[j]:
                rd[j] += c * rs[j]
        if transforms:
            us, ud = u[src], u[dst]
            for j in range(m):
                if us[j]:
                    ud[j] += c * us[j]
            for r in uinv:
                if r[dst]:
                    r[src] -= c * r[dst]

    def add_col(dst, src, c):
        for r in a:
            if r[src]:
                r[dst] += c * r[src]
        if transforms:
            for r in v:
                if r[src]:
                    r[dst] += c * r[src]

    t = 0
    while t < min(m, n):
        best = _min_abs_nonzero(a, t, m, n)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot is left; promote it
                cand = min(
                    [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                )
                swap_rows(t, cand[1])
                swap_cols(t, cand[2])
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            # pivot does not divide the rest: fold that row in and keep reducing
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if transforms:
                u[t] = [-x for x in u[t]]
                for r in uinv:
                    r[t] = -r[t]
        t += 1

    d = tuple(a[i][i] for i in range(min(m, n)))
    if not transforms:
        return SmithForm(d)
    return SmithForm(d, IntMatrix.from_rows(u, m), IntMatrix.from_rows(v, n),
                     IntMatrix.from_rows(uinv, m))


def invariant_factors(M: IntMatrix) -> tuple[int, ...]:
    return smith_normal_form(M, transforms=False).d


def integer_rank(M: IntMatrix) -> int:
    """Rank over Q, by fraction-free elimination with exact integer division."""
    a = [r for r in M.to_rows() if any(r)]
    rank, prev = 0, 1
    for c in range(M.cols):
        piv = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p, pr = a[rank][c], a[rank]
        for i in range(rank + 1, len(a)):
            ri, f = a[i], a[i][c]
            # Bareiss step: every entry stays an integer
            a[i] = [(p * x - f * y) // prev for x, y in zip(ri, pr)]
        prev = p
        rank += 1
    return rank


def determinant(M: IntMatrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    a = M.to_rows()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class Mod2Matrix:
    """Matrix over GF(2); row ``i`` is the int ``bits[i]`` with column ``j`` at bit ``j``."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.bits)}")
        limit = 1 << self.cols
        if any(b < 0 or b >= limit for b in self.bits):
            raise ValueError(f"packed row has bits beyond column {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Mod2Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        packed = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            packed.append(sum(1 << j for j, x in enumerate(r) if x % 2))
        return cls(len(packed), cols, tuple(packed))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return (self.bits[i] >> j) & 1


def reduce_mod2(M: IntMatrix) -> Mod2Matrix:
    return Mod2Matrix.from_rows(M.to_rows(), M.cols)


def xor_basis_rank(vectors: Iterable[int]) -> int:
    """Rank over GF(2) of bit-packed vectors, by insertion into an echelon basis."""
    basis: dict[int, int] = {}
    for x in vectors:
        while x:
            h = x.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = x
                break
            x ^= b
    return len(basis)


def rank_mod2(M: Mod2Matrix) -> int:
    return xor_basis_rank(M.bits)


def solve_in_column_lattice(A: IntMatrix, b: Sequence[int]) -> Optional[list[int]]:
    """Integer solution of ``A x = b``, or None if ``b`` is outside the column lattice."""
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {A.rows} rows")
    snf = smith_normal_form(A)
    c = snf.left.apply(list(b))
    y = [0] * A.cols
    for i, ci in enumerate(c):
        di = snf.d[i] if i < len(snf.d) else 0
        if di == 0:
            if ci:
                return None
        else:
            q, r = divmod(ci, di)
            if r:
                return None
            y[i] = q
    return snf.right.apply(y)
