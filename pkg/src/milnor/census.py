"""Exhaustive census of Z/2-ranks of M(L) tensor Z/2 over all 0/1 linking matrices.

Matrix number ``c`` has its strict upper triangle (row-major, entry (1,2)
first) equal to the binary digits of ``c``, least significant bit first.
The hot loop never leaves GF(2): every relator column is a bitmask over the
C(n,3) generators and the rank comes from XOR-basis insertion.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterator, Optional

from .alternating import basis_position
from .linalg import xor_basis_rank
from .quotient import LinkingMatrix, quotient_group

__all__ = [
    "CensusResult",
    "enumerate_mod2_matrices",
    "matrix_from_counter",
    "census_mod2_rank",
    "run_census",
    "find_rank",
    "find_trivial_quotients",
    "format_portion",
]

MIN_N, MAX_N = 3, 8
PROGRESS_EVERY = 1 << 16


def _check_n(n: int) -> None:
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"census supports {MIN_N} <= n <= {MAX_N}, got n = {n}")


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def matrix_from_counter(n: int, counter: int) -> LinkingMatrix:
    _check_n(n)
    return LinkingMatrix.from_upper(n, [(counter >> b) & 1 for b in range(comb(n, 2))])


def enumerate_mod2_matrices(n: int) -> Iterator[LinkingMatrix]:
    """Every symmetric 0/1 matrix with zero diagonal, once each, in counter order."""
    _check_n(n)
    for c in range(1 << comb(n, 2)):
        yield matrix_from_counter(n, c)


@lru_cache(maxsize=None)
def _column_terms(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each relator column (j, k): (upper-triangle bit of pair {i,k}, mask of X[i,j,k])."""
    bit_of = {p: b for b, p in enumerate(_pairs(n))}
    cols = []
    for j in range(n):
        for k in range(n):
            if j == k:
                continue
            terms = []
            for i in range(n):
                if i in (j, k):
                    continue
                t = tuple(sorted((i + 1, j + 1, k + 1)))
                # signs vanish mod 2
                terms.append((bit_of[(min(i, k), max(i, k))], 1 << basis_position(t, n)))
            cols.append(tuple(terms))
    return tuple(cols)


def census_mod2_rank(n: int, counter: int) -> int:
    """mod-2 rank of M for matrix number ``counter`` (fast path)."""
    cols = []
    for terms in _column_terms(n):
        v = 0
        for b, mask in terms:
            if (counter >> b) & 1:
                v ^= mask
        cols.append(v)
    return comb(n, 3) - xor_basis_rank(cols)


def _histogram_range(n: int, start: int, stop: int) -> Counter:
    col_terms = _column_terms(n)
    gens = comb(n, 3)
    hist = Counter()
    for c in range(start, stop):
        basis = {}
        for terms in col_terms:
            v = 0
            for b, mask in terms:
                if (c >> b) & 1:
                    v ^= mask
            while v:
                h = v.bit_length() - 1
                w = basis.get(h)
                if w is None:
                    basis[h] = v
                    break
                v ^= w
        hist[gens - len(basis)] += 1
    return hist


@dataclass(frozen=True)
class CensusResult:
    n: int
    histogram: dict[int, int]
    total: int
    elapsed: float

    def to_json(self) -> dict:
        return {"n": self.n,
                "histogram": {str(r): c for r, c in sorted(self.histogram.items())},
                "total": self.total}

    @classmethod
    def from_json(cls, data: dict) -> "CensusResult":
        return cls(int(data["n"]), {int(r): int(c) for r, c in data["histogram"].items()},
                   int(data["total"]), float(data.get("elapsed", 0.0)))

    def min_rank(self) -> int:
        return min(r for r, c in self.histogram.items() if c)

    def format_table(self, columns: int = 7) -> str:
        """Rank / occurrences / portion rows, wrapped every ``columns`` ranks."""
        ranks = sorted(self.histogram)
        blocks = []
        for s in range(0, len(ranks), columns):
            chunk = ranks[s:s + columns]
            cells = [
                ["rank"] + [str(r) for r in chunk],
                ["occurrences"] + [str(self.histogram[r]) for r in chunk],
                ["portion"] + [format_portion(self.histogram[r], self.total) for r in chunk],
            ]
            width = max(len(x) for row in cells for x in row[1:])
            blocks.append("\n".join(
                row[0].ljust(12) + " | " + " ".join(x.rjust(width) for x in row[1:])
                for row in cells))
        return "\n\n".join(blocks)


def format_portion(count: int, total: int) -> str:
    """Two decimals; three below 0.01; one significant figure in e-notation below 0.001."""
    if count == 0:
        return "0"
    r = count / total
    if r >= 0.01:
        return f"{r:.2f}"
    if r >= 0.001:
        return f"{r:.3f}"
    return f"{r:.0e}"


def run_census(n: int, threads: int = 1,
               progress: Optional[Callable[[int, int], None]] = None) -> CensusResult:
    """Histogram of mod-2 ranks over all 2^C(n,2) matrices.

    With ``threads > 1`` contiguous counter ranges go to worker processes;
    the merged histogram does not depend on the split.
    """
    _check_n(n)
    if threads < 1:
        raise ValueError("threads must be at least 1")
    total = 1 << comb(n, 2)
    size = PROGRESS_EVERY if threads == 1 else max(1, min(PROGRESS_EVERY, total // (4 * threads)))
    chunks = [(s, min(s + size, total)) for s in range(0, total, size)]
    t0 = time.perf_counter()
    hist = Counter()
    done = 0
    if threads == 1 or len(chunks) == 1:
        for s, e in chunks:
            hist.update(_histogram_range(n, s, e))
            done += e - s
            if progress:
                progress(done, total)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(_histogram_range, n, s, e) for s, e in chunks]
            for (s, e), fut in zip(chunks, futures):
                hist.update(fut.result())
                done += e - s
                if progress and (done % PROGRESS_EVERY < e - s or done == total):
                    progress(done, total)
    elapsed = time.perf_counter() - t0
    full = {r: hist.get(r, 0) for r in range(comb(n, 3) + 1)}
    return CensusResult(n, full, total, elapsed)


def find_rank(n: int, r: int) -> list[LinkingMatrix]:
    """All 0/1 matrices whose mod-2 rank is exactly ``r``."""
    _check_n(n)
    return [matrix_from_counter(n, c) for c in range(1 << comb(n, 2))
            if census_mod2_rank(n, c) == r]


def find_trivial_quotients(n: int) -> list[LinkingMatrix]:
    """0/1 matrices with M trivial: mod-2 rank 0, then confirmed over Z."""
    return [lam for lam in find_rank(n, 0) if quotient_group(lam).is_trivial()]
