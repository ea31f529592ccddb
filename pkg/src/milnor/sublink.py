"""Dropping a component: the induced surjection M(L) -> M(L')."""
from __future__ import annotations

from math import comb

from .alternating import AltVector, basis_position, triples
from .linalg import solve_in_column_lattice
from .quotient import (
    CheckReport,
    LinkingMatrix,
    presentation_matrix,
    relator,
    relator_pairs,
)

__all__ = ["delete_component", "project", "relabel", "verify_surjection"]


def _check_component(n: int, c: int) -> None:
    if n < 4:
        raise ValueError(f"deleting a component needs n >= 4, got n = {n}")
    if not 1 <= c <= n:
        raise ValueError(f"component {c} out of range 1..{n}")


def relabel(index: int, c: int) -> int:
    """Index of component ``index`` after component ``c`` is removed."""
    if index == c:
        raise ValueError(f"component {c} is the one being deleted")
    return index - 1 if index > c else index


def delete_component(lam: LinkingMatrix, c: int) -> LinkingMatrix:
    _check_component(lam.n, c)
    keep = [i for i in range(lam.n) if i != c - 1]
    return LinkingMatrix.from_rows([[lam.rows[i][j] for j in keep] for i in keep])


def project(v: AltVector, c: int) -> AltVector:
    """Send X[i,j,k] to its relabelled copy if c is not among i, j, k, else to 0."""
    _check_component(v.n, c)
    m = v.n - 1
    out = [0] * comb(m, 3)
    for t, coeff in zip(triples(v.n), v.coeffs):
        if coeff and c not in t:
            out[basis_position(tuple(relabel(x, c) for x in t), m)] += coeff
    return AltVector(m, tuple(out))


def verify_surjection(lam: LinkingMatrix, c: int) -> CheckReport:
    """Check that every projected relator of ``lam`` lies in V(lam with c deleted)."""
    _check_component(lam.n, c)
    sub = delete_component(lam, c)
    P = presentation_matrix(sub)
    report = CheckReport(f"projection dropping component {c}")
    for j, k in relator_pairs(lam.n):
        image = project(relator(lam, j, k), c)
        ok = image.is_zero() or solve_in_column_lattice(P, list(image.coeffs)) is not None
        report.record(ok, f"image of v[{j},{k}] = {image} not in V")
    return report
