"""Reading and writing linking matrices, surface-system data and target vectors.

Linking matrix text files hold ``n`` on the first line followed by ``n``
rows of whitespace-separated integers.  The JSON form is
``{"n": 5, "entries": [[...], ...]}``.  Surface-system files are JSON:
``{"n": 3, "words": ["x2 x3^-1", ...], "triple_points": [{"ijk": [1,2,3], "t": 1}]}``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .alternating import AltVector, parse_alt_vector
from .quotient import LinkingMatrix, LinkingMatrixError
from .surface import ClaspWordError, SurfaceSystemData, SurfaceSystemError, parse_clasp_word

__all__ = [
    "FormatError",
    "parse_linking_matrix",
    "linking_matrix_to_text",
    "linking_matrix_to_json",
    "load_linking_matrix",
    "surface_system_from_json",
    "surface_system_to_json",
    "load_surface_system",
    "save_surface_system",
    "parse_target",
    "load_target",
]

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Malformed or invalid input file."""


def _matrix_from_json(data) -> LinkingMatrix:
    if not isinstance(data, dict) or "entries" not in data:
        raise FormatError('JSON linking matrix needs an "entries" field')
    entries = data["entries"]
    n = data.get("n", len(entries))
    if len(entries) != n:
        raise FormatError(f'"n" is {n} but "entries" has {len(entries)} rows')
    try:
        return LinkingMatrix.from_rows(entries)
    except (TypeError, ValueError) as e:
        raise FormatError(str(e)) from e


def parse_linking_matrix(text: str) -> LinkingMatrix:
    """Parse the plain-text or JSON linking matrix format.

    Errors name the line and column (1-based) of the offending entry.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise FormatError(f"invalid JSON: {e}") from e
        return _matrix_from_json(data)

    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, toks) for no, toks in lines if toks]
    if not lines:
        raise FormatError("empty linking matrix file")
    head_no, head = lines[0]
    if len(head) != 1 or not head[0].lstrip("-").isdigit() or int(head[0]) < 1:
        raise FormatError(f"line {head_no}: expected the component count n, got {' '.join(head)!r}")
    n = int(head[0])
    body = lines[1:]
    if len(body) != n:
        raise FormatError(f"expected {n} matrix rows after line {head_no}, found {len(body)}")
    rows = []
    for no, toks in body:
        if len(toks) != n:
            raise FormatError(f"line {no}: expected {n} entries, found {len(toks)}")
        row = []
        for col, tok in enumerate(toks, 1):
            try:
                row.append(int(tok))
            except ValueError:
                raise FormatError(f"line {no}, column {col}: {tok!r} is not an integer") from None
        rows.append(row)
    for i in range(n):
        if rows[i][i]:
            raise FormatError(
                f"line {body[i][0]}, column {i + 1}: diagonal entry is {rows[i][i]}, expected 0")
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise FormatError(
                    f"line {body[j][0]}, column {i + 1}: entry {rows[j][i]} does not match "
                    f"{rows[i][j]} at line {body[i][0]}, column {j + 1} (matrix must be symmetric)")
    return LinkingMatrix.from_rows(rows)


def linking_matrix_to_text(lam: LinkingMatrix) -> str:
    return f"{lam.n}\n" + "\n".join(" ".join(str(x) for x in r) for r in lam.rows) + "\n"


def linking_matrix_to_json(lam: LinkingMatrix) -> dict:
    return {"n": lam.n, "entries": lam.to_lists()}


def load_linking_matrix(path: PathLike) -> LinkingMatrix:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    try:
        return parse_linking_matrix(text)
    except LinkingMatrixError as e:
        raise FormatError(str(e)) from e


def surface_system_from_json(data) -> SurfaceSystemData:
    if not isinstance(data, dict) or "words" not in data:
        raise FormatError('surface system JSON needs a "words" field')
    words = data["words"]
    n = data.get("n", len(words))
    if len(words) != n:
        raise FormatError(f'"n" is {n} but {len(words)} words were given')
    parsed = []
    for k, w in enumerate(words, 1):
        try:
            parsed.append(parse_clasp_word(w))
        except ClaspWordError as e:
            raise FormatError(f"word w_{k}: {e}") from e
    tp = {}
    for entry in data.get("triple_points", []):
        try:
            key = tuple(int(x) for x in entry["ijk"])
            tp[key] = tp.get(key, 0) + int(entry["t"])
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError(f"bad triple point entry {entry!r}") from e
        if len(key) != 3:
            raise FormatError(f"triple point {entry!r} needs three indices")
    try:
        return SurfaceSystemData(n, tuple(parsed), tp)
    except SurfaceSystemError as e:
        raise FormatError(str(e)) from e


def surface_system_to_json(F: SurfaceSystemData) -> dict:
    return {
        "n": F.n,
        "words": [str(w) for w in F.words],
        "triple_points": [{"ijk": list(t), "t": v} for t, v in sorted(F.triple_points.items())],
    }


def load_surface_system(path: PathLike) -> SurfaceSystemData:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON in {path}: {e}") from e
    return surface_system_from_json(data)


def save_surface_system(F: SurfaceSystemData, path: PathLike) -> None:
    Path(path).write_text(json.dumps(surface_system_to_json(F), indent=2) + "\n")


def parse_target(text: str, n: int) -> AltVector:
    """Target vector as text (``+1*X[1,2,3] -2*X[1,3,4]``) or JSON ``{"n": .., "coeffs": [..]}``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            coeffs = [int(c) for c in data["coeffs"]]
            vn = int(data.get("n", n))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise FormatError(f"bad target vector JSON: {e}") from e
        if vn != n:
            raise FormatError(f"target vector is for n = {vn}, linking matrix has n = {n}")
        try:
            return AltVector.from_coeffs(n, coeffs)
        except ValueError as e:
            raise FormatError(str(e)) from e
    try:
        return parse_alt_vector(text, n)
    except ValueError as e:
        raise FormatError(f"bad target vector: {e}") from e


def load_target(path: PathLike, n: int) -> AltVector:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    return parse_target(text, n)
