"""Bit-exact JSON interchange format for complex matrices.

A matrix file is a JSON object ``{"dim": n, "re": [[...]], "im": [[...]]}``
with ``re`` and ``im`` both n x n row-major arrays of reals. Floats are
serialized with Python's shortest round-trip repr, so a save/load cycle
reproduces the matrix bit for bit.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import numpy as np

PathLike = Union[str, Path]


def save_matrix(path: PathLike, mat: np.ndarray) -> None:
    m = np.asarray(mat, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    payload = {
        "dim": m.shape[0],
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def load_matrix(path: PathLike) -> np.ndarray:
    """Read a matrix file, rejecting mismatched shapes."""
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, dict):
        raise ValueError("matrix file must contain a JSON object")
    for key in ("dim", "re", "im"):
        if key not in payload:
            raise ValueError(f"matrix file is missing key {key!r}")
    n = payload["dim"]
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"dim must be a positive integer, got {n!r}")
    re = np.asarray(payload["re"], dtype=float)
    im = np.asarray(payload["im"], dtype=float)
    if re.shape != (n, n) or im.shape != (n, n):
        raise ValueError(
            f"re/im shapes {re.shape}/{im.shape} do not match dim {n}"
        )
    return re + 1j * im
