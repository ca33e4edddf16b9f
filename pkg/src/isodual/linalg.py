"""Dense exact linear algebra over a :class:`FieldSpec`.

Matrices hold integer element codes in a 2-D ``int64`` array.  Row
reduction is Gauss-Jordan with the first nonzero entry as pivot, scanning
columns left to right, so the reduced form is canonical.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import FieldMismatch, FieldSpec


class NoSolution(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MatGF:
    field: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.order):
            raise ValueError("entry outside the field")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "MatGF":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatGF":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatGF)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __repr__(self) -> str:
        return f"MatGF({self.field!r}, {self.entries.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    @property
    def T(self) -> "MatGF":
        return MatGF(self.field, self.entries.T)

    def __matmul__(self, other: "MatGF") -> "MatGF":
        return matmul(self, other)

    def scale_columns(self, x: Sequence[int]) -> "MatGF":
        """``self @ diag(x)``."""
        x = np.asarray(x, dtype=np.int64)
        return MatGF(self.field, self.field.vmul(self.entries, x[None, :]))

    def permute_columns(self, perm: Sequence[int]) -> "MatGF":
        return MatGF(self.field, self.entries[:, list(perm)])

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.tolist()}

    def to_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.tolist())
        return buf.getvalue()


def matrix_from_dict(field: FieldSpec, d: dict) -> MatGF:
    ents = np.asarray(d["entries"], dtype=np.int64).reshape(int(d["rows"]), int(d["cols"]))
    return MatGF(field, ents)


def matmul(A: MatGF, B: MatGF) -> MatGF:
    if A.field != B.field:
        raise FieldMismatch("matrices over different fields")
    if A.cols != B.rows:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    F = A.field
    out = np.zeros((A.rows, B.cols), dtype=np.int64)
    a, b = A.entries, B.entries
    for t in range(A.cols):
        out = F.vadd(out, F.vmul(a[:, t, None], b[None, t, :]))
    return MatGF(F, out)


def _rref_array(F: FieldSpec, R: np.ndarray, ncols: int | None = None):
    """In-place Gauss-Jordan on ``R``; pivots searched in the first ``ncols``."""
    nrows = R.shape[0]
    ncols = R.shape[1] if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = F.vmul(R[r], F.inv(lead))
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if others.size:
            factors = R[others, c]
            R[others] = F.vsub(R[others], F.vmul(factors[:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rref(M: MatGF) -> tuple[MatGF, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns of ``M``."""
    R, pivots = _rref_array(M.field, M.entries.copy())
    return MatGF(M.field, R), len(pivots), pivots


def rank(M: MatGF) -> int:
    return rref(M)[1]


def row_basis(M: MatGF) -> MatGF:
    R, rk, _ = rref(M)
    return MatGF(M.field, R.entries[:rk])


def _nullspace_from_rref(F: FieldSpec, R: np.ndarray, pivots: list[int], ncols: int) -> np.ndarray:
    free = [c for c in range(ncols) if c not in set(pivots)]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        N[i, f] = 1
        for row, pc in enumerate(pivots):
            N[i, pc] = F.neg(int(R[row, f]))
    return N


def nullspace(M: MatGF) -> MatGF:
    """Basis rows N of the right kernel: ``M @ N.T == 0``."""
    F = M.field
    R, pivots = _rref_array(F, M.entries.copy())
    N = _nullspace_from_rref(F, R, pivots, M.cols)
    return MatGF(F, N.reshape(len(N), M.cols))


def rowspace_equal(A: MatGF, B: MatGF) -> bool:
    if A.field != B.field or A.cols != B.cols:
        return False
    RA, ra, _ = rref(A)
    RB, rb, _ = rref(B)
    return ra == rb and bool(np.array_equal(RA.entries[:ra], RB.entries[:rb]))


def solve_linear(A: MatGF, b: Sequence[int]) -> tuple[np.ndarray, MatGF]:
    """One solution of ``A x = b`` plus a basis of the solutions of ``A x = 0``.

    Raises:
        NoSolution: if the system is inconsistent.
    """
    F = A.field
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if b.size != A.rows:
        raise ValueError("right-hand side has the wrong length")
    aug = np.concatenate([A.entries, b[:, None]], axis=1)
    R, pivots = _rref_array(F, aug, ncols=A.cols)
    rk = len(pivots)
    if np.any(R[rk:, -1] != 0):
        raise NoSolution("inconsistent system")
    x = np.zeros(A.cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, -1]
    N = _nullspace_from_rref(F, R[:, :-1], pivots, A.cols)
    return x, MatGF(F, N.reshape(len(N), A.cols))


def matvec(A: MatGF, x: Sequence[int]) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64).reshape(-1, 1)
    return matmul(A, MatGF(A.field, x)).entries[:, 0]
