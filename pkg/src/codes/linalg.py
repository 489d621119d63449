"""Dense linear algebra over F_q.

``rref`` works on Python row lists with the field's lookup tables; it is the
hot path of Gaussian-elimination decoding and of information-set selection.
The products are numpy-vectorized through ``FieldSpec.reduce_sum``.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from src.codes.exceptions import ParameterError
from src.codes.gf import FieldSpec, IntArray


def rref(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Pivots are taken column by column, choosing the first row (at or below the
    current rank) with a nonzero entry. Pivot rows are scaled to a leading 1.

    Args:
        field: The field the entries live in.
        rows: Matrix rows; not modified.
        ncols: Only the first ``ncols`` columns may hold pivots (the rest are
            carried along, e.g. the constant column of an augmented system).

    Returns:
        The reduced rows (pivot rows first) and the pivot column of each pivot row.
    """
    mul, sub, inv = field.mul_lut, field.sub_lut, field.inv_lut
    matrix = [list(row) for row in rows]
    if not matrix:
        return matrix, []
    width = len(matrix[0])
    ncols = width if ncols is None else ncols
    nrows = len(matrix)
    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        found = next((i for i in range(rank, nrows) if matrix[i][col]), None)
        if found is None:
            continue
        matrix[rank], matrix[found] = matrix[found], matrix[rank]
        pivot_row = matrix[rank]
        lead = pivot_row[col]
        if lead != 1:
            scale = mul[inv[lead]]
            pivot_row = [scale[x] for x in pivot_row]
            matrix[rank] = pivot_row
        for i in range(nrows):
            factor = matrix[i][col]
            if i == rank or not factor:
                continue
            by = mul[factor]
            matrix[i] = [sub[a][by[b]] for a, b in zip(matrix[i], pivot_row, strict=True)]
        pivots.append(col)
        rank += 1
    return matrix, pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(field, rows)[1])


def matmul(field: FieldSpec, a: npt.ArrayLike, b: npt.ArrayLike) -> IntArray:
    """Matrix product ``a @ b`` over F_q."""
    left = np.asarray(a, dtype=np.int64)
    right = np.asarray(b, dtype=np.int64)
    if left.ndim != 2 or right.ndim != 2 or left.shape[1] != right.shape[0]:
        raise ParameterError(
            "Incompatible matrix shapes",
            context={"left": left.shape, "right": right.shape},
        )
    products = field.mul_table[left[:, :, None], right[None, :, :]]
    return field.reduce_sum(products, axis=1)


def matvec(field: FieldSpec, a: npt.ArrayLike, x: npt.ArrayLike) -> IntArray:
    """``a @ x`` for a column vector ``x``."""
    return matmul(field, a, np.asarray(x, dtype=np.int64)[:, None])[:, 0]


def vecmat(field: FieldSpec, x: npt.ArrayLike, a: npt.ArrayLike) -> IntArray:
    """``x @ a`` for a row vector ``x``."""
    return matmul(field, np.asarray(x, dtype=np.int64)[None, :], a)[0]


def format_matrix(matrix: npt.ArrayLike) -> str:
    """Dense text grid, one row per line, right-aligned columns."""
    array = np.asarray(matrix, dtype=np.int64)
    if array.size == 0:
        return ""
    width = len(str(int(array.max())))
    return "\n".join(" ".join(f"{int(v):>{width}}" for v in row) for row in array)
