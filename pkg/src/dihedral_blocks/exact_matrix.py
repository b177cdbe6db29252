"""Exact bulk products of cyclotomic-integer matrices with numpy.

Values are integer coefficient arrays over the power basis of Z[zeta_{2^L}];
products go through float64 BLAS, exact because every partial sum stays an
integer below 2^53 (checked before multiplying).
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .cyclotomic import Cyc


def to_array(rows: Sequence[Sequence[Cyc]], level: int):
    """Stack rows of cyclotomic integers into an int64 array (rows, cols, 2^(level-1))."""
    return np.array(
        [[Cyc.coerce(v).at_level(level).coeffs for v in row] for row in rows],
        dtype=np.int64,
    )


def conj_array(arr):
    """Complex conjugation applied coordinatewise along the last axis."""
    out = np.zeros_like(arr)
    out[..., 0] = arr[..., 0]
    # conj(zeta^q) = zeta^-q = -zeta^(L-q) for 0 < q < L
    out[..., 1:] = -arr[..., :0:-1]
    return out


def gram(A, B, weights=None):
    """G[i, j] = sum_c w_c A[i, c] * conj(B[j, c]) in Z[zeta], as (I, J, L) ints.

    The matrix products run in float64, which is exact here because every
    partial sum is an integer bounded by ``max|A| max|B| C`` < 2^53 (checked).
    """
    I, C, L = A.shape
    J = B.shape[0]
    if weights is not None:
        A = A * np.asarray(weights, dtype=np.int64)[None, :, None]
    Bc = conj_array(B)
    bound = int(np.abs(A).max(initial=0)) * int(np.abs(B).max(initial=0)) * C * L
    if bound >= 2**53:
        raise OverflowError("entries too large for an exact float64 product")
    Ap = np.ascontiguousarray(A.transpose(0, 2, 1).reshape(I * L, C), dtype=np.float64)
    Bf = Bc.astype(np.float64)
    out = np.zeros((I, J, L), dtype=np.int64)
    for q in range(L):
        prod = np.rint(Ap @ np.ascontiguousarray(Bf[:, :, q].T)).astype(np.int64)
        prod = prod.reshape(I, L, J).transpose(0, 2, 1)
        # zeta^p * zeta^q = zeta^(p+q), wrapping with a sign flip past L
        out[:, :, q:] += prod[:, :, : L - q]
        if q:
            out[:, :, :q] -= prod[:, :, L - q :]
    return out
