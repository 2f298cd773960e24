"""
Vectorised coefficient arrays for whole class functions.

A class function with values in Q(zeta_n) is packed into an integer array of
shape (classes, n) holding canonical numerators, plus one common positive
denominator. Products and Hermitian inner products are computed on these
arrays with numpy and reduced with the matrix form of ``reduction_table``.
"""

import math
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence, Tuple

import numpy as np

from src.cyclotomic.cyc import Cyc, reduction_table

# int64 products are exact while the operand magnitudes stay below this bound
_SAFE = 2 ** 62


@lru_cache(maxsize=None)
def reduction_matrix(n: int) -> np.ndarray:
    return np.array(reduction_table(n), dtype=np.int64)


@lru_cache(maxsize=None)
def _shift_index(n: int) -> np.ndarray:
    """idx[c, s] = (c - s) mod n."""
    ar = np.arange(n)
    return (ar[:, None] - ar[None, :]) % n


@lru_cache(maxsize=None)
def _sum_index(n: int) -> np.ndarray:
    """idx[c, s] = (s - c) mod n."""
    ar = np.arange(n)
    return (ar[None, :] - ar[:, None]) % n


def _as_object(a: np.ndarray) -> np.ndarray:
    return a.astype(object)


def _fits(*arrays: np.ndarray, factor: int = 1) -> bool:
    bound = factor
    for a in arrays:
        if a.dtype == object:
            return False
        bound *= int(np.abs(a).max()) + 1 if a.size else 1
    return bound < _SAFE


def pack(values: Sequence[Cyc], n: int) -> Tuple[np.ndarray, int]:
    """Pack values into (len(values), n) numerators over one denominator."""
    lifted = [v.lift(n) for v in values]
    den = reduce(lambda acc, v: acc * v.denominator // math.gcd(acc, v.denominator), lifted, 1)
    rows = [[c * (den // v.denominator) for c in v.numerators] for v in lifted]
    biggest = max((abs(c) for row in rows for c in row), default=0)
    dtype = np.int64 if biggest < 2 ** 31 else object
    arr = np.array(rows, dtype=dtype).reshape(len(values), n)
    return arr, den


def unpack(arr: np.ndarray, den: int, n: int) -> Tuple[Cyc, ...]:
    return tuple(Cyc.from_reduced(n, [int(x) for x in row], den) for row in arr)


def reduce_rows(raw: np.ndarray, n: int) -> np.ndarray:
    """Reduce raw exponent-indexed numerators (last axis length n) modulo Phi_n."""
    R = reduction_matrix(n)
    if raw.dtype == object or not _fits(raw, R, factor=n):
        return np.dot(raw.astype(object), R.astype(object))
    return raw @ R


def lift_array(arr: np.ndarray, n: int, m: int) -> np.ndarray:
    """Re-express packed numerators of conductor n in conductor m (n | m)."""
    if n == m:
        return arr
    step = m // n
    raw = np.zeros(arr.shape[:-1] + (m,), dtype=arr.dtype)
    raw[..., ::step] = arr
    return reduce_rows(raw, m)


def multiply(a: np.ndarray, b: np.ndarray, n: int) -> np.ndarray:
    """Pointwise product of two packed class functions (same shape)."""
    idx = _sum_index(n)
    if _fits(a, b, factor=n * n):
        raw = np.einsum("kc,kcs->ks", a, b[:, idx])
    else:
        ao, bo = _as_object(a), _as_object(b)
        raw = np.zeros(a.shape, dtype=object)
        for c in range(n):
            raw += ao[:, c:c + 1] * bo[:, idx[c]]
    return reduce_rows(raw, n)


def conjugate(a: np.ndarray, n: int) -> np.ndarray:
    """Complex conjugation of packed values."""
    return reduce_rows(a[..., (-np.arange(n)) % n], n)


def hermitian_products(
    f: np.ndarray,
    g: np.ndarray,
    weights: np.ndarray,
    n: int,
) -> np.ndarray:
    """
    Reduced numerators of sum_k w_k f_i(k) conj(g_j(k)) for all pairs.

    Args:
        f: (p, classes, n) packed numerators
        g: (q, classes, n) packed numerators
        weights: (classes,) integer class sizes
        n: conductor of both arrays

    Returns:
        (p, q, n) reduced numerators; divide by |G| times both denominators.
    """
    idx = _shift_index(n)
    w = weights.astype(np.int64)
    if _fits(f, g, w, factor=n * f.shape[1] + 1):
        fw = f * w[None, :, None]
        raw = np.einsum("ikc,jkcs->ijs", fw, g[:, :, idx], optimize=True)
    else:
        fo = _as_object(f) * _as_object(w)[None, :, None]
        go = _as_object(g)
        raw = np.zeros((f.shape[0], g.shape[0], n), dtype=object)
        for c in range(n):
            # raw[i, j, s] += sum_k fo[i, k, c] * go[j, k, (c - s) % n]
            raw += np.tensordot(fo[:, :, c], go[:, :, idx[c]], axes=([1], [1]))
    return reduce_rows(raw, n)


def rational_entries(reduced: np.ndarray, scale: int) -> np.ndarray:
    """
    Interpret reduced numerators as rationals divided by ``scale``.

    Returns an object array of Fractions, or raises ValueError if some entry
    is irrational.
    """
    if np.any(reduced[..., 1:] != 0):
        raise ValueError("irrational entry")
    flat = [Fraction(int(x), scale) for x in reduced[..., 0].ravel()]
    return np.array(flat, dtype=object).reshape(reduced.shape[:-1])
