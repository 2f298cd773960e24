"""
Linear algebra over the prime field F_p with numpy int64 arrays.

Entries are kept in [0, p); p stays far below 2**31 so products of two
entries never overflow.
"""

from typing import List, Optional, Tuple

import numpy as np


def rref_mod(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace_mod(matrix: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {v : matrix @ v = 0}."""
    cols = matrix.shape[1]
    reduced, pivots = rref_mod(matrix, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-reduced[row, f]) % p
    return basis


def solve_mod(matrix: np.ndarray, rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution x of matrix @ x = rhs, or None."""
    augmented = np.concatenate([np.array(matrix, dtype=np.int64), np.array(rhs, dtype=np.int64)[:, None]], axis=1)
    reduced, pivots = rref_mod(augmented, p)
    cols = matrix.shape[1]
    if pivots and pivots[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = reduced[row, cols]
    return x


def minimal_polynomial_of_vector(Y: np.ndarray, v: np.ndarray, p: int) -> List[int]:
    """Monic minimal polynomial of Y relative to v, constant term first."""
    krylov = [np.array(v, dtype=np.int64) % p]
    while True:
        nxt = (Y @ krylov[-1]) % p
        K = np.stack(krylov, axis=1)
        coeffs = solve_mod(K, nxt, p)
        if coeffs is not None:
            return [int(-c % p) for c in coeffs] + [1]
        krylov.append(nxt)


def polynomial_roots_mod(coeffs: List[int], p: int) -> List[int]:
    """All roots in F_p, by evaluation at every field element."""
    xs = np.arange(p, dtype=np.int64)
    values = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        values = (values * xs + c) % p
    return [int(x) for x in np.flatnonzero(values == 0)]


def eigenspaces_mod(Y: np.ndarray, p: int, rng: np.random.Generator, attempts: int = 4) -> List[Tuple[int, np.ndarray]]:
    """
    Eigenvalues and eigenspace bases (rows) of a diagonalizable matrix over F_p.

    Candidate eigenvalues come from minimal polynomials of random vectors;
    if they do not account for the whole space every field element is tried.
    """
    d = Y.shape[0]
    if d == 1:
        return [(int(Y[0, 0] % p), np.ones((1, 1), dtype=np.int64))]
    identity = np.eye(d, dtype=np.int64)
    candidates: List[int] = []
    for _ in range(attempts):
        v = rng.integers(0, p, size=d)
        candidates.extend(polynomial_roots_mod(minimal_polynomial_of_vector(Y, v, p), p))
        spaces = _spaces_for(Y, identity, sorted(set(candidates)), p)
        if sum(basis.shape[0] for _, basis in spaces) == d:
            return spaces
    return _spaces_for(Y, identity, list(range(p)), p)


def _spaces_for(Y: np.ndarray, identity: np.ndarray, values: List[int], p: int) -> List[Tuple[int, np.ndarray]]:
    out = []
    for lam in values:
        basis = nullspace_mod((Y - lam * identity) % p, p)
        if basis.shape[0]:
            out.append((lam, basis))
    return out
