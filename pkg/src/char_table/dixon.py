"""
Dixon-Schneider computation of irreducible characters.

Class multiplication coefficients are reduced modulo a prime p = 1 (mod e),
e the group exponent. Common eigenvectors of the class matrices over F_p give
the central characters; degrees follow from the class-size identity and the
exact values are recovered from eigenvalue multiplicities over each cyclic
subgroup <g>.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from sympy import nextprime, primitive_root, sqrt_mod

from src.char_table.modular import eigenspaces_mod, rref_mod
from src.group_core.group import Group
from src.group_core.structure import ConjClassSet
from src.utils.errors import CharacterTableError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RawTable:
    """
    Output of the Dixon-Schneider engine, rows not yet sorted.

    - ``multiplicities[i][k][m]``: multiplicity of zeta_o^m as an eigenvalue of
      row i at class k, o the order of the class representative
    - ``prime``, ``root``: the field F_p and the primitive e-th root used
    """
    degrees: Tuple[int, ...]
    multiplicities: Tuple[Tuple[np.ndarray, ...], ...]
    prime: int
    root: int


class SplittingFailed(Exception):
    """The chosen prime did not produce a consistent table."""


def power_classes(G: Group, classes: ConjClassSet) -> List[np.ndarray]:
    """For each class k, the classes of g_k^l for l = 0..o-1."""
    out = []
    for c in classes:
        g = c.representative
        o = int(G.element_orders[g])
        powers = np.empty(o, dtype=np.int64)
        x = 0
        for l in range(o):
            powers[l] = x
            x = int(G.mul[x, g])
        out.append(classes.class_of[powers])
    return out


def class_matrices(G: Group, classes: ConjClassSet) -> List[np.ndarray]:
    """
    M_j[k, l] = #{x in C_j : x^-1 g_l in C_k}.

    Central characters w satisfy M_j w = w_j w.
    """
    r = len(classes)
    reps = classes.representatives
    mats = []
    for c in classes:
        X = c.members
        Y = classes.class_of[G.mul[G.inv[X][:, None], reps[None, :]]]
        flat = Y * r + np.arange(r)[None, :]
        counts = np.bincount(flat.ravel(), minlength=r * r).reshape(r, r)
        mats.append(counts.astype(np.int64))
    return mats


def candidate_primes(order: int, exponent: int, attempts: int) -> List[int]:
    """The first ``attempts`` primes p = 1 (mod exponent) above 2*sqrt(order)."""
    primes = []
    # smallest prime above floor(2 sqrt(order)) already exceeds 2 sqrt(order)
    p = int(nextprime(math.isqrt(4 * order)))
    while len(primes) < attempts:
        if p % exponent == 1 % exponent:
            primes.append(p)
        p = int(nextprime(p))
    return primes


def _split(mats: List[np.ndarray], p: int, rng: np.random.Generator, attempts: int) -> List[np.ndarray]:
    r = mats[0].shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for M in mats[1:]:
        if all(s.shape[0] == 1 for s in spaces):
            break
        T = M.T % p
        refined = []
        for B in spaces:
            if B.shape[0] == 1:
                refined.append(B)
                continue
            B, pivots = rref_mod(B, p)
            X = (B @ T % p)[:, pivots]
            for _, U in eigenspaces_mod(X.T % p, p, rng, attempts):
                refined.append(rref_mod(U @ B % p, p)[0])
        if sum(s.shape[0] for s in refined) != r:
            raise SplittingFailed("eigenspaces do not span")
        spaces = refined
    if any(s.shape[0] != 1 for s in spaces):
        raise SplittingFailed("class matrices do not separate the characters")
    return [s[0] for s in spaces]


def _attempt(
    G: Group,
    classes: ConjClassSet,
    mats: List[np.ndarray],
    exponent: int,
    p: int,
    attempts: int,
) -> RawTable:
    order = G.order
    sizes = classes.sizes
    r = len(classes)
    rng = np.random.default_rng(p)
    vectors = _split(mats, p, rng, attempts)

    inverse_class = classes.class_of[G.inv[classes.representatives]]
    size_inv = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    z = pow(int(primitive_root(p)), (p - 1) // exponent, p)
    powers = power_classes(G, classes)
    orders = classes.rep_orders

    degrees: List[int] = []
    values_mod = np.zeros((r, r), dtype=np.int64)
    for i, w in enumerate(vectors):
        w = w * pow(int(w[0]), -1, p) % p
        s = int(np.sum(w * w[inverse_class] % p * size_inv % p) % p)
        if s == 0:
            raise SplittingFailed("degenerate central character")
        d2 = order * pow(s, -1, p) % p
        roots = sqrt_mod(d2, p, all_roots=True) or []
        candidates = [x for x in roots if 0 < x and x * x <= order and order % x == 0 and (x * x - d2) % p == 0]
        if len(candidates) != 1:
            raise SplittingFailed(f"no unique degree for row {i}")
        d = int(candidates[0])
        degrees.append(d)
        values_mod[i] = d * w % p * size_inv % p

    if sum(d * d for d in degrees) != order:
        raise SplittingFailed("degrees do not satisfy sum of squares")

    multiplicities: List[List[np.ndarray]] = [[] for _ in range(r)]
    for k in range(r):
        o = int(orders[k])
        zo = pow(z, exponent // o, p)
        ls = np.arange(o)
        fourier = np.array([[pow(zo, int((-m * l) % o), p) for m in range(o)] for l in ls], dtype=np.int64)
        V = values_mod[:, powers[k]]
        mu = V @ fourier % p * pow(o, -1, p) % p
        for i in range(r):
            row = mu[i]
            if np.any(row > degrees[i]) or int(row.sum()) != degrees[i]:
                raise SplittingFailed(f"eigenvalue multiplicities out of range at class {k}")
            multiplicities[i].append(row.copy())
    return RawTable(
        degrees=tuple(degrees),
        multiplicities=tuple(tuple(m) for m in multiplicities),
        prime=p,
        root=z,
    )


def dixon_schneider(
    G: Group,
    classes: ConjClassSet,
    exponent: int,
    max_attempts: int = 32,
    krylov_attempts: int = 4,
    primes: Optional[List[int]] = None,
) -> RawTable:
    """Run the engine, moving to the next admissible prime on failure."""
    mats = class_matrices(G, classes)
    candidates = primes or candidate_primes(G.order, exponent, max_attempts)
    last_error = ""
    for p in candidates:
        try:
            raw = _attempt(G, classes, mats, exponent, p, krylov_attempts)
            logger.debug(f"{G.name}: character table found with p={p}")
            return raw
        except SplittingFailed as e:
            last_error = str(e)
            logger.debug(f"{G.name}: prime {p} failed ({e}), trying the next one")
    raise CharacterTableError(f"{G.name}: no admissible prime produced a table ({last_error})")
