"""
Group constructions: semidirect and direct products, linear actions.
"""

import itertools
import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from src.group_core.group import Group
from src.group_core.permutation import Perm
from src.group_core.structure import regular_representation
from src.utils.errors import GroupConstructionError

logger = logging.getLogger(__name__)


class SemidirectProduct(NamedTuple):
    """
    Result of ``build_semidirect``.

    - ``group``: the product as a permutation group
    - ``normal_generators``: root indices of the images of N's generators
    - ``acting_generators``: root indices of the images of K's generators
    - ``affine_only``: True when the action on N's elements alone was faithful
    """
    group: Group
    normal_generators: tuple
    acting_generators: tuple
    affine_only: bool


def _extend_automorphism(N: Group, images: Sequence[Perm]) -> np.ndarray:
    """Extend generator images to a map on all of N, checking it is an automorphism."""
    if len(images) != len(N.generators):
        raise GroupConstructionError("automorphism must give one image per generator")
    pairs = list(zip(N.generator_indices, [N.index_of(p) for p in images]))
    alpha = np.full(N.order, -1, dtype=np.int64)
    alpha[0] = 0
    frontier = [0]
    while frontier:
        fresh = []
        for x in frontier:
            for s, t in pairs:
                y = int(N.mul[x, s])
                value = int(N.mul[alpha[x], t])
                if alpha[y] < 0:
                    alpha[y] = value
                    fresh.append(y)
                elif alpha[y] != value:
                    raise GroupConstructionError("generator images do not define a homomorphism")
        frontier = fresh
    if np.any(alpha < 0):
        raise GroupConstructionError("generator images do not cover the group")
    if np.unique(alpha).size != N.order:
        raise GroupConstructionError("automorphism is not bijective")
    if not np.array_equal(alpha[N.mul], N.mul[alpha[:, None], alpha[None, :]]):
        raise GroupConstructionError("map is not multiplicative")
    return alpha


def _action_homomorphism(N: Group, K: Group, autos: Sequence[np.ndarray]) -> np.ndarray:
    """
    Extend the generator automorphisms to every element of K.

    ``rho[k]`` is the automorphism table of k. Each Cayley-graph edge
    k -> ks is checked, so a relation of K that the automorphisms break
    raises ``GroupConstructionError``.
    """
    rho = np.full((K.order, N.order), -1, dtype=np.int64)
    rho[0] = np.arange(N.order)
    frontier = [0]
    pairs = list(zip(K.generator_indices, autos))
    while frontier:
        fresh = []
        for x in frontier:
            for s, alpha in pairs:
                y = int(K.mul[x, s])
                value = alpha[rho[x]]
                if rho[y, 0] < 0:
                    rho[y] = value
                    fresh.append(y)
                elif not np.array_equal(rho[y], value):
                    raise GroupConstructionError(
                        f"action is not a homomorphism: {K.name} element {y} gets two different automorphisms"
                    )
        frontier = fresh
    return rho


def build_semidirect(
    N: Group,
    K: Group,
    action: Sequence[Sequence[Perm]],
    name: str = "G",
    order_cap: Optional[int] = None,
) -> SemidirectProduct:
    """
    N x| K as a permutation group.

    ``action[j]`` lists the images of N's generators under the automorphism
    attached to K's j-th generator. The automorphisms act on the right:
    conjugating the image of n by the image of k gives the image of alpha_k(n).

    The action is first checked against every relation of K. The product
    acts on the elements of N (translations and automorphisms); when that
    action is not faithful, K's points are added, or the points of K's
    regular representation when K has fewer elements than points.
    """
    if len(action) != len(K.generators):
        raise GroupConstructionError("one automorphism is required per acting generator")
    autos = [_extend_automorphism(N, images) for images in action]
    _action_homomorphism(N, K, autos)
    size = N.order
    translations = [tuple(int(v) for v in N.mul[:, g]) for g in N.generator_indices]
    moves = [tuple(int(v) for v in alpha) for alpha in autos]
    expected = N.order * K.order

    affine = Group(size, translations + moves, name=name, order_cap=order_cap)
    if affine.order == expected:
        result, gens, affine_only = affine, translations + moves, True
    else:
        K_action = regular_representation(K) if K.order < K.degree else K
        degree = size + K_action.degree
        tail = tuple(range(size, degree))
        lifted_t = [t + tail for t in translations]
        lifted_k = [m + tuple(size + v for v in k) for m, k in zip(moves, K_action.generators)]
        gens = lifted_t + lifted_k
        result = Group(degree, gens, name=name, order_cap=order_cap)
        affine_only = False
        if result.order != expected:
            raise GroupConstructionError(
                f"action is not a homomorphism: product has order {result.order}, expected {expected}"
            )
    n_gens = len(translations)
    gen_idx = tuple(result.index_of(p) for p in gens)
    logger.info(f"semidirect product {name}: order {result.order} on {result.degree} points")
    return SemidirectProduct(result, gen_idx[:n_gens], gen_idx[n_gens:], affine_only)


def semidirect_product(N: Group, K: Group, action: Sequence[Sequence[Perm]], name: str = "G") -> Group:
    return build_semidirect(N, K, action, name=name).group


def direct_product(*groups: Group, name: str = "G") -> Group:
    """The disjoint-union action of the factors."""
    if not groups:
        raise GroupConstructionError("direct product of no groups")
    degree = sum(G.degree for G in groups)
    gens: List[Perm] = []
    offset = 0
    for G in groups:
        for g in G.generators:
            perm = list(range(degree))
            for i, v in enumerate(g):
                perm[offset + i] = offset + v
            gens.append(tuple(perm))
        offset += G.degree
    order = int(np.prod([G.order for G in groups]))
    return Group(degree, gens, name=name, order_cap=order)


def linear_action(p: int, matrices: Sequence[Sequence[Sequence[int]]], name: str = "G") -> Group:
    """
    Matrices over F_p acting on the right of nonzero row vectors.

    Vectors are numbered in lexicographic order of their coordinates.
    """
    dim = len(matrices[0])
    vectors = [v for v in itertools.product(range(p), repeat=dim) if any(v)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for M in matrices:
        A = np.array(M, dtype=np.int64) % p
        images = (np.array(vectors, dtype=np.int64) @ A) % p
        perm = tuple(index[tuple(int(x) for x in row)] for row in images)
        if sorted(perm) != list(range(len(vectors))):
            raise GroupConstructionError(f"matrix {M} is singular mod {p}")
        gens.append(perm)
    return Group(len(vectors), gens, name=name)
