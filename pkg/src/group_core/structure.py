"""
Conjugacy classes, normal and subnormal subgroups, quotients and related
structure of enumerated permutation groups.

Every function takes a ``Group`` (root or subgroup) and works in its local
indices; returned subgroups are ``Group`` objects registered on the root.
Results are memoised on the group they describe.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, NamedTuple, Sequence, Tuple

import numpy as np

from src.group_core.group import Group, closure_mask
from src.group_core.primes import PiSet
from src.utils.errors import NotNormalError, NotSubgroupError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConjClass:
    """One conjugacy class; ``representative`` is its smallest element index."""
    index: int
    representative: int
    members: np.ndarray

    @property
    def size(self) -> int:
        return int(self.members.size)


@dataclass(frozen=True, eq=False)
class ConjClassSet:
    """
    The conjugacy classes of a group in canonical order.

    Classes are sorted by (element order of representative, class size,
    representative index), which puts the identity class first.
    """
    group: Group
    classes: Tuple[ConjClass, ...]
    class_of: np.ndarray

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self) -> Iterator[ConjClass]:
        return iter(self.classes)

    def __getitem__(self, i: int) -> ConjClass:
        return self.classes[i]

    @property
    def sizes(self) -> np.ndarray:
        return np.array([c.size for c in self.classes], dtype=np.int64)

    @property
    def representatives(self) -> np.ndarray:
        return np.array([c.representative for c in self.classes], dtype=np.int64)

    @property
    def rep_orders(self) -> np.ndarray:
        return self.group.element_orders[self.representatives]


def conjugacy_classes(G: Group) -> ConjClassSet:
    return G.memo("classes", lambda: _conjugacy_classes(G))


def _conjugacy_classes(G: Group) -> ConjClassSet:
    mul, inv = G.mul, G.inv
    ar = np.arange(G.order)
    assigned = np.zeros(G.order, dtype=bool)
    orbits: List[np.ndarray] = []
    for x in range(G.order):
        if assigned[x]:
            continue
        orbit = np.unique(mul[mul[inv, x], ar])
        assigned[orbit] = True
        orbits.append(orbit)
    orders = G.element_orders
    orbits.sort(key=lambda o: (int(orders[o[0]]), int(o.size), int(o[0])))
    class_of = np.empty(G.order, dtype=np.int64)
    classes = []
    for i, orbit in enumerate(orbits):
        class_of[orbit] = i
        classes.append(ConjClass(index=i, representative=int(orbit[0]), members=orbit))
    logger.debug(f"{G.name}: {len(classes)} conjugacy classes")
    return ConjClassSet(group=G, classes=tuple(classes), class_of=class_of)


def _sorted_subgroups(G: Group, masks: Sequence[np.ndarray]) -> Tuple[Group, ...]:
    locals_ = [np.flatnonzero(m) for m in masks]
    locals_.sort(key=lambda m: (m.size, tuple(m.tolist())))
    return tuple(G.subgroup_from_local(m) for m in locals_)


def normal_subgroups(G: Group) -> Tuple[Group, ...]:
    """All normal subgroups, ordered by (order, member list)."""
    return G.memo("normal_subgroups", lambda: _normal_subgroups(G))


def _normal_subgroups(G: Group) -> Tuple[Group, ...]:
    mul = G.mul
    bases: dict = {}
    for c in conjugacy_classes(G):
        mask = closure_mask(mul, c.members.tolist())
        bases.setdefault(mask.tobytes(), mask)
    found = dict(bases)
    frontier = list(bases.values())
    while frontier:
        fresh = []
        for A in frontier:
            a_idx = np.flatnonzero(A)
            for B in bases.values():
                if np.all(A[B]):
                    continue
                join = np.zeros_like(A)
                join[np.unique(mul[np.ix_(a_idx, np.flatnonzero(B))])] = True
                key = join.tobytes()
                if key not in found:
                    found[key] = join
                    fresh.append(join)
        frontier = fresh
    result = _sorted_subgroups(G, list(found.values()))
    logger.debug(f"{G.name}: {len(result)} normal subgroups")
    return result


def conjugates_of(G: Group, x: int) -> np.ndarray:
    """Local indices of all g^-1 x g."""
    return np.unique(G.mul[G.mul[G.inv, x], np.arange(G.order)])


def normal_closure(G: Group, elements: Sequence[int]) -> Group:
    gens = np.unique(np.concatenate([conjugates_of(G, int(x)) for x in elements] or [np.zeros(1, np.int64)]))
    return G.subgroup_from_local(np.flatnonzero(closure_mask(G.mul, gens.tolist())))


def derived_subgroup(G: Group) -> Group:
    """The commutator subgroup, as the normal closure of generator commutators."""
    def compute() -> Group:
        mul, inv = G.mul, G.inv
        gens = G.generator_indices
        comms = {int(mul[mul[mul[inv[a], inv[b]], a], b]) for a in gens for b in gens}
        return normal_closure(G, sorted(comms))

    return G.memo("derived", compute)


def center(G: Group) -> Group:
    gens = list(G.generator_indices)
    commutes = G.mul[:, gens] == G.mul[gens, :].T
    return G.subgroup_from_local(np.flatnonzero(commutes.all(axis=1)), name=f"Z({G.name})")


def centralizer(G: Group, H: Group) -> Group:
    """Elements of G commuting with every element of H (same root)."""
    R = G.root.mul
    h = H.members[list(H.generator_indices)]
    g = G.members
    commutes = R[np.ix_(g, h)] == R[np.ix_(h, g)].T
    return G.subgroup(g[commutes.all(axis=1)])


def conjugate_subgroup(H: Group, g: int) -> Group:
    """H^g = g^-1 H g for a root element index g."""
    root = H.root
    R = root.mul
    return root.subgroup(R[R[root.inv[g], H.members], g])


def normalizer(G: Group, H: Group) -> Group:
    """Elements g of G with H^g = H."""
    root = G.root
    R = root.mul
    h = H.members[list(H.generator_indices)]
    g = G.members
    images = R[R[root.inv[g][:, None], h[None, :]], g[:, None]]
    inside = np.isin(images, H.members).all(axis=1)
    return G.subgroup(g[inside])


def is_normal(N: Group, G: Group) -> bool:
    if not N.is_subgroup_of(G):
        return False
    root = G.root
    R = root.mul
    n = N.members[list(N.generator_indices)]
    g = G.members[list(G.generator_indices)]
    images = R[R[root.inv[g][:, None], n[None, :]], g[:, None]]
    return bool(np.isin(images, N.members).all())


def require_normal(N: Group, G: Group) -> None:
    if not N.is_subgroup_of(G):
        raise NotSubgroupError(f"{N.name} is not a subgroup of {G.name}")
    if not is_normal(N, G):
        raise NotNormalError(f"{N.name} is not normal in {G.name}")


def subnormal_subgroups(G: Group) -> Tuple[Group, ...]:
    """Breadth-first closure of 'normal subgroup of a discovered subgroup'."""
    def compute() -> Tuple[Group, ...]:
        found = {G.key: G}
        queue = [G]
        while queue:
            H = queue.pop(0)
            for N in normal_subgroups(H):
                if N.key not in found:
                    found[N.key] = N
                    queue.append(N)
        return tuple(sorted(found.values(), key=lambda S: (S.order, tuple(S.members.tolist()))))

    return G.memo("subnormal_subgroups", compute)


def all_subgroups(G: Group) -> Tuple[Group, ...]:
    """Every subgroup, as joins of cyclic subgroups. Only sensible for small groups."""
    mul = G.mul
    cyclic: dict = {}
    for x in range(G.order):
        mask = closure_mask(mul, [x])
        cyclic.setdefault(mask.tobytes(), (mask, x))
    found = {k: m for k, (m, _) in cyclic.items()}
    frontier = list(found.values())
    while frontier:
        fresh = []
        for A in frontier:
            for _, x in cyclic.values():
                if A[x]:
                    continue
                join = closure_mask(mul, np.flatnonzero(A).tolist() + [x])
                key = join.tobytes()
                if key not in found:
                    found[key] = join
                    fresh.append(join)
        frontier = fresh
    return _sorted_subgroups(G, list(found.values()))


class PiSeparability(NamedTuple):
    holds: bool
    chief_series: Tuple[Group, ...]


def chief_series(G: Group) -> Tuple[Group, ...]:
    """A chief series 1 = K_0 < ... < K_r = G built from minimal normal steps."""
    def compute() -> Tuple[Group, ...]:
        normals = normal_subgroups(G)
        chain = [normals[0]]
        while chain[-1].order < G.order:
            current = chain[-1]
            step = next(M for M in normals if M.order > current.order and current.is_subgroup_of(M))
            chain.append(step)
        return tuple(chain)

    return G.memo("chief_series", compute)


def is_pi_separable(G: Group, pi: PiSet) -> PiSeparability:
    series = chief_series(G)
    other = pi.complement_set()
    for lower, upper in zip(series, series[1:]):
        index = upper.order // lower.order
        if not (pi.is_number(index) or other.is_number(index)):
            return PiSeparability(False, ())
    return PiSeparability(True, series)


def pi_prime_index_of_abelianization(V: Group, pi: PiSet) -> int:
    """The pi'-part of |V : V'|."""
    return pi.complement_set().part(V.order // derived_subgroup(V).order)


class Quotient(NamedTuple):
    group: Group
    projection: np.ndarray


def quotient_group(G: Group, N: Group) -> Quotient:
    """
    G/N realized by the action of G on the cosets of N.

    ``projection[x]`` is the quotient element index of the coset of local
    element x.
    """
    require_normal(N, G)
    mul = G.mul
    n_local = G.to_local(N.members)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps: List[int] = []
    for x in range(G.order):
        if coset_of[x] < 0:
            coset_of[mul[n_local, x]] = len(reps)
            reps.append(x)
    images = coset_of[mul[np.array(reps)[:, None], np.arange(G.order)[None, :]]]
    gens = [tuple(int(v) for v in images[:, g]) for g in G.generator_indices]
    Q = Group(len(reps), gens, name=f"{G.name}/{N.name}", order_cap=G.order)
    lookup = {p: i for i, p in enumerate(Q.elements)}
    projection = np.array([lookup[tuple(int(v) for v in images[:, g])] for g in range(G.order)], dtype=np.int64)
    return Quotient(Q, projection)


def regular_representation(G: Group) -> Group:
    """The right regular action x -> xg on the elements of G."""
    gens = [tuple(int(v) for v in G.mul[:, g]) for g in G.generator_indices]
    return Group(G.order, gens, name=f"reg({G.name})", order_cap=G.order)


def product_of_normal(G: Group, A: Group, B: Group) -> Group:
    """AB for subgroups A, B of G with at least one of them normal."""
    a = G.to_local(A.members)
    b = G.to_local(B.members)
    return G.subgroup_from_local(np.unique(G.mul[np.ix_(a, b)]))
