"""
Finite permutation groups with fully enumerated elements.

A root ``Group`` is built from generating permutations by closure. Its
elements are stored in lexicographic order of their image tuples, so index 0
is always the identity. Subgroups are ``Group`` objects that share the root's
element numbering: ``members`` lists their elements as root indices, and all
per-group tables (multiplication, inverses, classes) use local indices
``0..order-1`` in the same order.
"""

import logging
import math
import threading
from functools import cached_property
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.config import get_settings
from src.group_core.permutation import Perm, compose, identity, parse_cycles, to_cycles
from src.utils.errors import InputError, NotSubgroupError, OrderCapExceeded

logger = logging.getLogger(__name__)


def _enumerate_elements(degree: int, generators: Sequence[Perm], cap: int) -> List[Perm]:
    start = identity(degree)
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for x in frontier:
            for s in generators:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
                    if len(seen) > cap:
                        raise OrderCapExceeded(cap)
        frontier = fresh
    return sorted(seen)


def _base_points(perms: np.ndarray) -> List[int]:
    """Points whose images determine every element uniquely."""
    n, degree = perms.shape
    ids = np.zeros(n, dtype=np.int64)
    count = 1
    base: List[int] = []
    for point in range(degree):
        if count == n:
            break
        _, refined = np.unique(ids * degree + perms[:, point], return_inverse=True)
        refined = refined.reshape(-1)
        new_count = int(refined.max()) + 1
        if new_count > count:
            base.append(point)
            ids, count = refined.astype(np.int64), new_count
    return base or [0]


def _multiplication_table(perms: np.ndarray) -> np.ndarray:
    """table[a, b] is the index of the product ab."""
    n, degree = perms.shape
    base = _base_points(perms)
    table = np.empty((n, n), dtype=np.int32)
    if len(base) * math.log2(max(degree, 2)) < 62:
        radix = np.array([degree ** i for i in range(len(base))], dtype=np.int64)
        keys = perms[:, base].astype(np.int64) @ radix
        order = np.argsort(keys)
        sorted_keys = keys[order]
        for a in range(n):
            images = perms[:, perms[a, base]].astype(np.int64) @ radix
            table[a] = order[np.searchsorted(sorted_keys, images)]
    else:
        lookup = {perms[i, base].tobytes(): i for i in range(n)}
        for a in range(n):
            images = np.ascontiguousarray(perms[:, perms[a, base]])
            table[a] = [lookup[row.tobytes()] for row in images]
    return table


def closure_mask(mul: np.ndarray, generators: Iterable[int], start: Optional[np.ndarray] = None) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``generators`` (local indices)."""
    n = mul.shape[0]
    gens = np.unique(np.fromiter(generators, dtype=np.int64))
    mask = np.zeros(n, dtype=bool)
    frontier = np.array([0], dtype=np.int64) if start is None else np.asarray(start, dtype=np.int64)
    mask[frontier] = True
    if gens.size == 0:
        return mask
    while frontier.size:
        products = mul[np.ix_(frontier, gens)].ravel()
        fresh = np.unique(products[~mask[products]])
        mask[fresh] = True
        frontier = fresh
    return mask


class Group:
    """
    A finite permutation group, or a subgroup of one.

    - ``root``: the group whose element numbering is shared (itself for roots)
    - ``members``: sorted root indices of the elements
    - ``order``: number of elements
    - ``degree``: number of points of the root action
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Sequence[int]],
        name: str = "G",
        order_cap: Optional[int] = None,
    ):
        if degree < 1:
            raise InputError("degree must be positive")
        if order_cap is None:
            order_cap = get_settings().order_cap
        gens: List[Perm] = []
        for g in generators:
            perm = tuple(int(x) for x in g)
            if len(perm) != degree or sorted(perm) != list(range(degree)):
                raise InputError(f"not a permutation of {degree} points: {perm}")
            gens.append(perm)

        elements = _enumerate_elements(degree, gens, order_cap)
        self.name = name
        self.degree = degree
        self.root = self
        self.members = np.arange(len(elements), dtype=np.int64)
        self.order = len(elements)
        self._given_generators = tuple(gens)
        self._perms = np.array(elements, dtype=np.int32).reshape(self.order, degree)
        self._init_caches()
        logger.debug(f"built group {name} of order {self.order} on {degree} points")

    @classmethod
    def from_cycles(
        cls,
        degree: int,
        cycles: Sequence[str],
        name: str = "G",
        order_cap: Optional[int] = None,
    ) -> "Group":
        return cls(degree, [parse_cycles(text, degree) for text in cycles], name=name, order_cap=order_cap)

    @classmethod
    def _subgroup_of(cls, root: "Group", members: np.ndarray, name: str) -> "Group":
        obj = cls.__new__(cls)
        obj.name = name
        obj.degree = root.degree
        obj.root = root
        obj.members = members
        obj.order = int(members.size)
        obj._given_generators = None
        obj._perms = root._perms[members]
        obj._init_caches()
        return obj

    def _init_caches(self) -> None:
        self._lock = threading.Lock()
        self._memo: Dict[Any, Any] = {}
        self._subgroups: Dict[bytes, "Group"] = {}

    def memo(self, key: Any, factory: Callable[[], Any]) -> Any:
        """Return the cached value for key, computing it with factory on first use."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = factory()
        with self._lock:
            return self._memo.setdefault(key, value)

    # element data

    @property
    def is_root(self) -> bool:
        return self.root is self

    @property
    def perms(self) -> np.ndarray:
        return self._perms

    @cached_property
    def elements(self) -> Tuple[Perm, ...]:
        return tuple(tuple(int(x) for x in row) for row in self._perms)

    def perm(self, i: int) -> Perm:
        return tuple(int(x) for x in self._perms[i])

    @cached_property
    def _perm_index(self) -> Dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    def index_of(self, perm: Sequence[int]) -> int:
        """Local index of a permutation; raises NotSubgroupError if absent."""
        key = tuple(int(x) for x in perm)
        try:
            return self._perm_index[key]
        except KeyError:
            raise NotSubgroupError(f"{to_cycles(key)} is not an element of {self.name}") from None

    def contains_perm(self, perm: Sequence[int]) -> bool:
        return tuple(int(x) for x in perm) in self._perm_index

    @cached_property
    def mul(self) -> np.ndarray:
        if self.is_root:
            return _multiplication_table(self._perms)
        sub = self.root.mul[np.ix_(self.members, self.members)]
        return self._root_to_local[sub].astype(np.int32)

    @cached_property
    def _root_to_local(self) -> np.ndarray:
        lookup = np.full(self.root.order, -1, dtype=np.int64)
        lookup[self.members] = np.arange(self.order)
        return lookup

    @cached_property
    def inv(self) -> np.ndarray:
        rows, cols = np.nonzero(self.mul == 0)
        out = np.empty(self.order, dtype=np.int64)
        out[rows] = cols
        return out

    @cached_property
    def element_orders(self) -> np.ndarray:
        ar = np.arange(self.order)
        orders = np.zeros(self.order, dtype=np.int64)
        current = ar.copy()
        k = 1
        while True:
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                return orders
            current = self.mul[current, ar]
            k += 1

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders)) if self.order > 1 else 1

    def to_local(self, root_indices: Any) -> np.ndarray:
        """Convert root indices to local indices; every index must be a member."""
        idx = np.asarray(root_indices, dtype=np.int64)
        local = self._root_to_local[idx]
        if np.any(local < 0):
            raise NotSubgroupError(f"elements are not in {self.name}")
        return local

    def to_root(self, local_indices: Any) -> np.ndarray:
        return self.members[np.asarray(local_indices, dtype=np.int64)]

    # generators

    @cached_property
    def generator_indices(self) -> Tuple[int, ...]:
        """Local indices of a generating set."""
        if self._given_generators is not None:
            idx = [self.index_of(g) for g in self._given_generators]
            return tuple(i for i in idx if i != 0) or (0,)
        gens: List[int] = []
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        for x in range(self.order):
            if not mask[x]:
                gens.append(x)
                mask = closure_mask(self.mul, gens)
        return tuple(gens) or (0,)

    @property
    def generators(self) -> Tuple[Perm, ...]:
        return tuple(self.perm(i) for i in self.generator_indices)

    # subgroups

    def subgroup(self, root_members: Any, name: Optional[str] = None) -> "Group":
        """
        The subgroup of the root with the given root-index members.

        Subgroups are cached on the root, so equal member sets give the same
        object. The caller guarantees closure.
        """
        root = self.root
        members = np.unique(np.asarray(root_members, dtype=np.int64))
        if members.size == root.order:
            return root
        key = members.tobytes()
        with root._lock:
            found = root._subgroups.get(key)
        if found is not None:
            return found
        created = Group._subgroup_of(root, members, name or f"{root.name}[{members.size}]")
        with root._lock:
            return root._subgroups.setdefault(key, created)

    def subgroup_from_local(self, local_members: Any, name: Optional[str] = None) -> "Group":
        return self.subgroup(self.to_root(local_members), name=name)

    def subgroup_generated(self, elements: Iterable[Any], name: Optional[str] = None) -> "Group":
        """Subgroup generated by elements given as local indices or permutations."""
        idx = [e if isinstance(e, (int, np.integer)) else self.index_of(e) for e in elements]
        mask = closure_mask(self.mul, [int(i) for i in idx])
        return self.subgroup_from_local(np.flatnonzero(mask), name=name)

    def is_subgroup_of(self, other: "Group") -> bool:
        if self.root is not other.root:
            return False
        return bool(np.all(np.isin(self.members, other.members, assume_unique=True)))

    def intersection(self, other: "Group") -> "Group":
        if self.root is not other.root:
            raise NotSubgroupError("groups do not share a root")
        return self.subgroup(np.intersect1d(self.members, other.members, assume_unique=True))

    def trivial_subgroup(self) -> "Group":
        return self.subgroup(self.members[:1], name="1")

    # identity and display

    @property
    def key(self) -> Tuple[int, bytes]:
        return (id(self.root), self.members.tobytes())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Group):
            return NotImplemented
        return self.root is other.root and self.order == other.order and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((id(self.root), self.members.tobytes()))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Group({self.name}, order={self.order})"

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "degree": self.degree,
            "generators": [to_cycles(g) for g in self.generators],
        }


def group_from_permutations(
    degree: int,
    generators: Sequence[str],
    name: str = "G",
    order_cap: Optional[int] = None,
) -> Group:
    """Group generated by permutations written in cycle notation."""
    return Group.from_cycles(degree, generators, name=name, order_cap=order_cap)


def element_product(G: Group, a: int, b: int) -> int:
    return int(G.mul[a, b])


def conjugate_element(G: Group, x: int, g: int) -> int:
    """x^g = g^-1 x g, local indices."""
    return int(G.mul[G.mul[G.inv[g], x], g])
