"""
Normal pi-series: chains of normal subgroups whose factors are pi- or pi'-groups.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.structure import is_normal, is_pi_separable, normal_subgroups
from src.utils.errors import InputError, NotPiSeparableError

logger = logging.getLogger(__name__)

PI = "pi"
PI_PRIME = "pi'"


def factor_kind(pi: PiSet, index: int) -> str:
    """Tag of a factor of the given order; raises if it is mixed."""
    if pi.is_number(index):
        return PI
    if pi.complement_set().is_number(index):
        return PI_PRIME
    raise InputError(f"factor of order {index} is neither a {pi}- nor a {pi}'-group")


@dataclass(frozen=True, eq=False)
class NormalPiSeries:
    """
    A chain 1 = N_0 < N_1 < ... < N_n = G of normal subgroups of G.

    - ``pi``: the prime set
    - ``chain``: the subgroups, bottom first
    - ``kinds``: ``"pi"`` or ``"pi'"`` for each factor N_{i+1}/N_i
    """
    pi: PiSet
    chain: Tuple[Group, ...]
    kinds: Tuple[str, ...]

    @classmethod
    def from_chain(cls, pi: PiSet, chain: Sequence[Group]) -> "NormalPiSeries":
        chain = tuple(chain)
        if not chain:
            raise InputError("a series needs at least one term")
        top = chain[-1]
        if chain[0].order != 1:
            raise InputError("a series must start at the trivial subgroup")
        kinds: List[str] = []
        for lower, upper in zip(chain, chain[1:]):
            if not lower.is_subgroup_of(upper) or lower.order == upper.order:
                raise InputError(f"{lower.name} is not properly contained in {upper.name}")
            kinds.append(factor_kind(pi, upper.order // lower.order))
        for N in chain:
            if not is_normal(N, top):
                raise InputError(f"{N.name} is not normal in {top.name}")
        return cls(pi=pi, chain=chain, kinds=tuple(kinds))

    @property
    def group(self) -> Group:
        return self.chain[-1]

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    @property
    def orders(self) -> Tuple[int, ...]:
        return tuple(N.order for N in self.chain)

    def truncate(self, i: int) -> "NormalPiSeries":
        """The series N_0 < ... < N_i of N_i."""
        return NormalPiSeries(pi=self.pi, chain=self.chain[: i + 1], kinds=self.kinds[:i])

    @property
    def key(self) -> Tuple[Any, ...]:
        return (self.pi, tuple(N.key for N in self.chain))

    def label(self) -> str:
        return "1" + "".join(f"<{N.order}" for N in self.chain[1:]) if self.length else "1"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalPiSeries):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def describe(self) -> Dict[str, Any]:
        return {
            "pi": str(self.pi),
            "orders": list(self.orders),
            "kinds": list(self.kinds),
            "members": [N.members.tolist() for N in self.chain],
        }


class SeriesList(list):
    """A list of series that remembers whether enumeration hit its cap."""

    def __init__(self, items: Sequence[NormalPiSeries] = (), truncated: bool = False):
        super().__init__(items)
        self.truncated = truncated


def enumerate_normal_pi_series(G: Group, pi: PiSet, cap: int = 64) -> SeriesList:
    """
    All strictly increasing chains of normal subgroups from 1 to G with pi or
    pi' factors, in depth-first order over the sorted normal subgroups.
    """
    if not is_pi_separable(G, pi).holds:
        raise NotPiSeparableError(f"{G.name} is not {pi}-separable")
    normals = normal_subgroups(G)
    other = pi.complement_set()
    found: List[NormalPiSeries] = []
    truncated = False

    def extend(chain: List[Group], kinds: List[str]) -> bool:
        nonlocal truncated
        current = chain[-1]
        if current.order == G.order:
            if len(found) >= cap:
                truncated = True
                return False
            found.append(NormalPiSeries(pi=pi, chain=tuple(chain), kinds=tuple(kinds)))
            return True
        for M in normals:
            if M.order <= current.order or M.order % current.order or not current.is_subgroup_of(M):
                continue
            index = M.order // current.order
            if pi.is_number(index):
                kind = PI
            elif other.is_number(index):
                kind = PI_PRIME
            else:
                continue
            if not extend(chain + [M], kinds + [kind]):
                return False
        return True

    extend([normals[0]], [])
    if truncated:
        logger.warning(f"{G.name}: normal {pi}-series enumeration truncated at {cap}")
    return SeriesList(found, truncated=truncated)


def series_from_orders(G: Group, pi: PiSet, orders: Sequence[int]) -> NormalPiSeries:
    """
    The first enumerated series whose term orders match ``orders``.

    Orders may omit the leading 1 and trailing |G|.
    """
    wanted = list(orders)
    if not wanted or wanted[0] != 1:
        wanted = [1] + wanted
    if wanted[-1] != G.order:
        wanted.append(G.order)
    for series in enumerate_normal_pi_series(G, pi, cap=10 ** 6):
        if list(series.orders) == wanted:
            return series
    raise InputError(f"no normal {pi}-series of {G.name} with orders {wanted}")
