"""
Builtin groups used by the CLI, the MCP server and the verification corpus.
"""

import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from src.group_core.constructions import build_semidirect, direct_product, linear_action
from src.group_core.group import Group
from src.group_core.permutation import Perm
from src.utils.errors import InputError

logger = logging.getLogger(__name__)


def cyclic(n: int) -> Group:
    if n < 1:
        raise InputError("cyclic group needs n >= 1")
    if n == 1:
        return Group(1, [], name="C1")
    return Group(n, [tuple(list(range(1, n)) + [0])], name=f"C{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given order (>= 6) on order/2 points."""
    n = order // 2
    if order % 2 or n < 3:
        raise InputError(f"dihedral groups are built for even orders >= 6, got {order}")
    rotation = tuple(list(range(1, n)) + [0])
    reflection = tuple((n - i) % n for i in range(n))
    return Group(n, [rotation, reflection], name=f"D{order}")


def symmetric(n: int) -> Group:
    if not 1 <= n <= 5:
        raise InputError("symmetric groups are provided for n <= 5")
    if n == 1:
        return Group(1, [], name="S1")
    if n == 2:
        return Group(2, [(1, 0)], name="S2")
    return Group.from_cycles(n, ["(1 2)", "(" + " ".join(str(i) for i in range(1, n + 1)) + ")"], name=f"S{n}")


def alternating(n: int) -> Group:
    if not 3 <= n <= 5:
        raise InputError("alternating groups are provided for 3 <= n <= 5")
    return Group.from_cycles(n, [f"(1 2 {k})" for k in range(3, n + 1)], name=f"A{n}")


def klein_four() -> Group:
    return Group.from_cycles(4, ["(1 2)(3 4)", "(1 3)(2 4)"], name="V4")


def frobenius_21() -> Group:
    return Group.from_cycles(7, ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], name="C7:C3")


def sl23() -> Group:
    return linear_action(3, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]], name="SL(2,3)")


def gl23() -> Group:
    return linear_action(3, [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[2, 0], [0, 1]]], name="GL(2,3)")


def quaternion_8() -> Group:
    return linear_action(3, [[[0, 2], [1, 0]], [[1, 1], [1, 2]]], name="Q8")


def _heisenberg_point(x: int, y: int) -> int:
    return (x % 3) + 3 * (y % 3)


def _heisenberg_generators() -> List[Perm]:
    """A: (x, y) -> (x + y, y), B: (x, y) -> (x, y + 1), C: (x, y) -> (x + 1, y)."""
    points = [(x, y) for y in range(3) for x in range(3)]
    maps = [
        lambda x, y: (x + y, y),
        lambda x, y: (x, y + 1),
        lambda x, y: (x + 1, y),
    ]
    return [tuple(_heisenberg_point(*f(x, y)) for (x, y) in points) for f in maps]


def extraspecial_27() -> Group:
    """The extraspecial group of order 27 and exponent 3 on 9 points."""
    return Group(9, _heisenberg_generators(), name="E27")


@dataclass(frozen=True)
class Section4Construction:
    """
    The order-1323 example C7^2 x| E27 with its generator handles.

    Root indices: ``t1``, ``t2`` translate the two C7 factors; ``a``, ``b``,
    ``c`` are the images of E27's generators A, B and the central C. A acts
    trivially on the first factor and squares the second, B squares the first
    and fixes the second, C acts trivially.
    """
    group: Group
    t1: int
    t2: int
    a: int
    b: int
    c: int


def section4_construction() -> Section4Construction:
    V = direct_product(cyclic(7), cyclic(7), name="V")
    E = extraspecial_27()
    g1, g2 = V.generators

    def square(g: Perm) -> Perm:
        return tuple(g[i] for i in g)

    action = [
        [g1, square(g2)],
        [square(g1), g2],
        [g1, g2],
    ]
    built = build_semidirect(V, E, action, name="G1323")
    t1, t2 = built.normal_generators
    a, b, c = built.acting_generators
    return Section4Construction(group=built.group, t1=t1, t2=t2, a=a, b=b, c=c)


def section4_group() -> Group:
    return section4_construction().group


_FIXED: Dict[str, Callable[[], Group]] = {
    "klein4": klein_four,
    "c2xc2": klein_four,
    "a3": lambda: alternating(3),
    "a4": lambda: alternating(4),
    "a5": lambda: alternating(5),
    "c7:c3": frobenius_21,
    "f21": frobenius_21,
    "sl23": sl23,
    "gl23": gl23,
    "q8": quaternion_8,
    "e27": extraspecial_27,
    "section4": section4_group,
}

_PATTERNS: Tuple[Tuple[re.Pattern, Callable[[int], Group]], ...] = (
    (re.compile(r"^c(\d+)$"), cyclic),
    (re.compile(r"^d(\d+)$"), dihedral),
    (re.compile(r"^s(\d+)$"), symmetric),
)


def builtin_group(name: str) -> Group:
    """Look up a builtin group such as ``s3``, ``c6``, ``d8``, ``a4`` or ``section4``."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    for pattern, factory in _PATTERNS:
        match = pattern.match(key)
        if match:
            return factory(int(match.group(1)))
    raise InputError(f"unknown builtin group {name!r}")


def builtin_names() -> List[str]:
    return ["c<n>", "d<2n>", "s1..s5"] + sorted(_FIXED)
