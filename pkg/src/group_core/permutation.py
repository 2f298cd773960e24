"""
Permutations as 0-based image tuples and their 1-based cycle notation.

Products compose left to right: ``compose(g, h)`` maps x to h(g(x)).
"""

import re
from math import lcm
from typing import List, Sequence, Tuple

from src.utils.errors import PermutationSyntaxError

Perm = Tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(g: Perm, h: Perm) -> Perm:
    """The product gh: apply g first, then h."""
    return tuple(h[i] for i in g)


def invert(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, image in enumerate(g):
        out[image] = i
    return tuple(out)


def parse_cycles(text: str, degree: int) -> Perm:
    """
    Parse a product of disjoint cycles such as ``"(1 2 3)(4 5)"``.

    Points are 1-based, separated by spaces or commas. ``"()"`` or an empty
    string is the identity.
    """
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise PermutationSyntaxError(f"malformed cycle text {text!r}")

    images = list(range(degree))
    seen: set = set()
    for body in _CYCLE.findall(stripped):
        tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        try:
            points = [int(t) - 1 for t in tokens]
        except ValueError as e:
            raise PermutationSyntaxError(f"non-numeric point in {text!r}") from e
        for p in points:
            if not 0 <= p < degree:
                raise PermutationSyntaxError(f"point {p + 1} out of range 1..{degree} in {text!r}")
            if p in seen:
                raise PermutationSyntaxError(f"cycles are not disjoint in {text!r}")
            seen.add(p)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return tuple(images)


def to_cycles(g: Perm) -> str:
    """1-based cycle notation, fixed points omitted; the identity is ``"()"``."""
    seen = [False] * len(g)
    parts: List[str] = []
    for start in range(len(g)):
        if seen[start] or g[start] == start:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(str(x + 1))
            x = g[x]
        parts.append("(" + " ".join(cycle) + ")")
    return "".join(parts) or "()"


def perm_order(g: Sequence[int]) -> int:
    seen = [False] * len(g)
    order = 1
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = g[x]
            length += 1
        order = lcm(order, length)
    return order
