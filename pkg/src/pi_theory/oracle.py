"""
Brute-force I_pi(G) for small groups.

A distinct restriction chi^0 is irreducible when no multiset of other
distinct restrictions sums to it. The search is exhaustive, bounded by the
degree, and only meant to cross-check ``ipi``.
"""

from typing import List, Tuple

import numpy as np

from src.char_table.table import character_table
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.pi_theory.partial import PartialCharacter, pi_classes, restrict_to_pi


def _is_sum(target: np.ndarray, degree: int, parts: List[Tuple[int, np.ndarray]], start: int) -> bool:
    """Whether target is a sum of parts[start:] (repetition allowed)."""
    if degree == 0:
        return not target.any()
    for i in range(start, len(parts)):
        d, vec = parts[i]
        if d > degree:
            break
        if _is_sum(target - vec, degree - d, parts, i):
            return True
    return False


def ipi_bruteforce(G: Group, pi: PiSet) -> Tuple[PartialCharacter, ...]:
    """Irreducible pi-partial characters by exhaustive combination search, in row order of a witness."""
    table = character_table(G)
    classes = pi_classes(G, pi)
    restricted = table.values_array[:, classes.index_array, :]
    distinct = {}
    for i in range(len(table)):
        distinct.setdefault(np.ascontiguousarray(restricted[i]).tobytes(), i)
    rows = sorted(distinct.values())
    members = []
    for i in rows:
        others = sorted(
            ((table.degrees[j], restricted[j].astype(np.int64)) for j in rows if j != i),
            key=lambda t: t[0],
        )
        if not _is_sum(restricted[i].astype(np.int64), table.degrees[i], others, 0):
            members.append(restrict_to_pi(table.rows[i], pi))
    return tuple(members)
