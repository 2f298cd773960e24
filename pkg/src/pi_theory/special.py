"""
pi-special characters and pi-factorizations.

chi is pi-special when chi(1) is a pi-number and every irreducible
constituent of chi restricted to any subnormal subgroup has determinantal
order a pi-number. A pi-factored character is a product alpha * beta with
alpha pi-special and beta pi'-special; such a factorization is unique.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.char_table.operations import determinant_order, restriction_matrix
from src.char_table.table import CharTable, Character, character_table
from src.cyclotomic.arrays import multiply
from src.group_core.primes import PiSet
from src.group_core.structure import subnormal_subgroups
from src.utils.errors import EngineAnomaly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpecialFactorization:
    """gamma = alpha * beta with alpha pi-special and beta pi'-special."""
    alpha: Character
    beta: Character
    gamma: Character

    def describe(self) -> Dict[str, int]:
        return {"alpha": self.alpha.index, "beta": self.beta.index, "gamma": self.gamma.index}


def _determinant_orders(table: CharTable) -> np.ndarray:
    return table.memo("det_orders", lambda: np.array([determinant_order(chi) for chi in table.rows], dtype=np.int64))


def special_characters(table: CharTable, pi: PiSet) -> np.ndarray:
    """Boolean mask over the rows of table: which characters are pi-special."""
    def compute() -> np.ndarray:
        G = table.group
        mask = np.array([pi.is_number(d) for d in table.degrees], dtype=bool)
        for S in subnormal_subgroups(G):
            if not mask.any():
                break
            orders = _determinant_orders(character_table(S))
            bad = np.array([not pi.is_number(int(o)) for o in orders], dtype=bool)
            if not bad.any():
                continue
            M = restriction_matrix(table, S)
            mask &= ~(M[:, bad] > 0).any(axis=1)
        logger.debug(f"{G.name}: {int(mask.sum())} {pi}-special characters")
        return mask

    return table.memo(("special", pi), compute)


def is_pi_special(chi: Character, pi: PiSet) -> bool:
    return bool(special_characters(chi.table, pi)[chi.index])


def _factorizations(table: CharTable, pi: PiSet) -> Dict[int, List[Tuple[int, int]]]:
    """Row of every product alpha * beta of special characters that is irreducible."""
    def compute() -> Dict[int, List[Tuple[int, int]]]:
        alphas = np.flatnonzero(special_characters(table, pi))
        betas = np.flatnonzero(special_characters(table, pi.complement_set()))
        degrees = table.degrees
        order = table.group.order
        e = table.exponent
        found: Dict[int, List[Tuple[int, int]]] = {}
        for a in alphas:
            for b in betas:
                if degrees[a] * degrees[b] * degrees[a] * degrees[b] > order:
                    continue
                product = multiply(table.values_array[a], table.values_array[b], e)
                row = table.row_index_of_values(product)
                if row is not None:
                    found.setdefault(row, []).append((int(a), int(b)))
        return found

    return table.memo(("factorizations", pi), compute)


def pi_factorize(chi: Character, pi: PiSet) -> Optional[SpecialFactorization]:
    """The unique factorization chi = alpha * beta, or None when chi is not pi-factored."""
    table = chi.table
    pairs = _factorizations(table, pi).get(chi.index, [])
    if not pairs:
        return None
    if len(pairs) > 1:
        raise EngineAnomaly(
            "factorization",
            f"row {chi.index} of {chi.group.name} has {len(pairs)} special factorizations",
            {"group": chi.group.name, "row": chi.index, "pairs": pairs},
        )
    a, b = pairs[0]
    return SpecialFactorization(table.rows[a], table.rows[b], chi)


def is_pi_factored(chi: Character, pi: PiSet) -> bool:
    return pi_factorize(chi, pi) is not None
