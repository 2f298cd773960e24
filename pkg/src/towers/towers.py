"""
Character towers along a normal pi-series.

A tower for chi is nu_0, nu_1, ..., nu_n = chi with nu_i in Irr(N_i) a
constituent of nu_{i+1} restricted to N_i. Towers are enumerated top-down
and listed by their row indices, bottom level first.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np

from src.char_table.operations import restriction_matrix, stabilizer_of_rows
from src.char_table.table import Character, character_table
from src.group_core.group import Group
from src.group_core.series import NormalPiSeries
from src.utils.errors import GroupMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CharacterTower:
    series: NormalPiSeries
    characters: Tuple[Character, ...]

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(c.index for c in self.characters)

    @property
    def top(self) -> Character:
        return self.characters[-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterTower):
            return NotImplemented
        return self.series == other.series and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.series, self.rows))

    def describe(self) -> Dict[str, Any]:
        return {"series": self.series.label(), "rows": list(self.rows)}


def character_towers(chi: Character, series: NormalPiSeries) -> Tuple[CharacterTower, ...]:
    """Every character tower ending in chi, sorted by row indices from the bottom."""
    if chi.group is not series.group:
        raise GroupMismatchError(f"{chi.group.name} is not the top of the series")

    def compute() -> Tuple[CharacterTower, ...]:
        chain = series.chain
        partial: List[List[int]] = [[chi.index]]
        for i in range(series.length - 1, -1, -1):
            M = restriction_matrix(character_table(chain[i + 1]), chain[i])
            grown = []
            for rows in partial:
                for j in np.flatnonzero(M[rows[0]]):
                    grown.append([int(j)] + rows)
            partial = grown
        partial.sort()
        tables = [character_table(N) for N in chain]
        return tuple(
            CharacterTower(series, tuple(t.rows[r] for t, r in zip(tables, rows))) for rows in partial
        )

    return chi.table.memo(("towers", series.key, chi.index), compute)


def tower_stabilizer(tower: CharacterTower) -> Group:
    """{g in G : nu_i^g = nu_i for every level i}."""
    G = tower.series.group
    mask = np.ones(G.order, dtype=bool)
    for N, nu in zip(tower.series.chain, tower.characters):
        if N.order == 1:
            continue
        mask &= stabilizer_of_rows(N, G, [nu.index])
    return G.subgroup_from_local(np.flatnonzero(mask), name=f"{G.name}_U")
