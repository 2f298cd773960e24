"""
Inductive pairs and inductive sources.

(V, gamma) is inductive for a normal pi-series when, for every N in the
series, gamma restricted to V cap N is a * eta for one eta in Irr(V cap N),
eta^N is irreducible, and (eta^N)^0 is an irreducible pi-partial character
of N.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.char_table.operations import character_action, induce, restriction_matrix
from src.char_table.table import Character, character_table
from src.group_core.group import Group
from src.group_core.series import NormalPiSeries
from src.group_core.structure import normalizer
from src.lift_analysis.lifts import is_pi_lift
from src.models.reports import InductiveSummary, LevelWitness
from src.towers.pairs import CharacterPair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InductiveLevel:
    level: int
    normal: Group
    intersection: Group
    multiplicity: int
    eta: Character
    induced: Optional[Character]
    induced_is_lift: bool


@dataclass(frozen=True)
class InductiveWitness:
    pair: CharacterPair
    levels: Tuple[InductiveLevel, ...]


@dataclass(frozen=True)
class InductiveCheck:
    """A witness when (V, gamma) is inductive, otherwise the first failing level."""
    pair: CharacterPair
    witness: Optional[InductiveWitness]
    failing_level: Optional[int] = None
    reason: Optional[str] = None
    levels: Tuple[InductiveLevel, ...] = ()

    @property
    def holds(self) -> bool:
        return self.witness is not None

    def summary(self) -> InductiveSummary:
        return InductiveSummary(
            inductive=self.holds,
            failing_level=self.failing_level,
            reason=self.reason,
            levels=[
                LevelWitness(
                    level=L.level,
                    normal_order=L.normal.order,
                    intersection_order=L.intersection.order,
                    multiplicity=L.multiplicity,
                    eta=L.eta.index,
                    induced=None if L.induced is None else L.induced.index,
                    induced_is_lift=L.induced_is_lift,
                )
                for L in self.levels
            ],
        )


def is_inductive_pair(pair: CharacterPair, series: NormalPiSeries) -> InductiveCheck:
    V, gamma = pair.subgroup, pair.character
    levels = []
    for i, N in enumerate(series.chain):
        W = V.intersection(N)
        row = restriction_matrix(gamma.table, W)[gamma.index]
        nonzero = np.flatnonzero(row)
        if nonzero.size != 1:
            return InductiveCheck(pair, None, i, "restriction is not homogeneous", tuple(levels))
        a = int(row[nonzero[0]])
        eta = character_table(W).rows[int(nonzero[0])]
        column = restriction_matrix(character_table(N), W)[:, eta.index]
        above = np.flatnonzero(column)
        if above.size != 1 or column[above[0]] != 1:
            levels.append(InductiveLevel(i, N, W, a, eta, None, False))
            return InductiveCheck(pair, None, i, "eta^N is reducible", tuple(levels))
        induced = character_table(N).rows[int(above[0])]
        lift = is_pi_lift(induced, series.pi)
        levels.append(InductiveLevel(i, N, W, a, eta, induced, lift))
        if not lift:
            return InductiveCheck(pair, None, i, "(eta^N)^0 is not irreducible", tuple(levels))
    return InductiveCheck(pair, InductiveWitness(pair, tuple(levels)), levels=tuple(levels))


def source_stabilizer(H: Group, theta: Character, ambient: Group) -> Group:
    """The stabilizer of the pair (H, theta) in ambient: N(H) fixing theta."""
    K = normalizer(ambient, H)
    perms, which = character_action(H, K)
    fixed = perms[:, theta.index] == theta.index
    return K.subgroup_from_local(np.flatnonzero(fixed[which]))


def is_inductive_source(H: Group, theta: Character, ambient: Group) -> bool:
    """Whether induction from Irr(T | theta) to the ambient group is injective."""
    T = source_stabilizer(H, theta, ambient)
    table_T = character_table(T)
    over = np.flatnonzero(restriction_matrix(table_T, H)[:, theta.index])
    induced = [induce(table_T.rows[int(j)], ambient).values for j in over]
    return len(set(induced)) == len(induced)
