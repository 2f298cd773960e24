"""
Character pairs and self-stabilizing pairs.

For a tower U of chi along N, T is the stabilizer of U in G and tau is the
character of T with tau^G = chi such that at every level tau restricted to
T cap N_i is t_i * tau_i with (tau_i)^{N_i} = nu_i. tau is found by
scanning Irr(T); zero or several matches are reported as anomalies.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.char_table.operations import character_action, restriction_matrix, transport_character
from src.char_table.table import Character, character_table
from src.config import get_settings
from src.group_core.group import Group
from src.group_core.series import NormalPiSeries
from src.group_core.structure import is_normal
from src.models.reports import PairSummary, TowerSummary
from src.pi_theory.special import SpecialFactorization, pi_factorize
from src.towers.towers import CharacterTower, character_towers, tower_stabilizer
from src.utils.errors import EngineAnomaly

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CharacterPair:
    """A subgroup V of G and gamma in Irr(V)."""
    subgroup: Group
    character: Character

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterPair):
            return NotImplemented
        return self.subgroup == other.subgroup and self.character.index == other.character.index

    def __hash__(self) -> int:
        return hash((self.subgroup.key, self.character.index))

    def summary(self) -> PairSummary:
        V = self.subgroup
        return PairSummary(
            subgroup=V.name,
            subgroup_order=V.order,
            members=[int(x) for x in V.members],
            character=self.character.index,
            degree=self.character.degree_int,
        )


@dataclass(frozen=True)
class PairLevel:
    """tau restricted to T cap N_i is multiplicity * tau_i, and (tau_i)^{N_i} = nu_i."""
    level: int
    intersection: Group
    character: Character
    multiplicity: int


@dataclass(frozen=True)
class TowerOutcome:
    tower: CharacterTower
    stabilizer: Group
    candidates: Tuple[int, ...]

    def summary(self) -> TowerSummary:
        return TowerSummary(
            rows=list(self.tower.rows), stabilizer_order=self.stabilizer.order, candidates=len(self.candidates)
        )


@dataclass(frozen=True, eq=False)
class SelfStabilizingPair:
    """
    The pair (T, tau) of the canonical tower of chi.

    - ``levels``: the per-level tau_i and t_i
    - ``factorization``: tau = alpha * beta when tau is pi-factored
    - ``outcomes``: the tau search for every tower examined
    - ``towers_conjugate``: whether all towers gave conjugate pairs (None when not checked)
    """
    chi: Character
    series: NormalPiSeries
    pair: CharacterPair
    tower: CharacterTower
    levels: Tuple[PairLevel, ...]
    factorization: Optional[SpecialFactorization]
    outcomes: Tuple[TowerOutcome, ...] = field(default=())
    towers_conjugate: Optional[bool] = None

    @property
    def subgroup(self) -> Group:
        return self.pair.subgroup

    @property
    def character(self) -> Character:
        return self.pair.character

    def describe(self) -> Dict[str, Any]:
        return {
            "chi": self.chi.index,
            "series": self.series.label(),
            "pair": self.pair.summary().model_dump(),
            "tower": list(self.tower.rows),
            "levels": [
                {"level": L.level, "order": L.intersection.order, "tau": L.character.index, "t": L.multiplicity}
                for L in self.levels
            ],
            "factorization": None if self.factorization is None else self.factorization.describe(),
            "towers": [o.summary().model_dump() for o in self.outcomes],
            "towers_conjugate": self.towers_conjugate,
        }


def _level_data(tau: Character, tower: CharacterTower) -> Optional[Tuple[PairLevel, ...]]:
    T = tau.group
    levels = []
    for i, (N, nu) in enumerate(zip(tower.series.chain, tower.characters)):
        W = T.intersection(N)
        row = restriction_matrix(tau.table, W)[tau.index]
        nonzero = np.flatnonzero(row)
        if nonzero.size != 1:
            return None
        small = character_table(W).rows[int(nonzero[0])]
        if small.degree_int * (N.order // W.order) != nu.degree_int:
            return None
        if restriction_matrix(nu.table, W)[nu.index, small.index] != 1:
            return None
        levels.append(PairLevel(level=i, intersection=W, character=small, multiplicity=int(row[nonzero[0]])))
    return tuple(levels)


def _search(chi: Character, tower: CharacterTower) -> Tuple[Group, List[Tuple[Character, Tuple[PairLevel, ...]]]]:
    G = chi.group
    T = tower_stabilizer(tower)
    table_T = character_table(T)
    induces = restriction_matrix(chi.table, T)[chi.index]
    index = G.order // T.order
    found = []
    for tau in table_T.rows:
        if induces[tau.index] != 1 or tau.degree_int * index != chi.degree_int:
            continue
        levels = _level_data(tau, tower)
        if levels is not None:
            found.append((tau, levels))
    return T, found


def self_stabilizing_pair(chi: Character, series: NormalPiSeries) -> SelfStabilizingPair:
    """The self-stabilizing pair of the first tower of chi."""
    def compute() -> SelfStabilizingPair:
        limit = get_settings().verification.tower_conjugacy_limit
        towers = character_towers(chi, series)
        T, found = _search(chi, towers[0])
        witness = {"group": chi.group.name, "series": series.label(), "chi": chi.index, "tower": list(towers[0].rows)}
        if len(found) != 1:
            raise EngineAnomaly(
                "self_stabilizing_pair",
                f"{len(found)} characters of the tower stabilizer satisfy the pair conditions",
                {**witness, "candidates": [tau.index for tau, _ in found]},
            )
        tau, levels = found[0]
        pair = CharacterPair(T, tau)
        outcomes = [TowerOutcome(towers[0], T, (tau.index,))]
        conjugate: Optional[bool] = None
        if len(towers) <= limit:
            conjugate = True
            for other in towers[1:]:
                T2, found2 = _search(chi, other)
                outcomes.append(TowerOutcome(other, T2, tuple(t.index for t, _ in found2)))
                if len(found2) != 1 or not pairs_conjugate(pair, CharacterPair(T2, found2[0][0]), chi.group):
                    conjugate = False
        return SelfStabilizingPair(
            chi=chi,
            series=series,
            pair=pair,
            tower=towers[0],
            levels=levels,
            factorization=pi_factorize(tau, series.pi),
            outcomes=tuple(outcomes),
            towers_conjugate=conjugate,
        )

    return chi.table.memo(("self_stabilizing_pair", series.key, chi.index), compute)


def conjugate_pair(pair: CharacterPair, g: int) -> CharacterPair:
    """(V^g, gamma^g) for a root element g."""
    V, gamma = transport_character(pair.character, g)
    return CharacterPair(V, gamma)


def conjugating_elements(V: Group, U: Group, G: Group, contained: bool = False) -> np.ndarray:
    """Root indices g in G with V^g = U (or V^g <= U when ``contained``)."""
    root = G.root
    R = root.mul
    g = G.members
    gens = V.members[list(V.generator_indices)]
    images = R[R[root.inv[g][:, None], gens[None, :]], g[:, None]]
    inside = np.isin(images, U.members).all(axis=1)
    if not contained and V.order != U.order:
        return np.zeros(0, dtype=np.int64)
    return g[inside]


def is_conjugate_into(V: Group, U: Group, G: Group) -> bool:
    """Whether V^g <= U for some g in G."""
    return conjugating_elements(V, U, G, contained=True).size > 0


def pairs_conjugate(p: CharacterPair, q: CharacterPair, G: Optional[Group] = None) -> bool:
    """Whether some g in G carries (V, gamma) to (U, delta)."""
    G = G or p.subgroup.root
    V, U = p.subgroup, q.subgroup
    if V.order != U.order or p.character.degree_int != q.character.degree_int:
        return False
    if V == U and is_normal(V, G):
        perms, _ = character_action(V, G)
        return bool(np.any(perms[:, p.character.index] == q.character.index))
    for g in conjugating_elements(V, U, G):
        if conjugate_pair(p, int(g)).character.index == q.character.index:
            return True
    return False
