"""
B_pi(G : N) and compatible lift systems.

B_pi(G : N) is the set of irreducible characters whose self-stabilizing
pair character is pi-special; restriction to the pi-elements maps it
bijectively onto I_pi(G). A lift system picks B_pi(N_i : N_i-truncated)
for every member of the series.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from src.char_table.operations import character_action, restriction_matrix
from src.char_table.table import Character, character_table
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries
from src.models.reports import CheckRecorder
from src.pi_theory.partial import PartialTable, ipi
from src.pi_theory.special import is_pi_special
from src.towers.pairs import self_stabilizing_pair
from src.utils.errors import EngineAnomaly, GroupMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BpiSet:
    """
    B_pi(G : N) with its restriction map.

    ``member_of[row]`` is the I_pi(G) member equal to the restriction of
    that row; the map is a bijection.
    """
    series: NormalPiSeries
    rows: Tuple[int, ...]
    member_of: Dict[int, int]
    ptable: PartialTable

    @property
    def group(self) -> Group:
        return self.series.group

    def row_for_member(self, member: int) -> int:
        for row, j in self.member_of.items():
            if j == member:
                return row
        raise KeyError(member)

    def characters(self) -> Tuple[Character, ...]:
        table = self.ptable.table
        return tuple(table.rows[i] for i in self.rows)


def truncate_series(series: NormalPiSeries, i: int) -> NormalPiSeries:
    """N_0 < ... < N_i as a normal pi-series of N_i."""
    return series.truncate(i)


def bpi_chain(G: Group, pi: PiSet, series: NormalPiSeries) -> BpiSet:
    """Characters of G whose self-stabilizing pair character is pi-special."""
    if series.group is not G:
        raise GroupMismatchError(f"series does not end at {G.name}")

    def compute() -> BpiSet:
        table = character_table(G)
        ptable = ipi(G, pi)
        rows = []
        member_of: Dict[int, int] = {}
        for chi in table.rows:
            pair = self_stabilizing_pair(chi, series)
            if not is_pi_special(pair.character, pi):
                continue
            rows.append(chi.index)
            j = ptable.member_of_row(chi.index)
            if j is None:
                raise EngineAnomaly(
                    "bpi_restriction",
                    f"restriction of row {chi.index} is not irreducible",
                    {"group": G.name, "series": series.label(), "chi": chi.index},
                )
            member_of[chi.index] = j
        images = sorted(member_of.values())
        if images != list(range(len(ptable))):
            raise EngineAnomaly(
                "bpi_restriction",
                f"restriction maps {len(rows)} characters onto {len(set(images))} of {len(ptable)} members",
                {"group": G.name, "series": series.label(), "rows": rows, "images": images},
            )
        logger.debug(f"B_pi({G.name} : {series.label()}) = {rows}")
        return BpiSet(series, tuple(rows), member_of, ptable)

    return G.memo(("bpi", pi, series.key), compute)


@dataclass(frozen=True)
class LiftSystem:
    """L(N_i) = B_pi(N_i : N truncated at i) for every member of the series."""
    series: NormalPiSeries
    levels: Tuple[BpiSet, ...]

    @property
    def pi(self) -> PiSet:
        return self.series.pi

    def at(self, i: int) -> BpiSet:
        return self.levels[i]


def lift_system_bpi(G: Group, pi: PiSet, series: NormalPiSeries) -> LiftSystem:
    levels = tuple(bpi_chain(N, pi, truncate_series(series, i)) for i, N in enumerate(series.chain))
    return LiftSystem(series, levels)


def check_compatible_lift_set(system: LiftSystem, recorder: Optional[CheckRecorder] = None) -> CheckRecorder:
    """
    Check a lift system: the bijection to I_pi at each level, that
    constituents of members restricted to lower levels are members, closure
    under conjugation by G and stab_G(alpha) = stab_G(alpha^0).
    """
    recorder = recorder or CheckRecorder()
    series = system.series
    G = series.group
    for i, level in enumerate(system.levels):
        N = series.chain[i]
        witness = {"series": series.label(), "level": i}
        images = sorted(level.member_of.values())
        recorder.record(
            "lift_system.bijection",
            images == list(range(len(level.ptable))) and len(images) == len(level.rows),
            f"L(N_{i}) does not restrict bijectively onto I_pi",
            witness,
        )
        table = character_table(N)
        members = set(level.rows)
        for k in range(i):
            lower = system.levels[k]
            M = restriction_matrix(table, series.chain[k])
            for row in level.rows:
                stray = [int(j) for j in np.flatnonzero(M[row]) if int(j) not in set(lower.rows)]
                recorder.record(
                    "lift_system.restriction",
                    not stray,
                    f"constituents {stray} at level {k} are not in L",
                    {**witness, "row": row, "lower_level": k},
                )
        if N.order == 1:
            continue
        perms, _ = character_action(N, G)
        decomposition = level.ptable.decomposition
        for row in level.rows:
            images_of_row = np.unique(perms[:, row])
            outside = [int(j) for j in images_of_row if int(j) not in members]
            recorder.record(
                "lift_system.conjugation",
                not outside,
                f"conjugates {outside} of row {row} are not in L",
                {**witness, "row": row},
            )
            fixes_row = perms[:, row] == row
            fixes_partial = np.all(decomposition[perms[:, row]] == decomposition[row][None, :], axis=1)
            recorder.record(
                "lift_system.stabilizer",
                bool(np.array_equal(fixes_row, fixes_partial)),
                f"stabilizers of row {row} and of its restriction differ",
                {**witness, "row": row},
            )
    return recorder
