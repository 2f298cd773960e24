"""
pi-lifts and N-pi-lifts.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from src.char_table.operations import restriction_matrix
from src.char_table.table import Character, character_table
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries
from src.pi_theory.partial import PartialCharacter, ipi, lifts_of

logger = logging.getLogger(__name__)


def is_pi_lift(chi: Character, pi: PiSet) -> bool:
    """Whether chi^0 lies in I_pi of chi's group."""
    return ipi(chi.group, pi).member_of_row(chi.index) is not None


@dataclass(frozen=True)
class ChainLiftCheck:
    """
    Result of the N-pi-lift test.

    ``failures[i]`` lists the rows of Irr(N_i) under chi that are not pi-lifts.
    """
    holds: bool
    failures: Dict[int, Tuple[int, ...]]

    @property
    def failing_levels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.failures))


def is_chain_pi_lift(chi: Character, series: NormalPiSeries) -> ChainLiftCheck:
    """Every irreducible constituent of chi restricted to every N in the series is a pi-lift."""
    def compute() -> ChainLiftCheck:
        failures: Dict[int, Tuple[int, ...]] = {}
        for i, N in enumerate(series.chain):
            row = restriction_matrix(chi.table, N)[chi.index]
            table = character_table(N)
            bad = tuple(int(j) for j in np.flatnonzero(row) if not is_pi_lift(table.rows[int(j)], series.pi))
            if bad:
                failures[i] = bad
        return ChainLiftCheck(holds=not failures, failures=failures)

    return chi.table.memo(("chain_lift", series.key, chi.index), compute)


def nchain_lift_count(phi: PartialCharacter, series: NormalPiSeries) -> int:
    """Number of lifts of phi that are N-pi-lifts."""
    return sum(1 for chi in lifts_of(phi) if is_chain_pi_lift(chi, series).holds)
