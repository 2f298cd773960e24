"""
The three equivalent descriptions of an N-pi-lift.

For chi in Irr(G) with self-stabilizing pair (V, gamma) along N:

1. chi is an N-pi-lift;
2. (V, gamma) is inductive for N;
3. gamma = alpha * beta with alpha pi-special, beta pi'-special and linear,
   and (V, alpha) inductive for N.

``check_main1`` evaluates all three and reports whether they agree.
"""

import logging

from src.char_table.table import Character
from src.group_core.series import NormalPiSeries
from src.lift_analysis.inductive import is_inductive_pair
from src.lift_analysis.lifts import is_chain_pi_lift
from src.models.reports import Main1Report
from src.towers.pairs import CharacterPair, self_stabilizing_pair

logger = logging.getLogger(__name__)


def check_main1(chi: Character, series: NormalPiSeries) -> Main1Report:
    chain = is_chain_pi_lift(chi, series)
    ssp = self_stabilizing_pair(chi, series)
    gamma_check = is_inductive_pair(ssp.pair, series)

    alpha = beta = None
    beta_linear = None
    alpha_summary = None
    condition3 = False
    factorization = ssp.factorization
    if factorization is not None:
        alpha, beta = factorization.alpha, factorization.beta
        beta_linear = beta.degree_int == 1
        alpha_check = is_inductive_pair(CharacterPair(ssp.subgroup, alpha), series)
        alpha_summary = alpha_check.summary()
        condition3 = beta_linear and alpha_check.holds

    conditions = (chain.holds, gamma_check.holds, condition3)
    verdict = len(set(conditions)) == 1
    if not verdict:
        logger.warning(f"{chi.group.name} row {chi.index}, series {series.label()}: conditions {conditions} disagree")
    return Main1Report(
        group=chi.group.name,
        pi=str(series.pi),
        series=series.label(),
        character=chi.index,
        degree=chi.degree_int,
        pair=ssp.pair.summary(),
        condition1=chain.holds,
        condition2=gamma_check.holds,
        condition3=condition3,
        nonlifting_levels=list(chain.failing_levels),
        gamma_inductive=gamma_check.summary(),
        alpha=None if alpha is None else alpha.index,
        beta=None if beta is None else beta.index,
        beta_linear=beta_linear,
        alpha_inductive=alpha_summary,
        verdict=verdict,
    )
