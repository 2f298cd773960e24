"""
A family of N-pi-lifts indexed by linear characters of pi'-order.

For phi in I_pi(G), let chi be its lift in B_pi(G : N) with self-stabilizing
pair (V, gamma). Each linear beta of V with pi'-order gives (gamma beta)^G;
these are distinct N-pi-lifts of phi, so phi has at least |V : V'|_pi'
N-pi-lifts.
"""

import logging
from typing import List, Tuple

from src.char_table.operations import determinant_order, induce
from src.char_table.table import Character, character_table, pointwise
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries
from src.group_core.structure import pi_prime_index_of_abelianization
from src.lift_analysis.lifts import is_chain_pi_lift, nchain_lift_count
from src.models.reports import Main2Report
from src.pi_theory.partial import PartialCharacter, ipi
from src.towers.bpi import bpi_chain
from src.towers.pairs import self_stabilizing_pair
from src.utils.errors import NotACharacterError

logger = logging.getLogger(__name__)


def pi_prime_linear_characters(V: Group, pi: PiSet) -> Tuple[Character, ...]:
    """Linear characters of V whose order is a pi'-number."""
    other = pi.complement_set()
    return tuple(
        chi for chi in character_table(V).rows if chi.degree_int == 1 and other.is_number(determinant_order(chi))
    )


def main2_lift_family(phi: PartialCharacter, series: NormalPiSeries) -> Main2Report:
    G = series.group
    pi = series.pi
    ptable = ipi(G, pi)
    member = ptable.index_of(phi)
    if member is None:
        raise NotACharacterError(f"{phi!r} is not an irreducible pi-partial character")
    bpi = bpi_chain(G, pi, series)
    chi = ptable.table.rows[bpi.row_for_member(member)]
    ssp = self_stabilizing_pair(chi, series)
    V, gamma = ssp.subgroup, ssp.character
    betas = pi_prime_linear_characters(V, pi)

    images: List[int] = []
    irreducible = True
    for beta in betas:
        product = character_table(V).match(pointwise(gamma, beta))
        induced = None if product is None else ptable.table.match(induce(product, G))
        if induced is None:
            irreducible = False
            continue
        images.append(induced.index)

    table = ptable.table
    lifts = all(ptable.member_of_row(i) == member for i in images)
    chain_lifts = all(is_chain_pi_lift(table.rows[i], series).holds for i in images)
    distinct = len(set(images)) == len(images)
    bound = len(betas)
    index_bound = pi_prime_index_of_abelianization(V, pi)
    count = nchain_lift_count(phi, series)
    holds = irreducible and distinct and lifts and chain_lifts and bound == index_bound and bound <= count
    if not holds:
        logger.warning(f"{G.name}, series {series.label()}, member {member}: lift family check failed")
    return Main2Report(
        group=G.name,
        pi=str(pi),
        series=series.label(),
        phi=member,
        chi=chi.index,
        pair=ssp.pair.summary(),
        betas=[b.index for b in betas],
        images=images,
        bound=bound,
        index_bound=index_bound,
        count=count,
        distinct=distinct,
        irreducible=irreducible,
        lifts=lifts,
        chain_lifts=chain_lifts,
        holds=holds,
    )
