"""
The order-1323 example: G = (C7 x C7) x| E27 with pi = {3}.

``build_section4_group`` assembles the group with handles on the subgroups
the example talks about and checks their shape. ``section4_report``
recomputes every claim about the example and records expected against
observed values.
"""

import logging
import time
from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from src.char_table.operations import conjugation_orbits, restrict_constituents, stabilizer
from src.char_table.table import Character, character_table
from src.config import get_settings
from src.group_core.builtins import Section4Construction, section4_construction
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries
from src.group_core.structure import center, derived_subgroup, is_normal
from src.lift_analysis.inductive import is_inductive_pair
from src.lift_analysis.lifts import is_chain_pi_lift, nchain_lift_count
from src.lift_analysis.main2 import main2_lift_family
from src.models.reports import ClaimCheck, Section4Report
from src.pi_theory.partial import lifts_of, pi_classes, restrict_to_pi
from src.towers.bpi import bpi_chain
from src.towers.pairs import CharacterPair, pairs_conjugate, self_stabilizing_pair
from src.utils.errors import GroupConstructionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Section4Structure:
    """
    Subgroup handles of the order-1323 group.

    - ``V = V1 x V2``: the normal Sylow 7-subgroup
    - ``E``: the extraspecial complement with center ``Z``
    - ``M1``, ``M2``: kernels of E on V1 and V2
    - ``X = Z x V`` and ``M1V``, ``M2V``
    """
    construction: Section4Construction
    V: Group
    V1: Group
    V2: Group
    E: Group
    Z: Group
    M1: Group
    M2: Group
    X: Group
    M1V: Group
    M2V: Group

    @property
    def group(self) -> Group:
        return self.construction.group

    def series(self, pi: PiSet) -> Dict[str, NormalPiSeries]:
        """The three series of the example: 1 < V < G and 1 < V < MiV < G."""
        G, one = self.group, self.group.trivial_subgroup()
        return {
            "N": NormalPiSeries.from_chain(pi, [one, self.V, G]),
            "N1": NormalPiSeries.from_chain(pi, [one, self.V, self.M1V, G]),
            "N2": NormalPiSeries.from_chain(pi, [one, self.V, self.M2V, G]),
        }

    def subgroup_orders(self) -> Dict[str, int]:
        return {
            name: getattr(self, name).order
            for name in ("V", "V1", "V2", "E", "Z", "M1", "M2", "X", "M1V", "M2V")
        }


def build_section4_group() -> Section4Structure:
    built = section4_construction()
    G = built.group
    t1, t2, a, b, c = built.t1, built.t2, built.a, built.b, built.c
    s = Section4Structure(
        construction=built,
        V=G.subgroup_generated([t1, t2], name="V"),
        V1=G.subgroup_generated([t1], name="V1"),
        V2=G.subgroup_generated([t2], name="V2"),
        E=G.subgroup_generated([a, b, c], name="E"),
        Z=G.subgroup_generated([c], name="Z"),
        M1=G.subgroup_generated([a, c], name="M1"),
        M2=G.subgroup_generated([b, c], name="M2"),
        X=G.subgroup_generated([c, t1, t2], name="X"),
        M1V=G.subgroup_generated([a, c, t1, t2], name="M1V"),
        M2V=G.subgroup_generated([b, c, t1, t2], name="M2V"),
    )
    expected = {"V": 49, "V1": 7, "V2": 7, "E": 27, "Z": 3, "M1": 9, "M2": 9, "X": 147, "M1V": 441, "M2V": 441}
    observed = s.subgroup_orders()
    if G.order != 1323 or observed != expected:
        raise GroupConstructionError(f"unexpected subgroup orders {observed} in a group of order {G.order}")
    for name in ("V", "X", "M1V", "M2V"):
        if not is_normal(getattr(s, name), G):
            raise GroupConstructionError(f"{name} is not normal in {G.name}")
    logger.debug(f"built the order-1323 example on {G.degree} points")
    return s


class _Claims:
    def __init__(self) -> None:
        self.items: List[ClaimCheck] = []

    def check(self, claim: str, expected: Any, observed: Any) -> bool:
        passed = expected == observed
        self.items.append(ClaimCheck(claim=claim, expected=expected, observed=observed, passed=passed))
        if not passed:
            logger.warning(f"claim failed: {claim}: expected {expected}, observed {observed}")
        return passed


def _orbit_sizes(orbits: List[Tuple[int, ...]]) -> List[int]:
    return sorted(len(o) for o in orbits)


def _first_chi(table: Any, V: Group) -> Optional[Character]:
    for chi in table.rows:
        if chi.degree_int == 3 and V.is_subgroup_of(chi.kernel()):
            return chi
    return None


def section4_report(pi: Optional[PiSet] = None, structure: Optional[Section4Structure] = None) -> Section4Report:
    """Recompute the order-1323 example and compare it with the expected facts."""
    pi = pi or PiSet.of([3])
    started = time.perf_counter()
    s = structure or build_section4_group()
    G = s.group
    table = character_table(G)
    claims = _Claims()

    histogram = dict(sorted(Counter(table.degrees).items()))
    claims.check("group order", 1323, G.order)
    claims.check("number of classes", 59, len(table.rows))
    claims.check("degree histogram", {1: 9, 3: 38, 9: 12}, histogram)
    claims.check("Z(G) = Z", True, center(G) == s.Z)
    claims.check("Z(E) = Z", True, center(s.E) == s.Z)
    claims.check("X = Z x V", True, s.Z.intersection(s.V).order == 1 and s.X.order == s.Z.order * s.V.order)
    claims.check("(M1V)' = V2", True, derived_subgroup(s.M1V) == s.V2)
    claims.check("(M2V)' = V1", True, derived_subgroup(s.M2V) == s.V1)

    table_V = character_table(s.V)
    orbits = [o for o in conjugation_orbits(s.V, G) if 0 not in o]
    claims.check("orbits on Irr(V) minus the trivial character", [3] * 4 + [9] * 4, _orbit_sizes(orbits))

    chi = _first_chi(table, s.V)
    if chi is None:
        raise GroupConstructionError("no degree-3 character with V in its kernel")
    phi = restrict_to_pi(chi, pi)
    lifts = [row.index for row in lifts_of(phi)]
    claims.check("lifts of phi", 13, len(lifts))
    claims.check("13 does not divide |G|", True, G.order % 13 != 0)

    over_X = restrict_constituents(chi, s.X)
    claims.check(
        "chi restricted to X is 3 times one linear character",
        3,
        over_X.homogeneous[0] if over_X.homogeneous else None,
    )
    if over_X.homogeneous:
        lam = over_X.homogeneous[1]
        claims.check("that linear character is trivial on V", True, s.V.is_subgroup_of(lam.kernel()))

    series = s.series(pi)
    kernel_V = sorted(row.index for row in table.rows if s.V.is_subgroup_of(row.kernel()))
    claims.check("number of pi-classes", 11, len(pi_classes(G, pi)))
    claims.check("characters with V in the kernel", 11, len(kernel_V))
    bpi = bpi_chain(G, pi, series["N"])
    claims.check("B_pi(G : N) = Irr(G/V)", kernel_V, sorted(bpi.rows))

    betas = [
        beta.index for beta in table_V.rows if beta.kernel() == s.V1 or beta.kernel() == s.V2
    ]
    claims.check("size of the beta family", 12, len(betas))
    beta_orbits = [o for o in conjugation_orbits(s.V, G) if set(o) <= set(betas)]
    claims.check("beta family orbits", [3] * 4, _orbit_sizes(beta_orbits))
    stabilizers_ok = True
    for index in betas:
        beta = table_V.rows[index]
        wanted = s.M1V if beta.kernel() == s.V2 else s.M2V
        stabilizers_ok = stabilizers_ok and stabilizer(beta, G) == wanted
    claims.check("each beta is stabilized by the matching MiV", True, stabilizers_ok)

    claims.check("every lift of phi is an N-pi-lift", 13, nchain_lift_count(phi, series["N"]))

    ssp = self_stabilizing_pair(chi, series["N"])
    claims.check("self-stabilizing pair of chi along N is (G, chi)", True, ssp.pair == CharacterPair(G, chi))

    pairs: Dict[str, CharacterPair] = {"N": ssp.pair}
    families: Dict[str, List[int]] = {"B": betas}
    for i, (name, own) in enumerate((("N1", s.M1V), ("N2", s.M2V)), start=1):
        other = "N2" if name == "N1" else "N1"
        pair = self_stabilizing_pair(chi, series[name]).pair
        pairs[name] = pair
        claims.check(f"self-stabilizing pair along {name} lives on M{i}V", True, pair.subgroup == own)
        claims.check(f"delta{i} is linear", 1, pair.character.degree_int)
        claims.check(f"(M{i}V, delta{i}) is inductive for N", True, is_inductive_pair(pair, series["N"]).holds)
        claims.check(f"(M{i}V, delta{i}) is inductive for {name}", True, is_inductive_pair(pair, series[name]).holds)
        claims.check(f"(M{i}V, delta{i}) is inductive for {other}", False, is_inductive_pair(pair, series[other]).holds)
        claims.check(
            f"(M{i}V, delta{i}) is not the self-stabilizing pair along N",
            False,
            pairs_conjugate(pair, ssp.pair, G),
        )

        family = main2_lift_family(phi, series[name])
        images = sorted(family.images)
        families[f"M{i}"] = images
        claims.check(f"lift family along {name} holds", True, family.holds)
        claims.check(f"size of the lift family along {name}", 7, len(images))
        claims.check(f"chi lies in the lift family along {name}", True, chi.index in images)
        claims.check(
            f"members of the family along {name} that are {other}-pi-lifts",
            [chi.index],
            [row for row in images if is_chain_pi_lift(table.rows[row], series[other]).holds],
        )

    claims.check("the two lift families meet in chi", [chi.index], sorted(set(families["M1"]) & set(families["M2"])))
    claims.check(
        "the two lift families cover the lifts of phi",
        sorted(lifts),
        sorted(set(families["M1"]) | set(families["M2"])),
    )

    passed = all(c.passed for c in claims.items)
    seconds = round(time.perf_counter() - started, 3) if get_settings().verification.include_timing else None
    logger.info(f"order-1323 example: {sum(c.passed for c in claims.items)}/{len(claims.items)} claims hold")
    return Section4Report(
        group_order=G.order,
        degree=G.degree,
        class_count=len(table.rows),
        subgroup_orders=s.subgroup_orders(),
        degree_histogram=histogram,
        chi=chi.index,
        phi_degree=phi.degree,
        lifts=sorted(lifts),
        lift_count=len(lifts),
        series={name: list(S.orders) for name, S in series.items()},
        pairs={name: p.summary() for name, p in pairs.items()},
        families=families,
        claims=claims.items,
        passed=passed,
        seconds=seconds,
    )
