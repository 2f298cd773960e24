"""
Property suite for one group and prime set.

Each property is tallied on a ``CheckRecorder``; a failure becomes an
anomaly with a witness instead of an exception, so a suite always runs to
the end. Engine consistency errors (``EngineAnomaly``) raised while checking
a property are recorded the same way.
"""

import logging
import time
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence

import numpy as np

from src.char_table.operations import (
    frobenius_reciprocity_holds,
    induce,
    induction_is_transitive,
    restrict,
    restrict_constituents,
)
from src.char_table.table import Character, character_table, orthogonality_checks, pointwise
from src.config import get_settings
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries, enumerate_normal_pi_series
from src.group_core.structure import conjugacy_classes, subnormal_subgroups
from src.lift_analysis.inductive import is_inductive_pair, is_inductive_source
from src.lift_analysis.lifts import is_chain_pi_lift, is_pi_lift
from src.lift_analysis.main1 import check_main1
from src.lift_analysis.main2 import main2_lift_family
from src.models.reports import CheckRecorder, CorpusEntryReport
from src.pi_theory.oracle import ipi_bruteforce
from src.pi_theory.partial import ipi, lifts_of, pi_classes, restrict_to_pi
from src.pi_theory.special import is_pi_special, pi_factorize, special_characters
from src.towers.bpi import bpi_chain, check_compatible_lift_set, lift_system_bpi
from src.towers.pairs import CharacterPair, is_conjugate_into, pairs_conjugate, self_stabilizing_pair
from src.towers.towers import character_towers, tower_stabilizer
from src.utils.errors import EngineAnomaly

logger = logging.getLogger(__name__)


@contextmanager
def _guard(recorder: CheckRecorder, name: str, witness: Dict[str, Any]) -> Iterator[None]:
    try:
        yield
    except EngineAnomaly as e:
        recorder.anomaly(e.check, str(e), {**witness, **e.witness, "during": name})


def _subgroup_pool(G: Group) -> List[Group]:
    """Subnormal subgroups and the cyclic subgroups of class representatives."""
    found = {S.key: S for S in subnormal_subgroups(G)}
    for rep in conjugacy_classes(G).representatives:
        C = G.subgroup_generated([int(rep)])
        found.setdefault(C.key, C)
    return sorted(found.values(), key=lambda S: (S.order, tuple(S.members.tolist())))


def _table_checks(G: Group, recorder: CheckRecorder, rng: np.random.Generator, samples: int) -> None:
    table = character_table(G)
    for name, ok in orthogonality_checks(table).items():
        recorder.record(f"table.{name}", ok, f"{name} fails for {G.name}")

    pool = _subgroup_pool(G)
    for _ in range(samples):
        H = pool[int(rng.integers(len(pool)))]
        sub = character_table(H)
        theta = sub.rows[int(rng.integers(len(sub.rows)))]
        chi = table.rows[int(rng.integers(len(table.rows)))]
        witness = {"subgroup": H.members.tolist(), "theta": theta.index, "chi": chi.index}
        recorder.record("table.frobenius_reciprocity", frobenius_reciprocity_holds(theta, chi), "", witness)
        mults = [0] * len(sub.rows)
        for psi, m in restrict_constituents(chi, H).constituents:
            mults[psi.index] = m
        recorder.record(
            "table.restriction_constituents",
            tuple(sub.combination(mults).values) == tuple(restrict(chi, H).values),
            "constituents do not rebuild the restriction",
            witness,
        )

    chains = [(H, K) for K in pool for H in pool if H.order < K.order < G.order and H.is_subgroup_of(K)]
    for _ in range(min(samples, len(chains))):
        H, K = chains[int(rng.integers(len(chains)))]
        theta = character_table(H).rows[int(rng.integers(len(character_table(H).rows)))]
        recorder.record(
            "table.induction_transitivity",
            induction_is_transitive(theta, K, G),
            "",
            {"inner": H.members.tolist(), "middle": K.members.tolist(), "theta": theta.index},
        )


def _ipi_checks(G: Group, pi: PiSet, recorder: CheckRecorder) -> None:
    ptable = ipi(G, pi)
    recorder.record(
        "ipi.count",
        len(ptable) == len(pi_classes(G, pi)),
        f"|I_pi| = {len(ptable)} but there are {len(pi_classes(G, pi))} pi-classes",
    )
    if G.order <= get_settings().verification.oracle_order_limit:
        oracle = {m.values for m in ipi_bruteforce(G, pi)}
        greedy = {m.values for m in ptable.members}
        recorder.record("ipi.oracle", oracle == greedy, "greedy and exhaustive I_pi differ")
    table = ptable.table
    for chi in table.rows:
        if chi.degree_int == 1:
            recorder.record("ipi.linear_lifts", is_pi_lift(chi, pi), "", {"chi": chi.index})
        factorization = pi_factorize(chi, pi)
        if factorization is not None:
            a, b = factorization.alpha.degree_int, factorization.beta.degree_int
            recorder.record(
                "special.factor_degrees",
                chi.degree_int == a * b and pi.is_number(a) and pi.complement_set().is_number(b),
                "",
                {"chi": chi.index, **factorization.describe()},
            )


def _check_towers_and_pairs(chi: Character, series: NormalPiSeries, recorder: CheckRecorder) -> None:
    ssp = self_stabilizing_pair(chi, series)
    w = {"series": series.label(), "chi": chi.index}
    T = ssp.subgroup
    recorder.record(
        "pair.degree",
        chi.degree_int == (chi.group.order // T.order) * ssp.character.degree_int,
        "",
        w,
    )
    if ssp.towers_conjugate is not None:
        recorder.record("pair.towers_conjugate", ssp.towers_conjugate, "towers give non-conjugate pairs", w)
    if is_pi_special(ssp.character, series.pi):
        recorder.record(
            "corollary.selfind",
            is_inductive_pair(ssp.pair, series).holds,
            "self-stabilizing pair with pi-special character is not inductive",
            w,
        )


def _check_inductive(pair: CharacterPair, series: NormalPiSeries, recorder: CheckRecorder) -> None:
    """Consequences of (V, gamma) being inductive."""
    G = series.group
    V, gamma = pair.subgroup, pair.character
    w = {"series": series.label(), "subgroup": V.members.tolist(), "gamma": gamma.index}
    induced = character_table(G).match(induce(gamma, G))
    ok = recorder.record("lemma.inductive.irreducible", induced is not None, "gamma^G is reducible", w)
    if not ok:
        return
    recorder.record("lemma.inductive.lift", is_chain_pi_lift(induced, series).holds, "gamma^G is not an N-pi-lift", w)
    recorder.record("lemma.inductive.factored", pi_factorize(gamma, series.pi) is not None, "gamma is not pi-factored", w)
    U = self_stabilizing_pair(induced, series).subgroup
    recorder.record(
        "lemma.containment",
        is_conjugate_into(V, U, G),
        "V is not conjugate into the self-stabilizing subgroup",
        {**w, "chi": induced.index, "pair_subgroup": U.members.tolist()},
    )


def _check_factored(chi: Character, series: NormalPiSeries, recorder: CheckRecorder) -> List[CharacterPair]:
    """(V, gamma) inductive iff beta linear and (V, alpha) inductive; returns the inductive pairs seen."""
    ssp = self_stabilizing_pair(chi, series)
    w = {"series": series.label(), "chi": chi.index}
    found = []
    gamma_inductive = is_inductive_pair(ssp.pair, series).holds
    if gamma_inductive:
        found.append(ssp.pair)
    factorization = ssp.factorization
    if factorization is None:
        recorder.record("lemma.factored", not gamma_inductive, "inductive pair character is not pi-factored", w)
        return found
    alpha_pair = CharacterPair(ssp.subgroup, factorization.alpha)
    alpha_inductive = is_inductive_pair(alpha_pair, series).holds
    if alpha_inductive:
        found.append(alpha_pair)
    expected = factorization.beta.degree_int == 1 and alpha_inductive
    recorder.record("lemma.factored", gamma_inductive == expected, "", {**w, **factorization.describe()})
    return found


def _homogeneous_along(beta: Character, series: NormalPiSeries) -> bool:
    V = beta.group
    return all(restrict_constituents(beta, V.intersection(N)).homogeneous is not None for N in series.chain)


def _check_special_pair(chi: Character, series: NormalPiSeries, recorder: CheckRecorder) -> List[CharacterPair]:
    """Degree, map and self-stabilizing checks for chi in B_pi(G : N)."""
    G = series.group
    pi = series.pi
    ssp = self_stabilizing_pair(chi, series)
    V, alpha = ssp.subgroup, ssp.character
    w = {"series": series.label(), "chi": chi.index, "subgroup": V.members.tolist()}
    table_G = character_table(G)
    table_V = character_table(V)

    recorder.record("lemma.degree.pi_number", pi.is_number(alpha.degree_int), "", w)
    target = restrict_to_pi(chi, pi)
    sigmas = np.flatnonzero(special_characters(table_V, pi))
    recorder.record(
        "lemma.degree.special_source",
        any(restrict_to_pi(induce(table_V.rows[int(s)], G), pi) == target for s in sigmas),
        "no pi-special character induces onto chi^0",
        w,
    )

    for level in ssp.levels:
        W = level.intersection
        recorder.record(
            "corollary.map.inductive_source",
            is_inductive_source(W, level.character, V),
            "",
            {**w, "level": level.level},
        )

    found = []
    images = []
    for b in np.flatnonzero(special_characters(table_V, pi.complement_set())):
        beta = table_V.rows[int(b)]
        bw = {**w, "beta": beta.index}
        product = table_V.match(pointwise(alpha, beta))
        if not recorder.record("corollary.map.product", product is not None, "alpha * beta is reducible", bw):
            continue
        induced = table_G.match(induce(product, G))
        recorder.record("corollary.map.irreducible", induced is not None, "", bw)
        if induced is not None:
            images.append(induced.index)
        if induced is not None and _homogeneous_along(beta, series):
            pair = CharacterPair(V, product)
            recorder.record(
                "lemma.indself",
                pairs_conjugate(self_stabilizing_pair(induced, series).pair, pair, G),
                "(V, alpha * beta) is not self-stabilizing",
                {**w, "beta": beta.index, "chi": induced.index},
            )
            if is_inductive_pair(pair, series).holds:
                found.append(pair)
    recorder.record("corollary.map.injective", len(set(images)) == len(images), "", {**w, "images": images})
    return found


def _check_common_chains(G: Group, series: NormalPiSeries, recorder: CheckRecorder, limit: int) -> None:
    pi = series.pi
    bpi = bpi_chain(G, pi, series)
    table = bpi.ptable.table
    for member in range(len(bpi.ptable)):
        psi = table.rows[bpi.row_for_member(member)]
        psi_towers = character_towers(psi, series)[:limit]
        for chi in lifts_of(bpi.ptable.members[member]):
            if not is_chain_pi_lift(chi, series).holds:
                continue
            for U in character_towers(chi, series)[:limit]:
                for T in psi_towers:
                    if not all(
                        restrict_to_pi(nu, pi) == restrict_to_pi(tau, pi)
                        for nu, tau in zip(U.characters, T.characters)
                    ):
                        continue
                    recorder.record(
                        "lemma.commonchains",
                        tower_stabilizer(U).is_subgroup_of(tower_stabilizer(T)),
                        "",
                        {"series": series.label(), "psi": psi.index, "chi": chi.index, "U": list(U.rows), "T": list(T.rows)},
                    )


def _series_checks(G: Group, series: NormalPiSeries, recorder: CheckRecorder) -> None:
    pi = series.pi
    table = character_table(G)
    label = series.label()
    limit = get_settings().verification.tower_conjugacy_limit

    with _guard(recorder, "lift_system", {"series": label}):
        check_compatible_lift_set(lift_system_bpi(G, pi, series), recorder)

    inductive: Dict[CharacterPair, CharacterPair] = {}
    for chi in table.rows:
        w = {"series": label, "chi": chi.index}
        with _guard(recorder, "main1", w):
            report = check_main1(chi, series)
            recorder.record("main1.verdict", report.verdict, "conditions disagree", {**w, **report.model_dump()})
        with _guard(recorder, "pair", w):
            _check_towers_and_pairs(chi, series, recorder)
            for pair in _check_factored(chi, series, recorder):
                inductive.setdefault(pair, pair)

    with _guard(recorder, "bpi", {"series": label}):
        for chi in bpi_chain(G, pi, series).characters():
            with _guard(recorder, "special_pair", {"series": label, "chi": chi.index}):
                for pair in _check_special_pair(chi, series, recorder):
                    inductive.setdefault(pair, pair)

    ptable = ipi(G, pi)
    for member, phi in enumerate(ptable.members):
        w = {"series": label, "phi": member}
        with _guard(recorder, "main2", w):
            report = main2_lift_family(phi, series)
            recorder.record("main2.holds", report.holds, "lift family check failed", {**w, **report.model_dump()})
            recorder.record("main2.bound", report.bound <= report.count, "", w)

    for pair in inductive.values():
        with _guard(recorder, "inductive", {"series": label, "gamma": pair.character.index}):
            _check_inductive(pair, series, recorder)

    with _guard(recorder, "commonchains", {"series": label}):
        _check_common_chains(G, series, recorder, limit)


def run_property_suite(
    G: Group,
    pi: PiSet,
    series: Optional[Sequence[NormalPiSeries]] = None,
    recorder: Optional[CheckRecorder] = None,
) -> CorpusEntryReport:
    """
    Run every property on G for pi.

    Args:
        G: a pi-separable group
        pi: the prime set
        series: the normal pi-series to examine; all of them (up to the cap) when omitted
        recorder: an existing recorder to add to
    """
    settings = get_settings().verification
    started = time.perf_counter()
    recorder = recorder or CheckRecorder({"group": G.name, "pi": str(pi)})
    truncated = False
    if series is None:
        enumerated = enumerate_normal_pi_series(G, pi, cap=settings.series_cap)
        truncated = enumerated.truncated
        series = list(enumerated)

    rng = np.random.default_rng([settings.seed, G.order])
    with _guard(recorder, "table", {}):
        _table_checks(G, recorder, rng, settings.reciprocity_samples)
    with _guard(recorder, "ipi", {}):
        _ipi_checks(G, pi, recorder)
    for S in series:
        _series_checks(G, S, recorder)

    failed = sum(t.failed for t in recorder.tallies)
    logger.info(f"{G.name}, pi={pi}: {len(series)} series, {failed} failed checks")
    return CorpusEntryReport(
        group=G.name,
        order=G.order,
        pi=str(pi),
        series=[S.label() for S in series],
        series_truncated=truncated,
        tallies=recorder.tallies,
        anomalies=recorder.anomalies,
        seconds=round(time.perf_counter() - started, 3) if settings.include_timing else None,
    )
