"""
Batch verification over the builtin corpus.

Each corpus entry is a builtin group with a prime set; entries run in anyio
worker threads limited by a ``CapacityLimiter`` and their reports are merged
in corpus order, so the aggregate does not depend on the parallelism.
"""

import logging
import time
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence

import anyio
import anyio.to_thread
from sympy import primefactors

from src.config import get_settings
from src.group_core.builtins import builtin_group
from src.group_core.primes import PiSet
from src.models.reports import CorpusEntryReport, VerificationReport, merge_tallies
from src.verification.properties import run_property_suite
from src.verification.section4 import build_section4_group

logger = logging.getLogger(__name__)

DEFAULT_CORPUS = (
    "c2", "c3", "c4", "c5", "c6",
    "d6", "d8", "d10",
    "s3", "s4", "a4",
    "c7:c3", "q8", "sl23", "gl23", "e27",
    "section4",
)

ABELIAN = ("c2", "c3", "c4", "c5", "c6")


@dataclass(frozen=True)
class CorpusEntry:
    """A builtin group with a prime set; ``example_series`` picks the three series of the order-1323 example."""
    name: str
    pi: PiSet
    example_series: bool = False


def applicable_pi_sets(order: int) -> List[PiSet]:
    """Every non-empty set of prime divisors of the order."""
    primes = primefactors(order)
    return [PiSet.of(c) for k in range(1, len(primes) + 1) for c in combinations(primes, k)]


def corpus_entries(selection: Optional[Sequence[str]] = None, pi: Optional[PiSet] = None) -> List[CorpusEntry]:
    """Entries for the selected builtin names (the default corpus when omitted), in corpus order."""
    names = list(selection or DEFAULT_CORPUS)
    entries: List[CorpusEntry] = []
    for name in names:
        if name == "section4" and pi is None:
            entries.append(CorpusEntry("section4", PiSet.of([3]), example_series=True))
            continue
        G = builtin_group(name)
        for p in [pi] if pi is not None else applicable_pi_sets(G.order):
            entries.append(CorpusEntry(name, p))
    return entries


def run_entry(entry: CorpusEntry) -> CorpusEntryReport:
    if entry.example_series:
        structure = build_section4_group()
        return run_property_suite(structure.group, entry.pi, list(structure.series(entry.pi).values()))
    return run_property_suite(builtin_group(entry.name), entry.pi)


async def _run_all(entries: List[CorpusEntry], parallelism: int) -> List[CorpusEntryReport]:
    results: List[Optional[CorpusEntryReport]] = [None] * len(entries)
    limiter = anyio.CapacityLimiter(max(1, parallelism))

    async def worker(i: int) -> None:
        results[i] = await anyio.to_thread.run_sync(run_entry, entries[i], limiter=limiter)

    async with anyio.create_task_group() as tg:
        for i in range(len(entries)):
            tg.start_soon(worker, i)
    return [r for r in results if r is not None]


def aggregate(reports: List[CorpusEntryReport], seconds: Optional[float] = None) -> VerificationReport:
    anomalies = [a for r in reports for a in r.anomalies]
    return VerificationReport(
        entries=reports,
        tallies=merge_tallies([r.tallies for r in reports]),
        anomaly_count=len(anomalies),
        anomalies=anomalies,
        seconds=seconds,
    )


def run_corpus(
    selection: Optional[Sequence[str]] = None,
    parallelism: Optional[int] = None,
    pi: Optional[PiSet] = None,
) -> VerificationReport:
    """
    Run the property suite on every corpus entry.

    Args:
        selection: builtin group names; the default corpus when omitted
        parallelism: worker threads; the configured value when omitted
        pi: one prime set for every group instead of all applicable ones
    """
    settings = get_settings().verification
    entries = corpus_entries(selection, pi)
    workers = parallelism if parallelism is not None else settings.parallelism
    logger.info(f"verifying {len(entries)} corpus entries with {workers} worker(s)")
    started = time.perf_counter()
    reports = anyio.run(_run_all, entries, workers)
    seconds = round(time.perf_counter() - started, 3) if settings.include_timing else None
    report = aggregate(reports, seconds)
    logger.info(f"corpus finished: {report.anomaly_count} anomalies")
    return report
