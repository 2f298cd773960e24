"""
Report schemas shared by the verification harness, the CLI and the MCP tools.

Field names are stable; timing fields stay ``None`` unless timing is enabled
so repeated runs serialize identically.
"""

import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)


class Anomaly(BaseModel):
    """A failed check with enough context to re-run it."""
    check: str
    message: str
    witness: Dict[str, Any] = Field(default_factory=dict)


class PropertyTally(BaseModel):
    name: str
    passed: int = 0
    failed: int = 0


class PairSummary(BaseModel):
    """A character pair (V, gamma): members are root element indices."""
    subgroup: str
    subgroup_order: int
    members: List[int]
    character: int
    degree: int


class TowerSummary(BaseModel):
    rows: List[int]
    stabilizer_order: int
    candidates: Optional[int] = None


class LevelWitness(BaseModel):
    """Per-level data of an inductive pair: gamma on V cap N is a * eta."""
    level: int
    normal_order: int
    intersection_order: int
    multiplicity: int
    eta: int
    induced: Optional[int] = None
    induced_is_lift: bool = True


class InductiveSummary(BaseModel):
    inductive: bool
    failing_level: Optional[int] = None
    reason: Optional[str] = None
    levels: List[LevelWitness] = Field(default_factory=list)


class Main1Report(BaseModel):
    group: str
    pi: str
    series: str
    character: int
    degree: int
    pair: Optional[PairSummary] = None
    condition1: bool
    condition2: bool
    condition3: bool
    nonlifting_levels: List[int] = Field(default_factory=list)
    gamma_inductive: Optional[InductiveSummary] = None
    alpha: Optional[int] = None
    beta: Optional[int] = None
    beta_linear: Optional[bool] = None
    alpha_inductive: Optional[InductiveSummary] = None
    verdict: bool


class Main2Report(BaseModel):
    group: str
    pi: str
    series: str
    phi: int
    chi: Optional[int] = None
    pair: Optional[PairSummary] = None
    betas: List[int] = Field(default_factory=list)
    images: List[int] = Field(default_factory=list)
    bound: int = 0
    index_bound: int = 0
    count: int = 0
    distinct: bool = True
    irreducible: bool = True
    lifts: bool = True
    chain_lifts: bool = True
    holds: bool = True


class ClaimCheck(BaseModel):
    """One checked statement about the order-1323 example."""
    claim: str
    expected: Any = None
    observed: Any = None
    passed: bool


class Section4Report(BaseModel):
    group_order: int
    degree: int
    class_count: int
    subgroup_orders: Dict[str, int]
    degree_histogram: Dict[int, int]
    chi: int
    phi_degree: int
    lifts: List[int]
    lift_count: int
    series: Dict[str, List[int]]
    pairs: Dict[str, PairSummary]
    families: Dict[str, List[int]]
    claims: List[ClaimCheck]
    passed: bool
    seconds: Optional[float] = None


class CorpusEntryReport(BaseModel):
    group: str
    order: int
    pi: str
    series: List[str]
    series_truncated: bool = False
    tallies: List[PropertyTally] = Field(default_factory=list)
    anomalies: List[Anomaly] = Field(default_factory=list)
    seconds: Optional[float] = None


class VerificationReport(BaseModel):
    entries: List[CorpusEntryReport] = Field(default_factory=list)
    tallies: List[PropertyTally] = Field(default_factory=list)
    anomaly_count: int = 0
    anomalies: List[Anomaly] = Field(default_factory=list)
    seconds: Optional[float] = None

    @property
    def ok(self) -> bool:
        return self.anomaly_count == 0


class CheckRecorder:
    """
    Collects pass/fail counts per property and the anomalies behind failures.

    Properties keep their first-seen order so reports are reproducible.
    """

    def __init__(self, context: Optional[Dict[str, Any]] = None):
        self.context = dict(context or {})
        self._tallies: Dict[str, PropertyTally] = {}
        self.anomalies: List[Anomaly] = []

    def record(self, name: str, ok: bool, message: str = "", witness: Optional[Dict[str, Any]] = None) -> bool:
        tally = self._tallies.setdefault(name, PropertyTally(name=name))
        if ok:
            tally.passed += 1
        else:
            tally.failed += 1
            full = {**self.context, **(witness or {})}
            self.anomalies.append(Anomaly(check=name, message=message or name, witness=full))
            logger.warning(f"anomaly in {name}: {message} {full}")
        return ok

    def anomaly(self, name: str, message: str, witness: Optional[Dict[str, Any]] = None) -> None:
        self.record(name, False, message, witness)

    @property
    def tallies(self) -> List[PropertyTally]:
        return list(self._tallies.values())


def merge_tallies(groups: List[List[PropertyTally]]) -> List[PropertyTally]:
    merged: Dict[str, PropertyTally] = {}
    for tallies in groups:
        for t in tallies:
            into = merged.setdefault(t.name, PropertyTally(name=t.name))
            into.passed += t.passed
            into.failed += t.failed
    return list(merged.values())
