"""
The ``pilift`` command line.

Every subcommand loads one group (``builtin:<name>`` or a ``.perm`` file),
prints text through rich or JSON, and returns its exit status: 0 on
success, 1 when a report contains anomalies, 2 on usage errors.
"""

import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence

import click
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from src.char_table.render import render_table, table_to_json
from src.char_table.table import Character, character_table
from src.config import get_settings, reset_settings
from src.group_core.builtins import builtin_group, builtin_names
from src.group_core.group import Group
from src.group_core.perm_io import read_perm_file
from src.group_core.permutation import parse_cycles
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries, enumerate_normal_pi_series, series_from_orders
from src.lift_analysis.inductive import is_inductive_pair
from src.lift_analysis.main1 import check_main1
from src.lift_analysis.main2 import main2_lift_family
from src.models.reports import CorpusEntryReport
from src.pi_theory.partial import ipi, lifts_of
from src.towers.pairs import CharacterPair, self_stabilizing_pair
from src.utils.errors import EngineAnomaly, InputError, PiliftError
from src.utils.logging import setup_logging
from src.verification.corpus import aggregate, applicable_pi_sets, run_corpus
from src.verification.properties import run_property_suite
from src.verification.section4 import section4_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ANOMALIES = 1
EXIT_USAGE = 2

console = Console()


def resolve_group(source: str) -> Group:
    """``builtin:<name>`` or a path to a ``.perm`` file."""
    if source.startswith("builtin:"):
        return builtin_group(source.split(":", 1)[1])
    path = Path(source)
    if not path.exists():
        raise InputError(f"no such group source {source!r} (builtins: {', '.join(builtin_names())})")
    return read_perm_file(path)


def resolve_series(G: Group, pi: PiSet, index: Optional[int], orders: Optional[str]) -> NormalPiSeries:
    if orders:
        try:
            wanted = [int(x) for x in orders.split(",") if x.strip()]
        except ValueError as e:
            raise InputError(f"invalid series orders {orders!r}") from e
        return series_from_orders(G, pi, wanted)
    found = enumerate_normal_pi_series(G, pi, cap=get_settings().verification.series_cap)
    i = index or 0
    if not 0 <= i < len(found):
        raise InputError(f"series index {i} out of range (0..{len(found) - 1})")
    return found[i]


def emit(data: Any, fmt: str, output: Optional[str], text: Optional[Any] = None) -> None:
    """Write JSON (or a rich renderable in text mode) to stdout or ``output``."""
    if isinstance(data, BaseModel):
        payload = data.model_dump_json(indent=2)
    else:
        payload = json.dumps(data, indent=2)
    if output:
        Path(output).write_text(payload + "\n", encoding="utf-8")
        logger.info(f"wrote {output}")
        if fmt == "json":
            return
    if fmt == "json":
        click.echo(payload)
    elif text is not None:
        console.print(text)
    else:
        console.print_json(payload)


def _group_option(f: Any) -> Any:
    return click.option("--group", "group_source", required=True, help="builtin:<name> or a .perm file")(f)


def _pi_option(f: Any) -> Any:
    return click.option("--pi", "pi_text", required=True, help="comma-separated primes, e.g. 2,3")(f)


def _series_options(f: Any) -> Any:
    f = click.option("--series", "series_index", type=int, default=None, help="index into the enumerated series")(f)
    return click.option("--orders", default=None, help="series by term orders, e.g. 1,3,6")(f)


def _output_options(f: Any) -> Any:
    f = click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")(f)
    return click.option("--output", type=click.Path(dir_okay=False), default=None)(f)


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML config file")
@click.option("--log-level", default=None)
@click.option("--log-format", type=click.Choice(["text", "json"]), default=None)
@click.option("--order-cap", type=int, default=None)
def cli(config_path: Optional[str], log_level: Optional[str], log_format: Optional[str], order_cap: Optional[int]) -> None:
    """Exact character theory of pi-separable groups."""
    if config_path:
        os.environ["PILIFT_CONFIG_PATH"] = config_path
        reset_settings()
    settings = get_settings()
    if order_cap is not None:
        settings.order_cap = order_cap
    setup_logging(log_level or settings.log_level, log_format or settings.log_format)


@cli.command()
@_group_option
@_output_options
def chartab(group_source: str, fmt: str, output: Optional[str]) -> int:
    """Print the character table."""
    table = character_table(resolve_group(group_source))
    emit(table_to_json(table), fmt, output, render_table(table))
    return EXIT_OK


@cli.command("ipi")
@_group_option
@_pi_option
@_output_options
def ipi_command(group_source: str, pi_text: str, fmt: str, output: Optional[str]) -> int:
    """Print I_pi(G) and the decomposition of every chi^0."""
    G = resolve_group(group_source)
    ptable = ipi(G, PiSet.parse(pi_text))
    text = Table(title=f"I_pi({G.name}), pi = {ptable.pi}")
    text.add_column("chi", justify="right")
    text.add_column("degree", justify="right")
    for j, m in enumerate(ptable.members):
        text.add_column(f"phi{j} ({m.degree})", justify="right")
    for chi in ptable.table.rows:
        text.add_row(f"X.{chi.index}", str(chi.degree_int), *(str(int(x)) for x in ptable.decomposition[chi.index]))
    emit(ptable.to_json(), fmt, output, text)
    return EXIT_OK


@cli.command()
@_group_option
@_pi_option
@click.option("--member", type=int, default=None, help="index into I_pi(G); every member when omitted")
@_output_options
def lifts(group_source: str, pi_text: str, member: Optional[int], fmt: str, output: Optional[str]) -> int:
    """Lifts of irreducible pi-partial characters."""
    G = resolve_group(group_source)
    ptable = ipi(G, PiSet.parse(pi_text))
    members = range(len(ptable)) if member is None else [member]
    data = []
    for j in members:
        if not 0 <= j < len(ptable):
            raise InputError(f"member {j} out of range (0..{len(ptable) - 1})")
        data.append({"member": j, "degree": ptable.members[j].degree, "lifts": [c.index for c in lifts_of(ptable.members[j], ptable)]})
    emit({"group": G.name, "pi": str(ptable.pi), "members": data}, fmt, output)
    return EXIT_OK


@cli.command()
@_group_option
@_pi_option
@_output_options
def series(group_source: str, pi_text: str, fmt: str, output: Optional[str]) -> int:
    """Enumerate the normal pi-series."""
    G = resolve_group(group_source)
    pi = PiSet.parse(pi_text)
    found = enumerate_normal_pi_series(G, pi, cap=get_settings().verification.series_cap)
    text = Table(title=f"Normal {pi}-series of {G.name}")
    text.add_column("index", justify="right")
    text.add_column("orders")
    text.add_column("factors")
    for i, S in enumerate(found):
        text.add_row(str(i), S.label(), " ".join(S.kinds))
    data = {"group": G.name, "pi": str(pi), "truncated": found.truncated, "series": [S.describe() for S in found]}
    emit(data, fmt, output, text)
    return EXIT_OK


@cli.command()
@_group_option
@_pi_option
@_series_options
@click.option("--chi", type=int, required=True, help="row of Irr(G)")
@_output_options
def pair(
    group_source: str, pi_text: str, series_index: Optional[int], orders: Optional[str], chi: int, fmt: str, output: Optional[str]
) -> int:
    """Self-stabilizing pair of one character."""
    G = resolve_group(group_source)
    S = resolve_series(G, PiSet.parse(pi_text), series_index, orders)
    emit(self_stabilizing_pair(_row(G, chi), S).describe(), fmt, output)
    return EXIT_OK


@cli.command()
@_group_option
@_pi_option
@_series_options
@click.option("--generator", "generators", multiple=True, required=True, help="generator of V in cycle notation")
@click.option("--row", type=int, required=True, help="row of Irr(V)")
@_output_options
def inductive(
    group_source: str,
    pi_text: str,
    series_index: Optional[int],
    orders: Optional[str],
    generators: Sequence[str],
    row: int,
    fmt: str,
    output: Optional[str],
) -> int:
    """Test whether a pair (V, gamma) is inductive."""
    G = resolve_group(group_source)
    S = resolve_series(G, PiSet.parse(pi_text), series_index, orders)
    V = G.subgroup_generated([parse_cycles(text, G.degree) for text in generators], name="V")
    check = is_inductive_pair(CharacterPair(V, _row(V, row)), S)
    data = {"subgroup_order": V.order, "row": row, "series": S.label(), **check.summary().model_dump()}
    emit(data, fmt, output)
    return EXIT_OK


@cli.command()
@_group_option
@_pi_option
@_series_options
@click.option("--chi", type=int, default=None, help="row of Irr(G); every row when omitted")
@_output_options
def main1(
    group_source: str, pi_text: str, series_index: Optional[int], orders: Optional[str], chi: Optional[int], fmt: str, output: Optional[str]
) -> int:
    """Compare the three descriptions of an N-pi-lift."""
    G = resolve_group(group_source)
    S = resolve_series(G, PiSet.parse(pi_text), series_index, orders)
    rows = range(len(character_table(G).rows)) if chi is None else [chi]
    reports = [check_main1(_row(G, i), S) for i in rows]
    text = Table(title=f"{G.name}, series {S.label()}")
    for name in ("chi", "degree", "pair", "(1)", "(2)", "(3)", "agree"):
        text.add_column(name)
    for r in reports:
        pair_text = "" if r.pair is None else f"{r.pair.subgroup_order}/{r.pair.character}"
        text.add_row(str(r.character), str(r.degree), pair_text, str(r.condition1), str(r.condition2), str(r.condition3), str(r.verdict))
    emit([r.model_dump() for r in reports], fmt, output, text)
    return EXIT_OK if all(r.verdict for r in reports) else EXIT_ANOMALIES


@cli.command()
@_group_option
@_pi_option
@_series_options
@click.option("--member", type=int, default=None, help="index into I_pi(G); every member when omitted")
@_output_options
def main2(
    group_source: str, pi_text: str, series_index: Optional[int], orders: Optional[str], member: Optional[int], fmt: str, output: Optional[str]
) -> int:
    """Lift families indexed by pi'-order linear characters."""
    G = resolve_group(group_source)
    pi = PiSet.parse(pi_text)
    S = resolve_series(G, pi, series_index, orders)
    ptable = ipi(G, pi)
    members = range(len(ptable)) if member is None else [member]
    reports = []
    for j in members:
        if not 0 <= j < len(ptable):
            raise InputError(f"member {j} out of range (0..{len(ptable) - 1})")
        reports.append(main2_lift_family(ptable.members[j], S))
    text = Table(title=f"{G.name}, series {S.label()}")
    for name in ("phi", "chi", "bound", "count", "images", "holds"):
        text.add_column(name)
    for r in reports:
        text.add_row(str(r.phi), str(r.chi), str(r.bound), str(r.count), str(r.images), str(r.holds))
    emit([r.model_dump() for r in reports], fmt, output, text)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_ANOMALIES


@cli.command()
@click.option("--group", "group_sources", multiple=True, help="builtin:<name> or .perm file; the default corpus when omitted")
@click.option("--pi", "pi_text", default=None, help="one prime set for every group")
@click.option("--parallelism", type=int, default=None)
@click.option("--series-cap", type=int, default=None)
@_output_options
def verify(
    group_sources: Sequence[str],
    pi_text: Optional[str],
    parallelism: Optional[int],
    series_cap: Optional[int],
    fmt: str,
    output: Optional[str],
) -> int:
    """Run the property suites and report anomalies."""
    if series_cap is not None:
        get_settings().verification.series_cap = series_cap
    pi = PiSet.parse(pi_text) if pi_text else None
    builtin = [s.split(":", 1)[1] for s in group_sources if s.startswith("builtin:")]
    files = [s for s in group_sources if not s.startswith("builtin:")]
    reports: List[CorpusEntryReport] = []
    if builtin or not files:
        reports.extend(run_corpus(builtin or None, parallelism, pi).entries)
    for source in files:
        G = resolve_group(source)
        for p in [pi] if pi is not None else applicable_pi_sets(G.order):
            reports.append(run_property_suite(G, p))
    report = aggregate(reports)
    text = Table(title=f"{len(report.entries)} entries, {report.anomaly_count} anomalies")
    for name in ("property", "passed", "failed"):
        text.add_column(name)
    for t in report.tallies:
        text.add_row(t.name, str(t.passed), str(t.failed))
    emit(report, fmt, output, text)
    return EXIT_OK if report.ok else EXIT_ANOMALIES


@cli.command()
@click.option("--pi", "pi_text", default="3")
@_output_options
def section4(pi_text: str, fmt: str, output: Optional[str]) -> int:
    """Recompute the order-1323 example."""
    report = section4_report(PiSet.parse(pi_text))
    text = Table(title=f"Order {report.group_order} example: chi = X.{report.chi}, {len(report.lifts)} lifts")
    for name in ("claim", "expected", "observed", "ok"):
        text.add_column(name)
    for c in report.claims:
        text.add_row(c.claim, str(c.expected), str(c.observed), "yes" if c.passed else "NO")
    emit(report, fmt, output, text)
    return EXIT_OK if report.passed else EXIT_ANOMALIES


def _row(G: Group, index: int) -> Character:
    rows = character_table(G).rows
    if not 0 <= index < len(rows):
        raise InputError(f"row {index} out of range (0..{len(rows) - 1}) for {G.name}")
    return rows[index]


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point: run the command and map errors to exit statuses."""
    try:
        status = cli.main(args=list(argv) if argv is not None else None, prog_name="pilift", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE if e.exit_code == 2 else e.exit_code
    except click.Abort:
        return EXIT_USAGE
    except EngineAnomaly as e:
        logger.error(f"anomaly: {e} {e.witness}")
        return EXIT_ANOMALIES
    except InputError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    except PiliftError as e:
        logger.error(f"engine failure: {e}")
        return EXIT_ANOMALIES
    return status if isinstance(status, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
