"""
Engine tools for the MCP server.

Exposes character tables, I_pi, lifts, series, self-stabilizing pairs and
the two lift-analysis reports. Computation runs in a worker thread so the
event loop stays responsive.
"""

import logging
from typing import Any, Callable, Dict, List

import anyio.to_thread
from mcp.types import Tool

from src.char_table.render import table_to_json
from src.char_table.table import character_table
from src.config import ServerConfig
from src.group_core.builtins import builtin_group
from src.group_core.group import Group
from src.group_core.primes import PiSet
from src.group_core.series import NormalPiSeries, enumerate_normal_pi_series, series_from_orders
from src.lift_analysis.main1 import check_main1
from src.lift_analysis.main2 import main2_lift_family
from src.pi_theory.partial import ipi, lifts_of
from src.towers.pairs import self_stabilizing_pair
from src.utils.errors import InputError

logger = logging.getLogger(__name__)

_GROUP = {"type": "string", "description": "Builtin group name (e.g. 's3', 'a4', 'section4')"}
_PI = {"type": "string", "description": "Comma-separated primes (e.g. '3' or '2,3')"}
_SERIES = {"type": "integer", "description": "Index into the enumerated normal pi-series", "default": 0}
_ORDERS = {"type": "array", "items": {"type": "integer"}, "description": "Series given by term orders"}


def _group(args: Dict[str, Any]) -> Group:
    if "group" not in args:
        raise InputError("missing argument 'group'")
    return builtin_group(str(args["group"]))


def _pi(args: Dict[str, Any]) -> PiSet:
    if "pi" not in args:
        raise InputError("missing argument 'pi'")
    return PiSet.parse(str(args["pi"]))


def _series(G: Group, pi: PiSet, args: Dict[str, Any]) -> NormalPiSeries:
    if args.get("orders"):
        return series_from_orders(G, pi, [int(x) for x in args["orders"]])
    found = enumerate_normal_pi_series(G, pi)
    i = int(args.get("series", 0))
    if not 0 <= i < len(found):
        raise InputError(f"series index {i} out of range (0..{len(found) - 1})")
    return found[i]


def _index(args: Dict[str, Any], name: str, size: int) -> int:
    if name not in args:
        raise InputError(f"missing argument {name!r}")
    i = int(args[name])
    if not 0 <= i < size:
        raise InputError(f"{name} {i} out of range (0..{size - 1})")
    return i


class EngineTool:
    """
    Character-theory computations on builtin groups.

    - ``engine_chartab``: the character table
    - ``engine_ipi``: I_pi(G) with the decomposition matrix
    - ``engine_lifts``: lifts of one member of I_pi(G)
    - ``engine_series``: normal pi-series
    - ``engine_pair``: self-stabilizing pair of a character
    - ``engine_main1`` / ``engine_main2``: lift-analysis reports
    """

    def __init__(self, config: ServerConfig):
        self.config = config
        self._handlers: Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]] = {
            "engine_chartab": self._chartab,
            "engine_ipi": self._ipi,
            "engine_lifts": self._lifts,
            "engine_series": self._series,
            "engine_pair": self._pair,
            "engine_main1": self._main1,
            "engine_main2": self._main2,
        }
        logger.info("Initialized EngineTool")

    async def list_tools(self) -> List[Tool]:
        return [
            Tool(
                name="engine_chartab",
                description="Exact character table of a builtin group",
                inputSchema={"type": "object", "properties": {"group": _GROUP}, "required": ["group"]},
            ),
            Tool(
                name="engine_ipi",
                description="Irreducible pi-partial characters and the decomposition of every chi^0",
                inputSchema={"type": "object", "properties": {"group": _GROUP, "pi": _PI}, "required": ["group", "pi"]},
            ),
            Tool(
                name="engine_lifts",
                description="Characters of G restricting to a given irreducible pi-partial character",
                inputSchema={
                    "type": "object",
                    "properties": {"group": _GROUP, "pi": _PI, "member": {"type": "integer"}},
                    "required": ["group", "pi", "member"],
                },
            ),
            Tool(
                name="engine_series",
                description="Enumerate the normal pi-series of a group",
                inputSchema={"type": "object", "properties": {"group": _GROUP, "pi": _PI}, "required": ["group", "pi"]},
            ),
            Tool(
                name="engine_pair",
                description="Self-stabilizing pair of a character along a normal pi-series",
                inputSchema={
                    "type": "object",
                    "properties": {"group": _GROUP, "pi": _PI, "series": _SERIES, "orders": _ORDERS, "chi": {"type": "integer"}},
                    "required": ["group", "pi", "chi"],
                },
            ),
            Tool(
                name="engine_main1",
                description="Compare the chain-lift, inductive-pair and factored-pair conditions for a character",
                inputSchema={
                    "type": "object",
                    "properties": {"group": _GROUP, "pi": _PI, "series": _SERIES, "orders": _ORDERS, "chi": {"type": "integer"}},
                    "required": ["group", "pi", "chi"],
                },
            ),
            Tool(
                name="engine_main2",
                description="Lift family of a pi-partial character indexed by pi'-order linear characters",
                inputSchema={
                    "type": "object",
                    "properties": {"group": _GROUP, "pi": _PI, "series": _SERIES, "orders": _ORDERS, "member": {"type": "integer"}},
                    "required": ["group", "pi", "member"],
                },
            ),
        ]

    async def execute(self, name: str, args: Dict[str, Any]) -> Dict[str, Any]:
        handler = self._handlers.get(name)
        if handler is None:
            raise ValueError(f"Unknown engine tool: {name}")
        return await anyio.to_thread.run_sync(handler, args)

    def _chartab(self, args: Dict[str, Any]) -> Dict[str, Any]:
        return table_to_json(character_table(_group(args)))

    def _ipi(self, args: Dict[str, Any]) -> Dict[str, Any]:
        return ipi(_group(args), _pi(args)).to_json()

    def _lifts(self, args: Dict[str, Any]) -> Dict[str, Any]:
        ptable = ipi(_group(args), _pi(args))
        j = _index(args, "member", len(ptable))
        phi = ptable.members[j]
        return {"member": j, "degree": phi.degree, "lifts": [c.index for c in lifts_of(phi, ptable)]}

    def _series(self, args: Dict[str, Any]) -> Dict[str, Any]:
        G, pi = _group(args), _pi(args)
        found = enumerate_normal_pi_series(G, pi)
        return {"group": G.name, "pi": str(pi), "truncated": found.truncated, "series": [S.describe() for S in found]}

    def _pair(self, args: Dict[str, Any]) -> Dict[str, Any]:
        G, pi = _group(args), _pi(args)
        S = _series(G, pi, args)
        rows = character_table(G).rows
        return self_stabilizing_pair(rows[_index(args, "chi", len(rows))], S).describe()

    def _main1(self, args: Dict[str, Any]) -> Dict[str, Any]:
        G, pi = _group(args), _pi(args)
        S = _series(G, pi, args)
        rows = character_table(G).rows
        return check_main1(rows[_index(args, "chi", len(rows))], S).model_dump()

    def _main2(self, args: Dict[str, Any]) -> Dict[str, Any]:
        G, pi = _group(args), _pi(args)
        S = _series(G, pi, args)
        ptable = ipi(G, pi)
        return main2_lift_family(ptable.members[_index(args, "member", len(ptable))], S).model_dump()
