"""
Verification tools for the MCP server.
"""

import logging
from typing import Any, Dict, List

import anyio.to_thread
from mcp.types import Tool

from src.config import ServerConfig
from src.group_core.builtins import builtin_group
from src.group_core.primes import PiSet
from src.verification.corpus import aggregate, applicable_pi_sets
from src.verification.properties import run_property_suite
from src.verification.section4 import section4_report

logger = logging.getLogger(__name__)


class VerificationTool:
    """
    Property suites and the order-1323 example.

    - ``verify_group``: run every property on one builtin group
    - ``verify_section4``: recompute the order-1323 example
    """

    def __init__(self, config: ServerConfig):
        self.config = config
        logger.info("Initialized VerificationTool")

    async def list_tools(self) -> List[Tool]:
        return [
            Tool(
                name="verify_group",
                description="Run the property suite on a builtin group; every applicable prime set when pi is omitted",
                inputSchema={
                    "type": "object",
                    "properties": {
                        "group": {"type": "string", "description": "Builtin group name"},
                        "pi": {"type": "string", "description": "Comma-separated primes"},
                    },
                    "required": ["group"],
                },
            ),
            Tool(
                name="verify_section4",
                description="Recompute the order-1323 example and check every claim about it",
                inputSchema={"type": "object", "properties": {}},
            ),
        ]

    async def execute(self, name: str, args: Dict[str, Any]) -> Dict[str, Any]:
        if name == "verify_group":
            return await anyio.to_thread.run_sync(self._verify_group, args)
        if name == "verify_section4":
            return await anyio.to_thread.run_sync(self._verify_section4)
        raise ValueError(f"Unknown verification tool: {name}")

    def _verify_group(self, args: Dict[str, Any]) -> Dict[str, Any]:
        G = builtin_group(str(args["group"]))
        prime_sets = [PiSet.parse(str(args["pi"]))] if args.get("pi") else applicable_pi_sets(G.order)
        report = aggregate([run_property_suite(G, pi) for pi in prime_sets])
        logger.info(f"verify_group {G.name}: {report.anomaly_count} anomalies")
        return report.model_dump()

    def _verify_section4(self) -> Dict[str, Any]:
        return section4_report().model_dump()
