"""
Builtin groups as MCP resources under ``group://<name>``.
"""

import json
import logging
from typing import Any, Dict, List

from mcp.types import Resource

from src.group_core.builtins import builtin_group
from src.group_core.structure import conjugacy_classes

logger = logging.getLogger(__name__)

LISTED = ("s3", "s4", "a4", "d8", "q8", "f21", "sl23", "gl23", "e27", "section4")


class GroupResourceProvider:
    """Summaries of builtin groups: order, degree, generators and class count."""

    def __init__(self) -> None:
        self.cache: Dict[str, str] = {}
        logger.info("Initialized GroupResourceProvider")

    async def list_resources(self) -> List[Resource]:
        return [
            Resource(
                uri=f"group://{name}",
                name=f"Builtin group {name}",
                description=f"Summary of the builtin group {name}",
                mimeType="application/json",
            )
            for name in LISTED
        ]

    async def read_resource(self, uri: str) -> str:
        if not uri.startswith("group://"):
            raise ValueError(f"Unknown group resource: {uri}")
        name = uri[len("group://"):]
        if name not in self.cache:
            self.cache[name] = json.dumps(self._summary(name), indent=2)
        return self.cache[name]

    def _summary(self, name: str) -> Dict[str, Any]:
        G = builtin_group(name)
        return {**G.describe(), "classes": len(conjugacy_classes(G))}
