"""
pilift MCP Server

Exposes builtin groups as resources and the character-theory engine and
verification suites as tools.
"""

import json
import logging
from datetime import datetime, timezone
from typing import Any, Dict, List

import anyio
from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import Resource, TextContent, Tool

from src.config import Settings, get_settings
from src.utils.logging import setup_logging

from .resources.groups import GroupResourceProvider
from .tools.engine import EngineTool
from .tools.verification import VerificationTool

logger = logging.getLogger(__name__)


class PiliftServer:
    """
    MCP server for the pilift engine.

    This server exposes:
    - Resources: builtin group summaries under ``group://``
    - Tools: engine computations (``engine_*``) and verification (``verify_*``)
    """

    def __init__(self, settings: Settings):
        self.settings = settings
        self.server = Server(settings.server.name)

        self.groups_provider = GroupResourceProvider()
        self.engine_tool = EngineTool(settings.server)
        self.verification_tool = VerificationTool(settings.server)

        self._register_resource_handlers()
        self._register_tool_handlers()

        logger.info(f"Initialized {settings.server.name} v{settings.server.version}")

    def _register_resource_handlers(self) -> None:
        @self.server.list_resources()
        async def list_resources() -> List[Resource]:
            resources = await self.groups_provider.list_resources()
            logger.info(f"Listed {len(resources)} resources")
            return resources

        @self.server.read_resource()
        async def read_resource(uri: Any) -> str:
            return await self.read_resource(str(uri))

    def _register_tool_handlers(self) -> None:
        @self.server.list_tools()
        async def list_tools() -> List[Tool]:
            return await self.list_tools()

        @self.server.call_tool()
        async def call_tool(name: str, arguments: Dict[str, Any]) -> List[TextContent]:
            return await self.call_tool(name, arguments)

    async def read_resource(self, uri: str) -> str:
        logger.info(f"Reading resource: {uri}")
        if uri.startswith("group://"):
            return await self.groups_provider.read_resource(uri)
        raise ValueError(f"Unknown resource URI scheme: {uri}")

    async def list_tools(self) -> List[Tool]:
        tools = await self.engine_tool.list_tools()
        tools.extend(await self.verification_tool.list_tools())
        logger.info(f"Listed {len(tools)} tools")
        return tools

    async def call_tool(self, name: str, arguments: Dict[str, Any]) -> List[TextContent]:
        """Route a tool call by name prefix; failures come back as an error payload."""
        logger.info(f"Calling tool: {name} with args: {arguments}")
        try:
            if name.startswith("engine_"):
                result = await self.engine_tool.execute(name, arguments or {})
            elif name.startswith("verify_"):
                result = await self.verification_tool.execute(name, arguments or {})
            else:
                raise ValueError(f"Unknown tool: {name}")
            return [TextContent(type="text", text=json.dumps(result, indent=2))]
        except Exception as e:
            logger.error(f"Tool execution failed: {e}")
            payload = {"error": str(e), "tool": name, "timestamp": datetime.now(timezone.utc).isoformat()}
            return [TextContent(type="text", text=json.dumps(payload, indent=2))]

    async def run(self) -> None:
        logger.info("Starting MCP server...")
        async with stdio_server() as (read_stream, write_stream):
            await self.server.run(read_stream, write_stream, self.server.create_initialization_options())


async def main() -> None:
    settings = get_settings()
    await PiliftServer(settings).run()


def run() -> None:
    """Console entry point; logs go to stderr since stdout carries the protocol."""
    settings = get_settings()
    setup_logging(settings.log_level, settings.log_format)
    anyio.run(main)


if __name__ == "__main__":
    run()
