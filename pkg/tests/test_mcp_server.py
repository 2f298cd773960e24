"""Tests for the MCP server routing, tools and resources."""

import json

import pytest

from src.config import get_settings
from src.mcp_server.resources.groups import LISTED, GroupResourceProvider
from src.mcp_server.server import PiliftServer


@pytest.fixture
def server():
    return PiliftServer(get_settings())


async def call(server, name, arguments):
    contents = await server.call_tool(name, arguments)
    assert len(contents) == 1
    assert contents[0].type == "text"
    return json.loads(contents[0].text)


@pytest.mark.unit
class TestToolListing:
    @pytest.mark.asyncio
    async def test_tool_names(self, server):
        names = [t.name for t in await server.list_tools()]
        assert names == [
            "engine_chartab",
            "engine_ipi",
            "engine_lifts",
            "engine_series",
            "engine_pair",
            "engine_main1",
            "engine_main2",
            "verify_group",
            "verify_section4",
        ]

    @pytest.mark.asyncio
    async def test_schemas_require_group(self, server):
        for tool in await server.list_tools():
            if tool.name.startswith("engine_"):
                assert "group" in tool.inputSchema["required"]


@pytest.mark.unit
class TestEngineTools:
    @pytest.mark.asyncio
    async def test_chartab(self, server):
        data = await call(server, "engine_chartab", {"group": "s3"})
        assert data["order"] == 6
        assert [row["degree"] for row in data["rows"]] == [1, 1, 2]

    @pytest.mark.asyncio
    async def test_ipi(self, server):
        data = await call(server, "engine_ipi", {"group": "s3", "pi": "3"})
        assert data["decomposition"] == [[1, 0], [1, 0], [0, 1]]

    @pytest.mark.asyncio
    async def test_lifts(self, server):
        data = await call(server, "engine_lifts", {"group": "s3", "pi": "3", "member": 1})
        assert data["lifts"] == [2]
        assert data["degree"] == 2

    @pytest.mark.asyncio
    async def test_series(self, server):
        data = await call(server, "engine_series", {"group": "s4", "pi": "2"})
        assert [4, 12] in [s["orders"][1:3] for s in data["series"]]

    @pytest.mark.asyncio
    async def test_pair(self, server):
        data = await call(server, "engine_pair", {"group": "s3", "pi": "3", "chi": 2})
        assert data["pair"]["subgroup_order"] == 3

    @pytest.mark.asyncio
    async def test_main1(self, server):
        data = await call(server, "engine_main1", {"group": "s3", "pi": "3", "orders": [1, 3, 6], "chi": 0})
        assert data["verdict"]

    @pytest.mark.asyncio
    async def test_main2(self, server):
        data = await call(server, "engine_main2", {"group": "s3", "pi": "3", "member": 0})
        assert data["count"] == 2
        assert data["images"] == [0, 1]


@pytest.mark.unit
class TestErrorPayloads:
    @pytest.mark.asyncio
    async def test_unknown_tool(self, server):
        data = await call(server, "restart_pod", {})
        assert data["error"] == "Unknown tool: restart_pod"
        assert data["tool"] == "restart_pod"
        assert "timestamp" in data

    @pytest.mark.asyncio
    async def test_unknown_engine_tool(self, server):
        data = await call(server, "engine_nothing", {"group": "s3"})
        assert "Unknown engine tool" in data["error"]

    @pytest.mark.asyncio
    async def test_missing_argument(self, server):
        data = await call(server, "engine_ipi", {"group": "s3"})
        assert data["error"] == "missing argument 'pi'"

    @pytest.mark.asyncio
    async def test_index_out_of_range(self, server):
        data = await call(server, "engine_lifts", {"group": "s3", "pi": "3", "member": 5})
        assert "out of range" in data["error"]

    @pytest.mark.asyncio
    async def test_non_separable(self, server):
        data = await call(server, "engine_ipi", {"group": "a5", "pi": "2"})
        assert "separable" in data["error"]


@pytest.mark.unit
class TestResources:
    @pytest.mark.asyncio
    async def test_list(self):
        resources = await GroupResourceProvider().list_resources()
        assert [str(r.uri) for r in resources] == [f"group://{name}" for name in LISTED]

    @pytest.mark.asyncio
    async def test_read(self, server):
        data = json.loads(await server.read_resource("group://s3"))
        assert data["order"] == 6
        assert data["classes"] == 3

    @pytest.mark.asyncio
    async def test_read_is_cached(self, server):
        first = await server.groups_provider.read_resource("group://a4")
        assert server.groups_provider.cache["a4"] == first

    @pytest.mark.asyncio
    async def test_unknown_scheme(self, server):
        with pytest.raises(ValueError):
            await server.read_resource("metrics://cpu")


@pytest.mark.integration
class TestVerificationTools:
    @pytest.mark.asyncio
    async def test_verify_group(self, server):
        data = await call(server, "verify_group", {"group": "c3"})
        assert data["anomaly_count"] == 0
        assert [e["pi"] for e in data["entries"]] == ["{3}"]

    @pytest.mark.asyncio
    async def test_verify_group_with_pi(self, server):
        data = await call(server, "verify_group", {"group": "s3", "pi": "2"})
        assert data["anomaly_count"] == 0
        assert len(data["entries"]) == 1
