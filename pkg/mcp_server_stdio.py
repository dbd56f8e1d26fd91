#!/usr/bin/env python3
"""
MCP Server for Hecke and Hecke-Clifford computations
Exposes the Specht, Gram, classification, ideal and verification commands as tools.
"""
import asyncio
import json
import logging
import traceback

from mcp.server import Server
from mcp.server.stdio import stdio_server
from mcp.types import TextContent, Tool

from hecke_cellular.mcp_tools.cellular_tools import TOOL_SCHEMAS, dispatch_tool
from hecke_cellular.resources.tools import load_settings

settings = load_settings()

# stdout carries the protocol, so logs go to stderr only
logging.basicConfig(
    level=getattr(logging, settings.log_level, logging.INFO),
    format="%(asctime)s [%(levelname)s] %(message)s",
    handlers=[logging.StreamHandler()],
)
logger = logging.getLogger("mcp_server")


app = Server("hecke-cellular-server")


@app.list_tools()
async def list_tools() -> list[Tool]:
    """List the exposed commands."""
    return [Tool(**schema) for schema in TOOL_SCHEMAS]


@app.call_tool()
async def call_tool(name: str, arguments: dict) -> list[TextContent]:
    """Run one command in a worker thread and return its JSON result."""
    if name not in {schema["name"] for schema in TOOL_SCHEMAS}:
        return [TextContent(type="text", text=f"❌ Unknown tool: {name}")]
    try:
        loop = asyncio.get_event_loop()
        result = await loop.run_in_executor(None, dispatch_tool, name, arguments or {}, settings)
        return [TextContent(type="text", text=json.dumps(result, ensure_ascii=False, indent=2))]
    except Exception as e:
        error_msg = (
            f"❌ {name} failed\n"
            f"Error: {str(e)}\n\n"
            f"Details:\n{traceback.format_exc()}"
        )
        return [TextContent(type="text", text=error_msg)]


async def main():
    """Run the MCP server."""
    logger.info("✅ MCP server started successfully.")
    async with stdio_server() as (read_stream, write_stream):
        logger.info("MCP stdio server initialized.")
        await app.run(
            read_stream,
            write_stream,
            app.create_initialization_options()
        )


if __name__ == "__main__":
    asyncio.run(main())
