"""Tests for the MCP server: tool functions called directly, then the stdio
handshake against a server subprocess."""

import asyncio
import json
import subprocess
import sys
from pathlib import Path

from hypersum.mcp_server import eval_pfq, integrate, list_identities, verify_identity

PROJECT_ROOT = Path(__file__).resolve().parent


def call(tool, *args, **kwargs):
    return asyncio.run(tool(*args, **kwargs))


def test_eval_pfq_tool():
    text = call(eval_pfq, "1,1", "2", -1.0)
    assert "Value: 0.693147180559945" in text
    assert "Method: euler" in text


def test_eval_pfq_tool_reports_errors():
    assert call(eval_pfq, "1,1", "1", 2.0).startswith("Error (DivergentError)")
    assert call(eval_pfq, "1,x", "2", 0.5).startswith("Error (DomainError)")


def test_integrate_tool():
    text = call(integrate, "CosOverCoshPi", 0.7)
    assert "half_sech" in text
    assert "Quadrature: 0.39835" in text


def test_integrate_tool_errors():
    assert call(integrate, "TanhOverCosh", 1.0).startswith("Unknown family")
    text = call(integrate, "CoshCoshOverCoshV", 1.0, 1.0, 1.0, 2.0)
    assert text.startswith("Error (DecayError)")


def test_verify_identity_tool():
    text = call(verify_identity, "trigamma_3f2", samples=2)
    assert "Identity: trigamma_3f2" in text
    assert "Status: pass" in text
    assert "Passed: 2/2" in text


def test_verify_identity_tool_unknown():
    assert call(verify_identity, "nothing*").startswith("Error (DomainError)")


def test_list_identities_tool():
    lines = call(list_identities, "thm10*").splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("thm10_3F2_neg1_sec_beta [theorem]")
    assert call(list_identities, "nothing*").startswith("No identity matches")


def send(process, message):
    process.stdin.write(json.dumps(message) + "\n")
    process.stdin.flush()


def test_stdio_handshake_lists_tools():
    process = subprocess.Popen(
        [sys.executable, "-m", "hypersum.mcp_server"],
        stdin=subprocess.PIPE,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        text=True,
        cwd=str(PROJECT_ROOT),
    )
    try:
        send(
            process,
            {
                "jsonrpc": "2.0",
                "id": 1,
                "method": "initialize",
                "params": {
                    "protocolVersion": "2024-11-05",
                    "capabilities": {},
                    "clientInfo": {"name": "test-client", "version": "1.0.0"},
                },
            },
        )
        response = json.loads(process.stdout.readline())
        assert response["result"]["serverInfo"]["name"] == "hypersum"

        send(process, {"jsonrpc": "2.0", "method": "notifications/initialized"})
        send(process, {"jsonrpc": "2.0", "id": 2, "method": "tools/list"})
        tools = json.loads(process.stdout.readline())["result"]["tools"]
        assert {tool["name"] for tool in tools} == {
            "eval_pfq",
            "integrate",
            "verify_identity",
            "list_identities",
        }
    finally:
        process.terminate()
        process.wait(timeout=10)
