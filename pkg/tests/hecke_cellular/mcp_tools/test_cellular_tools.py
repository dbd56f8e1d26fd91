import unittest

from hecke_cellular.coefficients.rings import build_ring
from hecke_cellular.mcp_tools.cellular_tools import (
    TOOL_SCHEMAS,
    TOOLS,
    dispatch_tool,
    parse_element,
    resolve_ring,
)
from hecke_cellular.resources.errors import RingError, SizeCapExceeded, UsageError
from hecke_cellular.resources.tools import Settings


class TestDispatch(unittest.TestCase):
    """The shared command layer behind the CLI and the MCP server."""

    def setUp(self):
        self.settings = Settings()

    def test_hecke_product(self):
        result = dispatch_tool("product", {"n": 2, "x": "T1", "y": "T1", "ring": "Qq"}, self.settings)
        self.assertEqual(len(result["terms"]), 2)
        self.assertEqual(result["command"], "product")

    def test_hc_product(self):
        result = dispatch_tool("product", {"algebra": "hc", "n": 2, "x": "T1", "y": "c1"}, self.settings)
        self.assertEqual(result["terms"], [{"clifford": [2], "perm": [2, 1], "coeff": "1"}])

    def test_lists_are_compositions(self):
        result = dispatch_tool("specht", {"lambda": [2, 1], "mu": [1, 1, 1]}, self.settings)
        self.assertEqual(result["dim"], 2)

    def test_super_specht(self):
        result = dispatch_tool("specht", {"algebra": "hc", "lambda": "2,1", "mu": "2,1"}, self.settings)
        self.assertEqual(result["dim"], 4)
        self.assertTrue(result["super"])

    def test_gram(self):
        result = dispatch_tool("gram", {"lambda": "2,1", "e": 3}, self.settings)
        self.assertEqual(len(result["matrix"]), 2)
        self.assertEqual(result["gram_rank"], 1)

    def test_ideal(self):
        result = dispatch_tool("ideal", {"algebra": "hc", "lambda": "2,1"}, self.settings)
        self.assertTrue(result["sandwich"]["lower"])
        result = dispatch_tool("ideal", {"lambda": "2,1"}, self.settings)
        self.assertTrue(result["divisible_by_f"])

    def test_radical_verify(self):
        result = dispatch_tool("verify", {"n": 3, "ring": "gf:3,q=1,a=1", "radical": True}, self.settings)
        self.assertEqual(result["status"], "pass")
        self.assertEqual(result["reports"][0]["check"], "radical_oracle")

    def test_errors(self):
        with self.assertRaises(UsageError):
            dispatch_tool("draw", {}, self.settings)
        with self.assertRaises(UsageError):
            dispatch_tool("classify", {}, self.settings)
        with self.assertRaises(UsageError):
            dispatch_tool("basis", {"n": 2, "algebra": "schur"}, self.settings)
        with self.assertRaises(UsageError):
            dispatch_tool("verify", {"n": 2, "corrupt": "flip-rho", "label": "3"}, self.settings)
        with self.assertRaises(SizeCapExceeded):
            dispatch_tool("classify-super", {"n": 5}, self.settings)

    def test_schemas_name_known_tools(self):
        for schema in TOOL_SCHEMAS:
            self.assertIn(schema["name"], TOOLS)
            self.assertEqual(schema["inputSchema"]["type"], "object")

    def test_schemas_cover_every_command(self):
        self.assertEqual({schema["name"] for schema in TOOL_SCHEMAS}, set(TOOLS))
        properties = {schema["name"]: schema["inputSchema"]["properties"] for schema in TOOL_SCHEMAS}
        self.assertIn("queer", properties["classify-super"])
        self.assertIn("jobs", properties["classify-super"])
        self.assertIn("x", properties["product"])


class TestArgumentHelpers(unittest.TestCase):

    def test_resolve_ring(self):
        self.assertEqual(resolve_ring({}).name, "Qq")
        self.assertEqual(resolve_ring({"e": 3}).name, "cyclo:3,a=1")
        self.assertEqual(resolve_ring({"e": 3, "ring": "cyclo:3,a=2"}).name, "cyclo:3,a=2")
        with self.assertRaises(RingError):
            resolve_ring({"e": 3, "ring": "cyclo:4"})

    def test_parse_element(self):
        ring = build_ring("Qaq")
        self.assertEqual(parse_element("1", 3, "hc", ring), parse_element("", 3, "hc", ring))
        x = parse_element("T1 * c1", 3, "hc", ring)
        self.assertEqual(len(x), 1)
        with self.assertRaises(UsageError):
            parse_element("T3", 3, "hecke", ring)
        with self.assertRaises(UsageError):
            parse_element("s1", 3, "hecke", ring)


if __name__ == '__main__':
    unittest.main()
