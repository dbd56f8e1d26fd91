import os
import unittest
from unittest.mock import patch

from hecke_cellular.resources.errors import SizeCapExceeded, UsageError
from hecke_cellular.resources.tools import Settings, check_size_cap, get_int_from_env, load_settings


@patch("hecke_cellular.resources.tools.load_dotenv")
class TestSettings(unittest.TestCase):
    """Environment-driven configuration."""

    def test_defaults(self, _load_dotenv):
        with patch.dict(os.environ, {}, clear=True):
            settings = load_settings()
        self.assertEqual(settings, Settings())

    def test_overrides(self, _load_dotenv):
        env = {
            "HECKE_CELLULAR_MAX_N": "7",
            "HECKE_CELLULAR_MAX_HC_N": "3",
            "HECKE_CELLULAR_LOG_LEVEL": "debug",
            "HECKE_CELLULAR_JOBS": "4",
        }
        with patch.dict(os.environ, env, clear=True):
            settings = load_settings()
        self.assertEqual(settings, Settings(max_hecke_n=7, max_hc_n=3, log_level="DEBUG", jobs=4))

    def test_bad_integer(self, _load_dotenv):
        with patch.dict(os.environ, {"HECKE_CELLULAR_JOBS": "many"}, clear=True):
            with self.assertRaises(UsageError):
                get_int_from_env("HECKE_CELLULAR_JOBS", 1)


class TestSizeCap(unittest.TestCase):
    """Rank guards in front of the factorial-sized computations."""

    def setUp(self):
        self.settings = Settings()

    def test_within_caps(self):
        check_size_cap(6, "hecke", self.settings)
        check_size_cap(4, "hc", self.settings)

    def test_exceeded(self):
        with self.assertRaises(SizeCapExceeded):
            check_size_cap(7, "hecke", self.settings)
        with self.assertRaises(SizeCapExceeded):
            check_size_cap(5, "hc", self.settings)

    def test_override(self):
        check_size_cap(9, "hecke", self.settings, override=True)


if __name__ == '__main__':
    unittest.main()
