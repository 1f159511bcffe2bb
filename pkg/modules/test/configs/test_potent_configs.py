import json
import os
import tempfile
import unittest
from modules.main.configs.potent_configs import PotentConfigs
from modules.main.configs.potent_configs_validation import PotentConfigsException


class TestPotentConfigs(unittest.TestCase):


    def setUp(self):
        """Setup for unit tests."""
        self.directory = tempfile.TemporaryDirectory()
        self.configs = {
            "max_states": 1000,
            "max_moves": 20000,
            "jobs": 2,
            "output_format": "csv",
            "log_file_path": "./log/test.log",
            "log_level": "DEBUG"
        }


    def tearDown(self):
        self.directory.cleanup()


    def write_configs(self, configs: dict) -> str:
        path = os.path.join(self.directory.name, "config.json")
        with open(path, 'w') as file:
            json.dump(configs, file)
        return path


    def test_getters(self):
        """Test the PotentConfigs getters."""

        configs = PotentConfigs(configs_file_path=self.write_configs(self.configs))
        getters_and_expectations = [
            (configs.get_max_states, 1000),
            (configs.get_max_moves, 20000),
            (configs.get_jobs, 2),
            (configs.get_output_format, "csv"),
            (configs.get_log_file_path, "./log/test.log"),
            (configs.get_log_level, "DEBUG")
        ]
        for getter, expectation in getters_and_expectations:
            self.assertEqual(getter(), expectation)


    def test_invalid_configs(self):
        """Test that invalid or missing config files raise."""

        self.configs["jobs"] = 0
        with self.assertRaises(PotentConfigsException):
            PotentConfigs(configs_file_path=self.write_configs(self.configs))

        with self.assertRaises(FileNotFoundError):
            PotentConfigs(configs_file_path=os.path.join(self.directory.name, "missing.json"))


    def test_repository_config(self):
        """Test that the shipped config.json is valid."""

        path = os.path.join(os.path.dirname(__file__), "..", "..", "..", "config.json")
        configs = PotentConfigs(configs_file_path=path)
        self.assertEqual(configs.get_max_states(), 5000000)


if __name__ == '__main__':
    unittest.main()
