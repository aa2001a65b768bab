##
# @file protocol_config_test.py
#
# @brief Unit test for the protocol configuration.
##

# Internal imports
from src.Errors import InvariantViolation, SchemaViolation
from src.ProtocolConfig import ProtocolConfig, load_protocol_config, protocol_config_from_dict

# External imports
import json
import os
import tempfile
import unittest


class ProtocolConfigTest(unittest.TestCase):
    """
    Unit test for the protocol configuration.
    """

    def test_defaults(self):
        """
        Default construction yields the standardised protocol values.
        """
        config = ProtocolConfig()
        self.assertEqual(config.timesteps_off_policy, 2_000_000)
        self.assertEqual(config.timesteps_on_policy, 20_000_000)
        self.assertEqual(config.runs, 10)
        self.assertEqual(config.eval_episodes, 32)
        self.assertEqual(config.eval_interval, 10_000)
        self.assertEqual(config.absolute_episodes, 320)
        self.assertEqual(config.absolute_episodes, 10 * config.eval_episodes)
        self.assertEqual(config.ci_level, 0.95)
        self.assertEqual(config.bootstrap_replicates, 2000)
        self.assertEqual(config.gamma, 1.0)
        self.assertEqual(config.seed, 42)

    def test_invalid_values(self):
        """
        Non-positive counts and levels outside (0, 1) are rejected.
        """
        with self.assertRaises(InvariantViolation) as context:
            ProtocolConfig(runs=0)
        self.assertEqual(context.exception.path, "runs")
        with self.assertRaises(InvariantViolation):
            ProtocolConfig(ci_level=1.0)
        with self.assertRaises(InvariantViolation):
            ProtocolConfig(eval_episodes=True)

    def test_from_dict(self):
        """
        Keys mirror the field names; unknown keys and wrong types name the key.
        """
        config = protocol_config_from_dict({"runs": 5, "ci_level": 0.9})
        self.assertEqual(config.runs, 5)
        self.assertEqual(config.ci_level, 0.9)
        self.assertEqual(config.eval_episodes, 32)

        with self.assertRaises(SchemaViolation) as context:
            protocol_config_from_dict({"episodes": 32})
        self.assertEqual(context.exception.path, "$.episodes")
        with self.assertRaises(SchemaViolation) as context:
            protocol_config_from_dict({"runs": "10"})
        self.assertEqual(context.exception.path, "$.runs")

    def test_load(self):
        """
        Loading a file round trips through to_dict.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "protocol.json")
            with open(path, "w") as config_file:
                json.dump(ProtocolConfig(seed=7).to_dict(), config_file)
            self.assertEqual(load_protocol_config(path), ProtocolConfig(seed=7))

        with self.assertRaises(FileNotFoundError):
            load_protocol_config("does/not/exist.json")


if __name__ == "__main__":
    unittest.main()
