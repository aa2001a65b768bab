##
# @file log_decoder_test.py
#
# @brief Unit test for reading and writing canonical JSON experiment logs.
##

# Internal imports
from src.Errors import InvariantViolation, MalformedJson, SchemaViolation
from src.ingest.LogDecoder import load_experiment_log, parse_experiment_log
from src.ingest.LogEncoder import save_experiment_log, serialize_experiment_log
from src.ingest.LogSchema import schema_violations
from src.model.components.MetricDescriptor import MetricDescriptor
from test.fixtures import make_log, make_run, random_log

# External imports
import json
import numpy as np
import os
import tempfile
import unittest


def minimal_document() -> dict:
    return {
        "version": "1",
        "metrics": [{"name": "return", "unit_interval": False, "higher_is_better": True}],
        "environments": {
            "smac": {"3m": {"qmix": {"seed_0": {
                "intervals": [{"step_count": 0, "metrics": {"return": [1.0]}}],
            }}}},
        },
    }


class LogDecoderTest(unittest.TestCase):
    """
    Unit test for the JSON log decoder and encoder.
    """

    def test_minimal_document(self):
        """
        One environment, task, algorithm, run and interval.
        """
        log = parse_experiment_log(json.dumps(minimal_document()).encode("utf-8"))
        self.assertEqual(len(log.environments), 1)
        self.assertEqual(len(log.tasks()), 1)
        self.assertEqual(log.algorithms(), ["qmix"])
        runs = log.runs("smac", "3m", "qmix")
        self.assertEqual(len(runs), 1)
        self.assertEqual(len(runs[0].intervals), 1)
        self.assertEqual(runs[0].intervals[0].metrics["return"], (1.0,))
        self.assertIsNone(runs[0].absolute)

    def test_empty_object(self):
        """
        The first violation of an empty object is the missing environments field.
        """
        with self.assertRaises(SchemaViolation) as context:
            parse_experiment_log(b"{}")
        self.assertEqual(context.exception.path, "$.environments")
        self.assertEqual(schema_violations({})[0][0], "$.environments")

    def test_step_grid_mismatch(self):
        """
        Two runs with different step grids violate the group invariant.
        """
        document = minimal_document()
        group = document["environments"]["smac"]["3m"]["qmix"]
        group["seed_0"]["intervals"] = [{"step_count": 0, "metrics": {"return": [1.0]}},
                                        {"step_count": 10000, "metrics": {"return": [1.0]}}]
        group["seed_1"] = {"intervals": [{"step_count": 0, "metrics": {"return": [1.0]}},
                                         {"step_count": 20000, "metrics": {"return": [1.0]}}]}
        with self.assertRaises(InvariantViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertIn("runs share an identical ordered sequence", context.exception.message)
        self.assertTrue(context.exception.path.startswith("$.environments.smac.3m.qmix"))

    def test_malformed_input(self):
        """
        Syntax errors, bad encodings and non-finite numbers are malformed JSON.
        """
        with self.assertRaises(MalformedJson):
            parse_experiment_log(b"{\"version\": ")
        with self.assertRaises(MalformedJson):
            parse_experiment_log(b"\xff\xfe{}")

        text = json.dumps(minimal_document())
        with self.assertRaises(MalformedJson):
            parse_experiment_log(text.replace("[1.0]", "[NaN]"))
        with self.assertRaises(MalformedJson):
            parse_experiment_log(text.replace("[1.0]", "[1e400]"))

    def test_schema_paths(self):
        """
        Wrong types and unknown run keys are reported at their JSON path.
        """
        document = minimal_document()
        document["environments"]["smac"]["3m"]["qmix"]["seed_0"]["intervals"][0]["step_count"] = "zero"
        with self.assertRaises(SchemaViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertEqual(context.exception.path, "$.environments.smac.3m.qmix.seed_0.intervals[0].step_count")

        document = minimal_document()
        document["environments"]["smac"]["3m"]["qmix"]["seed_0"]["notes"] = "x"
        with self.assertRaises(SchemaViolation):
            parse_experiment_log(json.dumps(document))

    def test_invariant_paths(self):
        """
        Record invariants are anchored at the offending node.
        """
        document = minimal_document()
        document["environments"]["smac"]["3m"]["qmix"]["seed_0"]["intervals"][0]["metrics"]["win_rate"] = [1.0, 0.0]
        with self.assertRaises(InvariantViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertTrue(context.exception.path.startswith("$.environments.smac.3m.qmix.seed_0.intervals[0].metrics"))

    def test_empty_levels_rejected(self):
        """
        An environment without tasks, a task without algorithms or an algorithm without runs is an error.
        """
        document = minimal_document()
        document["environments"]["lbf"] = {}
        with self.assertRaises(InvariantViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertEqual(context.exception.path, "$.environments.lbf")

        document = minimal_document()
        document["environments"]["smac"]["8m"] = {}
        with self.assertRaises(InvariantViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertEqual(context.exception.path, "$.environments.smac.8m")

        document = minimal_document()
        document["environments"]["smac"]["3m"]["vdn"] = {}
        with self.assertRaises(InvariantViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertEqual(context.exception.path, "$.environments.smac.3m.vdn")

    def test_return_descriptor_required(self):
        """
        Metric descriptors must declare return exactly once.
        """
        document = minimal_document()
        document["metrics"] = [{"name": "win_rate", "unit_interval": True}]
        with self.assertRaises(SchemaViolation):
            parse_experiment_log(json.dumps(document))
        document["metrics"] = [{"name": "return"}, {"name": "return"}]
        with self.assertRaises(SchemaViolation) as context:
            parse_experiment_log(json.dumps(document))
        self.assertEqual(context.exception.path, "$.metrics[1].name")

    def test_unknown_top_level_keys(self):
        """
        Unknown top-level keys are kept as metadata.
        """
        document = minimal_document()
        document["metadata"] = {"framework": "epymarl"}
        document["hardware"] = {"gpu": "none"}
        log = parse_experiment_log(json.dumps(document))
        self.assertEqual(log.metadata["framework"], "epymarl")
        self.assertEqual(json.loads(log.metadata["hardware"]), {"gpu": "none"})

    def test_round_trip(self):
        """
        Serialising and parsing again yields an equal log.
        """
        rng = np.random.default_rng(3)
        for _ in range(20):
            log = random_log(rng)
            self.assertEqual(parse_experiment_log(serialize_experiment_log(log)), log)

        declared = make_log({("env", "a", "qmix"): [make_run([[0.5]], [0.5])]},
                            metrics={"return": MetricDescriptor("return"),
                                     "cost": MetricDescriptor("cost", higher_is_better=False)})
        self.assertEqual(parse_experiment_log(serialize_experiment_log(declared)), declared)

    def test_load_and_save(self):
        """
        Files round trip; missing files raise FileNotFoundError.
        """
        log = random_log(np.random.default_rng(4))
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "log.json")
            save_experiment_log(log, path)
            self.assertEqual(load_experiment_log(path), log)
            with self.assertRaises(FileNotFoundError):
                load_experiment_log(os.path.join(directory, "missing.json"))


if __name__ == "__main__":
    unittest.main()
