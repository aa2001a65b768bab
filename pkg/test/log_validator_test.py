##
# @file log_validator_test.py
#
# @brief Unit test for soft validation and merging of experiment logs.
##

# Internal imports
from src.Errors import DuplicateRun, SchemaViolation
from src.ProtocolConfig import ProtocolConfig
from src.ingest.LogEncoder import encode_document, serialize_experiment_log
from src.ingest.LogMerger import merge_logs
from src.ingest.LogValidator import validate_log
from src.model.ExperimentLog import ExperimentLog
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.MetricDescriptor import MetricDescriptor
from src.model.components.RunRecord import RunRecord
from test.fixtures import make_log, make_run

# External imports
from itertools import permutations
import json
import unittest


## Small protocol so conforming fixtures stay tiny.
SMALL_PROTOCOL = ProtocolConfig(eval_episodes=4, absolute_episodes=40)


def conforming_run(episodes: int = 4) -> RunRecord:
    return make_run([[1.0] * episodes, [2.0] * episodes], [2.0] * 40)


def value_data(log: ExperimentLog) -> str:
    """
    Canonical encoding without metadata, keys sorted so insertion order does not matter.
    """
    document = encode_document(log)
    del document["metadata"]
    document["metrics"] = sorted(document["metrics"], key=lambda descriptor: descriptor["name"])
    return json.dumps(document, sort_keys=True)


class LogValidatorTest(unittest.TestCase):
    """
    Unit test for validate_log.
    """

    def test_conforming_log(self):
        """
        A conforming log is valid without warnings.
        """
        log = make_log({("env", "a", "qmix"): [conforming_run(), conforming_run()]})
        report = validate_log(log, SMALL_PROTOCOL)
        self.assertTrue(report.is_valid)
        self.assertEqual(len(report.warnings), 0)

    def test_episode_count(self):
        """
        An interval with 16 episodes under the default protocol is flagged at its path.
        """
        runs = {"seed_0": make_run([[1.0] * 32, [1.0] * 16], [1.0] * 320)}
        report = validate_log(make_log({("env", "a", "qmix"): runs}))
        self.assertTrue(report.is_valid)
        self.assertEqual(report.warnings, (("$.environments.env.a.qmix.seed_0.intervals[1]", "episode count 16 ≠ 32"),))

    def test_missing_absolute(self):
        """
        A run without absolute block is a warning naming the absolute metric.
        """
        log = make_log({("env", "a", "qmix"): [conforming_run(), make_run([[1.0] * 4, [2.0] * 4])]})
        report = validate_log(log, SMALL_PROTOCOL)
        self.assertTrue(report.is_valid)
        self.assertEqual(len(report.warnings), 1)
        path, message = report.warnings[0]
        self.assertEqual(path, "$.environments.env.a.qmix.run_01")
        self.assertIn("absolute", message)

    def test_metric_names(self):
        """
        Runs of one group reporting different metric names are flagged.
        """
        plain = RunRecord((IntervalRecord(0, {"return": [1.0] * 4}),))
        extended = RunRecord((IntervalRecord(0, {"return": [1.0] * 4, "win_rate": [1.0] * 4}),))
        report = validate_log(make_log({("env", "a", "qmix"): [plain, extended]}), SMALL_PROTOCOL)
        self.assertTrue(any(path.endswith("intervals[0].metrics") for path, _ in report.warnings))

    def test_undeclared_return(self):
        """
        A log built without the return descriptor is invalid.
        """
        log = make_log({("env", "a", "qmix"): [conforming_run()]}, metrics={})
        report = validate_log(log, SMALL_PROTOCOL)
        self.assertFalse(report.is_valid)
        self.assertEqual(report.to_dict()["is_valid"], False)
        self.assertIn("$.metrics", report.to_text())

    def test_pure(self):
        """
        Two calls give identical reports and leave the log unchanged.
        """
        log = make_log({("env", "a", "qmix"): [conforming_run(), make_run([[1.0] * 4, [2.0] * 3])]}, metrics={})
        before = serialize_experiment_log(log)
        first = validate_log(log, SMALL_PROTOCOL)
        second = validate_log(log, SMALL_PROTOCOL)
        self.assertEqual(first, second)
        self.assertEqual(first.to_text(), second.to_text())
        self.assertFalse(first.is_valid)
        self.assertGreater(len(first.warnings), 0)
        self.assertEqual(serialize_experiment_log(log), before)


class LogMergerTest(unittest.TestCase):
    """
    Unit test for merge_logs.
    """

    def setUp(self):
        """
        Two single-algorithm logs on the same task.
        """
        self.qmix = make_log({("env", "a", "qmix"): [make_run([[1.0]])]}, metadata={"framework": "epymarl"})
        self.vdn = make_log({("env", "a", "vdn"): [make_run([[2.0]])]})

    def test_disjoint(self):
        """
        Disjoint logs merge into one log with both algorithms.
        """
        merged = merge_logs([self.qmix, self.vdn])
        self.assertEqual(merged.algorithms(), ["qmix", "vdn"])
        self.assertEqual(merged.metadata["log0.framework"], "epymarl")

    def test_duplicate(self):
        """
        Merging a log with itself collides on every run.
        """
        with self.assertRaises(DuplicateRun):
            merge_logs([self.qmix, self.qmix])

    def test_empty(self):
        """
        At least one log is required.
        """
        with self.assertRaises(SchemaViolation) as context:
            merge_logs([])
        self.assertEqual(context.exception.message, "at least one log required")

    def test_conflicting_descriptor(self):
        """
        The same metric declared differently cannot be merged.
        """
        other = ExperimentLog(self.vdn.environments, {"return": MetricDescriptor("return", higher_is_better=False)})
        with self.assertRaises(SchemaViolation):
            merge_logs([self.qmix, other])

    def test_commutative_and_associative(self):
        """
        Merge order and grouping do not change runs or metric descriptors.
        """
        extra = make_log({("env", "a", "qmix"): {"seed_9": make_run([[3.0]])},
                          ("lbf", "8x8", "vdn"): [make_run([[0.5]])]},
                         metrics={"return": MetricDescriptor("return"),
                                  "win_rate": MetricDescriptor("win_rate", unit_interval=True)})
        logs = [self.qmix, self.vdn, extra]

        reference = value_data(merge_logs(logs))
        for order in permutations(logs):
            self.assertEqual(value_data(merge_logs(list(order))), reference)

        left = merge_logs([merge_logs([self.qmix, self.vdn]), extra])
        right = merge_logs([self.qmix, merge_logs([self.vdn, extra])])
        self.assertEqual(value_data(left), reference)
        self.assertEqual(value_data(right), reference)


if __name__ == "__main__":
    unittest.main()
