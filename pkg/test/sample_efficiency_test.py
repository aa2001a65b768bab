##
# @file sample_efficiency_test.py
#
# @brief Unit test for sample-efficiency curves.
##

# Internal imports
from src.Errors import StepGridMismatch
from src.ProtocolConfig import ProtocolConfig
from src.compare.SampleEfficiency import ALIGN_INTERSECT, sample_efficiency_curve, shared_step_grid
from src.model.Datatypes import CIMethod, CurveKind, Pooling, Statistic
from test.fixtures import make_log, make_run

# External imports
import unittest


class SampleEfficiencyTest(unittest.TestCase):
    """
    Unit test for sample_efficiency_curve.
    """

    def test_single_run(self):
        """
        One task and one run: the curve is the normalised interval means with degenerate CIs.
        """
        log = make_log({("env", "a", "qmix"): [make_run([[0.0], [5.0], [10.0]])]})
        curve = sample_efficiency_curve(log, "qmix", pooling=Pooling.INTERVALS_ONLY)
        self.assertEqual(curve.kind, CurveKind.SAMPLE_EFFICIENCY)
        self.assertEqual(list(curve.xs), [0.0, 10_000.0, 20_000.0])
        self.assertEqual(curve.estimates, [0.0, 0.5, 1.0])
        self.assertTrue(all(ci.method is CIMethod.DEGENERATE for _, ci in curve.points))

    def test_strict_mismatch(self):
        """
        Different grids across tasks are rejected in strict mode.
        """
        log = make_log({("env", "a", "qmix"): [make_run([[0.0], [1.0]], steps=[0, 10_000])],
                        ("env", "b", "qmix"): [make_run([[0.0], [1.0]], steps=[0, 20_000])]})
        with self.assertRaises(StepGridMismatch):
            sample_efficiency_curve(log, "qmix")

    def test_intersect(self):
        """
        Intersect alignment keeps the shared step counts and warns.
        """
        log = make_log({("env", "a", "qmix"): [make_run([[0.0], [1.0]], steps=[0, 10_000])],
                        ("env", "b", "qmix"): [make_run([[0.0], [1.0], [2.0]], steps=[0, 10_000, 20_000])]})
        with self.assertLogs("src.compare.SampleEfficiency", level="WARNING"):
            steps = shared_step_grid(log, "qmix", log.tasks(), ALIGN_INTERSECT)
        self.assertEqual(steps, [0, 10_000])

        curve = sample_efficiency_curve(log, "qmix", align=ALIGN_INTERSECT)
        self.assertEqual(list(curve.xs), [0.0, 10_000.0])

    def test_statistic(self):
        """
        Any statistic can reduce the matrix at each step; estimates stay in [0, 1].
        """
        runs = [make_run([[float(r)], [float(r) + 2.0]]) for r in range(4)]
        log = make_log({("env", "a", "qmix"): runs, ("env", "b", "qmix"): runs})
        config = ProtocolConfig(bootstrap_replicates=200)
        mean = sample_efficiency_curve(log, "qmix", statistic=Statistic.MEAN, config=config)
        self.assertEqual(len(mean), 2)
        self.assertTrue(all(0.0 <= estimate <= 1.0 for estimate in mean.estimates))
        self.assertLess(mean.estimates[0], mean.estimates[1])
        gap = sample_efficiency_curve(log, "qmix", statistic=Statistic.OPTIMALITY_GAP, config=config)
        self.assertAlmostEqual(gap.estimates[0], 1.0 - mean.estimates[0], places=12)


if __name__ == "__main__":
    unittest.main()
