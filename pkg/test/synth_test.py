##
# @file synth_test.py
#
# @brief Unit test for the synthetic log generator and the brute-force oracles.
##

# Internal imports
from src.Errors import EmptyInput, InvalidSpec
from src.ProtocolConfig import ProtocolConfig
from src.aggregate.Statistics import iqm
from src.ingest.LogEncoder import serialize_experiment_log
from src.ingest.LogValidator import validate_log
from src.synth.Oracles import oracle_iqm, oracle_probability_of_improvement
from src.synth.SynthSpec import ScoreModel, SynthAlgorithm, SynthSpec, load_synth_spec, synth_spec_from_dict
from src.synth.SyntheticLogGenerator import curve_fraction, generate_synthetic_log

# External imports
import json
import numpy as np
import os
import tempfile
import unittest


def small_spec(**options) -> SynthSpec:
    algorithms = (SynthAlgorithm("qmix", ScoreModel(10.0, 1.0)),
                  SynthAlgorithm("vdn", ScoreModel(5.0, 0.0), curve="linear", tasks={"smac/8m": ScoreModel(7.0, 0.0)}))
    defaults = dict(runs=3, intervals=5, eval_episodes=4, absolute_episodes=40, seed=7)
    defaults.update(options)
    return SynthSpec((("smac", ("3m", "8m")),), algorithms, **defaults)


class SyntheticLogGeneratorTest(unittest.TestCase):
    """
    Unit test for generate_synthetic_log.
    """

    def test_structure(self):
        """
        Group counts, step grid and episode counts follow the spec.
        """
        spec = small_spec()
        log = generate_synthetic_log(spec)
        self.assertEqual(log.tasks(), [("smac", "3m"), ("smac", "8m")])
        self.assertEqual(log.algorithms(), ["qmix", "vdn"])
        self.assertEqual(sorted(log.group("smac", "3m", "qmix")), ["seed_0", "seed_1", "seed_2"])
        self.assertEqual(log.step_grid("smac", "3m", "qmix"), (0, 10_000, 20_000, 30_000, 40_000))
        self.assertEqual(spec.final_step, 40_000)
        run = log.runs("smac", "3m", "qmix")[0]
        self.assertEqual(run.intervals[0].episode_count, 4)
        self.assertEqual(len(run.absolute.metrics["return"]), 40)
        self.assertEqual(log.metadata["generator"], "synthetic")

        report = validate_log(log, spec_protocol(spec))
        self.assertTrue(report.is_valid)
        self.assertEqual(report.warnings, ())

    def test_zero_noise(self):
        """
        With std 0 every episode equals the curve mean; task overrides apply.
        """
        log = generate_synthetic_log(small_spec())
        run = log.runs("smac", "3m", "vdn")[0]
        for interval, fraction in zip(run.intervals, [0.0, 0.25, 0.5, 0.75, 1.0]):
            self.assertEqual(set(interval.metrics["return"]), {5.0 * fraction})
        self.assertEqual(set(run.absolute.metrics["return"]), {5.0})
        self.assertEqual(set(log.runs("smac", "8m", "vdn")[0].absolute.metrics["return"]), {7.0})

    def test_deterministic(self):
        """
        Same spec and seed give byte-identical serialised logs; another seed differs.
        """
        first = serialize_experiment_log(generate_synthetic_log(small_spec()))
        self.assertEqual(first, serialize_experiment_log(generate_synthetic_log(small_spec())))
        self.assertNotEqual(first, serialize_experiment_log(generate_synthetic_log(small_spec(seed=8))))

    def test_curves(self):
        """
        Both curve shapes start at 0 and end at 1.
        """
        progress = np.linspace(0.0, 1.0, 11)
        for curve in ("linear", "saturating"):
            fractions = curve_fraction(curve, progress)
            self.assertAlmostEqual(fractions[0], 0.0, places=12)
            self.assertAlmostEqual(fractions[-1], 1.0, places=12)
            self.assertTrue(np.all(np.diff(fractions) > 0))
        self.assertGreater(curve_fraction("saturating", progress)[2], curve_fraction("linear", progress)[2])


def spec_protocol(spec: SynthSpec) -> ProtocolConfig:
    return ProtocolConfig(eval_episodes=spec.eval_episodes, absolute_episodes=spec.absolute_episodes,
                          eval_interval=spec.eval_interval, runs=spec.runs)


class SynthSpecTest(unittest.TestCase):
    """
    Unit test for reading synthetic specs.
    """

    def test_from_dict(self):
        """
        JSON keys map onto the spec; omitted options keep the protocol defaults.
        """
        spec = synth_spec_from_dict({
            "environments": [{"name": "smac", "tasks": ["3m"]}],
            "algorithms": [{"name": "qmix", "mean": 2.0, "tasks": {"3m": {"std": 0.0}}}],
        })
        self.assertEqual(spec.runs, 10)
        self.assertEqual(spec.intervals, 201)
        self.assertEqual(spec.final_step, 2_000_000)
        self.assertEqual(spec.algorithms[0].model_for("smac", "3m"), ScoreModel(2.0, 0.0))
        self.assertEqual(spec.algorithms[0].model_for("smac", "5m"), ScoreModel(2.0, 0.1))

    def test_invalid(self):
        """
        Schema violations and inconsistent values are InvalidSpec errors.
        """
        with self.assertRaises(InvalidSpec):
            synth_spec_from_dict({"environments": []})
        with self.assertRaises(InvalidSpec):
            synth_spec_from_dict({"environments": [{"name": "smac", "tasks": ["3m"]}],
                                  "algorithms": [{"name": "qmix", "curve": "cubic"}]})
        with self.assertRaises(InvalidSpec):
            small_spec(runs=0)
        with self.assertRaises(InvalidSpec):
            ScoreModel(1.0, -1.0)

    def test_load(self):
        """
        Specs load from files; missing files raise FileNotFoundError.
        """
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, "spec.json")
            with open(path, "w") as spec_file:
                json.dump({"environments": [{"name": "smac", "tasks": ["3m"]}],
                           "algorithms": [{"name": "qmix"}], "seed": 5}, spec_file)
            self.assertEqual(load_synth_spec(path).seed, 5)
            with self.assertRaises(FileNotFoundError):
                load_synth_spec(os.path.join(directory, "missing.json"))


class OraclesTest(unittest.TestCase):
    """
    Unit test for the brute-force oracles.
    """

    def test_iqm_oracle(self):
        """
        Hand-checked values and agreement with the library IQM.
        """
        self.assertEqual(oracle_iqm(range(8)), 3.5)
        self.assertEqual(iqm(range(8)), 3.5)
        self.assertEqual(oracle_iqm([2.5] * 9), 2.5)
        self.assertEqual(oracle_iqm([4.0]), 4.0)
        with self.assertRaises(EmptyInput):
            oracle_iqm([])

    def test_poi_oracle(self):
        """
        Ties count one half.
        """
        self.assertEqual(oracle_probability_of_improvement([[1.0, 2.0]], [[1.0, 2.0]]), 0.5)
        self.assertEqual(oracle_probability_of_improvement([[2.0, 2.0]], [[1.0, 1.0]]), 1.0)
        self.assertEqual(oracle_probability_of_improvement([[1.0, 3.0]], [[2.0, 2.0]]), 0.5)


if __name__ == "__main__":
    unittest.main()
