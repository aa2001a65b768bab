##
# @file plot_data_test.py
#
# @brief Unit test for CSV plot data and SVG charts.
##

# Internal imports
from src.Errors import EmptyInput, MixedCurveKinds, SchemaViolation
from src.compare.ProfileCurve import ProfileCurve
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CIMethod, CurveKind
from src.report.PlotData import emit_plot_data, read_plot_data
from src.report.SvgRenderer import SvgStyle, render_svg

# External imports
from xml.etree import ElementTree
import unittest

SVG = "{http://www.w3.org/2000/svg}"


def bootstrap_ci(lower: float, upper: float) -> ConfidenceInterval:
    return ConfidenceInterval(lower, upper, 0.95, CIMethod.STRATIFIED_BOOTSTRAP)


class PlotDataTest(unittest.TestCase):
    """
    Unit test for emit_plot_data and read_plot_data.
    """

    def setUp(self):
        """
        Two-point profile with one degenerate interval.
        """
        self.curve = ProfileCurve(CurveKind.PERFORMANCE_PROFILE, "qmix", [0.0, 0.5],
                                  [(1.0, ConfidenceInterval.degenerate(1.0)), (0.25, bootstrap_ci(0.1, 0.4))])

    def test_lines(self):
        """
        Header plus one row per point; degenerate rows repeat the estimate.
        """
        lines = emit_plot_data(self.curve).splitlines()
        self.assertEqual(len(lines), 3)
        self.assertEqual(lines[0], "x,estimate,ci_lower,ci_upper")
        self.assertEqual(lines[1], "0.0,1.0,1.0,1.0")
        self.assertEqual(lines[2], "0.5,0.25,0.1,0.4")

    def test_empty_curve(self):
        """
        An empty curve is the header only.
        """
        empty = ProfileCurve(CurveKind.SAMPLE_EFFICIENCY, "qmix", [], [])
        self.assertEqual(emit_plot_data(empty), "x,estimate,ci_lower,ci_upper\n")

    def test_read_back(self):
        """
        Reading the CSV restores grid, estimates and intervals.
        """
        curve = read_plot_data(emit_plot_data(self.curve), CurveKind.PERFORMANCE_PROFILE, "qmix")
        self.assertEqual(curve, self.curve)
        self.assertEqual(curve.points[0][1].method, CIMethod.DEGENERATE)
        with self.assertRaises(SchemaViolation):
            read_plot_data("a,b\n1,2\n")


class SvgRendererTest(unittest.TestCase):
    """
    Unit test for render_svg.
    """

    def setUp(self):
        """
        A constant efficiency curve and a rising one.
        """
        flat = [(0.5, ConfidenceInterval.degenerate(0.5))] * 3
        rising = [(0.1, bootstrap_ci(0.0, 0.2)), (0.5, bootstrap_ci(0.4, 0.6)), (0.9, bootstrap_ci(0.8, 1.0))]
        self.flat = ProfileCurve(CurveKind.SAMPLE_EFFICIENCY, "vdn", [0.0, 10_000.0, 20_000.0], flat)
        self.rising = ProfileCurve(CurveKind.SAMPLE_EFFICIENCY, "qmix", [0.0, 10_000.0, 20_000.0], rising)

    def test_single_curve(self):
        """
        One curve draws exactly one estimate polyline.
        """
        root = ElementTree.fromstring(render_svg([self.flat]))
        self.assertEqual(len(root.findall(f".//{SVG}polyline")), 1)

    def test_legend(self):
        """
        Two curves give two legend entries.
        """
        root = ElementTree.fromstring(render_svg([self.rising, self.flat], SvgStyle(title="SMAC <3m>")))
        legend = [group for group in root.findall(f".//{SVG}g") if group.get("class") == "legend-entry"]
        self.assertEqual(len(legend), 2)
        self.assertEqual(len(root.findall(f".//{SVG}polyline")), 2)

    def test_deterministic(self):
        """
        The same curves render to identical bytes.
        """
        self.assertEqual(render_svg([self.rising]), render_svg([self.rising]))

    def test_errors(self):
        """
        Mixed curve kinds and empty input are rejected.
        """
        profile = ProfileCurve(CurveKind.PERFORMANCE_PROFILE, "qmix", [0.0], [(1.0, ConfidenceInterval.degenerate(1.0))])
        with self.assertRaises(MixedCurveKinds):
            render_svg([profile, self.flat])
        with self.assertRaises(EmptyInput):
            render_svg([])


if __name__ == "__main__":
    unittest.main()
