##
# @file PlotData.py
#
# @brief CSV plot data of a ProfileCurve: header x,estimate,ci_lower,ci_upper and one row per grid point.
# Floats are written in their shortest round-trip form, so reading the CSV back is exact.
#
# @section libraries_PlotData Libraries/Modules
# - pandas (https://pandas.pydata.org)
#   - CSV writing and round-trip float parsing.
##

# Internal imports
from src.Errors import SchemaViolation, MalformedJson
from src.compare.ProfileCurve import ProfileCurve
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CIMethod, CurveKind

# External imports
from io import StringIO
import pandas as pd

## CSV columns, in order.
PLOT_COLUMNS = ["x", "estimate", "ci_lower", "ci_upper"]

## CI method assumed for non-degenerate rows of each curve kind.
KIND_METHODS = {
    CurveKind.PERFORMANCE_PROFILE: CIMethod.STRATIFIED_BOOTSTRAP,
    CurveKind.SAMPLE_EFFICIENCY: CIMethod.STRATIFIED_BOOTSTRAP,
    CurveKind.INTERVAL_SERIES: CIMethod.NORMAL,
}


def plot_frame(curve: ProfileCurve) -> pd.DataFrame:
    return pd.DataFrame({
        "x": pd.Series(curve.xs, dtype="float64"),
        "estimate": pd.Series([estimate for estimate, _ in curve.points], dtype="float64"),
        "ci_lower": pd.Series([ci.lower for _, ci in curve.points], dtype="float64"),
        "ci_upper": pd.Series([ci.upper for _, ci in curve.points], dtype="float64"),
    }, columns=PLOT_COLUMNS)


def emit_plot_data(curve: ProfileCurve) -> str:
    """!
    Serialise a curve to CSV text.
    @param curve ProfileCurve
    @return str
    """
    return plot_frame(curve).to_csv(index=False, lineterminator="\n")


def read_plot_data(text: str, kind: CurveKind = CurveKind.PERFORMANCE_PROFILE, label: str = "",
                   ci_level: float = 0.95) -> ProfileCurve:
    """!
    Parse CSV plot data back into a curve. Rows with ci_lower == ci_upper become degenerate intervals.
    @param text str CSV text written by emit_plot_data.
    @param kind CurveKind
    @param label str
    @param ci_level float Level recorded on the intervals.
    @return ProfileCurve
    """
    kind = CurveKind(kind)
    try:
        frame = pd.read_csv(StringIO(text), float_precision="round_trip", dtype="float64")
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as error:
        raise MalformedJson("csv", f"unreadable plot data: {error}")
    if list(frame.columns) != PLOT_COLUMNS:
        raise SchemaViolation("csv", f"expected columns {','.join(PLOT_COLUMNS)}")

    points = []
    for estimate, lower, upper in frame[["estimate", "ci_lower", "ci_upper"]].itertuples(index=False):
        method = CIMethod.DEGENERATE if lower == upper else KIND_METHODS[kind]
        points.append((float(estimate), ConfidenceInterval(float(lower), float(upper), ci_level, method)))
    return ProfileCurve(kind, label, frame["x"].tolist(), points)
