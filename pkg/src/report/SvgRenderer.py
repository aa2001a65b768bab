##
# @file SvgRenderer.py
#
# @brief Minimal SVG 1.1 line charts: axes, one polyline per curve, a shaded CI band
# per curve and a legend. Output is byte-identical for identical input.
##

# Internal imports
from src.Errors import EmptyInput, MixedCurveKinds
from src.compare.ProfileCurve import ProfileCurve
from src.model.Datatypes import CurveKind

# External imports
from dataclasses import dataclass
from xml.sax.saxutils import escape

## Default axis labels per curve kind.
AXIS_LABELS = {
    CurveKind.PERFORMANCE_PROFILE: ("Normalised score (tau)", "Fraction of runs with score > tau"),
    CurveKind.SAMPLE_EFFICIENCY: ("Timesteps", "Normalised score"),
    CurveKind.INTERVAL_SERIES: ("Timesteps", "Score"),
}


@dataclass(frozen=True)
class SvgStyle:
    width: int = 640
    height: int = 420
    margin: int = 56
    legend_width: int = 160
    title: str = ""
    stroke_width: float = 2.0
    band_opacity: float = 0.2
    palette: tuple = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


class SvgCanvas:
    """!
    Maps data coordinates onto the plot area and collects SVG elements.
    """

    def __init__(self, style: SvgStyle, x_range: tuple, y_range: tuple) -> None:
        ## Style of the chart.
        self.style: SvgStyle = style

        ## Data range on the x axis.
        self.x_range: tuple = x_range

        ## Data range on the y axis.
        self.y_range: tuple = y_range

        ## Emitted elements, in drawing order.
        self.elements: list = []

        self.left = style.margin
        self.right = style.width - style.legend_width
        self.top = style.margin / 2
        self.bottom = style.height - style.margin

    def x(self, value: float) -> float:
        low, high = self.x_range
        return self.left + (value - low) / (high - low) * (self.right - self.left)

    def y(self, value: float) -> float:
        low, high = self.y_range
        return self.bottom - (value - low) / (high - low) * (self.bottom - self.top)

    def point(self, x: float, y: float) -> str:
        return f"{self.x(x):.2f},{self.y(y):.2f}"

    def add(self, element: str) -> None:
        self.elements.append(element)


def _padded(low: float, high: float) -> tuple:
    if low == high:
        return low - 0.5, high + 0.5
    return low, high


def _tick_values(low: float, high: float, count: int = 5) -> list:
    return [low + (high - low) * i / (count - 1) for i in range(count)]


def render_svg(curves: list, style: SvgStyle = SvgStyle()) -> bytes:
    """!
    Draw curves of one kind into a single SVG document.
    @param curves list[ProfileCurve]
    @param style SvgStyle
    @return bytes UTF-8 SVG.
    """
    curves = list(curves)
    if len(curves) == 0:
        raise EmptyInput("curves", "at least one curve is required")
    kinds = sorted({curve.kind.value for curve in curves})
    if len(kinds) > 1:
        raise MixedCurveKinds("curves", f"cannot draw {' and '.join(kinds)} curves in one chart")
    kind = curves[0].kind

    xs = [x for curve in curves for x in curve.xs]
    ys = [value for curve in curves for estimate, ci in curve.points for value in (estimate, ci.lower, ci.upper)]
    if kind is CurveKind.PERFORMANCE_PROFILE:
        ys += [0.0, 1.0]
    x_range = _padded(min(xs), max(xs)) if xs else (0.0, 1.0)
    y_range = _padded(min(ys), max(ys)) if ys else (0.0, 1.0)
    canvas = SvgCanvas(style, x_range, y_range)

    canvas.add(f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="white"/>')
    if style.title:
        canvas.add(f'<text x="{style.width / 2:.2f}" y="{style.margin / 4:.2f}" text-anchor="middle" '
                   f'font-size="14">{escape(style.title)}</text>')

    canvas.add(f'<line class="axis" x1="{canvas.left:.2f}" y1="{canvas.bottom:.2f}" '
               f'x2="{canvas.right:.2f}" y2="{canvas.bottom:.2f}" stroke="black"/>')
    canvas.add(f'<line class="axis" x1="{canvas.left:.2f}" y1="{canvas.top:.2f}" '
               f'x2="{canvas.left:.2f}" y2="{canvas.bottom:.2f}" stroke="black"/>')
    for value in _tick_values(*x_range):
        canvas.add(f'<text x="{canvas.x(value):.2f}" y="{canvas.bottom + 16:.2f}" text-anchor="middle" '
                   f'font-size="10">{value:.4g}</text>')
    for value in _tick_values(*y_range):
        canvas.add(f'<text x="{canvas.left - 6:.2f}" y="{canvas.y(value) + 3:.2f}" text-anchor="end" '
                   f'font-size="10">{value:.4g}</text>')

    x_label, y_label = AXIS_LABELS[kind]
    canvas.add(f'<text x="{(canvas.left + canvas.right) / 2:.2f}" y="{style.height - 12:.2f}" '
               f'text-anchor="middle" font-size="12">{escape(x_label)}</text>')
    canvas.add(f'<text x="14" y="{(canvas.top + canvas.bottom) / 2:.2f}" text-anchor="middle" font-size="12" '
               f'transform="rotate(-90 14 {(canvas.top + canvas.bottom) / 2:.2f})">{escape(y_label)}</text>')

    for i, curve in enumerate(curves):
        colour = style.palette[i % len(style.palette)]
        upper = [canvas.point(x, ci.upper) for x, (_, ci) in zip(curve.xs, curve.points)]
        lower = [canvas.point(x, ci.lower) for x, (_, ci) in zip(curve.xs, curve.points)]
        estimate = [canvas.point(x, value) for x, (value, _) in zip(curve.xs, curve.points)]
        canvas.add(f'<polygon class="ci-band" points="{" ".join(upper + lower[::-1])}" '
                   f'fill="{colour}" fill-opacity="{style.band_opacity}" stroke="none"/>')
        canvas.add(f'<polyline points="{" ".join(estimate)}" fill="none" stroke="{colour}" '
                   f'stroke-width="{style.stroke_width}"/>')

    legend_x = canvas.right + 12
    for i, curve in enumerate(curves):
        colour = style.palette[i % len(style.palette)]
        y = canvas.top + 8 + 18 * i
        canvas.add(f'<g class="legend-entry"><rect x="{legend_x:.2f}" y="{y - 8:.2f}" width="12" height="12" '
                   f'fill="{colour}"/><text x="{legend_x + 18:.2f}" y="{y + 2:.2f}" font-size="11">'
                   f'{escape(curve.label)}</text></g>')

    document = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
    ] + canvas.elements + ["</svg>"]
    return ("\n".join(document) + "\n").encode("utf-8")
