##
# @file TableRenderer.py
#
# @brief Markdown and LaTeX result tables with "point (lower, upper)" cells.
# The best point of each task row or statistic column is set in bold when two or more algorithms compete.
# Numbers are rounded half-to-even at the configured precision.
#
# @section libraries_TableRenderer Libraries/Modules
# - decimal standard library
#   - Locale-independent half-to-even rounding.
##

# Internal imports
from src.Errors import EmptyInput, TaskListMismatch, InvariantViolation
from src.aggregate.AggregateReport import AggregateReport
from src.model.Datatypes import TableFormat

# External imports
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN
from typing import Mapping

## Column headers of the aggregate statistics.
STATISTIC_HEADERS = {"iqm": "IQM", "mean": "Mean", "median": "Median", "optimality_gap": "Optimality gap"}

## Statistics where the smallest point is the best one.
LOWER_IS_BETTER = frozenset({"optimality_gap"})

## Characters escaped in LaTeX cells.
LATEX_ESCAPES = {
    "\\": r"\textbackslash{}", "&": r"\&", "%": r"\%", "$": r"\$", "#": r"\#",
    "_": r"\_", "{": r"\{", "}": r"\}", "~": r"\textasciitilde{}", "^": r"\textasciicircum{}",
}


@dataclass(frozen=True)
class TableSpec:
    format: TableFormat = TableFormat.MARKDOWN
    precision: int = 3
    caption: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "format", TableFormat(self.format))
        if isinstance(self.precision, bool) or not isinstance(self.precision, int) or not 0 <= self.precision <= 10:
            raise InvariantViolation("precision", "precision must be an integer in [0, 10]")


def format_number(value: float, precision: int) -> str:
    """!
    Round half-to-even on the shortest decimal representation of value.
    @return str
    """
    rounded = Decimal(repr(float(value))).quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN)
    if rounded.is_zero():
        rounded = abs(rounded)
    return f"{rounded:f}"


def format_cell(point: float, ci, precision: int) -> str:
    return (f"{format_number(point, precision)} "
            f"({format_number(ci.lower, precision)}, {format_number(ci.upper, precision)})")


def escape_latex(text: str) -> str:
    return "".join(LATEX_ESCAPES.get(character, character) for character in text)


def best_positions(points: list, lower_is_better: bool = False) -> list:
    """!
    Indices of the best points; ties are all best. Nothing is best among fewer than two competitors.
    @param points list[float]
    @param lower_is_better bool
    @return list[int]
    """
    if len(points) < 2:
        return []
    best = min(points) if lower_is_better else max(points)
    return [i for i, point in enumerate(points) if point == best]


def render_rows(header: list, rows: list, spec: TableSpec, emphasis=frozenset()) -> str:
    """!
    Lay out a header and body rows in the TableSpec format.
    @param emphasis set of (row, column) body positions rendered in bold.
    @return str
    """
    if spec.format is TableFormat.MARKDOWN:
        def markdown_cell(r: int, c: int, cell: str) -> str:
            return f"**{cell}**" if (r, c) in emphasis else cell

        lines = ["| " + " | ".join(header) + " |", "| " + " | ".join("---" for _ in header) + " |"]
        lines += ["| " + " | ".join(markdown_cell(r, c, cell) for c, cell in enumerate(row)) + " |"
                  for r, row in enumerate(rows)]
        if spec.caption:
            lines += ["", f"Table: {spec.caption}"]
        return "\n".join(lines) + "\n"

    def latex_cell(r: int, c: int, cell: str) -> str:
        return rf"\textbf{{{escape_latex(cell)}}}" if (r, c) in emphasis else escape_latex(cell)

    body = [" & ".join(escape_latex(cell) for cell in header) + r" \\"]
    body += [" & ".join(latex_cell(r, c, cell) for c, cell in enumerate(row)) + r" \\" for r, row in enumerate(rows)]
    lines = [r"\begin{tabular}{l" + "c" * (len(header) - 1) + "}", r"\hline", body[0], r"\hline"]
    lines += body[1:] + [r"\hline", r"\end{tabular}"]
    if spec.caption:
        lines = [r"\begin{table}[h]", r"\centering", rf"\caption{{{escape_latex(spec.caption)}}}"] + lines + [r"\end{table}"]
    return "\n".join(lines) + "\n"


def render_task_table(data: Mapping[str, Mapping[str, tuple]], spec: TableSpec = TableSpec()) -> str:
    """!
    One row per task, one column per algorithm (lexicographic).
    @param data Mapping algorithm -> task label -> (point, ConfidenceInterval)
    @param spec TableSpec
    @return str
    """
    if len(data) == 0:
        raise EmptyInput("algorithms", "no algorithms to tabulate")
    algorithms = sorted(data)
    tasks = sorted(data[algorithms[0]])
    for algorithm in algorithms[1:]:
        if sorted(data[algorithm]) != tasks:
            raise TaskListMismatch(algorithm, f"task list differs from the one of '{algorithms[0]}'")

    rows = [[task] + [format_cell(*data[algorithm][task], spec.precision) for algorithm in algorithms]
            for task in tasks]
    emphasis = {(r, 1 + c) for r, task in enumerate(tasks)
                for c in best_positions([data[algorithm][task][0] for algorithm in algorithms])}
    return render_rows(["Task"] + algorithms, rows, spec, emphasis)


def render_environment_table(report: AggregateReport, spec: TableSpec = TableSpec()) -> str:
    """!
    One row per algorithm (lexicographic), one column per statistic.
    @param report AggregateReport
    @param spec TableSpec
    @return str
    """
    algorithms = report.algorithms()
    if len(algorithms) == 0:
        raise EmptyInput("entries", "the report has no algorithms")
    statistics = list(report.entries[algorithms[0]])
    for algorithm in algorithms[1:]:
        if list(report.entries[algorithm]) != statistics:
            raise TaskListMismatch(algorithm, f"statistics differ from the ones of '{algorithms[0]}'")

    rows = [[algorithm] + [format_cell(*report.entries[algorithm][name], spec.precision) for name in statistics]
            for algorithm in algorithms]
    emphasis = {(r, 1 + c) for c, name in enumerate(statistics)
                for r in best_positions([report.entries[algorithm][name][0] for algorithm in algorithms],
                                        name in LOWER_IS_BETTER)}
    header = ["Algorithm"] + [STATISTIC_HEADERS.get(name, name) for name in statistics]
    return render_rows(header, rows, spec, emphasis)
