##
# @file CommandLine.py
#
# @brief Command-line entry point of the evaluation toolkit.
# Every subcommand is a thin adapter around the library; no statistics live here.
#
# Exit codes: 0 success, 1 data error or lint failure, 2 usage error or unreadable input.
#
# @section libraries_CommandLine Libraries/Modules
# - argparse standard library
#   - Subcommands and flags.
# - logging standard library
#   - Root logger set up once (WARNING, INFO with --verbose).
##

# Internal imports
from src.Errors import EvaluationError, MalformedJson
from src.ProtocolConfig import ProtocolConfig, load_protocol_config
from src.aggregate.AggregateReport import AggregateReport, DEFAULT_STATISTICS, aggregate_scores, aggregate_by_environment
from src.compare.PerformanceProfile import performance_profile, default_taus, DEFAULT_TAU_POINTS
from src.compare.ProbabilityOfImprovement import probability_of_improvement, improvement_matrix
from src.compare.SampleEfficiency import sample_efficiency_curve, ALIGN_STRICT, ALIGN_INTERSECT
from src.ingest.LogDecoder import load_experiment_log, decode_document
from src.ingest.LogEncoder import serialize_experiment_log
from src.ingest.LogValidator import validate_log
from src.lint.ProtocolLinter import lint_protocol, load_policy_classes
from src.metrics.EvaluationMatrixBuilder import build_evaluation_matrix, evaluation_matrices, task_absolute_summary
from src.metrics.IntervalSeries import per_task_interval_series
from src.model.Datatypes import CurveKind, Pooling, Statistic, TableFormat
from src.report.PlotData import emit_plot_data, read_plot_data
from src.report.ReportCard import ReportCard, render_report_card, report_card_from_config
from src.report.SvgRenderer import SvgStyle, render_svg
from src.report.TableRenderer import TableSpec, render_environment_table, render_task_table
from src.synth.Oracles import oracle_iqm, oracle_probability_of_improvement
from src.synth.SynthSpec import load_synth_spec
from src.synth.SyntheticLogGenerator import generate_synthetic_log

# External imports
from contextlib import redirect_stdout
from dataclasses import replace
from os.path import exists, splitext, basename
import argparse
import json
import logging
import sys

logger = logging.getLogger(__name__)

## Table format names accepted on the command line.
FORMATS = {"md": TableFormat.MARKDOWN, "markdown": TableFormat.MARKDOWN,
           "tex": TableFormat.LATEX, "latex": TableFormat.LATEX}


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def _statistics(text: str) -> list:
    try:
        return [Statistic(name.strip()) for name in text.split(",") if name.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown statistic in '{text}' "
                                         f"(choose from {', '.join(s.value for s in Statistic)})")


def _bounded_int(minimum: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{value} is below the minimum of {minimum}")
        return value
    return parse


## Integer flag types.
positive_int = _bounded_int(1)
non_negative_int = _bounded_int(0)


def _numbers(text: str) -> list:
    try:
        return [float(value) for value in text.split(",") if value.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of numbers")


def _columns(text: str) -> list:
    return [_numbers(column) for column in text.split(";")]


def _field(text: str) -> tuple:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"'{text}' is not of the form FIELD=VALUE")
    name, value = text.split("=", 1)
    return name.strip(), value.strip()


def build_parser() -> argparse.ArgumentParser:
    """!
    Parser of every subcommand and flag.
    @return argparse.ArgumentParser
    """
    parser = _ArgumentParser(prog="evalkit", description="Standardised evaluation of multi-run, multi-task experiments.")
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress at INFO level")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def with_config(command):
        command.add_argument("--config", help="protocol config JSON (defaults to the standard protocol)")

    def with_bootstrap(command):
        command.add_argument("--replicates", type=positive_int, help="bootstrap replicates")
        command.add_argument("--seed", type=non_negative_int, help="seed of every random stream")

    def with_metric(command):
        command.add_argument("--metric", required=True, help="metric name")
        command.add_argument("--pooling", choices=[p.value for p in Pooling], default=Pooling.GLOBAL.value,
                             help="samples defining the task min/max")

    command = commands.add_parser("validate", help="soft-validate a log")
    command.add_argument("log")
    command.add_argument("--json", action="store_true", help="machine readable output")
    with_config(command)

    command = commands.add_parser("lint", help="check a log against the protocol")
    command.add_argument("log")
    command.add_argument("--policy-class", help="JSON map algorithm -> on_policy | off_policy | unknown")
    command.add_argument("--json", action="store_true", help="machine readable output")
    with_config(command)

    command = commands.add_parser("aggregate", help="aggregate statistics with stratified bootstrap CIs")
    command.add_argument("log")
    with_metric(command)
    command.add_argument("--stats", type=_statistics, default=list(DEFAULT_STATISTICS),
                         help="comma separated statistics (iqm, mean, median, optimality_gap)")
    command.add_argument("--gamma", type=float, help="optimality-gap threshold")
    command.add_argument("--workers", type=positive_int, default=1, help="worker threads")
    command.add_argument("--per-environment", action="store_true", help="one report per environment")
    command.add_argument("--out", required=True, help="report JSON")
    with_bootstrap(command)
    with_config(command)

    command = commands.add_parser("compare", help="probability of improvement")
    command.add_argument("log")
    command.add_argument("--candidate", help="algorithm X")
    command.add_argument("--baseline", help="algorithm Y")
    command.add_argument("--all-pairs", action="store_true", help="every ordered pair of algorithms")
    command.add_argument("--out", help="write the JSON here instead of stdout")
    with_metric(command)
    with_bootstrap(command)
    with_config(command)

    command = commands.add_parser("profile", help="performance profile plot data")
    command.add_argument("log")
    command.add_argument("--algorithm", help="algorithm (all algorithms by default, one CSV each)")
    command.add_argument("--tau-points", type=int, default=DEFAULT_TAU_POINTS, help="points of the tau grid on [0, 1]")
    command.add_argument("--out", required=True, help="CSV path")
    with_metric(command)
    with_bootstrap(command)
    with_config(command)

    command = commands.add_parser("curves", help="sample-efficiency or per-task interval series plot data")
    command.add_argument("log")
    command.add_argument("--algorithm", required=True)
    command.add_argument("--statistic", choices=["iqm", "mean"], default="iqm")
    command.add_argument("--align", choices=[ALIGN_STRICT, ALIGN_INTERSECT], default=ALIGN_STRICT)
    command.add_argument("--task", help="ENV/TASK: per-task interval series instead of the sample-efficiency curve")
    command.add_argument("--student-t", action="store_true", help="Student-t CIs for per-task mean series")
    command.add_argument("--out", required=True, help="CSV path")
    with_metric(command)
    with_bootstrap(command)
    with_config(command)

    command = commands.add_parser("tables", help="render an aggregate report (or a log's per-task table)")
    command.add_argument("report", help="aggregate report JSON, or a log for the per-task absolute table")
    command.add_argument("--format", choices=sorted(FORMATS), default="md")
    command.add_argument("--precision", type=int, default=3)
    command.add_argument("--caption", default="")
    command.add_argument("--metric", default="return", help="metric of the per-task table")
    command.add_argument("--pooling", choices=[p.value for p in Pooling], default=Pooling.GLOBAL.value)
    with_config(command)

    command = commands.add_parser("card", help="experimental-details report card")
    command.add_argument("--format", choices=sorted(FORMATS), default="md")
    command.add_argument("--from-config", help="fill the evaluation protocol section from a protocol config")
    command.add_argument("--set", type=_field, action="append", default=[], metavar="FIELD=VALUE",
                         help="set one field (repeatable)")

    command = commands.add_parser("plot", help="render CSV plot data as SVG")
    command.add_argument("csv", nargs="+")
    command.add_argument("--kind", choices=[k.value for k in CurveKind], default=CurveKind.PERFORMANCE_PROFILE.value)
    command.add_argument("--title", default="")
    command.add_argument("--out", required=True, help="SVG path")

    command = commands.add_parser("synth", help="generate a synthetic log or evaluate an oracle")
    command.add_argument("--spec", help="synthetic spec JSON")
    command.add_argument("--out", help="log path")
    command.add_argument("--seed", type=non_negative_int, help="override the spec seed")
    command.add_argument("--oracle", choices=["iqm", "poi"], help="evaluate a brute-force oracle instead")
    command.add_argument("--scores", type=_numbers, help="iqm oracle input: comma separated scores")
    command.add_argument("--x", type=_columns, help="poi oracle input: runs of X, tasks separated by ';'")
    command.add_argument("--y", type=_columns, help="poi oracle input: runs of Y, tasks separated by ';'")

    return parser


def _config(args) -> ProtocolConfig:
    config = load_protocol_config(args.config) if getattr(args, "config", None) else ProtocolConfig()
    overrides = {}
    for name, key in (("replicates", "bootstrap_replicates"), ("seed", "seed"), ("gamma", "gamma")):
        value = getattr(args, name, None)
        if value is not None:
            overrides[key] = value
    return replace(config, **overrides) if overrides else config


def _write(path: str, content) -> None:
    mode = "wb" if isinstance(content, bytes) else "w"
    with open(path, mode, **({} if mode == "wb" else {"encoding": "utf-8", "newline": ""})) as output:
        output.write(content)
    logger.info("Wrote -> %s", path)


def _read_json(path: str):
    if not exists(path):
        raise FileNotFoundError(f"no such file: {path}")
    with open(path, "rb") as source:
        try:
            return json.loads(source.read())
        except (json.JSONDecodeError, UnicodeDecodeError) as error:
            raise MalformedJson("$", f"{path}: {error}")


def _validate(args, out) -> int:
    report = validate_log(load_experiment_log(args.log), _config(args))
    out.write(json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n" if args.json else report.to_text())
    return 0 if report.is_valid else 1


def _lint(args, out) -> int:
    policy_class = load_policy_classes(_read_json(args.policy_class)) if args.policy_class else {}
    report = lint_protocol(load_experiment_log(args.log), _config(args), policy_class)
    out.write(report.to_json() if args.json else report.to_text())
    return 1 if report.failed else 0


def _aggregate(args, out) -> int:
    log = load_experiment_log(args.log)
    config = _config(args)
    if args.per_environment:
        reports = aggregate_by_environment(log, args.metric, args.stats, config, Pooling(args.pooling), args.workers)
        document = {"environments": {env: report.to_dict() for env, report in reports.items()}}
        _write(args.out, json.dumps(document, indent=2) + "\n")
    else:
        matrices = evaluation_matrices(log, args.metric, Pooling(args.pooling))
        _write(args.out, aggregate_scores(matrices, args.stats, config, args.workers).to_json())
    return 0


def _compare(args, out) -> int:
    log = load_experiment_log(args.log)
    config = _config(args)
    if args.all_pairs:
        scores = improvement_matrix(evaluation_matrices(log, args.metric, Pooling(args.pooling)),
                                    config.bootstrap_replicates, config.ci_level, config.seed)
        text = json.dumps([score.to_dict() for score in scores.values()], indent=2) + "\n"
    else:
        if not args.candidate or not args.baseline:
            raise UsageError("compare: --candidate and --baseline are required unless --all-pairs is given")
        x = build_evaluation_matrix(log, args.candidate, args.metric, Pooling(args.pooling))
        y = build_evaluation_matrix(log, args.baseline, args.metric, Pooling(args.pooling))
        text = probability_of_improvement(x, y, config.bootstrap_replicates, config.ci_level, config.seed).to_json()

    if args.out:
        _write(args.out, text)
    else:
        out.write(text)
    return 0


def _profile(args, out) -> int:
    if args.tau_points < 2:
        raise UsageError("profile: --tau-points must be at least 2")
    log = load_experiment_log(args.log)
    config = _config(args)
    algorithms = [args.algorithm] if args.algorithm else log.algorithms()
    stem, suffix = splitext(args.out)

    for algorithm in algorithms:
        matrix = build_evaluation_matrix(log, algorithm, args.metric, Pooling(args.pooling))
        curve = performance_profile(matrix, default_taus(args.tau_points), config.bootstrap_replicates,
                                    config.ci_level, config.seed)
        _write(args.out if len(algorithms) == 1 else f"{stem}.{algorithm}{suffix}", emit_plot_data(curve))
    return 0


def _curves(args, out) -> int:
    log = load_experiment_log(args.log)
    config = _config(args)
    statistic = Statistic(args.statistic)

    if args.task:
        if "/" not in args.task:
            raise UsageError("curves: --task must be of the form ENV/TASK")
        env, task = args.task.split("/", 1)
        series = per_task_interval_series(log, args.algorithm, env, task, args.metric, config.ci_level, statistic,
                                          args.student_t, replicates=config.bootstrap_replicates, seed=config.seed)
        curve = series.to_curve()
    else:
        curve = sample_efficiency_curve(log, args.algorithm, args.metric, statistic, Pooling(args.pooling),
                                        config, args.align)
    _write(args.out, emit_plot_data(curve))
    return 0


def _tables(args, out) -> int:
    document = _read_json(args.report)
    spec = TableSpec(FORMATS[args.format], args.precision, args.caption)

    if "entries" in document:
        out.write(render_environment_table(AggregateReport.from_json(json.dumps(document)), spec))
    elif "environments" in document and "version" not in document:
        for i, (env, report) in enumerate(sorted(document["environments"].items())):
            out.write(("\n" if i else "") + render_environment_table(AggregateReport.from_json(json.dumps(report)),
                                                                      replace(spec, caption=spec.caption or env)))
    else:
        log = decode_document(document)
        config = _config(args)
        matrices = evaluation_matrices(log, args.metric, Pooling(args.pooling))
        out.write(render_task_table({algorithm: task_absolute_summary(matrix, config.ci_level)
                                     for algorithm, matrix in matrices.items()}, spec))
    return 0


def _card(args, out) -> int:
    card = report_card_from_config(load_protocol_config(args.from_config)) if args.from_config else ReportCard.default()
    for name, value in args.set:
        card = card.with_field(name, value)
    out.write(render_report_card(card, FORMATS[args.format]))
    return 0


def _plot(args, out) -> int:
    curves = []
    for path in args.csv:
        if not exists(path):
            raise FileNotFoundError(f"no such file: {path}")
        with open(path, "r", encoding="utf-8") as source:
            curves.append(read_plot_data(source.read(), CurveKind(args.kind), splitext(basename(path))[0]))
    _write(args.out, render_svg(curves, SvgStyle(title=args.title)))
    return 0


def _synth(args, out) -> int:
    if args.oracle == "iqm":
        if args.scores is None:
            raise UsageError("synth: --oracle iqm needs --scores")
        out.write(f"{oracle_iqm(args.scores)!r}\n")
        return 0
    if args.oracle == "poi":
        if args.x is None or args.y is None:
            raise UsageError("synth: --oracle poi needs --x and --y")
        out.write(f"{oracle_probability_of_improvement(args.x, args.y)!r}\n")
        return 0

    if not args.spec or not args.out:
        raise UsageError("synth: --spec and --out are required")
    spec = load_synth_spec(args.spec)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)
    _write(args.out, serialize_experiment_log(generate_synthetic_log(spec)))
    return 0


## Subcommand name -> handler(args, out) -> exit code.
HANDLERS = {
    "validate": _validate,
    "lint": _lint,
    "aggregate": _aggregate,
    "compare": _compare,
    "profile": _profile,
    "curves": _curves,
    "tables": _tables,
    "card": _card,
    "plot": _plot,
    "synth": _synth,
}


def run(argv: list, stdout=None, stderr=None) -> int:
    """!
    Execute one invocation.
    @param argv list[str] Arguments without the program name.
    @param stdout text stream for results (sys.stdout by default).
    @param stderr text stream for errors (sys.stderr by default).
    @return int exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        with redirect_stdout(stdout):
            args = build_parser().parse_args(argv)
    except UsageError as error:
        stderr.write(f"usage error: {error}\n")
        return 2
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")

    try:
        return HANDLERS[args.command](args, stdout)
    except UsageError as error:
        stderr.write(f"usage error: {error}\n")
        return 2
    except FileNotFoundError as error:
        stderr.write(f"error: {error.args[0] if error.args and isinstance(error.args[0], str) else error}\n")
        return 2
    except EvaluationError as error:
        stderr.write(f"error: {error}\n")
        return 1
    except OSError as error:
        stderr.write(f"error: {error}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
