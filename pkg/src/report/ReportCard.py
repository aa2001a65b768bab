##
# @file ReportCard.py
#
# @brief Template of the experimental details every publication should report,
# rendered as a Markdown or LaTeX table with blank placeholders for unset fields.
##

# Internal imports
from src.Errors import InvariantViolation
from src.ProtocolConfig import ProtocolConfig
from src.model.Datatypes import TableFormat
from src.report.TableRenderer import escape_latex

# External imports
from dataclasses import dataclass

## Heading of the section that collects fields outside the template.
ADDITIONAL_SECTION: str = "Additional"

## Ordered template sections and their fields.
REPORT_CARD_TEMPLATE = (
    ("Hyperparameters", (
        "Discount factor",
        "Batch size",
        "Replay buffer size",
        "Minimum replay buffer size before updating",
        "N steps bootstrapping",
        "Target network update period",
        "Epsilon schedule (decay steps, epsilon start, epsilon min)",
        "Value network architecture",
        "Value network initializer",
        "Value network layer size",
        "Value network layer normalisation",
        "Mixing network (architecture, size, activation)",
        "Hypernetworks (size, activation)",
        "Parameter sharing",
        "Parallel workers",
        "Seed range",
    )),
    ("Code-level optimisations", (
        "Optimiser (type, parameters)",
        "Learning rate",
        "Reward normalisation",
        "Death masking",
        "Clipped updates",
        "Eligibility trace",
        "TD(lambda) value",
    )),
    ("Computational resources", (
        "Average wall-clock time per algorithm",
        "CPUs per experiment",
        "GPU per experiment",
        "RAM per experiment",
    )),
    ("Evaluation protocol", (
        "Total training (timesteps)",
        "Evaluation interval (timesteps)",
        "Independent evaluation episodes",
        "Absolute metric (evaluation episodes, aggregation method)",
        "Local aggregation method",
        "Global aggregation method",
        "Metrics",
        "Exploration behaviour",
    )),
    ("Framework", (
        "MARL framework (name, version)",
    )),
    ("Environment settings", (
        "Environment (name, version)",
        "Training configs",
        "In sample evaluation configs",
        "Out of sample evaluation configs",
    )),
)

## Template section headings, in order.
TEMPLATE_HEADINGS = tuple(heading for heading, _ in REPORT_CARD_TEMPLATE)


@dataclass(frozen=True)
class ReportCard:
    """!
    sections: ordered (heading, ((field_name, value), ...)) pairs; an empty value is a blank placeholder.
    Headings follow the template, optionally followed by an "Additional" section.
    """

    sections: tuple

    def __post_init__(self) -> None:
        sections = tuple((heading, tuple((name, value) for name, value in fields)) for heading, fields in self.sections)
        headings = tuple(heading for heading, _ in sections)
        if headings not in (TEMPLATE_HEADINGS, TEMPLATE_HEADINGS + (ADDITIONAL_SECTION,)):
            raise InvariantViolation("sections", "section headings must match the report card template")
        object.__setattr__(self, "sections", sections)

    @classmethod
    def default(cls) -> "ReportCard":
        return cls(tuple((heading, tuple((name, "") for name in fields)) for heading, fields in REPORT_CARD_TEMPLATE))

    def value(self, name: str) -> str:
        for _, fields in self.sections:
            for field_name, value in fields:
                if field_name == name:
                    return value
        raise KeyError(name)

    def with_field(self, name: str, value: str) -> "ReportCard":
        """!
        Return a copy with one field set. Fields outside the template go to the "Additional" section.
        @param name str Field name.
        @param value str
        @return ReportCard
        """
        sections = [(heading, list(fields)) for heading, fields in self.sections]
        for _, fields in sections:
            for i, (field_name, _) in enumerate(fields):
                if field_name == name:
                    fields[i] = (name, str(value))
                    return ReportCard(tuple(sections))

        if sections[-1][0] != ADDITIONAL_SECTION:
            sections.append((ADDITIONAL_SECTION, []))
        sections[-1][1].append((name, str(value)))
        return ReportCard(tuple(sections))


def report_card_from_config(config: ProtocolConfig) -> ReportCard:
    """!
    Default card with the evaluation-protocol section filled in from a protocol config.
    @param config ProtocolConfig
    @return ReportCard
    """
    return (ReportCard.default()
            .with_field("Total training (timesteps)",
                        f"{config.timesteps_off_policy} off-policy, {config.timesteps_on_policy} on-policy")
            .with_field("Evaluation interval (timesteps)", str(config.eval_interval))
            .with_field("Independent evaluation episodes", str(config.eval_episodes))
            .with_field("Absolute metric (evaluation episodes, aggregation method)",
                        f"{config.absolute_episodes}, mean over episodes")
            .with_field("Local aggregation method", "mean with normal CI")
            .with_field("Global aggregation method",
                        f"IQM and optimality gap with {config.ci_level:.0%} stratified bootstrap CIs "
                        f"({config.bootstrap_replicates} replicates)")
            .with_field("Seed range", str(config.seed)))


def render_report_card(card: ReportCard, format: TableFormat = TableFormat.MARKDOWN) -> str:
    """!
    Render every section in order; unset fields stay blank.
    """
    if TableFormat(format) is TableFormat.MARKDOWN:
        lines = ["| Experimental setup | Value |", "| --- | --- |"]
        for heading, fields in card.sections:
            lines.append(f"| **{heading}** | |")
            lines += [f"| {name} | {value} |".replace("|  |", "| |") for name, value in fields]
        return "\n".join(lines) + "\n"

    lines = [r"\begin{tabular}{ll}", r"\hline", r"\textbf{Experimental setup} & \textbf{Value} \\", r"\hline"]
    for heading, fields in card.sections:
        lines.append(rf"\textbf{{{escape_latex(heading)}}} & \\")
        lines += [rf"{escape_latex(name)} & {escape_latex(value)} \\" for name, value in fields]
        lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"
