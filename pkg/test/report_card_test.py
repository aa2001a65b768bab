##
# @file report_card_test.py
#
# @brief Unit test for the experimental-details report card.
##

# Internal imports
from src.Errors import InvariantViolation
from src.ProtocolConfig import ProtocolConfig
from src.model.Datatypes import TableFormat
from src.report.ReportCard import (ADDITIONAL_SECTION, TEMPLATE_HEADINGS, ReportCard, render_report_card,
                                   report_card_from_config)

# External imports
import unittest


class ReportCardTest(unittest.TestCase):
    """
    Unit test for ReportCard.
    """

    def test_default_card(self):
        """
        The blank card lists every section and field in order.
        """
        text = render_report_card(ReportCard.default())
        self.assertIn("| Evaluation interval (timesteps) | |", text)
        self.assertIn("| Independent evaluation episodes | |", text)
        self.assertIn("| Discount factor | |", text)
        positions = [text.index(f"**{heading}**") for heading in TEMPLATE_HEADINGS]
        self.assertEqual(positions, sorted(positions))

    def test_set_field(self):
        """
        Setting one field replaces only that placeholder.
        """
        card = ReportCard.default().with_field("Batch size", "32")
        self.assertEqual(card.value("Batch size"), "32")
        default_text = render_report_card(ReportCard.default())
        text = render_report_card(card)
        self.assertEqual(text, default_text.replace("| Batch size | |", "| Batch size | 32 |"))

    def test_additional_field(self):
        """
        Fields outside the template end up in a final Additional section.
        """
        card = ReportCard.default().with_field("Hardware vendor", "none").with_field("Notes", "ok")
        heading, fields = card.sections[-1]
        self.assertEqual(heading, ADDITIONAL_SECTION)
        self.assertEqual(fields, (("Hardware vendor", "none"), ("Notes", "ok")))
        self.assertTrue(render_report_card(card).endswith("| Notes | ok |\n"))

    def test_from_config(self):
        """
        The evaluation-protocol section is filled from the protocol config.
        """
        card = report_card_from_config(ProtocolConfig())
        self.assertEqual(card.value("Evaluation interval (timesteps)"), "10000")
        self.assertEqual(card.value("Independent evaluation episodes"), "32")
        self.assertEqual(card.value("Discount factor"), "")

    def test_latex(self):
        """
        LaTeX cards escape their contents.
        """
        text = render_report_card(ReportCard.default().with_field("Learning rate", "5e-4 & decay"), TableFormat.LATEX)
        self.assertTrue(text.startswith(r"\begin{tabular}{ll}"))
        self.assertIn(r"Learning rate & 5e-4 \& decay \\", text)
        self.assertIn(r"\textbf{Evaluation protocol} & \\", text)

    def test_headings(self):
        """
        Cards must follow the template headings.
        """
        with self.assertRaises(InvariantViolation):
            ReportCard((("Other", ()),))


if __name__ == "__main__":
    unittest.main()
