import unittest
from dataclasses import replace
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import (
    DegreeSequence,
    PotentInputException,
    PotentNotGraphicalException,
    enumerate_graphical_sequences,
)
from modules.main.graph.patterns import cycle
from modules.main.graph.simple_graph import PotentGraphException
from modules.main.sigma.bound_checks import (
    EvenCycleBoundReport,
    check_even_cycle_bound,
    check_theorem2_hypotheses,
    extremal_graph,
    extremal_sequence,
    extremal_target,
    extremal_threshold,
    reports_frame,
    survey_odd_cycle_hypotheses,
    verify_lower_bound,
)
from modules.main.sigma.sigma_oracle import SigmaRecord
from modules.main.switchspace.realization_space import SearchBudget
from modules.test.util.oracles import slow_test


class TestBoundChecks(unittest.TestCase):


    def test_extremal_constructions(self):
        """Test extremal_graph(), extremal_sequence(), extremal_target() and extremal_threshold()."""

        self.assertEqual(extremal_sequence(C.ODD, 3, 9).terms, (8, 8, 8, 3, 3, 3, 3, 3, 3))
        self.assertEqual(extremal_sequence(C.EVEN, 2, 7).terms, (6, 6, 3, 3, 2, 2, 2))
        self.assertEqual(extremal_graph(C.EVEN, 3, 10).edge_count(), 25)
        self.assertEqual(extremal_target(C.ODD, 3), cycle(7))
        self.assertEqual(extremal_target(C.EVEN, 3), cycle(8))
        self.assertEqual(extremal_threshold(C.ODD, 3, 9), 44)
        self.assertEqual(extremal_threshold(C.EVEN, 3, 10), 52)

        # An unknown kind should raise PotentInputException.
        for call in [lambda: extremal_graph("both", 3, 9), lambda: extremal_target("", 3)]:
            with self.assertRaises(PotentInputException):
                call()
        with self.assertRaises(PotentGraphException):
            extremal_graph(C.ODD, 0, 3)


    def test_verify_lower_bound(self):
        """Test verify_lower_bound()."""

        params_and_expectations = [
            ((C.ODD, 3, 9), 42, 1),
            ((C.ODD, 2, 6), 18, 1),
            ((C.EVEN, 2, 7), 24, 1),
            ((C.EVEN, 3, 10), 50, 1)
        ]
        for (kind, m, n), sigma, realizations in params_and_expectations:
            report = verify_lower_bound(kind, m, n)
            self.assertEqual(report.sigma, sigma)
            self.assertEqual(report.realization_count, realizations)
            self.assertEqual(report.containing_count, 0)
            self.assertTrue(report.exhausted)
            self.assertTrue(report.certified)
            self.assertEqual(report.to_dict()["threshold"], sigma + 2)


    def test_verify_lower_bound_for_small_parameters(self):
        """Test that verify_lower_bound() certifies both constructions for m = 2, 3 and every n up to 11."""

        for m in [2, 3]:
            for kind, smallest_n in [(C.ODD, m + 1), (C.EVEN, m + 2)]:
                for n in range(smallest_n, 12):
                    report = verify_lower_bound(kind, m, n)
                    self.assertTrue(report.certified, report.to_dict())
                    self.assertEqual(report.realization_count, 1, report.to_dict())
                    self.assertEqual(report.sigma, extremal_threshold(kind, m, n) - 2)


    def test_verify_lower_bound_uncertified(self):
        """Test LowerBoundReport.certified."""

        # K_1 + empty(2) is the path 1 0 2, the only realization of (2,1,1) with vertex 0 in the middle.
        report = verify_lower_bound(C.ODD, 1, 3, SearchBudget(max_states=1))
        self.assertEqual(report.realization_count, 1)
        self.assertTrue(report.certified)

        # A cut-off walk or a containing realization isn't certified.
        for changes in [{"exhausted": False}, {"containing_count": 1}, {"threshold": report.threshold + 2}]:
            self.assertFalse(replace(report, **changes).certified)


    def test_check_theorem2_hypotheses(self):
        """Test check_theorem2_hypotheses()."""

        # The extremal sequence has no C_7 realization at all.
        outcome = check_theorem2_hypotheses(extremal_sequence(C.ODD, 3, 9), 3)
        self.assertEqual(outcome.outcome, C.FAILS)
        self.assertIn("(i)", outcome.reason)
        self.assertEqual(outcome.bound, 44)

        # A 9-cycle with chords has a realization containing C_8.
        outcome = check_theorem2_hypotheses(DegreeSequence(terms=(4, 4, 4, 4, 4, 3, 3, 3, 3)), 3)
        self.assertEqual(outcome.outcome, C.FAILS)
        self.assertIn("(ii)", outcome.reason)

        # Too few terms equal to m.
        outcome = check_theorem2_hypotheses(DegreeSequence(terms=(8,) * 9), 3)
        self.assertEqual(outcome.outcome, C.FAILS)
        self.assertIn("degree counts", outcome.reason)

        # No room off the cycle.
        outcome = check_theorem2_hypotheses(DegreeSequence(terms=(2,) * 7), 3)
        self.assertEqual(outcome.outcome, C.FAILS)

        with self.assertRaises(PotentInputException):
            check_theorem2_hypotheses(DegreeSequence(terms=(2, 2, 2)), 2)
        with self.assertRaises(PotentNotGraphicalException):
            check_theorem2_hypotheses(DegreeSequence(terms=(3, 3, 1, 1)), 3)


    def test_survey_odd_cycle_hypotheses(self):
        """Test survey_odd_cycle_hypotheses() where no sequence can leave a vertex off the cycle."""

        survey = survey_odd_cycle_hypotheses(3, 7)
        self.assertEqual(survey.sequences_checked, len(list(enumerate_graphical_sequences(7))))
        self.assertTrue(survey.vacuous)
        self.assertEqual(survey.violations, [])
        self.assertEqual(survey.to_dict()["bound"], 3 * 10 + 2)

        frame = reports_frame([survey])
        self.assertEqual(frame["vacuous"][0], True)


    def test_check_even_cycle_bound_parameters(self):
        """Test that check_even_cycle_bound() rejects parameters outside its range."""

        for m, t in [(2, 0), (3, 5), (3, -1)]:
            with self.assertRaises(PotentInputException):
                check_even_cycle_bound(m, t)


    def test_even_cycle_bound_report(self):
        """Test EvenCycleBoundReport."""

        record = SigmaRecord(pattern=cycle(8), n=11, sigma=60, witness=None, sequences_checked=1, unknown_count=0)
        report = EvenCycleBoundReport(m=3, t=2, record=record, bound=60, general_bound=62)
        self.assertTrue(report.within_bound)
        self.assertEqual((report.n, report.to_dict()["general_bound"]), (11, 62))
        self.assertFalse(replace(report, record=replace(record, sigma=62)).within_bound)
        self.assertFalse(replace(report, record=replace(record, sigma=None)).within_bound)


    @slow_test
    def test_survey_n8_n9(self):
        """Test that no in-scope sequence for m = 3 and n = 8, 9 exceeds the bound."""

        for n in [8, 9]:
            survey = survey_odd_cycle_hypotheses(3, n)
            self.assertEqual(survey.violations, [])
            self.assertEqual(survey.unknown, [])


    @slow_test
    def test_check_even_cycle_bound(self):
        """Test sigma(C_8, 9) against its upper bound."""

        report = check_even_cycle_bound(3, 0, jobs=2)
        self.assertEqual(report.n, 9)
        self.assertEqual(report.bound, 50)
        self.assertEqual(report.general_bound, 50)
        self.assertTrue(report.record.certified)
        self.assertTrue(report.within_bound)


if __name__ == '__main__':
    unittest.main()
