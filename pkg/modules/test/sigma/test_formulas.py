import unittest
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import PotentInputException
from modules.main.graph.patterns import clique, cycle, matching
from modules.main.sigma.formulas import (
    closed_form,
    even_cycle_upper_bound,
    formula_c4,
    formula_clique,
    formula_even_cycle,
    formula_matching,
    formula_odd_cycle,
    lemma4_upper_bound,
)


class TestFormulas(unittest.TestCase):


    def test_formula_odd_cycle(self):
        """Test formula_odd_cycle()."""

        params_and_expectations = [
            ((3, 9), 44, True),
            ((2, 7), 24, True),
            ((3, 8), 38, False),
            ((4, 12), 4 * 19 + 2, True),
            ((1, 5), 10, False)
        ]
        for (m, n), value, valid in params_and_expectations:
            formula = formula_odd_cycle(m, n)
            self.assertEqual((formula.value, formula.valid), (value, valid), (m, n))
            self.assertEqual(formula.source, C.ODD_CYCLE_SOURCE)

        # m = 2 agrees with 4n - 4.
        for n in range(5, 20):
            self.assertEqual(formula_odd_cycle(2, n).value, 4 * n - 4)

        for m, n in [(0, 5), (3, 0), (-1, 4)]:
            with self.assertRaises(PotentInputException):
                formula_odd_cycle(m, n)


    def test_formula_even_cycle(self):
        """Test formula_even_cycle()."""

        params_and_expectations = [
            ((3, 13), 70, True),
            ((2, 7), 26, True),
            ((3, 12), 64, False),
            ((2, 6), 22, False)
        ]
        for (m, n), value, valid in params_and_expectations:
            formula = formula_even_cycle(m, n)
            self.assertEqual((formula.value, formula.valid), (value, valid), (m, n))

        # m = 2 agrees with 4n - 2.
        for n in range(7, 20):
            self.assertEqual(formula_even_cycle(2, n).value, 4 * n - 2)

        with self.assertRaises(PotentInputException):
            formula_even_cycle(3, 0)


    def test_lemma4_upper_bound(self):
        """Test lemma4_upper_bound()."""

        params_and_expectations = [
            ((3, 0), 50),
            ((3, 1), 56),
            ((3, 2), 60),
            ((3, 4), 70)
        ]
        for (m, t), expectation in params_and_expectations:
            self.assertEqual(lemma4_upper_bound(m, t), expectation)

        # At t = 2m - 2 the bound meets the even-cycle formula.
        for m in range(3, 8):
            self.assertEqual(lemma4_upper_bound(m, 2 * m - 2), formula_even_cycle(m, 5 * m - 2).value)

        # Out-of-range parameters should raise PotentInputException.
        for m, t in [(2, 0), (3, -1), (3, 5)]:
            with self.assertRaises(PotentInputException):
                lemma4_upper_bound(m, t)


    def test_even_cycle_upper_bound(self):
        """Test even_cycle_upper_bound()."""

        formula = even_cycle_upper_bound(3, 9)
        self.assertEqual((formula.value, formula.valid), (50, True))
        self.assertEqual(formula.value, lemma4_upper_bound(3, 0))
        self.assertFalse(even_cycle_upper_bound(3, 8).valid)


    def test_small_pattern_formulas(self):
        """Test formula_c4(), formula_matching() and formula_clique()."""

        self.assertEqual([formula_c4(n).value for n in range(4, 8)], [10, 14, 16, 20])
        self.assertTrue(formula_c4(4).valid)
        self.assertFalse(formula_c4(3).valid)

        self.assertEqual([formula_matching(2, n).value for n in range(4, 8)], [8, 10, 12, 14])
        self.assertEqual(formula_matching(3, 6).value, 22)
        self.assertFalse(formula_matching(3, 5).valid)

        self.assertEqual((formula_clique(3, 6).value, formula_clique(3, 6).valid), (12, True))
        self.assertFalse(formula_clique(3, 5).valid)
        self.assertEqual((formula_clique(4, 8).value, formula_clique(4, 8).valid), (28, False))


    def test_closed_form(self):
        """Test closed_form()."""

        patterns_ns_and_expectations = [
            (cycle(3), 6, (12, True, C.CLIQUE_SOURCE)),
            (cycle(4), 5, (14, True, C.C4_SOURCE)),
            (cycle(5), 6, (20, True, C.ODD_CYCLE_SOURCE)),
            (cycle(6), 6, (24, True, C.C6_AT_6_SOURCE)),
            (cycle(6), 7, (26, True, C.EVEN_CYCLE_SOURCE)),
            (cycle(7), 9, (44, True, C.ODD_CYCLE_SOURCE)),
            (cycle(8), 13, (70, True, C.EVEN_CYCLE_SOURCE)),
            (matching(2), 5, (10, True, C.MATCHING_SOURCE)),
            (clique(3), 7, (14, True, C.CLIQUE_SOURCE))
        ]
        for H, n, expectation in patterns_ns_and_expectations:
            formula = closed_form(H, n)
            self.assertEqual((formula.value, formula.valid, formula.source), expectation, (H.name, n))

        # No formula covers K_1 or K_2.
        self.assertIsNone(closed_form(clique(1), 4))
        self.assertIsNone(closed_form(clique(2), 4))


if __name__ == '__main__':
    unittest.main()
