import unittest
from modules.main.degseq.degree_sequence import sigma_sum
from modules.main.graph.constructions import construct_join_empty, construct_join_k2
from modules.main.graph.simple_graph import PotentGraphException


class TestConstructions(unittest.TestCase):


    def test_construct_join_empty(self):
        """Test construct_join_empty()."""

        params_and_expectations = [
            ((3, 9), (8, 8, 8, 3, 3, 3, 3, 3, 3), 42),
            ((1, 2), (1, 1), 2),
            ((2, 6), (5, 5, 2, 2, 2, 2), 18)
        ]
        for (m, n), terms, sigma in params_and_expectations:
            S = construct_join_empty(m, n).degree_sequence()
            self.assertEqual(S.terms, terms)
            self.assertEqual(sigma_sum(S), sigma)

        for m, n in [(0, 3), (3, 3), (4, 3)]:
            with self.assertRaises(PotentGraphException):
                construct_join_empty(m, n)


    def test_construct_join_k2(self):
        """Test construct_join_k2()."""

        params_and_expectations = [
            ((3, 10), (9, 9, 9, 4, 4, 3, 3, 3, 3, 3), 50),
            ((2, 6), (5, 5, 3, 3, 2, 2), 20),
            ((1, 3), (2, 2, 2), 6)
        ]
        for (m, n), terms, sigma in params_and_expectations:
            S = construct_join_k2(m, n).degree_sequence()
            self.assertEqual(S.terms, terms)
            self.assertEqual(sigma_sum(S), sigma)

        for m, n in [(0, 3), (2, 3), (3, 4)]:
            with self.assertRaises(PotentGraphException):
                construct_join_k2(m, n)


    def test_closed_form_degree_sums(self):
        """Test both constructions against m(2n - m - 1) for 1 <= m < n <= 12."""

        for n in range(2, 13):
            for m in range(1, n):
                base = m * (2 * n - m - 1)
                S = construct_join_empty(m, n).degree_sequence()
                self.assertEqual(S.terms, (n - 1,) * m + (m,) * (n - m))
                self.assertEqual(sigma_sum(S), base)
                if m + 2 <= n:
                    self.assertEqual(sigma_sum(construct_join_k2(m, n).degree_sequence()), base + 2)


if __name__ == '__main__':
    unittest.main()
