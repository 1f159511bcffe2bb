import json
import unittest
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import (
    DegreeSequence,
    PotentInputException,
    enumerate_graphical_sequences,
    is_graphical,
    sigma_sum,
)
from modules.main.graph.patterns import clique, cycle, matching
from modules.main.sigma.sigma_oracle import (
    SigmaRecord,
    format_sigma_records,
    read_sigma_records,
    sigma_oracle,
    sigma_records_frame,
)
from modules.main.switchspace.realization_space import SearchBudget, is_potentially
from modules.test.util.oracles import slow_test


class TestSigmaOracle(unittest.TestCase):


    def test_sigma_oracle(self):
        """Test sigma_oracle() against the known small thresholds."""

        patterns_ns_and_expectations = [
            (cycle(4), [4, 5, 6, 7], [10, 14, 16, 20]),
            (cycle(5), [5, 6, 7], [16, 20, 24]),
            (cycle(6), [6, 7], [24, 26]),
            (matching(2), [4, 5, 6, 7], [8, 10, 12, 14]),
            (clique(3), [6, 7], [12, 14]),
            (clique(2), [3, 4], [2, 2])
        ]
        for H, ns, expectations in patterns_ns_and_expectations:
            for n, expectation in zip(ns, expectations):
                record = sigma_oracle(H, n)
                self.assertEqual(record.sigma, expectation, (H.name, n))
                self.assertTrue(record.certified)
                self.assertFalse(record.impossible)


    def test_witness_consistency(self):
        """Test that the witness is graphical, sums to sigma - 2 and isn't potentially H, and that every heavier sequence is."""

        for H, n in [(cycle(4), 6), (cycle(5), 6), (matching(2), 5), (cycle(6), 7)]:
            record = sigma_oracle(H, n)
            self.assertTrue(is_graphical(record.witness))
            self.assertEqual(sigma_sum(record.witness), record.sigma - 2)
            self.assertEqual(is_potentially(record.witness, H).outcome, C.NO)
            for S in enumerate_graphical_sequences(n, min_sum=record.sigma):
                self.assertEqual(is_potentially(S, H).outcome, C.YES, (H.name, S.terms))


    def test_edge_cases(self):
        """Test sigma_oracle() when H can't fit and when every sequence contains H."""

        record = sigma_oracle(cycle(5), 4)
        self.assertTrue(record.impossible)
        self.assertIsNone(record.witness)
        self.assertEqual(record.to_dict()[C.SIGMA_KEY], C.IMPOSSIBLE)

        # Every sequence contains K_1, so nothing is a witness.
        record = sigma_oracle(clique(1), 4)
        self.assertEqual(record.sigma, 0)
        self.assertIsNone(record.witness)
        self.assertEqual(record.sequences_checked, len(list(enumerate_graphical_sequences(4))))

        # Only the edgeless sequence avoids K_2.
        record = sigma_oracle(clique(2), 4)
        self.assertEqual(record.witness.terms, (0, 0, 0, 0))

        # Bad parameters should raise PotentInputException.
        for n, jobs in [(0, 1), (4, 0)]:
            with self.assertRaises(PotentInputException):
                sigma_oracle(cycle(4), n, jobs=jobs)


    def test_budget(self):
        """Test that a tiny budget makes a record uncertified instead of wrong."""

        # The true witness (4,2,2,2,2) has three realizations, so one state can't settle it.
        self.assertEqual(sigma_oracle(cycle(4), 5).witness.terms, (4, 2, 2, 2, 2))
        record = sigma_oracle(cycle(4), 5, SearchBudget(max_states=1))
        self.assertFalse(record.certified)
        self.assertGreater(record.unknown_count, 0)
        self.assertLessEqual(record.sequences_checked, len(list(enumerate_graphical_sequences(5))))


    def test_jobs(self):
        """Test that worker processes don't change the record."""

        for H, n in [(cycle(4), 6), (cycle(5), 6), (clique(1), 4)]:
            self.assertEqual(sigma_oracle(H, n, jobs=2), sigma_oracle(H, n, jobs=1))


    def test_record_formats(self):
        """Test format_sigma_records() and read_sigma_records()."""

        records = [sigma_oracle(cycle(4), 5), sigma_oracle(cycle(5), 4), sigma_oracle(clique(1), 3)]

        data = json.loads(format_sigma_records(records, C.JSON_FORMAT))
        self.assertEqual(data[0], {
            C.PATTERN_KEY: "C4",
            C.N_KEY: 5,
            C.SIGMA_KEY: 14,
            C.WITNESS_KEY: list(records[0].witness.terms),
            C.SEQUENCES_CHECKED_KEY: records[0].sequences_checked,
            C.UNKNOWN_KEY: 0
        })
        self.assertEqual(data[1][C.SIGMA_KEY], C.IMPOSSIBLE)

        for fmt in [C.JSON_FORMAT, C.CSV_FORMAT]:
            self.assertEqual(read_sigma_records(format_sigma_records(records, fmt), fmt), records)

        # A single JSON object reads as one record.
        self.assertEqual(read_sigma_records(records[0].to_json(), C.JSON_FORMAT), records[:1])

        frame = sigma_records_frame(records)
        self.assertEqual(list(frame.columns), C.SIGMA_RECORD_COLUMN_NAMES)
        self.assertEqual(frame[C.WITNESS_KEY][0], " ".join(map(str, records[0].witness.terms)))

        text = format_sigma_records(records, C.TEXT_FORMAT)
        self.assertIn(C.IMPOSSIBLE, text)
        self.assertIn("C4", text)

        with self.assertRaises(PotentInputException):
            format_sigma_records(records, "xml")


    def test_from_dict(self):
        """Test SigmaRecord.from_dict()."""

        record = SigmaRecord.from_dict({"pattern": "C7", "n": "9", "sigma": "44", "witness": "8 8 8 3 3 3 3 3 3", "sequences_checked": 3, "unknown": 0})
        self.assertEqual(record.pattern, cycle(7))
        self.assertEqual(record.witness, DegreeSequence(terms=(8, 8, 8, 3, 3, 3, 3, 3, 3)))
        self.assertTrue(record.certified)

        # Missing or malformed columns should raise PotentInputException.
        for data in [
            {"pattern": "C7", "n": 9, "sigma": 44, "witness": None, "sequences_checked": 3},
            {"pattern": "C7", "n": "nine", "sigma": 44, "witness": None, "sequences_checked": 3, "unknown": 0},
            {"pattern": "C7", "n": 9, "sigma": 44, "witness": "8 x", "sequences_checked": 3, "unknown": 0}
        ]:
            with self.assertRaises(PotentInputException):
                SigmaRecord.from_dict(data)

        for text, fmt in [("{not json", C.JSON_FORMAT), ("", C.TEXT_FORMAT)]:
            with self.assertRaises(PotentInputException):
                read_sigma_records(text, fmt)


    @slow_test
    def test_sigma_c7(self):
        """Test sigma(C_7, 9) = 44 with the extremal witness."""

        record = sigma_oracle(cycle(7), 9, jobs=2)
        self.assertEqual(record.sigma, 44)
        self.assertEqual(record.witness.terms, (8, 8, 8, 3, 3, 3, 3, 3, 3))
        self.assertTrue(record.certified)


    @slow_test
    def test_sigma_c5_c6_larger(self):
        """Test sigma(C_5, 8) and sigma(C_6, 8)."""

        self.assertEqual(sigma_oracle(cycle(5), 8).sigma, 28)
        self.assertEqual(sigma_oracle(cycle(6), 8).sigma, 30)


if __name__ == '__main__':
    unittest.main()
