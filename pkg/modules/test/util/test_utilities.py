import datetime as dt
import json
import os
import tempfile
import unittest
import modules.main.util.utilities as utilities


class TestUtilities(unittest.TestCase):


    def test_get_seconds_since_datetime(self):
        """Test get_seconds_since_datetime()."""

        t0 = dt.datetime.now()
        # Time difference should be nearly zero since we're checking right after setting t0.
        self.assertAlmostEqual(
            first=utilities.get_seconds_since_datetime(t0),
            second=0.0,
            places=2
        )


    def test_get(self):
        """Test get()."""

        data = {"a": 1, "b": None}
        keys_or_elses_and_expectations = [
            ("a", None, 1),
            ("b", 2, None),
            ("c", None, None),
            ("c", 3, 3)
        ]
        for key, or_else, expectation in keys_or_elses_and_expectations:
            self.assertEqual(utilities.get(data=data, key=key, orElse=or_else), expectation)


    def test_read_json_file(self):
        """Test read_json_file()."""

        with tempfile.TemporaryDirectory() as directory:
            # Well-formed JSON should parse.
            path = os.path.join(directory, "valid.json")
            with open(path, 'w') as file:
                json.dump({"max_states": 10}, file)
            self.assertEqual(utilities.read_json_file(path), {"max_states": 10})

            # Malformed JSON should raise JSONDecodeError.
            path = os.path.join(directory, "invalid.json")
            with open(path, 'w') as file:
                file.write("{not json")
            with self.assertRaises(json.JSONDecodeError):
                utilities.read_json_file(path)

            # A missing file should raise FileNotFoundError.
            with self.assertRaises(FileNotFoundError):
                utilities.read_json_file(os.path.join(directory, "missing.json"))


    def test_strip_comment(self):
        """Test strip_comment()."""

        lines_and_expectations = [
            ("2,2,2", "2,2,2"),
            ("  2 2 2  ", "2 2 2"),
            ("2,2,2 # triangle", "2,2,2"),
            ("# only a comment", ""),
            ("", "")
        ]
        for line, expectation in lines_and_expectations:
            self.assertEqual(utilities.strip_comment(line), expectation)


    def test_split_integers(self):
        """Test split_integers()."""

        # Commas, whitespace or both should separate terms.
        lines_and_expectations = [
            ("2,2,2", [2, 2, 2]),
            ("8 8 8 3 3 3 3 3 3", [8, 8, 8, 3, 3, 3, 3, 3, 3]),
            ("3, 3,\t1 ,1", [3, 3, 1, 1]),
            ("-1,2", [-1, 2]),
            ("", [])
        ]
        for line, expectation in lines_and_expectations:
            self.assertEqual(utilities.split_integers(line), expectation)

        # Non-integer tokens should raise ValueError.
        for line in ["2,a,2", "2.5 1", "2;2"]:
            with self.assertRaises(ValueError):
                utilities.split_integers(line)


    def test_parse_int_range(self):
        """Test parse_int_range()."""

        texts_and_expectations = [
            ("4..7", [4, 5, 6, 7]),
            ("5..5", [5]),
            ("9", [9])
        ]
        for text, expectation in texts_and_expectations:
            self.assertEqual(list(utilities.parse_int_range(text)), expectation)

        # Malformed or empty ranges should raise ValueError.
        for text in ["7..4", "a..b", "4-7", ""]:
            with self.assertRaises(ValueError):
                utilities.parse_int_range(text)


if __name__ == '__main__':
    unittest.main()
