import datetime as dt
import json
import re
import modules.main.util.constants as C


def read_json_file(file_path: str) -> dict:
    """
    Read a JSON file and returns the data as a Python dictionary.

    Parameters:
        file_path (str): The path to the file.

    Returns:
        dict: The data from the JSON file as a Python dictionary. If no file is found or if the JSON is malformed, throw a detailed exception.
    """
    try:
        with open(file_path, 'r') as file:
            return json.load(file)
    except FileNotFoundError:
        raise FileNotFoundError(f"Error: File not found at {file_path}")
    except json.JSONDecodeError as e:
        raise json.JSONDecodeError(f"Error: Invalid JSON format in {file_path}", e.doc, e.pos)


def read_text_file(file_path: str) -> str:
    """Read a text file. Throws a detailed FileNotFoundError if it's missing."""
    try:
        with open(file_path, 'r') as file:
            return file.read()
    except FileNotFoundError:
        raise FileNotFoundError(f"Error: File not found at {file_path}")


def get_seconds_since_datetime(t0: dt.datetime) -> float:
    """Get the number of seconds that have passed since a datetime."""
    now = dt.datetime.now()
    return (now-t0).total_seconds()


def get(data: dict, key: any, orElse: any = None):
    """Get a key from a dict. Return the `orElse` value if the requested key is missing."""
    try:
        return data[key]
    except KeyError:
        return orElse


def strip_comment(line: str) -> str:
    """Drop everything after a `#` and surrounding whitespace."""
    return line.split(C.COMMENT_PREFIX, 1)[0].strip()


def split_integers(line: str) -> list:
    """
    Split a line of integers separated by commas and/or whitespace.

    Args:
        line (str): The line to split. Must already be stripped of comments.

    Returns:
        list: The integers, in the order they appear. Throws ValueError on a token that isn't an integer.
    """
    tokens = [token for token in re.split(r"[,\s]+", line) if token]
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise ValueError(f"Error: Expected integers separated by commas or whitespace, got `{line}`.")


def parse_int_range(text: str) -> range:
    """
    Parse an inclusive range written as `A..B` (or a single integer `A`).

    Returns:
        range: The inclusive range. Throws ValueError if the text is malformed or the range is empty.
    """
    try:
        if C.RANGE_SEPARATOR in text:
            low, high = text.split(C.RANGE_SEPARATOR, 1)
            low, high = int(low), int(high)
        else:
            low = high = int(text)
    except ValueError:
        raise ValueError(f"Error: Invalid range `{text}`. Expected `A..B` or a single integer.")
    if low > high:
        raise ValueError(f"Error: Empty range `{text}`.")
    return range(low, high + 1)
