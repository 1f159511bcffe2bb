from __future__ import annotations
import logging
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator
import modules.main.util.utilities as utilities


logger = logging.getLogger(__name__)


class PotentInputException(Exception):
    """An exception that is thrown when an input sequence or parameter is malformed."""
    pass


class PotentNotGraphicalException(Exception):
    """An exception that is thrown when a graphical sequence is required but the input isn't graphical."""
    pass


@dataclass(frozen=True)
class DegreeSequence:
    """
    A nonincreasing sequence of nonnegative integers.

    Attributes:
        terms (tuple): The terms, sorted nonincreasing.
    """

    terms: tuple

    @property
    def n(self) -> int:
        """The number of terms."""
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    def __str__(self) -> str:
        return ",".join(map(str, self.terms))


def normalize(raw) -> DegreeSequence:
    """
    Sort a raw sequence of integers into a DegreeSequence.

    Args:
        raw (iterable): The raw integers, in any order.

    Returns:
        DegreeSequence: The multiset sorted nonincreasing. Throws PotentInputException on a negative or non-integer term.
            Terms larger than n - 1 are kept, so `is_graphical` reports them.
    """

    terms = list(raw)
    for term in terms:
        if isinstance(term, bool) or not isinstance(term, int):
            raise PotentInputException(f"Sequence terms must be integers, got `{term!r}`.")
        if term < 0:
            raise PotentInputException(f"Sequence terms must be nonnegative, got `{term}`.")
    return DegreeSequence(terms=tuple(sorted(terms, reverse=True)))


def sigma_sum(S: DegreeSequence) -> int:
    """The sum of all terms, i.e. twice the edge count of any realization."""
    return sum(S.terms)


def count_at_least(S: DegreeSequence, d: int) -> int:
    """Count the terms that are at least `d`."""
    return sum(1 for term in S.terms if term >= d)


def is_graphical(S: DegreeSequence) -> bool:
    """
    Decide whether some simple labeled graph realizes S, using every inequality of the Erdős–Gallai characterization:

        d_1 + ... + d_k <= k(k - 1) + min(d_{k+1}, k) + ... + min(d_n, k)    for k = 1..n

    together with an even sum.
    """

    terms = S.terms
    n = len(terms)
    if sum(terms) % 2:
        return False
    if any(term < 0 or term > n - 1 for term in terms):
        return False
    prefix_sums = list(accumulate(terms))
    for k in range(1, n + 1):
        tail = sum(min(term, k) for term in terms[k:])
        if prefix_sums[k - 1] > k * (k - 1) + tail:
            return False
    return True


def realize(S: DegreeSequence):
    """
    Build one realization of S with the Havel–Hakimi construction: repeatedly take the vertex with the largest residual
    degree and join it to the vertices with the next-largest residual degrees. Ties go to the smaller label, so the
    output is deterministic and vertex i carries degree S[i].

    Args:
        S (DegreeSequence): A graphical sequence.

    Returns:
        SimpleGraph: A graph whose degree multiset equals S. Throws PotentNotGraphicalException if S isn't graphical.
    """

    # Imported here since the graph module depends on this one.
    from modules.main.graph.simple_graph import SimpleGraph

    if not is_graphical(S):
        raise PotentNotGraphicalException(f"Sequence ({S}) is not graphical.")

    graph = SimpleGraph(S.n)
    residual = list(S.terms)
    while S.n:
        order = sorted(range(S.n), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        targets = order[1:residual[v] + 1]
        for u in targets:
            graph.add_edge(v, u)
            residual[u] -= 1
        residual[v] = 0

    return graph


def _nonincreasing_sequences(length: int, max_term: int, min_sum: int) -> Iterator[tuple]:
    """
    Yield every nonincreasing tuple of `length` terms in 0..max_term whose sum is at least `min_sum`, in decreasing
    lexicographic order. Branches that can't reach `min_sum` are cut.
    """

    if length == 0:
        if min_sum <= 0:
            yield ()
        return
    for first in range(max_term, -1, -1):
        # The rest can add at most first * (length - 1).
        if first * length < min_sum:
            break
        for rest in _nonincreasing_sequences(length - 1, first, min_sum - first):
            yield (first,) + rest


def enumerate_graphical_sequences(n: int, min_sum: int = 0) -> Iterator[DegreeSequence]:
    """
    Yield every graphical sequence of length n with sum at least `min_sum`, each exactly once, in decreasing
    lexicographic order.

    Args:
        n (int): The number of terms. Must be at least 1.
        min_sum (int): The smallest sum to yield. Must be nonnegative.
    """

    if n < 1:
        raise PotentInputException(f"Sequence length must be at least 1, got `{n}`.")
    if min_sum < 0:
        raise PotentInputException(f"Minimum sum must be nonnegative, got `{min_sum}`.")

    for terms in _nonincreasing_sequences(length=n, max_term=n - 1, min_sum=min_sum):
        S = DegreeSequence(terms=terms)
        if is_graphical(S):
            yield S


def graphical_sequences_by_sum(n: int, min_sum: int = 0) -> list:
    """
    Group the graphical sequences of length n into sum levels.

    Returns:
        list: `(sum, [DegreeSequence, ...])` pairs, highest sum first. Sequences within a level keep the enumeration order.
    """

    levels = {}
    for S in enumerate_graphical_sequences(n=n, min_sum=min_sum):
        levels.setdefault(sigma_sum(S), []).append(S)
    return sorted(levels.items(), key=lambda level: -level[0])


def parse_sequence_line(line: str):
    """
    Parse one line of the sequence text format.

    Returns:
        DegreeSequence: The normalized sequence, or None for blank and comment-only lines. Throws PotentInputException if
            the line is malformed.
    """

    content = utilities.strip_comment(line)
    if not content:
        return None
    try:
        raw = utilities.split_integers(content)
    except ValueError as e:
        raise PotentInputException(str(e))
    return normalize(raw)


def read_sequences(text: str) -> list:
    """Parse every sequence in a block of sequence text, skipping blank lines and `#` comments."""

    sequences = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        try:
            S = parse_sequence_line(line)
        except PotentInputException as e:
            raise PotentInputException(f"Line {line_number}: {e}")
        if S is not None:
            sequences.append(S)
    return sequences
