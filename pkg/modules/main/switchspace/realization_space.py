from __future__ import annotations
import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Optional
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import DegreeSequence, realize
from modules.main.graph.patterns import PatternGraph, contains, pattern_fits_sequence
from modules.main.graph.simple_graph import SimpleGraph
from modules.main.switchspace.two_switch import switched_adjacencies


logger = logging.getLogger(__name__)


class PotentBudgetExceededException(Exception):
    """An exception that is thrown when a realization walk hits its state or move cap."""
    pass


@dataclass(frozen=True)
class SearchBudget:
    """
    Caps for a realization walk.

    Attributes:
        max_states (int): The most distinct labeled realizations to visit.
        max_moves (int): The most 2-switch applications.
    """

    max_states: int = C.DEFAULT_MAX_STATES
    max_moves: int = C.DEFAULT_MAX_MOVES

    def __post_init__(self):
        if self.max_states <= 0 or self.max_moves <= 0:
            raise ValueError(f"Search budget caps must be positive, got {self}.")


@dataclass(frozen=True)
class Decision:
    """
    The outcome of a potentially-H or forcibly-H decision.

    Attributes:
        outcome (str): C.YES, C.NO or C.UNKNOWN.
        witness (SimpleGraph): For potentially, a realization containing H on yes. For forcibly, a realization lacking H on
            no. None otherwise.
        states_visited (int): The realizations visited before deciding.
    """

    outcome: str
    witness: Optional[SimpleGraph] = None
    states_visited: int = 0


class RealizationWalk:
    """
    A breadth-first walk over the labeled realizations of a degree sequence, closed under 2-switches. The walk starts at
    a given graph (by default the Havel–Hakimi realization), explores moves in `valid_two_switches` order, and dedups by
    the canonical labeled key, so every realization connected to the start is yielded exactly once.

    Attributes:
        states_visited (int): Distinct realizations discovered so far.
        moves_applied (int): 2-switches applied so far.
    """

    def __init__(self, start: SimpleGraph, budget: SearchBudget):
        """
        Initializes a realization walk.

        Args:
            start (SimpleGraph): The first realization.
            budget (SearchBudget): The caps. Hitting one raises PotentBudgetExceededException from the iterator.
        """

        self.__start = start
        self.__budget = budget
        self.states_visited = 0
        self.moves_applied = 0


    def __iter__(self) -> Iterator[SimpleGraph]:
        budget = self.__budget
        n = self.__start.n
        start = tuple(self.__start.neighbor_mask(v) for v in range(n))
        seen = {start}
        queue = deque([start])
        self.states_visited = 1
        self.moves_applied = 0

        while queue:
            adjacency = queue.popleft()
            yield SimpleGraph(n, adjacency)
            for neighbor in switched_adjacencies(n, adjacency):
                self.moves_applied += 1
                if self.moves_applied > budget.max_moves:
                    raise PotentBudgetExceededException(f"Move cap of {budget.max_moves} reached.")
                if neighbor in seen:
                    continue
                self.states_visited += 1
                if self.states_visited > budget.max_states:
                    raise PotentBudgetExceededException(f"State cap of {budget.max_states} reached.")
                seen.add(neighbor)
                queue.append(neighbor)


def enumerate_realizations(S: DegreeSequence, budget: SearchBudget = SearchBudget()) -> Iterator[SimpleGraph]:
    """
    Yield every labeled realization of S (vertex i has degree S[i]) exactly once, starting from `realize(S)`.

    Throws PotentNotGraphicalException if S isn't graphical, and PotentBudgetExceededException (after yielding what it
    reached) if a cap is hit.
    """
    yield from RealizationWalk(start=realize(S), budget=budget)


def count_realizations(S: DegreeSequence, budget: SearchBudget = SearchBudget()) -> int:
    """Count the labeled realizations of S. Throws PotentBudgetExceededException if a cap is hit."""
    return sum(1 for _ in enumerate_realizations(S, budget))


def search_realizations(
    S: DegreeSequence,
    predicate: Callable[[SimpleGraph], bool],
    budget: SearchBudget,
    start: SimpleGraph = None
) -> Decision:
    """
    Walk the realizations of S until one satisfies `predicate`.

    Args:
        S (DegreeSequence): A graphical sequence.
        predicate (Callable): The test for each realization.
        budget (SearchBudget): The walk caps.
        start (SimpleGraph): Where to start the walk. Defaults to `realize(S)`.

    Returns:
        Decision: yes with the first matching realization, no after the whole space is exhausted, or unknown if a cap
            was hit first.
    """

    walk = RealizationWalk(start=start if start is not None else realize(S), budget=budget)
    try:
        for graph in walk:
            if predicate(graph):
                return Decision(outcome=C.YES, witness=graph, states_visited=walk.states_visited)
    except PotentBudgetExceededException as e:
        logger.warning(f"Realization walk for ({S}) stopped early: {e}")
        return Decision(outcome=C.UNKNOWN, states_visited=walk.states_visited)
    return Decision(outcome=C.NO, states_visited=walk.states_visited)


def is_potentially(S: DegreeSequence, H: PatternGraph, budget: SearchBudget = SearchBudget()) -> Decision:
    """
    Decide whether some realization of S contains H.

    Returns:
        Decision: yes with a realization containing H, no, or unknown if the budget ran out. Throws
            PotentNotGraphicalException if S isn't graphical.
    """

    if not pattern_fits_sequence(S, H):
        # Still validates S.
        realize(S)
        return Decision(outcome=C.NO)
    return search_realizations(S, lambda graph: contains(graph, H), budget)


def is_forcibly(S: DegreeSequence, H: PatternGraph, budget: SearchBudget = SearchBudget()) -> Decision:
    """
    Decide whether every realization of S contains H.

    Returns:
        Decision: yes after every realization was checked, no with a realization lacking H, or unknown if the budget ran
            out. Throws PotentNotGraphicalException if S isn't graphical.
    """

    if not pattern_fits_sequence(S, H):
        return Decision(outcome=C.NO, witness=realize(S))
    lacking = search_realizations(S, lambda graph: not contains(graph, H), budget)
    if lacking.outcome == C.YES:
        return Decision(outcome=C.NO, witness=lacking.witness, states_visited=lacking.states_visited)
    if lacking.outcome == C.NO:
        return Decision(outcome=C.YES, states_visited=lacking.states_visited)
    return lacking
