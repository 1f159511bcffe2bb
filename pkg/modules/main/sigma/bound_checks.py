from __future__ import annotations
import datetime as dt
import logging
from dataclasses import dataclass, field
from typing import Optional
import pandas as pd
import modules.main.util.constants as C
import modules.main.util.utilities as utilities
from modules.main.degseq.degree_sequence import (
    DegreeSequence,
    PotentInputException,
    count_at_least,
    enumerate_graphical_sequences,
    realize,
    sigma_sum,
)
from modules.main.graph.constructions import construct_join_empty, construct_join_k2
from modules.main.graph.patterns import PatternGraph, cycle, find_cycle, iter_cycle_vertex_sets
from modules.main.graph.simple_graph import CycleWitness, SimpleGraph
from modules.main.sigma.formulas import even_cycle_upper_bound, lemma4_upper_bound
from modules.main.sigma.sigma_oracle import SigmaRecord, sigma_oracle
from modules.main.switchspace.realization_space import (
    PotentBudgetExceededException,
    RealizationWalk,
    SearchBudget,
    is_potentially,
    search_realizations,
)


logger = logging.getLogger(__name__)


# Lower-bound constructions:

def _check_kind(kind: str) -> None:
    if kind not in (C.ODD, C.EVEN):
        raise PotentInputException(f"Construction kind must be `{C.ODD}` or `{C.EVEN}`, got `{kind}`.")


def extremal_graph(kind: str, m: int, n: int) -> SimpleGraph:
    """K_m + empty(n - m) for the odd cycle C_{2m+1}, K_m + (empty(n - m - 2) ∪ K_2) for the even cycle C_{2m+2}."""
    _check_kind(kind)
    return construct_join_empty(m, n) if kind == C.ODD else construct_join_k2(m, n)


def extremal_sequence(kind: str, m: int, n: int) -> DegreeSequence:
    return extremal_graph(kind, m, n).degree_sequence()


def extremal_target(kind: str, m: int) -> PatternGraph:
    _check_kind(kind)
    return cycle(2 * m + 1) if kind == C.ODD else cycle(2 * m + 2)


def extremal_threshold(kind: str, m: int, n: int) -> int:
    """The lower bound on sigma(target, n) the construction proves."""
    _check_kind(kind)
    return m * (2 * n - m - 1) + (2 if kind == C.ODD else 4)


@dataclass(frozen=True)
class LowerBoundReport:
    """
    The result of machine-checking a lower-bound construction.

    Attributes:
        kind (str): C.ODD or C.EVEN.
        m, n (int): The construction parameters.
        sequence (DegreeSequence): The construction's degree sequence S.
        target (PatternGraph): The cycle no realization of S may contain.
        threshold (int): The claimed lower bound on sigma(target, n).
        realization_count (int): Labeled realizations of S visited.
        containing_count (int): How many of them contain the target.
        exhausted (bool): False if the walk hit its budget.
    """

    kind: str
    m: int
    n: int
    sequence: DegreeSequence
    target: PatternGraph
    threshold: int
    realization_count: int
    containing_count: int
    exhausted: bool

    @property
    def sigma(self) -> int:
        return sigma_sum(self.sequence)

    @property
    def certified(self) -> bool:
        return self.exhausted and self.containing_count == 0 and self.sigma == self.threshold - 2

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "sequence": str(self.sequence),
            "target": self.target.name,
            "sigma": self.sigma,
            "threshold": self.threshold,
            "realizations": self.realization_count,
            "containing": self.containing_count,
            "certified": self.certified
        }


def verify_lower_bound(kind: str, m: int, n: int, budget: SearchBudget = SearchBudget()) -> LowerBoundReport:
    """
    Certify a lower-bound construction: build its graph, take the degree sequence S, and walk every realization of S
    checking that none contains the target cycle.

    Args:
        kind (str): C.ODD (target C_{2m+1}) or C.EVEN (target C_{2m+2}).
        m (int): The clique size. Must be at least 1.
        n (int): The number of vertices. Must be valid for the construction.
        budget (SearchBudget): The walk caps. Hitting one gives an uncertified report.

    Returns:
        LowerBoundReport: The counts and whether sigma(S) = threshold - 2 is certified.
    """

    S = extremal_sequence(kind, m, n)
    target = extremal_target(kind, m)
    walk = RealizationWalk(start=realize(S), budget=budget)
    containing = 0
    exhausted = True
    try:
        for graph in walk:
            if find_cycle(graph, target.size) is not None:
                containing += 1
    except PotentBudgetExceededException as e:
        logger.warning(f"Lower-bound check ({kind}, m={m}, n={n}) is uncertified: {e}")
        exhausted = False

    report = LowerBoundReport(
        kind=kind,
        m=m,
        n=n,
        sequence=S,
        target=target,
        threshold=extremal_threshold(kind, m, n),
        realization_count=walk.states_visited,
        containing_count=containing,
        exhausted=exhausted
    )
    logger.info(f"Lower-bound check ({kind}, m={m}, n={n}): {report.to_dict()}")
    return report


# Odd-cycle bound hypotheses:

@dataclass(frozen=True)
class HypothesisOutcome:
    """
    Whether a sequence meets both hypotheses of the odd-cycle degree-sum bound.

    Attributes:
        outcome (str): C.HOLDS, C.FAILS or C.UNKNOWN.
        reason (str): Which hypothesis failed or was cut off.
        graph (SimpleGraph): A realization with a qualifying C_{2m+1} when the hypotheses hold.
        cycle (CycleWitness): That cycle.
        bound (int): m(2n - m - 1) + 2.
    """

    outcome: str
    reason: str
    bound: int
    graph: Optional[SimpleGraph] = None
    cycle: Optional[CycleWitness] = None


def _qualifying_cycle(graph: SimpleGraph, m: int) -> Optional[CycleWitness]:
    """A C_{2m+1} whose outside vertices all have degree m and are pairwise non-adjacent."""

    full_mask = (1 << graph.n) - 1
    for mask, witness in iter_cycle_vertex_sets(graph, 2 * m + 1):
        outside = [v for v in range(graph.n) if not mask >> v & 1]
        if all(graph.degree(v) == m and not graph.neighbor_mask(v) & (full_mask ^ mask) for v in outside):
            return witness
    return None


def check_theorem2_hypotheses(S: DegreeSequence, m: int, budget: SearchBudget = SearchBudget()) -> HypothesisOutcome:
    """
    Decide the hypotheses of the bound sigma(S) <= m(2n - m - 1) + 2:
      (i) some realization has a C_{2m+1} whose outside vertices all have degree m and are pairwise non-adjacent, with
          at least one vertex outside the cycle;
      (ii) no realization contains C_{2m+2}.

    (i) is existential over (realization, cycle vertex set) pairs.

    Args:
        S (DegreeSequence): A graphical sequence.
        m (int): Must be at least 3.
        budget (SearchBudget): The caps for each realization walk.

    Returns:
        HypothesisOutcome: holds, fails (with the reason), or unknown if a walk hit its budget.
    """

    if m < 3:
        raise PotentInputException(f"The odd-cycle bound needs m >= 3, got `{m}`.")
    realize(S)
    k = 2 * m + 1
    n = S.n
    bound = m * (2 * n - m - 1) + 2

    if n - k < 1:
        return HypothesisOutcome(outcome=C.FAILS, reason=f"no vertex can lie off a C{k}", bound=bound)
    if S.terms.count(m) < n - k or count_at_least(S, 2) < k:
        return HypothesisOutcome(outcome=C.FAILS, reason="(i) degree counts rule it out", bound=bound)

    even = is_potentially(S, cycle(k + 1), budget)
    if even.outcome == C.YES:
        return HypothesisOutcome(outcome=C.FAILS, reason=f"(ii) a realization contains C{k + 1}", bound=bound)
    if even.outcome == C.UNKNOWN:
        return HypothesisOutcome(outcome=C.UNKNOWN, reason=f"(ii) search for C{k + 1} hit the budget", bound=bound)

    odd = search_realizations(S, lambda graph: _qualifying_cycle(graph, m) is not None, budget)
    if odd.outcome == C.NO:
        return HypothesisOutcome(outcome=C.FAILS, reason=f"(i) no realization has a qualifying C{k}", bound=bound)
    if odd.outcome == C.UNKNOWN:
        return HypothesisOutcome(outcome=C.UNKNOWN, reason=f"(i) search for C{k} hit the budget", bound=bound)
    return HypothesisOutcome(
        outcome=C.HOLDS,
        reason="both hypotheses hold",
        bound=bound,
        graph=odd.witness,
        cycle=_qualifying_cycle(odd.witness, m)
    )


@dataclass
class HypothesisSurvey:
    """
    The hypotheses checked over every graphical sequence of one length.

    Attributes:
        m, n (int): The parameters.
        bound (int): m(2n - m - 1) + 2.
        sequences_checked (int): Graphical sequences examined.
        in_scope (list): Sequences whose hypotheses hold.
        violations (list): In-scope sequences whose sum exceeds the bound.
        unknown (list): Sequences whose hypotheses couldn't be decided within the budget.
    """

    m: int
    n: int
    bound: int
    sequences_checked: int = 0
    in_scope: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    unknown: list = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return not self.in_scope

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "bound": self.bound,
            "sequences_checked": self.sequences_checked,
            "in_scope": len(self.in_scope),
            "violations": len(self.violations),
            "unknown": len(self.unknown),
            "vacuous": self.vacuous
        }


def survey_odd_cycle_hypotheses(m: int, n: int, budget: SearchBudget = SearchBudget()) -> HypothesisSurvey:
    """Run `check_theorem2_hypotheses` on every graphical sequence of length n and check the bound on those in scope."""

    t0 = dt.datetime.now()
    survey = HypothesisSurvey(m=m, n=n, bound=m * (2 * n - m - 1) + 2)
    for S in enumerate_graphical_sequences(n):
        survey.sequences_checked += 1
        result = check_theorem2_hypotheses(S, m, budget)
        if result.outcome == C.UNKNOWN:
            survey.unknown.append(S)
        elif result.outcome == C.HOLDS:
            survey.in_scope.append(S)
            if sigma_sum(S) > survey.bound:
                logger.error(f"({S}) meets both hypotheses but its sum exceeds {survey.bound}.")
                survey.violations.append(S)

    if survey.vacuous:
        logger.warning(f"No sequence of length {n} meets the hypotheses for m={m}; the bound holds vacuously.")
    logger.info(f"Hypothesis survey (m={m}, n={n}) completed in {utilities.get_seconds_since_datetime(t0)} seconds.")
    return survey


# Even-cycle upper bound:

@dataclass(frozen=True)
class EvenCycleBoundReport:
    """
    The oracle value sigma(C_{2m+2}, 3m + t) next to its upper bound.

    Attributes:
        m, t (int): The parameters. n = 3m + t.
        record (SigmaRecord): The oracle's answer.
        bound (int): The upper bound for this t.
        general_bound (int): The t-independent bound m(2n - m - 1) + 2m + 2. Never below `bound`.
    """

    m: int
    t: int
    record: SigmaRecord
    bound: int
    general_bound: int

    @property
    def n(self) -> int:
        return 3 * self.m + self.t

    @property
    def within_bound(self) -> bool:
        return self.record.sigma is not None and self.record.sigma <= self.bound

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "t": self.t,
            "n": self.n,
            "sigma": self.record.sigma,
            "bound": self.bound,
            "general_bound": self.general_bound,
            "within_bound": self.within_bound,
            "certified": self.record.certified
        }


def check_even_cycle_bound(m: int, t: int, budget: SearchBudget = SearchBudget(), jobs: int = 1) -> EvenCycleBoundReport:
    """Compare the oracle's sigma(C_{2m+2}, 3m + t) with `lemma4_upper_bound(m, t)`."""

    bound = lemma4_upper_bound(m, t)
    record = sigma_oracle(cycle(2 * m + 2), 3 * m + t, budget, jobs)
    general_bound = even_cycle_upper_bound(m, 3 * m + t).value
    report = EvenCycleBoundReport(m=m, t=t, record=record, bound=bound, general_bound=general_bound)
    if record.certified and not report.within_bound:
        logger.error(f"sigma(C{2 * m + 2}, {report.n}) = {record.sigma} exceeds the upper bound {bound}.")
    return report


def reports_frame(reports: list) -> pd.DataFrame:
    """One row per report or survey, from its `to_dict()`."""
    return pd.DataFrame([report.to_dict() for report in reports])
