from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Optional
import modules.main.util.constants as C
from modules.main.graph.patterns import find_cycle
from modules.main.graph.simple_graph import CycleWitness, SimpleGraph
from modules.main.switchspace.realization_space import SearchBudget, search_realizations
from modules.main.switchspace.two_switch import TwoSwitchMove, apply_two_switch


logger = logging.getLogger(__name__)


class PotentHypothesisException(Exception):
    """An exception that is thrown when a cycle-extension precondition doesn't hold."""
    pass


class PotentContradictionException(Exception):
    """An exception that is thrown when the fallback search finds no longer cycle, which the degree hypotheses rule out."""

    def __init__(self, message: str, exhausted_space: bool):
        super().__init__(message)
        self.exhausted_space = exhausted_space


@dataclass(frozen=True)
class ExtensionResult:
    """
    A same-sequence graph together with its longer cycle.

    Attributes:
        graph (SimpleGraph): The graph containing the cycle. Same degree multiset as the input graph.
        cycle (CycleWitness): The k + 1 cycle.
        strategy (str): Which step produced it (C.ALREADY_PRESENT, C.LEMMA_A, ..., C.FALLBACK).
    """

    graph: SimpleGraph
    cycle: CycleWitness
    strategy: str


@dataclass(frozen=True)
class ExtensionContext:
    """
    The input to `extend_cycle`.

    Attributes:
        G (SimpleGraph): A realization containing the cycle.
        cycle (CycleWitness): A k-cycle of G, k >= 4.
        x (int): A vertex off the cycle with d(x) >= [k/2] + 1.
        w (int): A vertex on the cycle with d(w) >= 3.
    """

    G: SimpleGraph
    cycle: CycleWitness
    x: int
    w: int

    def validate(self) -> None:
        """Throw a PotentHypothesisException listing every violated hypothesis."""

        issues = []
        k = self.cycle.k
        if not self.cycle.is_valid_in(self.G):
            issues.append(f"{self.cycle.vertices} is not a cycle of the graph.")
        if k < 4:
            issues.append(f"Cycle length must be at least 4, got {k}.")
        if not 0 <= self.x < self.G.n or self.x in self.cycle:
            issues.append(f"x = {self.x} must be a vertex off the cycle.")
        elif self.G.degree(self.x) < k // 2 + 1:
            issues.append(f"d(x) = {self.G.degree(self.x)} is below [k/2] + 1 = {k // 2 + 1}.")
        if self.w not in self.cycle:
            issues.append(f"w = {self.w} must be a vertex on the cycle.")
        elif self.G.degree(self.w) < 3:
            issues.append(f"d(w) = {self.G.degree(self.w)} is below 3.")
        if issues:
            raise PotentHypothesisException("Extension hypotheses violated:\n\t" + "\n\t".join(issues))


def _check_off_cycle(cycle: CycleWitness, *vertices) -> None:
    for v in vertices:
        if v in cycle:
            raise PotentHypothesisException(f"Vertex {v} must be off the cycle {cycle.vertices}.")


def _insert_after(cycle: CycleWitness, r: int, *inserted) -> CycleWitness:
    """The cycle w_1 ... w_r (inserted) w_{r+1} ... w_k."""
    index = (r - 1) % cycle.k + 1
    return CycleWitness(vertices=cycle.vertices[:index] + inserted + cycle.vertices[index:])


def _route_around(cycle: CycleWitness, r: int, *path) -> CycleWitness:
    """The cycle w_{r+2} ... w_k w_1 ... w_r (path), which skips w_{r+1}."""
    return CycleWitness(vertices=tuple(cycle.at(r + 2 + j) for j in range(cycle.k - 1)) + path)


def _outside(G: SimpleGraph, cycle: CycleWitness) -> list:
    return [v for v in range(G.n) if v not in cycle]


def lemma_a_insert(G: SimpleGraph, cycle: CycleWitness, x: int) -> Optional[ExtensionResult]:
    """
    If x is adjacent to two consecutive cycle vertices w_r, w_{r+1}, G already contains the k + 1 cycle
    w_1 ... w_r x w_{r+1} ... w_k. No edges change.

    Returns:
        ExtensionResult: G itself with the longer cycle, or None.
    """

    _check_off_cycle(cycle, x)
    for r in range(1, cycle.k + 1):
        if G.has_edge(cycle.at(r), x) and G.has_edge(cycle.at(r + 1), x):
            return ExtensionResult(graph=G, cycle=_insert_after(cycle, r, x), strategy=C.LEMMA_A)
    return None


def lemma_b_swap(G: SimpleGraph, cycle: CycleWitness, x: int, y: int, r: int) -> ExtensionResult:
    """
    For x, y off the cycle with xy, w_r x present and w_r y absent: if w_{r+1} x is present x inserts directly; otherwise
    the interchange removing w_r w_{r+1} and xy and inserting w_{r+1} x and w_r y gives the cycle
    w_1 ... w_r x w_{r+1} ... w_k.

    Args:
        r (int): The 1-based cycle position, taken modulo k.

    Returns:
        ExtensionResult: The (possibly interchanged) graph with the k + 1 cycle. Throws PotentHypothesisException if the
            preconditions fail.
    """

    _check_off_cycle(cycle, x, y)
    w_r, w_next = cycle.at(r), cycle.at(r + 1)
    if x == y or not G.has_edge(x, y):
        raise PotentHypothesisException(f"A swap needs the edge {x} {y}.")
    if not G.has_edge(w_r, x):
        raise PotentHypothesisException(f"A swap needs the edge w_{r} x = {w_r} {x}.")
    if G.has_edge(w_r, y):
        raise PotentHypothesisException(f"A swap needs w_{r} y = {w_r} {y} to be absent.")

    if G.has_edge(w_next, x):
        return ExtensionResult(graph=G, cycle=_insert_after(cycle, r, x), strategy=C.LEMMA_A)

    move = TwoSwitchMove(a=w_r, b=w_next, c=y, d=x)
    return ExtensionResult(graph=apply_two_switch(G, move), cycle=_insert_after(cycle, r, x), strategy=C.LEMMA_B)


def lemma_c_route(G: SimpleGraph, cycle: CycleWitness, x: int, y: int, r: int) -> ExtensionResult:
    """
    For x, y off the cycle with xy, w_r x and w_{r+2} x present: if w_{r+2} y is present, G contains
    w_1 ... w_r x y w_{r+2} ... w_k; otherwise `lemma_b_swap` applies at position r + 2.

    Returns:
        ExtensionResult: The graph with the k + 1 cycle. Throws PotentHypothesisException if the preconditions fail.
    """

    _check_off_cycle(cycle, x, y)
    if x == y or not G.has_edge(x, y):
        raise PotentHypothesisException(f"A detour needs the edge {x} {y}.")
    if not (G.has_edge(cycle.at(r), x) and G.has_edge(cycle.at(r + 2), x)):
        raise PotentHypothesisException(
            f"A detour needs x = {x} adjacent to both w_{r} = {cycle.at(r)} and w_{r + 2} = {cycle.at(r + 2)}."
        )

    if G.has_edge(cycle.at(r + 2), y):
        return ExtensionResult(graph=G, cycle=_route_around(cycle, r, x, y), strategy=C.LEMMA_C)
    return lemma_b_swap(G, cycle, x, y, r + 2)


def _is_extension(result: ExtensionResult, G: SimpleGraph, k: int) -> bool:
    """True iff the result holds a genuine k + 1 cycle in a same-sequence graph."""
    return result.cycle.k == k + 1 \
        and result.cycle.is_valid_in(result.graph) \
        and result.graph.degree_sequence() == G.degree_sequence()


def _scan_lemmas(G: SimpleGraph, cycle: CycleWitness) -> Optional[ExtensionResult]:
    """Try direct insertion of every off-cycle vertex, then detours and swaps along every off-cycle edge."""

    k = cycle.k
    outside = _outside(G, cycle)

    for v in outside:
        result = lemma_a_insert(G, cycle, v)
        if result and _is_extension(result, G, k):
            return result

    for v in outside:
        for y in G.neighbors(v):
            if y in cycle:
                continue
            for r in range(1, k + 1):
                if G.has_edge(cycle.at(r), v) and G.has_edge(cycle.at(r + 2), v):
                    result = lemma_c_route(G, cycle, v, y, r)
                    if _is_extension(result, G, k):
                        return result

    for v in outside:
        for y in G.neighbors(v):
            if y in cycle:
                continue
            for r in range(1, k + 1):
                if G.has_edge(cycle.at(r), v) and not G.has_edge(cycle.at(r), y):
                    result = lemma_b_swap(G, cycle, v, y, r)
                    if _is_extension(result, G, k):
                        return result

    return None


def _interchange_at_neighbor(G: SimpleGraph, cycle: CycleWitness, x: int) -> Optional[ExtensionResult]:
    """
    x is adjacent to some w_i, and x_1, x_2 are off-cycle neighbors of x with w_i x_1 present and w_{i+2} x, w_{i+1} x_2
    absent. The interchange removing w_{i+1} w_{i+2} and x x_2 and inserting w_{i+2} x and w_{i+1} x_2 gives the cycle
    w_1 ... w_i x_1 x w_{i+2} ... w_k.
    """

    k = cycle.k
    off_cycle_neighbors = [v for v in G.neighbors(x) if v not in cycle]
    for i in range(1, k + 1):
        if not G.has_edge(cycle.at(i), x):
            continue
        for x_2 in off_cycle_neighbors:
            for x_1 in off_cycle_neighbors:
                if x_1 == x_2:
                    continue
                if not G.has_edge(cycle.at(i), x_1) or G.has_edge(cycle.at(i + 2), x) or G.has_edge(cycle.at(i + 1), x_2):
                    continue
                move = TwoSwitchMove(a=cycle.at(i + 1), b=cycle.at(i + 2), c=x_2, d=x)
                result = ExtensionResult(
                    graph=apply_two_switch(G, move),
                    cycle=_route_around(cycle, i, x_1, x),
                    strategy=C.INTERCHANGE
                )
                if _is_extension(result, G, k):
                    return result
    return None


def _guided_extension(G: SimpleGraph, cycle: CycleWitness, x: int, w: int, allow_double: bool) -> Optional[ExtensionResult]:
    """Run the scans, then the interchange at a cycle neighbor of x, then (once) the interchange that gives x a cycle neighbor."""

    result = _scan_lemmas(G, cycle)
    if result:
        return result

    if any(G.has_edge(v, x) for v in cycle.vertices):
        return _interchange_at_neighbor(G, cycle, x)

    if not allow_double:
        return None

    # x has no cycle neighbors. Move an edge of w that isn't a cycle edge onto x.
    cycle_neighbors_of_w = {cycle.at(cycle.position_of(w) - 1), cycle.at(cycle.position_of(w) + 1)}
    for x_3 in G.neighbors(x):
        if x_3 in cycle:
            continue
        for x_4 in G.neighbors(w):
            if x_4 in cycle_neighbors_of_w or x_4 in (x, x_3) or G.has_edge(x_3, x_4):
                continue
            moved = apply_two_switch(G, TwoSwitchMove(a=w, b=x_4, c=x, d=x_3))
            result = _guided_extension(moved, cycle, x, w, allow_double=False)
            if result:
                return ExtensionResult(graph=result.graph, cycle=result.cycle, strategy=C.DOUBLE_INTERCHANGE)
    return None


def extend_cycle(ctx: ExtensionContext, budget: SearchBudget = SearchBudget()) -> ExtensionResult:
    """
    Given a realization with a k-cycle and the degree hypotheses (d(x) >= [k/2] + 1 off the cycle, d(w) >= 3 on it), produce a realization of the same sequence
    containing a (k + 1)-cycle.

    Steps: the fast path (the graph already has one), the insertion, detour and swap scans, the neighbor
    interchange, the double interchange, and finally a 2-switch walk from G that stops at the first graph with a
    (k + 1)-cycle.

    Args:
        ctx (ExtensionContext): The graph, cycle and the two hypothesis vertices.
        budget (SearchBudget): Caps for the fallback walk.

    Returns:
        ExtensionResult: The extended graph and its cycle. Throws PotentHypothesisException if the hypotheses fail, and
            PotentContradictionException if the fallback finishes without a longer cycle.
    """

    ctx.validate()
    G, cycle, k = ctx.G, ctx.cycle, ctx.cycle.k

    existing = find_cycle(G, k + 1)
    if existing:
        return ExtensionResult(graph=G, cycle=existing, strategy=C.ALREADY_PRESENT)

    result = _guided_extension(G, cycle, ctx.x, ctx.w, allow_double=True)
    if result:
        logger.debug(f"Extended C{k} to C{k + 1} via {result.strategy}.")
        return result

    logger.warning(f"Guided moves didn't extend C{k} in {G}; falling back to a realization walk.")
    decision = search_realizations(
        S=G.degree_sequence(),
        predicate=lambda graph: find_cycle(graph, k + 1) is not None,
        budget=budget,
        start=G
    )
    if decision.outcome == C.YES:
        return ExtensionResult(graph=decision.witness, cycle=find_cycle(decision.witness, k + 1), strategy=C.FALLBACK)

    exhausted = decision.outcome == C.NO
    message = (
        f"No realization reachable from {G} contains C{k + 1} although the degree hypotheses hold."
        if exhausted else
        f"Fallback walk hit its budget after {decision.states_visited} states without finding C{k + 1}."
    )
    logger.error(message)
    raise PotentContradictionException(message, exhausted_space=exhausted)


def find_extension_context(G: SimpleGraph, cycle: CycleWitness) -> Optional[ExtensionContext]:
    """Pick the smallest x off the cycle and the first w on it that meet the degree hypotheses."""

    k = cycle.k
    for x in _outside(G, cycle):
        if G.degree(x) < k // 2 + 1:
            continue
        for w in cycle.vertices:
            if G.degree(w) >= 3:
                return ExtensionContext(G=G, cycle=cycle, x=x, w=w)
    return None
