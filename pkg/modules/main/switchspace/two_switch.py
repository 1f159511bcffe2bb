from __future__ import annotations
from dataclasses import dataclass
from typing import Iterator
from modules.main.graph.simple_graph import SimpleGraph


class PotentInvalidMoveException(Exception):
    """An exception that is thrown when a 2-switch is applied to a graph it isn't valid in."""
    pass


@dataclass(frozen=True)
class TwoSwitchMove:
    """
    A degree-preserving edge interchange: remove ab and cd, insert ac and bd.

    Attributes:
        a, b, c, d (int): Four distinct vertex labels. Valid in a graph iff ab and cd are edges and ac and bd aren't.
    """

    a: int
    b: int
    c: int
    d: int

    def removed(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))

    def inserted(self) -> tuple:
        return ((self.a, self.c), (self.b, self.d))

    def inverse(self) -> TwoSwitchMove:
        """The move that undoes this one: remove ac and bd, insert ab and cd."""
        return TwoSwitchMove(a=self.a, b=self.c, c=self.b, d=self.d)

    def is_valid_in(self, G: SimpleGraph) -> bool:
        a, b, c, d = self.a, self.b, self.c, self.d
        if len({a, b, c, d}) != 4:
            return False
        return G.has_edge(a, b) and G.has_edge(c, d) and not G.has_edge(a, c) and not G.has_edge(b, d)


def valid_two_switches(G: SimpleGraph) -> Iterator[TwoSwitchMove]:
    """
    Yield every valid 2-switch of G. For each pair of disjoint edges ab, cd (a < b, c < d, ab before cd in the sorted
    edge list) both pairings are tried: {ac, bd} first, then {ad, bc}.
    """

    edges = G.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c == a or c == b or d == a or d == b:
                continue
            if not G.has_edge(a, c) and not G.has_edge(b, d):
                yield TwoSwitchMove(a=a, b=b, c=c, d=d)
            if not G.has_edge(a, d) and not G.has_edge(b, c):
                yield TwoSwitchMove(a=a, b=b, c=d, d=c)


def switched_adjacencies(n: int, adjacency: tuple) -> Iterator[tuple]:
    """
    Yield the neighborhood bitmasks of every graph one valid 2-switch away, in `valid_two_switches` order. This is the
    walk's inner loop, so it works on raw bitmasks instead of SimpleGraph copies.
    """

    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adjacency[u] >> v & 1]
    for i, (a, b) in enumerate(edges):
        adjacency_a, adjacency_b = adjacency[a], adjacency[b]
        for c, d in edges[i + 1:]:
            if c == a or c == b or d == a or d == b:
                continue
            # Pairing {ac, bd}.
            if not (adjacency_a >> c & 1 or adjacency_b >> d & 1):
                switched = list(adjacency)
                switched[a] ^= (1 << b) | (1 << c)
                switched[b] ^= (1 << a) | (1 << d)
                switched[c] ^= (1 << d) | (1 << a)
                switched[d] ^= (1 << c) | (1 << b)
                yield tuple(switched)
            # Pairing {ad, bc}.
            if not (adjacency_a >> d & 1 or adjacency_b >> c & 1):
                switched = list(adjacency)
                switched[a] ^= (1 << b) | (1 << d)
                switched[b] ^= (1 << a) | (1 << c)
                switched[c] ^= (1 << d) | (1 << b)
                switched[d] ^= (1 << c) | (1 << a)
                yield tuple(switched)


def apply_two_switch(G: SimpleGraph, move: TwoSwitchMove) -> SimpleGraph:
    """
    Apply a 2-switch to a copy of G.

    Returns:
        SimpleGraph: The new graph, with the same degree multiset. Throws PotentInvalidMoveException if the move isn't
            valid in G.
    """

    if not move.is_valid_in(G):
        raise PotentInvalidMoveException(
            f"Move {move} needs edges {move.removed()} present and {move.inserted()} absent."
        )
    switched = G.copy()
    for u, v in move.removed():
        switched.remove_edge(u, v)
    for u, v in move.inserted():
        switched.add_edge(u, v)
    return switched
