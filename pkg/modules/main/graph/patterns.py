from __future__ import annotations
import re
from dataclasses import dataclass
from typing import Iterator
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import DegreeSequence, count_at_least
from modules.main.graph.simple_graph import CycleWitness, PotentGraphException, SimpleGraph


@dataclass(frozen=True)
class PatternGraph:
    """
    A small target subgraph H.

    Attributes:
        kind (str): One of C.CYCLE, C.CLIQUE or C.MATCHING.
        size (int): k for C_k (k >= 3) and K_k (k >= 1), p for pK_2 (p >= 1).
    """

    kind: str
    size: int

    def __post_init__(self):
        minimum = {C.CYCLE: 3, C.CLIQUE: 1, C.MATCHING: 1}
        if self.kind not in minimum:
            raise PotentGraphException(f"Pattern kind must be one of {C.PATTERN_KINDS}, got `{self.kind}`.")
        if not isinstance(self.size, int) or self.size < minimum[self.kind]:
            raise PotentGraphException(f"A {self.kind} pattern needs size >= {minimum[self.kind]}, got `{self.size}`.")

    @property
    def name(self) -> str:
        """The pattern text: `C7`, `K3` or `2K2`."""
        if self.kind == C.CYCLE:
            return f"C{self.size}"
        if self.kind == C.CLIQUE:
            return f"K{self.size}"
        return f"{self.size}K2"

    @property
    def vertex_count(self) -> int:
        """The number of vertices H spans."""
        return 2 * self.size if self.kind == C.MATCHING else self.size

    def __str__(self) -> str:
        return self.name


def cycle(k: int) -> PatternGraph:
    return PatternGraph(kind=C.CYCLE, size=k)


def clique(k: int) -> PatternGraph:
    return PatternGraph(kind=C.CLIQUE, size=k)


def matching(p: int) -> PatternGraph:
    return PatternGraph(kind=C.MATCHING, size=p)


def parse_pattern(text: str) -> PatternGraph:
    """Parse pattern text such as `C7`, `K3` or `2K2` (case-insensitive)."""

    cleaned = text.strip().upper()
    if match := re.fullmatch(r"C(\d+)", cleaned):
        return cycle(int(match.group(1)))
    if match := re.fullmatch(r"(\d+)K2", cleaned):
        return matching(int(match.group(1)))
    if match := re.fullmatch(r"K(\d+)", cleaned):
        return clique(int(match.group(1)))
    raise PotentGraphException(f"Unrecognized pattern `{text}`. Expected `C<k>`, `K<k>` or `<p>K2`.")


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycles_from(G: SimpleGraph, k: int, start: int) -> Iterator[list]:
    """
    Yield k-vertex cycle paths whose smallest vertex is `start`, by depth-first path extension. Only vertices above
    `start` are used, and a branch is cut when too few of them remain to finish the cycle.
    """

    allowed = 0
    for v in range(start + 1, G.n):
        if G.degree(v) >= 2:
            allowed |= 1 << v
    if allowed.bit_count() < k - 1:
        return
    start_mask = G.neighbor_mask(start)
    path = [start]

    def extend(last: int, available: int) -> Iterator[list]:
        remaining = k - len(path)
        if remaining == 1:
            # The last vertex must close the cycle back to start.
            for v in _bits(G.neighbor_mask(last) & available & start_mask):
                path.append(v)
                yield list(path)
                path.pop()
            return
        if available.bit_count() < remaining:
            return
        for v in _bits(G.neighbor_mask(last) & available):
            path.append(v)
            yield from extend(v, available & ~(1 << v))
            path.pop()

    yield from extend(start, allowed)


def find_cycle(G: SimpleGraph, k: int):
    """Find a cycle on exactly k distinct vertices. Returns a CycleWitness or None."""

    if k < 3 or k > G.n:
        return None
    for start in range(G.n - k + 1):
        if G.degree(start) < 2:
            continue
        for path in _cycles_from(G, k, start):
            return CycleWitness(vertices=tuple(path))
    return None


def iter_cycle_vertex_sets(G: SimpleGraph, k: int) -> Iterator[tuple]:
    """Yield `(vertex_set_mask, CycleWitness)` once for every distinct vertex set that spans a k-cycle in G."""

    if k < 3 or k > G.n:
        return
    seen = set()
    for start in range(G.n - k + 1):
        if G.degree(start) < 2:
            continue
        for path in _cycles_from(G, k, start):
            mask = sum(1 << v for v in path)
            if mask not in seen:
                seen.add(mask)
                yield mask, CycleWitness(vertices=tuple(path))


def find_clique(G: SimpleGraph, k: int):
    """
    Find k pairwise adjacent vertices with a pivoting Bron–Kerbosch search that stops at the first clique of size k.

    Returns:
        tuple: The k vertex labels ascending, or None.
    """

    if k > G.n:
        return None
    if k <= 1:
        return (0,) if k == 1 and G.n >= 1 else None

    candidates = 0
    for v in range(G.n):
        if G.degree(v) >= k - 1:
            candidates |= 1 << v

    def expand(clique: list, candidate_mask: int, excluded_mask: int):
        if len(clique) >= k:
            return tuple(sorted(clique[:k]))
        if len(clique) + candidate_mask.bit_count() < k:
            return None
        pool = candidate_mask | excluded_mask
        pivot = max(_bits(pool), key=lambda u: (G.neighbor_mask(u) & candidate_mask).bit_count())
        for v in _bits(candidate_mask & ~G.neighbor_mask(pivot)):
            found = expand(clique + [v], candidate_mask & G.neighbor_mask(v), excluded_mask & G.neighbor_mask(v))
            if found:
                return found
            candidate_mask &= ~(1 << v)
            excluded_mask |= 1 << v
        return None

    if not candidates:
        return None
    return expand([], candidates, 0)


def find_matching(G: SimpleGraph, p: int):
    """
    Find p pairwise disjoint edges. A greedy pass over the sorted edge list runs first; if it falls short an exhaustive
    search decides, branching on the smallest unmatched vertex (match it to a neighbor, or leave it out).

    Returns:
        tuple: p edges `(u, v)`, or None.
    """

    if 2 * p > G.n:
        return None

    used = 0
    greedy = []
    for u, v in G.edges():
        if not (used >> u & 1 or used >> v & 1):
            greedy.append((u, v))
            used |= (1 << u) | (1 << v)
            if len(greedy) == p:
                return tuple(greedy)

    def search(v: int, used_mask: int, chosen: list):
        if len(chosen) == p:
            return tuple(chosen)
        # Not enough vertices left to place the remaining edges.
        if 2 * (p - len(chosen)) > G.n - v:
            return None
        if used_mask >> v & 1:
            return search(v + 1, used_mask, chosen)
        for u in _bits(G.neighbor_mask(v) & ~used_mask & ~((1 << (v + 1)) - 1)):
            found = search(v + 1, used_mask | (1 << v) | (1 << u), chosen + [(v, u)])
            if found:
                return found
        return search(v + 1, used_mask, chosen)

    return search(0, 0, [])


def find_pattern(G: SimpleGraph, H: PatternGraph):
    """
    Find H as a (not necessarily induced) subgraph of G.

    Returns:
        A CycleWitness for cycles, a tuple of vertices for cliques, a tuple of edges for matchings, or None if G doesn't
            contain H.
    """

    if H.kind == C.CYCLE:
        return find_cycle(G, H.size)
    if H.kind == C.CLIQUE:
        return find_clique(G, H.size)
    return find_matching(G, H.size)


def contains(G: SimpleGraph, H: PatternGraph) -> bool:
    """True iff G has H as a subgraph."""
    return find_pattern(G, H) is not None


def pattern_fits_order(H: PatternGraph, n: int) -> bool:
    """True iff some n-vertex graph could contain H."""
    return H.vertex_count <= n


def pattern_fits_sequence(S: DegreeSequence, H: PatternGraph) -> bool:
    """
    A necessary condition for S to be potentially H-graphic: H's vertices need degree at least H's minimum degree, so S
    must have enough such terms. When this is False, no realization of S contains H.
    """

    if not pattern_fits_order(H, S.n):
        return False
    if H.kind == C.CYCLE:
        return count_at_least(S, 2) >= H.size
    if H.kind == C.CLIQUE:
        return count_at_least(S, H.size - 1) >= H.size
    return count_at_least(S, 1) >= 2 * H.size
