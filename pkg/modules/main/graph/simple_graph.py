from __future__ import annotations
from dataclasses import dataclass
import modules.main.util.constants as C
import modules.main.util.utilities as utilities
from modules.main.degseq.degree_sequence import DegreeSequence


class PotentGraphException(Exception):
    """An exception that is thrown when a graph, pattern or construction is used with invalid parameters."""
    pass


class SimpleGraph:
    """
    A labeled simple graph on vertices 0..n-1. Each vertex's neighborhood is a fixed-width bitmask (bit u set means an
    edge to u). Labels never change under edge mutation, and two graphs are equal iff their labeled edge sets are.

    Attributes:
        n (int): The vertex count, at most C.MAX_VERTICES.
    """

    __slots__ = ("n", "_adjacency")


    def __init__(self, n: int, adjacency: list = None):
        """
        Initializes an edgeless graph, or a graph with the given neighborhood bitmasks.

        Args:
            n (int): The vertex count.
            adjacency (list): Optional neighborhood bitmasks, one per vertex. Trusted to be symmetric and loop-free.
        """

        if not 0 <= n <= C.MAX_VERTICES:
            raise PotentGraphException(f"Vertex count must be in 0..{C.MAX_VERTICES}, got `{n}`.")
        self.n = n
        self._adjacency = list(adjacency) if adjacency is not None else [0] * n


    @classmethod
    def from_edges(cls, n: int, edges) -> SimpleGraph:
        """Build a graph on n vertices from `(u, v)` pairs."""
        graph = cls(n)
        for u, v in edges:
            graph.add_edge(u, v)
        return graph


    @classmethod
    def from_text(cls, text: str) -> SimpleGraph:
        """
        Parse the graph text format: first line `n`, then one `u v` edge per line with 0-based labels. Blank lines and `#`
        comments are ignored.
        """

        lines = [utilities.strip_comment(line) for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines:
            raise PotentGraphException("Graph text is empty. Expected the vertex count on the first line.")
        try:
            header = utilities.split_integers(lines[0])
            if len(header) != 1:
                raise ValueError(lines[0])
            graph = cls(header[0])
            for line in lines[1:]:
                pair = utilities.split_integers(line)
                if len(pair) != 2:
                    raise ValueError(line)
                graph.add_edge(pair[0], pair[1])
        except ValueError as e:
            raise PotentGraphException(f"Malformed graph text: {e}")
        return graph


    def to_text(self) -> str:
        """Write the graph text format."""
        return "\n".join([str(self.n)] + [f"{u} {v}" for u, v in self.edges()]) + "\n"


    def to_networkx(self):
        """Convert to a `networkx.Graph` with the same labels."""
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph


    def __check_vertex(self, v: int) -> None:
        """Throw a PotentGraphException if `v` isn't a vertex label."""
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise PotentGraphException(f"Vertex `{v}` is not in 0..{self.n - 1}.")


    def add_edge(self, u: int, v: int) -> None:
        """Insert the edge uv. Self-loops are rejected; inserting an existing edge is a no-op."""
        self.__check_vertex(u)
        self.__check_vertex(v)
        if u == v:
            raise PotentGraphException(f"Self-loop at vertex `{u}` is not allowed in a simple graph.")
        self._adjacency[u] |= 1 << v
        self._adjacency[v] |= 1 << u


    def remove_edge(self, u: int, v: int) -> None:
        """Delete the edge uv. Throws a PotentGraphException if it isn't present."""
        if not self.has_edge(u, v):
            raise PotentGraphException(f"Edge `{u} {v}` is not in the graph.")
        self._adjacency[u] &= ~(1 << v)
        self._adjacency[v] &= ~(1 << u)


    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self._adjacency[u] >> v & 1)


    def neighbor_mask(self, v: int) -> int:
        """The neighborhood bitmask of `v`."""
        return self._adjacency[v]


    def neighbors(self, v: int) -> list:
        """The neighbors of `v`, ascending."""
        mask = self._adjacency[v]
        return [u for u in range(self.n) if mask >> u & 1]


    def degree(self, v: int) -> int:
        return self._adjacency[v].bit_count()


    def degrees(self) -> list:
        """Vertex degrees by label."""
        return [mask.bit_count() for mask in self._adjacency]


    def edge_count(self) -> int:
        return sum(self.degrees()) // 2


    def edges(self) -> list:
        """The sorted labeled edge list, each edge as `(u, v)` with u < v."""
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self._adjacency[u] >> v & 1]


    def key(self) -> tuple:
        """A canonical labeled key: equal keys iff equal labeled edge sets."""
        return (self.n, *self._adjacency)


    def copy(self) -> SimpleGraph:
        return SimpleGraph(self.n, self._adjacency)


    def degree_sequence(self) -> DegreeSequence:
        """The nonincreasing multiset of vertex degrees."""
        return DegreeSequence(terms=tuple(sorted(self.degrees(), reverse=True)))


    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.key() == other.key()


    def __hash__(self) -> int:
        return hash(self.key())


    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class CycleWitness:
    """
    A cycle w_1 w_2 ... w_k w_1, stored as its vertex order. Public positions are 1-based and wrap around, so position
    k + i is position i.

    Attributes:
        vertices (tuple): The distinct vertex labels in cycle order.
    """

    vertices: tuple

    @property
    def k(self) -> int:
        return len(self.vertices)

    def at(self, position: int) -> int:
        """The vertex w_position, 1-based with wraparound."""
        return self.vertices[(position - 1) % len(self.vertices)]

    def position_of(self, v: int) -> int:
        """The 1-based position of `v` on the cycle."""
        return self.vertices.index(v) + 1

    def __contains__(self, v) -> bool:
        return v in self.vertices

    def edges(self) -> list:
        """The cycle edges as `(w_i, w_{i+1})` pairs, i = 1..k."""
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def is_valid_in(self, graph: SimpleGraph) -> bool:
        """True iff this is a cycle of at least 3 distinct vertices in `graph`."""
        if len(self.vertices) < 3 or len(set(self.vertices)) != len(self.vertices):
            return False
        return all(graph.has_edge(u, v) for u, v in self.edges())


def degree_sequence_of(G: SimpleGraph) -> DegreeSequence:
    """The nonincreasing multiset of vertex degrees of G."""
    return G.degree_sequence()
