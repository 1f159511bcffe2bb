from modules.main.graph.simple_graph import PotentGraphException, SimpleGraph


def construct_join_empty(m: int, n: int) -> SimpleGraph:
    """
    Build K_m + complement(K_{n-m}): a clique on vertices 0..m-1, each clique vertex joined to all n - m remaining
    vertices, and no edges among the remainder. Its degree sequence is (n - 1 repeated m times, m repeated n - m times)
    and its degree sum is m(2n - m - 1).

    Throws a PotentGraphException unless 1 <= m < n.
    """

    if not 1 <= m < n:
        raise PotentGraphException(f"K_m + empty(n - m) needs 1 <= m < n, got m={m}, n={n}.")

    graph = SimpleGraph(n)
    for u in range(m):
        for v in range(u + 1, n):
            graph.add_edge(u, v)
    return graph


def construct_join_k2(m: int, n: int) -> SimpleGraph:
    """
    Build K_m + (complement(K_{n-m-2}) ∪ K_2): construct_join_empty(m, n) plus the edge between vertices m and m + 1.
    Its degree sum is m(2n - m - 1) + 2.

    Throws a PotentGraphException unless 1 <= m and m + 2 <= n.
    """

    if not (1 <= m and m + 2 <= n):
        raise PotentGraphException(f"K_m + (empty(n - m - 2) ∪ K_2) needs 1 <= m and m + 2 <= n, got m={m}, n={n}.")

    graph = construct_join_empty(m, n)
    graph.add_edge(m, m + 1)
    return graph
