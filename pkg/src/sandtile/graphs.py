"""Standard representative matrices from a graph and a spanning tree.

Vertices and edges are 1-based.  Each edge carries a bookkeeping
orientation ``tail -> head``.  Columns of D for non-tree edges are signed
fundamental circuits; rows of the dual matrix are signed fundamental
cocircuits.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .linalg import matmul, transpose
from .srm import StandardRepMatrix, dual_matrix

TREE_COUNT_BUDGET = 2_000_000


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple  # ((tail, head), ...)

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for i, (a, b) in enumerate(edges, 1):
            if a == b:
                raise GraphError(f"edge {i} is a self-loop")
            if not (1 <= a <= self.vertex_count and 1 <= b <= self.vertex_count):
                raise GraphError(f"edge {i} has an endpoint outside 1..{self.vertex_count}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def undirected(cls, vertex_count, pairs):
        """Orient every edge from the smaller to the larger vertex."""
        return cls(vertex_count, tuple((min(a, b), max(a, b)) for a, b in pairs))

    def is_connected(self):
        return len(_component(self, 1, range(1, len(self.edges) + 1))) == self.vertex_count


@dataclass(frozen=True)
class TreeData:
    tree_edges: tuple  # 1-based edge indices, increasing
    permutation: tuple  # tree edges first, then the rest; position -> original edge index


def _adjacency(G, edge_ids):
    adj = {v: [] for v in range(1, G.vertex_count + 1)}
    for e in edge_ids:
        a, b = G.edges[e - 1]
        adj[a].append((b, e))
        adj[b].append((a, e))
    return adj


def _component(G, start, edge_ids):
    adj = _adjacency(G, edge_ids)
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for u, _ in adj[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return seen


def _tree_data(G, tree):
    tree = tuple(sorted(tree))
    rest = tuple(e for e in range(1, len(G.edges) + 1) if e not in set(tree))
    return TreeData(tree, tree + rest)


def spanning_tree(G, tree=None):
    """BFS tree from vertex 1 taking edges in input order, or validate ``tree``."""
    if not G.is_connected():
        raise GraphError("graph is not connected")
    if tree is not None:
        tree = [int(e) for e in tree]
        if len(tree) != G.vertex_count - 1 or len(set(tree)) != len(tree):
            raise GraphError(f"a spanning tree needs {G.vertex_count - 1} distinct edges")
        if len(_component(G, 1, tree)) != G.vertex_count:
            raise GraphError("given edges do not form a spanning tree")
        return _tree_data(G, tree)
    adj = _adjacency(G, range(1, len(G.edges) + 1))
    for v in adj:
        adj[v].sort(key=lambda t: t[1])
    seen = {1}
    chosen = []
    todo = deque([1])
    while todo:
        v = todo.popleft()
        for u, e in adj[v]:
            if u not in seen:
                seen.add(u)
                chosen.append(e)
                todo.append(u)
    return _tree_data(G, chosen)


def _tree_path(G, T, src, dst):
    # list of (edge, +1 if walked tail->head else -1) along the tree from src to dst
    adj = _adjacency(G, T.tree_edges)
    prev = {src: None}
    todo = deque([src])
    while todo:
        v = todo.popleft()
        if v == dst:
            break
        for u, e in adj[v]:
            if u not in prev:
                prev[u] = (v, e)
                todo.append(u)
    path = []
    v = dst
    while prev[v] is not None:
        u, e = prev[v]
        path.append((e, 1 if G.edges[e - 1] == (u, v) else -1))
        v = u
    return path[::-1]


def fundamental_circuit(G, T, e):
    """Signed circuit in ``T + e``, oriented so that ``e`` has sign +1.

    Returns ``{edge: ±1}``.
    """
    if e in T.tree_edges:
        raise GraphError(f"edge {e} is in the tree")
    tail, head = G.edges[e - 1]
    out = {e: 1}
    # traverse e tail->head, then return from head to tail through the tree
    for f, s in _tree_path(G, T, head, tail):
        out[f] = s
    return out


def fundamental_cocircuit(G, T, e):
    """Signed cut separating the two sides of ``T - e``; ``e`` has sign +1.

    An edge gets +1 when it crosses in the same direction as ``e``.
    """
    if e not in T.tree_edges:
        raise GraphError(f"edge {e} is not in the tree")
    tail, _ = G.edges[e - 1]
    side = _component(G, tail, [f for f in T.tree_edges if f != e])
    out = {}
    for f, (a, b) in enumerate(G.edges, 1):
        if (a in side) != (b in side):
            out[f] = 1 if a in side else -1
    return out


def graph_to_srm(G, T=None):
    """Standard representative matrix with columns in ``T.permutation`` order.

    Returns ``(StandardRepMatrix, TreeData)``.
    """
    if T is None:
        T = spanning_tree(G)
    r = len(T.tree_edges)
    perm = T.permutation
    pos = {e: i for i, e in enumerate(perm)}
    M = [[0] * (len(perm) - r) for _ in range(r)]
    for j, e in enumerate(perm[r:]):
        for f, s in fundamental_circuit(G, T, e).items():
            if f != e:
                M[pos[f]][j] = s
    D = StandardRepMatrix(r, len(perm), tuple(map(tuple, M)))

    # rows of the dual matrix straight from the cocircuits
    Dh = [[0] * len(perm) for _ in range(len(perm) - r)]
    for i, t in enumerate(perm[:r]):
        for f, s in fundamental_cocircuit(G, T, t).items():
            if f != t:
                Dh[pos[f] - r][i] = s
        for j in range(len(perm) - r):
            Dh[j][r + j] = 1
    if Dh != dual_matrix(D) or (Dh and any(any(row) for row in matmul(D.D, transpose(Dh)))):
        raise AssertionError("cocircuit matrix is not the dual of the circuit matrix")
    return D, T


def count_spanning_trees(G, budget=TREE_COUNT_BUDGET):
    """Brute force over all (V-1)-edge subsets."""
    m, r = len(G.edges), G.vertex_count - 1
    if comb(m, r) > budget:
        raise ValueError(f"{comb(m, r)} edge subsets exceed the budget {budget}")
    count = 0
    for S in combinations(range(m), r):
        parent = list(range(G.vertex_count + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in S:
            a, b = find(G.edges[i][0]), find(G.edges[i][1])
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count


def tree_bases(G, T):
    """Spanning trees of G as bases, in the permuted column numbering."""
    pos = {e: i + 1 for i, e in enumerate(T.permutation)}
    out = []
    for S in combinations(range(1, len(G.edges) + 1), G.vertex_count - 1):
        if len(_component(G, 1, S)) == G.vertex_count:
            out.append(tuple(sorted(pos[e] for e in S)))
    return sorted(out)
