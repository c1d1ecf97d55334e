"""Finite simple graphs and the generator families used with r-independence complexes.

Vertices are always the integers ``0..n-1``.  Human-facing names (``1..n`` for
paths and cycles, ``("a", d, q)`` for tree nodes, ``(i, j)`` for grid cells, ...)
live in ``Graph.labels`` so that constructions which depend on the classical
naming can look vertices up by label.
"""

from __future__ import annotations

from collections import deque
from itertools import permutations
from typing import Hashable, Iterable, Sequence

VertexSubset = tuple[int, ...]


class GraphError(ValueError):
    """Raised for invalid graph parameters or malformed graph input."""


class Graph:
    """Immutable simple undirected graph on ``0..n-1``.

    Adjacency is kept twice: sorted neighbour tuples for enumeration and an
    integer bitmask per vertex for constant-time membership tests.
    """

    __slots__ = ("_n", "_nbrs", "_masks", "_labels", "_index", "name")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[Hashable] | None = None,
        name: str = "",
    ):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._masks = tuple(masks)
        self._nbrs = tuple(tuple(_bits(m)) for m in masks)
        if labels is None:
            labels = tuple(range(n))
        labels = tuple(labels)
        if len(labels) != n:
            raise GraphError("labels must name every vertex exactly once")
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != n:
            raise GraphError("labels must be distinct")
        self._labels = labels
        self._index = index
        self.name = name

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    vertex_count = n

    @property
    def labels(self) -> tuple:
        return self._labels

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in self._nbrs[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self._nbrs) // 2

    def leaves(self) -> list[int]:
        return [v for v in range(self._n) if len(self._nbrs[v]) == 1]

    def label(self, v: int) -> Hashable:
        return self._labels[v]

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def relabel(self, labels: Sequence[Hashable], name: str | None = None) -> Graph:
        return Graph(self._n, self.edges(), labels, self.name if name is None else name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self._n, self._masks))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Graph{tag} n={self._n} m={self.edge_count}>"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> VertexSubset:
    return tuple(_bits(mask))


# -- generators ---------------------------------------------------------

def empty_graph(n: int = 0) -> Graph:
    return Graph(n, (), name=f"E{n}")


def path(n: int) -> Graph:
    """Path ``P_n`` with vertices labelled ``1..n`` in order."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], range(1, n + 1), name=f"P{n}")


def cycle(n: int) -> Graph:
    """Cycle ``C_n`` labelled ``1..n``; vertex 1 is adjacent to 2 and n."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, edges, range(1, n + 1), name=f"C{n}")


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)],
                 range(1, n + 1), name=f"K{n}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertex ``v_i^j`` is labelled ``(i, j)`` (1-based)."""
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise GraphError("parts must be a nonempty list of positive integers")
    labels = [(i + 1, j + 1) for i, p in enumerate(parts) for j in range(p)]
    block = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(labels)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]]
    return Graph(n, edges, labels, name="K" + ",".join(map(str, parts)))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}``: centre is vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=f"K1,{leaves}")


def whisker_all(g: Graph) -> Graph:
    """Fully whiskered graph: ``a_i`` (old vertex i) gets a pendant leaf ``b_i``.

    Vertices ``0..n-1`` are the ``a_i`` and ``n..2n-1`` the ``b_i``; labels are
    ``("a", i)`` and ``("b", i)`` with ``i`` 1-based.
    """
    return attach_leaves(g, [1] * g.n)


def attach_leaves(g: Graph, counts: Sequence[int]) -> Graph:
    """Attach ``counts[i]`` pendant leaves ``b_{i,1..}`` to vertex ``a_i``.

    The old vertices keep their indices (labels ``("a", i)``); new leaves are
    appended in vertex order, labelled ``("b", i, j)``.  When every count is one
    (the whiskered case) leaves are labelled ``("b", i)``.
    """
    counts = list(counts)
    if len(counts) != g.n:
        raise GraphError(f"expected {g.n} leaf counts, got {len(counts)}")
    if any(c < 0 for c in counts):
        raise GraphError("leaf counts must be nonnegative")
    whisker = all(c == 1 for c in counts)
    labels: list[Hashable] = [("a", i + 1) for i in range(g.n)]
    edges = list(g.edges())
    nxt = g.n
    for i, c in enumerate(counts):
        for j in range(c):
            labels.append(("b", i + 1) if whisker else ("b", i + 1, j + 1))
            edges.append((i, nxt))
            nxt += 1
    name = f"W({g.name})" if whisker else f"{g.name}^{tuple(counts)}"
    return Graph(nxt, edges, labels, name=name)


def perfect_mary_tree(m: int, h: int) -> Graph:
    """Perfect m-ary tree ``B_h^m``.

    Vertices are numbered in breadth-first order; node ``a_{d,q}`` (depth d,
    position q counted from the left, 1-based) is labelled ``("a", d, q)``.
    The children of ``a_{d,q}`` are ``a_{d+1, m(q-1)+1 .. mq}``.
    """
    if m < 2:
        raise GraphError("perfect_mary_tree needs m >= 2")
    if h < 0:
        raise GraphError("perfect_mary_tree needs h >= 0")
    labels = [("a", d, q) for d in range(h + 1) for q in range(1, m ** d + 1)]
    index = {lab: i for i, lab in enumerate(labels)}
    edges = []
    for d in range(h):
        for q in range(1, m ** d + 1):
            for c in range(m * (q - 1) + 1, m * q + 1):
                edges.append((index[("a", d, q)], index[("a", d + 1, c)]))
    name = f"B{h}" if m == 2 else f"B{h}^{m}"
    return Graph(len(labels), edges, labels, name=name)


def tree_order_key(label: tuple) -> tuple[int, int]:
    """Total order on tree labels: ``a_{p,q} < a_{p',q'}`` iff q < q', or q = q' and p < p'."""
    _, p, q = label
    return (q, p)


def depth_level(g: Graph, d: int) -> list[int]:
    """Indices of the depth-``d`` nodes of a tree built by :func:`perfect_mary_tree`."""
    return [v for v in g.vertices() if g.label(v)[1] == d]


def grid(m: int, n: int) -> Graph:
    """Rectangular grid ``G_{m,n}``; vertex ``(i, j)`` with ``i in [m]``, ``j in [n]``."""
    if m < 1 or n < 1:
        raise GraphError("grid needs m, n >= 1")
    labels = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    index = {lab: k for k, lab in enumerate(labels)}
    edges = []
    for i, j in labels:
        if j < n:
            edges.append((index[(i, j)], index[(i, j + 1)]))
        if i < m:
            edges.append((index[(i, j)], index[(i + 1, j)]))
    return Graph(m * n, edges, labels, name=f"G{m},{n}")


def generalized_mycielskian(g: Graph, s: int) -> Graph:
    """Generalized Mycielskian ``M_s(G)``.

    Levels ``0..s`` each hold a copy ``v_i^j`` of the vertex set; level 0 carries
    the edges of ``g``; ``v_i^j ~ v_k^{j+1}`` whenever ``ik`` is an edge of ``g``;
    an apex ``u`` is adjacent to all of level ``s``.  Labels are ``(i, j)`` with
    ``i`` the original vertex index, plus ``"u"``.
    """
    if s < 1:
        raise GraphError("generalized_mycielskian needs s >= 1")
    n = g.n
    labels: list[Hashable] = [(i, j) for j in range(s + 1) for i in range(n)]
    labels.append("u")

    def idx(i: int, j: int) -> int:
        return j * n + i

    edges = [(idx(i, 0), idx(k, 0)) for i, k in g.edges()]
    for j in range(s):
        for i, k in g.edges():
            edges.append((idx(i, j), idx(k, j + 1)))
            edges.append((idx(k, j), idx(i, j + 1)))
    apex = n * (s + 1)
    edges += [(idx(i, s), apex) for i in range(n)]
    return Graph(apex + 1, edges, labels, name=f"M{s}({g.name})")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted by ``g1.n``.

    Labels become ``(0, label)`` and ``(1, label)``.
    """
    off = g1.n
    edges = g1.edges() + [(u + off, v + off) for u, v in g2.edges()]
    labels = [(0, lab) for lab in g1.labels] + [(1, lab) for lab in g2.labels]
    return Graph(off + g2.n, edges, labels, name=f"{g1.name}+{g2.name}")


def disjoint_union_all(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union of several graphs; labels are ``(position, label)``."""
    edges, labels = [], []
    off = 0
    for pos, g in enumerate(graphs):
        edges += [(u + off, v + off) for u, v in g.edges()]
        labels += [(pos, lab) for lab in g.labels]
        off += g.n
    return Graph(off, edges, labels, name="+".join(g.name for g in graphs))


def _check_subset(g: Graph, s: Iterable[int]) -> VertexSubset:
    out = tuple(sorted(set(s)))
    for v in out:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for {g.n} vertices")
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[U]``; kept vertices are renumbered in increasing order and keep their labels."""
    keep = _check_subset(g, s)
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return Graph(len(keep), edges, [g.label(v) for v in keep], name=f"{g.name}[...]")


def remove_vertices(g: Graph, a: Iterable[int]) -> Graph:
    """``G - A``."""
    drop = set(_check_subset(g, a))
    return induced_subgraph(g, [v for v in g.vertices() if v not in drop])


def components_mask(g: Graph, mask: int) -> list[int]:
    """Connected components of ``G[mask]`` as bitmasks, ordered by minimum vertex."""
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nb = 0
            f = frontier
            while f:
                bit = f & -f
                nb |= g._masks[bit.bit_length() - 1]
                f ^= bit
            frontier = nb & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph, s: Iterable[int] | None = None) -> list[VertexSubset]:
    """Partition ``s`` (default: all vertices) into the components of ``G[s]``."""
    subset = g.vertices() if s is None else _check_subset(g, s)
    return [vertices_of(c) for c in components_mask(g, mask_of(subset))]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(components_mask(g, (1 << g.n) - 1)) == 1


def bfs_reachable(g: Graph, start: int, allowed: Iterable[int]) -> set[int]:
    allowed = set(allowed)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def are_isomorphic(g: Graph, h: Graph, limit: int = 10) -> bool:
    """Brute-force isomorphism test over all vertex permutations (small graphs only)."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.n > limit:
        raise GraphError(f"brute-force isomorphism limited to {limit} vertices")
    if sorted(map(g.degree, g.vertices())) != sorted(map(h.degree, h.vertices())):
        return False
    target = {frozenset(e) for e in h.edges()}
    ge = g.edges()
    for perm in permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in ge):
            return True
    return False


# -- text formats ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based); ``#`` starts a comment."""
    tokens: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            tokens.append(line)
    if not tokens:
        raise GraphError("empty edge list")
    header = tokens[0]
    if len(header) != 2:
        raise GraphError("header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
        edges = [(int(a), int(b)) for a, b in tokens[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges, name="file")


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _ints(arg: str) -> list[int]:
    return [int(x) for x in arg.split(",") if x]


def from_spec(spec: str) -> Graph:
    """Build a graph from the ``name:arg:arg`` mini-language.

    Recognised names: ``path:n``, ``cycle:n``, ``complete:n``, ``empty:n``,
    ``star:k``, ``grid:m:n``, ``mary:m:h``, ``multipartite:3,2``,
    ``whisker:<spec>``, ``leaves:<counts>:<spec>``, ``mycielskian:<spec>:s``
    and ``union:<spec>+<spec>``.  Short forms ``P6``, ``C4``, ``K3`` are
    accepted wherever a graph spec is expected.
    """
    spec = spec.strip()
    try:
        return _from_spec(spec)
    except (ValueError, IndexError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad graph spec {spec!r}: {exc}") from None


def _from_spec(spec: str) -> Graph:
    if spec.startswith("union:"):
        return disjoint_union_all([_from_spec(p) for p in spec[6:].split("+")])
    head, _, rest = spec.partition(":")
    if not rest and len(head) > 1 and head[0] in "PCKE" and head[1:].isdigit():
        return {"P": path, "C": cycle, "K": complete, "E": empty_graph}[head[0]](int(head[1:]))
    if head == "path":
        return path(int(rest))
    if head == "cycle":
        return cycle(int(rest))
    if head == "complete":
        return complete(int(rest))
    if head == "empty":
        return empty_graph(int(rest))
    if head == "star":
        return star(int(rest))
    if head == "grid":
        m, n = rest.split(":")
        return grid(int(m), int(n))
    if head in ("mary", "tree"):
        m, h = rest.split(":")
        return perfect_mary_tree(int(m), int(h))
    if head == "multipartite":
        return complete_multipartite(_ints(rest))
    if head == "whisker":
        return whisker_all(_from_spec(rest))
    if head == "leaves":
        counts, inner = rest.split(":", 1)
        return attach_leaves(_from_spec(inner), _ints(counts))
    if head == "mycielskian":
        inner, s = rest.rsplit(":", 1)
        return generalized_mycielskian(_from_spec(inner), int(s))
    raise GraphError(f"unknown graph generator {head!r}")
