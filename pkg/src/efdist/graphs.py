"""Finite simple undirected graphs and their exact invariants.

Vertices are 0..n-1; the adjacency relation is stored as one bitmask per
vertex, which keeps the combinatorial search kernels (isomorphism,
enumeration, games) on fast integer operations.  All operations here are
pure: a :class:`Graph` is a frozen value and every function returns fresh
data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "ResourceLimitError",
    "GraphInvariants",
    "INFINITY",
    "parse_graph6",
    "format_graph6",
    "graph_from_json",
    "graph_to_json",
    "girth",
    "distances",
    "diameter",
    "vertex_connectivity",
    "canonical_form",
    "canonical_permutation",
    "is_isomorphic",
    "is_rigid",
    "automorphism_count",
    "enumerate_connected",
    "enumerate_graphs",
    "subdivide_edges",
    "graph_invariants",
    "CONNECTED_ENUMERATION_CEILING",
]

INFINITY = math.inf


class GraphError(ValueError):
    """Invalid graph data or parameters."""


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a documented ceiling."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; ``adj[u]`` is u's neighbour bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references vertices outside 0..n-1")
            if (row >> u) & 1:
                raise GraphError(f"loop at vertex {u}")
        for u, row in enumerate(self.adj):
            for v in _bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            grown = seen
            for u in _bits(frontier):
                grown |= self.adj[u]
            frontier = grown & ~seen
            seen = grown
        return seen == (1 << self.n) - 1

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    # -- structural rewrites ----------------------------------------------

    def relabeled(self, perm) -> "Graph":
        """Relabel with ``perm[old] = new``; perm must be a bijection."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm is not a permutation of 0..n-1")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            for v in _bits(row):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices``, relabeled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("duplicate vertices")
        rows = [0] * len(vertices)
        for v, i in index.items():
            for w in _bits(self.adj[v]):
                j = index.get(w)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vertices), tuple(rows))


# -- graph6 (short form, n <= 62) ------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 record.

    Header byte is n+63; body bytes carry the upper triangle in column-major
    order x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte (MSB first),
    each byte offset by 63 and the final byte zero-padded.
    """
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for off, ch in enumerate(text):
        code = ord(ch)
        if code > 127:
            raise Graph6Error(f"non-ASCII byte {code}", off)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} outside graph6 range 63..126", off)
    head = ord(text[0]) - 63
    if head == 63:
        raise Graph6Error("long-form header not supported", 0)
    n = head
    if n > 62:
        raise Graph6Error(f"vertex count {n} exceeds short form", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(text) - 1 < nbytes:
        raise Graph6Error("truncated body", len(text))
    if len(text) - 1 > nbytes:
        raise Graph6Error("trailing garbage after body", 1 + nbytes)
    rows = [0] * n
    pos = 0
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bidx in range(nbytes):
        group = ord(text[1 + bidx]) - 63
        for k in range(6):
            bit = (group >> (5 - k)) & 1
            if pos < nbits:
                if bit:
                    i, j = pairs[pos]
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise Graph6Error("nonzero padding bit", 1 + bidx)
            pos += 1
    return Graph(n, tuple(rows))


def format_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError(f"graph6 short form handles n <= 62, got n={g.n}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for j in range(1, g.n):
        for i in range(j):
            group = (group << 1) | ((g.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


# -- JSON edge-list format ---------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    """``{"n": n, "edges": [[u, v], ...]}`` with u < v, sorted."""
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges())]}


def graph_from_json(data: dict) -> Graph:
    try:
        n = data["n"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise GraphError("JSON graph needs 'n' and 'edges'") from exc
    if not isinstance(n, int):
        raise GraphError("'n' must be an integer")
    pairs = []
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"edge {e!r} is not a pair")
        u, v = e
        if not (0 <= u < v < n):
            raise GraphError(f"edge {e!r} violates 0 <= u < v < n")
        pairs.append((u, v))
    return Graph.from_edges(n, pairs)


# -- distances, girth, connectivity ------------------------------------------


def _bfs_dist(adj: tuple[int, ...], n: int, src: int) -> list:
    dist = [INFINITY] * n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    d = 0
    while frontier:
        d += 1
        grown = 0
        for u in _bits(frontier):
            grown |= adj[u]
        frontier = grown & ~seen
        seen |= grown
        for u in _bits(frontier):
            dist[u] = d
    return dist


def distances(g: Graph) -> list[list]:
    """All-pairs shortest-path table; ``math.inf`` across components."""
    return [_bfs_dist(g.adj, g.n, v) for v in range(g.n)]


def diameter(g: Graph):
    if g.n == 0:
        return 0
    return max(max(row) for row in distances(g))


def girth(g: Graph):
    """Length of a shortest cycle; ``math.inf`` for forests.

    Exact: the shortest cycle through an edge (u, v) is one more than the
    u-v distance with that edge removed; minimizing over edges covers all
    cycles.
    """
    best = INFINITY
    for u, v in g.edges():
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        d = _bfs_dist(tuple(adj), g.n, u)[v]
        if d + 1 < best:
            best = d + 1
            if best == 3:
                return 3
    return best


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    # Menger via unit-capacity max flow on the vertex-split digraph:
    # v_in = 2v, v_out = 2v+1; internal arcs v_in -> v_out carry capacity 1.
    cap: dict[tuple[int, int], int] = {}
    succ: dict[int, list[int]] = {}

    def arc(a, b, c):
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            succ.setdefault(a, []).append(b)
            succ.setdefault(b, []).append(a)
        cap[(a, b)] += c

    for v in range(g.n):
        if v != s and v != t:
            arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, g.n)
        arc(2 * v + 1, 2 * u, g.n)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in succ.get(a, ()):
                    if b not in parent and cap.get((a, b), 0) > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return flow
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Maximum k such that g is k-connected.

    Conventions: 0 for the empty graph, K1 and disconnected graphs;
    n-1 for complete graphs.
    """
    if g.n <= 1 or not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    return min(
        _local_vertex_connectivity(g, s, t)
        for s in range(g.n)
        for t in range(s + 1, g.n)
        if not g.has_edge(s, t)
    )


# -- canonical form -----------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into all cells.

    Deterministic and label-free: subcells are ordered by their count
    signatures, so the refinement commutes with relabeling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for i in range(len(order)):
        row = adj[order[i]]
        for j in range(i + 1, len(order)):
            code = (code << 1) | ((row >> order[j]) & 1)
    return code


class _CanonSearch:
    """Individualization-refinement search for the code-minimizing labeling.

    Explores the invariant search tree, keeping the least leaf code seen.
    Leaves that reproduce the current best code yield automorphisms, which
    prune sibling branches (orbit pruning restricted to generators fixing
    the individualized prefix pointwise, which is always sound).
    """

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_code: int | None = None
        self.best_order: list[int] | None = None
        self.generators: list[tuple[int, ...]] = []

    def run(self) -> tuple[int, list[int]]:
        if self.n == 0:
            return 0, []
        cells = _refine(self.adj, [list(range(self.n))])
        self._search(cells, [])
        assert self.best_order is not None
        return self.best_code, self.best_order

    def _search(self, cells: list[list[int]], fixed: list[int]) -> None:
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(self.adj, order)
            if self.best_code is None or code < self.best_code:
                self.best_code = code
                self.best_order = order
            elif code == self.best_code:
                perm = [0] * self.n
                for pos in range(self.n):
                    perm[self.best_order[pos]] = order[pos]
                self.generators.append(tuple(perm))
            return
        usable = [
            p for p in self.generators if all(p[v] == v for v in fixed)
        ]
        explored: set[int] = set()
        for v in cells[target]:
            if v in explored:
                continue
            orbit = {v}
            frontier = [v]
            while frontier:
                w = frontier.pop()
                for p in usable:
                    img = p[w]
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            explored |= orbit
            child = (
                cells[:target]
                + [[v], [w for w in cells[target] if w != v]]
                + cells[target + 1 :]
            )
            self._search(_refine(self.adj, child), fixed + [v])
            # new generators may have appeared; refresh the usable list
            usable = [
                p for p in self.generators if all(p[u] == u for u in fixed)
            ]


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Permutation (old -> new) producing the canonical labeling."""
    _, order = _CanonSearch(g).run()
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return tuple(perm)


def canonical_form(g: Graph) -> Graph:
    """Isomorphism-invariant representative: equal iff graphs isomorphic."""
    if g.n == 0:
        return g
    return g.relabeled(canonical_permutation(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)


def _automorphism_search(g: Graph, count_all: bool) -> int:
    """Number of automorphisms (or 2 meaning 'at least one non-trivial')."""
    n = g.n
    if n <= 1:
        return 1
    cells = _refine(g.adj, [list(range(n))])
    color = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            color[v] = i
    found = 0

    def extend(mapping: dict[int, int], used: int, v: int) -> bool:
        nonlocal found
        if v == n:
            found += 1
            if not count_all and any(mapping[u] != u for u in mapping):
                return True
            return False
        for w in range(n):
            if (used >> w) & 1 or color[w] != color[v]:
                continue
            if g.adj[w].bit_count() != g.adj[v].bit_count():
                continue
            ok = True
            for u, img in mapping.items():
                if g.has_edge(u, v) != g.has_edge(img, w):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if extend(mapping, used | (1 << w), v + 1):
                    return True
                del mapping[v]
        return False

    stopped = extend({}, 0, 0)
    if not count_all:
        return 2 if stopped else 1
    return found


def is_rigid(g: Graph) -> bool:
    """True iff the automorphism group is trivial."""
    return _automorphism_search(g, count_all=False) == 1


def automorphism_count(g: Graph) -> int:
    return _automorphism_search(g, count_all=True)


# -- enumeration --------------------------------------------------------------

CONNECTED_ENUMERATION_CEILING = 9


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return ()
    if n == 1:
        return (Graph.empty(1),)
    reps: dict[tuple[int, ...], Graph] = {}
    for parent in _connected_classes(n - 1):
        # every connected n-graph is a connected (n-1)-graph plus one vertex
        # joined to a nonempty subset (delete any non-cut vertex to see this)
        for mask in range(1, 1 << (n - 1)):
            rows = list(parent.adj) + [mask]
            for v in _bits(mask):
                rows[v] |= 1 << (n - 1)
            cand = canonical_form(Graph(n, tuple(rows)))
            reps.setdefault(cand.adj, cand)
    return tuple(reps[key] for key in sorted(reps))


def enumerate_connected(n: int, max_n: int = CONNECTED_ENUMERATION_CEILING):
    """Yield one canonical representative per connected n-vertex class."""
    if n > max_n:
        raise ResourceLimitError(
            f"connected enumeration ceiling is n <= {max_n}, requested {n}"
        )
    yield from _connected_classes(n)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    # multiset of connected components determines the class, so distinct
    # multisets need no deduplication
    if n == 0:
        return (Graph.empty(0),)
    out: list[Graph] = []

    def assemble(budget: int, max_size: int, chosen: list[Graph]):
        if budget == 0:
            rows: list[int] = []
            offset = 0
            for comp in chosen:
                rows.extend(row << offset for row in comp.adj)
                offset += comp.n
            out.append(Graph(offset, tuple(rows)))
            return
        for size in range(min(budget, max_size), 0, -1):
            comps = _connected_classes(size)
            for idx, comp in enumerate(comps):
                # components of equal size appear in non-increasing index
                # order to avoid permuted duplicates
                if chosen and chosen[-1].n == size:
                    last_idx = _connected_classes(size).index(chosen[-1])
                    if idx > last_idx:
                        continue
                assemble(budget - size, size, chosen + [comp])

    assemble(n, n, [])
    return tuple(out)


def enumerate_graphs(n: int, max_n: int = CONNECTED_ENUMERATION_CEILING):
    """Yield one representative per n-vertex class, disconnected included."""
    if n > max_n:
        raise ResourceLimitError(
            f"graph enumeration ceiling is n <= {max_n}, requested {n}"
        )
    yield from _all_classes(n)


# -- subdivision ---------------------------------------------------------------


def subdivide_edges(g: Graph, count: int) -> Graph:
    """Replace every edge by a path with ``count`` fresh internal vertices.

    Edge i (in sorted edge order) receives vertices
    n + i*count .. n + (i+1)*count - 1, in path order from the smaller
    endpoint.  count = 0 returns the graph unchanged.
    """
    if count < 0:
        raise GraphError("subdivision count must be nonnegative")
    if count == 0:
        return g
    edges = sorted(g.edges())
    n = g.n + count * len(edges)
    out = []
    for i, (u, v) in enumerate(edges):
        chain = [u] + [g.n + i * count + k for k in range(count)] + [v]
        out.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n, out)


# -- invariant bundle ----------------------------------------------------------


@dataclass(frozen=True)
class GraphInvariants:
    girth: object
    diameter: object
    connectivity: int
    max_degree: int
    connected: bool


def graph_invariants(g: Graph) -> GraphInvariants:
    return GraphInvariants(
        girth=girth(g),
        diameter=diameter(g),
        connectivity=vertex_connectivity(g),
        max_degree=g.max_degree(),
        connected=g.is_connected(),
    )
