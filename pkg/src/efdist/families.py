"""Deterministic generators for the named graph families and random models.

Vertex numbering is fixed per family (documented on each generator) so that
golden outputs are stable.  Random families draw from SplitMix64 (see
:mod:`efdist.rng`) and are reproducible bit-for-bit given the seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, distances, subdivide_edges
from .rng import SplitMix64

__all__ = [
    "ParameterError",
    "SamplingError",
    "FamilySpec",
    "build_family",
    "FAMILY_NAMES",
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "complete_multipartite",
    "lollipop",
    "sparkler",
    "jellyfish",
    "megastar",
    "uniform_tree",
    "hypercube",
    "gadget_a",
    "clique_gadget",
    "antipodal_product",
    "random_regular",
    "gnp",
    "CONFIGURATION_MODEL_BUDGET",
]


class ParameterError(GraphError):
    """Family parameters outside the generator's documented range."""


class SamplingError(RuntimeError):
    """A rejection sampler exhausted its attempt budget."""


CONFIGURATION_MODEL_BUDGET = 10**6


def complete(n: int) -> Graph:
    if n < 0:
        raise ParameterError("complete: n must be nonnegative")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> Graph:
    """P_n on vertices 0..n-1 in path order."""
    if n < 1:
        raise ParameterError("path: n must be at least 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle: n must be at least 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre 0, leaves 1..n-1."""
    if n < 1:
        raise ParameterError("star: n must be at least 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError("complete_bipartite: both parts must be nonempty")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(a: int, n: int) -> Graph:
    """K(a,n): a parts of n vertices each; part i is i*n..(i+1)*n-1."""
    if a < 1 or n < 1:
        raise ParameterError("complete_multipartite: a and n must be at least 1")
    edges = [
        (u, v)
        for u in range(a * n)
        for v in range(u + 1, a * n)
        if u // n != v // n
    ]
    return Graph.from_edges(a * n, edges)


def lollipop(a: int, b: int) -> Graph:
    """L_{a,b}: clique 0..a-1, path a..a+b-1 attached to clique vertex 0.

    L_{a,0} is K_a by convention.
    """
    if a < 3:
        raise ParameterError("lollipop: a must be at least 3")
    if b < 0:
        raise ParameterError("lollipop: b must be nonnegative")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    if b:
        edges.append((0, a))
        edges.extend((a + i, a + i + 1) for i in range(b - 1))
    return Graph.from_edges(a + b, edges)


def sparkler(a: int, b: int) -> Graph:
    """S_{a,b}: star centre 0, star leaves 1..a-1, path a..a+b-1 off the centre."""
    if a < 2:
        raise ParameterError("sparkler: a must be at least 2")
    if b < 0:
        raise ParameterError("sparkler: b must be nonnegative")
    edges = [(0, i) for i in range(1, a)]
    if b:
        edges.append((0, a))
        edges.extend((a + i, a + i + 1) for i in range(b - 1))
    return Graph.from_edges(a + b, edges)


def jellyfish(a: int, b: int) -> Graph:
    """J_{a,b}: clique 0..a-1 with b pendant vertices a..a+b-1 on vertex 0."""
    if a < 2:
        raise ParameterError("jellyfish: a must be at least 2")
    if b < 0:
        raise ParameterError("jellyfish: b must be nonnegative")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges.extend((0, a + i) for i in range(b))
    return Graph.from_edges(a + b, edges)


def megastar(s: int, t: int) -> Graph:
    """M_{s,t}: centre 0; spoke i occupies 1+i*t..(i+1)*t, centre first."""
    if s < 1 or t < 1:
        raise ParameterError("megastar: s and t must be at least 1")
    edges = []
    for i in range(s):
        chain = [0] + [1 + i * t + k for k in range(t)]
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(s * t + 1, edges)


def uniform_tree(k: int, r: int) -> Graph:
    """k-uniform tree of radius r: root 0 and all internal vertices have
    degree k, every leaf at distance exactly r from the root; BFS numbering."""
    if k < 2 or r < 1:
        raise ParameterError("uniform_tree: need k >= 2 and r >= 1")
    edges = []
    level = [0]
    nxt = 1
    for depth in range(r):
        new_level = []
        for v in level:
            children = k if depth == 0 else k - 1
            for _ in range(children):
                edges.append((v, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return Graph.from_edges(nxt, edges)


def hypercube(d: int) -> Graph:
    """(K_2)^d: vertices are d-bit strings, edges at Hamming distance 1."""
    if not 1 <= d <= 10:
        raise ParameterError("hypercube: d must be in 1..10")
    n = 1 << d
    edges = [
        (u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)
    ]
    return Graph.from_edges(n, edges)


def gadget_a(ell: int, b: Graph) -> Graph:
    """Uniform ell-tree of radius ell merged with the ell-subdivision of a
    connected cubic graph b, identifying the first tree leaf with the first
    subdivision vertex.

    Tree vertices keep their numbers; the subdivided graph occupies the next
    block, skipping the merged vertex.
    """
    if ell < 3:
        raise ParameterError("gadget_a: ell must be at least 3")
    if b.n == 0 or not b.is_connected():
        raise ParameterError("gadget_a: base graph must be connected")
    if any(b.degree(v) != 3 for v in range(b.n)):
        raise ParameterError("gadget_a: base graph must be cubic")
    tree = uniform_tree(ell, ell)
    leaf = next(v for v in range(tree.n) if tree.degree(v) == 1)
    sub = subdivide_edges(b, ell)
    merge_at = b.n  # first subdivision vertex
    remap = {}
    nxt = tree.n
    for v in range(sub.n):
        if v == merge_at:
            remap[v] = leaf
        else:
            remap[v] = nxt
            nxt += 1
    edges = tree.edges()
    edges.extend((remap[u], remap[v]) for u, v in sub.edges())
    return Graph.from_edges(nxt, edges)


def clique_gadget(ell0: int, a: Graph, center: int) -> Graph:
    """K_{ell0} with one disjoint copy of ``a`` per clique vertex, the copy's
    ``center`` identified with that clique vertex.

    Copy i occupies ell0 + i*(v(a)-1) .. ell0 + (i+1)*(v(a)-1) - 1, with the
    non-center vertices of ``a`` kept in increasing order.
    """
    if ell0 < 2:
        raise ParameterError("clique_gadget: ell0 must be at least 2")
    if not 0 <= center < a.n:
        raise ParameterError("clique_gadget: center outside the gadget graph")
    edges = [(i, j) for i in range(ell0) for j in range(i + 1, ell0)]
    others = [v for v in range(a.n) if v != center]
    block = a.n - 1
    for i in range(ell0):
        remap = {center: i}
        for pos, v in enumerate(others):
            remap[v] = ell0 + i * block + pos
        edges.extend((remap[u], remap[v]) for u, v in a.edges())
    return Graph.from_edges(ell0 + ell0 * block, edges)


def antipodal_product(b: Graph, a: Graph, anchor: int = 0, antipode: int | None = None) -> Graph:
    """Replace each edge of ``b`` by a fresh copy of ``a`` spanning the
    antipodal pair (anchor, antipode).

    Equivalent to subdividing each edge of b by two vertices and replacing
    the middle edge with a copy of a, identifying the subdivision vertices
    with anchor and antipode.  The copy for edge i (sorted edge order)
    occupies v(b) + i*v(a) .. v(b) + (i+1)*v(a) - 1 with a's numbering; the
    smaller endpoint of the edge joins the copy's anchor.

    Preconditions: a connected, and antipode is the unique vertex of a at
    maximum distance from anchor (checked; pass None to derive it).
    """
    if a.n == 0 or not a.is_connected():
        raise ParameterError("antipodal_product: gadget graph must be connected")
    if not 0 <= anchor < a.n:
        raise ParameterError("antipodal_product: anchor outside the gadget graph")
    dist = distances(a)[anchor]
    far = max(dist)
    extremes = [v for v in range(a.n) if dist[v] == far]
    if len(extremes) != 1:
        raise ParameterError(
            "antipodal_product: anchor has no unique farthest vertex"
        )
    if antipode is None:
        antipode = extremes[0]
    elif antipode != extremes[0]:
        raise ParameterError(
            f"antipodal_product: vertex {antipode} is not the unique farthest "
            f"vertex from {anchor} (that is {extremes[0]})"
        )
    edges = []
    for i, (u, v) in enumerate(sorted(b.edges())):
        base = b.n + i * a.n
        edges.extend((base + x, base + y) for x, y in a.edges())
        edges.append((u, base + anchor))
        edges.append((v, base + antipode))
    return Graph.from_edges(b.n + b.edge_count * a.n, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Random d-regular graph via the configuration model with rejection.

    Pairs up n*d stubs after a seeded shuffle; any loop or repeated edge
    rejects the whole pairing.  Gives up after CONFIGURATION_MODEL_BUDGET
    attempts.
    """
    if d < 0 or n < 0:
        raise ParameterError("random_regular: n and d must be nonnegative")
    if (n * d) % 2 != 0:
        raise ParameterError("random_regular: n*d must be even")
    if d >= n and not (n == 0 and d == 0):
        raise ParameterError("random_regular: need d < n")
    rng = SplitMix64(seed)
    for _ in range(CONFIGURATION_MODEL_BUDGET):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        rows = [0] * n
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (rows[u] >> v) & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if ok:
            return Graph(n, tuple(rows))
    raise SamplingError(
        f"random_regular: no simple pairing in {CONFIGURATION_MODEL_BUDGET} attempts"
    )


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pair (u, v) is examined in lexicographic order."""
    if n < 0:
        raise ParameterError("gnp: n must be nonnegative")
    if not 0.0 <= p <= 1.0:
        raise ParameterError("gnp: p must lie in [0, 1]")
    rng = SplitMix64(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def gnp_alpha(n: int, alpha: float, seed: int) -> Graph:
    """G(n, n^-alpha) convenience form."""
    if n < 1:
        raise ParameterError("gnp_alpha: n must be at least 1")
    return gnp(n, min(1.0, n ** (-alpha)), seed)


# -- FamilySpec ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """JSON-serializable recipe: ``{"family": ..., "params": ..., "seed": ...}``.

    Graph-valued parameters of compound families (subdivided, gadget_A,
    clique_gadget, antipodal_product) are nested FamilySpec objects.
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def to_json(self) -> dict:
        data = {"family": self.family, "params": dict(self.params)}
        if self.seed is not None:
            data["seed"] = self.seed
        return data

    @classmethod
    def from_json(cls, data: dict) -> "FamilySpec":
        if not isinstance(data, dict) or "family" not in data:
            raise ParameterError("family spec needs a 'family' field")
        return cls(
            family=data["family"],
            params=dict(data.get("params", {})),
            seed=data.get("seed"),
        )

    @classmethod
    def from_string(cls, text: str) -> "FamilySpec":
        try:
            return cls.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParameterError(f"family spec is not valid JSON: {exc}") from exc


def _sub_build(value) -> Graph:
    if isinstance(value, Graph):
        return value
    if isinstance(value, dict):
        return build_family(FamilySpec.from_json(value))
    if isinstance(value, FamilySpec):
        return build_family(value)
    raise ParameterError(f"expected a graph spec, got {value!r}")


def build_family(spec: FamilySpec) -> Graph:
    p = spec.params
    name = spec.family
    try:
        if name == "complete":
            return complete(p["n"])
        if name == "path":
            return path(p["n"])
        if name == "cycle":
            return cycle(p["n"])
        if name == "star":
            return star(p["n"])
        if name == "complete_bipartite":
            return complete_bipartite(p["a"], p["b"])
        if name == "complete_multipartite":
            return complete_multipartite(p["a"], p["n"])
        if name == "lollipop":
            return lollipop(p["a"], p["b"])
        if name == "sparkler":
            return sparkler(p["a"], p["b"])
        if name == "jellyfish":
            return jellyfish(p["a"], p["b"])
        if name == "megastar":
            return megastar(p["s"], p["t"])
        if name == "uniform_tree":
            return uniform_tree(p["k"], p["r"])
        if name == "hypercube":
            return hypercube(p["d"])
        if name == "subdivided":
            return subdivide_edges(_sub_build(p["base"]), p["count"])
        if name == "gadget_A":
            return gadget_a(p["ell"], _sub_build(p["base"]))
        if name == "clique_gadget":
            return clique_gadget(p["ell0"], _sub_build(p["gadget"]), p["center"])
        if name == "antipodal_product":
            return antipodal_product(
                _sub_build(p["base"]),
                _sub_build(p["gadget"]),
                p.get("anchor", 0),
                p.get("antipode"),
            )
        if name == "random_regular":
            if spec.seed is None:
                raise ParameterError("random_regular spec needs a seed")
            return random_regular(p["n"], p["d"], spec.seed)
        if name == "gnp":
            if spec.seed is None:
                raise ParameterError("gnp spec needs a seed")
            if "alpha" in p:
                return gnp_alpha(p["n"], p["alpha"], spec.seed)
            return gnp(p["n"], p["p"], spec.seed)
    except KeyError as exc:
        raise ParameterError(f"family {name!r} is missing parameter {exc}") from exc
    raise ParameterError(f"unknown family {name!r}")


FAMILY_NAMES = (
    "complete",
    "path",
    "cycle",
    "star",
    "complete_bipartite",
    "complete_multipartite",
    "lollipop",
    "sparkler",
    "jellyfish",
    "megastar",
    "uniform_tree",
    "hypercube",
    "subdivided",
    "gadget_A",
    "clique_gadget",
    "antipodal_product",
    "random_regular",
    "gnp",
)
