"""Structural analysis of pattern graphs.

Subgraph containment (non-induced), pendant path and pendant star sizes,
the degree-peeled core, exact subgraph densities, and exact treewidth.
The two enumerative checkers at the bottom sweep every small connected
graph and report whether the structural inequalities they test have any
counterexample at that scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import sparkler, star
from .graphs import (
    Graph,
    GraphError,
    ResourceLimitError,
    _bits,
    enumerate_connected,
    format_graph6,
)
from .reports import FAIL, PASS, Report, stopwatch_ms

__all__ = [
    "PatternProfile",
    "subgraph_embedding",
    "contains_subgraph",
    "pendant_path",
    "pendant_star",
    "core",
    "max_density",
    "density_lower_bound",
    "treewidth",
    "pattern_profile",
    "check_large_degree_lemma",
    "check_stell",
    "MAX_DENSITY_CEILING",
    "TREEWIDTH_CEILING",
]

MAX_DENSITY_CEILING = 20
TREEWIDTH_CEILING = 16


# -- subgraph containment ------------------------------------------------------


def subgraph_embedding(g: Graph, f: Graph):
    """Injective map V(f) -> V(g) preserving edges, or None.

    Returned as a tuple m with m[v] = image of v.  Branches on pattern
    vertices in descending degree order; candidates are pruned by degree
    and by bitmask intersection over the already-embedded neighbourhood.
    """
    if f.n == 0:
        return ()
    if f.n > g.n or f.edge_count > g.edge_count:
        return None
    gdeg = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    order = sorted(range(f.n), key=lambda v: -f.degree(v))
    for k, v in enumerate(order):
        if f.degree(v) > gdeg[k]:
            return None
    image = [-1] * f.n
    full = (1 << g.n) - 1

    def place(step: int, used: int) -> bool:
        if step == f.n:
            return True
        v = order[step]
        cand = full & ~used
        for w in _bits(f.adj[v]):
            if image[w] >= 0:
                cand &= g.adj[image[w]]
        dv = f.degree(v)
        for x in _bits(cand):
            if g.adj[x].bit_count() < dv:
                continue
            image[v] = x
            if place(step + 1, used | (1 << x)):
                return True
            image[v] = -1
        return False

    if place(0, 0):
        return tuple(image)
    return None


def contains_subgraph(g: Graph, f: Graph) -> bool:
    return subgraph_embedding(g, f) is not None


# -- pendant structure ----------------------------------------------------------


def _require_connected(f: Graph, op: str) -> None:
    if not f.is_connected():
        raise GraphError(f"{op}: pattern graph must be connected")


def pendant_path(f: Graph) -> int:
    """Largest t such that f has a pendant path on t+1 vertices.

    A pendant path v0..vt has deg v0 != 2, deg vt = 1 and interior degrees
    2; walking inward from each pendant vertex until the degree leaves 2
    finds the maximal one through that vertex.  0 when f has no pendant
    vertex.
    """
    _require_connected(f, "pendant_path")
    best = 0
    for leaf in range(f.n):
        if f.degree(leaf) != 1:
            continue
        prev = leaf
        cur = f.adj[leaf].bit_length() - 1
        t = 1
        while f.degree(cur) == 2:
            nxt = next(w for w in _bits(f.adj[cur]) if w != prev)
            prev, cur = cur, nxt
            t += 1
        best = max(best, t)
    return best


def pendant_star(f: Graph) -> int:
    """Largest s such that f has a pendant star K_{1,s}: s counts the
    pendant vertices hanging off a common centre (all of them, so a pendant
    star is never inside a bigger one).  0 when f has no pendant vertex."""
    _require_connected(f, "pendant_star")
    best = 0
    for centre in range(f.n):
        s = sum(1 for w in _bits(f.adj[centre]) if f.degree(w) == 1)
        best = max(best, s)
    return best


def core(f: Graph) -> Graph:
    """Residue after repeatedly deleting vertices of degree at most 1.

    Empty exactly when f is a forest; survivors are relabeled in increasing
    original order.
    """
    alive = (1 << f.n) - 1
    while True:
        victims = 0
        for v in _bits(alive):
            if (f.adj[v] & alive).bit_count() <= 1:
                victims |= 1 << v
        if not victims:
            break
        alive &= ~victims
    return f.induced(list(_bits(alive)))


# -- densities -------------------------------------------------------------------


def max_density(f: Graph) -> Fraction:
    """Exact max over nonempty subgraphs K of e(K)/v(K).

    Maximizing over induced vertex subsets suffices: dropping edges at a
    fixed vertex set never raises the ratio.
    """
    if f.n == 0:
        raise GraphError("max_density: graph must be nonempty")
    if f.n > MAX_DENSITY_CEILING:
        raise ResourceLimitError(
            f"max_density ceiling is n <= {MAX_DENSITY_CEILING}, got {f.n}"
        )
    edge_in = [0] * (1 << f.n)
    best = Fraction(0)
    for s in range(1, 1 << f.n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        e = edge_in[rest] + (f.adj[v] & rest).bit_count()
        edge_in[s] = e
        if e:
            rho = Fraction(e, s.bit_count())
            if rho > best:
                best = rho
    return best


def density_lower_bound(f: Graph):
    """e(f)/v(f) + 2 as an exact rational, valid when e(f) > v(f).

    Returns None when the hypothesis e > v fails (no bound is claimed).
    """
    if f.n == 0 or f.edge_count <= f.n:
        return None
    return Fraction(f.edge_count, f.n) + 2


# -- exact treewidth --------------------------------------------------------------


def _is_clique(adj, mask: int) -> bool:
    for v in _bits(mask):
        if (adj[v] & mask) != mask & ~(1 << v):
            return False
    return True


def _eliminate(adj: list[int], v: int) -> None:
    nb = adj[v]
    for u in _bits(nb):
        adj[u] = (adj[u] | nb) & ~(1 << u)
        adj[u] &= ~(1 << v)
    adj[v] = 0


def _minfill_upper_bound(g: Graph) -> int:
    adj = list(g.adj)
    alive = (1 << g.n) - 1
    width = 0
    while alive:
        best_v, best_fill = -1, None
        for v in _bits(alive):
            nb = adj[v]
            fill = 0
            for u in _bits(nb):
                fill += (nb & ~adj[u] & ~(1 << u)).bit_count()
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        width = max(width, adj[best_v].bit_count())
        _eliminate(adj, best_v)
        alive &= ~(1 << best_v)
    return width


def _mmw_lower_bound(g: Graph) -> int:
    # minor-min-width: repeatedly contract a min-degree vertex into its
    # least-overlapping neighbour
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    best = 0
    while adj:
        v = min(adj, key=lambda u: (len(adj[u]), u))
        best = max(best, len(adj[v]))
        if adj[v]:
            w = min(adj[v], key=lambda u: (len(adj[u] & adj[v]), u))
            merged = (adj[v] | adj[w]) - {v, w}
            for u in adj[v]:
                adj[u].discard(v)
            for u in adj[w]:
                adj[u].discard(w)
            del adj[v]
            adj[w] = merged
            for u in merged:
                adj[u].add(w)
        else:
            del adj[v]
    return best


def treewidth(g: Graph, max_n: int = TREEWIDTH_CEILING) -> int:
    """Exact treewidth via memoized branch and bound over elimination orders.

    The graph remaining after eliminating a vertex set is independent of the
    elimination order, so subproblems memoize on the surviving vertex mask.
    Simplicial vertices are eliminated eagerly (always optimal), and branches
    whose elimination degree already reaches the running minimum are cut.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"treewidth ceiling is n <= {max_n}, got {g.n}")
    if g.n == 0:
        return 0
    ub = _minfill_upper_bound(g)
    if ub <= 1 or ub == _mmw_lower_bound(g):
        return ub
    memo: dict[int, int] = {}

    def solve(adj: tuple[int, ...], alive: int) -> int:
        if alive.bit_count() <= 1:
            return 0
        cached = memo.get(alive)
        if cached is not None:
            return cached
        if _is_clique(adj, alive):
            memo[alive] = alive.bit_count() - 1
            return memo[alive]
        work = list(adj)
        mask = alive
        forced = 0
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                nb = work[v]
                if _is_clique(work, nb):
                    forced = max(forced, nb.bit_count())
                    _eliminate(work, v)
                    mask &= ~(1 << v)
                    changed = True
        if mask != alive:
            value = max(forced, solve(tuple(work), mask))
            memo[alive] = value
            return value
        best = None
        order = sorted(_bits(alive), key=lambda v: adj[v].bit_count())
        for v in order:
            deg = adj[v].bit_count()
            if best is not None and deg >= best:
                continue
            child = list(adj)
            _eliminate(child, v)
            value = max(deg, solve(tuple(child), alive & ~(1 << v)))
            if best is None or value < best:
                best = value
        memo[alive] = best
        return best

    return solve(g.adj, (1 << g.n) - 1)


# -- profile ----------------------------------------------------------------------


@dataclass(frozen=True)
class PatternProfile:
    v: int
    e: int
    p: int
    s: int
    core_size: int
    rho: Fraction
    rho_star: Fraction
    treewidth: int


def pattern_profile(f: Graph) -> PatternProfile:
    _require_connected(f, "pattern_profile")
    if f.n == 0:
        raise GraphError("pattern_profile: graph must be nonempty")
    return PatternProfile(
        v=f.n,
        e=f.edge_count,
        p=pendant_path(f),
        s=pendant_star(f),
        core_size=core(f).n,
        rho=Fraction(f.edge_count, f.n),
        rho_star=max_density(f),
        treewidth=treewidth(f),
    )


# -- enumerative checkers -----------------------------------------------------------


def check_large_degree_lemma(nmax: int) -> Report:
    """Over all connected H with v(H) <= nmax that contain the 4-star but no
    sparkler S_{4,4}: does H always have a vertex of degree more than
    (v(H)/2)^(1/7)?  Lists counterexamples (there should be none)."""
    if nmax > 9:
        raise ResourceLimitError("check_large_degree_lemma: nmax must be <= 9")
    k14 = star(5)
    s44 = sparkler(4, 4)
    tested = 0
    skipped = 0
    counterexamples = []
    with stopwatch_ms() as timer:
        for n in range(1, nmax + 1):
            threshold = (n / 2) ** (1 / 7)
            for h in enumerate_connected(n):
                if not contains_subgraph(h, k14):
                    skipped += 1
                    continue
                if contains_subgraph(h, s44):
                    skipped += 1
                    continue
                tested += 1
                if not h.max_degree() > threshold:
                    counterexamples.append(format_graph6(h))
    report = Report(
        experiment="large-degree-lemma",
        claim=(
            "every connected H containing K_{1,4} but no S_{4,4} has a vertex "
            "of degree more than (v(H)/2)^(1/7), checked for v(H) <= nmax"
        ),
        inputs={"nmax": nmax},
        computed={
            "hosts_tested": tested,
            "hosts_skipped_by_hypothesis": skipped,
            "counterexamples": counterexamples,
        },
        verdict=PASS if not counterexamples else FAIL,
        runtime_ms=timer.elapsed,
    )
    return report


def check_stell(nmax: int) -> Report:
    """Over all connected F with 4 <= v(F) <= nmax that are neither a star
    nor a path: is pendant_path(F) + pendant_star(F) < v(F)?"""
    if nmax > 9:
        raise ResourceLimitError("check_stell: nmax must be <= 9")
    tested = 0
    skipped = 0
    counterexamples = []
    with stopwatch_ms() as timer:
        for n in range(4, nmax + 1):
            for f in enumerate_connected(n):
                if _is_star(f) or _is_path(f):
                    skipped += 1
                    continue
                tested += 1
                if pendant_path(f) + pendant_star(f) >= n:
                    counterexamples.append(format_graph6(f))
    return Report(
        experiment="pendant-inequality",
        claim=(
            "p(F) + s(F) < v(F) for every connected F on 4..nmax vertices "
            "that is neither a star nor a path"
        ),
        inputs={"nmax": nmax},
        computed={
            "patterns_tested": tested,
            "patterns_exempt": skipped,
            "counterexamples": counterexamples,
        },
        verdict=PASS if not counterexamples else FAIL,
        runtime_ms=timer.elapsed,
    )


def _is_path(f: Graph) -> bool:
    if f.n == 1:
        return True
    seq = f.degree_sequence()
    return f.is_connected() and seq.count(1) == 2 and all(d <= 2 for d in seq)


def _is_star(f: Graph) -> bool:
    if f.n <= 2:
        return True
    seq = f.degree_sequence()
    return f.is_connected() and seq[0] == f.n - 1 and all(d == 1 for d in seq[1:])
