"""Exact solver for Ehrenfeucht-Fraisse pebble games on graph pairs.

The board pairs a vertex of G with a vertex of H; a position is a set of
such pairs, canonically stored as a sorted tuple.  A position is a partial
isomorphism when both projections are injective and adjacency matches on
every pair of pairs; the engine precomputes the pairwise compatibility
relation as bitmasks, so "all partial-isomorphism extensions of P by a
pebble on x" is one AND per pebble plus one AND with x's row mask.

Two solvers cover the spec'd games:

* the fresh-pebble back-and-forth recursion Eq_d (used whenever the pebble
  budget covers the remaining rounds, where relocation provably never helps
  Spoiler), memoized on (sorted position, d);
* a relocation-aware bounded minimax for the general r-round k-pebble game;
* an iterated-deletion greatest fixpoint for the unbounded k-pebble game,
  with a worklist that records the order positions die (the death index is
  a progress measure for Spoiler's unbounded strategy).

``distinguishing_depth`` and ``distinguishing_width`` are the minimum d
with Spoiler winning the d-round d-pebble game, and the minimum k with
Spoiler winning the k-pebble game in some number of rounds.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, ResourceLimitError, _bits, is_isomorphic
from .logic import And, Eq, Exists, Forall, Formula, Not, Or, Adj

__all__ = [
    "GameVerdict",
    "GameStep",
    "Position",
    "spoiler_wins",
    "distinguishing_depth",
    "duplicator_fixpoint",
    "distinguishing_width",
    "extract_sentence",
    "game_step",
    "PebbleGameTable",
    "DEPTH_PAIR_CEILING",
    "DEPTH_CEILING",
    "FIXPOINT_POSITION_CEILING",
]

Position = tuple[tuple[int, int], ...]

DEPTH_PAIR_CEILING = 400
DEPTH_CEILING = 7
FIXPOINT_POSITION_CEILING = 10**7

SPOILER = "spoiler"
DUPLICATOR = "duplicator"


@dataclass(frozen=True)
class GameVerdict:
    winner: str
    optimal_move: tuple[str, int, int] | None = None


@dataclass(frozen=True)
class GameStep:
    """Legal moves for one side, plus a flagged optimal move if one exists."""

    legal: tuple
    optimal: object
    verdict: str | None = None


def _insert(pos: tuple[int, ...], b: int) -> tuple[int, ...]:
    if b in pos:
        return pos
    out = []
    placed = False
    for q in pos:
        if not placed and b < q:
            out.append(b)
            placed = True
        out.append(q)
    if not placed:
        out.append(b)
    return tuple(out)


class _Board:
    """Pairwise-compatibility tables for one (G, H) pair."""

    def __init__(self, g: Graph, h: Graph):
        self.g = g
        self.h = h
        self.vg = g.n
        self.vh = h.n
        self.nids = self.vg * self.vh
        self.full = (1 << self.nids) - 1
        # comp[p] has bit q set iff {pair p, pair q} is a partial isomorphism;
        # a pair is compatible with itself (re-pebbling the same pair is legal)
        self.comp = [0] * self.nids
        self.mask_g = [0] * self.vg
        self.mask_h = [0] * self.vh
        for x in range(self.vg):
            for y in range(self.vh):
                p = x * self.vh + y
                self.mask_g[x] |= 1 << p
                self.mask_h[y] |= 1 << p
        for p in range(self.nids):
            x, y = divmod(p, self.vh)
            row = 0
            for q in range(self.nids):
                xq, yq = divmod(q, self.vh)
                if (x == xq) != (y == yq):
                    continue
                if x != xq and g.has_edge(x, xq) != h.has_edge(y, yq):
                    continue
                row |= 1 << q
            self.comp[p] = row

    def decode(self, p: int) -> tuple[int, int]:
        return divmod(p, self.vh)

    def encode(self, x: int, y: int) -> int:
        return x * self.vh + y

    def to_position(self, ids: tuple[int, ...]) -> Position:
        return tuple(sorted(self.decode(p) for p in ids))

    def from_position(self, pos: Position) -> tuple[int, ...]:
        return tuple(sorted(self.encode(x, y) for x, y in pos))

    def ext_mask(self, ids) -> int:
        mask = self.full
        for p in ids:
            mask &= self.comp[p]
        return mask

    def is_partial_iso(self, ids) -> bool:
        for i, p in enumerate(ids):
            row = self.comp[p]
            for q in ids[i + 1 :]:
                if not (row >> q) & 1:
                    return False
        return True


# -- fresh-pebble recursion ------------------------------------------------------


class _EqSolver:
    """Eq_d: Duplicator survives d more rounds when every round uses a fresh
    pebble.  Memoized on (sorted id tuple, d)."""

    def __init__(self, board: _Board):
        self.board = board
        self.memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def survives(self, ids: tuple[int, ...], ext: int, d: int) -> bool:
        if d == 0:
            return True
        key = (ids, d)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        board = self.board
        result = True
        for side_mask in (board.mask_g, board.mask_h):
            for row in side_mask:
                cand = ext & row
                if cand == 0:
                    result = False
                    break
                if d > 1 and not any(
                    self.survives(_insert(ids, b), ext & board.comp[b], d - 1)
                    for b in _bits(cand)
                ):
                    result = False
                    break
            if not result:
                break
        self.memo[key] = result
        return result


def _check_depth_ceilings(g: Graph, h: Graph) -> None:
    if g.n * h.n > DEPTH_PAIR_CEILING:
        raise ResourceLimitError(
            f"depth solver ceiling is v(G)*v(H) <= {DEPTH_PAIR_CEILING}, "
            f"got {g.n}*{h.n}"
        )


# -- general bounded game ----------------------------------------------------------


class _BoundedSolver:
    """Relocation-aware minimax for the r-round k-pebble game."""

    def __init__(self, board: _Board, pebbles: int):
        self.board = board
        self.k = pebbles
        self.memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def spoiler_wins(self, ids: tuple[int, ...], rounds: int) -> bool:
        if rounds == 0:
            return False
        key = (ids, rounds)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._exists_winning_move(ids, rounds) is not None
        self.memo[key] = result
        return result

    def _move_bases(self, ids: tuple[int, ...]):
        # fresh placement first (slot -1), then relocation of each pebble,
        # matching the documented (side, vertex, slot) move order
        if len(ids) < self.k:
            yield -1, ids
        for slot in range(len(ids)):
            yield slot, tuple(p for i, p in enumerate(ids) if i != slot)

    def _exists_winning_move(self, ids: tuple[int, ...], rounds: int):
        board = self.board
        for side, side_masks in (("G", board.mask_g), ("H", board.mask_h)):
            for vertex, row in enumerate(side_masks):
                for slot, base in self._move_bases(ids):
                    cand = board.ext_mask(base) & row
                    if cand == 0:
                        return (side, vertex, slot)
                    if all(
                        self.spoiler_wins(_insert(base, b), rounds - 1)
                        for b in _bits(cand)
                    ):
                        return (side, vertex, slot)
        return None

    def optimal_move(self, ids: tuple[int, ...], rounds: int):
        """Lexicographically least (side, vertex, slot) winning within the
        minimum number of rounds; None when Spoiler has no win."""
        if not self.spoiler_wins(ids, rounds):
            return None
        best_rounds = next(
            r for r in range(1, rounds + 1) if self.spoiler_wins(ids, r)
        )
        board = self.board
        for side, side_masks in (("G", board.mask_g), ("H", board.mask_h)):
            for vertex, row in enumerate(side_masks):
                for slot, base in sorted(self._move_bases(ids)):
                    cand = board.ext_mask(base) & row
                    if cand == 0 or all(
                        self.spoiler_wins(_insert(base, b), best_rounds - 1)
                        for b in _bits(cand)
                    ):
                        return (side, vertex, slot)
        raise AssertionError("winning move vanished")


def _validate_position(board: _Board, pos: Position, pebbles: int) -> tuple[int, ...]:
    if len(set(pos)) != len(pos):
        raise GraphError("position repeats a pair")
    if len(pos) > pebbles:
        raise GraphError("position uses more pairs than pebbles")
    for x, y in pos:
        if not (0 <= x < board.vg and 0 <= y < board.vh):
            raise GraphError(f"pair ({x}, {y}) outside the board")
    ids = board.from_position(pos)
    if not board.is_partial_iso(ids):
        raise GraphError("position is not a partial isomorphism")
    return ids


def spoiler_wins(g: Graph, h: Graph, rounds: int, pebbles: int) -> GameVerdict:
    """Exact verdict of the r-round k-pebble game from the empty position.

    Spoiler moves first each round, placing a free pebble or relocating a
    used one on either graph; Duplicator answers in the other graph and
    loses as soon as the pebbled pairs stop being a partial isomorphism.
    When the pebble budget covers all rounds the fresh-pebble recursion is
    used (relocation cannot help Spoiler then).
    """
    if rounds < 0 or pebbles < 1:
        raise GraphError("spoiler_wins needs rounds >= 0 and pebbles >= 1")
    _check_depth_ceilings(g, h)
    if rounds > 9:
        raise ResourceLimitError("bounded game ceiling is rounds <= 9")
    board = _Board(g, h)
    if pebbles >= rounds:
        eq = _EqSolver(board)
        if eq.survives((), board.full, rounds):
            return GameVerdict(DUPLICATOR)
        move = _eq_optimal_move(board, eq, (), board.full, rounds)
        return GameVerdict(SPOILER, move)
    solver = _BoundedSolver(board, pebbles)
    if solver.spoiler_wins((), rounds):
        return GameVerdict(SPOILER, solver.optimal_move((), rounds))
    return GameVerdict(DUPLICATOR)


def _eq_optimal_move(board, eq: _EqSolver, ids, ext, rounds: int):
    best_rounds = next(
        d for d in range(1, rounds + 1) if not eq.survives(ids, ext, d)
    )
    for side, side_masks in (("G", board.mask_g), ("H", board.mask_h)):
        for vertex, row in enumerate(side_masks):
            cand = ext & row
            if cand == 0 or all(
                not eq.survives(_insert(ids, b), ext & board.comp[b], best_rounds - 1)
                for b in _bits(cand)
            ):
                return (side, vertex, -1)
    raise AssertionError("winning move vanished")


def distinguishing_depth(g: Graph, h: Graph) -> int:
    """D(G, H): minimum d such that Spoiler wins the d-round d-pebble game.

    Requires non-isomorphic inputs (checked); a depth of
    max(v(G), v(H)) + 1 always suffices for such a pair.
    """
    _check_depth_ceilings(g, h)
    if is_isomorphic(g, h):
        raise GraphError("distinguishing_depth needs non-isomorphic graphs")
    board = _Board(g, h)
    eq = _EqSolver(board)
    bound = max(g.n, h.n) + 1
    for d in range(1, bound + 1):
        if d > DEPTH_CEILING:
            raise ResourceLimitError(
                f"depth solver ceiling is depth <= {DEPTH_CEILING}"
            )
        if not eq.survives((), board.full, d):
            return d
    raise AssertionError("no distinguishing depth below the guaranteed bound")


# -- unbounded game: greatest fixpoint ----------------------------------------------


def _position_count_estimate(vg: int, vh: int, k: int) -> int:
    total = 0
    for j in range(k + 1):
        ordered = 1
        for i in range(j):
            ordered *= (vg - i) * (vh - i)
        total += ordered // math.factorial(j)
    return total


class _Fixpoint:
    """Iterated deletion over all partial-isomorphism positions of size <= k.

    A position survives while (a) all its subsets survive and (b) if it has
    fewer than k pairs, every Spoiler vertex choice on either side has a
    surviving extension.  ``death_index`` orders the eliminations; every
    dead position has a move whose surviving replies are all dead with a
    strictly smaller index, which is Spoiler's progress measure.
    """

    def __init__(self, board: _Board, k: int, max_positions: int):
        self.board = board
        self.k = k
        estimate = _position_count_estimate(board.vg, board.vh, k)
        if estimate > max_positions:
            raise ResourceLimitError(
                f"fixpoint ceiling is {max_positions} positions of size <= {k}; "
                f"this pair needs up to {estimate}"
            )
        self.positions: set[tuple[int, ...]] = set()
        self.death_index: dict[tuple[int, ...], int] = {}
        self._enumerate()
        self._run()

    def _enumerate(self) -> None:
        board = self.board
        self.positions.add(())
        if self.k == 0:
            return
        stack = [((p,), board.comp[p] & (board.full << (p + 1)))
                 for p in range(board.nids - 1, -1, -1)]
        while stack:
            ids, mask = stack.pop()
            self.positions.add(ids)
            if len(ids) < self.k:
                for b in _bits(mask):
                    stack.append((ids + (b,), mask & board.comp[b] & (board.full << (b + 1))))

    def _extension_ok(self, ids: tuple[int, ...]) -> bool:
        board = self.board
        ext = board.ext_mask(ids)
        dead = self.death_index
        for side_masks in (board.mask_g, board.mask_h):
            for row in side_masks:
                cand = ext & row
                alive = False
                for b in _bits(cand):
                    if _insert(ids, b) not in dead:
                        alive = True
                        break
                if not alive:
                    return False
        return True

    def _run(self) -> None:
        queue = deque()

        def kill(ids: tuple[int, ...]) -> None:
            if ids not in self.death_index:
                self.death_index[ids] = len(self.death_index)
                queue.append(ids)

        for ids in self.positions:
            if len(ids) < self.k and not self._extension_ok(ids):
                kill(ids)
        while queue:
            ids = queue.popleft()
            present = set(ids)
            if len(ids) < self.k:
                for p in range(self.board.nids):
                    if p in present:
                        continue
                    sup = _insert(ids, p)
                    if sup in self.positions and sup not in self.death_index:
                        kill(sup)
            for i, q in enumerate(ids):
                facet = ids[:i] + ids[i + 1 :]
                if facet in self.death_index:
                    continue
                if not self._facet_still_ok(facet, q):
                    kill(facet)

    def _facet_still_ok(self, facet: tuple[int, ...], q: int) -> bool:
        board = self.board
        ext = board.ext_mask(facet)
        x, y = board.decode(q)
        dead = self.death_index
        for row in (board.mask_g[x], board.mask_h[y]):
            cand = ext & row
            alive = False
            for b in _bits(cand):
                if _insert(facet, b) not in dead:
                    alive = True
                    break
            if not alive:
                return False
        return True

    def alive(self, ids: tuple[int, ...]) -> bool:
        return ids in self.positions and ids not in self.death_index

    def survivors(self) -> set[tuple[int, ...]]:
        return {ids for ids in self.positions if ids not in self.death_index}


def duplicator_fixpoint(
    g: Graph, h: Graph, pebbles: int, max_positions: int = FIXPOINT_POSITION_CEILING
) -> set[Position]:
    """Greatest family of partial-isomorphism positions of size <= k that is
    downward closed and closed under back-and-forth extension below size k.

    Duplicator wins the unbounded k-pebble game exactly when the empty
    position () is in the returned set.
    """
    if pebbles < 1:
        raise GraphError("duplicator_fixpoint needs pebbles >= 1")
    board = _Board(g, h)
    fp = _Fixpoint(board, pebbles, max_positions)
    return {board.to_position(ids) for ids in fp.survivors()}


def distinguishing_width(
    g: Graph, h: Graph, max_positions: int = FIXPOINT_POSITION_CEILING
) -> int:
    """W(G, H): minimum pebble count k with which Spoiler wins the k-pebble
    game in some number of rounds; requires non-isomorphic inputs."""
    if is_isomorphic(g, h):
        raise GraphError("distinguishing_width needs non-isomorphic graphs")
    board = _Board(g, h)
    bound = max(g.n, h.n) + 1
    for k in range(1, bound + 1):
        fp = _Fixpoint(board, k, max_positions)
        if not fp.alive(()):
            return k
    raise AssertionError("no distinguishing width below the guaranteed bound")


# -- distinguishing sentence extraction ----------------------------------------------


def extract_sentence(g: Graph, h: Graph, depth: int) -> Formula:
    """A sentence of quantifier depth <= depth, true on g and false on h,
    read off Spoiler's winning strategy in the depth-round game.

    Requires Spoiler to win the depth-round depth-pebble game.
    """
    _check_depth_ceilings(g, h)
    board = _Board(g, h)
    eq = _EqSolver(board)
    if eq.survives((), board.full, depth):
        raise GraphError(
            f"no distinguishing sentence of depth {depth}: Duplicator survives"
        )

    def literal(ids: list[int], i: int, j: int) -> Formula:
        # a quantifier-free literal separating the two sides of a failed pair
        xi, yi = board.decode(ids[i])
        xj, yj = board.decode(ids[j])
        vi, vj = f"x{i + 1}", f"x{j + 1}"
        if xi == xj and yi != yj:
            return Eq(vi, vj)
        if xi != xj and yi == yj:
            return Not(Eq(vi, vj))
        if g.has_edge(xi, xj) and not h.has_edge(yi, yj):
            return Adj(vi, vj)
        return Not(Adj(vi, vj))

    def separate(ids: list[int], d: int) -> Formula:
        # invariant: ids is a partial isomorphism that Spoiler beats within d
        var = f"x{len(ids) + 1}"
        ext = board.ext_mask(tuple(sorted(ids)))
        for x in range(board.vg):
            ok = True
            parts = []
            for y in range(board.vh):
                b = board.encode(x, y)
                child = ids + [b]
                if (ext >> b) & 1:
                    if not eq.survives(
                        tuple(sorted(child)), ext & board.comp[b], d - 1
                    ):
                        parts.append(separate(child, d - 1))
                    else:
                        ok = False
                        break
                else:
                    bad = next(
                        i for i in range(len(ids))
                        if not (board.comp[ids[i]] >> b) & 1
                    )
                    parts.append(literal(child, bad, len(child) - 1))
            if ok:
                return Exists(var, _conj(parts))
        for y in range(board.vh):
            ok = True
            parts = []
            for x in range(board.vg):
                b = board.encode(x, y)
                child = ids + [b]
                if (ext >> b) & 1:
                    if not eq.survives(
                        tuple(sorted(child)), ext & board.comp[b], d - 1
                    ):
                        parts.append(separate(child, d - 1))
                    else:
                        ok = False
                        break
                else:
                    bad = next(
                        i for i in range(len(ids))
                        if not (board.comp[ids[i]] >> b) & 1
                    )
                    parts.append(literal(child, bad, len(child) - 1))
            if ok:
                return Forall(var, _disj(parts))
        raise AssertionError("no winning move found while extracting")

    return separate([], depth)


def _dedup(parts: list[Formula]) -> list[Formula]:
    seen = []
    for p in parts:
        if p not in seen:
            seen.append(p)
    return seen


def _conj(parts: list[Formula]) -> Formula:
    parts = _dedup(parts)
    return parts[0] if len(parts) == 1 else And(tuple(parts))


def _disj(parts: list[Formula]) -> Formula:
    parts = _dedup(parts)
    return parts[0] if len(parts) == 1 else Or(tuple(parts))


# -- interactive support ---------------------------------------------------------------


def game_step(
    g: Graph,
    h: Graph,
    pos: Position,
    role: str,
    rounds: int,
    pebbles: int,
    pending: tuple[str, int, int] | None = None,
) -> GameStep:
    """Legal moves (and one flagged optimal move) for the side to act.

    For the Spoiler role, moves are (side, vertex, slot) with slot -1 for a
    free pebble and otherwise an index into the sorted position; the
    flagged move is the one winning in the fewest rounds, if any.  For the
    Duplicator role, ``pending`` is Spoiler's placement this round, the
    legal moves are the replies preserving a partial isomorphism, and the
    flagged reply also preserves Duplicator's win when she has one.

    A zero-round budget has no moves; the verdict field then reports the
    winner by the partial-isomorphism predicate (always Duplicator, since a
    position is only valid while it is a partial isomorphism).
    """
    board = _Board(g, h)
    ids = _validate_position(board, pos, pebbles)
    if role not in (SPOILER, DUPLICATOR):
        raise GraphError(f"unknown role {role!r}")
    if rounds == 0:
        return GameStep(legal=(), optimal=None, verdict=DUPLICATOR)
    if role == SPOILER:
        legal = []
        if len(ids) < pebbles:
            legal.extend(
                (side, v, -1)
                for side, count in (("G", board.vg), ("H", board.vh))
                for v in range(count)
            )
        legal.extend(
            (side, v, slot)
            for side, count in (("G", board.vg), ("H", board.vh))
            for v in range(count)
            for slot in range(len(ids))
        )
        legal.sort()
        solver = _BoundedSolver(board, pebbles)
        return GameStep(legal=tuple(legal), optimal=solver.optimal_move(ids, rounds))
    if pending is None:
        raise GraphError("duplicator step needs Spoiler's pending move")
    side, vertex, slot = pending
    base = ids if slot == -1 else tuple(p for i, p in enumerate(ids) if i != slot)
    if slot != -1 and not 0 <= slot < len(ids):
        raise GraphError("pending move relocates a pebble that is not placed")
    if side == "G":
        if not 0 <= vertex < board.vg:
            raise GraphError("pending move outside G")
        cand = board.ext_mask(base) & board.mask_g[vertex]
        replies = sorted(board.decode(b)[1] for b in _bits(cand))
    elif side == "H":
        if not 0 <= vertex < board.vh:
            raise GraphError("pending move outside H")
        cand = board.ext_mask(base) & board.mask_h[vertex]
        replies = sorted(board.decode(b)[0] for b in _bits(cand))
    else:
        raise GraphError(f"unknown side {side!r}")
    solver = _BoundedSolver(board, pebbles)
    optimal = None
    for reply in replies:
        b = board.encode(vertex, reply) if side == "G" else board.encode(reply, vertex)
        if not solver.spoiler_wins(_insert(base, b), rounds - 1):
            optimal = reply
            break
    if optimal is None and replies:
        optimal = replies[0]
    return GameStep(legal=tuple(replies), optimal=optimal)


class PebbleGameTable:
    """Strategy table for the unbounded k-pebble game on one pair.

    Duplicator replies keep the position inside the surviving family when
    possible; Spoiler moves drive the death index down, which forces a win
    from any eliminated position.
    """

    def __init__(
        self,
        g: Graph,
        h: Graph,
        pebbles: int,
        max_positions: int = FIXPOINT_POSITION_CEILING,
    ):
        self.board = _Board(g, h)
        self.k = pebbles
        self.fp = _Fixpoint(self.board, pebbles, max_positions)

    def empty_position_alive(self) -> bool:
        return self.fp.alive(())

    def position_alive(self, pos: Position) -> bool:
        return self.fp.alive(self.board.from_position(pos))

    def _rank(self, ids: tuple[int, ...]) -> float:
        if self.fp.alive(ids):
            return math.inf
        return self.fp.death_index.get(ids, -1)

    def spoiler_move(self, pos: Position) -> tuple[str, int, int]:
        """From a dead position: the least move whose worst surviving reply
        still has a smaller death index.  From a surviving position (where
        Spoiler cannot win) the least legal move."""
        ids = _validate_position(self.board, pos, self.k)
        moves = []
        bases = []
        if len(ids) < self.k:
            bases.append((-1, ids))
        bases.extend(
            (slot, tuple(p for i, p in enumerate(ids) if i != slot))
            for slot in range(len(ids))
        )
        for side, count in (("G", self.board.vg), ("H", self.board.vh)):
            for v in range(count):
                for slot, base in bases:
                    moves.append(((side, v, slot), base))
        moves.sort(key=lambda m: m[0])
        my_rank = self._rank(ids)
        best = None
        best_key = None
        for (side, v, slot), base in moves:
            row = self.board.mask_g[v] if side == "G" else self.board.mask_h[v]
            cand = self.board.ext_mask(base) & row
            worst = -1
            for b in _bits(cand):
                worst = max(worst, self._rank(_insert(base, b)))
            if worst < my_rank and (best_key is None or worst < best_key):
                best, best_key = (side, v, slot), worst
        if best is not None:
            return best
        return moves[0][0]

    def duplicator_reply(self, pos: Position, pending: tuple[str, int, int]) -> int | None:
        """Reply maximizing survival: an alive successor if one exists, else
        the one Spoiler takes longest to finish off; None when every reply
        breaks the partial isomorphism."""
        ids = _validate_position(self.board, pos, self.k)
        side, vertex, slot = pending
        base = ids if slot == -1 else tuple(p for i, p in enumerate(ids) if i != slot)
        row = self.board.mask_g[vertex] if side == "G" else self.board.mask_h[vertex]
        cand = self.board.ext_mask(base) & row
        best = None
        best_rank = None
        for b in _bits(cand):
            rank = self._rank(_insert(base, b))
            if best_rank is None or rank > best_rank:
                x, y = self.board.decode(b)
                best = y if side == "G" else x
                best_rank = rank
        return best
