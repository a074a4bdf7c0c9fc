"""Basis enumeration, orbit BFS, equivalence decision, lattice number.

The basis of an order is every nonempty 2-valent subgraph of the bounded
1-skeleton: all simple cycles plus all unions of pairwise vertex-disjoint
cycles.  Orbits are breadth-first closures under a generator list; witnesses
are reconstructed from parent pointers.  Equivalence is decided by
bidirectional BFS and is only reported false when an orbit was exhausted,
otherwise the answer is indeterminate under the configured limit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .engine import MaskEngine, engine_for
from .errors import CapExceeded, LimitExceeded
from .lattice import (
    AXES,
    Edge,
    LatticeKnot,
    Order,
    Vertex,
    components,
    inject,
    refine,
    unit,
)
from .moves import MoveId, apply, generators

DEFAULT_CAP = 10**6
DEFAULT_LIMIT = 10**6


@dataclass(frozen=True)
class Basis:
    """All knots of an order, deterministically indexed.

    The empty configuration is never an element; with includes_empty the
    alternative counting convention is reflected in `count` only.
    """

    order: Order
    knots: tuple[LatticeKnot, ...]
    includes_empty: bool = False
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({k: i for i, k in enumerate(self.knots)})

    def __len__(self) -> int:
        return len(self.knots)

    @property
    def count(self) -> int:
        return len(self.knots) + (1 if self.includes_empty else 0)

    def index(self, k: LatticeKnot) -> int:
        return self._index[k]

    def __contains__(self, k: LatticeKnot) -> bool:
        return k in self._index


def _simple_cycles(order: Order, engine: MaskEngine, cap: int):
    """All simple cycles of the bounded 1-skeleton as (edge_mask, vertex_set).

    Canonical form: each cycle is found once, rooted at its minimal vertex
    with the smaller neighbor chosen as the second vertex of the walk.
    """
    N = order.size
    verts = [(i, j, k) for i in range(N + 1) for j in range(N + 1) for k in range(N + 1)]
    neighbors: dict[Vertex, list[Vertex]] = {v: [] for v in verts}
    edge_bits: dict[tuple[Vertex, Vertex], int] = {}
    for e in engine.edges:
        a, b = e.endpoints()
        neighbors[a].append(b)
        neighbors[b].append(a)
        bit = 1 << engine.edge_bit(e)
        edge_bits[(a, b)] = bit
        edge_bits[(b, a)] = bit
    for v in verts:
        neighbors[v].sort()

    cycles: list[tuple[int, frozenset[Vertex]]] = []
    for root in verts:
        # Depth-first walks root -> ... -> root through vertices > root only.
        stack = [(root, [root], {root}, 0)]
        while stack:
            cur, path, onpath, mask = stack.pop()
            for nxt in neighbors[cur]:
                if nxt == root:
                    if len(path) >= 3 and path[1] < path[-1]:
                        cmask = mask | edge_bits[(cur, root)]
                        cycles.append((cmask, frozenset(onpath)))
                        if len(cycles) > cap:
                            raise CapExceeded(len(cycles))
                    continue
                if nxt < root or nxt in onpath:
                    continue
                stack.append(
                    (nxt, path + [nxt], onpath | {nxt}, mask | edge_bits[(cur, nxt)])
                )
    return cycles


def enumerate_knots(
    order: Order | tuple[int, int],
    cap: int = DEFAULT_CAP,
    include_empty: bool = False,
) -> Basis:
    """Basis of the order: simple cycles and their vertex-disjoint unions.

    Deterministic order (lexicographic by sorted edge list).  Raises
    CapExceeded when the count passes `cap`.
    """
    order = Order(*order)
    engine = engine_for(order)
    cycles = _simple_cycles(order, engine, cap)
    # Vertex masks for fast disjointness tests.
    stride = order.size + 1
    vbit = {
        (i, j, k): 1 << ((i * stride + j) * stride + k)
        for i in range(stride)
        for j in range(stride)
        for k in range(stride)
    }
    items = []
    for cmask, vset in cycles:
        vm = 0
        for v in vset:
            vm |= vbit[v]
        items.append((cmask, vm))
    items.sort(key=lambda t: t[0])

    masks: list[int] = []

    def extend(start: int, emask: int, vmask: int) -> None:
        masks.append(emask)
        if len(masks) > cap:
            raise CapExceeded(len(masks))
        for idx in range(start, len(items)):
            cm, vm = items[idx]
            if not vm & vmask:
                extend(idx + 1, emask | cm, vmask | vm)

    for i, (cm, vm) in enumerate(items):
        extend(i + 1, cm, vm)

    knots = sorted(engine.mask_to_knot(m) for m in masks)
    return Basis(order, tuple(knots), includes_empty=include_empty)


@dataclass(frozen=True)
class Orbit:
    """BFS closure of a seed knot under a generator list, with witnesses."""

    seed: LatticeKnot
    gens: tuple[MoveId, ...]
    members: frozenset[LatticeKnot]
    _parent: dict = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, k: LatticeKnot) -> bool:
        return k in self.members

    def witness(self, k: LatticeKnot) -> tuple[MoveId, ...]:
        """Move word carrying the seed to k (empty for the seed itself)."""
        word: list[MoveId] = []
        cur = k
        while cur != self.seed:
            prev, move = self._parent[cur]
            word.append(move)
            cur = prev
        word.reverse()
        return tuple(word)

    @property
    def witnesses(self) -> dict[LatticeKnot, tuple[MoveId, ...]]:
        return {k: self.witness(k) for k in self.members}


def orbit(
    seed: LatticeKnot,
    gens: Sequence[MoveId],
    limit: int = DEFAULT_LIMIT,
) -> Orbit:
    """Breadth-first orbit of the seed; raises LimitExceeded past `limit`."""
    engine = engine_for(seed.order)
    compiled = engine.compile_all(gens)
    seed_mask = engine.knot_to_mask(seed)
    parent: dict[int, tuple[int, MoveId]] = {}
    visited = {seed_mask}
    frontier = [seed_mask]
    while frontier:
        nxt: list[int] = []
        for km in frontier:
            for cm, move in zip(compiled, gens):
                im = engine.apply_mask(cm, km)
                if im not in visited:
                    visited.add(im)
                    if len(visited) > limit:
                        raise LimitExceeded(len(visited))
                    parent[im] = (km, move)
                    nxt.append(im)
        frontier = nxt
    members = {engine.mask_to_knot(m) for m in visited}
    parent_knots = {
        engine.mask_to_knot(m): (engine.mask_to_knot(pm), move)
        for m, (pm, move) in parent.items()
    }
    return Orbit(seed, tuple(gens), frozenset(members), parent_knots)


@dataclass(frozen=True)
class Equivalence:
    """Outcome of a bounded equivalence search.

    status is "equivalent" (with a witness word), "distinct" (an orbit was
    exhausted), or "indeterminate" (limit reached before a decision).
    """

    status: str
    witness: tuple[MoveId, ...] | None = None
    order: Order | None = None

    @property
    def decided(self) -> bool:
        return self.status != "indeterminate"

    def __bool__(self) -> bool:
        return self.status == "equivalent"


def _reconstruct(parent: dict[int, tuple[int, MoveId]], seed: int, target: int):
    word: list[MoveId] = []
    cur = target
    while cur != seed:
        prev, move = parent[cur]
        word.append(move)
        cur = prev
    word.reverse()
    return word


def equivalent(
    k1: LatticeKnot,
    k2: LatticeKnot,
    inextensible: bool = False,
    limit: int = DEFAULT_LIMIT,
    gens: Sequence[MoveId] | None = None,
) -> Equivalence:
    """Decide same-knot-type at the knots' shared order by bidirectional BFS."""
    if k1.order != k2.order:
        raise ValueError("knots must share an order; escalate explicitly")
    order = k1.order
    if gens is None:
        gens = generators(order, inextensible)
    engine = engine_for(order)
    compiled = engine.compile_all(gens)
    a, b = engine.knot_to_mask(k1), engine.knot_to_mask(k2)
    if a == b:
        return Equivalence("equivalent", (), order)

    parents: list[dict[int, tuple[int, MoveId]]] = [{}, {}]
    visited: list[set[int]] = [{a}, {b}]
    frontier: list[list[int]] = [[a], [b]]
    seeds = [a, b]

    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        other = 1 - side
        nxt: list[int] = []
        for km in frontier[side]:
            for cm, move in zip(compiled, gens):
                im = engine.apply_mask(cm, km)
                if im in visited[side]:
                    continue
                visited[side].add(im)
                parents[side][im] = (km, move)
                if len(visited[0]) + len(visited[1]) > limit:
                    return Equivalence("indeterminate", None, order)
                if im in visited[other]:
                    w_here = _reconstruct(parents[side], seeds[side], im)
                    w_there = _reconstruct(parents[other], seeds[other], im)
                    if side == 0:
                        word = w_here + w_there[::-1]
                    else:
                        word = w_there + w_here[::-1]
                    return Equivalence("equivalent", tuple(word), order)
                nxt.append(im)
        frontier[side] = nxt
        if not nxt:
            # The whole orbit on this side was exhausted without meeting.
            return Equivalence("distinct", None, order)
    return Equivalence("distinct", None, order)


def equivalent_escalating(
    k1: LatticeKnot,
    k2: LatticeKnot,
    max_n: int,
    max_ell: int,
    inextensible: bool = False,
    limit: int = DEFAULT_LIMIT,
) -> Equivalence:
    """Escalate bound injections and refinements until a decision or the caps.

    The search starts at the smallest bound where both knots fit, sweeps n up
    to max_n, refines once, and repeats up to max_ell.  "distinct" at a
    bounded order does not settle the unbounded question, so only exhaustion
    at the caps downgrades to the last definite answer.
    """
    if k1.order.ell != k2.order.ell:
        raise ValueError("escalation requires equal refinement levels")
    n0 = max(k1.order.n, k2.order.n)
    if n0 > max_n:
        raise ValueError(f"max_n={max_n} is below the knots' bound {n0}")
    a, b = inject(k1, n0), inject(k2, n0)
    last = Equivalence("indeterminate")
    all_distinct = True
    for _ in range(max_ell - k1.order.ell + 1):
        for n in range(a.order.n, max_n + 1):
            a, b = inject(a, n), inject(b, n)
            res = equivalent(a, b, inextensible=inextensible, limit=limit)
            if res.status == "equivalent":
                return res
            all_distinct = all_distinct and res.status == "distinct"
            last = res
        a, b = refine(a), refine(b)
    if all_distinct:
        # Every escalation level exhausted both orbits without meeting.
        return Equivalence("distinct", None, last.order)
    return Equivalence("indeterminate", None, last.order)


@dataclass(frozen=True)
class LatticeNumberResult:
    """Smallest bound reached by any explored orbit member.

    `value` is set when the orbit was exhausted (the answer is exact for the
    searched bound); otherwise only best_found is meaningful.
    """

    value: int | None
    best_found: int
    exhausted: bool

    @property
    def indeterminate(self) -> bool:
        return self.value is None


def lattice_number(
    k: LatticeKnot,
    max_n: int,
    inextensible: bool = False,
    limit: int = DEFAULT_LIMIT,
) -> LatticeNumberResult:
    """Minimal bound n <= max_n reached by a translate of an orbit member.

    The knot's bounding-cube side is translation invariant, so the minimum
    over translates is just the smallest extent seen along the orbit at
    bound max_n.
    """
    if k.order.ell != 0:
        raise ValueError("lattice number is defined for order ell = 0")
    seed = inject(k, max_n)
    order = seed.order
    gens = generators(order, inextensible)
    engine = engine_for(order)
    compiled = engine.compile_all(gens)
    seed_mask = engine.knot_to_mask(seed)
    best = seed.extent()
    visited = {seed_mask}
    frontier = [seed_mask]
    while frontier and best > 1:
        nxt = []
        for km in frontier:
            for cm in compiled:
                im = engine.apply_mask(cm, km)
                if im not in visited:
                    visited.add(im)
                    if len(visited) > limit:
                        return LatticeNumberResult(None, best, False)
                    ext = engine.mask_to_knot(im).extent()
                    if ext < best:
                        best = ext
                        if best == 1:
                            return LatticeNumberResult(1, 1, True)
                    nxt.append(im)
        frontier = nxt
    return LatticeNumberResult(best, best, True)


def random_knot(order: Order | tuple[int, int], rng, max_components: int = 2) -> LatticeKnot:
    """A random knot: one or more vertex-disjoint random lattice cycles.

    Cycles are sampled as randomized self-avoiding walks that close up;
    deterministic for a given rng state.
    """
    order = Order(*order)
    N = order.size

    def random_cycle(blocked: set[Vertex]) -> set[Edge] | None:
        verts = [
            (i, j, k)
            for i in range(N + 1)
            for j in range(N + 1)
            for k in range(N + 1)
            if (i, j, k) not in blocked
        ]
        if len(verts) < 4:
            return None
        # Grow a self-avoiding walk; close it when the start is adjacent.
        for _ in range(200):
            start = verts[rng.randrange(len(verts))]
            path = [start]
            onpath = {start}
            for _ in range(8 * (N + 1) ** 3):
                cur = path[-1]
                nbrs = []
                can_close = False
                for p in AXES:
                    for step in (1, -1):
                        v = tuple(c + step * u for c, u in zip(cur, unit(p)))
                        if not order.contains(v) or v in blocked:
                            continue
                        if v == start:
                            can_close = len(path) >= 4
                        elif v not in onpath:
                            nbrs.append(v)
                if can_close and (not nbrs or rng.random() < 0.5):
                    edges = set()
                    for x, y in zip(path, path[1:] + [start]):
                        axis = next(i + 1 for i in range(3) if x[i] != y[i])
                        edges.add(Edge(min(x, y), axis))
                    return edges
                if not nbrs:
                    break
                path.append(nbrs[rng.randrange(len(nbrs))])
                onpath.add(path[-1])
        return None

    parts = 1 + rng.randrange(max_components)
    edges: set[Edge] = set()
    blocked: set[Vertex] = set()
    got = 0
    for _ in range(parts):
        cyc = random_cycle(blocked)
        if cyc is None:
            continue
        edges |= cyc
        blocked |= {v for e in cyc for v in e.endpoints()}
        got += 1
    if got == 0:
        # Tiny lattices can defeat the sampler; fall back to a face square.
        edges = {
            Edge((0, 0, 0), 1),
            Edge((1, 0, 0), 2),
            Edge((0, 1, 0), 1),
            Edge((0, 0, 0), 2),
        }
    return LatticeKnot(order, edges)


def random_knots(
    order: Order | tuple[int, int], count: int, rng, max_components: int = 2
) -> list[LatticeKnot]:
    return [random_knot(order, rng, max_components) for _ in range(count)]


def orbit_partition(
    basis: Basis, gens: Sequence[MoveId]
) -> list[tuple[int, ...]]:
    """Partition of basis indices into orbits under the generator list."""
    perms = [basis_permutation(basis, g) for g in gens]
    seen = [False] * len(basis)
    parts: list[tuple[int, ...]] = []
    for start in range(len(basis)):
        if seen[start]:
            continue
        block = [start]
        seen[start] = True
        queue = [start]
        while queue:
            i = queue.pop()
            for perm in perms:
                j = perm[i]
                if not seen[j]:
                    seen[j] = True
                    block.append(j)
                    queue.append(j)
        parts.append(tuple(sorted(block)))
    return parts


def basis_permutation(basis: Basis, m: MoveId) -> list[int]:
    """The generator as a permutation of basis indices."""
    return [basis.index(apply(m, k)) for k in basis.knots]
