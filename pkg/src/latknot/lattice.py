"""Exact integer model of the bounded cubic lattice and its knots.

Vertices are integer triples in lattice units of 2**-ell; the real position
of a vertex is 2**-ell times its coordinates.  A bounded lattice of order
(ell, n) admits coordinates 0..N componentwise, N = n * 2**ell.  An edge is
the open unit segment from its origin vertex along one of the three axis
directions; a knot is a finite nonempty edge set in which every vertex meets
exactly two edges.  All values here are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import EmptyGraph, InvalidBound, NotTwoValent, OutOfBounds

Vertex = tuple[int, int, int]

# Left and right axis permutations: 1->2->3->1 and 1->3->2->1.  They satisfy
# right(left(p)) == p and unit(right(p)) == unit(p) x unit(left(p)) under the
# right-handed cross product.
_LEFT = {1: 2, 2: 3, 3: 1}
_RIGHT = {1: 3, 2: 1, 3: 2}
_UNIT: dict[int, Vertex] = {1: (1, 0, 0), 2: (0, 1, 0), 3: (0, 0, 1)}

AXES = (1, 2, 3)


def left_perm(p: int) -> int:
    """Cyclic successor of axis p (1->2, 2->3, 3->1)."""
    return _LEFT[p]


def right_perm(p: int) -> int:
    """Cyclic predecessor of axis p (1->3, 2->1, 3->2)."""
    return _RIGHT[p]


def unit(p: int) -> Vertex:
    return _UNIT[p]


def translate(a: Vertex, p: int, k: int = 1) -> Vertex:
    """Translate a by k unit steps along axis p (no bound check)."""
    u = _UNIT[p]
    return (a[0] + k * u[0], a[1] + k * u[1], a[2] + k * u[2])


def vertex_add(a: Vertex, b: Vertex) -> Vertex:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


class Order(NamedTuple):
    """Lattice order: refinement level ell >= 0 and bound n >= 1."""

    ell: int
    n: int

    @property
    def size(self) -> int:
        """Maximum vertex coordinate N = n * 2**ell in lattice units."""
        return self.n << self.ell

    @property
    def spacing(self) -> float:
        """Real length of one lattice edge, 2**-ell."""
        return 0.5 ** self.ell

    def contains(self, a: Vertex) -> bool:
        N = self.size
        return 0 <= a[0] <= N and 0 <= a[1] <= N and 0 <= a[2] <= N


class Edge(NamedTuple):
    """Open unit edge from origin along axis p; origin is the lesser endpoint.

    The natural tuple ordering is the lexicographic edge order (origin first,
    then axis), which doubles as the basis/tensor position order.
    """

    origin: Vertex
    p: int

    @property
    def head(self) -> Vertex:
        return translate(self.origin, self.p)

    def endpoints(self) -> tuple[Vertex, Vertex]:
        return (self.origin, self.head)

    def bounded_valid(self, order: Order) -> bool:
        return order.contains(self.origin) and order.contains(self.head)


def edge_lex_compare(e1: Edge, e2: Edge) -> int:
    """Total order on edges: -1, 0, or +1 as e1 <, ==, > e2."""
    return (e1 > e2) - (e1 < e2)


def _check_edges(order: Order, edges: Iterable[Edge]) -> frozenset[Edge]:
    edge_set = frozenset(edges)
    for e in edge_set:
        if not isinstance(e, Edge):
            raise TypeError(f"not an Edge: {e!r}")
        if e.p not in AXES:
            raise ValueError(f"bad axis in {e!r}")
        if not e.bounded_valid(order):
            raise OutOfBounds(f"edge {e} leaves the {order} lattice (N={order.size})")
    return edge_set


def degree_map(edges: Iterable[Edge]) -> dict[Vertex, int]:
    deg: dict[Vertex, int] = {}
    for e in edges:
        for v in e.endpoints():
            deg[v] = deg.get(v, 0) + 1
    return deg


@dataclass(frozen=True)
class LatticeGraph:
    """A finite set of bounded-valid edges, not necessarily 2-valent."""

    order: Order
    edges: frozenset[Edge]

    def __init__(self, order: Order, edges: Iterable[Edge]):
        object.__setattr__(self, "order", Order(*order))
        object.__setattr__(self, "edges", _check_edges(self.order, edges))

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[Vertex]:
        return {v for e in self.edges for v in e.endpoints()}


@dataclass(frozen=True, init=False)
class LatticeKnot:
    """A nonempty 2-valent lattice graph: a disjoint union of lattice circles."""

    order: Order
    edges: frozenset[Edge]
    _key: tuple[Edge, ...] = field(compare=False, repr=False)

    def __init__(self, order: Order, edges: Iterable[Edge]):
        order = Order(*order)
        edge_set = _check_edges(order, edges)
        if not edge_set:
            raise EmptyGraph("a lattice knot has at least one edge")
        for v, d in degree_map(edge_set).items():
            if d != 2:
                raise NotTwoValent(v, d)
        self._init_fields(order, edge_set)

    def _init_fields(self, order: Order, edge_set: frozenset[Edge]) -> None:
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", edge_set)
        object.__setattr__(self, "_key", tuple(sorted(edge_set)))

    @classmethod
    def _trusted(cls, order: Order, edge_set: frozenset[Edge]) -> "LatticeKnot":
        """Construct without validation; callers guarantee the invariants."""
        k = object.__new__(cls)
        k._init_fields(order, edge_set)
        return k

    def __len__(self) -> int:
        return len(self.edges)

    def __hash__(self) -> int:
        return hash((self.order, self._key))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LatticeKnot)
            and self.order == other.order
            and self._key == other._key
        )

    def __lt__(self, other: "LatticeKnot") -> bool:
        return self._key < other._key

    def sorted_edges(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order; the canonical form of the knot."""
        return self._key

    def vertices(self) -> set[Vertex]:
        return {v for e in self.edges for v in e.endpoints()}

    def extent(self) -> int:
        """Side of the smallest axis-aligned lattice cube containing the knot."""
        vs = self.vertices()
        return max(
            max(v[i] for v in vs) - min(v[i] for v in vs) for i in range(3)
        )


def validate_knot(g: LatticeGraph) -> LatticeKnot:
    """Promote a lattice graph to a knot, or raise the violated invariant.

    Raises EmptyGraph, NotTwoValent(vertex, degree), or OutOfBounds.
    """
    return LatticeKnot(g.order, g.edges)


def knot(order: Order | tuple[int, int], edges: Iterable[Edge]) -> LatticeKnot:
    """Shorthand constructor used heavily by fixtures and tests."""
    return LatticeKnot(Order(*order), edges)


def components(k: LatticeKnot) -> int:
    """Number of disjoint circles in the knot."""
    adj: dict[Vertex, list[Vertex]] = {}
    for e in k.edges:
        a, b = e.endpoints()
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: set[Vertex] = set()
    count = 0
    for start in adj:
        if start in seen:
            continue
        count += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def component_cycles(k: LatticeKnot) -> list[list[Vertex]]:
    """Each circle of the knot as a closed vertex walk (first vertex repeated last)."""
    adj: dict[Vertex, list[Vertex]] = {}
    for e in k.edges:
        a, b = e.endpoints()
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen: set[Vertex] = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            # Degree 2 everywhere: exactly one way forward except at the start.
            step = nxt[0]
            if step == start:
                walk.append(start)
                break
            walk.append(step)
            seen.add(step)
            prev, cur = cur, step
        cycles.append(walk)
    return cycles


def refine(k: LatticeKnot) -> LatticeKnot:
    """Subdivide every edge into its two halves at order (ell+1, n).

    Coordinates double; real geometry is unchanged; the edge count doubles.
    """
    out = set()
    for e in k.edges:
        o2 = (2 * e.origin[0], 2 * e.origin[1], 2 * e.origin[2])
        out.add(Edge(o2, e.p))
        out.add(Edge(translate(o2, e.p), e.p))
    return LatticeKnot._trusted(Order(k.order.ell + 1, k.order.n), frozenset(out))


def inject(k: LatticeKnot, n2: int) -> LatticeKnot:
    """Re-tag the knot with the larger bound n2 (identical edge set)."""
    if n2 < k.order.n:
        raise InvalidBound(f"cannot shrink bound {k.order.n} to {n2}")
    if n2 == k.order.n:
        return k
    return LatticeKnot._trusted(Order(k.order.ell, n2), k.edges)


def iter_vertices(order: Order) -> Iterator[Vertex]:
    """All bounded lattice vertices in lexicographic order."""
    N = order.size
    for i in range(N + 1):
        for j in range(N + 1):
            for kk in range(N + 1):
                yield (i, j, kk)


def iter_edges(order: Order) -> Iterator[Edge]:
    """All bounded-valid edges in lexicographic order."""
    for v in iter_vertices(order):
        for p in AXES:
            e = Edge(v, p)
            if e.bounded_valid(order):
                yield e
