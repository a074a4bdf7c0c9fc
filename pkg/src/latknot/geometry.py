"""Real-geometry layer: curve discretization, knot functionals, derivatives.

A sampled curve is a list of closed polylines.  Its order-ell lattice
approximation maps every sample through componentwise binary truncation
(floor of 2**ell x), joins consecutive images by axis-priority shortest
lattice paths, and validates the union as a knot; failure to be 2-valent at
a given order is reported as TooCoarse rather than repaired.

Functionals: Length is edge count times edge length.  Link is the magnitude
of the Gauss double integral, evaluated exactly per straight-segment pair by
the signed solid-angle closed form (the integrand integrates to the area of a
spherical quadrilateral), so the result is an integer up to roundoff for any
valid two-component knot.

Variational quotients divide the change of a functional under a total move by
the face area (2**-ell)**2.  The bounded lattice is an artifact of the
representation, so the probed knot is injected into bound n+1 first; every
total move at an in-bound anchor is then well defined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import (
    DegenerateGeometry,
    EmptyGraph,
    NotTwoComponents,
    NotTwoValent,
    OutOfBounds,
    TooCoarse,
)
from .lattice import (
    Edge,
    LatticeKnot,
    Order,
    Vertex,
    component_cycles,
    components,
    inject,
    knot,
    translate,
)
from .moves import MoveKind, total_move

Point = tuple[float, float, float]


@dataclass(frozen=True)
class SampledCurve:
    """Closed polylines sampling a finitely-piecewise-smooth knot.

    Consecutive duplicate samples collapse; each component keeps at least
    three distinct samples.
    """

    components: tuple[tuple[Point, ...], ...]

    def __init__(self, components):
        cleaned = []
        for comp in components:
            pts = [tuple(float(x) for x in p) for p in comp]
            if pts and pts[0] == pts[-1]:
                pts = pts[:-1]
            dedup = [p for i, p in enumerate(pts) if p != pts[i - 1]]
            if len(dedup) < 3:
                raise ValueError("each curve component needs >= 3 distinct samples")
            cleaned.append(tuple(dedup))
        if not cleaned:
            raise ValueError("a curve needs at least one component")
        object.__setattr__(self, "components", tuple(cleaned))


def preferred_vertex_map(x: Sequence[float], ell: int) -> Vertex:
    """Componentwise floor of 2**ell x: binary truncation to ell places."""
    scale = 1 << ell
    return tuple(math.floor(xi * scale) for xi in x)


def _axis_priority_path(a: Vertex, b: Vertex) -> list[Edge]:
    """One shortest lattice path a -> b: exhaust axis 1, then 2, then 3."""
    edges = []
    cur = a
    for axis in (1, 2, 3):
        step = 1 if b[axis - 1] > cur[axis - 1] else -1
        while cur[axis - 1] != b[axis - 1]:
            nxt = translate(cur, axis, step)
            edges.append(Edge(min(cur, nxt), axis))
            cur = nxt
    return edges


def pv_approx(curve: SampledCurve, ell: int, n: int) -> LatticeKnot:
    """Order-(ell, n) lattice knot approximating the curve.

    Raises OutOfBounds when a sample leaves [0, n]^3 and TooCoarse when the
    union of shortest paths is not 2-valent at this order (guaranteed to
    succeed only for sufficiently large ell).
    """
    order = Order(ell, n)
    edges: set[Edge] = set()
    for comp in curve.components:
        for p in comp:
            if not all(0.0 <= c <= float(n) for c in p):
                raise OutOfBounds(f"curve sample {p} outside [0, {n}]^3")
        seq = [preferred_vertex_map(p, ell) for p in comp]
        path = [v for i, v in enumerate(seq) if v != seq[i - 1]]
        if len(path) < 2:
            raise TooCoarse(
                f"component collapses to a single lattice vertex at ell={ell}"
            )
        for a, b in zip(path, path[1:] + path[:1]):
            edges.update(_axis_priority_path(a, b))
    try:
        return knot(order, edges)
    except (NotTwoValent, EmptyGraph) as exc:
        raise TooCoarse(f"approximation fails at ell={ell}: {exc}") from exc


def length(k: LatticeKnot) -> float:
    """Total real length: edge count times 2**-ell."""
    return len(k.edges) * k.order.spacing


# -- Gauss linking ----------------------------------------------------------


def _segments(cycle: list[Vertex]) -> list[tuple[Vertex, Vertex]]:
    """Collapse a closed vertex walk into maximal straight segments."""
    n = len(cycle) - 1  # closed walk repeats the first vertex
    pts = cycle[:n]
    # Rotate so the walk starts at a corner (direction changes there).
    def direction(i):
        a, b = pts[i % n], pts[(i + 1) % n]
        return tuple(b[j] - a[j] for j in range(3))

    start = next(i for i in range(n) if direction(i - 1) != direction(i))
    pts = pts[start:] + pts[:start]
    segs = []
    anchor = pts[0]
    for i in range(1, n + 1):
        prev, cur = pts[(i - 1) % n], pts[i % n]
        d_prev = tuple(cur[j] - prev[j] for j in range(3))
        nxt = pts[(i + 1) % n]
        d_next = tuple(nxt[j] - cur[j] for j in range(3))
        if d_prev != d_next or i == n:
            segs.append((anchor, cur if i < n else pts[0]))
            anchor = cur if i < n else None
    return segs


def _segments_intersect(s1, s2) -> bool:
    """Exact intersection test for closed axis-aligned integer segments."""
    (a1, b1), (a2, b2) = s1, s2
    lo1 = tuple(min(a1[i], b1[i]) for i in range(3))
    hi1 = tuple(max(a1[i], b1[i]) for i in range(3))
    lo2 = tuple(min(a2[i], b2[i]) for i in range(3))
    hi2 = tuple(max(a2[i], b2[i]) for i in range(3))
    # Axis-aligned boxes of degenerate thickness: segments meet iff the boxes do.
    return all(lo1[i] <= hi2[i] and lo2[i] <= hi1[i] for i in range(3))


def _solid_angle_triangle(r1, r2, r3) -> float:
    """Signed solid angle of the triangle (r1, r2, r3) seen from the origin."""
    n1, n2, n3 = (math.sqrt(sum(c * c for c in r)) for r in (r1, r2, r3))
    num = (
        r1[0] * (r2[1] * r3[2] - r2[2] * r3[1])
        - r1[1] * (r2[0] * r3[2] - r2[2] * r3[0])
        + r1[2] * (r2[0] * r3[1] - r2[1] * r3[0])
    )
    dot12 = sum(a * b for a, b in zip(r1, r2))
    dot23 = sum(a * b for a, b in zip(r2, r3))
    dot31 = sum(a * b for a, b in zip(r3, r1))
    den = n1 * n2 * n3 + dot12 * n3 + dot23 * n1 + dot31 * n2
    return 2.0 * math.atan2(num, den)


def _pair_solid_angle(p1, p2, q1, q2) -> float:
    """Gauss-map solid angle of the segment pair (p1->p2, q1->q2)."""
    ra = tuple(p1[i] - q1[i] for i in range(3))
    rb = tuple(p1[i] - q2[i] for i in range(3))
    rc = tuple(p2[i] - q2[i] for i in range(3))
    rd = tuple(p2[i] - q1[i] for i in range(3))
    return _solid_angle_triangle(ra, rb, rc) + _solid_angle_triangle(ra, rc, rd)


def gauss_linking(k: LatticeKnot) -> float:
    """Magnitude of the Gauss linking integral of a two-component knot.

    Exact per segment pair via the solid-angle closed form; the result is
    within roundoff of an integer for any valid input.
    """
    cycles = component_cycles(k)
    if len(cycles) != 2:
        raise NotTwoComponents(f"knot has {len(cycles)} components, need 2")
    segs1, segs2 = _segments(cycles[0]), _segments(cycles[1])
    for s1 in segs1:
        for s2 in segs2:
            if _segments_intersect(s1, s2):
                raise DegenerateGeometry(
                    f"segments {s1} and {s2} intersect; input is not a knot"
                )
    total = math.fsum(
        _pair_solid_angle(*s1, *s2) for s1 in segs1 for s2 in segs2
    )
    return abs(total) / (4.0 * math.pi)


# -- variational derivatives -------------------------------------------------

FUNCTIONALS: dict[str, Callable[[LatticeKnot], float]] = {
    "length": length,
    "link": gauss_linking,
}


@dataclass(frozen=True)
class VariationalReport:
    """Finite-order difference quotients of a functional under a total move."""

    functional: str
    kind: MoveKind
    site: tuple[Point, int]  # (real anchor, face axis)
    orders: tuple[int, ...]
    quotients: tuple[float, ...]


def _as_functional(functional) -> tuple[str, Callable[[LatticeKnot], float]]:
    if callable(functional):
        return getattr(functional, "__name__", "custom"), functional
    return functional, FUNCTIONALS[functional]


def _total_move_quotient(f, kind, anchor, p, k: LatticeKnot) -> float:
    # Probe in a one-larger bound so boundary anchors stay meaningful.
    probe = inject(k, k.order.n + 1)
    moved = total_move(kind, anchor, p, probe)
    area = k.order.spacing ** 2
    return (f(moved) - f(probe)) / area


def variational_derivative(
    functional,
    target,
    kind: MoveKind,
    a: Point,
    p: int,
    ells: Sequence[int] | None = None,
    n: int | None = None,
) -> VariationalReport:
    """Difference quotients (F[total_move(PV)] - F[PV]) / (2**-ell)**2.

    `target` is either a SampledCurve (quotients at every order in `ells`,
    approximated within bound n) or a LatticeKnot (single quotient at its own
    order).  Quotient sequences are reported as-is; no limit is extrapolated.
    """
    name, f = _as_functional(functional)
    kind = MoveKind(kind)
    if isinstance(target, LatticeKnot):
        k = target
        ell = k.order.ell
        anchor = preferred_vertex_map(a, ell)
        q = _total_move_quotient(f, kind, anchor, p, k)
        return VariationalReport(name, kind, (tuple(a), p), (ell,), (q,))
    if ells is None or n is None:
        raise ValueError("curve targets need both ells and n")
    orders, quotients = [], []
    for ell in ells:
        k = pv_approx(target, ell, n)
        anchor = preferred_vertex_map(a, ell)
        orders.append(ell)
        quotients.append(_total_move_quotient(f, kind, anchor, p, k))
    return VariationalReport(name, kind, (tuple(a), p), tuple(orders), tuple(quotients))


def variational_gradient(
    functional, target, kind: MoveKind, a: Point, ells=None, n=None
) -> tuple[VariationalReport, VariationalReport, VariationalReport]:
    """The triple of variational reports over the three face axes."""
    return tuple(
        variational_derivative(functional, target, kind, a, p, ells, n)
        for p in (1, 2, 3)
    )
