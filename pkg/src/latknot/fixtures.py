"""Reference knots used across tests, docs, and the shipped .knot files.

Coordinates are lattice units at refinement level 0 unless stated otherwise.
"""

from __future__ import annotations

from .lattice import Edge, LatticeKnot, Order, Vertex, knot


def _cycle_edges(walk: list[Vertex]) -> set[Edge]:
    """Edges of a closed axis-aligned walk (first vertex not repeated)."""
    edges = set()
    for a, b in zip(walk, walk[1:] + walk[:1]):
        deltas = [b[i] - a[i] for i in range(3)]
        axes = [i for i, d in enumerate(deltas) if d != 0]
        if len(axes) != 1 or abs(deltas[axes[0]]) != 1:
            raise ValueError(f"not a unit step: {a} -> {b}")
        edges.add(Edge(min(a, b), axes[0] + 1))
    return edges


def rectangle_xy(
    x0: int, y0: int, width: int, height: int, z: int = 0, axes=(1, 2)
) -> set[Edge]:
    """Boundary edges of an axis-aligned rectangle in the plane of `axes`."""
    ax, ay = axes
    other = ({1, 2, 3} - {ax, ay}).pop()

    def pt(u: int, v: int) -> Vertex:
        c = [0, 0, 0]
        c[ax - 1], c[ay - 1], c[other - 1] = u, v, z
        return tuple(c)

    walk = (
        [pt(x0 + i, y0) for i in range(width)]
        + [pt(x0 + width, y0 + j) for j in range(height)]
        + [pt(x0 + width - i, y0 + height) for i in range(width)]
        + [pt(x0, y0 + height - j) for j in range(height)]
    )
    return _cycle_edges(walk)


def square(order=(0, 1)) -> LatticeKnot:
    """Unit square in the z = 0 plane at the origin (SQ)."""
    return knot(order, rectangle_xy(0, 0, 1, 1))


def top_square(order=(0, 1)) -> LatticeKnot:
    """Unit square in the z = 1 plane above `square`."""
    return knot(order, rectangle_xy(0, 0, 1, 1, z=1))


def square_union(order=(0, 1)) -> LatticeKnot:
    """Two-component unlink: `square` plus `top_square`."""
    return knot(order, rectangle_xy(0, 0, 1, 1) | rectangle_xy(0, 0, 1, 1, z=1))


def square_x(order=(0, 1)) -> LatticeKnot:
    """Unit square in the x = 0 plane (boundary of the face normal to axis 1)."""
    return knot(order, rectangle_xy(0, 0, 1, 1, axes=(2, 3)))


def big_square(order=(0, 2)) -> LatticeKnot:
    """Boundary of the 2 x 2 square in the z = 0 plane (SQ2)."""
    return knot(order, rectangle_xy(0, 0, 2, 2))


def rectangle(order=(0, 2)) -> LatticeKnot:
    """1 x 2 rectangle in the z = 0 plane (RECT), one tug away from `square`."""
    return knot(order, rectangle_xy(0, 0, 1, 2))


def hexagon(order=(0, 2)) -> LatticeKnot:
    """L-shaped hexagon: the 2 x 2 square boundary with one corner cell cut (HEX)."""
    walk = [
        (0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0),
        (1, 1, 0), (1, 2, 0), (0, 2, 0), (0, 1, 0),
    ]
    return knot(order, _cycle_edges(walk))


def bent_rectangle(order=(0, 2)) -> LatticeKnot:
    """`rectangle` after the wag at (0,1,0): its top cell folded into z (BENT)."""
    walk = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 1, 0)]
    return knot(order, _cycle_edges(walk))


def bent_hexagon(order=(0, 1)) -> LatticeKnot:
    """Nonplanar hexagon: `square` with its E2(0,0,0) edge tugged into x = 0."""
    walk = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 1, 1), (0, 0, 1)]
    return knot(order, _cycle_edges(walk))


def hopf_link(order=(0, 3)) -> LatticeKnot:
    """Two interlocked rectangles: one in the z = 1 plane, one in y = 1.

    The y = 1 rectangle passes through the hole of the z = 1 one exactly once,
    so the pair has Gauss linking number 1.
    """
    ring_a = rectangle_xy(0, 0, 2, 2, z=1)              # plane z = 1
    ring_b = rectangle_xy(1, 0, 2, 2, z=1, axes=(1, 3))  # plane y = 1
    return knot(order, ring_a | ring_b)


def trefoil(order=(0, 3)) -> LatticeKnot:
    """A 26-edge trefoil inside [0,3]^3.

    Produced by lattice-approximating a parametric trefoil and contracting
    with tug moves; knottedness was confirmed against a planar-diagram
    invariant during development.
    """
    walk = [
        (0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 3, 0), (1, 3, 0), (2, 3, 0),
        (2, 2, 0), (2, 2, 1), (3, 2, 1), (3, 1, 1), (3, 0, 1), (2, 0, 1),
        (1, 0, 1), (1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 2, 1), (1, 3, 1),
        (2, 3, 1), (3, 3, 1), (3, 3, 0), (3, 2, 0), (3, 1, 0), (2, 1, 0),
        (2, 1, 1), (1, 1, 1),
    ]
    return knot(order, _cycle_edges(walk))
