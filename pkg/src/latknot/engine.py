"""Bit-packed fast path for orbit search and basis enumeration.

Knots at a fixed order are packed into Python ints, one bit per (vertex, axis)
slot in lexicographic order (the same order that indexes the quantum basis
tensor positions).  Moves compile to a handful of masks so that applying a
generator is a few integer operations:

  fire on side a  <=>  knot & region == side_a  and  knot & blocked_a == 0

where blocked_a collects every out-of-region edge incident to a region vertex
the configuration must not touch.  Results are bit-identical to the reference
implementation in moves.py (tested against it).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .lattice import AXES, Edge, LatticeKnot, Order, Vertex
from .moves import MoveId, move_config, move_in_bounds


@dataclass(frozen=True)
class CompiledMove:
    region: int
    side_a: int
    side_b: int
    xor_mask: int
    blocked_a: int
    blocked_b: int


class MaskEngine:
    """Edge-index bookkeeping and compiled move application for one order."""

    def __init__(self, order: Order):
        self.order = Order(*order)
        N = self.order.size
        self._stride = N + 1
        self.edges: list[Edge] = []
        self._edge_bit: dict[Edge, int] = {}
        for i in range(N + 1):
            for j in range(N + 1):
                for k in range(N + 1):
                    for p in AXES:
                        e = Edge((i, j, k), p)
                        if e.bounded_valid(self.order):
                            self._edge_bit[e] = len(self.edges)
                            self.edges.append(e)
        self._incident: dict[Vertex, int] = {}
        for e, bit in self._edge_bit.items():
            for v in e.endpoints():
                self._incident[v] = self._incident.get(v, 0) | (1 << bit)

    # -- conversions --------------------------------------------------------

    def edge_bit(self, e: Edge) -> int:
        return self._edge_bit[e]

    def mask_of(self, edges: Iterable[Edge]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self._edge_bit[e]
        return m

    def knot_to_mask(self, k: LatticeKnot) -> int:
        return self.mask_of(k.edges)

    def mask_to_knot(self, mask: int) -> LatticeKnot:
        edges = frozenset(
            self.edges[i] for i in range(mask.bit_length()) if mask >> i & 1
        )
        return LatticeKnot._trusted(self.order, edges)

    def mask_to_edges(self, mask: int) -> frozenset[Edge]:
        return frozenset(
            self.edges[i] for i in range(mask.bit_length()) if mask >> i & 1
        )

    # -- compiled moves ------------------------------------------------------

    def compile(self, m: MoveId) -> CompiledMove:
        if not move_in_bounds(m, self.order):
            raise ValueError(f"{m} is out of bounds for order {tuple(self.order)}")
        cfg = move_config(m)
        region = self.mask_of(cfg.region_edges)
        side_a = self.mask_of(cfg.side_a)
        side_b = self.mask_of(cfg.side_b)
        ep_a = {v for e in cfg.side_a for v in e.endpoints()}
        ep_b = {v for e in cfg.side_b for v in e.endpoints()}
        blocked_a = blocked_b = 0
        for v in cfg.region_vertices:
            inc = self._incident[v] & ~region
            if v not in ep_a:
                blocked_a |= inc
            if v not in ep_b:
                blocked_b |= inc
        return CompiledMove(region, side_a, side_b, side_a ^ side_b, blocked_a, blocked_b)

    def compile_all(self, gens: Sequence[MoveId]) -> list[CompiledMove]:
        return [self.compile(g) for g in gens]

    @staticmethod
    def apply_mask(cm: CompiledMove, knot: int) -> int:
        inside = knot & cm.region
        if inside == cm.side_a:
            if knot & cm.blocked_a:
                return knot
            return knot ^ cm.xor_mask
        if inside == cm.side_b:
            if knot & cm.blocked_b:
                return knot
            return knot ^ cm.xor_mask
        return knot


@lru_cache(maxsize=32)
def engine_for(order: Order) -> MaskEngine:
    return MaskEngine(Order(*order))
