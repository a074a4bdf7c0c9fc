"""Candidate refinement images of generators and their empirical checking.

Subdividing a knot doubles its coordinates; the conjectured image of a
generator one level up is a quandle word g1 ^ g2 ^ ... ^ gk (right-to-left
precedence, g ^ h = h^-1 g h) over moves at the doubled scale.  Since every
generator is an involution, a quandle word expands to a palindromic plain
word: expand(g ^ h) = reverse(h) + g + h.

The canonical formulas cover one variant per kind; the other face variants
follow by re-indexing under the counterclockwise quarter-turn that defines
the variant numbering in the first place.  Wag images for face axes other
than 1 have no textual formula and are reported as unsupported rather than
guessed.

Nothing here is assumed: conjecture_check exercises the candidate image
against subdivision (restriction equality) and tests the word for being an
involution, returning a machine-readable report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import UnsupportedVariant
from .lattice import (
    LatticeKnot,
    Order,
    Vertex,
    left_perm,
    refine,
    right_perm,
    unit,
    vertex_add,
)
from .moves import (
    MoveId,
    MoveKind,
    apply,
    apply_word,
    move_in_bounds,
    rotate_point,
    rotation_about_axis,
    tug,
    transform_move,
    wag,
    wiggle,
)


@dataclass(frozen=True)
class QuandleWord:
    """Moves g1 ^ (g2 ^ (... ^ gk)) under the quandle product g ^ h = h g h."""

    terms: tuple[MoveId, ...]

    def expand(self) -> list[MoveId]:
        """Equivalent plain involution word (length 2**k - 1)."""
        word = [self.terms[-1]]
        for g in self.terms[-2::-1]:
            word = word[::-1] + [g] + word
        return word

    def act(self, k: LatticeKnot) -> LatticeKnot:
        """Evaluate recursively: g ^ h sends k to h(g(h(k)))."""
        def go(idx: int, knot: LatticeKnot) -> LatticeKnot:
            if idx == len(self.terms) - 1:
                return apply(self.terms[idx], knot)
            inner = go(idx + 1, knot)
            return go(idx + 1, apply(self.terms[idx], inner))
        return go(0, k)

    def __len__(self) -> int:
        return len(self.terms)


def quandle(g: Sequence[MoveId], h: Sequence[MoveId]) -> list[MoveId]:
    """g ^ h as a plain word: h reversed, then g, then h (h of involutions)."""
    return list(h)[::-1] + list(g) + list(h)


def _double(a: Vertex) -> Vertex:
    return (2 * a[0], 2 * a[1], 2 * a[2])


def _canonical_terms(m: MoveId) -> tuple[MoveId, ...]:
    """The displayed refinement word for the variant-0 pattern of each kind."""
    a, p = _double(m.a), m.p
    u, v = unit(left_perm(p)), unit(right_perm(p))
    au, av = vertex_add(a, u), vertex_add(a, v)
    auv = vertex_add(au, v)
    if m.kind is MoveKind.TUG:
        return (tug(au, p, 1), tug(auv, p, 3), tug(av, p, 0), tug(a, p, 0))
    if m.kind is MoveKind.WIGGLE:
        return (wiggle(auv, p, 0), wiggle(au, p, 0), wiggle(a, p, 0), wiggle(av, p, 0))
    # Wag with hinge at the anchor of face F_1(a): eight terms mixing both
    # wiggle variants and two half-scale wags at the shifted anchors.
    u1, u2, u3 = unit(1), unit(2), unit(3)
    a2, a3 = vertex_add(a, u2), vertex_add(a, u3)
    a12, a13 = vertex_add(a2, u1), vertex_add(a3, u1)
    a11 = vertex_add(vertex_add(a, u1), u1)
    return (
        wiggle(a3, 2, 1),
        wag(a13, 1, 0),
        wiggle(a3, 3, 0),
        wiggle(a, 1, 0),
        wiggle(a11, 1, 1),
        wiggle(a2, 2, 1),
        wag(a12, 1, 0),
        wiggle(a2, 3, 1),
    )


def refine_generator(m: MoveId) -> QuandleWord:
    """Candidate one-level refinement image of a generator.

    Tug and wiggle variants come from the canonical word by 90-degree
    rotations about the face normal (the q convention itself); wags are
    covered only for face axis 1, other axes raise UnsupportedVariant.
    """
    if m.kind is MoveKind.WAG and m.p != 1:
        raise UnsupportedVariant(
            f"no textual refinement formula for wags on face axis {m.p}"
        )
    base = MoveId(m.kind, m.a, m.p, 0)
    terms = _canonical_terms(base)
    turns = m.q
    if turns == 0:
        return QuandleWord(terms)
    # Rotate about the axis through the refined face center, which is the
    # integer point 2a + left + right.
    rows = rotation_about_axis(m.p)
    center = vertex_add(
        _double(m.a), vertex_add(unit(left_perm(m.p)), unit(right_perm(m.p)))
    )
    shift = tuple(center[i] - rotate_point(rows, center)[i] for i in range(3))
    rotated = list(terms)
    for _ in range(turns):
        rotated = [transform_move(t, rows, shift) for t in rotated]
    return QuandleWord(tuple(rotated))


def conjecture_check(
    m: MoveId,
    sample: Sequence[LatticeKnot],
    arbitrary: Sequence[LatticeKnot] = (),
) -> dict:
    """Empirical status of the refinement image of one generator.

    For each sample knot k (order (ell, n)) the restriction equality
        image(refine(k)) == refine(m(k))
    is evaluated, plus involutivity of the image word on the refined samples
    and on any supplied arbitrary knots of order (ell+1, n).  Counterexamples
    are collected, never asserted.
    """
    report: dict = {"generator": str(m), "supported": True}
    try:
        word = refine_generator(m)
    except UnsupportedVariant as exc:
        report["supported"] = False
        report["reason"] = str(exc)
        return report
    flat = word.expand()
    report["word_terms"] = [str(t) for t in word.terms]
    report["word_length"] = len(flat)

    restriction_failures = []
    involution_failures = []
    for k in sample:
        rk = refine(k)
        lhs = apply_word(flat, rk)
        rhs = refine(apply(m, k))
        if lhs != rhs:
            restriction_failures.append(k)
        if apply_word(flat, lhs) != rk:
            involution_failures.append(k)
    arbitrary_failures = []
    for k in arbitrary:
        once = apply_word(flat, k)
        if apply_word(flat, once) != k:
            arbitrary_failures.append(k)

    report["restriction"] = {
        "checked": len(sample),
        "failures": len(restriction_failures),
        "holds": not restriction_failures,
    }
    report["involution_on_refined"] = {
        "checked": len(sample),
        "failures": len(involution_failures),
        "holds": not involution_failures,
    }
    report["involution_on_arbitrary"] = {
        "checked": len(arbitrary),
        "failures": len(arbitrary_failures),
        "holds": not arbitrary_failures,
    }
    return report
