"""Line-oriented text formats: knot files, move scripts, curve files.

Knot file:
    latticeknot v1
    order ELL N
    edge I J K P        # one per edge, P in {1,2,3}

Move script: one move per line, "L1|L2|L3 I J K P Q", with '#' comments and
blank lines ignored.  Wiggle variants 2 and 3 normalize to 0 and 1.

Curve file:
    curve v1
    component
    pt X Y Z            # decimal reals; components have >= 3 points

Serialization is canonical (edges sorted lexicographically), so
parse(serialize(k)) == k and serialize(parse(text)) is a fixed point.
"""

from __future__ import annotations

from .errors import DuplicateEdge, ScriptSyntaxError
from .geometry import SampledCurve
from .lattice import Edge, LatticeGraph, LatticeKnot, Order, validate_knot
from .moves import MoveId, MoveKind, move_in_bounds

KNOT_HEADER = "latticeknot v1"
CURVE_HEADER = "curve v1"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_knot_file(text: str) -> LatticeKnot:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != KNOT_HEADER:
        raise ScriptSyntaxError(
            f"expected header '{KNOT_HEADER}'", line=lines[0][0] if lines else 1
        )
    if len(lines) < 2 or not lines[1][1].startswith("order "):
        raise ScriptSyntaxError("expected 'order ELL N'", line=lines[1][0] if len(lines) > 1 else 2)
    parts = lines[1][1].split()
    try:
        order = Order(int(parts[1]), int(parts[2]))
    except (IndexError, ValueError) as exc:
        raise ScriptSyntaxError(f"bad order line: {lines[1][1]!r}", line=lines[1][0]) from exc
    if order.ell < 0 or order.n < 1:
        raise ScriptSyntaxError("order needs ell >= 0 and n >= 1", line=lines[1][0])

    edges = []
    seen = set()
    for lineno, line in lines[2:]:
        parts = line.split()
        if parts[0] != "edge" or len(parts) != 5:
            raise ScriptSyntaxError(f"expected 'edge I J K P': {line!r}", line=lineno)
        try:
            i, j, k, p = (int(x) for x in parts[1:])
        except ValueError as exc:
            raise ScriptSyntaxError(f"non-integer edge field: {line!r}", line=lineno) from exc
        if p not in (1, 2, 3):
            raise ScriptSyntaxError(f"axis must be 1, 2, or 3: {line!r}", line=lineno, col=line.rfind(parts[4]))
        e = Edge((i, j, k), p)
        if e in seen:
            raise DuplicateEdge(f"edge repeated at line {lineno}: {line!r}")
        seen.add(e)
        edges.append(e)
    return validate_knot(LatticeGraph(order, edges))


def serialize_knot(k: LatticeKnot) -> str:
    lines = [KNOT_HEADER, f"order {k.order.ell} {k.order.n}"]
    for e in k.sorted_edges():
        i, j, kk = e.origin
        lines.append(f"edge {i} {j} {kk} {e.p}")
    return "\n".join(lines) + "\n"


_KINDS = {"L1": MoveKind.TUG, "L2": MoveKind.WIGGLE, "L3": MoveKind.WAG}


def parse_move(line: str, lineno: int = 1) -> MoveId:
    parts = line.split()
    if len(parts) != 6 or parts[0] not in _KINDS:
        raise ScriptSyntaxError(f"expected 'L1|L2|L3 I J K P Q': {line!r}", line=lineno)
    try:
        i, j, k, p, q = (int(x) for x in parts[1:])
    except ValueError as exc:
        raise ScriptSyntaxError(f"non-integer move field: {line!r}", line=lineno) from exc
    try:
        return MoveId(_KINDS[parts[0]], (i, j, k), p, q)
    except ValueError as exc:
        raise ScriptSyntaxError(str(exc), line=lineno) from exc


def parse_move_script(text: str, order: Order | None = None) -> list[MoveId]:
    """Parse a move script; with an order, every move is bounds-checked."""
    moves = []
    for lineno, line in _content_lines(text):
        m = parse_move(line, lineno)
        if order is not None and not move_in_bounds(m, Order(*order)):
            raise ScriptSyntaxError(
                f"move out of bounds for order {tuple(order)}: {line!r}", line=lineno
            )
        moves.append(m)
    return moves


def serialize_moves(word) -> str:
    return "\n".join(str(m) for m in word) + ("\n" if word else "")


def parse_curve_file(text: str) -> SampledCurve:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != CURVE_HEADER:
        raise ScriptSyntaxError(
            f"expected header '{CURVE_HEADER}'", line=lines[0][0] if lines else 1
        )
    components: list[list[tuple[float, float, float]]] = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if parts[0] == "component" and len(parts) == 1:
            components.append([])
            continue
        if parts[0] != "pt" or len(parts) != 4:
            raise ScriptSyntaxError(f"expected 'component' or 'pt X Y Z': {line!r}", line=lineno)
        if not components:
            raise ScriptSyntaxError("'pt' before any 'component'", line=lineno)
        try:
            components[-1].append(tuple(float(x) for x in parts[1:]))
        except ValueError as exc:
            raise ScriptSyntaxError(f"bad coordinate: {line!r}", line=lineno) from exc
    try:
        return SampledCurve(components)
    except ValueError as exc:
        raise ScriptSyntaxError(str(exc)) from exc


def serialize_curve(curve: SampledCurve) -> str:
    lines = [CURVE_HEADER]
    for comp in curve.components:
        lines.append("component")
        for x, y, z in comp:
            lines.append(f"pt {x!r} {y!r} {z!r}")
    return "\n".join(lines) + "\n"
