import pytest
from hypothesis import given, strategies as st

from latknot import (
    Edge,
    EmptyGraph,
    InvalidBound,
    LatticeGraph,
    LatticeKnot,
    NotTwoValent,
    Order,
    OutOfBounds,
    components,
    edge_lex_compare,
    inject,
    knot,
    left_perm,
    refine,
    right_perm,
    translate,
    validate_knot,
)
from latknot import fixtures as fx
from latknot.lattice import component_cycles, iter_edges


def test_permutation_table():
    assert left_perm(1) == 2 and left_perm(2) == 3 and left_perm(3) == 1
    assert right_perm(1) == 3 and right_perm(2) == 1 and right_perm(3) == 2


@pytest.mark.parametrize("p", [1, 2, 3])
def test_permutations_inverse(p):
    assert right_perm(left_perm(p)) == p
    assert left_perm(right_perm(p)) == p


def test_translate():
    assert translate((0, 0, 0), 1, 1) == (1, 0, 0)
    assert translate((2, 3, 1), 2, -3) == (2, 0, 1)
    assert translate((5, 5, 5), 3, 0) == (5, 5, 5)


def test_order_size():
    assert Order(0, 1).size == 1
    assert Order(2, 3).size == 12
    assert Order(1, 1).spacing == 0.5


def test_edge_lex_order():
    assert Edge((0, 0, 0), 1) < Edge((0, 0, 0), 2)
    assert Edge((0, 0, 0), 3) < Edge((0, 0, 1), 1)
    assert edge_lex_compare(Edge((0, 0, 0), 2), Edge((0, 0, 0), 2)) == 0
    assert edge_lex_compare(Edge((0, 0, 0), 1), Edge((0, 0, 0), 3)) == -1


def test_validate_square(square):
    g = LatticeGraph(Order(0, 1), square.edges)
    assert validate_knot(g) == square


def test_validate_missing_edge_not_two_valent(square):
    edges = sorted(square.edges)[:-1]
    with pytest.raises(NotTwoValent):
        validate_knot(LatticeGraph(Order(0, 1), edges))


def test_validate_degree_three(square):
    extra = square.edges | {Edge((0, 0, 0), 3)}
    with pytest.raises(NotTwoValent) as exc:
        validate_knot(LatticeGraph(Order(0, 1), extra))
    assert exc.value.degree == 3


def test_validate_empty():
    with pytest.raises(EmptyGraph):
        knot((0, 1), [])


def test_out_of_bounds_edge():
    with pytest.raises(OutOfBounds):
        LatticeGraph(Order(0, 1), [Edge((1, 1, 1), 1)])


def test_components():
    assert components(fx.square((0, 1))) == 1
    assert components(fx.square_union((0, 1))) == 2
    assert components(fx.hopf_link()) == 2
    assert components(fx.trefoil()) == 1


def test_component_cycles_closed(square):
    cycles = component_cycles(fx.square_union((0, 1)))
    assert len(cycles) == 2
    for walk in cycles:
        assert walk[0] == walk[-1]
        assert len(set(walk[:-1])) == len(walk) - 1


def test_refine_square(square):
    r = refine(square)
    assert r.order == Order(1, 1)
    assert len(r.edges) == 8
    assert components(r) == 1
    # geometry unchanged: doubled coordinates
    assert {e.origin for e in r.edges} <= {
        (i, j, 0) for i in range(3) for j in range(3)
    }
    assert len(refine(r).edges) == 16


def test_refine_preserves_components():
    k = fx.square_union((0, 1))
    assert components(refine(k)) == components(k)


def test_refine_injective(basis01):
    images = {refine(k) for k in basis01.knots}
    assert len(images) == len(basis01)
    for img in images:
        validate_knot(LatticeGraph(img.order, img.edges))


def test_inject(square):
    k2 = inject(square, 2)
    assert k2.order == Order(0, 2)
    assert k2.edges == square.edges
    assert inject(square, 1) == square
    with pytest.raises(InvalidBound):
        inject(k2, 1)


def test_inject_refine_commute(square):
    assert refine(inject(square, 2)) == inject(refine(square), 2)


def test_roundtrip_validation(basis01):
    for k in basis01.knots:
        assert validate_knot(LatticeGraph(k.order, k.edges)) == k


def test_iter_edges_count():
    assert len(list(iter_edges(Order(0, 1)))) == 12
    assert len(list(iter_edges(Order(0, 2)))) == 54


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(1, 3))
def test_edge_endpoints_ordered(i, j, k, p):
    e = Edge((i, j, k), p)
    a, b = e.endpoints()
    assert a < b and sum(y - x for x, y in zip(a, b)) == 1
