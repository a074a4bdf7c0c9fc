import random

import pytest

from latknot import (
    Edge,
    LatticeGraph,
    MoveId,
    MoveKind,
    Order,
    OutOfBounds,
    apply,
    apply_word,
    components,
    face_edges,
    generators,
    move_config,
    move_fires,
    move_in_bounds,
    total_move,
    tug,
    validate_knot,
    wag,
    wag_tug_lemma_check,
    wiggle,
)
from latknot import fixtures as fx
from latknot.engine import engine_for
from latknot.moves import rotation_about_axis, transform_move
from latknot.orbits import enumerate_knots, random_knots


def E(i, j, k, p):
    return Edge((i, j, k), p)


def test_face_edges_indexing():
    assert face_edges((0, 1, 0), 3) == [E(0, 1, 0, 1), E(1, 1, 0, 2), E(0, 2, 0, 1), E(0, 1, 0, 2)]
    assert face_edges((0, 0, 0), 1) == [E(0, 0, 0, 2), E(0, 1, 0, 3), E(0, 0, 1, 2), E(0, 0, 0, 3)]


def test_wiggle_variant_normalization():
    assert wiggle((0, 0, 0), 3, 2) == wiggle((0, 0, 0), 3, 0)
    assert wiggle((0, 0, 0), 3, 3) == wiggle((0, 0, 0), 3, 1)
    assert tug((0, 0, 0), 3, 3).q == 3


def test_move_config_tug():
    cfg = move_config(tug((0, 1, 0), 3, 0))
    assert cfg.side_a == frozenset({E(0, 1, 0, 1)})
    assert cfg.side_b == frozenset({E(1, 1, 0, 2), E(0, 2, 0, 1), E(0, 1, 0, 2)})
    assert cfg.side_a | cfg.side_b <= cfg.region_edges
    assert not (cfg.side_a & cfg.side_b)


def test_move_config_wiggle():
    cfg = move_config(wiggle((1, 1, 0), 3, 0))
    assert cfg.side_a == frozenset({E(1, 1, 0, 1), E(1, 1, 0, 2)})
    assert cfg.side_b == frozenset({E(1, 2, 0, 1), E(2, 1, 0, 2)})


def test_move_config_wag():
    cfg = move_config(wag((0, 1, 0), 1, 0))
    staple_xy = frozenset({E(0, 1, 0, 2), E(0, 2, 0, 1), E(1, 1, 0, 2)})
    staple_xz = frozenset({E(0, 1, 0, 3), E(0, 1, 1, 1), E(1, 1, 0, 3)})
    assert {cfg.side_a, cfg.side_b} == {staple_xy, staple_xz}
    assert E(0, 1, 0, 1) in cfg.region_edges  # the hinge conditions the move
    assert len(cfg.region_edges) == 7
    assert len(cfg.region_vertices) == 6


def test_apply_tug_extends_square():
    assert apply(tug((0, 1, 0), 3, 0), fx.square((0, 2))) == fx.rectangle()


def test_apply_wiggle_hexagon():
    assert apply(wiggle((1, 1, 0), 3, 0), fx.hexagon()) == fx.big_square()


def test_apply_wag_rectangle():
    assert apply(wag((0, 1, 0), 1, 0), fx.rectangle()) == fx.bent_rectangle()


def test_apply_blocked_by_stray_vertex():
    # the region vertex (1,1,0) belongs to the knot but is no endpoint of
    # either wiggle pair, so the move must not fire
    rect = fx.rectangle()
    assert apply(wiggle((0, 1, 0), 3, 0), rect) == rect


def test_apply_full_face_is_identity(square):
    for q in range(4):
        assert apply(tug((0, 0, 0), 3, q), square) == square
    for q in range(2):
        assert apply(wiggle((0, 0, 0), 3, q), square) == square


def test_apply_word_two_tugs(square):
    word = [tug((0, 0, 0), 1, 0), tug((0, 0, 0), 3, 3)]
    assert apply_word(word, square) == fx.square_x((0, 1))
    assert apply_word([], square) == square


def test_out_of_bounds_move(square):
    with pytest.raises(OutOfBounds):
        apply(tug((0, 1, 0), 3, 0), square)  # face needs coordinate 2


def test_generator_counts():
    assert len(generators(Order(0, 1))) == 48
    assert len(generators(Order(0, 1), inextensible=True)) == 24
    by_kind = {}
    for m in generators(Order(0, 1)):
        by_kind[m.kind] = by_kind.get(m.kind, 0) + 1
    assert by_kind == {MoveKind.TUG: 24, MoveKind.WIGGLE: 12, MoveKind.WAG: 12}


def test_generators_deterministic_order():
    gens = generators(Order(0, 1))
    assert gens == sorted(gens, key=MoveId.sort_key)
    assert all(move_in_bounds(m, Order(0, 1)) for m in gens)


def test_involution_on_basis(basis01, gens01):
    for m in gens01:
        for k in basis01.knots:
            assert apply(m, apply(m, k)) == k


def test_apply_closure_and_deltas(basis01, gens01, rng):
    for _ in range(300):
        k = rng.choice(basis01.knots)
        m = rng.choice(gens01)
        k2 = apply(m, k)
        validate_knot(LatticeGraph(k2.order, k2.edges))
        delta = len(k2.edges) - len(k.edges)
        if m.kind is MoveKind.TUG:
            assert delta in (-2, 0, 2)
        else:
            assert delta == 0
        cfg = move_config(m)
        assert (k.edges ^ k2.edges) <= cfg.region_edges  # locality
        assert components(k2) == components(k)


def test_total_move():
    assert total_move(MoveKind.TUG, (0, 1, 0), 3, fx.square((0, 2))) == fx.rectangle()
    sq = fx.square((0, 1))
    assert total_move(MoveKind.WIGGLE, (0, 0, 0), 3, sq) == sq
    assert total_move(MoveKind.WAG, (0, 1, 0), 1, fx.rectangle()) == fx.bent_rectangle()


def test_total_move_single_variant_fires(basis01, rng):
    # at most one variant differs from the identity on any given knot
    for _ in range(100):
        k = rng.choice(basis01.knots)
        for kind in MoveKind:
            qs = range(2) if kind is MoveKind.WIGGLE else range(4)
            firing = [q for q in qs if move_fires(MoveId(kind, (0, 0, 0), 3, q), k)]
            assert len(firing) <= 1


def test_mask_engine_matches_reference(basis01, gens01, rng):
    eng = engine_for(Order(0, 1))
    compiled = eng.compile_all(gens01)
    for _ in range(500):
        k = rng.choice(basis01.knots)
        i = rng.randrange(len(gens01))
        fast = eng.mask_to_knot(eng.apply_mask(compiled[i], eng.knot_to_mask(k)))
        assert fast == apply(gens01[i], k)


def test_transform_move_roundtrip():
    rows = rotation_about_axis(3)
    m = tug((1, 1, 0), 3, 0)
    # rotating four times about the face center returns the same move
    center = (3, 3, 0)
    shift = tuple(center[i] - sum(rows[i][c] * center[c] for c in range(3)) for i in range(3))
    cur = m
    seen_q = []
    for _ in range(4):
        cur = transform_move(cur, rows, shift)
        seen_q.append(cur.q)
    assert cur == m
    assert sorted(seen_q) == [0, 1, 2, 3]


class TestWagTugLemma:
    def test_square_both_equalities_hold(self, square):
        rep = wag_tug_lemma_check((0, 0, 0), square)
        assert rep["equality_1"] == rep["equality_2"]

    def test_report_shape(self, square):
        rep = wag_tug_lemma_check((0, 0, 0), square)
        assert set(rep) >= {
            "equality_1",
            "condition_1",
            "equality_2",
            "condition_2",
            "consistent",
        }

    def test_no_tug_configuration_on_hinge_faces(self):
        # knot far from both hinge faces: everything identity, both hold
        k = fx.top_square((0, 2))
        rep = wag_tug_lemma_check((0, 0, 0), k)
        assert rep["equality_1"] and rep["equality_2"]

    def test_asymmetric_witness_exists(self):
        rng = random.Random(7)
        sample = random_knots(Order(0, 2), 200, rng)
        anchors = [(i, j, k) for i in range(2) for j in range(2) for k in range(2)]
        seen = set()
        for k in sample:
            for a in anchors:
                rep = wag_tug_lemma_check(a, k)
                seen.add((rep["equality_1"], rep["equality_2"]))
        assert (False, True) in seen or (True, False) in seen


def test_every_wag_realized_by_tugs(basis01):
    # for each in-bounds wag and each basis knot there is a tug word of
    # length <= 4 with the same effect
    from itertools import product as iproduct

    gens = generators(Order(0, 1))
    tugs = [m for m in gens if m.kind is MoveKind.TUG]
    wags = [m for m in gens if m.kind is MoveKind.WAG]
    for w in wags:
        for k in basis01.knots:
            target = apply(w, k)
            if target == k:
                continue
            found = False
            frontier = {k: ()}
            for _ in range(4):
                nxt = {}
                for kn, word in frontier.items():
                    for t in tugs:
                        k2 = apply(t, kn)
                        if k2 == target:
                            found = True
                            break
                        if k2 not in nxt:
                            nxt[k2] = word + (t,)
                    if found:
                        break
                if found:
                    break
                frontier = nxt
            assert found, (w, k)
