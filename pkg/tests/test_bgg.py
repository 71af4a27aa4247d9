import pytest

from kdirac.bgg import build_bgg, canonical_seed, row_bundles, weights_by_recurrence
from kdirac.errors import DominanceError
from kdirac.hasse import HasseVertex, build_hasse
from kdirac.weights import ParabolicMarking, Weight, is_dominant

from oracles import half_int_weight_from_moves, random_move_sequence, seeded

# relative BGG diagram for k = 3, doubled coordinates, keyed by (s, t)
K3_TABLE = {
    (0, 0): (-3, -3, -3, -3, 3),
    (1, 0): (-3, -3, -5, -1, 3),
    (1, 1): (-3, -3, -7, -1, 1),
    (2, 0): (-3, -5, -5, 1, 3),
    (2, 1): (-3, -5, -7, 1, 1),
    (3, 0): (-5, -5, -5, 3, 3),
    (2, 2): (-3, -7, -7, 1, -1),
    (3, 1): (-5, -5, -7, 3, 1),
    (3, 2): (-5, -7, -7, 3, -1),
    (3, 3): (-7, -7, -7, 3, -3),
}


def test_canonical_seed():
    seed = canonical_seed(3)
    assert seed.coords2 == (-3, -3, -3, -3, 3)
    assert is_dominant(seed, ParabolicMarking.Q)
    assert not is_dominant(seed, ParabolicMarking.P)


def test_k3_table():
    d = build_bgg(3)
    assert {(v.s, v.t): w.coords2 for v, w in d.assignment.items()} == K3_TABLE


def test_seed_at_source():
    d = build_bgg(4)
    assert d[HasseVertex(0, 0)] == d.seed


@pytest.mark.parametrize("k", range(2, 13))
def test_canonical_weights_q_dominant_with_sorted_prefix(k):
    d = build_bgg(k)
    for w in d.assignment.values():
        assert is_dominant(w, ParabolicMarking.Q)
        prefix = w.coords2[:k]
        assert list(prefix) == sorted(prefix, reverse=True)
        assert all(c % 2 for c in w.coords2)


@pytest.mark.parametrize("k", range(2, 9))
def test_edge_recurrence(k):
    d = build_bgg(k)
    assert weights_by_recurrence(d.hasse, d.seed) == dict(d.assignment)


@pytest.mark.parametrize("k", [3, 7, 12])
def test_random_paths_match_root_arithmetic(k):
    rng = seeded(k)
    d = build_bgg(k)
    verts = list(d.assignment)
    for _ in range(200):
        v = rng.choice(verts)
        moves = random_move_sequence(v.s, v.t, rng)
        assert half_int_weight_from_moves(k, d.seed.coords2, moves) == d[v].coords2


def test_row_bundles_k3():
    bundles = row_bundles(build_bgg(3))
    assert len(bundles) == 7
    assert [len(b.summands) for b in bundles] == [1, 1, 2, 2, 2, 1, 1]
    v3 = bundles[3]
    assert [v.label for v, _ in v3.summands] == ["A31", "A33"]
    assert [w.coords2 for w in v3.weights] == [(-3, -5, -7, 1, 1), (-5, -5, -5, 3, 3)]
    assert bundles[0].weights == [canonical_seed(3)]


def test_row_bundles_counts():
    for k in range(2, 10):
        bundles = row_bundles(build_bgg(k))
        assert len(bundles) == 2 * k + 1
        assert sum(len(b.summands) for b in bundles) == (k + 1) * (k + 2) // 2
        for b in bundles:
            cols = [v.col for v, _ in b.summands]
            assert cols == sorted(cols)
            assert all(v.row == b.j for v, _ in b.summands)
    assert len(row_bundles(build_bgg(4))[4].summands) == 3


def test_zero_seed_is_de_rham_pattern():
    d = build_bgg(3, Weight.zero(3))
    # weights are minus the sum of the inversion set
    assert d[HasseVertex(1, 0)].coords2 == (0, 0, -2, 2, 0)
    assert d[HasseVertex(3, 3)].coords2 == (-4, -4, -4, 6, -6)


def test_non_dominant_seed_rejected():
    with pytest.raises(DominanceError) as info:
        build_bgg(3, Weight(3, (0, 10, 0, 0, 0)))
    assert "lambda_1 >= lambda_2" in str(info.value)
    assert info.value.violations == ("lambda_1 >= lambda_2",)


def test_seed_rank_mismatch():
    with pytest.raises(DominanceError):
        build_bgg(3, canonical_seed(4))


def test_hasse_shared():
    d = build_bgg(5)
    assert d.hasse == build_hasse(5)
    assert d.edges == d.hasse.edges
