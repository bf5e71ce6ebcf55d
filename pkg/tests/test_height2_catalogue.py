import pytest

from nilc.errors import EmptySet, HeightOutOfRange
from nilc.height2_catalogue import (
    catalogue,
    closure_maximal,
    find,
    g_closure_leq,
    g_orbit_label,
    g_orbit_of_set,
    tube_type_check,
)
from nilc.orthogonal import OrthSet
from nilc.root_system import system


def diagrams(name):
    return {(o.diagram, o.rank_r) for o in catalogue(system(name))}


def test_small_catalogues():
    assert diagrams("A2") == {((1, 1), 1)}
    assert diagrams("B3") == {((2, 0, 0), 2), ((0, 1, 0), 1)}
    assert diagrams("G2") == {((0, 1), 1)}
    assert diagrams("E8") == {((0,) * 7 + (1,), 1), ((1,) + (0,) * 7, 2)}


def test_e7_has_three_orbits():
    d = diagrams("E7")
    assert len(d) == 3 and ((0,) * 6 + (2,), 3) in d


def test_sub_ideal_chains():
    c3 = system("C3")
    o = find(c3, "h2-002")
    assert [set(p) for p in o.sub_psi] == [
        {(2, 2, 1)},
        {(2, 2, 1), (1, 2, 1), (0, 2, 1)},
        set(o.psi),
    ]
    b3 = system("B3")
    o = find(b3, "h2-200")
    assert o.sub_psi[0] == ((1, 2, 2),)


def test_orbit_invariants():
    for name in ("A5", "B4", "C4", "D5", "E6", "F4"):
        sys = system(name)
        for o in catalogue(sys):
            assert set(o.diagram) <= {0, 1, 2}
            assert sys.pair_coweight(sys.highest_root, o.h) == 2
            assert all(sys.pair_coweight(g, o.h) <= 2 for g in sys.positive_roots)
            assert tube_type_check(sys, o)
            for psi_i, g in zip(o.sub_psi, o.cascade):
                assert set(psi_i) == {a for a in o.psi if sys.dominance_leq(g, a)}


def test_closure_order_examples():
    b3 = system("B3")
    small, big = find(b3, "h2-010"), find(b3, "h2-200")
    assert g_closure_leq(small, small)
    assert g_closure_leq(small, big) == (set(small.psi) <= set(big.psi))
    c3 = system("C3")
    chain = sorted(catalogue(c3), key=lambda o: len(o.psi))
    for a, b in zip(chain, chain[1:]):
        assert g_closure_leq(a, b)


@pytest.mark.parametrize("name,count", [("A4", 1), ("B2", 1), ("B4", 2), ("B5", 2), ("D4", 3), ("D5", 2), ("D6", 3), ("E7", 1)])
def test_closure_maximal_counts(name, count):
    assert len(closure_maximal(system(name))) == count


def test_g_orbit_of_set():
    a2 = system("A2")
    assert g_orbit_of_set(a2, OrthSet.of([(1, 0)])).diagram == (1, 1)
    c2 = system("C2")
    assert g_orbit_of_set(c2, OrthSet.of([(1, 1)])) == g_orbit_of_set(c2, OrthSet.of([(2, 1), (0, 1)]))
    for name in ("B4", "E6"):
        sys = system(name)
        o = g_orbit_of_set(sys, OrthSet.of([sys.highest_root]))
        assert o.rank_r == 1 and len(o.psi) == min(len(p.psi) for p in catalogue(sys))
    assert g_orbit_label(a2, OrthSet.of([])) == "zero"
    with pytest.raises(EmptySet):
        g_orbit_of_set(a2, OrthSet.of([]))
    with pytest.raises(HeightOutOfRange):
        g_orbit_of_set(system("B3"), OrthSet.of([(1, 1, 1), (0, 1, 0)]))
