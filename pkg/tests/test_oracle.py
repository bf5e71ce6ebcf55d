import pytest

from nilc.affine_weyl import affine_group
from nilc.errors import TooLong
from nilc.height2_catalogue import catalogue
from nilc.oracle import bruhat_leq_subword, closure_leq_via_resolution, subword_interval
from nilc.orbit_poset import closure_leq_N2, ort_x
from nilc.root_system import system
from nilc.weyl import weyl_group


def test_trivial_cases():
    G = affine_group(system("A2"))
    w = G.from_word([0, 1, 2, 0])
    assert bruhat_leq_subword(G, G.identity, w)
    assert bruhat_leq_subword(G, w, w)


def test_affine_a1_example():
    G = affine_group(system("A1"))
    assert bruhat_leq_subword(G, G.gens[0], G.parse("s1 s0 s1"))


def test_interval_size_of_longest_element():
    W = weyl_group(system("B3"))
    assert len(subword_interval(W, W.longest_element(range(3)))) == 48


def test_guard():
    G = affine_group(system("A1"))
    with pytest.raises(TooLong):
        subword_interval(G, G.from_word([0, 1] * 7))


@pytest.mark.parametrize("name", ["A2", "C2"])
def test_resolution_agrees_on_small_types(name):
    sys = system(name)
    for o in catalogue(sys):
        X = ort_x(sys, o)
        for r in X:
            assert closure_leq_via_resolution(sys, o, r, r)
            for s in X:
                assert closure_leq_N2(sys, r, s) == closure_leq_via_resolution(sys, o, r, s)
