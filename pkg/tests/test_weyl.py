from math import factorial

import pytest

from nilc.root_system import system
from nilc.weyl import weyl_group


def test_simple_reflections():
    sys = system("A2")
    W = weyl_group(sys)
    s1 = W.gens[0]
    assert s1.act((1, 0)) == (-1, 0)
    assert s1.act((0, 1)) == (1, 1)
    assert (s1 * s1).is_identity


def test_lengths():
    W = weyl_group(system("A2"))
    assert W.length(W.identity) == 0
    assert W.length(W.gens[0]) == 1
    assert W.length(W.longest_element(range(2))) == 3


@pytest.mark.parametrize("name,order", [("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)])
def test_group_orders(name, order):
    assert len(weyl_group(system(name)).elements()) == order


def test_bruhat_examples():
    W = weyl_group(system("A2"))
    s1, s2 = W.gens
    assert W.bruhat_leq(W.identity, s1 * s2)
    assert W.bruhat_leq(s1, s1 * s2)
    assert not W.bruhat_leq(s1, s2)


def test_parabolic_quotients():
    W = weyl_group(system("A2"))
    assert len(W.min_coset_reps(())) == 6
    assert W.min_coset_reps((0, 1)) == [W.identity]
    assert len(W.min_coset_reps((0,))) == 3
    assert W.longest_element((0, 1)) == W.longest_element(range(2))


def test_coset_decomposition_lengths_add():
    W = weyl_group(system("B3"))
    for w in W.elements():
        u, v = W.coset_decompose(w, (1, 2))
        assert u * v == w
        assert W.length(u) + W.length(v) == W.length(w)


def test_every_element_permutes_roots():
    sys = system("G2")
    W = weyl_group(sys)
    roots = set(sys.roots)
    for w in W.elements():
        assert {w.act(r) for r in roots} == roots
        assert (w * w.inverse()).is_identity


def test_word_roundtrip():
    W = weyl_group(system("C3"))
    for w in W.elements():
        assert W.parse(W.format(w)) == w
        assert len(W.reduced_word(w)) == W.length(w) == len(W.inversions(w))


def test_type_a_order_is_factorial():
    assert len(weyl_group(system("A4")).elements()) == factorial(5)
