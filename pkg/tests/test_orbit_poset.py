import pytest

from nilc.errors import HeightOutOfRange, NotADescent, NotInOrtX
from nilc.height2_catalogue import find
from nilc.orbit_poset import (
    F_alpha,
    admissible_pair,
    closure_leq_N2,
    descents,
    enumerate_N2,
    enumerate_tilde,
    fiber,
    fiber_iso_check,
    find_node,
    from_json,
    hasse,
    is_admissible,
    ort_x,
    same_poset,
    to_dot,
    to_json,
)
from nilc.orthogonal import OrthSet, enumerate_height2_sets
from nilc.root_system import system
from nilc.weyl import weyl_group

E = OrthSet.of([])


def S(*roots):
    return OrthSet.of(roots)


def test_a1_n2_is_a_chain():
    p = enumerate_N2(system("A1"))
    assert [n.dim for n in p.nodes] == [0, 1, 2]
    assert p.covers == [(0, 1), (1, 2)]
    assert len(hasse(p)) == 2


def test_a2_n2():
    sys = system("A2")
    p = enumerate_N2(sys)
    assert len(p) == 7
    assert max(n.dim for n in p.nodes) == 4
    assert p.nodes[0].g_orbit == "zero" and p.nodes[0].dim == 0


def test_c2_n2_counts_match_sets():
    sys = system("C2")
    assert len(enumerate_N2(sys)) == len(enumerate_height2_sets(sys))


def test_closure_examples():
    a1 = system("A1")
    assert closure_leq_N2(a1, E, S((1,)))
    assert closure_leq_N2(a1, S((1,)), S((-1,)))
    a2 = system("A2")
    assert not closure_leq_N2(a2, S((1, 0)), S((0, 1)))
    with pytest.raises(HeightOutOfRange):
        closure_leq_N2(system("B3"), E, S((1, 1, 1), (0, 1, 0)))


def test_a2_resolution():
    sys = system("A2")
    o = find(sys, "h2-11")
    p = enumerate_tilde(sys, o)
    assert len(p) == 12
    assert p.minimal() == [0] and p.nodes[0].dim == 0
    (top,) = p.maximal()
    assert p.nodes[top].dim == 4


def test_admissible_pairs():
    sys = system("A2")
    W = weyl_group(sys)
    o = find(sys, "h2-11")
    theta = S((1, 1))
    assert admissible_pair(sys, o, theta).w == W.identity
    p = admissible_pair(sys, o, S((1, 0)))
    assert (W.format(p.w), p.S) == ("s2", theta)
    p = admissible_pair(sys, o, S((-1, -1)))
    assert (W.length(p.w), p.S) == (3, theta)
    assert is_admissible(sys, o, p.w, p.S)


def test_fibers():
    sys = system("A2")
    o = find(sys, "h2-11")
    assert len(fiber(sys, o, E)) == 6
    assert len(fiber(sys, o, S((1, 1)))) == 1
    for r in ort_x(sys, o):
        assert fiber_iso_check(sys, o, r)
    with pytest.raises(NotInOrtX):
        fiber(system("C2"), find(system("C2"), "h2-10"), S((1, 0)))


def test_descents_and_moves():
    c2 = system("C2")
    o = find(c2, "h2-02")
    p = enumerate_tilde(c2, o)
    W = weyl_group(c2)
    node = p.nodes[find_node(p, W.identity, S((2, 1), (0, 1)))]
    assert (0, "internal-real") in descents(c2, o, node)
    f = F_alpha(c2, o, node, 0)
    assert (f.w, f.S) == (W.identity, S((1, 1)))
    assert not descents(c2, o, p.nodes[0])
    with pytest.raises(NotADescent):
        F_alpha(c2, o, p.nodes[0], 0)

    a2 = system("A2")
    o = find(a2, "h2-11")
    Wa = weyl_group(a2)
    s2 = Wa.gens[1]
    q = admissible_pair(a2, o, S((1, 0)))
    assert (1, "external") in descents(a2, o, q)
    f = F_alpha(a2, o, q, 1)
    assert (f.w, f.S) == (Wa.identity, S((1, 1)))
    assert q.w == s2

    c3 = system("C3")
    o = find(c3, "h2-002")
    W3 = weyl_group(c3)
    q = admissible_pair(c3, o, S((0, 2, 1)))
    assert (0, "internal-complex") in descents(c3, o, q)
    f = F_alpha(c3, o, q, 0)
    assert (f.w, f.S) == (W3.identity, S((2, 2, 1)))
    assert f.sigma.L == q.sigma.L - 1


def test_json_roundtrip_and_dot():
    for name, oid in (("A2", None), ("C2", "h2-02"), ("B3", "h2-010")):
        sys = system(name)
        p = enumerate_tilde(sys, find(sys, oid)) if oid else enumerate_N2(sys)
        text = to_json(sys, p)
        q = from_json(text)
        assert same_poset(p, q)
        assert to_json(sys, q) == text
        assert to_dot(sys, p).count("->") == len(p.covers)
