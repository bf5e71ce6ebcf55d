from nilc.affine_weyl import AffineRoot, affine_group, parse_affine_root
from nilc.orthogonal import OrthSet
from nilc.orbit_poset import sigma
from nilc.root_system import system


def test_reflection_of_finite_root_has_no_translation():
    G = affine_group(system("A2"))
    x = G.reflection(AffineRoot((1, 0), 0))
    assert x.lam == (0, 0) and x.w == G.finite.gens[0]


def test_reflection_negates_its_root():
    G = affine_group(system("A1"))
    x = G.reflection(AffineRoot((1,), -1))
    assert G.act(x, AffineRoot((-1,), 1)) == AffineRoot((1,), -1)
    assert G.compose(x, x) == G.identity


def test_translation_action():
    G = affine_group(system("B2"))
    t = G.translation((1, -2))
    b = (1, 1)
    assert G.act(t, AffineRoot(b, 3)) == AffineRoot(b, 3 - G._pair(b, (1, -2)))


def test_inverse():
    G = affine_group(system("G2"))
    x = G.from_word([0, 1, 2, 0, 1])
    assert G.compose(x, G.inverse(x)) == G.identity


def test_lengths_affine_a1():
    G = affine_group(system("A1"))
    assert G.length(G.reflection(AffineRoot((1,), -1))) == 1
    assert G.length(G.reflection(AffineRoot((1,), 1))) == 3
    assert G.format(G.reflection(AffineRoot((1,), 1))) == "s1 s0 s1"
    for g in G.gens:
        assert G.length(g) == 1


def test_bruhat_affine_a1():
    G = affine_group(system("A1"))
    s0, s1 = G.gens
    assert G.bruhat_leq(G.identity, s0)
    assert G.bruhat_leq(s0, G.parse("s1 s0 s1"))
    assert not G.bruhat_leq(s1, s0)


def test_sigma_examples():
    sys = system("A1")
    assert sigma(sys, OrthSet.of([])).L == 0
    s = sigma(sys, OrthSet.of([(1,)]))
    assert (s.length, s.L) == (1, 1)
    s = sigma(sys, OrthSet.of([(-1,)]))
    assert (s.length, s.L) == (3, 2)


def test_descent_types():
    G = affine_group(system("A1"))
    e = sigma(G.sys, OrthSet.of([]))
    assert all(G.descent_type(i, e) == "none" for i in range(2))
    s = sigma(G.sys, OrthSet.of([(1,)]))
    assert G.descent_type(0, s) == "real"
    c2 = system("C2")
    s = sigma(c2, OrthSet.of([(2, 1), (0, 1)]))
    assert affine_group(c2).descent_type(1, s) == "real"


def test_circ():
    G = affine_group(system("A1"))
    e = sigma(G.sys, OrthSet.of([]))
    assert G.circ(0, e).element == G.gens[0]
    top = sigma(G.sys, OrthSet.of([(-1,)]))
    assert G.descent_type(0, top) == "none"
    assert G.descent_type(1, top) == "complex"
    assert G.circ(1, top).element == G.gens[0]
    c2 = system("C2")
    s = sigma(c2, OrthSet.of([(2, 1), (0, 1)]))
    assert affine_group(c2).circ(1, s) == sigma(c2, OrthSet.of([(1, 1)]))


def test_involution_height():
    a2 = system("A2")
    assert affine_group(a2).involution_height(sigma(a2, OrthSet.of([]))) == 0
    assert affine_group(a2).involution_height(sigma(a2, OrthSet.of([(1, 1)]))) == 2
    b3 = system("B3")
    s = OrthSet.of([(1, 0, 0), (1, 2, 2), (0, 0, 1)])
    assert affine_group(b3).involution_height(sigma(b3, s)) == 4


def test_parse_affine_root():
    assert parse_affine_root("1,-1 @ -2") == AffineRoot((1, -1), -2)
    assert str(AffineRoot((1, 0), 3)) == "1,0 @ 3"
