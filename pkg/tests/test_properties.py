"""Randomised properties checked with hypothesis."""

from hypothesis import given, settings, strategies as st

from nilc.affine_weyl import affine_group
from nilc.oracle import bruhat_leq_subword
from nilc.orbit_poset import closure_leq_N2, sigma
from nilc.orthogonal import enumerate_height2_sets, enumerate_strongly_orthogonal, height, lattice_roots
from nilc.root_system import neg, system
from nilc.weyl import weyl_group

AFFINE = ["A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3"]
FINITE = ["A3", "B3", "C3", "D4", "F4", "G2"]


@st.composite
def affine_elements(draw, names=AFFINE, max_len=14):
    sys = system(draw(st.sampled_from(names)))
    G = affine_group(sys)
    word = draw(st.lists(st.integers(0, sys.rank), max_size=max_len))
    return G, G.from_word(word)


@st.composite
def finite_elements(draw):
    sys = system(draw(st.sampled_from(FINITE)))
    W = weyl_group(sys)
    word = draw(st.lists(st.integers(1, sys.rank), max_size=30))
    return W, W.from_word(word)


@given(affine_elements())
def test_lengths_agree(gx):
    G, x = gx
    word = G.reduced_word(x)
    assert G.length(x) == G.length_by_inversions(x) == len(word)
    assert G.from_word(word) == x


@given(affine_elements())
def test_inverse_and_length(gx):
    G, x = gx
    y = G.inverse(x)
    assert G.compose(x, y) == G.identity
    assert G.length(y) == G.length(x)


@given(affine_elements(max_len=4), st.data())
def test_multiplying_by_generator_changes_length_by_one(gx, data):
    G, x = gx
    i = data.draw(st.integers(0, G.rank))
    y = G.compose(x, G.gens[i])
    assert abs(G.length(y) - G.length(x)) == 1
    assert G.right_descent(x, i) == (G.length(y) < G.length(x))


@settings(max_examples=60)
@given(affine_elements(names=["A1", "A2", "C2", "G2"], max_len=9), st.data())
def test_bruhat_matches_subwords(gx, data):
    G, w = gx
    word = G.reduced_word(w)
    mask = data.draw(st.lists(st.booleans(), min_size=len(word), max_size=len(word)))
    u = G.from_word([i for i, keep in zip(word, mask) if keep])
    assert G.bruhat_leq(u, w)
    assert bruhat_leq_subword(G, u, w)
    v = G.from_word(data.draw(st.lists(st.integers(0, G.rank), max_size=9)))
    assert G.bruhat_leq(v, w) == bruhat_leq_subword(G, v, w)


@given(finite_elements(), st.data())
def test_parabolic_factorisation(wx, data):
    W, w = wx
    n = W.sys.rank
    delta_l = tuple(sorted(data.draw(st.sets(st.integers(0, n - 1)))))
    u, v = W.coset_decompose(w, delta_l)
    assert u * v == w
    assert W.length(u) + W.length(v) == W.length(w)
    assert all(not W.right_descent(u, k) for k in delta_l)


@st.composite
def so_sets(draw, names=("A3", "B3", "C3", "D4", "B4", "G2", "F4")):
    sys = system(draw(st.sampled_from(names)))
    sets = enumerate_strongly_orthogonal(sys)
    return sys, sets[draw(st.integers(0, len(sets) - 1))]


@given(so_sets())
def test_sigma_is_involution_with_integral_L(ss):
    sys, s = ss
    G = affine_group(sys)
    sg = sigma(sys, s)
    assert G.is_involution(sg.element)
    assert sg.moved_rank == len(s) == G.moved_rank_direct(sg.element)
    assert (sg.length + sg.moved_rank) % 2 == 0
    assert G.involution_height(sg) == height(sys, s)


@given(so_sets())
def test_lattice_roots_are_signed_set(ss):
    sys, s = ss
    assert lattice_roots(sys, s) == set(s.roots) | {neg(a) for a in s.roots}


@settings(max_examples=50)
@given(st.sampled_from(["A2", "C2", "B3", "A3"]), st.data())
def test_closure_order_respects_dimension(name, data):
    sys = system(name)
    sets = enumerate_height2_sets(sys)
    r = data.draw(st.sampled_from(sets))
    s = data.draw(st.sampled_from(sets))
    if closure_leq_N2(sys, r, s):
        assert sigma(sys, r).L <= sigma(sys, s).L
        if closure_leq_N2(sys, s, r):
            assert r == s


@given(so_sets())
def test_positive_subset_has_smaller_sigma(ss):
    sys, s = ss
    if height(sys, s) > 2:
        return
    G = affine_group(sys)
    for k in range(len(s)):
        sub = type(s).of(s.roots[:k] + s.roots[k + 1 :])
        assert G.bruhat_leq(sigma(sys, sub).element, sigma(sys, s).element)
