"""Brute-force cross-checks, independent of the main recursions."""

from __future__ import annotations

from .affine_weyl import AffineWeylGroup, affine_group
from .errors import TooLong
from .height2_catalogue import Height2Orbit
from .orbit_poset import admissible_pair, fiber
from .orthogonal import OrthSet
from .root_system import RootSystem
from .weyl import WeylGroup, weyl_group

MAX_SUBWORD_LENGTH = 12


def subword_interval(group: WeylGroup | AffineWeylGroup, w) -> set:
    """All products of subwords of one reduced word of w.

    This set is exactly the Bruhat interval below w, so a forward sweep
    over the word collects it.
    """
    if isinstance(group, AffineWeylGroup):
        word = group.reduced_word(w)

        def mul(x, i):
            return group.compose(x, group.gens[i])
    else:
        word = [i - 1 for i in group.reduced_word(w)]

        def mul(x, i):
            return x * group.gens[i]

    if len(word) > MAX_SUBWORD_LENGTH:
        raise TooLong(f"reduced word of length {len(word)} exceeds {MAX_SUBWORD_LENGTH}")
    reach = {group.identity}
    for i in word:
        reach |= {mul(x, i) for x in reach}
    return reach


def bruhat_leq_subword(group: WeylGroup | AffineWeylGroup, u, w) -> bool:
    return u in subword_interval(group, w)


def closure_leq_via_resolution(sys: RootSystem, o: Height2Orbit, r: OrthSet, s: OrthSet) -> bool:
    """Some fiber member over R lies below the admissible pair of S in the
    order on the resolution."""
    W = weyl_group(sys)
    G = affine_group(sys)
    top = admissible_pair(sys, o, s)
    return any(
        W.bruhat_leq(p.w, top.w) and G.bruhat_leq(p.sigma.element, top.sigma.element)
        for p in fiber(sys, o, r)
    )

