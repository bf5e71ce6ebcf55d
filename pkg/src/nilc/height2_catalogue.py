"""Height-2 nilpotent orbits, found by searching label vectors.

A candidate label vector ``a`` in {0,1,2}^n with <theta, h> = 2 is kept when
the greedy cascade of Psi = {roots of a-degree 2} has a characteristic whose
labels are exactly ``a``.  Each kept orbit carries its parabolic data, the
sub-ideal chain Psi_1 < ... < Psi_r and the reduced Levi data used for fibers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ChainMismatch, EmptySet, HeightOutOfRange, NilcError, NotInCatalogue
from .orthogonal import (
    Coweight,
    OrthSet,
    cascade,
    characteristic,
    height,
    labels,
    weighted_dynkin,
)
from .root_system import CartanType, Root, RootSystem, build, root_key
from .weyl import weyl_group


@dataclass(frozen=True)
class Height2Orbit:
    id: str
    cartan_type: CartanType
    diagram: tuple[int, ...]
    h: Coweight
    psi: tuple[Root, ...]
    phi1: tuple[Root, ...]
    delta_L: tuple[int, ...]
    cascade: tuple[Root, ...]
    delta_G0: tuple[Root, ...]
    sub_psi: tuple[tuple[Root, ...], ...]
    h_chain: tuple[Coweight, ...]
    delta_L_chain: tuple[tuple[int, ...], ...]
    delta_star: tuple[tuple[int, ...], ...]

    @property
    def rank_r(self) -> int:
        return len(self.cascade)

    @property
    def dim(self) -> int:
        """Dimension of the G-orbit: |Phi(1,h)| + 2 |Phi(2,h)|."""
        return len(self.phi1) + 2 * len(self.psi)

    @property
    def psi_min(self) -> Root:
        return self.psi[0]

    def cascade_prefix(self, i: int) -> OrthSet:
        return OrthSet.of(self.cascade[:i])


def diagram_string(diagram) -> str:
    return "".join(str(x) for x in diagram)


def orbit_id(diagram) -> str:
    return "h2-" + diagram_string(diagram)


def _degree(root: Root, a) -> int:
    return sum(x * y for x, y in zip(root, a))


def _component(sys: RootSystem, nodes: list[Root], start: Root) -> set[Root]:
    comp = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in nodes:
            if y not in comp and sys.inner(x, y) != 0:
                comp.add(y)
                stack.append(y)
    return comp


def sub_ideal_chain(sys: RootSystem, psi, chain) -> list[tuple[Root, ...]]:
    """Psi_i for i = 1..r, computed three ways and required to agree."""
    out = []
    for i in range(1, len(chain) + 1):
        g = chain[i - 1]
        by_orth = {a for a in psi if all(sys.inner(a, c) == 0 for c in chain[i:])}
        by_dom = {a for a in psi if all(x >= y for x, y in zip(a, g))}
        h_i = characteristic(sys, OrthSet.of(chain[:i]))
        by_deg = {a for a in sys.positive_roots if sys.pair_coweight(a, h_i) == 2}
        if not (by_orth == by_dom == by_deg):
            raise ChainMismatch(f"sub-ideal characterizations disagree at step {i}")
        out.append(tuple(sorted(by_dom, key=root_key)))
    if out and set(out[-1]) != set(psi):
        raise ChainMismatch("last sub-ideal differs from Psi")
    return out


def _build_orbit(sys: RootSystem, a, psi, chain) -> Height2Orbit:
    n = sys.rank
    h = characteristic(sys, OrthSet.of(chain))
    delta_L = tuple(k for k in range(n) if a[k] == 0)
    phi1 = tuple(r for r in sys.positive_roots if _degree(r, a) == 1)
    psi_sorted = tuple(sorted(psi, key=root_key))
    mins = [x for x in psi_sorted if not any(y != x and all(p <= q for p, q in zip(y, x)) for y in psi_sorted)]
    if len(mins) != 1:
        raise ChainMismatch("Psi has no unique minimal root")
    W = weyl_group(sys)
    w_L = W.longest_element(delta_L)
    if w_L.act(sys.highest_root) != mins[0]:
        raise ChainMismatch("w_L(theta) is not the minimal root of Psi")
    delta_G0 = tuple(sys.simple_roots[k] for k in delta_L) + (mins[0],)

    sub = sub_ideal_chain(sys, psi_sorted, chain)
    h_chain = [tuple([0] * n)]
    dl_chain = [tuple(range(n))]
    stars = [tuple(range(n))]
    for i in range(1, len(chain) + 1):
        h_i = characteristic(sys, OrthSet.of(chain[:i]))
        lab = labels(sys, h_i)
        assert min(lab) >= 0, "h_i must be dominant"
        dl = tuple(k for k in range(n) if lab[k] == 0)
        nodes = [sys.simple_roots[k] for k in dl] + [chain[i - 1]]
        comp = _component(sys, nodes, chain[i - 1])
        star = tuple(k for k in dl if sys.simple_roots[k] not in comp)
        h_chain.append(h_i)
        dl_chain.append(dl)
        stars.append(star)
    return Height2Orbit(
        id=orbit_id(a),
        cartan_type=sys.cartan_type,
        diagram=tuple(a),
        h=h,
        psi=psi_sorted,
        phi1=phi1,
        delta_L=delta_L,
        cascade=tuple(chain),
        delta_G0=delta_G0,
        sub_psi=tuple(sub),
        h_chain=tuple(h_chain),
        delta_L_chain=tuple(dl_chain),
        delta_star=tuple(stars),
    )


@lru_cache(maxsize=None)
def _catalogue(ct: CartanType) -> tuple[Height2Orbit, ...]:
    sys = build(ct)
    theta = sys.highest_root
    found = []
    for a in itertools.product((0, 1, 2), repeat=sys.rank):
        if _degree(theta, a) != 2:
            continue
        psi = [r for r in sys.positive_roots if _degree(r, a) == 2]
        try:
            chain = cascade(sys, psi, check_dual=False)
        except NilcError:
            continue
        if labels(sys, characteristic(sys, OrthSet.of(chain))) != a:
            continue
        # accepted: the bottom-up construction must agree
        cascade(sys, psi, check_dual=True)
        found.append(_build_orbit(sys, a, psi, chain))
    found.sort(key=lambda o: (o.rank_r, len(o.psi), o.diagram))
    return tuple(found)


def catalogue(sys: RootSystem) -> list[Height2Orbit]:
    """Height-2 orbits ordered by (rank, |Psi|, diagram)."""
    return list(_catalogue(sys.cartan_type))


def find(sys: RootSystem, orbit_id_: str) -> Height2Orbit:
    for o in catalogue(sys):
        if o.id == orbit_id_:
            return o
    raise NotInCatalogue(f"no orbit {orbit_id_!r} in type {sys.cartan_type}")


def g_closure_leq(o1: Height2Orbit, o2: Height2Orbit) -> bool:
    return set(o1.psi) <= set(o2.psi)


def closure_maximal(sys: RootSystem) -> list[Height2Orbit]:
    cat = catalogue(sys)
    return [o for o in cat if not any(p is not o and g_closure_leq(o, p) for p in cat)]


def g_orbit_of_set(sys: RootSystem, s: OrthSet) -> Height2Orbit:
    if not s.roots:
        raise EmptySet("the empty set spans the zero orbit")
    if height(sys, s) > 2:
        raise HeightOutOfRange("set has height above 2")
    d = weighted_dynkin(sys, s)
    for o in catalogue(sys):
        if o.diagram == d:
            return o
    raise NotInCatalogue(f"diagram {diagram_string(d)} not catalogued")


def g_orbit_label(sys: RootSystem, s: OrthSet) -> str:
    return "zero" if not s.roots else g_orbit_of_set(sys, s).id


def tube_type_check(sys: RootSystem, o: Height2Orbit) -> bool:
    """w_{G0} sends the minimal root of Psi to its negative."""
    W = weyl_group(sys)
    w = W.longest_for_simple_system(list(o.delta_G0))
    m = o.psi_min
    return w.act(m) == tuple(-x for x in m)
