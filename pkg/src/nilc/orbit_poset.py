"""B-orbits in the height-2 locus and in the resolutions of its orbit
closures, with closure order, dimensions, fibers and descent moves.

Orbits of B on N2 are indexed by strongly orthogonal sets S of height <= 2;
R lies in the closure of S exactly when sigma_R <= sigma_S in the affine
Bruhat order.  For an orbit closure X with abelian ideal Psi, orbits on the
resolution are pairs (w, S) with w in W^P and S an orthogonal subset of Psi.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .affine_weyl import AffineInvolution, affine_group
from .errors import HeightOutOfRange, NotADescent, NotInOrtX
from .height2_catalogue import Height2Orbit, catalogue, g_orbit_label
from .orthogonal import (
    OrthSet,
    enumerate_height2_sets,
    enumerate_ort,
    height,
    set_key,
    weighted_dynkin,
)
from .root_system import CartanType, Root, RootSystem, build, is_positive
from .weyl import WeylElement, weyl_group


@dataclass(frozen=True)
class BOrbit:
    S: OrthSet
    sigma: AffineInvolution
    dim: int
    g_orbit: str


@dataclass(frozen=True)
class TildePair:
    w: WeylElement
    S: OrthSet
    sigma: AffineInvolution  # sigma of w(S)
    dim: int  # l(w) + L(sigma_S)
    admissible: bool

    @property
    def image(self) -> OrthSet:
        return OrthSet.of(self.w.act(a) for a in self.S.roots)


@dataclass
class OrbitPoset:
    """Nodes sorted by (dim, canonical key), with strict-order bitsets.

    ``below[j]`` has bit i set when node i lies strictly below node j.
    """

    kind: str
    cartan_type: CartanType
    nodes: list
    ids: list[str]
    below: list[int] = field(repr=False)
    covers: list[tuple[int, int]] = field(default_factory=list)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.below[j] >> i & 1)

    def __len__(self) -> int:
        return len(self.nodes)

    def maximal(self) -> list[int]:
        n = len(self.nodes)
        dominated = 0
        for j in range(n):
            dominated |= self.below[j]
        return [i for i in range(n) if not dominated >> i & 1]

    def minimal(self) -> list[int]:
        return [j for j in range(len(self.nodes)) if self.below[j] == 0]


def _build_poset(kind, ct, nodes, ids, dims, leq: Callable[[int, int], bool]) -> OrbitPoset:
    n = len(nodes)
    below = [0] * n
    for j in range(n):
        bits = 0
        for i in range(n):
            if dims[i] < dims[j] and leq(i, j):
                bits |= 1 << i
        below[j] = bits
    p = OrbitPoset(kind, ct, nodes, ids, below)
    p.covers = hasse(p)
    return p


def hasse(p: OrbitPoset) -> list[tuple[int, int]]:
    """Cover relations: i < j with nothing strictly between."""
    out = []
    for j, bits in enumerate(p.below):
        through = 0
        i = 0
        b = bits
        while b:
            if b & 1:
                through |= p.below[i]
            b >>= 1
            i += 1
        direct = bits & ~through
        i = 0
        while direct:
            if direct & 1:
                out.append((i, j))
            direct >>= 1
            i += 1
    return sorted(out)


# -- N2 ---------------------------------------------------------------------
def sigma(sys: RootSystem, s: OrthSet) -> AffineInvolution:
    return affine_group(sys).sigma_of_set(s.roots)


def b_orbit(sys: RootSystem, s: OrthSet) -> BOrbit:
    sg = sigma(sys, s)
    return BOrbit(s, sg, sg.L, g_orbit_label(sys, s))


@lru_cache(maxsize=None)
def _n2(ct: CartanType) -> OrbitPoset:
    sys = build(ct)
    G = affine_group(sys)
    orbits = [b_orbit(sys, s) for s in enumerate_height2_sets(sys)]
    orbits.sort(key=lambda b: (b.dim, set_key(b.S)))
    ids = [f"b{k}" for k in range(len(orbits))]
    return _build_poset(
        "N2",
        ct,
        orbits,
        ids,
        [b.dim for b in orbits],
        lambda i, j: G.bruhat_leq(orbits[i].sigma.element, orbits[j].sigma.element),
    )


def enumerate_N2(sys: RootSystem) -> OrbitPoset:
    return _n2(sys.cartan_type)


def closure_leq_N2(sys: RootSystem, r: OrthSet, s: OrthSet) -> bool:
    """B e_R lies in the closure of B e_S (both of height <= 2)."""
    for x in (r, s):
        if height(sys, x) > 2:
            raise HeightOutOfRange(f"set {x} has height {height(sys, x)}")
    G = affine_group(sys)
    return G.bruhat_leq(sigma(sys, r).element, sigma(sys, s).element)


# -- resolution -------------------------------------------------------------
def _image(w: WeylElement, s: OrthSet) -> OrthSet:
    return OrthSet.of(w.act(a) for a in s.roots)


def _preimage(w: WeylElement, s: OrthSet) -> OrthSet:
    return OrthSet.of(w.act_inverse(a) for a in s.roots)


@lru_cache(maxsize=None)
def _wp(ct: CartanType, delta_l: tuple[int, ...]) -> tuple[WeylElement, ...]:
    return tuple(weyl_group(build(ct)).min_coset_reps(delta_l))


def wp_reps(sys: RootSystem, delta_l) -> tuple[WeylElement, ...]:
    return _wp(sys.cartan_type, tuple(delta_l))


@lru_cache(maxsize=None)
def _ort_psi(ct: CartanType, psi: tuple[Root, ...]) -> tuple[OrthSet, ...]:
    return tuple(enumerate_ort(build(ct), psi))


def ort_psi(sys: RootSystem, o: Height2Orbit) -> tuple[OrthSet, ...]:
    return _ort_psi(sys.cartan_type, o.psi)


@lru_cache(maxsize=None)
def _ort_x(ct: CartanType, oid: str) -> tuple[OrthSet, ...]:
    sys = build(ct)
    o = next(x for x in catalogue(sys) if x.id == oid)
    found = {_image(w, s) for w in wp_reps(sys, o.delta_L) for s in ort_psi(sys, o)}
    return tuple(sorted(found, key=set_key))


def ort_x(sys: RootSystem, o: Height2Orbit) -> tuple[OrthSet, ...]:
    """Sets R with w^-1(R) in Ort(Psi) for some w in W^P."""
    return _ort_x(sys.cartan_type, o.id)


def fiber(sys: RootSystem, o: Height2Orbit, r: OrthSet) -> list[TildePair]:
    """All pairs (w, w^-1 R) with w in W^P and w^-1 R inside Psi, sorted by
    length of w; the first one is admissible."""
    psi = set(o.psi)
    W = weyl_group(sys)
    members = []
    for w in wp_reps(sys, o.delta_L):
        s = _preimage(w, r)
        if all(a in psi for a in s.roots):
            members.append((w, s))
    if not members:
        raise NotInOrtX(f"{r} is not in Ort(X) for {o.id}")
    members.sort(key=lambda m: (W.length(m[0]), W.reduced_word(m[0])))
    lmin = W.length(members[0][0])
    if len(members) > 1:
        assert W.length(members[1][0]) > lmin, "admissible pair must be unique"
    return [_pair(sys, w, s, k == 0) for k, (w, s) in enumerate(members)]


def _pair(sys: RootSystem, w: WeylElement, s: OrthSet, admissible: bool) -> TildePair:
    W = weyl_group(sys)
    return TildePair(w, s, sigma(sys, _image(w, s)), W.length(w) + sigma(sys, s).L, admissible)


def admissible_pair(sys: RootSystem, o: Height2Orbit, r: OrthSet) -> TildePair:
    return fiber(sys, o, r)[0]


def is_admissible(sys: RootSystem, o: Height2Orbit, w: WeylElement, s: OrthSet) -> bool:
    first = admissible_pair(sys, o, _image(w, s))
    return first.w == w


def tilde_leq(sys: RootSystem, p: TildePair, q: TildePair) -> bool:
    W = weyl_group(sys)
    G = affine_group(sys)
    return W.bruhat_leq(p.w, q.w) and G.bruhat_leq(p.sigma.element, q.sigma.element)


@lru_cache(maxsize=None)
def _tilde_nodes(ct: CartanType, oid: str) -> tuple[TildePair, ...]:
    sys = build(ct)
    W = weyl_group(sys)
    o = next(x for x in catalogue(sys) if x.id == oid)
    pairs = []
    adm = {}
    for w in wp_reps(sys, o.delta_L):
        for s in ort_psi(sys, o):
            img = _image(w, s)
            key = (W.length(w), W.reduced_word(w))
            if img not in adm or key < adm[img][0]:
                adm[img] = (key, w)
            pairs.append((w, s))
    nodes = [_pair(sys, w, s, adm[_image(w, s)][1] == w) for w, s in pairs]
    nodes.sort(key=lambda p: (p.dim, W.length(p.w), W.reduced_word(p.w), set_key(p.S)))
    return tuple(nodes)


def tilde_nodes(sys: RootSystem, o: Height2Orbit) -> tuple[TildePair, ...]:
    """All pairs (w, S) in W^P x Ort(Psi), without computing the order."""
    return _tilde_nodes(sys.cartan_type, o.id)


@lru_cache(maxsize=None)
def _tilde(ct: CartanType, oid: str) -> OrbitPoset:
    sys = build(ct)
    o = next(x for x in catalogue(sys) if x.id == oid)
    nodes = list(tilde_nodes(sys, o))
    ids = [f"t{k}" for k in range(len(nodes))]
    return _build_poset(
        "tilde", ct, nodes, ids, [p.dim for p in nodes],
        lambda i, j: tilde_leq(sys, nodes[i], nodes[j]),
    )


def enumerate_tilde(sys: RootSystem, o: Height2Orbit) -> OrbitPoset:
    """Orbits of B on G x_P Psi, indexed by W^P x Ort(Psi)."""
    return _tilde(sys.cartan_type, o.id)


def find_node(p: OrbitPoset, w: WeylElement, s: OrthSet) -> int:
    for k, node in enumerate(p.nodes):
        if node.w == w and node.S == s:
            return k
    raise NotInOrtX("pair not in the poset")


# -- fibers as flag varieties --------------------------------------------------
def g_orbit_index(sys: RootSystem, o: Height2Orbit, r: OrthSet) -> int:
    """The i with e_R in G e_i, where e_i is the sum over the first i
    cascade roots."""
    d = weighted_dynkin(sys, r)
    for i in range(o.rank_r + 1):
        if weighted_dynkin(sys, o.cascade_prefix(i)) == d:
            return i
    raise NotInOrtX(f"{r} is not in Ort(X) for {o.id}")


def fiber_iso_check(sys: RootSystem, o: Height2Orbit, r: OrthSet) -> bool:
    """Compare the fiber over R with the quotient W_{L*_i} / W_{L*_i cap L}
    under u -> ((wu)^P, (wu)_P(S))."""
    W = weyl_group(sys)
    fib = fiber(sys, o, r)
    i = g_orbit_index(sys, o, r)
    psi_i = set(o.sub_psi[i - 1]) if i else set()
    base = [
        (w, _preimage(w, r))
        for w in wp_reps(sys, o.delta_L_chain[i])
        if all(a in psi_i for a in _preimage(w, r).roots)
    ]
    if len(base) != 1:
        return False
    w, s = base[0]
    star = o.delta_star[i]
    star_l = tuple(k for k in star if k in o.delta_L)
    reps = [u for u in W.generated(star) if all(is_positive(u.mat[k]) for k in star_l)]
    if len(reps) != len(fib):
        return False
    images = []
    for u in reps:
        a, b = W.coset_decompose(w * u, o.delta_L)
        images.append((a, _image(b, s)))
    by_key = {(p.w, p.S): p for p in fib}
    if len(set(images)) != len(images) or set(images) != set(by_key):
        return False
    targets = [by_key[x] for x in images]
    for x, px in zip(reps, targets):
        for y, py in zip(reps, targets):
            if W.bruhat_leq(x, y) != tilde_leq(sys, px, py):
                return False
    return True


# -- descents and moves -------------------------------------------------------
def descents(sys: RootSystem, o: Height2Orbit, p: TildePair) -> list[tuple[int, str]]:
    """(simple root index, kind) for each descent of the pair; indices are
    0-based over the finite simple roots."""
    W = weyl_group(sys)
    G = affine_group(sys)
    out = []
    for k in range(sys.rank):
        if W.left_descent(p.w, k):
            out.append((k, "external"))
            continue
        kind = G.descent_type(k + 1, p.sigma)
        if kind != "none":
            beta = p.w.act_inverse(sys.simple_roots[k])
            assert any(beta == sys.simple_roots[j] for j in o.delta_L), (
                "internal descent must pull back to a simple root of L"
            )
            out.append((k, f"internal-{kind}"))
    return out


def _real_move(sys: RootSystem, s: OrthSet, beta: Root) -> OrthSet:
    """(S minus {g1, g2}) plus {beta + g2}, where 2 beta = g1 - g2."""
    for g1 in s.roots:
        for g2 in s.roots:
            if g1 != g2 and all(2 * b == x - y for b, x, y in zip(beta, g1, g2)):
                rest = [a for a in s.roots if a not in (g1, g2)]
                return OrthSet.of(rest + [tuple(b + y for b, y in zip(beta, g2))])
    raise NotADescent("no pair of roots with half-difference beta")


def F_alpha(sys: RootSystem, o: Height2Orbit, p: TildePair, k: int) -> TildePair:
    kinds = dict(descents(sys, o, p))
    if k not in kinds:
        raise NotADescent(f"a{k + 1} is not a descent")
    W = weyl_group(sys)
    kind = kinds[k]
    if kind == "external":
        w, s = W.gens[k] * p.w, p.S
    else:
        beta = p.w.act_inverse(sys.simple_roots[k])
        w = p.w
        if kind == "internal-complex":
            s = OrthSet.of(sys.reflect(beta, a) for a in p.S.roots)
        else:
            s = _real_move(sys, p.S, beta)
    return _pair(sys, w, s, is_admissible(sys, o, w, s))


def F_alpha_set(sys: RootSystem, s: OrthSet, k: int) -> OrthSet:
    """The move on N2: s_a(S) on a complex descent, the half-difference
    replacement on a real one."""
    G = affine_group(sys)
    kind = G.descent_type(k + 1, sigma(sys, s))
    if kind == "none":
        raise NotADescent(f"a{k + 1} is not a descent")
    alpha = sys.simple_roots[k]
    if kind == "complex":
        return OrthSet.of(sys.reflect(alpha, a) for a in s.roots)
    return _real_move(sys, s, alpha)


# -- export -----------------------------------------------------------------
def _roots_json(s: OrthSet):
    return [list(r) for r in s.roots]


def to_dict(sys: RootSystem, p: OrbitPoset) -> dict:
    G = affine_group(sys)
    W = weyl_group(sys)
    nodes = []
    for pid, node in zip(p.ids, p.nodes):
        d = {
            "id": pid,
            "roots": _roots_json(node.S),
            "dim": node.dim,
            "sigma_word": G.format(node.sigma.element),
        }
        if isinstance(node, BOrbit):
            d["g_orbit"] = node.g_orbit
        else:
            d["g_orbit"] = g_orbit_label(sys, node.image)
            d["w_word"] = W.format(node.w)
            d["admissible"] = node.admissible
        nodes.append(d)
    return {
        "system": {"type": p.cartan_type.letter, "rank": p.cartan_type.rank},
        "kind": p.kind,
        "nodes": nodes,
        "covers": [[p.ids[i], p.ids[j]] for i, j in p.covers],
    }


def to_json(sys: RootSystem, p: OrbitPoset) -> str:
    return json.dumps(to_dict(sys, p), indent=1, sort_keys=True)


def from_json(text: str) -> OrbitPoset:
    """Rebuild a poset from its JSON form, recomputing node data from the
    roots and words and the order from the covers."""
    data = json.loads(text)
    ct = CartanType(data["system"]["type"], data["system"]["rank"])
    sys = build(ct)
    W = weyl_group(sys)
    nodes = []
    ids = []
    for d in data["nodes"]:
        s = OrthSet.of(tuple(r) for r in d["roots"])
        if "w_word" in d:
            w = W.parse(d["w_word"])
            nodes.append(_pair(sys, w, s, bool(d["admissible"])))
        else:
            nodes.append(b_orbit(sys, s))
        ids.append(d["id"])
    index = {pid: k for k, pid in enumerate(ids)}
    covers = sorted((index[a], index[b]) for a, b in data["covers"])
    n = len(nodes)
    below = [0] * n
    up = [[] for _ in range(n)]
    for i, j in covers:
        up[j].append(i)
    for j in range(n):  # covers go from lower to higher index
        for i in up[j]:
            below[j] |= (1 << i) | below[i]
    return OrbitPoset(data.get("kind", "N2"), ct, nodes, ids, below, covers)


def to_dot(sys: RootSystem, p: OrbitPoset) -> str:
    lines = ["digraph poset {", "  rankdir=BT;"]
    by_dim: dict[int, list[str]] = {}
    for pid, node in zip(p.ids, p.nodes):
        lines.append(f'  {pid} [label="{pid}\\n{node.dim}"];')
        by_dim.setdefault(node.dim, []).append(pid)
    for d in sorted(by_dim):
        lines.append("  { rank=same; " + " ".join(by_dim[d]) + "; }")
    for i, j in p.covers:
        lines.append(f"  {p.ids[i]} -> {p.ids[j]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def same_poset(a: OrbitPoset, b: OrbitPoset) -> bool:
    return (
        a.kind == b.kind
        and a.cartan_type == b.cartan_type
        and a.ids == b.ids
        and a.nodes == b.nodes
        and a.covers == b.covers
        and a.below == b.below
    )
