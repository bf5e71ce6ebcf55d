"""Exhaustive checks grouped into suites; shared by the CLI and the tests.

Each check returns a :class:`CheckResult`.  Checks recompute everything from
scratch through the public functions and the brute-force oracles.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .affine_weyl import AffineRoot, AffineWeylElement, affine_group
from .height2_catalogue import (
    catalogue,
    closure_maximal,
    g_orbit_of_set,
    tube_type_check,
)
from .oracle import closure_leq_via_resolution, subword_interval
from .orbit_poset import (
    F_alpha,
    F_alpha_set,
    closure_leq_N2,
    descents,
    enumerate_N2,
    enumerate_tilde,
    fiber,
    fiber_iso_check,
    ort_psi,
    ort_x,
    sigma,
    tilde_nodes,
    wp_reps,
)
from .orthogonal import (
    OrthSet,
    cascade,
    characteristic,
    enumerate_ort,
    enumerate_strongly_orthogonal,
    height,
    lattice_roots,
    weighted_dynkin,
)
from .root_system import CartanType, build, is_positive, neg
from .orbit_labels import rows as label_rows


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _types(names: str) -> list[CartanType]:
    return [CartanType.parse(t) for t in names.split()]


TABLE_TYPES = _types(
    "A1 A2 A3 A4 A5 A6 A7 A8 B2 B3 B4 B5 B6 B7 B8 C2 C3 C4 C5 C6 C7 C8 "
    "D3 D4 D5 D6 D7 D8 E6 E7 E8 F4 G2"
)
RANK_LE_4 = _types("A1 A2 A3 A4 B2 B3 B4 C2 C3 C4 D3 D4 F4 G2")
RANK_LE_3 = [ct for ct in RANK_LE_4 if ct.rank <= 3]
AFFINE_BRUHAT_TYPES = _types("A1 A2 C2")
AFFINE_RANK_LE_2 = _types("A1 A2 B2 C2 G2")


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, detail, time.perf_counter() - t0)


def _failures(bad: list, total: int, what: str) -> tuple[bool, str]:
    if bad:
        return False, f"{len(bad)}/{total} {what} failed, first: {bad[0]}"
    return True, f"{total} {what}"


# -- expected component counts ---------------------------------------------------
def expected_closure_maximal(ct: CartanType) -> int:
    """Closure-maximal height-2 orbits: 2 for B_r and odd D_r, 3 for even
    D_r, 1 otherwise, except at B2, B3 and D3 where a single orbit
    dominates."""
    if ct.letter == "B":
        return 2 if ct.rank >= 4 else 1
    if ct.letter == "D":
        if ct.rank == 3:
            return 1
        return 3 if ct.rank % 2 == 0 else 2
    return 1


# -- criteria --------------------------------------------------------------------
def check_classification() -> tuple[bool, str]:
    bad = []
    for ct in TABLE_TYPES:
        sys = build(ct)
        got = sorted((o.diagram, o.rank_r) for o in catalogue(sys))
        want = sorted((r[1], r[4]) for r in label_rows(ct))
        if got != want:
            bad.append(f"{ct}: got {got}, want {want}")
    return _failures(bad, len(TABLE_TYPES), "types")


def check_dimensions() -> tuple[bool, str]:
    bad = []
    count = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        for o in catalogue(sys):
            top = max(sigma(sys, r).L for r in ort_x(sys, o))
            count += 1
            if top != o.dim:
                bad.append(f"{ct} {o.id}: max {top} != {o.dim}")
            for p in tilde_nodes(sys, o):
                if p.admissible and p.dim != p.sigma.L:
                    bad.append(f"{ct} {o.id}: admissible pair dim {p.dim} != L {p.sigma.L}")
    return _failures(bad, count, "orbits")


def check_bruhat_affine() -> tuple[bool, str]:
    bad = []
    pairs = 0
    for ct in AFFINE_BRUHAT_TYPES:
        G = affine_group(build(ct))
        els = G.elements_up_to(8)
        for w in els:
            interval = subword_interval(G, w)
            for u in els:
                pairs += 1
                if G.bruhat_leq(u, w) != (u in interval):
                    bad.append(f"{ct}: {G.format(u)} vs {G.format(w)}")
    return _failures(bad, pairs, "affine pairs")


def check_bruhat_finite() -> tuple[bool, str]:
    bad = []
    pairs = 0
    for ct in RANK_LE_3:
        W = affine_group(build(ct)).finite
        els = W.elements()
        for w in els:
            interval = subword_interval(W, w)
            for u in els:
                pairs += 1
                if W.bruhat_leq(u, w) != (u in interval):
                    bad.append(f"{ct}: {W.format(u)} vs {W.format(w)}")
    return _failures(bad, pairs, "finite pairs")


def check_length_exhaustive() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in AFFINE_RANK_LE_2:
        G = affine_group(build(ct))
        for x in G.elements_up_to(10):
            total += 1
            if G.length(x) != G.length_by_inversions(x):
                bad.append(f"{ct}: {G.format(x)}")
    return _failures(bad, total, "elements")


def check_length_random(samples: int = 1000, seed: int = 20240601) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        G = affine_group(sys)
        W = G.finite
        for _ in range(samples):
            word = [rng.randrange(1, sys.rank + 1) for _ in range(rng.randrange(0, 3 * sys.rank * sys.rank))]
            lam = tuple(rng.randint(-3, 3) for _ in range(sys.rank))
            x = AffineWeylElement(W.from_word(word), lam)
            total += 1
            if G.length(x) != G.length_by_inversions(x):
                bad.append(f"{ct}: word {word}, lam {lam}")
    return _failures(bad, total, "random elements")


def check_closure_vs_resolution() -> tuple[bool, str]:
    bad = []
    pairs = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        for o in catalogue(sys):
            X = ort_x(sys, o)
            for r in X:
                for s in X:
                    pairs += 1
                    if closure_leq_N2(sys, r, s) != closure_leq_via_resolution(sys, o, r, s):
                        bad.append(f"{ct} {o.id}: R={r} S={s}")
    return _failures(bad, pairs, "pairs")


def _so_sets(ct: CartanType):
    return enumerate_strongly_orthogonal(build(ct))


def check_injectivity() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        seen = {}
        for s in _so_sets(ct):
            if height(sys, s) > 3:
                continue
            total += 1
            key = sigma(sys, s).element
            if key in seen:
                bad.append(f"{ct}: {seen[key]} and {s}")
            seen[key] = s
    return _failures(bad, total, "sets of height <= 3")


def check_signed_injectivity() -> tuple[bool, str]:
    """sigma is injective on the sign choices of a fixed orthogonal set."""
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        for s in _so_sets(ct):
            if not s.roots or any(not is_positive(a) for a in s.roots):
                continue
            seen = set()
            k = len(s.roots)
            for mask in range(3 ** k):
                chosen = []
                m = mask
                for a in s.roots:
                    m, d = divmod(m, 3)
                    if d == 1:
                        chosen.append(a)
                    elif d == 2:
                        chosen.append(neg(a))
                total += 1
                key = sigma(sys, OrthSet.of(chosen)).element
                if key in seen:
                    bad.append(f"{ct}: collision inside {s}")
                seen.add(key)
    return _failures(bad, total, "signed subsets")


def check_height_vs_involution() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        G = affine_group(sys)
        for s in _so_sets(ct):
            total += 1
            sg = sigma(sys, s)
            h = height(sys, s)
            if h != G.involution_height(sg) or (s.roots and not 2 <= h <= 4):
                bad.append(f"{ct}: {s}")
            if not G.is_involution(sg.element) or G.moved_rank_direct(sg.element) != len(s):
                bad.append(f"{ct}: {s} not an involution of moved rank |S|")
            if (sg.length + len(s)) % 2:
                bad.append(f"{ct}: {s} has half-integral L")
    return _failures(bad, total, "sets")


def check_lattice() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        for s in _so_sets(ct):
            total += 1
            want = set(s.roots) | {neg(a) for a in s.roots}
            if lattice_roots(sys, s) != want:
                bad.append(f"{ct}: {s}")
    return _failures(bad, total, "sets")


def _half_combinations(s: OrthSet) -> set[AffineRoot]:
    hats = [AffineRoot(a, -1) for a in s.roots]
    out = set()
    for b in hats:
        for c in hats:
            for e1 in (1, -1):
                for e2 in (1, -1):
                    fin = [e1 * x + e2 * y for x, y in zip(b.finite, c.finite)]
                    n = e1 * b.n + e2 * c.n
                    if all(v % 2 == 0 for v in fin) and n % 2 == 0:
                        out.add(AffineRoot(tuple(v // 2 for v in fin), n // 2))
    return out


def check_real_roots_window() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        G = affine_group(sys)
        for s in _so_sets(ct):
            if height(sys, s) > 3:
                continue
            total += 1
            sg = sigma(sys, s).element
            allowed = _half_combinations(s)
            for b in sys.roots:
                for n in range(-5, 6):
                    a = AffineRoot(b, n)
                    if G.act(sg, a) == -a and a not in allowed:
                        bad.append(f"{ct}: {s} negates {a}")
    return _failures(bad, total, "sets")


def check_lambda_h() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        G = affine_group(sys)
        refl = {b: G.reflection(AffineRoot(neg(b), 1)) for b in sys.roots}
        for o in catalogue(sys):
            psi = set(o.psi)
            for s in ort_psi(sys, o):
                total += 1
                sg = sigma(sys, s).element
                for b, x in refl.items():
                    if b not in psi and G.bruhat_leq(x, sg):
                        bad.append(f"{ct} {o.id}: {s} lies above s_(delta-{b})")
    return _failures(bad, total, "orthogonal subsets")


def check_moves() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        G = affine_group(sys)
        for o in catalogue(sys):
            p = enumerate_tilde(sys, o)
            index = {(q.w, q.S): k for k, q in enumerate(p.nodes)}
            minimal = p.minimal()
            for idx, node in enumerate(p.nodes):
                ds = descents(sys, o, node)
                # without a finite descent only delta - theta can lower the node
                if idx not in minimal and not ds:
                    if not node.w.is_identity or G.descent_type(0, node.sigma) == "none":
                        bad.append(f"{ct} {o.id}: node {idx} has no descent")
                for k, kind in ds:
                    total += 1
                    f = F_alpha(sys, o, node, k)
                    if not p.below[idx] >> index[(f.w, f.S)] & 1:
                        bad.append(f"{ct} {o.id}: a{k + 1} at node {idx} does not move down")
                    if f.dim != node.dim - 1:
                        bad.append(f"{ct} {o.id}: {kind} a{k + 1} at node {idx} changes L by {f.dim - node.dim}")
                    if node.admissible and not f.admissible:
                        bad.append(f"{ct} {o.id}: a{k + 1} loses admissibility at node {idx}")
                    if G.descent_type(k + 1, node.sigma) != "none":
                        want = G.circ(k + 1, node.sigma)
                        if f.sigma.element != want.element or f.sigma.moved_rank != want.moved_rank:
                            bad.append(f"{ct} {o.id}: sigma mismatch for a{k + 1} at node {idx}")
    return _failures(bad, total, "moves")


def check_counts() -> tuple[bool, str]:
    bad = []
    a1 = enumerate_N2(build(CartanType("A", 1)))
    dims = [b.dim for b in a1.nodes]
    chain = all(a1.leq(i, j) for i in range(3) for j in range(i, 3))
    if len(a1) != 3 or dims != [0, 1, 2] or not chain:
        bad.append(f"A1: {len(a1)} orbits, dims {dims}, chain {chain}")
    a2 = enumerate_N2(build(CartanType("A", 2)))
    if len(a2) != 7 or max(b.dim for b in a2.nodes) != 4:
        bad.append(f"A2: {len(a2)} orbits, top dim {max(b.dim for b in a2.nodes)}")
    for ct in TABLE_TYPES:
        got = len(closure_maximal(build(ct)))
        if got != expected_closure_maximal(ct):
            bad.append(f"{ct}: {got} closure-maximal orbits, expected {expected_closure_maximal(ct)}")
    return _failures(bad, 2 + len(TABLE_TYPES), "count checks")


# -- further invariants ------------------------------------------------------------
def check_involution_lifting() -> tuple[bool, str]:
    """For sigma < tau and a simple affine root a that is an ascent of sigma
    and a descent of tau: a o sigma <= tau and sigma <= a o tau."""
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        G = affine_group(sys)
        p = enumerate_N2(sys)
        sig = [b.sigma for b in p.nodes]
        for j in range(len(sig)):
            for i in range(len(sig)):
                if not p.below[j] >> i & 1:
                    continue
                for a in range(sys.rank + 1):
                    if G.descent_type(a, sig[i]) != "none" or G.descent_type(a, sig[j]) == "none":
                        continue
                    total += 1
                    up = G.circ(a, sig[i]).element
                    down = G.circ(a, sig[j]).element
                    if not (G.bruhat_leq(up, sig[j].element) and G.bruhat_leq(sig[i].element, down)):
                        bad.append(f"{ct}: nodes {i} < {j}, s{a}")
    return _failures(bad, total, "lifting instances")


def check_descent_types() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        G = affine_group(sys)
        for b in enumerate_N2(sys).nodes:
            sg = b.sigma
            for a in range(sys.rank + 1):
                total += 1
                kind = G.descent_type(a, sg)
                s = G.gens[a]
                commute = G.compose(s, sg.element) == G.compose(sg.element, s)
                negative = not G.act(sg.element, G.simple_roots[a]).positive
                moved = G.circ(a, sg)
                if (kind == "real") != (commute and negative):
                    bad.append(f"{ct}: {b.S} s{a} real test")
                if kind == "complex" and moved.length != sg.length - 2:
                    bad.append(f"{ct}: {b.S} s{a} complex length")
                if kind == "real" and moved.length != sg.length - 1:
                    bad.append(f"{ct}: {b.S} s{a} real length")
                if kind != "none" and moved.L != sg.L - 1:
                    bad.append(f"{ct}: {b.S} s{a} L drop")
                if G.moved_rank_direct(moved.element) != moved.moved_rank:
                    bad.append(f"{ct}: {b.S} s{a} moved rank")
    return _failures(bad, total, "descent tests")


def check_n2_moves() -> tuple[bool, str]:
    """On N2, the set move realises s_a o sigma for each finite descent."""
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        G = affine_group(sys)
        for b in enumerate_N2(sys).nodes:
            for k in range(sys.rank):
                if G.descent_type(k + 1, b.sigma) == "none":
                    continue
                total += 1
                t = F_alpha_set(sys, b.S, k)
                if sigma(sys, t) != G.circ(k + 1, b.sigma):
                    bad.append(f"{ct}: {b.S} a{k + 1}")
    return _failures(bad, total, "set moves")


def check_catalogue_structure() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in TABLE_TYPES:
        sys = build(ct)
        for o in catalogue(sys):
            total += 1
            if not tube_type_check(sys, o):
                bad.append(f"{ct} {o.id}: tube type")
            if not all(sys.is_long(g) for g in o.cascade):
                bad.append(f"{ct} {o.id}: short cascade root")
            if set(cascade(sys, list(o.psi))) != set(o.cascade):
                bad.append(f"{ct} {o.id}: cascade not reproducible")
            for a in o.psi:
                for b in sys.positive_roots:
                    if all(x <= y for x, y in zip(a, b)) and sum(x * y for x, y in zip(b, o.diagram)) == 2:
                        if b not in o.psi:
                            bad.append(f"{ct} {o.id}: Psi not closed upward")
    return _failures(bad, total, "orbits")


def check_maximal_orthogonal() -> tuple[bool, str]:
    """Maximal orthogonal subsets of Psi have characteristic h and admit no
    orthogonal extension by a positive root outside Phi_L."""
    bad = []
    total = 0
    for ct in RANK_LE_4:
        sys = build(ct)
        for o in catalogue(sys):
            outside = [b for b in sys.positive_roots if any(b[k] for k in range(sys.rank) if k not in o.delta_L)]
            subsets = ort_psi(sys, o)
            maximal = [s for s in subsets if not any(set(s.roots) < set(t.roots) for t in subsets)]
            if o.cascade_prefix(o.rank_r) not in maximal:
                bad.append(f"{ct} {o.id}: cascade not maximal")
            for s in maximal:
                total += 1
                if characteristic(sys, s) != o.h or weighted_dynkin(sys, s) != o.diagram:
                    bad.append(f"{ct} {o.id}: {s} characteristic")
                for b in outside:
                    if b not in s.roots and all(sys.inner(b, a) == 0 for a in s.roots):
                        bad.append(f"{ct} {o.id}: {s} extends by {b}")
    return _failures(bad, total, "maximal subsets")


def check_ort_x_and_fibers() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        N2 = {b.S for b in enumerate_N2(sys).nodes}
        covered = set()
        for o in catalogue(sys):
            X = ort_x(sys, o)
            covered |= set(X)
            diagrams = {weighted_dynkin(sys, o.cascade_prefix(i)) for i in range(o.rank_r + 1)}
            by_diagram = {s for s in N2 if weighted_dynkin(sys, s) in diagrams}
            if set(X) != by_diagram:
                bad.append(f"{ct} {o.id}: Ort(X) differs from the diagram description")
            adm = [p for p in tilde_nodes(sys, o) if p.admissible]
            if len(adm) != len(X):
                bad.append(f"{ct} {o.id}: {len(adm)} admissible pairs for {len(X)} sets")
            for r in X:
                total += 1
                fib = fiber(sys, o, r)
                if len({p.sigma.element for p in fib}) != 1:
                    bad.append(f"{ct} {o.id}: sigma varies on fiber of {r}")
                if not fiber_iso_check(sys, o, r):
                    bad.append(f"{ct} {o.id}: fiber of {r} not isomorphic to its flag quotient")
            if len(fiber(sys, o, OrthSet(()))) != len(wp_reps(sys, o.delta_L)):
                bad.append(f"{ct} {o.id}: fiber over the empty set")
            for s in ort_psi(sys, o):
                if s.roots and g_orbit_of_set(sys, s).diagram not in diagrams:
                    bad.append(f"{ct} {o.id}: {s} outside the closure")
        if covered != N2:
            bad.append(f"{ct}: Ort(X) sets do not cover N2")
    return _failures(bad, total, "fibers")


def check_poset_axioms() -> tuple[bool, str]:
    bad = []
    total = 0
    for ct in RANK_LE_3:
        sys = build(ct)
        posets = [enumerate_N2(sys)] + [enumerate_tilde(sys, o) for o in catalogue(sys)]
        for p in posets:
            total += 1
            n = len(p)
            for j in range(n):
                for i in range(n):
                    if p.below[j] >> i & 1:
                        if p.nodes[i].dim >= p.nodes[j].dim:
                            bad.append(f"{ct} {p.kind}: strict pair without dim drop")
                        if p.below[i] & ~p.below[j]:
                            bad.append(f"{ct} {p.kind}: not transitive")
            if len(p.minimal()) != 1:
                bad.append(f"{ct} {p.kind}: {len(p.minimal())} minimal nodes")
            if p.kind == "tilde" and len(p.maximal()) != 1:
                bad.append(f"{ct} {p.kind}: {len(p.maximal())} maximal nodes")
    return _failures(bad, total, "posets")


def check_ort_enumeration_in_types_ac() -> tuple[bool, str]:
    """In types A and C every strongly orthogonal set has height <= 2."""
    bad = []
    total = 0
    for ct in RANK_LE_4:
        if ct.letter not in "AC":
            continue
        sys = build(ct)
        for s in _so_sets(ct):
            total += 1
            if height(sys, s) > 2:
                bad.append(f"{ct}: {s}")
    return _failures(bad, total, "sets")


# -- suites ------------------------------------------------------------------------
CRITERIA: dict[str, tuple[str, Callable[[], tuple[bool, str]]]] = {
    "classification": ("catalogue matches the height-2 classification", check_classification),
    "dimensions": ("top dimension and admissible dims", check_dimensions),
    "bruhat_affine": ("lifting vs subword, affine A1 A2 C2, length <= 8", check_bruhat_affine),
    "bruhat_finite": ("lifting vs subword, finite rank <= 3", check_bruhat_finite),
    "length_exhaustive": ("peel vs inversion length, affine rank <= 2, length <= 10", check_length_exhaustive),
    "length_random": ("peel vs inversion length, 1000 random per type rank <= 4", check_length_random),
    "closure_resolution": ("N2 order vs resolution order, rank <= 3", check_closure_vs_resolution),
    "injectivity": ("S -> sigma injective on height <= 3", check_injectivity),
    "signed_injectivity": ("S -> sigma injective on sign choices", check_signed_injectivity),
    "height": ("height equals involution height", check_height_vs_involution),
    "lattice": ("integer span of S meets Phi in S and -S", check_lattice),
    "real_roots": ("negated affine roots are half-sums", check_real_roots_window),
    "lambda_h": ("reflections below sigma_S come from Psi", check_lambda_h),
    "moves": ("F moves drop L by one and keep admissibility", check_moves),
    "counts": ("desk-scale counts and components", check_counts),
    "lifting": ("lifting property for involutions", check_involution_lifting),
    "descent_types": ("real and complex descent tests", check_descent_types),
    "n2_moves": ("set moves realise s_a o sigma", check_n2_moves),
    "catalogue_structure": ("tube type, long cascade, upward closure", check_catalogue_structure),
    "maximal_orthogonal": ("maximal orthogonal subsets", check_maximal_orthogonal),
    "fibers": ("Ort(X), fibers and flag quotients", check_ort_x_and_fibers),
    "poset_axioms": ("poset axioms", check_poset_axioms),
    "types_ac": ("types A and C have no height above 2", check_ort_enumeration_in_types_ac),
}

SUITES: dict[str, list[str]] = {
    "bruhat": ["bruhat_affine", "bruhat_finite", "length_exhaustive", "length_random"],
    "catalogue": ["classification", "counts", "catalogue_structure", "maximal_orthogonal"],
    "poset": ["dimensions", "closure_resolution", "moves", "fibers", "poset_axioms"],
    "lemmas": [
        "injectivity", "signed_injectivity", "height", "lattice", "real_roots", "lambda_h",
        "lifting", "descent_types", "n2_moves", "types_ac",
    ],
}
SUITES["all"] = [name for suite in ("catalogue", "bruhat", "poset", "lemmas") for name in SUITES[suite]]


def run_check(name: str) -> CheckResult:
    label, fn = CRITERIA[name]
    return _timed(f"{name} ({label})", fn)


def run_suite(suite: str, jobs: int = 1) -> list[CheckResult]:
    names = SUITES[suite]
    if jobs <= 1:
        return [run_check(n) for n in names]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(run_check, names))
