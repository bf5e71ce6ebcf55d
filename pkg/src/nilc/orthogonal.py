"""Strongly orthogonal root sets, their characteristics and heights.

A set S is stored as a canonically sorted tuple of roots.  Its
characteristic is h_S = sum of the coroots of S, a coweight written over
the simple coroots, and height(S) = max over roots g of <g, h_S>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptySet, NonUniqueMaximum, NotARoot, NotStronglyOrthogonal
from .root_system import Root, RootSystem, format_root, parse_root, root_key

Coweight = tuple[int, ...]


@dataclass(frozen=True, order=True)
class OrthSet:
    roots: tuple[Root, ...]

    @classmethod
    def of(cls, roots) -> OrthSet:
        return cls(tuple(sorted(set(roots), key=root_key)))

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __contains__(self, r) -> bool:
        return r in self.roots

    def __str__(self) -> str:
        return format_set(self)


EMPTY = OrthSet(())


def set_key(s: OrthSet):
    return (len(s.roots), tuple(root_key(r) for r in s.roots))


def format_set(s: OrthSet) -> str:
    return ";".join(format_root(r) for r in s.roots)


def parse_set(sys: RootSystem, text: str) -> OrthSet:
    text = text.strip()
    if not text or text in ("{}", "empty"):
        return EMPTY
    roots = [parse_root(tok) for tok in text.split(";") if tok.strip()]
    for r in roots:
        if len(r) != sys.rank:
            raise NotARoot(f"{format_root(r)} has the wrong number of coordinates")
    return make(sys, roots)


def make(sys: RootSystem, roots) -> OrthSet:
    """Validated constructor: checks membership and strong orthogonality."""
    roots = list(roots)
    sys.check(*roots)
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            if not sys._so(a, b):
                raise NotStronglyOrthogonal(
                    f"{format_root(a)} and {format_root(b)} are not strongly orthogonal"
                )
    return OrthSet.of(roots)


# -- characteristics -------------------------------------------------------
def characteristic(sys: RootSystem, s: OrthSet) -> Coweight:
    h = [0] * sys.rank
    for a in s.roots:
        for k, c in enumerate(sys.coroot(a)):
            h[k] += c
    return tuple(h)


def labels(sys: RootSystem, h: Coweight) -> tuple[int, ...]:
    """<a_i, h> for the simple roots a_i."""
    return tuple(sys.pair_coweight(a, h) for a in sys.simple_roots)


def height(sys: RootSystem, s: OrthSet) -> int:
    if not s.roots:
        return 0
    h = characteristic(sys, s)
    return max(sys.pair_coweight(g, h) for g in sys.roots)


def dominant_conjugate(sys: RootSystem, h: Coweight) -> Coweight:
    """Apply s_i (lowest index first) while some <a_i, h> is negative."""
    h = list(h)
    n = sys.rank
    while True:
        lab = labels(sys, h)
        i = next((k for k in range(n) if lab[k] < 0), None)
        if i is None:
            return tuple(h)
        h[i] -= lab[i]


def weighted_dynkin(sys: RootSystem, s: OrthSet) -> tuple[int, ...]:
    return labels(sys, dominant_conjugate(sys, characteristic(sys, s)))


def rank_G(sys: RootSystem, s: OrthSet) -> int:
    return sum(1 if sys.is_long(a) else 2 for a in s.roots)


# -- cascade ---------------------------------------------------------------
def _unique_extreme(candidates, maximal: bool) -> Root:
    def below(a, b):
        return a != b and all(x <= y for x, y in zip(a, b))

    if maximal:
        ext = [a for a in candidates if not any(below(a, b) for b in candidates)]
    else:
        ext = [a for a in candidates if not any(below(b, a) for b in candidates)]
    if len(ext) != 1:
        kind = "maximal" if maximal else "minimal"
        raise NonUniqueMaximum(f"{len(ext)} {kind} candidates in cascade step")
    return ext[0]


def _greedy_chain(sys: RootSystem, psi, maximal: bool) -> list[Root]:
    chain: list[Root] = []
    cand = list(psi)
    while cand:
        g = _unique_extreme(cand, maximal)
        chain.append(g)
        cand = [a for a in cand if a != g and sys.inner(a, g) == 0]
    return chain


def cascade(sys: RootSystem, psi, check_dual: bool = True) -> list[Root]:
    """Greedy chain of maximal pairwise orthogonal roots in ``psi``,
    returned in decreasing order.  With ``check_dual`` the minimal-first
    construction is also run and must give the same set."""
    if not psi:
        raise EmptySet("cascade of an empty root set")
    chain = _greedy_chain(sys, psi, maximal=True)
    if check_dual:
        dual = _greedy_chain(sys, psi, maximal=False)
        if set(dual) != set(chain):
            raise NonUniqueMaximum("top-down and bottom-up cascades differ")
    return chain


# -- enumerations ----------------------------------------------------------
def _backtrack(pool, compatible):
    out = []

    def rec(start, current):
        out.append(OrthSet.of(current))
        for k in range(start, len(pool)):
            a = pool[k]
            if all(compatible(a, b) for b in current):
                current.append(a)
                rec(k + 1, current)
                current.pop()

    rec(0, [])
    out.sort(key=set_key)
    return out


def enumerate_ort(sys: RootSystem, psi) -> list[OrthSet]:
    """All pairwise orthogonal subsets of ``psi`` (including the empty set)."""
    pool = sorted(psi, key=root_key)
    return _backtrack(pool, lambda a, b: sys.inner(a, b) == 0)


def enumerate_strongly_orthogonal(sys: RootSystem) -> list[OrthSet]:
    return _backtrack(list(sys.roots), sys._so)


def enumerate_height2_sets(sys: RootSystem) -> list[OrthSet]:
    """All strongly orthogonal S in Phi with height(S) <= 2.  No pruning on
    height: it is not monotone under adding roots."""
    return [s for s in enumerate_strongly_orthogonal(sys) if height(sys, s) <= 2]


def lattice_roots(sys: RootSystem, s: OrthSet) -> set[Root]:
    """Roots lying in the integer span of S (S orthogonal)."""
    out = set()
    for b in sys.roots:
        coeffs = [Fraction(sys.inner(b, a), sys.sq_length(a)) for a in s.roots]
        if any(c.denominator != 1 for c in coeffs):
            continue
        rebuilt = [0] * sys.rank
        for c, a in zip(coeffs, s.roots):
            for k in range(sys.rank):
                rebuilt[k] += int(c) * a[k]
        if tuple(rebuilt) == b:
            out.add(b)
    return out
