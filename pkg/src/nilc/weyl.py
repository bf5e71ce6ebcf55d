"""Finite Weyl groups: elements as integer matrices, length, Bruhat order,
parabolic subgroups and minimal coset representatives.

An element stores four integer matrices as tuples of columns: its action
on simple-root coordinates and on simple-coroot coordinates, and the same
two for its inverse.  Equality and hashing only look at ``mat``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .root_system import CartanType, Root, RootSystem, build, is_positive

Matrix = tuple[tuple[int, ...], ...]


def apply(cols: Matrix, v) -> tuple[int, ...]:
    n = len(cols)
    out = [0] * n
    for i, c in enumerate(v):
        if c:
            col = cols[i]
            for k in range(n):
                out[k] += c * col[k]
    return tuple(out)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(apply(a, col) for col in b)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    mat: Matrix
    inv: Matrix = field(compare=False, repr=False)
    comat: Matrix = field(compare=False, repr=False)
    coinv: Matrix = field(compare=False, repr=False)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(
            matmul(self.mat, other.mat),
            matmul(other.inv, self.inv),
            matmul(self.comat, other.comat),
            matmul(other.coinv, self.coinv),
        )

    def inverse(self) -> WeylElement:
        return WeylElement(self.inv, self.mat, self.coinv, self.comat)

    def act(self, r) -> tuple[int, ...]:
        return apply(self.mat, r)

    def act_inverse(self, r) -> tuple[int, ...]:
        return apply(self.inv, r)

    def act_coweight(self, lam) -> tuple[int, ...]:
        return apply(self.comat, lam)

    def act_inverse_coweight(self, lam) -> tuple[int, ...]:
        return apply(self.coinv, lam)

    @cached_property
    def is_identity(self) -> bool:
        n = len(self.mat)
        return self.mat == identity_matrix(n)


class WeylGroup:
    """The Weyl group of a root system, with per-instance memo tables.

    The memo dictionaries are only ever extended with deterministic values,
    so concurrent callers at worst recompute an entry.
    """

    def __init__(self, sys: RootSystem):
        self.sys = sys
        n = self.rank = sys.rank
        ident = identity_matrix(n)
        self.identity = WeylElement(ident, ident, ident, ident)
        gens = []
        for i in range(n):
            mat = tuple(sys.simple_reflect(i, sys.simple_roots[j]) for j in range(n))
            # on coroots: s_i(a_j^vee) = a_j^vee - <a_i, a_j^vee> a_i^vee
            comat = tuple(
                tuple(int(k == j) - (sys.cartan[i][j] if k == i else 0) for k in range(n))
                for j in range(n)
            )
            gens.append(WeylElement(mat, mat, comat, comat))
        self.gens: tuple[WeylElement, ...] = tuple(gens)
        self._bruhat_memo: dict = {}
        self._length_memo: dict = {}

    # -- elementary operations -------------------------------------------
    def reflection(self, alpha: Root) -> WeylElement:
        """s_alpha as an element of W."""
        self.sys.check(alpha)
        sys = self.sys
        n = self.rank
        mat = tuple(sys.reflect(alpha, sys.simple_roots[j]) for j in range(n))
        cor = sys.coroot(alpha)
        comat = []
        for j in range(n):
            c = sys.cartan  # <alpha, a_j^vee> = sum_k alpha_k cartan[k][j]
            p = sum(alpha[k] * c[k][j] for k in range(n))
            comat.append(tuple(int(k == j) - p * cor[k] for k in range(n)))
        comat = tuple(comat)
        return WeylElement(mat, mat, comat, comat)

    def from_word(self, word) -> WeylElement:
        """Product s_{i1} s_{i2} ... for 1-based Bourbaki indices."""
        x = self.identity
        for i in word:
            x = x * self.gens[i - 1]
        return x

    def right_descent(self, w: WeylElement, i: int) -> bool:
        """w s_i < w, i.e. w(a_i) is negative (i is 0-based)."""
        return not is_positive(w.mat[i])

    def left_descent(self, w: WeylElement, i: int) -> bool:
        """s_i w < w, i.e. w^-1(a_i) is negative."""
        return not is_positive(w.inv[i])

    def length(self, w: WeylElement) -> int:
        """Number of positive roots sent to negative roots."""
        got = self._length_memo.get(w)
        if got is None:
            got = sum(1 for b in self.sys.positive_roots if not is_positive(w.act(b)))
            self._length_memo[w] = got
        return got

    def inversions(self, w: WeylElement) -> list[Root]:
        return [b for b in self.sys.positive_roots if not is_positive(w.act(b))]

    def reduced_word(self, w: WeylElement) -> list[int]:
        """A reduced word (1-based indices), peeling right descents with the
        lowest index first."""
        word = []
        x = w
        while True:
            for i in range(self.rank):
                if self.right_descent(x, i):
                    word.append(i + 1)
                    x = x * self.gens[i]
                    break
            else:
                break
        return word[::-1]

    def format(self, w: WeylElement) -> str:
        word = self.reduced_word(w)
        return " ".join(f"s{i}" for i in word) if word else "e"

    def parse(self, text: str) -> WeylElement:
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        return self.from_word(int(tok[1:]) for tok in text.split())

    # -- Bruhat order ----------------------------------------------------
    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        """u <= w in Bruhat order via the lifting property."""
        return self._bruhat(u, self.length(u), w, self.length(w))

    def _bruhat(self, u, lu, w, lw) -> bool:
        if lu == 0:
            return True
        if lu >= lw:
            return u == w
        key = (u, w)
        got = self._bruhat_memo.get(key)
        if got is not None:
            return got
        for i in range(self.rank):
            if self.right_descent(w, i):
                break
        ws = w * self.gens[i]
        if self.right_descent(u, i):
            res = self._bruhat(u * self.gens[i], lu - 1, ws, lw - 1)
        else:
            res = self._bruhat(u, lu, ws, lw - 1)
        self._bruhat_memo[key] = res
        return res

    # -- enumeration -----------------------------------------------------
    def generated(self, indices) -> list[WeylElement]:
        """All elements of the subgroup generated by the given simple
        reflections (0-based), sorted by (length, reduced word)."""
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for i in indices:
                    y = x * self.gens[i]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_word(x)))

    def elements(self) -> list[WeylElement]:
        return self.generated(range(self.rank))

    def longest_element(self, indices=None) -> WeylElement:
        """Longest element of the parabolic subgroup on ``indices``."""
        if indices is None:
            indices = range(self.rank)
        indices = list(indices)
        x = self.identity
        while True:
            for i in indices:
                if not self.right_descent(x, i):
                    x = x * self.gens[i]
                    break
            else:
                return x

    def longest_for_simple_system(self, simple: list[Root]) -> WeylElement:
        """Longest element of the reflection subgroup with the given simple
        system (which need not consist of simple roots of Phi)."""
        refl = [self.reflection(b) for b in simple]
        x = self.identity
        while True:
            for b, s in zip(simple, refl):
                if is_positive(x.act(b)):
                    x = x * s
                    break
            else:
                return x

    def parabolic(self, delta_l) -> ParabolicData:
        return ParabolicData(self, tuple(sorted(delta_l)))

    def min_coset_reps(self, delta_l) -> list[WeylElement]:
        """W^P = {w : w(a) > 0 for a in delta_l}, by growing left prefixes."""
        delta_l = tuple(delta_l)

        def minimal(w):
            return all(is_positive(w.mat[j]) for j in delta_l)

        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if self.left_descent(w, i):
                        continue
                    y = self.gens[i] * w
                    if y not in seen and minimal(y):
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_word(x)))

    def coset_decompose(self, w: WeylElement, delta_l) -> tuple[WeylElement, WeylElement]:
        """Return ((w)^P, (w)_P) with w = (w)^P (w)_P and lengths adding."""
        u = w
        while True:
            for j in delta_l:
                if self.right_descent(u, j):
                    u = u * self.gens[j]
                    break
            else:
                break
        v = u.inverse() * w
        return u, v


class ParabolicData:
    """W_L, w_L and W^P for a subset of simple roots (0-based indices).

    Element lists are computed lazily; only ``w_l`` is cheap in large rank.
    """

    def __init__(self, group: WeylGroup, delta_l: tuple[int, ...]):
        self.group = group
        self.delta_l = delta_l

    @cached_property
    def w_l(self) -> WeylElement:
        return self.group.longest_element(self.delta_l)

    @cached_property
    def W_L(self) -> list[WeylElement]:
        return self.group.generated(self.delta_l)

    @cached_property
    def WP_reps(self) -> list[WeylElement]:
        return self.group.min_coset_reps(self.delta_l)

    def is_min_rep(self, w: WeylElement) -> bool:
        return all(is_positive(w.mat[j]) for j in self.delta_l)

    def decompose(self, w: WeylElement) -> tuple[WeylElement, WeylElement]:
        return self.group.coset_decompose(w, self.delta_l)


@lru_cache(maxsize=None)
def _weyl_group(ct: CartanType) -> WeylGroup:
    return WeylGroup(build(ct))


def weyl_group(sys: RootSystem) -> WeylGroup:
    """Shared group instance for a root system (one memo table per type)."""
    return _weyl_group(sys.cartan_type)
