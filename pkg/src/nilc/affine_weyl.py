"""Affine Weyl group, real affine roots and involutions.

An element ``AffineWeylElement(w, lam)`` denotes ``w t_lam`` and acts by

    (w t_lam)(b + m delta) = w(b) + (m - <b, lam>) delta

with ``lam`` given over the simple coroots.  The affine simple roots are the
finite simple roots (indices 1..n) together with ``a0 = delta - theta``
(index 0).  In words, ``s0`` is the reflection in ``a0``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NotARoot, NotStronglyOrthogonal
from .root_system import CartanType, Root, RootSystem, build, format_root, is_positive, neg, parse_root
from .weyl import WeylElement, weyl_group


class AffineRoot(NamedTuple):
    """The real affine root ``finite + n delta``."""

    finite: Root
    n: int

    def __neg__(self) -> AffineRoot:
        return AffineRoot(neg(self.finite), -self.n)

    @property
    def positive(self) -> bool:
        return self.n > 0 or (self.n == 0 and is_positive(self.finite))

    def __str__(self) -> str:
        return f"{format_root(self.finite)} @ {self.n}"


def parse_affine_root(text: str) -> AffineRoot:
    m = re.fullmatch(r"\s*([^@]+?)\s*@\s*([-+]?\d+)\s*", text.replace("−", "-"))
    if not m:
        raise NotARoot(f"cannot parse affine root {text!r}")
    return AffineRoot(parse_root(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class AffineWeylElement:
    w: WeylElement
    lam: tuple[int, ...]


@dataclass(frozen=True)
class AffineInvolution:
    """An involution with cached length and moved rank.

    ``moved_rank`` is rk(id - sigma); ``L`` is (length + moved_rank) / 2.
    """

    element: AffineWeylElement
    moved_rank: int
    length: int

    @property
    def L(self) -> int:
        return (self.length + self.moved_rank) // 2


class AffineWeylGroup:
    def __init__(self, sys: RootSystem):
        self.sys = sys
        self.rank = n = sys.rank
        self.finite = weyl_group(sys)
        W = self.finite
        self.identity = AffineWeylElement(W.identity, (0,) * n)
        theta = sys.highest_root
        self.theta = theta
        self.simple_roots: tuple[AffineRoot, ...] = (AffineRoot(neg(theta), 1),) + tuple(
            AffineRoot(a, 0) for a in sys.simple_roots
        )
        self.gens: tuple[AffineWeylElement, ...] = tuple(
            self.reflection(a) for a in self.simple_roots
        )
        self._bruhat_memo: dict = {}
        self._length_memo: dict = {}
        self._sigma_memo: dict = {}
        # <a_j, theta^vee> for each simple root a_j
        self._simple_theta_pair = tuple(sys._pair(a, theta) for a in sys.simple_roots)

    # -- arithmetic ------------------------------------------------------
    def _pair(self, b, lam) -> int:
        c = self.sys.cartan
        n = self.rank
        return sum(b[j] * c[j][i] * lam[i] for i in range(n) if lam[i] for j in range(n) if b[j])

    def act(self, x: AffineWeylElement, a: AffineRoot) -> AffineRoot:
        return AffineRoot(x.w.act(a.finite), a.n - self._pair(a.finite, x.lam))

    def compose(self, x: AffineWeylElement, y: AffineWeylElement) -> AffineWeylElement:
        lam = y.w.act_inverse_coweight(x.lam)
        return AffineWeylElement(x.w * y.w, tuple(p + q for p, q in zip(lam, y.lam)))

    def inverse(self, x: AffineWeylElement) -> AffineWeylElement:
        return AffineWeylElement(x.w.inverse(), tuple(-v for v in x.w.act_coweight(x.lam)))

    def translation(self, lam) -> AffineWeylElement:
        return AffineWeylElement(self.finite.identity, tuple(lam))

    def from_finite(self, w: WeylElement) -> AffineWeylElement:
        return AffineWeylElement(w, (0,) * self.rank)

    def reflection(self, a: AffineRoot) -> AffineWeylElement:
        """s_{b + n delta} = s_b t_{n b^vee}."""
        self.sys.check(a.finite)
        cor = self.sys.coroot(a.finite)
        return AffineWeylElement(self.finite.reflection(a.finite), tuple(a.n * c for c in cor))

    def from_word(self, word) -> AffineWeylElement:
        x = self.identity
        for i in word:
            x = self.compose(x, self.gens[i])
        return x

    def parse(self, text: str) -> AffineWeylElement:
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        return self.from_word(int(tok[1:]) for tok in text.split())

    # -- descents and length ----------------------------------------------
    def right_descent(self, x: AffineWeylElement, i: int) -> bool:
        """x s_i < x, i.e. x(a_i) is negative; index 0 is delta - theta."""
        if i == 0:
            m = 1 + self._pair(self.theta, x.lam)
            if m:
                return m < 0
            return is_positive(x.w.act(self.theta))
        p = self._pair(self.sys.simple_roots[i - 1], x.lam)
        if p:
            return p > 0
        return not is_positive(x.w.mat[i - 1])

    def left_descent(self, x: AffineWeylElement, i: int) -> bool:
        return self.right_descent(self.inverse(x), i)

    def _peel(self, x: AffineWeylElement) -> list[int]:
        """Indices of right descents removed one by one (lowest index
        first), working on bare columns instead of full elements."""
        n = self.rank
        c = self.sys.cartan
        cols = [list(col) for col in x.w.mat]
        lam = list(x.lam)
        theta = self.theta
        tpair = self.sys.pairing_vector(theta)
        tcor = self.sys.coroot(theta)
        out = []
        while True:
            i = None
            m = 1 + sum(t * l for t, l in zip(tpair, lam))
            if m < 0:
                i = 0
            elif m == 0:
                wt = [sum(theta[j] * cols[j][k] for j in range(n)) for k in range(n)]
                if any(v > 0 for v in wt):
                    i = 0
            if i is None:
                for k in range(n):
                    p = sum(c[k][q] * lam[q] for q in range(n))
                    if p > 0 or (p == 0 and not any(v > 0 for v in cols[k])):
                        i = k + 1
                        break
            if i is None:
                return out
            out.append(i)
            if i:
                k = i - 1
                p = sum(c[k][q] * lam[q] for q in range(n))
                ck = cols[k][:]
                for j in range(n):
                    f = c[j][k]
                    if f:
                        cols[j] = [a - f * b for a, b in zip(cols[j], ck)]
                lam[k] -= p
            else:
                wt = [sum(theta[j] * cols[j][q] for j in range(n)) for q in range(n)]
                for j in range(n):
                    f = self._simple_theta_pair[j]
                    if f:
                        cols[j] = [a - f * b for a, b in zip(cols[j], wt)]
                tl = sum(t * l for t, l in zip(tpair, lam))
                lam = [l - tl * t - t for l, t in zip(lam, tcor)]

    def length(self, x: AffineWeylElement) -> int:
        """Length by peeling right descents."""
        got = self._length_memo.get(x)
        if got is None:
            got = self._length_memo[x] = len(self._peel(x))
        return got

    def length_by_inversions(self, x: AffineWeylElement) -> int:
        """Count positive real affine roots sent to negative ones, scanning
        the window |n| <= |<b, lam>| + 1 for each finite root b."""
        total = 0
        for b in self.sys.roots:
            k = sum(p * l for p, l in zip(self.sys.pairing_vector(b), x.lam))
            image_positive = is_positive(x.w.act(b))
            lo = 0 if is_positive(b) else 1
            for n in range(lo, abs(k) + 2):
                # image is w(b) + (n - k) delta
                if n < k or (n == k and not image_positive):
                    total += 1
        return total

    def reduced_word(self, x: AffineWeylElement) -> list[int]:
        return self._peel(x)[::-1]

    def format(self, x: AffineWeylElement) -> str:
        word = self.reduced_word(x)
        return " ".join(f"s{i}" for i in word) if word else "e"

    # -- Bruhat order ----------------------------------------------------
    def bruhat_leq(self, x: AffineWeylElement, y: AffineWeylElement) -> bool:
        return self._bruhat(x, self.length(x), y, self.length(y))

    def _bruhat(self, u, lu, w, lw) -> bool:
        if lu == 0:
            return True
        if lu >= lw:
            return u == w
        key = (u, w)
        got = self._bruhat_memo.get(key)
        if got is not None:
            return got
        for i in range(self.rank + 1):
            if self.right_descent(w, i):
                break
        ws = self.compose(w, self.gens[i])
        if self.right_descent(u, i):
            res = self._bruhat(self.compose(u, self.gens[i]), lu - 1, ws, lw - 1)
        else:
            res = self._bruhat(u, lu, ws, lw - 1)
        self._bruhat_memo[key] = res
        return res

    def elements_up_to(self, max_length: int) -> list[AffineWeylElement]:
        """All elements of length <= max_length, by breadth-first search."""
        seen = {self.identity}
        frontier = [self.identity]
        for _ in range(max_length):
            nxt = []
            for x in frontier:
                for i in range(self.rank + 1):
                    if self.right_descent(x, i):
                        continue
                    y = self.compose(x, self.gens[i])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen, key=lambda x: (self.length(x), self.reduced_word(x)))

    # -- involutions -----------------------------------------------------
    def involution(self, x: AffineWeylElement, moved_rank: int) -> AffineInvolution:
        return AffineInvolution(x, moved_rank, self.length(x))

    def sigma_of_set(self, roots) -> AffineInvolution:
        """prod_{a in S} s_{a - delta} for a strongly orthogonal set S."""
        roots = tuple(roots)
        got = self._sigma_memo.get(roots)
        if got is None:
            got = self._sigma_memo[roots] = self._sigma(roots)
        return got

    def _sigma(self, roots) -> AffineInvolution:
        sys = self.sys
        sys.check(*roots)
        for i, a in enumerate(roots):
            for b in roots[i + 1 :]:
                if not sys._so(a, b):
                    raise NotStronglyOrthogonal(f"{a} and {b} are not strongly orthogonal")
        x = self.identity
        for a in roots:
            x = self.compose(x, self.reflection(AffineRoot(a, -1)))
        return self.involution(x, len(roots))

    def is_involution(self, x: AffineWeylElement) -> bool:
        return self.compose(x, x) == self.identity

    def descent_type(self, i: int, sigma: AffineInvolution) -> str:
        """'none', 'real' or 'complex' for the simple affine root of index i."""
        a = self.simple_roots[i]
        img = self.act(sigma.element, a)
        if img.positive:
            return "none"
        return "real" if img == -a else "complex"

    def circ(self, i: int, sigma: AffineInvolution) -> AffineInvolution:
        """s_i o sigma: s_i sigma if they commute, else s_i sigma s_i."""
        s = self.gens[i]
        x = sigma.element
        a = self.simple_roots[i]
        img = self.act(x, a)
        left = self.compose(s, x)
        if img == a or img == -a:
            # commuting case: the moved rank drops on a descent, grows otherwise
            delta = -1 if img == -a else 1
            return self.involution(left, sigma.moved_rank + delta)
        return self.involution(self.compose(left, s), sigma.moved_rank)

    def delta_coefficients(self, x: AffineWeylElement) -> dict[Root, int]:
        """The delta-coefficient of x(b + 0 delta) for each finite root b."""
        return {b: -self._pair(b, x.lam) for b in self.sys.roots}

    def involution_height(self, sigma: AffineInvolution) -> int:
        return max(0, max(self.delta_coefficients(sigma.element).values()))

    def moved_rank_direct(self, x: AffineWeylElement) -> int:
        """rk(id - x) on the lattice spanned by the simple roots and delta."""
        n = self.rank
        rows = []
        for j in range(n):
            e = tuple(int(k == j) for k in range(n))
            img = self.act(x, AffineRoot(e, 0))
            rows.append([Fraction(e[k] - img.finite[k]) for k in range(n)] + [Fraction(-img.n)])
        return _rank(rows)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@lru_cache(maxsize=None)
def _affine_group(ct: CartanType) -> AffineWeylGroup:
    return AffineWeylGroup(build(ct))


def affine_group(sys: RootSystem) -> AffineWeylGroup:
    """Shared affine group instance for a root system."""
    return _affine_group(sys.cartan_type)
