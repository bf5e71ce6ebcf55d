"""Finite irreducible root systems with exact integer data.

Roots are tuples of integers: the coefficients over the simple roots, with
Bourbaki numbering.  ``cartan[i][j]`` is the pairing of the i-th simple root
with the j-th simple coroot, so ``s_j(a_i) = a_i - cartan[i][j] a_j``.

>>> sys = build(CartanType("A", 2))
>>> len(sys.roots), sys.highest_root
(6, (1, 1))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidRank, NotARoot

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class CartanType:
    letter: str
    rank: int

    def __post_init__(self):
        letter, rank = self.letter, self.rank
        if letter in _MIN_RANK:
            if rank < _MIN_RANK[letter]:
                raise InvalidRank(f"type {letter} needs rank >= {_MIN_RANK[letter]}, got {rank}")
        elif letter in _FIXED_RANKS:
            if rank not in _FIXED_RANKS[letter]:
                raise InvalidRank(f"type {letter} has rank in {_FIXED_RANKS[letter]}, got {rank}")
        else:
            raise InvalidRank(f"unknown Cartan type letter {letter!r}")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?(\d+)\s*", text)
        if not m:
            raise InvalidRank(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.letter in "ADE"

    def __str__(self):
        return f"{self.letter}{self.rank}"


def cartan_matrix(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n, letter = ct.rank, ct.letter
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        c[i][j], c[j][i] = a, b

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            # a_n short
            link(n - 2, n - 1, -2, -1)
        elif letter == "C":
            # a_n long
            link(n - 2, n - 1, -1, -2)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        # a_1 short, a_2 long
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in c)


def _simple_sq_lengths(ct: CartanType) -> tuple[int, ...]:
    n = ct.rank
    # short roots have squared length 2; keeps the Gram matrix integral
    if ct.letter == "B":
        return (4,) * (n - 1) + (2,)
    if ct.letter == "C":
        return (2,) * (n - 1) + (4,)
    if ct.letter == "F":
        return (4, 4, 2, 2)
    if ct.letter == "G":
        return (2, 6)
    return (2,) * n


def height(root: Root) -> int:
    return sum(root)


def root_key(root: Root):
    """Canonical sort key: height first, then coordinates."""
    return (sum(root), root)


def neg(root: Root) -> Root:
    return tuple(-x for x in root)


def add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def scale(k: int, a: Root) -> Root:
    return tuple(k * x for x in a)


def is_positive(root: Root) -> bool:
    return any(x > 0 for x in root)


def format_root(root: Root) -> str:
    return ",".join(str(x) for x in root)


def parse_root(text: str) -> Root:
    text = text.strip().replace("−", "-")
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise NotARoot(f"cannot parse root {text!r}") from None


class RootSystem:
    """Immutable table of a root system.

    Attributes are plain tuples; after construction nothing is mutated, so
    instances are safe to share between threads.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = n = cartan_type.rank
        self.cartan = cartan_matrix(cartan_type)
        self.simple_sq_lengths = _simple_sq_lengths(cartan_type)
        self.gram = tuple(
            tuple(self.cartan[i][j] * self.simple_sq_lengths[j] // 2 for j in range(n))
            for i in range(n)
        )
        assert all(self.gram[i][j] == self.gram[j][i] for i in range(n) for j in range(n))
        self.simple_roots: tuple[Root, ...] = tuple(
            tuple(int(i == j) for j in range(n)) for i in range(n)
        )
        self.roots: tuple[Root, ...] = tuple(sorted(self._generate(), key=root_key))
        self._root_set = frozenset(self.roots)
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.positive_roots = tuple(r for r in self.roots if is_positive(r))
        self.negative_roots = tuple(r for r in self.roots if not is_positive(r))
        self.highest_root = self.positive_roots[-1]
        long_sq = max(self.simple_sq_lengths)
        self._sq = {r: self.sq_length(r) for r in self.roots}
        self.long_roots = frozenset(r for r in self.roots if self._sq[r] == long_sq)
        self._coroot = {r: self._coroot_coords(r) for r in self.roots}
        # row r: pairings <r, a_i^vee> for each simple coroot
        self._pair_vec = {
            r: tuple(sum(r[j] * self.cartan[j][i] for j in range(n)) for i in range(n))
            for r in self.roots
        }

    def _generate(self):
        seen = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    img = self.simple_reflect(i, r)
                    if img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        return seen

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    # -- basic data ------------------------------------------------------
    @property
    def simply_laced(self) -> bool:
        return self.cartan_type.simply_laced

    def is_root(self, r) -> bool:
        return r in self._root_set

    def check(self, *roots):
        for r in roots:
            if r not in self._root_set:
                raise NotARoot(f"{r!r} is not a root of {self.cartan_type}")

    def inner(self, a, b) -> int:
        """Scalar product of two root-lattice vectors (Gram normalization)."""
        n = self.rank
        g = self.gram
        return sum(a[i] * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j])

    def sq_length(self, a) -> int:
        return self.inner(a, a)

    def is_long(self, r: Root) -> bool:
        return r in self.long_roots

    def pairing_vector(self, r: Root) -> tuple[int, ...]:
        """Pairings of ``r`` with the simple coroots."""
        v = self._pair_vec.get(r)
        if v is None:
            n = self.rank
            v = tuple(sum(r[j] * self.cartan[j][i] for j in range(n)) for i in range(n))
        return v

    def pairing(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^vee> = 2(beta, alpha)/(alpha, alpha)."""
        self.check(beta, alpha)
        return self._pair(beta, alpha)

    def _pair(self, beta, alpha) -> int:
        num = 2 * self.inner(beta, alpha)
        den = self._sq[alpha]
        assert num % den == 0
        return num // den

    def _coroot_coords(self, r: Root) -> tuple[int, ...]:
        sq = self.sq_length(r)
        out = []
        for a, s in zip(r, self.simple_sq_lengths):
            q, rem = divmod(a * s, sq)
            assert rem == 0
            out.append(q)
        return tuple(out)

    def coroot(self, r: Root) -> tuple[int, ...]:
        """Coordinates of ``r^vee`` over the simple coroots."""
        self.check(r)
        return self._coroot[r]

    def pair_coweight(self, r: Root, h) -> int:
        """<r, h> for a coweight ``h`` given over the simple coroots."""
        return sum(x * y for x, y in zip(self.pairing_vector(r), h))

    def simple_reflect(self, i: int, r: Root) -> Root:
        c = sum(r[j] * self.cartan[j][i] for j in range(self.rank))
        if not c:
            return r
        out = list(r)
        out[i] -= c
        return tuple(out)

    def reflect(self, alpha: Root, beta: Root) -> Root:
        """s_alpha(beta) = beta - <beta, alpha^vee> alpha."""
        c = self._pair(beta, alpha)
        return tuple(b - c * a for a, b in zip(alpha, beta))

    # -- predicates ------------------------------------------------------
    def strongly_orthogonal(self, alpha: Root, beta: Root) -> bool:
        """Neither sum nor difference is a root, and alpha != +-beta."""
        self.check(alpha, beta)
        return self._so(alpha, beta)

    def _so(self, alpha, beta) -> bool:
        if alpha == beta or alpha == neg(beta):
            return False
        return add(alpha, beta) not in self._root_set and sub(alpha, beta) not in self._root_set

    def orthogonal(self, alpha: Root, beta: Root) -> bool:
        return self.inner(alpha, beta) == 0

    def dominance_leq(self, alpha: Root, beta: Root) -> bool:
        self.check(alpha, beta)
        return all(b >= a for a, b in zip(alpha, beta))


@lru_cache(maxsize=None)
def build(cartan_type: CartanType) -> RootSystem:
    """Build (and cache) the root system of the given type."""
    return RootSystem(cartan_type)


def system(text: str) -> RootSystem:
    """Shorthand: ``system("B3")``."""
    return build(CartanType.parse(text))
