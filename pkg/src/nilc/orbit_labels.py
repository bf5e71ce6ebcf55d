"""Static labels for height-2 orbits, used only for display.

``rows(ct)`` lists (row id, diagram, class label, symmetric pair, rank) for
each height-2 orbit of the given type.  Nothing in the catalogue is derived
from this table.
"""

from __future__ import annotations

from .root_system import CartanType

Row = tuple[str, tuple[int, ...], str, str, int]


def _z(k: int) -> tuple[int, ...]:
    return (0,) * k


def _part(*blocks) -> str:
    return "(" + ", ".join(f"{p}^{m}" for p, m in blocks if m) + ")"


def rows(ct: CartanType) -> list[Row]:
    n, letter = ct.rank, ct.letter
    out: list[Row] = []
    if letter == "A":
        for r in range(1, n // 2 + 1):
            l = n - 2 * r
            diag = _z(r - 1) + (1,) + _z(l) + (1,) + _z(r - 1)
            out.append(("1.1", diag, _part((2, r), (1, l + 1)), f"(A{2*r-1}, a{r})", r))
        if (n + 1) % 2 == 0:
            r = (n + 1) // 2
            out.append(("1.2", _z(r - 1) + (2,) + _z(r - 1), _part((2, r)), f"(A{2*r-1}, a{r})", r))
    elif letter == "B":
        out.append(("2.1", (2,) + _z(n - 1), _part((3, 1), (1, 2 * (n - 1))), f"(B{n}, a1)", 2))
        for r in range(1, n // 2 + 1):
            l = n - 2 * r
            out.append(
                ("2.2", _z(2 * r - 1) + (1,) + _z(l), _part((2, 2 * r), (1, 2 * l + 1)),
                 f"(D{2*r}, a{2*r})", r)
            )
    elif letter == "C":
        for r in range(1, n):
            l = n - r - 1
            out.append(("3.1", _z(r - 1) + (1,) + _z(l + 1), _part((2, r), (1, 2 * l + 2)),
                        f"(C{r}, a{r})", r))
        out.append(("3.2", _z(n - 1) + (2,), _part((2, n)), f"(C{n}, a{n})", n))
    elif letter == "D":
        out.append(("4.1", (2,) + _z(n - 1), _part((3, 1), (1, 2 * n - 3)), f"(D{n}, a1)", 2))
        for r in range(1, (n - 2) // 2 + 1):
            l = n - 2 * r - 2
            out.append(("4.2", _z(2 * r - 1) + (1,) + _z(l + 2), _part((2, 2 * r), (1, 2 * l + 4)),
                        f"(D{2*r}, a{2*r})", r))
        if n % 2:
            r = (n - 1) // 2
            out.append(("4.3", _z(n - 2) + (1, 1), _part((2, 2 * r), (1, 2)), f"(D{2*r}, a{2*r})", r))
        else:
            r = n // 2
            out.append(("4.4", _z(n - 1) + (2,), _part((2, n)) + "^I", f"(D{n}, a{n})", r))
            out.append(("4.5", _z(n - 2) + (2, 0), _part((2, n)) + "^II", f"(D{n}, a{n})", r))
    elif letter == "E":
        table = {
            6: [("5.1", "010000", "A1", "(A1, a1)", 1), ("5.2", "100001", "2A1", "(D5, a1)", 2)],
            7: [("6.1", "1000000", "A1", "(A1, a1)", 1), ("6.2", "0000010", "2A1", "(D6, a1)", 2),
                ("6.3", "0000002", "3A1''", "(E7, a7)", 3)],
            8: [("7.1", "00000001", "A1", "(A1, a1)", 1), ("7.2", "10000000", "2A1", "(D8, a1)", 2)],
        }
        out = [(i, tuple(int(c) for c in d), lab, g, r) for i, d, lab, g, r in table[n]]
    elif letter == "F":
        out = [("8.1", (1, 0, 0, 0), "A1", "(A1, a1)", 1), ("8.2", (0, 0, 0, 1), "~A1", "(B4, a1)", 2)]
    elif letter == "G":
        out = [("9.1", (0, 1), "A1", "(A1, a1)", 1)]
    return out


def lookup(ct: CartanType, diagram: tuple[int, ...]) -> Row | None:
    for row in rows(ct):
        if row[1] == tuple(diagram):
            return row
    return None
