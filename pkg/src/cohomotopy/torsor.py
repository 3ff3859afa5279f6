"""Finite bi-torsors: an executable model of the torsor algebra.

A bi-torsor is a set with commuting free transitive left and right group
actions.  Every carrier point x induces a pair of inverse group
isomorphisms determined by

    g . x = x . gamma_x(g)        and        gammabar_x(h) . x = x . h,

and the isomorphisms at two points are conjugate: if x1 = x2 . h then
gamma_{x1}(g) = h^{-1} gamma_{x2}(g) h.

Groups are plain multiplication tables (table[a][b] = a*b), actions are
tables as well, and every axiom is checked exhaustively at construction,
which is cheap at the group orders this module is exercised at.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import InternalConsistencyError, UsageError


def _check_group_table(table, what: str):
    n = len(table)
    if any(len(row) != n for row in table):
        raise UsageError(f"{what}: multiplication table is not square")
    if any(not 0 <= v < n for row in table for v in row):
        raise UsageError(f"{what}: table entries out of range")
    identity = None
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            identity = e
            break
    if identity is None:
        raise UsageError(f"{what}: no identity element")
    for a in range(n):
        if identity not in table[a]:
            raise UsageError(f"{what}: element {a} has no inverse")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise UsageError(f"{what}: multiplication is not associative")
    return identity


@dataclass(frozen=True)
class FiniteBiTorsor:
    """Carrier set {0..size-1} with a left G-action and a right H-action."""

    left_table: tuple      # G multiplication
    right_table: tuple     # H multiplication
    size: int              # carrier size
    left_action: tuple     # left_action[g][x]
    right_action: tuple    # right_action[x][h]

    def __post_init__(self):
        G, H, T = len(self.left_table), len(self.right_table), self.size
        e_g = _check_group_table(self.left_table, "left group")
        e_h = _check_group_table(self.right_table, "right group")
        if len(self.left_action) != G or any(len(r) != T for r in self.left_action):
            raise UsageError("left action table has wrong shape")
        if len(self.right_action) != T or any(len(r) != H for r in self.right_action):
            raise UsageError("right action table has wrong shape")
        for g1 in range(G):
            for g2 in range(G):
                for x in range(T):
                    if self.left_action[self.left_table[g1][g2]][x] != \
                            self.left_action[g1][self.left_action[g2][x]]:
                        raise UsageError("left action does not respect multiplication")
        for h1 in range(H):
            for h2 in range(H):
                for x in range(T):
                    if self.right_action[x][self.right_table[h1][h2]] != \
                            self.right_action[self.right_action[x][h1]][h2]:
                        raise UsageError("right action does not respect multiplication")
        if any(self.left_action[e_g][x] != x for x in range(T)):
            raise UsageError("left identity does not act trivially")
        if any(self.right_action[x][e_h] != x for x in range(T)):
            raise UsageError("right identity does not act trivially")
        # torsor axioms: both actions free and transitive
        for g in range(G):
            if g != e_g and any(self.left_action[g][x] == x for x in range(T)):
                raise UsageError("left action is not free")
        for h in range(H):
            if h != e_h and any(self.right_action[x][h] == x for x in range(T)):
                raise UsageError("right action is not free")
        for x in range(T):
            if {self.left_action[g][x] for g in range(G)} != set(range(T)):
                raise UsageError("left action is not transitive")
            if {self.right_action[x][h] for h in range(H)} != set(range(T)):
                raise UsageError("right action is not transitive")
        # the actions must commute: (g.x).h == g.(x.h)
        for g in range(G):
            for x in range(T):
                for h in range(H):
                    if self.right_action[self.left_action[g][x]][h] != \
                            self.left_action[g][self.right_action[x][h]]:
                        raise UsageError("left and right actions do not commute")

    @property
    def left_identity(self):
        n = len(self.left_table)
        return next(e for e in range(n)
                    if all(self.left_table[e][x] == x for x in range(n)))

    @property
    def right_identity(self):
        n = len(self.right_table)
        return next(e for e in range(n)
                    if all(self.right_table[e][x] == x for x in range(n)))

    def right_inverse(self, h):
        e = self.right_identity
        return next(k for k in range(len(self.right_table))
                    if self.right_table[h][k] == e)


def gamma_x(B: FiniteBiTorsor, x: int):
    """The isomorphism G -> H at x, as a tuple: g.x = x.gamma[g].

    Freeness and transitivity of the right action make the defining
    element unique, and commutation of the actions makes the map
    multiplicative."""
    lookup = {B.right_action[x][h]: h for h in range(len(B.right_table))}
    return tuple(lookup[B.left_action[g][x]] for g in range(len(B.left_table)))


def gamma_bar_x(B: FiniteBiTorsor, x: int):
    """The inverse isomorphism H -> G at x: gammabar[h].x = x.h."""
    lookup = {B.left_action[g][x]: g for g in range(len(B.left_table))}
    return tuple(lookup[B.right_action[x][h]] for h in range(len(B.right_table)))


def verify_conjugacy(B: FiniteBiTorsor, x1: int, x2: int) -> int:
    """The element h with x1 = x2.h, checked to conjugate the two
    isomorphisms pointwise: gamma_{x1}(g) = h^{-1} gamma_{x2}(g) h."""
    h = next(h for h in range(len(B.right_table))
             if B.right_action[x2][h] == x1)
    g1 = gamma_x(B, x1)
    g2 = gamma_x(B, x2)
    hinv = B.right_inverse(h)
    mul = B.right_table
    for g in range(len(B.left_table)):
        if g1[g] != mul[mul[hinv][g2[g]]][h]:
            raise InternalConsistencyError(
                "conjugation identity failed pointwise; action tables are broken")
    return h


# -- table builders for the standard fixtures -------------------------------

def cyclic_group(n: int):
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def symmetric_group(n: int):
    """S_n as a multiplication table over lexicographically ordered
    permutation tuples; table[a][b] = a after b (left-to-right composition
    chosen so that translation bi-torsors commute)."""
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        table.append(tuple(index[tuple(p[b[i]] for i in range(n))] for b in perms))
    return tuple(table)


def dihedral_group(n: int):
    """D_n of order 2n: elements (r, s) = rotation r, flip s."""
    elems = [(r, s) for s in range(2) for r in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        r1, s1 = a
        r2, s2 = b
        # (r1,s1)*(r2,s2): flips conjugate rotations
        r = (r1 + (r2 if s1 == 0 else -r2)) % n
        return (r, (s1 + s2) % 2)

    return tuple(tuple(index[mul(a, b)] for b in elems) for a in elems)


def quaternion_group():
    """Q_8 = {±1, ±i, ±j, ±k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a, b):
        sign = 1
        for u in (a, b):
            if u.startswith("-"):
                sign = -sign
        x, y = a.lstrip("-"), b.lstrip("-")
        table = {
            ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
            ("i", "1"): "i", ("j", "1"): "j", ("k", "1"): "k",
            ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
            ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
            ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
        }
        out = table[(x, y)]
        if out.startswith("-"):
            sign = -sign
            out = out[1:]
        return out if sign > 0 else "-" + out

    index = {s: i for i, s in enumerate(names)}
    return tuple(tuple(index[mul(a, b)] for b in names) for a in names)


def translation_bitorsor(table) -> FiniteBiTorsor:
    """A group acting on itself by left and right translation; the
    isomorphism at x is then conjugation by x."""
    n = len(table)
    left = tuple(tuple(table[g][x] for x in range(n)) for g in range(n))
    right = tuple(tuple(table[x][h] for h in range(n)) for x in range(n))
    return FiniteBiTorsor(left_table=tuple(tuple(r) for r in table),
                          right_table=tuple(tuple(r) for r in table),
                          size=n, left_action=left, right_action=right)


def twisted_bitorsor(table, automorphism) -> FiniteBiTorsor:
    """Left translation, right translation twisted by an automorphism."""
    n = len(table)
    left = tuple(tuple(table[g][x] for x in range(n)) for g in range(n))
    right = tuple(tuple(table[x][automorphism[h]] for h in range(n))
                  for x in range(n))
    return FiniteBiTorsor(tuple(tuple(r) for r in table),
                          tuple(tuple(r) for r in table),
                          n, left, right)
