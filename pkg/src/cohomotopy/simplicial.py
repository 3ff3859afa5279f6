"""Finite ordered simplicial complexes and their cochain complexes.

A complex is stored as the full downward closure of its facets, with the
q-simplices of each dimension kept as a lexicographically sorted list of
strictly increasing vertex tuples.  Vertices are totally ordered by
their integer labels; every cup/cup-i formula in the package leans on
this ordering, and every matrix indexes simplices by their position in
the sorted list.

Facet file format: UTF-8 text, '#' starts a comment line, every other
nonempty line lists the vertex labels of one facet separated by
whitespace.  The complex is the downward closure of the listed facets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .errors import InputError, UsageError
from .intmat import IntMatrix

# guards against typo'd labels blowing up the vertex range
_MAX_VERTEX_LABEL = 10 ** 6


class SimplicialComplex:
    """An ordered finite simplicial complex, closed under faces."""

    def __init__(self, simplices_by_dim):
        self.simplices = [sorted(set(s)) for s in simplices_by_dim]
        while self.simplices and not self.simplices[-1]:
            self.simplices.pop()
        if not self.simplices:
            raise InputError("empty complex")
        self._index: list[Dict[Tuple[int, ...], int]] = [
            {s: i for i, s in enumerate(level)} for level in self.simplices]
        self._check_closed()
        self.dimension = len(self.simplices) - 1
        self.vertex_count = len(self.simplices[0])
        self.vertices = [s[0] for s in self.simplices[0]]

    @staticmethod
    def from_facets(facets) -> "SimplicialComplex":
        """Downward closure of an iterable of vertex tuples."""
        levels: list[set] = []
        for f in facets:
            f = tuple(sorted(set(int(v) for v in f)))
            if not f:
                continue
            while len(levels) < len(f):
                levels.append(set())
            for q in range(len(f)):
                for face in itertools.combinations(f, q + 1):
                    levels[q].add(face)
        return SimplicialComplex(levels)

    def _check_closed(self):
        for q in range(1, len(self.simplices)):
            for s in self.simplices[q]:
                for face in itertools.combinations(s, q):
                    if face not in self._index[q - 1]:
                        raise InputError(f"not closed under faces: {face} missing")

    def n_simplices(self, q: int) -> int:
        if 0 <= q <= self.dimension:
            return len(self.simplices[q])
        return 0

    def simplex_index(self, s) -> int:
        s = tuple(s)
        q = len(s) - 1
        if q > self.dimension or s not in self._index[q]:
            raise KeyError(s)
        return self._index[q][s]

    def has_simplex(self, s) -> bool:
        s = tuple(sorted(set(s)))
        q = len(s) - 1
        return q <= self.dimension and s in self._index[q]

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * len(level) for q, level in enumerate(self.simplices))

    def facets(self):
        """Maximal simplices."""
        out = []
        for q, level in enumerate(self.simplices):
            for s in level:
                if q == self.dimension or not any(
                        set(s) < set(t) for t in self.simplices[q + 1]):
                    out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def coboundary(self, q: int, modulus: int = 0) -> IntMatrix:
        """Matrix of delta: C^q -> C^{q+1} on the sorted simplex bases.

        (delta x)(t) = sum_i (-1)^i x(t with vertex i removed); entries
        are in {-1, 0, 1} before reduction mod `modulus`.
        """
        if not (0 <= q <= self.dimension):
            raise UsageError(f"degree {q} out of range 0..{self.dimension}")
        n_from = self.n_simplices(q)
        n_to = self.n_simplices(q + 1)
        rows = [[0] * n_from for _ in range(n_to)]
        if q + 1 <= self.dimension:
            for i, t in enumerate(self.simplices[q + 1]):
                for pos in range(len(t)):
                    face = t[:pos] + t[pos + 1:]
                    rows[i][self._index[q][face]] += (-1) ** pos
        M = IntMatrix.from_rows(rows) if n_to else IntMatrix.zeros(0, n_from)
        return M.reduced_mod(modulus)

    def serialize(self) -> str:
        lines = ["# facet file: one facet per line, vertex labels separated by spaces"]
        lines += [" ".join(str(v) for v in f) for f in self.facets()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        counts = ", ".join(f"{len(level)} x dim {q}"
                           for q, level in enumerate(self.simplices))
        return f"SimplicialComplex({counts})"


def parse_complex(text: str) -> SimplicialComplex:
    """Parse the facet file format; errors carry the offending line number."""
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        verts = []
        for p in parts:
            try:
                v = int(p)
            except ValueError:
                raise InputError(f"not an integer vertex label: {p!r}", line=lineno)
            if v < 0:
                raise InputError(f"negative vertex label: {v}", line=lineno)
            if v > _MAX_VERTEX_LABEL:
                raise InputError(f"vertex index out of range: {v}", line=lineno)
            verts.append(v)
        if len(set(verts)) != len(verts):
            raise InputError(f"repeated vertex in facet: {line!r}", line=lineno)
        facets.append(tuple(verts))
    if not facets:
        raise InputError("empty complex: no facets listed")
    return SimplicialComplex.from_facets(facets)


@dataclass(frozen=True)
class Cochain:
    """A q-cochain with Z (modulus 0) or Z/m coefficients.

    Values are indexed by the sorted q-simplex list and reduced into
    [0, m) when m > 0.
    """

    complex: SimplicialComplex
    degree: int
    modulus: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.complex.n_simplices(self.degree):
            raise ValueError("value count != number of simplices")
        if self.modulus > 0 and any(not 0 <= v < self.modulus for v in self.values):
            object.__setattr__(
                self, "values", tuple(v % self.modulus for v in self.values))

    @staticmethod
    def zero(complex: SimplicialComplex, degree: int, modulus: int = 0) -> "Cochain":
        return Cochain(complex, degree, modulus,
                       (0,) * complex.n_simplices(degree))

    @staticmethod
    def from_values(complex, degree, values, modulus=0) -> "Cochain":
        return Cochain(complex, degree, modulus, tuple(int(v) for v in values))

    def _compatible(self, other: "Cochain"):
        if self.complex is not other.complex or self.degree != other.degree \
                or self.modulus != other.modulus:
            raise UsageError("cochains live on different complexes, degrees or moduli")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.complex, self.degree, self.modulus,
                       tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain(self.complex, self.degree, self.modulus,
                       tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, c: int) -> "Cochain":
        return Cochain(self.complex, self.degree, self.modulus,
                       tuple(c * v for v in self.values))

    def with_modulus(self, m: int) -> "Cochain":
        """Reinterpret mod m (or lift to Z with the representative values)."""
        return Cochain(self.complex, self.degree, m, self.values)

    def evaluate(self, simplex) -> int:
        return self.values[self.complex.simplex_index(simplex)]

    def coboundary(self) -> "Cochain":
        if self.degree > self.complex.dimension:
            return Cochain(self.complex, self.degree + 1, self.modulus, ())
        delta = self.complex.coboundary(self.degree)
        return Cochain(self.complex, self.degree + 1, self.modulus,
                       delta.mul_vector(self.values))

    def is_cocycle(self) -> bool:
        d = self.coboundary()
        if self.modulus:
            return all(v % self.modulus == 0 for v in d.values)
        return all(v == 0 for v in d.values)

    def is_zero(self) -> bool:
        if self.modulus:
            return all(v % self.modulus == 0 for v in self.values)
        return all(v == 0 for v in self.values)


def simplicial_map_pullback(f, c: Cochain,
                            domain: SimplicialComplex) -> Cochain:
    """Pull a cochain on the codomain back along a vertex map.

    `f` maps vertex labels of `domain` to vertex labels of c.complex and
    must be simplicial: the image vertex set of every simplex of the
    domain must span a simplex of the codomain.  A simplex whose image
    collapses evaluates to 0; otherwise the value is c on the sorted
    image, signed by the permutation that sorts the images.
    """
    fmap = dict(f) if not callable(f) else None
    def image(v):
        if fmap is not None:
            if v not in fmap:
                raise UsageError(f"vertex {v} missing from the vertex map")
            return fmap[v]
        return f(v)

    for level in domain.simplices:
        for s in level:
            img = set(image(v) for v in s)
            if not c.complex.has_simplex(img):
                raise UsageError(
                    f"vertex map is not simplicial: image of {s} is not a simplex")

    q = c.degree
    values = []
    for s in domain.simplices[q] if q <= domain.dimension else []:
        imgs = [image(v) for v in s]
        if len(set(imgs)) != len(imgs):
            values.append(0)
            continue
        order = sorted(range(len(imgs)), key=lambda i: imgs[i])
        sign = _permutation_sign(order)
        values.append(sign * c.evaluate(tuple(sorted(imgs))))
    return Cochain(domain, q, c.modulus, tuple(values))


def _permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def product_complex(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """The standard staircase triangulation of |K| x |L|.

    Vertices are pairs, numbered (i, j) -> i * |V_L| + j with i, j the
    positions in the sorted vertex lists.  Simplices are the chains in
    the componentwise order whose projections are simplices; the maximal
    chains over each facet pair generate everything, so the downward
    closure of those staircases is the whole product triangulation.
    """
    kv = {v: i for i, v in enumerate(K.vertices)}
    lv = {w: j for j, w in enumerate(L.vertices)}
    nl = len(L.vertices)

    def label(v, w):
        return kv[v] * nl + lv[w]

    facets = []
    for sigma in K.facets():
        for tau in L.facets():
            p, q = len(sigma) - 1, len(tau) - 1
            # monotone staircases from (0,0) to (p,q): choose which of the
            # p+q unit steps move in the K factor
            for kmoves in itertools.combinations(range(p + q), p):
                path = [(0, 0)]
                a = b = 0
                for step in range(p + q):
                    if step in kmoves:
                        a += 1
                    else:
                        b += 1
                    path.append((a, b))
                facets.append(tuple(label(sigma[a], tau[b]) for a, b in path))
    return SimplicialComplex.from_facets(facets)
