"""Uniform cohomology models: the data the classification engine consumes.

A model provides, per degree q and coefficients Z or Z/2^k:
the group H^q as an `FgAbGroup`, reduction homomorphisms, Bockstein
homomorphisms into integral cohomology, Sq^2 on mod-2 cohomology, and
cup-product pairing tables on generators (extended bilinearly).

Two backends:

* `SimplicialModel` computes everything from the cochain complex of a
  finite simplicial complex, keeping an explicit cocycle representative
  for every generator.
* `AlgebraicModel` loads the same data from a JSON description and is
  validated structurally on load; it is how non-triangulated spaces
  (or formal models) enter the pipeline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .abgroup import FgAbGroup, GroupHom
from .errors import InputError, ModelValidationError, UsageError
from .intmat import IntMatrix, LinearSolver, preimage_kernel_basis
from .simplicial import Cochain, SimplicialComplex
from .steenrod import cup, sq2_cochain


def coeff_str(modulus: int) -> str:
    return "Z" if modulus == 0 else f"Z/{modulus}"


def parse_coeff(text: str) -> int:
    text = text.strip()
    if text == "Z":
        return 0
    if text.startswith("Z/"):
        try:
            m = int(text[2:])
        except ValueError:
            raise UsageError(f"bad coefficient spec {text!r}")
        if m < 2:
            raise UsageError(f"bad coefficient modulus {m}")
        return m
    raise UsageError(f"bad coefficient spec {text!r} (expected Z or Z/m)")


def _two_power_exponent(m: int) -> Optional[int]:
    """k when m == 2^k (m >= 2), else None."""
    if m < 2:
        return None
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return k if m == 1 else None


@dataclass(frozen=True)
class CohomologyClass:
    """Coordinates of a cohomology class in the canonical generators of
    its group, with an optional cocycle representative (simplicial
    backend only)."""

    degree: int
    modulus: int
    coords: tuple
    rep: Optional[Cochain] = None

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)


class CohomologyModel:
    """Shared behavior for both backends.

    Subclasses implement `group`, `generator_names`, `reduction_hom`,
    `bockstein_hom`, `sq2_hom` and `_cup_table`.
    """

    dimension: int
    k_max: int

    # -- abstract ---------------------------------------------------------

    def group(self, q: int, modulus: int) -> FgAbGroup:
        raise NotImplementedError

    def generator_names(self, q: int, modulus: int):
        raise NotImplementedError

    def reduction_hom(self, q: int, src: int, dst: int) -> GroupHom:
        raise NotImplementedError

    def bockstein_hom(self, q: int, k: int) -> GroupHom:
        raise NotImplementedError

    def sq2_hom(self, q: int) -> GroupHom:
        raise NotImplementedError

    def _cup_table(self, p: int, q: int, modulus: int):
        """table[i][j] = coordinates of gen_i(p) cup gen_j(q) in H^{p+q}."""
        raise NotImplementedError

    # -- shared -----------------------------------------------------------

    def make_class(self, q: int, modulus: int, coords) -> CohomologyClass:
        return CohomologyClass(q, modulus,
                               self.group(q, modulus).reduce_coords(coords))

    def zero_class(self, q: int, modulus: int) -> CohomologyClass:
        return CohomologyClass(q, modulus, self.group(q, modulus).zero())

    def cup_coords(self, p: int, q: int, x: Sequence[int], y: Sequence[int],
                   modulus: int) -> tuple:
        """Bilinear extension of the generator pairing table."""
        target = self.group(p + q, modulus)
        if target.is_trivial():
            return ()
        Gp = self.group(p, modulus)
        Gq = self.group(q, modulus)
        x = Gp.reduce_coords(x)
        y = Gq.reduce_coords(y)
        table = self._cup_table(p, q, modulus)
        acc = [0] * target.coord_len
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for t, v in enumerate(table[i][j]):
                    acc[t] += xi * yj * v
        return target.reduce_coords(acc)

    def cup_classes(self, x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
        if x.modulus != y.modulus:
            raise UsageError("cup product needs matching coefficients")
        return self.make_class(
            x.degree + y.degree, x.modulus,
            self.cup_coords(x.degree, y.degree, x.coords, y.coords, x.modulus))

    def sq2_class(self, x: CohomologyClass) -> CohomologyClass:
        """Sq^2 into H^{q+2}(X; Z/2); Z and Z/2^k classes are reduced mod 2
        first.  Vanishes below degree 2."""
        q = x.degree
        if q < 2:
            return self.zero_class(q + 2, 2)
        if x.modulus == 2:
            coords2 = self.group(q, 2).reduce_coords(x.coords)
        else:
            coords2 = self.reduction_hom(q, x.modulus, 2).apply(x.coords)
        return CohomologyClass(q + 2, 2, self.sq2_hom(q).apply(coords2))

    def moduli_available(self):
        out = [0, 2]
        out.extend(2 ** k for k in range(2, self.k_max + 1))
        return out


def bockstein(model: CohomologyModel, x: CohomologyClass) -> CohomologyClass:
    """Connecting homomorphism H^q(X;Z/2^k) -> H^{q+1}(X;Z) of the
    coefficient sequence 0 -> Z -> Z -> Z/2^k -> 0."""
    k = _two_power_exponent(x.modulus)
    if k is None:
        raise UsageError("bockstein needs Z/2^k coefficients")
    hom = model.bockstein_hom(x.degree, k)
    return CohomologyClass(x.degree + 1, 0, hom.apply(x.coords))


def _hom_from_images(source: FgAbGroup, target: FgAbGroup, images) -> GroupHom:
    return GroupHom(source, target, IntMatrix.from_columns(
        [target.reduce_coords(im) for im in images], nrows=target.coord_len))


# ---------------------------------------------------------------------------
# simplicial backend


class _CohomologyData:
    """H^q(X; Z/m) presented on the cocycle lattice, with representatives.

    `basis` columns span the lattice of integer cochains whose coboundary
    vanishes mod m; the group divides out coboundaries (and m times
    everything when m > 0), so generators keep honest cocycle
    representatives.
    """

    def __init__(self, X: SimplicialComplex, q: int, m: int):
        self.X = X
        self.q = q
        self.m = m
        if q < 0 or q > X.dimension:
            self.basis = IntMatrix.zeros(0, 0)
            self._solver = LinearSolver(self.basis)
            self.group = FgAbGroup.from_invariants(0, ())
            self.gen_reps = []
            return
        delta = X.coboundary(q)
        n_q = X.n_simplices(q)
        self.basis = preimage_kernel_basis(delta, m)
        self._solver = LinearSolver(self.basis)
        den_cols = []
        if q >= 1:
            prev = X.coboundary(q - 1)
            den_cols.extend(prev.column(j) for j in range(prev.cols))
        if m > 0:
            for i in range(n_q):
                e = [0] * n_q
                e[i] = m
                den_cols.append(tuple(e))
        rel_cols = []
        for col in den_cols:
            y = self._solver.solve(list(col))
            assert y is not None, "coboundary not in the cocycle lattice"
            rel_cols.append(y)
        rel = (IntMatrix.from_columns(rel_cols, nrows=self.basis.cols)
               if rel_cols else IntMatrix.zeros(self.basis.cols, 0))
        self.group = FgAbGroup(self.basis.cols, rel)
        self.gen_reps = []
        for j in range(self.group.coord_len):
            coords = [0] * self.group.coord_len
            coords[j] = 1
            vals = self.basis.mul_vector(self.group.lift(coords))
            self.gen_reps.append(Cochain(X, q, m, vals))

    def class_coords(self, c: Cochain) -> tuple:
        if c.degree != self.q or c.modulus != self.m:
            raise UsageError("cochain degree/modulus does not match this group")
        if not c.is_cocycle():
            raise UsageError("not a cocycle")
        w = self._solver.solve(list(c.values))
        assert w is not None, "cocycle not in the cocycle lattice"
        return self.group.reduce_ambient(w)

    def rep(self, coords) -> Cochain:
        vals = self.basis.mul_vector(self.group.lift(coords))
        return Cochain(self.X, self.q, self.m, vals)


class SimplicialModel(CohomologyModel):
    """Cohomology model computed from a finite simplicial complex."""

    def __init__(self, X: SimplicialComplex, k_max: Optional[int] = None):
        self.complex = X
        self.dimension = X.dimension
        self._data: Dict[Tuple[int, int], _CohomologyData] = {}
        self._cups: Dict[Tuple[int, int, int], list] = {}
        self._homs: Dict[tuple, GroupHom] = {}
        if k_max is None:
            k_max = 0
            for q in (2, 3, 4):
                if q <= X.dimension:
                    k_max = max(k_max, self.group(q, 0).exponent_two_valuation())
        self.k_max = max(1, k_max)

    def _get(self, q: int, m: int) -> _CohomologyData:
        key = (q, m)
        if key not in self._data:
            self._data[key] = _CohomologyData(self.complex, q, m)
        return self._data[key]

    def group(self, q: int, modulus: int) -> FgAbGroup:
        return self._get(q, modulus).group

    def generator_names(self, q: int, modulus: int):
        return tuple(f"h{q}_{i}"
                     for i in range(self.group(q, modulus).coord_len))

    def class_of(self, c: Cochain) -> CohomologyClass:
        data = self._get(c.degree, c.modulus)
        return CohomologyClass(c.degree, c.modulus, data.class_coords(c), rep=c)

    def rep_of(self, x: CohomologyClass) -> Cochain:
        if x.rep is not None:
            return x.rep
        return self._get(x.degree, x.modulus).rep(x.coords)

    def reduction_hom(self, q: int, src: int, dst: int) -> GroupHom:
        key = ("red", q, src, dst)
        if key in self._homs:
            return self._homs[key]
        if src == dst:
            return GroupHom.identity(self.group(q, src))
        if src != 0 and (dst == 0 or src % dst != 0):
            raise UsageError(f"no reduction {coeff_str(src)} -> {coeff_str(dst)}")
        sdata = self._get(q, src)
        ddata = self._get(q, dst)
        images = [ddata.class_coords(rep.with_modulus(dst))
                  for rep in sdata.gen_reps]
        hom = _hom_from_images(sdata.group, ddata.group, images)
        self._homs[key] = hom
        return hom

    def bockstein_hom(self, q: int, k: int) -> GroupHom:
        """Lift each generator's mod-2^k representative to an integer
        cochain z; its coboundary is divisible by 2^k exactly, and
        delta(z)/2^k represents the image class."""
        key = ("bock", q, k)
        if key in self._homs:
            return self._homs[key]
        m = 2 ** k
        sdata = self._get(q, m)
        tdata = self._get(q + 1, 0)
        images = []
        for rep in sdata.gen_reps:
            lifted = rep.with_modulus(0)
            d = lifted.coboundary()
            assert all(v % m == 0 for v in d.values)
            w = Cochain(self.complex, q + 1, 0, tuple(v // m for v in d.values))
            images.append(tdata.class_coords(w))
        hom = _hom_from_images(sdata.group, tdata.group, images)
        self._homs[key] = hom
        return hom

    def sq2_hom(self, q: int) -> GroupHom:
        key = ("sq2", q)
        if key in self._homs:
            return self._homs[key]
        sdata = self._get(q, 2)
        tdata = self._get(q + 2, 2)
        images = [tdata.class_coords(sq2_cochain(rep)) for rep in sdata.gen_reps]
        hom = _hom_from_images(sdata.group, tdata.group, images)
        self._homs[key] = hom
        return hom

    def _cup_table(self, p: int, q: int, modulus: int):
        key = (p, q, modulus)
        if key not in self._cups:
            pdata = self._get(p, modulus)
            qdata = self._get(q, modulus)
            tdata = self._get(p + q, modulus)
            self._cups[key] = [
                [tdata.class_coords(cup(a, b)) for b in qdata.gen_reps]
                for a in pdata.gen_reps]
        return self._cups[key]


def model_from_simplicial(X: SimplicialComplex,
                          k_max: Optional[int] = None) -> SimplicialModel:
    """Assemble the full cohomology model of a complex.

    When `k_max` is omitted it is the 2-adic valuation of the exponent of
    the 2-primary torsion of H^2 ⊕ H^3 ⊕ H^4, which is exactly the range
    of Bockstein data the extension resolution can ever need.
    """
    return SimplicialModel(X, k_max=k_max)


# ---------------------------------------------------------------------------
# algebraic backend


class AlgebraicModel(CohomologyModel):
    """Cohomology model loaded from an algebraic description.

    Structurally validated on load; maps that are forced to vanish (a
    trivial side, or a Bockstein into a group without 2^k-torsion) may be
    omitted from the file.  Deeper coherence between the supplied tables
    is deliberately not checked: loaded models are treated formally.
    """

    def __init__(self, dimension, k_max, groups, names, reductions,
                 bocksteins, sq2s, cups):
        self.dimension = dimension
        self.k_max = k_max
        self._groups = groups          # (q, modulus) -> FgAbGroup
        self._names = names            # (q, modulus) -> tuple of names
        self._reductions = reductions  # (q, src, dst) -> GroupHom
        self._bocksteins = bocksteins  # (q, k) -> GroupHom
        self._sq2s = sq2s              # q -> GroupHom
        self._cup_tables = cups        # (p, q, modulus) -> table

    _trivial = FgAbGroup.from_invariants(0, ())

    def group(self, q: int, modulus: int) -> FgAbGroup:
        return self._groups.get((q, modulus), self._trivial)

    def generator_names(self, q: int, modulus: int):
        return self._names.get((q, modulus), ())

    def reduction_hom(self, q: int, src: int, dst: int) -> GroupHom:
        if src == dst:
            return GroupHom.identity(self.group(q, src))
        key = (q, src, dst)
        if key in self._reductions:
            return self._reductions[key]
        S, T = self.group(q, src), self.group(q, dst)
        if S.is_trivial() or T.is_trivial():
            return GroupHom.zero(S, T)
        raise UsageError(
            f"model does not provide the reduction H^{q}({coeff_str(src)}) -> "
            f"H^{q}({coeff_str(dst)})")

    def bockstein_hom(self, q: int, k: int) -> GroupHom:
        key = (q, k)
        if key in self._bocksteins:
            return self._bocksteins[key]
        S = self.group(q, 2 ** k)
        T = self.group(q + 1, 0)
        # the image lies in the 2^k-torsion subgroup; when that is trivial
        # the map is forced to vanish and may be omitted
        if S.is_trivial() or T.is_trivial() or \
                all(d % 2 != 0 for d in T.torsion):
            return GroupHom.zero(S, T)
        raise UsageError(
            f"model does not provide the Bockstein H^{q}(Z/{2 ** k}) -> H^{q + 1}(Z)")

    def sq2_hom(self, q: int) -> GroupHom:
        if q in self._sq2s:
            return self._sq2s[q]
        S = self.group(q, 2)
        T = self.group(q + 2, 2)
        if S.is_trivial() or T.is_trivial():
            return GroupHom.zero(S, T)
        raise UsageError(
            f"model does not provide Sq^2 on H^{q}(Z/2)")

    def _cup_table(self, p: int, q: int, modulus: int):
        key = (p, q, modulus)
        if key in self._cup_tables:
            return self._cup_tables[key]
        # derive (q, p) from (p, q) by graded commutativity
        other = (q, p, modulus)
        if other in self._cup_tables:
            sign = (-1) ** (p * q)
            table = self._cup_tables[other]
            target = self.group(p + q, modulus)
            Gp, Gq = self.group(p, modulus), self.group(q, modulus)
            derived = [
                [target.reduce_coords([sign * v for v in table[j][i]])
                 for j in range(Gq.coord_len)]
                for i in range(Gp.coord_len)]
            self._cup_tables[key] = derived
            return derived
        Gp, Gq = self.group(p, modulus), self.group(q, modulus)
        target = self.group(p + q, modulus)
        if Gp.is_trivial() or Gq.is_trivial() or target.is_trivial():
            table = [[target.zero() for _ in range(Gq.coord_len)]
                     for _ in range(Gp.coord_len)]
            self._cup_tables[key] = table
            return table
        raise UsageError(
            f"model does not provide the cup pairing "
            f"H^{p} x H^{q} -> H^{p + q} over {coeff_str(modulus)}")


def _check(cond, rule, location, message):
    if not cond:
        raise ModelValidationError(rule, location, message)


def _parse_group_key(key: str):
    head, _, coeff = key.partition(",")
    if not head.startswith("H") or not coeff:
        raise ModelValidationError(
            "group-key", f"groups[{key!r}]",
            "expected a key of the form 'H{q},Z' or 'H{q},Z/{m}'")
    try:
        q = int(head[1:])
        modulus = parse_coeff(coeff)
    except (ValueError, UsageError):
        raise ModelValidationError("group-key", f"groups[{key!r}]",
                                   "cannot parse degree or coefficients")
    return q, modulus


def _as_int_list(value, rule, location):
    _check(isinstance(value, list) and
           all(isinstance(v, int) and not isinstance(v, bool) for v in value),
           rule, location, "expected a list of integers")
    return [int(v) for v in value]


def _load_matrix(raw, source: FgAbGroup, target: FgAbGroup, location):
    rows = target.coord_len
    cols = source.coord_len
    _check(isinstance(raw, list), "matrix-shape", location, "expected a list of rows")
    if rows == 0:
        _check(raw == [], "matrix-shape", location,
               f"target is trivial; expected []")
        return IntMatrix.zeros(0, cols)
    _check(len(raw) == rows, "matrix-shape", location,
           f"expected {rows} rows (one per target generator), got {len(raw)}")
    data = []
    for i, r in enumerate(raw):
        r = _as_int_list(r, "matrix-shape", f"{location}[{i}]")
        _check(len(r) == cols, "matrix-shape", f"{location}[{i}]",
               f"expected {cols} entries (one per source generator), got {len(r)}")
        data.append(r)
    return IntMatrix.from_rows(data) if data else IntMatrix.zeros(0, cols)


def _validated_hom(source, target, matrix, location) -> GroupHom:
    try:
        return GroupHom(source, target, matrix)
    except UsageError as e:
        raise ModelValidationError("torsion-respect", location, str(e))


def load_algebraic_model(text: str) -> AlgebraicModel:
    """Parse and validate the algebraic model format (see README).

    Every violated structural rule is reported with its name and the JSON
    path of the offending data.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}")
    _check(isinstance(doc, dict), "schema", "$", "top level must be an object")
    for field_name in ("dimension", "groups"):
        _check(field_name in doc, "schema", "$", f"missing field {field_name!r}")
    dimension = doc["dimension"]
    _check(isinstance(dimension, int) and 0 <= dimension, "schema",
           "$.dimension", "dimension must be a nonnegative integer")
    k_max = doc.get("k_max", 1)
    _check(isinstance(k_max, int) and k_max >= 0, "schema", "$.k_max",
           "k_max must be a nonnegative integer")
    k_max = max(1, k_max)

    groups: Dict[Tuple[int, int], FgAbGroup] = {}
    names: Dict[Tuple[int, int], tuple] = {}
    _check(isinstance(doc["groups"], dict), "schema", "$.groups",
           "groups must be an object")
    for key, spec in doc["groups"].items():
        loc = f"groups[{key!r}]"
        q, modulus = _parse_group_key(key)
        if modulus != 0:
            k = _two_power_exponent(modulus)
            _check(k is not None and k <= k_max, "coefficient-spec", loc,
                   f"coefficients must be Z or Z/2^k with k <= k_max={k_max}")
        _check(isinstance(spec, dict), "schema", loc, "expected an object")
        free_rank = spec.get("free_rank", 0)
        _check(isinstance(free_rank, int) and free_rank >= 0, "schema",
               f"{loc}.free_rank", "free_rank must be a nonnegative integer")
        torsion = _as_int_list(spec.get("torsion", []), "schema", f"{loc}.torsion")
        for a in torsion:
            _check(a > 1, "torsion-divisibility", f"{loc}.torsion",
                   f"invariant factor {a} must exceed 1")
        for a, b in zip(torsion, torsion[1:]):
            _check(b % a == 0, "torsion-divisibility", f"{loc}.torsion",
                   f"{a} does not divide {b}")
        if modulus != 0:
            for a in torsion:
                _check(modulus % a == 0, "torsion-divisibility", f"{loc}.torsion",
                       f"Z/{modulus}-module torsion {a} must divide {modulus}")
            _check(free_rank == 0, "torsion-divisibility", f"{loc}.free_rank",
                   f"H^q(Z/{modulus}) cannot have a free part")
        G = FgAbGroup.from_invariants(free_rank, torsion)
        gen_names = spec.get("generators",
                             [f"h{q}_{i}" for i in range(G.coord_len)])
        _check(isinstance(gen_names, list) and
               all(isinstance(s, str) for s in gen_names),
               "schema", f"{loc}.generators", "generators must be strings")
        _check(len(gen_names) == G.coord_len, "generator-count",
               f"{loc}.generators",
               f"expected {G.coord_len} generator names, got {len(gen_names)}")
        if not G.is_trivial():
            _check(q <= dimension, "dimension-bound", loc,
                   f"nontrivial group in degree {q} above dimension {dimension}")
        groups[(q, modulus)] = G
        names[(q, modulus)] = tuple(gen_names)

    def get_group(q, modulus):
        return groups.get((q, modulus), AlgebraicModel._trivial)

    reductions = {}
    bocksteins = {}
    sq2s = {}
    cups = {}
    raw_maps = doc.get("maps", [])
    _check(isinstance(raw_maps, list), "schema", "$.maps", "maps must be a list")
    for idx, m in enumerate(raw_maps):
        loc = f"maps[{idx}]"
        _check(isinstance(m, dict), "schema", loc, "expected an object")
        kind = m.get("kind")
        degrees = m.get("degrees")
        if isinstance(degrees, int):
            degrees = [degrees]
        degrees = _as_int_list(degrees if degrees is not None else [],
                               "schema", f"{loc}.degrees")
        coeffs = m.get("coefficients", [])
        if isinstance(coeffs, str):
            coeffs = [coeffs]
        _check(isinstance(coeffs, list) and
               all(isinstance(c, str) for c in coeffs),
               "schema", f"{loc}.coefficients", "coefficients must be strings")
        try:
            moduli = [parse_coeff(c) for c in coeffs]
        except UsageError as e:
            raise ModelValidationError("coefficient-spec",
                                       f"{loc}.coefficients", str(e))

        if kind == "reduction":
            _check(len(degrees) == 1 and len(moduli) == 2, "schema", loc,
                   "reduction needs degrees [q] and coefficients [from, to]")
            q = degrees[0]
            src, dst = moduli
            _check(dst != 0 and (src == 0 or (src % dst == 0 and src != dst)),
                   "coefficient-spec", loc,
                   f"no reduction {coeff_str(src)} -> {coeff_str(dst)}")
            S, T = get_group(q, src), get_group(q, dst)
            mat = _load_matrix(m.get("matrix"), S, T, f"{loc}.matrix")
            reductions[(q, src, dst)] = _validated_hom(S, T, mat, loc)
        elif kind == "bockstein":
            _check(len(degrees) == 1 and len(moduli) == 1, "schema", loc,
                   "bockstein needs degrees [q] and coefficients [Z/2^k]")
            q = degrees[0]
            k = _two_power_exponent(moduli[0])
            _check(k is not None, "coefficient-spec", loc,
                   "bockstein coefficients must be Z/2^k")
            S, T = get_group(q, moduli[0]), get_group(q + 1, 0)
            mat = _load_matrix(m.get("matrix"), S, T, f"{loc}.matrix")
            hom = _validated_hom(S, T, mat, loc)
            for j in range(S.coord_len):
                img = hom.matrix.column(j)
                _check(T.is_zero_coords([(2 ** k) * v for v in img]),
                       "bockstein-torsion", f"{loc}.matrix",
                       f"image of generator {j} is not killed by 2^{k}")
            bocksteins[(q, k)] = hom
        elif kind == "sq2":
            _check(len(degrees) == 1, "schema", loc, "sq2 needs degrees [q]")
            _check(moduli in ([], [2]), "coefficient-spec", loc,
                   "sq2 acts on mod-2 cohomology")
            q = degrees[0]
            S, T = get_group(q, 2), get_group(q + 2, 2)
            mat = _load_matrix(m.get("matrix"), S, T, f"{loc}.matrix")
            sq2s[q] = _validated_hom(S, T, mat, loc)
        elif kind == "cup":
            _check(len(degrees) == 2 and len(moduli) == 1, "schema", loc,
                   "cup needs degrees [p, q] and one coefficient spec")
            p, q = degrees
            modulus = moduli[0]
            Gp, Gq = get_group(p, modulus), get_group(q, modulus)
            T = get_group(p + q, modulus)
            raw = m.get("table")
            _check(isinstance(raw, list) and len(raw) == Gp.coord_len,
                   "cup-shape", f"{loc}.table",
                   f"expected {Gp.coord_len} rows (one per H^{p} generator)")
            table = []
            for i, row in enumerate(raw):
                rloc = f"{loc}.table[{i}]"
                _check(isinstance(row, list) and len(row) == Gq.coord_len,
                       "cup-shape", rloc,
                       f"expected {Gq.coord_len} entries (one per H^{q} generator)")
                out_row = []
                for j, cell in enumerate(row):
                    cell = _as_int_list(cell, "cup-shape", f"{rloc}[{j}]")
                    _check(len(cell) == T.coord_len, "cup-shape", f"{rloc}[{j}]",
                           f"expected {T.coord_len} coordinates in H^{p + q}")
                    out_row.append(T.reduce_coords(cell))
                table.append(out_row)
            _validate_cup_torsion(Gp, Gq, T, table, p, q, f"{loc}.table")
            if p == q:
                _validate_cup_symmetry(T, table, p, f"{loc}.table")
            cups[(p, q, modulus)] = table
        else:
            raise ModelValidationError(
                "map-kind", loc,
                f"unknown kind {kind!r} (expected reduction, bockstein, sq2 or cup)")

    return AlgebraicModel(dimension, k_max, groups, names,
                          reductions, bocksteins, sq2s, cups)


def _validate_cup_torsion(Gp, Gq, T, table, p, q, location):
    """Bilinearity over torsion: an order-d generator's pairings must be
    killed by d."""
    for i, di in enumerate(Gp.coord_orders()):
        for j, dj in enumerate(Gq.coord_orders()):
            for d, side in ((di, "left"), (dj, "right")):
                if d and not T.is_zero_coords([d * v for v in table[i][j]]):
                    raise ModelValidationError(
                        "cup-torsion", f"{location}[{i}][{j}]",
                        f"{side} generator has order {d} but the pairing "
                        "is not killed by it")


def _validate_cup_symmetry(T, table, p, location):
    """Graded commutativity for equal degrees: symmetric when p is even,
    antisymmetric (with 2x^2 = 0 on the diagonal) when p is odd."""
    n = len(table)
    sign = (-1) ** (p * p)
    for i in range(n):
        for j in range(n):
            lhs = table[i][j]
            rhs = T.reduce_coords([sign * v for v in table[j][i]])
            if lhs != rhs:
                raise ModelValidationError(
                    "cup-symmetry", f"{location}[{i}][{j}]",
                    f"pairing is not graded-commutative: gen{i} cup gen{j} != "
                    f"({'+' if sign > 0 else '-'}1) * gen{j} cup gen{i}")


def load_model_text(text: str, k_max: Optional[int] = None) -> CohomologyModel:
    """Auto-detect the input format: JSON object -> algebraic model,
    anything else -> facet file."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return load_algebraic_model(text)
    from .simplicial import parse_complex
    return model_from_simplicial(parse_complex(text), k_max=k_max)


def load_model_path(path: str, k_max: Optional[int] = None) -> CohomologyModel:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}")
    if path.endswith(".json"):
        return load_algebraic_model(text)
    return load_model_text(text, k_max=k_max)
