"""Cup products, cup-i products, and the squaring operation on cochains.

The cup product is the Alexander-Whitney front-face/back-face formula on
the ordered complex:

    (x ∪ y)(v_0 .. v_{p+q}) = x(v_0 .. v_p) * y(v_p .. v_{p+q}),

which satisfies the Leibniz rule delta(x∪y) = delta(x)∪y + (-1)^p x∪delta(y)
exactly at the cochain level.

The cup-i products use the explicit interval-partition formula on the
ordered complex (Steenrod's combinatorial description, in the form made
fully explicit by González-Díaz and Real): a (p+q-i)-simplex is cut by
i+1 interior cut points into i+2 intervals that overlap in their
endpoints; x is evaluated on the union of the even-numbered intervals
and y on the odd ones.  Only mod-2 values are needed, which removes all
sign bookkeeping.  With this convention ∪_0 is exactly the cup product
mod 2, and the squares

    Sq^j(x) = [x ∪_{q-j} x]   (x a mod-2 cocycle of degree q)

satisfy Sq^0 = id and Sq^q = cup square.
"""

from __future__ import annotations

import itertools

from .errors import UsageError
from .simplicial import Cochain


def cup(x: Cochain, y: Cochain) -> Cochain:
    """Alexander-Whitney cup product of cochains on one complex."""
    if x.complex is not y.complex:
        raise UsageError("cup product needs cochains on the same complex")
    if x.modulus != y.modulus:
        raise UsageError("cup product needs matching coefficient moduli")
    X = x.complex
    p, q = x.degree, y.degree
    n = p + q
    if n > X.dimension:
        return Cochain(X, n, x.modulus, ())
    values = []
    for s in X.simplices[n]:
        front = s[:p + 1]
        back = s[p:]
        values.append(x.evaluate(front) * y.evaluate(back))
    return Cochain(X, n, x.modulus, tuple(values))


def cup_i(x: Cochain, y: Cochain, i: int) -> Cochain:
    """Steenrod's i-th cup product mod 2, degree p + q - i.

    Requires modulus 2 and 0 <= i <= min(p, q).  The coboundary identity

        delta(x ∪_i y) = x ∪_{i-1} y + y ∪_{i-1} x
                         + delta(x) ∪_i y + x ∪_i delta(y)   (mod 2)

    holds exactly at the cochain level (with ∪_{-1} = 0).
    """
    if x.complex is not y.complex:
        raise UsageError("cup-i product needs cochains on the same complex")
    if x.modulus != 2 or y.modulus != 2:
        raise UsageError("cup-i products are defined mod 2 only")
    p, q = x.degree, y.degree
    if not 0 <= i <= min(p, q):
        raise UsageError(f"cup-i index {i} out of range 0..min({p},{q})")
    X = x.complex
    n = p + q - i
    if n > X.dimension:
        return Cochain(X, n, 2, ())
    values = []
    for s in X.simplices[n]:
        total = 0
        # cut points t_1 < ... < t_{i+1}; interval I_k runs from cut k to
        # cut k+1 inclusive (cut_0 = 0, cut_{i+2} = n), so adjacent
        # intervals share exactly their common cut vertex
        for cuts in itertools.combinations(range(n + 1), i + 1):
            bounds = (0,) + cuts + (n,)
            even = []
            odd = []
            for k in range(i + 2):
                lo, hi = bounds[k], bounds[k + 1]
                part = even if k % 2 == 0 else odd
                part.extend(range(lo, hi + 1))
            if len(even) != p + 1 or len(odd) != q + 1:
                continue
            xv = x.evaluate(tuple(s[t] for t in even))
            if xv % 2 == 0:
                continue
            yv = y.evaluate(tuple(s[t] for t in odd))
            total += xv * yv
        values.append(total % 2)
    return Cochain(X, n, 2, tuple(values))


def sq2_cochain(z: Cochain) -> Cochain:
    """Sq^2 of a mod-2 cocycle of degree q, as the cocycle z ∪_{q-2} z.

    For q < 2 the operation vanishes (instability), and the zero cochain
    of degree q + 2 is returned.
    """
    if z.modulus != 2:
        raise UsageError("sq2_cochain expects a mod-2 cochain")
    q = z.degree
    X = z.complex
    if q < 2:
        n = q + 2
        return Cochain(X, n, 2, (0,) * X.n_simplices(n))
    return cup_i(z, z, q - 2)
