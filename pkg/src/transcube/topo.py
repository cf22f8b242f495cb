"""Exact evaluation of topologized cube maps on rational points.

A cotransverse endomap ``f`` of ``[n]`` extends to the solid cube
``[0,1]^n`` by the max-min formula: output coordinate ``i`` is the maximum,
over the source vertices whose image has coordinate ``i`` equal to 1, of
the minimum of the point coordinates selected by that vertex.  On vertices
this recovers ``f`` itself; on the whole cube it is continuous, strictly
increasing, preserves the coordinate sum and preserves all finite directed
L1 distances.

Two independent evaluators are provided.  :func:`t_eval_maxmin` computes
the formula literally.  :func:`t_eval_permutation` sorts the coordinates in
descending order and reads the output permutation off the images of the
corresponding chain of vertices; the two must agree exactly on every input.
Both use comparisons only, so they work verbatim on ``Fraction``
coordinates and on integer coordinates over an implicit common denominator.

Maps between cubes of different dimensions are evaluated through the unique
coface/endo factorization: run the endomap part, then insert the constant
coordinates of the coface part.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

from .cube import INF, CubeMap
from .homsets import factorize

Coord = TypeVar("Coord", Fraction, int)


def _check_point(f: CubeMap, x: Sequence) -> None:
    if len(x) != f.dom_dim:
        raise ValueError(f"point of dimension {len(x)} fed to map from [{f.dom_dim}]")


def t_eval_maxmin(f: CubeMap, x: Sequence[Coord]) -> tuple[Coord, ...]:
    """Max-min evaluation of an endomap at a point; exact, no tolerances."""
    if not f.is_endo():
        raise ValueError("max-min evaluation is defined for endomaps; use t_eval")
    _check_point(f, x)
    out = []
    for masks in f.preimages_of_one():
        best = None
        for mask in masks:
            m = mask
            k = (m & -m).bit_length() - 1
            low = x[k]
            m &= m - 1
            while m:
                k = (m & -m).bit_length() - 1
                if x[k] < low:
                    low = x[k]
                m &= m - 1
            if best is None or low > best:
                best = low
        # Endomaps send the top vertex to the top vertex, so every output
        # coordinate has a nonempty preimage and best is set.
        out.append(best)
    return tuple(out)


def t_eval_permutation(f: CubeMap, x: Sequence[Coord]) -> tuple[Coord, ...]:
    """Chain-of-sorted-coordinates evaluation of an endomap.

    Sort the coordinates in descending order (ties keep the smaller index
    first), walk the chain of vertices obtained by switching them on one at
    a time, and record in which order the image vertices acquire their
    coordinates.  The output is the input permuted accordingly.
    """
    if not f.is_endo():
        raise ValueError("permutation evaluation is defined for endomaps; use t_eval")
    _check_point(f, x)
    n = f.dom_dim
    order = sorted(range(n), key=x.__getitem__, reverse=True)  # stable: ties by index
    out: list[Coord] = [x[0]] * n
    mask = 0
    prev = 0
    for k in order:
        mask |= 1 << k
        img = f.table[mask]
        new = img & ~prev
        out[new.bit_length() - 1] = x[k]
        prev = img
    return tuple(out)


def t_eval(f: CubeMap, x: Sequence[Coord]) -> tuple[Coord, ...]:
    """Evaluate any cotransverse map on a point of its source cube.

    Endomaps use the max-min formula directly.  Otherwise the coface part of
    the factorization contributes constant coordinates (0 or 1 per inserted
    coordinate), so the empty-preimage corner of the formula never arises.
    """
    _check_point(f, x)
    zero, one = _constants_like(x)
    if f.is_endo():
        return t_eval_maxmin(f, x)
    fac = factorize(f)
    inner = t_eval_maxmin(fac.psi, x) if f.dom_dim > 0 else ()
    lo, hi = fac.phi.table[0], fac.phi.table[-1]
    out = []
    k = 0
    for pos in range(f.cod_dim):
        if ((lo ^ hi) >> pos) & 1:
            out.append(inner[k])
            k += 1
        else:
            out.append(one if (lo >> pos) & 1 else zero)
    return tuple(out)


def _constants_like(x: Sequence) -> tuple:
    if any(isinstance(c, Fraction) for c in x):
        return Fraction(0), Fraction(1)
    return 0, 1


def point_height(x: Sequence[Coord]) -> Coord:
    """Coordinate sum of a point of the solid cube."""
    return sum(x[1:], x[0]) if len(x) else 0


def d1_point(x: Sequence[Coord], y: Sequence[Coord]):
    """Directed L1 distance on the solid cube: the coordinate-sum gap when
    ``x <= y`` coordinatewise, infinite otherwise."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")
    if all(a <= b for a, b in zip(x, y)):
        return sum((b - a for a, b in zip(x, y)), _constants_like(x)[0])
    return INF


def d1_sym(x: Sequence[Coord], y: Sequence[Coord]) -> Coord:
    """Symmetric reflection of the directed distance: plain L1.

    On a single cube the reflected pseudometric collapses to the ordinary L1
    distance; :func:`d1_sym_witness` exhibits a common lower bound realizing
    it as a two-leg directed trip.
    """
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")
    zero = _constants_like(x)[0]
    return sum((b - a if b >= a else a - b for a, b in zip(x, y)), zero)


def d1_sym_witness(x: Sequence[Coord], y: Sequence[Coord]) -> tuple[Coord, ...]:
    """The coordinatewise minimum ``z``: it sits below both points and
    attains ``d1(z, x) + d1(z, y) == d1_sym(x, y)``."""
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")
    return tuple(min(a, b) for a, b in zip(x, y))


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Parse ``"p1/q1,p2/q2,..."`` into exact rational coordinates in [0, 1]."""
    text = text.strip()
    if not text:
        return ()
    coords = tuple(Fraction(tok.strip()) for tok in text.split(","))
    for c in coords:
        if not 0 <= c <= 1:
            raise ValueError(f"coordinate {c} outside [0, 1]")
    return coords


def format_point(x: Sequence) -> str:
    return ",".join(str(c) for c in x)


def vertex_coords(bits: int, n: int) -> tuple[int, ...]:
    return tuple((bits >> i) & 1 for i in range(n))


def eval_at_vertex(f: CubeMap, bits: int) -> tuple[int, ...]:
    """Topologized evaluation restricted to a vertex equals the table entry."""
    return vertex_coords(f.table[bits], f.cod_dim)
