"""Set-level boundary hom quotients and latching objects.

For dimensions ``p, q`` and a degree bound ``n``, the boundary hom-set is
the coend over intermediate cubes of dimension below ``n`` of pairs
``(h: [m] -> [q], g: [p] -> [m])``, two pairs being identified whenever a
connecting map rewrites one into the other.  Computed as a union-find
quotient, it collapses onto a closed form: empty when ``p > q`` or
``n <= p``, and in bijection with the full hom-set ``[p] -> [q]``
otherwise, every class containing exactly one pair whose outer leg is a
coface composite out of ``[p]``.

Latching objects of set-valued cotransverse objects are coends weighted by
these boundary hom-sets; they are computed independently and then matched
against evaluation at the boundary of the representable, which is the
identification that reduces the degreewise model structure to the
projective one (matching objects being forced terminal by the emptiness of
the diagonal boundary hom-sets).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

from .cube import CubeMap, compose
from .homsets import count_homset, decompose_coface, enumerate_homset, factorize
from .quotient import QuotientSet
from .sts import Sts, boundary


def boundary_hom(p: int, q: int, n: int) -> QuotientSet:
    """The degree-``n`` boundary hom quotient between ``[p]`` and ``[q]``.

    Elements are triples ``(m, h, g)`` with ``m < n``; the generating
    identifications run over all connecting maps ``k: [m] -> [m']`` between
    admissible levels: ``(m, h o k, g)`` glues to ``(m', h, k o g)``.
    """
    elements = [
        (m, h, g)
        for m in range(n)
        for h in enumerate_homset(m, q)
        for g in enumerate_homset(p, m)
    ]
    quot = QuotientSet(elements)
    for m in range(n):
        for m2 in range(m, n):
            for k in enumerate_homset(m, m2):
                for h in enumerate_homset(m2, q):
                    hk = compose(h, k)
                    for g in enumerate_homset(p, m):
                        quot.identify((m, hk, g), (m2, h, compose(k, g)))
    return quot


def boundary_hom_closed_form(p: int, q: int, n: int) -> int:
    """Cardinality the quotient must have: 0 off the admissible range,
    otherwise the size of the full hom-set ``[p] -> [q]``."""
    if p > q or n <= p:
        return 0
    return count_homset(p, q)


def canonical_pairs(quot: QuotientSet, p: int, q: int) -> list[tuple]:
    """Members of shape ``(p, coface composite, endomap)``, one per class
    when the quotient is in its expected form."""
    out = []
    for cls in quot.classes():
        found = [
            (m, h, g)
            for (m, h, g) in cls
            if m == p and factorize(h).psi.is_identity()
        ]
        out.append(found)
    return out


def matching_emptiness_check(n: int, m: int) -> bool:
    """The diagonal boundary hom-set out of ``[n]`` is empty, so weighted
    limits over it are terminal: the degreewise matching data is trivial."""
    return boundary_hom(n, m, n).is_empty()


class CotransverseSetObj:
    """A covariant set-valued functor on cubes and cotransverse maps.

    ``values[n]`` is a finite set (tuple) and the action is stored on the
    generating family: ``coface_maps[(n, i, alpha)]`` sends level ``n - 1``
    values to level ``n`` ones, ``endo_maps[n][e]`` acts on level ``n``.
    A general map applies its endomap part first, then the elementary
    cofaces bottom-up.
    """

    def __init__(
        self,
        max_dim: int,
        values: Mapping[int, tuple[Hashable, ...]],
        coface_maps: Mapping[tuple[int, int, int], Mapping[Hashable, Hashable]],
        endo_maps: Mapping[int, Mapping[CubeMap, Mapping[Hashable, Hashable]]],
    ) -> None:
        self.max_dim = max_dim
        self.values = {n: tuple(values.get(n, ())) for n in range(max_dim + 1)}
        self.coface_maps = {k: dict(v) for k, v in coface_maps.items()}
        self.endo_maps = {n: {e: dict(t) for e, t in by.items()} for n, by in endo_maps.items()}

    def apply(self, f: CubeMap, a: Hashable) -> Hashable:
        fac = factorize(f)
        if f.dom_dim > 0:
            a = self.endo_maps[f.dom_dim][fac.psi][a]
        for dim, i, alpha in decompose_coface(fac.phi):
            a = self.coface_maps[(dim, i, alpha)][a]
        return a

    def check_functorial(self, exhaustive_dim: int) -> None:
        from .cube import identity

        top = min(self.max_dim, exhaustive_dim)
        for n in range(top + 1):
            for a in self.values[n]:
                assert self.apply(identity(n), a) == a, "identity action moved a value"
        for m in range(top + 1):
            for n in range(m, top + 1):
                for p2 in range(n, top + 1):
                    for f in enumerate_homset(m, n):
                        for g in enumerate_homset(n, p2):
                            gf = compose(g, f)
                            for a in self.values[m]:
                                if self.apply(gf, a) != self.apply(g, self.apply(f, a)):
                                    raise AssertionError(
                                        f"covariant functoriality fails at {a!r}"
                                    )


def built_obj(
    max_dim: int,
    values: Callable[[int], list[Hashable]],
    act: Callable[[CubeMap, Hashable], Hashable],
) -> CotransverseSetObj:
    """Materialize the generating-family tables from an action rule."""
    from .cube import coface as elementary_coface

    vals = {n: tuple(values(n)) for n in range(max_dim + 1)}
    coface_maps = {}
    endo_maps: dict[int, dict[CubeMap, dict[Hashable, Hashable]]] = {}
    for n in range(1, max_dim + 1):
        for i in range(1, n + 1):
            for alpha in (0, 1):
                delta = elementary_coface(i, alpha, n)
                coface_maps[(n, i, alpha)] = {a: act(delta, a) for a in vals[n - 1]}
        endo_maps[n] = {}
        for e in enumerate_homset(n, n):
            endo_maps[n][e] = {a: act(e, a) for a in vals[n]}
    return CotransverseSetObj(max_dim, vals, coface_maps, endo_maps)


def constant_obj(points: tuple[Hashable, ...], max_dim: int) -> CotransverseSetObj:
    """The constant functor: same set everywhere, all maps act as identity."""
    return built_obj(max_dim, lambda n: list(points), lambda f, a: a)


def hom_obj(k: int, max_dim: int) -> CotransverseSetObj:
    """The covariant hom functor out of ``[k]``: level ``n`` is the hom-set
    ``[k] -> [n]`` with maps acting by postcomposition.  ``k = 0`` gives the
    vertices functor."""
    return built_obj(
        max_dim,
        lambda n: list(enumerate_homset(k, n)),
        lambda f, u: compose(f, u),
    )


def free_obj(k: int, tags: tuple[Hashable, ...], max_dim: int) -> CotransverseSetObj:
    """Copies of the hom functor out of ``[k]``, one per tag."""
    return built_obj(
        max_dim,
        lambda n: [(u, t) for t in tags for u in enumerate_homset(k, n)],
        lambda f, ut: (compose(f, ut[0]), ut[1]),
    )


def weighted_coend_eval(a_obj: CotransverseSetObj, k_sts: Sts) -> QuotientSet:
    """Evaluation of the colimit-preserving extension of ``a_obj`` at a
    symmetric transverse set: the coend of ``cubes x values`` where pulling
    a cube back matches pushing a value forward."""
    top = min(a_obj.max_dim, k_sts.max_dim)
    elements = [
        (n, c, a)
        for n in range(top + 1)
        for c in k_sts.cubes[n]
        for a in a_obj.values[n]
    ]
    quot = QuotientSet(elements)
    for (n, i, alpha), face_table in k_sts.face.items():
        if n > top:
            continue
        amap = a_obj.coface_maps[(n, i, alpha)]
        for c, fc in face_table.items():
            for a in a_obj.values[n - 1]:
                quot.identify((n - 1, fc, a), (n, c, amap[a]))
    for n, by_endo in k_sts.endo.items():
        if n > top:
            continue
        for e, table in by_endo.items():
            amap = a_obj.endo_maps[n][e]
            for c, ec in table.items():
                for a in a_obj.values[n]:
                    quot.identify((n, ec, a), (n, c, amap[a]))
    return quot


def latching(a_obj: CotransverseSetObj, n: int) -> QuotientSet:
    """Degree-``n`` latching object: the coend of the boundary-hom weight
    against the functor.

    Elements are ``(p, w, a)`` with ``w`` a canonical boundary-hom class
    representative and ``a`` a level-``p`` value; generators identify
    reindexing the weight against acting on the value.
    """
    weights: dict[int, QuotientSet] = {p: boundary_hom(p, n, n) for p in range(n)}

    def wclass(p: int, member: tuple) -> tuple:
        return weights[p].class_of(member)

    elements = [
        (p, w, a)
        for p in range(n)
        for w in weights[p].representatives()
        for a in a_obj.values[p]
    ]
    quot = QuotientSet(elements)
    from .cube import coface as elementary_coface

    gens: list[tuple[int, int, CubeMap]] = []  # (src dim, dst dim, map)
    for p in range(1, n):
        for i in range(1, p + 1):
            for alpha in (0, 1):
                gens.append((p - 1, p, elementary_coface(i, alpha, p)))
        for e in enumerate_homset(p, p):
            gens.append((p, p, e))
    for p_src, p_dst, u in gens:
        # u: [p_src] -> [p_dst] reindexes weights contravariantly and pushes
        # values covariantly: (W(u)w, a) at p_src glues to (w, A(u)a) at p_dst.
        for w in weights[p_dst].representatives():
            m, h, g = w
            w_src = wclass(p_src, (m, h, compose(g, u)))
            for a in a_obj.values[p_src]:
                quot.identify((p_src, w_src, a), (p_dst, w, a_obj.apply(u, a)))
    return quot


@dataclass(frozen=True)
class LatchingComparison:
    """Outcome of matching a latching object against boundary evaluation."""

    bijective: bool
    latching_size: int
    boundary_eval_size: int
    detail: str = ""

    def __bool__(self) -> bool:
        return self.bijective


def compare_latching_to_boundary(a_obj: CotransverseSetObj, n: int) -> LatchingComparison:
    """Exhibit the canonical bijection between the latching object and the
    functor evaluated at the boundary of the representable.

    An element ``(p, (m, h, g), a)`` of the latching coend maps to the class
    of ``(p, cube of h o g, a)``; the map must be well defined on classes
    and a bijection.
    """
    lat = latching(a_obj, n)
    bnd = boundary(n)
    ev = weighted_coend_eval(a_obj, bnd)

    cube_index: dict[tuple[int, tuple[int, ...]], int] = {}
    for c in bnd.all_cubes():
        u = bnd.labels[c]
        cube_index[(u.dom_dim, u.table)] = c

    image_classes: dict[tuple, tuple] = {}
    for cls in lat.classes():
        targets = set()
        for (p, (m, h, g), a) in cls:
            hg = compose(h, g)
            c = cube_index[(p, hg.table)]
            targets.add(ev.class_of((p, c, a)))
        if len(targets) != 1:
            return LatchingComparison(False, len(lat), len(ev), "map not well defined")
        image_classes[lat.class_of(cls[0])] = targets.pop()

    injective = len(set(image_classes.values())) == len(image_classes)
    surjective = set(image_classes.values()) == {ev.class_of(r) for r in ev.representatives()}
    ok = injective and surjective and len(lat) == len(ev)
    return LatchingComparison(ok, len(lat), len(ev), "" if ok else "not bijective")
