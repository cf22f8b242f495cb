"""Directed distances in realizations of finite symmetric transverse sets.

The vertex-to-vertex directed distance is modelled on the 1-skeleton: one
unit arc per edge, oriented from the face picked out by inserting 0 to the
face picked out by inserting 1.  Shortest directed arc paths agree with the
single-cube directed L1 metric on representables and are validated against
chain sampling; the identification with the realized coend metric is a
desk-scale modeling assumption, not a theorem, and the API documents it as
such.

Interior points are handled by :func:`chain_distance_sample`, which returns
a certified upper bound: it runs a shortest path over a waypoint graph
whose arcs are realizable directed segments (comparable pairs within one
cube, scored by the exact directed L1 distance).  Refining the waypoint
grid can only shrink the bound.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cube import INF
from .paths import DPath
from .topo import d1_point, point_height
from .sts import Sts


@dataclass(frozen=True)
class SkeletonDigraph:
    """Vertices of a symmetric transverse set with one unit arc per edge."""

    nodes: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, sts: Sts) -> SkeletonDigraph:
        nodes = sts.cubes[0]
        arcs = []
        for e in sts.cubes.get(1, ()):
            src = sts.face[(1, 1, 0)][e]
            dst = sts.face[(1, 1, 1)][e]
            arcs.append((src, dst))
        return cls(tuple(nodes), tuple(arcs))

    def successors(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.nodes}
        for a, b in self.arcs:
            out[a].append(b)
        return out


def vertex_distance(sts: Sts, a: int, b: int) -> int | float:
    """Length of the shortest directed arc path from ``a`` to ``b`` in the
    1-skeleton; infinite when no directed path exists."""
    graph = SkeletonDigraph.of(sts)
    if a not in graph.nodes or b not in graph.nodes:
        raise ValueError("unknown vertex id")
    if a == b:
        return 0
    succ = graph.successors()
    dist = {a: 0}
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for v in succ[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    if v == b:
                        return dist[v]
                    nxt.append(v)
        frontier = nxt
    return INF


@dataclass(frozen=True)
class PointPresentation:
    """A point of the realization, presented in the coordinates of one cube."""

    cube_id: int
    local: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(not 0 <= c <= 1 for c in self.local):
            raise ValueError("local coordinates must lie in [0, 1]")


@dataclass(frozen=True)
class ChainBound:
    """A certified upper bound on the realized directed distance."""

    value: Fraction | float
    exhausted: bool = False  # budget cut the waypoint refinement short

    def __bool__(self) -> bool:
        return self.value is not INF


def _cube_waypoints(dim: int, refinement: int) -> list[tuple[Fraction, ...]]:
    """Vertex waypoints plus an optional dyadic grid inside one cube."""
    steps = 1 << refinement
    axis = [Fraction(i, steps) for i in range(steps + 1)]
    if refinement == 0:
        axis = [Fraction(0), Fraction(1)]
    return [tuple(p) for p in product(axis, repeat=dim)]


def chain_distance_sample(
    sts: Sts,
    p: PointPresentation,
    q: PointPresentation,
    budget: int = 4096,
    refinement: int = 0,
) -> ChainBound:
    """Upper-bound the realized directed distance by chain enumeration.

    Builds a digraph over the two query points and sampled waypoints of
    every cube (vertices always; a dyadic grid at positive ``refinement``),
    with an arc for every comparable pair inside a common cube weighted by
    the exact directed L1 gap, waypoints being glued across cubes through
    the vertex action.  Returns the shortest-path value; any reported finite
    value is realized by an explicit chain, so it never undercuts the true
    distance.  ``budget`` caps the node count; when it bites, the refinement
    is reduced and the bound is flagged as exhausted.
    """
    for pres in (p, q):
        if len(pres.local) != sts.dim_of[pres.cube_id]:
            raise ValueError("presentation does not match its cube dimension")

    exhausted = False
    while refinement > 0:
        total = sum(
            ((1 << refinement) + 1) ** sts.dim_of[c] for c in sts.all_cubes()
        )
        if total <= budget:
            break
        refinement -= 1
        exhausted = True

    # Node = ("pt", canonical key) where vertices of cubes are canonicalized
    # through the ambient vertex ids so chains can hop between cubes.
    def node_of(cube_id: int, local: tuple[Fraction, ...]):
        if all(c in (0, 1) for c in local):
            bits = sum(1 << i for i, c in enumerate(local) if c == 1)
            return ("vertex", sts.vertex_of(cube_id, bits))
        return ("interior", cube_id, local)

    per_cube: dict[int, list[tuple]] = {}
    for c in sts.all_cubes():
        dim = sts.dim_of[c]
        pts = _cube_waypoints(dim, refinement)
        if c == p.cube_id:
            pts.append(p.local)
        if c == q.cube_id:
            pts.append(q.local)
        per_cube[c] = [(local, node_of(c, local)) for local in pts]

    adj: dict[object, list[tuple[object, Fraction]]] = {}
    for c, pts in per_cube.items():
        for (xa, na) in pts:
            for (xb, nb) in pts:
                if na == nb:
                    continue
                d = d1_point(xa, xb)
                if d is not INF:
                    adj.setdefault(na, []).append((nb, d))

    source = node_of(p.cube_id, p.local)
    target = node_of(q.cube_id, q.local)
    dist: dict[object, Fraction] = {source: Fraction(0)}
    heap = [(Fraction(0), 0, source)]
    tie = 1
    while heap:
        d, _, u = heapq.heappop(heap)
        if u == target:
            return ChainBound(d, exhausted)
        if d > dist.get(u, INF):
            continue
        for v, w in adj.get(u, ()):
            nd = d + w
            if nd < dist.get(v, INF):
                dist[v] = nd
                heapq.heappush(heap, (nd, tie, v))
                tie += 1
    return ChainBound(INF, exhausted)


def dpath_length(p: DPath) -> Fraction:
    """Total height climbed over the legs of a multi-cube directed path;
    for natural paths this is exactly the parametrization span."""
    total = Fraction(0)
    for _, seg in p.legs:
        total += point_height(seg.end) - point_height(seg.start)
    return total
