"""Enumeration and unique coface/endo factorization of cotransverse maps.

Every cotransverse map ``f: [m] -> [n]`` factors *uniquely* as an endomap
``psi`` of ``[m]`` followed by a composite of cofaces ``phi: [m] -> [n]``.
This normal form drives almost everything downstream: hom-set counting,
free generation of symmetric transverse sets, coend quotients and the
induced maps on path spaces.

Enumeration proceeds level by level over vertex heights: the image of the
bottom vertex fixes the height of every level (covering pairs go to
covering pairs, so heights shift uniformly), and the image of a vertex must
cover the images of all vertices it covers.  The search is depth-first and
the result is sorted lexicographically on tables, so outputs are stable
across runs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .cube import CubeMap, bit_height, compose

DEFAULT_BUDGET = 10_000_000
_BUDGET_ENV = "TRANSCUBE_BUDGET"
_budget_override: int | None = None


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would overrun the configured cell budget."""


def set_cell_budget(value: int | None) -> None:
    """Process-wide budget override; ``None`` restores env/default lookup."""
    global _budget_override
    _budget_override = value


def cell_budget() -> int:
    """Enumeration budget in table cells; the explicit override wins, then
    the TRANSCUBE_BUDGET environment variable, then the default."""
    if _budget_override is not None:
        return _budget_override
    raw = os.environ.get(_BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    return int(raw)


def _levels(m: int) -> list[list[int]]:
    """Vertex masks of the m-cube grouped by height, masks ascending."""
    out: list[list[int]] = [[] for _ in range(m + 1)]
    for x in range(1 << m):
        out[bit_height(x)].append(x)
    return out


@lru_cache(maxsize=None)
def enumerate_homset(m: int, n: int) -> tuple[CubeMap, ...]:
    """All cotransverse maps ``[m] -> [n]`` in lexicographic table order.

    Empty when ``m > n``.  Raises :class:`BudgetExceeded` once the emitted
    tables would exceed the configured cell budget; the guard keeps desk
    scale exhaustive searches from blowing up past dimension 5 or so.
    """
    if m < 0 or n < 0:
        raise ValueError("dimensions must be nonnegative")
    if m > n:
        return ()
    budget = cell_budget()
    if (1 << m) * max(n, 1) > budget:
        raise BudgetExceeded(f"table of {1 << m} cells exceeds budget {budget}")
    if m == 0:
        return tuple(CubeMap(0, n, (v,)) for v in range(1 << n))

    order: list[int] = []  # vertices by (height, mask); images assigned in this order
    for level in _levels(m):
        order.extend(level)
    position = {x: k for k, x in enumerate(order)}
    covers_below = [
        [x & ~(1 << i) for i in range(m) if (x >> i) & 1] for x in range(1 << m)
    ]

    tables: list[tuple[int, ...]] = []
    image = [0] * (1 << m)
    cells_emitted = 0

    def candidates(x: int) -> list[int]:
        # The image must cover the image of every lower cover of x.  All of
        # those lie one level down, so any valid image is their union plus
        # enough fresh bits to land exactly one level above it.
        below = covers_below[x]
        union = 0
        for y in below:
            union |= image[y]
        target = bit_height(image[0]) + bit_height(x)
        missing = target - bit_height(union)
        if missing < 0:
            return []
        if missing == 0:
            return [union]
        free = [i for i in range(n) if not (union >> i) & 1]
        cands = []
        for extra in combinations(free, missing):
            w = union
            for i in extra:
                w |= 1 << i
            cands.append(w)
        return sorted(cands)

    def dfs(k: int) -> None:
        nonlocal cells_emitted
        if k == len(order):
            cells_emitted += 1 << m
            if cells_emitted > budget:
                raise BudgetExceeded(
                    f"enumeration of [{m}]->[{n}] exceeded budget of {budget} cells"
                )
            tables.append(tuple(image))
            return
        x = order[k]
        for w in candidates(x):
            image[x] = w
            dfs(k + 1)

    # Bottom vertex: any image low enough that m more height levels fit above.
    for bottom in sorted(range(1 << n), key=lambda v: (bit_height(v), v)):
        if bit_height(bottom) <= n - m:
            image[0] = bottom
            dfs(1)

    tables.sort()
    return tuple(CubeMap(m, n, t) for t in tables)


@lru_cache(maxsize=None)
def enumerate_cofaces(m: int, n: int) -> tuple[CubeMap, ...]:
    """All coface composites ``[m] -> [n]``: choose the m free coordinates and
    the constant value of each remaining one.  Lexicographic table order."""
    if m > n:
        return ()
    tables = []
    for free in combinations(range(n), m):
        fixed = [i for i in range(n) if i not in free]
        for consts in range(1 << (n - m)):
            base = 0
            for k, i in enumerate(fixed):
                base |= ((consts >> k) & 1) << i
            table = []
            for x in range(1 << m):
                w = base
                for k, i in enumerate(free):
                    w |= ((x >> k) & 1) << i
                table.append(w)
            tables.append(tuple(table))
    tables.sort()
    return tuple(CubeMap(m, n, t) for t in tables)


def is_coface(f: CubeMap) -> bool:
    """True when ``f`` inserts constant coordinates only (identity on the rest)."""
    return factorize(f).psi.is_identity()


def count_homset(m: int, n: int) -> int:
    """Size of the hom-set ``[m] -> [n]`` by the closed form
    ``|endos of [m]| * C(n, m) * 2^(n-m)``: pick the coface part, then the
    endomap part of the unique factorization."""
    if m > n:
        return 0
    endos = len(enumerate_homset(m, m))
    return endos * comb(n, m) * (1 << (n - m))


@dataclass(frozen=True)
class Factorization:
    """Unique normal form ``f = phi o psi`` with ``psi`` an endomap of the
    source cube and ``phi`` a composite of cofaces."""

    psi: CubeMap
    phi: CubeMap

    @property
    def composite(self) -> CubeMap:
        return compose(self.phi, self.psi)


@lru_cache(maxsize=None)
def factorize(f: CubeMap) -> Factorization:
    """Split ``f`` into its endomap and coface parts.

    The constant coordinates of ``phi`` are the ones where the images of the
    bottom and top vertices agree (with that shared value); the remaining m
    coordinates, in increasing order, carry ``psi``, which is ``f`` read off
    on those coordinates.  Reconstruction is checked and a failure raises,
    which can only happen on a table that is not actually cotransverse.
    Results are memoised: normal forms are requested constantly downstream.
    """
    m, n = f.dom_dim, f.cod_dim
    lo, hi = f.table[0], f.table[-1]
    free = tuple(i for i in range(n) if ((lo ^ hi) >> i) & 1)
    if len(free) != m:
        raise ValueError("map does not span a face of the expected dimension")

    psi_table = []
    for x in range(1 << m):
        fx = f.table[x]
        psi_table.append(sum(((fx >> pos) & 1) << k for k, pos in enumerate(free)))
    psi = CubeMap(m, m, tuple(psi_table))

    phi_table = []
    for x in range(1 << m):
        w = lo
        for k, pos in enumerate(free):
            w |= ((x >> k) & 1) << pos
        phi_table.append(w)
    phi = CubeMap(m, n, tuple(phi_table))

    if compose(phi, psi).table != f.table:
        raise ValueError(f"factorization failed to reconstruct {f.literal()}")
    return Factorization(psi, phi)


@lru_cache(maxsize=None)
def decompose_coface(phi: CubeMap) -> tuple[tuple[int, int, int], ...]:
    """Write a coface composite as elementary insertions.

    Returns ``[(n1, i1, a1), (n2, i2, a2), ...]`` meaning ``phi`` is the
    insertion at coordinate ``i1`` into ``[n1]`` first, then ``i2`` into
    ``[n2]``, and so on upward.  Inserting at ascending coordinate positions
    keeps later indices stable.
    """
    if not is_coface(phi):
        raise ValueError(f"{phi.literal()} is not a composite of cofaces")
    m, n = phi.dom_dim, phi.cod_dim
    lo, hi = phi.table[0], phi.table[-1]
    steps = []
    dim = m
    for pos in range(n):
        if not ((lo ^ hi) >> pos) & 1:
            dim += 1
            steps.append((dim, pos + 1, (lo >> pos) & 1))
    return tuple(steps)


@dataclass(frozen=True)
class FinalityReport:
    """Outcome of checking that the canonical factorization is final among
    all (endomap, arbitrary) factorizations of a map."""

    ok: bool
    factorizations: int
    counterexample: tuple[CubeMap, CubeMap] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_factorization_final(f: CubeMap) -> FinalityReport:
    """Verify finality of the canonical factorization of ``f``.

    Enumerates every way of writing ``f = h o g`` with ``g`` an endomap of
    the source and ``h`` cotransverse, and checks that exactly one endomap
    ``k`` connects it to the canonical pair ``(phi, psi)``: ``psi = k o g``
    and ``h = phi o k``.
    """
    m, n = f.dom_dim, f.cod_dim
    canonical = factorize(f)
    endos = enumerate_homset(m, m)
    homs = enumerate_homset(m, n)

    count = 0
    for g in endos:
        for h in homs:
            if compose(h, g).table != f.table:
                continue
            count += 1
            connecting = [
                k
                for k in endos
                if compose(k, g).table == canonical.psi.table
                and compose(canonical.phi, k).table == h.table
            ]
            if len(connecting) != 1:
                return FinalityReport(
                    False,
                    count,
                    (h, g),
                    f"{len(connecting)} connecting endomaps instead of 1",
                )
    return FinalityReport(True, count)
