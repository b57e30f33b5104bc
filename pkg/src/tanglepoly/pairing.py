"""Plat-closure bilinear form and the derived tangle invariants.

The form pairs two flat (m,n)-tangles by placing them side by side and
closing adjacent endpoints pairwise with simple arcs; the value is
delta^loops.  Collecting the values over the whole basis gives the matrix A,
and a strand diagram D gets the polynomial

    P(D) = v(D) * A * bar(v(D))^t,

which is unchanged by the three Reidemeister moves.  Its evaluations at the
eight admissible roots of unity are additionally unchanged by replacing
three half-twists on two parallel strands with none.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diagram import TangleDiagram
from .errors import DomainError
from .laurent import LaurentPoly, ZERO, delta_power, ensure_root_index
from .skein import Basis, Matching, bracket, enumerate_basis, vector_bar
from .unionfind import UnionFind

#: Catalan growth makes larger bases impractical to pair.
MAX_HALF_BOUNDARY = 8


def _tensor_point(m: int, n: int, copy: int, position: int) -> int:
    """Point id in the doubled boundary for a circular position of one factor.

    Bottom points of the tensor are numbered 1..2m left-to-right, top points
    2m+1..2m+2n left-to-right; copy 0 sits left of copy 1, and copy 1 is the
    left-right reflection of its factor.  The reflection makes swapping the
    factors a rotation of the closed picture, so the pairing is symmetric
    whatever the parity of m and n.
    """
    if position <= m:
        return position if copy == 0 else 2 * m + 1 - position
    t = m + n - position + 1  # top point index, left-to-right
    return 2 * m + (t if copy == 0 else 2 * n + 1 - t)


def plat_loop_count(m: int, n: int, e_i: Matching, e_j: Matching) -> int:
    """Loop count of the plat closure of e_i placed beside e_j."""
    full = set(range(1, m + n + 1))
    for mt in (e_i, e_j):
        if {p for pair in mt for p in pair} != full:
            raise DomainError(
                f"matching {mt} does not cover the ({m},{n}) boundary")
    uf = UnionFind()
    loops = 0

    def join(u: int, v: int) -> None:
        nonlocal loops
        if not uf.union(u, v):
            loops += 1

    for copy, mt in ((0, e_i), (1, e_j)):
        for a, b in mt:
            join(_tensor_point(m, n, copy, a), _tensor_point(m, n, copy, b))
    for t in range(1, m + 1):
        join(2 * t - 1, 2 * t)
    for t in range(1, n + 1):
        join(2 * m + 2 * t - 1, 2 * m + 2 * t)
    # every point has degree 2, so redundant unions count the cycles
    return loops


@dataclass(frozen=True)
class PairingMatrix:
    basis: Basis
    entries: tuple[tuple[LaurentPoly, ...], ...]


@lru_cache(maxsize=None)
def pairing_matrix(m: int, n: int) -> PairingMatrix:
    if (m + n) // 2 > MAX_HALF_BOUNDARY:
        raise DomainError(
            f"pairing supported only for (m+n)/2 <= {MAX_HALF_BOUNDARY}")
    basis = enumerate_basis(m, n)
    entries = tuple(
        tuple(delta_power(plat_loop_count(m, n, e_i, e_j))
              for e_j in basis.elements)
        for e_i in basis.elements
    )
    return PairingMatrix(basis, entries)


def p_poly(d: TangleDiagram) -> LaurentPoly:
    """Exact pairing polynomial of a strand diagram."""
    v = bracket(d)
    vb = vector_bar(v)
    a = pairing_matrix(d.m, d.n)
    total = ZERO
    for i, vi in enumerate(v.coords):
        if not vi:
            continue
        row = a.entries[i]
        for j, vbj in enumerate(vb.coords):
            if vbj:
                total = total + vi * row[j] * vbj
    return total


def p_eval(d: TangleDiagram, k: int) -> complex:
    ensure_root_index(k)
    return p_poly(d).eval_root(k)
