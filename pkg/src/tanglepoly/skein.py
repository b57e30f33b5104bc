"""Flat-tangle basis and bracket reduction for strand diagrams.

A strand diagram with m bottom and n top endpoints reduces, by resolving
every crossing into its two planar smoothings and removing free loops at
delta = -q^2 - q^-2, to a combination of flat diagrams: non-crossing perfect
matchings of the boundary.  Matchings are recorded on circular positions
1..m+n (bottom left-to-right, then top right-to-left), so the top point at
0-based index i sits at position m + n - i.

Two reduction routes are provided on purpose.  bracket() applies the skein
relation recursively through diagram surgery; bracket_oracle() enumerates
all 2^c smoothing states directly over a union-find.  They share no
resolution code and must agree exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import TangleDiagram, ensure_valid, merge_edges
from .errors import DomainError, InvalidDiagramError
from .laurent import LaurentPoly, ONE, ZERO, delta_power
from .unionfind import UnionFind

Pair = tuple[int, int]
Matching = tuple[Pair, ...]

_Q = LaurentPoly.monomial(1, 1)
_QINV = LaurentPoly.monomial(1, -1)


def circular_position(m: int, n: int, side: str, index: int) -> int:
    if side == "bot":
        return index + 1
    return m + n - index


def is_noncrossing(matching: Matching) -> bool:
    for i, (a, b) in enumerate(matching):
        for c, d in matching[i + 1:]:
            if a < c < b < d or c < a < d < b:
                return False
    return True


def format_matching(matching: Matching) -> str:
    return "".join(f"({a},{b})" for a, b in matching)


@dataclass(frozen=True)
class Basis:
    m: int
    n: int
    elements: tuple[Matching, ...]
    _index: dict[Matching, int] = field(
        default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self._index.update({mt: i for i, mt in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, matching: Matching) -> int:
        try:
            return self._index[matching]
        except KeyError:
            raise DomainError(f"matching {format_matching(matching)} not in "
                              f"the ({self.m},{self.n}) basis") from None


def _noncrossing_matchings(points: tuple[int, ...]) -> list[Matching]:
    if not points:
        return [()]
    first = points[0]
    out: list[Matching] = []
    # pairing the first point with an odd offset keeps both sides even
    for i in range(1, len(points), 2):
        inner = _noncrossing_matchings(points[1:i])
        outer = _noncrossing_matchings(points[i + 1:])
        for mi in inner:
            for mo in outer:
                out.append(((first, points[i]),) + mi + mo)
    return out


@lru_cache(maxsize=None)
def enumerate_basis(m: int, n: int) -> Basis:
    """All non-crossing perfect matchings of m+n circular positions, sorted."""
    if m < 0 or n < 0:
        raise DomainError("boundary counts cannot be negative")
    if (m + n) % 2:
        raise DomainError("no flat basis: m + n must be even")
    raw = _noncrossing_matchings(tuple(range(1, m + n + 1)))
    elements = sorted(tuple(sorted(mt)) for mt in raw)
    return Basis(m, n, tuple(elements))


@dataclass(frozen=True)
class CoordinateVector:
    basis: Basis
    coords: tuple[LaurentPoly, ...]

    def __post_init__(self):
        if len(self.coords) != len(self.basis.elements):
            raise ValueError("coordinate count does not match basis size")

    def __getitem__(self, i: int) -> LaurentPoly:
        return self.coords[i]

    def as_dict(self) -> dict[Matching, LaurentPoly]:
        return {mt: c for mt, c in zip(self.basis.elements, self.coords) if c}


def vector_bar(v: CoordinateVector) -> CoordinateVector:
    return CoordinateVector(v.basis, tuple(c.bar() for c in v.coords))


def _check_strand_diagram(d: TangleDiagram) -> None:
    # a graph diagram is a valid file, just outside this operation: DomainError
    # so the CLI reports it on the domain channel, not as a bad input file
    if d.trivalent or d.fourvalent:
        raise DomainError(
            "bracket reduction needs a strand diagram; graph vertices present")
    if d.thick:
        raise DomainError("bracket reduction needs an empty thick set")


def resolve_flat(d: TangleDiagram) -> tuple[Matching, int]:
    """Boundary matching and free-circle count of a crossingless diagram."""
    if d.crossings:
        raise InvalidDiagramError("resolve_flat needs a crossingless diagram")
    _check_strand_diagram(d)
    positions: dict[int, list[int]] = {}
    for i, lab in enumerate(d.bottom):
        positions.setdefault(lab, []).append(circular_position(d.m, d.n, "bot", i))
    for i, lab in enumerate(d.top):
        positions.setdefault(lab, []).append(circular_position(d.m, d.n, "top", i))
    pairs = []
    for lab in positions:
        if len(positions[lab]) != 2:
            raise InvalidDiagramError(
                f"label {lab} does not join two boundary points")
        a, b = sorted(positions[lab])
        pairs.append((a, b))
    matching = tuple(sorted(pairs))
    if not is_noncrossing(matching):
        raise InvalidDiagramError("nonplanar input detected")
    return matching, len(d.circles)


def smooth_first_crossing(d: TangleDiagram, which: str) -> TangleDiagram:
    """Remove the first crossing, joining its ends per the chosen smoothing.

    "A" joins (a,b) and (c,d) (coefficient q in the skein relation); "B"
    joins (a,d) and (b,c) (coefficient q^-1).  A join between the two ends
    of one edge produces a fresh circle.
    """
    a, b, c, dd = d.crossings[0]
    joins = ((a, b), (c, dd)) if which == "A" else ((a, dd), (b, c))
    return merge_edges(
        TangleDiagram(m=d.m, n=d.n, crossings=d.crossings[1:],
                      circles=d.circles, bottom=d.bottom, top=d.top),
        joins)


def bracket(d: TangleDiagram) -> CoordinateVector:
    """Coordinate vector of a strand diagram in the flat basis.

    Recursive: each crossing (a,b,c,d), under-pair (a,c), splits into the
    A-smoothing with coefficient q and the B-smoothing with q^-1; flat
    leaves contribute delta^circles on their matching.  2^c leaves total.
    """
    _check_strand_diagram(d)
    ensure_valid(d)
    basis = enumerate_basis(d.m, d.n)
    acc: dict[Matching, LaurentPoly] = {}

    def rec(cur: TangleDiagram, coeff: LaurentPoly) -> None:
        if not cur.crossings:
            matching, circles = resolve_flat(cur)
            term = coeff * delta_power(circles)
            acc[matching] = acc.get(matching, ZERO) + term
            return
        rec(smooth_first_crossing(cur, "A"), coeff * _Q)
        rec(smooth_first_crossing(cur, "B"), coeff * _QINV)

    rec(d, ONE)
    return CoordinateVector(basis, tuple(acc.get(mt, ZERO) for mt in basis.elements))


def bracket_oracle(d: TangleDiagram) -> CoordinateVector:
    """Independent bracket: enumerate all 2^c smoothing states over a union-find.

    Each state is scored q^(#A - #B) * delta^circles on its boundary class.
    No diagram surgery and no recursion; kept separate from bracket() so the
    two can check each other.
    """
    _check_strand_diagram(d)
    ensure_valid(d)
    basis = enumerate_basis(d.m, d.n)
    boundary = (
        [(circular_position(d.m, d.n, "bot", i), lab) for i, lab in enumerate(d.bottom)]
        + [(circular_position(d.m, d.n, "top", i), lab) for i, lab in enumerate(d.top)]
    )
    acc: dict[Matching, LaurentPoly] = {}
    c = len(d.crossings)
    for mask in range(1 << c):
        uf = UnionFind()
        circles = len(d.circles)
        exponent = 0
        for i, (a, b, cc, dd) in enumerate(d.crossings):
            if mask >> i & 1:
                joins = ((a, dd), (b, cc))
                exponent -= 1
            else:
                joins = ((a, b), (cc, dd))
                exponent += 1
            for x, y in joins:
                # a redundant union closes exactly one loop
                if not uf.union(x, y):
                    circles += 1
        by_root: dict[int, list[int]] = {}
        for pos, lab in boundary:
            by_root.setdefault(uf.find(lab), []).append(pos)
        pairs = []
        for group in by_root.values():
            if len(group) != 2:
                raise InvalidDiagramError(
                    "smoothing state does not pair the boundary")
            lo, hi = sorted(group)
            pairs.append((lo, hi))
        matching = tuple(sorted(pairs))
        if not is_noncrossing(matching):
            raise InvalidDiagramError("nonplanar input detected")
        term = LaurentPoly.monomial(1, exponent) * delta_power(circles)
        acc[matching] = acc.get(matching, ZERO) + term
    return CoordinateVector(basis, tuple(acc.get(mt, ZERO) for mt in basis.elements))
