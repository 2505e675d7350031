"""Collapsing duplicate objects and re-expanding categories over them.

Two objects are duplicates when they have identical rows and identical
columns.  Realizability only depends on the reduced matrix: a category for
the reduced matrix inflates to one for the original by cloning objects,
and restricting a category to representatives goes the other way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory
from .errors import CardinalityError
from .labels import Inflated
from .matrix import HomMatrix


def duplicate_relation(M: HomMatrix) -> list[tuple[int, ...]]:
    """Partition object indices into duplicate groups, ordered by smallest member."""
    groups: dict[tuple, list[int]] = {}
    for i in range(M.n):
        key = (M.row(i), M.col(i))
        groups.setdefault(key, []).append(i)
    return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])


@dataclass(frozen=True)
class ReductionMap:
    """Surjection from the n original objects onto the m reduced objects.

    representative[a] is the smallest original index mapping to a; the
    representatives are strictly increasing in a.
    """

    n: int
    m: int
    class_of: tuple[int, ...]
    representative: tuple[int, ...]


def reduce(M: HomMatrix) -> tuple[HomMatrix, ReductionMap]:
    """Collapse duplicate objects; the reduced matrix has no duplicate pair."""
    groups = duplicate_relation(M)
    class_of = [0] * M.n
    representative = []
    for a, group in enumerate(groups):
        representative.append(group[0])
        for i in group:
            class_of[i] = a
    rows = tuple(tuple(M[r][c] for c in representative) for r in representative)
    reduced = HomMatrix(len(groups), rows)
    rmap = ReductionMap(M.n, len(groups), tuple(class_of), tuple(representative))
    return reduced, rmap


def inflate(
    B: FiniteCategory, rmap: ReductionMap, expected: HomMatrix | None = None
) -> FiniteCategory:
    """Clone B's objects along rmap, producing a category on rmap.n objects.

    hom(i, j) carries one Inflated copy of each morphism of
    B.hom(class_of[i], class_of[j]); composition is inherited from B.
    When `expected` is given the resulting hom-set sizes are checked
    against it.
    """
    if B.n != rmap.m:
        raise CardinalityError(f"category has {B.n} objects, map expects {rmap.m}")
    if expected is not None and expected.n != rmap.n:
        raise CardinalityError(f"expected matrix is {expected.n}x{expected.n}, map inflates to {rmap.n}")
    c = rmap.class_of
    homs = {}
    for i in range(rmap.n):
        for j in range(rmap.n):
            inner = B.hom(c[i], c[j])
            if expected is not None and len(inner) != expected[i][j]:
                raise CardinalityError(
                    f"hom({i},{j}) would have {len(inner)} morphisms, expected {expected[i][j]}"
                )
            if inner:
                homs[(i, j)] = tuple(Inflated(i, j, beta) for beta in inner)
    identity = {i: Inflated(i, i, B.identity[c[i]]) for i in range(rmap.n)}
    table = {}
    for (x, y), fs in homs.items():
        for z in range(rmap.n):
            gs = homs.get((y, z))
            if not gs:
                continue
            for g in gs:
                for f in fs:
                    table[(g, f)] = Inflated(x, z, B.table[(g.inner, f.inner)])
    coords = None
    if B.coords is not None:
        coords = tuple(B.coords[c[i]] for i in range(rmap.n))
    return FiniteCategory(rmap.n, homs, identity, table, coords=coords)
