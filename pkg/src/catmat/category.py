"""Finite categories as explicit composition tables.

Objects are 0..n-1.  Labels can be anything hashable but must be globally
unique across hom-sets, because the composition table is keyed by label pairs
alone.  Instances are immutable by convention: nothing in the package mutates
a category after construction.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Optional, Sequence


class FiniteCategory:
    def __init__(
        self,
        n: int,
        homs: Mapping[tuple[int, int], Sequence[Hashable]],
        identity: Mapping[int, Hashable],
        table: Mapping[tuple[Hashable, Hashable], Hashable],
        coords: Optional[Sequence[tuple[int, int]]] = None,
    ):
        self.n = n
        self.homs = {pair: tuple(labels) for pair, labels in homs.items() if labels}
        self.identity = dict(identity)
        self.table = dict(table)
        self.coords = tuple(coords) if coords is not None else None
        self.hom_of: dict[Hashable, tuple[int, int]] = {}
        for (x, y), labels in sorted(self.homs.items()):
            for label in labels:
                if label in self.hom_of:
                    raise ValueError(f"label appears in two hom-sets: {label!r}")
                self.hom_of[label] = (x, y)

    def hom(self, x: int, y: int) -> tuple:
        return self.homs.get((x, y), ())

    def source(self, label) -> int:
        return self.hom_of[label][0]

    def target(self, label) -> int:
        return self.hom_of[label][1]

    def compose(self, g, f):
        """Table lookup g after f; KeyError if the table has no entry."""
        return self.table[(g, f)]

    def morphism_count(self) -> int:
        return len(self.hom_of)

    def __repr__(self) -> str:
        return f"FiniteCategory(n={self.n}, morphisms={self.morphism_count()})"
