"""Acceptability of the positivity relation and the class structure it induces.

Write i -> j when M[i][j] >= 1.  The matrix is acceptable when this relation
is reflexive and transitive.  Mutual reachability then partitions the objects
into classes, each class either has an object with exactly one endomorphism
(a basepoint, kind "U") or none (kind "V"), and the classes are strictly
ordered by one-way reachability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAcceptable
from .matrix import HomMatrix


def reaches(M: HomMatrix, i: int, j: int) -> bool:
    return M[i][j] >= 1


@dataclass(frozen=True)
class AcceptabilityCounterexample:
    """First failing instance of reflexivity ("diag") or transitivity ("chain")."""

    kind: str
    indices: tuple[int, ...]


def check_acceptable(M: HomMatrix) -> AcceptabilityCounterexample | None:
    """None when the positivity relation is reflexive and transitive."""
    for i in range(M.n):
        if M[i][i] == 0:
            return AcceptabilityCounterexample("diag", (i,))
    for i in range(M.n):
        for j in range(M.n):
            if M[i][j] == 0:
                continue
            for k in range(M.n):
                if M[j][k] >= 1 and M[i][k] == 0:
                    return AcceptabilityCounterexample("chain", (i, j, k))
    return None


class Partition:
    """Class structure of an acceptable matrix.

    classes[c] lists members ascending; classes are ordered by smallest member.
    kinds[c] is "U" or "V".  Local indices: the basepoint of a U class is 0 and
    the remaining members count up from 1; V class members count up from 1.
    order holds the pairs (c, d) with class c strictly above class d, meaning
    morphisms flow from c's objects to d's and never back.
    multiple_units lists (class, members-with-one-endomorphism) for classes
    where the basepoint is not unique; such matrices are never realizable but
    the partition is still returned for reporting.
    """

    def __init__(self, M: HomMatrix):
        cex = check_acceptable(M)
        if cex is not None:
            raise NotAcceptable(cex)
        n = M.n
        class_of = [-1] * n
        classes: list[tuple[int, ...]] = []
        for i in range(n):
            if class_of[i] >= 0:
                continue
            members = [j for j in range(n) if M[i][j] >= 1 and M[j][i] >= 1]
            for j in members:
                class_of[j] = len(classes)
            classes.append(tuple(members))

        kinds = []
        basepoints = []
        multiple_units = []
        local_of: list[tuple[int, int]] = [(-1, -1)] * n
        for c, members in enumerate(classes):
            units = tuple(x for x in members if M[x][x] == 1)
            if units:
                kinds.append("U")
                bp = units[0]
                basepoints.append(bp)
                if len(units) > 1:
                    multiple_units.append((c, units))
                local_of[bp] = (c, 0)
                nxt = 1
                for x in members:
                    if x != bp:
                        local_of[x] = (c, nxt)
                        nxt += 1
            else:
                kinds.append("V")
                basepoints.append(None)
                for t, x in enumerate(members):
                    local_of[x] = (c, t + 1)

        order = set()
        for c, cm in enumerate(classes):
            for d, dm in enumerate(classes):
                if c != d and M[cm[0]][dm[0]] >= 1:
                    order.add((c, d))

        self.matrix = M
        self.classes = tuple(classes)
        self.kinds = tuple(kinds)
        self.basepoints = tuple(basepoints)
        self.class_of = tuple(class_of)
        self.local_of = tuple(local_of)
        self.order = frozenset(order)
        self.multiple_units = tuple(multiple_units)
        self._obj = {coord: x for x, coord in enumerate(local_of)}

    def obj(self, c: int, i: int) -> int:
        """Object index with local coordinates (class c, local index i)."""
        return self._obj[(c, i)]

    def is_u(self, c: int) -> bool:
        return self.kinds[c] == "U"

    def above(self, c: int, d: int) -> bool:
        return (c, d) in self.order

    def locals_of(self, c: int) -> list[tuple[int, int]]:
        """Pairs (local index, object) of class c, ascending in local index."""
        pairs = [(self.local_of[x][1], x) for x in self.classes[c]]
        return sorted(pairs)

    def __repr__(self) -> str:
        parts = [
            f"{c}:{self.kinds[c]}{list(members)}" for c, members in enumerate(self.classes)
        ]
        return f"Partition({'; '.join(parts)})"


def build_partition(M: HomMatrix) -> Partition:
    """Partition an acceptable matrix; raises NotAcceptable otherwise."""
    return Partition(M)
