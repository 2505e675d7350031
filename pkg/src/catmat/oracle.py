"""Brute-force search for a composition table, independent of the decider.

Morphisms are numbered 0..T-1 hom-set by hom-set.  The identity of each
object is pinned to the first morphism of its diagonal hom-set (any category
can be relabeled into that form), unit laws fill in the forced cells, and a
depth-first search assigns the rest in lexicographic (cell, candidate) order.
Associativity of a partial table is enforced incrementally: each assignment
re-checks exactly the triples it could have completed, so a fully assigned
table is a category with no further checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .category import FiniteCategory
from .matrix import HomMatrix

DEFAULT_MAX_ASSIGNMENTS = 10_000_000


@dataclass
class SearchBudget:
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS


@dataclass
class OracleResult:
    decision: str  # "yes" | "no" | "unknown"
    assignments: int
    category: FiniteCategory | None = None

    @property
    def exists(self) -> bool:
        return self.decision == "yes"


def oracle_decide(M: HomMatrix, budget: SearchBudget | int | None = None) -> OracleResult:
    """Search all composition tables over M; "unknown" only on budget exhaustion."""
    if budget is None:
        budget = SearchBudget()
    elif isinstance(budget, int):
        budget = SearchBudget(budget)
    max_assignments = budget.max_assignments

    n = M.n
    if n == 0:
        return OracleResult("yes", 0, FiniteCategory(0, {}, {}, {}))
    for x in range(n):
        if M[x][x] == 0:
            return OracleResult("no", 0)

    src = []
    tgt = []
    hom_ids: dict[tuple[int, int], list[int]] = {}
    for x in range(n):
        for y in range(n):
            ids = []
            for _ in range(M[x][y]):
                ids.append(len(src))
                src.append(x)
                tgt.append(y)
            hom_ids[(x, y)] = ids
    T = len(src)
    id_of = [hom_ids[(x, x)][0] for x in range(n)]

    # Composable cells and their candidate sets; an empty candidate set is an
    # immediate rejection (a composite would have nowhere to go).
    cells = []
    cand: dict[int, list[int]] = {}
    for g in range(T):
        for f in range(T):
            if src[g] != tgt[f]:
                continue
            options = hom_ids[(src[f], tgt[g])]
            if not options:
                return OracleResult("no", 0)
            slot = g * T + f
            cells.append(slot)
            cand[slot] = options

    triples = []
    by_cell: dict[int, list[int]] = {slot: [] for slot in cells}
    for g in range(T):
        for f in range(T):
            if src[g] != tgt[f]:
                continue
            for h in range(T):
                if src[h] != tgt[g]:
                    continue
                idx = len(triples)
                triples.append((h, g, f))
                by_cell[g * T + f].append(idx)
                by_cell[h * T + g].append(idx)

    table: list[int | None] = [None] * (T * T)
    assigned_to: list[list[int]] = [[] for _ in range(T)]
    assignments = 0

    def triple_ok(h: int, g: int, f: int) -> bool:
        p = table[g * T + f]
        if p is None:
            return True
        q = table[h * T + g]
        if q is None:
            return True
        left = table[h * T + p]
        if left is None:
            return True
        right = table[q * T + f]
        return right is None or left == right

    def assign(slot: int, val: int) -> bool:
        """Place val and re-check every triple this could have completed."""
        table[slot] = val
        assigned_to[val].append(slot)
        for idx in by_cell[slot]:
            h, g, f = triples[idx]
            if not triple_ok(h, g, f):
                return False
        a, b = divmod(slot, T)
        for s2 in assigned_to[b]:
            g2, f2 = divmod(s2, T)
            if not triple_ok(a, g2, f2):
                return False
        for s2 in assigned_to[a]:
            h2, g2 = divmod(s2, T)
            if not triple_ok(h2, g2, b):
                return False
        return True

    def unassign(slot: int) -> None:
        val = table[slot]
        table[slot] = None
        assigned_to[val].pop()

    # Unit laws and single-candidate hom-sets force part of the table up front.
    forced: dict[int, int] = {}
    for g in range(T):
        forced[g * T + id_of[src[g]]] = g
    for f in range(T):
        forced[id_of[tgt[f]] * T + f] = f
    for slot in cells:
        options = cand[slot]
        if len(options) == 1:
            prior = forced.get(slot)
            if prior is not None and prior != options[0]:
                return OracleResult("no", assignments)
            forced.setdefault(slot, options[0])

    for slot in sorted(forced):
        assignments += 1
        if assignments > max_assignments:
            return OracleResult("unknown", assignments - 1)
        if not assign(slot, forced[slot]):
            return OracleResult("no", assignments)

    free = [slot for slot in cells if slot not in forced]
    free.sort()

    depth = 0
    choice = [0] * (len(free) + 1)
    while True:
        if depth == len(free):
            homs = {pair: tuple(ids) for pair, ids in hom_ids.items() if ids}
            identity = {x: id_of[x] for x in range(n)}
            full = {}
            for slot in cells:
                g, f = divmod(slot, T)
                full[(g, f)] = table[slot]
            return OracleResult(
                "yes", assignments, FiniteCategory(n, homs, identity, full)
            )
        slot = free[depth]
        options = cand[slot]
        advanced = False
        while choice[depth] < len(options):
            val = options[choice[depth]]
            assignments += 1
            if assignments > max_assignments:
                return OracleResult("unknown", assignments - 1)
            if assign(slot, val):
                depth += 1
                choice[depth] = 0
                advanced = True
                break
            unassign(slot)
            choice[depth] += 1
        if advanced:
            continue
        # Exhausted this cell: backtrack to the previous free cell.
        choice[depth] = 0
        depth -= 1
        if depth < 0:
            return OracleResult("no", assignments)
        unassign(free[depth])
        choice[depth] += 1
