"""Shared generators and independent expected-value formulas.

The closed forms here are written directly from the 2x2, unit-first and 4x4
block case analyses and are deliberately kept separate from the package code:
acceptance compares the decider against these, so they must not share logic
with it.
"""

from __future__ import annotations

import random

from catmat import HomMatrix, reduce


def two_by_two_exists(a: int, b: int, c: int, d: int) -> bool:
    """Independent closed form for [[a,b],[c,d]].

    Both diagonals must be positive.  If either off-diagonal entry is zero the
    two objects only interact one way (or not at all) and nothing more is
    required.  Strictly positive matrices follow the four-case table: the
    all-ones matrix collapses to a point; with a 1 on one diagonal the other
    diagonal must exceed b*c; with both diagonals >= 2 anything works.
    """
    if a < 1 or d < 1:
        return False
    if b == 0 or c == 0:
        return True
    if a == 1 and b == 1 and c == 1 and d == 1:
        return True
    if a == 1:
        return d > b * c
    if d == 1:
        return a > b * c
    return True


def unit_first_exists(M: HomMatrix) -> bool:
    """Strictly positive M with M[0][0] = 1 and other diagonals >= 2: yes iff
    every diagonal beats the product of its legs through object 0 and every
    off-diagonal entry reaches the product of its legs."""
    n = M.n
    for i in range(1, n):
        if M[i][i] <= M[0][i] * M[i][0]:
            return False
    for i in range(1, n):
        for j in range(1, n):
            if i != j and M[i][j] < M[i][0] * M[0][j]:
                return False
    return True


def block_4x4(b: int, e: int, x: int, q: int, c: int, k: int, d: int, l: int) -> HomMatrix:
    """Two stacked 2x2 unit-first blocks joined by an upper-right cross block."""
    f = b * e + 1
    m = x * q + 1
    return HomMatrix.from_rows(
        [[1, b, c, d], [e, f, k, l], [0, 0, 1, x], [0, 0, q, m]]
    )


def block_4x4_exists(c: int, k: int, d: int, l: int) -> bool:
    return k >= c and d >= c and l >= c and l >= k and l >= d and l >= k + d - c


def random_matrix(rng: random.Random, n: int, max_entry: int, min_entry: int = 0) -> HomMatrix:
    return HomMatrix.from_rows(
        [[rng.randint(min_entry, max_entry) for _ in range(n)] for _ in range(n)]
    )


def random_unit_first(rng: random.Random, n: int, max_entry: int) -> HomMatrix:
    """Strictly positive, M[0][0] = 1, all other diagonals >= 2."""
    rows = [[rng.randint(1, max_entry) for _ in range(n)] for _ in range(n)]
    rows[0][0] = 1
    for i in range(1, n):
        rows[i][i] = rng.randint(2, max_entry)
    return HomMatrix.from_rows(rows)


def duplicate_objects(rng: random.Random, M: HomMatrix, copies: int) -> HomMatrix:
    """Append duplicate rows/columns for `copies` randomly chosen objects."""
    phi = list(range(M.n))
    for _ in range(copies):
        phi.append(rng.randrange(len(phi)) if phi else 0)
        phi[-1] = phi[phi[-1]]  # duplicate of a duplicate resolves to the original
    size = len(phi)
    return HomMatrix.from_rows(
        [[M[phi[i]][phi[j]] for j in range(size)] for i in range(size)]
    )


def random_reduced(rng: random.Random, n: int, max_entry: int) -> HomMatrix:
    return reduce(random_matrix(rng, n, max_entry))[0]


def check_category_axioms(C, M) -> bool:
    """Naive independent axiom check: sizes, identities, closure, associativity.

    Written as plain dict/loop code with no caps so the mutation tests do not
    share a code path with the package verifier.
    """
    for i in range(max(C.n, M.n)):
        for j in range(max(C.n, M.n)):
            want = M[i][j] if i < M.n and j < M.n else 0
            have = len(C.hom(i, j)) if i < C.n and j < C.n else 0
            if want != have:
                return False
    morphisms = []
    where = {}
    for (x, y), labels in C.homs.items():
        for l in labels:
            morphisms.append(l)
            where[l] = (x, y)
    for x in range(C.n):
        e = C.identity.get(x)
        if e is None or where.get(e) != (x, x):
            return False
    for f in morphisms:
        x, y = where[f]
        if C.table.get((C.identity[y], f)) != f:
            return False
        if C.table.get((f, C.identity[x])) != f:
            return False
    for g in morphisms:
        for f in morphisms:
            if where[f][1] != where[g][0]:
                if (g, f) in C.table:
                    return False
                continue
            h = C.table.get((g, f))
            if h is None or where.get(h) != (where[f][0], where[g][1]):
                return False
    for h in morphisms:
        for g in morphisms:
            if where[g][1] != where[h][0]:
                continue
            for f in morphisms:
                if where[f][1] != where[g][0]:
                    continue
                if C.table[(h, C.table[(g, f)])] != C.table[(C.table[(h, g)], f)]:
                    return False
    return True
