"""Decision procedure: does any finite category have these hom-set sizes?

The test runs on the reduced matrix.  After acceptability and basepoint
uniqueness, realizability comes down to size floors: inside a class with
basepoint, diagonal entries must exceed the product of the legs through the
basepoint, off-diagonal entries must reach it; across ordered classes every
entry must dominate its basepoint row/column floors, and when both classes
have basepoints the two floors must be met jointly.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from .matrix import HomMatrix, principal_submatrix
from .partition import Partition, build_partition, check_acceptable
from .reduction import ReductionMap, reduce


@dataclass(frozen=True)
class Reason:
    """Why a matrix was rejected.

    kind is one of ZeroDiagonal, NotAcceptable, MultipleUnits, UDiagonalFail,
    UOffDiagonalFail, CrossRowFail, CrossColFail, CrossQuadrantFail.
    objects are indices into the matrix the decider was asked about (for a
    reduced entry, the smallest original index of its group); classes and
    local coordinates refer to the reduced matrix's partition.
    """

    kind: str
    objects: tuple[int, ...] = ()
    classes: tuple[int, ...] = ()
    coords: tuple[int, ...] = ()
    required: int | None = None
    actual: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        bits = [self.kind]
        if self.objects:
            bits.append(f"objects={list(self.objects)}")
        if self.required is not None:
            bits.append(f"required>={self.required}")
        if self.actual is not None:
            bits.append(f"actual={self.actual}")
        if self.detail:
            bits.append(self.detail)
        return " ".join(bits)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "objects": list(self.objects)}
        if self.classes:
            out["classes"] = list(self.classes)
        if self.coords:
            out["coords"] = list(self.coords)
        if self.required is not None:
            out["required"] = self.required
        if self.actual is not None:
            out["actual"] = self.actual
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Verdict:
    decision: str  # "yes" | "no"
    reason: Reason | None = None
    reduced: HomMatrix | None = None
    rmap: ReductionMap | None = None
    partition: Partition | None = None
    subset: tuple[int, ...] | None = None

    @property
    def exists(self) -> bool:
        return self.decision == "yes"


def decide(M: HomMatrix) -> Verdict:
    """Decide realizability; a yes verdict carries the reduced matrix,
    the reduction map and the partition used by the witness builder."""
    N, rmap = reduce(M)
    rep = rmap.representative

    for a in range(N.n):
        if N[a][a] == 0:
            return Verdict("no", Reason("ZeroDiagonal", objects=(rep[a],), actual=0, required=1))

    cex = check_acceptable(N)
    if cex is not None:
        return Verdict(
            "no",
            Reason(
                "NotAcceptable",
                objects=tuple(rep[t] for t in cex.indices),
                detail=f"transitivity fails along {[rep[t] for t in cex.indices]}"
                if cex.kind == "chain"
                else "missing endomorphism",
            ),
        )

    part = build_partition(N)
    if part.multiple_units:
        c, units = part.multiple_units[0]
        return Verdict(
            "no",
            Reason(
                "MultipleUnits",
                objects=tuple(rep[u] for u in units),
                classes=(c,),
                detail="several objects with a single endomorphism share a class",
            ),
        )

    for c, members in enumerate(part.classes):
        if not part.is_u(c):
            continue
        bp = part.basepoints[c]
        locs = part.locals_of(c)
        for i, x in locs:
            if i == 0:
                continue
            need = N[x][bp] * N[bp][x] + 1
            if N[x][x] < need:
                return Verdict(
                    "no",
                    Reason(
                        "UDiagonalFail",
                        objects=(rep[x],),
                        classes=(c,),
                        coords=(i,),
                        required=need,
                        actual=N[x][x],
                    ),
                )
        for i, x in locs:
            if i == 0:
                continue
            for j, y in locs:
                if j == 0 or y == x:
                    continue
                need = N[x][bp] * N[bp][y]
                if N[x][y] < need:
                    return Verdict(
                        "no",
                        Reason(
                            "UOffDiagonalFail",
                            objects=(rep[x], rep[y]),
                            classes=(c,),
                            coords=(i, j),
                            required=need,
                            actual=N[x][y],
                        ),
                    )

    for c, d in sorted(part.order):
        cu = part.is_u(c)
        du = part.is_u(d)
        if not (cu or du):
            continue
        bc = part.basepoints[c]
        bd = part.basepoints[d]
        for i, x in part.locals_of(c):
            for j, y in part.locals_of(d):
                if du and j != 0:
                    need = N[x][bd]
                    if N[x][y] < need:
                        return Verdict(
                            "no",
                            Reason(
                                "CrossColFail",
                                objects=(rep[x], rep[y]),
                                classes=(c, d),
                                coords=(i, j),
                                required=need,
                                actual=N[x][y],
                            ),
                        )
                if cu and i != 0:
                    need = N[bc][y]
                    if N[x][y] < need:
                        return Verdict(
                            "no",
                            Reason(
                                "CrossRowFail",
                                objects=(rep[x], rep[y]),
                                classes=(c, d),
                                coords=(i, j),
                                required=need,
                                actual=N[x][y],
                            ),
                        )
                if cu and du and i != 0 and j != 0:
                    need = N[bc][y] + N[x][bd] - N[bc][bd]
                    if N[x][y] < need:
                        return Verdict(
                            "no",
                            Reason(
                                "CrossQuadrantFail",
                                objects=(rep[x], rep[y]),
                                classes=(c, d),
                                coords=(i, j),
                                required=need,
                                actual=N[x][y],
                            ),
                        )

    return Verdict("yes", None, N, rmap, part)


def condition_report(M: HomMatrix) -> list[dict]:
    """Status of every condition decide evaluates, with all failing instances.

    Entries are {"condition", "status", "details"}; status is "pass", "fail"
    or "skipped" (prerequisite failed, condition not evaluable).
    """
    N, rmap = reduce(M)
    rep = rmap.representative
    report = []

    def add(condition, failures, skipped=False):
        if skipped:
            report.append({"condition": condition, "status": "skipped", "details": "prerequisite failed"})
        elif failures:
            shown = "; ".join(failures[:8])
            if len(failures) > 8:
                shown += f"; +{len(failures) - 8} more"
            report.append({"condition": condition, "status": "fail", "details": shown})
        else:
            report.append({"condition": condition, "status": "pass", "details": ""})

    refl = [f"object {rep[a]} has no endomorphism" for a in range(N.n) if N[a][a] == 0]
    add("reflexivity", refl)

    trans = []
    for i in range(N.n):
        for j in range(N.n):
            if N[i][j] == 0:
                continue
            for k in range(N.n):
                if N[j][k] >= 1 and N[i][k] == 0:
                    trans.append(f"{rep[i]}->{rep[j]}->{rep[k]} but hom({rep[i]},{rep[k]}) is empty")
    add("transitivity", trans)

    if refl or trans:
        for condition in (
            "unique-basepoint",
            "u-diagonal",
            "u-off-diagonal",
            "cross-column-floor",
            "cross-row-floor",
            "cross-quadrant",
        ):
            add(condition, [], skipped=True)
        return report

    part = build_partition(N)
    add(
        "unique-basepoint",
        [
            f"class {c} has single-endomorphism objects {[rep[u] for u in units]}"
            for c, units in part.multiple_units
        ],
    )

    u_diag, u_off = [], []
    for c in range(len(part.classes)):
        if not part.is_u(c):
            continue
        bp = part.basepoints[c]
        locs = part.locals_of(c)
        for i, x in locs:
            if i == 0:
                continue
            need = N[x][bp] * N[bp][x] + 1
            if N[x][x] < need:
                u_diag.append(f"hom({rep[x]},{rep[x]})={N[x][x]} needs >= {need}")
            for j, y in locs:
                if j == 0 or y == x:
                    continue
                need = N[x][bp] * N[bp][y]
                if N[x][y] < need:
                    u_off.append(f"hom({rep[x]},{rep[y]})={N[x][y]} needs >= {need}")
    add("u-diagonal", u_diag)
    add("u-off-diagonal", u_off)

    col, row, quad = [], [], []
    for c, d in sorted(part.order):
        cu, du = part.is_u(c), part.is_u(d)
        bc, bd = part.basepoints[c], part.basepoints[d]
        for i, x in part.locals_of(c):
            for j, y in part.locals_of(d):
                if du and j != 0 and N[x][y] < N[x][bd]:
                    col.append(f"hom({rep[x]},{rep[y]})={N[x][y]} needs >= {N[x][bd]}")
                if cu and i != 0 and N[x][y] < N[bc][y]:
                    row.append(f"hom({rep[x]},{rep[y]})={N[x][y]} needs >= {N[bc][y]}")
                if cu and du and i != 0 and j != 0:
                    need = N[bc][y] + N[x][bd] - N[bc][bd]
                    if N[x][y] < need:
                        quad.append(f"hom({rep[x]},{rep[y]})={N[x][y]} needs >= {need}")
    add("cross-column-floor", col)
    add("cross-row-floor", row)
    add("cross-quadrant", quad)
    return report


def decide_by_submatrices(M: HomMatrix) -> Verdict:
    """Decide through principal submatrices of size at most four.

    Realizability is equivalent to realizability of every principal submatrix
    of size <= 4.  Subsets are scanned in ascending size, lexicographically;
    the first rejected window is reported with its indices in `subset` and the
    inner reason's objects remapped to the enclosing matrix (class and local
    coordinates stay relative to the window's own partition).  A yes verdict
    carries no witness payload: the decision came from the windows alone.
    """
    for size in range(1, min(4, M.n) + 1):
        for keep in combinations(range(M.n), size):
            inner = decide(principal_submatrix(M, keep))
            if not inner.exists:
                reason = replace(inner.reason, objects=tuple(keep[o] for o in inner.reason.objects))
                return Verdict("no", reason, subset=keep)
    return Verdict("yes")
