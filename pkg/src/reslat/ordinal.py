"""Ordinal product of BL-algebras and evaluation of algebra expressions."""

from __future__ import annotations

from .core import (
    ResiduatedLattice,
    check_properties,
    describe,
    validate_lattice,
    validate_residuated,
)
from .errors import AlgebraError, NotBLAlgebra
from .expr import DirProd, Literal, OrdProd, Ring


def _require_bl(L: ResiduatedLattice, which: str, path=()):
    rep = check_properties(L)
    if not rep.is_bl:
        w = rep.witnesses["bl"]
        raise NotBLAlgebra(f"{which} factor is not a BL-algebra (witness {describe(L, w)})",
                           w, path)


def _merged_labels(L1, L2):
    if not (L1.labels and L2.labels):
        return None
    labels = list(L1.labels)
    for y in range(L2.size):
        if y != L2.bottom:
            labels.append(L2.labels[y])
    if len(set(labels)) != len(labels):
        return None
    return labels


def ordinal_product(L1: ResiduatedLattice, L2: ResiduatedLattice, provenance=None) -> ResiduatedLattice:
    """Glue L2 on top of L1, identifying the top of L1 with the bottom of L2.

    L1 keeps its indices; the non-bottom elements of L2 follow in L2's
    index order.  Both factors must be BL-algebras.
    """
    _require_bl(L1, "left")
    _require_bl(L2, "right")
    n1, n2 = L1.size, L2.size
    t1, b2 = L1.top, L2.bottom
    embed2 = {b2: t1}
    for y in range(n2):
        if y != b2:
            embed2[y] = n1 + len(embed2) - 1
    n = n1 + n2 - 1
    pull2 = {v: k for k, v in embed2.items()}

    def in1(x):
        return x < n1

    def in2(x):
        return x in pull2

    leq = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if in1(x) and in1(y):
                leq[x][y] = L1.le(x, y)
            elif in2(x) and in2(y):
                leq[x][y] = L2.le(pull2[x], pull2[y])
            else:
                leq[x][y] = in1(x)
    lattice = validate_lattice(leq, labels=_merged_labels(L1, L2))
    top = lattice.top

    odot = [[0] * n for _ in range(n)]
    arrow = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if in1(x) and in1(y):
                odot[x][y] = L1.odot[x][y]
            elif in2(x) and in2(y):
                odot[x][y] = embed2[L2.odot[pull2[x]][pull2[y]]]
            else:
                odot[x][y] = x if in1(x) else y

            if leq[x][y]:
                arrow[x][y] = top
            elif in1(x) and in1(y):
                arrow[x][y] = L1.arrow[x][y]
            elif in2(x) and in2(y):
                arrow[x][y] = embed2[L2.arrow[pull2[x]][pull2[y]]]
            else:
                # x in L2 \ {0_2}, y in L1 \ {1_1}.  The remaining split case
                # (x in L1 \ {1_1}, y in L2) always has x <= y and returns top above.
                arrow[x][y] = y

    if provenance is None and L1.provenance is not None and L2.provenance is not None:
        provenance = OrdProd(L1.provenance, L2.provenance)
    return validate_residuated(lattice, odot, arrow, provenance)


def direct_product(L1: ResiduatedLattice, L2: ResiduatedLattice, provenance=None) -> ResiduatedLattice:
    """Componentwise product; element (a, b) gets index a * |L2| + b."""
    n1, n2 = L1.size, L2.size
    pairs = [(a, b) for a in range(n1) for b in range(n2)]
    idx = {p: k for k, p in enumerate(pairs)}
    leq = [[L1.le(a, c) and L2.le(b, d) for (c, d) in pairs] for (a, b) in pairs]
    odot = [[idx[L1.odot[a][c], L2.odot[b][d]] for (c, d) in pairs] for (a, b) in pairs]
    arrow = [[idx[L1.arrow[a][c], L2.arrow[b][d]] for (c, d) in pairs] for (a, b) in pairs]
    labels = None
    if L1.labels and L2.labels:
        labels = [f"<{L1.labels[a]},{L2.labels[b]}>" for a, b in pairs]
    if provenance is None and L1.provenance is not None and L2.provenance is not None:
        provenance = DirProd(L1.provenance, L2.provenance)
    return validate_residuated(validate_lattice(leq, labels=labels), odot, arrow, provenance)


def evaluate_expr(e, path=()) -> ResiduatedLattice:
    """Evaluate an algebra expression bottom-up; the result records ``e`` as provenance."""
    if isinstance(e, Ring):
        from .ideal_lattice import build_ideal_lattice
        from .rings import build_ring

        return build_ideal_lattice(build_ring(e.spec)).algebra.with_provenance(e)
    if isinstance(e, Literal):
        alg = e.algebra
        if alg is None:
            if e.path is None:
                raise AlgebraError(f"literal {e.name!r} has neither tables nor a path")
            from .formats import load_lattice

            alg = load_lattice(e.path)
        return alg.with_provenance(e)
    if isinstance(e, OrdProd):
        left = evaluate_expr(e.left, path + ("left",))
        right = evaluate_expr(e.right, path + ("right",))
        for side, alg in (("left", left), ("right", right)):
            rep = check_properties(alg)
            if not rep.is_bl:
                w = rep.witnesses["bl"]
                raise NotBLAlgebra(
                    f"{'/'.join(path + (side,))}: operand is not a BL-algebra "
                    f"(witness {describe(alg, w)})", w, path + (side,))
        return ordinal_product(left, right, provenance=e)
    if isinstance(e, DirProd):
        left = evaluate_expr(e.left, path + ("left",))
        right = evaluate_expr(e.right, path + ("right",))
        return direct_product(left, right, provenance=e)
    raise TypeError(f"not an algebra expression: {e!r}")
