"""Isomorphism, canonical forms and exhaustive classification of small
residuated lattices.

Two enumeration routes are kept deliberately separate:

* ``brute`` enumerates every bounded lattice up to isomorphism and every
  commutative, integral, residuated monoid on it by backtracking;
* ``generate`` closes the Łukasiewicz chains under ordinal and direct
  products, which only ever reaches divisible algebras.

Both produce canonical keys through the same ``canonical_form``, so their
catalogs can be compared class by class.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Optional

from .core import (
    FiniteLattice,
    ResiduatedLattice,
    check_properties,
    validate_lattice,
    validate_residuated,
)
from .errors import CatalogIncomplete, MethodMismatch, SizeGuardExceeded
from .expr import DirProd, OrdProd, Ring, preference_key, render
from .ordinal import direct_product, evaluate_expr, ordinal_product
from .rings import Product, Zn

BRUTE_MAX = 6
SKELETON_MAX = 8


# ---------------------------------------------------------------------------
# colour refinement

def _initial_colour(leq, odot, n, x):
    down = sum(leq[y][x] for y in range(n))
    up = sum(leq[x][y] for y in range(n))
    if odot is None:
        return (down, up)
    bottom = next(y for y in range(n) if all(leq[y][z] for z in range(n)))
    zeros = sum(odot[x][y] == bottom for y in range(n))
    return (down, up, odot[x][x] == x, zeros)


def _refine(structs):
    """Joint colour refinement over several (n, leq, ops) structures.

    Colours are ranks of iso-invariant signatures, ordered so that the
    bottom element gets the smallest colour and the top the largest.
    """
    cols = []
    for n, leq, ops in structs:
        odot = ops[0] if ops else None
        cols.append([_initial_colour(leq, odot, n, x) for x in range(n)])
    ranks = {c: k for k, c in enumerate(sorted({c for cs in cols for c in cs}))}
    cols = [[ranks[c] for c in cs] for cs in cols]
    classes = len(ranks)
    while True:
        sigs = []
        for (n, leq, ops), col in zip(structs, cols):
            sigs.append([
                (col[x], tuple(sorted(
                    (col[y], leq[x][y], leq[y][x]) + tuple(col[op[x][y]] for op in ops)
                    for y in range(n))))
                for x in range(n)])
        ranks = {s: k for k, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        cols = [[ranks[s] for s in ss] for ss in sigs]
        if len(ranks) == classes:
            return cols
        classes = len(ranks)


def _ops(L):
    if isinstance(L, ResiduatedLattice):
        return (L.odot, L.arrow)
    return ()


def _leq(L):
    return L.lattice.leq if isinstance(L, ResiduatedLattice) else L.leq


# ---------------------------------------------------------------------------
# canonical form

def _class_orderings(colours):
    classes = {}
    for x, c in enumerate(colours):
        classes.setdefault(c, []).append(x)
    groups = [classes[c] for c in sorted(classes)]
    return groups, product(*(permutations(g) for g in groups))


def canonical_form(L):
    """Return ``(key, order)``: the lexicographically least table encoding over
    all relabelings that respect the refined colour classes, and the element
    order achieving it (``order[k]`` is the old index placed at position k).
    """
    n = L.size
    leq = _leq(L)
    ops = _ops(L)[:1]  # the arrow is determined by leq and odot
    (colours,) = _refine([(n, leq, ops)])
    _, orderings = _class_orderings(colours)
    best = best_order = None
    for blocks in orderings:
        order = [x for block in blocks for x in block]
        pos = [0] * n
        for k, x in enumerate(order):
            pos[x] = k
        enc = tuple(leq[a][b] for a in order for b in order)
        for op in ops:
            enc += tuple(pos[op[a][b]] for a in order for b in order)
        if best is None or enc < best:
            best, best_order = enc, order
    return (n, best), tuple(best_order)


def canonical_key(L):
    return canonical_form(L)[0]


def relabel(L: ResiduatedLattice, order) -> ResiduatedLattice:
    """The algebra with old element ``order[k]`` renamed to ``k``."""
    n = L.size
    pos = [0] * n
    for k, x in enumerate(order):
        pos[x] = k
    lat = L.lattice
    leq = [[lat.leq[a][b] for b in order] for a in order]
    odot = [[pos[L.odot[a][b]] for b in order] for a in order]
    arrow = [[pos[L.arrow[a][b]] for b in order] for a in order]
    labels = [lat.labels[a] for a in order] if lat.labels else None
    return validate_residuated(validate_lattice(leq, labels=labels), odot, arrow, L.provenance)


def canonicalize(L: ResiduatedLattice) -> ResiduatedLattice:
    return relabel(L, canonical_form(L)[1])


# ---------------------------------------------------------------------------
# isomorphism

@dataclass(frozen=True)
class IsoCertificate:
    mapping: tuple
    verified: bool


def verify_isomorphism(L1: ResiduatedLattice, L2: ResiduatedLattice, mapping) -> bool:
    n = L1.size
    if L2.size != n or sorted(mapping) != list(range(n)):
        return False
    f = mapping
    if f[L1.bottom] != L2.bottom or f[L1.top] != L2.top:
        return False
    for x, y in product(range(n), repeat=2):
        if (L1.le(x, y) != L2.le(f[x], f[y])
                or f[L1.odot[x][y]] != L2.odot[f[x]][f[y]]
                or f[L1.arrow[x][y]] != L2.arrow[f[x]][f[y]]):
            return False
    return True


def are_isomorphic(L1: ResiduatedLattice, L2: ResiduatedLattice) -> Optional[IsoCertificate]:
    n = L1.size
    if L2.size != n:
        return None
    c1, c2 = _refine([(n, L1.lattice.leq, _ops(L1)), (n, L2.lattice.leq, _ops(L2))])
    if sorted(c1) != sorted(c2):
        return None
    order = sorted(range(n), key=lambda x: (c1.count(c1[x]), c1[x], x))
    f = [-1] * n
    used = [False] * n
    leq1, leq2 = L1.lattice.leq, L2.lattice.leq
    ops = ((L1.odot, L2.odot), (L1.arrow, L2.arrow))

    def consistent(x, fx):
        # every pair with x in it, and every pair whose value is x, once all three are mapped
        for y in range(n):
            fy = f[y]
            if fy < 0:
                continue
            if leq1[x][y] != leq2[fx][fy] or leq1[y][x] != leq2[fy][fx]:
                return False
            for o1, o2 in ops:
                for a, b in ((x, y), (y, x)):
                    z = o1[a][b]
                    if f[z] >= 0 and f[z] != o2[f[a]][f[b]]:
                        return False
                for w in range(n):
                    if f[w] >= 0 and o1[y][w] == x and o2[fy][f[w]] != fx:
                        return False
        return True

    def search(k):
        if k == n:
            return verify_isomorphism(L1, L2, tuple(f))
        x = order[k]
        # trying x itself first makes L vs L return the identity
        for fx in sorted(range(n), key=lambda y: (y != x, y)):
            if used[fx] or c2[fx] != c1[x]:
                continue
            f[x] = fx
            if consistent(x, fx):
                used[fx] = True
                if search(k + 1):
                    return True
                used[fx] = False
            f[x] = -1
        return False

    if not search(0):
        return None
    return IsoCertificate(tuple(f), True)


# ---------------------------------------------------------------------------
# lattice skeletons

def _natural_posets(m):
    """Strict down-sets of naturally labelled posets on range(m)."""
    def extend(downs):
        j = len(downs)
        if j == m:
            yield tuple(downs)
            return
        for mask in range(1 << j):
            below = {i for i in range(j) if mask >> i & 1}
            if all(downs[i] <= below for i in below):
                yield from extend(downs + [frozenset(below)])
    yield from extend([])


def _is_lattice(leq, n):
    for x in range(n):
        for y in range(x + 1, n):
            ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
            if not any(all(leq[z][w] for w in ubs) for z in ubs):
                return False
    return True


def enumerate_lattice_skeletons(n: int, max_size: int = SKELETON_MAX) -> list:
    """All bounded lattices with n elements up to isomorphism, in canonical order.

    In every returned lattice the bottom is element 0 and the top is n-1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_size:
        raise SizeGuardExceeded(f"skeleton enumeration is guarded at n <= {max_size}", (n,))
    if n == 1:
        return [validate_lattice([[True]])]
    m = n - 2
    found = {}
    for downs in _natural_posets(m):
        leq = [[False] * n for _ in range(n)]
        for x in range(n):
            leq[0][x] = leq[x][n - 1] = leq[x][x] = True
        for j, below in enumerate(downs):
            for i in below:
                leq[i + 1][j + 1] = True
        if not _is_lattice(leq, n):
            continue
        key, order = canonical_form(_SkeletonView(leq))
        if key not in found:
            found[key] = [[leq[a][b] for b in order] for a in order]
    return [validate_lattice(found[k]) for k in sorted(found)]


class _SkeletonView:
    def __init__(self, leq):
        self.leq = leq
        self.size = len(leq)


def lattice_automorphisms(lat: FiniteLattice) -> list:
    n = lat.size
    (colours,) = _refine([(n, lat.leq, ())])
    _, orderings = _class_orderings(colours)
    groups = _class_orderings(colours)[0]
    base = [x for g in groups for x in g]
    autos = []
    for blocks in orderings:
        image = [x for block in blocks for x in block]
        f = [0] * n
        for a, b in zip(base, image):
            f[a] = b
        if all(lat.leq[x][y] == lat.leq[f[x]][f[y]] for x in range(n) for y in range(n)):
            autos.append(tuple(f))
    return autos


# ---------------------------------------------------------------------------
# brute force: residuated monoids on a fixed lattice

def residuated_monoids(lat: FiniteLattice):
    """Yield every commutative monoid table with identity top that is residuated on ``lat``.

    Bottom is absorbing and top is the identity from the start; the other
    cells are filled by backtracking over values below the meet, pruning on
    monotonicity, join preservation and associativity as cells get known.
    """
    n, leq, meet, join = lat.size, lat.leq, lat.meet, lat.join
    b, t = lat.bottom, lat.top
    if n == 1:
        yield ((0,),)
        return
    T = [[-1] * n for _ in range(n)]
    for x in range(n):
        T[b][x] = T[x][b] = b
        T[t][x] = T[x][t] = x
    mids = sorted((x for x in range(n) if x not in (b, t)),
                  key=lambda x: (sum(leq[y][x] for y in range(n)), x))
    cells = [(x, y) for i, x in enumerate(mids) for y in mids[i:]]
    cands = [[z for z in range(n) if leq[z][meet[x][y]]] for x, y in cells]
    join_pairs = [[(p, q) for p in range(n) for q in range(n) if join[p][q] == y]
                  for y in range(n)]

    def local_ok(x, y, v):
        for u, w in ((x, y), (y, x)):
            for z in range(n):
                s = T[z][w]
                if s >= 0:
                    if leq[z][u] and not leq[s][v]:
                        return False
                    if leq[u][z] and not leq[v][s]:
                        return False
                # u*(w v z) = u*w v u*z
                p, q = T[u][z], T[u][join[w][z]]
                if p >= 0 and q >= 0 and q != join[v][p]:
                    return False
                # (u*w)*z = u*(w*z)
                l, r = T[v][z], T[w][z]
                if l >= 0 and r >= 0:
                    rr = T[u][r]
                    if rr >= 0 and rr != l:
                        return False
            for p, q in join_pairs[w]:
                a, c = T[u][p], T[u][q]
                if a >= 0 and c >= 0 and join[a][c] != v:
                    return False
        return True

    def full_ok():
        r = range(n)
        for x, y, z in product(r, r, r):
            if T[T[x][y]][z] != T[x][T[y][z]]:
                return False
            if T[x][join[y][z]] != join[T[x][y]][T[x][z]]:
                return False
        return True

    def search(k):
        if k == len(cells):
            if full_ok():
                yield tuple(tuple(row) for row in T)
            return
        x, y = cells[k]
        for v in cands[k]:
            T[x][y] = T[y][x] = v
            if local_ok(x, y, v):
                yield from search(k + 1)
            T[x][y] = T[y][x] = -1

    yield from search(0)


def _skeleton_classes(lat: FiniteLattice) -> list:
    """Residuated lattices on one skeleton, one per orbit of the lattice automorphisms."""
    autos = lattice_automorphisms(lat)
    seen = {}
    for odot in residuated_monoids(lat):
        keys = []
        for f in autos:
            g = [[0] * lat.size for _ in range(lat.size)]
            for x in range(lat.size):
                for y in range(lat.size):
                    g[f[x]][f[y]] = f[odot[x][y]]
            keys.append(tuple(map(tuple, g)))
        rep = min(keys)
        seen.setdefault(rep, rep)
    return [validate_residuated(lat, odot) for odot in sorted(seen)]


@lru_cache(maxsize=None)
def _brute_catalog(n: int, threads: int = 1) -> tuple:
    skeletons = enumerate_lattice_skeletons(n)
    if threads > 1 and len(skeletons) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_skeleton_classes, skeletons))
    else:
        parts = [_skeleton_classes(s) for s in skeletons]
    out = {}
    for algs in parts:
        for alg in algs:
            key, order = canonical_form(alg)
            out[key] = relabel(alg, order)
    return tuple(out[k] for k in sorted(out))


def brute_catalog(n: int, threads: int = 1, allow_large: bool = False) -> tuple:
    """Every residuated lattice with n elements, up to isomorphism, canonically labelled."""
    if n > BRUTE_MAX and not allow_large:
        raise SizeGuardExceeded(f"brute enumeration is guarded at n <= {BRUTE_MAX}", (n,))
    return _brute_catalog(n, max(1, threads))


# ---------------------------------------------------------------------------
# generation by ordinal and direct products

def _factorizations(n, smallest=2):
    """Multisets of integers >= 2 whose product is n, non-decreasing."""
    if n == 1:
        yield ()
        return
    for f in range(smallest, n + 1):
        if n % f == 0:
            for rest in _factorizations(n // f, f):
                yield (f,) + rest


def _mv_expr(factors):
    rings = [Zn(2 ** (f - 1)) for f in factors]
    return Ring(rings[0] if len(rings) == 1 else Product(rings))


@dataclass(frozen=True)
class Entry:
    algebra: ResiduatedLattice
    expr: object
    report: object


def _add(catalog, alg):
    key, order = canonical_form(alg)
    old = catalog.get(key)
    if old is None or preference_key(alg.provenance) < preference_key(old.expr):
        canon = relabel(alg, order)
        catalog[key] = Entry(canon, alg.provenance, check_properties(canon))


@lru_cache(maxsize=None)
def generated_bl(n: int) -> dict:
    """BL-algebras with n elements reached from Łukasiewicz chains by products."""
    catalog = {}
    if n < 2:
        return catalog
    for factors in _factorizations(n):
        _add(catalog, evaluate_expr(_mv_expr(factors)))
    for i in range(2, n):
        j = n + 1 - i
        for c in generated_bl(i).values():
            if not c.report.is_chain:
                continue
            for e in generated_bl(j).values():
                _add(catalog, ordinal_product(c.algebra, e.algebra,
                                              provenance=OrdProd(c.expr, e.expr)))
    for i in range(2, n):
        if n % i or i > n // i:
            continue
        for a in generated_bl(i).values():
            for e in generated_bl(n // i).values():
                _add(catalog, direct_product(a.algebra, e.algebra,
                                             provenance=DirProd(a.expr, e.expr)))
    for key, entry in catalog.items():
        if not entry.report.is_bl:
            raise MethodMismatch(f"generated {render(entry.expr)} is not BL")
    return catalog


@lru_cache(maxsize=None)
def generated_divisible(n: int) -> dict:
    """Divisible residuated lattices: the BL catalog plus non-chain BL ⊡ BL
    (and direct products of smaller divisible algebras)."""
    catalog = dict(generated_bl(n))
    for i in range(2, n):
        j = n + 1 - i
        for a in generated_bl(i).values():
            if a.report.is_chain:
                continue
            for e in generated_bl(j).values():
                _add(catalog, ordinal_product(a.algebra, e.algebra,
                                              provenance=OrdProd(a.expr, e.expr)))
    for i in range(2, n):
        if n % i or i > n // i:
            continue
        for a in generated_divisible(i).values():
            for e in generated_divisible(n // i).values():
                _add(catalog, direct_product(a.algebra, e.algebra,
                                             provenance=DirProd(a.expr, e.expr)))
    for entry in catalog.values():
        if not entry.report.is_divisible:
            raise MethodMismatch(f"generated {render(entry.expr)} is not divisible")
    return catalog


# ---------------------------------------------------------------------------
# enumeration front end

FILTERS = {
    "residuated": lambda r: True,
    "divisible": lambda r: r.is_divisible,
    "bl": lambda r: r.is_bl,
    "mv": lambda r: r.is_mv,
    "heyting": lambda r: r.is_heyting,
    "divisible-chain": lambda r: r.is_divisible and r.is_chain,
    "bl-chain": lambda r: r.is_bl and r.is_chain,
    "divisible-not-bl": lambda r: r.is_divisible and not r.is_bl,
}
# classes contained in the divisible algebras, which the generator covers
GENERATED_FILTERS = tuple(k for k in FILTERS if k != "residuated")
METHODS = ("brute", "generate", "both")


@dataclass(frozen=True)
class Representative:
    algebra: ResiduatedLattice
    expr: object = None

    @property
    def name(self) -> str:
        return render(self.expr) if self.expr is not None else "no expression provenance"


@dataclass(frozen=True)
class ClassificationReport:
    size: int
    class_filter: str
    method: str
    representatives: tuple = field(default=())

    @property
    def count(self) -> int:
        return len(self.representatives)


def _generated_reps(n, class_filter):
    keep = FILTERS[class_filter]
    cat = generated_divisible(n)
    return {k: Representative(e.algebra, e.expr) for k, e in cat.items() if keep(e.report)}


def _brute_reps(n, class_filter, threads, allow_large):
    keep = FILTERS[class_filter]
    out = {}
    for alg in brute_catalog(n, threads, allow_large):
        if keep(check_properties(alg)):
            out[canonical_key(alg)] = alg
    return out


def enumerate_algebras(n: int, class_filter: str = "divisible", method: str = "generate",
                       threads: int = 1, allow_large: bool = False) -> ClassificationReport:
    if class_filter not in FILTERS:
        raise ValueError(f"unknown filter {class_filter!r}; choose from {sorted(FILTERS)}")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if n < 1:
        raise ValueError("n must be positive")
    if method in ("generate", "both") and class_filter not in GENERATED_FILTERS:
        raise ValueError(f"the generate method cannot produce class {class_filter!r}")

    if method == "brute":
        brute = _brute_reps(n, class_filter, threads, allow_large)
        # provenance by isomorphism match against the generated divisible catalog
        names = {k: e.expr for k, e in generated_divisible(n).items()}
        reps = tuple(Representative(brute[k], names.get(k)) for k in sorted(brute))
        return ClassificationReport(n, class_filter, method, reps)

    generated = _generated_reps(n, class_filter)
    if method == "both":
        brute = _brute_reps(n, class_filter, threads, allow_large)
        if set(brute) != set(generated):
            missing = len(set(brute) - set(generated))
            extra = len(set(generated) - set(brute))
            raise MethodMismatch(
                f"n={n} {class_filter}: brute found {len(brute)}, generate found "
                f"{len(generated)} ({missing} missing from generate, {extra} extra)")
    reps = tuple(generated[k] for k in sorted(generated))
    return ClassificationReport(n, class_filter, method, reps)


# ---------------------------------------------------------------------------
# reference tables

def _id(k):
    return Ring(Zn(k))


_B4 = Ring(Product([Zn(2), Zn(2)]))
_Z2, _Z4, _Z8, _Z16 = _id(2), _id(4), _id(8), _id(16)

# published structure of the BL-algebras with 2..5 elements: (expression, is chain)
REFERENCE_BL = {
    2: [(_Z2, True)],
    3: [(_Z4, True), (OrdProd(_Z2, _Z2), True)],
    4: [(_Z8, True), (_B4, False), (OrdProd(_Z2, _Z4), True), (OrdProd(_Z4, _Z2), True),
        (OrdProd(_Z2, OrdProd(_Z2, _Z2)), True)],
    5: [(_Z16, True), (OrdProd(_Z2, _Z8), True), (OrdProd(_Z2, _B4), False),
        (OrdProd(_Z2, OrdProd(_Z2, _Z4)), True), (OrdProd(_Z2, OrdProd(_Z4, _Z2)), True),
        (OrdProd(_Z2, OrdProd(_Z2, OrdProd(_Z2, _Z2))), True), (OrdProd(_Z8, _Z2), True),
        (OrdProd(OrdProd(_Z4, _Z2), _Z2), True), (OrdProd(_Z4, _Z4), True)],
}

# published divisible-but-not-BL structures
REFERENCE_NON_BL = {
    2: [], 3: [], 4: [],
    5: [OrdProd(_B4, _Z2)],
    6: [OrdProd(OrdProd(_Z2, _B4), _Z2), OrdProd(_B4, OrdProd(_Z2, _Z2)), OrdProd(_B4, _Z4)],
}

REFERENCE_COUNTS = {
    "bl": {2: 1, 3: 2, 4: 5, 5: 9, 6: 20},
    "divisible": {2: 1, 3: 2, 4: 5, 5: 10, 6: 23},
}


def match_expressions(reps, exprs) -> dict:
    """Map each representative index to the indices of the expressions isomorphic to it."""
    algs = [evaluate_expr(e) for e in exprs]
    return {i: [j for j, a in enumerate(algs) if are_isomorphic(r.algebra, a)]
            for i, r in enumerate(reps)}


@dataclass(frozen=True)
class TablesReport:
    max_n: int
    counts: dict            # class -> {n: count}
    structures: dict        # n -> [(name, is_chain)] for BL algebras, n <= 5
    non_bl: dict            # n -> [name]
    text: str

    def records(self) -> list:
        rows = []
        for cls, row in self.counts.items():
            for n, c in row.items():
                rows.append({"n": n, "class": cls, "count": c})
        return rows


def table_reports(max_n: int = 6, method: str = "generate", threads: int = 1) -> TablesReport:
    """Recompute the BL / divisible counts for n = 2..max_n and match the BL
    representatives of size <= 5 (and every non-BL one) to the reference expressions."""
    sizes = range(2, max_n + 1)
    reports = {}
    for n in sizes:
        for cls in ("bl", "divisible", "divisible-not-bl"):
            reports[cls, n] = enumerate_algebras(n, cls, method, threads)
    counts = {cls: {n: reports[cls, n].count for n in sizes} for cls in ("bl", "divisible")}

    structures = {}
    for n in sizes:
        if n not in REFERENCE_BL:
            continue
        reps = reports["bl", n].representatives
        exprs = [e for e, _ in REFERENCE_BL[n]]
        matches = match_expressions(reps, exprs)
        hit = sorted(j for js in matches.values() for j in js)
        if any(len(js) != 1 for js in matches.values()) or hit != list(range(len(exprs))):
            raise CatalogIncomplete(f"n={n}: BL representatives do not match the reference list")
        structures[n] = [(render(e), chain) for e, chain in REFERENCE_BL[n]]

    non_bl = {}
    for n in sizes:
        reps = reports["divisible-not-bl", n].representatives
        exprs = REFERENCE_NON_BL.get(n)
        if exprs is None:
            non_bl[n] = [r.name for r in reps]
            continue
        matches = match_expressions(reps, exprs)
        hit = sorted(j for js in matches.values() for j in js)
        if any(len(js) != 1 for js in matches.values()) or hit != list(range(len(exprs))):
            raise CatalogIncomplete(f"n={n}: non-BL representatives do not match the reference list")
        non_bl[n] = [render(e) for e in exprs]

    return TablesReport(max_n, counts, structures, non_bl,
                        _render_tables(sizes, counts, structures, non_bl))


def _render_tables(sizes, counts, structures, non_bl) -> str:
    lines = ["Counts of algebras up to isomorphism", ""]
    head = "".join(f"{'n=' + str(n):>6}" for n in sizes)
    lines.append(f"{'':<28}{head}")
    for cls, title in (("bl", "BL-algebras"), ("divisible", "divisible res. lattices")):
        lines.append(f"{title:<28}" + "".join(f"{counts[cls][n]:>6}" for n in sizes))
    lines += ["", "BL-algebras by structure", ""]
    for n, entries in structures.items():
        for k, (name, chain) in enumerate(entries):
            prefix = f"n={n:<3}{len(entries):>3}  " if k == 0 else " " * 10
            lines.append(f"{prefix}{name} ({'BL-chain' if chain else 'BL'})")
    lines += ["", "Divisible residuated lattices that are not BL-algebras", ""]
    for n, names in non_bl.items():
        first = f"n={n:<3}{len(names):>3}  "
        if not names:
            lines.append(first + "-")
        for k, name in enumerate(names):
            lines.append((first if k == 0 else " " * 10) + name)
    return "\n".join(lines) + "\n"


def skeleton_count(n: int) -> int:
    return len(enumerate_lattice_skeletons(n))


def permutation_budget(L) -> int:
    """Number of relabelings canonical_form will try (product of colour class factorials)."""
    (colours,) = _refine([(L.size, _leq(L), _ops(L)[:1])])
    groups, _ = _class_orderings(colours)
    return math.prod(math.factorial(len(g)) for g in groups)
