"""The standing corpus of rings and literal lattices used by tests and ``seed-corpus``."""

from __future__ import annotations

import re
from itertools import product
from pathlib import Path

from .core import ResiduatedLattice, residuated
from .formats import dumps, lattice_to_dict, ring_spec_to_dict
from .rings import FiniteRing, PolyQuot, Product, Zn, build_ring, ring_from_function, spec_name

PRIMES = (2, 3, 5, 7, 11, 13)


def prime_powers(limit: int) -> list:
    out = []
    for p in PRIMES:
        q = p
        while q <= limit:
            out.append(q)
            q *= p
    return sorted(out)


def zn_specs(max_k: int = 32) -> list:
    return [Zn(k) for k in range(2, max_k + 1)]


def prime_power_products(max_size: int = 64) -> list:
    """Products of two or three prime-power cyclic rings, factors non-decreasing."""
    pp = prime_powers(max_size // 2)
    out = []
    for r in (2, 3):
        for combo in product(pp, repeat=r):
            if list(combo) != sorted(combo):
                continue
            size = 1
            for k in combo:
                size *= k
            if size <= max_size:
                out.append(Product([Zn(k) for k in combo]))
    return out


POLYQUOT_SPECS = [
    PolyQuot(2, (0, 0, 1)),        # X^2
    PolyQuot(2, (0, 0, 0, 1)),     # X^3
    PolyQuot(2, (1, 1, 1)),        # X^2+X+1, the field with 4 elements
    PolyQuot(2, (0, 1, 1)),        # X^2+X, isomorphic to Z2xZ2
    PolyQuot(2, (0, 0, 0, 0, 1)),  # X^4
    PolyQuot(3, (0, 0, 1)),        # X^2
    PolyQuot(3, (1, 0, 1)),        # X^2+1, the field with 9 elements
]


def _truncated(p, rels, name, labels_fn):
    """Z_p[X,Y] modulo the monomials in ``rels``, on coefficient vectors over 1, X, Y, ..."""
    basis = [(0, 0), (1, 0), (0, 1), (1, 1)]
    basis = [m for m in basis if m not in rels and not any(
        m[0] >= r[0] and m[1] >= r[1] for r in rels)]
    elems = [tuple(reversed(e)) for e in product(range(p), repeat=len(basis))]
    elems.sort(key=lambda e: sum(c * p ** i for i, c in enumerate(e)))
    pos = {m: i for i, m in enumerate(basis)}

    def add(a, b):
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(a, b):
        out = [0] * len(basis)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                m = (basis[i][0] + basis[j][0], basis[i][1] + basis[j][1])
                if m in pos:
                    out[pos[m]] = (out[pos[m]] + x * y) % p
        return tuple(out)

    zero = (0,) * len(basis)
    one = (1,) + (0,) * (len(basis) - 1)
    labels = [labels_fn(e, basis) for e in elems]
    return ring_from_function(name, elems, add, mul, zero, one, labels)


def _monomial_label(e, basis):
    names = {(0, 0): "", (1, 0): "X", (0, 1): "Y", (1, 1): "XY"}
    terms = []
    for c, m in zip(e, basis):
        if c:
            mono = names[m]
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return "+".join(terms) or "0"


def non_multiplication_ring() -> FiniteRing:
    """Z2[X,Y]/(X^2, XY, Y^2): eight elements, local, the maximal ideal (X,Y) is not principal."""
    return _truncated(2, {(2, 0), (1, 1), (0, 2)}, "Z2[X,Y]/(X^2,XY,Y^2)", _monomial_label)


def table_rings() -> list:
    z4 = ring_from_function(
        "Z4[X]/(2X,X^2)", [(a, b) for a in range(4) for b in range(2)],
        lambda u, v: ((u[0] + v[0]) % 4, (u[1] + v[1]) % 2),
        lambda u, v: ((u[0] * v[0]) % 4, (u[0] * v[1] + u[1] * v[0]) % 2),
        (0, 0), (1, 0),
        [f"{a}" if not b else (f"{a}+X" if a else "X") for a in range(4) for b in range(2)])
    return [
        non_multiplication_ring(),
        _truncated(2, {(2, 0), (0, 2)}, "Z2[X,Y]/(X^2,Y^2)", _monomial_label),
        _truncated(3, {(2, 0), (1, 1), (0, 2)}, "Z3[X,Y]/(X^2,XY,Y^2)", _monomial_label),
        z4,
    ]


def matrix_ring_m2z2() -> FiniteRing:
    """2x2 matrices over Z2, entries (a, b, c, d) read row by row."""
    mats = [tuple(m) for m in product(range(2), repeat=4)]

    def mul(a, b):
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return ((a0 * b0 + a1 * b2) % 2, (a0 * b1 + a1 * b3) % 2,
                (a2 * b0 + a3 * b2) % 2, (a2 * b1 + a3 * b3) % 2)

    def add(a, b):
        return tuple((x + y) % 2 for x, y in zip(a, b))

    return ring_from_function("M2(Z2)", mats, add, mul, (0, 0, 0, 0), (1, 0, 0, 1),
                              ["[" + "".join(map(str, m)) + "]" for m in mats])


def commutative_specs() -> list:
    """Ring specs of the commutative corpus (tables included as TableSpec)."""
    return (zn_specs() + prime_power_products() + list(POLYQUOT_SPECS)
            + [R.spec for R in table_rings()])


def commutative_rings() -> list:
    return [build_ring(s) for s in commutative_specs()]


# ---------------------------------------------------------------------------
# literal lattices

def example3() -> ResiduatedLattice:
    """Five elements 0 < a, b < c < 1: divisible, not prelinear."""
    leq = [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1],
        [0, 0, 1, 1, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1],
    ]
    odot = [
        [0, 0, 0, 0, 0],
        [0, 1, 0, 1, 1],
        [0, 0, 2, 2, 2],
        [0, 1, 2, 3, 3],
        [0, 1, 2, 3, 4],
    ]
    arrow = [
        [4, 4, 4, 4, 4],
        [2, 4, 2, 4, 4],
        [1, 1, 4, 4, 4],
        [0, 1, 2, 4, 4],
        [0, 1, 2, 3, 4],
    ]
    return residuated(leq, odot, arrow, labels=list("0abc1"))


DIAMOND_LEQ = [
    [1, 1, 1, 1, 1],
    [0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1],
    [0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1],
]


def diamond_meet_dict() -> dict:
    """The diamond M3 with its meet as monoid; not residuated."""
    n = 5
    meet = [[x if DIAMOND_LEQ[x][y] else (y if DIAMOND_LEQ[y][x] else 0) for y in range(n)]
            for x in range(n)]
    return {"size": n, "labels": ["0", "a", "b", "c", "1"], "leq": DIAMOND_LEQ, "odot": meet}


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def seed_corpus(directory) -> list:
    """Write the corpus as JSON files; returns the written paths, sorted."""
    root = Path(directory)
    (root / "rings").mkdir(parents=True, exist_ok=True)
    (root / "lattices").mkdir(parents=True, exist_ok=True)
    written = []

    def put(rel, obj):
        p = root / rel
        p.write_text(dumps(obj))
        written.append(p)

    specs = zn_specs() + prime_power_products() + list(POLYQUOT_SPECS)
    specs += [R.spec for R in table_rings() + [matrix_ring_m2z2()]]
    for spec in specs:
        put(f"rings/{_slug(spec_name(spec))}.json", ring_spec_to_dict(spec))
    put("lattices/example3.json", lattice_to_dict(example3()))
    put("lattices/diamond_meet.json", diamond_meet_dict())
    return sorted(written)
