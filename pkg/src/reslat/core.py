"""Finite bounded lattices and commutative residuated lattices as operation tables.

Carriers are always ``range(n)``.  Labels are display-only: they never take
part in equality, hashing or isomorphism.  Every check scans tuples in
carrier-index order, so a reported witness is the lexicographically first
violating tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .errors import (
    AlgebraError,
    ArrowMismatch,
    EquivalenceBroken,
    MeetJoinMismatch,
    MonoidViolation,
    NotAPartialOrder,
    NotBounded,
    PreconditionNotDivisible,
    ResiduumMissing,
)

Table = tuple[tuple[int, ...], ...]


def _freeze(rows) -> tuple:
    return tuple(tuple(r) for r in rows)


def _check_square(name, rows, n, entry_range=True):
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError(f"{name} table must be {n}x{n}")
    if entry_range:
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                if not (isinstance(v, int) and 0 <= v < n):
                    raise AlgebraError(f"{name}[{i}][{j}] = {v!r} is not in 0..{n - 1}", (i, j))


@dataclass(frozen=True)
class FiniteLattice:
    size: int
    leq: tuple[tuple[bool, ...], ...]
    meet: Table
    join: Table
    bottom: int
    top: int
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False, hash=False)

    def name(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    @property
    def is_chain(self) -> bool:
        return self.incomparable_pair() is None

    def incomparable_pair(self):
        for x, y in product(range(self.size), repeat=2):
            if not (self.leq[x][y] or self.leq[y][x]):
                return (x, y)
        return None


def validate_lattice(leq, meet=None, join=None, labels=None) -> FiniteLattice:
    """Validate an order relation (and optional meet/join tables) as a bounded lattice.

    Missing meet/join tables are derived from ``leq``; supplied ones must
    agree with the derived bounds.
    """
    n = len(leq)
    if n == 0:
        raise AlgebraError("empty carrier")
    if any(len(r) != n for r in leq):
        raise AlgebraError(f"leq must be {n}x{n}")
    rel = tuple(tuple(bool(v) for v in r) for r in leq)
    if labels is not None and len(labels) != n:
        raise AlgebraError(f"expected {n} labels, got {len(labels)}")

    for x in range(n):
        if not rel[x][x]:
            raise NotAPartialOrder(f"not reflexive at {x}", (x,))
    for x, y in product(range(n), repeat=2):
        if x != y and rel[x][y] and rel[y][x]:
            raise NotAPartialOrder(f"not antisymmetric: {x} <= {y} <= {x}", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if rel[x][y] and rel[y][z] and not rel[x][z]:
            raise NotAPartialOrder(f"not transitive: {x} <= {y} <= {z}", (x, y, z))

    bottoms = [x for x in range(n) if all(rel[x][y] for y in range(n))]
    tops = [x for x in range(n) if all(rel[y][x] for y in range(n))]
    if not bottoms:
        minimal = tuple(x for x in range(n) if not any(rel[y][x] and y != x for y in range(n)))
        raise NotBounded("no least element", minimal)
    if not tops:
        maximal = tuple(x for x in range(n) if not any(rel[x][y] and y != x for y in range(n)))
        raise NotBounded("no greatest element", maximal)

    def bound(x, y, lower):
        if lower:
            cands = [z for z in range(n) if rel[z][x] and rel[z][y]]
            best = [z for z in cands if all(rel[w][z] for w in cands)]
        else:
            cands = [z for z in range(n) if rel[x][z] and rel[y][z]]
            best = [z for z in cands if all(rel[z][w] for w in cands)]
        return best[0] if best else None

    derived = []
    for lower, given, name in ((True, meet, "meet"), (False, join, "join")):
        table = []
        for x in range(n):
            row = []
            for y in range(n):
                b = bound(x, y, lower)
                if b is None:
                    raise MeetJoinMismatch(f"{x} and {y} have no {name}", (x, y))
                row.append(b)
            table.append(tuple(row))
        if given is not None:
            _check_square(name, given, n)
            for x, y in product(range(n), repeat=2):
                if given[x][y] != table[x][y]:
                    raise MeetJoinMismatch(
                        f"{name}({x},{y}) = {given[x][y]}, expected {table[x][y]}", (x, y))
        derived.append(tuple(table))

    return FiniteLattice(n, rel, derived[0], derived[1], bottoms[0], tops[0],
                         tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class ResiduatedLattice:
    lattice: FiniteLattice
    odot: Table
    arrow: Table
    provenance: object = field(default=None, compare=False, hash=False)

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def labels(self):
        return self.lattice.labels

    def name(self, x: int) -> str:
        return self.lattice.name(x)

    def le(self, x: int, y: int) -> bool:
        return self.lattice.leq[x][y]

    def neg(self, x: int) -> int:
        """``x* = x -> 0``."""
        return self.arrow[x][self.lattice.bottom]

    def with_provenance(self, provenance) -> "ResiduatedLattice":
        return ResiduatedLattice(self.lattice, self.odot, self.arrow, provenance)

    def relabeled(self, labels) -> "ResiduatedLattice":
        lat = self.lattice
        new = FiniteLattice(lat.size, lat.leq, lat.meet, lat.join, lat.bottom, lat.top,
                            tuple(labels) if labels is not None else None)
        return ResiduatedLattice(new, self.odot, self.arrow, self.provenance)


def _maximum(lat: FiniteLattice, elems):
    for m in elems:
        if all(lat.leq[z][m] for z in elems):
            return m
    return None


def validate_residuated(lattice: FiniteLattice, odot, arrow=None, provenance=None) -> ResiduatedLattice:
    """Check (L, odot, top) against the residuated-lattice axioms and return the algebra.

    Residuum existence is checked first, in both argument orders: a single
    element has to serve as ``x -> y`` for ``x*z`` and ``z*x`` alike.  For a
    commutative ``odot`` this is exactly "{z : x*z <= y} has a maximum".
    """
    n = lattice.size
    leq = lattice.leq
    _check_square("odot", odot, n)
    odot = _freeze(odot)

    derived = []
    for x in range(n):
        row = []
        for y in range(n):
            right = [z for z in range(n) if leq[odot[x][z]][y]]
            left = [z for z in range(n) if leq[odot[z][x]][y]]
            m_right = _maximum(lattice, right)
            m_left = _maximum(lattice, left)
            if m_right is None or m_left is None:
                side = "x*z" if m_right is None else "z*x"
                raise ResiduumMissing(
                    f"{{z : {side} <= y}} has no maximum for x={lattice.name(x)}, "
                    f"y={lattice.name(y)}", (x, y))
            if m_right != m_left:
                raise ResiduumMissing(
                    f"no common residuum for x={lattice.name(x)}, y={lattice.name(y)}: "
                    f"max{{z : x*z <= y}} = {lattice.name(m_right)} but "
                    f"max{{z : z*x <= y}} = {lattice.name(m_left)}", (x, y))
            row.append(m_right)
        derived.append(tuple(row))
    derived = tuple(derived)

    for x, y in product(range(n), repeat=2):
        if odot[x][y] != odot[y][x]:
            raise MonoidViolation(f"not commutative at ({x},{y})", (x, y))
    for x in range(n):
        if odot[lattice.top][x] != x:
            raise MonoidViolation(f"top is not an identity at {x}", (x,))
    for x, y, z in product(range(n), repeat=3):
        if odot[odot[x][y]][z] != odot[x][odot[y][z]]:
            raise MonoidViolation(f"not associative at ({x},{y},{z})", (x, y, z))
    for x, y, z in product(range(n), repeat=3):
        if leq[x][y] and not leq[odot[x][z]][odot[y][z]]:
            raise MonoidViolation(f"not monotone: {x} <= {y} but {x}*{z} > {y}*{z}", (x, y, z))

    if arrow is not None:
        _check_square("arrow", arrow, n)
        for x, y in product(range(n), repeat=2):
            if arrow[x][y] != derived[x][y]:
                raise ArrowMismatch(
                    f"arrow({x},{y}) = {arrow[x][y]}, residuum is {derived[x][y]}", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if leq[z][derived[x][y]] != leq[odot[x][z]][y]:
            raise ArrowMismatch(f"adjunction fails at ({x},{y},{z})", (x, y, z))

    return ResiduatedLattice(lattice, odot, derived, provenance)


def residuated(leq, odot, arrow=None, labels=None, provenance=None) -> ResiduatedLattice:
    """Shorthand: validate the lattice from ``leq`` and then the monoid."""
    return validate_residuated(validate_lattice(leq, labels=labels), odot, arrow, provenance)


@dataclass(frozen=True)
class PropertyReport:
    is_residuated_lattice: bool
    is_divisible: bool
    is_prelinear: bool
    is_bl: bool
    is_mv: bool
    is_heyting: bool
    is_chain: bool
    witnesses: dict = field(default_factory=dict, compare=False, hash=False)

    def flags(self) -> dict:
        return {
            "residuated": self.is_residuated_lattice,
            "divisible": self.is_divisible,
            "prelinear": self.is_prelinear,
            "bl": self.is_bl,
            "mv": self.is_mv,
            "heyting": self.is_heyting,
            "chain": self.is_chain,
        }


def _first(cond, n, arity):
    for t in product(range(n), repeat=arity):
        if not cond(*t):
            return t
    return None


def divisibility_witness(L: ResiduatedLattice):
    o, a, m = L.odot, L.arrow, L.lattice.meet
    return _first(lambda x, y: o[x][a[x][y]] == m[x][y], L.size, 2)


def prelinearity_witness(L: ResiduatedLattice):
    a, j, top = L.arrow, L.lattice.join, L.top
    return _first(lambda x, y: j[a[x][y]][a[y][x]] == top, L.size, 2)


def check_properties(L: ResiduatedLattice) -> PropertyReport:
    n = L.size
    div = divisibility_witness(L)
    prel = prelinearity_witness(L)
    bl = div if div is not None else prel
    mv = bl if bl is not None else _first(lambda x: L.neg(L.neg(x)) == x, n, 1)
    heyting = _first(lambda x: L.odot[x][x] == x, n, 1)
    chain = L.lattice.incomparable_pair()
    witnesses = {k: w for k, w in (("divisible", div), ("prelinear", prel), ("bl", bl),
                                   ("mv", mv), ("heyting", heyting), ("chain", chain))
                 if w is not None}
    return PropertyReport(True, div is None, prel is None, bl is None, mv is None,
                          heyting is None, chain is None, witnesses)


def divisibility_criteria(L: ResiduatedLattice) -> dict:
    """Witnesses (None when the criterion holds) for three equivalent forms of divisibility.

    ``identity``: x*(x->y) = x^y.
    ``factorization``: every y <= x is z*x for some z.
    ``implication``: z->(x*(x->y)) = z->(x^y) for all x, y, z.
    """
    n, o, a, m, leq = L.size, L.odot, L.arrow, L.lattice.meet, L.lattice.leq
    factor = _first(lambda x, y: not leq[y][x] or any(o[z][x] == y for z in range(n)), n, 2)
    impl = _first(lambda x, y, z: a[z][o[x][a[x][y]]] == a[z][m[x][y]], n, 3)
    return {"identity": divisibility_witness(L), "factorization": factor, "implication": impl}


def check_divisibility_equivalences(L: ResiduatedLattice) -> bool:
    crit = divisibility_criteria(L)
    verdicts = {k: w is None for k, w in crit.items()}
    if len(set(verdicts.values())) != 1:
        raise EquivalenceBroken(f"divisibility criteria disagree: {verdicts}",
                                tuple(crit.values()))
    return verdicts["identity"]


C1_C5 = ("c1", "c2", "c3", "c4", "c5")


@dataclass(frozen=True)
class IdentityReport:
    witnesses: dict  # identity name -> first violating tuple, or None

    @property
    def passed(self) -> bool:
        return all(w is None for w in self.witnesses.values())

    def failures(self) -> dict:
        return {k: w for k, w in self.witnesses.items() if w is not None}


def check_identities_c1_c5(L: ResiduatedLattice) -> IdentityReport:
    """Evaluate the double-negation identities c1..c5 with Ann(u) read as u*.

    c1: (x** -> x)* = 0
    c2: (x -> y)** = x** -> y**
    c3: (x*y)** = x** * (x** ^ y*)*
    c4: (x ^ y)** = x** ^ y**
    c5: y* <= x  implies  x -> (x*y)** = y**
    """
    div = divisibility_witness(L)
    if div is not None:
        raise PreconditionNotDivisible("algebra is not divisible", div)
    n, o, a, m, leq, bot = L.size, L.odot, L.arrow, L.lattice.meet, L.lattice.leq, L.bottom
    neg = [L.neg(x) for x in range(n)]
    nn = [neg[neg[x]] for x in range(n)]
    checks = {
        "c1": (1, lambda x: neg[a[nn[x]][x]] == bot),
        "c2": (2, lambda x, y: nn[a[x][y]] == a[nn[x]][nn[y]]),
        "c3": (2, lambda x, y: nn[o[x][y]] == o[nn[x]][neg[m[nn[x]][neg[y]]]]),
        "c4": (2, lambda x, y: nn[m[x][y]] == m[nn[x]][nn[y]]),
        "c5": (2, lambda x, y: not leq[neg[y]][x] or a[x][nn[o[x][y]]] == nn[y]),
    }
    return IdentityReport({k: _first(f, n, arity) for k, (arity, f) in checks.items()})


def chain_algebra(odot, labels=None, provenance=None) -> ResiduatedLattice:
    """Residuated lattice on the chain 0 < 1 < ... < n-1 with the given monoid table."""
    n = len(odot)
    leq = [[i <= j for j in range(n)] for i in range(n)]
    return residuated(leq, odot, labels=labels, provenance=provenance)


def minimum_chain(n: int) -> ResiduatedLattice:
    """The n-element Goedel chain (odot = min)."""
    return chain_algebra([[min(i, j) for j in range(n)] for i in range(n)])


def lukasiewicz_chain(n: int) -> ResiduatedLattice:
    """The n-element MV-chain: x*y = max(0, x+y-(n-1))."""
    return chain_algebra([[max(0, i + j - (n - 1)) for j in range(n)] for i in range(n)])


def describe(L: ResiduatedLattice, tup: Sequence[int]) -> str:
    return "(" + ",".join(L.name(x) for x in tup) + ")"
