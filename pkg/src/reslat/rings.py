"""Finite rings given by operation tables, their ideals and ideal arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .errors import InvalidSpec, MixedRings, NonCommutativeRing, RingAxiomViolation

TWO_SIDED, LEFT, RIGHT = "two-sided", "left", "right"
SIDES = (TWO_SIDED, LEFT, RIGHT)


# ---------------------------------------------------------------------------
# ring specifications

@dataclass(frozen=True)
class Zn:
    k: int


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __init__(self, factors):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class PolyQuot:
    """Z_p[X]/(f) with ``f`` given as little-endian coefficients."""
    p: int
    f: tuple

    def __init__(self, p, f):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "f", tuple(f))


@dataclass(frozen=True)
class TableSpec:
    add: tuple
    mul: tuple
    zero: int
    one: int
    name: str = "T"
    labels: Optional[tuple] = None

    def __init__(self, add, mul, zero, one, name="T", labels=None):
        object.__setattr__(self, "add", tuple(tuple(r) for r in add))
        object.__setattr__(self, "mul", tuple(tuple(r) for r in mul))
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "one", one)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)


RingSpec = Zn | Product | PolyQuot | TableSpec


def _poly_str(coeffs, var="X"):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def spec_name(spec: RingSpec) -> str:
    if isinstance(spec, Zn):
        return f"Z{spec.k}"
    if isinstance(spec, Product):
        return "x".join(
            f"({spec_name(f)})" if isinstance(f, Product) else spec_name(f) for f in spec.factors)
    if isinstance(spec, PolyQuot):
        return f"Z{spec.p}[X]/({_poly_str(spec.f)})"
    if isinstance(spec, TableSpec):
        return spec.name
    raise InvalidSpec(f"unknown ring spec {spec!r}")


# ---------------------------------------------------------------------------
# rings

@dataclass(frozen=True)
class FiniteRing:
    size: int
    add: tuple
    mul: tuple
    zero: int
    one: int
    commutative: bool
    spec: object = None
    labels: Optional[tuple] = field(default=None, compare=False, hash=False)
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def name(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    @property
    def title(self) -> str:
        return spec_name(self.spec) if self.spec is not None else f"R{self.size}"

    def neg(self, x: int) -> int:
        return next(y for y in range(self.size) if self.add[x][y] == self.zero)


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _ring_from_tables(add, mul, zero, one, spec, labels):
    n = len(add)
    commutative = all(mul[x][y] == mul[y][x] for x in range(n) for y in range(n))
    return FiniteRing(n, tuple(tuple(r) for r in add), tuple(tuple(r) for r in mul),
                      zero, one, commutative, spec, tuple(labels) if labels else None)


def validate_ring_tables(add, mul, zero, one):
    """Exhaustive ring-axiom check; raises RingAxiomViolation with the first witness."""
    n = len(add)
    for name, t in (("add", add), ("mul", mul)):
        if len(t) != n or any(len(r) != n for r in t):
            raise InvalidSpec(f"{name} table must be {n}x{n}")
        if any(not (isinstance(v, int) and 0 <= v < n) for r in t for v in r):
            raise InvalidSpec(f"{name} table has entries outside 0..{n - 1}")
    if not (0 <= zero < n and 0 <= one < n):
        raise InvalidSpec("zero/one out of range")
    r = range(n)
    for x, y in product(r, r):
        if add[x][y] != add[y][x]:
            raise RingAxiomViolation("addition not commutative", (x, y))
    for x in r:
        if add[zero][x] != x:
            raise RingAxiomViolation("zero is not an additive identity", (x,))
        if not any(add[x][y] == zero for y in r):
            raise RingAxiomViolation("no additive inverse", (x,))
        if mul[one][x] != x or mul[x][one] != x:
            raise RingAxiomViolation("one is not a multiplicative identity", (x,))
    for x, y, z in product(r, r, r):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            raise RingAxiomViolation("addition not associative", (x, y, z))
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            raise RingAxiomViolation("multiplication not associative", (x, y, z))
        if mul[x][add[y][z]] != add[mul[x][y]][mul[x][z]]:
            raise RingAxiomViolation("left distributivity fails", (x, y, z))
        if mul[add[y][z]][x] != add[mul[y][x]][mul[z][x]]:
            raise RingAxiomViolation("right distributivity fails", (x, y, z))


def build_ring(spec: RingSpec) -> FiniteRing:
    """Materialize a ring spec as add/mul tables.

    Product elements are ordered as mixed-radix tuples (first factor most
    significant); Z_p[X]/(f) elements are little-endian coefficient vectors.
    """
    if isinstance(spec, Zn):
        k = spec.k
        if not isinstance(k, int) or k < 2:
            raise InvalidSpec(f"Zn needs k >= 2, got {k!r}")
        add = [[(x + y) % k for y in range(k)] for x in range(k)]
        mul = [[(x * y) % k for y in range(k)] for x in range(k)]
        return _ring_from_tables(add, mul, 0, 1 % k, spec, [str(x) for x in range(k)])

    if isinstance(spec, Product):
        if not spec.factors:
            raise InvalidSpec("empty product")
        parts = [build_ring(f) for f in spec.factors]
        elems = list(product(*(range(p.size) for p in parts)))
        index = {e: i for i, e in enumerate(elems)}

        def op(table_of):
            return [[index[tuple(table_of(p)[a][b] for p, a, b in zip(parts, x, y))]
                     for y in elems] for x in elems]

        labels = ["(" + ",".join(p.name(c) for p, c in zip(parts, e)) + ")" for e in elems]
        return _ring_from_tables(op(lambda p: p.add), op(lambda p: p.mul),
                                 index[tuple(p.zero for p in parts)],
                                 index[tuple(p.one for p in parts)], spec, labels)

    if isinstance(spec, PolyQuot):
        p = spec.p
        if not isinstance(p, int) or not _is_prime(p):
            raise InvalidSpec(f"PolyQuot needs a prime modulus, got {p!r}")
        f = [c % p for c in spec.f]
        while f and f[-1] == 0:
            f.pop()
        d = len(f) - 1
        if d < 1:
            raise InvalidSpec("PolyQuot needs a nonconstant f")
        inv = pow(f[-1], -1, p)
        f = [(c * inv) % p for c in f]
        elems = list(product(range(p), repeat=d))
        elems = [tuple(reversed(e)) for e in elems]  # index = sum c_i p^i
        elems.sort(key=lambda e: sum(c * p ** i for i, c in enumerate(e)))
        index = {e: i for i, e in enumerate(elems)}

        def reduce(poly):
            poly = list(poly)
            for deg in range(len(poly) - 1, d - 1, -1):
                c = poly[deg]
                if c:
                    for i in range(d + 1):
                        poly[deg - d + i] = (poly[deg - d + i] - c * f[i]) % p
            return tuple(poly[:d]) + (0,) * (d - len(poly[:d]))

        def pmul(a, b):
            out = [0] * (2 * d - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] = (out[i + j] + x * y) % p
            return reduce(out)

        add = [[index[tuple((u + v) % p for u, v in zip(a, b))] for b in elems] for a in elems]
        mul = [[index[pmul(a, b)] for b in elems] for a in elems]
        one = index[(1,) + (0,) * (d - 1)]
        return _ring_from_tables(add, mul, 0, one, spec, [_poly_str(e) for e in elems])

    if isinstance(spec, TableSpec):
        validate_ring_tables(spec.add, spec.mul, spec.zero, spec.one)
        return _ring_from_tables(spec.add, spec.mul, spec.zero, spec.one, spec, spec.labels)

    raise InvalidSpec(f"unknown ring spec {spec!r}")


def ring_from_function(name, elements, add, mul, zero, one, labels=None) -> FiniteRing:
    """Tabulate a ring given on an explicit element list, as a validated TableSpec."""
    index = {e: i for i, e in enumerate(elements)}
    add_t = [[index[add(a, b)] for b in elements] for a in elements]
    mul_t = [[index[mul(a, b)] for b in elements] for a in elements]
    labels = labels or [str(e) for e in elements]
    return build_ring(TableSpec(add_t, mul_t, index[zero], index[one], name, labels))


# ---------------------------------------------------------------------------
# ideals

@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(compare=False, hash=False, repr=False)
    members: frozenset
    side: str = TWO_SIDED

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    @property
    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))

    def is_zero(self) -> bool:
        return len(self.members) == 1

    def is_whole(self) -> bool:
        return len(self.members) == self.ring.size


def _same_ring(I: Ideal, J: Ideal):
    if I.ring is not J.ring and I.ring != J.ring:
        raise MixedRings("ideals belong to different rings")
    if I.side != J.side:
        raise MixedRings(f"cannot combine a {I.side} ideal with a {J.side} ideal")


def _principal(R: FiniteRing, g: int, side: str) -> frozenset:
    key = ("principal", g, side)
    if key not in R._cache:
        if side == RIGHT:
            R._cache[key] = frozenset(R.mul[g][r] for r in range(R.size))
        elif side == LEFT or R.commutative:
            R._cache[key] = frozenset(R.mul[r][g] for r in range(R.size))
        else:
            R._cache[key] = _generic_closure(R, (g,), side)
    return R._cache[key]


def _closure(R: FiniteRing, gens, side=TWO_SIDED) -> frozenset:
    """Smallest ideal of the given side containing ``gens``."""
    if side == TWO_SIDED and not R.commutative:
        return _generic_closure(R, gens, side)
    # one-sided (or commutative): the sum of the principal ideals R*g
    members = frozenset((R.zero,))
    for g in gens:
        if g not in members:
            members = _join(R, members, _principal(R, g, side))
    return members


def _generic_closure(R: FiniteRing, gens, side) -> frozenset:
    add, mul = R.add, R.mul
    members = {R.zero}
    todo = list(gens)
    while todo:
        x = todo.pop()
        if x in members:
            continue
        # adjoin x: the new additive group is <x> + members
        new = set()
        y = x
        while y not in members and y not in new:
            new.add(y)
            y = add[y][x]
        coset = {add[y][m] for y in new for m in members}
        members |= coset
        for y in coset:
            if side in (TWO_SIDED, LEFT):
                todo.extend(mul[r][y] for r in range(R.size))
            if side in (TWO_SIDED, RIGHT):
                todo.extend(mul[y][r] for r in range(R.size))
    return frozenset(members)


def ideal(R: FiniteRing, gens=(), side=TWO_SIDED) -> Ideal:
    """The ideal generated by ``gens``."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if R.commutative:
        side = TWO_SIDED
    return Ideal(R, _closure(R, gens, side), side)


def zero_ideal(R: FiniteRing, side=TWO_SIDED) -> Ideal:
    return ideal(R, (), side)


def whole_ring(R: FiniteRing, side=TWO_SIDED) -> Ideal:
    return ideal(R, (R.one,), side)


def enumerate_ideals(R: FiniteRing, side=TWO_SIDED) -> list:
    """All ideals of the requested side, sorted by (cardinality, members)."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if R.commutative:
        side = TWO_SIDED
    principal = {}
    for g in range(R.size):
        principal.setdefault(_closure(R, (g,), side), g)
    found = set(principal)
    frontier = list(found)
    gens = list(principal)
    while frontier:
        nxt = []
        for I in frontier:
            for P in gens:
                if P <= I:
                    continue
                S = _join(R, I, P)
                if S not in found:
                    found.add(S)
                    nxt.append(S)
        frontier = nxt
    ideals = [Ideal(R, m, side) for m in found]
    ideals.sort(key=lambda I: I.sort_key)
    return ideals


def _join(R, A, B):
    # A + B as the union of the cosets b + A, b in B
    out = set(A)
    for b in B:
        if b not in out:
            out.update(R.add[a][b] for a in A)
    return frozenset(out)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, _join(I.ring, I.members, J.members), I.side)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.members & J.members, I.side)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """Ideal generated by all products i*j."""
    _same_ring(I, J)
    R = I.ring
    if R.commutative:
        # (sum R g)(sum R h) = sum R gh over generators
        prods = {R.mul[g][h] for g in generators(I) for h in generators(J)}
    else:
        prods = {R.mul[i][j] for i in I.members for j in J.members}
    return Ideal(R, _closure(R, sorted(prods), I.side), I.side)


def ideal_quotient(J: Ideal, I: Ideal) -> Ideal:
    """(J:I) = {x : x*I is contained in J}."""
    _same_ring(I, J)
    R = I.ring
    mul, target = R.mul, J.members
    gens = generators(I)
    if R.commutative:
        test = gens
    else:
        test = sorted(I.members)
    members = frozenset(x for x in range(R.size) if all(mul[x][i] in target for i in test))
    return Ideal(R, members, I.side)


def annihilator(I: Ideal) -> Ideal:
    return ideal_quotient(zero_ideal(I.ring, I.side), I)


def generators(I: Ideal) -> tuple:
    """A smallest generating set, lexicographically first among those of that size."""
    R = I.ring
    key = ("generators", I.members, I.side)
    if key in R._cache:
        return R._cache[key]
    gens = None
    if I.is_zero():
        gens = ()
    elems = sorted(I.members - {R.zero})
    for k in range(1, len(elems) + 1):
        if gens is not None:
            break
        for cand in combinations(elems, k):
            if _closure(R, cand, I.side) == I.members:
                gens = cand
                break
    R._cache[key] = gens
    return gens


def describe_ideal(I: Ideal) -> str:
    if I.is_zero():
        return "(0)"
    if I.is_whole():
        return "A"
    return "(" + ",".join(I.ring.name(g) for g in generators(I)) + ")"


@dataclass(frozen=True)
class IdealStats:
    n_ideals: int
    n_maximal: int
    n_prime: int
    is_local: bool
    is_principal_ring: bool
    maximal: tuple = ()
    prime: tuple = ()
    non_principal: Optional[Ideal] = None


def is_prime_ideal(P: Ideal) -> bool:
    R = P.ring
    if P.is_whole():
        return False
    m = P.members
    return all(R.mul[a][b] not in m or a in m or b in m
               for a in range(R.size) for b in range(R.size))


def classify_ideals(R: FiniteRing, ideals=None) -> IdealStats:
    if not R.commutative:
        raise NonCommutativeRing(f"{R.title} is not commutative")
    ideals = ideals if ideals is not None else enumerate_ideals(R)
    proper = [I for I in ideals if not I.is_whole()]
    maximal = tuple(I for I in proper
                    if not any(I.members < J.members for J in proper))
    prime = tuple(I for I in proper if is_prime_ideal(I))
    principal = {_principal(R, g, TWO_SIDED) for g in range(R.size)}
    non_principal = next((I for I in ideals if I.members not in principal), None)
    return IdealStats(len(ideals), len(maximal), len(prime), len(maximal) == 1,
                      non_principal is None, maximal, prime, non_principal)
