"""Id(A) of a finite commutative ring as a residuated lattice, and the ring
properties read off from it (multiplication, arithmetical, MTL/BL/MV)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .core import (
    ResiduatedLattice,
    check_identities_c1_c5,
    check_properties,
    validate_lattice,
    validate_residuated,
)
from .errors import (
    AlgebraError,
    CriteriaDisagree,
    EquivalenceBroken,
    NonCommutativeRing,
    PreconditionNotMultiplication,
    ValidationFailed,
)
from .expr import Ring
from .rings import (
    FiniteRing,
    LEFT,
    annihilator,
    build_ring,
    describe_ideal,
    enumerate_ideals,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
)


@dataclass(frozen=True)
class IdealLattice:
    ring: FiniteRing
    ideals: tuple
    algebra: ResiduatedLattice

    def index(self, I) -> int:
        return self._positions[I.members]

    @property
    def _positions(self):
        return {I.members: k for k, I in enumerate(self.ideals)}

    def label(self, k: int) -> str:
        return self.algebra.name(k)


def _ideal_tables(ideals):
    pos = {I.members: k for k, I in enumerate(ideals)}
    n = len(ideals)
    rng = range(n)
    leq = [[ideals[i].members <= ideals[j].members for j in rng] for i in rng]
    meet = [[pos[ideal_intersection(ideals[i], ideals[j]).members] for j in rng] for i in rng]
    join = [[pos[ideal_sum(ideals[i], ideals[j]).members] for j in rng] for i in rng]
    odot = [[pos[ideal_product(ideals[i], ideals[j]).members] for j in rng] for i in rng]
    arrow = [[pos[ideal_quotient(ideals[j], ideals[i]).members] for j in rng] for i in rng]
    return leq, meet, join, odot, arrow


def build_ideal_lattice(R: FiniteRing) -> IdealLattice:
    """Package (Id(A), ⊆, ∩, +, ⊗, (J:I), {0}, A) and validate it."""
    if not isinstance(R, FiniteRing):
        R = build_ring(R)
    if not R.commutative:
        raise NonCommutativeRing(f"{R.title} is not commutative")
    ideals = tuple(enumerate_ideals(R))
    leq, meet, join, odot, arrow = _ideal_tables(ideals)
    labels = [describe_ideal(I) for I in ideals]
    try:
        lat = validate_lattice(leq, meet, join, labels=labels)
        alg = validate_residuated(lat, odot, arrow, provenance=Ring(R.spec))
    except AlgebraError as exc:
        raise ValidationFailed(f"Id({R.title}) failed validation: {exc}", exc.witness) from exc
    return IdealLattice(R, ideals, alg)


def left_ideal_algebra(R: FiniteRing) -> ResiduatedLattice:
    """Attempt to validate the left ideals of a (possibly noncommutative) ring,
    ordered by inclusion, with the ideal product as monoid and (J:I) as arrow.

    Raises whatever axiom the structure violates.
    """
    ideals = enumerate_ideals(R, LEFT)
    leq, meet, join, odot, arrow = _ideal_tables(ideals)
    lat = validate_lattice(leq, meet, join, labels=[describe_ideal(I) for I in ideals])
    return validate_residuated(lat, odot, arrow)


def _lattice(R) -> IdealLattice:
    if isinstance(R, IdealLattice):
        return R
    return build_ideal_lattice(R)


@dataclass(frozen=True)
class MultiplicationVerdict:
    value: bool
    witness: Optional[tuple]  # (I, J) ideal indices, or None
    criteria: dict = field(default_factory=dict)

    def __bool__(self):
        return self.value


def is_multiplication_ring(R) -> MultiplicationVerdict:
    """Decide whether every ideal is a multiplication ideal, three ways.

    ``definition``: every J ⊆ I equals I⊗K for some ideal K.
    ``quotient``: I⊗(J:I) = I∩J for every pair, computed on ideals.
    ``divisible``: the residuated lattice Id(A) satisfies divisibility.
    """
    IL = _lattice(R)
    ideals = IL.ideals
    n = len(ideals)
    products = {(i, k): ideal_product(ideals[i], ideals[k]).members
                for i in range(n) for k in range(n)}

    definition = None
    for i, j in product(range(n), repeat=2):
        if ideals[j].members <= ideals[i].members and not any(
                products[i, k] == ideals[j].members for k in range(n)):
            definition = (i, j)
            break

    quotient = None
    for i, j in product(range(n), repeat=2):
        I, J = ideals[i], ideals[j]
        if ideal_product(I, ideal_quotient(J, I)).members != (I.members & J.members):
            quotient = (i, j)
            break

    report = check_properties(IL.algebra)
    divisible = report.witnesses.get("divisible")

    criteria = {"definition": definition, "quotient": quotient, "divisible": divisible}
    verdicts = {k: w is None for k, w in criteria.items()}
    if len(set(verdicts.values())) != 1:
        raise CriteriaDisagree(f"multiplication-ring criteria disagree on {IL.ring.title}: "
                               f"{verdicts}", tuple(criteria.values()))
    return MultiplicationVerdict(quotient is None, quotient, criteria)


@dataclass(frozen=True)
class DistributivityReport:
    c6: Optional[tuple]
    c7: Optional[tuple]

    @property
    def passed(self) -> bool:
        return self.c6 is None and self.c7 is None


def _c6_c7(IL: IdealLattice) -> DistributivityReport:
    alg = IL.algebra
    o, m, j = alg.odot, alg.lattice.meet, alg.lattice.join
    n = alg.size
    c6 = c7 = None
    for x, y, z in product(range(n), repeat=3):
        if c6 is None and o[x][m[y][z]] != m[o[x][y]][o[x][z]]:
            c6 = (x, y, z)
        if c7 is None and m[x][j[y][z]] != j[m[x][y]][m[x][z]]:
            c7 = (x, y, z)
    return DistributivityReport(c6, c7)


def is_arithmetical(R) -> bool:
    """Distributive ideal lattice."""
    return _c6_c7(_lattice(R)).c7 is None


def check_c6_c7(R) -> DistributivityReport:
    IL = _lattice(R)
    verdict = is_multiplication_ring(IL)
    if not verdict:
        raise PreconditionNotMultiplication(f"{IL.ring.title} is not a multiplication ring",
                                            verdict.witness)
    return _c6_c7(IL)


def double_annihilator_witness(R) -> Optional[int]:
    """First ideal index with Ann(Ann(I)) != I, computed on ideals directly."""
    IL = _lattice(R)
    for k, I in enumerate(IL.ideals):
        if annihilator(annihilator(I)).members != I.members:
            return k
    return None


@dataclass(frozen=True)
class RingLogicReport:
    ring: str
    mtl: bool
    divisible: bool
    bl: bool
    mv: bool
    heyting: bool
    chain: bool
    multiplication: bool
    double_annihilator: bool
    arithmetical: bool

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def classify_ring_logic(R) -> RingLogicReport:
    IL = _lattice(R)
    rep = check_properties(IL.algebra)
    mult = bool(is_multiplication_ring(IL))
    annann = double_annihilator_witness(IL) is None
    out = RingLogicReport(IL.ring.title, rep.is_prelinear, rep.is_divisible, rep.is_bl,
                          rep.is_mv, rep.is_heyting, rep.is_chain, mult, annann,
                          is_arithmetical(IL))
    expected = {
        "multiplication == divisible": mult == rep.is_divisible,
        "BL == MTL and multiplication": rep.is_bl == (rep.is_prelinear and mult),
        "MV == MTL and multiplication and AnnAnn": rep.is_mv == (rep.is_prelinear and mult and annann),
    }
    broken = [k for k, ok in expected.items() if not ok]
    if broken:
        raise EquivalenceBroken(f"{IL.ring.title}: {', '.join(broken)}")
    return out


def ring_identities_c1_c5(R):
    """c1..c5 on Id(A) (requires Id(A) to be divisible)."""
    return check_identities_c1_c5(_lattice(R).algebra)
