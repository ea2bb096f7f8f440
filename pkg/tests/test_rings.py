import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from reslat.corpus import commutative_specs, matrix_ring_m2z2, non_multiplication_ring, table_rings
from reslat.errors import InvalidSpec, NonCommutativeRing, RingAxiomViolation
from reslat.rings import (
    LEFT,
    RIGHT,
    TWO_SIDED,
    PolyQuot,
    Product,
    TableSpec,
    Zn,
    annihilator,
    build_ring,
    classify_ideals,
    describe_ideal,
    enumerate_ideals,
    generators,
    ideal,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    spec_name,
)


def members(R, *gens):
    return ideal(R, gens).members


class TestConstruction:
    def test_zn_tables(self):
        R = build_ring(Zn(6))
        assert R.size == 6 and R.commutative
        assert R.mul[4][5] == 2 and R.add[4][5] == 3 and R.one == 1

    def test_product_is_componentwise(self):
        R = build_ring(Product([Zn(2), Zn(3)]))
        assert R.size == 6 and R.labels[5] == "(1,2)"
        assert R.mul[R.labels.index("(1,2)")][R.labels.index("(1,2)")] == R.labels.index("(1,1)")

    def test_polyquot_field_of_four(self):
        R = build_ring(PolyQuot(2, (1, 1, 1)))
        x = R.labels.index("X")
        assert R.labels[R.mul[x][x]] == "1+X"

    def test_polyquot_monic_normalisation(self):
        a = build_ring(PolyQuot(3, (0, 0, 2)))
        b = build_ring(PolyQuot(3, (0, 0, 1)))
        assert a.mul == b.mul

    @pytest.mark.parametrize("spec", [Zn(1), PolyQuot(4, (0, 0, 1)), PolyQuot(2, (1,)), Product([])])
    def test_invalid_specs(self, spec):
        with pytest.raises(InvalidSpec):
            build_ring(spec)

    def test_ring_axiom_violation(self):
        # Z3 addition with a multiplication that is not distributive
        add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
        mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
        with pytest.raises(RingAxiomViolation):
            build_ring(TableSpec(add, mul, 0, 1))

    def test_names(self):
        assert spec_name(Product([Zn(2), Zn(2)])) == "Z2xZ2"
        assert spec_name(PolyQuot(2, (0, 0, 1))) == "Z2[X]/(X^2)"


class TestIdeals:
    @pytest.mark.parametrize("k", range(2, 33))
    def test_zn_ideals_are_divisor_ideals(self, k):
        R = build_ring(Zn(k))
        got = {I.members for I in enumerate_ideals(R)}
        want = {frozenset(range(0, k, d)) for d in oracles.divisors(k)}
        assert got == want

    def test_against_subset_oracle(self):
        rings = [build_ring(s) for s in commutative_specs()]
        rings = [R for R in rings if R.size <= 16] + [matrix_ring_m2z2()]
        assert len(rings) >= 30
        for R in rings:
            want = set(oracles.ideals_by_subsets(R.add, R.mul, R.zero))
            got = {I.members for I in enumerate_ideals(R)}
            assert got == want, R.title

    def test_matrix_ring_sides(self):
        R = matrix_ring_m2z2()
        assert not R.commutative
        assert len(enumerate_ideals(R, TWO_SIDED)) == 2
        assert len(enumerate_ideals(R, LEFT)) == 5
        assert len(enumerate_ideals(R, RIGHT)) == 5
        left = {I.members for I in enumerate_ideals(R, LEFT)}
        right = {I.members for I in enumerate_ideals(R, RIGHT)}
        assert left != right

    def test_z12_arithmetic(self):
        R = build_ring(Zn(12))
        two, three, four, six = (ideal(R, [g]) for g in (2, 3, 4, 6))
        assert ideal_product(two, two).members == four.members
        assert ideal_product(two, six).members == frozenset({0})
        assert ideal_sum(four, six).members == two.members
        assert ideal_intersection(four, six).members == members(R, 0)
        assert annihilator(two).members == six.members
        assert ideal_quotient(ideal(R, [0]), four).members == three.members
        assert ideal_quotient(four, two).members == two.members

    def test_generators_and_names(self):
        R = non_multiplication_ring()
        m = next(I for I in enumerate_ideals(R) if len(I.members) == 4)
        assert len(generators(m)) == 2 and describe_ideal(m) == "(X,Y)"
        assert describe_ideal(ideal(R, [0])) == "(0)" and describe_ideal(ideal(R, [R.one])) == "A"


class TestStatistics:
    def test_z12(self):
        st_ = classify_ideals(build_ring(Zn(12)))
        assert (st_.n_ideals, st_.n_maximal, st_.n_prime, st_.is_local, st_.is_principal_ring) == (
            6, 2, 2, False, True)

    def test_non_multiplication_ring(self):
        st_ = classify_ideals(non_multiplication_ring())
        assert (st_.n_ideals, st_.n_maximal, st_.n_prime, st_.is_local, st_.is_principal_ring) == (
            6, 1, 1, True, False)
        assert describe_ideal(st_.non_principal) == "(X,Y)"

    def test_noncommutative_rejected(self):
        with pytest.raises(NonCommutativeRing):
            classify_ideals(matrix_ring_m2z2())

    @pytest.mark.parametrize("k", range(2, 33))
    def test_zn_counts_from_factorization(self, k):
        f = oracles.prime_factorization(k)
        st_ = classify_ideals(build_ring(Zn(k)))
        assert st_.n_ideals == math.prod(a + 1 for a in f.values())
        assert st_.n_maximal == st_.n_prime == len(f)
        assert st_.is_principal_ring

    def test_table_rings(self):
        stats = {R.title: classify_ideals(R) for R in table_rings()}
        assert stats["Z2[X,Y]/(X^2,Y^2)"].n_ideals > 5
        assert not stats["Z2[X,Y]/(X^2,Y^2)"].is_principal_ring
        assert stats["Z4[X]/(2X,X^2)"].is_local


_RINGS = [build_ring(s) for s in commutative_specs() if build_ring(s).size <= 36]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(_RINGS), st.data())
def test_ideal_operations_laws(R, data):
    ideals = enumerate_ideals(R)
    I = data.draw(st.sampled_from(ideals))
    J = data.draw(st.sampled_from(ideals))
    IJ = ideal_product(I, J)
    assert IJ.members == ideal_product(J, I).members
    assert IJ.members <= ideal_intersection(I, J).members
    assert ideal_sum(I, J).members >= I.members | J.members
    Q = ideal_quotient(J, I)
    assert ideal_product(Q, I).members <= J.members
    # (J:I) is the largest such ideal
    for K in ideals:
        if ideal_product(K, I).members <= J.members:
            assert K.members <= Q.members
