import pytest

import oracles
from reslat.classify import are_isomorphic, generated_bl
from reslat.core import check_properties, lukasiewicz_chain, minimum_chain
from reslat.corpus import example3
from reslat.errors import NotBLAlgebra
from reslat.expr import Literal, OrdProd, Ring, render
from reslat.ordinal import direct_product, evaluate_expr, ordinal_product
from reslat.rings import Product, Zn

Z2, Z4 = Ring(Zn(2)), Ring(Zn(4))
B4 = Ring(Product([Zn(2), Zn(2)]))


def ev(e):
    return evaluate_expr(e)


def bl_pool(max_size=5):
    return [e.algebra for n in range(2, max_size + 1) for e in generated_bl(n).values()]


class TestExamples:
    def test_b4_glued_on_z2_is_example3(self):
        P = ev(OrdProd(B4, Z2))
        E = example3()
        assert P.odot == E.odot and P.arrow == E.arrow
        assert are_isomorphic(P, E)

    def test_goedel_three_chain(self):
        P = ev(OrdProd(Z2, Z2))
        rep = check_properties(P)
        assert P.size == 3 and rep.is_bl and rep.is_chain and not rep.is_mv
        assert are_isomorphic(P, minimum_chain(3))
        assert not are_isomorphic(P, ev(Z4))

    def test_chain_under_boolean_square(self):
        rep = check_properties(ev(OrdProd(Z2, B4)))
        assert rep.is_bl and not rep.is_mv and not rep.is_chain

    def test_ring_expression(self):
        A = ev(Z4)
        assert A.provenance == Z4
        assert are_isomorphic(A, lukasiewicz_chain(3))

    def test_nested_expression(self):
        e = OrdProd(Z2, OrdProd(Z2, Z2))
        A = ev(e)
        assert A.size == 4 and A.lattice.is_chain and check_properties(A).is_bl
        assert A.provenance == e
        assert render(e) == "Id(Z2) . (Id(Z2) . Id(Z2))"

    def test_non_bl_operand_reports_path(self):
        e = OrdProd(Literal("example3", algebra=example3()), Z2)
        with pytest.raises(NotBLAlgebra) as exc:
            ev(e)
        assert exc.value.path == ("left",)
        assert exc.value.witness == (1, 2)

    def test_nested_path(self):
        e = OrdProd(Z2, OrdProd(OrdProd(B4, Z2), Z2))
        with pytest.raises(NotBLAlgebra) as exc:
            ev(e)
        assert exc.value.path == ("right", "left")

    def test_direct_factor_must_be_bl(self):
        with pytest.raises(NotBLAlgebra):
            ordinal_product(lukasiewicz_chain(2), example3())

    def test_not_commutative(self):
        a, b = ev(OrdProd(B4, Z2)), ev(OrdProd(Z2, B4))
        assert check_properties(a).flags() != check_properties(b).flags()
        assert not are_isomorphic(a, b)


def test_matches_definition_oracle():
    pool = bl_pool(4)
    for A in pool:
        for B in pool:
            P = ordinal_product(A, B)
            leq, t = oracles.ordinal(A.lattice.leq, A.odot, A.top, B.lattice.leq, B.odot, B.bottom)
            assert oracles.isomorphic(leq, t, P.lattice.leq, P.odot)


def test_pairwise_laws():
    pool = bl_pool(5)
    for A in pool:
        for B in pool:
            if A.size + B.size - 1 > 9:
                continue
            P = ordinal_product(A, B)
            rep = check_properties(P)
            assert P.size == A.size + B.size - 1
            if A.lattice.is_chain:
                assert rep.is_bl and not rep.is_mv
                if B.lattice.is_chain:
                    assert rep.is_chain
            else:
                assert rep.is_divisible and not rep.is_prelinear


def test_associativity_up_to_isomorphism():
    pool = bl_pool(4)
    checked = 0
    for A in pool:
        for B in pool:
            for C in pool:
                if A.size + B.size + C.size - 2 > 9:
                    continue
                if A.lattice.is_chain and B.lattice.is_chain:
                    left = ordinal_product(ordinal_product(A, B), C)
                    right = ordinal_product(A, ordinal_product(B, C))
                    assert are_isomorphic(left, right)
                    checked += 1
                elif not B.lattice.is_chain:
                    with pytest.raises(NotBLAlgebra):
                        ordinal_product(A, ordinal_product(B, C))
    assert checked > 100


def test_direct_product_of_chains():
    P = direct_product(lukasiewicz_chain(2), lukasiewicz_chain(3))
    assert P.size == 6 and check_properties(P).is_mv
    assert are_isomorphic(P, ev(Ring(Product([Zn(2), Zn(4)]))))
