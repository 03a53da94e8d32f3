from fractions import Fraction
from math import comb

from liegcs.linalg import Matrix
from liegcs.lie import LieAlgebra, StructureEquations, abelian, cotangent, mc_to_brackets
from liegcs.cohomology import (CEComplex, ce_differential, betti, betti_vector,
                               closed_two_forms, symplectic_obstruction,
                               two_form_is_closed, _wedge_basis)
from liegcs.gcs import cybe_check

F = Fraction


def g6(mu):
    eqs = StructureEquations(6, {
        4: {(0, 1): F(1), (0, 4): F(mu)},
        5: {(0, 4): F(1), (2, 3): F(1)},
    })
    return mc_to_brackets(eqs, name="g6")


def rxh3():
    return LieAlgebra(4, {(1, 2): {3: F(1)}}, name="R x h3")


def d4():
    return LieAlgebra(4, {(0, 1): {1: F(1)}, (0, 2): {2: F(-1)},
                          (1, 2): {3: F(1)}}, name="d4")


def test_d0_is_zero():
    d0 = ce_differential(rxh3(), 0)
    assert d0.is_zero() and d0.rows == 4 and d0.cols == 1


def test_g6_d1_coefficients():
    L = g6(1)
    d1 = ce_differential(L, 1)
    pairs = _wedge_basis(6, 2)
    col = d1.column(4)  # image of the fifth dual generator
    assert col[pairs.index((0, 1))] == 1
    assert col[pairs.index((0, 4))] == 1
    assert sum(1 for c in col if c) == 2


def test_abelian_differentials_vanish():
    L = abelian(4)
    for k in range(5):
        assert ce_differential(L, k).is_zero()
    assert betti_vector(L) == [comb(4, k) for k in range(5)]


def test_d_squared_zero():
    for L in (rxh3(), d4(), g6(1), g6(-2)):
        CEComplex(L)  # raises if d^2 != 0


def test_betti_cotangent_rxh3():
    T = cotangent(rxh3()).total
    assert betti(T, 1) == 5
    assert betti(T, 3) == 31


def test_betti_cotangent_d4():
    T = cotangent(d4()).total
    assert betti(T, 1) == 2
    assert betti(T, 3) == 4


def test_closed_two_forms_abelian():
    assert len(closed_two_forms(abelian(4))) == 6


def test_closed_two_forms_aff_r():
    L = LieAlgebra(2, {(0, 1): {1: F(1)}})
    assert len(closed_two_forms(L)) == 1


def test_closed_two_forms_g6():
    for mu in (1, -2):
        basis = closed_two_forms(g6(mu))
        assert len(basis) == 7
        monos = set()
        for w in basis:
            for i in range(6):
                for j in range(i + 1, 6):
                    if w.data[i][j]:
                        monos.add((i, j))
        assert monos == {(0, 1), (0, 2), (0, 3), (0, 4),
                         (1, 2), (1, 3), (2, 3)}


def test_symplectic_obstruction_g6():
    for mu in (1, -2):
        verdict = symplectic_obstruction(g6(mu))
        assert verdict.obstructed
        assert verdict.closed_two_form_dim == 7
        assert verdict.pfaffian_poly.is_zero()


def test_symplectic_obstruction_abelian_witness():
    verdict = symplectic_obstruction(abelian(4))
    assert not verdict.obstructed
    W = verdict.witness
    assert two_form_is_closed(abelian(4), W)
    assert W.det() != 0
    assert verdict.pfaffian_value


def test_witness_satisfies_compatibility():
    for L in (abelian(4), rxh3()):
        verdict = symplectic_obstruction(L)
        assert not verdict.obstructed
        assert cybe_check(L, verdict.witness)


def test_euler_characteristic_zero():
    for L in (rxh3(), d4(), g6(1)):
        b = betti_vector(L)
        assert sum((-1) ** k * bk for k, bk in enumerate(b)) == 0


def test_poincare_duality_for_cotangent():
    T = cotangent(rxh3()).total
    b = betti_vector(T)
    assert all(b[k] == b[8 - k] for k in range(9))


def test_b1_equals_dim_minus_derived():
    from liegcs.lie import derived_subalgebra
    for L in (rxh3(), d4(), g6(1), abelian(3)):
        assert betti(L, 1) == L.dim - derived_subalgebra(L).dim
