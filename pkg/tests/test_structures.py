from fractions import Fraction

import pytest

from dlf import (
    QQ,
    Algebra,
    DomainError,
    LinMap,
    builtin,
    check_algebra,
    check_algebra_morphism,
    check_bimodule,
    check_coalgebra,
    check_hopf,
    commutator_quotient,
    cyclic_group_algebra,
    field_algebra,
    group_algebra,
    matrix_algebra,
    regular_bimodule,
    truncated_poly,
)
from dlf.examples import (
    matrix_conjugation_twist,
    qc2_sign_twist,
    sweedler_hopf,
    truncated_scaling_twist,
)
from dlf.structures import HopfAlgebra

from oracles import span_dim


def test_qc2_all_axioms():
    h = cyclic_group_algebra(QQ, 2)
    assert check_algebra(h.algebra).ok
    assert check_coalgebra(h.coalgebra).ok
    assert check_hopf(h).ok


def test_qc3_hopf_and_involutive_antipode():
    h = cyclic_group_algebra(QQ, 3)
    assert check_hopf(h).ok
    from dlf.linalg import compose

    assert compose(h.antipode, h.antipode) == h.algebra.identity()


def test_mutated_multiplication():
    # replace g*g = e by g*g = g: still a unital associative algebra (the
    # idempotent monoid), verified here by brute force on basis triples,
    # but the Hopf convolution-unit axiom fails with witness g
    h = cyclic_group_algebra(QQ, 2)
    a = h.algebra
    rows = [list(r) for r in a.mul.rows]
    rows[0][3] = Fraction(0)
    rows[1][3] = Fraction(1)
    mul = LinMap.from_rows(a.mul.domain, a.mul.codomain, QQ, rows)
    mutated = Algebra("QC2m", a.carrier, mul, a.unit, QQ)

    def times(i, j):
        return mutated.multiply({i: Fraction(1)}, {j: Fraction(1)})

    for i in range(2):
        for j in range(2):
            for k in range(2):
                lhs = mutated.multiply(times(i, j), {k: Fraction(1)})
                rhs = mutated.multiply({i: Fraction(1)}, times(j, k))
                assert lhs == rhs
    rep = check_algebra(mutated)
    assert rep.ok

    broken = HopfAlgebra("QC2m", mutated, h.coalgebra, h.antipode)
    rep = check_hopf(broken)
    assert not rep.ok
    failing = {c.name for c in rep.failures()}
    assert {"antipode-left", "antipode-right"} <= failing
    witness = rep.failures()[0].witness
    assert witness == ("g",)


def test_shape_mismatch_is_domain_error():
    h = cyclic_group_algebra(QQ, 2)
    with pytest.raises(DomainError):
        Algebra("bad", h.carrier, h.algebra.unit, h.algebra.unit, QQ)


def test_builtins():
    t = builtin(QQ, "truncated_poly", 2)
    assert t.carrier.dim == 2
    assert check_algebra(t).ok
    m = builtin(QQ, "matrix_algebra", 2)
    assert m.carrier.dim == 4
    assert check_algebra(m).ok
    # unit is the identity matrix
    assert m.one() == {0: Fraction(1), 3: Fraction(1)}
    k = builtin(QQ, "field")
    assert k.carrier.dim == 1
    g = builtin(QQ, "group_algebra", [[0, 1], [1, 0]])
    assert check_hopf(g).ok


def test_invalid_group_table():
    with pytest.raises(DomainError):
        group_algebra(QQ, [[0, 1], [1, 1]])
    with pytest.raises(DomainError):
        group_algebra(QQ, [[1, 0], [0, 0]])


def test_commutator_quotient_commutative():
    for a in (cyclic_group_algebra(QQ, 2).algebra, truncated_poly(QQ, 2)):
        space, _ = commutator_quotient(regular_bimodule(a))
        assert space.dim == a.carrier.dim


def test_commutator_quotient_matrix_algebra():
    a = matrix_algebra(QQ, 2)
    m = regular_bimodule(a)
    # independent oracle: brute-force span of commutators on basis pairs
    from dlf.structures import commutator_subspace
    from dlf.linalg import vec_dense

    vectors = [vec_dense(v, 4, QQ) for v in commutator_subspace(m)]
    assert span_dim(vectors, 4) == 3
    space, proj = commutator_quotient(m)
    assert space.dim == 1
    from dlf.linalg import rank

    assert rank(proj) == 1


def test_bimodule_checks():
    a = matrix_algebra(QQ, 2)
    assert check_bimodule(regular_bimodule(a)).ok


def test_morphisms():
    for mor in (qc2_sign_twist(), truncated_scaling_twist(), matrix_conjugation_twist()):
        assert check_algebra_morphism(mor).ok
    # broken morphism: x -> 1 on k[x]/(x^2) is not multiplicative
    a = truncated_poly(QQ, 2)
    bad = LinMap.from_rows(a.carrier, a.carrier, QQ, [[1, 1], [0, 0]])
    from dlf.structures import AlgebraMorphism

    rep = check_algebra_morphism(AlgebraMorphism("bad", a, a, bad))
    assert not rep.ok


def test_sweedler_hopf_valid_and_antipode_order_four():
    h = sweedler_hopf()
    assert check_hopf(h).ok
    from dlf.linalg import compose

    s2 = compose(h.antipode, h.antipode)
    assert s2 != h.algebra.identity()
    assert compose(s2, s2) == h.algebra.identity()


def test_field_algebra():
    k = field_algebra(QQ)
    assert check_algebra(k).ok
    space, _ = commutator_quotient(regular_bimodule(k))
    assert space.dim == 1
