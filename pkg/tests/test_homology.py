from fractions import Fraction

import pytest

from dlf import (
    QQ,
    CyclicityError,
    DomainError,
    EMRealization,
    InternalError,
    RangeError,
    commutator_quotient,
    cyclic_bicomplex,
    cyclic_group_algebra,
    field_algebra,
    hc_table,
    hochschild_complex,
    homology_dims,
    matrix_algebra,
    prime_field,
    regular_bimodule,
    truncated_poly,
)
from dlf.homology import hochschild_boundary
from dlf.examples import qc2_sign_twist
from dlf.linalg import rank

from oracles import (
    dense_rank,
    homology_dim,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    zero,
)


def test_hochschild_field():
    em = EMRealization(field_algebra(QQ))
    d = em.cyclic_object(4)
    complex_ = hochschild_complex(d)
    # boundaries alternate zero and identity
    from dlf.linalg import LinMap

    assert complex_.differentials[1].is_zero()
    assert complex_.differentials[2] == LinMap.identity(complex_.spaces[2], QQ)
    assert complex_.differentials[3].is_zero()
    table = homology_dims(complex_, 3)
    assert table.dims == (1, 0, 0, 0)


def test_hochschild_qc2_b1_vanishes():
    a = cyclic_group_algebra(QQ, 2).algebra
    em = EMRealization(a)
    d = em.cyclic_object(2)
    b1 = hochschild_boundary(d, 1)
    assert b1.is_zero()


def test_hochschild_m2_b1_rank():
    a = matrix_algebra(QQ, 2)
    em = EMRealization(a)
    d = em.cyclic_object(2)
    b1 = hochschild_boundary(d, 1)
    assert rank(b1) == 3
    assert dense_rank(b1.rows) == 3


def test_hh0_equals_commutator_quotient():
    for a in (
        cyclic_group_algebra(QQ, 2).algebra,
        truncated_poly(QQ, 2),
        matrix_algebra(QQ, 2),
    ):
        em = EMRealization(a)
        d = em.cyclic_object(1)
        table = homology_dims(hochschild_complex(d), 0)
        space, _ = commutator_quotient(regular_bimodule(a))
        assert table.dims[0] == space.dim


def test_homology_range_error():
    em = EMRealization(field_algebra(QQ))
    d = em.cyclic_object(2)
    complex_ = hochschild_complex(d)
    with pytest.raises(RangeError):
        homology_dims(complex_, 2)


def brute_force_hc_field(n_max):
    """Independent oracle: dense totalization of the cyclic bicomplex of
    the one-dimensional algebra, all maps written out by hand."""
    # degree q space is 1-dimensional; d_i = 1, t = 1
    # b_q = sum_{i=0..q} (-1)^i = 1 if q even else 0; b'_q = sum_{i<q}
    def b(q):
        return identity(1) if q % 2 == 0 else zero(1, 1)

    def bp(q):
        return zero(1, 1) if q % 2 == 0 else identity(1)

    def one_minus_t(q):
        return mat_sub(identity(1), mat_scale(identity(1), Fraction((-1) ** q)))

    def norm(q):
        total = zero(1, 1)
        for i in range(q + 1):
            total = mat_add(total, mat_scale(identity(1), Fraction((-1) ** (q * i))))
        return total

    extent = n_max + 1
    blocks = {}
    for n in range(extent + 1):
        blocks[n] = [(p, n - p) for p in range(0, min(n, extent) + 1)]
    dims = []
    diffs = {}
    for n in range(1, extent + 1):
        rows = len(blocks[n - 1])
        cols = len(blocks[n])
        mat = [[Fraction(0)] * cols for _ in range(rows)]
        for ci, (p, q) in enumerate(blocks[n]):
            if q >= 1:
                vert = b(q) if p % 2 == 0 else mat_scale(bp(q), Fraction(-1))
                ri = blocks[n - 1].index((p, q - 1))
                mat[ri][ci] = vert[0][0]
            if p >= 1:
                horiz = one_minus_t(q) if p % 2 == 1 else norm(q)
                ri = blocks[n - 1].index((p - 1, q))
                mat[ri][ci] = horiz[0][0]
        diffs[n] = mat
    out = []
    for n in range(n_max + 1):
        d_n = diffs.get(n)
        d_up = diffs.get(n + 1)
        out.append(homology_dim(d_n, d_up, len(blocks[n])))
    return out


def test_hc_field_oracle():
    oracle = brute_force_hc_field(4)
    assert oracle == [1, 0, 1, 0, 1]
    em = EMRealization(field_algebra(QQ))
    d = em.cyclic_object(6)
    complex_ = cyclic_bicomplex(d, 4)
    table = homology_dims(complex_, 4, theory="HC")
    assert list(table.dims) == oracle


def test_hc0_equals_hh0():
    for a in (
        cyclic_group_algebra(QQ, 2).algebra,
        truncated_poly(QQ, 2),
        field_algebra(QQ),
    ):
        em = EMRealization(a)
        d = em.cyclic_object(3)
        hc = hc_table(d, 1)
        hh = homology_dims(hochschild_complex(d), 1)
        assert hc.dims[0] == hh.dims[0]


def test_cyclicity_error_for_twisted():
    a = cyclic_group_algebra(QQ, 2).algebra
    em = EMRealization(a)
    d = em.twisted_cyclic_object(qc2_sign_twist(), 3)
    with pytest.raises(CyclicityError):
        cyclic_bicomplex(d, 2)


def test_hc_table_twisted_takes_subobject():
    a = cyclic_group_algebra(QQ, 2).algebra
    em = EMRealization(a)
    d = em.twisted_cyclic_object(qc2_sign_twist(), 4)
    table = hc_table(d, 3)
    assert table.invariant_subobject_taken
    untw = hc_table(em.cyclic_object(4), 3)
    assert not untw.invariant_subobject_taken
    assert untw.dims == (2, 0, 2, 0)


def test_characteristic_bound():
    f3 = prime_field(3)
    em = EMRealization(field_algebra(f3))
    d = em.cyclic_object(5)
    with pytest.raises(DomainError):
        cyclic_bicomplex(d, 3)
    # characteristic large enough is fine
    f11 = prime_field(11)
    em11 = EMRealization(field_algebra(f11))
    d11 = em11.cyclic_object(5)
    table = homology_dims(cyclic_bicomplex(d11, 3), 3, theory="HC")
    assert list(table.dims) == [1, 0, 1, 0]


def test_bicomplex_needs_extra_degree():
    em = EMRealization(field_algebra(QQ))
    d = em.cyclic_object(3)
    with pytest.raises(RangeError):
        cyclic_bicomplex(d, 3)


def test_differential_squares_to_zero_checked():
    from dlf.homology import ChainComplex
    from dlf.linalg import LinMap, Space

    s = Space("V", 1)
    ident = LinMap.identity(s, QQ)
    with pytest.raises(InternalError):
        ChainComplex([s, s, s], [None, ident, ident], QQ)
