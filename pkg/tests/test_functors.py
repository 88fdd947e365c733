from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dlf import (
    QQ,
    LinMap,
    Space,
    TensorFunctor,
    TensorNat,
    ValidationError,
    comonad_from_coalgebra,
    compose_functors,
    cyclic_group_algebra,
    field_algebra,
    identity_functor,
    matrix_algebra,
    monad_from_algebra,
    whisker,
)
from dlf.linalg import compose, flip_map, tensor


def test_comonad_from_grouplike():
    h = cyclic_group_algebra(QQ, 2)
    comonad = comonad_from_coalgebra(h.coalgebra)
    assert comonad.carrier.dim == 2
    # comultiplication matrix is the group-like table: 4 x 2
    assert comonad.coalgebra.comul.rows == [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]


def test_comonad_rejects_broken_coalgebra():
    h = cyclic_group_algebra(QQ, 2)
    c = h.coalgebra
    from dlf.structures import Coalgebra

    broken = Coalgebra(
        "bad", c.carrier, c.comul,
        LinMap.from_rows(c.carrier, Space("k", 1, ("1",)), QQ, [[1, 0]]),
        QQ,
    )
    with pytest.raises(ValidationError):
        comonad_from_coalgebra(broken)


def test_identity_comonad_dim_one():
    k = field_algebra(QQ)
    from dlf.structures import Coalgebra
    from dlf.linalg import tensor_space

    c = Coalgebra(
        "k", k.carrier,
        LinMap.from_rows(k.carrier, tensor_space(k.carrier, k.carrier), QQ, [[1]]),
        LinMap.from_rows(k.carrier, Space("k", 1, ("1",)), QQ, [[1]]),
        QQ,
    )
    comonad = comonad_from_coalgebra(c)
    assert comonad.carrier.dim == 1


def test_monad_from_matrix_algebra():
    monad = monad_from_algebra(matrix_algebra(QQ, 2))
    assert monad.carrier.dim == 4


def test_compose_functors_dims_and_words():
    f = TensorFunctor(Space("P", 2), QQ)
    g = TensorFunctor(Space("Q", 3), QQ)
    fg = compose_functors(f, g)
    assert fg.dim == 6
    assert fg.word == (f.carrier, g.carrier)
    one = identity_functor(QQ)
    assert compose_functors(one, f).dim == 2
    assert compose_functors(f, one).dim == 2
    h = TensorFunctor(Space("R", 2), QQ)
    left = compose_functors(compose_functors(f, g), h)
    right = compose_functors(f, compose_functors(g, h))
    assert left.word == right.word
    assert left.carrier.dim == right.carrier.dim


def test_whisker_identity():
    f = TensorFunctor(Space("P", 2), QQ)
    g = TensorFunctor(Space("Q", 3), QQ)
    n = f.identity_nat()
    w = whisker(n, g, g)
    assert w.map == LinMap.identity(Space("X", 3 * 2 * 3), QQ)


def test_whisker_unit_functors():
    u, v = Space("U", 2), Space("V", 2)
    fl = flip_map(u, v, QQ)
    from dlf.linalg import tensor_space

    src = TensorFunctor(tensor_space(u, v), QQ)
    tgt = TensorFunctor(tensor_space(v, u), QQ)
    n = TensorNat(src, tgt, fl)
    one = identity_functor(QQ)
    assert whisker(n, one, one).map == fl


def test_whisker_kron_shape():
    t = Space("T", 2)
    chi_src = Space("S", 4)
    n = TensorNat(TensorFunctor(chi_src, QQ), TensorFunctor(chi_src, QQ),
                  LinMap.identity(chi_src, QQ))
    w = whisker(n, TensorFunctor(t, QQ), identity_functor(QQ))
    assert w.map.domain.dim == 8
    assert w.map == LinMap.identity(Space("X", 8), QQ)


@st.composite
def small_map(draw, dom, cod):
    rows = draw(
        st.lists(
            st.lists(st.integers(-2, 2), min_size=dom, max_size=dom),
            min_size=cod, max_size=cod,
        )
    )
    return LinMap.from_rows(Space("V", dom), Space("W", cod), QQ, rows)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_whisker_interchange(data):
    # (alpha G') . (F alpha') = (F' alpha') . (alpha G) for alpha: F -> F',
    # alpha': G -> G'
    f = TensorFunctor(Space("F", 2), QQ)
    f2 = TensorFunctor(Space("F2", 2), QQ)
    g = TensorFunctor(Space("G", 2), QQ)
    g2 = TensorFunctor(Space("G2", 2), QQ)
    one = identity_functor(QQ)
    alpha = TensorNat(f, f2, data.draw(small_map(2, 2)))
    alpha2 = TensorNat(g, g2, data.draw(small_map(2, 2)))
    lhs = compose(whisker(alpha, one, g2).map, whisker(alpha2, f, one).map)
    rhs = compose(whisker(alpha2, f2, one).map, whisker(alpha, one, g).map)
    assert lhs == rhs
    assert lhs == tensor(alpha.map, alpha2.map)
