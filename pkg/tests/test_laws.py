from fractions import Fraction

import pytest

from dlf import (
    QQ,
    CentralityError,
    DistLaw,
    DomainError,
    FactorisationMorphism,
    LinMap,
    SingularError,
    TensorFunctor,
    ValidationError,
    check_bd_law,
    check_braided,
    check_comonoid,
    check_distlaw,
    check_factorisation_morphism,
    check_two_cycle,
    check_yang_baxter,
    comonad_from_coalgebra,
    cyclic_group_algebra,
    field_algebra,
    hopf2_laws,
    hopf_laws,
    make_factorisation,
    monad_morphism_factorisation,
    qd_chi,
    qd_factorisation,
    tensor_factorisations,
    tensor_morphisms,
    trivial_factorisation,
    two_cycle_inverse,
)
from dlf.examples import (
    grouplike_flip_chi,
    qc2_double_module,
    qc2_r_matrix,
    qc2_sign_twist,
    sweedler_hopf,
    trivial_r_matrix,
)
from dlf.functors import TensorNat, identity_functor
from dlf.linalg import compose, flip_map, tensor, tensor_space
from dlf.structures import DoubleModule, regular_right_module, trivial_right_module


QC2 = cyclic_group_algebra(QQ, 2)
QC3 = cyclic_group_algebra(QQ, 3)
H4 = sweedler_hopf()


def identity_law_on_unit_comonad():
    k = field_algebra(QQ)
    from dlf.structures import Coalgebra
    from dlf.linalg import Space, tensor_space

    c = Coalgebra(
        "k", k.carrier,
        LinMap.from_rows(k.carrier, tensor_space(k.carrier, k.carrier), QQ, [[1]]),
        LinMap.from_rows(k.carrier, Space("pt", 1, ("1",)), QQ, [[1]]),
        QQ,
    )
    comonad = comonad_from_coalgebra(c)
    return DistLaw("comonad-comonad", comonad, comonad, LinMap.identity(tensor_space(k.carrier, k.carrier), QQ))


def test_identity_law_passes():
    law = identity_law_on_unit_comonad()
    assert check_distlaw(law).ok


def test_flip_law_on_grouplike():
    chi = grouplike_flip_chi(QC2)
    rep = check_distlaw(chi)
    assert rep.ok
    assert {c.name for c in rep.checks} == {
        "left-comul-square", "left-counit-triangle",
        "right-comul-square", "right-counit-triangle",
    }


def test_mutated_flip_fails_with_witness():
    comonad = comonad_from_coalgebra(QC2.coalgebra)
    fl = flip_map(QC2.carrier, QC2.carrier, QQ)
    rows = [list(r) for r in fl.rows]
    rows[0][3] = Fraction(1)  # extra entry
    bad = LinMap.from_rows(fl.domain, fl.codomain, QQ, rows)
    law = DistLaw("comonad-comonad", comonad, comonad, bad, validate=False)
    rep = check_distlaw(law)
    assert not rep.ok
    failing = rep.failures()[0]
    assert "comul-square" in failing.name
    assert failing.witness is not None


def test_rebracketing_flip_is_mixed_law():
    # canonical left form of the rebracketing law between the tensoring
    # monad and comonad of an algebra/coalgebra pair: the swap
    from dlf.functors import monad_from_algebra

    monad = monad_from_algebra(QC2.algebra)
    comonad = comonad_from_coalgebra(QC2.coalgebra)
    law = DistLaw(
        "monad-comonad", monad, comonad, flip_map(QC2.carrier, QC2.carrier, QQ)
    )
    assert check_distlaw(law).ok


def test_yang_baxter_trivial():
    law = identity_law_on_unit_comonad()
    one = trivial_factorisation(law)
    assert check_yang_baxter(one.sigma, law, one.gamma)


def test_hopf_triple_yang_baxter():
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    assert check_yang_baxter(sigma, theta, gamma)


def test_hopf_theta_values_grouplike():
    # theta sends (v (x) u) to (S(v) u (x) v) on group-likes
    theta, *_ = hopf_laws(QC2, regular_right_module(QC2))
    # v = g (index 1), u = g: S(g) g = e, so image should be e (x) g = index 0*2+1
    col = theta.map.cols[1 * 2 + 1]
    assert col == {0 * 2 + 1: Fraction(1)}
    # v = e, u = g: S(e) g (x) e = g (x) e
    col = theta.map.cols[0 * 2 + 1]
    assert col == {1 * 2 + 0: Fraction(1)}


def test_hopf_laws_trivial_hopf():
    k = field_algebra(QQ)
    from dlf.structures import Coalgebra, HopfAlgebra
    from dlf.linalg import Space

    c = Coalgebra(
        "k", k.carrier,
        LinMap.from_rows(k.carrier, tensor_space(k.carrier, k.carrier), QQ, [[1]]),
        LinMap.from_rows(k.carrier, Space("pt", 1, ("1",)), QQ, [[1]]),
        QQ,
    )
    h = HopfAlgebra("k", k, c, k.identity())
    theta, sigma, gamma, fact = hopf_laws(h, regular_right_module(h))
    assert theta.map == LinMap.identity(tensor_space(k.carrier, k.carrier), QQ)
    assert sigma.map == theta.map
    assert gamma.map == theta.map


def test_yang_baxter_broken_gamma():
    # a valid law that still breaks the hexagon: the trivial grading
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    gtriv = _trivial_grading_gamma(QC2, fact.Sigma)
    gamma_triv = DistLaw("endofunctor-comonad", fact.Sigma, theta.right, gtriv)
    assert check_distlaw(gamma_triv).ok
    assert not check_yang_baxter(sigma, theta, gamma_triv)
    with pytest.raises(ValidationError) as err:
        make_factorisation(theta, fact.Sigma, sigma, gamma_triv)
    assert err.value.axiom == "yang-baxter"


def _trivial_grading_gamma(h, sigma_functor):
    field = h.field
    pc = sigma_functor.carrier
    uc = h.carrier
    one = h.algebra.one()
    eps = h.coalgebra.counit
    cols = []
    for m in range(pc.dim):
        for c in range(uc.dim):
            coeff = eps.cols[c].get(0, field.zero)
            col = {}
            if coeff:
                for r, v in one.items():
                    col[r * pc.dim + m] = field.mul(v, coeff)
            cols.append(col)
    return LinMap(tensor_space(pc, uc), tensor_space(uc, pc), field, cols)


def test_hopf_laws_sweedler():
    # noncommutative, noncocommutative: pins the canonicalization
    theta, sigma, gamma, fact = hopf_laws(H4, regular_right_module(H4))
    assert check_yang_baxter(sigma, theta, gamma)


def test_hopf2_commutative_ok_noncommutative_fails():
    theta, tau, fact = hopf2_laws(QC2)
    assert check_braided(tau, theta)
    with pytest.raises(CentralityError) as err:
        hopf2_laws(H4)
    assert err.value.witness is not None


def test_hopf2_trivial():
    k = field_algebra(QQ)
    from dlf.structures import Coalgebra, HopfAlgebra
    from dlf.linalg import Space

    c = Coalgebra(
        "k", k.carrier,
        LinMap.from_rows(k.carrier, tensor_space(k.carrier, k.carrier), QQ, [[1]]),
        LinMap.from_rows(k.carrier, Space("pt", 1, ("1",)), QQ, [[1]]),
        QQ,
    )
    h = HopfAlgebra("k", k, c, k.identity())
    theta, tau, fact = hopf2_laws(h)
    assert fact.Sigma.dim == 1


def test_monoidal_unit_laws():
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    one = trivial_factorisation(theta)
    assert tensor_factorisations(one, fact) == fact
    assert tensor_factorisations(fact, one) == fact


def test_monoidal_associativity():
    theta, _, _, f1 = hopf_laws(QC2, regular_right_module(QC2))
    _, _, _, f2 = hopf_laws(QC2, trivial_right_module(QC2))
    f3 = trivial_factorisation(theta)
    lhs = tensor_factorisations(tensor_factorisations(f1, f2), f3)
    rhs = tensor_factorisations(f1, tensor_factorisations(f2, f3))
    assert lhs == rhs
    lhs2 = tensor_factorisations(tensor_factorisations(f1, f2), f1)
    rhs2 = tensor_factorisations(f1, tensor_factorisations(f2, f1))
    assert lhs2 == rhs2


def test_composite_sigma_two_routes():
    # formula route vs direct whisker-and-multiply on the double product
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    prod = tensor_factorisations(fact, fact)
    ids = LinMap.identity(fact.Sigma.carrier, QQ)
    direct_sigma = compose(tensor(ids, sigma.map), tensor(sigma.map, ids))
    assert prod.sigma.map == direct_sigma
    direct_gamma = compose(tensor(gamma.map, ids), tensor(ids, gamma.map))
    assert prod.gamma.map == direct_gamma


def test_mismatched_chi_tensor():
    from dlf.functors import monad_from_algebra

    theta, _, _, f1 = hopf_laws(QC2, regular_right_module(QC2))
    flip_law = DistLaw(
        "monad-comonad",
        monad_from_algebra(QC2.algebra),
        comonad_from_coalgebra(QC2.coalgebra),
        flip_map(QC2.carrier, QC2.carrier, QQ),
    )
    assert flip_law != theta
    f2 = trivial_factorisation(flip_law)
    with pytest.raises(DomainError):
        tensor_factorisations(f1, f2)


def test_factorisation_morphisms():
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    ident = FactorisationMorphism.identity(fact)
    assert check_factorisation_morphism(ident).ok
    # right multiplication by (e + g) is a right-module map, hence a
    # morphism of the factorisation to itself
    from dlf.structures import right_multiplication

    rmul = right_multiplication(QC2.algebra, {0: Fraction(1), 1: Fraction(1)})
    mor = FactorisationMorphism(fact, fact, TensorNat(fact.Sigma, fact.Sigma, rmul))
    assert check_factorisation_morphism(mor).ok
    # a non-module map fails
    bad = LinMap.from_rows(fact.Sigma.carrier, fact.Sigma.carrier, QQ, [[1, 1], [0, 0]])
    mor_bad = FactorisationMorphism(fact, fact, TensorNat(fact.Sigma, fact.Sigma, bad))
    assert not check_factorisation_morphism(mor_bad).ok


def test_tensor_morphisms_identity():
    theta, sigma, gamma, fact = hopf_laws(QC2, regular_right_module(QC2))
    ident = FactorisationMorphism.identity(fact)
    prod = tensor_morphisms(ident, ident)
    assert prod.alpha.map == LinMap.identity(tensor_space(fact.Sigma.carrier, fact.Sigma.carrier), QQ)


def test_comonoid_trivial():
    law = identity_law_on_unit_comonad()
    one = trivial_factorisation(law)
    delta = FactorisationMorphism(
        one, tensor_factorisations(one, one),
        TensorNat(one.Sigma, one.Sigma, LinMap.identity(one.Sigma.carrier, QQ)),
    )
    eps = FactorisationMorphism(
        one, one, TensorNat(one.Sigma, one.Sigma, LinMap.identity(one.Sigma.carrier, QQ))
    )
    rep = check_comonoid(one, delta, eps)
    assert rep.ok


def _braided_comonoid_fixture(broken_counit=False):
    chi = grouplike_flip_chi(QC2)
    u_functor = TensorFunctor(QC2.carrier, QQ)
    tau = DistLaw("comonad-endofunctor", chi.left, u_functor,
                  flip_map(QC2.carrier, QC2.carrier, QQ))
    gamma = DistLaw("endofunctor-comonad", u_functor, chi.right,
                    flip_map(QC2.carrier, QC2.carrier, QQ))
    fact = make_factorisation(chi, u_functor, tau, gamma)
    square = tensor_factorisations(fact, fact)
    delta = FactorisationMorphism(
        fact, square, TensorNat(fact.Sigma, square.Sigma, QC2.coalgebra.comul)
    )
    counit = QC2.coalgebra.counit
    if broken_counit:
        counit = LinMap.from_rows(counit.domain, counit.codomain, QQ, [[1, 0]])
    one = trivial_factorisation(chi)
    eps = FactorisationMorphism(fact, one, TensorNat(fact.Sigma, one.Sigma, counit))
    return fact, delta, eps


def test_comonoid_braided_fixture():
    fact, delta, eps = _braided_comonoid_fixture()
    rep = check_comonoid(fact, delta, eps)
    assert rep.ok


def test_comonoid_broken_counit_both_verdicts_fail():
    fact, delta, eps = _braided_comonoid_fixture(broken_counit=True)
    rep = check_comonoid(fact, delta, eps)
    assert not rep.ok
    coincide = [c for c in rep.checks if c.name == "verdicts-coincide"]
    assert coincide[0].passed


def test_braided_flip_and_bd():
    law = identity_law_on_unit_comonad()
    assert check_bd_law(law)
    chi = grouplike_flip_chi(QC2)
    assert check_bd_law(chi)
    theta2, tau, _ = hopf2_laws(QC2)
    assert check_braided(tau, theta2)


def test_braided_iff_factorises():
    chi = grouplike_flip_chi(QC2)
    u_functor = TensorFunctor(QC2.carrier, QQ)
    tau = DistLaw("comonad-endofunctor", chi.left, u_functor,
                  flip_map(QC2.carrier, QC2.carrier, QQ))
    gamma = DistLaw("endofunctor-comonad", u_functor, chi.right, chi.map)
    assert check_braided(tau, chi)
    fact = make_factorisation(chi, u_functor, tau, gamma)
    assert fact is not None


def test_two_cycle_trivial_and_nontrivial():
    r1 = trivial_r_matrix(QC2, QC2)
    assert check_two_cycle(r1, QC2, QC2).ok
    r = qc2_r_matrix()
    assert check_two_cycle(r, QC2, QC2).ok
    # inverse equals itself for this R
    rinv = two_cycle_inverse(r, QC2, QC2)
    assert rinv == r


def test_two_cycle_violations():
    # R = 1 (x) g: invertible but fails a coproduct axiom
    r = {1: Fraction(1)}
    rep = check_two_cycle(r, QC2, QC2)
    assert not rep.ok
    failing = {c.name for c in rep.failures()}
    assert failing & {"comul-C", "comul-B"}


def test_two_cycle_singular():
    # R = (1 + g) (x) 1 is a zero divisor in QC2 (x) QC2
    r = {0: Fraction(1), 2: Fraction(1)}
    with pytest.raises(SingularError):
        check_two_cycle(r, QC2, QC2)


def test_qd_chi_trivial_is_flip():
    chi = qd_chi(trivial_r_matrix(QC2, QC2), QC2, QC2)
    assert chi.map == flip_map(QC2.carrier, QC2.carrier, QQ)


def test_qd_factorisation_regular_and_trivial_module():
    r = qc2_r_matrix()
    m = qc2_double_module()
    fact = qd_factorisation(r, QC2, QC2, m)
    assert fact.Sigma.dim == 2
    # M = k with trivial actions through the counits: recovers the unit
    # factorisation over the (flip) law of the trivial R
    from dlf.linalg import Space

    kspace = Space("k", 1, ("1",))
    eps_b = QC2.coalgebra.counit
    act = LinMap.from_cols(
        tensor_space(QC2.carrier, kspace), kspace, QQ,
        [dict(eps_b.cols[j]) for j in range(2)],
    )
    mk = DoubleModule("k", QC2.algebra, QC2.algebra, kspace, act, act)
    fact_k = qd_factorisation(trivial_r_matrix(QC2, QC2), QC2, QC2, mk)
    assert fact_k.Sigma.dim == 1
    assert fact_k.chi.map == flip_map(QC2.carrier, QC2.carrier, QQ)
    ident = LinMap.identity(QC2.carrier, QQ)
    assert fact_k.sigma.map == ident
    assert fact_k.gamma.map == ident
    # same with the nontrivial R: sigma, gamma still the identity
    fact_k2 = qd_factorisation(qc2_r_matrix(), QC2, QC2, mk)
    assert fact_k2.sigma.map == ident
    assert fact_k2.gamma.map == ident


def test_monad_morphism_factorisation():
    theta2, tau, _ = hopf2_laws(QC2)
    s = qc2_sign_twist()
    fact = monad_morphism_factorisation(s, theta2)
    assert fact.Sigma.dim == 1
    assert fact.sigma.map == s.map
    # s = id gives the unit factorisation
    from dlf.structures import AlgebraMorphism

    fact_id = monad_morphism_factorisation(AlgebraMorphism.identity(QC2.algebra), theta2)
    assert fact_id == trivial_factorisation(theta2)
    # s . s = id maps to the unit and equals the tensor square
    square = tensor_factorisations(fact, fact)
    assert square == fact_id
    assert square == trivial_factorisation(theta2)


def test_monad_morphism_incompatible():
    # scaling the nilpotent generator of the Sweedler algebra is an
    # algebra endomorphism but fails the law-compatibility square
    from dlf.laws import hopf2_theta_tau
    from dlf.structures import AlgebraMorphism

    theta, _ = hopf2_theta_tau(H4)
    cols = [
        {0: Fraction(1)}, {1: Fraction(1)},
        {2: Fraction(2)}, {3: Fraction(2)},
    ]
    smap = LinMap.from_cols(H4.carrier, H4.carrier, QQ, cols)
    s = AlgebraMorphism("scale-x", H4.algebra, H4.algebra, smap)
    from dlf.structures import check_algebra_morphism

    assert check_algebra_morphism(s).ok
    with pytest.raises(ValidationError) as err:
        monad_morphism_factorisation(s, theta)
    assert err.value.axiom == "theta-compatibility"


def test_welldefined_closure_over_shared_laws():
    # every pairwise product of fixture factorisations over one law
    # passes the hexagon again
    theta, _, _, f_reg = hopf_laws(QC2, regular_right_module(QC2))
    _, _, _, f_triv = hopf_laws(QC2, trivial_right_module(QC2))
    one = trivial_factorisation(theta)
    pool = [f_reg, f_triv, one]
    for f in pool:
        for g in pool:
            prod = tensor_factorisations(f, g)
            assert check_yang_baxter(prod.sigma, theta, prod.gamma)
