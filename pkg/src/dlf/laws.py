"""Distributive laws between tensoring (co)monads, the category of
factorisations of a law with its monoidal product, comonoid and braiding
checks, and the concrete law constructors: swap-based Hopf laws, the
antipode laws of a Hopf algebra, and quantum-double laws from a 2-cycle.

All laws are stored as carrier-level matrices; whiskered forms are derived
on demand.  Constructors validate eagerly, checkers diagnose.
"""

from __future__ import annotations

from .errors import CentralityError, DomainError, InternalError, ValidationError
from .field import Field
from .functors import (
    TensorComonad,
    TensorFunctor,
    TensorMonad,
    TensorNat,
    comonad_from_coalgebra,
    compose_functors,
    identity_functor,
    monad_from_algebra,
    monad_from_right_tensoring,
)
from .linalg import (
    LinMap,
    compose,
    compose_all,
    flip_map,
    invert,
    tensor,
    tensor_space,
)
from .structures import (
    Algebra,
    AlgebraMorphism,
    Coalgebra,
    DoubleModule,
    HopfAlgebra,
    RightModule,
    action_by,
    check_algebra_morphism,
    check_double_module,
    check_hopf,
    check_right_module,
    left_multiplication,
    right_multiplication,
    tensor_algebra,
)
from .report import Report, check_equal

LAW_KINDS = {
    "comonad-endofunctor",
    "endofunctor-comonad",
    "comonad-comonad",
    "monad-endofunctor",
    "monad-comonad",
    "monad-monad",
}


def functor_of(side) -> TensorFunctor:
    if isinstance(side, TensorFunctor):
        return side
    return side.functor


def _side_kind(side) -> str:
    if isinstance(side, TensorComonad):
        return "comonad"
    if isinstance(side, TensorMonad):
        return "monad"
    if isinstance(side, TensorFunctor):
        return "endofunctor"
    raise DomainError(f"not a functor-like side: {side!r}")


class DistLaw:
    """A distributive law: a transformation left.right => right.left whose
    carrier map is ``map``, satisfying the axiom set selected by ``kind``."""

    def __init__(self, kind: str, left, right, map: LinMap, validate: bool = True):
        if kind not in LAW_KINDS:
            raise DomainError(f"unknown law kind {kind!r}")
        lk, rk = kind.split("-")
        if _side_kind(left) != lk or _side_kind(right) != rk:
            raise DomainError(f"law sides do not match kind {kind}")
        lf, rf = functor_of(left), functor_of(right)
        if map.domain.dim != lf.dim * rf.dim or map.codomain.dim != lf.dim * rf.dim:
            raise DomainError("law map has wrong shape")
        self.kind = kind
        self.left = left
        self.right = right
        self.map = map
        self.nat = TensorNat(
            compose_functors(lf, rf), compose_functors(rf, lf), map
        )
        if validate:
            check_distlaw(self).raise_if_failed()

    @property
    def field(self) -> Field:
        return self.map.field

    @property
    def left_functor(self) -> TensorFunctor:
        return functor_of(self.left)

    @property
    def right_functor(self) -> TensorFunctor:
        return functor_of(self.right)

    def component_at(self, x) -> LinMap:
        return self.nat.component_at(x)

    def __repr__(self):
        return f"DistLaw({self.kind}, {self.left_functor.carrier.name}->{self.right_functor.carrier.name})"

    def __eq__(self, other):
        return (
            isinstance(other, DistLaw)
            and self.kind == other.kind
            and self.left == other.left
            and self.right == other.right
            and self.map == other.map
        )


def check_distlaw(d: DistLaw) -> Report:
    """Per-axiom report for the compatibility diagrams selected by the
    law's kind; comonad-comonad laws check all four."""
    report = Report(f"law {d.kind}")
    field = d.field
    p = d.left_functor.carrier
    q = d.right_functor.carrier
    idp = LinMap.identity(p, field)
    idq = LinMap.identity(q, field)
    chi = d.map
    if isinstance(d.left, TensorComonad):
        co = d.left.coalgebra
        check_equal(
            report, "left-comul-square",
            compose(tensor(idq, co.comul), chi),
            compose_all(tensor(chi, idp), tensor(idp, chi), tensor(co.comul, idq)),
        )
        check_equal(
            report, "left-counit-triangle",
            compose(tensor(idq, co.counit), chi),
            tensor(co.counit, idq),
        )
    if isinstance(d.left, TensorMonad):
        al = d.left.algebra
        check_equal(
            report, "left-mul-square",
            compose(chi, tensor(al.mul, idq)),
            compose_all(tensor(idq, al.mul), tensor(chi, idp), tensor(idp, chi)),
        )
        check_equal(
            report, "left-unit-triangle",
            compose(chi, tensor(al.unit, idq)),
            tensor(idq, al.unit),
        )
    if isinstance(d.right, TensorComonad):
        co = d.right.coalgebra
        check_equal(
            report, "right-comul-square",
            compose(tensor(co.comul, idp), chi),
            compose_all(tensor(idq, chi), tensor(chi, idq), tensor(idp, co.comul)),
        )
        check_equal(
            report, "right-counit-triangle",
            compose(tensor(co.counit, idp), chi),
            tensor(idp, co.counit),
        )
    if isinstance(d.right, TensorMonad):
        al = d.right.algebra
        check_equal(
            report, "right-mul-square",
            compose(chi, tensor(idp, al.mul)),
            compose_all(tensor(al.mul, idp), tensor(idq, chi), tensor(chi, idq)),
        )
        check_equal(
            report, "right-unit-triangle",
            compose(chi, tensor(idp, al.unit)),
            tensor(al.unit, idp),
        )
    return report


def _hexagon_legs(sigma_map, chi_map, gamma_map, pt, ps, pc, field):
    idt = LinMap.identity(pt, field)
    ids = LinMap.identity(ps, field)
    idc = LinMap.identity(pc, field)
    leg1 = compose_all(tensor(gamma_map, idt), tensor(ids, chi_map), tensor(sigma_map, idc))
    leg2 = compose_all(tensor(idc, sigma_map), tensor(chi_map, ids), tensor(idt, gamma_map))
    return leg1, leg2


def check_yang_baxter(sigma: DistLaw, chi: DistLaw, gamma: DistLaw) -> bool:
    """The hexagon: gamma.T . Sigma.chi . sigma.C = C.sigma . chi.Sigma . T.gamma."""
    pt = chi.left_functor.carrier
    pc = chi.right_functor.carrier
    ps = sigma.right_functor.carrier
    if sigma.left_functor.carrier.dim != pt.dim:
        raise DomainError("yang-baxter: sigma does not start at chi's left side")
    if gamma.right_functor.carrier.dim != pc.dim:
        raise DomainError("yang-baxter: gamma does not end at chi's right side")
    if gamma.left_functor.carrier.dim != ps.dim:
        raise DomainError("yang-baxter: sigma and gamma disagree on the middle functor")
    leg1, leg2 = _hexagon_legs(sigma.map, chi.map, gamma.map, pt, ps, pc, chi.field)
    return leg1 == leg2


class Factorisation:
    """A factorisation (Sigma, sigma, gamma) of a law chi, satisfying the
    Yang-Baxter hexagon.  Use make_factorisation to build validated ones."""

    def __init__(self, chi: DistLaw, Sigma: TensorFunctor, sigma: DistLaw, gamma: DistLaw):
        self.chi = chi
        self.Sigma = Sigma
        self.sigma = sigma
        self.gamma = gamma

    def __repr__(self):
        return f"Factorisation(Sigma dim {self.Sigma.dim} over {self.chi!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Factorisation)
            and self.chi == other.chi
            and self.Sigma.dim == other.Sigma.dim
            and self.sigma.map == other.sigma.map
            and self.gamma.map == other.gamma.map
        )

    @property
    def field(self) -> Field:
        return self.chi.field

    # components at an object, for acting on admissible data

    def sigma_component_at(self, x) -> LinMap:
        return self.sigma.component_at(x)

    def gamma_component_at(self, x) -> LinMap:
        return self.gamma.component_at(x)


def make_factorisation(chi: DistLaw, Sigma: TensorFunctor, sigma: DistLaw, gamma: DistLaw) -> Factorisation:
    if chi.kind not in ("comonad-comonad", "monad-comonad"):
        raise DomainError(f"factorisations require a comonad or mixed law, got {chi.kind}")
    if sigma.left != chi.left:
        raise DomainError("sigma must start at chi's left (co)monad")
    if gamma.right != chi.right:
        raise DomainError("gamma must end at chi's right comonad")
    if functor_of(sigma.right) != Sigma or functor_of(gamma.left) != Sigma:
        raise DomainError("sigma and gamma must pass through the middle functor")
    check_distlaw(sigma).raise_if_failed()
    check_distlaw(gamma).raise_if_failed()
    if not check_yang_baxter(sigma, chi, gamma):
        raise ValidationError("yang-baxter hexagon fails", axiom="yang-baxter")
    return Factorisation(chi, Sigma, sigma, gamma)


def trivial_factorisation(chi: DistLaw) -> Factorisation:
    """The unit object: identity middle functor, identity laws."""
    field = chi.field
    one = identity_functor(field)
    pt = chi.left_functor.carrier
    pc = chi.right_functor.carrier
    sigma_kind = f"{_side_kind(chi.left)}-endofunctor"
    sigma = DistLaw(sigma_kind, chi.left, one, LinMap.identity(tensor_space(pt, one.carrier), field))
    gamma = DistLaw(
        "endofunctor-comonad", one, chi.right,
        LinMap.identity(tensor_space(one.carrier, pc), field),
    )
    return Factorisation(chi, one, sigma, gamma)


def tensor_factorisations(f: Factorisation, g: Factorisation) -> Factorisation:
    """Monoidal product: (Sigma Sigma', Sigma sigma' . sigma Sigma',
    gamma Sigma' . Sigma gamma')."""
    if f.chi != g.chi:
        raise DomainError("tensor_factorisations: different base laws")
    field = f.field
    sig = compose_functors(f.Sigma, g.Sigma)
    ids1 = LinMap.identity(f.Sigma.carrier, field)
    ids2 = LinMap.identity(g.Sigma.carrier, field)
    sigma_map = compose(tensor(ids1, g.sigma.map), tensor(f.sigma.map, ids2))
    gamma_map = compose(tensor(f.gamma.map, ids2), tensor(ids1, g.gamma.map))
    sigma_kind = f"{_side_kind(f.chi.left)}-endofunctor"
    try:
        sigma = DistLaw(sigma_kind, f.chi.left, sig, sigma_map)
        gamma = DistLaw("endofunctor-comonad", sig, f.chi.right, gamma_map)
        return make_factorisation(f.chi, sig, sigma, gamma)
    except ValidationError as exc:
        raise InternalError(
            f"tensor of validated factorisations failed revalidation: {exc}"
        ) from exc


class FactorisationMorphism:
    """A transformation of middle functors compatible with both laws."""

    def __init__(self, source: Factorisation, target: Factorisation, alpha: TensorNat):
        if alpha.map.domain.dim != source.Sigma.dim or alpha.map.codomain.dim != target.Sigma.dim:
            raise DomainError("morphism carrier map has wrong shape")
        self.source = source
        self.target = target
        self.alpha = alpha

    @classmethod
    def identity(cls, f: Factorisation) -> "FactorisationMorphism":
        return cls(f, f, f.Sigma.identity_nat())


def check_factorisation_morphism(m: FactorisationMorphism) -> Report:
    if m.source.chi != m.target.chi:
        raise DomainError("morphism between factorisations of different laws")
    report = Report("factorisation morphism")
    field = m.source.field
    pt = m.source.chi.left_functor.carrier
    pc = m.source.chi.right_functor.carrier
    a = m.alpha.map
    check_equal(
        report, "compatible-with-T",
        compose(m.target.sigma.map, tensor(LinMap.identity(pt, field), a)),
        compose(tensor(a, LinMap.identity(pt, field)), m.source.sigma.map),
    )
    check_equal(
        report, "compatible-with-C",
        compose(m.target.gamma.map, tensor(a, LinMap.identity(pc, field))),
        compose(tensor(LinMap.identity(pc, field), a), m.source.gamma.map),
    )
    return report


def tensor_morphisms(a: FactorisationMorphism, b: FactorisationMorphism) -> FactorisationMorphism:
    """Horizontal composite of morphisms, revalidated."""
    source = tensor_factorisations(a.source, b.source)
    target = tensor_factorisations(a.target, b.target)
    alpha = TensorNat(source.Sigma, target.Sigma, tensor(a.alpha.map, b.alpha.map))
    result = FactorisationMorphism(source, target, alpha)
    report = check_factorisation_morphism(result)
    if not report.ok:
        raise InternalError("tensor of valid morphisms failed revalidation")
    return result


def check_comonoid(
    f: Factorisation, delta: FactorisationMorphism, eps: FactorisationMorphism
) -> Report:
    """Comonoid structure on a factorisation, checked two ways: directly
    (coassociative, counital morphisms into the square and the unit) and
    via the equivalent condition that the middle carrier is a coalgebra
    whose laws are comonad-comonad laws.  The report asserts the verdicts
    coincide."""
    field = f.field
    square = tensor_factorisations(f, f)
    if delta.source is not f and delta.source != f:
        raise DomainError("delta must start at the factorisation")
    if delta.alpha.map.codomain.dim != square.Sigma.dim:
        raise DomainError("delta must land in the square")
    if eps.alpha.map.codomain.dim != 1:
        raise DomainError("eps must land in the unit")
    report = Report(f"comonoid on Sigma dim {f.Sigma.dim}")
    dmap, emap = delta.alpha.map, eps.alpha.map
    ids = LinMap.identity(f.Sigma.carrier, field)

    delta_rep = check_factorisation_morphism(
        FactorisationMorphism(f, square, delta.alpha)
    )
    trivial = trivial_factorisation(f.chi)
    eps_rep = check_factorisation_morphism(
        FactorisationMorphism(f, trivial, TensorNat(f.Sigma, trivial.Sigma, emap))
    )
    for sub, tag in ((delta_rep, "delta"), (eps_rep, "eps")):
        for chk in sub.checks:
            report.add(f"{tag}-{chk.name}", chk.passed, chk.witness)
    check_equal(
        report, "coassociativity",
        compose(tensor(dmap, ids), dmap),
        compose(tensor(ids, dmap), dmap),
    )
    check_equal(report, "counit-left", compose(tensor(emap, ids), dmap), ids)
    check_equal(report, "counit-right", compose(tensor(ids, emap), dmap), ids)
    verdict_direct = report.ok

    candidate = Coalgebra("Sigma", f.Sigma.carrier, dmap, emap, field)
    from .structures import check_coalgebra

    co_rep = check_coalgebra(candidate)
    for chk in co_rep.checks:
        report.add(f"carrier-{chk.name}", chk.passed, chk.witness)
    sigma_comonad = TensorComonad(f.Sigma, candidate)
    lift_ok = True
    if f.chi.kind == "comonad-comonad":
        sigma_law = DistLaw("comonad-comonad", f.chi.left, sigma_comonad, f.sigma.map, validate=False)
    else:
        sigma_law = DistLaw("monad-comonad", f.chi.left, sigma_comonad, f.sigma.map, validate=False)
    gamma_law = DistLaw("comonad-comonad", sigma_comonad, f.chi.right, f.gamma.map, validate=False)
    for law, tag in ((sigma_law, "sigma"), (gamma_law, "gamma")):
        law_rep = check_distlaw(law)
        lift_ok = lift_ok and law_rep.ok
        for chk in law_rep.checks:
            report.add(f"{tag}-law-{chk.name}", chk.passed, chk.witness)
    verdict_lifted = co_rep.ok and lift_ok
    report.add("verdicts-coincide", verdict_direct == verdict_lifted)
    return report


def check_braided(tau: DistLaw, chi: DistLaw) -> bool:
    """tau: T.T => T.T is braided with respect to chi iff the hexagon with
    tau in the middle slot commutes, i.e. (T, tau, chi) factorises chi."""
    pt = chi.left_functor.carrier
    pc = chi.right_functor.carrier
    if tau.left_functor.carrier.dim != pt.dim or tau.right_functor.carrier.dim != pt.dim:
        raise DomainError("check_braided: tau must live on chi's left carrier")
    leg1, leg2 = _hexagon_legs(tau.map, chi.map, chi.map, pt, pt, pc, chi.field)
    return leg1 == leg2


def check_bd_law(tau: DistLaw) -> bool:
    """A BD-law is braided with respect to itself (the braid equation)."""
    if tau.left_functor.carrier.dim != tau.right_functor.carrier.dim:
        raise DomainError("check_bd_law: tau must be an endo-law")
    return check_braided(tau, tau)


# Hopf-algebra laws


def hopf_laws(u: HopfAlgebra, p: RightModule):
    """Laws of the first Hopf example: the monad tensoring by U (in
    canonical left form, so with opposite multiplication), the comonad of
    the coalgebra of U, the antipode law between them, and the
    factorisation through any right U-module P:

        theta(v (x) u) = S(v_(2)) u (x) v_(1)
        sigma(u (x) p) = p u_(1) (x) u_(2)
        gamma = swap of P and U

    Returns (theta, sigma, gamma, factorisation)."""
    check_hopf(u).raise_if_failed()
    if p.algebra != u.algebra:
        raise DomainError("P must be a module over the same Hopf algebra")
    check_right_module(p).raise_if_failed()
    field = u.field
    uc = u.carrier
    idu = LinMap.identity(uc, field)
    t_monad = monad_from_right_tensoring(u.algebra)
    c_comonad = comonad_from_coalgebra(u.coalgebra)
    usq = tensor_space(uc, uc)

    antimul = compose(u.algebra.mul, tensor(u.antipode, idu))
    theta_map = compose_all(
        tensor(antimul, idu),
        flip_map(uc, usq, field),
        tensor(u.coalgebra.comul, idu),
    )
    theta = DistLaw("monad-comonad", t_monad, c_comonad, theta_map)

    sigma_functor = TensorFunctor(p.carrier, field)
    sigma_map = compose_all(
        tensor(p.action, idu),
        flip_map(usq, p.carrier, field),
        tensor(u.coalgebra.comul, LinMap.identity(p.carrier, field)),
    )
    sigma = DistLaw("monad-endofunctor", t_monad, sigma_functor, sigma_map)
    gamma = DistLaw(
        "endofunctor-comonad", sigma_functor, c_comonad,
        flip_map(p.carrier, uc, field),
    )
    fact = make_factorisation(theta, sigma_functor, sigma, gamma)
    return theta, sigma, gamma, fact


def hopf2_theta_tau(u: HopfAlgebra):
    """The law and swap of the second Hopf example, where tensoring by U
    is both the monad and the comonad:

        theta(u (x) v) = v S(u_(2)) (x) u_(1)
        tau = swap

    These exist for every Hopf algebra."""
    check_hopf(u).raise_if_failed()
    field = u.field
    uc = u.carrier
    idu = LinMap.identity(uc, field)
    t_monad = monad_from_algebra(u.algebra)
    c_comonad = comonad_from_coalgebra(u.coalgebra)
    usq = tensor_space(uc, uc)

    mul_rev = compose(u.algebra.mul, flip_map(uc, uc, field))
    sweedler_split = compose(tensor(idu, u.antipode), u.coalgebra.comul)
    theta_map = compose_all(
        tensor(mul_rev, idu),
        flip_map(uc, usq, field),
        tensor(sweedler_split, idu),
    )
    theta = DistLaw("monad-comonad", t_monad, c_comonad, theta_map)
    b_functor = TensorFunctor(uc, field)
    tau = DistLaw("monad-endofunctor", t_monad, b_functor, flip_map(uc, uc, field))
    return theta, tau


def hopf2_laws(u: HopfAlgebra):
    """Returns (theta, tau, factorisation); the factorisation
    (B, tau, theta) exists only when the antipode image is central, else
    centrality-error."""
    theta, tau = hopf2_theta_tau(u)
    field = u.field
    uc = u.carrier
    for i in range(uc.dim):
        s_img = dict(u.antipode.cols[i])
        for j in range(uc.dim):
            basis = {j: field.one}
            if u.algebra.multiply(s_img, basis) != u.algebra.multiply(basis, s_img):
                raise CentralityError(
                    f"antipode image of {uc.labels[i]} is not central "
                    f"(fails against {uc.labels[j]})",
                    axiom="antipode-centrality",
                    witness=(uc.labels[i], uc.labels[j]),
                )
    b_functor = tau.right
    gamma = DistLaw("endofunctor-comonad", b_functor, theta.right, theta.map)
    fact = make_factorisation(theta, b_functor, tau, gamma)
    return theta, tau, fact


# quantum doubles


def _embed(vec: dict, map_: LinMap) -> dict:
    return map_.apply(vec)


def check_two_cycle(r: dict, b: HopfAlgebra, c: HopfAlgebra) -> Report:
    """The four axioms of an invertible 2-cycle R in C (x) B."""
    if b.field != c.field:
        raise DomainError("field mismatch")
    field = b.field
    cb = tensor_algebra(c.algebra, b.algebra)
    rinv = two_cycle_inverse(r, b, c)
    report = Report("2-cycle")

    idb = b.algebra.identity()
    idc = c.algebra.identity()

    ccb = tensor_algebra(c.algebra, tensor_algebra(c.algebra, b.algebra))
    lhs1 = tensor(c.coalgebra.comul, idb).apply(r)
    r13 = tensor(tensor(idc, c.algebra.unit), idb).apply(r)
    r23 = tensor(c.algebra.unit, LinMap.identity(cb.carrier, field)).apply(r)
    report.add("comul-C", lhs1 == ccb.multiply(r13, r23))

    cbb = tensor_algebra(c.algebra, tensor_algebra(b.algebra, b.algebra))
    lhs2 = tensor(idc, b.coalgebra.comul).apply(r)
    r12 = tensor(LinMap.identity(cb.carrier, field), b.algebra.unit).apply(r)
    r13b = tensor(tensor(idc, b.algebra.unit), idb).apply(r)
    report.add("comul-B", lhs2 == cbb.multiply(r12, r13b))

    report.add("antipode-B", tensor(idc, b.antipode).apply(r) == rinv)
    report.add("antipode-C", tensor(c.antipode, idb).apply(r) == rinv)
    return report


def two_cycle_inverse(r: dict, b: HopfAlgebra, c: HopfAlgebra) -> dict:
    """Multiplicative inverse of R in the tensor product algebra; raises
    singular-error when R is not invertible."""
    cb = tensor_algebra(c.algebra, b.algebra)
    lmul = left_multiplication(cb, r)
    return invert(lmul).apply(cb.one())


def qd_chi(r: dict, b: HopfAlgebra, c: HopfAlgebra) -> DistLaw:
    """The comonad law chi(b (x) c) = R (c (x) b) R^{-1} induced by a
    2-cycle, between the tensoring comonads of B and C."""
    report = check_two_cycle(r, b, c)
    report.raise_if_failed()
    field = b.field
    cb = tensor_algebra(c.algebra, b.algebra)
    rinv = two_cycle_inverse(r, b, c)
    conj = compose(left_multiplication(cb, r), right_multiplication(cb, rinv))
    chi_map = compose(conj, flip_map(b.carrier, c.carrier, field))
    return DistLaw(
        "comonad-comonad",
        comonad_from_coalgebra(b.coalgebra),
        comonad_from_coalgebra(c.coalgebra),
        chi_map,
    )


def qd_factorisation(r: dict, b: HopfAlgebra, c: HopfAlgebra, m: DoubleModule) -> Factorisation:
    """The factorisation of the 2-cycle law through tensoring by a module
    with commuting left actions of B and C:

        sigma(b (x) m) = R_12 (m (x) b)   (C acts on m, B multiplies b)
        gamma(m (x) c) = R_12 (c (x) m)   (C multiplies c, B acts on m)
    """
    if m.left.carrier.dim != b.carrier.dim or m.right.carrier.dim != c.carrier.dim:
        raise DomainError("module is not over (B, C)")
    check_double_module(m).raise_if_failed()
    chi = qd_chi(r, b, c)
    field = b.field
    md = m.carrier.dim

    sigma_mult = None
    gamma_mult = None
    for idx, coeff in r.items():
        i, j = divmod(idx, b.carrier.dim)
        c_on_m = action_by(m.right_act, md, {i: field.one}, field)
        b_mul = left_multiplication(b.algebra, {j: field.one})
        term_s = tensor(c_on_m, b_mul).scaled(coeff)
        sigma_mult = term_s if sigma_mult is None else sigma_mult + term_s
        c_mul = left_multiplication(c.algebra, {i: field.one})
        b_on_m = action_by(m.left_act, md, {j: field.one}, field)
        term_g = tensor(c_mul, b_on_m).scaled(coeff)
        gamma_mult = term_g if gamma_mult is None else gamma_mult + term_g

    sigma_map = compose(sigma_mult, flip_map(b.carrier, m.carrier, field))
    gamma_map = compose(gamma_mult, flip_map(m.carrier, c.carrier, field))
    sigma_functor = TensorFunctor(m.carrier, field)
    sigma = DistLaw("comonad-endofunctor", chi.left, sigma_functor, sigma_map)
    gamma = DistLaw("endofunctor-comonad", sigma_functor, chi.right, gamma_map)
    return make_factorisation(chi, sigma_functor, sigma, gamma)


# monad morphisms as factorisations with trivial middle functor


def monad_morphism_factorisation(s: AlgebraMorphism, theta: DistLaw) -> Factorisation:
    """A monad endomorphism compatible with a mixed law theta yields a
    factorisation with one-dimensional middle functor.  The three
    compatibility squares are checked up front and failures name them."""
    if theta.kind != "monad-comonad":
        raise DomainError("monad_morphism_factorisation needs a mixed law")
    monad = theta.left
    algebra = monad.algebra
    if s.map.domain.dim != algebra.carrier.dim or s.map.codomain.dim != algebra.carrier.dim:
        raise DomainError("morphism does not act on the monad carrier")
    field = theta.field
    report = Report(f"monad morphism {s.name}")
    check_equal(
        report, "monad-morphism-mul",
        compose(s.map, algebra.mul),
        compose(algebra.mul, tensor(s.map, s.map)),
    )
    check_equal(report, "monad-morphism-unit", compose(s.map, algebra.unit), algebra.unit)
    idd = LinMap.identity(theta.right_functor.carrier, field)
    check_equal(
        report, "theta-compatibility",
        compose(theta.map, tensor(s.map, idd)),
        compose(tensor(idd, s.map), theta.map),
    )
    report.raise_if_failed()
    one = identity_functor(field)
    sigma = DistLaw("monad-endofunctor", monad, one, s.map)
    gamma = DistLaw(
        "endofunctor-comonad", one, theta.right,
        LinMap.identity(tensor_space(one.carrier, theta.right_functor.carrier), field),
    )
    return make_factorisation(theta, one, sigma, gamma)
