"""Built-in fixtures: the small algebras, Hopf algebras, twists,
R-matrices and admissible data used by the test suite and the command
line `examples` command."""

from __future__ import annotations

from fractions import Fraction

from .admissible import AdmissibleDatum, LeftCoalg, RightCoalg, TensorLeftRealization
from .errors import DomainError
from .field import Field, QQ
from .functors import TensorFunctor, comonad_from_coalgebra
from .laws import DistLaw, qd_chi
from .linalg import LinMap, Space, flip_map, tensor_space
from .structures import (
    Algebra,
    AlgebraMorphism,
    Coalgebra,
    DoubleModule,
    HopfAlgebra,
    cyclic_group_algebra,
    field_algebra,
    matrix_algebra,
    truncated_poly,
)


def sweedler_hopf(field: Field = QQ) -> HopfAlgebra:
    """The four-dimensional noncommutative noncocommutative Hopf algebra
    with basis 1, g, x, gx: g^2 = 1, x^2 = 0, x g = -g x,
    comul(g) = g (x) g, comul(x) = x (x) g + 1 (x) x, antipode(g) = g,
    antipode(x) = -x g."""
    if field.characteristic == 2:
        raise DomainError("needs characteristic != 2")
    one = field.one
    neg = field.neg(one)
    labels = ("1", "g", "x", "gx")
    carrier = Space("H4", 4, labels)
    I, G, X, GX = 0, 1, 2, 3
    table = {
        (I, I): {I: one}, (I, G): {G: one}, (I, X): {X: one}, (I, GX): {GX: one},
        (G, I): {G: one}, (G, G): {I: one}, (G, X): {GX: one}, (G, GX): {X: one},
        (X, I): {X: one}, (X, G): {GX: neg}, (X, X): {}, (X, GX): {},
        (GX, I): {GX: one}, (GX, G): {X: neg}, (GX, X): {}, (GX, GX): {},
    }
    sq = tensor_space(carrier, carrier)
    mul = LinMap.from_cols(
        sq, carrier, field, [table[(i, j)] for i in range(4) for j in range(4)]
    )
    unit = LinMap.from_cols(Space("k", 1, ("1",)), carrier, field, [{I: one}])
    algebra = Algebra("H4", carrier, mul, unit, field)

    def pair(i, j):
        return i * 4 + j

    comul_cols = [
        {pair(I, I): one},
        {pair(G, G): one},
        {pair(X, G): one, pair(I, X): one},
        {pair(GX, I): one, pair(G, GX): one},
    ]
    counit_cols = [{0: one}, {0: one}, {}, {}]
    coalgebra = Coalgebra(
        "H4", carrier,
        LinMap.from_cols(carrier, sq, field, comul_cols),
        LinMap.from_cols(carrier, Space("k", 1, ("1",)), field, counit_cols),
        field,
    )
    antipode = LinMap.from_cols(
        carrier, carrier, field, [{I: one}, {G: one}, {GX: one}, {X: neg}]
    )
    return HopfAlgebra("H4", algebra, coalgebra, antipode)


def qc2_r_matrix(field: Field = QQ) -> dict:
    """The nontrivial 2-cycle on the order-two group algebra:
    (1/2)(1 (x) 1 + 1 (x) g + g (x) 1 - g (x) g)."""
    if field.characteristic == 2:
        raise DomainError("needs characteristic != 2")
    half = field.of(Fraction(1, 2))
    return {0: half, 1: half, 2: half, 3: field.neg(half)}


def trivial_r_matrix(b: HopfAlgebra, c: HopfAlgebra) -> dict:
    """1 (x) 1 in C (x) B."""
    field = b.field
    out = {}
    bdim = b.carrier.dim
    for i, ci in c.algebra.one().items():
        for j, bj in b.algebra.one().items():
            out[i * bdim + j] = field.mul(ci, bj)
    return out


def qc2_double_module(field: Field = QQ) -> DoubleModule:
    """The group algebra as a module over itself on both sides: the two
    commuting left actions are left and right multiplication."""
    h = cyclic_group_algebra(field, 2)
    a = h.algebra
    swap = flip_map(a.carrier, a.carrier, field)
    from .linalg import compose

    return DoubleModule("QC2-reg", a, a, a.carrier, a.mul, compose(a.mul, swap))


def qc2_sign_twist(field: Field = QQ) -> AlgebraMorphism:
    """g -> -g on the order-two group algebra."""
    h = cyclic_group_algebra(field, 2)
    a = h.algebra
    m = LinMap.from_cols(
        a.carrier, a.carrier, field, [{0: field.one}, {1: field.neg(field.one)}]
    )
    return AlgebraMorphism("sign", a, a, m)


def truncated_scaling_twist(field: Field = QQ, scale=2) -> AlgebraMorphism:
    """x -> scale * x on the square-zero polynomial algebra."""
    a = truncated_poly(field, 2)
    m = LinMap.from_cols(
        a.carrier, a.carrier, field, [{0: field.one}, {1: field.of(scale)}]
    )
    return AlgebraMorphism("scale", a, a, m)


def matrix_conjugation_twist(field: Field = QQ) -> AlgebraMorphism:
    """Conjugation by diag(1, 2) on the 2x2 matrix algebra."""
    a = matrix_algebra(field, 2)
    two = field.of(2)
    half = field.inv(two)
    cols = [{0: field.one}, {1: half}, {2: two}, {3: field.one}]
    m = LinMap.from_cols(a.carrier, a.carrier, field, cols)
    return AlgebraMorphism("conj", a, a, m)


def grouplike_flip_chi(h: HopfAlgebra) -> DistLaw:
    """The swap as a comonad law from the coalgebra of h to itself."""
    c = comonad_from_coalgebra(h.coalgebra)
    return DistLaw(
        "comonad-comonad", c, c, flip_map(h.carrier, h.carrier, h.field)
    )


def counit_datum(chi: DistLaw) -> AdmissibleDatum:
    """For a law between comonads on one cocommutative carrier whose map
    fixes the diagonal, the one-dimensional datum with identity rho and
    lambda."""
    field = chi.field
    t = chi.left_functor.carrier
    c = chi.right_functor.carrier
    if t.dim != c.dim:
        raise DomainError("counit datum needs equal carriers")
    point = Space("pt", 1, ("1",))
    rho = LinMap.identity(tensor_space(t, point), field)
    right = RightCoalg(chi, point, rho)
    n_functor = TensorFunctor(Space("Npt", 1, ("1",)), field)
    lam = LinMap.identity(tensor_space(n_functor.carrier, c), field)
    left = LeftCoalg(chi, TensorLeftRealization(chi, n_functor, lam))
    return AdmissibleDatum(right, left)


def fixture_algebra(field: Field, name: str):
    """Algebras by fixture name: QC2, QC3, trunc2, M2, k, H4."""
    if name == "QC2":
        return cyclic_group_algebra(field, 2)
    if name == "QC3":
        return cyclic_group_algebra(field, 3)
    if name == "trunc2":
        return truncated_poly(field, 2)
    if name == "M2":
        return matrix_algebra(field, 2)
    if name == "k":
        return field_algebra(field)
    if name == "H4":
        return sweedler_hopf(field)
    raise DomainError(f"unknown fixture algebra {name!r}")


def _plain_algebra(obj):
    from .structures import HopfAlgebra as _H

    return obj.algebra if isinstance(obj, _H) else obj


EXAMPLE_NAMES = (
    "cyclic:QC2", "cyclic:QC3", "cyclic:field", "cyclic:trunc2", "cyclic:M2",
    "twist:QC2", "twist:trunc2", "twist:M2",
    "flip:QC2", "qd:QC2", "hopf:QC2",
)


def example_bundle(name: str, field: Field = QQ) -> str:
    """Emit a complete, self-contained bundle for a named fixture."""
    from .bundle import Emitter

    em = Emitter(field)
    if name.startswith("cyclic:") or name.startswith("twist:"):
        which = name.split(":", 1)[1]
        algebra = _plain_algebra(fixture_algebra(field, "k" if which == "field" else which))
        alg_name = em.add_algebra(algebra, _bundle_alg_name(which))
        if name.startswith("twist:"):
            twist = {
                "QC2": qc2_sign_twist,
                "trunc2": truncated_scaling_twist,
                "M2": matrix_conjugation_twist,
            }[which](field)
            em.add_morphism(twist, alg_name, alg_name, "tw")
            em.add_raw("data", f"datum D cyclic algebra={alg_name} twist=tw")
        else:
            em.add_raw("data", f"datum D cyclic algebra={alg_name}")
        return em.text()
    if name == "flip:QC2":
        h = cyclic_group_algebra(field, 2)
        co_name = em.add_coalgebra(h.coalgebra, "QC2co")
        chi = grouplike_flip_chi(h)
        em.add_law(chi, "chi", co_name, co_name, "QC2co", "QC2co")
        datum = counit_datum(chi)
        pt = em.add_space(datum.right.obj, "pt")
        em.add_linmap("rho", datum.right.rho, f"QC2co*{pt}", f"QC2co*{pt}")
        npt = em.add_space(datum.left.realization.functor.carrier, "Npt")
        em.add_linmap("lam", datum.left.realization.lam, f"{npt}*QC2co", f"{npt}*QC2co")
        em.add_raw("data", f"datum D tensor chi=chi M={pt} rho=rho N={npt} lambda=lam")
        return em.text()
    if name == "qd:QC2":
        h = cyclic_group_algebra(field, 2)
        hopf_name = em.add_hopf(h, "QC2")
        r = qc2_r_matrix(field)
        chi = qd_chi(r, h, h)
        em.add_law(chi, "chi", f"{hopf_name}co", f"{hopf_name}co", _safe_name(hopf_name), _safe_name(hopf_name))
        module = qc2_double_module(field)
        carrier = em.add_space(module.carrier, "Mreg")
        em.add_linmap("bact", module.left_act, f"{_safe_name(hopf_name)}*Mreg", "Mreg")
        em.add_linmap("cact", module.right_act, f"{_safe_name(hopf_name)}*Mreg", "Mreg")
        em.add_raw(
            "double_modules",
            f"doublemodule M left={hopf_name} right={hopf_name} carrier=Mreg bact=bact cact=cact",
        )
        from .laws import qd_factorisation

        fact = qd_factorisation(r, h, h, module)
        em.add_factorisation(
            fact, "F", "chi", f"{hopf_name}co", f"{hopf_name}co",
            _safe_name(hopf_name), _safe_name(hopf_name),
        )
        datum = counit_datum(chi)
        pt = em.add_space(datum.right.obj, "pt")
        alg_space = _safe_name(hopf_name)
        em.add_linmap("rho", datum.right.rho, f"{alg_space}*{pt}", f"{alg_space}*{pt}")
        npt = em.add_space(datum.left.realization.functor.carrier, "Npt")
        em.add_linmap("lam", datum.left.realization.lam, f"{npt}*{alg_space}", f"{npt}*{alg_space}")
        em.add_raw("data", f"datum D tensor chi=chi M={pt} rho=rho N={npt} lambda=lam")
        return em.text()
    if name == "hopf:QC2":
        from .laws import hopf_laws
        from .structures import regular_right_module

        h = cyclic_group_algebra(field, 2)
        hopf_name = em.add_hopf(h, "QC2")
        theta, sigma, gamma, fact = hopf_laws(h, regular_right_module(h))
        # the monad side is ingested in canonical left form (opposite
        # multiplication); for this commutative fixture it equals QC2
        em.add_law(theta, "theta", hopf_name, f"{hopf_name}co", _safe_name(hopf_name), _safe_name(hopf_name))
        em.add_factorisation(
            fact, "F", "theta", hopf_name, f"{hopf_name}co",
            _safe_name(hopf_name), _safe_name(hopf_name),
        )
        return em.text()
    raise DomainError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}")


def _bundle_alg_name(which: str) -> str:
    return {"QC2": "QC2", "QC3": "QC3", "field": "k", "trunc2": "trunc2", "M2": "M2"}[which]


def _safe_name(name: str) -> str:
    from .bundle import _safe

    return _safe(name)
