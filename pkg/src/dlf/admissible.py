"""Right and left coalgebras over a comonad distributive law, and the
actions of factorisations that make their pairs a bimodule category.

The code is generic over a small realization interface so the same action
and bar-construction formulas run both on tensoring functors over plain
vector spaces and on the lifted functors over bimodule categories:

  comonad-like:  on_object(X), on_map(f, src, tgt), counit_at(X), comul_at(X)
  law-like:      left, right (comonad-like), component_at(X)
  left functor:  on_object(X) -> Space, on_map(f, src, tgt), plus a
                 lambda_at(X) on the containing realization

Objects are Spaces in the tensoring realization and bimodules in the
lifted one; only the maps between underlying spaces circulate.
"""

from __future__ import annotations

from .errors import DomainError, InternalError
from .functors import TensorFunctor
from .laws import DistLaw, Factorisation, FactorisationMorphism
from .linalg import LinMap, Space, compose, compose_all, tensor, unit_space
from .report import Report, check_equal


class RightCoalg:
    """An object M with rho: T M -> C M compatible with the comonads."""

    def __init__(self, chi, obj, rho: LinMap):
        self.chi = chi
        self.obj = obj
        self.rho = rho

    def __repr__(self):
        return f"RightCoalg(rho {self.rho.codomain.dim}x{self.rho.domain.dim})"


class TensorLeftRealization:
    """A tensoring left coalgebra: N = P_N (x) -, lambda a carrier map
    P_N (x) P_C -> P_N (x) P_T."""

    def __init__(self, chi, functor: TensorFunctor, lam: LinMap):
        t_dim = chi.left_functor.carrier.dim
        c_dim = chi.right_functor.carrier.dim
        if lam.domain.dim != functor.dim * c_dim or lam.codomain.dim != functor.dim * t_dim:
            raise DomainError("lambda carrier map has wrong shape")
        self.chi = chi
        self.functor = functor
        self.lam = lam

    @property
    def field(self):
        return self.functor.field

    def on_object(self, x: Space) -> Space:
        return self.functor.on_object(x)

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return self.functor.on_map(f)

    def lambda_at(self, x: Space) -> LinMap:
        return tensor(self.lam, LinMap.identity(x, self.field))

    def default_probes(self):
        return [unit_space()]


class ComposedLeftRealization:
    """The left coalgebra N . Sigma obtained by acting with a
    factorisation on the right: lambda' = N sigma . lambda Sigma . N gamma."""

    def __init__(self, base, fact):
        self.base = base
        self.fact = fact
        self.chi = base.chi

    def on_object(self, x) -> Space:
        return self.base.on_object(self.fact.Sigma.on_object(x))

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        sig = self.fact.Sigma
        return self.base.on_map(
            sig.on_map(f, src, tgt),
            sig.on_object(src) if src is not None else None,
            sig.on_object(tgt) if tgt is not None else None,
        )

    def lambda_at(self, x) -> LinMap:
        sig = self.fact.Sigma
        chi = self.chi
        t, c = chi.left, chi.right
        sx = sig.on_object(x)
        n_gamma = self.base.on_map(
            self.fact.gamma_component_at(x),
            sig.on_object(c.on_object(x)),
            c.on_object(sx),
        )
        lam_sx = self.base.lambda_at(sx)
        n_sigma = self.base.on_map(
            self.fact.sigma_component_at(x),
            t.on_object(sx),
            sig.on_object(t.on_object(x)),
        )
        return compose_all(n_sigma, lam_sx, n_gamma)

    def default_probes(self):
        return self.base.default_probes()


class LeftCoalg:
    """A functor N into vector spaces with lambda: N C -> N T, given by a
    realization (tensoring, lifted-quotient, or a composite)."""

    def __init__(self, chi, realization):
        self.chi = chi
        self.realization = realization

    def on_object(self, x) -> Space:
        return self.realization.on_object(x)

    def on_map(self, f, src=None, tgt=None) -> LinMap:
        return self.realization.on_map(f, src, tgt)

    def lambda_at(self, x) -> LinMap:
        return self.realization.lambda_at(x)


class AdmissibleDatum:
    """A right and a left coalgebra over one shared law."""

    def __init__(self, right: RightCoalg, left: LeftCoalg):
        if not _same_law(right.chi, left.chi):
            raise DomainError("admissible datum: the two sides share no law")
        self.right = right
        self.left = left

    @property
    def chi(self):
        return self.right.chi


def _same_law(a, b) -> bool:
    if a is b:
        return True
    return isinstance(a, DistLaw) and isinstance(b, DistLaw) and a == b


def check_right_coalg(r: RightCoalg) -> Report:
    """The compatibility pentagon and counit triangle for rho."""
    chi = r.chi
    t, c = chi.left, chi.right
    m = r.obj
    tm, cm = t.on_object(m), c.on_object(m)
    report = Report("right coalgebra")
    check_equal(
        report, "comul-pentagon",
        compose(c.comul_at(m), r.rho),
        compose_all(
            c.on_map(r.rho, tm, cm),
            chi.component_at(m),
            t.on_map(r.rho, tm, cm),
            t.comul_at(m),
        ),
    )
    check_equal(
        report, "counit-triangle",
        compose(c.counit_at(m), r.rho),
        t.counit_at(m),
    )
    return report


def check_left_coalg(l: LeftCoalg, probes=None) -> Report:
    """Dual diagrams for lambda, evaluated at probe objects.  For the
    tensoring realization a single probe (the unit object) is exact and
    exhaustive, since components are carrier maps tensored with
    identities."""
    chi = l.chi
    t, c = chi.left, chi.right
    report = Report("left coalgebra")
    if probes is None:
        probes = l.realization.default_probes()
    for k, x in enumerate(probes):
        tx, cx = t.on_object(x), c.on_object(x)
        lhs = compose(
            l.on_map(t.comul_at(x), tx, t.on_object(tx)),
            l.lambda_at(x),
        )
        rhs = compose_all(
            l.lambda_at(tx),
            l.on_map(chi.component_at(x), t.on_object(cx), c.on_object(tx)),
            l.lambda_at(cx),
            l.on_map(c.comul_at(x), cx, c.on_object(cx)),
        )
        check_equal(report, f"comul-pentagon[probe {k}]", lhs, rhs)
        check_equal(
            report, f"counit-triangle[probe {k}]",
            compose(l.on_map(t.counit_at(x), tx, x), l.lambda_at(x)),
            l.on_map(c.counit_at(x), cx, x),
        )
    return report


def act_right(f: Factorisation, r: RightCoalg) -> RightCoalg:
    """(Sigma, sigma, gamma) |> (M, rho) = (Sigma M, gamma M . Sigma rho . sigma M)."""
    if not _same_law(f.chi, r.chi):
        raise DomainError("act_right: factorisation and coalgebra laws differ")
    chi = r.chi
    t, c = chi.left, chi.right
    m = r.obj
    tm, cm = t.on_object(m), c.on_object(m)
    new_obj = f.Sigma.on_object(m)
    new_rho = compose_all(
        f.gamma_component_at(m),
        f.Sigma.on_map(r.rho, tm, cm),
        f.sigma_component_at(m),
    )
    result = RightCoalg(chi, new_obj, new_rho)
    report = check_right_coalg(result)
    if not report.ok:
        raise InternalError(
            f"act_right output failed revalidation: {report.failures()[0].name}"
        )
    return result


def act_left(l: LeftCoalg, f: Factorisation, probes=None) -> LeftCoalg:
    """(N, lambda) <| (Sigma, sigma, gamma) composes Sigma under N."""
    if not _same_law(f.chi, l.chi):
        raise DomainError("act_left: factorisation and coalgebra laws differ")
    result = LeftCoalg(l.chi, ComposedLeftRealization(l.realization, f))
    report = check_left_coalg(result, probes)
    if not report.ok:
        raise InternalError(
            f"act_left output failed revalidation: {report.failures()[0].name}"
        )
    return result


def act_datum(f: Factorisation, d: AdmissibleDatum, g: Factorisation) -> AdmissibleDatum:
    """Componentwise bimodule action: f |> (right, left) <| g."""
    return AdmissibleDatum(act_right(f, d.right), act_left(d.left, g))


class RightCoalgMorphism:
    """A morphism of right coalgebras with identity functor component."""

    def __init__(self, source: RightCoalg, target: RightCoalg, map: LinMap):
        if not _same_law(source.chi, target.chi):
            raise DomainError("morphism between coalgebras over different laws")
        self.source = source
        self.target = target
        self.map = map


def check_right_coalg_morphism(m: RightCoalgMorphism) -> Report:
    chi = m.source.chi
    t, c = chi.left, chi.right
    report = Report("right coalgebra morphism")
    check_equal(
        report, "intertwines-rho",
        compose(c.on_map(m.map, m.source.obj, m.target.obj), m.source.rho),
        compose(m.target.rho, t.on_map(m.map, m.source.obj, m.target.obj)),
    )
    return report


def act_right_morphism(
    alpha: FactorisationMorphism, phi: RightCoalgMorphism
) -> RightCoalgMorphism:
    """alpha |> phi = the horizontal composite (alpha phi), a morphism
    from alpha.source |> phi.source to alpha.target |> phi.target."""
    source = act_right(alpha.source, phi.source)
    target = act_right(alpha.target, phi.target)
    new_map = compose(
        alpha.alpha.component_at(phi.target.obj),
        alpha.source.Sigma.on_map(phi.map, phi.source.obj, phi.target.obj),
    )
    result = RightCoalgMorphism(source, target, new_map)
    report = check_right_coalg_morphism(result)
    if not report.ok:
        raise InternalError("acted morphism failed revalidation")
    return result
