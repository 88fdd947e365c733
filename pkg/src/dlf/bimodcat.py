"""The concrete lifted-comonad realization over bimodule categories:
appending and prepending the algebra as lifted comonads, the rebracketing
law between them, connections and flat connections, twist factorisations,
the standard cyclic datum, and explicit twisted cyclic objects.

Objects here are bimodules; the functor sending a bimodule to its
commutator quotient realizes the left coalgebra of the cyclic datum.  The
identification of the quotient of the (n+2)-fold tensor power with the
(n+1)-fold tensor power is stored as an explicit pair of matrices
(section: a_0 (x) ... (x) a_n -> class of a_0 (x) a_n (x) ... (x) a_1 (x) 1),
so agreement claims between the abstract pipeline and the explicit
twisted formulas are plain matrix equalities.
"""

from __future__ import annotations

from .admissible import (
    AdmissibleDatum,
    LeftCoalg,
    RightCoalg,
    check_left_coalg,
    check_right_coalg,
)
from .duplicial import Degree, DuplicialModule
from .errors import DomainError, ValidationError
from .field import Field
from .linalg import (
    LinMap,
    Space,
    compose,
    compose_all,
    flip_map,
    tensor,
    tensor_space,
    unit_space,
)
from .report import Report, check_equal
from .structures import (
    Algebra,
    AlgebraMorphism,
    Bimodule,
    check_algebra,
    check_algebra_morphism,
    check_bimodule,
    commutator_quotient_with_section,
    regular_bimodule,
)


class AppendComonad:
    """The lifted comonad P -> P (x) A with counit the right action and
    comultiplication inserting the unit."""

    def __init__(self, algebra: Algebra, check_limit: int = 1024):
        self.algebra = algebra
        self.field = algebra.field
        self.check_limit = check_limit
        a = algebra.carrier
        self._eta_left = tensor(algebra.unit, LinMap.identity(a, self.field))

    def on_object(self, p: Bimodule) -> Bimodule:
        a = self.algebra
        idm = LinMap.identity(p.carrier, self.field)
        ida = LinMap.identity(a.carrier, self.field)
        result = Bimodule(
            f"{p.name}.A",
            a,
            tensor_space(p.carrier, a.carrier),
            tensor(p.left_action, ida),
            tensor(idm, a.mul),
        )
        if result.carrier.dim <= self.check_limit:
            check_bimodule(result).raise_if_failed()
        return result

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return tensor(f, self.algebra.identity())

    def counit_at(self, p: Bimodule) -> LinMap:
        return p.right_action

    def comul_at(self, p: Bimodule) -> LinMap:
        return tensor(LinMap.identity(p.carrier, self.field), self._eta_left)


class PrependComonad:
    """The lifted comonad P -> A (x) P with counit the left action."""

    def __init__(self, algebra: Algebra, check_limit: int = 1024):
        self.algebra = algebra
        self.field = algebra.field
        self.check_limit = check_limit
        a = algebra.carrier
        self._delta_right = tensor(LinMap.identity(a, self.field), algebra.unit)

    def on_object(self, p: Bimodule) -> Bimodule:
        a = self.algebra
        idm = LinMap.identity(p.carrier, self.field)
        ida = LinMap.identity(a.carrier, self.field)
        result = Bimodule(
            f"A.{p.name}",
            a,
            tensor_space(a.carrier, p.carrier),
            tensor(a.mul, idm),
            tensor(ida, p.right_action),
        )
        if result.carrier.dim <= self.check_limit:
            check_bimodule(result).raise_if_failed()
        return result

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return tensor(self.algebra.identity(), f)

    def counit_at(self, p: Bimodule) -> LinMap:
        return p.left_action

    def comul_at(self, p: Bimodule) -> LinMap:
        return tensor(self._delta_right, LinMap.identity(p.carrier, self.field))


class RebracketLaw:
    """The comonad law between append and prepend whose components are the
    rebracketing identities (P (x) A on the left of A equals A on the left
    of P (x) A as flat spaces)."""

    def __init__(self, left: AppendComonad, right: PrependComonad):
        self.left = left
        self.right = right
        self.field = left.field

    def component_at(self, p: Bimodule) -> LinMap:
        src = self.left.on_object(self.right.on_object(p)).carrier
        tgt = self.right.on_object(self.left.on_object(p)).carrier
        field = self.field
        return LinMap(src, tgt, field, [{i: field.one} for i in range(src.dim)])


def check_lifted_comonad_law(law, probes) -> Report:
    """Comonad-comonad law diagrams, componentwise at probe objects."""
    t, c = law.left, law.right
    report = Report("lifted law")
    for k, p in enumerate(probes):
        tp, cp = t.on_object(p), c.on_object(p)
        chi_p = law.component_at(p)
        check_equal(
            report, f"left-comul-square[probe {k}]",
            compose(c.on_map(t.comul_at(p), tp, t.on_object(tp)), chi_p),
            compose_all(law.component_at(tp), t.on_map(chi_p, None, None), t.comul_at(cp)),
        )
        check_equal(
            report, f"left-counit-triangle[probe {k}]",
            compose(c.on_map(t.counit_at(p), tp, p), chi_p),
            t.counit_at(cp),
        )
        check_equal(
            report, f"right-comul-square[probe {k}]",
            compose(c.comul_at(tp), chi_p),
            compose_all(c.on_map(chi_p, None, None), law.component_at(cp), t.on_map(c.comul_at(p), None, None)),
        )
        check_equal(
            report, f"right-counit-triangle[probe {k}]",
            compose(c.counit_at(tp), chi_p),
            t.on_map(c.counit_at(p), None, None),
        )
    return report


class CommutatorQuotientRealization:
    """The left coalgebra functor sending a bimodule to its commutator
    quotient, with lambda induced by (a (x) m) -> class of (m a (x) 1)."""

    def __init__(self, em: "EMRealization"):
        self.em = em
        self.chi = em.theta
        self._cache: dict = {}

    def _quotient(self, p: Bimodule):
        key = (p.carrier.dim, hash(p.left_action), hash(p.right_action))
        q = self._cache.get(key)
        if q is None:
            q = commutator_quotient_with_section(p)
            self._cache[key] = q
        return q

    def on_object(self, p: Bimodule) -> Space:
        return self._quotient(p).space

    def on_map(self, f: LinMap, src: Bimodule, tgt: Bimodule) -> LinMap:
        if src is None or tgt is None:
            raise DomainError("quotient functor needs source and target objects")
        return compose_all(self._quotient(tgt).projection, f, self._quotient(src).section)

    def lambda_at(self, p: Bimodule) -> LinMap:
        em = self.em
        field = em.field
        bp = em.btilde.on_object(p)
        dp = em.dtilde.on_object(p)
        insert_one = tensor(LinMap.identity(p.carrier, field), em.algebra.unit)
        to_append = compose_all(
            insert_one,
            p.right_action,
            flip_map(em.algebra.carrier, p.carrier, field),
        )
        return compose_all(
            self._quotient(bp).projection, to_append, self._quotient(dp).section
        )

    def default_probes(self):
        reg = self.em.regular()
        return [reg, self.em.btilde.on_object(reg)]


class TwistFunctor:
    """Twisting the right action by an algebra endomorphism; maps are
    unchanged."""

    def __init__(self, em: "EMRealization", s: AlgebraMorphism):
        self.em = em
        self.s = s
        self.field = em.field

    def on_object(self, p: Bimodule) -> Bimodule:
        twist = tensor(LinMap.identity(p.carrier, self.field), self.s.map)
        return Bimodule(
            f"{p.name}_s",
            p.base,
            p.carrier,
            p.left_action,
            compose(p.right_action, twist),
        )

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return f


class EMTwistFactorisation:
    """The factorisation with middle functor the right-action twist:
    sigma applies the endomorphism on the appended factor and gamma is the
    identity (twisting commutes with prepending on the nose)."""

    def __init__(self, em: "EMRealization", s: AlgebraMorphism):
        self.em = em
        self.s = s
        self.chi = em.theta
        self.Sigma = TwistFunctor(em, s)
        self.field = em.field

    def sigma_component_at(self, p: Bimodule) -> LinMap:
        return tensor(LinMap.identity(p.carrier, self.field), self.s.map)

    def gamma_component_at(self, p: Bimodule) -> LinMap:
        dim = self.em.algebra.carrier.dim * p.carrier.dim
        src = self.Sigma.on_object(self.em.dtilde.on_object(p)).carrier
        tgt = self.em.dtilde.on_object(self.Sigma.on_object(p)).carrier
        field = self.field
        return LinMap(src, tgt, field, [{i: field.one} for i in range(dim)])


class EMRealization:
    """All lifted data for one base algebra."""

    def __init__(self, algebra: Algebra, check_limit: int = 1024):
        check_algebra(algebra).raise_if_failed()
        self.algebra = algebra
        self.field = algebra.field
        self.btilde = AppendComonad(algebra, check_limit)
        self.dtilde = PrependComonad(algebra, check_limit)
        self.theta = RebracketLaw(self.btilde, self.dtilde)
        self.h = CommutatorQuotientRealization(self)
        self._regular = None

    def regular(self) -> Bimodule:
        if self._regular is None:
            self._regular = regular_bimodule(self.algebra)
        return self._regular

    def check_theta(self, probes=None) -> Report:
        if probes is None:
            probes = [self.regular(), self.btilde.on_object(self.regular())]
        return check_lifted_comonad_law(self.theta, probes)

    def cyclic_datum(self) -> AdmissibleDatum:
        """The standard datum: the regular bimodule with identity rho, and
        the commutator quotient functor with its lambda."""
        reg = self.regular()
        ba = self.btilde.on_object(reg)
        field = self.field
        rho = LinMap(
            ba.carrier,
            self.dtilde.on_object(reg).carrier,
            field,
            [{i: field.one} for i in range(ba.carrier.dim)],
        )
        right = RightCoalg(self.theta, reg, rho)
        left = LeftCoalg(self.theta, self.h)
        check_right_coalg(right).raise_if_failed()
        check_left_coalg(left).raise_if_failed()
        return AdmissibleDatum(right, left)

    def twist_factorisation(self, s: AlgebraMorphism) -> EMTwistFactorisation:
        if s.map.domain.dim != self.algebra.carrier.dim:
            raise DomainError("twist morphism must act on the base algebra")
        check_algebra_morphism(
            AlgebraMorphism(s.name, self.algebra, self.algebra, s.map)
        ).raise_if_failed()
        return EMTwistFactorisation(self, s)

    def trivial_factorisation(self) -> EMTwistFactorisation:
        return self.twist_factorisation(AlgebraMorphism.identity(self.algebra))

    def twisted_bimodule(self, s: AlgebraMorphism) -> Bimodule:
        return TwistFunctor(self, s).on_object(self.regular())

    # explicit twisted cyclic object: the independent oracle

    def tensor_power_space(self, n: int) -> Space:
        space = self.algebra.carrier
        result = space
        for _ in range(n - 1):
            result = tensor_space(result, space)
        return result if n >= 1 else unit_space()

    def twisted_cyclic_object(self, s: AlgebraMorphism, n_max: int) -> DuplicialModule:
        """Degree n space is the (n+1)-fold tensor power; faces multiply
        neighbours, the last face and the cyclic operator wrap the last
        tensorand around through the endomorphism."""
        check_algebra_morphism(
            AlgebraMorphism(s.name, self.algebra, self.algebra, s.map)
        ).raise_if_failed()
        a = self.algebra
        field = self.field
        ac = a.carrier
        ida = LinMap.identity(ac, field)

        def idpow(k: int) -> LinMap:
            return LinMap.identity(self.tensor_power_space(k), field) if k > 0 else LinMap.identity(unit_space(), field)

        degrees = []
        for n in range(n_max + 1):
            space = self.tensor_power_space(n + 1)
            rotate = flip_map(self.tensor_power_space(n), ac, field) if n >= 1 else None
            faces = []
            if n >= 1:
                for i in range(n):
                    parts = []
                    if i > 0:
                        parts.append(idpow(i))
                    parts.append(a.mul)
                    if n - 1 - i > 0:
                        parts.append(idpow(n - 1 - i))
                    face = parts[0]
                    for part in parts[1:]:
                        face = tensor(face, part)
                    faces.append(face)
                wrap = compose_all(
                    tensor(compose(a.mul, tensor(s.map, ida)), idpow(n - 1)) if n >= 2
                    else compose(a.mul, tensor(s.map, ida)),
                    rotate,
                )
                faces.append(wrap)
            degeneracies = []
            if n < n_max:
                for i in range(n + 1):
                    left = idpow(i + 1)
                    right = tensor(a.unit, idpow(n - i)) if n - i > 0 else a.unit
                    degeneracies.append(tensor(left, right))
            if n >= 1:
                t_map = compose(tensor(s.map, idpow(n)), rotate)
            else:
                t_map = s.map
            degrees.append(Degree(space, tuple(faces), tuple(degeneracies), t_map))
        return DuplicialModule(degrees, field)

    def cyclic_object(self, n_max: int) -> DuplicialModule:
        return self.twisted_cyclic_object(AlgebraMorphism.identity(self.algebra), n_max)

    def bar_identification(self, base_object: Bimodule, n: int) -> tuple[LinMap, LinMap]:
        """The stored isomorphism between the commutator quotient of the
        (n+1)-fold appended power of base_object (which must have the
        algebra as carrier) and the (n+1)-fold tensor power.

        Forward: class of x_0 (x) ... (x) x_{n+1} maps to
        (x_{n+1} x_0) (x) x_n (x) ... (x) x_1; its section embeds
        a_0 (x) ... (x) a_n as the class of a_0 (x) a_n (x) ... (x) a_1 (x) 1.
        """
        a = self.algebra
        d = a.carrier.dim
        if base_object.carrier.dim != d:
            raise DomainError("identification needs the algebra as degree-zero carrier")
        field = self.field
        obj = base_object
        for _ in range(n + 1):
            obj = self.btilde.on_object(obj)
        quot = self.h._quotient(obj)

        big = obj.carrier  # dim d^(n+2)
        target = self.tensor_power_space(n + 1)
        cols = []
        for flat in range(big.dim):
            digits = []
            rest = flat
            for k in range(n + 2):
                digits.append(rest // d ** (n + 1 - k))
                rest %= d ** (n + 1 - k)
            tail = 0
            for k in range(1, n + 1):
                tail += digits[n + 1 - k] * d ** (n - k)
            prod = a.mul.cols[digits[n + 1] * d + digits[0]]
            cols.append({r * d**n + tail: v for r, v in prod.items()})
        psi_hat = LinMap(big, target, field, cols)
        forward = compose(psi_hat, quot.section)

        emb_cols = []
        unit_vec = a.one()
        for flat in range(target.dim):
            digits = []
            rest = flat
            for k in range(n + 1):
                digits.append(rest // d ** (n - k))
                rest %= d ** (n - k)
            base = digits[0] * d ** (n + 1)
            for j in range(1, n + 1):
                base += digits[n + 1 - j] * d ** (n + 1 - j)
            emb_cols.append({base + r: v for r, v in unit_vec.items()})
        emb = LinMap(target, big, field, emb_cols)
        backward = compose(quot.projection, emb)
        return forward, backward


# connections


class ConnectionDatum:
    """A bimodule together with a splitting of its left action."""

    def __init__(self, module: Bimodule, splitting: LinMap):
        a = module.base
        expected = a.carrier.dim * module.carrier.dim
        if splitting.domain.dim != module.carrier.dim or splitting.codomain.dim != expected:
            raise DomainError("splitting has wrong shape")
        self.module = module
        self.splitting = splitting

    @property
    def field(self) -> Field:
        return self.module.field


def tensor_over_base(m: Bimodule, n: Bimodule):
    """M (x)_A N as a quotient of M (x) N with projection and section,
    dividing by the span of (x a) (x) y - x (x) (a y)."""
    from .linalg import quotient_with_section

    field = m.field
    flat = tensor_space(m.carrier, n.carrier)
    relations = []
    md, nd, ad = m.carrier.dim, n.carrier.dim, m.base.carrier.dim
    for x in range(md):
        for i in range(ad):
            for y in range(nd):
                vec: dict = {}
                for r, v in m.right_action.cols[x * ad + i].items():
                    vec[r * nd + y] = v
                for r, v in n.left_action.cols[i * nd + y].items():
                    key = x * nd + r
                    acc = field.sub(vec.get(key, field.zero), v)
                    if acc:
                        vec[key] = acc
                    elif key in vec:
                        del vec[key]
                if vec:
                    relations.append(vec)
    return quotient_with_section(flat, relations, field, name=f"{m.name}(x)A{n.name}")


def nabla_hat(m: Bimodule, c: ConnectionDatum) -> LinMap:
    """The lifted connection on the flat tensor product:
    m (x) n -> m n_(-1) (x) n_(0)."""
    field = m.field
    idm = LinMap.identity(m.carrier, field)
    idn = LinMap.identity(c.module.carrier, field)
    return compose(
        tensor(m.right_action, idn),
        tensor(idm, c.splitting),
    )


def check_connection(c: ConnectionDatum, probes) -> Report:
    """The splitting identity and left-linearity on the module itself,
    then the counit diagram of the induced connection on each probe."""
    report = Report(f"connection on {c.module.name}")
    n = c.module
    a = n.base
    field = n.field
    idn = LinMap.identity(n.carrier, field)
    check_equal(report, "splits-the-action", compose(n.left_action, c.splitting), idn)
    check_equal(
        report, "left-linear",
        compose(c.splitting, n.left_action),
        compose(
            tensor(a.mul, idn),
            tensor(a.identity(), c.splitting),
        ),
    )
    for k, m in enumerate(probes):
        quot = tensor_over_base(m, n)
        check_equal(
            report, f"counit-diagram[probe {k}]",
            compose_all(quot.projection, nabla_hat(m, c), quot.section),
            LinMap.identity(quot.space, field),
        )
    return report


def check_flat(c: ConnectionDatum, probes) -> Report:
    """The comultiplication diagram of the induced connection on probes;
    requires the connection axioms to hold."""
    conn = check_connection(c, probes)
    conn.raise_if_failed()
    report = Report(f"flatness on {c.module.name}")
    n = c.module
    a = n.base
    field = n.field
    idn = LinMap.identity(n.carrier, field)
    insert_unit = tensor(a.unit, idn)
    for k, m in enumerate(probes):
        quot = tensor_over_base(m, n)
        idm = LinMap.identity(m.carrier, field)
        nh = nabla_hat(m, c)
        leg1 = compose_all(tensor(idm, c.splitting), nh, quot.section)
        leg2 = compose_all(tensor(idm, insert_unit), nh, quot.section)
        check_equal(report, f"comul-diagram[probe {k}]", leg1, leg2)
    return report


def free_bimodule(a: Algebra, rank_: int) -> Bimodule:
    """A (x) V with left multiplication and right action through the
    first factor: (a (x) v) b = ab (x) v."""
    field = a.field
    v = Space(f"V{rank_}", rank_)
    carrier = tensor_space(a.carrier, v)
    idv = LinMap.identity(v, field)
    left = tensor(a.mul, idv)
    right = compose(
        tensor(a.mul, idv),
        tensor(a.identity(), flip_map(v, a.carrier, field)),
    )
    return Bimodule(f"{a.name}(x)V{rank_}", a, carrier, left, right)


def free_module_connection(a: Algebra, rank_: int) -> ConnectionDatum:
    """The canonical flat connection a (x) v -> a (x) (1 (x) v)."""
    module = free_bimodule(a, rank_)
    field = a.field
    v = Space(f"V{rank_}", rank_)
    idv = LinMap.identity(v, field)
    splitting = tensor(a.identity(), tensor(a.unit, idv))
    return ConnectionDatum(module, splitting)


def twist_connection(em: EMRealization, s: AlgebraMorphism) -> ConnectionDatum:
    """The twisted bimodule is free of rank one as a left module; the
    splitting sends a to a (x) 1."""
    module = em.twisted_bimodule(s)
    a = em.algebra
    splitting = tensor(a.identity(), a.unit)
    return ConnectionDatum(module, splitting)
