"""Duplicial modules from admissible data: the bar resolution of the
right coalgebra object under the comonad, pushed through the left
coalgebra functor, with the extra operator built from rho, the law, and
lambda.

Operator formulas (degree n, all maps between the stored spaces):

    d_i = N T^i (counit at T^(n-i) M)          0 <= i <= n
    s_i = N T^i (comul  at T^(n-i) M)          0 <= i <= n
    t   = (lambda at T^n M) . N(chi moves) . N T^n rho

where the chi moves carry the C produced by rho leftwards across the n
copies of T, innermost application first.  These formulas are validated
by the identity suite and by the explicit twisted-cyclic comparison, not
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import AdmissibleDatum, check_left_coalg, check_right_coalg
from .errors import InternalError, ValidationError
from .field import Field
from .linalg import LinMap, Space, SpanSolver, compose, compose_all, kernel_basis
from .report import Report, first_difference


@dataclass(frozen=True)
class Degree:
    space: Space
    faces: tuple[LinMap, ...]
    degeneracies: tuple[LinMap, ...]
    t: LinMap


class DuplicialModule:
    """A finite range of degrees with faces, degeneracies and the
    duplicial operator; degeneracies are omitted at the top degree where
    their target is out of range."""

    def __init__(self, degrees: list[Degree], field: Field):
        self.degrees = degrees
        self.field = field

    @property
    def n_max(self) -> int:
        return len(self.degrees) - 1

    def space(self, n: int) -> Space:
        return self.degrees[n].space

    def face(self, n: int, i: int) -> LinMap:
        return self.degrees[n].faces[i]

    def degeneracy(self, n: int, i: int) -> LinMap:
        return self.degrees[n].degeneracies[i]

    def t(self, n: int) -> LinMap:
        return self.degrees[n].t

    def t_power(self, n: int, k: int) -> LinMap:
        result = LinMap.identity(self.degrees[n].space, self.field)
        for _ in range(k):
            result = compose(self.degrees[n].t, result)
        return result


def _iterate_functor(functor, obj, times: int):
    objs = [obj]
    for _ in range(times):
        objs.append(functor.on_object(objs[-1]))
    return objs


def build_duplicial(datum: AdmissibleDatum, n_max: int) -> DuplicialModule:
    """The duplicial module N T^(n+1) M for n = 0..n_max."""
    if n_max < 0:
        raise ValidationError("n_max must be nonnegative")
    check_right_coalg(datum.right).raise_if_failed()
    check_left_coalg(datum.left).raise_if_failed()
    chi = datum.chi
    t_mon, c_mon = chi.left, chi.right
    n_fun = datum.left
    m_obj = datum.right.obj
    rho = datum.right.rho
    field = rho.field

    # T^j M for j = 0..n_max+1
    tpowers = _iterate_functor(t_mon, m_obj, n_max + 1)

    def lift_through_t(f: LinMap, src_obj, tgt_obj, times: int):
        """Apply T `times` times to a morphism, tracking objects."""
        a, b = src_obj, tgt_obj
        for _ in range(times):
            f = t_mon.on_map(f, a, b)
            a, b = t_mon.on_object(a), t_mon.on_object(b)
        return f, a, b

    degrees: list[Degree] = []
    for n in range(n_max + 1):
        space = n_fun.on_object(tpowers[n + 1])
        faces = []
        degeneracies = []
        if n >= 1:
            for i in range(n + 1):
                f = t_mon.counit_at(tpowers[n - i])
                f, src, tgt = lift_through_t(f, tpowers[n - i + 1], tpowers[n - i], i)
                faces.append(n_fun.on_map(f, tpowers[n + 1], tpowers[n]))
        if n < n_max:
            for i in range(n + 1):
                g = t_mon.comul_at(tpowers[n - i])
                g, src, tgt = lift_through_t(g, tpowers[n - i + 1], tpowers[n - i + 2], i)
                degeneracies.append(n_fun.on_map(g, tpowers[n + 1], tpowers[n + 2]))

        # t: N T^n rho, then n chi moves, then lambda at T^n M
        cm_obj = c_mon.on_object(m_obj)
        step, src_obj, cur_obj = lift_through_t(rho, tpowers[1], cm_obj, n)
        t_map = n_fun.on_map(step, tpowers[n + 1], cur_obj)
        # cur_obj = T^k C T^(n-1-k) ... starts as T^n(C M)
        for k in range(n - 1, -1, -1):
            move = chi.component_at(tpowers[n - 1 - k])
            move_src = t_mon.on_object(c_mon.on_object(tpowers[n - 1 - k]))
            move_tgt = c_mon.on_object(tpowers[n - k])
            move, move_src, move_tgt = lift_through_t(move, move_src, move_tgt, k)
            t_map = compose(n_fun.on_map(move, cur_obj, move_tgt), t_map)
            cur_obj = move_tgt
        lam = datum.left.lambda_at(tpowers[n])
        t_map = compose(lam, t_map)
        if t_map.domain.dim != space.dim or t_map.codomain.dim != space.dim:
            raise InternalError("duplicial operator has wrong shape")
        degrees.append(Degree(space, tuple(faces), tuple(degeneracies), t_map))
    return DuplicialModule(degrees, field)


def _record(report: Report, name: str, n: int, lhs: LinMap, rhs: LinMap):
    diff = first_difference(lhs, rhs)
    if diff is None:
        report.add(f"{name}[n={n}]", True)
    else:
        report.add(f"{name}[n={n}]", False, (f"degree {n}", f"entry {diff}"))


def check_duplicial(d: DuplicialModule) -> Report:
    """All simplicial and duplicial identities within the stored range."""
    report = Report("duplicial identities")
    nmax = d.n_max
    for n in range(nmax + 1):
        deg = d.degrees[n]
        # simplicial: faces
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    _record(
                        report, f"d{i}d{j}", n,
                        compose(d.face(n - 1, i), deg.faces[j]),
                        compose(d.face(n - 1, j - 1), deg.faces[i]),
                    )
        # simplicial: degeneracies
        if n + 2 <= nmax:
            for j in range(n + 1):
                for i in range(j + 1):
                    _record(
                        report, f"s{i}s{j}", n,
                        compose(d.degeneracy(n + 1, i), deg.degeneracies[j]),
                        compose(d.degeneracy(n + 1, j + 1), deg.degeneracies[i]),
                    )
        # mixed
        if n < nmax:
            ident = LinMap.identity(deg.space, d.field)
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = compose(d.face(n + 1, i), deg.degeneracies[j])
                    if i in (j, j + 1):
                        _record(report, f"d{i}s{j}-id", n, lhs, ident)
                    elif i < j:
                        if n >= 1:
                            _record(
                                report, f"d{i}s{j}", n, lhs,
                                compose(d.degeneracy(n - 1, j - 1), deg.faces[i]),
                            )
                    else:
                        if n >= 1:
                            _record(
                                report, f"d{i}s{j}", n, lhs,
                                compose(d.degeneracy(n - 1, j), deg.faces[i - 1]),
                            )
        # duplicial
        t = deg.t
        if n >= 1:
            _record(report, "d0t-dn", n, compose(deg.faces[0], t), deg.faces[n])
            for i in range(1, n + 1):
                _record(
                    report, f"d{i}t", n,
                    compose(deg.faces[i], t),
                    compose(d.t(n - 1), deg.faces[i - 1]),
                )
        if n < nmax:
            _record(
                report, "s0t-ttsn", n,
                compose(deg.degeneracies[0], t),
                compose_all(d.t(n + 1), d.t(n + 1), deg.degeneracies[n]),
            )
            for i in range(1, n + 1):
                _record(
                    report, f"s{i}t", n,
                    compose(deg.degeneracies[i], t),
                    compose(d.t(n + 1), deg.degeneracies[i - 1]),
                )
    return report


def check_cyclic(d: DuplicialModule) -> list[bool]:
    """Degreewise flags: t^(n+1) = id."""
    flags = []
    for n in range(d.n_max + 1):
        ident = LinMap.identity(d.degrees[n].space, d.field)
        flags.append(d.t_power(n, n + 1) == ident)
    return flags


def invariant_subobject(d: DuplicialModule, operators: list[LinMap]) -> DuplicialModule:
    """Restrict to the degreewise fixed spaces of t^(n+1).

    The supplied per-degree operators must equal t^(n+1) and commute with
    every structural map in range (both checked); the restriction of the
    operators to ker(op - id) is then a cyclic duplicial module.
    """
    nmax = d.n_max
    if len(operators) != nmax + 1:
        raise ValidationError("need one operator per stored degree")
    field = d.field
    for n in range(nmax + 1):
        if operators[n] != d.t_power(n, n + 1):
            raise ValidationError(
                f"operator at degree {n} differs from t^{n + 1}",
                axiom="operator-is-t-power",
            )
    for n in range(nmax + 1):
        deg = d.degrees[n]
        if compose(deg.t, operators[n]) != compose(operators[n], deg.t):
            raise ValidationError(
                f"degree {n}: operator does not commute with t",
                axiom="commutes-with-t",
            )
        for i, face in enumerate(deg.faces):
            if compose(face, operators[n]) != compose(operators[n - 1], face):
                raise ValidationError(
                    f"degree {n}: operator does not commute with d{i}",
                    axiom="commutes-with-faces",
                )
        for i, s in enumerate(deg.degeneracies):
            if compose(s, operators[n]) != compose(operators[n + 1], s):
                raise ValidationError(
                    f"degree {n}: operator does not commute with s{i}",
                    axiom="commutes-with-degeneracies",
                )

    inclusions = []
    solvers = []
    spaces = []
    for n in range(nmax + 1):
        deg = d.degrees[n]
        ident = LinMap.identity(deg.space, field)
        fixed = kernel_basis(operators[n] - ident)
        space = Space(f"fix({deg.space.name})", len(fixed))
        inclusions.append(LinMap.from_cols(space, deg.space, field, fixed))
        solvers.append(SpanSolver(fixed, field))
        spaces.append(space)

    def restrict(f: LinMap, src: int, tgt: int) -> LinMap:
        cols = []
        for col in compose(f, inclusions[src]).cols:
            expressed = solvers[tgt].express(col)
            if expressed is None:
                raise InternalError("map does not preserve the fixed subspaces")
            cols.append(expressed)
        return LinMap.from_cols(spaces[src], spaces[tgt], field, cols)

    degrees = []
    for n in range(nmax + 1):
        deg = d.degrees[n]
        faces = tuple(restrict(f, n, n - 1) for f in deg.faces)
        degeneracies = tuple(restrict(s, n, n + 1) for s in deg.degeneracies)
        t = restrict(deg.t, n, n)
        degrees.append(Degree(spaces[n], faces, degeneracies, t))
    return DuplicialModule(degrees, field)
