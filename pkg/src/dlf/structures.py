"""Finite-dimensional algebras, coalgebras, Hopf algebras and (bi)modules
given by structure constants, with exhaustive exact axiom checkers.

Checkers evaluate every axiom as an exact matrix equation, which is
equivalent to evaluating it on all basis tuples; a failing axiom reports
the basis tuple of the first bad column as a witness.  Constructors only
enforce shapes (domain-error); axiom failures are diagnosed by the
checkers so that deliberately broken structures can be inspected.
"""

from __future__ import annotations

from .errors import DomainError
from .field import Field
from .linalg import (
    LinMap,
    Space,
    compose,
    compose_all,
    flip_map,
    quotient,
    quotient_with_section,
    tensor,
    tensor_space,
    unit_space,
)
from .report import Report, check_equal

KSPACE = unit_space()


def _expect(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


class Algebra:
    """A unital associative algebra: carrier, mul: A(x)A -> A, unit: k -> A."""

    def __init__(self, name: str, carrier: Space, mul: LinMap, unit: LinMap, field: Field):
        d = carrier.dim
        _expect(mul.domain.dim == d * d and mul.codomain.dim == d, f"{name}: bad mul shape")
        _expect(unit.domain.dim == 1 and unit.codomain.dim == d, f"{name}: bad unit shape")
        _expect(mul.field == field and unit.field == field, f"{name}: field mismatch")
        self.name = name
        self.carrier = carrier
        self.mul = mul
        self.unit = unit
        self.field = field

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.carrier.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.carrier == other.carrier
            and self.mul == other.mul
            and self.unit == other.unit
        )

    def identity(self) -> LinMap:
        return LinMap.identity(self.carrier, self.field)

    def one(self) -> dict:
        return self.unit.cols[0]

    def multiply(self, u: dict, v: dict) -> dict:
        """Product of two sparse coordinate vectors."""
        field = self.field
        dim = self.carrier.dim
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                col = self.mul.cols[i * dim + j]
                coeff = field.mul(a, b)
                for r, w in col.items():
                    acc = field.add(out.get(r, field.zero), field.mul(w, coeff))
                    if acc:
                        out[r] = acc
                    elif r in out:
                        del out[r]
        return out

    def opposite(self) -> "Algebra":
        """Same carrier with reversed multiplication."""
        flip = flip_map(self.carrier, self.carrier, self.field)
        return Algebra(
            f"{self.name}^op", self.carrier, compose(self.mul, flip), self.unit, self.field
        )


class Coalgebra:
    """A coassociative counital coalgebra: comul: C -> C(x)C, counit: C -> k."""

    def __init__(self, name: str, carrier: Space, comul: LinMap, counit: LinMap, field: Field):
        d = carrier.dim
        _expect(comul.domain.dim == d and comul.codomain.dim == d * d, f"{name}: bad comul shape")
        _expect(counit.domain.dim == d and counit.codomain.dim == 1, f"{name}: bad counit shape")
        _expect(comul.field == field and counit.field == field, f"{name}: field mismatch")
        self.name = name
        self.carrier = carrier
        self.comul = comul
        self.counit = counit
        self.field = field

    def __repr__(self):
        return f"Coalgebra({self.name}, dim={self.carrier.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Coalgebra)
            and self.carrier == other.carrier
            and self.comul == other.comul
            and self.counit == other.counit
        )

    def identity(self) -> LinMap:
        return LinMap.identity(self.carrier, self.field)


class HopfAlgebra:
    """Compatible algebra + coalgebra on one carrier with an antipode."""

    def __init__(self, name: str, algebra: Algebra, coalgebra: Coalgebra, antipode: LinMap):
        _expect(
            algebra.carrier.dim == coalgebra.carrier.dim,
            f"{name}: algebra and coalgebra carriers differ",
        )
        d = algebra.carrier.dim
        _expect(
            antipode.domain.dim == d and antipode.codomain.dim == d,
            f"{name}: bad antipode shape",
        )
        self.name = name
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode
        self.carrier = algebra.carrier
        self.field = algebra.field

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.carrier.dim})"


class AlgebraMorphism:
    """A linear map between algebras respecting mul and unit."""

    def __init__(self, name: str, source: Algebra, target: Algebra, map: LinMap):
        _expect(
            map.domain.dim == source.carrier.dim and map.codomain.dim == target.carrier.dim,
            f"{name}: bad morphism shape",
        )
        self.name = name
        self.source = source
        self.target = target
        self.map = map

    def then(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """other . self (apply self first)."""
        _expect(self.target is other.source or self.target == other.source,
                "morphism composition mismatch")
        return AlgebraMorphism(
            f"{other.name}.{self.name}", self.source, other.target,
            compose(other.map, self.map),
        )

    @classmethod
    def identity(cls, a: Algebra) -> "AlgebraMorphism":
        return cls(f"id_{a.name}", a, a, a.identity())


class Bimodule:
    """An (A,A)-bimodule: commuting unital left and right actions."""

    def __init__(self, name: str, base: Algebra, carrier: Space,
                 left_action: LinMap, right_action: LinMap):
        d, m = base.carrier.dim, carrier.dim
        _expect(left_action.domain.dim == d * m and left_action.codomain.dim == m,
                f"{name}: bad left action shape")
        _expect(right_action.domain.dim == m * d and right_action.codomain.dim == m,
                f"{name}: bad right action shape")
        self.name = name
        self.base = base
        self.carrier = carrier
        self.left_action = left_action
        self.right_action = right_action
        self.field = base.field

    def __repr__(self):
        return f"Bimodule({self.name}, dim={self.carrier.dim})"


class RightModule:
    """A right module over an algebra: action P(x)U -> P."""

    def __init__(self, name: str, algebra: Algebra, carrier: Space, action: LinMap):
        d, m = algebra.carrier.dim, carrier.dim
        _expect(action.domain.dim == m * d and action.codomain.dim == m,
                f"{name}: bad action shape")
        self.name = name
        self.algebra = algebra
        self.carrier = carrier
        self.action = action
        self.field = algebra.field


class DoubleModule:
    """Two commuting left actions, of B and of C (a (B, C^op)-bimodule)."""

    def __init__(self, name: str, left: Algebra, right: Algebra, carrier: Space,
                 left_act: LinMap, right_act: LinMap):
        _expect(left_act.domain.dim == left.carrier.dim * carrier.dim,
                f"{name}: bad B action shape")
        _expect(right_act.domain.dim == right.carrier.dim * carrier.dim,
                f"{name}: bad C action shape")
        self.name = name
        self.left = left
        self.right = right
        self.carrier = carrier
        self.left_act = left_act
        self.right_act = right_act
        self.field = left.field


# checkers


def check_algebra(a: Algebra) -> Report:
    report = Report(f"algebra {a.name}")
    field = a.field
    ident = a.identity()
    check_equal(
        report, "associativity",
        compose(a.mul, tensor(a.mul, ident)),
        compose(a.mul, tensor(ident, a.mul)),
    )
    check_equal(report, "unit-left", compose(a.mul, tensor(a.unit, ident)), ident)
    check_equal(report, "unit-right", compose(a.mul, tensor(ident, a.unit)), ident)
    return report


def check_coalgebra(c: Coalgebra) -> Report:
    report = Report(f"coalgebra {c.name}")
    ident = c.identity()
    check_equal(
        report, "coassociativity",
        compose(tensor(c.comul, ident), c.comul),
        compose(tensor(ident, c.comul), c.comul),
    )
    check_equal(report, "counit-left", compose(tensor(c.counit, ident), c.comul), ident)
    check_equal(report, "counit-right", compose(tensor(ident, c.counit), c.comul), ident)
    return report


def check_algebra_morphism(f: AlgebraMorphism) -> Report:
    report = Report(f"morphism {f.name}")
    check_equal(
        report, "multiplicative",
        compose(f.map, f.source.mul),
        compose(f.target.mul, tensor(f.map, f.map)),
    )
    check_equal(report, "unital", compose(f.map, f.source.unit), f.target.unit)
    return report


def check_hopf(h: HopfAlgebra) -> Report:
    report = Report(f"hopf {h.name}")
    report.extend(check_algebra(h.algebra))
    report.extend(check_coalgebra(h.coalgebra))
    a, c, s = h.algebra, h.coalgebra, h.antipode
    field = h.field
    ident = a.identity()
    mid_flip = tensor(tensor(ident, flip_map(h.carrier, h.carrier, field)), ident)
    check_equal(
        report, "comul-multiplicative",
        compose(c.comul, a.mul),
        compose_all(tensor(a.mul, a.mul), mid_flip, tensor(c.comul, c.comul)),
    )
    check_equal(report, "comul-unital", compose(c.comul, a.unit), tensor(a.unit, a.unit))
    check_equal(
        report, "counit-multiplicative",
        compose(c.counit, a.mul),
        tensor(c.counit, c.counit),
    )
    check_equal(
        report, "counit-unital",
        compose(c.counit, a.unit),
        LinMap.identity(KSPACE, field),
    )
    convolution_unit = compose(a.unit, c.counit)
    check_equal(
        report, "antipode-left",
        compose_all(a.mul, tensor(s, ident), c.comul),
        convolution_unit,
    )
    check_equal(
        report, "antipode-right",
        compose_all(a.mul, tensor(ident, s), c.comul),
        convolution_unit,
    )
    return report


def check_bimodule(m: Bimodule) -> Report:
    report = Report(f"bimodule {m.name}")
    a = m.base
    ida = a.identity()
    idm = LinMap.identity(m.carrier, m.field)
    check_equal(report, "left-unital",
                compose(m.left_action, tensor(a.unit, idm)), idm)
    check_equal(
        report, "left-associative",
        compose(m.left_action, tensor(a.mul, idm)),
        compose(m.left_action, tensor(ida, m.left_action)),
    )
    check_equal(report, "right-unital",
                compose(m.right_action, tensor(idm, a.unit)), idm)
    check_equal(
        report, "right-associative",
        compose(m.right_action, tensor(idm, a.mul)),
        compose(m.right_action, tensor(m.right_action, ida)),
    )
    check_equal(
        report, "actions-commute",
        compose(m.left_action, tensor(ida, m.right_action)),
        compose(m.right_action, tensor(m.left_action, ida)),
    )
    return report


def check_right_module(p: RightModule) -> Report:
    report = Report(f"right-module {p.name}")
    a = p.algebra
    ida = a.identity()
    idp = LinMap.identity(p.carrier, p.field)
    check_equal(report, "unital", compose(p.action, tensor(idp, a.unit)), idp)
    check_equal(
        report, "associative",
        compose(p.action, tensor(idp, a.mul)),
        compose(p.action, tensor(p.action, ida)),
    )
    return report


def check_double_module(m: DoubleModule) -> Report:
    report = Report(f"double-module {m.name}")
    idb = m.left.identity()
    idc = m.right.identity()
    idm = LinMap.identity(m.carrier, m.field)
    check_equal(report, "B-unital", compose(m.left_act, tensor(m.left.unit, idm)), idm)
    check_equal(
        report, "B-associative",
        compose(m.left_act, tensor(m.left.mul, idm)),
        compose(m.left_act, tensor(idb, m.left_act)),
    )
    check_equal(report, "C-unital", compose(m.right_act, tensor(m.right.unit, idm)), idm)
    check_equal(
        report, "C-associative",
        compose(m.right_act, tensor(m.right.mul, idm)),
        compose(m.right_act, tensor(idc, m.right_act)),
    )
    swap = flip_map(m.left.carrier, m.right.carrier, m.field)
    check_equal(
        report, "actions-commute",
        compose(m.left_act, tensor(idb, m.right_act)),
        compose_all(m.right_act, tensor(idc, m.left_act), tensor(swap, idm)),
    )
    return report


# built-in structures


def _structure_maps(field, carrier, mul_table, unit_vec):
    """mul_table[(i, j)] = sparse product of basis i and j."""
    d = carrier.dim
    sq = tensor_space(carrier, carrier)
    cols = []
    for i in range(d):
        for j in range(d):
            cols.append(mul_table[(i, j)])
    mul = LinMap.from_cols(sq, carrier, field, cols)
    unit = LinMap.from_cols(KSPACE, carrier, field, [unit_vec])
    return mul, unit


def group_algebra(field: Field, table, names=None, name: str | None = None) -> HopfAlgebra:
    """The group algebra of a finite group given by its Cayley table,
    with its canonical Hopf structure (group-like comultiplication,
    inverse antipode)."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not 0 <= t < n for t in row):
            raise DomainError("group table is not square or out of range")
    identity = None
    for e in range(n):
        if all(table[e][j] == j and table[j][e] == j for j in range(n)):
            identity = e
            break
    if identity is None:
        raise DomainError("group table has no identity")
    inverse = {}
    for i in range(n):
        for j in range(n):
            if table[i][j] == identity and table[j][i] == identity:
                inverse[i] = j
                break
        if i not in inverse:
            raise DomainError(f"group element {i} has no inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise DomainError("group table is not associative")
    if names is None:
        names = ["e"] + [f"g{i}" if n > 2 else "g" for i in range(1, n)]
    if name is None:
        name = f"k[{'C' + str(n)}]"
    carrier = Space(name, n, names)
    mul_table = {(i, j): {table[i][j]: field.one} for i in range(n) for j in range(n)}
    mul, unit = _structure_maps(field, carrier, mul_table, {identity: field.one})
    algebra = Algebra(name, carrier, mul, unit, field)
    comul = LinMap.from_cols(
        carrier, tensor_space(carrier, carrier), field,
        [{i * n + i: field.one} for i in range(n)],
    )
    counit = LinMap.from_cols(carrier, KSPACE, field, [{0: field.one}] * n)
    coalgebra = Coalgebra(name, carrier, comul, counit, field)
    antipode = LinMap.from_cols(
        carrier, carrier, field, [{inverse[i]: field.one} for i in range(n)]
    )
    return HopfAlgebra(name, algebra, coalgebra, antipode)


def cyclic_group_algebra(field: Field, n: int) -> HopfAlgebra:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + (["g"] if n == 2 else [f"g{i}" for i in range(1, n)])
    return group_algebra(field, table, names, name=f"QC{n}" if field.characteristic == 0 else f"F{field.characteristic}C{n}")


def truncated_poly(field: Field, n: int) -> Algebra:
    """k[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise DomainError("truncated_poly needs n >= 1")
    labels = ["1"] + [f"x{i}" if i > 1 else "x" for i in range(1, n)]
    carrier = Space(f"k[x]/(x^{n})", n, labels)
    mul_table = {}
    for i in range(n):
        for j in range(n):
            mul_table[(i, j)] = {i + j: field.one} if i + j < n else {}
    mul, unit = _structure_maps(field, carrier, mul_table, {0: field.one})
    return Algebra(carrier.name, carrier, mul, unit, field)


def matrix_algebra(field: Field, n: int) -> Algebra:
    """The full matrix algebra M_n with basis of matrix units e_ij."""
    if n < 1:
        raise DomainError("matrix_algebra needs n >= 1")
    labels = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    carrier = Space(f"M{n}", n * n, labels)
    mul_table = {}
    for a in range(n * n):
        i, j = divmod(a, n)
        for b in range(n * n):
            k, l = divmod(b, n)
            mul_table[(a, b)] = {i * n + l: field.one} if j == k else {}
    unit_vec = {i * n + i: field.one for i in range(n)}
    mul, unit = _structure_maps(field, carrier, mul_table, unit_vec)
    return Algebra(carrier.name, carrier, mul, unit, field)


def field_algebra(field: Field) -> Algebra:
    carrier = Space("k", 1, ("1",))
    mul = LinMap.from_cols(tensor_space(carrier, carrier), carrier, field, [{0: field.one}])
    unit = LinMap.from_cols(KSPACE, carrier, field, [{0: field.one}])
    return Algebra("k", carrier, mul, unit, field)


def builtin(field: Field, name: str, *params):
    """Built-in example structures by name."""
    if name == "group_algebra":
        return group_algebra(field, *params)
    if name == "truncated_poly":
        return truncated_poly(field, *params)
    if name == "matrix_algebra":
        return matrix_algebra(field, *params)
    if name == "field":
        return field_algebra(field)
    raise DomainError(f"unknown builtin {name!r}")


def regular_bimodule(a: Algebra) -> Bimodule:
    """The algebra as a bimodule over itself by multiplication."""
    return Bimodule(a.name, a, a.carrier, a.mul, a.mul)


def regular_right_module(h_or_a) -> RightModule:
    a = h_or_a.algebra if isinstance(h_or_a, HopfAlgebra) else h_or_a
    return RightModule(a.name, a, a.carrier, a.mul)


def trivial_right_module(h: HopfAlgebra) -> RightModule:
    """k with action through the counit."""
    field = h.field
    carrier = Space("k", 1, ("1",))
    action = compose(
        LinMap.identity(carrier, field),
        LinMap.from_cols(
            tensor_space(carrier, h.carrier), carrier, field,
            [dict(h.coalgebra.counit.cols[j]) for j in range(h.carrier.dim)],
        ),
    )
    return RightModule("k", h.algebra, carrier, action)


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product algebra on A (x) B."""
    if a.field != b.field:
        raise DomainError("field mismatch in tensor_algebra")
    field = a.field
    carrier = tensor_space(a.carrier, b.carrier)
    swap = flip_map(b.carrier, a.carrier, field)
    ida = a.identity()
    idb = b.identity()
    mul = compose(tensor(a.mul, b.mul), tensor(tensor(ida, swap), idb))
    unit = tensor(a.unit, b.unit)
    return Algebra(f"{a.name}(x){b.name}", carrier, mul, unit, field)


def left_multiplication(a: Algebra, vec: dict) -> LinMap:
    """The matrix of x -> vec * x."""
    field = a.field
    d = a.carrier.dim
    cols = []
    for x in range(d):
        out: dict = {}
        for i, coeff in vec.items():
            for r, v in a.mul.cols[i * d + x].items():
                acc = field.add(out.get(r, field.zero), field.mul(v, coeff))
                if acc:
                    out[r] = acc
                elif r in out:
                    del out[r]
        cols.append(out)
    return LinMap(a.carrier, a.carrier, field, cols)


def right_multiplication(a: Algebra, vec: dict) -> LinMap:
    """The matrix of x -> x * vec."""
    field = a.field
    d = a.carrier.dim
    cols = []
    for x in range(d):
        out: dict = {}
        for i, coeff in vec.items():
            for r, v in a.mul.cols[x * d + i].items():
                acc = field.add(out.get(r, field.zero), field.mul(v, coeff))
                if acc:
                    out[r] = acc
                elif r in out:
                    del out[r]
        cols.append(out)
    return LinMap(a.carrier, a.carrier, field, cols)


def action_by(action: LinMap, carrier_dim: int, vec: dict, field: Field) -> LinMap:
    """Partial application of a left action A (x) M -> M at a fixed sparse
    element of A, as a map M -> M."""
    cols = []
    for m in range(carrier_dim):
        out: dict = {}
        for i, coeff in vec.items():
            for r, v in action.cols[i * carrier_dim + m].items():
                acc = field.add(out.get(r, field.zero), field.mul(v, coeff))
                if acc:
                    out[r] = acc
                elif r in out:
                    del out[r]
        cols.append(out)
    space = action.codomain
    return LinMap(space, space, field, cols)


def commutator_subspace(m: Bimodule) -> list[dict]:
    """Sparse spanning set of {a.x - x.a} over all basis pairs."""
    field = m.field
    d = m.base.carrier.dim
    md = m.carrier.dim
    vectors = []
    for a in range(d):
        for x in range(md):
            left = m.left_action.cols[a * md + x]
            right = m.right_action.cols[x * d + a]
            vec = dict(left)
            for r, v in right.items():
                acc = field.sub(vec.get(r, field.zero), v)
                if acc:
                    vec[r] = acc
                elif r in vec:
                    del vec[r]
            if vec:
                vectors.append(vec)
    return vectors


def commutator_quotient(m: Bimodule) -> tuple[Space, LinMap]:
    """M / span{a.m - m.a}: the zeroth Hochschild homology of M."""
    return quotient(m.carrier, commutator_subspace(m), m.field)


def commutator_quotient_with_section(m: Bimodule):
    return quotient_with_section(
        m.carrier, commutator_subspace(m), m.field, name=f"H({m.name})"
    )
