"""Exact linear algebra over Q and F_p: spaces, maps, Kronecker products,
ranks, kernels, quotients.

Index convention (global, single source of truth): tensor products are
left-major.  Basis vector (i, j) of U (x) V has flat index i*dim(V) + j,
so the leftmost tensor factor varies slowest.  Every formula translation
elsewhere in the package relies on this layout.

Matrices are stored column-sparse ({row: scalar} per column); the dense
``rows`` table is the serialization contract.  All values are immutable
after construction and all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DomainError, SingularError
from .field import Field, QQ


class Space:
    """A named finite-dimensional vector space with labelled basis."""

    __slots__ = ("name", "dim", "labels")

    def __init__(self, name: str, dim: int, labels: Sequence[str] | None = None):
        if dim < 0:
            raise DomainError("dimension must be nonnegative")
        if labels is None:
            labels = tuple(f"e{i}" for i in range(dim))
        labels = tuple(labels)
        if len(labels) != dim:
            raise DomainError(f"space {name}: {len(labels)} labels for dim {dim}")
        if len(set(labels)) != dim:
            raise DomainError(f"space {name}: duplicate basis labels")
        self.name = name
        self.dim = dim
        self.labels = labels

    def __repr__(self):
        return f"Space({self.name}, dim={self.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, Space)
            and self.dim == other.dim
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.dim, self.labels))


def tensor_space(u: Space, v: Space, name: str | None = None) -> Space:
    """Product space in the left-major convention."""
    if name is None:
        name = f"{u.name}*{v.name}"
    labels = tuple(f"{a}*{b}" for a in u.labels for b in v.labels)
    return Space(name, u.dim * v.dim, labels)


def unit_space(name: str = "k") -> Space:
    return Space(name, 1, ("1",))


class LinMap:
    """An exact matrix between named spaces.

    ``rows[r][c]`` is the coefficient of codomain basis vector r in the
    image of domain basis vector c.  Internally column-sparse; the dense
    table is reconstructed on demand.  Composition and equality compare
    shapes and entries, not space names (derived spaces get fresh names).
    """

    __slots__ = ("domain", "codomain", "field", "cols")

    def __init__(self, domain: Space, codomain: Space, field: Field, cols):
        self.domain = domain
        self.codomain = codomain
        self.field = field
        self.cols = tuple(cols)
        if len(self.cols) != domain.dim:
            raise DomainError(
                f"map has {len(self.cols)} columns for domain dim {domain.dim}"
            )

    # construction

    @classmethod
    def from_rows(cls, domain, codomain, field, rows) -> "LinMap":
        rows = list(rows)
        if len(rows) != codomain.dim:
            raise DomainError(
                f"{len(rows)} rows for codomain dim {codomain.dim}"
            )
        cols = [dict() for _ in range(domain.dim)]
        for r, row in enumerate(rows):
            if len(row) != domain.dim:
                raise DomainError(f"row {r} has {len(row)} entries for dim {domain.dim}")
            for c, value in enumerate(row):
                value = field.of(value)
                if value:
                    cols[c][r] = value
        return cls(domain, codomain, field, cols)

    @classmethod
    def from_cols(cls, domain, codomain, field, cols) -> "LinMap":
        clean = []
        for col in cols:
            clean.append({r: v for r, v in col.items() if v})
        return cls(domain, codomain, field, clean)

    @classmethod
    def from_basis_images(cls, domain, codomain, field, images) -> "LinMap":
        """images[j] is a sparse {row: scalar} image of domain basis j."""
        return cls.from_cols(domain, codomain, field, images)

    @classmethod
    def identity(cls, space: Space, field: Field) -> "LinMap":
        return cls(space, space, field, [{i: field.one} for i in range(space.dim)])

    @classmethod
    def zero(cls, domain: Space, codomain: Space, field: Field) -> "LinMap":
        return cls(domain, codomain, field, [{} for _ in range(domain.dim)])

    # dense views

    @property
    def rows(self):
        table = [[self.field.zero] * self.domain.dim for _ in range(self.codomain.dim)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                table[r][c] = v
        return table

    def entry(self, r: int, c: int):
        return self.cols[c].get(r, self.field.zero)

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse coordinate vector."""
        field = self.field
        out: dict = {}
        for c, coeff in vec.items():
            if not coeff:
                continue
            for r, v in self.cols[c].items():
                acc = field.add(out.get(r, field.zero), field.mul(v, coeff))
                if acc:
                    out[r] = acc
                elif r in out:
                    del out[r]
        return out

    def __repr__(self):
        return f"LinMap({self.domain.name}->{self.codomain.name}, {self.codomain.dim}x{self.domain.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, LinMap)
            and self.field == other.field
            and self.domain.dim == other.domain.dim
            and self.codomain.dim == other.codomain.dim
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash(
            (
                self.field,
                self.domain.dim,
                self.codomain.dim,
                tuple(tuple(sorted(col.items())) for col in self.cols),
            )
        )

    # arithmetic

    def __add__(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        field = self.field
        cols = []
        for a, b in zip(self.cols, other.cols):
            col = dict(a)
            for r, v in b.items():
                acc = field.add(col.get(r, field.zero), v)
                if acc:
                    col[r] = acc
                elif r in col:
                    del col[r]
            cols.append(col)
        return LinMap(self.domain, self.codomain, field, cols)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + other.scaled(self.field.neg(self.field.one))

    def scaled(self, scalar) -> "LinMap":
        field = self.field
        scalar = field.of(scalar)
        if not scalar:
            return LinMap.zero(self.domain, self.codomain, field)
        cols = [{r: field.mul(v, scalar) for r, v in col.items()} for col in self.cols]
        return LinMap(self.domain, self.codomain, field, cols)

    def _require_same_shape(self, other: "LinMap"):
        if self.field != other.field:
            raise DomainError("field mismatch")
        if (
            self.domain.dim != other.domain.dim
            or self.codomain.dim != other.codomain.dim
        ):
            raise DomainError("shape mismatch")

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)


def compose(g: LinMap, f: LinMap) -> LinMap:
    """Matrix product g.f (apply f first)."""
    if g.field != f.field:
        raise DomainError("field mismatch in compose")
    if g.domain.dim != f.codomain.dim:
        raise DomainError(
            f"compose: domain dim {g.domain.dim} != codomain dim {f.codomain.dim}"
        )
    field = g.field
    cols = []
    for col in f.cols:
        out: dict = {}
        for r, v in col.items():
            for r2, w in g.cols[r].items():
                acc = field.add(out.get(r2, field.zero), field.mul(w, v))
                if acc:
                    out[r2] = acc
                elif r2 in out:
                    del out[r2]
        cols.append(out)
    return LinMap(f.domain, g.codomain, field, cols)


def compose_all(*maps: LinMap) -> LinMap:
    """compose_all(f1, f2, ..., fn) = f1 . f2 . ... . fn."""
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = compose(f, result)
    return result


def tensor(f: LinMap, g: LinMap) -> LinMap:
    """Kronecker product in the left-major convention."""
    if f.field != g.field:
        raise DomainError("field mismatch in tensor")
    field = f.field
    dom = tensor_space(f.domain, g.domain)
    cod = tensor_space(f.codomain, g.codomain)
    gcod = g.codomain.dim
    gdom = g.domain.dim
    cols = []
    for cf in range(f.domain.dim):
        fcol = f.cols[cf]
        for cg in range(gdom):
            gcol = g.cols[cg]
            out = {}
            for rf, vf in fcol.items():
                base = rf * gcod
                for rg, vg in gcol.items():
                    out[base + rg] = field.mul(vf, vg)
            cols.append(out)
    return LinMap(dom, cod, field, cols)


def tensor_all(*maps: LinMap) -> LinMap:
    result = maps[0]
    for f in maps[1:]:
        result = tensor(result, f)
    return result


def flip_map(u: Space, v: Space, field: Field) -> LinMap:
    """The symmetry U (x) V -> V (x) U, e_(i,j) -> e_(j,i)."""
    dom = tensor_space(u, v)
    cod = tensor_space(v, u)
    cols = []
    for i in range(u.dim):
        for j in range(v.dim):
            cols.append({j * u.dim + i: field.one})
    return LinMap(dom, cod, field, cols)


# Echelon machinery.  A fully reduced sparse basis: each stored vector is
# normalized to have entry 1 at its own pivot and no entries at any other
# pivot, which keeps reductions terminating and cheap on the nearly
# monomial matrices produced by tensor powers of small algebras.


class _Echelon:
    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.basis: dict[int, dict] = {}
        self.combos: dict[int, dict] = {}
        self.occurrences: dict[int, set] = {}

    def _unregister(self, pivot, vec):
        for i in vec:
            if i != pivot:
                occ = self.occurrences.get(i)
                if occ:
                    occ.discard(pivot)

    def _register(self, pivot, vec):
        for i in vec:
            if i != pivot:
                self.occurrences.setdefault(i, set()).add(pivot)

    def _axpy(self, target: dict, coeff, source: dict):
        field = self.field
        for i, v in source.items():
            acc = field.add(target.get(i, field.zero), field.mul(coeff, v))
            if acc:
                target[i] = acc
            elif i in target:
                del target[i]

    def reduce(self, vec: dict, combo: dict | None = None):
        """Fully reduce vec against the stored basis (in place copies)."""
        field = self.field
        vec = dict(vec)
        combo = dict(combo) if combo is not None else None
        while True:
            hit = None
            for i in vec:
                if i in self.basis:
                    hit = i
                    break
            if hit is None:
                return vec, combo
            coeff = field.neg(vec[hit])
            self._axpy(vec, coeff, self.basis[hit])
            if combo is not None:
                self._axpy(combo, coeff, self.combos[hit])

    def insert(self, vec: dict, combo: dict | None = None):
        """Insert a vector; returns the new pivot, or None if dependent.

        When dependent and tracking, ``self.last_combo`` holds the
        combination expressing the vector in terms of earlier ones.
        """
        vec, combo = self.reduce(vec, combo)
        if not vec:
            self.last_combo = combo
            return None
        field = self.field
        pivot = min(vec)
        scale = field.inv(vec[pivot])
        vec = {i: field.mul(v, scale) for i, v in vec.items()}
        if combo is not None:
            combo = {i: field.mul(v, scale) for i, v in combo.items()}
        # eliminate the new pivot from stored vectors
        for owner in list(self.occurrences.get(pivot, ())):
            stored = self.basis[owner]
            coeff = field.neg(stored[pivot])
            self._unregister(owner, stored)
            self._axpy(stored, coeff, vec)
            if self.track:
                self._axpy(self.combos[owner], coeff, combo)
            self._register(owner, stored)
        self.occurrences.pop(pivot, None)
        self.basis[pivot] = vec
        if self.track:
            self.combos[pivot] = combo or {}
        self._register(pivot, vec)
        return pivot

    @property
    def rank(self) -> int:
        return len(self.basis)


def rank(f: LinMap) -> int:
    ech = _Echelon(f.field)
    for col in f.cols:
        ech.insert(col)
    return ech.rank


def kernel_basis(f: LinMap) -> list[dict]:
    """Sparse coordinate vectors spanning ker f, in a canonical order."""
    field = f.field
    ech = _Echelon(field, track=True)
    kernel = []
    for j, col in enumerate(f.cols):
        if ech.insert(col, {j: field.one}) is None:
            # the tracked combination sums to zero; its j-entry is 1, so it
            # is already in canonical form
            kernel.append(dict(ech.last_combo))
    return kernel


def image_basis(f: LinMap) -> list[dict]:
    ech = _Echelon(f.field)
    for col in f.cols:
        ech.insert(col)
    return [dict(ech.basis[p]) for p in sorted(ech.basis)]


def invert(f: LinMap) -> LinMap:
    """Exact inverse of a square nonsingular map."""
    n = f.domain.dim
    if f.codomain.dim != n:
        raise DomainError("invert: map is not square")
    field = f.field
    ech = _Echelon(field, track=True)
    for j, col in enumerate(f.cols):
        if ech.insert(col, {j: field.one}) is None:
            raise SingularError("invert: singular map")
    # all indices are pivots, so each stored vector is a single unit entry
    cols = [dict(ech.combos[p]) for p in range(n)]
    return LinMap(f.codomain, f.domain, field, cols)


class Quotient:
    """A quotient space V/span(W) with projection and a chosen section."""

    __slots__ = ("space", "projection", "section")

    def __init__(self, space: Space, projection: LinMap, section: LinMap):
        self.space = space
        self.projection = projection
        self.section = section


def quotient_with_section(
    v: Space, w: Iterable[dict], field: Field, name: str | None = None
) -> Quotient:
    ech = _Echelon(field)
    for vec in w:
        ech.insert(vec)
    pivots = ech.basis
    surviving = [i for i in range(v.dim) if i not in pivots]
    position = {i: k for k, i in enumerate(surviving)}
    qspace = Space(
        name or f"{v.name}/~",
        len(surviving),
        tuple(v.labels[i] for i in surviving),
    )
    cols = []
    for i in range(v.dim):
        if i in pivots:
            col = {}
            for j, c in pivots[i].items():
                if j != i:
                    col[position[j]] = field.neg(c)
            cols.append(col)
        else:
            cols.append({position[i]: field.one})
    projection = LinMap(v, qspace, field, cols)
    section = LinMap(
        qspace, v, field, [{i: field.one} for i in surviving]
    )
    return Quotient(qspace, projection, section)


def quotient(v: Space, w: Iterable[dict], field: Field) -> tuple[Space, LinMap]:
    """Quotient of v by the span of the sparse vectors w; returns the
    quotient space and the canonical projection."""
    q = quotient_with_section(v, w, field)
    return q.space, q.projection


class SpanSolver:
    """Expresses vectors in a fixed spanning list, tracking combinations."""

    def __init__(self, vectors: Sequence[dict], field: Field):
        self.field = field
        self._ech = _Echelon(field, track=True)
        for j, vec in enumerate(vectors):
            self._ech.insert(vec, {j: field.one})

    def express(self, vec: dict) -> dict | None:
        """Coefficients c with sum c_j * vectors[j] = vec, or None."""
        reduced, combo = self._ech.reduce(vec, {})
        if reduced:
            return None
        return {j: self.field.neg(c) for j, c in combo.items()}


def vec_dense(vec: dict, dim: int, field: Field) -> list:
    out = [field.zero] * dim
    for i, v in vec.items():
        out[i] = v
    return out


def vec_sparse(values, field: Field) -> dict:
    return {i: field.of(v) for i, v in enumerate(values) if field.of(v)}
