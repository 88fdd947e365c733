"""Tensoring endofunctors X -> P (x) X on finite-dimensional vector
spaces, their natural transformations, and (co)monads in this shape.

Everything is canonicalized to LEFT tensoring.  A natural transformation
between left-tensoring functors is exactly a linear map of carriers (its
component at X is map (x) id_X), so naturality is automatic and equality
of transformations is matrix equality of carrier maps.

Data tensoring on the right (X -> X (x) P) is translated on ingestion by
the symmetry flip.  The translation reverses composition order, so where
a right-tensoring monad multiplies with mul, the canonical left form
multiplies with mul . flip (the opposite algebra); rebracketing laws
become the flip of carriers.  The constructors in the law and bimodule
modules apply this table; see the README for the worked dictionary.
"""

from __future__ import annotations

from .errors import DomainError
from .field import Field
from .linalg import LinMap, Space, compose, tensor, tensor_space, unit_space
from .structures import Algebra, Coalgebra, check_algebra, check_coalgebra


class TensorFunctor:
    """The endofunctor X -> P (x) X, with its composition history."""

    def __init__(self, carrier: Space, field: Field, word: tuple[Space, ...] | None = None):
        self.carrier = carrier
        self.field = field
        self.word = tuple(word) if word is not None else (carrier,)
        prod = 1
        for w in self.word:
            prod *= w.dim
        if prod != carrier.dim:
            raise DomainError("functor word does not multiply to the carrier dim")

    def __repr__(self):
        return f"TensorFunctor({self.carrier.name}, dim={self.carrier.dim})"

    def __eq__(self, other):
        return (
            isinstance(other, TensorFunctor)
            and self.field == other.field
            and self.carrier == other.carrier
            and self.word == other.word
        )

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def on_object(self, x: Space) -> Space:
        return tensor_space(self.carrier, x)

    def on_map(self, f: LinMap, src: Space | None = None, tgt: Space | None = None) -> LinMap:
        return tensor(LinMap.identity(self.carrier, self.field), f)

    def identity_nat(self) -> "TensorNat":
        return TensorNat(self, self, LinMap.identity(self.carrier, self.field))


def identity_functor(field: Field) -> TensorFunctor:
    return TensorFunctor(unit_space("Id"), field, word=())


def compose_functors(f: TensorFunctor, g: TensorFunctor) -> TensorFunctor:
    """f . g, acting as X -> P_f (x) (P_g (x) X); words concatenate."""
    if f.field != g.field:
        raise DomainError("field mismatch in compose_functors")
    return TensorFunctor(
        tensor_space(f.carrier, g.carrier), f.field, word=f.word + g.word
    )


class TensorNat:
    """A natural transformation between tensoring functors, stored as its
    carrier map; the component at X is map (x) id_X."""

    def __init__(self, source: TensorFunctor, target: TensorFunctor, map: LinMap):
        if map.domain.dim != source.dim or map.codomain.dim != target.dim:
            raise DomainError("carrier map does not match functor dims")
        self.source = source
        self.target = target
        self.map = map

    def __repr__(self):
        return f"TensorNat({self.source.carrier.name}->{self.target.carrier.name})"

    def __eq__(self, other):
        return isinstance(other, TensorNat) and self.map == other.map

    @property
    def field(self) -> Field:
        return self.map.field

    def component_at(self, x: Space) -> LinMap:
        return tensor(self.map, LinMap.identity(x, self.field))

    def then(self, other: "TensorNat") -> "TensorNat":
        """Vertical composition: other after self."""
        return TensorNat(self.source, other.target, compose(other.map, self.map))


def whisker(n: TensorNat, left: TensorFunctor, right: TensorFunctor) -> TensorNat:
    """The transformation left n right with carrier id (x) map (x) id."""
    if n.field != left.field or n.field != right.field:
        raise DomainError("field mismatch in whisker")
    field = n.field
    map_ = tensor(
        tensor(LinMap.identity(left.carrier, field), n.map),
        LinMap.identity(right.carrier, field),
    )
    return TensorNat(
        compose_functors(compose_functors(left, n.source), right),
        compose_functors(compose_functors(left, n.target), right),
        map_,
    )


class TensorComonad:
    """A comonad whose functor is tensoring by a coalgebra carrier."""

    def __init__(self, functor: TensorFunctor, coalgebra: Coalgebra):
        if functor.dim != coalgebra.carrier.dim:
            raise DomainError("comonad functor and coalgebra carriers differ")
        self.functor = functor
        self.coalgebra = coalgebra
        self.field = functor.field

    def __repr__(self):
        return f"TensorComonad({self.coalgebra.name})"

    def __eq__(self, other):
        return (
            isinstance(other, TensorComonad)
            and self.functor == other.functor
            and self.coalgebra == other.coalgebra
        )

    @property
    def carrier(self) -> Space:
        return self.functor.carrier

    def on_object(self, x: Space) -> Space:
        return self.functor.on_object(x)

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return self.functor.on_map(f)

    def counit_at(self, x: Space) -> LinMap:
        return tensor(self.coalgebra.counit, LinMap.identity(x, self.field))

    def comul_at(self, x: Space) -> LinMap:
        return tensor(self.coalgebra.comul, LinMap.identity(x, self.field))

    def comul_nat(self) -> TensorNat:
        return TensorNat(
            self.functor, compose_functors(self.functor, self.functor), self.coalgebra.comul
        )


class TensorMonad:
    """A monad whose functor is tensoring by an algebra carrier."""

    def __init__(self, functor: TensorFunctor, algebra: Algebra):
        if functor.dim != algebra.carrier.dim:
            raise DomainError("monad functor and algebra carriers differ")
        self.functor = functor
        self.algebra = algebra
        self.field = functor.field

    def __repr__(self):
        return f"TensorMonad({self.algebra.name})"

    def __eq__(self, other):
        return (
            isinstance(other, TensorMonad)
            and self.functor == other.functor
            and self.algebra == other.algebra
        )

    @property
    def carrier(self) -> Space:
        return self.functor.carrier

    def on_object(self, x: Space) -> Space:
        return self.functor.on_object(x)

    def on_map(self, f: LinMap, src=None, tgt=None) -> LinMap:
        return self.functor.on_map(f)

    def unit_at(self, x: Space) -> LinMap:
        return tensor(self.algebra.unit, LinMap.identity(x, self.field))

    def mul_at(self, x: Space) -> LinMap:
        return tensor(self.algebra.mul, LinMap.identity(x, self.field))


def comonad_from_coalgebra(c: Coalgebra) -> TensorComonad:
    report = check_coalgebra(c)
    report.raise_if_failed()
    return TensorComonad(TensorFunctor(c.carrier, c.field), c)


def monad_from_algebra(a: Algebra) -> TensorMonad:
    report = check_algebra(a)
    report.raise_if_failed()
    return TensorMonad(TensorFunctor(a.carrier, a.field), a)


def monad_from_right_tensoring(a: Algebra) -> TensorMonad:
    """Canonicalize the right-tensoring monad X -> X (x) A to left form:
    the carrier multiplies in the opposite order (translation table)."""
    return monad_from_algebra(a.opposite())
