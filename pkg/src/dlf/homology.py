"""Chain complexes and exact homology: the Hochschild complex of a
duplicial module and the (b, b', 1-t, N) cyclic bicomplex, totalized.

Sign conventions live entirely in this module: the stored duplicial
operator t is raw, and the bicomplex forms 1 - (-1)^n t and
N = sum_i (-1)^(n i) t^i in simplicial degree n.  Columns alternate b and
-b' where b' omits the last face.  These choices are pinned by the
HC(field) oracle and the duplicial identity suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .duplicial import DuplicialModule, check_cyclic, invariant_subobject
from .errors import CyclicityError, DomainError, InternalError, RangeError
from .field import Field
from .linalg import LinMap, Space, compose, rank


class ChainComplex:
    """Spaces indexed 0..N with differentials d_n: n -> n-1; d.d = 0 is
    verified eagerly (failure indicates an invalid input module)."""

    def __init__(self, spaces: list[Space], differentials: list[LinMap | None], field: Field):
        if len(differentials) != len(spaces):
            raise DomainError("need one differential slot per space")
        self.spaces = spaces
        self.differentials = differentials
        self.field = field
        for n in range(2, len(spaces)):
            d_n = differentials[n]
            d_prev = differentials[n - 1]
            if d_n is None or d_prev is None:
                continue
            if not compose(d_prev, d_n).is_zero():
                raise InternalError(f"differential squared is nonzero at degree {n}")

    @property
    def top(self) -> int:
        return len(self.spaces) - 1


@dataclass(frozen=True)
class HomologyTable:
    theory: str
    dims: tuple[int, ...]
    field: Field
    invariant_subobject_taken: bool = False

    def line(self) -> str:
        return " ".join(str(d) for d in self.dims)


def _alternating_face_sum(d: DuplicialModule, n: int, count: int) -> LinMap:
    field = d.field
    total = None
    sign = field.one
    for i in range(count):
        term = d.face(n, i).scaled(sign)
        total = term if total is None else total + term
        sign = field.neg(sign)
    return total


def hochschild_boundary(d: DuplicialModule, n: int) -> LinMap:
    """b = sum (-1)^i d_i over all n+1 faces."""
    return _alternating_face_sum(d, n, n + 1)


def reduced_boundary(d: DuplicialModule, n: int) -> LinMap:
    """b' = sum (-1)^i d_i with the last face omitted."""
    return _alternating_face_sum(d, n, n)


def hochschild_complex(d: DuplicialModule) -> ChainComplex:
    spaces = [d.space(n) for n in range(d.n_max + 1)]
    diffs: list[LinMap | None] = [None]
    for n in range(1, d.n_max + 1):
        diffs.append(hochschild_boundary(d, n))
    return ChainComplex(spaces, diffs, d.field)


def homology_dims(c: ChainComplex, up_to: int, theory: str = "HH") -> HomologyTable:
    """dim H_n = dim ker d_n - rank d_(n+1), exactly."""
    if up_to + 1 > c.top:
        raise RangeError(
            f"homology up to degree {up_to} needs differentials up to {up_to + 1}"
        )
    dims = []
    for n in range(up_to + 1):
        d_n = c.differentials[n]
        rank_n = rank(d_n) if d_n is not None else 0
        kernel_dim = c.spaces[n].dim - rank_n
        d_up = c.differentials[n + 1]
        rank_up = rank(d_up) if d_up is not None else 0
        dims.append(kernel_dim - rank_up)
    return HomologyTable(theory, tuple(dims), c.field)


def _block_total(spaces_by_block, maps, field: Field, name: str):
    """Assemble total-complex differentials from block data.

    spaces_by_block: list per total degree of [(key, Space)].
    maps: dict (src_key, tgt_key) -> LinMap.
    """
    totals = []
    offsets_per_degree = []
    for blocks in spaces_by_block:
        offsets = {}
        pos = 0
        for key, space in blocks:
            offsets[key] = pos
            pos += space.dim
        offsets_per_degree.append((offsets, pos))
    total_spaces = [
        Space(f"{name}{n}", offsets_per_degree[n][1])
        for n in range(len(spaces_by_block))
    ]
    diffs: list[LinMap | None] = [None]
    for n in range(1, len(spaces_by_block)):
        src_offsets, src_dim = offsets_per_degree[n]
        tgt_offsets, tgt_dim = offsets_per_degree[n - 1]
        cols = [dict() for _ in range(src_dim)]
        for (src_key, tgt_key), f in maps.items():
            if src_key not in src_offsets or tgt_key not in tgt_offsets:
                continue
            c0 = src_offsets[src_key]
            r0 = tgt_offsets[tgt_key]
            for c, col in enumerate(f.cols):
                target = cols[c0 + c]
                for r, v in col.items():
                    target[r0 + r] = v
        diffs.append(LinMap(total_spaces[n], total_spaces[n - 1], field, cols))
    return ChainComplex(total_spaces, diffs, field)


def cyclic_bicomplex(d: DuplicialModule, n_max: int) -> ChainComplex:
    """Total complex of the first-quadrant bicomplex with columns
    alternating (b, -b') and rows (1 - (-1)^q t, N).  Columns and rows
    0..n_max+1 are allocated so that H_n is exact for n <= n_max."""
    field = d.field
    p_char = field.characteristic
    if p_char != 0 and p_char <= n_max + 1:
        raise DomainError(
            f"cyclic homology up to degree {n_max} needs characteristic 0 or > {n_max + 1}"
        )
    if d.n_max < n_max + 1:
        raise RangeError(
            f"bicomplex to degree {n_max} needs the module stored to degree {n_max + 1}"
        )
    flags = check_cyclic(d)
    for q in range(n_max + 2):
        if not flags[q]:
            raise CyclicityError(
                f"t^{q + 1} is not the identity in degree {q}; "
                "extract the invariant subobject first"
            )
    extent = n_max + 1

    spaces_by_block = []
    for n in range(extent + 1):
        blocks = []
        for p in range(0, min(n, extent) + 1):
            q = n - p
            if q < 0 or q > d.n_max:
                continue
            blocks.append(((p, q), d.space(q)))
        spaces_by_block.append(blocks)

    maps = {}
    for p in range(0, extent + 1):
        for q in range(0, extent + 1 - p):
            if q >= 1:
                vertical = (
                    hochschild_boundary(d, q)
                    if p % 2 == 0
                    else reduced_boundary(d, q).scaled(field.neg(field.one))
                )
                maps[((p, q), (p, q - 1))] = vertical
            if p >= 1:
                ident = LinMap.identity(d.space(q), field)
                sign = field.one if q % 2 == 0 else field.neg(field.one)
                if p % 2 == 1:
                    horizontal = ident - d.t(q).scaled(sign)
                else:
                    horizontal = None
                    power = ident
                    for i in range(q + 1):
                        term = power if i % 2 == 0 or q % 2 == 0 else power.scaled(field.neg(field.one))
                        horizontal = term if horizontal is None else horizontal + term
                        power = compose(d.t(q), power)
                maps[((p, q), (p - 1, q))] = horizontal
    return _block_total(spaces_by_block, maps, field, "Tot")


def hc_table(d: DuplicialModule, n_max: int) -> HomologyTable:
    """Cyclic homology dims; for non-cyclic (twisted) modules the
    invariant subobject under t^(n+1) is taken first and recorded."""
    taken = False
    if not all(check_cyclic(d)):
        operators = [d.t_power(n, n + 1) for n in range(d.n_max + 1)]
        d = invariant_subobject(d, operators)
        taken = True
    complex_ = cyclic_bicomplex(d, n_max)
    table = homology_dims(complex_, n_max, theory="HC")
    return HomologyTable("HC", table.dims, table.field, invariant_subobject_taken=taken)
