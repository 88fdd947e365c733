"""The bundle text format: a line-oriented description of spaces, maps
and structured objects, cross-referenced by name.

Design: one object per header line (`kind name key=value ...`), with
matrix rows on indented lines below a `linmap` header.  References must
be defined before use.  All scalars are explicit strings ("a/b" over the
rationals, canonical residues over a prime field), so emitted bundles
are stable byte-for-byte and diff cleanly.

    field Q
    space A 2 e g
    linmap m A*A -> A
      1 0 0 1
      0 1 1 0
    algebra QC2 carrier=A mul=m unit=u
    law chi comonad-comonad left=QC2co right=QC2co map=x
    factorisation F chi=chi sigma=sl gamma=gl
    datum D tensor chi=chi M=P rho=r N=Q lambda=l
    datum E cyclic algebra=QC2 twist=sg
"""

from __future__ import annotations

from .admissible import AdmissibleDatum, LeftCoalg, RightCoalg, TensorLeftRealization
from .bimodcat import EMRealization
from .errors import BundleParseError, DomainError
from .field import Field, QQ, prime_field
from .functors import TensorComonad, TensorFunctor, TensorMonad, comonad_from_coalgebra, monad_from_algebra
from .laws import DistLaw, Factorisation, make_factorisation
from .linalg import LinMap, Space, tensor_space
from .structures import (
    Algebra,
    AlgebraMorphism,
    Bimodule,
    Coalgebra,
    DoubleModule,
    HopfAlgebra,
    check_algebra,
    check_algebra_morphism,
    check_bimodule,
    check_coalgebra,
    check_double_module,
    check_hopf,
)

SECTION_ORDER = (
    "spaces", "linmaps", "algebras", "coalgebras", "hopf_algebras",
    "bimodules", "double_modules", "morphisms", "laws", "factorisations", "data",
)


class DatumSpec:
    """A datum entry: either explicit tensoring data or a cyclic datum
    generated from an algebra with an optional twist."""

    def __init__(self, name: str, kind: str, refs: dict):
        self.name = name
        self.kind = kind
        self.refs = refs


class Bundle:
    def __init__(self, field: Field):
        self.field = field
        self.spaces: dict[str, Space] = {}
        self.linmaps: dict[str, LinMap] = {}
        self.algebras: dict[str, Algebra] = {}
        self.coalgebras: dict[str, Coalgebra] = {}
        self.hopf_algebras: dict[str, HopfAlgebra] = {}
        self.bimodules: dict[str, Bimodule] = {}
        self.double_modules: dict[str, DoubleModule] = {}
        self.morphisms: dict[str, AlgebraMorphism] = {}
        self.laws: dict[str, DistLaw] = {}
        self.factorisations: dict[str, Factorisation] = {}
        self.data: dict[str, DatumSpec] = {}
        self._law_sides: dict[str, tuple[str, str]] = {}
        self._fact_meta: dict[str, dict] = {}

    # resolution helpers

    def space_expr(self, expr: str, line: int | None = None) -> Space:
        parts = expr.split("*")
        try:
            result = self.spaces[parts[0]]
            for part in parts[1:]:
                result = tensor_space(result, self.spaces[part])
        except KeyError as exc:
            raise BundleParseError(f"unknown space {exc.args[0]!r}", line)
        return result

    def _resolve_side(self, kind: str, name: str, line: int | None):
        if kind == "comonad":
            if name in self.coalgebras:
                return comonad_from_coalgebra(self.coalgebras[name])
            if name in self.hopf_algebras:
                return comonad_from_coalgebra(self.hopf_algebras[name].coalgebra)
            raise BundleParseError(f"no coalgebra named {name!r}", line)
        if kind == "monad":
            if name in self.algebras:
                return monad_from_algebra(self.algebras[name])
            if name in self.hopf_algebras:
                return monad_from_algebra(self.hopf_algebras[name].algebra)
            raise BundleParseError(f"no algebra named {name!r}", line)
        if name in self.spaces:
            return TensorFunctor(self.spaces[name], self.field)
        raise BundleParseError(f"no space named {name!r}", line)

    def build_datum(self, name: str):
        """Returns (AdmissibleDatum, is_em, em_realization_or_None)."""
        spec = self.data.get(name)
        if spec is None:
            raise DomainError(f"no datum named {name!r}")
        if spec.kind == "tensor":
            chi = self.laws[spec.refs["chi"]]
            m = self.spaces[spec.refs["M"]]
            rho = self.linmaps[spec.refs["rho"]]
            right = RightCoalg(chi, m, rho)
            n_fun = TensorFunctor(self.spaces[spec.refs["N"]], self.field)
            lam = self.linmaps[spec.refs["lambda"]]
            left = LeftCoalg(chi, TensorLeftRealization(chi, n_fun, lam))
            return AdmissibleDatum(right, left), False, None
        if spec.kind == "cyclic":
            algebra = self.algebras.get(spec.refs["algebra"])
            if algebra is None and spec.refs["algebra"] in self.hopf_algebras:
                algebra = self.hopf_algebras[spec.refs["algebra"]].algebra
            if algebra is None:
                raise DomainError(f"no algebra named {spec.refs['algebra']!r}")
            em = EMRealization(algebra)
            datum = em.cyclic_datum()
            twist_name = spec.refs.get("twist")
            twist = em.trivial_factorisation() if twist_name is None else em.twist_factorisation(self.morphisms[twist_name])
            if twist_name is not None:
                from .admissible import act_datum

                datum = act_datum(twist, datum, em.trivial_factorisation())
            return datum, True, em
        raise DomainError(f"unknown datum kind {spec.kind!r}")

    def validate_reports(self):
        """Checker reports for every structured object, in emission order."""
        reports = []
        for name, a in self.algebras.items():
            reports.append(check_algebra(a))
        for name, c in self.coalgebras.items():
            reports.append(check_coalgebra(c))
        for name, h in self.hopf_algebras.items():
            reports.append(check_hopf(h))
        for name, b in self.bimodules.items():
            reports.append(check_bimodule(b))
        for name, d in self.double_modules.items():
            reports.append(check_double_module(d))
        for name, m in self.morphisms.items():
            reports.append(check_algebra_morphism(m))
        from .laws import check_distlaw, check_yang_baxter
        from .report import Report

        for name, law in self.laws.items():
            rep = check_distlaw(law)
            rep.subject = f"law {name}"
            reports.append(rep)
        for name, fact in self.factorisations.items():
            rep = Report(f"factorisation {name}")
            rep.add("yang-baxter", check_yang_baxter(fact.sigma, fact.chi, fact.gamma))
            reports.append(rep)
        for name in self.data:
            from .admissible import check_left_coalg, check_right_coalg
            from .report import Report

            datum, _, _ = self.build_datum(name)
            right_rep = check_right_coalg(datum.right)
            right_rep.subject = f"datum {name} right"
            left_rep = check_left_coalg(datum.left)
            left_rep.subject = f"datum {name} left"
            reports.extend([right_rep, left_rep])
        return reports


def _parse_kv(tokens, line_no):
    kv = {}
    for token in tokens:
        if "=" not in token:
            raise BundleParseError(f"expected key=value, got {token!r}", line_no)
        key, value = token.split("=", 1)
        kv[key] = value
    return kv


def _need(kv, keys, line_no):
    for key in keys:
        if key not in kv:
            raise BundleParseError(f"missing {key}=", line_no)
    return [kv[key] for key in keys]


def parse_bundle(text: str) -> Bundle:
    field: Field | None = None
    bundle: Bundle | None = None
    lines = text.splitlines()
    i = 0
    n = len(lines)
    while i < n:
        raw = lines[i]
        line_no = i + 1
        i += 1
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if raw[0].isspace():
            raise BundleParseError("unexpected indented line outside a linmap block", line_no)
        tokens = stripped.split()
        kind = tokens[0]
        if kind == "field":
            if len(tokens) == 2 and tokens[1] == "Q":
                field = QQ
            elif len(tokens) == 3 and tokens[1] == "Fp":
                try:
                    field = prime_field(int(tokens[2]))
                except (ValueError, DomainError) as exc:
                    raise BundleParseError(f"bad field: {exc}", line_no)
            else:
                raise BundleParseError("field must be 'field Q' or 'field Fp <p>'", line_no)
            bundle = Bundle(field)
            continue
        if bundle is None:
            raise BundleParseError("the field line must come first", line_no)
        if len(tokens) < 2:
            raise BundleParseError(f"{kind}: missing name", line_no)
        name = tokens[1]
        rest = tokens[2:]
        try:
            if kind == "space":
                if len(rest) < 1:
                    raise BundleParseError("space needs a dimension", line_no)
                dim = int(rest[0])
                labels = rest[1:] if len(rest) > 1 else None
                bundle.spaces[name] = Space(name, dim, labels)
            elif kind == "linmap":
                if len(rest) != 3 or rest[1] != "->":
                    raise BundleParseError("linmap header is 'linmap NAME DOM -> COD'", line_no)
                dom = bundle.space_expr(rest[0], line_no)
                cod = bundle.space_expr(rest[2], line_no)
                rows = []
                while i < n and lines[i][:1].isspace() and lines[i].strip():
                    row_tokens = lines[i].strip().split()
                    if len(row_tokens) != dom.dim:
                        raise BundleParseError(
                            f"row has {len(row_tokens)} entries, expected {dom.dim}", i + 1
                        )
                    rows.append([bundle.field.parse(tok) for tok in row_tokens])
                    i += 1
                if len(rows) != cod.dim:
                    raise BundleParseError(
                        f"linmap {name}: {len(rows)} rows for codomain dim {cod.dim}", line_no
                    )
                bundle.linmaps[name] = LinMap.from_rows(dom, cod, bundle.field, rows)
            elif kind == "algebra":
                kv = _parse_kv(rest, line_no)
                carrier, mul, unit = _need(kv, ("carrier", "mul", "unit"), line_no)
                bundle.algebras[name] = Algebra(
                    name, bundle.spaces[carrier], bundle.linmaps[mul],
                    bundle.linmaps[unit], bundle.field,
                )
            elif kind == "coalgebra":
                kv = _parse_kv(rest, line_no)
                carrier, comul, counit = _need(kv, ("carrier", "comul", "counit"), line_no)
                bundle.coalgebras[name] = Coalgebra(
                    name, bundle.spaces[carrier], bundle.linmaps[comul],
                    bundle.linmaps[counit], bundle.field,
                )
            elif kind == "hopf":
                kv = _parse_kv(rest, line_no)
                algebra, coalgebra, antipode = _need(kv, ("algebra", "coalgebra", "antipode"), line_no)
                bundle.hopf_algebras[name] = HopfAlgebra(
                    name, bundle.algebras[algebra], bundle.coalgebras[coalgebra],
                    bundle.linmaps[antipode],
                )
            elif kind == "bimodule":
                kv = _parse_kv(rest, line_no)
                base, carrier, left, right = _need(kv, ("base", "carrier", "left", "right"), line_no)
                bundle.bimodules[name] = Bimodule(
                    name, bundle.algebras[base], bundle.spaces[carrier],
                    bundle.linmaps[left], bundle.linmaps[right],
                )
            elif kind == "doublemodule":
                kv = _parse_kv(rest, line_no)
                left, right, carrier, bact, cact = _need(
                    kv, ("left", "right", "carrier", "bact", "cact"), line_no
                )
                la = bundle.algebras.get(left) or bundle.hopf_algebras[left].algebra
                ra = bundle.algebras.get(right) or bundle.hopf_algebras[right].algebra
                bundle.double_modules[name] = DoubleModule(
                    name, la, ra, bundle.spaces[carrier],
                    bundle.linmaps[bact], bundle.linmaps[cact],
                )
            elif kind == "morphism":
                kv = _parse_kv(rest, line_no)
                source, target, map_ = _need(kv, ("source", "target", "map"), line_no)
                bundle.morphisms[name] = AlgebraMorphism(
                    name, bundle.algebras[source], bundle.algebras[target],
                    bundle.linmaps[map_],
                )
            elif kind == "law":
                if not rest:
                    raise BundleParseError("law needs a kind", line_no)
                law_kind = rest[0]
                kv = _parse_kv(rest[1:], line_no)
                left, right, map_ = _need(kv, ("left", "right", "map"), line_no)
                lk, rk = law_kind.split("-")
                bundle.laws[name] = DistLaw(
                    law_kind,
                    bundle._resolve_side(lk, left, line_no),
                    bundle._resolve_side(rk, right, line_no),
                    bundle.linmaps[map_],
                )
                bundle._law_sides[name] = (left, right)
            elif kind == "factorisation":
                kv = _parse_kv(rest, line_no)
                chi, sigma, gamma = _need(kv, ("chi", "sigma", "gamma"), line_no)
                sigma_law = bundle.laws[sigma]
                bundle.factorisations[name] = make_factorisation(
                    bundle.laws[chi], sigma_law.right_functor, sigma_law,
                    bundle.laws[gamma],
                )
                bundle._fact_meta[name] = kv
            elif kind == "datum":
                if not rest:
                    raise BundleParseError("datum needs a kind", line_no)
                datum_kind = rest[0]
                kv = _parse_kv(rest[1:], line_no)
                if datum_kind == "tensor":
                    _need(kv, ("chi", "M", "rho", "N", "lambda"), line_no)
                elif datum_kind == "cyclic":
                    _need(kv, ("algebra",), line_no)
                else:
                    raise BundleParseError(f"unknown datum kind {datum_kind!r}", line_no)
                bundle.data[name] = DatumSpec(name, datum_kind, kv)
            else:
                raise BundleParseError(f"unknown object kind {kind!r}", line_no)
        except KeyError as exc:
            raise BundleParseError(f"unresolved reference {exc.args[0]!r}", line_no)
        except DomainError as exc:
            raise BundleParseError(str(exc), line_no)
    if bundle is None:
        raise BundleParseError("empty bundle: no field line")
    return bundle


def emit_field(field: Field) -> str:
    return "field Q" if field.characteristic == 0 else f"field Fp {field.characteristic}"


def emit_linmap(name: str, f: LinMap, dom_expr: str, cod_expr: str) -> list[str]:
    lines = [f"linmap {name} {dom_expr} -> {cod_expr}"]
    for row in f.rows:
        lines.append("  " + " ".join(f.field.format(v) for v in row))
    return lines


class Emitter:
    """Accumulates named objects and prints them in canonical section
    order; spaces and maps referenced by structured objects must be
    registered with the expressions used to name their shapes."""

    def __init__(self, field: Field):
        self.field = field
        self.lines_by_section = {key: [] for key in SECTION_ORDER}
        self._space_names: list[str] = []
        self._linmap_names: set[str] = set()
        self._raw_lines: set[str] = set()

    def add_space(self, space: Space, name: str | None = None) -> str:
        name = name or space.name
        if name not in self._space_names:
            self._space_names.append(name)
            labels = " ".join(space.labels)
            self.lines_by_section["spaces"].append(
                f"space {name} {space.dim}" + (f" {labels}" if space.dim else "")
            )
        return name

    def add_linmap(self, name: str, f: LinMap, dom_expr: str, cod_expr: str):
        if name in self._linmap_names:
            return
        self._linmap_names.add(name)
        self.lines_by_section["linmaps"].extend(emit_linmap(name, f, dom_expr, cod_expr))

    def add_raw(self, section: str, line: str):
        if line in self._raw_lines:
            return
        self._raw_lines.add(line)
        self.lines_by_section[section].append(line)

    def text(self) -> str:
        lines = [emit_field(self.field)]
        for section in SECTION_ORDER:
            if self.lines_by_section[section]:
                lines.append("")
                lines.extend(self.lines_by_section[section])
        return "\n".join(lines) + "\n"

    # whole-object emission

    def add_algebra(self, a: Algebra, name: str | None = None) -> str:
        name = name or a.name
        carrier = self.add_space(a.carrier, _safe(name))
        self.add_linmap(f"{_safe(name)}_mul", a.mul, f"{carrier}*{carrier}", carrier)
        self.add_linmap(f"{_safe(name)}_unit", a.unit, self._unit_space(), carrier)
        self.add_raw(
            "algebras",
            f"algebra {name} carrier={carrier} mul={_safe(name)}_mul unit={_safe(name)}_unit",
        )
        return name

    def _unit_space(self) -> str:
        from .linalg import unit_space

        return self.add_space(unit_space(), "k1")

    def add_coalgebra(self, c: Coalgebra, name: str | None = None, carrier: str | None = None) -> str:
        name = name or c.name
        carrier = carrier or self.add_space(c.carrier, _safe(name))
        self.add_linmap(f"{_safe(name)}_comul", c.comul, carrier, f"{carrier}*{carrier}")
        self.add_linmap(f"{_safe(name)}_counit", c.counit, carrier, self._unit_space())
        self.add_raw(
            "coalgebras",
            f"coalgebra {name} carrier={carrier} comul={_safe(name)}_comul counit={_safe(name)}_counit",
        )
        return name

    def add_hopf(self, h: HopfAlgebra, name: str | None = None) -> str:
        name = name or h.name
        alg_name = self.add_algebra(h.algebra, f"{name}")
        carrier = _safe(alg_name)
        co_name = self.add_coalgebra(h.coalgebra, f"{name}co", carrier=carrier)
        self.add_linmap(f"{_safe(name)}_antipode", h.antipode, carrier, carrier)
        self.add_raw(
            "hopf_algebras",
            f"hopf {name} algebra={alg_name} coalgebra={co_name} antipode={_safe(name)}_antipode",
        )
        return name

    def add_morphism(self, m: AlgebraMorphism, source: str, target: str, name: str | None = None) -> str:
        name = name or m.name
        dom = _safe(source)
        cod = _safe(target)
        self.add_linmap(f"{_safe(name)}_map", m.map, dom, cod)
        self.add_raw(
            "morphisms",
            f"morphism {name} source={source} target={target} map={_safe(name)}_map",
        )
        return name

    def add_law(self, law: DistLaw, name: str, left: str, right: str,
                left_space: str, right_space: str) -> str:
        self.add_linmap(
            f"{_safe(name)}_map", law.map,
            f"{left_space}*{right_space}", f"{right_space}*{left_space}",
        )
        self.add_raw(
            "laws",
            f"law {name} {law.kind} left={left} right={right} map={_safe(name)}_map",
        )
        return name

    def add_factorisation(self, fact: Factorisation, name: str, chi_name: str,
                          chi_left: str, chi_right: str,
                          t_space: str, c_space: str) -> str:
        sigma_space = self.add_space(fact.Sigma.carrier, f"{_safe(name)}_Sigma")
        sigma_name = self.add_law(
            fact.sigma, f"{name}_sigma", chi_left, sigma_space, t_space, sigma_space
        )
        gamma_name = self.add_law(
            fact.gamma, f"{name}_gamma", sigma_space, chi_right, sigma_space, c_space
        )
        self.add_raw(
            "factorisations",
            f"factorisation {name} chi={chi_name} sigma={sigma_name} gamma={gamma_name}",
        )
        return name


def _safe(name: str) -> str:
    return name.replace("*", "x").replace("/", "_").replace("(", "").replace(")", "").replace("[", "").replace("]", "").replace("^", "")
