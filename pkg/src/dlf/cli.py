"""Command line surface.

Commands: check, compose, act, duplicial, homology, hc, examples.
Exit codes: 0 ok, 2 parse error, 3 validation error, 4 range error,
5 internal error.  All outputs are deterministic text.
"""

from __future__ import annotations

import argparse
import sys

from .admissible import act_left, act_right
from .bimodcat import EMRealization
from .bundle import Bundle, Emitter, parse_bundle
from .duplicial import DuplicialModule, build_duplicial
from .errors import BundleParseError, DlfError, DomainError
from .examples import EXAMPLE_NAMES, example_bundle
from .field import Field, QQ, prime_field
from .homology import hc_table, hochschild_complex, homology_dims
from .laws import tensor_factorisations
from .linalg import unit_space


def _parse_field(text: str) -> Field:
    if text == "Q":
        return QQ
    if text.startswith("Fp:"):
        return prime_field(int(text.split(":", 1)[1]))
    raise DomainError(f"bad field {text!r}; use Q or Fp:<p>")


def _load(path: str, want_field: Field | None) -> Bundle:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise BundleParseError(f"cannot read {path}: {exc}")
    bundle = parse_bundle(text)
    if want_field is not None and bundle.field != want_field:
        raise DomainError(
            f"bundle field {bundle.field!r} does not match --field"
        )
    return bundle


def _emit_side(em: Emitter, bundle: Bundle, name: str):
    if name in bundle.hopf_algebras:
        em.add_hopf(bundle.hopf_algebras[name], name)
    elif name in bundle.algebras:
        em.add_algebra(bundle.algebras[name], name)
    elif name in bundle.coalgebras:
        em.add_coalgebra(bundle.coalgebras[name], name)
    elif name in bundle.spaces:
        em.add_space(bundle.spaces[name], name)
    else:
        raise DomainError(f"cannot re-emit side {name!r}")


def _side_space_expr(bundle: Bundle, name: str) -> str:
    from .bundle import _safe

    if name in bundle.hopf_algebras or name in bundle.algebras or name in bundle.coalgebras:
        return _safe(name)
    return name


def _emit_law_closure(em: Emitter, bundle: Bundle, law_name: str) -> tuple[str, str, str, str]:
    left, right = bundle._law_sides[law_name]
    _emit_side(em, bundle, left)
    _emit_side(em, bundle, right)
    lspace = _side_space_expr(bundle, left)
    rspace = _side_space_expr(bundle, right)
    em.add_law(bundle.laws[law_name], law_name, left, right, lspace, rspace)
    return left, right, lspace, rspace


def cmd_check(args) -> int:
    bundle = _load(args.bundle, args.field)
    reports = bundle.validate_reports()
    ok = True
    for report in reports:
        for line in report.lines():
            print(line)
        ok = ok and report.ok
    print("ok" if ok else "FAILED")
    return 0 if ok else 3


def cmd_compose(args) -> int:
    bundle = _load(args.bundle, args.field)
    for name in (args.first, args.second):
        if name not in bundle.factorisations:
            raise DomainError(f"no factorisation named {name!r}")
    product = tensor_factorisations(
        bundle.factorisations[args.first], bundle.factorisations[args.second]
    )
    chi_name = bundle._fact_meta[args.first]["chi"]
    em = Emitter(bundle.field)
    left, right, lspace, rspace = _emit_law_closure(em, bundle, chi_name)
    em.add_factorisation(
        product, f"{args.first}x{args.second}", chi_name, left, right, lspace, rspace
    )
    sys.stdout.write(em.text())
    return 0


def cmd_act(args) -> int:
    bundle = _load(args.bundle, args.field)
    if args.fact not in bundle.factorisations:
        raise DomainError(f"no factorisation named {args.fact!r}")
    fact = bundle.factorisations[args.fact]
    datum, is_em, _ = bundle.build_datum(args.datum)
    if is_em:
        raise DomainError(
            "acting on generated cyclic data is expressed by the twist= key "
            "of the datum; CLI act handles explicit tensor data"
        )
    spec = bundle.data[args.datum]
    right = datum.right
    left = datum.left
    if args.side in ("right", "both"):
        right = act_right(fact, right)
    if args.side in ("left", "both"):
        left = act_left(left, fact)

    chi_name = spec.refs["chi"]
    em = Emitter(bundle.field)
    lname, rname, lspace, rspace = _emit_law_closure(em, bundle, chi_name)
    m_space = em.add_space(right.obj, "M_acted")
    em.add_linmap(
        "rho_acted", right.rho, f"{lspace}*M_acted", f"{rspace}*M_acted"
    )
    point = unit_space()
    n_space = em.add_space(left.on_object(point), "N_acted")
    em.add_linmap(
        "lambda_acted", left.lambda_at(point), f"N_acted*{rspace}", f"N_acted*{lspace}"
    )
    em.add_raw(
        "data",
        f"datum {args.datum}_acted tensor chi={chi_name} M=M_acted rho=rho_acted "
        f"N=N_acted lambda=lambda_acted",
    )
    sys.stdout.write(em.text())
    return 0


def _datum_module(bundle: Bundle, name: str, n_max: int) -> DuplicialModule:
    """The duplicial module of a datum; generated cyclic data use the
    explicit tensor-power model (equal to the abstract construction under
    the stored identification)."""
    spec = bundle.data.get(name)
    if spec is None:
        raise DomainError(f"no datum named {name!r}")
    if spec.kind == "cyclic":
        algebra = bundle.algebras.get(spec.refs["algebra"])
        if algebra is None:
            algebra = bundle.hopf_algebras[spec.refs["algebra"]].algebra
        em = EMRealization(algebra)
        twist_name = spec.refs.get("twist")
        if twist_name is None:
            return em.cyclic_object(n_max)
        return em.twisted_cyclic_object(bundle.morphisms[twist_name], n_max)
    datum, _, _ = bundle.build_datum(name)
    return build_duplicial(datum, n_max)


def cmd_duplicial(args) -> int:
    bundle = _load(args.bundle, args.field)
    module = _datum_module(bundle, args.datum, args.max_degree)
    em = Emitter(bundle.field)
    for n in range(module.n_max + 1):
        degree = module.degrees[n]
        em.add_space(degree.space, f"D{n}")
    for n in range(module.n_max + 1):
        degree = module.degrees[n]
        for i, face in enumerate(degree.faces):
            em.add_linmap(f"d{n}_{i}", face, f"D{n}", f"D{n - 1}")
        for i, s in enumerate(degree.degeneracies):
            em.add_linmap(f"s{n}_{i}", s, f"D{n}", f"D{n + 1}")
        em.add_linmap(f"t{n}", degree.t, f"D{n}", f"D{n}")
    sys.stdout.write(em.text())
    return 0


def cmd_homology(args) -> int:
    bundle = _load(args.bundle, args.field)
    module = _datum_module(bundle, args.datum, args.max_degree + 1)
    if args.theory == "hh":
        table = homology_dims(hochschild_complex(module), args.max_degree)
    else:
        table = hc_table(module, args.max_degree)
    _print_table(table, args.format)
    return 0


def cmd_hc(args) -> int:
    bundle = _load(args.bundle, args.field)
    if args.algebra is not None:
        name = args.algebra
    else:
        candidates = list(bundle.algebras) or list(bundle.hopf_algebras)
        if len(candidates) != 1:
            raise DomainError("bundle has several algebras; pass --algebra")
        name = candidates[0]
    algebra = bundle.algebras.get(name)
    if algebra is None:
        algebra = bundle.hopf_algebras[name].algebra
    em = EMRealization(algebra)
    if args.twist is not None:
        module = em.twisted_cyclic_object(bundle.morphisms[args.twist], args.max_degree + 1)
    else:
        module = em.cyclic_object(args.max_degree + 1)
    table = hc_table(module, args.max_degree)
    _print_table(table, args.format)
    return 0


def _print_table(table, format_: str):
    if format_ == "table":
        print(table.line())
    else:
        print(f"homologytable theory={table.theory} field={'Q' if table.field.characteristic == 0 else 'Fp ' + str(table.field.characteristic)}")
        print(f"  dims {table.line()}")
        print(f"  invariant-subobject {'taken' if table.invariant_subobject_taken else 'none'}")


def cmd_examples(args) -> int:
    sys.stdout.write(example_bundle(args.name, args.field or QQ))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dlf",
        description="Distributive-law factorisations and exact (twisted) cyclic homology.",
    )
    parser.add_argument("--field", type=_parse_field, default=None, help="Q or Fp:<p>")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate every object in a bundle")
    p.add_argument("bundle")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compose", help="tensor two factorisations")
    p.add_argument("bundle")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("act", help="act with a factorisation on a tensor datum")
    p.add_argument("bundle")
    p.add_argument("fact")
    p.add_argument("datum")
    p.add_argument("--side", choices=("right", "left", "both"), default="right")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("duplicial", help="emit the duplicial module of a datum")
    p.add_argument("bundle")
    p.add_argument("datum")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_duplicial)

    p = sub.add_parser("homology", help="homology table of a datum")
    p.add_argument("bundle")
    p.add_argument("datum")
    p.add_argument("--theory", choices=("hh", "hc"), required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("table", "bundle"), default="table")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("hc", help="(twisted) cyclic homology of an algebra bundle")
    p.add_argument("bundle")
    p.add_argument("--algebra", default=None)
    p.add_argument("--twist", default=None)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--format", choices=("table", "bundle"), default="table")
    p.set_defaults(func=cmd_hc)

    p = sub.add_parser("examples", help="emit a built-in fixture bundle")
    p.add_argument("name", help=", ".join(EXAMPLE_NAMES))
    p.set_defaults(func=cmd_examples)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BundleParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DlfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
