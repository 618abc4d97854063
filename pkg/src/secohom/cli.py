"""Command-line front end.

Exit codes: 0 success, 1 property failure, 2 parse/validation error,
3 size cap exceeded, 4 precondition violated.
"""

import argparse
import os
import sys

from secohom import __version__
from secohom.complex import DEFAULT_MAX_BASIS, CochainComplex
from secohom.errors import (
    PreconditionError,
    SecohomError,
    SizeCapExceeded,
    SpecFileError,
    ValidationError,
)
from secohom.fields import GF, QQ
from secohom import io as sio

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_VALIDATION = 2
EXIT_SIZE_CAP = 3
EXIT_PRECONDITION = 4


def _max_basis(args):
    if args.max_basis is not None:
        return args.max_basis
    env = os.environ.get("SECOHOM_MAX_BASIS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SpecFileError(f"SECOHOM_MAX_BASIS={env!r} is not an integer")
    return DEFAULT_MAX_BASIS


def _emit(args, report, text_lines):
    if args.output == "json":
        sys.stdout.buffer.write(sio.emit_report(report))
    else:
        for line in text_lines:
            print(line)


def _spec_and_complex(args, flavor="secondary"):
    spec = sio.resolve_spec(args.spec)
    mod = spec.module(args.module)
    cx = CochainComplex(spec.triple, mod, flavor=flavor, max_basis=_max_basis(args))
    return spec, cx


def _spec_name(args):
    base = os.path.basename(args.spec)
    return base[:-5] if base.endswith(".json") else base


# ----------------------------------------------------------------------
# commands


def cmd_validate(args):
    spec = sio.resolve_spec(args.spec)
    report = {
        "command": "validate",
        "spec": _spec_name(args),
        "field": spec.field.name,
        "dims": {
            "A": spec.triple.A.dim,
            "B": spec.triple.B.dim,
            "modules": {k: m.dim for k, m in spec.modules.items()},
        },
        "valid": True,
    }
    _emit(args, report, [
        f"{args.spec}: valid triple over {spec.field.name} "
        f"(dim A = {spec.triple.A.dim}, dim B = {spec.triple.B.dim}, "
        f"modules: {', '.join(sorted(spec.modules))})",
    ])
    return EXIT_OK


def _parse_degrees(s):
    if ".." in s:
        a, b = s.split("..", 1)
        return int(a), int(b)
    n = int(s)
    return n, n


def cmd_cohomology(args):
    spec, cx = _spec_and_complex(args, flavor=args.flavor)
    lo, hi = _parse_degrees(args.degrees)
    results = {}
    lines = [f"cohomology of {_spec_name(args)} ({args.flavor}), module {args.module}"]
    header = f"{'n':>3} {'dim C^n':>9} {'cocycles':>9} {'coboundaries':>13} {'dim H^n':>8}"
    if args.flavor == "secondary":
        header += f" {'ker Phi_n':>10}"
    lines.append(header)
    for n in range(lo, hi + 1):
        h = cx.cohomology(n)
        row = {
            "dim_C": cx.coord_dim(n),
            "dim_cocycles": h.cocycles.dim,
            "dim_coboundaries": h.coboundaries.dim,
            "dim_H": h.dim,
        }
        line = (
            f"{n:>3} {cx.coord_dim(n):>9} {h.cocycles.dim:>9} "
            f"{h.coboundaries.dim:>13} {h.dim:>8}"
        )
        if args.flavor == "secondary":
            pd = cx.phi_induced(n)
            row["phi_kernel_dim"] = pd.dim_kernel
            row["phi_image_dim"] = pd.dim_image
            row["dim_H_ordinary"] = pd.dim_codomain
            line += f" {pd.dim_kernel:>10}"
        results[str(n)] = row
        lines.append(line)
    report = {
        "command": "cohomology",
        "spec": _spec_name(args),
        "field": spec.field.name,
        "flavor": args.flavor,
        "module": args.module,
        "degrees": [lo, hi],
        "results": results,
    }
    _emit(args, report, lines)
    return EXIT_OK


def cmd_phi(args):
    spec, cx = _spec_and_complex(args)
    pd = cx.phi_induced(args.degree)
    entries = {
        f"{i},{j}": spec.field.format(v)
        for (i, j), v in ((k, pd.matrix[k]) for k in _matrix_keys(pd.matrix))
    }
    report = {
        "command": "phi",
        "spec": _spec_name(args),
        "degree": args.degree,
        "dim_H_secondary": pd.dim_domain,
        "dim_H_ordinary": pd.dim_codomain,
        "dim_kernel": pd.dim_kernel,
        "dim_image": pd.dim_image,
        "matrix": entries,
    }
    _emit(args, report, [
        f"comparison map on degree {args.degree} of {_spec_name(args)}:",
        f"  H_secondary dim {pd.dim_domain} -> H_ordinary dim {pd.dim_codomain}",
        f"  kernel dim {pd.dim_kernel}, image dim {pd.dim_image}",
    ])
    return EXIT_OK


def _matrix_keys(m):
    for i, row in m.rows.items():
        for j in row:
            yield (i, j)


def cmd_hodge(args):
    spec, cx = _spec_and_complex(args)
    from secohom.hodge import hodge_decomposition

    dims = hodge_decomposition(cx, args.degree)
    n = args.degree
    ks = [0] if n == 0 else list(range(1, n + 1))
    report = {
        "command": "hodge",
        "spec": _spec_name(args),
        "degree": n,
        "components": {str(k): d for k, d in zip(ks, dims)},
        "total": sum(dims),
    }
    lines = [f"Hodge components of H^{n} for {_spec_name(args)}:"]
    for k, d in zip(ks, dims):
        lines.append(f"  H^({k},{n - k}) dim {d}")
    lines.append(f"  total {sum(dims)}")
    _emit(args, report, lines)
    return EXIT_OK


def _load_two_cochains(args, spec):
    if len(args.cochain) != 2:
        raise SpecFileError("need exactly two --cochain files")
    f, cxf, mname = sio.load_cochain_file(args.cochain[0], spec, _max_basis(args))
    g, cxg, _ = sio.load_cochain_file(args.cochain[1], spec, _max_basis(args))
    if cxg is not cxf:
        # same module/flavor: rebuild g over f's complex for object identity
        g = cxf.cochain(g.degree, g.table)
    return f, g, cxf, mname


def _cochain_report(result, module_name, command, spec, args, extra=None):
    doc = sio.cochain_to_doc(result, module_name)
    report = {
        "command": command,
        "spec": _spec_name(args),
        "degree": result.degree,
        "nonzero_entries": result.nnz(),
        "cochain": doc,
    }
    if extra:
        report.update(extra)
    lines = [
        f"{command}: degree {result.degree} cochain, "
        f"{result.nnz()} nonzero of {len(result.table)} entries"
    ]
    if args.out:
        import json

        with open(args.out, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")
        lines.append(f"written to {args.out}")
    return report, lines


def cmd_cup(args):
    from secohom.gerstenhaber import cup

    spec = sio.resolve_spec(args.spec)
    f, g, cx, mname = _load_two_cochains(args, spec)
    result = cup(f, g)
    report, lines = _cochain_report(result, mname, "cup", spec, args)
    _emit(args, report, lines)
    return EXIT_OK


def cmd_bracket(args):
    from secohom.gerstenhaber import bracket

    spec = sio.resolve_spec(args.spec)
    f, g, cx, mname = _load_two_cochains(args, spec)
    result = bracket(f, g)
    report, lines = _cochain_report(result, mname, "bracket", spec, args)
    _emit(args, report, lines)
    return EXIT_OK


def cmd_extension(args):
    from secohom.extensions import classes_equivalent, cocycle_from_section, extension_from_cocycle

    spec = sio.resolve_spec(args.spec)
    c, cx, mname = sio.load_cochain_file(args.cocycle, spec, _max_basis(args))
    ext = extension_from_cocycle(c)
    field = spec.field
    report = {
        "command": "extension",
        "spec": _spec_name(args),
        "dim_X": ext.dim,
        "unit": [field.format(v) for v in ext.X.unit],
        "eps_X": [
            [field.format(ext.eps_X_cols[j][i]) for j in range(spec.triple.B.dim)]
            for i in range(ext.dim)
        ],
        "validated": True,
    }
    lines = [
        f"extension of {_spec_name(args)} by module {mname!r}: dim {ext.dim}, validated",
        f"  unit of X: {ext.X.describe(ext.X.unit)}",
    ]
    code = EXIT_OK
    if args.roundtrip:
        cs = cocycle_from_section(ext)
        same, _ = classes_equivalent(cs, c)
        report["roundtrip_class_preserved"] = same
        lines.append(f"  roundtrip class preserved: {same}")
        if not same:
            code = EXIT_PROPERTY
    _emit(args, report, lines)
    return code


def cmd_obstruction(args):
    from secohom.extensions import first_obstruction

    spec = sio.resolve_spec(args.spec)
    c, cx, mname = sio.load_cochain_file(args.cocycle, spec, _max_basis(args))
    res = first_obstruction(c)
    report = {
        "command": "obstruction",
        "spec": _spec_name(args),
        "vanishes": res.vanishes,
        "obstruction_nonzero_entries": res.cochain.nnz(),
    }
    _emit(args, report, [
        f"first obstruction of the cocycle: "
        f"{'vanishes in cohomology' if res.vanishes else 'NONZERO class'} "
        f"({res.cochain.nnz()} nonzero cochain entries)",
    ])
    return EXIT_OK


def _poly_field(args):
    return GF(args.char) if args.char else QQ


def cmd_poly(args):
    from secohom import polylab as P

    field = _poly_field(args)
    if args.poly_command == "kerphi":
        f = P.Poly1(field, {e[0]: c for e, c in P.parse_poly(args.f, field, ("X",)).items()})
        dim = P.ker_phi2_dim_1var(f)
        report = {
            "command": "poly-kerphi",
            "field": field.name,
            "f": args.f,
            "dim": "infinite" if dim is None else dim,
        }
        _emit(args, report, ["infinite" if dim is None else str(dim)])
        return EXIT_OK
    if args.poly_command == "jacobian":
        f = P.Poly2(field, P.parse_poly(args.f, field, ("X", "Y")))
        g = P.Poly2(field, P.parse_poly(args.g, field, ("X", "Y")))
        dim = P.jacobian_cokernel_probe(f, g, args.degree)
        report = {
            "command": "poly-jacobian",
            "field": field.name,
            "f": args.f,
            "g": args.g,
            "degree": args.degree,
            "cokernel_dim": dim,
        }
        _emit(args, report, [str(dim)])
        return EXIT_OK
    if args.poly_command == "sigma":
        f = P.Poly1(field, {e[0]: c for e, c in P.parse_poly(args.f, field, ("X",)).items()})
        q = P.Poly1(field, {e[0]: c for e, c in P.parse_poly(args.q, field, ("X",)).items()})
        ok = P.verify_sigma_cocycle(f, q, args.bound)
        report = {
            "command": "poly-sigma",
            "field": field.name,
            "f": args.f,
            "q": args.q,
            "bound": args.bound,
            "cocycle": ok,
        }
        _emit(args, report, [f"sigma cocycle check: {'ok' if ok else 'FAILED'}"])
        return EXIT_OK if ok else EXIT_PROPERTY
    raise SpecFileError(f"unknown poly subcommand {args.poly_command!r}")


def cmd_selftest(args):
    from secohom.selftest import run_selftest

    failures, lines = run_selftest(max_basis=_max_basis(args))
    report = {
        "command": "selftest",
        "checks": lines,
        "failures": failures,
        "ok": failures == 0,
    }
    _emit(args, report, [f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in lines]
          + [f"{len(lines) - failures}/{len(lines)} checks passed"])
    return EXIT_OK if failures == 0 else EXIT_PROPERTY


# ----------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="secohom",
        description="Exact secondary Hochschild cohomology of finite-dimensional triples.",
    )
    ap.add_argument("--version", action="version", version=f"secohom {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--max-basis", type=int, default=None,
                        help="cap on cochain basis size (env SECOHOM_MAX_BASIS)")

    spec_common = argparse.ArgumentParser(add_help=False, parents=[common])
    spec_common.add_argument("spec", help="triple spec file or bundled name")
    spec_common.add_argument("--module", default="regular")

    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[spec_common], help="validate a spec file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", parents=[spec_common], help="cohomology dimensions")
    p.add_argument("--degrees", default="0..2", help="a..b or a single degree")
    p.add_argument("--flavor", choices=("secondary", "ordinary"), default="secondary")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("phi", parents=[spec_common], help="the induced comparison map")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("hodge", parents=[spec_common], help="Hodge component dimensions")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_hodge)

    for name in ("cup", "bracket"):
        p = sub.add_parser(name, parents=[spec_common], help=f"{name} of two cochains")
        p.add_argument("--cochain", action="append", required=True,
                       help="cochain file (give twice)")
        p.add_argument("--out", default=None, help="write the result cochain here")
        p.set_defaults(func=cmd_cup if name == "cup" else cmd_bracket)

    p = sub.add_parser("extension", parents=[spec_common],
                       help="build the square-zero extension of a 2-cocycle")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--roundtrip", action="store_true",
                   help="extract the section cocycle and compare classes")
    p.set_defaults(func=cmd_extension)

    p = sub.add_parser("obstruction", parents=[spec_common],
                       help="first deformation obstruction of a 2-cocycle")
    p.add_argument("--cocycle", required=True)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("poly", parents=[common], help="polynomial-triple computations")
    psub = p.add_subparsers(dest="poly_command", required=True)
    pk = psub.add_parser("kerphi", parents=[common])
    pk.add_argument("--f", required=True)
    pk.add_argument("--char", type=int, default=0)
    pk.set_defaults(func=cmd_poly)
    pj = psub.add_parser("jacobian", parents=[common])
    pj.add_argument("--f", required=True)
    pj.add_argument("--g", required=True)
    pj.add_argument("--degree", type=int, required=True)
    pj.add_argument("--char", type=int, default=0)
    pj.set_defaults(func=cmd_poly)
    ps = psub.add_parser("sigma", parents=[common])
    ps.add_argument("--f", required=True)
    ps.add_argument("--q", required=True)
    ps.add_argument("--bound", type=int, required=True)
    ps.add_argument("--char", type=int, default=0)
    ps.set_defaults(func=cmd_poly)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suites")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SizeCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (SpecFileError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except SecohomError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
