"""Command-line front end: analyze, oracle, eigvec, window-verify, fuzz.

Exit codes: 0 success, 1 differential or verification failure, 2 parse
error, 3 validation error, 4 wrong instance kind for the command, 5 not an
eigenvalue.  All success output is deterministic and goes to stdout;
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    InstanceFormatError,
    InstanceValidationError,
    MalformedLiteralError,
    NotAnEigenvalueError,
    WindowTooSmallError,
    WrongInstanceKindError,
    ZeroDenominatorError,
    ZeroEigenvalueError,
    ZeroTailWeightError,
)
from .fields import Field, PrimeField, RationalField
from .fuzzing import FuzzConfig, run_fuzz
from .infinite import (
    CoFinitePresentation,
    WindowVector,
    infinite_spectrum,
    kernel_free_index,
    presentation_report,
    wandering_eigenvector_window,
    window_defects,
    window_verify,
)
from .instances import instance_to_dict, load_instance
from .oracle import build_matrix, char_poly, oracle_spectrum, verify_eigenpair
from .shifts import WeightedShift, eigenvector, spectrum, spectrum_report


def _print_json(payload):
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _set_text(values) -> str:
    return "{" + ", ".join(values) + "}"


def _entries_text(entries) -> str:
    return "{" + ", ".join(f"{node}: {value}" for node, value in entries) + "}"


def _spectrum_text(block) -> str:
    if block["all_nonzero"]:
        return "F" if block["includes_zero"] else "F∖{0}"
    if block["empty"]:
        return "empty spectrum"
    values = list(block["eigenvalues"])
    if block["includes_zero"]:
        values.insert(0, "0")
    return _set_text(values)


def _field_label(descriptor) -> str:
    return f"GF({descriptor['p']})" if descriptor["kind"] == "gfp" else "Q"


def _poly_text(coefficient_strings) -> str:
    terms = []
    for k in range(len(coefficient_strings) - 1, -1, -1):
        c = coefficient_strings[k]
        if c == "0":
            continue
        if k == 0:
            terms.append(c)
        else:
            x = "x" if k == 1 else f"x^{k}"
            terms.append(x if c == "1" else f"{c}*{x}")
    return " + ".join(terms) if terms else "0"


def _render_finite(report) -> str:
    lines = [
        f"finite shift on {report['n']} nodes over {_field_label(report['field'])}",
        f"phi: {report['phi']}",
        "weights: [" + ", ".join(report["weights"]) + "]",
    ]
    lines.append(f"zero set: {_set_text(str(v) for v in report['zero_set'])}")
    lines.append(f"zero closure: {_set_text(str(v) for v in report['zero_closure'])}")
    lines.append(
        f"kernel support: {_set_text(str(v) for v in report['kernel_support'])}"
    )
    lines.append(f"branch: {report['branch']}")
    if report["cycles"]:
        lines.append("cycles:")
        for cyc in report["cycles"]:
            nodes = ", ".join(str(v) for v in cyc["nodes"])
            lines.append(
                f"  cycle {cyc['id']}: nodes ({nodes}), length {cyc['length']}, "
                f"component {cyc['component']}, weight product {cyc['weight_product']}"
            )
    else:
        lines.append("cycles: none")
    lines.append(f"spectrum: {_spectrum_text(report['spectrum'])}")
    if report["eigenpairs"]:
        lines.append("eigenpairs:")
        for pair in report["eigenpairs"]:
            wit = pair["witness"]
            if wit is None:
                how = "kernel vector"
            else:
                how = (
                    f"witness cycle {wit['cycle_id']} "
                    f"(r^{wit['period']} = {wit['cycle_product']})"
                )
            lines.append(
                f"  value {pair['value']}: {how}, "
                f"vector {_entries_text(pair['eigenvector'])}"
            )
    return "\n".join(lines)


def _render_cofinite(report) -> str:
    lines = [
        f"co-finite shift on the naturals over {_field_label(report['field'])}, "
        f"successor tail from B={report['boundary']}",
        f"phi table: {report['phi_table']}",
        "weight table: [" + ", ".join(report["weight_table"]) + "]",
        f"tail weight: {report['tail_weight']}",
        "table point classes: [" + ", ".join(report["table_classes"]) + "]",
        f"tail points: {report['tail_class']}",
        f"branch: {report['branch']}",
    ]
    if report["cycles"]:
        lines.append("cycles below the boundary:")
        for cyc in report["cycles"]:
            nodes = ", ".join(str(v) for v in cyc["nodes"])
            lines.append(
                f"  cycle {cyc['id']}: nodes ({nodes}), length {cyc['length']}, "
                f"weight product {cyc['weight_product']}"
            )
    else:
        lines.append("cycles below the boundary: none")
    lines.append(f"spectrum: {_spectrum_text(report['spectrum'])}")
    if report["eigenpairs"]:
        lines.append("eigenpairs:")
        for pair in report["eigenpairs"]:
            wit = pair["witness"]
            if wit is None:
                how = "kernel vector"
            else:
                how = (
                    f"witness cycle {wit['cycle_id']} "
                    f"(r^{wit['period']} = {wit['cycle_product']})"
                )
            lines.append(
                f"  value {pair['value']}: {how}, "
                f"vector {_entries_text(pair['eigenvector'])}"
            )
    sample = report.get("sample_window")
    if sample:
        values = ", ".join(sample["values"])
        verdict = "verified" if sample["verified"] else "FAILED"
        lines.append(
            f"sample window (eigenvalue {sample['eigenvalue']}, "
            f"window {sample['window']}): [{values}] {verdict}"
        )
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    obj = load_instance(args.path)
    if isinstance(obj, WeightedShift):
        report = spectrum_report(obj)
        text = _render_finite(report)
    else:
        report = presentation_report(obj, sample_window=8)
        text = _render_cofinite(report)
    if args.format == "json":
        _print_json(report)
    else:
        print(text)
    return 0


def cmd_oracle(args) -> int:
    obj = load_instance(args.path)
    if not isinstance(obj, WeightedShift):
        raise WrongInstanceKindError("the oracle command handles finite instances only")
    matrix = build_matrix(obj)
    poly = char_poly(matrix)
    oracle_set = sorted(oracle_spectrum(obj))
    spec = spectrum(obj)
    engine_set = list(spec.eigenvalues)
    if spec.includes_zero:
        engine_set.insert(0, obj.field.zero())
    engine_set = sorted(engine_set)
    match = engine_set == oracle_set
    coeff_strings = [str(c) for c in poly.coefficients]
    if args.format == "json":
        _print_json(
            {
                "matrix": [[str(e) for e in row] for row in matrix.rows],
                "char_poly": coeff_strings,
                "oracle_spectrum": [str(v) for v in oracle_set],
                "engine_spectrum": [str(v) for v in engine_set],
                "match": match,
            }
        )
    else:
        print(f"matrix ({obj.n}x{obj.n}):")
        for row in matrix.rows:
            print("  [" + ", ".join(str(e) for e in row) + "]")
        print(f"characteristic polynomial: {_poly_text(coeff_strings)}")
        print(f"oracle spectrum: {_set_text(str(v) for v in oracle_set)}")
        print(f"engine spectrum: {_set_text(str(v) for v in engine_set)}")
        print(f"differential check: {'PASS' if match else 'FAIL'}")
    return 0 if match else 1


def _parse_value(field: Field, text: str):
    try:
        return field.parse(text)
    except (MalformedLiteralError, ZeroDenominatorError) as exc:
        raise InstanceFormatError(f"bad --lambda literal: {exc}") from exc


def _zero_window(pres: CoFinitePresentation, window: int) -> WindowVector:
    free = kernel_free_index(pres)
    values = [pres.field.zero()] * window
    values[free] = pres.field.one()
    return WindowVector(window=window, values=tuple(values), anchor=free)


def cmd_eigvec(args) -> int:
    obj = load_instance(args.path)
    if isinstance(obj, WeightedShift):
        if args.window is not None:
            raise InstanceValidationError("--window applies to co-finite instances only")
        value = _parse_value(obj.field, args.value)
        pair = eigenvector(obj, value)
        entries = [[a, str(v)] for a, v in sorted(pair.vector.items())]
        verified = verify_eigenpair(obj, pair)
        if args.format == "json":
            _print_json(
                {
                    "kind": "finite",
                    "value": str(value),
                    "eigenvector": entries,
                    "component": pair.witness_component,
                    "verified": verified,
                }
            )
        else:
            print(f"value: {value}")
            print(f"eigenvector: {_entries_text(entries)}")
            print(f"support component: {pair.witness_component}")
            print(f"verified: {'true' if verified else 'false'}")
        return 0 if verified else 1

    pres = obj
    field = pres.field
    value = _parse_value(field, args.value)
    window = args.window if args.window is not None else max(16, pres.boundary + 1)
    spec = infinite_spectrum(pres)
    if not spec.contains(value):
        raise NotAnEigenvalueError(f"{value} is not an eigenvalue of {pres!r}")
    if value == field.zero():
        vec = _zero_window(pres, window)
    elif spec.all_nonzero:
        vec = wandering_eigenvector_window(pres, value, window)
    else:
        # zero tail: explicit eigenvalues live on cycles below the boundary
        report = presentation_report(pres)
        entries = next(
            p["eigenvector"] for p in report["eigenpairs"] if p["value"] == str(value)
        )
        values = [field.zero()] * window
        for node, literal in entries:
            if node < window:
                values[node] = field.parse(literal)
        vec = WindowVector(window=window, values=tuple(values), anchor=entries[0][0])
    verified = window_verify(pres, value, vec)
    if args.format == "json":
        _print_json(
            {
                "kind": "cofinite",
                "value": str(value),
                "window": window,
                "values": [str(v) for v in vec.values],
                "anchor": vec.anchor,
                "verified": verified,
            }
        )
    else:
        print(f"value: {value}")
        print(f"window: {window}")
        print("values: [" + ", ".join(str(v) for v in vec.values) + "]")
        print(f"anchor: {vec.anchor}")
        print(f"verified: {'true' if verified else 'false'}")
    return 0 if verified else 1


def cmd_window_verify(args) -> int:
    obj = load_instance(args.path)
    if not isinstance(obj, CoFinitePresentation):
        raise WrongInstanceKindError(
            "window-verify handles co-finite instances only"
        )
    value = _parse_value(obj.field, args.value)
    vec = wandering_eigenvector_window(obj, value, args.window)
    ok = window_verify(obj, value, vec)
    defects = [] if ok else window_defects(obj, value, vec)
    if args.format == "json":
        _print_json(
            {
                "value": str(value),
                "window": args.window,
                "verified": ok,
                "defects": [
                    {"node": a, "left": str(l), "right": str(r)} for a, l, r in defects
                ],
            }
        )
    else:
        print(f"value: {value}")
        print(f"window: {args.window}")
        print(f"verified: {'true' if ok else 'false'}")
        for a, left, right in defects:
            print(f"  defect at {a}: w*x[phi] = {left}, r*x = {right}")
    return 0 if ok else 1


def parse_field_spec(text: str) -> Field:
    if text == "rational":
        return RationalField()
    if text.startswith("gfp:"):
        try:
            p = int(text[4:])
        except ValueError as exc:
            raise InstanceFormatError(f"bad field spec {text!r}") from exc
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise InstanceValidationError(str(exc)) from exc
    raise InstanceFormatError(
        f"bad field spec {text!r}: expected 'gfp:P' or 'rational'"
    )


def cmd_fuzz(args) -> int:
    fields = tuple(parse_field_spec(text) for text in args.field)
    try:
        config = FuzzConfig(
            seed=args.seed,
            count=args.count,
            fields=fields,
            max_n=args.max_n,
            zero_rate=args.zero_rate,
        )
    except ValueError as exc:
        raise InstanceValidationError(str(exc)) from exc
    result = run_fuzz(config)
    if args.format == "json":
        _print_json(
            {
                "total": result.total,
                "passed": result.passed,
                "failures": [
                    {
                        "index": f.index,
                        "instance": f.instance,
                        "problems": list(f.problems),
                    }
                    for f in result.failures
                ],
            }
        )
    else:
        for failure in result.failures:
            print(f"FAIL instance {failure.index}:")
            print("  " + json.dumps(failure.instance, ensure_ascii=False))
            for problem in failure.problems:
                print(f"  problem: {problem}")
        if result.ok:
            print(f"{result.passed}/{result.total} PASS")
        else:
            print(
                f"{result.passed}/{result.total} PASS, {len(result.failures)} FAIL"
            )
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftspec",
        description="Exact eigenvalues and eigenvectors of weighted shifts on functional graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify an instance and print its spectrum")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("oracle", help="matrix-route spectrum and differential check")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("eigvec", help="construct and verify one eigenvector")
    p.add_argument("path")
    p.add_argument("--lambda", dest="value", required=True, metavar="LIT")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_eigvec)

    p = sub.add_parser(
        "window-verify", help="windowed construction check on a co-finite instance"
    )
    p.add_argument("path")
    p.add_argument("--lambda", dest="value", required=True, metavar="LIT")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_window_verify)

    p = sub.add_parser("fuzz", help="seeded differential fuzzing sweep")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument(
        "--field",
        action="append",
        required=True,
        help="gfp:P or rational; repeat for several fields",
    )
    p.add_argument("--zero-rate", type=float, default=0.25, dest="zero_rate")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        InstanceValidationError,
        ZeroEigenvalueError,
        ZeroTailWeightError,
        WindowTooSmallError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WrongInstanceKindError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NotAnEigenvalueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
