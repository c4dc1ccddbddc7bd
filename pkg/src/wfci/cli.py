"""Command-line surface.

Exit codes: 0 success (and, for verify commands, no violations); 2 usage or
malformed input; 3 data-integrity failure (table checksum); 4 I/O failure;
5 mathematical precondition failure (e.g. no enabling term for a normal form).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, search, tables
from .cylinder import NormalFormError, normal_form, verdict, wps_verdict
from .poly import GradedPolynomial
from .wci import WciDescriptor, adjunction, general_qs, linear_cone_flags, well_formed_ci
from .wps import is_well_formed, normalize, singular_strata

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_IO = 4
EXIT_MATH = 5


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfci",
        description="Exact certificates for weighted complete intersections: "
                    "well-formedness, quasi-smoothness, adjunction, cylindricity.",
        epilog="Verdict JSON fields are stable: status (Cylindrical | "
               "NotCylindrical | Unknown), certificate (tagged by 'kind'), "
               "citations, conjectural, notes, flags.  Schemas for verdicts, "
               "polynomials and enumeration records ship under wfci/schemas/.")
    parser.add_argument("--version", action="version", version=f"wfci {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one weight/degree choice")
    p.add_argument("--weights", type=_int_list, required=True,
                   help="comma-separated ambient weights, e.g. 1,2,3,4,5")
    p.add_argument("--degrees", type=_int_list, default=(),
                   help="comma-separated multidegree; omit for the space itself")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify-tables", help="re-verify every classification row")
    p.add_argument("--n-max", type=int, default=20,
                   help="series parameter bound (default 20)")

    p = sub.add_parser("enumerate", help="bounded exhaustive classification search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--index", type=int, default=None, help="exact Fano index filter")
    p.add_argument("--amplitude", choices=("Fano", "CalabiYau"), default=None)
    p.add_argument("--include-linear-cones", action="store_true")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--jobs", type=int, default=1, help="shard parallelism")

    p = sub.add_parser("normal-form", help="bring a polynomial to the x_i*x_j + G shape")
    p.add_argument("input", nargs="?", default=None, help="polynomial JSON file")
    p.add_argument("--pair", type=_int_list, required=True,
                   help="the two pivot variable indices, e.g. 0,3")
    p.add_argument("--weights", type=_int_list, default=None,
                   help="generate a generic member over these weights instead "
                        "of reading a file (degree = sum of the pair weights)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the generated generic member")
    p.add_argument("--out", default=None, help="output JSON path (default stdout)")
    return parser


def _print_analysis(weights, degrees, fmt) -> int:
    trace = normalize(weights)
    doc: dict = {
        "input_weights": list(trace.input.weights),
        "normalized_weights": list(trace.output.weights),
        "common_factor_removed": trace.common_factor_removed,
        "reduction_divisors": list(trace.divisors),
        "reduction_multipliers": list(trace.multipliers),
        "ambient_well_formed": is_well_formed(weights),
    }
    if doc["ambient_well_formed"]:
        doc["singular_strata"] = [
            {"indices": sorted(s.indices), "gcd": s.stratum_gcd}
            for s in singular_strata(weights)]
        doc["canonical_degree"] = -sum(trace.output.weights)
    else:
        doc["note"] = ("weights are not well-formed: normalize first (degrees are "
                       "not transported by the reduction)")

    if not degrees:
        v = wps_verdict(weights)
        doc["cylinder"] = v.to_json()
    else:
        desc = WciDescriptor.of(weights, degrees)
        adj = adjunction(desc)
        qs = None
        cones = linear_cone_flags(desc)
        if not cones and desc.codim <= 2:
            res = general_qs(desc)
            qs = res.holds if res else None
        doc.update({
            "degrees": list(desc.multidegree),
            "well_formed": well_formed_ci(desc),
            "linear_cones": [list(f) for f in cones],
            "quasi_smooth": qs,
            "canonical_coefficient": adj.canonical_coefficient,
            "amplitude": adj.amplitude,
            "fano_index": adj.fano_index,
            "table_match": None,
            "cylinder": verdict(desc).to_json(),
        })
        hit = tables.match(desc)
        if hit:
            doc["table_match"] = {"table": hit[0], "row": hit[1], "n": hit[2]}

    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
        return EXIT_OK
    for key, value in doc.items():
        if key == "cylinder":
            print("cylinder status:", value["status"])
            if value["certificate"]:
                print("  certificate:", json.dumps(value["certificate"]))
            for cite in value["citations"]:
                print("  citation:", cite)
            for note in value["notes"]:
                print("  note:", note)
            if value["conjectural"] is not None:
                print("  conjectural prediction:", value["conjectural"])
        else:
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    if len(args.weights) < 2 or any(a < 1 for a in args.weights):
        print("error: need at least two positive weights", file=sys.stderr)
        return EXIT_USAGE
    if args.degrees and any(d < 1 for d in args.degrees):
        print("error: degrees must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.degrees and len(args.degrees) > len(args.weights) - 2:
        print("error: codimension out of range", file=sys.stderr)
        return EXIT_USAGE
    return _print_analysis(args.weights, args.degrees, args.format)


def cmd_verify_tables(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = tables.verify_all(args.n_max)
    except tables.DataIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    print(f"checked {report.checked} instantiations "
          f"(35 + 37 + 3 rows, n <= {args.n_max})")
    for v in report.violations:
        tag = f"{v.table_id} row {v.row_id}" + (f" n={v.n}" if v.n else "")
        print(f"VIOLATION {tag}: {v.reason}")
    print("result:", "PASS" if report.ok else f"FAIL ({len(report.violations)} violations)")
    return EXIT_OK if report.ok else 1


def cmd_enumerate(args) -> int:
    try:
        config = search.SearchConfig(
            dim=args.dim, codim=args.codim, max_weight=args.max_weight,
            index_filter=args.index, amplitude_filter=args.amplitude,
            exclude_linear_cones=not args.include_linear_cones,
            output_path=args.out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = (search.run_search_parallel(config, args.jobs)
               if args.jobs > 1 else search.run_search(config))
    try:
        search.write_records(records, args.out, args.format)
    except OSError as exc:
        print(f"error writing {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    matched = sum(1 for r in records if r.table_hit is not None)
    print(f"emitted {len(records)} records ({matched} matching known tables) "
          f"to {args.out}")
    return EXIT_OK


def cmd_normal_form(args) -> int:
    if len(args.pair) != 2:
        print("error: --pair needs exactly two indices", file=sys.stderr)
        return EXIT_USAGE
    if (args.input is None) == (args.weights is None):
        print("error: give exactly one of an input file or --weights",
              file=sys.stderr)
        return EXIT_USAGE
    if args.weights is not None:
        from .poly import generic_member
        i, j = args.pair
        if not (0 <= i < len(args.weights) and 0 <= j < len(args.weights)):
            print("error: pair indices out of range", file=sys.stderr)
            return EXIT_USAGE
        poly = generic_member(args.weights,
                              args.weights[i] + args.weights[j], args.seed)
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
            poly = GradedPolynomial.from_json(payload)
        except OSError as exc:
            print(f"error reading {args.input}: {exc}", file=sys.stderr)
            return EXIT_IO
        except (KeyError, ValueError, TypeError) as exc:
            print(f"error: malformed polynomial JSON: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        result = normal_form(poly, tuple(args.pair))
    except NormalFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = result.to_json()
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            print(f"error writing {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"normal form written to {args.out}")
    else:
        print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "analyze": cmd_analyze,
        "verify-tables": cmd_verify_tables,
        "enumerate": cmd_enumerate,
        "normal-form": cmd_normal_form,
    }[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
