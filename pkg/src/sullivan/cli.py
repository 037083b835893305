"""Command-line interface: validate, analyze, extend, search, bound, cohomology.

Exit codes: 0 success; 1 mathematical negative result (the input is fine but
the requested structure does not exist or a hypothesis fails); 2 input error
(unparseable or invalid model, unsatisfiable configuration); 3 internal
verification failure (a certified invariant broke, which indicates a bug).

JSON output is key-sorted and content-addressed: identical inputs and seeds
produce byte-identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import ellipticity as ell
from . import extension as ext
from .errors import (
    ApplicabilityError,
    ConstantTermPresent,
    GeneratorMismatch,
    InvalidInput,
    InvalidModel,
    ModelSyntaxError,
    OddGeneratorPresent,
    SearchExhausted,
    SearchSpaceTooLarge,
    SullivanError,
    UnknownGenerator,
    ValidationError,
    VerificationFailed,
    ZeroElement,
)
from .model import SullivanModel
from .parsing import load_model

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (
    ModelSyntaxError,
    ValidationError,
    InvalidInput,
    InvalidModel,
    UnknownGenerator,
    GeneratorMismatch,
    OddGeneratorPresent,
    ConstantTermPresent,
    ZeroElement,
    SearchSpaceTooLarge,
    OSError,
)
_INTERNAL_ERRORS = (VerificationFailed, SearchExhausted)


def _emit(payload: dict, args) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _say(text: str, args) -> None:
    if not args.json:
        sys.stdout.write(text + "\n")


def _model_summary(model: SullivanModel) -> str:
    gens = ", ".join(
        f"{g.name}:{g.degree}" for g in model.generators)
    return f"{model.name}: {gens}"


def _analyze_payload(model: SullivanModel, with_exponents: bool) -> dict:
    report = model.validate()
    report.elliptic = ell.is_elliptic(model)
    if report.elliptic and model.is_pure():
        report.formal_dimension = model.formal_dimension()
        if with_exponents:
            report.exponents = ell.all_nilpotency_exponents(model)
    return report.to_dict()


def cmd_validate(args) -> int:
    model = load_model(args.model)
    report = model.validate()
    _say(_model_summary(model), args)
    _say(f"valid minimal model; pure={report.pure} "
         f"length={model.differential_length().render()} chi_pi={report.chi_pi}", args)
    _emit(report.to_dict(), args)
    return EXIT_OK


def cmd_analyze(args) -> int:
    model = load_model(args.model)
    payload = _analyze_payload(model, with_exponents=True)
    _say(_model_summary(model), args)
    _say(f"pure={payload['pure']} minimal={payload['minimal']} "
         f"length={model.differential_length().render()} "
         f"elliptic={payload['elliptic']} chi_pi={payload['chi_pi']}", args)
    if "formal_dimension" in payload:
        _say(f"formal dimension {payload['formal_dimension']}", args)
    for name, n in sorted(payload.get("exponents", {}).items()):
        _say(f"nilpotency exponent of {name}: {n}", args)
    _emit(payload, args)
    return EXIT_OK


def cmd_extend(args) -> int:
    model = load_model(args.model)
    result = ext.f0_extend(model, seed=args.seed, max_candidates=args.max_search)
    payload = result.to_dict()
    payload["seed"] = args.seed
    _say(_model_summary(model), args)
    if result.odd_basis:
        _say("F0-basis extension found:", args)
    else:
        _say("F0-basis extension is empty (no even generators)", args)
    for e, d in zip(result.odd_basis, result.odd_degrees):
        _say(f"  degree {d}: {e.render()}", args)
    for c in result.certificates:
        _say(f"  certificate: d({c.witness.render()}) = "
             f"{c.generator.name}^{c.exponent}", args)
    _emit(payload, args)
    return EXIT_OK


def cmd_search(args) -> int:
    model = load_model(args.model)
    outcome = ext.exhaustive_homogeneous_search(
        model, seed=args.seed, max_candidates=args.max_search)
    payload = outcome.to_dict()
    _emit(payload, args)
    if outcome.found is None:
        _say("no homogeneous F0-basis extension "
             f"(tried {outcome.tried} candidates, "
             f"exhaustive={outcome.fully_exhaustive})", args)
        for r in outcome.rejected:
            extra = f" (witness {r.witness})" if r.witness else ""
            _say(f"  rejected {{{', '.join(r.candidate)}}}: {r.reason}{extra}", args)
        return EXIT_NEGATIVE
    _say("homogeneous F0 basis: " +
         ", ".join(e.render() for e in outcome.found), args)
    return EXIT_OK


def cmd_bound(args) -> int:
    model = load_model(args.model)
    if args.pure_sub:
        names = [n for part in args.pure_sub for n in part.split(",") if n]
        report = bounds_mod.tc_upper_bound_nonpure(model, names)
    else:
        report = bounds_mod.tc_upper_bound(model)
    _say(_model_summary(model), args)
    _say(f"cat <= {report.cat_value}  [{report.cat_provenance}]", args)
    _say(f"tc  <= {report.tc_upper}  [{report.tc_provenance}]", args)
    for note in report.applicability_notes:
        _say(f"note: {note}", args)
    _emit(report.to_dict(), args)
    return EXIT_OK


def cmd_cohomology(args) -> int:
    model = load_model(args.model)
    if args.up_to is None:
        raise InvalidInput("--up-to is required for cohomology")
    if args.up_to > args.max_degree:
        raise InvalidInput(
            f"--up-to {args.up_to} exceeds --max-degree {args.max_degree}")
    dims = ell.cohomology_dims(model, args.up_to)
    _say(_model_summary(model), args)
    for k, d in enumerate(dims):
        if d or k == 0:
            _say(f"H^{k} = {d}", args)
    _say(f"total dimension through degree {args.up_to}: {sum(dims)}", args)
    _emit({"model": model.name, "up_to": args.up_to, "dims": dims}, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sullivan",
        description="Exact invariants of pure Sullivan minimal models: "
                    "ellipticity, F0-basis extensions, category and "
                    "topological-complexity bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("model", help="path to a .model file")
        sp.add_argument("--json", action="store_true",
                        help="emit a key-sorted JSON report on stdout")

    sp = sub.add_parser("validate", help="parse and validate a model file")
    common(sp)
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("analyze",
                        help="structural report: pureness, length, ellipticity, "
                             "exponents, formal dimension")
    common(sp)
    sp.set_defaults(fn=cmd_analyze)

    sp = sub.add_parser("extend", help="construct a verified F0-basis extension")
    common(sp)
    sp.add_argument("--seed", type=int, default=0,
                    help="reorders the widening coefficient search (default 0)")
    sp.add_argument("--max-search", type=int, default=50000,
                    help="candidate budget for the stage search")
    sp.set_defaults(fn=cmd_extend)

    sp = sub.add_parser("search",
                        help="exhaustive search for a homogeneous F0 basis")
    common(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-search", type=int, default=20000,
                    help="candidate budget before giving up")
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("bound",
                        help="category and topological-complexity upper bounds")
    common(sp)
    sp.add_argument("--pure-sub", action="append", default=None,
                    metavar="NAMES",
                    help="comma-separated generators of a pure elliptic "
                         "sub-model (routes the non-pure bound)")
    sp.set_defaults(fn=cmd_bound)

    sp = sub.add_parser("cohomology", help="exact cohomology dimensions by degree")
    common(sp)
    sp.add_argument("--up-to", type=int, default=None, metavar="D",
                    help="top degree to compute (required)")
    sp.add_argument("--max-degree", type=int, default=200,
                    help="hard cap on --up-to (cost grows quickly)")
    sp.set_defaults(fn=cmd_cohomology)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _INTERNAL_ERRORS as ex:
        code = getattr(ex, "code", "internal")
        sys.stderr.write(f"error[{code}]: {ex}\n")
        return EXIT_INTERNAL
    except _INPUT_ERRORS as ex:
        code = getattr(ex, "code", "io")
        sys.stderr.write(f"error[{code}]: {ex}\n")
        return EXIT_INPUT
    except ApplicabilityError as ex:
        sys.stderr.write(f"error[{ex.code}]: {ex}\n")
        return EXIT_NEGATIVE
    except SullivanError as ex:
        sys.stderr.write(f"error[{ex.code}]: {ex}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
