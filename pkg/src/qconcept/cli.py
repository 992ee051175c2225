"""Command line entry point.

Exit codes: 0 success, 1 input error, 2 internal invariant failure
(a feasible fit whose C^3 model does not reproduce the data).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .dataset import (
    PipelineOptions,
    build_report,
    curve_to_csv,
    dataset_to_csv,
    emit_curve,
    load_fixture,
    read_dataset,
    run_pipeline,
    synthesize,
)
from .errors import DatasetParseError, QConceptError

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2

log = logging.getLogger("qconcept")


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="CSV dataset (default: bundled Hampton fixture)")
    p.add_argument("--output", metavar="PATH", help="output file (default: standard output)")
    p.add_argument("--item", metavar="NAME", help="only process rows for this item")
    p.add_argument("--grid-steps", type=int, default=1024, metavar="INT")
    p.add_argument("--tolerance", type=float, default=1e-3, metavar="FLOAT")
    p.add_argument("--workers", type=int, default=1, metavar="INT")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qconcept", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("audit", "classicality verdicts only"),
        ("fit", "verdicts plus interference fits"),
        ("realize", "verdicts, fits and explicit C^3 models"),
        ("verify", "full pipeline with Born-rule verification of each model"),
    ]:
        _add_io(sub.add_parser(name, help=help_text))

    curve = sub.add_parser("curve", help="combined weight as a function of the interference angle")
    curve.add_argument("--mu-a", type=float, required=True)
    curve.add_argument("--mu-b", type=float, required=True)
    curve.add_argument("--n", type=float, required=True)
    curve.add_argument("--samples", type=int, default=181)
    curve.add_argument("--output", metavar="PATH")

    synth = sub.add_parser("synth", help="simulate membership data from fitted models")
    _add_io(synth)
    synth.add_argument("--seed", type=int, default=0, metavar="INT")
    synth.add_argument("--count", type=int, default=1000, metavar="INT", help="participants per weight")
    return parser


def _load(args) -> "Dataset":  # noqa: F821
    d = read_dataset(args.input) if args.input else load_fixture()
    return d.filter_item(args.item)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "curve":
            points = emit_curve(args.mu_a, args.mu_b, args.n, args.samples)
            _write(curve_to_csv(points), args.output)
            return EXIT_OK

        d = _load(args)
        if args.command == "synth":
            _write(dataset_to_csv(synthesize(d, args.count, args.seed, args.grid_steps)), args.output)
            return EXIT_OK

        options = PipelineOptions(args.command, args.grid_steps, args.tolerance, args.workers)
        reports = run_pipeline(d, options)
        _write(json.dumps(build_report(d, reports, options), indent=2) + "\n", args.output)
    except (DatasetParseError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except QConceptError as exc:
        log.error("invariant failure: %s", exc)
        return EXIT_INVARIANT

    failed = [r.triple.item for r in reports
              if r.error or (r.verification is not None and not r.verification.passed)]
    if failed:
        log.error("model verification failed for: %s", ", ".join(failed))
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
