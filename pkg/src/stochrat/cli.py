"""Command-line interface.

Exit codes: 0 the command ran (the verdict is in the report), 2 malformed
input, 3 invalid budget geometry, 4 power-method precondition violated,
5 empty sample.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import EmptySample, InstanceTooLarge, NonOverlappingBudgets, OffBudgetLine, Region3MassPresent
from .geometry import BudgetPair, Bundle, DeterministicDataset, demand_type_of, sarp_violations
from .population import (
    PopulationDistribution,
    classify_no_region3,
    explain_population,
    induced_probabilities,
)
from .power import (
    TABLE2_SIZES,
    power_brute_force,
    power_closed_form,
    power_monte_carlo,
    reproduce_table2,
)
from .sampling import (
    SampleWeights,
    cross_section_probabilities,
    multinomial_draw,
    observed_probabilities,
    panel_probabilities,
)
from .stochastic import ChoiceProbabilities, axiom_check, axiom_lhs, solve_mixture

EXIT_OK, EXIT_INPUT, EXIT_GEOMETRY, EXIT_POWER, EXIT_EMPTY = 0, 2, 3, 4, 5


class InputError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return str(x)


def _load(path) -> dict:
    if path is None:
        raise InputError("--input is required for this command")
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return doc


def _field(doc: dict, key: str, path):
    if key not in doc:
        raise InputError(f"{path}: missing field {key!r}")
    return doc[key]


def _population(path) -> PopulationDistribution:
    return PopulationDistribution(_field(_load(path), "nu", path))


def _config(args) -> dict:
    cfg = {"command": args.command, "seed": args.seed, "format": args.format}
    for key in ("input", "weights", "reps", "sizes", "method", "scheme", "n", "table2", "workers"):
        value = getattr(args, key, None)
        if value not in (None, False, []):
            cfg[key] = value
    return cfg


def cmd_check_deterministic(args) -> dict:
    doc = _load(args.input)
    prices = _field(doc, "prices", args.input)
    bundles = _field(doc, "bundles", args.input)
    if len(prices) != 2 or len(bundles) != 2:
        raise InputError("need two price vectors and two bundles")
    pair = BudgetPair.from_prices(prices[0], prices[1])
    d = DeterministicDataset(pair, Bundle(bundles[0]), Bundle(bundles[1]))
    failed = sarp_violations(d)
    theta = demand_type_of(pair, d.choice1, d.choice2)
    return {
        "rationalizable": not failed,
        "demand_type": str(theta),
        "failed_implications": [
            f"x^{s} != x^{t} and p^{s}.x^{t} <= p^{s}.x^{s}, but not p^{t}.x^{t} < p^{t}.x^{s}"
            for s, t in failed
        ],
    }


def cmd_check_stochastic(args) -> dict:
    doc = _load(args.input)
    pi = ChoiceProbabilities.from_values(_field(doc, "pi", args.input))
    mu = solve_mixture(pi)
    return {
        "rationalizable": axiom_check(pi),
        "pi": {k: _frac(v) for k, v in pi.as_dict().items()},
        "axiom_lhs": _frac(axiom_lhs(pi)),
        "mixture": None if mu is None else {str(t): _frac(v) for t, v in mu.as_dict().items()},
    }


def cmd_classify_population(args) -> dict:
    nu = _population(args.input)
    verdict = explain_population(nu)
    report = {
        "rationalizable": verdict.rationalizable,
        "branch": verdict.branch,
        "region3_budget1": _frac(verdict.region3_budget1),
        "region3_budget2": _frac(verdict.region3_budget2),
        "compared": {"lhs": _frac(verdict.lhs), "rhs": _frac(verdict.rhs)},
        "explanation": verdict.explanation(),
        "sufficient_condition": verdict.sufficient_condition,
        "pi": {k: _frac(v) for k, v in induced_probabilities(nu).as_dict().items()},
    }
    if not nu.has_region3_mass():
        report["no_region3_shortcut"] = {
            "rationalizable": classify_no_region3(nu),
            "comparison": f"theta(2,1) {nu[2, 1]} <= theta(1,2) {nu[1, 2]}",
        }
    return report


def cmd_sample(args) -> dict:
    nu = _population(args.input)
    scheme = args.scheme or "multinomial"
    report = {"scheme": scheme}
    if scheme in ("cross_section", "panel"):
        needed = 2 if scheme == "cross_section" else 1
        if len(args.weights) != needed:
            raise InputError(f"{scheme} needs {needed} --weights file(s), got {len(args.weights)}")
        samples = [SampleWeights.for_population(nu, _field(_load(p), "weights", p)) for p in args.weights]
        pi = cross_section_probabilities(*samples) if scheme == "cross_section" else panel_probabilities(samples[0])
    else:
        if args.n is None or args.n < 1:
            raise InputError("multinomial sampling needs --n >= 1")
        c1, c2 = multinomial_draw(nu, args.n, args.seed)
        pi = observed_probabilities(c1, c2)
        report["counts"] = [{str(t): v for t, v in c.as_dict().items()} for c in (c1, c2)]
    report.update(
        rationalizable=axiom_check(pi),
        axiom_lhs=_frac(axiom_lhs(pi)),
        pi_hat={k: _frac(v) for k, v in pi.as_dict().items()},
    )
    return report


def cmd_power(args) -> dict:
    if args.table2:
        return {"rows": [{"population": r.population, "n": r.n, "probability": r.rounded} for r in reproduce_table2()]}
    nu = _population(args.input)
    sizes = args.sizes or list(TABLE2_SIZES)
    method = args.method or "closed_form"
    rows = []
    for n in sizes:
        if method == "closed_form":
            result = power_closed_form(nu, n)
        elif method == "brute_force":
            result = power_brute_force(nu, n)
        else:
            result = power_monte_carlo(nu, n, args.reps, args.seed, workers=args.workers)
        rows.append(result.to_dict())
    return {"rows": rows}


COMMANDS = {
    "check-deterministic": cmd_check_deterministic,
    "check-stochastic": cmd_check_stochastic,
    "classify-population": cmd_classify_population,
    "sample": cmd_sample,
    "power": cmd_power,
}


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON input file")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--reps", type=_positive, default=10_000)
    common.add_argument("--sizes", type=_sizes, help="comma-separated sample sizes")
    common.add_argument("--method", choices=["closed_form", "brute_force", "monte_carlo"])
    common.add_argument("--scheme", choices=["cross_section", "panel", "multinomial"])
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--table2", action="store_true", help="reproduce the benchmark power table")
    common.add_argument("--weights", action="append", default=[], help="sample-weight JSON file (repeatable)")
    common.add_argument("--n", type=_positive, help="multinomial sample size")
    common.add_argument("--workers", type=_positive, default=1)

    parser = argparse.ArgumentParser(prog="stochrat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _to_csv(command: str, report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    buf.write("# config: " + json.dumps(report["config"], sort_keys=True) + "\n")
    if command == "power":
        rows = report["result"]["rows"]
        if report["config"].get("table2"):
            writer.writerow(["population", "n", "probability"])
            for r in rows:
                writer.writerow([r["population"], r["n"], r["probability"]])
        else:
            has_se = any("standard_error" in r for r in rows)
            writer.writerow(["population", "n", "probability"] + (["standard_error"] if has_se else []))
            name = Path(report["config"]["input"]).stem
            for r in rows:
                writer.writerow([name, r["n"], repr(r["probability"])] + ([repr(r["standard_error"])] if has_se else []))
    else:
        writer.writerow(["key", "value"])
        for key, value in report["result"].items():
            writer.writerow([key, value if isinstance(value, (str, int, float, bool)) else json.dumps(value, sort_keys=True)])
    return buf.getvalue()


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result = COMMANDS[args.command](args)
    except (NonOverlappingBudgets, OffBudgetLine) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_GEOMETRY
    except (Region3MassPresent, InstanceTooLarge) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_POWER
    except EmptySample as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_EMPTY
    except (InputError, ValueError, TypeError, KeyError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    report = {"config": _config(args), "result": result}
    if args.format == "csv":
        stdout.write(_to_csv(args.command, report))
    else:
        stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())
