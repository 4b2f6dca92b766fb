# Copyright (c) 2026, Ahmad and contributors
# For license information, please see license.txt

"""
Command line entry point for QSC Toolkit

    qsc-toolkit <command> [--q Q --n N ...] [--scenario file.json] [--format json|csv] [--out path]

A scenario file holds the same keys as the flags (select_b for --select-b and
so on); flags given on the command line override it.
"""

import argparse
import importlib
import json
import logging
import sys

from qsc_toolkit import __version__, hooks
from qsc_toolkit.exceptions import QscError, ValidationError
from qsc_toolkit.qsc_toolkit.api import make_meta
from qsc_toolkit.qsc_toolkit.settings import get_settings
from qsc_toolkit.qsc_toolkit.utils import as_json, flatten, to_csv

log = logging.getLogger(__name__)

SCENARIO_KEYS = (
    "q",
    "n",
    "select",
    "select_b",
    "delta1",
    "extra",
    "eps",
    "cl",
    "cr",
    "budget",
    "max_delta1",
    "grid",
    "workers",
)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="field size, q ≡ 1 (mod 4)")
    common.add_argument("--n", type=int, help="length exponent, N = 2^n")
    common.add_argument("--select", help="coset representatives of C (or C_a), e.g. 1,2")
    common.add_argument("--select-b", dest="select_b", help="coset representatives of C_b")
    common.add_argument("--delta1", type=int, help="number of extra cosets")
    common.add_argument("--extra", help="extra even coset representatives")
    common.add_argument("--eps", help="0/1 per extra coset; 1 keeps it in g_2")
    common.add_argument("--cl", type=int, help="left misalignment padding")
    common.add_argument("--cr", type=int, help="right misalignment padding")
    common.add_argument("--budget", type=int, help="rank tests allowed per minimum-distance search")
    common.add_argument("--max-delta1", dest="max_delta1", type=int, help="largest δ1 swept")
    common.add_argument("--grid", help="sweep grid, e.g. 41:4,73:4,17:5")
    common.add_argument("--workers", type=int, help="sweep worker processes")
    common.add_argument("--scenario", help="JSON file with any of the flag values")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the document here instead of stdout")

    parser = argparse.ArgumentParser(prog="qsc-toolkit", description=hooks.app_description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in hooks.commands:
        subparsers.add_parser(command, parents=[common])
    return parser


def load_scenario(path):
    try:
        with open(path, encoding="utf-8") as f:
            scenario = json.load(f)
    except (OSError, ValueError) as e:
        raise ValidationError(f"Cannot read scenario {path}: {e}")

    if not isinstance(scenario, dict):
        raise ValidationError(f"Scenario {path} must hold a JSON object")

    unknown = sorted(set(scenario) - set(SCENARIO_KEYS))
    if unknown:
        raise ValidationError(f"Unknown scenario keys: {', '.join(unknown)}")
    return scenario


def merge_params(args):
    """Scenario values overridden by any flag given on the command line"""
    params = load_scenario(args.scenario) if args.scenario else {}
    for key in SCENARIO_KEYS:
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    return params


def error_document(params, exc):
    return {
        "meta": make_meta(params.get("q"), params.get("n")),
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


def resolve(path):
    """Endpoint function for a dotted "module.function" path"""
    module, _, name = path.rpartition(".")
    return getattr(importlib.import_module(module), name)


def run(command, params):
    """Dispatch to the registered endpoint; returns (exit status, document)"""
    try:
        method = resolve(hooks.commands[command])
        document = method(**params)
    except QscError as e:
        return e.exit_code, error_document(params, e)
    except Exception as e:
        log.exception("%s failed", command)
        return 2, error_document(params, e)

    failed = [c["name"] for c in document.get("certificates", []) if not c["passed"]]
    if failed:
        log.warning("failed certificates: %s", ", ".join(failed))
        return 2, document
    return 0, document


def render(command, document, fmt):
    if fmt == "json":
        return as_json(document) + "\n"

    if "error" in document:
        return to_csv(flatten(document))

    path = hooks.csv_tables.get(command)
    if path:
        rows = document
        for key in path:
            rows = rows.get(key, {}) if isinstance(rows, dict) else {}
        if isinstance(rows, list) and rows:
            return to_csv(rows)
    return to_csv(flatten(document))


def configure_logging(level):
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv=None):
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings()
        configure_logging(settings.log_level)
        params = merge_params(args)
    except ValidationError as e:
        configure_logging("WARNING")
        status, document = e.exit_code, error_document({}, e)
    else:
        status, document = run(args.command, params)

    text = render(args.command, document, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
